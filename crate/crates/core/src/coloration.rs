//! Regular colorations: partitions of the ground set such that every rank-2
//! flat meets either one class or all of them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::par::{self, Exec};
use crate::realization::{generate, FamilySpec};
use crate::subset::{ElementSet, MAX_GROUND};

/// A partition of `[n]`, classes ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloration {
    n: usize,
    classes: Vec<ElementSet>,
}

#[derive(Serialize, Deserialize)]
struct ColorationJson {
    classes: Vec<Vec<usize>>,
}

impl Coloration {
    pub fn from_classes(n: usize, classes: Vec<ElementSet>) -> Result<Self> {
        let mut seen = ElementSet::EMPTY;
        for c in &classes {
            if c.is_empty() {
                return Err(Error::InvalidArgument("empty color class".into()));
            }
            if !c.is_disjoint(seen) {
                return Err(Error::InvalidArgument(format!("class {c} overlaps an earlier class")));
            }
            seen = seen.union(*c);
        }
        if seen != ElementSet::full(n) {
            return Err(Error::InvalidArgument(format!("classes do not cover [{n}] exactly")));
        }
        let mut classes = classes;
        classes.sort_by_key(|c| c.min());
        Ok(Coloration { n, classes })
    }

    /// `colors[i]` is the class of element `i`; class ids need not be contiguous.
    pub fn from_assignment(colors: &[usize]) -> Self {
        let n = colors.len();
        let mut ids: Vec<usize> = colors.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let classes = ids.iter().map(|&c| ElementSet::from_indices((0..n).filter(|&i| colors[i] == c))).collect();
        Self::from_classes(n, classes).expect("an assignment is a partition")
    }

    pub fn single_class(n: usize) -> Self {
        Self::from_classes(n, vec![ElementSet::full(n)]).expect("nonempty ground set")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    /// Class index of every element.
    pub fn assignment(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (c, class) in self.classes.iter().enumerate() {
            for e in class.iter() {
                out[e] = c;
            }
        }
        out
    }

    /// Number of classes meeting `s`.
    pub fn classes_meeting(&self, s: ElementSet) -> usize {
        self.classes.iter().filter(|c| !c.is_disjoint(s)).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ColorationJson { classes: self.classes.iter().map(|c| c.labels()).collect() })
            .expect("serializable")
    }

    pub fn from_json(n: usize, text: &str) -> Result<Self> {
        let j: ColorationJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let classes = j
            .classes
            .iter()
            .map(|c| {
                if let Some(&bad) = c.iter().find(|&&e| e == 0 || e > n) {
                    return Err(Error::Parse(format!("element {bad} outside 1..={n}")));
                }
                Ok(ElementSet::from_labels(c))
            })
            .collect::<Result<Vec<_>>>()?;
        if classes.iter().map(|c| c.len()).sum::<usize>() != j.classes.iter().map(Vec::len).sum::<usize>() {
            return Err(Error::Parse("repeated element in a class".into()));
        }
        Self::from_classes(n, classes)
    }

    fn sort_key(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|c| c.labels()).collect()
    }
}

impl fmt::Display for Coloration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn rank2_flats(m: &Matroid) -> Vec<ElementSet> {
    if m.rank() < 2 {
        Vec::new()
    } else {
        m.flats_of_rank(2).expect("rank >= 2")
    }
}

/// Every rank-2 flat meets one class or all `|Pi|` classes.
pub fn is_regular(m: &Matroid, pi: &Coloration) -> Result<bool> {
    if pi.n() != m.n() {
        return Err(Error::InvalidArgument(format!("coloration of [{}] for a matroid on [{}]", pi.n(), m.n())));
    }
    let k = pi.k();
    Ok(rank2_flats(m).into_iter().all(|x| {
        let c = pi.classes_meeting(x);
        c == 1 || c == k
    }))
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchOptions {
    pub exec: Exec,
    /// Stop after this many colorations (the result is then a canonical prefix
    /// of some subset, not of the full list).
    pub limit: Option<usize>,
}

/// All regular colorations with exactly `k` classes, sorted canonically.
pub fn search_regular(m: &Matroid, k: usize) -> Result<Vec<Coloration>> {
    search_regular_with(m, k, SearchOptions::default())
}

pub fn search_regular_with(m: &Matroid, k: usize, opts: SearchOptions) -> Result<Vec<Coloration>> {
    let n = m.n();
    if k < 2 || k > n {
        return Err(Error::InvalidArgument(format!("need 2 <= k <= n = {n}, got k = {k}")));
    }
    let lines = rank2_flats(m);
    let search = Search::new(n, k, &lines);
    let prefixes = search.prefixes(opts.exec);
    let found = par::map(opts.exec, prefixes, |prefix| {
        let mut out = Vec::new();
        let mut colors = prefix.clone();
        search.descend(&mut colors, opts.limit, &mut out);
        out
    });
    let mut all: Vec<Coloration> = found.into_iter().flatten().map(|colors| search.expand(&colors)).collect();
    all.sort_by_key(Coloration::sort_key);
    if let Some(l) = opts.limit {
        all.truncate(l);
    }
    Ok(all)
}

/// Whether some regular coloration with exactly `k` classes exists.
pub fn exists_regular(m: &Matroid, k: usize) -> Result<bool> {
    Ok(!search_regular_with(m, k, SearchOptions { exec: Exec::default(), limit: Some(1) })?.is_empty())
}

/// Largest `k >= 3` admitting a regular coloration, or 1 if there is none.
pub fn max_regular_k(m: &Matroid) -> Result<usize> {
    let longest = rank2_flats(m).iter().map(|l| l.len()).max().unwrap_or(0).min(m.n());
    for k in (3..=longest).rev() {
        if exists_regular(m, k)? {
            return Ok(k);
        }
    }
    Ok(1)
}

/// Backtracking over components: elements forced into one class by lines
/// too short to meet all `k` classes.
struct Search {
    k: usize,
    /// Elements of each component, components ordered by least element.
    components: Vec<ElementSet>,
    /// For each line: the components it meets, as a mask.
    lines: Vec<u64>,
    /// For each component: indices of the lines through it.
    lines_at: Vec<Vec<usize>>,
}

impl Search {
    fn new(n: usize, k: usize, lines: &[ElementSet]) -> Self {
        assert!(n <= MAX_GROUND);
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for l in lines.iter().filter(|l| l.len() < k) {
            let idx = l.indices();
            for w in idx.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut comp_of = vec![usize::MAX; n];
        let mut components: Vec<ElementSet> = Vec::new();
        for e in 0..n {
            let root = find(&mut parent, e);
            if comp_of[root] == usize::MAX {
                comp_of[root] = components.len();
                components.push(ElementSet::EMPTY);
            }
            comp_of[e] = comp_of[root];
            components[comp_of[e]] = components[comp_of[e]].insert(e);
        }
        let line_masks: Vec<u64> =
            lines.iter().filter(|l| l.len() >= k).map(|l| l.iter().fold(0u64, |m, e| m | 1 << comp_of[e])).collect();
        let mut lines_at = vec![Vec::new(); components.len()];
        for (i, &mask) in line_masks.iter().enumerate() {
            for c in ElementSet(mask).iter() {
                lines_at[c].push(i);
            }
        }
        Search { k, components, lines: line_masks, lines_at }
    }

    /// Whether assigning `colors` (one per component, a prefix) can still
    /// extend to a regular coloration with exactly `k` classes.
    fn viable(&self, colors: &[usize]) -> bool {
        let i = colors.len() - 1;
        let used = colors.iter().max().map_or(0, |m| m + 1);
        if used + (self.components.len() - colors.len()) < self.k {
            return false;
        }
        self.lines_at[i].iter().all(|&l| {
            let mask = self.lines[l];
            let mut seen = 0u64;
            let mut open = 0;
            for c in ElementSet(mask).iter() {
                match colors.get(c) {
                    Some(&col) => seen |= 1 << col,
                    None => open += 1,
                }
            }
            let met = seen.count_ones() as usize;
            met < 2 || met + open >= self.k
        })
    }

    fn children(&self, colors: &[usize]) -> std::ops::Range<usize> {
        let used = colors.iter().max().map_or(0, |m| m + 1);
        0..(used + 1).min(self.k)
    }

    /// Partial assignments at a depth that yields enough independent subtrees.
    fn prefixes(&self, exec: Exec) -> Vec<Vec<usize>> {
        let mut level = vec![Vec::new()];
        if !exec.is_parallel() {
            return level;
        }
        while level.len() < 64 && level.first().is_some_and(|p| p.len() < self.components.len()) {
            let mut next = Vec::new();
            for p in &level {
                for c in self.children(p) {
                    let mut q = p.clone();
                    q.push(c);
                    if self.viable(&q) {
                        next.push(q);
                    }
                }
            }
            if next.is_empty() {
                return next;
            }
            level = next;
        }
        level
    }

    fn descend(&self, colors: &mut Vec<usize>, limit: Option<usize>, out: &mut Vec<Vec<usize>>) {
        if limit.is_some_and(|l| out.len() >= l) {
            return;
        }
        if colors.len() == self.components.len() {
            if self.complete(colors) {
                out.push(colors.clone());
            }
            return;
        }
        for c in self.children(colors) {
            colors.push(c);
            if self.viable(colors) {
                self.descend(colors, limit, out);
            }
            colors.pop();
        }
    }

    fn complete(&self, colors: &[usize]) -> bool {
        let used = colors.iter().max().map_or(0, |m| m + 1);
        used == self.k
            && self.lines.iter().all(|&mask| {
                let seen = ElementSet(mask).iter().fold(0u64, |s, c| s | 1 << colors[c]);
                let met = seen.count_ones() as usize;
                met == 1 || met == self.k
            })
    }

    fn expand(&self, colors: &[usize]) -> Coloration {
        let n: usize = self.components.iter().map(|c| c.len()).sum();
        let mut per_element = vec![0; n];
        for (comp, &c) in self.components.iter().zip(colors) {
            for e in comp.iter() {
                per_element[e] = c;
            }
        }
        Coloration::from_assignment(&per_element)
    }
}

/// Colorations described by explicit constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedColoration {
    /// Points of `AG(2, q)` colored by the vertical line through them.
    AgParallel(usize),
    /// Sides of the `2k`-gon alternately in two colors, long diagonals in a third.
    Ngon(usize),
    /// Hexagon sides and long diagonals colored cyclically so the vertices are
    /// 3-colored; the three axes get the unique completing colors.
    A112,
}

impl FromStr for NamedColoration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown coloration {s:?}"));
        let (tag, arg) = s.split_once(':').map_or((s, None), |(a, b)| (a, Some(b)));
        let num = |t: Option<&str>| t.ok_or_else(bad)?.trim().parse::<usize>().map_err(|_| bad());
        match tag.trim() {
            "ag-parallel" => Ok(NamedColoration::AgParallel(num(arg)?)),
            "ngon" => Ok(NamedColoration::Ngon(num(arg)?)),
            "a112" if arg.is_none() => Ok(NamedColoration::A112),
            _ => Err(bad()),
        }
    }
}

impl NamedColoration {
    pub fn family(&self) -> FamilySpec {
        match *self {
            NamedColoration::AgParallel(q) => FamilySpec::Ag(q),
            NamedColoration::Ngon(k) => FamilySpec::Ngon(k),
            NamedColoration::A112 => FamilySpec::A112,
        }
    }
}

/// The named coloration on its generated matroid; fails unless it is regular.
pub fn named_coloration(tag: NamedColoration) -> Result<Coloration> {
    let m = generate(tag.family())?.matroid;
    let pi = match tag {
        NamedColoration::AgParallel(q) => Coloration::from_assignment(&(0..q * q).map(|p| p / q).collect::<Vec<_>>()),
        NamedColoration::Ngon(k) => {
            Coloration::from_assignment(&(0..3 * k).map(|e| if e < 2 * k { e % 2 } else { 2 }).collect::<Vec<_>>())
        }
        NamedColoration::A112 => {
            let base: Vec<usize> = (0..6).map(|j| j % 3).chain((0..3).map(|j| (j + 1) % 3)).collect();
            let regular: Vec<Coloration> = (0..27)
                .map(|code| {
                    let mut a = base.clone();
                    a.extend([code % 3, code / 3 % 3, code / 9]);
                    Coloration::from_assignment(&a)
                })
                .filter(|pi| pi.k() == 3 && is_regular(&m, pi).unwrap_or(false))
                .collect();
            match <[Coloration; 1]>::try_from(regular) {
                Ok([pi]) => pi,
                Err(v) => {
                    return Err(Error::Postcondition(format!(
                        "expected a unique completion of the axes, found {}",
                        v.len()
                    )))
                }
            }
        }
    };
    if !is_regular(&m, &pi)? {
        return Err(Error::Postcondition(format!("named coloration {tag:?} is not regular")));
    }
    Ok(pi)
}
