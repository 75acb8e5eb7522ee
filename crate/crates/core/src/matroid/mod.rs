//! Simple matroids on `[n]`, their rank oracle and the constructions built on it.
//!
//! Every matroid with `n <= TABLE_LIMIT` carries a precomputed rank table
//! indexed by subset mask; larger matroids must be circuit-backed and answer
//! rank queries greedily from the circuit list.

mod iso;

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use num::BigRational;

use crate::error::{check_capacity, Error, Result};
use crate::field::{Field, QuadMatrix, RationalMatrix, SpanBuilder};
use crate::subset::{k_subsets, sort_size_lex, ElementSet, MAX_GROUND};

pub use iso::{canonical_key, find_isomorphism, CanonicalKey, Permutation, EXACT_KEY_LIMIT};

/// Largest ground set for which a full rank table is built.
pub const TABLE_LIMIT: usize = 20;

/// Ground-set bound for brute-force validation of the matroid axioms.
const VALIDATE_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq)]
pub enum VectorConfig {
    Rational(RationalMatrix),
    Quadratic(QuadMatrix),
}

impl VectorConfig {
    pub fn cols(&self) -> usize {
        match self {
            VectorConfig::Rational(m) => m.cols(),
            VectorConfig::Quadratic(m) => m.cols(),
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            VectorConfig::Rational(m) => m.rows(),
            VectorConfig::Quadratic(m) => m.rows(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Backing {
    Circuits(Vec<ElementSet>),
    Bases(Vec<ElementSet>),
    Vectors(VectorConfig),
}

struct Inner {
    name: String,
    n: usize,
    rank: usize,
    backing: Backing,
    table: Option<Vec<u8>>,
    circuits: Vec<ElementSet>,
    circuits_by_element: Vec<Vec<ElementSet>>,
    simple: bool,
}

#[derive(Clone)]
pub struct Matroid {
    inner: Arc<Inner>,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("name", &self.inner.name)
            .field("n", &self.inner.n)
            .field("rank", &self.inner.rank)
            .field("circuits", &self.inner.circuits.len())
            .finish()
    }
}

impl Matroid {
    /// The matroid on the empty ground set.
    pub fn empty() -> Self {
        Self::from_circuits("empty", 0, Vec::new()).expect("empty matroid")
    }

    /// Simple matroid from its circuit list. The list is stored sorted by (size, lex).
    pub fn from_circuits(name: impl Into<String>, n: usize, circuits: Vec<ElementSet>) -> Result<Self> {
        let m = Self::from_circuits_unchecked(name.into(), n, circuits)?;
        m.require_simple()?;
        Ok(m)
    }

    fn from_circuits_unchecked(name: String, n: usize, mut circuits: Vec<ElementSet>) -> Result<Self> {
        check_capacity("matroid ground set", MAX_GROUND, n)?;
        let full = ElementSet::full(n);
        for c in &circuits {
            if c.is_empty() || !c.is_subset(full) {
                return Err(Error::InvalidMatroid(format!("circuit {c} is not a nonempty subset of [{n}]")));
            }
        }
        sort_size_lex(&mut circuits);
        circuits.dedup();
        for (i, c) in circuits.iter().enumerate() {
            if let Some(d) = circuits[..i].iter().find(|d| d.is_subset(*c)) {
                return Err(Error::InvalidMatroid(format!("circuit {d} is contained in circuit {c}")));
            }
        }
        let table = if n <= TABLE_LIMIT {
            let mut dep = vec![false; 1 << n];
            for c in &circuits {
                dep[c.bits() as usize] = true;
            }
            superset_close(&mut dep, n);
            Some(rank_table_from_dependence(&dep, n))
        } else {
            None
        };
        let by_elem = circuits_by_element(n, &circuits);
        let rank = match &table {
            Some(t) => t[(1usize << n) - 1] as usize,
            None => greedy_rank(&by_elem, full, usize::MAX),
        };
        let m = Self::assemble(name, n, rank, Backing::Circuits(circuits.clone()), table, circuits, by_elem);
        m.validate()?;
        Ok(m)
    }

    /// Simple matroid from its list of bases.
    pub fn from_bases(name: impl Into<String>, n: usize, bases: Vec<ElementSet>) -> Result<Self> {
        check_capacity("basis-backed matroid", TABLE_LIMIT, n)?;
        let full = ElementSet::full(n);
        let Some(r) = bases.first().map(|b| b.len()) else {
            return Err(Error::InvalidMatroid("empty basis list".into()));
        };
        if let Some(b) = bases.iter().find(|b| b.len() != r || !b.is_subset(full)) {
            return Err(Error::InvalidMatroid(format!("basis {b} has the wrong size or range")));
        }
        let mut indep = vec![false; 1 << n];
        for b in &bases {
            indep[b.bits() as usize] = true;
        }
        subset_close(&mut indep, n);
        let dep: Vec<bool> = indep.iter().map(|&i| !i).collect();
        let table = rank_table_from_dependence(&dep, n);
        let m = Self::from_table(name.into(), n, table, |_| {
            let mut sorted = bases.clone();
            sort_size_lex(&mut sorted);
            sorted.dedup();
            Backing::Bases(sorted)
        });
        m.validate()?;
        if m.bases().len() != {
            let mut s = bases.clone();
            s.sort_by_key(|b| b.bits());
            s.dedup();
            s.len()
        } {
            return Err(Error::InvalidMatroid("basis list is not the set of bases of a matroid".into()));
        }
        m.require_simple()?;
        Ok(m)
    }

    /// Dependence matroid of the columns of a rational matrix.
    pub fn from_rational_matrix(name: impl Into<String>, a: &RationalMatrix) -> Result<Self> {
        Self::from_vectors(name, VectorConfig::Rational(a.clone()))
    }

    /// Dependence matroid of a vector configuration (columns are the vectors).
    pub fn from_vectors(name: impl Into<String>, config: VectorConfig) -> Result<Self> {
        let n = config.cols();
        check_capacity("vector-backed matroid", TABLE_LIMIT, n)?;
        let indep = match &config {
            VectorConfig::Rational(a) => independence_table(&a.columns(), n),
            VectorConfig::Quadratic(a) => independence_table(&a.columns(), n),
        };
        for i in 0..n {
            if !indep[1 << i] {
                return Err(Error::Loop(i + 1));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if !indep[(1 << i) | (1 << j)] {
                    return Err(Error::Parallel(i + 1, j + 1));
                }
            }
        }
        let dep: Vec<bool> = indep.iter().map(|&i| !i).collect();
        let table = rank_table_from_dependence(&dep, n);
        Ok(Self::from_table(name.into(), n, table, |_| Backing::Vectors(config.clone())))
    }

    /// Matroid from an explicit rank table; loops and parallels are allowed.
    pub(crate) fn from_rank_table(name: String, n: usize, table: Vec<u8>) -> Self {
        Self::from_table(name, n, table, |circuits| Backing::Circuits(circuits.to_vec()))
    }

    fn from_table(name: String, n: usize, table: Vec<u8>, backing: impl FnOnce(&[ElementSet]) -> Backing) -> Self {
        let circuits = circuits_from_table(&table, n);
        let rank = table[(1usize << n) - 1] as usize;
        let by_elem = circuits_by_element(n, &circuits);
        let backing = backing(&circuits);
        Self::assemble(name, n, rank, backing, Some(table), circuits, by_elem)
    }

    fn assemble(
        name: String,
        n: usize,
        rank: usize,
        backing: Backing,
        table: Option<Vec<u8>>,
        circuits: Vec<ElementSet>,
        circuits_by_element: Vec<Vec<ElementSet>>,
    ) -> Self {
        let simple = circuits.iter().all(|c| c.len() > 2);
        Matroid { inner: Arc::new(Inner { name, n, rank, backing, table, circuits, circuits_by_element, simple }) }
    }

    fn require_simple(&self) -> Result<()> {
        if let Some(c) = self.inner.circuits.iter().find(|c| c.len() <= 2) {
            let l = c.labels();
            return Err(if l.len() == 1 { Error::Loop(l[0]) } else { Error::Parallel(l[0], l[1]) });
        }
        Ok(())
    }

    /// Brute-force axiom check: local submodularity of the rank table, which
    /// characterizes matroid rank functions among unit-increase functions.
    fn validate(&self) -> Result<()> {
        let n = self.n();
        if n > VALIDATE_LIMIT {
            return Ok(());
        }
        let t = self.table().expect("table for small n");
        for s in 0..(1usize << n) {
            for e in 0..n {
                if s >> e & 1 == 1 {
                    continue;
                }
                for f in e + 1..n {
                    if s >> f & 1 == 1 {
                        continue;
                    }
                    let (se, sf, sef) = (s | 1 << e, s | 1 << f, s | 1 << e | 1 << f);
                    if (t[se] as u32 + t[sf] as u32) < (t[sef] as u32 + t[s] as u32) {
                        return Err(Error::InvalidMatroid(format!(
                            "rank function fails submodularity at {} with {}, {}",
                            ElementSet(s as u64),
                            e + 1,
                            f + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn with_name(&self, name: impl Into<String>) -> Self {
        let i = &self.inner;
        Self::assemble(
            name.into(),
            i.n,
            i.rank,
            i.backing.clone(),
            i.table.clone(),
            i.circuits.clone(),
            i.circuits_by_element.clone(),
        )
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    /// Rank of the whole ground set.
    pub fn rank(&self) -> usize {
        self.inner.rank
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n())
    }

    pub fn backing(&self) -> &Backing {
        &self.inner.backing
    }

    pub fn is_simple(&self) -> bool {
        self.inner.simple
    }

    pub(crate) fn table(&self) -> Option<&[u8]> {
        self.inner.table.as_deref()
    }

    pub(crate) fn require_table(&self, what: &'static str) -> Result<&[u8]> {
        self.table().ok_or(Error::Capacity { what, limit: TABLE_LIMIT, n: self.n() })
    }

    /// Matroid rank of `s`.
    pub fn rank_of(&self, s: ElementSet) -> usize {
        debug_assert!(s.is_subset(self.ground()));
        match &self.inner.table {
            Some(t) => t[s.bits() as usize] as usize,
            None => greedy_rank(&self.inner.circuits_by_element, s, self.inner.rank),
        }
    }

    pub fn is_independent(&self, s: ElementSet) -> bool {
        self.rank_of(s) == s.len()
    }

    pub fn closure(&self, s: ElementSet) -> ElementSet {
        let r = self.rank_of(s);
        (0..self.n()).filter(|&e| s.contains(e) || self.rank_of(s.insert(e)) == r).fold(s, ElementSet::insert)
    }

    /// All circuits, sorted by (size, lex).
    pub fn circuits(&self) -> &[ElementSet] {
        &self.inner.circuits
    }

    /// All bases, in lexicographic order.
    pub fn bases(&self) -> Vec<ElementSet> {
        let r = self.rank();
        k_subsets(self.n(), r).into_iter().filter(|b| self.rank_of(*b) == r).collect()
    }

    pub fn bases_count(&self) -> Result<u64> {
        self.require_table("bases_count")?;
        let r = self.rank();
        let t = self.table().unwrap();
        Ok((0..t.len()).filter(|&s| s.count_ones() as usize == r && t[s] as usize == r).count() as u64)
    }

    /// All flats of rank `k`, sorted by (size, lex).
    pub fn flats_of_rank(&self, k: usize) -> Result<Vec<ElementSet>> {
        if k > self.rank() {
            return Err(Error::InvalidArgument(format!("flat rank {k} exceeds matroid rank {}", self.rank())));
        }
        let mut seen = HashSet::new();
        let mut flats = Vec::new();
        for s in k_subsets(self.n(), k) {
            if self.rank_of(s) == k {
                let f = self.closure(s);
                if seen.insert(f) {
                    flats.push(f);
                }
            }
        }
        sort_size_lex(&mut flats);
        Ok(flats)
    }

    /// Rank-2 flats with at least three points, counting a parallel class as
    /// one point. For simple matroids these are the flats with three elements.
    pub fn long_lines(&self) -> Vec<ElementSet> {
        if self.rank() < 2 {
            return Vec::new();
        }
        self.flats_of_rank(2).expect("rank >= 2").into_iter().filter(|l| self.point_count(*l) >= 3).collect()
    }

    /// Number of parallel classes among the non-loops of `s`.
    pub fn point_count(&self, s: ElementSet) -> usize {
        let mut rest = s.difference(self.loops());
        let mut count = 0;
        while let Some(e) = rest.min() {
            rest = rest.difference(self.closure(ElementSet::singleton(e)));
            count += 1;
        }
        count
    }

    /// `M \ delete / contract`, relabelled to `[n - |delete| - |contract|]` in
    /// ground-set order. The result may have loops or parallel elements.
    pub fn minor(&self, delete: ElementSet, contract: ElementSet) -> Result<Self> {
        if !delete.is_disjoint(contract) {
            return Err(Error::InvalidArgument(format!(
                "deletion set {delete} and contraction set {contract} overlap"
            )));
        }
        let t = self.require_table("minor")?;
        let keep = self.ground().difference(delete.union(contract)).indices();
        let n2 = keep.len();
        let rc = t[contract.bits() as usize];
        let table: Vec<u8> = (0..1usize << n2)
            .map(|s| {
                let orig = keep
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| s >> i & 1 == 1)
                    .fold(contract.bits(), |m, (_, &e)| m | 1 << e);
                t[orig as usize] - rc
            })
            .collect();
        let mut name = self.name().to_string();
        if !delete.is_empty() {
            name += &format!("\\{delete}");
        }
        if !contract.is_empty() {
            name += &format!("/{contract}");
        }
        Ok(Self::from_rank_table(name, n2, table))
    }

    pub fn delete(&self, s: ElementSet) -> Result<Self> {
        self.minor(s, ElementSet::EMPTY)
    }

    pub fn contract(&self, s: ElementSet) -> Result<Self> {
        self.minor(ElementSet::EMPTY, s)
    }

    /// Applies `perm` (element `i` becomes `perm[i]`, 0-based).
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n() || ElementSet::from_indices(perm.iter().copied()) != self.ground() {
            return Err(Error::InvalidArgument("relabelling is not a permutation of the ground set".into()));
        }
        let circuits = self.circuits().iter().map(|c| c.map(perm)).collect();
        Self::from_circuits_unchecked(self.name().to_string(), self.n(), circuits)
    }

    /// Direct sum; `other`'s elements are shifted by `self.n()`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Self> {
        if !self.is_simple() || !other.is_simple() {
            return Err(Error::Precondition("direct sum of non-simple matroids".into()));
        }
        let n = self.n() + other.n();
        check_capacity("direct sum", MAX_GROUND, n)?;
        let shift = self.n();
        let circuits = self
            .circuits()
            .iter()
            .copied()
            .chain(other.circuits().iter().map(|c| ElementSet(c.bits() << shift)))
            .collect();
        Self::from_circuits(format!("{} + {}", self.name(), other.name()), n, circuits)
    }

    /// Single-element free extension: new element `n + 1` whose new circuits
    /// are exactly `B + (n + 1)` for the bases `B`.
    pub fn free_extension(&self) -> Result<Self> {
        if !self.is_simple() {
            return Err(Error::Precondition("free extension of a non-simple matroid".into()));
        }
        if self.rank() < 1 {
            return Err(Error::Precondition("free extension needs rank >= 1".into()));
        }
        self.require_table("free_extension")?;
        let n = self.n();
        check_capacity("free extension", MAX_GROUND - 1, n)?;
        let mut circuits = self.circuits().to_vec();
        circuits.extend(self.bases().into_iter().map(|b| b.insert(n)));
        #[cfg(debug_assertions)]
        for (i, c) in circuits.iter().enumerate() {
            for (j, d) in circuits.iter().enumerate() {
                debug_assert!(i == j || !c.is_subset(*d), "free-extension circuit set is not an antichain");
            }
        }
        Self::from_circuits(format!("free({})", self.name()), n + 1, circuits)
    }

    /// Truncation: free extension followed by contraction of the new element.
    pub fn truncation(&self) -> Result<Self> {
        if self.rank() < 2 {
            return Err(Error::Precondition("truncation needs rank >= 2".into()));
        }
        let fe = self.free_extension()?;
        let t = fe.contract(ElementSet::singleton(self.n()))?;
        let t = Self::from_circuits_unchecked(format!("trunc({})", self.name()), t.n(), t.circuits().to_vec())?;
        t.require_simple()?;
        Ok(t)
    }

    /// Elements that are loops.
    pub fn loops(&self) -> ElementSet {
        (0..self.n())
            .filter(|&e| self.rank_of(ElementSet::singleton(e)) == 0)
            .fold(ElementSet::EMPTY, ElementSet::insert)
    }

    /// Elements in every basis.
    pub fn coloops(&self) -> ElementSet {
        let r = self.rank();
        let g = self.ground();
        (0..self.n()).filter(|&e| self.rank_of(g.remove(e)) < r).fold(ElementSet::EMPTY, ElementSet::insert)
    }

    /// True when the rank oracles agree on every subset (n <= TABLE_LIMIT).
    pub fn same_rank_function(&self, other: &Matroid) -> bool {
        if self.n() != other.n() {
            return false;
        }
        match (self.table(), other.table()) {
            (Some(a), Some(b)) => a == b,
            _ => self.circuits() == other.circuits(),
        }
    }
}

fn superset_close(dep: &mut [bool], n: usize) {
    for b in 0..n {
        let bit = 1usize << b;
        for s in 0..dep.len() {
            if s & bit == 0 && dep[s] {
                dep[s | bit] = true;
            }
        }
    }
}

fn subset_close(indep: &mut [bool], n: usize) {
    for b in 0..n {
        let bit = 1usize << b;
        for s in (0..indep.len()).rev() {
            if s & bit != 0 && indep[s] {
                indep[s ^ bit] = true;
            }
        }
    }
}

/// Rank of each subset given dependence of each subset.
fn rank_table_from_dependence(dep: &[bool], n: usize) -> Vec<u8> {
    let mut t = vec![0u8; 1 << n];
    for s in 1..(1usize << n) {
        t[s] = if !dep[s] {
            s.count_ones() as u8
        } else {
            let mut best = 0;
            let mut rest = s;
            while rest != 0 {
                let e = rest & rest.wrapping_neg();
                best = best.max(t[s ^ e]);
                rest ^= e;
            }
            best
        };
    }
    t
}

fn circuits_from_table(t: &[u8], n: usize) -> Vec<ElementSet> {
    let mut out = Vec::new();
    for s in 1..(1usize << n) {
        let size = s.count_ones() as u8;
        if t[s] == size {
            continue;
        }
        let mut rest = s;
        let mut minimal = true;
        while rest != 0 {
            let e = rest & rest.wrapping_neg();
            if t[s ^ e] != size - 1 {
                minimal = false;
                break;
            }
            rest ^= e;
        }
        if minimal {
            out.push(ElementSet(s as u64));
        }
    }
    sort_size_lex(&mut out);
    out
}

fn circuits_by_element(n: usize, circuits: &[ElementSet]) -> Vec<Vec<ElementSet>> {
    let mut by = vec![Vec::new(); n];
    for c in circuits {
        for e in c.iter() {
            by[e].push(*c);
        }
    }
    by
}

/// Greedy independent subset of `s`; stops once `cap` elements are collected.
fn greedy_rank(by_elem: &[Vec<ElementSet>], s: ElementSet, cap: usize) -> usize {
    let mut indep = ElementSet::EMPTY;
    for e in s.iter() {
        if indep.len() == cap {
            break;
        }
        let t = indep.insert(e);
        if !by_elem[e].iter().any(|c| c.is_subset(t)) {
            indep = t;
        }
    }
    indep.len()
}

/// Independence of every subset of the columns, by depth-first extension of
/// independent sets in increasing element order.
fn independence_table<F: Field>(cols: &[Vec<F>], n: usize) -> Vec<bool> {
    fn go<F: Field>(cols: &[Vec<F>], span: &SpanBuilder<F>, set: usize, next: usize, out: &mut [bool]) {
        for e in next..cols.len() {
            if let Some(res) = span.residual(&cols[e]) {
                let s = set | 1 << e;
                out[s] = true;
                go(cols, &span.with(res), s, e + 1, out);
            }
        }
    }
    let mut out = vec![false; 1 << n];
    out[0] = true;
    go(cols, &SpanBuilder::default(), 0, 0, &mut out);
    out
}

/// `U(r, n)` from its circuits: all `(r + 1)`-subsets.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if r > n {
        return Err(Error::InvalidArgument(format!("U({r},{n}) needs r <= n")));
    }
    if r < 2 && n > r {
        return Err(Error::InvalidArgument(format!("U({r},{n}) is not simple")));
    }
    Matroid::from_circuits(format!("U({r},{n})"), n, k_subsets(n, r + 1))
}

/// Rational vector configuration helper for tests and generators.
pub fn rational_columns(cols: &[&[i64]]) -> RationalMatrix {
    let dim = cols.first().map_or(0, |c| c.len());
    RationalMatrix::from_columns(
        dim,
        cols.iter().map(|c| c.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect(),
    )
    .expect("rectangular columns")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(l: &[usize]) -> ElementSet {
        ElementSet::from_labels(l)
    }

    fn p5() -> Matroid {
        Matroid::from_circuits("P5", 5, vec![set(&[1, 2, 3]), set(&[3, 4, 5]), set(&[1, 2, 4, 5])]).unwrap()
    }

    #[test]
    fn rank_of_empty_is_zero() {
        for m in [uniform(2, 3).unwrap(), p5(), Matroid::empty()] {
            assert_eq!(m.rank_of(ElementSet::EMPTY), 0);
        }
    }

    #[test]
    fn circuits_of_small_configurations() {
        let u23 = Matroid::from_rational_matrix("U23", &rational_columns(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(u23.circuits(), &[set(&[1, 2, 3])]);
        let u33 =
            Matroid::from_rational_matrix("U33", &rational_columns(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert!(u33.circuits().is_empty());
        assert_eq!(p5().circuits(), &[set(&[1, 2, 3]), set(&[3, 4, 5]), set(&[1, 2, 4, 5])]);
    }

    #[test]
    fn circuits_are_minimal_dependent_sets_by_brute_force() {
        let m = p5();
        let n = m.n();
        let brute: Vec<ElementSet> = (1..1u64 << n)
            .map(ElementSet)
            .filter(|s| !m.is_independent(*s) && s.iter().all(|e| m.is_independent(s.remove(e))))
            .collect();
        let mut brute = brute;
        sort_size_lex(&mut brute);
        assert_eq!(brute, m.circuits());
    }

    #[test]
    fn rejects_loops_and_parallels() {
        assert_eq!(Matroid::from_circuits("x", 3, vec![set(&[1, 2])]).unwrap_err(), Error::Parallel(1, 2));
        assert_eq!(Matroid::from_circuits("x", 2, vec![set(&[2])]).unwrap_err(), Error::Loop(2));
        let cols = rational_columns(&[&[1, 0], &[0, 0], &[1, 1]]);
        assert_eq!(Matroid::from_rational_matrix("x", &cols).unwrap_err(), Error::Loop(2));
        let cols = rational_columns(&[&[1, 0], &[2, 4], &[1, 2]]);
        assert_eq!(Matroid::from_rational_matrix("x", &cols).unwrap_err(), Error::Parallel(2, 3));
    }

    #[test]
    fn rejects_non_matroids() {
        // Elimination on element 1 needs a circuit inside {2,3,4}.
        let bad = Matroid::from_circuits("bad", 5, vec![set(&[1, 2, 3]), set(&[1, 2, 4])]);
        assert!(matches!(bad, Err(Error::InvalidMatroid(_))));
        let nested = Matroid::from_circuits("bad", 4, vec![set(&[1, 2, 3]), set(&[1, 2, 3, 4])]);
        assert!(matches!(nested, Err(Error::InvalidMatroid(_))));
        let unequal = Matroid::from_bases("bad", 3, vec![set(&[1, 2]), set(&[3])]);
        assert!(unequal.is_err());
    }

    #[test]
    fn basis_backing_agrees_with_circuits() {
        let m = p5();
        let b = Matroid::from_bases("P5", 5, m.bases()).unwrap();
        assert!(b.same_rank_function(&m));
        assert_eq!(b.circuits(), m.circuits());
    }

    #[test]
    fn flats_of_uniform() {
        let u33 = uniform(3, 3).unwrap();
        assert_eq!(u33.flats_of_rank(2).unwrap(), vec![set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]);
        assert!(u33.flats_of_rank(4).is_err());
        assert_eq!(u33.flats_of_rank(0).unwrap(), vec![ElementSet::EMPTY]);
    }

    #[test]
    fn minors_of_u23() {
        let u23 = uniform(2, 3).unwrap();
        let d = u23.delete(set(&[3])).unwrap();
        assert_eq!(d.n(), 2);
        assert_eq!(d.rank(), 2);
        assert!(d.circuits().is_empty());
        let c = u23.contract(set(&[3])).unwrap();
        assert_eq!(c.rank(), 1);
        assert_eq!(c.circuits(), &[set(&[1, 2])]);
        assert!(!c.is_simple());
        assert!(u23.minor(set(&[1]), set(&[1, 2])).is_err());
    }

    #[test]
    fn direct_sums() {
        let u23 = uniform(2, 3).unwrap();
        let s = u23.direct_sum(&u23).unwrap();
        assert_eq!((s.n(), s.rank()), (6, 4));
        assert_eq!(s.circuits(), &[set(&[1, 2, 3]), set(&[4, 5, 6])]);
        assert_eq!(s.bases_count().unwrap(), 9);
        let coloop = uniform(1, 1).unwrap();
        let p = p5().direct_sum(&coloop).unwrap();
        assert_eq!(p.rank(), 4);
        assert_eq!(p.bases_count().unwrap(), p5().bases_count().unwrap());
        assert!(p.bases().iter().all(|b| b.contains(5)));
        let u33 = uniform(3, 3).unwrap();
        let t = u23.direct_sum(&u33).unwrap();
        assert_eq!(t.bases_count().unwrap(), 3);
        assert!(t.bases().iter().all(|b| b.len() == 5));
    }

    #[test]
    fn free_extensions() {
        let u24 = uniform(2, 3).unwrap().free_extension().unwrap();
        assert!(u24.same_rank_function(&uniform(2, 4).unwrap()));
        let u34 = uniform(3, 3).unwrap().free_extension().unwrap();
        assert_eq!(u34.circuits(), &[set(&[1, 2, 3, 4])]);
        let u23 = uniform(2, 3).unwrap();
        let m1 = u23.direct_sum(&u23).unwrap().free_extension().unwrap();
        assert_eq!(m1.bases_count().unwrap(), 27);
    }

    #[test]
    fn truncations() {
        let t = uniform(3, 3).unwrap().truncation().unwrap();
        assert!(t.same_rank_function(&uniform(2, 3).unwrap()));
        let t = uniform(3, 4).unwrap().truncation().unwrap();
        assert!(t.same_rank_function(&uniform(2, 4).unwrap()));
        assert_eq!(uniform(2, 3).unwrap().truncation().unwrap_err(), Error::Parallel(1, 2));
    }

    #[test]
    fn relabel_checks_permutation() {
        let m = p5();
        assert!(m.relabel(&[0, 0, 1, 2, 3]).is_err());
        let r = m.relabel(&[4, 3, 2, 1, 0]).unwrap();
        assert_eq!(r.circuits()[0], set(&[1, 2, 3]));
        assert_eq!(r.circuits()[1], set(&[3, 4, 5]));
    }

    #[test]
    fn large_circuit_backed_rank_is_greedy() {
        // U(2,22) has no rank table; rank must come from the circuit list.
        let m = uniform(2, 22).unwrap();
        assert!(m.table().is_none());
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_of(set(&[1, 5, 9])), 2);
        assert_eq!(m.flats_of_rank(2).unwrap().len(), 1);
        assert_eq!(m.flats_of_rank(1).unwrap().len(), 22);
    }
}
