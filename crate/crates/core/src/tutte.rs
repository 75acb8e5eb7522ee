//! Tutte polynomial by memoized deletion-contraction, the corank-nullity
//! oracle, the characteristic polynomial and the rank-3 reconstruction from
//! line statistics.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{check_capacity, Error, Result};
use crate::matroid::{canonical_key, CanonicalKey, Matroid, EXACT_KEY_LIMIT};
use crate::par::{self, Exec};
use crate::poly::{BivariatePoly, UnivariatePoly};
use crate::subset::{binomial, ElementSet};

pub const ORACLE_LIMIT: usize = 16;

/// Branches on fewer elements than this run inline.
const PARALLEL_CUTOFF: usize = 10;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SplitOrder {
    #[default]
    Smallest,
    Largest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TutteOptions {
    pub order: SplitOrder,
    pub exec: Exec,
    /// Consult and fill the cross-call cache keyed by exact canonical keys.
    pub global_cache: bool,
}

impl Default for TutteOptions {
    fn default() -> Self {
        Self { order: SplitOrder::Smallest, exec: Exec::default(), global_cache: true }
    }
}

fn global_cache() -> &'static Mutex<HashMap<CanonicalKey, BivariatePoly>> {
    static CACHE: OnceLock<Mutex<HashMap<CanonicalKey, BivariatePoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub fn tutte(m: &Matroid) -> Result<BivariatePoly> {
    tutte_with(m, TutteOptions::default())
}

pub fn tutte_with(m: &Matroid, opts: TutteOptions) -> Result<BivariatePoly> {
    let t = m.require_table("tutte")?;
    let key = if opts.global_cache && m.n() <= EXACT_KEY_LIMIT {
        let k = canonical_key(m)?;
        if let Some(p) = global_cache().lock().unwrap().get(&k) {
            return Ok(p.clone());
        }
        Some(k)
    } else {
        None
    };
    let rec = Recursion { t, n: m.n(), opts, memo: Mutex::new(HashMap::new()) };
    let p = rec.eval(m.ground(), closure(t, m.n(), ElementSet::EMPTY));
    if let Some(k) = key {
        global_cache().lock().unwrap().insert(k, p.clone());
    }
    Ok(p)
}

fn closure(t: &[u8], n: usize, s: ElementSet) -> ElementSet {
    let r = t[s.bits() as usize];
    (0..n).filter(|&e| t[s.insert(e).bits() as usize] == r).fold(s, ElementSet::insert)
}

/// The minor on `rest` obtained by contracting a set whose closure is `flat`.
struct Recursion<'a> {
    t: &'a [u8],
    n: usize,
    opts: TutteOptions,
    memo: Mutex<HashMap<(u64, u64), BivariatePoly>>,
}

impl Recursion<'_> {
    fn rank(&self, s: ElementSet, flat: ElementSet) -> u8 {
        self.t[s.union(flat).bits() as usize] - self.t[flat.bits() as usize]
    }

    fn eval(&self, rest: ElementSet, flat: ElementSet) -> BivariatePoly {
        let loops = rest.intersection(flat);
        let rest = rest.difference(loops);
        let full = self.rank(rest, flat);
        let coloops =
            rest.iter().filter(|&e| self.rank(rest.remove(e), flat) < full).fold(ElementSet::EMPTY, ElementSet::insert);
        let rest = rest.difference(coloops);
        let (dx, dy) = (coloops.len() as u32, loops.len() as u32);
        if rest.is_empty() {
            return BivariatePoly::monomial(1, dx, dy);
        }
        let key = (rest.bits(), flat.bits());
        if let Some(p) = self.memo.lock().unwrap().get(&key) {
            return p.shift(dx, dy);
        }
        let e = match self.opts.order {
            SplitOrder::Smallest => rest.min(),
            SplitOrder::Largest => rest.max(),
        }
        .unwrap();
        let rest_e = rest.remove(e);
        let contracted = closure(self.t, self.n, flat.insert(e));
        let exec = if rest.len() >= PARALLEL_CUTOFF { self.opts.exec } else { Exec::Sequential };
        let (del, con) = par::join(exec, || self.eval(rest_e, flat), || self.eval(rest_e, contracted));
        let p = del.add(&con);
        self.memo.lock().unwrap().insert(key, p.clone());
        p.shift(dx, dy)
    }
}

/// `(x - 1)^a (y - 1)^b`.
fn shifted_power(a: u32, b: u32) -> BivariatePoly {
    let mut p = BivariatePoly::zero();
    for i in 0..=a {
        for j in 0..=b {
            let sign = if (a - i + b - j).is_multiple_of(2) { 1 } else { -1 };
            let c = sign * binomial(a as usize, i as usize) as i128 * binomial(b as usize, j as usize) as i128;
            p.add_term(c, i, j);
        }
    }
    p
}

/// Expands `sum count[(corank, nullity)] (x - 1)^corank (y - 1)^nullity`.
fn expand_counts(counts: &[Vec<u128>]) -> BivariatePoly {
    let mut p = BivariatePoly::zero();
    for (a, row) in counts.iter().enumerate() {
        for (b, &c) in row.iter().enumerate() {
            if c > 0 {
                for (dx, dy, k) in shifted_power(a as u32, b as u32).terms().collect::<Vec<_>>() {
                    p.add_term(k * c as i128, dx, dy);
                }
            }
        }
    }
    p
}

/// Exhaustive `sum_S (x - 1)^(r - r(S)) (y - 1)^(|S| - r(S))`.
pub fn corank_nullity_oracle(m: &Matroid) -> Result<BivariatePoly> {
    corank_nullity_oracle_with(m, Exec::default())
}

pub fn corank_nullity_oracle_with(m: &Matroid, exec: Exec) -> Result<BivariatePoly> {
    check_capacity("corank_nullity_oracle", ORACLE_LIMIT, m.n())?;
    let t = m.require_table("corank_nullity_oracle")?;
    let (n, r) = (m.n(), m.rank());
    let counts = par::fold_range(
        exec,
        1u64 << n,
        || vec![vec![0u128; n + 1]; r + 1],
        |mut acc, s| {
            let rs = t[s as usize] as usize;
            acc[r - rs][s.count_ones() as usize - rs] += 1;
            acc
        },
        |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(b) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
            a
        },
    );
    Ok(expand_counts(&counts))
}

/// `chi(t) = (-1)^r T(1 - t, 0)`.
pub fn char_poly(m: &Matroid) -> Result<UnivariatePoly> {
    let t = tutte(m)?;
    let sign = if m.rank().is_multiple_of(2) { 1 } else { -1 };
    Ok(t.chromatic_specialization().scale(sign))
}

/// Sizes of the rank-2 flats with at least three points, ascending.
pub fn line_statistics(m: &Matroid) -> Result<Vec<usize>> {
    if m.rank() != 3 {
        return Err(Error::Precondition(format!("line statistics need rank 3, got rank {}", m.rank())));
    }
    if !m.is_simple() {
        return Err(Error::Precondition("line statistics need a simple matroid".into()));
    }
    let mut sizes: Vec<usize> = m.long_lines().iter().map(|l| l.len()).collect();
    sizes.sort_unstable();
    Ok(sizes)
}

/// Tutte polynomial of a simple rank-3 matroid from `n` and its line sizes.
/// Pairs not covered by a listed line are implicit 2-point lines.
pub fn tutte_rank3_from_lines(n: usize, line_sizes: &[usize]) -> Result<BivariatePoly> {
    if n < 3 {
        return Err(Error::Precondition(format!("a simple rank-3 matroid needs n >= 3, got {n}")));
    }
    if let Some(&s) = line_sizes.iter().find(|&&s| s < 2 || s >= n) {
        return Err(Error::Precondition(format!("line of size {s} is impossible in rank 3 on {n} points")));
    }
    let covered: u128 = line_sizes.iter().map(|&s| binomial(s, 2)).sum();
    if covered > binomial(n, 2) {
        return Err(Error::Precondition(format!("lines cover {covered} pairs but only {} exist", binomial(n, 2))));
    }
    let mut counts = vec![vec![0u128; n + 1]; 4];
    counts[3][0] = 1;
    counts[2][0] = n as u128;
    counts[1][0] = binomial(n, 2);
    for s in 3..=n {
        let on_lines: u128 = line_sizes.iter().map(|&l| binomial(l, s)).sum();
        let total = binomial(n, s);
        let rank3 = total
            .checked_sub(on_lines)
            .ok_or_else(|| Error::Precondition(format!("{on_lines} collinear {s}-sets exceed C({n},{s})")))?;
        counts[1][s - 2] += on_lines;
        counts[0][s - 3] += rank3;
    }
    Ok(expand_counts(&counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::uniform;

    #[test]
    fn small_values() {
        assert_eq!(tutte(&Matroid::empty()).unwrap().to_string(), "1");
        assert_eq!(tutte(&uniform(1, 1).unwrap()).unwrap().to_string(), "x");
        assert_eq!(tutte(&uniform(2, 3).unwrap()).unwrap().to_string(), "x^2 + x + y");
        assert_eq!(corank_nullity_oracle(&uniform(2, 3).unwrap()).unwrap().to_string(), "x^2 + x + y");
    }

    #[test]
    fn direct_sum_factorizes() {
        let u23 = uniform(2, 3).unwrap();
        let s = u23.direct_sum(&u23).unwrap();
        let t = tutte(&u23).unwrap();
        assert_eq!(corank_nullity_oracle(&s).unwrap(), t.mul(&t));
        assert_eq!(tutte(&s).unwrap(), t.mul(&t));
    }

    #[test]
    fn order_and_policy_do_not_matter() {
        let m = uniform(3, 7).unwrap();
        let base = tutte_with(&m, TutteOptions { global_cache: false, ..Default::default() }).unwrap();
        for order in [SplitOrder::Smallest, SplitOrder::Largest] {
            for exec in [Exec::Sequential, Exec::Parallel] {
                let p = tutte_with(&m, TutteOptions { order, exec, global_cache: false }).unwrap();
                assert_eq!(p, base);
            }
        }
    }

    #[test]
    fn char_polys() {
        assert_eq!(char_poly(&uniform(2, 3).unwrap()).unwrap().to_string(), "t^2 - 3t + 2");
        assert_eq!(char_poly(&uniform(1, 1).unwrap()).unwrap().to_string(), "t - 1");
    }

    #[test]
    fn rank3_reconstruction() {
        let t = tutte_rank3_from_lines(4, &[]).unwrap();
        assert_eq!(t, tutte(&uniform(3, 4).unwrap()).unwrap());
        assert_eq!(t.eval_int(1, 1), 4.into());
        assert_eq!(tutte_rank3_from_lines(9, &[3; 12]).unwrap().eval_int(1, 1), 72.into());
        assert!(tutte_rank3_from_lines(4, &[3, 3, 3]).is_err());
        assert!(tutte_rank3_from_lines(4, &[4]).is_err());
        let u23 = uniform(2, 3).unwrap();
        assert!(line_statistics(&u23.direct_sum(&u23).unwrap()).is_err());
    }
}
