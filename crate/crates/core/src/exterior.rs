//! The exterior algebra on `e_1..e_n` over Q.
//!
//! A monomial `e_X` is the wedge of its generators in ascending order; any
//! other order is normalized with the sign of the sorting permutation.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Signed, Zero};

use crate::subset::ElementSet;

/// Sign of `e_S ^ e_T` relative to `e_(S u T)`, or `None` when `S` and `T` meet.
pub fn wedge_sign(s: ElementSet, t: ElementSet) -> Option<i64> {
    if !s.is_disjoint(t) {
        return None;
    }
    // Each pair s > t is one transposition in the merge.
    let inversions: u32 = t.iter().map(|e| (s.bits() >> e >> 1).count_ones()).sum();
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

/// Terms of `d e_X = sum_j (-1)^(j-1) e_(X - i_j)` as `(set, sign)`.
pub fn boundary_terms(x: ElementSet) -> impl Iterator<Item = (ElementSet, i64)> {
    x.iter().enumerate().map(move |(j, e)| (x.remove(e), if j % 2 == 0 { 1 } else { -1 }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorElement {
    n: usize,
    /// Keyed by subset mask.
    terms: BTreeMap<u64, BigRational>,
}

impl ExteriorElement {
    pub fn zero(n: usize) -> Self {
        ExteriorElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, ElementSet::EMPTY, BigRational::one())
    }

    /// `e_(i + 1)` for 0-based `i`.
    pub fn generator(n: usize, i: usize) -> Self {
        Self::monomial(n, ElementSet::singleton(i), BigRational::one())
    }

    pub fn monomial(n: usize, x: ElementSet, c: BigRational) -> Self {
        assert!(x.is_subset(ElementSet::full(n)), "monomial outside the ground set");
        let mut e = Self::zero(n);
        e.add_term(x, c);
        e
    }

    /// `sum_i lambda_i e_i`.
    pub fn linear(lambda: &[BigRational]) -> Self {
        let n = lambda.len();
        let mut e = Self::zero(n);
        for (i, c) in lambda.iter().enumerate() {
            e.add_term(ElementSet::singleton(i), c.clone());
        }
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, x: ElementSet, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry(x.bits()).or_insert_with(BigRational::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&x.bits());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (ElementSet, &BigRational)> {
        self.terms.iter().map(|(&b, c)| (ElementSet(b), c))
    }

    pub fn coeff(&self, x: ElementSet) -> BigRational {
        self.terms.get(&x.bits()).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|x| x.count_ones() as usize);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, c) in other.terms() {
            out.add_term(x, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.n);
        for (x, v) in self.terms() {
            out.add_term(x, v * c);
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for (x, a) in self.terms() {
            for (y, b) in other.terms() {
                if let Some(s) = wedge_sign(x, y) {
                    let c = a * b;
                    out.add_term(x.union(y), if s > 0 { c } else { -c });
                }
            }
        }
        out
    }

    pub fn boundary(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (x, c) in self.terms() {
            for (y, s) in boundary_terms(x) {
                out.add_term(y, if s > 0 { c.clone() } else { -c.clone() });
            }
        }
        out
    }
}

impl fmt::Display for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(ElementSet, &BigRational)> = self.terms().collect();
        terms.sort_by(|a, b| a.0.size_lex_cmp(&b.0));
        for (i, (x, c)) in terms.into_iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let a = c.abs();
            let mono = if x.is_empty() {
                String::new()
            } else {
                format!("e{}", x.labels().iter().map(|l| l.to_string()).collect::<Vec<_>>().join(","))
            };
            if !a.is_one() || mono.is_empty() {
                write!(f, "{a}")?;
            }
            write!(f, "{mono}")?;
        }
        Ok(())
    }
}
