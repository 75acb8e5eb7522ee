//! Integer polynomials in `x, y` (Tutte) and in `t` (characteristic, Hilbert).

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), i128>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial(c: i128, dx: u32, dy: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, dx, dy);
        p
    }

    pub fn add_term(&mut self, c: i128, dx: u32, dy: u32) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((dx, dy)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(dx, dy));
        }
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> i128 {
        self.terms.get(&(dx, dy)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted by `(deg_x desc, deg_y desc)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, i128)> + '_ {
        self.terms.iter().rev().map(|(&(dx, dy), &c)| (dx, dy, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(dx, dy), &c) in &other.terms {
            out.add_term(c, dx, dy);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), &c) in &self.terms {
            for (&(d, e), &f) in &other.terms {
                out.add_term(c * f, a + d, b + e);
            }
        }
        out
    }

    /// Multiplies by `x^dx y^dy`.
    pub fn shift(&self, dx: u32, dy: u32) -> Self {
        Self { terms: self.terms.iter().map(|(&(a, b), &c)| ((a + dx, b + dy), c)).collect() }
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (&(dx, dy), &c)| {
            acc + BigRational::from_integer(BigInt::from(c))
                * num::pow(x.clone(), dx as usize)
                * num::pow(y.clone(), dy as usize)
        })
    }

    pub fn eval_int(&self, x: i64, y: i64) -> BigInt {
        self.eval(&BigRational::from_integer(x.into()), &BigRational::from_integer(y.into())).to_integer()
    }

    /// Substitutes `x = 1 - t`, `y = 0`.
    pub fn chromatic_specialization(&self) -> UnivariatePoly {
        let one_minus_t = UnivariatePoly::new(vec![1, -1]);
        let mut out = UnivariatePoly::zero();
        for (dx, dy, c) in self.terms() {
            if dy == 0 {
                out = out.add(&one_minus_t.pow(dx).scale(c));
            }
        }
        out
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: i128, vars: &[(&str, u32)]) -> fmt::Result {
    let sign = if c < 0 { "-" } else { "+" };
    if first {
        if c < 0 {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    let mono: String = vars
        .iter()
        .filter(|(_, d)| *d > 0)
        .map(|(v, d)| if *d == 1 { v.to_string() } else { format!("{v}^{d}") })
        .collect();
    let a = c.unsigned_abs();
    if a != 1 || mono.is_empty() {
        write!(f, "{a}")?;
    }
    write!(f, "{mono}")
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (dx, dy, c)) in self.terms().enumerate() {
            write_term(f, i == 0, c, &[("x", dx), ("y", dy)])?;
        }
        Ok(())
    }
}

/// Coefficients by degree; no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UnivariatePoly {
    coeffs: Vec<i128>,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> i128 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|d| self.coeff(d) + other.coeff(d)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: i128) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::new(vec![1]), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, &c| acc * t + BigRational::from_integer(c.into()))
    }

    /// `(-t)^d p(-1/t)`; requires `deg p <= d`.
    pub fn signed_reversal(&self, d: usize) -> Self {
        let mut out = vec![0; d + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            assert!(i <= d, "degree exceeds reversal length");
            out[d - i] += if (d + i).is_multiple_of(2) { c } else { -c };
        }
        Self::new(out)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate().rev() {
            if c != 0 {
                write_term(f, first, c, &[("t", d as u32)])?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Hilbert series text form, ascending degree: `1 + 6t + 13t^2`.
pub fn format_series(dims: &[u64]) -> String {
    let mut out = String::new();
    for (d, &c) in dims.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if !out.is_empty() {
            out += " + ";
        }
        let mono = match d {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{d}"),
        };
        if c != 1 || mono.is_empty() {
            out += &c.to_string();
        }
        out += &mono;
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bivariate_format() {
        let p = BivariatePoly::x().mul(&BivariatePoly::x()).add(&BivariatePoly::x()).add(&BivariatePoly::y());
        assert_eq!(p.to_string(), "x^2 + x + y");
        let q = p.mul(&p);
        assert_eq!(q.to_string(), "x^4 + 2x^3 + 2x^2y + x^2 + 2xy + y^2");
        assert_eq!(BivariatePoly::one().to_string(), "1");
        assert_eq!(BivariatePoly::monomial(-3, 0, 2).to_string(), "-3y^2");
        assert_eq!(BivariatePoly::zero().to_string(), "0");
    }

    #[test]
    fn univariate_format_and_ops() {
        let p = UnivariatePoly::new(vec![2, -3, 1]);
        assert_eq!(p.to_string(), "t^2 - 3t + 2");
        assert_eq!(UnivariatePoly::new(vec![-1, 1]).to_string(), "t - 1");
        assert_eq!(UnivariatePoly::new(vec![0, 0]).to_string(), "0");
        assert_eq!(p.eval(&BigRational::from_integer(1.into())), BigRational::zero());
        // (-t)^2 chi(-1/t) for chi = t^2 - 3t + 2 is 1 + 3t + 2t^2.
        assert_eq!(p.signed_reversal(2).coeffs(), &[1, 3, 2]);
    }

    #[test]
    fn chromatic_specialization_of_u23() {
        let t = BivariatePoly::monomial(1, 2, 0).add(&BivariatePoly::x()).add(&BivariatePoly::y());
        // T(1 - t, 0) = (1 - t)^2 + (1 - t) = t^2 - 3t + 2.
        assert_eq!(t.chromatic_specialization().coeffs(), &[2, -3, 1]);
    }

    #[test]
    fn series_format() {
        assert_eq!(format_series(&[1, 6, 13, 12, 4]), "1 + 6t + 13t^2 + 12t^3 + 4t^4");
        assert_eq!(format_series(&[1]), "1");
    }
}
