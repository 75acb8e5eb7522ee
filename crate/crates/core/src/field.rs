//! Exact scalar fields and dense linear algebra over them.
//!
//! Two fields are needed: the rationals, and quadratic extensions
//! `Q(sqrt d)` for the regular-polygon arrangements whose line equations are
//! not rational.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::{BigRational, Integer, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Panics on division by zero.
    fn div(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn neg(&self) -> Self {
        -self
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or `p`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// `a + b sqrt(d)` with rational `a, b` and squarefree `d > 1`.
///
/// `d == 0` marks a plain rational whose extension has not been fixed yet;
/// it adopts the radicand of whatever it is combined with.
#[derive(Clone, Debug)]
pub struct QuadExt {
    pub a: BigRational,
    pub b: BigRational,
    pub d: u32,
}

impl QuadExt {
    pub fn new(a: BigRational, b: BigRational, d: u32) -> Self {
        QuadExt { a, b, d }
    }

    pub fn rational(a: BigRational) -> Self {
        QuadExt { a, b: Zero::zero(), d: 0 }
    }

    /// `sqrt(d)`.
    pub fn sqrt(d: u32) -> Self {
        QuadExt { a: Zero::zero(), b: One::one(), d }
    }

    fn radicand(&self, other: &Self) -> u32 {
        match (self.d, other.d) {
            (0, d) | (d, 0) => d,
            (x, y) if x == y => x,
            (x, y) => {
                // both nonzero b parts would be needed to genuinely mix fields
                if Zero::is_zero(&self.b) {
                    y
                } else if Zero::is_zero(&other.b) {
                    x
                } else {
                    panic!("mixing Q(sqrt {x}) and Q(sqrt {y})")
                }
            }
        }
    }

    /// Field norm `a^2 - d b^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(BigInt::from(self.d)) * &self.b * &self.b
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QuadExt { a: &self.a * c, b: &self.b * c, d: self.d }
    }

    pub fn approx(&self) -> f64 {
        use num::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * (self.d as f64).sqrt()
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (Zero::is_zero(&self.b) || self.d == other.d)
    }
}

impl Field for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(Zero::zero())
    }
    fn one() -> Self {
        QuadExt::rational(One::one())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn add(&self, o: &Self) -> Self {
        QuadExt { a: &self.a + &o.a, b: &self.b + &o.b, d: self.radicand(o) }
    }
    fn sub(&self, o: &Self) -> Self {
        QuadExt { a: &self.a - &o.a, b: &self.b - &o.b, d: self.radicand(o) }
    }
    fn mul(&self, o: &Self) -> Self {
        let d = self.radicand(o);
        let dd = BigRational::from_integer(BigInt::from(d));
        QuadExt { a: &self.a * &o.a + dd * &self.b * &o.b, b: &self.a * &o.b + &self.b * &o.a, d }
    }
    fn div(&self, o: &Self) -> Self {
        let d = self.radicand(o);
        let n = QuadExt { a: o.a.clone(), b: o.b.clone(), d }.norm();
        assert!(!Zero::is_zero(&n), "division by zero in Q(sqrt {d})");
        let conj = QuadExt { a: o.a.clone() / &n, b: -o.b.clone() / &n, d };
        QuadExt { a: self.a.clone(), b: self.b.clone(), d }.mul(&conj)
    }
    fn neg(&self) -> Self {
        QuadExt { a: -self.a.clone(), b: -self.b.clone(), d: self.d }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.b) {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

/// Wire form of a quadratic entry: `{"a": "p/q", "b": "p/q", "d": int}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuadExtJson {
    pub a: String,
    pub b: String,
    pub d: u32,
}

impl From<&QuadExt> for QuadExtJson {
    fn from(q: &QuadExt) -> Self {
        QuadExtJson { a: q.a.to_string(), b: q.b.to_string(), d: q.d }
    }
}

impl TryFrom<&QuadExtJson> for QuadExt {
    type Error = Error;
    fn try_from(j: &QuadExtJson) -> Result<Self> {
        let b = parse_rational(&j.b)?;
        if !Zero::is_zero(&b) && !is_squarefree_radicand(j.d) {
            return Err(Error::Parse(format!("radicand {} is not squarefree > 1", j.d)));
        }
        Ok(QuadExt::new(parse_rational(&j.a)?, b, j.d))
    }
}

fn is_squarefree_radicand(d: u32) -> bool {
    d > 1 && (2..=d).take_while(|p| p * p <= d).all(|p| !d.is_multiple_of(p * p))
}

/// Dense row-major matrix over a field. Columns are the vectors of a configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

pub type RationalMatrix = Matrix<BigRational>;
pub type QuadMatrix = Matrix<QuadExt>;

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Like [`Matrix::from_rows`] but with explicit dimensions, so `0 x c` is representable.
    pub fn from_rows_dims(rows: usize, cols: usize, data: Vec<Vec<F>>) -> Result<Self> {
        if data.len() != rows || data.iter().any(|row| row.len() != cols) {
            return Err(Error::InvalidArgument(format!("matrix is not {rows} x {cols}")));
        }
        Ok(Matrix { rows, cols, data: data.into_iter().flatten().collect() })
    }

    /// Builds the matrix whose columns are `cols`, each of length `dim`.
    pub fn from_columns(dim: usize, cols: Vec<Vec<F>>) -> Result<Self> {
        let mut m = Self::zeros(dim, cols.len());
        for (j, col) in cols.into_iter().enumerate() {
            if col.len() != dim {
                return Err(Error::InvalidArgument("column length mismatch".into()));
            }
            for (i, x) in col.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: F) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::InvalidArgument("dimension mismatch in product".into()));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    /// Rank by Gaussian elimination over `F`.
    pub fn rank(&self) -> usize {
        rank_of_rows(self.row_vecs())
    }

    /// Basis of `{ v : A v = 0 }`, one vector per free column, each with a 1 there.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let mut rows = self.row_vecs();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = F::one().div(&rows[r][c]);
            rows[r] = rows[r].iter().map(|x| x.mul(&inv)).collect();
            for i in 0..rows.len() {
                if i != r && !rows[i][c].is_zero() {
                    let f = rows[i][c].clone();
                    let pr = rows[r].clone();
                    for (x, y) in rows[i].iter_mut().zip(&pr) {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![F::zero(); self.cols];
                v[free] = F::one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = rows[i][free].neg();
                }
                v
            })
            .collect()
    }

    /// Inverse by Gauss-Jordan elimination, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.row_vecs();
        let mut inv = Self::identity(n).row_vecs();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, piv);
            inv.swap(col, piv);
            let p = a[col][col].clone();
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                *x = x.div(&p);
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..n {
                        let v = a[r][c].sub(&f.mul(&a[col][c]));
                        a[r][c] = v;
                        let w = inv[r][c].sub(&f.mul(&inv[col][c]));
                        inv[r][c] = w;
                    }
                }
            }
        }
        Matrix::from_rows(inv).ok()
    }
}

/// Rank of a list of row vectors by plain Gaussian elimination.
pub fn rank_of_rows<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let p = &pivot_row[col];
        for row in tail.iter_mut().filter(|row| !row[col].is_zero()) {
            let f = row[col].div(p);
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = x.sub(&f.mul(y));
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over Q by fraction-free (Bareiss) elimination: rows are first scaled
/// to integers, then eliminated with exact divisions only.
pub fn rational_rank(m: &RationalMatrix) -> usize {
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| clear_denominators(m.row(i))).collect();
    bareiss_rank(&mut rows)
}

/// Scales a rational vector by the lcm of its denominators.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    v.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

pub fn bareiss_rank(rows: &mut [Vec<BigInt>]) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = (&rows[rank][col] * &rows[r][c] - &rows[r][col] * &rows[rank][c]) / &prev;
                rows[r][c] = v;
            }
            rows[r][col] = BigInt::zero();
        }
        prev = rows[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Incrementally maintained echelon basis used to enumerate independent sets.
#[derive(Clone, Debug)]
pub struct SpanBuilder<F> {
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Default for SpanBuilder<F> {
    fn default() -> Self {
        SpanBuilder { rows: Vec::new() }
    }
}

impl<F: Field> SpanBuilder<F> {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; `None` if `v` lies in the span.
    pub fn residual(&self, v: &[F]) -> Option<(usize, Vec<F>)> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].div(&row[*p]);
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
        }
        let p = v.iter().position(|x| !x.is_zero())?;
        Some((p, v))
    }

    pub fn with(&self, residual: (usize, Vec<F>)) -> Self {
        let mut rows = self.rows.clone();
        rows.push(residual);
        SpanBuilder { rows }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rm(rows: &[&[i64]]) -> RationalMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn nullspace_of_a_sum_constraint() {
        let a = rm(&[&[1, 1, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.mul(&Matrix::from_columns(3, vec![v.clone()]).unwrap()).unwrap().is_zero());
        }
        assert!(rm(&[&[1, 0], &[0, 1]]).nullspace().is_empty());
    }

    #[test]
    fn rational_rank_examples() {
        assert_eq!(rational_rank(&rm(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])), 3);
        assert_eq!(rational_rank(&rm(&[&[1, 0, 1], &[0, 1, 1]])), 2);
        assert_eq!(rational_rank(&RationalMatrix::zeros(2, 5)), 0);
    }

    #[test]
    fn bareiss_agrees_with_field_elimination() {
        let m = Matrix::from_rows(vec![
            vec![rat(1, 2), rat(2, 3), rat(5, 7), int(1)],
            vec![rat(1, 4), rat(1, 3), rat(5, 14), rat(1, 2)],
            vec![int(3), int(-1), rat(2, 9), int(0)],
        ])
        .unwrap();
        assert_eq!(rational_rank(&m), 2);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn quadratic_arithmetic() {
        let s3 = QuadExt::sqrt(3);
        let sq = s3.mul(&s3);
        assert_eq!(sq, QuadExt::rational(int(3)));
        let x = QuadExt::new(int(1), int(1), 3);
        let y = x.div(&x);
        assert_eq!(y, QuadExt::one());
        let z = QuadExt::one().div(&x);
        // (1 + sqrt3)^{-1} = (sqrt3 - 1)/2
        assert_eq!(z, QuadExt::new(rat(-1, 2), rat(1, 2), 3));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = rm(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(2));
        assert!(rm(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("2/3").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("-4").unwrap(), int(-4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
