//! Sparse exact row reduction.
//!
//! Generator rows of the Orlik-Solomon ideal have entries in {-1, 0, 1}, so
//! elimination runs fraction-free over machine integers first and restarts
//! over big integers only if an intermediate value overflows.

use std::collections::HashMap;

use num::bigint::BigInt;
use num::{BigRational, Integer, One, Signed, Zero};

/// Sparse vector: `(column, value)` pairs sorted by column, no zero values.
pub type SparseRow<T> = Vec<(usize, T)>;

trait ExactInt: Clone + Sized {
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn checked_neg(&self) -> Option<Self>;
    fn checked_mul(&self, o: &Self) -> Option<Self>;
    fn checked_sub(&self, o: &Self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
    fn is_one(&self) -> bool;
}

impl ExactInt for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn checked_neg(&self) -> Option<Self> {
        i64::checked_neg(*self)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        i64::checked_mul(*self, *o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        i64::checked_sub(*self, *o)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
}

impl ExactInt for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn checked_neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

struct Overflow;

struct IntEchelon<T> {
    rows: Vec<SparseRow<T>>,
    pivot_row: HashMap<usize, usize>,
}

impl<T: ExactInt> IntEchelon<T> {
    fn new() -> Self {
        IntEchelon { rows: Vec::new(), pivot_row: HashMap::new() }
    }

    /// `fa * x - fb * y`
    fn combine(fa: &T, x: &SparseRow<T>, fb: &T, y: &SparseRow<T>) -> Result<SparseRow<T>, Overflow> {
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() || j < y.len() {
            let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
            let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
            if take_x {
                out.push((x[i].0, fa.checked_mul(&x[i].1).ok_or(Overflow)?));
                i += 1;
            } else if take_y {
                let v = fb.checked_mul(&y[j].1).ok_or(Overflow)?;
                out.push((y[j].0, v.checked_neg().ok_or(Overflow)?));
                j += 1;
            } else {
                let a = fa.checked_mul(&x[i].1).ok_or(Overflow)?;
                let b = fb.checked_mul(&y[j].1).ok_or(Overflow)?;
                let v = a.checked_sub(&b).ok_or(Overflow)?;
                if !v.is_zero() {
                    out.push((x[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        Ok(out)
    }

    fn normalize(row: &mut SparseRow<T>) -> Result<(), Overflow> {
        let mut g = row[0].1.gcd(&row[0].1);
        for (_, v) in row.iter().skip(1) {
            if g.is_one() {
                break;
            }
            g = g.gcd(v);
        }
        let flip = row[0].1.is_negative();
        if !g.is_one() {
            for (_, v) in row.iter_mut() {
                *v = v.div_exact(&g);
            }
        }
        if flip {
            for (_, v) in row.iter_mut() {
                *v = v.checked_neg().ok_or(Overflow)?;
            }
        }
        Ok(())
    }

    /// Returns whether `row` enlarged the span.
    fn insert(&mut self, mut row: SparseRow<T>) -> Result<bool, Overflow> {
        loop {
            let Some((lead, a)) = row.first().cloned() else {
                return Ok(false);
            };
            match self.pivot_row.get(&lead) {
                Some(&b) => {
                    let p = &self.rows[b][0].1;
                    let g = a.gcd(p);
                    let fa = p.div_exact(&g);
                    let fb = a.div_exact(&g);
                    row = Self::combine(&fa, &row, &fb, &self.rows[b])?;
                }
                None => {
                    Self::normalize(&mut row)?;
                    self.pivot_row.insert(lead, self.rows.len());
                    self.rows.push(row);
                    return Ok(true);
                }
            }
        }
    }
}

fn run<T: ExactInt>(
    ncols: usize,
    gens: &[SparseRow<i64>],
    lift: impl Fn(i64) -> T,
) -> Result<Vec<SparseRow<T>>, Overflow> {
    let mut e = IntEchelon::<T>::new();
    for g in gens {
        if e.rows.len() == ncols {
            break;
        }
        e.insert(g.iter().map(|(c, v)| (*c, lift(*v))).collect())?;
    }
    Ok(e.rows)
}

/// Echelon basis (distinct leading columns) of the span of `gens`.
pub fn echelon_basis(ncols: usize, gens: &[SparseRow<i64>]) -> Vec<SparseRow<BigInt>> {
    match run::<i64>(ncols, gens, |v| v) {
        Ok(rows) => rows.into_iter().map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect()).collect(),
        Err(Overflow) => match run::<BigInt>(ncols, gens, BigInt::from) {
            Ok(rows) => rows,
            Err(Overflow) => unreachable!("big integers do not overflow"),
        },
    }
}

/// Dimension of the span of `gens`.
pub fn span_dimension(ncols: usize, gens: &[SparseRow<i64>]) -> usize {
    match run::<i64>(ncols, gens, |v| v) {
        Ok(rows) => rows.len(),
        Err(Overflow) => echelon_basis(ncols, gens).len(),
    }
}

/// Reduced row echelon form over Q, rows sorted by pivot column, pivots 1.
pub fn reduced_echelon(rows: Vec<SparseRow<BigInt>>) -> Vec<SparseRow<BigRational>> {
    let mut rows: Vec<SparseRow<BigRational>> = rows
        .into_iter()
        .filter(|r| !r.is_empty())
        .map(|r| {
            let lead = BigRational::from_integer(r[0].1.clone());
            r.into_iter().map(|(c, v)| (c, BigRational::from_integer(v) / &lead)).collect()
        })
        .collect();
    rows.sort_by_key(|r| r[0].0);
    for i in (0..rows.len()).rev() {
        let pivot = rows[i][0].0;
        let (upper, lower) = rows.split_at_mut(i);
        let pr = &lower[0];
        for row in upper.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&pivot, |e| e.0) {
                let f = row[pos].1.clone();
                *row = axpy(row, &f, pr);
            }
        }
    }
    rows
}

/// `x - f * y` over Q.
pub fn axpy(x: &SparseRow<BigRational>, f: &BigRational, y: &SparseRow<BigRational>) -> SparseRow<BigRational> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, -(f * &y[j].1)));
            j += 1;
        } else {
            let v = &x[i].1 - f * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
