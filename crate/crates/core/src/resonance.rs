//! Cohomology of `(OS, e_lambda ^ -)` at rational points and evidence for
//! components of the first resonance variety.

use std::fmt;
use std::str::FromStr;

use num::{BigRational, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloration::{is_regular, Coloration};
use crate::error::{check_capacity, Error, Result};
use crate::exterior::ExteriorElement;
use crate::field::{int, parse_rational, Matrix, RationalMatrix};
use crate::matroid::Matroid;
use crate::os::{span_of_boundaries, GradedSubspace};
use crate::par::{self, Exec};
use crate::subset::ElementSet;

pub const RESONANCE_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LambdaVector(pub Vec<BigRational>);

impl LambdaVector {
    pub fn from_ints(v: &[i64]) -> Self {
        LambdaVector(v.iter().map(|&x| int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        LambdaVector(self.0.iter().map(|x| x * c).collect())
    }

    /// `lambda'_(perm[i]) = lambda_i`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = vec![BigRational::zero(); self.len()];
        for (i, x) in self.0.iter().enumerate() {
            out[perm[i]] = x.clone();
        }
        LambdaVector(out)
    }
}

impl FromStr for LambdaVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',').map(parse_rational).collect::<Result<Vec<_>>>().map(LambdaVector)
    }
}

impl fmt::Display for LambdaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResonanceReport {
    pub p: usize,
    pub kernel: usize,
    pub image: usize,
    pub h: usize,
}

impl ResonanceReport {
    pub fn member(&self) -> bool {
        self.h > 0
    }
}

/// Quotient bases of `OS_0..=OS_r` for one matroid.
pub struct ResonanceContext {
    m: Matroid,
    ideals: Vec<GradedSubspace>,
}

impl ResonanceContext {
    pub fn new(m: &Matroid) -> Result<Self> {
        check_capacity("resonance", RESONANCE_LIMIT, m.n())?;
        let ideals = par::map(Exec::default(), (0..=m.rank()).collect(), |p| {
            span_of_boundaries(m.n(), m.circuits(), p, Exec::Sequential)
        });
        Ok(ResonanceContext { m: m.clone(), ideals })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.m
    }

    fn check_lambda(&self, lambda: &LambdaVector) -> Result<()> {
        if lambda.len() != self.m.n() {
            return Err(Error::InvalidArgument(format!(
                "lambda has {} entries, matroid has {} elements",
                lambda.len(),
                self.m.n()
            )));
        }
        if lambda.is_zero() {
            return Err(Error::InvalidArgument("lambda = 0".into()));
        }
        Ok(())
    }

    /// Matrix of `e_lambda ^ - : OS_p -> OS_(p+1)` in quotient coordinates.
    pub fn multiplication(&self, lambda: &LambdaVector, p: usize) -> RationalMatrix {
        let n = self.m.n();
        let src = &self.ideals[p];
        let Some(dst) = self.ideals.get(p + 1) else {
            return Matrix::zeros(0, src.codim());
        };
        let e = ExteriorElement::linear(&lambda.0);
        let cols: Vec<Vec<BigRational>> = src
            .quotient_monomials()
            .into_iter()
            .map(|x| {
                let prod = e.wedge(&ExteriorElement::monomial(n, x, int(1)));
                dst.quotient_coords(&dst.to_row(&prod))
            })
            .collect();
        if cols.is_empty() {
            return Matrix::zeros(dst.codim(), 0);
        }
        Matrix::from_columns(dst.codim(), cols).expect("uniform column length")
    }

    /// `dim H^p` of the Aomoto complex, `0 <= p <= r - 1`.
    pub fn hp_dim(&self, lambda: &LambdaVector, p: usize) -> Result<ResonanceReport> {
        self.check_lambda(lambda)?;
        let r = self.m.rank();
        if p + 1 > r {
            return Err(Error::InvalidArgument(format!("degree {p} outside 0..={}", r as isize - 1)));
        }
        let out = self.multiplication(lambda, p);
        let dim_p = self.ideals[p].codim();
        let kernel = dim_p - out.rank();
        let image = if p == 0 {
            0
        } else {
            let inc = self.multiplication(lambda, p - 1);
            let square = out.mul(&inc).expect("composable");
            assert!(square.is_zero(), "e_lambda ^ e_lambda acted nontrivially");
            inc.rank()
        };
        Ok(ResonanceReport { p, kernel, image, h: kernel - image })
    }

    pub fn r1_membership(&self, lambda: &LambdaVector) -> Result<bool> {
        Ok(self.hp_dim(lambda, 1)?.member())
    }
}

pub fn hp_dim(m: &Matroid, lambda: &LambdaVector, p: usize) -> Result<ResonanceReport> {
    ResonanceContext::new(m)?.hp_dim(lambda, p)
}

pub fn r1_membership(m: &Matroid, lambda: &LambdaVector) -> Result<bool> {
    ResonanceContext::new(m)?.r1_membership(lambda)
}

/// `{ lambda : supp lambda in X, sum over X = 0 }` for a line `X` with `|X| >= 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalComponent {
    pub flat: ElementSet,
    pub basis: Vec<LambdaVector>,
}

impl LocalComponent {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// One component per line with at least three points. In a non-simple matroid
/// the flat may carry parallel elements; every zero-sum vector supported on it
/// still lies in the first resonance variety.
pub fn local_components(m: &Matroid) -> Vec<LocalComponent> {
    let n = m.n();
    m.long_lines()
        .into_iter()
        .map(|flat| {
            let idx = flat.indices();
            let last = *idx.last().expect("long line");
            let basis = idx[..idx.len() - 1]
                .iter()
                .map(|&i| {
                    let mut v = vec![BigRational::zero(); n];
                    v[i] = int(1);
                    v[last] = int(-1);
                    LambdaVector(v)
                })
                .collect();
            LocalComponent { flat, basis }
        })
        .collect()
}

/// A random nonzero rational combination of `basis` with small integer weights.
pub fn random_combination(basis: &[LambdaVector], rng: &mut impl Rng) -> LambdaVector {
    let n = basis[0].len();
    loop {
        let mut v = vec![BigRational::zero(); n];
        for b in basis {
            let c = int(rng.gen_range(-6..=6));
            for (x, y) in v.iter_mut().zip(&b.0) {
                *x += &c * y;
            }
        }
        let v = LambdaVector(v);
        if !v.is_zero() {
            return v;
        }
    }
}

#[derive(Clone, Debug)]
pub struct CandidateCheck {
    pub label: String,
    pub lambda: LambdaVector,
    pub h1: usize,
}

#[derive(Clone, Debug)]
pub struct CandidateReport {
    pub basis: Vec<LambdaVector>,
    pub checks: Vec<CandidateCheck>,
}

impl CandidateReport {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn all_members(&self) -> bool {
        self.checks.iter().all(|c| c.h1 > 0)
    }
}

/// Solutions of "constant on classes, zero sum on every multicolored line",
/// with `H^1` checked at each basis vector and at one random combination.
/// Reports membership facts only; it never claims the space is a component.
pub fn coloration_candidate_space(m: &Matroid, pi: &Coloration, seed: u64) -> Result<CandidateReport> {
    let k = pi.k();
    if k < 3 {
        return Err(Error::Precondition(format!("coloration has {k} classes, need at least 3")));
    }
    if !is_regular(m, pi)? {
        return Err(Error::Precondition("coloration is not regular".into()));
    }
    let ctx = ResonanceContext::new(m)?;
    let lines: Vec<ElementSet> = if m.rank() < 2 { Vec::new() } else { m.flats_of_rank(2)? };
    let rows: Vec<Vec<BigRational>> = lines
        .iter()
        .filter(|x| pi.classes_meeting(**x) > 1)
        .map(|x| pi.classes().iter().map(|c| int(c.intersection(*x).len() as i64)).collect())
        .collect();
    let weights: Vec<Vec<BigRational>> =
        if rows.is_empty() { RationalMatrix::zeros(0, k).nullspace() } else { Matrix::from_rows(rows)?.nullspace() };
    let assignment = pi.assignment();
    let basis: Vec<LambdaVector> =
        weights.iter().map(|w| LambdaVector(assignment.iter().map(|&c| w[c].clone()).collect())).collect();
    let mut samples: Vec<(String, LambdaVector)> =
        basis.iter().enumerate().map(|(i, b)| (format!("basis[{i}]"), b.clone())).collect();
    if !basis.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        samples.push(("random".into(), random_combination(&basis, &mut rng)));
    }
    let checks = par::map(Exec::default(), samples, |(label, lambda)| {
        let h1 = ctx.hp_dim(&lambda, 1).map(|r| r.h);
        (label, lambda, h1)
    })
    .into_iter()
    .map(|(label, lambda, h1)| Ok(CandidateCheck { label, lambda, h1: h1? }))
    .collect::<Result<Vec<_>>>()?;
    Ok(CandidateReport { basis, checks })
}
