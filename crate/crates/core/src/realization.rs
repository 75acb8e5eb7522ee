//! Generators for the named families and their exact realizations.
//!
//! Affine points `(x, y)` become `(1, x, y)`; affine lines `ax + by = c`
//! become `(a, b, -c)`. Lines of the regular polygons live in `Q(sqrt 3)`
//! (hexagon, 12-gon) or `Q(sqrt 2)` (octagon).

use std::fmt;
use std::str::FromStr;

use num::BigRational;

use crate::error::{Error, Result};
use crate::field::{int, rat, Field, Matrix, QuadExt, QuadMatrix, RationalMatrix};
use crate::matroid::{uniform, Matroid, VectorConfig};
use crate::subset::{k_subsets, ElementSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Uniform { r: usize, n: usize },
    P5,
    M1,
    M2,
    Ngon(usize),
    A112,
    Ag(usize),
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown family {s:?}"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let (tag, arg) = s.split_once(':').map_or((s, None), |(a, b)| (a, Some(b)));
        let spec = match (tag.trim(), arg) {
            ("p5", None) => FamilySpec::P5,
            ("m1", None) => FamilySpec::M1,
            ("m2", None) => FamilySpec::M2,
            ("a112", None) => FamilySpec::A112,
            ("ngon", Some(k)) => FamilySpec::Ngon(num(k)?),
            ("ag", Some(q)) => FamilySpec::Ag(num(q)?),
            ("u", Some(rn)) => {
                let (r, n) = rn.split_once(',').ok_or_else(bad)?;
                FamilySpec::Uniform { r: num(r)?, n: num(n)? }
            }
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Uniform { r, n } => write!(f, "u:{r},{n}"),
            FamilySpec::P5 => write!(f, "p5"),
            FamilySpec::M1 => write!(f, "m1"),
            FamilySpec::M2 => write!(f, "m2"),
            FamilySpec::Ngon(k) => write!(f, "ngon:{k}"),
            FamilySpec::A112 => write!(f, "a112"),
            FamilySpec::Ag(q) => write!(f, "ag:{q}"),
        }
    }
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Ngon(k) if k < 3 => Err(Error::InvalidArgument(format!("ngon needs k >= 3, got {k}"))),
            FamilySpec::Ngon(k) if ![3, 4, 6].contains(&k) => {
                Err(Error::InvalidArgument(format!("ngon is implemented for k in {{3, 4, 6}}, got {k}")))
            }
            FamilySpec::Ag(q) if !(2..=5).contains(&q) => {
                Err(Error::InvalidArgument(format!("ag needs q in {{2, 3, 4, 5}}, got {q}")))
            }
            FamilySpec::Uniform { r, n } if r > n || (r < 2 && n > r) => {
                Err(Error::InvalidArgument(format!("U({r},{n}) is not a simple matroid")))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Generated {
    pub matroid: Matroid,
    pub realization: Option<VectorConfig>,
}

pub fn generate(spec: FamilySpec) -> Result<Generated> {
    spec.validate()?;
    let (matroid, realization) = match spec {
        FamilySpec::Uniform { r, n } => (uniform(r, n)?, Some(VectorConfig::Rational(moment_curve(r, n)))),
        FamilySpec::P5 => (p5()?, Some(VectorConfig::Rational(p5_matrix()))),
        FamilySpec::M1 => (m1()?, Some(VectorConfig::Rational(m1_matrix()))),
        FamilySpec::M2 => (m2()?, Some(VectorConfig::Rational(m2_matrix()))),
        FamilySpec::Ngon(k) => {
            let a = ngon_matrix(k);
            (
                Matroid::from_vectors(format!("ngon({k})"), VectorConfig::Quadratic(a.clone()))?,
                Some(VectorConfig::Quadratic(a)),
            )
        }
        FamilySpec::A112 => {
            let a = a112_matrix();
            (Matroid::from_vectors("A(12,1)", VectorConfig::Quadratic(a.clone()))?, Some(VectorConfig::Quadratic(a)))
        }
        FamilySpec::Ag(q) => (ag(q)?, None),
    };
    if let Some(config) = &realization {
        if matroid.n() <= 12 {
            let realized = Matroid::from_vectors(matroid.name(), config.clone())?;
            if !realized.same_rank_function(&matroid) {
                return Err(Error::Postcondition(format!("realization of {spec} does not match its matroid")));
            }
        }
    }
    Ok(Generated { matroid, realization })
}

fn set(labels: &[usize]) -> ElementSet {
    ElementSet::from_labels(labels)
}

/// Five points in the plane with lines `{1,2,3}` and `{3,4,5}`.
pub fn p5() -> Result<Matroid> {
    Matroid::from_circuits("P5", 5, vec![set(&[1, 2, 3]), set(&[3, 4, 5]), set(&[1, 2, 4, 5])])
}

/// Free extension of `U(2,3) + U(2,3)`.
pub fn m1() -> Result<Matroid> {
    let u23 = uniform(2, 3)?;
    Ok(u23.direct_sum(&u23)?.free_extension()?.with_name("M1"))
}

/// Free extension of `P5 + coloop`.
pub fn m2() -> Result<Matroid> {
    Ok(p5()?.direct_sum(&uniform(1, 1)?)?.free_extension()?.with_name("M2"))
}

fn rational_columns(cols: &[Vec<i64>]) -> RationalMatrix {
    let dim = cols[0].len();
    Matrix::from_columns(dim, cols.iter().map(|c| c.iter().map(|&x| int(x)).collect()).collect()).unwrap()
}

/// Columns `(1, i, i^2, ...)` for `i = 1..=n`: every `r` of them are independent.
fn moment_curve(r: usize, n: usize) -> RationalMatrix {
    let cols: Vec<Vec<i64>> = (1..=n as i64).map(|i| (0..r as u32).map(|p| i.pow(p)).collect()).collect();
    if r == 0 {
        return Matrix::zeros(0, n);
    }
    rational_columns(&cols)
}

fn p5_matrix() -> RationalMatrix {
    rational_columns(&[vec![1, 1, 0], vec![1, 2, 0], vec![1, 0, 0], vec![1, 0, 1], vec![1, 0, 2]])
}

/// Two skew 3-point lines in affine 3-space and a generic point.
fn m1_matrix() -> RationalMatrix {
    rational_columns(&[
        vec![1, 0, 0, 0],
        vec![1, 1, 0, 0],
        vec![1, 2, 0, 0],
        vec![1, 0, 0, 1],
        vec![1, 0, 1, 1],
        vec![1, 0, 2, 1],
        vec![1, 2, 7, 29],
    ])
}

/// Two concurrent 3-point lines in the plane `z = 0`, a point off that plane
/// and a generic point.
fn m2_matrix() -> RationalMatrix {
    rational_columns(&[
        vec![1, 1, 0, 0],
        vec![1, 2, 0, 0],
        vec![1, 0, 0, 0],
        vec![1, 0, 1, 0],
        vec![1, 0, 2, 0],
        vec![1, 1, 1, 1],
        vec![1, 2, 7, 29],
    ])
}

type Point = (QuadExt, QuadExt);

fn q(a: BigRational, b: BigRational, d: u32) -> QuadExt {
    QuadExt::new(a, b, d)
}

/// `(cos(pi j / k), sin(pi j / k))` for `k in {3, 4, 6}`.
fn polygon_vertex(k: usize, j: usize) -> Point {
    let half = || rat(1, 2);
    let zero = || int(0);
    let one = || int(1);
    match k {
        3 | 6 => {
            // Multiples of 30 degrees in Q(sqrt 3).
            let step = if k == 3 { 2 * j } else { j } % 12;
            let cos30 = |s: usize| -> QuadExt {
                match s % 12 {
                    0 => q(one(), zero(), 3),
                    1 | 11 => q(zero(), half(), 3),
                    2 | 10 => q(half(), zero(), 3),
                    3 | 9 => q(zero(), zero(), 3),
                    4 | 8 => q(-half(), zero(), 3),
                    5 | 7 => q(zero(), -half(), 3),
                    _ => q(-one(), zero(), 3),
                }
            };
            (cos30(step), cos30((step + 9) % 12))
        }
        4 => {
            let cos45 = |s: usize| -> QuadExt {
                match s % 8 {
                    0 => q(one(), zero(), 2),
                    1 | 7 => q(zero(), half(), 2),
                    2 | 6 => q(zero(), zero(), 2),
                    3 | 5 => q(zero(), -half(), 2),
                    _ => q(-one(), zero(), 2),
                }
            };
            (cos45(j % 8), cos45((j + 6) % 8))
        }
        _ => unreachable!("validated polygon order"),
    }
}

/// `(a, b, -c)` for the affine line `ax + by = c` through `p` and `q`.
fn line_through(p: &Point, q: &Point) -> Vec<QuadExt> {
    let a = q.1.sub(&p.1);
    let b = p.0.sub(&q.0);
    let c = a.mul(&p.0).add(&b.mul(&p.1));
    vec![a, b, c.neg()]
}

fn midpoint(p: &Point, q: &Point) -> Point {
    let h = rat(1, 2);
    (p.0.add(&q.0).scale(&h), p.1.add(&q.1).scale(&h))
}

fn quad_columns(cols: Vec<Vec<QuadExt>>) -> QuadMatrix {
    Matrix::from_columns(3, cols).unwrap()
}

/// Sides `v_j v_(j+1)` of the regular `2k`-gon (labels `1..=2k`), then the long
/// diagonals `v_j v_(j+k)` (labels `2k+1..=3k`).
pub fn ngon_matrix(k: usize) -> QuadMatrix {
    let v: Vec<Point> = (0..2 * k).map(|j| polygon_vertex(k, j)).collect();
    let mut cols: Vec<Vec<QuadExt>> = (0..2 * k).map(|j| line_through(&v[j], &v[(j + 1) % (2 * k)])).collect();
    cols.extend((0..k).map(|j| line_through(&v[j], &v[j + k])));
    quad_columns(cols)
}

/// Hexagon sides (1..=6), long diagonals (7..=9) and the three axes through
/// midpoints of opposite sides (10..=12).
pub fn a112_matrix() -> QuadMatrix {
    let v: Vec<Point> = (0..6).map(|j| polygon_vertex(3, j)).collect();
    let mut cols: Vec<Vec<QuadExt>> = (0..6).map(|j| line_through(&v[j], &v[(j + 1) % 6])).collect();
    cols.extend((0..3).map(|j| line_through(&v[j], &v[j + 3])));
    let origin = (q(int(0), int(0), 3), q(int(0), int(0), 3));
    cols.extend((0..3).map(|j| line_through(&origin, &midpoint(&v[j], &v[j + 1]))));
    quad_columns(cols)
}

/// Arithmetic in `GF(q)`, `q in {2, 3, 4, 5}`; `GF(4) = {0, 1, w, w + 1}`.
#[derive(Clone, Copy, Debug)]
pub struct Gf {
    q: usize,
}

const GF4_MUL: [[usize; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl Gf {
    pub fn new(q: usize) -> Result<Self> {
        if (2..=5).contains(&q) {
            Ok(Gf { q })
        } else {
            Err(Error::InvalidArgument(format!("GF({q}) is not supported")))
        }
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        if self.q == 4 {
            a ^ b
        } else {
            (a + b) % self.q
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        if self.q == 4 {
            GF4_MUL[a][b]
        } else {
            a * b % self.q
        }
    }
}

/// Lines of `AG(2, q)` as sets of point indices `x q + y`, grouped by
/// parallel class: first the `q` vertical lines, then one class per slope.
pub fn ag_lines(q: usize) -> Result<Vec<Vec<ElementSet>>> {
    let f = Gf::new(q)?;
    let pt = |x: usize, y: usize| x * q + y;
    let mut classes = vec![(0..q).map(|x| ElementSet::from_indices((0..q).map(|y| pt(x, y)))).collect::<Vec<_>>()];
    for m in 0..q {
        classes.push((0..q).map(|b| ElementSet::from_indices((0..q).map(|x| pt(x, f.add(f.mul(m, x), b))))).collect());
    }
    Ok(classes)
}

/// The points of `AG(2, q)`; rank 3, lines are the affine lines.
pub fn ag(q: usize) -> Result<Matroid> {
    let lines: Vec<ElementSet> = ag_lines(q)?.into_iter().flatten().collect();
    let n = q * q;
    let mut circuits: Vec<ElementSet> = Vec::new();
    let collinear = |s: ElementSet| lines.iter().any(|l| s.is_subset(*l));
    for t in k_subsets(n, 3) {
        if collinear(t) {
            circuits.push(t);
        }
    }
    for f in k_subsets(n, 4) {
        if f.iter().all(|e| !collinear(f.remove(e))) {
            circuits.push(f);
        }
    }
    Matroid::from_circuits(format!("AG(2,{q})"), n, circuits)
}
