//! Orlik-Solomon ideals degree by degree, Hilbert series, the free-extension
//! ideal identity and degree-one maps between OS algebras.
//!
//! Degree-`p` vectors are sparse rows over the `p`-subsets of `[n]` in lex
//! order. Ideal components are kept in reduced row echelon form, so the
//! non-pivot columns give a basis of the quotient `OS_p`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use itertools::Itertools;
use num::{BigRational, One, Zero};

use crate::echelon::{axpy, echelon_basis, reduced_echelon, SparseRow};
use crate::error::{check_capacity, Error, Result};
use crate::exterior::{boundary_terms, wedge_sign, ExteriorElement};
use crate::field::{int, parse_rational, RationalMatrix};
use crate::matroid::Matroid;
use crate::par::{self, Exec};
use crate::subset::{k_subsets, ElementSet};

pub const OS_LIMIT: usize = 14;
pub const NBC_LIMIT: usize = 20;
pub const FREE_EXT_LIMIT: usize = 10;
pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000;

/// The `p`-subsets of `[n]` in lex order with their positions.
#[derive(Debug)]
pub struct SubsetIndex {
    sets: Vec<ElementSet>,
    pos: HashMap<ElementSet, usize>,
}

impl SubsetIndex {
    pub fn new(n: usize, p: usize) -> Self {
        let sets = k_subsets(n, p);
        let pos = sets.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        SubsetIndex { sets, pos }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn set(&self, i: usize) -> ElementSet {
        self.sets[i]
    }

    pub fn index_of(&self, x: ElementSet) -> usize {
        self.pos[&x]
    }
}

/// A subspace of `E_p` in reduced row echelon form.
#[derive(Debug, Clone)]
pub struct GradedSubspace {
    n: usize,
    p: usize,
    index: Arc<SubsetIndex>,
    rows: Vec<SparseRow<BigRational>>,
    pivot_row: HashMap<usize, usize>,
    free: Vec<usize>,
}

impl GradedSubspace {
    fn from_rref(n: usize, p: usize, index: Arc<SubsetIndex>, rows: Vec<SparseRow<BigRational>>) -> Self {
        let pivot_row: HashMap<usize, usize> = rows.iter().enumerate().map(|(i, r)| (r[0].0, i)).collect();
        let free = (0..index.len()).filter(|c| !pivot_row.contains_key(c)).collect();
        GradedSubspace { n, p, index, rows, pivot_row, free }
    }

    pub fn degree(&self) -> usize {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Dimension of `E_p` divided by this subspace.
    pub fn codim(&self) -> usize {
        self.free.len()
    }

    pub fn rows(&self) -> &[SparseRow<BigRational>] {
        &self.rows
    }

    pub fn index(&self) -> &SubsetIndex {
        &self.index
    }

    /// Columns outside the pivots, i.e. the monomials spanning the quotient.
    pub fn quotient_monomials(&self) -> Vec<ElementSet> {
        self.free.iter().map(|&c| self.index.set(c)).collect()
    }

    /// Sparse row of a homogeneous degree-`p` element.
    pub fn to_row(&self, x: &ExteriorElement) -> SparseRow<BigRational> {
        let mut row: SparseRow<BigRational> = x
            .terms()
            .map(|(s, c)| {
                assert_eq!(s.len(), self.p, "element is not homogeneous of degree {}", self.p);
                (self.index.index_of(s), c.clone())
            })
            .collect();
        row.sort_by_key(|e| e.0);
        row
    }

    /// Remainder of `row` after eliminating every pivot column.
    pub fn reduce(&self, row: &SparseRow<BigRational>) -> SparseRow<BigRational> {
        let mut r = row.clone();
        let mut k = 0;
        while k < r.len() {
            let (c, v) = (r[k].0, r[k].1.clone());
            if let Some(&i) = self.pivot_row.get(&c) {
                r = axpy(&r, &v, &self.rows[i]);
                // Pivot rows only touch columns at or right of their pivot.
                k = r.partition_point(|e| e.0 < c);
            } else {
                k += 1;
            }
        }
        r
    }

    pub fn contains_row(&self, row: &SparseRow<BigRational>) -> bool {
        self.reduce(row).is_empty()
    }

    pub fn contains(&self, x: &ExteriorElement) -> bool {
        debug_assert_eq!(x.n(), self.n);
        self.contains_row(&self.to_row(x))
    }

    /// Coordinates of the class of `row` in `E_p / self`, indexed like
    /// [`GradedSubspace::quotient_monomials`].
    pub fn quotient_coords(&self, row: &SparseRow<BigRational>) -> Vec<BigRational> {
        let r = self.reduce(row);
        let mut out = vec![BigRational::zero(); self.free.len()];
        for (c, v) in r {
            let k = self.free.binary_search(&c).expect("reduced rows avoid pivot columns");
            out[k] = v;
        }
        out
    }
}

/// Row of `e_S ^ d e_G` over the `p`-subsets, `p = |S| + |G| - 1`.
fn wedge_boundary_row(index: &SubsetIndex, s: ElementSet, g: ElementSet) -> SparseRow<i64> {
    let mut row: SparseRow<i64> = boundary_terms(g)
        .filter_map(|(t, sign)| wedge_sign(s, t).map(|w| (index.index_of(s.union(t)), sign * w)))
        .collect();
    row.sort_by_key(|e| e.0);
    row
}

/// `span { e_S ^ d e_G : G in gens, S subset of [n] }` in degree `p`.
/// Sets `S` meeting `G` twice give zero and are skipped.
pub fn span_of_boundaries(n: usize, gens: &[ElementSet], p: usize, exec: Exec) -> GradedSubspace {
    let index = Arc::new(SubsetIndex::new(n, p));
    let rows_per_gen = par::map(exec, gens.to_vec(), |g| {
        if g.is_empty() || g.len() > p + 1 {
            return Vec::new();
        }
        k_subsets(n, p + 1 - g.len())
            .into_iter()
            .filter(|s| s.intersection(g).len() <= 1)
            .map(|s| wedge_boundary_row(&index, s, g))
            .filter(|r| !r.is_empty())
            .collect::<Vec<_>>()
    });
    let gens_rows: Vec<SparseRow<i64>> = rows_per_gen.into_iter().flatten().collect();
    let rows = reduced_echelon(echelon_basis(index.len(), &gens_rows));
    GradedSubspace::from_rref(n, p, index, rows)
}

/// Degree-`p` component of the Orlik-Solomon ideal `I(M)`.
pub fn ideal_component(m: &Matroid, p: usize) -> Result<GradedSubspace> {
    ideal_component_with(m, p, Exec::default())
}

pub fn ideal_component_with(m: &Matroid, p: usize, exec: Exec) -> Result<GradedSubspace> {
    check_capacity("ideal_component", OS_LIMIT, m.n())?;
    if p > m.n() {
        return Err(Error::InvalidArgument(format!("degree {p} exceeds n = {}", m.n())));
    }
    Ok(span_of_boundaries(m.n(), m.circuits(), p, exec))
}

/// `dim OS_p` for `p = 0..=r`.
pub fn hilbert_series(m: &Matroid) -> Result<Vec<u64>> {
    hilbert_series_with(m, Exec::default())
}

pub fn hilbert_series_with(m: &Matroid, exec: Exec) -> Result<Vec<u64>> {
    check_capacity("hilbert_series", OS_LIMIT, m.n())?;
    let (n, r) = (m.n(), m.rank());
    let top = (r + 1).min(n);
    let dims = par::map(exec, (0..=top).collect(), |p| {
        let i = span_of_boundaries(n, m.circuits(), p, exec);
        i.codim() as u64
    });
    if r < n {
        // I_(r+1) = E_(r+1) forces I_p = E_p for every p > r.
        assert_eq!(dims[r + 1], 0, "OS algebra is nonzero above the rank");
    }
    Ok(dims[..=r].to_vec())
}

/// Number of `p`-subsets containing no broken circuit (circuit minus its least element).
pub fn nbc_oracle(m: &Matroid, p: usize) -> Result<u64> {
    check_capacity("nbc_oracle", NBC_LIMIT, m.n())?;
    let broken: Vec<ElementSet> = m.circuits().iter().map(|c| c.remove(c.min().expect("nonempty circuit"))).collect();
    Ok(k_subsets(m.n(), p).into_iter().filter(|s| broken.iter().all(|b| !b.is_subset(*s))).count() as u64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCheck {
    pub p: usize,
    pub lhs: usize,
    pub rhs: usize,
    pub sum: usize,
}

impl DegreeCheck {
    pub fn equal(&self) -> bool {
        self.lhs == self.sum && self.rhs == self.sum
    }
}

#[derive(Clone, Debug)]
pub struct FreeExtReport {
    pub degrees: Vec<DegreeCheck>,
}

impl FreeExtReport {
    pub fn equal(&self) -> bool {
        self.degrees.iter().all(DegreeCheck::equal)
    }
}

/// Compares `I(M')` for the free extension `M'` of `M` with the ideal of the
/// `(n+1)`-generator algebra generated by `I(M)` and by `d e_Y` for all
/// `(r+1)`-subsets `Y` of `[n+1]`, degree by degree.
pub fn verify_free_ext_ideal_eq(m: &Matroid) -> Result<FreeExtReport> {
    check_capacity("verify_free_ext_ideal_eq", FREE_EXT_LIMIT, m.n())?;
    let fe = m.free_extension()?;
    let n1 = fe.n();
    let lhs_gens = fe.circuits().to_vec();
    let mut rhs_gens = m.circuits().to_vec();
    rhs_gens.extend(k_subsets(n1, m.rank() + 1));
    let mut all = lhs_gens.clone();
    all.extend(rhs_gens.iter().copied());
    let degrees = par::map(Exec::default(), (0..=n1).collect(), |p| DegreeCheck {
        p,
        lhs: span_of_boundaries(n1, &lhs_gens, p, Exec::Sequential).dim(),
        rhs: span_of_boundaries(n1, &rhs_gens, p, Exec::Sequential).dim(),
        sum: span_of_boundaries(n1, &all, p, Exec::Sequential).dim(),
    });
    Ok(FreeExtReport { degrees })
}

/// A linear map on degree one; column `i` is the image of `e_(i+1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeOneMap {
    matrix: RationalMatrix,
}

impl DegreeOneMap {
    pub fn new(matrix: RationalMatrix) -> Self {
        DegreeOneMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        DegreeOneMap { matrix: RationalMatrix::identity(n) }
    }

    /// `e_i -> e_(perm[i])`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = RationalMatrix::zeros(n, n);
        for (i, &j) in perm.iter().enumerate() {
            m.set(j, i, BigRational::one());
        }
        DegreeOneMap { matrix: m }
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn inverse(&self) -> Option<Self> {
        self.matrix.inverse().map(DegreeOneMap::new)
    }

    fn image_of_generator(&self, i: usize) -> ExteriorElement {
        ExteriorElement::linear(&self.matrix.column(i))
    }

    /// Image under the induced algebra map.
    pub fn apply(&self, x: &ExteriorElement) -> ExteriorElement {
        let m = self.target_dim();
        let gens: Vec<ExteriorElement> = (0..self.source_dim()).map(|i| self.image_of_generator(i)).collect();
        let mut out = ExteriorElement::zero(m);
        for (s, c) in x.terms() {
            let img = s.iter().fold(ExteriorElement::one(m), |acc, i| acc.wedge(&gens[i]));
            out = out.add(&img.scale(c));
        }
        out
    }

    /// Rows of `"p/q"` strings.
    pub fn to_json(&self) -> String {
        let rows: Vec<Vec<String>> =
            self.matrix.row_vecs().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        serde_json::to_string(&rows).expect("strings serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let rows: Vec<Vec<String>> = serde_json::from_str(text).map_err(|e| Error::Parse(format!("map JSON: {e}")))?;
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(DegreeOneMap::new(RationalMatrix::from_rows(parsed)?))
    }

    /// `phi (+) 1` on one more generator.
    pub fn extend_by_identity(&self) -> Self {
        let (r, c) = (self.target_dim(), self.source_dim());
        let mut m = RationalMatrix::zeros(r + 1, c + 1);
        for i in 0..r {
            for j in 0..c {
                m.set(i, j, self.matrix.get(i, j).clone());
            }
        }
        m.set(r, c, BigRational::one());
        DegreeOneMap { matrix: m }
    }
}

/// Lazily computed ideal components of one matroid.
struct IdealCache<'a> {
    m: &'a Matroid,
    parts: Mutex<HashMap<usize, Arc<GradedSubspace>>>,
}

impl<'a> IdealCache<'a> {
    fn new(m: &'a Matroid) -> Self {
        IdealCache { m, parts: Mutex::new(HashMap::new()) }
    }

    fn get(&self, p: usize) -> Arc<GradedSubspace> {
        if let Some(g) = self.parts.lock().unwrap().get(&p) {
            return g.clone();
        }
        let g = Arc::new(span_of_boundaries(self.m.n(), self.m.circuits(), p, Exec::Sequential));
        self.parts.lock().unwrap().insert(p, g.clone());
        g
    }
}

fn boundary_of(n: usize, c: ElementSet) -> ExteriorElement {
    ExteriorElement::monomial(n, c, BigRational::one()).boundary()
}

fn carries_ideal(src: &Matroid, dst: &IdealCache<'_>, phi: &DegreeOneMap) -> bool {
    src.circuits().iter().all(|c| {
        let img = phi.apply(&boundary_of(src.n(), *c));
        dst.get(c.len() - 1).contains(&img)
    })
}

/// True iff `phi` induces a graded isomorphism `OS(m1) -> OS(m2)`.
pub fn verify_graded_map(m1: &Matroid, m2: &Matroid, phi: &DegreeOneMap) -> Result<bool> {
    let n = m1.n();
    if m2.n() != n || phi.source_dim() != n || phi.target_dim() != n {
        return Err(Error::InvalidArgument(format!(
            "map of size {}x{} between matroids on {} and {} elements",
            phi.target_dim(),
            phi.source_dim(),
            n,
            m2.n()
        )));
    }
    check_capacity("verify_graded_map", OS_LIMIT, n)?;
    let inv = phi.inverse().ok_or_else(|| Error::InvalidArgument("degree-one map is not invertible".into()))?;
    Ok(carries_ideal(m1, &IdealCache::new(m2), phi) && carries_ideal(m2, &IdealCache::new(m1), &inv))
}

/// Extends a verified `phi` by `e_(n+1) -> e_(n+1)` to the free extensions.
pub fn extend_iso_to_free_ext(m1: &Matroid, m2: &Matroid, phi: &DegreeOneMap) -> Result<DegreeOneMap> {
    if !verify_graded_map(m1, m2, phi)? {
        return Err(Error::Precondition("map does not induce an OS isomorphism".into()));
    }
    let ext = phi.extend_by_identity();
    if !verify_graded_map(&m1.free_extension()?, &m2.free_extension()?, &ext)? {
        return Err(Error::Postcondition("extended map does not induce an OS isomorphism".into()));
    }
    Ok(ext)
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub map: Option<DegreeOneMap>,
    pub candidates: u64,
    /// The whole candidate family was examined within the budget.
    pub exhausted: bool,
}

/// Bounded search for a degree-one map inducing `OS(m1) ~ OS(m2)`.
///
/// Candidates send each line of `m1` with at least three points bijectively
/// onto a line of `m2` of the same size, then translate the whole line by
/// `0` or `c (e_j - e_k)` with `c in {1, -1, 2, -2}`. Elements on no such
/// line go injectively to unused basis vectors. A miss says nothing about
/// non-isomorphism.
pub fn search_iso(m1: &Matroid, m2: &Matroid, budget: u64) -> Result<SearchOutcome> {
    let n = m1.n();
    if m2.n() != n {
        return Err(Error::Precondition(format!("ground sets differ: {n} vs {}", m2.n())));
    }
    if hilbert_series(m1)? != hilbert_series(m2)? {
        return Err(Error::Precondition("Hilbert series differ".into()));
    }
    let mut translations: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]];
    for (j, k) in (0..n).tuple_combinations() {
        for c in [1, -1, 2, -2] {
            let mut t = vec![BigRational::zero(); n];
            t[j] = int(c);
            t[k] = int(-c);
            translations.push(t);
        }
    }
    let lines1 = m1.long_lines();
    let covered = lines1.iter().fold(ElementSet::EMPTY, |a, l| a.union(*l));
    let mut search = IsoSearch {
        m1,
        lines1,
        lines2: m2.long_lines(),
        free: m1.ground().difference(covered).indices(),
        translations,
        ideal2: IdealCache::new(m2),
        ideal1: IdealCache::new(m1),
        budget,
        used: 0,
    };
    let mut cols: Vec<Option<Vec<BigRational>>> = vec![None; n];
    let found = search.lines(0, ElementSet::EMPTY, &mut cols);
    Ok(SearchOutcome { exhausted: found.is_none() && search.used < search.budget, candidates: search.used, map: found })
}

struct IsoSearch<'a> {
    m1: &'a Matroid,
    lines1: Vec<ElementSet>,
    lines2: Vec<ElementSet>,
    free: Vec<usize>,
    translations: Vec<Vec<BigRational>>,
    ideal1: IdealCache<'a>,
    ideal2: IdealCache<'a>,
    budget: u64,
    used: u64,
}

impl IsoSearch<'_> {
    fn n(&self) -> usize {
        self.m1.n()
    }

    fn unit(&self, j: usize) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.n()];
        v[j] = BigRational::one();
        v
    }

    /// Assigned columns are independent and every circuit they cover maps into `I(m2)`.
    fn consistent(&self, cols: &[Option<Vec<BigRational>>]) -> bool {
        let assigned: Vec<Vec<BigRational>> = cols.iter().flatten().cloned().collect();
        if crate::field::rank_of_rows(assigned.clone()) < assigned.len() {
            return false;
        }
        let done = ElementSet::from_indices(cols.iter().positions(Option::is_some));
        let partial = self.partial_map(cols);
        self.m1
            .circuits()
            .iter()
            .filter(|c| c.is_subset(done))
            .all(|c| self.ideal2.get(c.len() - 1).contains(&partial.apply(&boundary_of(self.n(), *c))))
    }

    fn partial_map(&self, cols: &[Option<Vec<BigRational>>]) -> DegreeOneMap {
        let n = self.n();
        let full: Vec<Vec<BigRational>> =
            cols.iter().map(|c| c.clone().unwrap_or_else(|| vec![BigRational::zero(); n])).collect();
        DegreeOneMap::new(RationalMatrix::from_columns(n, full).expect("square"))
    }

    fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.budget
    }

    fn lines(
        &mut self,
        i: usize,
        used_targets: ElementSet,
        cols: &mut Vec<Option<Vec<BigRational>>>,
    ) -> Option<DegreeOneMap> {
        if i == self.lines1.len() {
            return self.free_elements(0, ElementSet::EMPTY, cols);
        }
        let line = self.lines1[i];
        let elems = line.indices();
        for (t_idx, target) in self.lines2.clone().into_iter().enumerate() {
            if used_targets.contains(t_idx) || target.len() != line.len() {
                continue;
            }
            for perm in target.indices().into_iter().permutations(elems.len()) {
                for k in 0..self.translations.len() {
                    if !self.tick() {
                        return None;
                    }
                    let saved = cols.clone();
                    let mut clash = false;
                    for (&e, &img) in elems.iter().zip(&perm) {
                        let v: Vec<BigRational> =
                            self.unit(img).iter().zip(&self.translations[k]).map(|(a, b)| a + b).collect();
                        match &cols[e] {
                            Some(old) if *old != v => clash = true,
                            _ => cols[e] = Some(v),
                        }
                    }
                    if !clash && self.consistent(cols) {
                        if let Some(m) = self.lines(i + 1, used_targets.insert(t_idx), cols) {
                            return Some(m);
                        }
                        if self.used > self.budget {
                            return None;
                        }
                    }
                    *cols = saved;
                }
            }
        }
        None
    }

    fn free_elements(
        &mut self,
        i: usize,
        used_images: ElementSet,
        cols: &mut Vec<Option<Vec<BigRational>>>,
    ) -> Option<DegreeOneMap> {
        if i == self.free.len() {
            let phi = self.partial_map(cols);
            let inv = phi.inverse()?;
            let ok = carries_ideal(self.m1, &self.ideal2, &phi) && carries_ideal(self.ideal2.m, &self.ideal1, &inv);
            return ok.then_some(phi);
        }
        let e = self.free[i];
        for j in 0..self.n() {
            if used_images.contains(j) {
                continue;
            }
            if !self.tick() {
                return None;
            }
            cols[e] = Some(self.unit(j));
            if self.consistent(cols) {
                if let Some(m) = self.free_elements(i + 1, used_images.insert(j), cols) {
                    return Some(m);
                }
            }
            cols[e] = None;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use crate::matroid::uniform;
    use crate::realization::p5;

    #[test]
    fn ideal_components_of_small_matroids() {
        let u23 = uniform(2, 3).unwrap();
        let i2 = ideal_component(&u23, 2).unwrap();
        assert_eq!(i2.dim(), 1);
        let d = boundary_of(3, ElementSet::from_labels(&[1, 2, 3]));
        assert!(i2.contains(&d));
        assert_eq!(ideal_component(&u23, 3).unwrap().dim(), 1);
        let u33 = uniform(3, 3).unwrap();
        for p in 0..=3 {
            assert_eq!(ideal_component(&u33, p).unwrap().dim(), 0);
        }
    }

    #[test]
    fn hilbert_series_examples() {
        assert_eq!(hilbert_series(&uniform(2, 3).unwrap()).unwrap(), vec![1, 3, 2]);
        assert_eq!(hilbert_series(&uniform(3, 3).unwrap()).unwrap(), vec![1, 3, 3, 1]);
        assert_eq!(hilbert_series(&Matroid::empty()).unwrap(), vec![1]);
        assert_eq!(nbc_oracle(&uniform(2, 3).unwrap(), 2).unwrap(), 2);
        assert_eq!(nbc_oracle(&uniform(3, 3).unwrap(), 3).unwrap(), 1);
    }

    #[test]
    fn quotient_coordinates_kill_the_ideal() {
        let m = p5().unwrap();
        let i2 = ideal_component(&m, 2).unwrap();
        assert_eq!(i2.codim() as u64, nbc_oracle(&m, 2).unwrap());
        for r in i2.rows() {
            assert!(i2.quotient_coords(r).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn free_extension_identity_for_u23() {
        let rep = verify_free_ext_ideal_eq(&uniform(2, 3).unwrap()).unwrap();
        assert!(rep.equal());
        assert_eq!(rep.degrees.len(), 5);
    }

    #[test]
    fn graded_maps() {
        let u23 = uniform(2, 3).unwrap();
        assert!(verify_graded_map(&u23, &u23, &DegreeOneMap::identity(3)).unwrap());
        assert!(verify_graded_map(&u23, &u23, &DegreeOneMap::permutation(&[1, 0, 2])).unwrap());
        let singular = DegreeOneMap::new(RationalMatrix::zeros(3, 3));
        assert!(verify_graded_map(&u23, &u23, &singular).is_err());
        let a = u23.direct_sum(&u23).unwrap();
        let b = p5().unwrap().direct_sum(&uniform(1, 1).unwrap()).unwrap();
        assert!(!verify_graded_map(&a, &b, &DegreeOneMap::identity(6)).unwrap());
        let ext = extend_iso_to_free_ext(&u23, &u23, &DegreeOneMap::identity(3)).unwrap();
        assert_eq!(ext, DegreeOneMap::identity(4));
    }

    #[test]
    fn search_handles_the_rank_four_pair() {
        let u23 = uniform(2, 3).unwrap();
        let a = u23.direct_sum(&u23).unwrap();
        let b = p5().unwrap().direct_sum(&uniform(1, 1).unwrap()).unwrap();
        let out = search_iso(&a, &b, DEFAULT_SEARCH_BUDGET).unwrap();
        let phi = out.map.expect("map within budget");
        assert!(verify_graded_map(&a, &b, &phi).unwrap());
        let ext = extend_iso_to_free_ext(&a, &b, &phi).unwrap();
        assert_eq!(ext.source_dim(), 7);
    }

    #[test]
    fn search_finds_identity_for_equal_inputs() {
        let u23 = uniform(2, 3).unwrap();
        let out = search_iso(&u23, &u23, 100).unwrap();
        assert_eq!(out.map, Some(DegreeOneMap::identity(3)));
        assert!(search_iso(&u23, &uniform(3, 3).unwrap(), 10).is_err());
    }

    #[test]
    fn maps_round_trip_through_json() {
        let phi =
            DegreeOneMap::new(RationalMatrix::from_rows(vec![vec![int(1), rat(-1, 2)], vec![int(0), int(3)]]).unwrap());
        let text = phi.to_json();
        assert_eq!(text, r#"[["1","-1/2"],["0","3"]]"#);
        assert_eq!(DegreeOneMap::from_json(&text).unwrap(), phi);
        assert!(DegreeOneMap::from_json("[[\"x\"]]").is_err());
    }
}
