mod common;

use common::*;
use num::BigRational;
use osmat::exterior::ExteriorElement;
use osmat::field::int;
use osmat::os::{extend_iso_to_free_ext, search_iso, DEFAULT_SEARCH_BUDGET};
use osmat::realization::{m1, m2};
use osmat::{
    char_poly, hilbert_series, nbc_oracle, tutte, verify_free_ext_ideal_eq, verify_graded_map, DegreeOneMap, ElementSet,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn dimensions_match_nbc_counts() {
    for m in simple_corpus().into_iter().chain(minors_of_pair()) {
        let h = hilbert_series(&m).unwrap();
        for (p, d) in h.iter().enumerate() {
            assert_eq!(*d, nbc_oracle(&m, p).unwrap(), "{} degree {p}", m.name());
        }
    }
}

#[test]
fn hilbert_series_is_the_signed_reversal_of_chi() {
    for m in simple_corpus().into_iter().chain(minors_of_pair()) {
        let h = hilbert_series(&m).unwrap();
        let expected = char_poly(&m).unwrap().signed_reversal(m.rank());
        let got: Vec<i128> = h.iter().map(|&d| d as i128).collect();
        let mut want = expected.coeffs().to_vec();
        want.resize(got.len(), 0);
        assert_eq!(got, want, "{}", m.name());
    }
}

#[test]
fn hilbert_series_ignores_labels() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for m in simple_corpus().into_iter().filter(|m| m.n() <= 9) {
        let h = hilbert_series(&m).unwrap();
        for _ in 0..3 {
            let mut perm: Vec<usize> = (0..m.n()).collect();
            perm.shuffle(&mut rng);
            assert_eq!(hilbert_series(&m.relabel(&perm).unwrap()).unwrap(), h, "{}", m.name());
        }
    }
}

#[test]
fn free_extension_ideal_identity() {
    for m in simple_corpus().into_iter().filter(|m| m.n() <= 8 && m.rank() >= 1) {
        let report = verify_free_ext_ideal_eq(&m).unwrap();
        assert!(report.equal(), "{}: {:?}", m.name(), report.degrees);
    }
}

#[test]
fn boundary_is_a_graded_derivation() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 1..=10usize {
        for _ in 0..100 {
            let a = ElementSet(rng.gen_range(0..1u64 << n));
            let b = ElementSet(rng.gen_range(0..1u64 << n));
            let (x, y) = (ExteriorElement::monomial(n, a, int(2)), ExteriorElement::monomial(n, b, int(-3)));
            let lhs = x.wedge(&y).boundary();
            let sign = BigRational::from_integer(if a.len().is_multiple_of(2) { 1.into() } else { (-1).into() });
            let rhs = x.boundary().wedge(&y).add(&x.wedge(&y.boundary()).scale(&sign));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn boundary_squares_to_zero() {
    for n in 0..=10usize {
        for s in 0..1u64 << n {
            assert!(ExteriorElement::monomial(n, ElementSet(s), int(1)).boundary().boundary().is_zero());
        }
    }
}

#[test]
fn the_pair_has_equal_algebras_but_different_polynomials() {
    let (a, b) = (m1().unwrap(), m2().unwrap());
    assert_eq!(hilbert_series(&a).unwrap(), vec![1, 7, 19, 25, 12]);
    assert_eq!(hilbert_series(&a).unwrap(), hilbert_series(&b).unwrap());
    assert_ne!(tutte(&a).unwrap(), tutte(&b).unwrap());
}

#[test]
fn searched_map_extends_to_the_pair() {
    let (a, b) = (u23_sum(), p5_coloop());
    let found = search_iso(&a, &b, DEFAULT_SEARCH_BUDGET).unwrap();
    let phi = found.map.expect("a map within budget");
    assert!(verify_graded_map(&a, &b, &phi).unwrap());
    let ext = extend_iso_to_free_ext(&a, &b, &phi).unwrap();
    assert!(verify_graded_map(&m1().unwrap(), &m2().unwrap(), &ext).unwrap());
}

#[test]
fn automorphisms_induce_maps_and_non_automorphisms_do_not() {
    let p = p5_coloop();
    assert!(verify_graded_map(&p, &p, &DegreeOneMap::permutation(&[1, 0, 2, 3, 4, 5])).unwrap());
    assert!(!verify_graded_map(&p, &p, &DegreeOneMap::permutation(&[5, 1, 2, 3, 4, 0])).unwrap());
    assert!(verify_graded_map(&p, &p, &DegreeOneMap::identity(6)).unwrap());
}
