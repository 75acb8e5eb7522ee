#![allow(dead_code)]

use osmat::realization::{ag, generate, m1, m2, p5, FamilySpec};
use osmat::{uniform, ElementSet, Matroid};

pub fn set(labels: &[usize]) -> ElementSet {
    ElementSet::from_labels(labels)
}

pub fn u23_sum() -> Matroid {
    let u = uniform(2, 3).unwrap();
    u.direct_sum(&u).unwrap()
}

pub fn p5_coloop() -> Matroid {
    p5().unwrap().direct_sum(&uniform(1, 1).unwrap()).unwrap()
}

/// Simple matroids with `n <= 10` used across the suites.
pub fn simple_corpus() -> Vec<Matroid> {
    let mut v = vec![
        uniform(2, 3).unwrap(),
        uniform(2, 4).unwrap(),
        uniform(2, 5).unwrap(),
        uniform(3, 3).unwrap(),
        uniform(3, 4).unwrap(),
        uniform(3, 5).unwrap(),
        uniform(3, 6).unwrap(),
        uniform(4, 6).unwrap(),
        uniform(4, 7).unwrap(),
        p5().unwrap(),
        u23_sum(),
        p5_coloop(),
        generate(FamilySpec::Ngon(3)).unwrap().matroid,
        ag(2).unwrap(),
        ag(3).unwrap(),
        m1().unwrap(),
        m2().unwrap(),
    ];
    v.push(uniform(2, 3).unwrap().direct_sum(&uniform(3, 3).unwrap()).unwrap());
    v
}

/// Single-element deletions and contractions of the rank-4 pair; these may
/// have loops or parallel elements.
pub fn minors_of_pair() -> Vec<Matroid> {
    let mut out = Vec::new();
    for m in [m1().unwrap(), m2().unwrap()] {
        for e in 0..m.n() {
            out.push(m.delete(ElementSet::singleton(e)).unwrap());
            out.push(m.contract(ElementSet::singleton(e)).unwrap());
        }
    }
    out
}

/// Simple rank-3 matroids with `n <= 18`.
pub fn rank3_corpus() -> Vec<Matroid> {
    let mut v: Vec<Matroid> = [FamilySpec::Ngon(3), FamilySpec::Ngon(4), FamilySpec::Ngon(6), FamilySpec::A112]
        .into_iter()
        .map(|f| generate(f).unwrap().matroid)
        .collect();
    v.extend([ag(2).unwrap(), ag(3).unwrap(), ag(4).unwrap(), p5().unwrap()]);
    v.extend((3..=8).map(|n| uniform(3, n).unwrap()));
    v
}
