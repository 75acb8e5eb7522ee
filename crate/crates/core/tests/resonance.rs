mod common;

use common::*;
use num::BigRational;
use osmat::field::int;
use osmat::realization::{ag, generate, m1, FamilySpec};
use osmat::resonance::{coloration_candidate_space, random_combination, ResonanceContext};
use osmat::{local_components, named_coloration, Coloration, LambdaVector, NamedColoration};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn local_components_are_resonant() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for m in simple_corpus().into_iter().chain(rank3_corpus()).chain(minors_of_pair()).filter(|m| m.n() <= 12) {
        let ctx = ResonanceContext::new(&m).unwrap();
        for comp in local_components(&m) {
            assert_eq!(comp.dim(), comp.flat.len() - 1);
            for _ in 0..5 {
                let lambda = random_combination(&comp.basis, &mut rng);
                let sum: BigRational = lambda.0.iter().sum();
                assert_eq!(sum, int(0));
                assert!(ctx.r1_membership(&lambda).unwrap(), "{} {} {lambda}", m.name(), comp.flat);
            }
        }
    }
}

#[test]
fn nonzero_sum_kills_first_cohomology() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for m in rank3_corpus().into_iter().filter(|m| m.n() <= 12) {
        let ctx = ResonanceContext::new(&m).unwrap();
        let mut done = 0;
        while done < 20 {
            let lambda = LambdaVector((0..m.n()).map(|_| int(rng.gen_range(-5..=5))).collect());
            let sum: BigRational = lambda.0.iter().sum();
            if sum == int(0) || lambda.0.iter().any(|x| *x == int(0)) {
                continue;
            }
            assert_eq!(ctx.hp_dim(&lambda, 1).unwrap().h, 0, "{} {lambda}", m.name());
            done += 1;
        }
    }
}

#[test]
fn scaling_and_relabeling_preserve_dimensions() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for m in simple_corpus().into_iter().filter(|m| m.n() <= 9 && m.rank() >= 2) {
        let ctx = ResonanceContext::new(&m).unwrap();
        let mut perm: Vec<usize> = (0..m.n()).collect();
        perm.shuffle(&mut rng);
        let moved = ResonanceContext::new(&m.relabel(&perm).unwrap()).unwrap();
        let mut samples: Vec<LambdaVector> =
            local_components(&m).iter().map(|c| random_combination(&c.basis, &mut rng)).collect();
        samples.push(LambdaVector::from_ints(&vec![1; m.n()]));
        let mut generic = vec![0i64; m.n()];
        generic[0] = 1;
        generic[1] = -1;
        samples.push(LambdaVector::from_ints(&generic));
        for lambda in samples {
            for p in 0..m.rank() {
                let base = ctx.hp_dim(&lambda, p).unwrap();
                for c in [int(-1), int(3), BigRational::new(2.into(), 7.into())] {
                    assert_eq!(ctx.hp_dim(&lambda.scale(&c), p).unwrap(), base);
                }
                assert_eq!(moved.hp_dim(&lambda.permute(&perm), p).unwrap(), base, "{} p={p}", m.name());
            }
        }
    }
}

#[test]
fn report_fields_are_consistent() {
    let m = m1().unwrap();
    let ctx = ResonanceContext::new(&m).unwrap();
    let lambda = LambdaVector::from_ints(&[1, -1, 0, 0, 0, 0, 0]);
    let r = ctx.hp_dim(&lambda, 1).unwrap();
    assert_eq!(r.h, r.kernel - r.image);
    assert!(r.member());
    assert!(ctx.hp_dim(&lambda, m.rank()).is_err());
}

#[test]
fn coloration_candidates() {
    let m = ag(3).unwrap();
    let pi = named_coloration(NamedColoration::AgParallel(3)).unwrap();
    let report = coloration_candidate_space(&m, &pi, 1).unwrap();
    assert_eq!(report.dim(), 2);
    assert!(report.all_members());
    assert_eq!(report.checks.len(), 3);

    let m = generate(FamilySpec::Ngon(3)).unwrap().matroid;
    let report = coloration_candidate_space(&m, &named_coloration(NamedColoration::Ngon(3)).unwrap(), 1).unwrap();
    assert_eq!(report.dim(), 2);
    assert!(report.all_members());

    assert!(coloration_candidate_space(&m, &Coloration::single_class(9), 1).is_err());
}
