mod common;

use std::collections::HashSet;

use common::*;
use osmat::coloration::{exists_regular, search_regular_with, SearchOptions};
use osmat::par::Exec;
use osmat::realization::{ag, generate, FamilySpec};
use osmat::{
    is_regular, max_regular_k, named_coloration, search_regular, uniform, Coloration, Matroid, NamedColoration,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Restricted growth strings of length `n`, i.e. every set partition of `[n]` once.
fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let next = prefix.iter().max().map_or(0, |m| m + 1);
        for c in 0..=next {
            prefix.push(c);
            go(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

fn real_rank_three() -> Vec<Matroid> {
    let mut v: Vec<Matroid> =
        [FamilySpec::Ngon(3), FamilySpec::Ngon(4), FamilySpec::Ngon(6), FamilySpec::A112, FamilySpec::P5]
            .into_iter()
            .map(|f| generate(f).unwrap().matroid)
            .collect();
    v.extend((3..=8).map(|n| uniform(3, n).unwrap()));
    v.push(ag(2).unwrap());
    v
}

#[test]
fn search_agrees_with_brute_force() {
    for m in simple_corpus().into_iter().filter(|m| m.n() <= 8) {
        let mut brute: Vec<HashSet<Coloration>> = vec![HashSet::new(); m.n() + 1];
        for a in all_partitions(m.n()) {
            let pi = Coloration::from_assignment(&a);
            if pi.k() >= 2 && is_regular(&m, &pi).unwrap() {
                brute[pi.k()].insert(pi);
            }
        }
        for (k, expected) in brute.iter().enumerate().skip(2) {
            for exec in [Exec::Sequential, Exec::Parallel] {
                let found = search_regular_with(&m, k, SearchOptions { exec, limit: None }).unwrap();
                let set: HashSet<Coloration> = found.iter().cloned().collect();
                assert_eq!(set.len(), found.len(), "duplicates for {} k={k}", m.name());
                assert_eq!(&set, expected, "{} k={k}", m.name());
            }
        }
    }
}

#[test]
fn real_planes_have_no_regular_colorations_with_four_or_more_classes() {
    for m in real_rank_three() {
        for k in 4..=m.n() {
            assert!(!exists_regular(&m, k).unwrap(), "{} k={k}", m.name());
        }
    }
}

#[test]
fn maximum_color_counts() {
    assert_eq!(max_regular_k(&ag(3).unwrap()).unwrap(), 3);
    assert_eq!(max_regular_k(&ag(4).unwrap()).unwrap(), 4);
    assert_eq!(max_regular_k(&generate(FamilySpec::Ngon(4)).unwrap().matroid).unwrap(), 3);
    assert_eq!(max_regular_k(&uniform(3, 4).unwrap()).unwrap(), 1);
}

#[test]
fn larger_affine_planes_admit_q_colorations() {
    for q in [4, 5] {
        let m = ag(q).unwrap();
        let found = search_regular_with(&m, q, SearchOptions { exec: Exec::Parallel, limit: Some(1) }).unwrap();
        assert_eq!(found.len(), 1);
        assert!(is_regular(&m, &found[0]).unwrap());
        let named = named_coloration(NamedColoration::AgParallel(q)).unwrap();
        assert!(is_regular(&m, &named).unwrap());
        assert_eq!(named.k(), q);
    }
}

#[test]
fn affine_plane_of_order_three_has_one_coloration_per_direction() {
    let found = search_regular(&ag(3).unwrap(), 3).unwrap();
    assert_eq!(found.len(), 4);
    assert!(found.contains(&named_coloration(NamedColoration::AgParallel(3)).unwrap()));
}

#[test]
fn named_colorations_are_regular() {
    for tag in [
        NamedColoration::AgParallel(3),
        NamedColoration::Ngon(3),
        NamedColoration::Ngon(4),
        NamedColoration::Ngon(6),
        NamedColoration::A112,
    ] {
        let pi = named_coloration(tag).unwrap();
        let m = generate(tag.family()).unwrap().matroid;
        assert!(is_regular(&m, &pi).unwrap(), "{tag:?}");
        assert_eq!(pi.k(), 3);
    }
}

#[test]
fn regularity_is_invariant_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for m in simple_corpus().into_iter().filter(|m| m.n() <= 8) {
        let parts = all_partitions(m.n());
        for _ in 0..5 {
            let mut perm: Vec<usize> = (0..m.n()).collect();
            perm.shuffle(&mut rng);
            let moved = m.relabel(&perm).unwrap();
            for a in parts.choose_multiple(&mut rng, 40) {
                let mut b = vec![0; a.len()];
                for (i, &c) in a.iter().enumerate() {
                    b[perm[i]] = c;
                }
                let shifted: Vec<usize> = a.iter().map(|c| c + 7).collect();
                let pi = Coloration::from_assignment(a);
                assert_eq!(is_regular(&m, &pi).unwrap(), is_regular(&moved, &Coloration::from_assignment(&b)).unwrap());
                assert_eq!(Coloration::from_assignment(&shifted), pi);
            }
        }
    }
}

#[test]
fn json_round_trip() {
    let pi = named_coloration(NamedColoration::A112).unwrap();
    assert_eq!(Coloration::from_json(12, &pi.to_json()).unwrap(), pi);
    assert!(Coloration::from_json(11, &pi.to_json()).is_err());
}
