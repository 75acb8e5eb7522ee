use osmat::field::{int, Matrix};
use osmat::{
    canonical_key, corank_nullity_oracle, hilbert_series, nbc_oracle, tutte, ElementSet, Matroid, VectorConfig,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

/// Simple matroid from small integer columns, skipping zero and parallel ones.
fn from_columns(rows: usize, cols: &[Vec<i64>]) -> Option<Matroid> {
    let mut kept: Vec<Vec<i64>> = Vec::new();
    for c in cols {
        if c.iter().all(|&x| x == 0) {
            continue;
        }
        let parallel = kept.iter().any(|k| (0..rows).all(|i| (0..rows).all(|j| k[i] * c[j] == k[j] * c[i])));
        if !parallel {
            kept.push(c.clone());
        }
    }
    if kept.is_empty() {
        return None;
    }
    let data = kept.iter().map(|c| c.iter().map(|&x| int(x)).collect()).collect();
    let m = Matrix::from_columns(rows, data).ok()?;
    Matroid::from_vectors("random", VectorConfig::Rational(m)).ok()
}

fn configuration() -> impl Strategy<Value = Matroid> {
    (2usize..=4)
        .prop_flat_map(|rows| (Just(rows), prop::collection::vec(prop::collection::vec(-2i64..=2, rows), 3..=9)))
        .prop_filter_map("degenerate", |(rows, cols)| from_columns(rows, &cols))
}

fn with_permutation() -> impl Strategy<Value = (Matroid, Vec<usize>)> {
    configuration().prop_flat_map(|m| {
        let n = m.n();
        (Just(m), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tutte_matches_oracle(m in configuration()) {
        prop_assert_eq!(tutte(&m).unwrap(), corank_nullity_oracle(&m).unwrap());
    }

    #[test]
    fn hilbert_matches_nbc(m in configuration()) {
        let h = hilbert_series(&m).unwrap();
        for (p, d) in h.iter().enumerate() {
            prop_assert_eq!(*d, nbc_oracle(&m, p).unwrap());
        }
    }

    #[test]
    fn invariants_survive_relabeling((m, perm) in with_permutation()) {
        let moved = m.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_key(&m).unwrap(), canonical_key(&moved).unwrap());
        prop_assert_eq!(tutte(&m).unwrap(), tutte(&moved).unwrap());
        prop_assert_eq!(hilbert_series(&m).unwrap(), hilbert_series(&moved).unwrap());
        prop_assert_eq!(osmat::find_isomorphism(&m, &moved).unwrap().is_some(), true);
    }

    #[test]
    fn closure_is_idempotent_and_rank_preserving(m in configuration(), bits in any::<u64>()) {
        let s = ElementSet(bits & ElementSet::full(m.n()).bits());
        let c = m.closure(s);
        prop_assert!(s.is_subset(c));
        prop_assert_eq!(m.closure(c), c);
        prop_assert_eq!(m.rank_of(c), m.rank_of(s));
    }

    #[test]
    fn deletion_contraction_identity(m in configuration(), pick in subsequence((0..9usize).collect::<Vec<_>>(), 1)) {
        let e = pick[0] % m.n();
        let one = ElementSet::singleton(e);
        let t = tutte(&m).unwrap();
        let del = m.delete(one).unwrap();
        let con = m.contract(one).unwrap();
        let expected = if m.coloops().contains(e) {
            tutte(&del).unwrap().shift(1, 0)
        } else {
            tutte(&del).unwrap().add(&tutte(&con).unwrap())
        };
        prop_assert_eq!(t, expected);
    }
}
