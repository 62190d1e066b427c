mod common;

use cobar::corpus;
use cobar::lie::{
    free_lie_dims, free_lie_dims_by_length, nogo_witness, pbw_check, symmetric_dims, symmetric_power_dim, witt_formula,
    LieModel, LieTable, NogoVerdict,
};
use cobar::linalg::q;
use proptest::prelude::*;

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("g{i}")).collect()
}

/// Monomials in generators of the given degrees, odd ones squaring to
/// zero, counted by total degree.
fn count_monomials(gens: &[usize], d: usize) -> Vec<usize> {
    fn go(gens: &[usize], left: usize, out: &mut Vec<usize>, d: usize) {
        match gens.split_first() {
            None => out[d - left] += 1,
            Some((&e, rest)) => {
                let max_power = if e % 2 == 1 { 1 } else { left / e };
                for k in 0..=max_power.min(left / e) {
                    go(rest, left - k * e, out, d);
                }
            }
        }
    }
    let mut out = vec![0; d + 1];
    go(gens, d, &mut out, d);
    out
}

#[test]
fn free_lie_dims_count_lyndon_words() {
    for r in 1..=3 {
        let dims = free_lie_dims_by_length(&vec![2; r], 6);
        let oracle: Vec<usize> = (1..=6).map(|n| common::lyndon_count(r, n)).collect();
        assert_eq!(dims, oracle, "rank {r}");
        for n in 1..=6 {
            assert_eq!(witt_formula(r as u64, n as u64) as usize, oracle[n - 1]);
        }
    }
}

#[test]
fn free_lie_on_one_odd_generator() {
    // x and [x,x] only, since [x,[x,x]] = 0 by Jacobi
    assert_eq!(free_lie_dims(&[1], 6), vec![0, 1, 1, 0, 0, 0, 0]);
    assert_eq!(free_lie_dims(&[3], 9), vec![0, 0, 0, 1, 0, 0, 1, 0, 0, 0]);
}

#[test]
fn enveloping_algebra_of_free_lie_is_tensor_algebra() {
    for degrees in [vec![1], vec![2], vec![1, 1], vec![2, 2], vec![1, 2], vec![1, 3], vec![2, 3]] {
        let t = LieTable::free(&degrees, &names(degrees.len()), 6);
        assert_eq!(t.jacobi_violation(), None, "{degrees:?}");
        let r = pbw_check(&t, 6);
        assert!(r.passed(), "{degrees:?}: {r:?}");
        assert_eq!(r.enveloping, common::tensor_algebra_dims(&degrees, 6), "{degrees:?}");
    }
}

#[test]
fn abelian_lie_algebra_envelope_is_symmetric() {
    let t = LieTable::new(names(3), vec![1, 2, 2], Default::default()).unwrap();
    let r = pbw_check(&t, 8);
    assert!(r.passed());
    assert_eq!(r.enveloping, count_monomials(&[1, 2, 2], 8));
}

#[test]
fn jacobi_failures_break_pbw() {
    let mut t = LieTable::new(
        vec!["u".into(), "w".into(), "z".into()],
        vec![1, 2, 3],
        [((0, 0), vec![(q(1), 1)])].into_iter().collect(),
    )
    .unwrap();
    t.set_bracket(0, 1, vec![(q(1), 2)]);
    let r = pbw_check(&t, 6);
    assert!(r.jacobi_violation.is_some());
    assert_eq!(r.first_mismatch, Some(3));
    assert!(!r.passed());
}

#[test]
fn nogo_on_every_corpus_group_pair() {
    for (name, c) in corpus::all() {
        let h = LieModel::new(&c).unwrap().homology(0, 6).degrees[0].clone();
        for order in [1usize, 2, 3, 4, 6, 8] {
            let w = nogo_witness(&c, order, 6, 8).unwrap();
            let expected = if h.dim > 0 || order > 1 { NogoVerdict::Impossible } else { NogoVerdict::Possible };
            assert_eq!(w.verdict, expected, "{name} vs order {order}");
            assert_eq!(w.h0_lie, h.dim);
            if h.dim > 0 {
                assert!(w.certified);
                let k = w.exceeds_at.unwrap();
                assert!(w.cumulative[k] > order as u128);
                assert!(k == 0 || w.cumulative[k - 1] <= order as u128);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn symmetric_series_counts_monomials(gens in prop::collection::vec(1usize..5, 0..5), d in 0usize..9) {
        let mut dims = vec![0usize; d + 1];
        for &e in &gens {
            if e <= d {
                dims[e] += 1;
            }
        }
        prop_assert_eq!(symmetric_dims(&dims, d), count_monomials(&gens, d));
    }

    #[test]
    fn symmetric_powers_are_multiset_counts(h in 0usize..5, k in 0usize..6) {
        let gens = vec![2usize; h];
        let expected = count_monomials(&gens, 2 * k)[2 * k];
        prop_assert_eq!(symmetric_power_dim(h, k), expected as u128);
    }
}
