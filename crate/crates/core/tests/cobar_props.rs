mod common;

use cobar::coalgebra::normalized_chains;
use cobar::cobar::{check_d_squared, cobar, h0_presentation, Cobar};
use cobar::corpus;
use cobar::linalg::q;
use cobar::poly::Poly;
use cobar::simplicial::{nerve, GroupTable};
use proptest::prelude::*;

fn cobars() -> Vec<Cobar> {
    common::named_inputs().iter().map(|(_, c)| Cobar::new(c)).filter(|om| om.letter_count() > 0).collect()
}

fn word(letters: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..letters, 0..4)
}

fn poly(letters: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec((word(letters), -3i64..=3), 0..4)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|(w, c)| (w, q(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// `D(ab) = D(a)b + (-1)^{|a|} a D(b)` on words.
    #[test]
    fn differential_is_a_derivation(which in 0usize..12, a in word(64), b in word(64)) {
        let all = cobars();
        let om = &all[which % all.len()];
        let n = om.letter_count() as u32;
        let a: Vec<u32> = a.into_iter().map(|l| l % n).collect();
        let b: Vec<u32> = b.into_iter().map(|l| l % n).collect();
        let (pa, pb) = (Poly::word(a.clone()), Poly::word(b.clone()));
        let lhs = om.differential(&(&pa * &pb));
        let sign = if om.word_degree(&a).is_multiple_of(2) { q(1) } else { q(-1) };
        let mut rhs = &om.differential(&pa) * &pb;
        rhs.axpy(&sign, &(&pa * &om.differential(&pb)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn differential_squares_to_zero_on_words(which in 0usize..12, w in word(64)) {
        let all = cobars();
        let om = &all[which % all.len()];
        let n = om.letter_count() as u32;
        let p = Poly::word(w.into_iter().map(|l| l % n).collect());
        prop_assert!(om.differential(&om.differential(&p)).is_zero());
    }

    /// Normal forms modulo a complete Gröbner basis are idempotent, linear
    /// and multiplicative.
    #[test]
    fn normal_forms_are_confluent(which in 0usize..3, p in poly(8), r in poly(8), k in -3i64..=3) {
        let g = GroupTable::by_name(["z3", "v4", "s3"][which]).unwrap();
        let h = h0_presentation(&normalized_chains(&nerve(&g, 2).unwrap()).unwrap()).unwrap();
        let a = h.algebra(8);
        prop_assume!(a.is_complete());
        let n = a.generators().len() as u32;
        let fold = |x: &Poly| x.substitute(|l| Poly::letter(l % n));
        let (p, r) = (fold(&p), fold(&r));
        let np = a.normal_form(&p);
        prop_assert_eq!(a.normal_form(&np), np.clone());
        let mut comb = p.clone();
        comb.axpy(&q(k), &r);
        let mut expected = np.clone();
        expected.axpy(&q(k), &a.normal_form(&r));
        prop_assert_eq!(a.normal_form(&comb), expected);
        prop_assert_eq!(a.normal_form(&(&p * &r)), a.normal_form(&(&np * &a.normal_form(&r))));
    }
}

#[test]
fn every_sign_flip_on_small_inputs() {
    let mut inputs = vec![
        ("sphere2", corpus::by_name("sphere2").unwrap()),
        ("torus", corpus::torus()),
        ("circle-wedge-sphere", corpus::circle_wedge_sphere()),
        ("divided-power-3", corpus::divided_power(3)),
    ];
    for (name, g) in [("nerve-z2", 2), ("nerve-z3", 3)] {
        inputs.push((name, normalized_chains(&nerve(&GroupTable::cyclic(g), 3).unwrap()).unwrap()));
    }
    let mut rng = common::rng(5);
    while inputs.len() < 14 {
        let c = common::random_coalgebra(&mut rng);
        if c.all_basis().count() <= 14 {
            inputs.push(("random", c));
        }
    }
    let mut broken = 0;
    for (name, c) in &inputs {
        for (site, bad) in common::sign_flips(c, None) {
            let is_broken = !common::axioms_hold(&bad);
            let detected = !bad.check_axioms().passed() || !check_d_squared(&cobar(&bad, 2, 3).unwrap()).passed();
            assert_eq!(is_broken, detected, "{name}, {site}");
            broken += usize::from(is_broken);
        }
    }
    assert!(broken > 100, "only {broken} flips break an axiom");
}

#[test]
fn random_coalgebras_have_square_zero_cobar() {
    let mut rng = common::rng(99);
    for _ in 0..20 {
        let c = common::random_coalgebra(&mut rng);
        assert!(common::axioms_hold(&c));
        assert!(check_d_squared(&cobar(&c, 2, 3).unwrap()).passed());
    }
}
