use antipodal::rootsys::*;
use proptest::prelude::*;
use std::collections::BTreeSet;

#[test]
fn slice_intersections() {
    let (a, b) = alpha_beta();
    assert_eq!(slice_multi(&[(a, &[0]), (b, &[0])]).len(), 72);
    assert_eq!(slice_multi(&[(a, &[0]), (b, &[1])]).len(), 27);
    assert_eq!(slice_multi(&[(a, &[1]), (b, &[0])]).len(), 27);
}

#[test]
fn lattice_lemma_has_no_collisions() {
    let (a, b) = alpha_beta();
    let rep = check_lattice_lemma(a, b);
    assert_eq!(rep.size, 135);
    assert_eq!(rep.pairs, 9045);
    assert!(rep.holds(), "{:?}", rep.collisions);
}

#[test]
fn torus_classes() {
    let (a, b) = alpha_beta();
    let all = enumerate_torus_involutions(a, b);
    assert_eq!(all.len(), 256);
    let set: BTreeSet<_> = all.iter().copied().collect();
    assert_eq!(set.len(), 256);
    for t in &all {
        assert!(t.is_involutive());
        for u in &all {
            assert!(set.contains(&t.mul(u)));
        }
    }
    // positive roots are their own canonical representatives
    for r in positive_roots() {
        assert_eq!(TorusInvolution::new(r).exponent, r);
        assert_eq!(TorusInvolution::new(r.neg()), TorusInvolution::new(r));
    }
}

#[test]
fn formulas_agree_with_parity_rule() {
    let (a, b) = alpha_beta();
    let ambients = [Ambient::e8(), Ambient::e7(a), Ambient::e6(a, b)];
    for (t, origin) in enumerate_torus_involutions_with_origin(a, b) {
        for amb in &ambients {
            for wx in [false, true] {
                let f = combinatorial_fixed_dim(formula_spec_for(origin, wx), amb).unwrap();
                let p = parity_fixed_dim(t.exponent, wx, amb);
                assert_eq!(f, p, "{:?} x={} in {}", origin, wx, amb.name);
            }
        }
    }
}

#[test]
fn formula_values() {
    let (a, _) = alpha_beta();
    let e8 = Ambient::e8();
    let spec = |alpha, beta, with_x| FormulaSpec { alpha, beta, with_x };
    assert_eq!(combinatorial_fixed_dim(spec(None, None, false), &e8).unwrap(), 248);
    assert_eq!(combinatorial_fixed_dim(spec(None, None, true), &e8).unwrap(), 120);
    assert_eq!(combinatorial_fixed_dim(spec(Some(a), None, false), &e8).unwrap(), 136);
    assert_eq!(combinatorial_fixed_dim(spec(Some(a), None, true), &e8).unwrap(), 120);
    let e7 = Ambient::e7(a);
    assert_eq!(combinatorial_fixed_dim(spec(None, None, true), &e7).unwrap(), 63);
    // non-orthogonal β is outside the formulas
    let (a, b) = alpha_beta();
    assert!(combinatorial_fixed_dim(spec(Some(a), Some(b), false), &e8).is_err());
}

#[test]
fn weyl_groups_are_transitive_on_slices() {
    let (a, b) = alpha_beta();
    let rep = weyl_transitivity_check(a, b);
    assert!(rep.all_transitive(), "{:?}", rep.rows);
}

fn root_strategy() -> impl Strategy<Value = RootE8> {
    (0usize..240).prop_map(|i| roots_e8()[i])
}

proptest! {
    #[test]
    fn gamma_membership_routes_agree(r1 in root_strategy(), r2 in root_strategy(), k in -2i32..3) {
        let v = r1.add(r2.scale(k));
        prop_assert_eq!(in_gamma(v), v.in_gamma_direct());
        prop_assert_eq!(in_gamma(v), gamma_class_key(v) == 0);
    }

    #[test]
    fn slices_partition_roots(r in root_strategy()) {
        let total: usize = (-2..=2).map(|n| pairing_slice(r, n).len()).sum();
        prop_assert_eq!(total, 240);
        prop_assert_eq!(pairing_slice(r, 1).len(), 56);
    }

    #[test]
    fn canonical_rep_is_congruent(r1 in root_strategy(), r2 in root_strategy()) {
        let v = r1.add(r2);
        let t = TorusInvolution::new(v);
        prop_assert!(congruent_mod_gamma(t.exponent, v));
        prop_assert!(t.exponent.norm4() <= v.norm4());
    }
}
