use antipodal::catalog::*;
use antipodal::clifford::*;
use antipodal::octonion::*;
use antipodal::rootsys::{roots_e8, TorusInvolution};
use antipodal::scalar::ExactScalar;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = ExactScalar> {
    (-20i64..=20, 1i64..=6, -5i64..=5, 1i64..=6).prop_map(|(a, b, c, d)| {
        &ExactScalar::from_frac(a, b) + &(&ExactScalar::from_frac(c, d) * &ExactScalar::sqrt2())
    })
}

fn scalar_with_float() -> impl Strategy<Value = (ExactScalar, f64)> {
    (-20i64..=20, 1i64..=6, -5i64..=5, 1i64..=6).prop_map(|(a, b, c, d)| {
        let x = &ExactScalar::from_frac(a, b) + &(&ExactScalar::from_frac(c, d) * &ExactScalar::sqrt2());
        (x, a as f64 / b as f64 + c as f64 / d as f64 * std::f64::consts::SQRT_2)
    })
}

fn octonion() -> impl Strategy<Value = Octonion> {
    proptest::array::uniform8(-4i64..=4).prop_map(Octonion::from_ints)
}

fn even_mask(n: usize) -> impl Strategy<Value = u32> {
    (0u32..(1 << n)).prop_map(|m| if m.count_ones() % 2 == 1 { m ^ 1 } else { m })
}

fn signed_blade(n: usize) -> impl Strategy<Value = CliffordElem> {
    (even_mask(n), any::<bool>()).prop_map(move |(m, neg)| {
        let idx: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
        CliffordElem::product_of(n, &idx, if neg { -1 } else { 1 })
    })
}

fn blade_triple() -> impl Strategy<Value = TrialityTriple> {
    signed_blade(8).prop_map(|g| spin8_triple(&g).unwrap())
}

fn psi_elem() -> impl Strategy<Value = E8GroupElem> {
    (blade_triple(), blade_triple()).prop_map(|(s, t)| E8GroupElem::from_triples(&s, &t).unwrap())
}

/// ψ pairs with γ labels, the part of the ψ encoding the element grammar covers
fn gamma_psi() -> impl Strategy<Value = E8GroupElem> {
    (0usize..8, 0u8..2, 0u8..2, 0usize..8, 0u8..2, 0u8..2)
        .prop_map(|(i, a, b, j, c, d)| E8GroupElem::psi(i, a, b, j, c, d))
}

fn torus_elem() -> impl Strategy<Value = E8GroupElem> {
    let n = roots_e8().len();
    (0..n, 0..n, any::<bool>()).prop_map(|(i, j, wx)| {
        let r = roots_e8();
        E8GroupElem::torus(TorusInvolution::new(r[i]).mul(&TorusInvolution::new(r[j])), wx)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
        prop_assert_eq!((&a * &b).galois(), &a.galois() * &b.galois());
        prop_assert_eq!((&a * &b).field_norm(), a.field_norm() * b.field_norm());
    }

    #[test]
    fn signum_matches_float(x in scalar_with_float(), y in scalar_with_float()) {
        let ((a, fa), (b, fb)) = (x, y);
        // the strategy keeps nonzero values well away from 0
        let float_sign = |f: f64| if f.abs() < 1e-9 { 0 } else if f > 0.0 { 1 } else { -1 };
        prop_assert_eq!(a.signum(), float_sign(fa));
        prop_assert_eq!((&a * &b).signum(), a.signum() * b.signum());
        prop_assert_eq!((-&a).signum(), -a.signum());
        prop_assert_eq!((&a - &b).signum(), float_sign(fa - fb));
    }

    #[test]
    fn octonion_norm_multiplicative(x in octonion(), y in octonion()) {
        prop_assert_eq!(x.mul(&y).norm2(), &x.norm2() * &y.norm2());
        prop_assert_eq!(x.mul(&y).conj(), y.conj().mul(&x.conj()));
    }

    #[test]
    fn octonions_are_alternative(x in octonion(), y in octonion()) {
        prop_assert_eq!(x.mul(&x).mul(&y), x.mul(&x.mul(&y)));
        prop_assert_eq!(y.mul(&x).mul(&x), y.mul(&x.mul(&x)));
    }

    #[test]
    fn half_spin_is_a_homomorphism(a in signed_blade(16), b in signed_blade(16)) {
        let m = spin_module();
        let ab = half_spin_sparse(m, &a.mul(&b)).unwrap();
        let prod = half_spin_sparse(m, &a).unwrap().mul(&half_spin_sparse(m, &b).unwrap());
        prop_assert_eq!(ab, prod);
    }

    #[test]
    fn spin8_triples_compose(a in signed_blade(8), b in signed_blade(8)) {
        let ab = spin8_triple(&a.mul(&b)).unwrap();
        let prod = triple_mul(&spin8_triple(&a).unwrap(), &spin8_triple(&b).unwrap());
        prop_assert_eq!(ab, prod);
    }

    #[test]
    fn triple_mul_associative(s in blade_triple(), t in blade_triple(), u in blade_triple()) {
        prop_assert!(s.is_valid());
        prop_assert_eq!(triple_mul(&triple_mul(&s, &t), &u), triple_mul(&s, &triple_mul(&t, &u)));
        prop_assert!(triple_mul(&s, &s.inverse()).is_identity());
    }

    #[test]
    fn elem_mul_matches_concrete(g in psi_elem(), h in psi_elem()) {
        let gh = elem_mul(&g, &h).unwrap();
        prop_assert_eq!(gh.concrete(), &concrete_mul(&g, &h));
    }

    #[test]
    fn torus_mul_matches_concrete(g in torus_elem(), h in torus_elem()) {
        let gh = elem_mul(&g, &h).unwrap();
        prop_assert_eq!(gh.concrete(), &concrete_mul(&g, &h));
    }

    #[test]
    fn commutation_routes_agree(g in psi_elem(), h in psi_elem()) {
        prop_assume!(is_involution(&g) && is_involution(&h));
        prop_assert_eq!(is_antipodal_pair(&g, &h).unwrap(), commutes_concrete(&g, &h));
    }

    #[test]
    fn display_parses_back(g in gamma_psi(), t in torus_elem()) {
        prop_assert_eq!(parse_element(&g.to_string()).unwrap(), g);
        prop_assert_eq!(parse_element(&t.to_string()).unwrap(), t);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn adjoint_is_multiplicative(g in psi_elem(), h in psi_elem()) {
        let gh = elem_mul(&g, &h).unwrap();
        let lhs = gh.adjoint_matrix().unwrap();
        let rhs = g.adjoint_matrix().unwrap().mul(&h.adjoint_matrix().unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
