use antipodal::clifford::CliffordElem;
use antipodal::e8model::*;
use antipodal::rootsys::*;
use antipodal::scalar::{ExactScalar, SubspaceCoords};

#[test]
fn algebra_identities() {
    let alg = e8_algebra();
    assert_eq!(alg.dim(), 248);
    assert_eq!(alg.lambda, 1);
    assert_eq!(alg.killing_scale, -240);
    assert!(alg.is_skew());
    assert_eq!(alg.jacobi_sampled(10_000, 7), 0);
    assert_eq!(alg.invariance_sampled(10_000, 7), 0);
}

#[test]
fn killing_form_is_proportional() {
    assert!(e8_algebra().killing_is_proportional());
}

#[test]
fn root_spaces_are_planes() {
    let spaces = root_spaces();
    assert_eq!(spaces.len(), 120);
    let alg = e8_algebra();
    for (g, basis) in spaces {
        assert_eq!(basis.len(), 2, "root {}", g);
        // ad(h_k)^2 = −γ_k^2 on r_γ
        for k in 1..=8 {
            let h = torus_generator(k);
            let gk = ExactScalar::from_frac(g.0[k - 1] as i64, 2);
            for v in basis {
                let w = alg.bracket(&h, &alg.bracket(&h, v));
                let expect = antipodal::scalar::sparse_scale(v, &-(&gk * &gk));
                assert_eq!(w, expect);
            }
        }
    }
}

#[test]
fn subalgebra_dimensions() {
    let s = subalgebras();
    let alg = e8_algebra();
    assert_eq!(s.su2.dim(), 3);
    assert_eq!(s.su3.dim(), 8);
    assert_eq!(s.g2.dim(), 14);
    assert_eq!(s.e7.dim(), 133);
    assert_eq!(s.e6.dim(), 78);
    assert_eq!(s.f4.dim(), 52);
    for sub in [&s.su2, &s.su3, &s.g2, &s.e7, &s.e6, &s.f4] {
        assert!(alg.is_closed(sub.basis()), "{}", sub.name);
    }
    // double centralizers
    assert_eq!(alg.centralizer(s.e7.basis()).len(), 3);
    assert_eq!(alg.centralizer(s.e6.basis()).len(), 8);
    assert_eq!(alg.centralizer(s.f4.basis()).len(), 14);
    // su2 ⊂ su3 ⊂ g2, hence f4 ⊂ e6 ⊂ e7
    let in_span = |small: &SubalgebraBasis, big: &SubalgebraBasis| {
        let c = SubspaceCoords::new(big.basis(), DIM);
        small.basis().iter().all(|v| c.contains(v))
    };
    assert!(in_span(&s.su2, &s.su3));
    assert!(in_span(&s.su3, &s.g2));
    assert!(in_span(&s.f4, &s.e6));
    assert!(in_span(&s.e6, &s.e7));
}

#[test]
fn basic_fixed_dims() {
    let minus_one = CliffordElem::scalar(16, ExactScalar::from_int(-1));
    let m = adjoint_of_spin16(&minus_one).unwrap();
    assert_eq!(fixed_dims_by_trace(&m).unwrap(), (120, 128));
    let x = adjoint_of_spin16(&x_spin16()).unwrap();
    assert_eq!(fixed_dims_by_trace(&x).unwrap(), (120, 128));
    let (a, _) = alpha_beta();
    let t = adjoint_of_spin16(&torus_spin16(a)).unwrap();
    assert_eq!(fixed_dims_by_trace(&t).unwrap(), (136, 112));
    assert_eq!(
        antipodal::scalar::fixed_space_dims_sparse(&t).unwrap(),
        (136, 112)
    );
    let s = subalgebras();
    // τ_α is central in E7^α
    assert_eq!(fixed_dims_in(&t, &s.e7).unwrap(), (133, 0));
    assert_eq!(fixed_dims_in(&x, &s.f4).unwrap().0, 24);
    assert_eq!(fixed_dims_in_by_rank(&x, &s.f4).unwrap().0, 24);
}

#[test]
fn backend_oracle_on_a2() {
    use rayon::prelude::*;
    let (a, b) = alpha_beta();
    let elems = enumerate_torus_involutions_with_origin(a, b);
    let rows: Vec<BackendRow> = elems
        .par_iter()
        .flat_map(|(t, o)| {
            [false, true]
                .into_iter()
                .filter(|wx| *wx || !t.is_identity())
                .map(|wx| backend_consistency_check(*t, *o, wx).unwrap())
                .collect::<Vec<_>>()
        })
        .collect();
    assert_eq!(rows.len(), 511);
    for r in &rows {
        assert!(r.agrees(), "{:?}", r);
        assert!([120, 136].contains(&r.values[0].3));
    }
}
