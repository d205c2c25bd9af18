use antipodal::catalog::*;
use antipodal::cli::classify_element;
use antipodal::e8model::Level;
use antipodal::suites::orbit_shape;
use antipodal::Error;

fn labels(expr: &str) -> Vec<Option<String>> {
    let c = classify_element(&parse_element(expr).unwrap());
    [Level::F4, Level::E6, Level::E7, Level::E8]
        .into_iter()
        .map(|l| c.label(l).map(str::to_string))
        .collect()
}

fn some(v: &[&str]) -> Vec<Option<String>> {
    v.iter().map(|s| if s.is_empty() { None } else { Some(s.to_string()) }).collect()
}

#[test]
fn classify_psi_gamma_pair() {
    let g = parse_element("psi(g1, g0)").unwrap();
    assert_eq!(fixed_space_dims(&g).unwrap(), (136, 112));
    assert_eq!(labels("psi(g1:0:0, g0:0:0)"), some(&["FI", "EII", "EVI", "EIX_+"]));
}

#[test]
fn classify_torus_root() {
    assert_eq!(labels("tau(x7-x8)"), some(&["fixed", "fixed", "pole", "EIX_+"]));
    let g = parse_element("tau(x7-x8)").unwrap();
    assert_eq!(suborbit_name(&g, Level::E7).unwrap(), "p_1");
}

#[test]
fn classify_x() {
    let g = E8GroupElem::x();
    assert_eq!(fixed_space_dims(&g).unwrap(), (120, 128));
    assert_eq!(suborbit_name(&g, Level::E7).unwrap(), "EV_2");
    assert_eq!(suborbit_name(&g, Level::E6).unwrap(), "EI_4");
    assert_eq!(suborbit_name(&g, Level::F4).unwrap(), "FI_4");
}

#[test]
fn half_spinor_torus_does_not_normalize_f4() {
    let g = parse_element("tau((+ + + + - - + +)/2)").unwrap();
    assert!(matches!(classify(&g, Level::F4), Err(Error::NotNormalizing(_))));
    assert_eq!(labels("tau((+ + + + - - + +)/2)"), some(&["", "EIII", "EVI", "EIX_+"]));
}

#[test]
fn minus_one_is_phi() {
    let m = phi_minus_one();
    assert!(m.is_minus_one());
    assert_eq!(fixed_space_dims(&m).unwrap(), (120, 128));
}

#[test]
fn elem_mul_examples() {
    let a = E8GroupElem::psi(0, 0, 0, 1, 0, 1);
    let b = E8GroupElem::psi(0, 0, 0, 1, 1, 0);
    assert_eq!(elem_mul(&a, &b).unwrap().to_string(), "psi(g0:0:0, g0:1:1)");
    let c = E8GroupElem::psi(0, 0, 0, 0, 1, 0);
    assert_eq!(elem_mul(&a, &c).unwrap().to_string(), "psi(g0:0:0, g1:1:1)");
    // x is its own inverse, τ_v squares to the identity on lattice vectors
    let x = E8GroupElem::x();
    assert!(elem_mul(&x, &x).unwrap().is_identity());
}

#[test]
fn elem_mul_errors() {
    let r = elem_mul(&E8GroupElem::gamma_pair(1, 0), &E8GroupElem::x());
    assert!(matches!(r, Err(Error::MixedEncoding)));
    assert!(matches!(parse_element("psi(g1,g0)*x"), Err(Error::MixedEncoding)));
    // identity absorbs either encoding
    let e = E8GroupElem::identity();
    assert_eq!(elem_mul(&e, &E8GroupElem::x()).unwrap(), E8GroupElem::x());
}

#[test]
fn parse_errors() {
    for bad in ["", "foo", "psi(g1)", "psi(g8,g0)", "psi(g1:2:0,g0)", "tau(x9)", "psi((g1,g0)"] {
        assert!(parse_element(bad).is_err(), "{:?} parsed", bad);
    }
    assert!(matches!(build_named_set("A(nothing)"), Err(Error::UnknownName(_))));
}

#[test]
fn display_round_trips_over_a2_e8() {
    for g in &a2_e8().elements {
        let back = parse_element(&g.to_string()).unwrap();
        assert_eq!(&back, g, "{}", g);
    }
    for g in &a1_e8().elements {
        assert_eq!(&parse_element(&g.to_string()).unwrap(), g);
    }
}

#[test]
fn group_sizes() {
    assert_eq!(a1_e8().elements.len(), 256);
    assert_eq!(a2_e8().elements.len(), 512);
    assert!(is_abelian_subgroup(a1_e8()).unwrap());
    assert!(is_abelian_subgroup(a2_e8()).unwrap());
}

#[test]
fn polar_sets_and_histograms() {
    let cases: &[(&str, Level, &str)] = &[
        ("A_1(EIX_+)", Level::E7, "1+31+3·8"),
        ("A_1(EIX_+)", Level::E6, "3+28+3·3+4·4"),
        ("A_2(EIX_+)", Level::E7, "1+63+56"),
        ("A_2(EVIII_+)", Level::E7, "63+72+128+128"),
    ];
    for (name, level, shape) in cases {
        let set = build_named_set(name).unwrap();
        let h = suborbit_histogram(&set, *level).unwrap();
        assert_eq!(orbit_shape(&h), *shape, "{} at {}", name, level.name());
        assert_eq!(h.values().sum::<usize>() >= set.elements.len(), true);
    }
}

#[test]
fn grassmannian_cut() {
    let set = build_named_set("A_1(EVI_+)").unwrap();
    assert_eq!(set.elements.len(), 31);
    assert_eq!(grass4_intersection(&set).unwrap().elements.len(), 30);
    assert_eq!(q_fixed_dim(), 69);
}

#[test]
fn table_cardinalities_match_specs() {
    for spec in SET_SPECS {
        let set = build_named_set(spec.name).unwrap();
        if let Some(n) = set.expected_cardinality {
            assert_eq!(set.elements.len(), n, "{}", spec.name);
        }
        let check = check_antipodal_set(&set, spec.space).unwrap();
        assert!(check.is_antipodal(), "{}", spec.name);
        assert_eq!(check.outside_ambient, 0, "{}", spec.name);
    }
}
