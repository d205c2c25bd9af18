//! The verification suites run by `verify`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::catalog::*;
use crate::clifford::*;
use crate::diagram::{eix_orbits, eviii_orbits, inclusion_graph};
use crate::e8model::*;
use crate::error::{Error, Result};
use crate::octonion::*;
use crate::report::{CheckRecord, Status, TableRow, VerificationReport};
use crate::rootsys::*;
use crate::scalar::{ExactMatrix, ExactScalar};

pub const SUITES: [&str; 8] = [
    "octonion", "triality", "clifford", "rootsys", "e8", "catalog", "tables", "diagrams",
];

pub const DEFAULT_SEED: u64 = 7;
pub const DEFAULT_JACOBI_SAMPLES: usize = 10_000;
const INVARIANCE_SAMPLES: usize = 10_000;
const RANDOM_OCTONION_PAIRS: usize = 1000;
const ADJOINT_PAIRS: usize = 50;
const COMMUTATION_PAIRS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JacobiMode {
    Full,
    Sampled(usize),
}

impl Default for JacobiMode {
    fn default() -> Self {
        JacobiMode::Sampled(DEFAULT_JACOBI_SAMPLES)
    }
}

impl FromStr for JacobiMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "full" {
            return Ok(JacobiMode::Full);
        }
        s.strip_prefix("sampled:")
            .and_then(|n| n.parse().ok())
            .filter(|&n| n > 0)
            .map(JacobiMode::Sampled)
            .ok_or_else(|| Error::ParseError(format!("jacobi mode must be full or sampled:N, got {}", s)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Markdown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// empty means all
    pub suites: Vec<String>,
    pub seed: u64,
    pub jacobi: JacobiMode,
    pub parallel: Option<usize>,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            suites: Vec::new(),
            seed: DEFAULT_SEED,
            jacobi: JacobiMode::default(),
            parallel: None,
            format: Format::Json,
        }
    }
}

impl RunConfig {
    pub fn suites(names: &[&str]) -> Self {
        RunConfig {
            suites: names.iter().map(|s| s.to_string()).collect(),
            ..Default::default()
        }
    }
}

/// Suite names in canonical order, `all` expanded, duplicates dropped.
pub fn resolve_suites(names: &[String]) -> Result<Vec<&'static str>> {
    let mut wanted = BTreeSet::new();
    for n in names {
        if n == "all" {
            wanted.extend(SUITES);
            continue;
        }
        let s = SUITES
            .iter()
            .find(|s| **s == n.as_str())
            .ok_or_else(|| Error::UnknownSuite(n.clone()))?;
        wanted.insert(*s);
    }
    if names.is_empty() {
        wanted.extend(SUITES);
    }
    Ok(SUITES.iter().copied().filter(|s| wanted.contains(s)).collect())
}

pub fn run_verify(cfg: &RunConfig) -> Result<VerificationReport> {
    let suites = resolve_suites(&cfg.suites)?;
    let run = || -> Result<VerificationReport> {
        let reports = suites
            .iter()
            .map(|s| run_suite(s, cfg))
            .collect::<Result<Vec<_>>>()?;
        Ok(VerificationReport::merge(reports))
    };
    match cfg.parallel {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::UnsupportedSpec(format!("worker pool: {}", e)))?
            .install(run),
        None => run(),
    }
}

pub fn run_suite(name: &str, cfg: &RunConfig) -> Result<VerificationReport> {
    let checks = match name {
        "octonion" => octonion_suite(cfg)?,
        "triality" => triality_suite()?,
        "clifford" => clifford_suite()?,
        "rootsys" => rootsys_suite(),
        "e8" => e8_suite(cfg)?,
        "catalog" => catalog_suite(cfg)?,
        "tables" => {
            let (checks, table) = tables_suite()?;
            let mut r = VerificationReport::new("tables", checks);
            r.table = table;
            return Ok(r);
        }
        "diagrams" => diagrams_suite()?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(VerificationReport::new(name, checks))
}

fn id(suite: &str, name: &str) -> String {
    format!("{}/{}", suite, name)
}

fn ratio(ok: usize, n: usize) -> String {
    format!("{}/{}", ok, n)
}

fn yes_no(b: bool, yes: &str, no: &str) -> String {
    if b { yes } else { no }.to_string()
}

// ---------------------------------------------------------------------------

fn random_scalar(rng: &mut ChaCha8Rng) -> ExactScalar {
    let a = ExactScalar::from_frac(rng.gen_range(-9..=9), rng.gen_range(1..=4));
    let b = ExactScalar::from_int(rng.gen_range(-3..=3));
    a + b * ExactScalar::sqrt2()
}

fn random_octonion(rng: &mut ChaCha8Rng) -> Octonion {
    let c: Vec<ExactScalar> = (0..8).map(|_| random_scalar(rng)).collect();
    Octonion::from_slice(&c)
}

fn norm_multiplicative(x: &Octonion, y: &Octonion) -> bool {
    x.mul(y).norm2() == &x.norm2() * &y.norm2()
}

fn octonion_suite(cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    let s = "octonion";
    let mut out = Vec::new();
    let basis_ok = (0..64)
        .filter(|k| norm_multiplicative(&Octonion::basis(k / 8), &Octonion::basis(k % 8)))
        .count();
    out.push(CheckRecord::eq(id(s, "norm.basis_pairs"), "64/64", ratio(basis_ok, 64)));

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pairs: Vec<(Octonion, Octonion)> = (0..RANDOM_OCTONION_PAIRS)
        .map(|_| (random_octonion(&mut rng), random_octonion(&mut rng)))
        .collect();
    let random_ok = pairs.par_iter().filter(|(x, y)| norm_multiplicative(x, y)).count();
    out.push(CheckRecord::eq(
        id(s, "norm.random_pairs"),
        ratio(RANDOM_OCTONION_PAIRS, RANDOM_OCTONION_PAIRS),
        ratio(random_ok, RANDOM_OCTONION_PAIRS),
    ));

    let ag2 = a_g2();
    let g2_ok = ag2.iter().filter(|f| is_g2(f)).count();
    out.push(CheckRecord::eq(id(s, "gamma_in_g2"), "8/8", ratio(g2_ok, 8)));

    let set: HashSet<&ExactMatrix> = ag2.iter().collect();
    let id8 = ExactMatrix::identity(8);
    let involutive = ag2.iter().all(|f| f.mul(f) == id8);
    let abelian = ag2.iter().all(|f| ag2.iter().all(|g| f.mul(g) == g.mul(f)));
    let closed = ag2.iter().all(|f| ag2.iter().all(|g| set.contains(&f.mul(g))));
    out.push(CheckRecord::eq(
        id(s, "a_g2"),
        "order 8, involutive, abelian, closed",
        format!(
            "order {}, {}, {}, {}",
            set.len(),
            yes_no(involutive, "involutive", "not involutive"),
            yes_no(abelian, "abelian", "not abelian"),
            yes_no(closed, "closed", "not closed")
        ),
    ));
    Ok(out)
}

// ---------------------------------------------------------------------------

fn triality_suite() -> Result<Vec<CheckRecord>> {
    let s = "triality";
    let mut out = Vec::new();
    let pairs = so8_pairs();
    let mut solved = 0;
    for &(i, j) in &pairs {
        let x = e_ij(i, j);
        let (x2, x3) = solve_triality(&x)?;
        let g = so8_triality_map(TrialityKind::Gamma, &x)?;
        let b = so8_triality_map(TrialityKind::Beta, &x)?;
        if x2 == g && x3 == b && lie_triality_holds(&x, &x2, &x3) {
            solved += 1;
        }
    }
    out.push(CheckRecord::eq(
        id(s, "solve_matches_gamma_beta"),
        ratio(28, 28),
        ratio(solved, pairs.len()),
    ));

    let spin = a_spin8();
    let valid = spin.iter().filter(|t| t.is_valid()).count();
    out.push(CheckRecord::eq(id(s, "gamma_triples_group_identity"), "32/32", ratio(valid, spin.len())));

    let distinct: HashSet<&TrialityTriple> = spin.iter().collect();
    let mut non_commuting = 0;
    for (k, a) in spin.iter().enumerate() {
        for b in &spin[k + 1..] {
            if triple_mul(a, b) != triple_mul(b, a) {
                non_commuting += 1;
            }
        }
    }
    let involutive = spin.iter().all(|t| triple_mul(t, t).is_identity());
    out.push(CheckRecord::eq(
        id(s, "a_spin8"),
        "32 elements, involutive, 0 non-commuting pairs",
        format!(
            "{} elements, {}, {} non-commuting pairs",
            distinct.len(),
            yes_no(involutive, "involutive", "not involutive"),
            non_commuting
        ),
    ));
    Ok(out)
}

// ---------------------------------------------------------------------------

fn generator_relations_hold(n: usize) -> usize {
    let minus_two = ExactScalar::from_int(-2);
    let mut ok = 0;
    for i in 0..n {
        for j in 0..n {
            let (ei, ej) = (CliffordElem::generator(n, i), CliffordElem::generator(n, j));
            let anti = ei.mul(&ej).add(&ej.mul(&ei));
            let want = if i == j {
                CliffordElem::scalar(n, minus_two.clone())
            } else {
                CliffordElem::zero(n)
            };
            if anti == want {
                ok += 1;
            }
        }
    }
    ok
}

/// `ρ(e_i)ρ(e_j) + ρ(e_j)ρ(e_i) = −2δ_ij` for signed-permutation module actions.
fn module_relations_hold(gens: &[SignedPerm]) -> usize {
    let dim = gens[0].len();
    let minus_id = SignedPerm::identity(dim).negate();
    let mut ok = 0;
    for (i, a) in gens.iter().enumerate() {
        for (j, b) in gens.iter().enumerate() {
            let good = if i == j {
                a.compose(a) == minus_id
            } else {
                a.compose(b) == b.compose(a).negate()
            };
            if good {
                ok += 1;
            }
        }
    }
    ok
}

fn clifford_suite() -> Result<Vec<CheckRecord>> {
    let s = "clifford";
    let mut out = Vec::new();
    out.push(CheckRecord::eq(id(s, "relations.n8"), "64/64", ratio(generator_relations_hold(8), 64)));
    out.push(CheckRecord::eq(id(s, "relations.n16"), "256/256", ratio(generator_relations_hold(16), 256)));
    let cl8: Vec<SignedPerm> = (0..8).map(cl8_generator).collect();
    out.push(CheckRecord::eq(id(s, "module_relations.n8"), "64/64", ratio(module_relations_hold(&cl8), 64)));
    let m = spin_module();
    out.push(CheckRecord::eq(
        id(s, "module_relations.n16"),
        "256/256",
        ratio(module_relations_hold(&m.generator_actions), 256),
    ));

    let table = gamma_blade_table();
    let mut blade_ok = 0;
    for ((i, a, b), g) in &table {
        if spin8_triple(g)? == triple_from_gamma(*i, *a, *b) {
            blade_ok += 1;
        }
    }
    out.push(CheckRecord::eq(id(s, "blade_table"), "32/32", ratio(blade_ok, table.len())));

    let exp = torus_gamma_table();
    let mut exp_ok = 0;
    for (q, label) in &exp {
        if gamma_label(&spin8_triple(&torus_spin8(*q))?) == Some(*label) {
            exp_ok += 1;
        }
    }
    out.push(CheckRecord::eq(id(s, "exp_table"), "12/12", ratio(exp_ok, exp.len())));
    Ok(out)
}

// ---------------------------------------------------------------------------

fn rootsys_suite() -> Vec<CheckRecord> {
    let s = "rootsys";
    let (a, b) = alpha_beta();
    let mut out = vec![
        CheckRecord::eq(id(s, "roots"), 240, roots_e8().len()),
        CheckRecord::eq(id(s, "positive_roots"), 120, positive_roots().len()),
        CheckRecord::eq(id(s, "slice.alpha_0"), 126, pairing_slice(a, 0).len()),
        CheckRecord::eq(id(s, "slice.alpha_+1"), 56, pairing_slice(a, 1).len()),
        CheckRecord::eq(id(s, "slice.alpha_-1"), 56, pairing_slice(a, -1).len()),
        CheckRecord::eq(id(s, "slice.alpha_0_beta_0"), 72, slice_multi(&[(a, &[0]), (b, &[0])]).len()),
        CheckRecord::eq(id(s, "slice.alpha_0_beta_1"), 27, slice_multi(&[(a, &[0]), (b, &[1])]).len()),
    ];
    let rep = check_lattice_lemma(a, b);
    let line = format!("{} pairs, {} collisions", rep.pairs, rep.collisions.len());
    out.push(
        CheckRecord::eq(id(s, "lattice_lemma"), "9045 pairs, 0 collisions", &line)
            .with_note(format!("lattice lemma: {}", line)),
    );

    let all = enumerate_torus_involutions(a, b);
    let set: BTreeSet<TorusInvolution> = all.iter().copied().collect();
    let closed = all.iter().all(|t| all.iter().all(|u| set.contains(&t.mul(u))));
    let involutive = all.iter().all(|t| t.is_involutive());
    out.push(CheckRecord::eq(
        id(s, "torus_classes"),
        "256 classes, involutive, closed",
        format!(
            "{} classes, {}, {}",
            set.len(),
            yes_no(involutive, "involutive", "not involutive"),
            yes_no(closed, "closed", "not closed")
        ),
    ));
    out.push(CheckRecord::eq(
        id(s, "weyl_transitivity"),
        "transitive",
        yes_no(weyl_transitivity_check(a, b).all_transitive(), "transitive", "not transitive"),
    ));
    out
}

// ---------------------------------------------------------------------------

fn dims(d: (usize, usize)) -> String {
    format!("({}, {})", d.0, d.1)
}

fn e8_suite(cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    let s = "e8";
    let alg = e8_algebra();
    let mut out = vec![
        CheckRecord::eq(id(s, "dim"), 248, alg.dim()),
        CheckRecord::eq(id(s, "bracket_skew"), "skew", yes_no(alg.is_skew(), "skew", "not skew")),
        CheckRecord::eq(
            id(s, "invariance_sampled"),
            format!("0 failures in {}", INVARIANCE_SAMPLES),
            format!("{} failures in {}", alg.invariance_sampled(INVARIANCE_SAMPLES, cfg.seed), INVARIANCE_SAMPLES),
        ),
    ];
    let (name, total, bad) = match cfg.jacobi {
        JacobiMode::Sampled(n) => ("jacobi_sampled", n, alg.jacobi_sampled(n, cfg.seed)),
        JacobiMode::Full => ("jacobi_full", DIM * (DIM - 1) * (DIM - 2) / 6, alg.jacobi_full()),
    };
    out.push(CheckRecord::eq(
        id(s, name),
        format!("0 failures in {}", total),
        format!("{} failures in {}", bad, total),
    ));

    let subs = subalgebras();
    out.push(CheckRecord::eq(id(s, "dim.e7"), 133, subs.e7.dim()));
    out.push(CheckRecord::eq(id(s, "dim.e6"), 78, subs.e6.dim()));
    out.push(CheckRecord::eq(id(s, "dim.f4"), 52, subs.f4.dim()));
    out.push(CheckRecord::eq(id(s, "dim.centralizer_f4"), 14, alg.centralizer(subs.f4.basis()).len()));

    let minus_one = adjoint_of_spin16(&CliffordElem::scalar(16, ExactScalar::from_int(-1)))?;
    let x = adjoint_of_spin16(&x_spin16())?;
    let (alpha, beta) = alpha_beta();
    let tau = adjoint_of_spin16(&torus_spin16(alpha))?;
    out.push(CheckRecord::eq(id(s, "fixed.phi(-1)"), "(120, 128)", dims(fixed_dims_by_trace(&minus_one)?)));
    out.push(CheckRecord::eq(id(s, "fixed.x"), "(120, 128)", dims(fixed_dims_by_trace(&x)?)));
    out.push(CheckRecord::eq(id(s, "fixed.tau_alpha"), "(136, 112)", dims(fixed_dims_by_trace(&tau)?)));
    // φ(−1) written as τ_α τ_ᾱ in the torus is the same element as −1 ∈ Spin(16)
    out.push(CheckRecord::eq(
        id(s, "phi(-1)_is_minus_one"),
        "equal",
        yes_no(phi_minus_one().is_minus_one(), "equal", "different"),
    ));

    let elems = enumerate_torus_involutions_with_origin(alpha, beta);
    let rows: Vec<BackendRow> = elems
        .par_iter()
        .flat_map(|(t, o)| {
            [false, true]
                .into_iter()
                .filter(|wx| *wx || !t.is_identity())
                .map(|wx| backend_consistency_check(*t, *o, wx))
                .collect::<Vec<_>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let agree = rows.iter().filter(|r| r.agrees()).count();
    out.push(CheckRecord::eq(
        id(s, "backend_oracle"),
        "511 rows, 511 agree",
        format!("{} rows, {} agree", rows.len(), agree),
    ));
    Ok(out)
}

// ---------------------------------------------------------------------------

fn display_list(v: &[E8GroupElem]) -> String {
    let mut names: Vec<String> = v.iter().map(|g| g.to_string()).collect();
    names.sort();
    format!("{{{}}}", names.join(", "))
}

fn random_blade_triple(rng: &mut ChaCha8Rng) -> Result<TrialityTriple> {
    let mask = loop {
        let m: u32 = rng.gen_range(0..256);
        if m.count_ones() % 2 == 0 {
            break m;
        }
    };
    let idx: Vec<usize> = (0..8).filter(|i| mask >> i & 1 == 1).collect();
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    spin8_triple(&CliffordElem::product_of(8, &idx, sign))
}

/// ψ of two signed even blades, or a torus element, drawn until it is an involution.
fn random_involution(rng: &mut ChaCha8Rng, psi: bool) -> Result<E8GroupElem> {
    let roots = roots_e8();
    loop {
        let g = if psi {
            E8GroupElem::from_triples(&random_blade_triple(rng)?, &random_blade_triple(rng)?)?
        } else {
            let v = roots[rng.gen_range(0..roots.len())];
            let w = roots[rng.gen_range(0..roots.len())];
            let t = TorusInvolution::new(v).mul(&TorusInvolution::new(w));
            E8GroupElem::torus(t, rng.gen_bool(0.5))
        };
        if is_involution(&g) {
            return Ok(g);
        }
    }
}

fn catalog_suite(cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    let s = "catalog";
    let mut out = Vec::new();
    let (a1, a2) = (a1_e8(), a2_e8());

    for set in [a1, a2] {
        let abelian = is_abelian_subgroup(set)?;
        out.push(CheckRecord::eq(
            id(s, &format!("{}.abelian_subgroup", set.name)),
            format!("order {}, abelian subgroup", set.expected_cardinality.unwrap_or(0)),
            format!(
                "order {}, {}",
                set.elements.iter().collect::<BTreeSet<_>>().len(),
                yes_no(abelian, "abelian subgroup", "not an abelian subgroup")
            ),
        ));
    }

    let eix = build_named_set("A_1(EIX_+)")?;
    let gen = generated_subgroup(&eix.elements)?;
    let a1_set: BTreeSet<E8GroupElem> = a1.elements.iter().cloned().collect();
    out.push(CheckRecord::eq(
        id(s, "A_1(E8).generated_by_A_1(EIX_+)"),
        "order 256, equal",
        format!("order {}, {}", gen.len(), yes_no(gen == a1_set, "equal", "different")),
    ));

    // shared elements found by the Cl(8) pair, confirmed by the adjoint matrices
    let overlap = a1_a2_overlap()?;
    let agree = overlap.iter().filter(|o| o.2).count();
    let refs: Vec<E8GroupElem> = (0..4)
        .flat_map(|i| (0..4).map(move |j| E8GroupElem::gamma_pair(i, j)))
        .collect();
    let refs_in_a2 = refs.iter().filter(|g| a2.elements.contains(g)).count();
    out.push(CheckRecord::eq(
        id(s, "A_1(E8)_cap_A_2(E8)"),
        "128 shared, 128 adjoints agree, 16/16 reference pairs",
        format!("{} shared, {} adjoints agree, {}/16 reference pairs", overlap.len(), agree, refs_in_a2),
    ));

    let ids = encoding_identities();
    let mut ok = 0;
    for (_, l, r) in &ids {
        if l == r && l.adjoint_matrix()? == r.adjoint_matrix()? {
            ok += 1;
        }
    }
    out.push(CheckRecord::eq(id(s, "encoding_identities"), ratio(ids.len(), ids.len()), ratio(ok, ids.len())));

    let fii: BTreeSet<E8GroupElem> = build_named_set("A(FII_+)")?.elements.into_iter().collect();
    let fii2: BTreeSet<E8GroupElem> = build_named_set("A(FII_+)'")?.elements.into_iter().collect();
    out.push(CheckRecord::eq(
        id(s, "A(FII_+).two_descriptions"),
        "coincide",
        yes_no(fii == fii2, "coincide", "differ"),
    ));

    // the cut of A_1(E8) by EVI'_+ against τ_α A_1(EVI_+), and against the displayed
    // list, which has e where ψ(γ_0, γ_0^{1,1}) belongs
    let computed = intersect_with_orbit(a1, Level::E7, "EVI'_+")?.elements;
    let tau_alpha = E8GroupElem::gamma_pair(0, 1);
    let translate: BTreeSet<E8GroupElem> = build_named_set("A_1(EVI_+)")?
        .elements
        .iter()
        .map(|g| elem_mul(&tau_alpha, g))
        .collect::<Result<_>>()?;
    let computed_set: BTreeSet<E8GroupElem> = computed.iter().cloned().collect();
    out.push(CheckRecord::eq(
        id(s, "A_1(E8)_cap_EVI'_+"),
        "31, equals tau_alpha A_1(EVI_+)",
        format!(
            "{}, {}",
            computed_set.len(),
            yes_no(computed_set == translate, "equals tau_alpha A_1(EVI_+)", "differs from tau_alpha A_1(EVI_+)")
        ),
    ));
    let mut shown: Vec<E8GroupElem> = Vec::new();
    for i in 1..8 {
        for &(c, d) in &[(0, 0), (1, 0), (0, 1), (1, 1)] {
            shown.push(E8GroupElem::psi(i, 0, 0, 1, c, d));
        }
    }
    shown.extend([(0, 0), (1, 0), (0, 1)].iter().map(|&(c, d)| E8GroupElem::psi(0, 0, 0, 0, c, d)));
    let only_shown: Vec<E8GroupElem> = shown.iter().filter(|g| !computed_set.contains(g)).cloned().collect();
    let only_computed: Vec<E8GroupElem> = computed.iter().filter(|g| !shown.contains(g)).cloned().collect();
    out.push(CheckRecord::eq(
        id(s, "A_1(EVI'_+).display_discrepancy"),
        "display only {e}; computed only {psi(g0:0:0, g0:1:1)}",
        format!(
            "display only {}; computed only {}",
            display_list(&only_shown),
            display_list(&only_computed)
        ),
    ));

    let nontrivial: Vec<&E8GroupElem> = a1
        .elements
        .iter()
        .chain(a2.elements.iter())
        .filter(|g| !g.is_identity())
        .collect();
    let good: Vec<bool> = nontrivial
        .par_iter()
        .map(|g| fixed_space_dims(g).map(|d| d.0 == 120 || d.0 == 136))
        .collect::<Result<_>>()?;
    out.push(CheckRecord::eq(
        id(s, "d_plus_in_{120,136}"),
        "766/766",
        ratio(good.iter().filter(|b| **b).count(), good.len()),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut samples = Vec::new();
    for _ in 0..ADJOINT_PAIRS {
        let src = if rng.gen_bool(0.5) { a1 } else { a2 };
        let g = src.elements[rng.gen_range(0..src.elements.len())].clone();
        let h = src.elements[rng.gen_range(0..src.elements.len())].clone();
        samples.push((g, h));
    }
    let hom: Vec<bool> = samples
        .par_iter()
        .map(|(g, h)| -> Result<bool> {
            let (ag, ah) = (g.adjoint_matrix()?, h.adjoint_matrix()?);
            let agh = elem_mul(g, h)?.adjoint_matrix()?;
            let orthogonal = ag.transpose().mul(&ag).is_identity();
            Ok(orthogonal && agh == ag.mul(&ah))
        })
        .collect::<Result<_>>()?;
    out.push(CheckRecord::eq(
        id(s, "adjoint_orthogonal_multiplicative"),
        ratio(ADJOINT_PAIRS, ADJOINT_PAIRS),
        ratio(hom.iter().filter(|b| **b).count(), ADJOINT_PAIRS),
    ));

    // commutation decided in the encoding versus on the Cl(8) pairs
    let mut pairs = Vec::with_capacity(COMMUTATION_PAIRS);
    for k in 0..COMMUTATION_PAIRS {
        // mostly ψ pairs: torus involutions always commute
        let psi = k % 4 != 0;
        pairs.push((random_involution(&mut rng, psi)?, random_involution(&mut rng, psi)?));
    }
    let mut agree = 0;
    let mut non_commuting = 0;
    for (g, h) in &pairs {
        let enc = is_antipodal_pair(g, h)?;
        if enc == commutes_concrete(g, h) {
            agree += 1;
        }
        if !enc {
            non_commuting += 1;
        }
    }
    out.push(
        CheckRecord::eq(
            id(s, "commutation_routes_agree"),
            ratio(COMMUTATION_PAIRS, COMMUTATION_PAIRS),
            ratio(agree, COMMUTATION_PAIRS),
        )
        .with_note(format!("non-commuting pairs sampled: {}", non_commuting)),
    );

    let p = E8GroupElem::psi;
    let lhs = elem_mul(&p(0, 0, 0, 1, 0, 1), &p(0, 0, 0, 1, 1, 0))?;
    out.push(CheckRecord::eq(
        id(s, "elem_mul.psi(g0, g1^01)*psi(g0, g1^10)"),
        "psi(g0:0:0, g0:1:1)",
        lhs.to_string(),
    ));
    let lhs = elem_mul(&p(0, 0, 0, 1, 0, 1), &p(0, 0, 0, 0, 1, 0))?;
    out.push(CheckRecord::eq(
        id(s, "elem_mul.psi(g0, g1^01)*psi(g0, g0^10)"),
        "psi(g0:0:0, g1:1:1)",
        lhs.to_string(),
    ));
    let mixed = elem_mul(&p(1, 0, 0, 0, 0, 0), &E8GroupElem::tau(alpha_beta().0));
    out.push(CheckRecord::eq(
        id(s, "elem_mul.mixed_encoding"),
        "MixedEncoding",
        match mixed {
            Err(Error::MixedEncoding) => "MixedEncoding".to_string(),
            Err(e) => format!("{:?}", e),
            Ok(g) => g.to_string(),
        },
    ));
    // ψ(e_0e_1, 1) squares to ψ(−1, 1), which is not trivial
    let quarter = E8GroupElem::from_triples(
        &spin8_triple(&CliffordElem::product_of(8, &[0, 1], 1))?,
        &TrialityTriple::identity(),
    )?;
    out.push(CheckRecord::eq(
        id(s, "antipodal_pair.non_involution"),
        "NotInvolution",
        match is_antipodal_pair(&quarter, &E8GroupElem::gamma_pair(0, 1)) {
            Err(Error::NotInvolution) => "NotInvolution".to_string(),
            other => format!("{:?}", other),
        },
    ));
    out.push(CheckRecord::eq(
        id(s, "build_named_set.unknown"),
        "UnknownName",
        match build_named_set("A(nothing)") {
            Err(Error::UnknownName(_)) => "UnknownName".to_string(),
            Err(e) => format!("{:?}", e),
            Ok(_) => "built".to_string(),
        },
    ));

    let shown: BTreeSet<E8GroupElem> = build_named_set("A(T)")?.elements.into_iter().collect();
    let enumerated: BTreeSet<E8GroupElem> = a_t_enumerated().into_iter().collect();
    out.push(CheckRecord::eq(
        id(s, "A(T).display_vs_enumeration"),
        "256, equal",
        format!("{}, {}", shown.len(), yes_no(shown == enumerated, "equal", "different")),
    ));

    out.push(CheckRecord::eq(id(s, "q_fixed_in_e7"), 69, q_fixed_dim()));
    let evi1 = build_named_set("A_1(EVI_+)")?;
    out.push(CheckRecord::eq(
        id(s, "A_1(EVI_+)_cap_G4(R^12)_+"),
        30,
        grass4_intersection(&evi1)?.elements.len(),
    ));
    let evi2 = build_named_set("A_2(EVI_+)")?;
    let mut split: BTreeMap<String, usize> = BTreeMap::new();
    for g in &evi2.elements {
        let k = match evi_polar(g)? {
            EviPolar::Grass4 => "G4".to_string(),
            EviPolar::DIII => "DIII".to_string(),
            EviPolar::Pole => "pole".to_string(),
            EviPolar::Other(d) => format!("centre{}", d),
        };
        *split.entry(k).or_insert(0) += 1;
    }
    out.push(CheckRecord::eq(
        id(s, "A_2(EVI_+).polars_of_q"),
        "DIII:32, G4:30, pole:1",
        render_map(&split),
    ));
    Ok(out)
}

fn render_map(h: &BTreeMap<String, usize>) -> String {
    h.iter().map(|(k, v)| format!("{}:{}", k, v)).collect::<Vec<_>>().join(", ")
}

// ---------------------------------------------------------------------------

/// Rows of the catalog table: space and its sets.
pub const TABLE_ROWS: [(&str, &[&str]); 17] = [
    ("G2", &["A(G2)"]),
    ("F4", &["A(F4)"]),
    ("E6", &["A_1(E6)", "A_2(E6)"]),
    ("E7", &["A_1(E7)", "A_2(E7)"]),
    ("E8", &["A_1(E8)", "A_2(E8)"]),
    ("G", &["A(G)"]),
    ("FI", &["A(FI_+)"]),
    ("FII", &["A(FII_+)"]),
    ("EI", &["A_1(EI_x)", "A_2(EI_x)"]),
    ("EII", &["A_1(EII_+)", "A_2(EII_+)"]),
    ("EIII", &["A(EIII_+)"]),
    ("EIV", &["A(EIV_z)"]),
    ("EV", &["A_1(EV_x)", "A_2(EV_phi(-1))", "A_3(EV_x)"]),
    ("EVI", &["A_1(EVI_+)", "A_2(EVI_+)"]),
    ("EVII", &["A(EVII_beta)"]),
    ("EVIII", &["A_1(EVIII_+)", "A_2(EVIII_+)"]),
    ("EIX", &["A_1(EIX_+)", "A_2(EIX_+)"]),
];

struct SetOutcome {
    name: &'static str,
    expected: usize,
    size: usize,
    records: Vec<CheckRecord>,
}

fn check_set(spec: &SetSpec) -> Result<SetOutcome> {
    let s = "tables";
    let set = build_named_set(spec.name)?;
    let check = check_antipodal_set(&set, spec.space)?;
    let mut records = vec![
        CheckRecord::eq(id(s, spec.name), spec.expected, check.size),
        CheckRecord::eq(
            id(s, &format!("{}.antipodal", spec.name)),
            "distinct involutions, 0 non-commuting pairs",
            format!(
                "{} distinct of {}, {} non-involutions, {} non-commuting pairs",
                check.distinct, check.size, check.non_involutions, check.non_commuting_pairs
            ),
        )
        .with_status_of(check.is_antipodal()),
        CheckRecord::eq(
            id(s, &format!("{}.in_{}", spec.name, spec.space.name())),
            "0 outside",
            format!("{} outside", check.outside_ambient),
        ),
    ];
    // the set is the whole cut of its source by the space, so nothing was missed
    let source = match spec.source {
        Source::A1 => Some(a1_e8()),
        Source::A2 => Some(a2_e8()),
        Source::Itself => None,
    };
    if let Some(src) = source {
        let cut: BTreeSet<E8GroupElem> = filter_space(src, spec.space)?.elements.into_iter().collect();
        let mine: BTreeSet<E8GroupElem> = set.elements.iter().cloned().collect();
        records.push(CheckRecord::eq(
            id(s, &format!("{}.equals_{}_cut", spec.name, src.name)),
            "equal",
            if cut == mine {
                "equal".to_string()
            } else {
                format!("cut has {}, set has {}", cut.len(), mine.len())
            },
        ));
    }
    Ok(SetOutcome {
        name: spec.name,
        expected: spec.expected,
        size: check.size,
        records,
    })
}

trait StatusOf {
    fn with_status_of(self, ok: bool) -> Self;
}

impl StatusOf for CheckRecord {
    fn with_status_of(mut self, ok: bool) -> Self {
        self.status = Status::from_bool(ok);
        self
    }
}

fn partition(suite: &str, whole: &str, eix: &str, eviii: &str) -> Result<CheckRecord> {
    let w = build_named_set(whole)?;
    let parts: Vec<BTreeSet<E8GroupElem>> = [eix, eviii]
        .iter()
        .map(|n| build_named_set(n).map(|s| s.elements.into_iter().collect()))
        .collect::<Result<_>>()?;
    let ids: BTreeSet<E8GroupElem> = w.elements.iter().filter(|g| g.is_identity()).cloned().collect();
    let mut union = ids.clone();
    let mut disjoint = true;
    for p in &parts {
        for g in p {
            disjoint &= union.insert(g.clone());
        }
    }
    let whole_set: BTreeSet<E8GroupElem> = w.elements.into_iter().collect();
    let expected = format!(
        "{}+{}+{} = {}, disjoint, covers",
        1,
        set_spec(eix)?.expected,
        set_spec(eviii)?.expected,
        set_spec(whole)?.expected
    );
    let actual = format!(
        "{}+{}+{} = {}, {}, {}",
        ids.len(),
        parts[0].len(),
        parts[1].len(),
        whole_set.len(),
        yes_no(disjoint, "disjoint", "overlapping"),
        yes_no(union == whole_set, "covers", "does not cover")
    );
    Ok(CheckRecord::eq(id(suite, &format!("partition.{}", whole)), expected, actual))
}

fn tables_suite() -> Result<(Vec<CheckRecord>, Vec<TableRow>)> {
    let outcomes: Vec<SetOutcome> = SET_SPECS.par_iter().map(check_set).collect::<Result<_>>()?;
    let mut checks: Vec<CheckRecord> = Vec::new();
    for o in &outcomes {
        checks.extend(o.records.iter().cloned());
    }
    checks.push(partition("tables", "A_1(E8)", "A_1(EIX_+)", "A_1(EVIII_+)")?);
    checks.push(partition("tables", "A_2(E8)", "A_2(EIX_+)", "A_2(EVIII_+)")?);

    let mut table = Vec::new();
    for (space, names) in TABLE_ROWS {
        let mut sets = Vec::new();
        let mut ok = true;
        for n in names {
            let o = outcomes
                .iter()
                .find(|o| o.name == *n)
                .ok_or_else(|| Error::UnknownName(n.to_string()))?;
            ok &= o.records.iter().all(CheckRecord::passed);
            sets.push((o.name.to_string(), o.expected, o.size));
        }
        table.push(TableRow {
            space: space.to_string(),
            sets,
            status: Status::from_bool(ok),
        });
    }
    Ok((checks, table))
}

// ---------------------------------------------------------------------------

/// Sub-orbit sizes: fixed points summed, then `_+` orbits, then numbered orbits
/// per kind, written `k·n` when all k numbered orbits of a kind have n elements.
pub fn orbit_shape(h: &BTreeMap<String, usize>) -> String {
    let mut fixed = 0;
    let mut plus = Vec::new();
    let mut numbered: BTreeMap<String, Vec<(String, usize)>> = BTreeMap::new();
    let mut odd = Vec::new();
    for (name, &c) in h {
        if name.starts_with("p_") || name == "pole" {
            fixed += c;
        } else if name.ends_with("_+") {
            plus.push(c);
        } else if let Some((kind, idx)) = name.rsplit_once('_').filter(|(_, i)| i.parse::<usize>().is_ok()) {
            numbered.entry(kind.to_string()).or_default().push((idx.to_string(), c));
        } else {
            odd.push(format!("{}:{}", name, c));
        }
    }
    let mut parts = Vec::new();
    if fixed > 0 {
        parts.push(fixed.to_string());
    }
    parts.extend(plus.iter().map(|c| c.to_string()));
    let mut kinds: Vec<(usize, String, Vec<(String, usize)>)> = numbered
        .into_iter()
        .map(|(k, mut v)| {
            v.sort_by_key(|(i, _)| i.parse::<usize>().unwrap());
            (v[0].0.parse().unwrap(), k, v)
        })
        .collect();
    kinds.sort();
    for (_, _, v) in kinds {
        let sizes: Vec<usize> = v.iter().map(|x| x.1).collect();
        if sizes.len() > 1 && sizes.iter().all(|&c| c == sizes[0]) {
            parts.push(format!("{}·{}", sizes.len(), sizes[0]));
        } else {
            parts.extend(sizes.iter().map(|c| c.to_string()));
        }
    }
    parts.extend(odd);
    parts.join("+")
}

pub const HISTOGRAMS: [(&str, Level, &str); 10] = [
    ("A_1(EIX_+)", Level::E7, "1+31+3·8"),
    ("A_1(EIX_+)", Level::E6, "3+28+3·3+4·4"),
    ("A_1(EIX_+)", Level::F4, "7+28+7·3"),
    ("A_1(EVIII_+)", Level::E7, "31+3·56"),
    ("A_1(EVIII_+)", Level::E6, "3+3·28+4·28"),
    ("A_1(EVIII_+)", Level::F4, "3+7·28"),
    ("A_2(EIX_+)", Level::E7, "1+63+56"),
    ("A_2(EIX_+)", Level::E6, "3+36+3·27"),
    ("A_2(EVIII_+)", Level::E7, "63+72+128+128"),
    ("A_2(EVIII_+)", Level::E6, "27+3·36+4·64"),
];

const COARSE_HISTOGRAMS: [(&str, Level, &str); 3] = [
    ("A_1(EIX_+)", Level::E7, "EVI:31, EVII:24, pole:1"),
    ("A_1(EVIII_+)", Level::F4, "FI:196, FII:3"),
    ("A_2(EVIII_+)", Level::E6, "EI:256, EII:108, EIII:27"),
];

const INCLUSION_EDGES: [(&str, &str); 16] = [
    ("FI", "EI"),
    ("FI", "EII"),
    ("FII", "EIII"),
    ("FII", "EIV"),
    ("EI", "EV"),
    ("EII", "EV"),
    ("EII", "EVI"),
    ("EIII", "EVI"),
    ("EIII", "EVII"),
    ("EIV", "EVII"),
    ("EV", "EVIII"),
    ("EVI", "EVIII"),
    ("EVI", "EIX"),
    ("EVII", "EIX"),
    ("EVIII", "E8"),
    ("EIX", "E8"),
];

fn edge_list<'a>(edges: impl Iterator<Item = (&'a str, &'a str)>) -> String {
    let mut v: Vec<String> = edges.map(|(a, b)| format!("{}->{}", a, b)).collect();
    v.sort();
    v.join(", ")
}

fn diagrams_suite() -> Result<Vec<CheckRecord>> {
    let s = "diagrams";
    let mut out = Vec::new();
    let sets: BTreeMap<&str, AntipodalSet> = ["A_1(EIX_+)", "A_1(EVIII_+)", "A_2(EIX_+)", "A_2(EVIII_+)"]
        .into_iter()
        .map(|n| build_named_set(n).map(|set| (n, set)))
        .collect::<Result<_>>()?;
    for (name, level, expected) in HISTOGRAMS {
        let h = suborbit_histogram(&sets[name], level)?;
        let total: usize = h.values().sum();
        out.push(CheckRecord::eq(
            id(s, &format!("histogram.{}.{}", name, level.name())),
            format!("{} = {}", expected, sets[name].elements.len()),
            format!("{} = {}", orbit_shape(&h), total),
        ));
    }
    for (name, level, expected) in COARSE_HISTOGRAMS {
        let h = orbit_histogram(&sets[name], level)?;
        out.push(CheckRecord::eq(
            id(s, &format!("labels.{}.{}", name, level.name())),
            expected,
            render_map(&h),
        ));
    }

    let eix = eix_orbits()?;
    let eviii = eviii_orbits()?;
    let a1 = eix.cluster("A_1").expect("A_1 cluster");
    out.push(CheckRecord::eq(
        id(s, "eix_orbits.A_1.edge_FI_+->EII_+"),
        "present",
        yes_no(a1.edges.contains(&("FI_+".into(), "EII_+".into())), "present", "absent"),
    ));
    let a2 = eviii.cluster("A_2").expect("A_2 cluster");
    out.push(CheckRecord::eq(
        id(s, "eviii_orbits.A_2.node_EV_2"),
        128,
        a2.nodes.get("EV_2").copied().unwrap_or(0),
    ));
    let inc = inclusion_graph(&[eix, eviii]);
    out.push(CheckRecord::eq(id(s, "inclusion.nodes"), 12, inc.nodes.len()));
    out.push(CheckRecord::eq(
        id(s, "inclusion.edges"),
        edge_list(INCLUSION_EDGES.iter().copied()),
        edge_list(inc.edges.iter().map(|(a, b)| (a.as_str(), b.as_str()))),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_mode_parses() {
        assert_eq!("full".parse::<JacobiMode>().unwrap(), JacobiMode::Full);
        assert_eq!("sampled:50".parse::<JacobiMode>().unwrap(), JacobiMode::Sampled(50));
        assert!("sampled:".parse::<JacobiMode>().is_err());
        assert!("sampled:0".parse::<JacobiMode>().is_err());
    }

    #[test]
    fn suites_resolve() {
        assert_eq!(resolve_suites(&[]).unwrap().len(), 8);
        let r = resolve_suites(&["tables".into(), "octonion".into(), "tables".into()]).unwrap();
        assert_eq!(r, vec!["octonion", "tables"]);
        assert!(matches!(resolve_suites(&["bogus".into()]), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn shape_rendering() {
        let h: BTreeMap<String, usize> = [("p_1", 1), ("EVI_+", 31), ("EVII_1", 8), ("EVII_2", 8), ("EVII_3", 8)]
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect();
        assert_eq!(orbit_shape(&h), "1+31+3·8");
        let h: BTreeMap<String, usize> = [("EVI'_+", 63), ("EV_1", 72), ("EV_2", 128), ("EV_3", 128)]
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect();
        assert_eq!(orbit_shape(&h), "63+72+128+128");
    }
}
