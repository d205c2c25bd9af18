//! One PASS/FAIL line per acceptance criterion.
//!
//! Every value below is pinned here, independently of the expectations the suites
//! carry, and compared with the `actual` field of the suite records. All arithmetic is
//! exact, so every tolerance is zero; the only slack is in wall-clock budgets.

use std::process::Command;
use std::time::{Duration, Instant};

use antipodal::report::VerificationReport;
use antipodal::suites::{run_suite, JacobiMode, RunConfig, DEFAULT_SEED};

/// exact arithmetic: computed values must equal the pinned ones
const TOLERANCE: usize = 0;
const SEED: u64 = DEFAULT_SEED;
const JACOBI_SAMPLES: usize = 10_000;

const BUDGET_OCTONION: Duration = Duration::from_secs(1);
const BUDGET_TRIALITY: Duration = Duration::from_secs(5);
const BUDGET_CLIFFORD: Duration = Duration::from_secs(10);
const BUDGET_ROOTSYS: Duration = Duration::from_secs(30);
const BUDGET_E8: Duration = Duration::from_secs(300);
const BUDGET_DIAGRAMS: Duration = Duration::from_secs(600);

const OCTONION: &[(&str, &str)] = &[
    ("octonion/norm.basis_pairs", "64/64"),
    ("octonion/norm.random_pairs", "1000/1000"),
    ("octonion/gamma_in_g2", "8/8"),
    ("octonion/a_g2", "order 8, involutive, abelian, closed"),
];

const TRIALITY: &[(&str, &str)] = &[
    ("triality/solve_matches_gamma_beta", "28/28"),
    ("triality/gamma_triples_group_identity", "32/32"),
    ("triality/a_spin8", "32 elements, involutive, 0 non-commuting pairs"),
];

const CLIFFORD: &[(&str, &str)] = &[
    ("clifford/relations.n8", "64/64"),
    ("clifford/relations.n16", "256/256"),
    ("clifford/module_relations.n8", "64/64"),
    ("clifford/module_relations.n16", "256/256"),
    ("clifford/blade_table", "32/32"),
    ("clifford/exp_table", "12/12"),
];

const ROOTSYS: &[(&str, &str)] = &[
    ("rootsys/roots", "240"),
    ("rootsys/positive_roots", "120"),
    ("rootsys/slice.alpha_0", "126"),
    ("rootsys/slice.alpha_+1", "56"),
    ("rootsys/slice.alpha_-1", "56"),
    ("rootsys/slice.alpha_0_beta_0", "72"),
    ("rootsys/slice.alpha_0_beta_1", "27"),
    ("rootsys/lattice_lemma", "9045 pairs, 0 collisions"),
    ("rootsys/torus_classes", "256 classes, involutive, closed"),
];

const E8: &[(&str, &str)] = &[
    ("e8/dim", "248"),
    ("e8/bracket_skew", "skew"),
    ("e8/invariance_sampled", "0 failures in 10000"),
    ("e8/jacobi_sampled", "0 failures in 10000"),
    ("e8/dim.e7", "133"),
    ("e8/dim.e6", "78"),
    ("e8/dim.f4", "52"),
    ("e8/dim.centralizer_f4", "14"),
    ("e8/fixed.phi(-1)", "(120, 128)"),
    ("e8/fixed.x", "(120, 128)"),
    ("e8/fixed.tau_alpha", "(136, 112)"),
];

const BACKEND: &[(&str, &str)] = &[("e8/backend_oracle", "511 rows, 511 agree")];

const TABLE2: &[(&str, usize)] = &[
    ("A(G2)", 8),
    ("A(Spin(8))", 32),
    ("A(F4)", 32),
    ("A_1(E6)", 32),
    ("A_2(E6)", 64),
    ("A_1(E7)", 64),
    ("A_2(E7)", 128),
    ("A_1(E8)", 256),
    ("A_2(E8)", 512),
    ("A(FI_+)", 28),
    ("A(FII_+)", 3),
    ("A_1(EI_x)", 28),
    ("A_2(EI_x)", 64),
    ("A_1(EII_+)", 28),
    ("A_2(EII_+)", 36),
    ("A(EIII_+)", 27),
    ("A(EIV_z)", 4),
    ("A_1(EV_x)", 56),
    ("A_2(EV_phi(-1))", 72),
    ("A_3(EV_x)", 128),
    ("A_1(EVI_+)", 31),
    ("A_2(EVI_+)", 63),
    ("A(EVII_beta)", 56),
    ("A_1(EVIII_+)", 199),
    ("A_2(EVIII_+)", 391),
    ("A_1(EIX_+)", 56),
    ("A_2(EIX_+)", 120),
];

const PARTITIONS: &[(&str, &str)] = &[
    ("tables/partition.A_1(E8)", "1+56+199 = 256, disjoint, covers"),
    ("tables/partition.A_2(E8)", "1+120+391 = 512, disjoint, covers"),
];

const HISTOGRAMS: &[(&str, &str)] = &[
    ("diagrams/histogram.A_1(EIX_+).E7", "1+31+3·8 = 56"),
    ("diagrams/histogram.A_1(EIX_+).E6", "3+28+3·3+4·4 = 56"),
    ("diagrams/histogram.A_1(EIX_+).F4", "7+28+7·3 = 56"),
    ("diagrams/histogram.A_1(EVIII_+).E7", "31+3·56 = 199"),
    ("diagrams/histogram.A_1(EVIII_+).E6", "3+3·28+4·28 = 199"),
    ("diagrams/histogram.A_1(EVIII_+).F4", "3+7·28 = 199"),
    ("diagrams/histogram.A_2(EIX_+).E7", "1+63+56 = 120"),
    ("diagrams/histogram.A_2(EIX_+).E6", "3+36+3·27 = 120"),
    ("diagrams/histogram.A_2(EVIII_+).E7", "63+72+128+128 = 391"),
    ("diagrams/histogram.A_2(EVIII_+).E6", "27+3·36+4·64 = 391"),
];

const GRASS4: &[(&str, &str)] = &[("catalog/A_1(EVI_+)_cap_G4(R^12)_+", "30")];

struct Outcome {
    ok: bool,
    detail: String,
}

/// Pinned values against the records' actual fields, plus every record passing.
fn pinned(report: &VerificationReport, expect: &[(&str, &str)]) -> Outcome {
    let mut bad = Vec::new();
    for (id, want) in expect {
        match report.check(id) {
            None => bad.push(format!("{} missing", id)),
            Some(c) if c.actual != *want || !c.passed() => {
                bad.push(format!("{}: pinned {}, actual {}", id, want, c.actual))
            }
            Some(_) => {}
        }
    }
    Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} values", expect.len())
        } else {
            bad.join("; ")
        },
    }
}

fn all_pass(report: &VerificationReport) -> Outcome {
    let bad: Vec<String> = report.failures().map(|c| c.id.clone()).collect();
    Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} records", report.checks.len())
        } else {
            format!("failing: {}", bad.join(", "))
        },
    }
}

fn and(a: Outcome, b: Outcome) -> Outcome {
    Outcome {
        ok: a.ok && b.ok,
        detail: format!("{}; {}", a.detail, b.detail),
    }
}

fn within(elapsed: Duration, budget: Duration) -> Outcome {
    Outcome {
        ok: elapsed <= budget,
        detail: format!("{:.2}s of {}s", elapsed.as_secs_f64(), budget.as_secs()),
    }
}

fn timed(name: &str, cfg: &RunConfig) -> (VerificationReport, Duration) {
    let t = Instant::now();
    let r = run_suite(name, cfg).unwrap_or_else(|e| panic!("suite {} errored: {}", name, e));
    (r, t.elapsed())
}

fn main() {
    assert_eq!(TOLERANCE, 0);
    let cfg = RunConfig {
        seed: SEED,
        jacobi: JacobiMode::Sampled(JACOBI_SAMPLES),
        ..RunConfig::default()
    };
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();

    let (oct, t) = timed("octonion", &cfg);
    results.push((1, "octonion suite", and(and(pinned(&oct, OCTONION), all_pass(&oct)), within(t, BUDGET_OCTONION))));

    let (tri, t) = timed("triality", &cfg);
    results.push((2, "triality suite", and(and(pinned(&tri, TRIALITY), all_pass(&tri)), within(t, BUDGET_TRIALITY))));

    let (cl, t) = timed("clifford", &cfg);
    results.push((3, "clifford suite", and(and(pinned(&cl, CLIFFORD), all_pass(&cl)), within(t, BUDGET_CLIFFORD))));

    let (rs, t) = timed("rootsys", &cfg);
    results.push((4, "root suite", and(and(pinned(&rs, ROOTSYS), all_pass(&rs)), within(t, BUDGET_ROOTSYS))));

    let (e8, t) = timed("e8", &cfg);
    results.push((5, "e8 suite", and(pinned(&e8, E8), within(t, BUDGET_E8))));
    results.push((6, "backend oracle on A_2(E8)", pinned(&e8, BACKEND)));

    let (tables, _) = timed("tables", &cfg);
    let table_pins: Vec<(String, String)> = TABLE2
        .iter()
        .map(|(n, k)| (format!("tables/{}", n), k.to_string()))
        .collect();
    let table_refs: Vec<(&str, &str)> = table_pins.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    results.push((
        7,
        "table cardinalities and partitions",
        and(and(pinned(&tables, &table_refs), pinned(&tables, PARTITIONS)), all_pass(&tables)),
    ));

    let (diag, t) = timed("diagrams", &cfg);
    results.push((8, "orbit histograms", and(pinned(&diag, HISTOGRAMS), within(t, BUDGET_DIAGRAMS))));

    let (cat, _) = timed("catalog", &cfg);
    results.push((9, "A_1(EVI_+) cap G4(R^12)_+", pinned(&cat, GRASS4)));

    // two separate processes, same config and seed
    let exe = env!("CARGO_BIN_EXE_antipodal");
    let args = ["verify", "--suite", "octonion", "--suite", "rootsys", "--suite", "tables", "--seed", "7", "--format", "json"];
    let first = Command::new(exe).args(args).output().expect("run binary");
    let second = Command::new(exe).args(args).output().expect("run binary");
    let in_process = VerificationReport::merge(vec![oct.clone(), rs.clone(), tables.clone()]).to_json() + "\n";
    let same = first.stdout == second.stdout && first.stdout == in_process.as_bytes();
    results.push((
        10,
        "byte-identical JSON across runs",
        Outcome {
            ok: same && first.status.success(),
            detail: format!("{} bytes, exit {:?}", first.stdout.len(), first.status.code()),
        },
    ));

    let mut failed = 0;
    for (n, name, o) in &results {
        println!("{} criterion {:>2} {}: {}", if o.ok { "PASS" } else { "FAIL" }, n, name, o.detail);
        if !o.ok {
            failed += 1;
        }
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
