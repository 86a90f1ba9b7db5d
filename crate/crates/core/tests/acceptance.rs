//! Acceptance criteria. Run with
//! `cargo test -p bary-core --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

mod common;

use std::time::{Duration, Instant};

use bary::derived::{barycentric_subdivision, is_flag};
use bary::graphs::{clique_complex, comparability_graph, transitive_orientations, LabeledGraph};
use bary::reconstruct::{
    complex_from_face_poset, is_complex_comparability_graph, poset_from_orientation,
    reconstruct_from_comparability_graph,
};
use bary::sample::{random_bijection, random_complex};
use bary::verify::{
    duality_violations, enumerate_complexes, enumerate_families, verify_equivalences, verify_subdivision_rigidity,
};
use bary::{are_isomorphic, SimplicialComplex};
use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from_failures(checked: usize, failures: &[String]) -> Self {
        let detail = match failures.first() {
            None => format!("{checked} checks"),
            Some(first) => format!("{} of {checked} checks failed, first: {first}", failures.len()),
        };
        Outcome {
            passed: failures.is_empty(),
            detail,
        }
    }
}

fn run(id: usize, name: &str, budget: Option<Duration>, check: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let in_time = budget.is_none_or(|b| elapsed <= b);
    let passed = outcome.passed && in_time;
    let budget_text = budget.map(|b| format!(" (limit {}s)", b.as_secs())).unwrap_or_default();
    println!(
        "{} [{id}] {name}: {}; {:.2}s{budget_text}",
        if passed { "PASS" } else { "FAIL" },
        outcome.detail,
        elapsed.as_secs_f64()
    );
    passed
}

fn rigidity_round_trip() -> Outcome {
    match verify_subdivision_rigidity(5) {
        Ok(r) => Outcome {
            passed: r.passed(),
            detail: format!(
                "{} complexes, {} pair checks, {} failures",
                r.universe_size,
                r.pair_checks,
                r.failures.len()
            ),
        },
        Err(e) => Outcome {
            passed: false,
            detail: e.to_string(),
        },
    }
}

fn equivalent_invariants() -> Outcome {
    match verify_equivalences(4) {
        Ok(r) => Outcome {
            passed: r.passed(),
            detail: format!(
                "{} complexes, {} pair checks, {} failures",
                r.universe_size,
                r.pair_checks,
                r.failures.len()
            ),
        },
        Err(e) => Outcome {
            passed: false,
            detail: e.to_string(),
        },
    }
}

fn short_cycles_rejected() -> Outcome {
    let mut failures = Vec::new();
    for (k, expected) in [(3, "not_face_poset"), (4, "not_face_poset"), (5, "not_orientable")] {
        let g = LabeledGraph::cycle(k);
        let status = reconstruct_from_comparability_graph(&g).status();
        if is_complex_comparability_graph(&g) || status != expected {
            failures.push(format!("C{k}: status {status}, expected {expected}"));
        }
    }
    Outcome::from_failures(3, &failures)
}

fn hexagon() -> Outcome {
    let g = LabeledGraph::cycle(6);
    let triangle = SimplicialComplex::simplex_boundary(3).unwrap();
    let mut failures = Vec::new();
    let orientations = transitive_orientations(&g);
    if orientations.len() != 2 {
        failures.push(format!("{} transitive orientations", orientations.len()));
    }
    let results: Vec<SimplicialComplex> = orientations
        .iter()
        .filter_map(|o| {
            let poset = poset_from_orientation(&g, o).ok()?;
            complex_from_face_poset(&poset).ok().map(|p| p.complex)
        })
        .collect();
    if results.len() != orientations.len() {
        failures.push(format!("only {} orientations admit a complex", results.len()));
    }
    if results.iter().any(|c| are_isomorphic(c, &triangle).is_none()) {
        failures.push("an orientation gave a complex other than the triangle boundary".into());
    }
    let report = reconstruct_from_comparability_graph(&g);
    if report.complex() != Some(&triangle) || !report.both_orientations_admissible {
        failures.push(format!("reconstruction returned {:?}", report.result));
    }
    Outcome::from_failures(4, &failures)
}

fn duality_identities() -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 1..=5 {
        for c in enumerate_families(n).unwrap() {
            checked += 1;
            failures.extend(duality_violations(&c));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..500 {
        let c = random_complex(&mut rng, 10, 8);
        checked += 1;
        failures.extend(duality_violations(&c));
    }
    Outcome::from_failures(checked, &failures)
}

fn subdivision_violations(c: &SimplicialComplex, sub: &SimplicialComplex, label: &str) -> Vec<String> {
    let mut out = Vec::new();
    if !is_flag(sub) || clique_complex(&sub.one_skeleton_graph()).unwrap() != *sub {
        out.push(format!("{label} of {c:?} is not flag"));
    }
    if sub.dimension() != c.dimension() {
        out.push(format!("{label} of {c:?} has dimension {}", sub.dimension()));
    }
    if sub.euler_characteristic() != c.euler_characteristic() {
        out.push(format!(
            "{label} of {c:?} has Euler characteristic {}",
            sub.euler_characteristic()
        ));
    }
    out
}

fn subdivision_properties() -> Outcome {
    let mut checked = 0;
    let mut second = 0;
    let mut failures = Vec::new();
    for n in 1..=5 {
        for c in enumerate_families(n).unwrap() {
            if c.is_void() || c.is_empty_complex() {
                continue;
            }
            let sub = barycentric_subdivision(&c).unwrap().complex;
            checked += 1;
            failures.extend(subdivision_violations(&c, &sub, "subdivision"));
            if sub.faces().len() <= bary::MAX_VERTICES {
                let sub2 = barycentric_subdivision(&sub).unwrap().complex;
                second += 1;
                failures.extend(subdivision_violations(&c, &sub2, "second subdivision"));
            }
        }
    }
    let mut outcome = Outcome::from_failures(checked + second, &failures);
    outcome.detail = format!("{checked} first and {second} second subdivisions, {}", outcome.detail);
    outcome
}

fn orientation_counts() -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 1..=4 {
        for c in enumerate_families(n).unwrap() {
            if !c.is_connected() || c.facets().len() < 2 {
                continue;
            }
            let g = comparability_graph(&c).unwrap();
            let fast = transitive_orientations(&g).len();
            let naive = naive_orientation_count(&g);
            checked += 1;
            if fast != 2 || naive != 2 {
                failures.push(format!("{c:?}: {fast} orientations, oracle {naive}"));
            }
        }
    }
    Outcome::from_failures(checked, &failures)
}

/// Random complexes on 4, 5 and 6 vertices, half of them relabeled copies of
/// the other half, plus every class on 4 vertices.
fn fixture_corpus() -> Vec<Vec<SimplicialComplex>> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut groups = Vec::new();
    for (n, originals) in [(4, 30), (5, 50), (6, 50)] {
        let mut group: Vec<SimplicialComplex> = (0..originals).map(|_| random_complex(&mut rng, n, 5)).collect();
        let copies: Vec<SimplicialComplex> = group
            .iter()
            .map(|c| c.relabel(&random_bijection(&mut rng, n)))
            .collect();
        group.extend(copies);
        if n == 4 {
            group.extend(enumerate_complexes(4, true).unwrap());
        }
        groups.push(group);
    }
    groups
}

fn oracle_agreement() -> Outcome {
    let mut checked = 0;
    let mut positives = 0;
    let mut failures = Vec::new();
    for group in fixture_corpus() {
        for (i, a) in group.iter().enumerate() {
            for b in &group[i..] {
                let fast = are_isomorphic(a, b);
                let slow = brute_isomorphic(a, b);
                checked += 1;
                positives += slow as usize;
                if fast.is_some() != slow || fast.as_ref().is_some_and(|w| !w.is_witness(a, b)) {
                    failures.push(format!("{a:?} vs {b:?}: canonical {}, oracle {slow}", fast.is_some()));
                }
            }
        }
    }
    let mut outcome = Outcome::from_failures(checked, &failures);
    outcome.passed &= checked >= 10_000;
    outcome.detail = format!("{positives} isomorphic pairs, {}", outcome.detail);
    outcome
}

#[test]
fn acceptance_criteria() {
    let results = [
        run(
            1,
            "rigidity round trip on <= 5 vertices",
            Some(Duration::from_secs(60)),
            rigidity_round_trip,
        ),
        run(
            2,
            "equivalent invariants on <= 4 vertices",
            Some(Duration::from_secs(300)),
            equivalent_invariants,
        ),
        run(
            3,
            "C3, C4, C5 are not comparability graphs of complexes",
            None,
            short_cycles_rejected,
        ),
        run(4, "C6 reconstructs to the triangle boundary", None, hexagon),
        run(5, "duality identities", None, duality_identities),
        run(
            6,
            "subdivision is flag, keeps dimension and Euler characteristic",
            None,
            subdivision_properties,
        ),
        run(
            7,
            "two transitive orientations for connected complexes",
            None,
            orientation_counts,
        ),
        run(
            8,
            "canonical isomorphism agrees with the permutation oracle",
            None,
            oracle_agreement,
        ),
    ];
    let failed: Vec<usize> = (1..).zip(results).filter(|&(_, ok)| !ok).map(|(i, _)| i).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
