//! Exhaustive checks over every small complex: rigidity of the comparability
//! graph and the equivalence of the isomorphism invariants.

use std::collections::HashSet;

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

use crate::complex::{are_isomorphic, CanonicalForm, SimplicialComplex};
use crate::derived::{
    alexander_dual, barycentric_subdivision, complement_complex, facet_ideal_generators, stanley_reisner_generators,
};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graphs::{comparability_graph, GraphCanonicalForm};
use crate::reconstruct::reconstruct_from_comparability_graph;
use crate::sample::random_bijection;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

pub const MAX_LABELED_UNIVERSE: usize = 5;
pub const MAX_UNLABELED_UNIVERSE: usize = 6;
pub const MAX_RIGIDITY_VERTICES: usize = 5;
pub const MAX_EQUIVALENCE_VERTICES: usize = 4;

/// Outcome of a verification run. `failures` lists counterexamples and is
/// expected to be empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub universe_size: usize,
    pub pair_checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Visits every antichain of `sets` (in index order) as a list of members.
fn for_each_antichain(sets: &[VertexSet], start: usize, chosen: &mut Vec<VertexSet>, f: &mut dyn FnMut(&[VertexSet])) {
    f(chosen);
    for i in start..sets.len() {
        let s = sets[i];
        if chosen.iter().all(|&c| !c.is_subset(s) && !s.is_subset(c)) {
            chosen.push(s);
            for_each_antichain(sets, i + 1, chosen, f);
            chosen.pop();
        }
    }
}

fn nonempty_subsets(n: usize) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = VertexSet::full(n).subsets().filter(|s| !s.is_empty()).collect();
    all.sort();
    all
}

/// Every complex on `{1, ..., n}`, including the void and empty complexes and
/// those missing ground vertices (one per antichain of subsets).
pub fn enumerate_families(n: usize) -> Result<Vec<SimplicialComplex>> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if n > MAX_LABELED_UNIVERSE {
        return Err(Error::UniverseTooLarge {
            n,
            max: MAX_LABELED_UNIVERSE,
        });
    }
    let subsets = nonempty_subsets(n);
    let mut out = vec![SimplicialComplex::empty(n)?];
    for_each_antichain(&subsets, 0, &mut Vec::new(), &mut |facets| {
        out.push(SimplicialComplex::from_sorted_antichain(n, sorted(facets)));
    });
    Ok(out)
}

fn sorted(facets: &[VertexSet]) -> Vec<VertexSet> {
    let mut v = facets.to_vec();
    v.sort();
    v
}

/// Complexes on `{1, ..., n}` in which every vertex is a face. With
/// `up_to_iso`, one representative per isomorphism class: the canonically
/// relabeled complex, in canonical-form order.
pub fn enumerate_complexes(n: usize, up_to_iso: bool) -> Result<Vec<SimplicialComplex>> {
    enumerate_complexes_with(n, up_to_iso, Execution::default())
}

pub fn enumerate_complexes_with(n: usize, up_to_iso: bool, exec: Execution) -> Result<Vec<SimplicialComplex>> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let max = if up_to_iso {
        MAX_UNLABELED_UNIVERSE
    } else {
        MAX_LABELED_UNIVERSE
    };
    if n > max {
        return Err(Error::UniverseTooLarge { n, max });
    }
    let subsets = nonempty_subsets(n);
    let full = VertexSet::full(n);
    let covers = |facets: &[VertexSet]| facets.iter().fold(VertexSet::EMPTY, |a, &f| a.union(f)) == full;

    if !up_to_iso {
        let mut out = Vec::new();
        for_each_antichain(&subsets, 0, &mut Vec::new(), &mut |facets| {
            if covers(facets) {
                out.push(SimplicialComplex::from_sorted_antichain(n, sorted(facets)));
            }
        });
        return Ok(out);
    }

    // split on the first member so branches can run independently
    let branches = exec.map_range(subsets.len(), |i| {
        let mut seen: HashSet<Vec<VertexSet>> = HashSet::new();
        let mut chosen = vec![subsets[i]];
        for_each_antichain(&subsets, i + 1, &mut chosen, &mut |facets| {
            if covers(facets) {
                let c = SimplicialComplex::from_sorted_antichain(n, sorted(facets));
                seen.insert(c.canonical_form().facet_encoding);
            }
        });
        seen
    });
    let mut classes: Vec<Vec<VertexSet>> = branches
        .into_iter()
        .flatten()
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    classes.sort();
    Ok(classes
        .into_iter()
        .map(|facets| SimplicialComplex::from_sorted_antichain(n, facets))
        .collect())
}

/// Isomorphism classes of complexes on `1..=max_n` vertices, smallest ground sets first.
pub fn universe_up_to(max_n: usize, exec: Execution) -> Result<Vec<SimplicialComplex>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_complexes_with(n, true, exec)?);
    }
    Ok(out)
}

fn relabeled_copy(c: &SimplicialComplex, seed: u64) -> SimplicialComplex {
    let mut rng = StdRng::seed_from_u64(seed);
    c.relabel(&random_bijection(&mut rng, c.ground_size()))
}

fn describe(c: &SimplicialComplex) -> String {
    let facets: Vec<String> = c.facets().iter().map(|f| f.to_string()).collect();
    format!("[{}] on {}", facets.join(","), c.ground_size())
}

struct RigidityProfile {
    complex_form: CanonicalForm,
    graph_form: GraphCanonicalForm,
    relabeled_graph_form: GraphCanonicalForm,
    relabeled_form: CanonicalForm,
    reconstruction: std::result::Result<CanonicalForm, String>,
}

pub fn verify_subdivision_rigidity(n: usize) -> Result<VerificationReport> {
    verify_subdivision_rigidity_with(n, Execution::default())
}

/// Over all complexes on up to `n` vertices (up to isomorphism): comparability
/// graphs are isomorphic iff the complexes are, and reconstruction from the
/// comparability graph returns the complex.
pub fn verify_subdivision_rigidity_with(n: usize, exec: Execution) -> Result<VerificationReport> {
    if n > MAX_RIGIDITY_VERTICES {
        return Err(Error::UniverseTooLarge {
            n,
            max: MAX_RIGIDITY_VERTICES,
        });
    }
    let universe = universe_up_to(n, exec)?;
    let profiles: Vec<Result<RigidityProfile>> = exec.map_range(universe.len(), |i| {
        let c = &universe[i];
        let copy = relabeled_copy(c, i as u64);
        let graph = comparability_graph(c)?;
        let reconstruction = match reconstruct_from_comparability_graph(&graph).result {
            Ok(r) => Ok(r.complex.canonical_form()),
            Err(e) => Err(e.to_string()),
        };
        Ok(RigidityProfile {
            complex_form: c.canonical_form(),
            graph_form: graph.canonical_form()?,
            relabeled_graph_form: comparability_graph(&copy)?.canonical_form()?,
            relabeled_form: copy.canonical_form(),
            reconstruction,
        })
    });
    let profiles = profiles.into_iter().collect::<Result<Vec<_>>>()?;

    let mut failures = Vec::new();
    let mut pair_checks = 0usize;
    for (c, p) in universe.iter().zip(&profiles) {
        match &p.reconstruction {
            Ok(form) if *form == p.complex_form => {}
            Ok(_) => failures.push(format!("reconstruction of {} is not isomorphic to it", describe(c))),
            Err(e) => failures.push(format!("reconstruction of {} failed: {e}", describe(c))),
        }
        pair_checks += 1;
        if p.relabeled_form != p.complex_form || p.relabeled_graph_form != p.graph_form {
            failures.push(format!("relabeling of {} changed an invariant", describe(c)));
        }
    }
    let pair_results = exec.map_range(universe.len(), |i| {
        let mut local = Vec::new();
        for j in i + 1..universe.len() {
            let complexes_iso = profiles[i].complex_form == profiles[j].complex_form;
            let graphs_iso = profiles[i].graph_form == profiles[j].graph_form;
            if complexes_iso != graphs_iso {
                local.push(format!(
                    "{} vs {}: complexes isomorphic = {complexes_iso}, comparability graphs isomorphic = {graphs_iso}",
                    describe(&universe[i]),
                    describe(&universe[j])
                ));
            }
        }
        (universe.len() - i - 1, local)
    });
    for (count, local) in pair_results {
        pair_checks += count;
        failures.extend(local);
    }
    Ok(VerificationReport {
        universe_size: universe.len(),
        pair_checks,
        failures,
        notes: vec![
            format!("universe: complexes on 1..={n} vertices up to isomorphism, every vertex a face"),
            "each complex is also compared with one random relabeling of itself".into(),
        ],
    })
}

/// Invariants of one complex that each criterion compares.
struct EquivalenceProfile {
    complex: CanonicalForm,
    dual: CanonicalForm,
    complement: CanonicalForm,
    subdivision: CanonicalForm,
    second_subdivision: SecondSubdivision,
    graph: GraphCanonicalForm,
    sr_generators: CanonicalForm,
    facet_generators: CanonicalForm,
}

#[derive(Clone, PartialEq, Eq)]
enum SecondSubdivision {
    Form(CanonicalForm),
    /// Exceeds the 64-vertex cap; carries the vertex count it would need.
    TooLarge(usize),
}

fn generator_form(n: usize, sets: &[VertexSet]) -> CanonicalForm {
    CanonicalForm {
        ground_size: n,
        facet_encoding: crate::canon::canonical_labeling(n, sets).encoding,
    }
}

fn equivalence_profile(c: &SimplicialComplex) -> Result<EquivalenceProfile> {
    let sub = barycentric_subdivision(c)?.complex;
    let sub_faces = sub.faces().len();
    let second_subdivision = if sub_faces <= MAX_VERTICES {
        SecondSubdivision::Form(barycentric_subdivision(&sub)?.complex.canonical_form())
    } else {
        SecondSubdivision::TooLarge(sub_faces)
    };
    let n = c.ground_size();
    Ok(EquivalenceProfile {
        complex: c.canonical_form(),
        dual: alexander_dual(c).canonical_form(),
        complement: complement_complex(c).canonical_form(),
        subdivision: sub.canonical_form(),
        second_subdivision,
        graph: comparability_graph(c)?.canonical_form()?,
        sr_generators: generator_form(n, &stanley_reisner_generators(c)),
        facet_generators: generator_form(n, &facet_ideal_generators(c)),
    })
}

/// Duality identities for one complex; returns a failure description per violation.
pub fn duality_violations(c: &SimplicialComplex) -> Vec<String> {
    let mut out = Vec::new();
    let n = c.ground_size();
    let dual = alexander_dual(c);
    if alexander_dual(&dual) != *c {
        out.push(format!("double dual of {} differs", describe(c)));
    }
    let mut expected: Vec<VertexSet> = c.minimal_nonfaces().iter().map(|f| f.complement(n)).collect();
    expected.sort();
    if dual.facets() != expected.as_slice() {
        out.push(format!(
            "dual facets of {} are not complements of its minimal non-faces",
            describe(c)
        ));
    }
    let lhs: HashSet<VertexSet> = stanley_reisner_generators(&dual).into_iter().collect();
    let rhs: HashSet<VertexSet> = facet_ideal_generators(&complement_complex(c)).into_iter().collect();
    if lhs != rhs {
        out.push(format!(
            "Stanley-Reisner generators of the dual of {} differ from complement facets",
            describe(c)
        ));
    }
    if complement_complex(&complement_complex(c)) != *c {
        out.push(format!("double complement of {} differs", describe(c)));
    }
    out
}

pub fn verify_equivalences(n: usize) -> Result<VerificationReport> {
    verify_equivalences_with(n, Execution::default())
}

/// For every pair from the universe on up to `n` vertices (each class plus a
/// relabeled copy), checks that these agree: complexes isomorphic, Alexander
/// duals isomorphic, complements isomorphic, subdivisions isomorphic, second
/// subdivisions isomorphic, comparability graphs isomorphic, and the
/// Stanley–Reisner and facet generator families isomorphic.
pub fn verify_equivalences_with(n: usize, exec: Execution) -> Result<VerificationReport> {
    if n > MAX_EQUIVALENCE_VERTICES {
        return Err(Error::UniverseTooLarge {
            n,
            max: MAX_EQUIVALENCE_VERTICES,
        });
    }
    let classes = universe_up_to(n, exec)?;
    let mut universe = classes.clone();
    universe.extend(
        classes
            .iter()
            .enumerate()
            .map(|(i, c)| relabeled_copy(c, 1_000 + i as u64)),
    );
    let profiles = exec
        .map(&universe, equivalence_profile)
        .into_iter()
        .collect::<Result<Vec<_>>>()?;

    let mut failures: Vec<String> = Vec::new();
    for c in &universe {
        failures.extend(duality_violations(c));
    }

    let pair_results = exec.map_range(universe.len(), |i| {
        let mut local = Vec::new();
        let mut skipped = 0usize;
        for j in i + 1..universe.len() {
            let (a, b) = (&profiles[i], &profiles[j]);
            let item1 = a.complex == b.complex;
            let mut items = vec![
                ("dual", a.dual == b.dual),
                ("complement", a.complement == b.complement),
                ("subdivision", a.subdivision == b.subdivision),
                ("comparability graph", a.graph == b.graph),
                ("Stanley-Reisner generators", a.sr_generators == b.sr_generators),
                ("facet generators", a.facet_generators == b.facet_generators),
            ];
            match (&a.second_subdivision, &b.second_subdivision) {
                (SecondSubdivision::Form(x), SecondSubdivision::Form(y)) => items.push(("second subdivision", x == y)),
                (SecondSubdivision::TooLarge(x), SecondSubdivision::TooLarge(y)) if x == y => skipped += 1,
                _ => items.push(("second subdivision", false)),
            }
            let (ci, cj) = (&universe[i], &universe[j]);
            for (name, holds) in items {
                if holds != item1 {
                    local.push(format!(
                        "{} vs {}: complexes isomorphic = {item1} but {name} isomorphic = {holds}",
                        describe(ci),
                        describe(cj)
                    ));
                }
            }
            if item1 {
                match are_isomorphic(ci, cj) {
                    Some(w) => {
                        let map = |sets: Vec<VertexSet>| {
                            let mut v: Vec<VertexSet> = sets.into_iter().map(|s| w.apply(s)).collect();
                            v.sort();
                            v
                        };
                        if map(stanley_reisner_generators(ci)) != stanley_reisner_generators(cj)
                            || map(facet_ideal_generators(ci)) != facet_ideal_generators(cj)
                        {
                            local.push(format!(
                                "witness {:?} for {} vs {} does not carry generators onto generators",
                                w.images(),
                                describe(ci),
                                describe(cj)
                            ));
                        }
                    }
                    None => local.push(format!(
                        "{} vs {}: canonical forms agree but no witness found",
                        describe(ci),
                        describe(cj)
                    )),
                }
            }
        }
        (universe.len() - i - 1, skipped, local)
    });
    let mut pair_checks = 0;
    let mut skipped = 0;
    for (count, s, local) in pair_results {
        pair_checks += count;
        skipped += s;
        failures.extend(local);
    }
    let mut notes = vec![
        format!("universe: complexes on 1..={n} vertices up to isomorphism plus one relabeled copy of each"),
        "ring isomorphism of Stanley-Reisner and facet rings is certified combinatorially: generator \
         families are compared up to relabeling, and isomorphism witnesses must carry generators onto generators"
            .into(),
        "second subdivision compared at k = 2".into(),
    ];
    if skipped > 0 {
        notes.push(format!(
            "{skipped} pairs skipped for the second subdivision: both exceed 64 vertices with equal vertex counts"
        ));
    }
    Ok(VerificationReport {
        universe_size: universe.len(),
        pair_checks,
        failures,
        notes,
    })
}
