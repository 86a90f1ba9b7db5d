//! Recovering a simplicial complex from its comparability graph or its
//! barycentric subdivision.
//!
//! Every transitive orientation of the graph is a candidate inclusion order.
//! An orientation is accepted when the resulting poset is exactly the face
//! poset of a complex whose vertices are the poset's minimal elements. For a
//! connected complex at most two orientations are candidates (an order and
//! its reverse), and whenever both are accepted the two complexes are
//! isomorphic, so the answer is unique up to isomorphism.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::complex::SimplicialComplex;
use crate::error::{Error, FacePosetViolation, Result};
use crate::graphs::{self, LabeledGraph, Orientation};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Upper bound on transitive orientations tried per connected component.
pub const ORIENTATION_LIMIT: usize = 1 << 16;

/// Strict order on graph vertices induced by a transitive orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacePoset {
    size: usize,
    /// `below[v]`: elements strictly less than `v`, sorted.
    below: Vec<Vec<usize>>,
    /// `above[v]`: elements strictly greater than `v`, sorted.
    above: Vec<Vec<usize>>,
    grades: Vec<usize>,
}

impl FacePoset {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.below[b].binary_search(&a).is_ok()
    }

    /// Length of the longest chain ending at each element (minimal elements have grade 0).
    pub fn grades(&self) -> &[usize] {
        &self.grades
    }

    /// Minimal elements, in increasing order.
    pub fn initial(&self) -> Vec<usize> {
        (0..self.size).filter(|&v| self.below[v].is_empty()).collect()
    }

    /// Maximal elements, in increasing order.
    pub fn terminal(&self) -> Vec<usize> {
        (0..self.size).filter(|&v| self.above[v].is_empty()).collect()
    }
}

/// Builds the strict order `x < y` iff the arc `x -> y` is present.
pub fn poset_from_orientation(graph: &LabeledGraph, orientation: &Orientation) -> Result<FacePoset> {
    if !orientation.matches(graph) {
        return Err(Error::OrientationMismatch);
    }
    if let Some((from, via, to)) = orientation.transitivity_violation(graph) {
        return Err(Error::NotTransitive { from, via, to });
    }
    let n = graph.vertex_count();
    let mut below = vec![Vec::new(); n];
    let mut above = vec![Vec::new(); n];
    for &(a, b) in orientation.arcs() {
        below[b].push(a);
        above[a].push(b);
    }
    for list in below.iter_mut().chain(above.iter_mut()) {
        list.sort_unstable();
    }
    // transitive, hence acyclic: grade = size of the down-set's longest chain,
    // computed in order of increasing down-set size
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| below[v].len());
    let mut grades = vec![0usize; n];
    for &v in &order {
        grades[v] = below[v].iter().map(|&u| grades[u] + 1).max().unwrap_or(0);
    }
    Ok(FacePoset {
        size: n,
        below,
        above,
        grades,
    })
}

/// Complex read off a face poset, with the poset element behind each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetComplex {
    pub complex: SimplicialComplex,
    /// `sources[i]` is the poset element that became vertex `i + 1`.
    pub sources: Vec<usize>,
    /// Vertex set assigned to each poset element.
    pub faces: Vec<VertexSet>,
}

/// Interprets the poset as a face poset: minimal elements become vertices and
/// each element becomes the set of minimal elements below it. Accepts only
/// when that map is injective, an order embedding, and its image is exactly
/// the set of nonempty faces generated by the maximal elements.
pub fn complex_from_face_poset(poset: &FacePoset) -> Result<PosetComplex> {
    let violation = |v| Err(Error::NotAFacePoset(v));
    if poset.size == 0 {
        return violation(FacePosetViolation::Empty);
    }
    let sources = poset.initial();
    if sources.len() > MAX_VERTICES {
        return violation(FacePosetViolation::TooManySources { count: sources.len() });
    }
    let mut vertex_of = vec![0usize; poset.size];
    for (i, &s) in sources.iter().enumerate() {
        vertex_of[s] = i + 1;
    }
    let faces: Vec<VertexSet> = (0..poset.size)
        .map(|v| {
            let mut set: VertexSet = poset.below[v]
                .iter()
                .filter(|&&u| vertex_of[u] != 0)
                .map(|&u| vertex_of[u])
                .collect();
            if vertex_of[v] != 0 {
                set.insert(vertex_of[v]);
            }
            set
        })
        .collect();

    let mut first_with: HashMap<VertexSet, usize> = HashMap::with_capacity(poset.size);
    for (v, &f) in faces.iter().enumerate() {
        if let Some(&u) = first_with.get(&f) {
            return violation(FacePosetViolation::NotInjective { first: u, second: v });
        }
        first_with.insert(f, v);
    }
    for u in 0..poset.size {
        for v in 0..poset.size {
            if u != v && poset.less(u, v) != faces[u].is_proper_subset(faces[v]) {
                return violation(FacePosetViolation::OrderMismatch { lower: u, upper: v });
            }
        }
    }
    let terminal = poset.terminal();
    // a top element with k vertices already forces 2^k - 1 faces
    if let Some(&t) = terminal
        .iter()
        .find(|&&t| faces[t].len() >= 63 || (1usize << faces[t].len()) - 1 > poset.size)
    {
        let generated = if faces[t].len() >= 63 {
            usize::MAX
        } else {
            (1usize << faces[t].len()) - 1
        };
        return violation(FacePosetViolation::FaceSetMismatch {
            generated,
            elements: poset.size,
        });
    }
    let complex = SimplicialComplex::from_facets(sources.len(), terminal.iter().map(|&t| faces[t]))
        .expect("sources fit the ground set");
    // the image is injective and downward closed only if the counts agree
    let generated = complex.faces().len();
    if generated != poset.size {
        return violation(FacePosetViolation::FaceSetMismatch {
            generated,
            elements: poset.size,
        });
    }
    Ok(PosetComplex {
        complex,
        sources,
        faces,
    })
}

/// Successful reconstruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reconstruction {
    pub complex: SimplicialComplex,
    /// `source_vertices[i]` is the graph vertex that became vertex `i + 1`.
    pub source_vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionReport {
    pub result: Result<Reconstruction>,
    pub orientations_tried: usize,
    /// Some component admitted more than one orientation.
    pub both_orientations_admissible: bool,
    /// Accepted orientations summed over components.
    pub admissible_orientations: usize,
}

impl ReconstructionReport {
    /// `"ok"`, `"not_orientable"`, `"not_face_poset"`, `"not_flag"`, or another error kind.
    pub fn status(&self) -> &'static str {
        match &self.result {
            Ok(_) => "ok",
            Err(e) => e.kind(),
        }
    }

    pub fn complex(&self) -> Option<&SimplicialComplex> {
        self.result.as_ref().ok().map(|r| &r.complex)
    }

    fn failed(error: Error) -> Self {
        ReconstructionReport {
            result: Err(error),
            orientations_tried: 0,
            both_orientations_admissible: false,
            admissible_orientations: 0,
        }
    }
}

struct ComponentResult {
    result: Result<(SimplicialComplex, Vec<usize>)>,
    tried: usize,
    admissible: usize,
}

/// Reconstructs per connected component and returns the disjoint union on a
/// concatenated ground set.
pub fn reconstruct_from_comparability_graph(graph: &LabeledGraph) -> ReconstructionReport {
    if graph.vertex_count() == 0 {
        return ReconstructionReport::failed(Error::EmptyInput);
    }
    let mut report = ReconstructionReport {
        result: Err(Error::EmptyInput),
        orientations_tried: 0,
        both_orientations_admissible: false,
        admissible_orientations: 0,
    };
    let mut facets = Vec::new();
    let mut source_vertices = Vec::new();
    for comp in graph.components() {
        let sub = graph.induced_subgraph(&comp);
        let part = reconstruct_connected(&sub);
        report.orientations_tried += part.tried;
        report.admissible_orientations += part.admissible;
        report.both_orientations_admissible |= part.admissible > 1;
        match part.result {
            Ok((complex, sources)) => {
                let offset = source_vertices.len();
                if offset + complex.ground_size() > MAX_VERTICES {
                    report.result = Err(Error::GroundSetTooLarge {
                        size: offset + complex.ground_size(),
                    });
                    return report;
                }
                let shift: Vec<usize> = (offset..offset + complex.ground_size()).collect();
                facets.extend(complex.facets().iter().map(|f| f.map_positions(&shift)));
                source_vertices.extend(sources.iter().map(|&s| comp[s]));
            }
            Err(e) => {
                report.result = Err(e);
                return report;
            }
        }
    }
    report.result = SimplicialComplex::from_facets(source_vertices.len(), facets).map(|complex| Reconstruction {
        complex,
        source_vertices,
    });
    report
}

fn reconstruct_connected(graph: &LabeledGraph) -> ComponentResult {
    let mut tried = 0usize;
    let mut successes: Vec<PosetComplex> = Vec::new();
    let mut first_violation: Option<Error> = None;
    let flow = graphs::for_each_transitive_orientation(graph, |orientation| {
        tried += 1;
        if tried > ORIENTATION_LIMIT {
            return ControlFlow::Break(());
        }
        let attempt = poset_from_orientation(graph, &orientation).and_then(|p| complex_from_face_poset(&p));
        match attempt {
            Ok(pc) => successes.push(pc),
            Err(e) => {
                first_violation.get_or_insert(e);
            }
        }
        ControlFlow::Continue(())
    });
    let admissible = successes.len();
    let result = if flow.is_break() {
        Err(Error::SearchLimitExceeded {
            limit: ORIENTATION_LIMIT,
        })
    } else if tried == 0 {
        Err(Error::NotTransitivelyOrientable)
    } else if successes.is_empty() {
        Err(first_violation.expect("every tried orientation failed"))
    } else {
        let reference = successes[0].complex.canonical_form();
        if successes.iter().any(|s| s.complex.canonical_form() != reference) {
            Err(Error::ConflictingReconstructions)
        } else {
            // isomorphic by construction; pick the least facet list, then the earliest orientation
            let best = successes
                .into_iter()
                .enumerate()
                .min_by(|(i, a), (j, b)| a.complex.facets().cmp(b.complex.facets()).then(i.cmp(j)))
                .map(|(_, s)| s)
                .expect("nonempty");
            Ok((best.complex, best.sources))
        }
    };
    ComponentResult {
        result,
        tried: tried.min(ORIENTATION_LIMIT),
        admissible,
    }
}

/// Reconstructs from a flag complex through its 1-skeleton.
pub fn reconstruct_from_subdivision(subdivision: &SimplicialComplex) -> ReconstructionReport {
    if let Err(e) = check_flag(subdivision) {
        return ReconstructionReport::failed(e);
    }
    reconstruct_from_comparability_graph(&subdivision.one_skeleton_graph().without_labels())
}

fn check_flag(complex: &SimplicialComplex) -> Result<()> {
    let not_flag = |s: VertexSet| Error::NotFlag {
        nonface: s.to_vec(),
        size: s.len(),
    };
    if complex.is_void() {
        return Err(not_flag(VertexSet::EMPTY));
    }
    let missing = complex.vertex_support().complement(complex.ground_size());
    if let Some(v) = missing.min() {
        return Err(not_flag(VertexSet::singleton(v)));
    }
    let closure = graphs::clique_complex(&complex.one_skeleton_graph())?;
    if closure == *complex {
        return Ok(());
    }
    let witness = complex
        .minimal_nonfaces()
        .into_iter()
        .find(|s| s.len() != 2)
        .expect("a non-flag complex has a minimal non-face of size other than two");
    Err(not_flag(witness))
}

/// Whether the graph is the comparability graph of some simplicial complex.
pub fn is_complex_comparability_graph(graph: &LabeledGraph) -> bool {
    reconstruct_from_comparability_graph(graph).result.is_ok()
}
