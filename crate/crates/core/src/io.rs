//! JSON wire formats. Output is compact, keys appear in a fixed order, and
//! every array follows the owning type's deterministic order.
//!
//! - complex: `{"ground_set":3,"facets":[[1,2],[1,3]]}`, plus `"void":true` for
//!   the void complex; the empty complex is `"facets":[[]]`
//! - graph: `{"vertices":4,"edges":[[0,1]]}` or `"vertices":[[1],[2],[1,2]]` when labeled
//! - face labeling: `{"vertices":[[1],[2],[1,2]]}`
//! - reconstruction report: `{"status":..,"complex":..,"orientations_tried":..,"both_admissible":..}`
//! - bijection: `{"map":[2,1,3]}` (1-based images)

use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, VertexBijection};
use crate::derived::FaceLabeling;
use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;
use crate::reconstruct::ReconstructionReport;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    ground_set: usize,
    facets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    void: bool,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum GraphVertices {
    Count(usize),
    Labels(Vec<Vec<usize>>),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    vertices: GraphVertices,
    edges: Vec<[usize; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
struct LabelingJson {
    vertices: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize)]
struct ReportJson {
    status: &'static str,
    complex: Option<ComplexJson>,
    orientations_tried: usize,
    both_admissible: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct BijectionJson {
    map: Vec<usize>,
}

fn malformed(e: serde_json::Error) -> Error {
    Error::Malformed(e.to_string())
}

fn complex_json(c: &SimplicialComplex) -> ComplexJson {
    ComplexJson {
        ground_set: c.ground_size(),
        facets: c.facets().iter().map(|f| f.to_vec()).collect(),
        void: c.is_void(),
    }
}

pub fn complex_to_json(c: &SimplicialComplex) -> String {
    serde_json::to_string(&complex_json(c)).expect("serializable")
}

pub fn complex_from_json(text: &str) -> Result<SimplicialComplex> {
    let raw: ComplexJson = serde_json::from_str(text).map_err(malformed)?;
    if raw.void && !raw.facets.is_empty() {
        return Err(Error::Malformed("a void complex cannot list facets".into()));
    }
    SimplicialComplex::from_lists(raw.ground_set, &raw.facets)
}

pub fn graph_to_json(g: &LabeledGraph) -> String {
    let vertices = match g.labels() {
        Some(labels) => GraphVertices::Labels(labels.iter().map(|l| l.to_vec()).collect()),
        None => GraphVertices::Count(g.vertex_count()),
    };
    let edges = g.edges().iter().map(|&(a, b)| [a, b]).collect();
    serde_json::to_string(&GraphJson { vertices, edges }).expect("serializable")
}

pub fn graph_from_json(text: &str) -> Result<LabeledGraph> {
    let raw: GraphJson = serde_json::from_str(text).map_err(malformed)?;
    let edges = raw.edges.iter().map(|&[a, b]| (a, b));
    match raw.vertices {
        GraphVertices::Count(n) => LabeledGraph::new(n, edges),
        GraphVertices::Labels(labels) => {
            let n = labels.len();
            let sets = labels
                .iter()
                .map(|l| VertexSet::try_from_vertices(l.iter().copied(), MAX_VERTICES))
                .collect::<Result<Vec<_>>>()?;
            LabeledGraph::new(n, edges)?.with_labels(sets)
        }
    }
}

pub fn labeling_to_json(l: &FaceLabeling) -> String {
    let vertices = l.faces().iter().map(|f| f.to_vec()).collect();
    serde_json::to_string(&LabelingJson { vertices }).expect("serializable")
}

pub fn labeling_from_json(text: &str) -> Result<FaceLabeling> {
    let raw: LabelingJson = serde_json::from_str(text).map_err(malformed)?;
    let faces = raw
        .vertices
        .iter()
        .map(|l| VertexSet::try_from_vertices(l.iter().copied(), MAX_VERTICES))
        .collect::<Result<Vec<_>>>()?;
    Ok(FaceLabeling::new(faces))
}

pub fn report_to_json(r: &ReconstructionReport) -> String {
    let json = ReportJson {
        status: r.status(),
        complex: r.complex().map(complex_json),
        orientations_tried: r.orientations_tried,
        both_admissible: r.both_orientations_admissible,
    };
    serde_json::to_string(&json).expect("serializable")
}

pub fn bijection_to_json(b: &VertexBijection) -> String {
    serde_json::to_string(&BijectionJson {
        map: b.images().to_vec(),
    })
    .expect("serializable")
}

pub fn bijection_from_json(text: &str) -> Result<VertexBijection> {
    let raw: BijectionJson = serde_json::from_str(text).map_err(malformed)?;
    VertexBijection::from_images(raw.map)
}

/// A family of vertex sets as a JSON array of 1-based lists.
pub fn sets_to_json(sets: &[VertexSet]) -> String {
    let lists: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
    serde_json::to_string(&lists).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_format_is_exact() {
        let c = SimplicialComplex::from_lists(4, [vec![2, 3], vec![1, 2], vec![4]]).unwrap();
        assert_eq!(complex_to_json(&c), r#"{"ground_set":4,"facets":[[4],[1,2],[2,3]]}"#);
        assert_eq!(
            complex_to_json(&SimplicialComplex::void(2).unwrap()),
            r#"{"ground_set":2,"facets":[],"void":true}"#
        );
        assert_eq!(
            complex_to_json(&SimplicialComplex::empty(2).unwrap()),
            r#"{"ground_set":2,"facets":[[]]}"#
        );
    }

    #[test]
    fn complex_parsing() {
        let c = complex_from_json(r#"{"ground_set": 3, "facets": [[2,1],[1]]}"#).unwrap();
        assert_eq!(c.facets(), &[VertexSet::from_vertices([1, 2])]);
        assert!(complex_from_json(r#"{"ground_set":2,"facets":[],"void":true}"#)
            .unwrap()
            .is_void());
        assert!(complex_from_json(r#"{"ground_set":2,"facets":[[1]],"void":true}"#).is_err());
        assert!(matches!(
            complex_from_json(r#"{"ground_set":2,"facets":[[3]]}"#),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            complex_from_json(r#"{"ground_set":2}"#),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(complex_from_json("not json"), Err(Error::Malformed(_))));
    }

    #[test]
    fn graph_format() {
        let g = LabeledGraph::cycle(4);
        let text = graph_to_json(&g);
        assert_eq!(text, r#"{"vertices":4,"edges":[[0,1],[0,3],[1,2],[2,3]]}"#);
        assert_eq!(graph_from_json(&text).unwrap(), g);
        let labeled = crate::graphs::comparability_graph(&SimplicialComplex::simplex(2).unwrap()).unwrap();
        let text = graph_to_json(&labeled);
        assert_eq!(text, r#"{"vertices":[[1],[2],[1,2]],"edges":[[0,2],[1,2]]}"#);
        assert_eq!(graph_from_json(&text).unwrap(), labeled);
        assert!(graph_from_json(r#"{"vertices":2,"edges":[[0,0]]}"#).is_err());
        assert!(graph_from_json(r#"{"vertices":2,"edges":[[0,2]]}"#).is_err());
    }

    #[test]
    fn report_format() {
        let r = crate::reconstruct::reconstruct_from_comparability_graph(&LabeledGraph::cycle(6));
        assert_eq!(
            report_to_json(&r),
            r#"{"status":"ok","complex":{"ground_set":3,"facets":[[1,2],[1,3],[2,3]]},"orientations_tried":2,"both_admissible":true}"#
        );
        let r = crate::reconstruct::reconstruct_from_comparability_graph(&LabeledGraph::cycle(5));
        assert_eq!(
            report_to_json(&r),
            r#"{"status":"not_orientable","complex":null,"orientations_tried":0,"both_admissible":false}"#
        );
    }

    #[test]
    fn labeling_and_bijection_formats() {
        let l = FaceLabeling::new(vec![VertexSet::singleton(1), VertexSet::from_vertices([1, 2])]);
        let text = labeling_to_json(&l);
        assert_eq!(text, r#"{"vertices":[[1],[1,2]]}"#);
        assert_eq!(labeling_from_json(&text).unwrap(), l);
        let b = VertexBijection::from_images(vec![2, 3, 1]).unwrap();
        assert_eq!(bijection_to_json(&b), r#"{"map":[2,3,1]}"#);
        assert_eq!(bijection_from_json(r#"{"map":[2,3,1]}"#).unwrap(), b);
        assert!(bijection_from_json(r#"{"map":[2,2,1]}"#).is_err());
    }
}
