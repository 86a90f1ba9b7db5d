//! Random complexes, graphs and relabelings for sweeps and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::{SimplicialComplex, VertexBijection};
use crate::graphs::LabeledGraph;
use crate::vertex_set::VertexSet;

/// A complex on `{1, ..., n}` generated by up to `max_facets` random subsets.
/// Each vertex joins a candidate facet with probability one half.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, n: usize, max_facets: usize) -> SimplicialComplex {
    assert!((1..=64).contains(&n));
    let count = rng.gen_range(1..=max_facets.max(1));
    let facets: Vec<VertexSet> = (0..count)
        .map(|_| {
            let s: VertexSet = (1..=n).filter(|_| rng.gen_bool(0.5)).collect();
            if s.is_empty() {
                VertexSet::singleton(rng.gen_range(1..=n))
            } else {
                s
            }
        })
        .collect();
    SimplicialComplex::from_facets(n, facets).expect("random facets lie in the ground set")
}

/// Like [`random_complex`] but every ground vertex is a face.
pub fn random_covering_complex<R: Rng + ?Sized>(rng: &mut R, n: usize, max_facets: usize) -> SimplicialComplex {
    let base = random_complex(rng, n, max_facets);
    let missing = base.vertex_support().complement(n);
    let facets = base
        .facets()
        .iter()
        .copied()
        .chain(missing.iter().map(VertexSet::singleton));
    SimplicialComplex::from_facets(n, facets).expect("valid")
}

pub fn random_bijection<R: Rng + ?Sized>(rng: &mut R, n: usize) -> VertexBijection {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    VertexBijection::from_images(images).expect("shuffle is a permutation")
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> LabeledGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    LabeledGraph::new(n, edges).expect("valid random graph")
}

/// Same graph with vertices renamed by a random permutation.
pub fn shuffle_graph<R: Rng + ?Sized>(rng: &mut R, graph: &LabeledGraph) -> LabeledGraph {
    let mut perm: Vec<usize> = (0..graph.vertex_count()).collect();
    perm.shuffle(rng);
    LabeledGraph::new(
        graph.vertex_count(),
        graph.edges().iter().map(|&(a, b)| (perm[a], perm[b])),
    )
    .expect("relabeled graph is simple")
}
