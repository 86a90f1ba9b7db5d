//! Brute-force oracles, independent of the library's algorithms.
#![allow(dead_code)]

use bary::graphs::LabeledGraph;
use bary::{SimplicialComplex, VertexSet};
use itertools::Itertools;

pub fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::from_lists(n, facets).unwrap()
}

/// Face membership straight from the definition: contained in some facet.
pub fn is_face(c: &SimplicialComplex, s: VertexSet) -> bool {
    !c.is_void() && c.facets().iter().any(|&f| s.is_subset(f))
}

/// Minimal non-faces by scanning all `2^n` subsets.
pub fn brute_minimal_nonfaces(c: &SimplicialComplex) -> Vec<VertexSet> {
    let n = c.ground_size();
    let mut out: Vec<VertexSet> = (0u64..1 << n)
        .map(VertexSet::from_bits)
        .filter(|&s| {
            !is_face(c, s)
                && s.iter().all(|v| {
                    let mut t = s;
                    t.remove(v);
                    is_face(c, t)
                })
        })
        .collect();
    out.sort();
    out
}

fn apply(perm: &[usize], s: VertexSet) -> VertexSet {
    s.iter().map(|v| perm[v - 1]).collect()
}

/// Isomorphism by trying every bijection of the ground set.
pub fn brute_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    if a.ground_size() != b.ground_size() || a.facets().len() != b.facets().len() {
        return false;
    }
    let n = a.ground_size();
    let target: std::collections::HashSet<VertexSet> = b.facets().iter().copied().collect();
    (1..=n)
        .permutations(n)
        .any(|perm| a.facets().iter().all(|&f| target.contains(&apply(&perm, f))))
}

/// Graph isomorphism by trying every vertex bijection.
pub fn brute_graph_isomorphic(a: &LabeledGraph, b: &LabeledGraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.vertex_count();
    (0..n)
        .permutations(n)
        .any(|p| a.edges().iter().all(|&(u, v)| b.is_adjacent(p[u], p[v])))
}

/// Number of maximal chains of nonempty faces, by DFS upward from each vertex.
pub fn count_maximal_chains(c: &SimplicialComplex) -> usize {
    let faces = c.faces();
    fn up(face: VertexSet, faces: &[VertexSet]) -> usize {
        let covers: Vec<VertexSet> = faces
            .iter()
            .copied()
            .filter(|&g| face.is_proper_subset(g) && g.len() == face.len() + 1)
            .collect();
        if covers.is_empty() {
            1
        } else {
            covers.into_iter().map(|g| up(g, faces)).sum()
        }
    }
    faces.iter().filter(|f| f.len() == 1).map(|&f| up(f, &faces)).sum()
}

/// Counts transitive orientations by plain backtracking over edges in order,
/// rejecting a partial assignment as soon as two assigned arcs `x -> y -> z`
/// meet a non-edge or a reversed `z -> x`.
pub fn naive_orientation_count(g: &LabeledGraph) -> usize {
    let edges = g.edges().to_vec();
    let n = g.vertex_count();
    let mut dir: Vec<Vec<i8>> = vec![vec![0; n]; n]; // 1: a -> b, -1: b -> a, 0: unset
    fn ok(dir: &[Vec<i8>], g: &LabeledGraph, x: usize, y: usize) -> bool {
        (0..dir.len()).all(|z| {
            let after = dir[y][z] != 1 || (g.is_adjacent(x, z) && dir[x][z] != -1);
            let before = dir[z][x] != 1 || (g.is_adjacent(z, y) && dir[z][y] != -1);
            after && before
        })
    }
    fn rec(k: usize, edges: &[(usize, usize)], dir: &mut Vec<Vec<i8>>, g: &LabeledGraph) -> usize {
        if k == edges.len() {
            return 1;
        }
        let (a, b) = edges[k];
        let mut total = 0;
        for (x, y) in [(a, b), (b, a)] {
            dir[x][y] = 1;
            dir[y][x] = -1;
            if ok(dir, g, x, y) {
                total += rec(k + 1, edges, dir, g);
            }
            dir[x][y] = 0;
            dir[y][x] = 0;
        }
        total
    }
    rec(0, &edges, &mut dir, g)
}
