//! Simple undirected graphs, clique and independence complexes, comparability
//! graphs of complexes, and exhaustive transitive-orientation search.

use std::ops::ControlFlow;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Undirected simple graph on vertices `0..vertex_count`, optionally labeled by faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    labels: Option<Vec<VertexSet>>,
}

impl LabeledGraph {
    /// Validates and normalizes: pairs become `(min, max)`, sorted, deduplicated.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Malformed(format!("loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::Malformed(format!("edge ({a}, {b}) outside 0..{n}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        list.dedup();
        let mut neighbors = vec![Vec::new(); n];
        for &(a, b) in &list {
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
        for nb in &mut neighbors {
            nb.sort_unstable();
        }
        Ok(LabeledGraph {
            n,
            edges: list,
            neighbors,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<VertexSet>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Malformed(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("valid clique")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Sorted `(i, j)` pairs with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> Option<&[VertexSet]> {
        self.labels.as_deref()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    #[inline]
    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.neighbors[a].binary_search(&b).is_ok()
    }

    /// Index of edge `{a, b}` in [`LabeledGraph::edges`].
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    /// Same vertices and labels, complementary edge set.
    pub fn complement(&self) -> Self {
        let edges = (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.is_adjacent(i, j));
        let g = Self::new(self.n, edges.collect::<Vec<_>>()).expect("complement is simple");
        LabeledGraph {
            labels: self.labels.clone(),
            ..g
        }
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in &self.neighbors[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// Subgraph induced on `vertices` (which must be sorted), renumbered `0..k`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Self {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| local[a] != usize::MAX && local[b] != usize::MAX)
            .map(|&(a, b)| (local[a], local[b]));
        let g = Self::new(vertices.len(), edges.collect::<Vec<_>>()).expect("induced subgraph is simple");
        let labels = self.labels.as_ref().map(|l| vertices.iter().map(|&v| l[v]).collect());
        LabeledGraph { labels, ..g }
    }

    /// Graph as a set system on `1..=n` (one 2-set per edge), the form used for
    /// canonical labeling.
    pub fn edge_sets(&self) -> Vec<VertexSet> {
        self.edges
            .iter()
            .map(|&(a, b)| VertexSet::from_vertices([a + 1, b + 1]))
            .collect()
    }

    fn adjacency_bits(&self) -> Result<Vec<u64>> {
        if self.n > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge { size: self.n });
        }
        Ok(self
            .neighbors
            .iter()
            .map(|nb| nb.iter().fold(0u64, |acc, &u| acc | 1u64 << u))
            .collect())
    }
}

/// Relabeling-invariant fingerprint of an unlabeled graph on at most 64 vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphCanonicalForm {
    pub vertex_count: usize,
    pub edge_encoding: Vec<VertexSet>,
}

impl LabeledGraph {
    /// Canonical form of the underlying unlabeled graph, computed by the same
    /// set-system canonizer used for complexes (each edge is a 2-set).
    pub fn canonical_form(&self) -> Result<GraphCanonicalForm> {
        if self.n > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge { size: self.n });
        }
        Ok(GraphCanonicalForm {
            vertex_count: self.n,
            edge_encoding: crate::canon::canonical_labeling(self.n, &self.edge_sets()).encoding,
        })
    }

    /// Sorted degree sequence; a cheap isomorphism prescreen.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }
}

/// Isomorphism of the underlying unlabeled graphs (labels are ignored).
pub fn are_graphs_isomorphic(a: &LabeledGraph, b: &LabeledGraph) -> Result<bool> {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return Ok(false);
    }
    Ok(a.canonical_form()? == b.canonical_form()?)
}

/// An orientation of every edge of a graph; `arcs[k]` orients `graph.edges()[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// Orients edge `k` from low to high vertex when `bits[k]` is false.
    pub fn from_direction_bits(graph: &LabeledGraph, bits: &[bool]) -> Self {
        assert_eq!(bits.len(), graph.edge_count());
        let arcs = graph
            .edges()
            .iter()
            .zip(bits)
            .map(|(&(a, b), &flip)| if flip { (b, a) } else { (a, b) })
            .collect();
        Orientation { arcs }
    }

    pub fn from_arcs(arcs: Vec<(usize, usize)>) -> Self {
        Orientation { arcs }
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// `true` where the arc points from the higher to the lower vertex.
    pub fn direction_bits(&self) -> Vec<bool> {
        self.arcs.iter().map(|&(a, b)| a > b).collect()
    }

    pub fn reversed(&self) -> Self {
        Orientation {
            arcs: self.arcs.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }

    /// Whether this orientation covers exactly the edges of `graph`, in order.
    pub fn matches(&self, graph: &LabeledGraph) -> bool {
        self.arcs.len() == graph.edge_count()
            && self
                .arcs
                .iter()
                .zip(graph.edges())
                .all(|(&(a, b), &e)| (a.min(b), a.max(b)) == e)
    }

    /// First violated triple `x -> y -> z` lacking the arc `x -> z`, if any.
    pub fn transitivity_violation(&self, graph: &LabeledGraph) -> Option<(usize, usize, usize)> {
        let n = graph.vertex_count();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &self.arcs {
            out[a].push(b);
        }
        for v in &mut out {
            v.sort_unstable();
        }
        for x in 0..n {
            for &y in &out[x] {
                for &z in &out[y] {
                    if out[x].binary_search(&z).is_err() {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_transitive(&self, graph: &LabeledGraph) -> bool {
        self.matches(graph) && self.transitivity_violation(graph).is_none()
    }
}

/// Clique complex on ground set `{1, ..., n}`; vertex `i` becomes ground element `i + 1`.
pub fn clique_complex(graph: &LabeledGraph) -> Result<SimplicialComplex> {
    if graph.vertex_count() == 0 {
        return Err(Error::EmptyInput);
    }
    let adj = graph.adjacency_bits()?;
    let mut cliques = Vec::new();
    let all = if graph.vertex_count() == 64 {
        u64::MAX
    } else {
        (1u64 << graph.vertex_count()) - 1
    };
    bron_kerbosch(&adj, 0, all, 0, &mut cliques);
    // stored bits are 0-based; ground elements are 1-based, same bit layout
    SimplicialComplex::from_facets(graph.vertex_count(), cliques.into_iter().map(VertexSet::from_bits))
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot_pool = p | x;
    let pivot = (0..adj.len())
        .filter(|&u| pivot_pool & (1u64 << u) != 0)
        .max_by_key(|&u| (adj[u] & p).count_ones())
        .expect("nonempty pool");
    let mut candidates = p & !adj[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        let bit = 1u64 << v;
        candidates &= candidates - 1;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// Complex of independent sets: the clique complex of the complement.
pub fn independence_complex(graph: &LabeledGraph) -> Result<SimplicialComplex> {
    clique_complex(&graph.complement())
}

/// The 1-skeleton of the barycentric subdivision: one vertex per nonempty face
/// (in `VertexSet` order, labeled by that face), edges between strictly
/// comparable faces.
pub fn comparability_graph(complex: &SimplicialComplex) -> Result<LabeledGraph> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let faces = complex.faces();
    let mut edges = Vec::new();
    for (i, &a) in faces.iter().enumerate() {
        for (j, &b) in faces.iter().enumerate().skip(i + 1) {
            if a.is_proper_subset(b) || b.is_proper_subset(a) {
                edges.push((i, j));
            }
        }
    }
    LabeledGraph::new(faces.len(), edges)?.with_labels(faces)
}

/// Orients every edge from the smaller to the larger label. `None` when the
/// graph is unlabeled or some edge joins incomparable labels.
pub fn inclusion_orientation(graph: &LabeledGraph) -> Option<Orientation> {
    let labels = graph.labels()?;
    let arcs = graph
        .edges()
        .iter()
        .map(|&(a, b)| {
            if labels[a].is_proper_subset(labels[b]) {
                Some((a, b))
            } else if labels[b].is_proper_subset(labels[a]) {
                Some((b, a))
            } else {
                None
            }
        })
        .collect::<Option<Vec<_>>>()?;
    Some(Orientation { arcs })
}

/// All transitive orientations, in lexicographic order of their direction bits.
pub fn transitive_orientations(graph: &LabeledGraph) -> Vec<Orientation> {
    let mut out = Vec::new();
    let _ = for_each_transitive_orientation(graph, |o| {
        out.push(o);
        ControlFlow::<()>::Continue(())
    });
    out
}

pub fn is_transitively_orientable(graph: &LabeledGraph) -> bool {
    for_each_transitive_orientation(graph, |_| ControlFlow::Break(())).is_break()
}

/// Visits transitive orientations in lexicographic order of direction bits
/// until the visitor breaks.
///
/// Branches on the first unoriented edge and propagates two forcing rules to a
/// fixpoint: `x -> y` forces `x -> y'` for every neighbor `y'` of `x` not
/// adjacent to `y` (and dually at `y`), and `x -> y -> z` forces `x -> z`.
pub fn for_each_transitive_orientation<B>(
    graph: &LabeledGraph,
    mut visit: impl FnMut(Orientation) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let state = vec![UNSET; graph.edge_count()];
    let search = OrientationSearch { graph };
    search.dfs(state, 0, &mut visit)
}

const UNSET: i8 = -1;
const FORWARD: i8 = 0;
const BACKWARD: i8 = 1;

struct OrientationSearch<'g> {
    graph: &'g LabeledGraph,
}

impl OrientationSearch<'_> {
    fn dfs<B>(
        &self,
        state: Vec<i8>,
        from: usize,
        visit: &mut impl FnMut(Orientation) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let Some(e) = (from..state.len()).find(|&e| state[e] == UNSET) else {
            let bits: Vec<bool> = state.iter().map(|&s| s == BACKWARD).collect();
            return visit(Orientation::from_direction_bits(self.graph, &bits));
        };
        for dir in [FORWARD, BACKWARD] {
            let mut next = state.clone();
            let (a, b) = self.graph.edges()[e];
            let arc = if dir == FORWARD { (a, b) } else { (b, a) };
            if self.assign(&mut next, arc) {
                self.dfs(next, e + 1, visit)?;
            }
        }
        ControlFlow::Continue(())
    }

    fn arc_state(&self, state: &[i8], from: usize, to: usize) -> Option<bool> {
        let e = self.graph.edge_index(from, to)?;
        match state[e] {
            UNSET => None,
            s => Some((s == FORWARD) == (from < to)),
        }
    }

    /// Orients `arc` and propagates; false on contradiction.
    fn assign(&self, state: &mut [i8], arc: (usize, usize)) -> bool {
        let mut queue = vec![arc];
        if !self.force(state, arc, &mut Vec::new()) {
            return false;
        }
        let g = self.graph;
        while let Some((x, y)) = queue.pop() {
            let mut forced = Vec::new();
            for &y2 in g.neighbors(x) {
                if y2 != y && !g.is_adjacent(y, y2) {
                    forced.push((x, y2));
                }
            }
            for &x2 in g.neighbors(y) {
                if x2 != x && !g.is_adjacent(x, x2) {
                    forced.push((x2, y));
                }
            }
            for &z in g.neighbors(y) {
                if z != x && self.arc_state(state, y, z) == Some(true) {
                    if !g.is_adjacent(x, z) {
                        return false;
                    }
                    forced.push((x, z));
                }
            }
            for &w in g.neighbors(x) {
                if w != y && self.arc_state(state, w, x) == Some(true) {
                    if !g.is_adjacent(w, y) {
                        return false;
                    }
                    forced.push((w, y));
                }
            }
            for f in forced {
                if !self.force(state, f, &mut queue) {
                    return false;
                }
            }
        }
        true
    }

    fn force(&self, state: &mut [i8], (a, b): (usize, usize), queue: &mut Vec<(usize, usize)>) -> bool {
        let e = self.graph.edge_index(a, b).expect("forced arcs are edges");
        let want = if a < b { FORWARD } else { BACKWARD };
        match state[e] {
            UNSET => {
                state[e] = want;
                queue.push((a, b));
                true
            }
            s => s == want,
        }
    }
}
