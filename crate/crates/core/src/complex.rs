//! Simplicial complexes stored as facet antichains over an explicit ground set.

use std::collections::HashSet;

use crate::canon;
use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simplicial complex on the ground set `{1, ..., ground_size}`.
///
/// The complex is the downward closure of its facets. Two degenerate values are
/// representable: the *empty complex* `{∅}`, whose only facet is the empty set,
/// and the *void complex*, which has no faces at all and no facets. Ground
/// vertices need not be faces; this keeps Alexander duals and complements
/// closed under the representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground_size: usize,
    facets: Vec<VertexSet>,
}

/// A connected component together with its embedding into the parent ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// The component on the compact ground set `{1, ..., k}`.
    pub complex: SimplicialComplex,
    /// `embedding[j]` is the parent vertex represented by component vertex `j + 1`.
    pub embedding: Vec<usize>,
}

/// Relabeling-invariant fingerprint: equal forms iff isomorphic complexes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub ground_size: usize,
    pub facet_encoding: Vec<VertexSet>,
}

/// A bijection between two ground sets of equal size, stored as 1-based images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexBijection {
    images: Vec<usize>,
}

impl VertexBijection {
    pub fn identity(n: usize) -> Self {
        VertexBijection {
            images: (1..=n).collect(),
        }
    }

    /// From 1-based images; `images[i]` is where vertex `i + 1` goes.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidArgument(format!(
                    "images {images:?} do not form a permutation of 1..={n}"
                )));
            }
        }
        Ok(VertexBijection { images })
    }

    /// From a 0-based position map such as a canonical labeling.
    pub fn from_positions(perm: &[usize]) -> Self {
        VertexBijection {
            images: perm.iter().map(|&p| p + 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn image(&self, v: usize) -> usize {
        self.images[v - 1]
    }

    pub fn apply(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.image(v)).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        VertexBijection { images }
    }

    /// `self` followed by `then`.
    pub fn then(&self, then: &VertexBijection) -> Self {
        VertexBijection {
            images: self.images.iter().map(|&v| then.image(v)).collect(),
        }
    }

    /// True iff this bijection carries the facets of `source` exactly onto those of `target`.
    pub fn is_witness(&self, source: &SimplicialComplex, target: &SimplicialComplex) -> bool {
        if self.len() != source.ground_size || self.len() != target.ground_size {
            return false;
        }
        let mut mapped: Vec<VertexSet> = source.facets.iter().map(|&f| self.apply(f)).collect();
        mapped.sort();
        mapped == target.facets
    }
}

impl SimplicialComplex {
    /// Normalizes an arbitrary family into its inclusion-maximal members.
    pub fn from_facets(ground_size: usize, facets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if ground_size == 0 {
            return Err(Error::EmptyInput);
        }
        if ground_size > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge { size: ground_size });
        }
        let full = VertexSet::full(ground_size);
        let mut sets: Vec<VertexSet> = Vec::new();
        for f in facets {
            if !f.is_subset(full) {
                let vertex = f.difference(full).min().expect("nonempty difference");
                return Err(Error::VertexOutOfRange { vertex, ground_size });
            }
            sets.push(f);
        }
        Ok(SimplicialComplex {
            ground_size,
            facets: maximal_members(sets),
        })
    }

    /// Convenience constructor from 1-based vertex lists.
    pub fn from_lists<I, F>(ground_size: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[usize]>,
    {
        if ground_size == 0 {
            return Err(Error::EmptyInput);
        }
        if ground_size > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge { size: ground_size });
        }
        let sets = facets
            .into_iter()
            .map(|f| VertexSet::try_from_vertices(f.as_ref().iter().copied(), ground_size))
            .collect::<Result<Vec<_>>>()?;
        Self::from_facets(ground_size, sets)
    }

    pub(crate) fn from_sorted_antichain(ground_size: usize, facets: Vec<VertexSet>) -> Self {
        debug_assert!(facets.windows(2).all(|w| w[0] < w[1]));
        SimplicialComplex { ground_size, facets }
    }

    /// The full simplex on `{1, ..., n}`.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::from_facets(n, [VertexSet::full(n.min(MAX_VERTICES))])
    }

    /// The boundary of the simplex on `{1, ..., n}`: all `(n-1)`-subsets.
    pub fn simplex_boundary(n: usize) -> Result<Self> {
        let full = VertexSet::full(n.min(MAX_VERTICES));
        Self::from_facets(
            n,
            full.iter().map(|v| {
                let mut f = full;
                f.remove(v);
                f
            }),
        )
    }

    /// The empty complex `{∅}`.
    pub fn empty(ground_size: usize) -> Result<Self> {
        Self::from_facets(ground_size, [VertexSet::EMPTY])
    }

    /// The void complex (no faces, not even `∅`).
    pub fn void(ground_size: usize) -> Result<Self> {
        Self::from_facets(ground_size, [])
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// Facets in `VertexSet` order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Vertices lying in some face.
    pub fn vertex_support(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, &f| acc.union(f))
    }

    /// Whether every ground vertex `{i}` is a face.
    pub fn has_all_vertices(&self) -> bool {
        self.vertex_support() == VertexSet::full(self.ground_size)
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|&f| face.is_subset(f))
    }

    /// All nonempty faces in `VertexSet` order. The empty face is implicit.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for &f in &self.facets {
            for s in f.subsets() {
                if !s.is_empty() {
                    seen.insert(s);
                }
            }
        }
        let mut out: Vec<VertexSet> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Face counts indexed by dimension: `f_vector()[i]` counts `i`-dimensional faces.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = vec![0usize; (self.dimension() + 1).max(0) as usize];
        for face in self.faces() {
            counts[face.len() - 1] += 1;
        }
        counts
    }

    /// `max |F| - 1` over facets; `-1` for the empty and void complexes.
    pub fn dimension(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    /// Inclusion-minimal subsets of the ground set that are not faces.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let enumeration_cost: u128 = self.facets.iter().map(|f| 1u128 << f.len()).sum();
        if enumeration_cost <= 1 << 18 {
            minimal_nonfaces_levelwise(self)
        } else {
            minimal_nonfaces_transversal(self)
        }
    }

    /// Faces of size at most `i + 1`.
    pub fn skeleton(&self, i: i64) -> Result<Self> {
        let dimension = self.dimension();
        if i < 0 || i > dimension {
            return Err(Error::SkeletonIndexOutOfRange { index: i, dimension });
        }
        let k = i as usize + 1;
        let mut sets = Vec::new();
        for &f in &self.facets {
            if f.len() <= k {
                sets.push(f);
            } else {
                sets.extend(f.subsets_of_size(k));
            }
        }
        Self::from_facets(self.ground_size, sets)
    }

    /// The graph on the ground set whose edges are the 1-dimensional faces.
    /// Vertex `i` (0-based) carries the label `{i + 1}`.
    pub fn one_skeleton_graph(&self) -> LabeledGraph {
        let mut edges = Vec::new();
        for &f in &self.facets {
            let verts = f.to_vec();
            for (a, &u) in verts.iter().enumerate() {
                for &v in &verts[a + 1..] {
                    edges.push((u - 1, v - 1));
                }
            }
        }
        let labels = (1..=self.ground_size).map(VertexSet::singleton).collect();
        LabeledGraph::new(self.ground_size, edges)
            .and_then(|g| g.with_labels(labels))
            .expect("edges of a valid complex are valid")
    }

    /// Connectedness of the 1-skeleton restricted to vertices that are faces.
    /// A single vertex is connected; the empty and void complexes are not.
    pub fn is_connected(&self) -> bool {
        !self.vertex_support().is_empty() && self.component_groups().len() == 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Non-reduced Euler characteristic `Σ (-1)^i f_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    fn component_groups(&self) -> Vec<Vec<VertexSet>> {
        // merge facets sharing a vertex
        let mut groups: Vec<(VertexSet, Vec<VertexSet>)> = Vec::new();
        for &f in &self.facets {
            if f.is_empty() {
                continue;
            }
            let mut merged = (f, vec![f]);
            let mut rest = Vec::with_capacity(groups.len());
            for g in groups.drain(..) {
                if g.0.is_disjoint(merged.0) {
                    rest.push(g);
                } else {
                    merged.0 = merged.0.union(g.0);
                    merged.1.extend(g.1);
                }
            }
            rest.push(merged);
            groups = rest;
        }
        groups.sort_by_key(|g| g.0.min());
        groups.into_iter().map(|g| g.1).collect()
    }

    /// Components of the 1-skeleton, ordered by their smallest vertex. Ground
    /// vertices that are not faces belong to no component.
    pub fn connected_components(&self) -> Vec<Component> {
        self.component_groups()
            .into_iter()
            .map(|facets| {
                let support = facets.iter().fold(VertexSet::EMPTY, |a, &f| a.union(f));
                let embedding = support.to_vec();
                let mut local = vec![0usize; self.ground_size];
                for (j, &v) in embedding.iter().enumerate() {
                    local[v - 1] = j;
                }
                let complex =
                    SimplicialComplex::from_facets(embedding.len(), facets.iter().map(|f| f.map_positions(&local)))
                        .expect("component fits its own ground set");
                Component { complex, embedding }
            })
            .collect()
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        CanonicalForm {
            ground_size: self.ground_size,
            facet_encoding: canon::canonical_labeling(self.ground_size, &self.facets).encoding,
        }
    }

    /// Applies a vertex bijection of the ground set.
    pub fn relabel(&self, map: &VertexBijection) -> Self {
        assert_eq!(map.len(), self.ground_size, "bijection size must match the ground set");
        let mut facets: Vec<VertexSet> = self.facets.iter().map(|&f| map.apply(f)).collect();
        facets.sort();
        SimplicialComplex {
            ground_size: self.ground_size,
            facets,
        }
    }

    /// Same facets over a larger ground set.
    pub fn with_ground_size(&self, ground_size: usize) -> Result<Self> {
        Self::from_facets(ground_size, self.facets.iter().copied())
    }
}

/// Decides isomorphism and returns a witness bijection.
///
/// Ground sets must have equal size; vertices outside every facet are matched
/// among themselves. Disconnected complexes are compared component by
/// component through a multiset match of canonical forms.
pub fn are_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<VertexBijection> {
    if a.ground_size != b.ground_size || a.facets.len() != b.facets.len() {
        return None;
    }
    let sizes = |c: &SimplicialComplex| c.facets.iter().map(|f| f.len()).collect::<Vec<_>>();
    if sizes(a) != sizes(b) {
        return None;
    }
    let witness = if a.is_connected() || b.is_connected() {
        let la = canon::canonical_labeling(a.ground_size, &a.facets);
        let lb = canon::canonical_labeling(b.ground_size, &b.facets);
        if la.encoding != lb.encoding {
            return None;
        }
        VertexBijection::from_positions(&la.perm).then(&VertexBijection::from_positions(&lb.perm).inverse())
    } else {
        isomorphism_by_components(a, b)?
    };
    debug_assert!(witness.is_witness(a, b));
    witness.is_witness(a, b).then_some(witness)
}

fn isomorphism_by_components(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<VertexBijection> {
    let labeled = |c: &SimplicialComplex| {
        let mut comps: Vec<(Component, canon::CanonicalLabeling)> = c
            .connected_components()
            .into_iter()
            .map(|comp| {
                let lab = canon::canonical_labeling(comp.complex.ground_size, &comp.complex.facets);
                (comp, lab)
            })
            .collect();
        comps.sort_by(|x, y| (x.0.complex.ground_size, &x.1.encoding).cmp(&(y.0.complex.ground_size, &y.1.encoding)));
        comps
    };
    let ca = labeled(a);
    let cb = labeled(b);
    if ca.len() != cb.len() {
        return None;
    }
    let n = a.ground_size;
    let mut images = vec![0usize; n];
    for ((comp_a, lab_a), (comp_b, lab_b)) in ca.iter().zip(&cb) {
        if comp_a.complex.ground_size != comp_b.complex.ground_size || lab_a.encoding != lab_b.encoding {
            return None;
        }
        let local =
            VertexBijection::from_positions(&lab_a.perm).then(&VertexBijection::from_positions(&lab_b.perm).inverse());
        for (j, &v) in comp_a.embedding.iter().enumerate() {
            images[v - 1] = comp_b.embedding[local.image(j + 1) - 1];
        }
    }
    let free_a = a.vertex_support().complement(n);
    let free_b = b.vertex_support().complement(n);
    if free_a.len() != free_b.len() {
        return None;
    }
    for (u, v) in free_a.iter().zip(free_b.iter()) {
        images[u - 1] = v;
    }
    VertexBijection::from_images(images).ok()
}

/// Keeps inclusion-maximal sets, deduplicated, in `VertexSet` order.
pub(crate) fn maximal_members(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Keeps inclusion-minimal sets, deduplicated, in `VertexSet` order.
pub(crate) fn minimal_members(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort();
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

/// Grows candidates one vertex at a time from faces: `S` is a minimal
/// non-face iff `S` is not a face and every `S - v` is.
pub(crate) fn minimal_nonfaces_levelwise(c: &SimplicialComplex) -> Vec<VertexSet> {
    if c.is_void() {
        return vec![VertexSet::EMPTY];
    }
    let n = c.ground_size;
    let faces = c.faces();
    let face_set: HashSet<VertexSet> = faces.iter().copied().collect();
    let is_face = |s: VertexSet| s.is_empty() || face_set.contains(&s);
    let mut out: Vec<VertexSet> = (1..=n).map(VertexSet::singleton).filter(|&s| !is_face(s)).collect();
    for &f in &faces {
        let top = f.max().expect("nonempty face");
        for v in top + 1..=n {
            let mut cand = f;
            cand.insert(v);
            if !is_face(cand)
                && cand.iter().all(|u| {
                    let mut sub = cand;
                    sub.remove(u);
                    is_face(sub)
                })
            {
                out.push(cand);
            }
        }
    }
    out.sort();
    out
}

/// Minimal non-faces as minimal transversals of the facet complements.
pub(crate) fn minimal_nonfaces_transversal(c: &SimplicialComplex) -> Vec<VertexSet> {
    let n = c.ground_size;
    let mut transversals = vec![VertexSet::EMPTY];
    for &f in &c.facets {
        let edge = f.complement(n);
        let mut next = Vec::with_capacity(transversals.len());
        for &t in &transversals {
            if !t.is_disjoint(edge) {
                next.push(t);
            } else {
                for v in edge.iter() {
                    let mut grown = t;
                    grown.insert(v);
                    next.push(grown);
                }
            }
        }
        transversals = minimal_members(next);
    }
    transversals
}
