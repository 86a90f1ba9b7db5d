//! Operators that build new complexes or generator families from a complex.

use std::collections::HashMap;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Which face of the source complex each subdivision vertex stands for.
/// Vertex `i + 1` of the subdivision is `faces[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLabeling {
    faces: Vec<VertexSet>,
}

impl FaceLabeling {
    pub fn new(faces: Vec<VertexSet>) -> Self {
        FaceLabeling { faces }
    }

    pub fn faces(&self) -> &[VertexSet] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Face represented by the 1-based subdivision vertex `v`.
    pub fn face(&self, v: usize) -> VertexSet {
        self.faces[v - 1]
    }

    /// 1-based subdivision vertex representing `face`.
    pub fn vertex_of(&self, face: VertexSet) -> Option<usize> {
        self.faces.binary_search(&face).ok().map(|i| i + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    pub labeling: FaceLabeling,
}

pub fn barycentric_subdivision(complex: &SimplicialComplex) -> Result<Subdivision> {
    barycentric_subdivision_with(complex, Execution::default())
}

/// Barycentric subdivision: vertices are the nonempty faces in `VertexSet`
/// order, facets are the maximal chains of faces under inclusion. Chains are
/// enumerated per facet (optionally in parallel); the result is independent of
/// scheduling.
pub fn barycentric_subdivision_with(complex: &SimplicialComplex, exec: Execution) -> Result<Subdivision> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let faces = complex.faces();
    if faces.is_empty() {
        return Err(Error::EmptyInput);
    }
    if faces.len() > MAX_VERTICES {
        return Err(Error::GroundSetTooLarge { size: faces.len() });
    }
    let index: HashMap<VertexSet, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i + 1)).collect();
    let per_facet = exec.map(complex.facets(), |&facet| {
        let mut chains = Vec::new();
        collect_chains(facet, VertexSet::EMPTY, &index, &mut chains);
        chains
    });
    let chains = per_facet.into_iter().flatten();
    let sub = SimplicialComplex::from_facets(faces.len(), chains)?;
    Ok(Subdivision {
        complex: sub,
        labeling: FaceLabeling::new(faces),
    })
}

/// Maximal chains below `top`: peel one element at a time down to a singleton.
fn collect_chains(top: VertexSet, acc: VertexSet, index: &HashMap<VertexSet, usize>, out: &mut Vec<VertexSet>) {
    let mut acc = acc;
    acc.insert(index[&top]);
    if top.len() == 1 {
        out.push(acc);
        return;
    }
    for v in top.iter() {
        let mut lower = top;
        lower.remove(v);
        collect_chains(lower, acc, index, out);
    }
}

/// `k`-fold barycentric subdivision, `k >= 1`.
pub fn iterated_subdivision(complex: &SimplicialComplex, k: usize) -> Result<SimplicialComplex> {
    if k == 0 {
        return Err(Error::InvalidArgument("subdivision count must be positive".into()));
    }
    let mut current = complex.clone();
    for _ in 0..k {
        current = barycentric_subdivision(&current)?.complex;
    }
    Ok(current)
}

/// Alexander dual on the same ground set: facets are the complements of the
/// minimal non-faces. The dual of the full simplex is the void complex and
/// vice versa.
pub fn alexander_dual(complex: &SimplicialComplex) -> SimplicialComplex {
    let n = complex.ground_size();
    let facets = complex.minimal_nonfaces().into_iter().map(|f| f.complement(n));
    SimplicialComplex::from_facets(n, facets).expect("complements stay in the ground set")
}

/// Complex whose facets are the complements of the facets.
pub fn complement_complex(complex: &SimplicialComplex) -> SimplicialComplex {
    let n = complex.ground_size();
    let facets = complex.facets().iter().map(|f| f.complement(n));
    SimplicialComplex::from_facets(n, facets).expect("complements stay in the ground set")
}

/// Supports of the minimal square-free monomial generators of the
/// Stanley–Reisner ideal (the minimal non-faces).
pub fn stanley_reisner_generators(complex: &SimplicialComplex) -> Vec<VertexSet> {
    complex.minimal_nonfaces()
}

/// Supports of the facet ideal generators (the facets).
pub fn facet_ideal_generators(complex: &SimplicialComplex) -> Vec<VertexSet> {
    complex.facets().to_vec()
}

/// True when every minimal non-face has exactly two elements.
pub fn is_flag(complex: &SimplicialComplex) -> bool {
    complex.minimal_nonfaces().iter().all(|s| s.len() == 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(n, facets).unwrap()
    }

    #[test]
    fn subdivision_examples() {
        let point = barycentric_subdivision(&cx(1, &[&[1]])).unwrap();
        assert_eq!(point.complex, cx(1, &[&[1]]));

        let edge = barycentric_subdivision(&cx(2, &[&[1, 2]])).unwrap();
        assert_eq!(edge.labeling.faces(), &[vs(&[1]), vs(&[2]), vs(&[1, 2])]);
        assert_eq!(edge.complex, cx(3, &[&[1, 3], &[2, 3]]));

        let hex = barycentric_subdivision(&SimplicialComplex::simplex_boundary(3).unwrap()).unwrap();
        assert_eq!(hex.complex.ground_size(), 6);
        assert_eq!(hex.complex.facets().len(), 6);
        assert!(hex.complex.facets().iter().all(|f| f.len() == 2));
        assert!(hex.complex.is_connected());

        assert_eq!(
            barycentric_subdivision(&SimplicialComplex::void(2).unwrap()),
            Err(Error::VoidComplex)
        );
    }

    #[test]
    fn subdivision_sequential_and_parallel_agree() {
        let c = cx(5, &[&[1, 2, 3], &[3, 4, 5], &[1, 5]]);
        assert_eq!(
            barycentric_subdivision_with(&c, Execution::Sequential).unwrap(),
            barycentric_subdivision_with(&c, Execution::Parallel).unwrap()
        );
    }

    #[test]
    fn iterated_examples() {
        let edge = cx(2, &[&[1, 2]]);
        assert_eq!(
            iterated_subdivision(&edge, 1).unwrap(),
            barycentric_subdivision(&edge).unwrap().complex
        );
        let twice = iterated_subdivision(&edge, 2).unwrap();
        assert_eq!((twice.ground_size(), twice.facets().len()), (5, 4));
        assert!(twice.is_connected());
        let c12 = iterated_subdivision(&SimplicialComplex::simplex_boundary(3).unwrap(), 2).unwrap();
        assert_eq!((c12.ground_size(), c12.facets().len()), (12, 12));
        assert!(matches!(
            iterated_subdivision(&SimplicialComplex::simplex(4).unwrap(), 2),
            Err(Error::GroundSetTooLarge { .. })
        ));
        assert!(iterated_subdivision(&edge, 0).is_err());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(
            alexander_dual(&cx(4, &[&[1, 2], &[3, 4]])),
            cx(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]])
        );
        assert!(alexander_dual(&SimplicialComplex::simplex(3).unwrap()).is_void());
        assert!(alexander_dual(&SimplicialComplex::simplex_boundary(3).unwrap()).is_empty_complex());
        assert_eq!(
            alexander_dual(&SimplicialComplex::void(3).unwrap()),
            SimplicialComplex::simplex(3).unwrap()
        );
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_complex(&cx(3, &[&[1, 2]])), cx(3, &[&[3]]));
        assert_eq!(
            complement_complex(&SimplicialComplex::simplex_boundary(3).unwrap()),
            cx(3, &[&[1], &[2], &[3]])
        );
        assert_eq!(
            complement_complex(&cx(4, &[&[1, 3], &[2, 3]])),
            cx(4, &[&[2, 4], &[1, 4]])
        );
    }

    #[test]
    fn generator_examples() {
        let tb = SimplicialComplex::simplex_boundary(3).unwrap();
        assert_eq!(stanley_reisner_generators(&tb), vec![vs(&[1, 2, 3])]);
        assert!(stanley_reisner_generators(&SimplicialComplex::simplex(3).unwrap()).is_empty());
        assert_eq!(
            stanley_reisner_generators(&cx(4, &[&[1, 2], &[3, 4]])),
            vec![vs(&[1, 3]), vs(&[1, 4]), vs(&[2, 3]), vs(&[2, 4])]
        );
        assert_eq!(facet_ideal_generators(&tb), vec![vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]);
        assert_eq!(facet_ideal_generators(&cx(1, &[&[1]])), vec![vs(&[1])]);
        assert_eq!(
            facet_ideal_generators(&SimplicialComplex::simplex(3).unwrap()),
            vec![vs(&[1, 2, 3])]
        );
    }

    #[test]
    fn flag_detection() {
        assert!(is_flag(&cx(3, &[&[1, 2], &[2, 3]])));
        assert!(!is_flag(&SimplicialComplex::simplex_boundary(3).unwrap()));
        assert!(!is_flag(&cx(3, &[&[1, 2]])));
    }
}
