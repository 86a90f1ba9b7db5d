use thiserror::Error;

/// Reason a partially ordered set failed to be the face poset of a simplicial complex.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FacePosetViolation {
    #[error("poset has no elements")]
    Empty,
    #[error("{count} minimal elements exceed the 64-vertex ground set")]
    TooManySources { count: usize },
    #[error("elements {first} and {second} lie above the same set of minimal elements")]
    NotInjective { first: usize, second: usize },
    #[error("order between {lower} and {upper} disagrees with inclusion of their vertex sets")]
    OrderMismatch { lower: usize, upper: usize },
    #[error("maximal elements generate {generated} faces but the poset has {elements} elements")]
    FaceSetMismatch { generated: usize, elements: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set of size {size} exceeds the limit of 64")]
    GroundSetTooLarge { size: usize },
    #[error("empty input: a complex needs a ground set of size at least 1")]
    EmptyInput,
    #[error("vertex {vertex} is outside the ground set [1, {ground_size}]")]
    VertexOutOfRange { vertex: usize, ground_size: usize },
    #[error("skeleton index {index} outside 0..={dimension}")]
    SkeletonIndexOutOfRange { index: i64, dimension: i64 },
    #[error("operation undefined on the void complex")]
    VoidComplex,
    #[error("orientation is not transitive: {from}->{via}->{to}")]
    NotTransitive { from: usize, via: usize, to: usize },
    #[error("orientation does not match the graph's edge set")]
    OrientationMismatch,
    #[error("graph admits no transitive orientation")]
    NotTransitivelyOrientable,
    #[error("not a face poset: {0}")]
    NotAFacePoset(FacePosetViolation),
    #[error("complex is not flag: minimal non-face {nonface:?} has size {size}")]
    NotFlag { nonface: Vec<usize>, size: usize },
    #[error("orientation search exceeded {limit} orientations")]
    SearchLimitExceeded { limit: usize },
    #[error("reconstructions from different orientations are not isomorphic")]
    ConflictingReconstructions,
    #[error("universe on {n} vertices exceeds the supported maximum {max}")]
    UniverseTooLarge { n: usize, max: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Stable snake_case identifier used in machine-readable diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::GroundSetTooLarge { .. } => "ground_set_too_large",
            Error::EmptyInput => "empty_input",
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::SkeletonIndexOutOfRange { .. } => "skeleton_index_out_of_range",
            Error::VoidComplex => "void_complex",
            Error::NotTransitive { .. } => "not_transitive",
            Error::OrientationMismatch => "orientation_mismatch",
            Error::NotTransitivelyOrientable => "not_orientable",
            Error::NotAFacePoset(_) => "not_face_poset",
            Error::NotFlag { .. } => "not_flag",
            Error::SearchLimitExceeded { .. } => "search_limit_exceeded",
            Error::ConflictingReconstructions => "conflicting_reconstructions",
            Error::UniverseTooLarge { .. } => "universe_too_large",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Malformed(_) => "malformed_input",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
