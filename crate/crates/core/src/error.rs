use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (complex has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("facet {0} is empty")]
    EmptyFacet(usize),

    #[error("unknown vertex name `{0}`")]
    UnknownVertex(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("generator budget exceeded: degree {degree} needs {required} generators, budget is {budget}")]
    BudgetExceeded {
        degree: usize,
        required: String,
        budget: usize,
    },

    #[error("face index {index} out of range for a degree-{degree} generator")]
    FaceIndexOutOfRange { index: usize, degree: usize },

    #[error("degree-0 generators have no faces")]
    NoFaces,

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),

    #[error("symmetric group S_{k} exceeds the permutation cap {cap}")]
    PermutationCapExceeded { k: usize, cap: usize },

    #[error("degree {degree} exceeds the degree cap {cap}")]
    DegreeExceedsCap { degree: usize, cap: usize },

    #[error("tuple {0:?} does not span a simplex of the complex")]
    NotAGenerator(Vec<usize>),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("boundary composition is nonzero at degree {0}")]
    NonzeroComposition(usize),

    #[error("boundary at degree {0} does not respect the torsion relations")]
    RelationIncompatible(usize),

    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),

    #[error("vertex map is not simplicial: {0:?} maps to a non-simplex")]
    NotSimplicial(Vec<usize>),

    #[error("maps are not contiguous on simplex {0:?}")]
    NotContiguous(Vec<usize>),

    #[error("malformed rational `{0}`")]
    MalformedRational(String),
}

impl Error {
    /// True for errors that come from the combinatorial size guards.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::PermutationCapExceeded { .. }
        )
    }
}
