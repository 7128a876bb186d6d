use thiserror::Error;

use crate::subset::Subset;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("label {label} is outside 0..={max}")]
    LabelOutOfRange { label: usize, max: usize },
    #[error("diagonal {{{0},{1}}} is not proper")]
    NotProper(usize, usize),
    #[error("the subset must be non-empty")]
    EmptySubset,
    #[error("subset {0} is not contained in the ground set")]
    SubsetOutOfRange(Subset),
    #[error("four-diagonal frame needs one nested component, {subset} has {components}")]
    FrameUndefined { subset: Subset, components: usize },
    #[error("facet specification has no value for {0}")]
    IncompleteSpec(Subset),
    #[error("facet specification assigns a value to {0}, which is not a facet set")]
    UnexpectedFacet(Subset),
    #[error("the signed-length product formula only holds for the default facet values")]
    ProductNeedsDefaultSpec,
    #[error("dilation coefficient must be non-negative")]
    NegativeCoefficient,
    #[error("ambient dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("the polytope is empty")]
    EmptyPolytope,
    #[error("the polyhedron is unbounded")]
    Unbounded,
    #[error("vertex enumeration is limited to n <= {max}, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("no validated deformation found after {attempts} attempts")]
    ValidationExhausted { attempts: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
