//! Exact right-hand sides and Minkowski coefficients for the Coxeter-element
//! realisations of the associahedron, with a small exact polytope toolkit to
//! check them against.

pub mod decomposition;
pub mod error;
pub mod json;
pub mod minkowski;
pub mod polygon;
pub mod polytope;
pub mod scalar;
pub mod subset;
pub mod verify;
pub mod zvalues;

pub use decomposition::{
    associated_diagonals, classify_frame, decompose, four_diagonal_frame, CaseLabel,
    DownInterval, FourDiagonalFrame, FrameShape, NestedComponent, SubCase, UpDownDecomposition,
    UpInterval,
};
pub use error::{Error, Result};
pub use minkowski::{
    full_y_table, is_zero_coefficient, signed_lengths, y_four_term, y_moebius, y_product, y_top,
    Method, SignedLengths, YTable,
};
pub use polygon::{CoxeterPartition, Diagonal, DiagonalKind, LabeledPolygon};
pub use scalar::Scalar;
pub use polytope::{
    cyclohedron_counterexample, decomposition_check, dilated_face, enumerate_vertices,
    extreme_points, hrep_from_ztable, minkowski_sum_v, HPolytope, VPolytope,
};
pub use subset::Subset;
pub use zvalues::{
    default_facet_spec, full_z_table, sample_deformation_spec, tight_z, FacetZSpec, Provenance,
    ZTable,
};

/// Arbitrary precision rationals, the default scalar.
pub type Rational = num_rational::BigRational;
/// Machine-word rationals; faster, but can overflow on large inputs.
pub type SmallRational = num_rational::Ratio<i64>;
