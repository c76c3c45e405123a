//! Decides whether a finite pointed graph is hypergroup productive: whether
//! the sphere-to-sphere random walk from the base point induces a
//! commutative discrete hypergroup on the distance indices.
//!
//! Every computation is generic over [`Scalar`]. Exact rationals are the
//! default; the aliases below fix that choice.

pub mod error;
pub mod generators;
pub mod graph;
pub mod hypergroup;
pub mod matrices;
pub mod matrix;
pub mod outcome;
pub mod scalar;
pub mod walks;

pub use error::{Error, Result};
pub use graph::{compute_distance_profile, validate_graph, DistanceMatrix, DistanceProfile, Graph, PointedGraph};
pub use hypergroup::{analyze, decide_productive, Classification, StructureConstants, Verdict};
pub use matrix::Matrix;
pub use outcome::Outcome;
pub use scalar::Scalar;

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
pub type RationalMatrix = Matrix<Rational>;
pub type ExactConstants = StructureConstants<Rational>;
pub type ExactVerdict = Verdict<Rational>;
pub type ExactAnalysis = hypergroup::Analysis<Rational>;
pub type FloatConstants = StructureConstants<f64>;
