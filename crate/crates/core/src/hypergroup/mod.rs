//! Structure constants of the sphere-to-sphere walk and the checks that
//! decide whether they form a hypergroup.

pub mod constants;
pub mod diam2;
pub mod multistep;
pub mod symmetry;
pub mod verdict;

pub use constants::{
    build_structure_constants, check_associative, check_commutative, check_hypergroup_axioms, shortcut_constants,
    AssociativityWitness, AxiomWitness, CommutativityWitness, StructureConstants,
};
pub use diam2::{check_wildberger_relations, diam2_formula, diam2_parameters, diam2_structure, Diam2Structure, WildbergerParams};
pub use multistep::{enumerate_walks, multi_step_coefficients, EnumerationCaps, MultiStep};
pub use symmetry::{
    check_distance_regular, check_s1, check_s2, symmetry_report, DistanceRegularWitness, IntersectionTables, S1Witness,
    S2Outcome, S2Witness, SymmetryReport,
};
pub use verdict::{analyze, classify, decide_productive, Analysis, Classification, FailureWitness, MethodResults, Verdict};
