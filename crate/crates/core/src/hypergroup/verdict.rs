//! The productivity decision: brute force on the structure constants,
//! cross-checked against the matrix criteria wherever they apply.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{check_self_centered, compute_distance_profile, DistanceProfile, PointedGraph};
use crate::hypergroup::constants::{
    build_structure_constants, check_associative, check_commutative, check_hypergroup_axioms, shortcut_constants,
    AssociativityWitness, AxiomWitness, CommutativityWitness, StructureConstants,
};
use crate::hypergroup::symmetry::{symmetry_report, SymmetryReport};
use crate::matrices::{
    build_adjacency_family, build_transition_family, check_adjacency_commutation, check_daa_commutation,
    check_pd_equals_da, AdjacencyFamily, AggregationMap, TransitionFamily,
};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    NotSelfCentered,
    SelfCenteredOnly,
    S1s2,
    DistanceRegular,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::NotSelfCentered => "not-self-centered",
            Classification::SelfCenteredOnly => "self-centered-only",
            Classification::S1s2 => "s1s2",
            Classification::DistanceRegular => "distance-regular",
        }
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Answers of the independent methods. Matrix criteria are `None` when
/// (S1)+(S2) fail, since they are only theorems under those conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodResults {
    pub brute_force: bool,
    pub axioms: bool,
    pub commutative: bool,
    pub associative: bool,
    pub daa_criterion: Option<bool>,
    pub pd_equals_da: Option<bool>,
    pub shortcut_matches: Option<bool>,
    pub adjacency_commutation: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", bound(serialize = "T: Scalar", deserialize = "T: Scalar"))]
pub enum FailureWitness<T> {
    Axiom { witness: AxiomWitness<T> },
    Commutativity { witness: CommutativityWitness<T> },
    Associativity { witness: AssociativityWitness<T> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar", deserialize = "T: Scalar"))]
pub struct Verdict<T> {
    pub base_point: usize,
    pub diameter: usize,
    pub sphere_sizes: Vec<usize>,
    pub classification: Classification,
    pub s1: bool,
    pub s2: bool,
    pub distance_regular: bool,
    pub productive: bool,
    pub method_results: MethodResults,
    pub failure_witness: Option<FailureWitness<T>>,
}

/// Everything the pipeline computed, for reporting.
#[derive(Debug, Clone)]
pub struct Analysis<T> {
    pub profile: DistanceProfile,
    pub symmetry: SymmetryReport,
    pub constants: StructureConstants<T>,
    pub adjacency: AdjacencyFamily<T>,
    pub aggregation: AggregationMap<T>,
    pub transitions: TransitionFamily<T>,
    pub verdict: Verdict<T>,
}

/// Classification without computing structure constants.
pub fn classify(profile: &DistanceProfile, symmetry: &SymmetryReport) -> Classification {
    if !check_self_centered(&profile.all_pairs).holds {
        Classification::NotSelfCentered
    } else if symmetry.distance_regular.holds {
        Classification::DistanceRegular
    } else if symmetry.s1s2() {
        Classification::S1s2
    } else {
        Classification::SelfCenteredOnly
    }
}

pub fn analyze<T: Scalar>(pg: &PointedGraph) -> Result<Analysis<T>> {
    let profile = compute_distance_profile(pg)?;
    let centered = check_self_centered(&profile.all_pairs);
    if let Some(w) = centered.witness {
        return Err(Error::NotSelfCentered { v: w.v, ecc_v: w.ecc_v, w: w.w, ecc_w: w.ecc_w });
    }
    let symmetry = symmetry_report(&profile);
    let classification = classify(&profile, &symmetry);

    let constants: StructureConstants<T> = build_structure_constants(&profile)?;
    let axioms = check_hypergroup_axioms(&constants);
    let commutative = check_commutative(&constants);
    let associative = check_associative(&constants);
    let brute_force = axioms.holds && commutative.holds && associative.holds;

    let adjacency: AdjacencyFamily<T> = build_adjacency_family(&profile)?;
    let aggregation = AggregationMap::new(&profile);
    let transitions = build_transition_family(&constants);
    let adjacency_commutation = check_adjacency_commutation(&adjacency).holds;

    let s1s2 = symmetry.s1s2();
    let (daa_criterion, pd_equals_da, shortcut_matches) = if s1s2 {
        let daa = check_daa_commutation(&adjacency, &aggregation)?.holds;
        let pd = check_pd_equals_da(&adjacency, &transitions, &aggregation)?.all_hold();
        let shortcut: StructureConstants<T> = shortcut_constants(&profile, &symmetry)?;
        (Some(daa), Some(pd), Some(shortcut.same(&constants)))
    } else {
        (None, None, None)
    };

    // Disagreement here falsifies the implementation, not the mathematics.
    if s1s2 {
        if daa_criterion != Some(brute_force) {
            return Err(Error::CrossCheck(format!(
                "brute force says productive = {brute_force}, D A_k A_l criterion says {daa_criterion:?}"
            )));
        }
        if pd_equals_da != Some(commutative.holds) {
            return Err(Error::CrossCheck(format!(
                "commutative = {}, P_h D = D A_h says {pd_equals_da:?}",
                commutative.holds
            )));
        }
        if shortcut_matches != Some(true) {
            return Err(Error::CrossCheck("shortcut constants differ from the defining sum".into()));
        }
        if adjacency_commutation && !brute_force {
            return Err(Error::CrossCheck("A^(k) commute but the table is not a hypergroup".into()));
        }
    }
    if classification == Classification::DistanceRegular && !s1s2 {
        return Err(Error::CrossCheck("distance-regular graph failing (S1)/(S2)".into()));
    }

    let failure_witness = axioms
        .witness
        .map(|witness| FailureWitness::Axiom { witness })
        .or_else(|| commutative.witness.map(|witness| FailureWitness::Commutativity { witness }))
        .or_else(|| associative.witness.map(|witness| FailureWitness::Associativity { witness }));

    let verdict = Verdict {
        base_point: profile.base_point,
        diameter: profile.diameter,
        sphere_sizes: profile.sphere_sizes.clone(),
        classification,
        s1: symmetry.s1.holds,
        s2: symmetry.s2.holds,
        distance_regular: symmetry.distance_regular.holds,
        productive: brute_force,
        method_results: MethodResults {
            brute_force,
            axioms: axioms.holds,
            commutative: commutative.holds,
            associative: associative.holds,
            daa_criterion,
            pd_equals_da,
            shortcut_matches,
            adjacency_commutation,
        },
        failure_witness,
    };
    Ok(Analysis { profile, symmetry, constants, adjacency, aggregation, transitions, verdict })
}

pub fn decide_productive<T: Scalar>(pg: &PointedGraph) -> Result<Verdict<T>> {
    analyze(pg).map(|a| a.verdict)
}
