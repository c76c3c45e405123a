//! Distance distribution after a sequence of sphere jumps, computed from the
//! structure constants and by literal enumeration of walks.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistanceProfile, SphereIndex};
use crate::hypergroup::constants::StructureConstants;
use crate::hypergroup::symmetry::{check_s1, check_s2};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationCaps {
    pub max_length: usize,
    pub max_tuples: u128,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps { max_length: 5, max_tuples: 100_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultiStep<T> {
    /// `((x_{i1} ∘ x_{i2}) ∘ ...) ∘ x_{im}`.
    pub convolution: Vec<T>,
    /// Nested sum over `v_1 ∈ S_{i1}(v0), v_2 ∈ S_{i2}(v_1), ...`.
    pub enumeration: Vec<T>,
    /// (S1) and (S2) both hold, so the two vectors must coincide.
    pub symmetric: bool,
}

impl<T: Scalar> MultiStep<T> {
    pub fn agree(&self) -> bool {
        self.convolution.iter().zip(&self.enumeration).all(|(a, b)| a.same(b))
    }
}

/// Upper bound on the number of walks the enumeration visits.
fn tuple_bound(spheres: &SphereIndex, n: usize, sequence: &[usize]) -> u128 {
    sequence.iter().fold(1u128, |acc, &i| {
        let widest = (0..n).map(|v| spheres.sphere(v, i).len()).max().unwrap_or(0) as u128;
        acc.saturating_mul(widest.max(1))
    })
}

/// Exact nested-sum enumeration of the walk distribution. Walks are
/// grouped by their weight denominator `Π |S_{i_j}(v_{j-1})|` and summed
/// at the end, so each walk costs integer work only.
pub fn enumerate_walks<T: Scalar>(profile: &DistanceProfile, sequence: &[usize], caps: EnumerationCaps) -> Result<Vec<T>> {
    let size = profile.index_set_size();
    if sequence.is_empty() {
        return Err(Error::Precondition("jump sequence must be non-empty".into()));
    }
    if let Some(&bad) = sequence.iter().find(|&&s| s >= size) {
        return Err(Error::Precondition(format!("index {bad} outside I of size {size}")));
    }
    if sequence.len() > caps.max_length {
        return Err(Error::EnumerationBudget(format!(
            "sequence length {} exceeds cap {}",
            sequence.len(),
            caps.max_length
        )));
    }
    let spheres = profile.all_pairs.sphere_index();
    let bound = tuple_bound(&spheres, profile.vertex_count(), sequence);
    if bound > caps.max_tuples {
        return Err(Error::EnumerationBudget(format!("up to {bound} walks exceeds budget {}", caps.max_tuples)));
    }

    // denominator -> walk counts per final distance
    let mut buckets: BTreeMap<u128, Vec<u64>> = BTreeMap::new();
    let mut stack: Vec<(usize, usize, u128)> = vec![(profile.base_point, 0, 1)];
    while let Some((v, depth, denom)) = stack.pop() {
        if depth == sequence.len() {
            buckets.entry(denom).or_insert_with(|| vec![0; size])[profile.distances_from_base[v]] += 1;
            continue;
        }
        let next = spheres.sphere(v, sequence[depth]);
        if next.is_empty() {
            return Err(Error::SphereEmpty { vertex: v, index: sequence[depth] });
        }
        let denom = denom * next.len() as u128;
        stack.extend(next.iter().map(|&w| (w, depth + 1, denom)));
    }

    let mut out = vec![T::zero(); size];
    for (denom, counts) in buckets {
        let denom = T::from_text(&denom.to_string()).expect("integer denominator");
        for (o, &c) in out.iter_mut().zip(&counts) {
            if c != 0 {
                *o = o.clone() + T::from_count(c as usize) / denom.clone();
            }
        }
    }
    Ok(out)
}

/// Both computations of the `m`-step distribution. When (S1)+(S2) hold a
/// disagreement is reported as [`Error::CrossCheck`].
pub fn multi_step_coefficients<T: Scalar>(
    profile: &DistanceProfile,
    sc: &StructureConstants<T>,
    sequence: &[usize],
    caps: EnumerationCaps,
) -> Result<MultiStep<T>> {
    let convolution = sc.left_nested(sequence)?;
    let enumeration = enumerate_walks(profile, sequence, caps)?;
    let symmetric = check_s1(profile).holds && check_s2(profile).holds;
    let out = MultiStep { convolution, enumeration, symmetric };
    if symmetric && !out.agree() {
        return Err(Error::CrossCheck(format!(
            "sequence {sequence:?}: convolution {:?} != enumeration {:?}",
            out.convolution, out.enumeration
        )));
    }
    Ok(out)
}
