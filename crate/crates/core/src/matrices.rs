//! k-adjacency matrices, the sphere aggregation map `D`, the k-transition
//! matrices, and the matrix identities tying them to the structure constants.
//!
//! Transition matrices act on `ℓ²(I)` as `P_k(ξ) = ᵗ(ᵗξ P_k)`, i.e. as the
//! transpose of the stored matrix. Every identity below that composes
//! `P_k` with other maps (`P_h D = D A_h`, `P_{i_m}⋯P_{i_1} ξ`) uses that
//! operator convention.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::DistanceProfile;
use crate::hypergroup::constants::StructureConstants;
use crate::matrix::Matrix;
use crate::outcome::Outcome;
use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct AdjacencyFamily<T> {
    /// `A^(k)[x][y] = 1` iff `d(x, y) = k`.
    pub adjacency: Vec<Matrix<i64>>,
    /// `A_k = A^(k) / μ_k` with `μ_k = |S_k(v0)|`.
    pub normalized: Vec<Matrix<T>>,
    /// Set when (S1) fails, so `μ_k` is only the base point's sphere size
    /// and the `A_k` need not be doubly stochastic.
    pub base_point_relative: bool,
}

pub fn build_adjacency_family<T: Scalar>(profile: &DistanceProfile) -> Result<AdjacencyFamily<T>> {
    let d = &profile.all_pairs;
    let n = d.vertex_count();
    let size = profile.index_set_size();
    let adjacency: Vec<Matrix<i64>> =
        (0..size).map(|k| Matrix::from_fn(n, n, |x, y| i64::from(d.get(x, y) == k))).collect();
    let mut normalized = Vec::with_capacity(size);
    for (k, a) in adjacency.iter().enumerate() {
        let mu = profile.sphere_sizes[k];
        if mu == 0 {
            return Err(Error::SphereEmpty { vertex: profile.base_point, index: k });
        }
        let inv = T::one() / T::from_count(mu);
        normalized.push(a.map(|&x| if x == 1 { inv.clone() } else { T::zero() }));
    }
    let base_point_relative =
        (0..n).any(|v| (0..size).any(|k| d.sphere_size(v, k) != profile.sphere_sizes[k]));
    Ok(AdjacencyFamily { adjacency, normalized, base_point_relative })
}

impl<T: Scalar> AdjacencyFamily<T> {
    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    /// `Σ_k A^(k)`; equals the all-ones matrix `J`.
    pub fn sum(&self) -> Matrix<i64> {
        let n = self.adjacency[0].rows();
        Matrix::from_fn(n, n, |x, y| self.adjacency.iter().map(|a| a[(x, y)]).sum())
    }

    /// Every `A_k` has all row and column sums equal to one.
    pub fn normalized_doubly_stochastic(&self) -> bool {
        self.normalized.iter().all(|a| {
            a.row_sums().iter().chain(a.col_sums().iter()).all(|s| s.same(&T::one()))
        })
    }
}

/// `D[i][v] = 1` iff `d(v0, v) = i`.
#[derive(Debug, Clone)]
pub struct AggregationMap<T> {
    pub matrix: Matrix<T>,
}

impl<T: Scalar> AggregationMap<T> {
    pub fn new(profile: &DistanceProfile) -> Self {
        let matrix = Matrix::from_fn(profile.index_set_size(), profile.vertex_count(), |i, v| {
            if profile.distances_from_base[v] == i {
                T::one()
            } else {
                T::zero()
            }
        });
        AggregationMap { matrix }
    }

    /// `D(s)_i = Σ_{v ∈ S_i(v0)} s_v`.
    pub fn apply(&self, s: &[T]) -> Result<Vec<T>> {
        self.matrix.transpose().left_apply(s)
    }

    /// One 1 per column (spheres partition `V`); row `i` has `μ_i` ones.
    pub fn is_partition(&self, sphere_sizes: &[usize]) -> bool {
        let m = &self.matrix;
        let one_per_column = (0..m.cols()).all(|v| {
            (0..m.rows()).filter(|&i| m[(i, v)].same(&T::one())).count() == 1
                && (0..m.rows()).all(|i| m[(i, v)].same(&T::one()) || m[(i, v)].vanishes())
        });
        one_per_column && m.row_sums().iter().zip(sphere_sizes).all(|(s, &mu)| s.same(&T::from_count(mu)))
    }
}

/// `P_k[i][j] = p_{k,i}^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionFamily<T> {
    pub matrices: Vec<Matrix<T>>,
}

pub fn build_transition_family<T: Scalar>(sc: &StructureConstants<T>) -> TransitionFamily<T> {
    TransitionFamily { matrices: (0..sc.order()).map(|k| sc.transition_matrix(k)).collect() }
}

impl<T: Scalar> TransitionFamily<T> {
    /// Matrix of the operator `ξ ↦ ᵗ(ᵗξ P_k)`.
    pub fn operator(&self, k: usize) -> Matrix<T> {
        self.matrices[k].transpose()
    }

    /// Every row non-negative and summing to one.
    pub fn is_stochastic(&self) -> bool {
        self.matrices.iter().all(|p| {
            (0..p.rows()).all(|i| p.row(i).iter().all(|x| !x.below_zero()))
                && p.row_sums().iter().all(|s| s.same(&T::one()))
        })
    }

    /// `(P_{i_m} ⋯ P_{i_1} ξ)` with `ξ = δ_0`, operators applied right to left.
    pub fn extract(&self, sequence: &[usize]) -> Result<Vec<T>> {
        let size = self.matrices.len();
        if let Some(&bad) = sequence.iter().find(|&&s| s >= size) {
            return Err(Error::Precondition(format!("index {bad} outside I of size {size}")));
        }
        let mut xi: Vec<T> = (0..size).map(|n| if n == 0 { T::one() } else { T::zero() }).collect();
        for &k in sequence {
            xi = self.matrices[k].left_apply(&xi)?;
        }
        Ok(xi)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar", deserialize = "T: Scalar"))]
pub struct EntryWitness<T> {
    pub row: usize,
    pub col: usize,
    #[serde(with = "crate::scalar::text")]
    pub lhs: T,
    #[serde(with = "crate::scalar::text")]
    pub rhs: T,
}

impl<T: Scalar> EntryWitness<T> {
    fn between(lhs: &Matrix<T>, rhs: &Matrix<T>) -> Option<Self> {
        lhs.first_difference(rhs).map(|(row, col)| EntryWitness {
            row,
            col,
            lhs: lhs[(row, col)].clone(),
            rhs: rhs[(row, col)].clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar", deserialize = "T: Scalar"))]
pub struct IndexedWitness<T> {
    pub h: usize,
    pub entry: EntryWitness<T>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar", deserialize = "T: Scalar"))]
pub struct PairWitness<T> {
    pub k: usize,
    pub l: usize,
    pub entry: EntryWitness<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PdDaReport<T> {
    pub per_index: Vec<bool>,
    pub witness: Option<IndexedWitness<T>>,
}

impl<T> PdDaReport<T> {
    pub fn all_hold(&self) -> bool {
        self.per_index.iter().all(|&b| b)
    }
}

/// `P_h D = D A_h` for each `h`, with `P_h` acting as an operator.
pub fn check_pd_equals_da<T: Scalar>(
    fam: &AdjacencyFamily<T>,
    tf: &TransitionFamily<T>,
    d: &AggregationMap<T>,
) -> Result<PdDaReport<T>> {
    if fam.len() != tf.matrices.len() || d.matrix.rows() != tf.matrices.len() {
        return Err(Error::Dimension(format!(
            "{} adjacency matrices, {} transition matrices, D has {} rows",
            fam.len(),
            tf.matrices.len(),
            d.matrix.rows()
        )));
    }
    let mut per_index = Vec::with_capacity(fam.len());
    let mut witness = None;
    for h in 0..fam.len() {
        let lhs = tf.operator(h).mul(&d.matrix)?;
        let rhs = d.matrix.mul(&fam.normalized[h])?;
        let diff = EntryWitness::between(&lhs, &rhs);
        per_index.push(diff.is_none());
        if witness.is_none() {
            witness = diff.map(|entry| IndexedWitness { h, entry });
        }
    }
    Ok(PdDaReport { per_index, witness })
}

/// `D A_k A_l = D A_l A_k` for all `k < l`.
pub fn check_daa_commutation<T: Scalar>(fam: &AdjacencyFamily<T>, d: &AggregationMap<T>) -> Result<Outcome<PairWitness<T>>> {
    let da: Vec<Matrix<T>> = fam.normalized.iter().map(|a| d.matrix.mul(a)).collect::<Result<_>>()?;
    for k in 0..fam.len() {
        for l in k + 1..fam.len() {
            let lhs = da[k].mul(&fam.normalized[l])?;
            let rhs = da[l].mul(&fam.normalized[k])?;
            if let Some(entry) = EntryWitness::between(&lhs, &rhs) {
                return Ok(Outcome::from_witness(Some(PairWitness { k, l, entry })));
            }
        }
    }
    Ok(Outcome::from_witness(None))
}

/// `A^(k) A^(l) = A^(l) A^(k)` for all `k < l`, in integer arithmetic.
pub fn check_adjacency_commutation<T: Scalar>(fam: &AdjacencyFamily<T>) -> Outcome<PairWitness<i64>> {
    for k in 0..fam.len() {
        for l in k + 1..fam.len() {
            let lhs = fam.adjacency[k].mul(&fam.adjacency[l]).expect("square");
            let rhs = fam.adjacency[l].mul(&fam.adjacency[k]).expect("square");
            if let Some(entry) = EntryWitness::between(&lhs, &rhs) {
                return Outcome::from_witness(Some(PairWitness { k, l, entry }));
            }
        }
    }
    Outcome::from_witness(None)
}

/// `P_k P_l = P_l P_k` for all `k < l`.
pub fn check_transition_commutation<T: Scalar>(tf: &TransitionFamily<T>) -> Outcome<PairWitness<T>> {
    let n = tf.matrices.len();
    for k in 0..n {
        for l in k + 1..n {
            let lhs = tf.matrices[k].mul(&tf.matrices[l]).expect("square");
            let rhs = tf.matrices[l].mul(&tf.matrices[k]).expect("square");
            if let Some(entry) = EntryWitness::between(&lhs, &rhs) {
                return Outcome::from_witness(Some(PairWitness { k, l, entry }));
            }
        }
    }
    Outcome::from_witness(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, figure2_graph, petersen};
    use crate::graph::{compute_distance_profile, Graph, PointedGraph};
    use crate::hypergroup::constants::build_structure_constants;
    use crate::scalar::ratio;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: usize, d: usize) -> Q {
        ratio(n, d)
    }

    fn profile(g: Graph) -> DistanceProfile {
        compute_distance_profile(&PointedGraph::new(g, 0).unwrap()).unwrap()
    }

    fn int_rows(rows: &[&[i64]]) -> Matrix<i64> {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn four_cycle_adjacency() {
        let fam: AdjacencyFamily<Q> = build_adjacency_family(&profile(cycle(4).unwrap())).unwrap();
        assert_eq!(fam.adjacency[0], Matrix::identity(4));
        assert_eq!(fam.adjacency[1], int_rows(&[&[0, 1, 0, 1], &[1, 0, 1, 0], &[0, 1, 0, 1], &[1, 0, 1, 0]]));
        assert_eq!(fam.adjacency[2], int_rows(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]));
        assert!(!fam.base_point_relative);
        assert!(fam.normalized_doubly_stochastic());
        assert_eq!(fam.sum(), Matrix::from_fn(4, 4, |_, _| 1));
    }

    #[test]
    fn single_vertex_family() {
        let fam: AdjacencyFamily<Q> = build_adjacency_family(&profile(complete(1).unwrap())).unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(fam.adjacency[0], Matrix::identity(1));
    }

    #[test]
    fn petersen_distance_two_is_complement() {
        let fam: AdjacencyFamily<Q> = build_adjacency_family(&profile(petersen())).unwrap();
        let j_minus = Matrix::from_fn(10, 10, |x, y| 1 - i64::from(x == y) - fam.adjacency[1][(x, y)]);
        assert_eq!(fam.adjacency[2], j_minus);
        assert!(fam.adjacency.iter().all(Matrix::is_symmetric));
    }

    #[test]
    fn aggregation_map_partitions() {
        let p = profile(figure2_graph().graph().clone());
        let d: AggregationMap<Q> = AggregationMap::new(&p);
        assert!(d.is_partition(&p.sphere_sizes));
        let ones = vec![q(1, 1); p.vertex_count()];
        assert_eq!(d.apply(&ones).unwrap(), p.sphere_sizes.iter().map(|&m| Q::from_count(m)).collect::<Vec<_>>());
    }

    #[test]
    fn four_cycle_transitions_and_pd_da() {
        let p = profile(cycle(4).unwrap());
        let sc = build_structure_constants::<Q>(&p).unwrap();
        let tf = build_transition_family(&sc);
        assert_eq!(tf.matrices[0], Matrix::identity(3));
        assert_eq!(
            tf.matrices[1].to_rows(),
            vec![vec![q(0, 1), q(1, 1), q(0, 1)], vec![q(1, 2), q(0, 1), q(1, 2)], vec![q(0, 1), q(1, 1), q(0, 1)]]
        );
        assert!(tf.is_stochastic());
        let fam = build_adjacency_family(&p).unwrap();
        let report = check_pd_equals_da(&fam, &tf, &AggregationMap::new(&p)).unwrap();
        assert_eq!(report.per_index, vec![true, true, true]);
        assert!(report.witness.is_none());
    }

    #[test]
    fn plain_matrix_product_is_not_the_identity() {
        // The untransposed product P_1 · D differs from D A_1 on the 4-cycle.
        let p = profile(cycle(4).unwrap());
        let tf = build_transition_family(&build_structure_constants::<Q>(&p).unwrap());
        let fam: AdjacencyFamily<Q> = build_adjacency_family(&p).unwrap();
        let d = AggregationMap::new(&p);
        let plain = tf.matrices[1].mul(&d.matrix).unwrap();
        assert!(!plain.same(&d.matrix.mul(&fam.normalized[1]).unwrap()));
    }

    #[test]
    fn figure2_p3_is_antipodal_permutation() {
        let p = compute_distance_profile(&figure2_graph()).unwrap();
        let tf = build_transition_family(&build_structure_constants::<Q>(&p).unwrap());
        let expected = Matrix::from_fn(4, 4, |i, j| if i + j == 3 { q(1, 1) } else { q(0, 1) });
        assert_eq!(tf.matrices[3], expected);
    }

    #[test]
    fn commutation_checks_on_distance_regular_graph() {
        let p = profile(petersen());
        let fam: AdjacencyFamily<Q> = build_adjacency_family(&p).unwrap();
        let d = AggregationMap::new(&p);
        assert!(check_adjacency_commutation(&fam).holds);
        assert!(check_daa_commutation(&fam, &d).unwrap().holds);
        let tf = build_transition_family(&build_structure_constants::<Q>(&p).unwrap());
        assert!(check_pd_equals_da(&fam, &tf, &d).unwrap().all_hold());
        assert!(check_transition_commutation(&tf).holds);
    }

    #[test]
    fn figure2_daa_commutes() {
        let p = compute_distance_profile(&figure2_graph()).unwrap();
        let fam: AdjacencyFamily<Q> = build_adjacency_family(&p).unwrap();
        assert!(check_daa_commutation(&fam, &AggregationMap::new(&p)).unwrap().holds);
    }

    #[test]
    fn path_family_is_base_point_relative() {
        let g = crate::generators::path(3).unwrap();
        let p = compute_distance_profile(&PointedGraph::new(g, 0).unwrap()).unwrap();
        let fam: AdjacencyFamily<Q> = build_adjacency_family(&p).unwrap();
        assert!(fam.base_point_relative);
        assert!(!fam.normalized_doubly_stochastic());
        // S_2(1) is empty, so the family from the middle vertex is undefined
        let p = compute_distance_profile(&PointedGraph::new(crate::generators::path(3).unwrap(), 1).unwrap()).unwrap();
        assert!(matches!(build_adjacency_family::<Q>(&p), Err(Error::SphereEmpty { .. })));
    }

    #[test]
    fn pd_da_dimension_mismatch() {
        let p4 = profile(cycle(4).unwrap());
        let p5 = profile(complete(3).unwrap());
        let fam: AdjacencyFamily<Q> = build_adjacency_family(&p4).unwrap();
        let tf = build_transition_family(&build_structure_constants::<Q>(&p5).unwrap());
        assert!(matches!(check_pd_equals_da(&fam, &tf, &AggregationMap::new(&p4)), Err(Error::Dimension(_))));
    }

    #[test]
    fn extraction_from_delta_zero() {
        let p = profile(cycle(4).unwrap());
        let tf = build_transition_family(&build_structure_constants::<Q>(&p).unwrap());
        assert_eq!(tf.extract(&[1, 1]).unwrap(), vec![q(1, 2), q(0, 1), q(1, 2)]);
        assert_eq!(tf.extract(&[2]).unwrap(), vec![q(0, 1), q(0, 1), q(1, 1)]);
        assert!(tf.extract(&[3]).is_err());
    }
}
