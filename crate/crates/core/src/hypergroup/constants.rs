//! Structure constants of the pre-hypergroup `H(Γ, v0)` and the
//! brute-force algebra checks run against them.

use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::DistanceProfile;
use crate::hypergroup::symmetry::SymmetryReport;
use crate::matrix::Matrix;
use crate::outcome::Outcome;
use crate::scalar::Scalar;

/// `q[i][j][k]`: coefficient of `x_k` in `x_i ∘ x_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants<T> {
    order: usize,
    table: Vec<T>,
}

impl<T: Scalar> StructureConstants<T> {
    pub fn zeros(order: usize) -> Self {
        StructureConstants { order, table: vec![T::zero(); order * order * order] }
    }

    pub fn from_nested(nested: Vec<Vec<Vec<T>>>) -> Result<Self> {
        let order = nested.len();
        if nested.iter().any(|row| row.len() != order || row.iter().any(|c| c.len() != order)) {
            return Err(Error::Dimension(format!("structure table is not {order}x{order}x{order}")));
        }
        Ok(StructureConstants { order, table: nested.into_iter().flatten().flatten().collect() })
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<T>>> {
        (0..self.order).map(|i| (0..self.order).map(|j| self.product(i, j).to_vec()).collect()).collect()
    }

    /// `|I|`.
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> &T {
        &self.table[(i * self.order + j) * self.order + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: T) {
        let n = self.order;
        self.table[(i * n + j) * n + k] = value;
    }

    /// Coefficient vector of `x_i ∘ x_j`.
    pub fn product(&self, i: usize, j: usize) -> &[T] {
        let start = (i * self.order + j) * self.order;
        &self.table[start..start + self.order]
    }

    pub fn basis(&self, i: usize) -> Vec<T> {
        (0..self.order).map(|k| if k == i { T::one() } else { T::zero() }).collect()
    }

    /// Bilinear extension of `∘` to coefficient vectors.
    pub fn convolve(&self, a: &[T], b: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); self.order];
        for (i, ai) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let w = ai.clone() * bj.clone();
                for (o, q) in out.iter_mut().zip(self.product(i, j)) {
                    if !q.is_zero() {
                        *o = o.clone() + w.clone() * q.clone();
                    }
                }
            }
        }
        out
    }

    /// `((x_{s1} ∘ x_{s2}) ∘ ...) ∘ x_{sm}`.
    pub fn left_nested(&self, sequence: &[usize]) -> Result<Vec<T>> {
        let (&first, rest) = sequence
            .split_first()
            .ok_or_else(|| Error::Precondition("jump sequence must be non-empty".into()))?;
        if let Some(&bad) = sequence.iter().find(|&&s| s >= self.order) {
            return Err(Error::Precondition(format!("index {bad} outside I of size {}", self.order)));
        }
        let mut acc = self.basis(first);
        for &s in rest {
            acc = self.convolve(&acc, &self.basis(s));
        }
        Ok(acc)
    }

    /// `Q_k = (q_{k,i}^j)_{i,j}`.
    pub fn transition_matrix(&self, k: usize) -> Matrix<T> {
        Matrix::from_fn(self.order, self.order, |i, j| self.get(k, i, j).clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> StructureConstants<U> {
        StructureConstants { order: self.order, table: self.table.iter().map(f).collect() }
    }

    pub fn same(&self, other: &Self) -> bool {
        self.order == other.order && self.table.iter().zip(&other.table).all(|(a, b)| a.same(b))
    }

    /// First `(i, j, k)` where the tables differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        (0..self.table.len())
            .find(|&idx| !self.table[idx].same(&other.table[idx]))
            .map(|idx| (idx / (n * n), (idx / n) % n, idx % n))
    }
}

impl<T: Scalar> Serialize for StructureConstants<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let nested: Vec<Vec<Vec<String>>> = self
            .to_nested()
            .iter()
            .map(|row| row.iter().map(|c| c.iter().map(Scalar::to_text).collect()).collect())
            .collect();
        nested.serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for StructureConstants<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<Vec<Vec<String>>>::deserialize(d)?;
        let parse = |x: &String| T::from_text(x).ok_or_else(|| D::Error::custom(format!("invalid scalar `{x}`")));
        let nested = raw
            .iter()
            .map(|row| row.iter().map(|c| c.iter().map(parse).collect()).collect())
            .collect::<std::result::Result<Vec<Vec<Vec<T>>>, D::Error>>()?;
        StructureConstants::from_nested(nested).map_err(D::Error::custom)
    }
}

/// Structure constants straight from the defining sum
/// `p_{i,j}^k = (1/|S_i(v0)|) Σ_{v ∈ S_i(v0)} |S_j(v) ∩ S_k(v0)| / |S_j(v)|`.
///
/// No symmetry shortcut is taken, so this is well defined for any
/// self-centered graph.
pub fn build_structure_constants<T: Scalar>(profile: &DistanceProfile) -> Result<StructureConstants<T>> {
    let size = profile.index_set_size();
    let base = profile.base_point;
    let mut sc = StructureConstants::zeros(size);
    let mut hist = vec![0usize; size * size];
    for (i, sphere) in profile.spheres.iter().enumerate() {
        if sphere.is_empty() {
            return Err(Error::SphereEmpty { vertex: base, index: i });
        }
        let mut acc = vec![T::zero(); size * size];
        for &v in sphere {
            // hist[j][k] = |S_j(v) ∩ S_k(v0)|
            hist.iter_mut().for_each(|c| *c = 0);
            for (&dv, &d0) in profile.all_pairs.row(v).iter().zip(&profile.distances_from_base) {
                hist[dv * size + d0] += 1;
            }
            for j in 0..size {
                let sphere_size: usize = hist[j * size..(j + 1) * size].iter().sum();
                if sphere_size == 0 {
                    return Err(Error::SphereEmpty { vertex: v, index: j });
                }
                let denom = T::from_count(sphere_size);
                for k in 0..size {
                    let c = hist[j * size + k];
                    if c != 0 {
                        acc[j * size + k] = acc[j * size + k].clone() + T::from_count(c) / denom.clone();
                    }
                }
            }
        }
        let mu = T::from_count(sphere.len());
        for j in 0..size {
            for k in 0..size {
                sc.set(i, j, k, acc[j * size + k].clone() / mu.clone());
            }
        }
    }
    Ok(sc)
}

/// Closed form `p_{i,j}^k = μ_k |S_j(z) ∩ S_i(v0)| / (μ_i μ_j)` for any
/// `z ∈ S_k(v0)`. Only valid under (S1) and (S2).
pub fn shortcut_constants<T: Scalar>(profile: &DistanceProfile, symmetry: &SymmetryReport) -> Result<StructureConstants<T>> {
    if !symmetry.s1.holds {
        return Err(Error::Precondition("shortcut constants need (S1)".into()));
    }
    let tables = match (&symmetry.s2.holds, &symmetry.s2.tables) {
        (true, Some(t)) => t,
        _ => return Err(Error::Precondition("shortcut constants need (S2)".into())),
    };
    let size = profile.index_set_size();
    let mu = &profile.sphere_sizes;
    let mut sc = StructureConstants::zeros(size);
    for i in 0..size {
        for j in 0..size {
            for k in 0..size {
                let numer = mu[k] * tables.get(k, j, i);
                let value = T::from_count(numer) / (T::from_count(mu[i]) * T::from_count(mu[j]));
                sc.set(i, j, k, value);
            }
        }
    }
    Ok(sc)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar", deserialize = "T: Scalar"))]
pub struct CommutativityWitness<T> {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    #[serde(with = "crate::scalar::text")]
    pub ij: T,
    #[serde(with = "crate::scalar::text")]
    pub ji: T,
}

pub fn check_commutative<T: Scalar>(sc: &StructureConstants<T>) -> Outcome<CommutativityWitness<T>> {
    let n = sc.order();
    let witness = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .find(|&(i, j, k)| !sc.get(i, j, k).same(sc.get(j, i, k)))
        .map(|(i, j, k)| CommutativityWitness { i, j, k, ij: sc.get(i, j, k).clone(), ji: sc.get(j, i, k).clone() });
    Outcome::from_witness(witness)
}

/// Coefficient `m` of `x_i ∘ (x_l ∘ x_j)` (`lhs`) and `(x_i ∘ x_l) ∘ x_j` (`rhs`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar", deserialize = "T: Scalar"))]
pub struct AssociativityWitness<T> {
    pub i: usize,
    pub l: usize,
    pub j: usize,
    pub m: usize,
    #[serde(with = "crate::scalar::text")]
    pub lhs: T,
    #[serde(with = "crate::scalar::text")]
    pub rhs: T,
    #[serde(with = "crate::scalar::text_vec")]
    pub lhs_vector: Vec<T>,
    #[serde(with = "crate::scalar::text_vec")]
    pub rhs_vector: Vec<T>,
}

/// Expands both bracketings for every triple `(i, l, j)`.
pub fn check_associative<T: Scalar>(sc: &StructureConstants<T>) -> Outcome<AssociativityWitness<T>> {
    let n = sc.order();
    for i in 0..n {
        for l in 0..n {
            let il = sc.product(i, l);
            for j in 0..n {
                let lhs_vector = sc.convolve(&sc.basis(i), sc.product(l, j));
                let rhs_vector = sc.convolve(il, &sc.basis(j));
                if let Some(m) = (0..n).find(|&m| !lhs_vector[m].same(&rhs_vector[m])) {
                    return Outcome::from_witness(Some(AssociativityWitness {
                        i,
                        l,
                        j,
                        m,
                        lhs: lhs_vector[m].clone(),
                        rhs: rhs_vector[m].clone(),
                        lhs_vector,
                        rhs_vector,
                    }));
                }
            }
        }
    }
    Outcome::from_witness(None)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", bound(serialize = "T: Scalar", deserialize = "T: Scalar"))]
pub enum AxiomWitness<T> {
    Negative {
        i: usize,
        j: usize,
        k: usize,
        #[serde(with = "crate::scalar::text")]
        value: T,
    },
    RowSum {
        i: usize,
        j: usize,
        #[serde(with = "crate::scalar::text")]
        sum: T,
    },
    /// `x_0` fails to act as the unit at `x_0 ∘ x_j` or `x_i ∘ x_0`.
    Unit {
        i: usize,
        j: usize,
        k: usize,
        #[serde(with = "crate::scalar::text")]
        value: T,
    },
    /// `q_{i,j}^0 != 0` must hold exactly when `i = j`.
    Involution {
        i: usize,
        j: usize,
        #[serde(with = "crate::scalar::text")]
        value: T,
    },
}

/// Pre-hypergroup axioms with the identity involution: non-negativity,
/// normalized rows, `x_0` as unit, and `q_{i,j}^0 != 0 ⟺ i = j`.
pub fn check_hypergroup_axioms<T: Scalar>(sc: &StructureConstants<T>) -> Outcome<AxiomWitness<T>> {
    let n = sc.order();
    let delta = |a: usize, b: usize| if a == b { T::one() } else { T::zero() };
    for i in 0..n {
        for j in 0..n {
            if let Some(k) = (0..n).find(|&k| sc.get(i, j, k).below_zero()) {
                return Outcome::from_witness(Some(AxiomWitness::Negative { i, j, k, value: sc.get(i, j, k).clone() }));
            }
            let sum = sc.product(i, j).iter().fold(T::zero(), |acc, x| acc + x.clone());
            if !sum.same(&T::one()) {
                return Outcome::from_witness(Some(AxiomWitness::RowSum { i, j, sum }));
            }
        }
    }
    for a in 0..n {
        for k in 0..n {
            if !sc.get(0, a, k).same(&delta(a, k)) {
                return Outcome::from_witness(Some(AxiomWitness::Unit { i: 0, j: a, k, value: sc.get(0, a, k).clone() }));
            }
            if !sc.get(a, 0, k).same(&delta(a, k)) {
                return Outcome::from_witness(Some(AxiomWitness::Unit { i: a, j: 0, k, value: sc.get(a, 0, k).clone() }));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let q0 = sc.get(i, j, 0);
            if q0.vanishes() == (i == j) {
                return Outcome::from_witness(Some(AxiomWitness::Involution { i, j, value: q0.clone() }));
            }
        }
    }
    Outcome::from_witness(None)
}
