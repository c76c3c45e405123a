//! Closed-form structure for diameter-two pointed graphs and the
//! associativity relations for order-three commutative tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::DistanceProfile;
use crate::hypergroup::constants::StructureConstants;
use crate::scalar::Scalar;

/// Structure of `H(Γ, v0) = {x_0, x_1, x_2}` determined by `μ_1`, `μ_2` and
/// `m = |S_1(v_1) ∩ S_1(v0)|`.
#[derive(Debug, Clone, PartialEq)]
pub struct Diam2Structure<T> {
    pub mu1: usize,
    pub mu2: usize,
    pub m: usize,
    /// Coefficients of `x_1 ∘ x_1`.
    pub x1x1: [T; 3],
    /// Coefficients of `x_1 ∘ x_2 = x_2 ∘ x_1`.
    pub x1x2: [T; 3],
    /// Coefficients of `x_2 ∘ x_2`.
    pub x2x2: [T; 3],
}

/// Formula values without the range check; entries may be negative for
/// parameter triples that no graph realizes.
pub fn diam2_formula<T: Scalar>(mu1: usize, mu2: usize, m: usize) -> Result<Diam2Structure<T>> {
    if mu1 == 0 || mu2 == 0 || m + 1 > mu1 {
        return Err(Error::Precondition(format!("need mu1 >= 1, mu2 >= 1, 0 <= m <= mu1 - 1; got ({mu1}, {mu2}, {m})")));
    }
    let c = |n: usize| T::from_count(n);
    let (a, b, mm) = (c(mu1), c(mu2), c(m));
    // μ_1 - 1 - m, the number of neighbours of v_1 in S_2(v0)
    let out = c(mu1 - 1 - m);
    let cross = a.clone() * out.clone() / (b.clone() * b.clone());
    let zero = T::zero();
    let one = T::one();
    Ok(Diam2Structure {
        mu1,
        mu2,
        m,
        x1x1: [one.clone() / a.clone(), mm.clone() / a.clone(), out.clone() / a.clone()],
        x1x2: [zero, out.clone() / b.clone(), (b.clone() - a.clone() + one.clone() + mm) / b.clone()],
        x2x2: [
            one.clone() / b.clone(),
            a.clone() / b.clone() - cross.clone(),
            one.clone() - one / b.clone() - a / b + cross,
        ],
    })
}

/// [`diam2_formula`] restricted to parameters whose constants all lie in `[0, 1]`.
pub fn diam2_structure<T: Scalar>(mu1: usize, mu2: usize, m: usize) -> Result<Diam2Structure<T>> {
    let s = diam2_formula::<T>(mu1, mu2, m)?;
    let in_range = |x: &T| !x.below_zero() && !(x.clone() - T::one()).is_positive();
    if !s.x1x1.iter().chain(&s.x1x2).chain(&s.x2x2).all(in_range) {
        return Err(Error::Precondition(format!("({mu1}, {mu2}, {m}) yields constants outside [0, 1]")));
    }
    Ok(s)
}

impl<T: Scalar> Diam2Structure<T> {
    pub fn to_constants(&self) -> StructureConstants<T> {
        let mut sc = StructureConstants::zeros(3);
        for a in 0..3 {
            for k in 0..3 {
                let delta = if a == k { T::one() } else { T::zero() };
                sc.set(0, a, k, delta.clone());
                sc.set(a, 0, k, delta);
            }
        }
        for k in 0..3 {
            sc.set(1, 1, k, self.x1x1[k].clone());
            sc.set(1, 2, k, self.x1x2[k].clone());
            sc.set(2, 1, k, self.x1x2[k].clone());
            sc.set(2, 2, k, self.x2x2[k].clone());
        }
        sc
    }

    pub fn wildberger_params(&self) -> WildbergerParams<T> {
        WildbergerParams {
            omega1: T::from_count(self.mu1),
            omega2: T::from_count(self.mu2),
            alpha1: self.x1x1[1].clone(),
            alpha2: self.x2x2[2].clone(),
            beta1: self.x1x1[2].clone(),
            beta2: self.x2x2[1].clone(),
            gamma1: self.x1x2[1].clone(),
            gamma2: self.x1x2[2].clone(),
        }
    }
}

/// Reads `(μ_1, μ_2, m)` off a diameter-two profile, with `v_1` the
/// smallest vertex of `S_1(v0)`.
pub fn diam2_parameters(profile: &DistanceProfile) -> Result<(usize, usize, usize)> {
    if profile.diameter != 2 {
        return Err(Error::Precondition(format!("diameter is {}, not 2", profile.diameter)));
    }
    let v1 = profile.representative(1).ok_or(Error::SphereEmpty { vertex: profile.base_point, index: 1 })?;
    let m = profile.all_pairs.intersection(v1, 1, profile.base_point, 1);
    Ok((profile.sphere_sizes[1], profile.sphere_sizes[2], m))
}

/// Order-three commutative table
/// `c1∘c1 = (1/ω1) c0 + α1 c1 + β1 c2`,
/// `c2∘c2 = (1/ω2) c0 + β2 c1 + α2 c2`,
/// `c1∘c2 = c2∘c1 = γ1 c1 + γ2 c2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar", deserialize = "T: Scalar"))]
pub struct WildbergerParams<T> {
    #[serde(with = "crate::scalar::text")]
    pub omega1: T,
    #[serde(with = "crate::scalar::text")]
    pub omega2: T,
    #[serde(with = "crate::scalar::text")]
    pub alpha1: T,
    #[serde(with = "crate::scalar::text")]
    pub alpha2: T,
    #[serde(with = "crate::scalar::text")]
    pub beta1: T,
    #[serde(with = "crate::scalar::text")]
    pub beta2: T,
    #[serde(with = "crate::scalar::text")]
    pub gamma1: T,
    #[serde(with = "crate::scalar::text")]
    pub gamma2: T,
}

impl<T: Scalar> WildbergerParams<T> {
    /// Non-negative weights, positive `ω`, rows summing to one.
    pub fn validate(&self) -> Result<()> {
        if !self.omega1.is_positive() || !self.omega2.is_positive() {
            return Err(Error::Precondition("omega must be positive".into()));
        }
        let weights = [&self.alpha1, &self.alpha2, &self.beta1, &self.beta2, &self.gamma1, &self.gamma2];
        if weights.iter().any(|w| w.below_zero()) {
            return Err(Error::Precondition("negative weight".into()));
        }
        let one = T::one();
        let rows = [
            one.clone() / self.omega1.clone() + self.alpha1.clone() + self.beta1.clone(),
            one.clone() / self.omega2.clone() + self.alpha2.clone() + self.beta2.clone(),
            self.gamma1.clone() + self.gamma2.clone(),
        ];
        if rows.iter().any(|r| !r.same(&one)) {
            return Err(Error::Precondition("rows must sum to 1".into()));
        }
        Ok(())
    }

    pub fn to_constants(&self) -> StructureConstants<T> {
        let z = T::zero;
        let one = T::one();
        let mut nested = vec![vec![vec![z(); 3]; 3]; 3];
        for a in 0..3 {
            nested[0][a][a] = one.clone();
            nested[a][0][a] = one.clone();
        }
        nested[1][1] = vec![one.clone() / self.omega1.clone(), self.alpha1.clone(), self.beta1.clone()];
        nested[2][2] = vec![one / self.omega2.clone(), self.beta2.clone(), self.alpha2.clone()];
        nested[1][2] = vec![z(), self.gamma1.clone(), self.gamma2.clone()];
        nested[2][1] = nested[1][2].clone();
        StructureConstants::from_nested(nested).expect("3x3x3")
    }

    /// Inverse of [`to_constants`](Self::to_constants). Requires an
    /// order-three commutative table with `q_{1,2}^0 = 0` and positive
    /// `q_{1,1}^0`, `q_{2,2}^0`.
    pub fn from_constants(sc: &StructureConstants<T>) -> Result<Self> {
        if sc.order() != 3 {
            return Err(Error::Precondition(format!("order {} table, expected 3", sc.order())));
        }
        for k in 0..3 {
            if !sc.get(1, 2, k).same(sc.get(2, 1, k)) {
                return Err(Error::Precondition("table is not commutative".into()));
            }
        }
        if !sc.get(1, 2, 0).vanishes() || !sc.get(1, 1, 0).is_positive() || !sc.get(2, 2, 0).is_positive() {
            return Err(Error::Precondition("table is not of hermitian order-three shape".into()));
        }
        Ok(WildbergerParams {
            omega1: T::one() / sc.get(1, 1, 0).clone(),
            omega2: T::one() / sc.get(2, 2, 0).clone(),
            alpha1: sc.get(1, 1, 1).clone(),
            alpha2: sc.get(2, 2, 2).clone(),
            beta1: sc.get(1, 1, 2).clone(),
            beta2: sc.get(2, 2, 1).clone(),
            gamma1: sc.get(1, 2, 1).clone(),
            gamma2: sc.get(1, 2, 2).clone(),
        })
    }
}

/// `β1 ω1 = γ1 ω2` and `β2 ω2 = γ2 ω1`.
pub fn check_wildberger_relations<T: Scalar>(wp: &WildbergerParams<T>) -> bool {
    (wp.beta1.clone() * wp.omega1.clone()).same(&(wp.gamma1.clone() * wp.omega2.clone()))
        && (wp.beta2.clone() * wp.omega2.clone()).same(&(wp.gamma2.clone() * wp.omega1.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergroup::constants::check_associative;
    use crate::scalar::ratio;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = BigRational;

    fn q(n: usize, d: usize) -> Q {
        ratio(n, d)
    }

    #[test]
    fn petersen_parameters() {
        let s = diam2_structure::<Q>(3, 6, 0).unwrap();
        assert_eq!(s.x1x1, [q(1, 3), q(0, 1), q(2, 3)]);
        assert_eq!(s.x1x2, [q(0, 1), q(1, 3), q(2, 3)]);
        assert_eq!(s.x2x2, [q(1, 6), q(1, 3), q(1, 2)]);
    }

    #[test]
    fn four_cycle_parameters() {
        let s = diam2_structure::<Q>(2, 1, 0).unwrap();
        assert_eq!(s.x2x2, [q(1, 1), q(0, 1), q(0, 1)]);
        assert_eq!(s.x1x1, [q(1, 2), q(0, 1), q(1, 2)]);
    }

    #[test]
    fn m_at_upper_bound_kills_x2_term() {
        for mu1 in 1..6 {
            let s = diam2_formula::<Q>(mu1, 3, mu1 - 1).unwrap();
            assert_eq!(s.x1x1[2], q(0, 1));
        }
    }

    #[test]
    fn parameter_range() {
        assert!(diam2_formula::<Q>(0, 1, 0).is_err());
        assert!(diam2_formula::<Q>(2, 0, 0).is_err());
        assert!(diam2_formula::<Q>(2, 1, 2).is_err());
        // formula is defined, but x2∘x2 would carry a negative x1 coefficient
        assert!(diam2_formula::<Q>(6, 1, 0).is_ok());
        assert!(diam2_structure::<Q>(6, 1, 0).is_err());
    }

    #[test]
    fn relations_examples() {
        let zero = q(0, 1);
        let z3 = WildbergerParams {
            omega1: q(1, 1),
            omega2: q(1, 1),
            alpha1: zero.clone(),
            alpha2: zero.clone(),
            beta1: zero.clone(),
            beta2: zero.clone(),
            gamma1: zero.clone(),
            gamma2: zero.clone(),
        };
        assert!(check_wildberger_relations(&z3));
        let bad = WildbergerParams {
            omega1: q(2, 1),
            omega2: q(2, 1),
            alpha1: zero.clone(),
            alpha2: zero.clone(),
            beta1: q(1, 2),
            beta2: q(1, 2),
            gamma1: q(1, 4),
            gamma2: q(3, 4),
        };
        bad.validate().unwrap();
        assert!(!check_wildberger_relations(&bad));
        assert!(!check_associative(&bad.to_constants()).holds);
    }

    #[test]
    fn params_round_trip_through_table() {
        let wp = diam2_structure::<Q>(5, 10, 2).unwrap().wildberger_params();
        let back = WildbergerParams::from_constants(&wp.to_constants()).unwrap();
        assert_eq!(back, wp);
        assert_eq!(wp.to_constants(), diam2_structure::<Q>(5, 10, 2).unwrap().to_constants());
    }

    proptest! {
        #[test]
        fn diam2_params_satisfy_relations(mu1 in 1usize..13, mu2 in 1usize..13, m_frac in 0.0f64..1.0) {
            let m = ((mu1 as f64) * m_frac) as usize;
            let m = m.min(mu1 - 1);
            let s = diam2_formula::<Q>(mu1, mu2, m).unwrap();
            let wp = s.wildberger_params();
            prop_assert!(check_wildberger_relations(&wp));
            prop_assert!(check_associative(&s.to_constants()).holds);
        }
    }
}
