//! Scalar abstraction shared by every matrix and structure-constant routine.
//!
//! Exact types (`Ratio<i64>`, `BigRational`, `i64`) compare with `==`; the
//! floating-point types compare within a small relative tolerance so the
//! same checkers can be run on `f32`/`f64` as a cheap cross-check of the
//! exact pipeline.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed, Zero};

pub trait Scalar: Num + Signed + Clone + PartialOrd + Debug + Display + Send + Sync + 'static {
    /// Embeds a vertex/edge count.
    fn from_count(n: usize) -> Self;

    /// Equality used by every checker in the crate.
    fn same(&self, other: &Self) -> bool {
        self == other
    }

    fn vanishes(&self) -> bool {
        self.same(&Self::zero())
    }

    fn below_zero(&self) -> bool {
        self.is_negative() && !self.vanishes()
    }

    /// Textual form used in JSON output. Rationals are always `num/den`.
    fn to_text(&self) -> String;

    fn from_text(s: &str) -> Option<Self>;

    fn to_f64(&self) -> f64;
}

fn split_ratio(s: &str) -> (&str, Option<&str>) {
    match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s.trim(), None),
    }
}

macro_rules! impl_ratio_scalar {
    ($int:ty) => {
        impl Scalar for Ratio<$int> {
            fn from_count(n: usize) -> Self {
                Ratio::from_integer(<$int>::try_from(n).expect("count exceeds integer range"))
            }

            fn to_text(&self) -> String {
                format!("{}/{}", self.numer(), self.denom())
            }

            fn from_text(s: &str) -> Option<Self> {
                let (n, d) = split_ratio(s);
                let n: $int = n.parse().ok()?;
                let d: $int = match d {
                    Some(d) => d.parse().ok()?,
                    None => 1,
                };
                if d == 0 {
                    return None;
                }
                Some(Ratio::new(n, d))
            }

            fn to_f64(&self) -> f64 {
                *self.numer() as f64 / *self.denom() as f64
            }
        }
    };
}

impl_ratio_scalar!(i64);
impl_ratio_scalar!(i128);

impl Scalar for BigRational {
    fn from_count(n: usize) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn to_text(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn from_text(s: &str) -> Option<Self> {
        let (n, d) = split_ratio(s);
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = match d {
            Some(d) => d.parse().ok()?,
            None => BigInt::from(1),
        };
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    }

    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for i64 {
    fn from_count(n: usize) -> Self {
        i64::try_from(n).expect("count exceeds i64")
    }

    fn to_text(&self) -> String {
        format!("{self}/1")
    }

    fn from_text(s: &str) -> Option<Self> {
        match split_ratio(s) {
            (n, None) | (n, Some("1")) => n.parse().ok(),
            _ => None,
        }
    }

    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

macro_rules! impl_float_scalar {
    ($float:ty, $tol:expr) => {
        impl Scalar for $float {
            fn from_count(n: usize) -> Self {
                n as $float
            }

            fn same(&self, other: &Self) -> bool {
                let scale = self.abs().max(other.abs()).max(1.0);
                (self - other).abs() <= $tol * scale
            }

            fn to_text(&self) -> String {
                format!("{self:?}")
            }

            fn from_text(s: &str) -> Option<Self> {
                let (n, d) = split_ratio(s);
                let n: $float = n.parse().ok()?;
                match d {
                    Some(d) => Some(n / d.parse::<$float>().ok()?),
                    None => Some(n),
                }
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }
        }
    };
}

impl_float_scalar!(f64, 1e-9);
impl_float_scalar!(f32, 1e-4);

/// `ratio(n, d)` for any scalar.
pub fn ratio<T: Scalar>(numer: usize, denom: usize) -> T {
    T::from_count(numer) / T::from_count(denom)
}

/// serde adapter writing a scalar through [`Scalar::to_text`].
pub mod text {
    use super::Scalar;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Scalar, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_text())
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(d: D) -> Result<T, D::Error> {
        let raw = String::deserialize(d)?;
        T::from_text(&raw).ok_or_else(|| D::Error::custom(format!("invalid scalar `{raw}`")))
    }
}

/// serde adapter for `Vec<T>`.
pub mod text_vec {
    use super::Scalar;
    use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Scalar, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_text())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(d: D) -> Result<Vec<T>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|r| T::from_text(r).ok_or_else(|| D::Error::custom(format!("invalid scalar `{r}`"))))
            .collect()
    }
}
