//! Numeric traits for coefficient rings and scalar fields.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Num, Signed};

/// Integer ring for multiplicities and virtual-character coefficients.
///
/// Implemented for every signed integer type with exact division, so `i64`,
/// `i128` and [`num_bigint::BigInt`] all qualify. Fixed-width types overflow
/// silently on large characters; use them only where the sizes are known.
pub trait Coefficient:
    Integer + Signed + Clone + Debug + Display + FromStr + FromPrimitive + Send + Sync + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("coefficient type cannot represent an i64")
    }
}

impl<T> Coefficient for T where
    T: Integer + Signed + Clone + Debug + Display + FromStr + FromPrimitive + Send + Sync + 'static
{
}

/// Field used for the invariant form and the dimension product.
///
/// `f64` gives approximate values; [`num_rational::BigRational`] is exact.
pub trait Scalar: Num + Clone + Debug + FromPrimitive + PartialOrd {
    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num).expect("scalar cannot represent numerator")
            / Self::from_i64(den).expect("scalar cannot represent denominator")
    }
}

impl<T> Scalar for T where T: Num + Clone + Debug + FromPrimitive + PartialOrd {}
