use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::numerics::{Complex, Quad, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldTag {
    Rational,
    Quadratic,
    Real,
    Complex,
}

/// Coefficient field for [`PowerSeries`](crate::numerics::PowerSeries).
///
/// Constructors take `&self` so that precision-carrying types can produce
/// constants at the right working precision.
pub trait Field:
    Clone
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const TAG: FieldTag;
    fn zero_like(&self) -> Self;
    fn int_like(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Approximate absolute value, used only for conditioning checks.
    fn magnitude(&self) -> f64;

    fn one_like(&self) -> Self {
        self.int_like(1)
    }

    /// Whether the element pins down a particular field (a quadratic
    /// irrational does; a rational does not).
    fn carries_field(&self) -> bool {
        false
    }

    /// Whether two elements can be combined.
    fn compatible(&self, _other: &Self) -> bool {
        true
    }
}

impl Field for BigRational {
    const TAG: FieldTag = FieldTag::Rational;
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn int_like(&self, n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude(&self) -> f64 {
        self.to_f64().unwrap_or(f64::INFINITY).abs()
    }
}

impl Field for Quad {
    const TAG: FieldTag = FieldTag::Quadratic;
    fn zero_like(&self) -> Self {
        Quad::int(0)
    }
    fn int_like(&self, n: i64) -> Self {
        Quad::int(n)
    }
    fn is_zero(&self) -> bool {
        Quad::is_zero(self)
    }
    fn magnitude(&self) -> f64 {
        self.to_real(64).to_f64().abs()
    }
    fn carries_field(&self) -> bool {
        !self.is_rational()
    }
    fn compatible(&self, other: &Self) -> bool {
        self.is_rational() || other.is_rational() || self.radicand() == other.radicand()
    }
}

impl Field for Real {
    const TAG: FieldTag = FieldTag::Real;
    fn zero_like(&self) -> Self {
        Real::zero(self.bits())
    }
    fn int_like(&self, n: i64) -> Self {
        Real::from_i64(n, self.bits())
    }
    fn is_zero(&self) -> bool {
        Real::is_zero(self)
    }
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl Field for Complex {
    const TAG: FieldTag = FieldTag::Complex;
    fn zero_like(&self) -> Self {
        Complex::zero(self.bits())
    }
    fn int_like(&self, n: i64) -> Self {
        Complex::from_real(Real::from_i64(n, self.bits()))
    }
    fn is_zero(&self) -> bool {
        Complex::is_zero(self)
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64()
    }
}
