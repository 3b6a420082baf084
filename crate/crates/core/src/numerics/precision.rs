use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::Real;

const BITS_PER_DIGIT: f64 = std::f64::consts::LOG2_10;

/// Working precision in decimal digits, plus the number of trailing guard
/// digits that are computed but not trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Precision {
    pub digits: u32,
    pub guard: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Precision {
            digits: 50,
            guard: 10,
        }
    }
}

impl Precision {
    pub fn new(digits: u32, guard: u32) -> Result<Self> {
        if digits < 20 {
            return Err(Error::InvalidInput(format!(
                "precision must be at least 20 digits, got {digits}"
            )));
        }
        if guard < 5 || guard >= digits {
            return Err(Error::InvalidInput(format!(
                "guard digits must be in [5, digits), got {guard}"
            )));
        }
        Ok(Precision { digits, guard })
    }

    /// `digits` with the default guard of 10.
    pub fn with_digits(digits: u32) -> Result<Self> {
        Self::new(digits, 10)
    }

    /// Number of decimal places that results are trusted to.
    pub fn trusted_digits(&self) -> u32 {
        self.digits - self.guard
    }

    /// Binary working precision.
    pub fn bits(&self) -> usize {
        (self.digits as f64 * BITS_PER_DIGIT).ceil() as usize + 16
    }

    /// Precision used inside limit processes that lose digits to cancellation
    /// (the Koenig limit evaluates `p - f(f(p - y))` for tiny `y`).
    pub fn extended_bits(&self) -> usize {
        2 * self.bits() + 64
    }

    /// `10^-(digits - guard)`.
    pub fn tolerance(&self) -> Real {
        Real::pow10(-(self.trusted_digits() as i32), self.bits())
    }

    /// `10^-k` at working precision.
    pub fn epsilon(&self, k: i32) -> Real {
        Real::pow10(-k, self.bits())
    }

    /// Snap radius around singular points: `10^-(digits/2)`.
    pub fn snap_radius(&self) -> Real {
        Real::pow10(-((self.digits / 2) as i32), self.bits())
    }
}
