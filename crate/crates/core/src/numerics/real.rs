use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Exponent, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constant cache"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// Binary floating-point number with a fixed mantissa length.
///
/// Arithmetic between two values is carried out at the larger of the two
/// precisions, rounding to nearest-even.
#[derive(Clone)]
pub struct Real {
    v: BigFloat,
    bits: usize,
}

macro_rules! binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let bits = self.bits.max(rhs.bits);
                Real {
                    v: self.v.$inner(&rhs.v, bits, RM),
                    bits,
                }
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $tr<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real {
            v: BigFloat::neg(&self.v),
            bits: self.bits,
        }
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real {
            v: BigFloat::neg(&self.v),
            bits: self.bits,
        }
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.v.cmp(&other.v) == Some(0)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.cmp(&other.v).map(|c| c.cmp(&0))
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(30))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(((self.bits as f64) / std::f64::consts::LOG2_10) as usize);
        write!(f, "{}", self.to_decimal(digits.max(1)))
    }
}

impl Real {
    fn wrap(v: BigFloat, bits: usize) -> Real {
        Real { v, bits }
    }

    pub fn zero(bits: usize) -> Real {
        Real::wrap(BigFloat::from_u8(0, bits), bits)
    }

    pub fn one(bits: usize) -> Real {
        Real::wrap(BigFloat::from_u8(1, bits), bits)
    }

    pub fn from_i64(n: i64, bits: usize) -> Real {
        Real::wrap(BigFloat::from_i64(n, bits), bits)
    }

    pub fn from_f64(x: f64, bits: usize) -> Real {
        Real::wrap(BigFloat::from_f64(x, bits), bits)
    }

    /// `n / d` correctly rounded.
    pub fn ratio(n: i64, d: i64, bits: usize) -> Real {
        Real::from_i64(n, bits + 64).div_at(&Real::from_i64(d, bits + 64), bits)
    }

    pub fn from_bigint(n: &BigInt, bits: usize) -> Real {
        if n.is_zero() {
            return Real::zero(bits);
        }
        let words = n.magnitude().to_u64_digits();
        let sign = if n.is_negative() { Sign::Neg } else { Sign::Pos };
        let exact = BigFloat::from_words(&words, sign, (64 * words.len()) as Exponent);
        let mut v = exact;
        v.set_precision(bits, RM).expect("valid precision");
        Real::wrap(v, bits)
    }

    /// Correctly rounded conversion of an exact rational.
    pub fn from_rational(q: &BigRational, bits: usize) -> Real {
        let wide = |n: &BigInt| {
            let b = (n.bits() as usize).max(bits) + 64;
            Real::from_bigint(n, b)
        };
        let num = wide(q.numer());
        let den = wide(q.denom());
        num.div_at(&den, bits)
    }

    /// `10^k`.
    pub fn pow10(k: i32, bits: usize) -> Real {
        let p = BigInt::from(10u32).pow(k.unsigned_abs());
        if k >= 0 {
            Real::from_bigint(&p, bits)
        } else {
            Real::from_rational(&BigRational::new(BigInt::from(1), p), bits)
        }
    }

    pub fn pi(bits: usize) -> Real {
        Real::wrap(with_consts(|cc| cc.pi(bits, RM)), bits)
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    /// Rounds (or widens) to `bits`.
    pub fn with_bits(&self, bits: usize) -> Real {
        let mut v = self.v.clone();
        if v.is_nan() || v.is_inf() {
            return Real::wrap(v, bits);
        }
        v.set_precision(bits, RM).expect("valid precision");
        Real::wrap(v, bits)
    }

    fn div_at(&self, rhs: &Real, bits: usize) -> Real {
        Real::wrap(self.v.div(&rhs.v, bits, RM), bits)
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !(self.v.is_nan() || self.v.is_inf())
    }

    pub fn is_positive(&self) -> bool {
        !self.v.is_zero() && self.v.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        !self.v.is_zero() && self.v.is_negative()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.v.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Real {
        Real::wrap(self.v.abs(), self.bits)
    }

    pub fn max(self, other: Real) -> Real {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Real) -> Real {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn mul_int(&self, n: i64) -> Real {
        self * &Real::from_i64(n, self.bits)
    }

    pub fn div_int(&self, n: i64) -> Real {
        self / &Real::from_i64(n, self.bits)
    }

    pub fn recip(&self) -> Real {
        Real::wrap(self.v.reciprocal(self.bits, RM), self.bits)
    }

    pub fn sqr(&self) -> Real {
        self * self
    }

    pub fn powi(&self, n: i64) -> Real {
        let r = Real::wrap(self.v.powi(n.unsigned_abs() as usize, self.bits, RM), self.bits);
        if n < 0 {
            r.recip()
        } else {
            r
        }
    }

    pub fn sqrt(&self) -> Real {
        Real::wrap(self.v.sqrt(self.bits, RM), self.bits)
    }

    /// Real cube root, defined for negative arguments.
    pub fn cbrt(&self) -> Real {
        Real::wrap(self.v.cbrt(self.bits, RM), self.bits)
    }

    pub fn ln(&self) -> Real {
        Real::wrap(with_consts(|cc| self.v.ln(self.bits, RM, cc)), self.bits)
    }

    pub fn exp(&self) -> Real {
        Real::wrap(with_consts(|cc| self.v.exp(self.bits, RM, cc)), self.bits)
    }

    /// `self^e` for positive `self`.
    pub fn pow(&self, e: &Real) -> Real {
        (e * &self.ln()).exp()
    }

    pub fn cos(&self) -> Real {
        Real::wrap(with_consts(|cc| self.v.cos(self.bits, RM, cc)), self.bits)
    }

    pub fn sin(&self) -> Real {
        Real::wrap(with_consts(|cc| self.v.sin(self.bits, RM, cc)), self.bits)
    }

    pub fn cosh(&self) -> Real {
        Real::wrap(with_consts(|cc| self.v.cosh(self.bits, RM, cc)), self.bits)
    }

    pub fn sinh(&self) -> Real {
        Real::wrap(with_consts(|cc| self.v.sinh(self.bits, RM, cc)), self.bits)
    }

    pub fn atan(&self) -> Real {
        Real::wrap(with_consts(|cc| self.v.atan(self.bits, RM, cc)), self.bits)
    }

    /// Principal argument of `x + i*y`, in `(-pi, pi]`. Returns `None` at the origin.
    pub fn atan2(y: &Real, x: &Real) -> Option<Real> {
        let bits = y.bits.max(x.bits);
        if x.is_zero() {
            return match y.signum() {
                0 => None,
                1 => Some(Real::pi(bits).div_int(2)),
                _ => Some(-Real::pi(bits).div_int(2)),
            };
        }
        let base = (y / x).atan();
        if x.is_positive() {
            Some(base)
        } else if y.is_negative() {
            Some(base - Real::pi(bits))
        } else {
            Some(base + Real::pi(bits))
        }
    }

    /// Nearest integer, ties to even.
    pub fn round_to_bigint(&self) -> BigInt {
        let r = self.v.round(0, RM);
        let Some((words, _, sign, e, _)) = r.as_raw_parts() else {
            return BigInt::zero();
        };
        if r.is_zero() {
            return BigInt::zero();
        }
        let mag = BigUint::from_slice(
            &words
                .iter()
                .flat_map(|w| [(*w & 0xffff_ffff) as u32, (*w >> 32) as u32])
                .collect::<Vec<_>>(),
        );
        let shift = e as i64 - 64 * words.len() as i64;
        let mag = if shift >= 0 {
            mag << (shift as usize)
        } else {
            mag >> ((-shift) as usize)
        };
        let n = BigInt::from(mag);
        if sign == Sign::Neg {
            -n
        } else {
            n
        }
    }

    /// Approximate value; saturates to +-inf or 0 outside the `f64` range.
    pub fn to_f64(&self) -> f64 {
        if self.v.is_nan() {
            return f64::NAN;
        }
        if self.v.is_inf() {
            return if self.v.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY };
        }
        let Some((words, _, sign, e, _)) = self.v.as_raw_parts() else {
            return 0.0;
        };
        if self.v.is_zero() {
            return 0.0;
        }
        let top = *words.last().unwrap_or(&0) as f64 / 18446744073709551616.0;
        let mag = top * 2f64.powi(e.clamp(-2000, 2000));
        if sign == Sign::Neg {
            -mag
        } else {
            mag
        }
    }

    /// Approximate decimal exponent: `floor(log10 |self|)` give or take one.
    fn decimal_exponent_estimate(&self) -> i64 {
        let Some((words, _, _, e, _)) = self.v.as_raw_parts() else {
            return 0;
        };
        let top = *words.last().unwrap_or(&1) as f64 / 18446744073709551616.0;
        (top.log10() + e as f64 * std::f64::consts::LOG10_2).floor() as i64
    }

    /// Decimal rendering with `sig` significant digits, trailing zeros removed.
    /// Plain notation for moderate exponents, `d.ddde-N` otherwise.
    pub fn to_decimal(&self, sig: usize) -> String {
        if self.v.is_nan() {
            return "NaN".into();
        }
        if self.v.is_inf() {
            return if self.v.is_negative() { "-inf".into() } else { "inf".into() };
        }
        if self.is_zero() {
            return "0".into();
        }
        let sig = sig.max(1);
        let work = self.bits.max((sig as f64 * std::f64::consts::LOG2_10) as usize + 64) + 64;
        let abs = self.abs().with_bits(work);
        let mut e10 = self.decimal_exponent_estimate();
        let lower = BigInt::from(10u32).pow(sig as u32 - 1);
        let upper = &lower * 10;
        let mut n;
        loop {
            let scale = Real::pow10((sig as i64 - 1 - e10) as i32, work);
            n = (&abs * &scale).round_to_bigint();
            if n >= upper {
                e10 += 1;
            } else if n < lower {
                e10 -= 1;
            } else {
                break;
            }
        }
        let digits = n.to_string();
        let sign = if self.is_negative() { "-" } else { "" };
        let body = if (-7..sig as i64).contains(&e10) {
            if e10 >= 0 {
                let (int, frac) = digits.split_at(e10 as usize + 1);
                let frac = frac.trim_end_matches('0');
                if frac.is_empty() {
                    int.to_string()
                } else {
                    format!("{int}.{frac}")
                }
            } else {
                let zeros = "0".repeat((-e10 - 1) as usize);
                format!("0.{zeros}{}", digits.trim_end_matches('0'))
            }
        } else {
            let (lead, rest) = digits.split_at(1);
            let rest = rest.trim_end_matches('0');
            if rest.is_empty() {
                format!("{lead}e{e10}")
            } else {
                format!("{lead}.{rest}e{e10}")
            }
        };
        format!("{sign}{body}")
    }

    /// Number of leading decimal places on which `self` and `other` agree,
    /// measured as `floor(-log10 |self - other|)`, capped at `cap`.
    pub fn agreeing_digits(&self, other: &Real, cap: u32) -> u32 {
        let d = (self - other).abs();
        if d.is_zero() {
            return cap;
        }
        let e = d.decimal_exponent_estimate();
        if e >= 0 {
            0
        } else {
            ((-e - 1) as u32).min(cap)
        }
    }

    pub fn to_i64_checked(&self) -> Option<i64> {
        self.round_to_bigint().to_i64()
    }
}
