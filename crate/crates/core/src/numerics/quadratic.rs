//! Exact arithmetic in real quadratic fields `Q(sqrt d)`.
//!
//! Elements are stored as `a + b*sqrt(d)` with rational `a`, `b`. A pure
//! rational carries `d = 0` and combines with an element of any field; two
//! irrational elements of different fields cannot be combined.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numerics::Real;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quad {
    a: BigRational,
    b: BigRational,
    d: u32,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Quad {
    pub fn new(a: BigRational, b: BigRational, d: u32) -> Quad {
        if b.is_zero() {
            return Quad::rational(a);
        }
        assert!(d >= 2, "radicand must be at least 2");
        Quad { a, b, d }
    }

    pub fn rational(a: BigRational) -> Quad {
        Quad {
            a,
            b: BigRational::zero(),
            d: 0,
        }
    }

    pub fn int(n: i64) -> Quad {
        Quad::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Quad {
        Quad::rational(rat(n, d))
    }

    pub fn sqrt(d: u32) -> Quad {
        Quad::new(BigRational::zero(), BigRational::one(), d)
    }

    /// Golden mean `(1 + sqrt 5)/2`.
    pub fn phi() -> Quad {
        Quad::new(rat(1, 2), rat(1, 2), 5)
    }

    /// Silver mean `1 + sqrt 2`.
    pub fn psi() -> Quad {
        Quad::new(rat(1, 1), rat(1, 1), 2)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.b
    }

    /// Radicand, or 0 for a rational.
    pub fn radicand(&self) -> u32 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn common_field(&self, other: &Quad) -> Result<u32> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (x, y) if x == y => Ok(x),
            (x, y) => Err(Error::FieldMismatch(format!("Q(sqrt {x}) vs Q(sqrt {y})"))),
        }
    }

    pub fn checked_add(&self, other: &Quad) -> Result<Quad> {
        let d = self.common_field(other)?;
        Ok(Quad::new(&self.a + &other.a, &self.b + &other.b, d.max(2)))
    }

    pub fn checked_mul(&self, other: &Quad) -> Result<Quad> {
        let d = self.common_field(other)?;
        let dd = BigRational::from_integer(BigInt::from(d));
        Ok(Quad::new(
            &self.a * &other.a + &self.b * &other.b * dd,
            &self.a * &other.b + &self.b * &other.a,
            d.max(2),
        ))
    }

    /// Galois conjugate `a - b*sqrt(d)`.
    pub fn conj(&self) -> Quad {
        Quad::new(self.a.clone(), -&self.b, self.d.max(2))
    }

    /// Field norm `a^2 - d*b^2`.
    pub fn norm(&self) -> BigRational {
        let dd = BigRational::from_integer(BigInt::from(self.d));
        &self.a * &self.a - &self.b * &self.b * dd
    }

    pub fn checked_recip(&self) -> Result<Quad> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(Quad::new(&c.a / &n, &c.b / &n, self.d.max(2)))
    }

    pub fn checked_div(&self, other: &Quad) -> Result<Quad> {
        self.checked_mul(&other.checked_recip()?)
    }

    /// Exact sign of `a + b*sqrt(d)`.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: compare a^2 with d*b^2
        let dd = BigRational::from_integer(BigInt::from(self.d));
        match (&self.a * &self.a).cmp(&(&self.b * &self.b * dd)) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Quad {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, n: u32) -> Quad {
        let mut acc = Quad::int(1);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_real(&self, bits: usize) -> Real {
        let a = Real::from_rational(&self.a, bits + 32);
        if self.b.is_zero() {
            return a.with_bits(bits);
        }
        let r = Real::from_i64(self.d as i64, bits + 32).sqrt();
        (a + Real::from_rational(&self.b, bits + 32) * r).with_bits(bits)
    }

    /// Human-readable exact form. Elements of `Q(sqrt 5)` are written in the
    /// basis `{1, phi}`, elements of `Q(sqrt 2)` in `{1, psi}`, e.g.
    /// `17/11+2/11*phi`.
    pub fn exact_form(&self) -> String {
        let (c0, c1, sym) = match self.d {
            0 => return fmt_rat(&self.a),
            // a + b sqrt5 = (a - b) + 2b phi
            5 => (&self.a - &self.b, &self.b * rat(2, 1), "phi".to_string()),
            // a + b sqrt2 = (a - b) + b psi
            2 => (&self.a - &self.b, self.b.clone(), "psi".to_string()),
            d => (self.a.clone(), self.b.clone(), format!("sqrt{d}")),
        };
        let radical = if c1.abs().is_one() {
            sym
        } else {
            format!("{}*{sym}", fmt_rat(&c1.abs()))
        };
        match (c0.is_zero(), c1.is_negative()) {
            (true, false) => radical,
            (true, true) => format!("-{radical}"),
            (false, false) => format!("{}+{radical}", fmt_rat(&c0)),
            (false, true) => format!("{}-{radical}", fmt_rat(&c0)),
        }
    }
}

fn sign(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_negative() {
        -1
    } else {
        1
    }
}

pub(crate) fn fmt_rat(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl PartialOrd for Quad {
    /// `None` only for elements of different fields.
    fn partial_cmp(&self, other: &Quad) -> Option<Ordering> {
        let diff = self.checked_add(&-other.clone()).ok()?;
        Some(diff.signum().cmp(&0))
    }
}

impl fmt::Debug for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 0 {
            write!(f, "{}", fmt_rat(&self.a))
        } else {
            write!(f, "{} + {}*sqrt({})", fmt_rat(&self.a), fmt_rat(&self.b), self.d)
        }
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.exact_form())
    }
}

// Operator forms panic on mixed fields and division by zero; the checked
// methods report them as errors.
macro_rules! qbinop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Quad> for &Quad {
            type Output = Quad;
            fn $method(self, rhs: &Quad) -> Quad {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Quad> for Quad {
            type Output = Quad;
            fn $method(self, rhs: Quad) -> Quad {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Quad> for Quad {
            type Output = Quad;
            fn $method(self, rhs: &Quad) -> Quad {
                (&self).$method(rhs)
            }
        }
        impl $tr<Quad> for &Quad {
            type Output = Quad;
            fn $method(self, rhs: Quad) -> Quad {
                self.$method(&rhs)
            }
        }
    };
}

impl Quad {
    fn checked_sub(&self, other: &Quad) -> Result<Quad> {
        self.checked_add(&-other.clone())
    }
}

qbinop!(Add, add, checked_add);
qbinop!(Sub, sub, checked_sub);
qbinop!(Mul, mul, checked_mul);
qbinop!(Div, div, checked_div);

impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Neg for &Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        -self.clone()
    }
}
