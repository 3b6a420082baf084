use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::numerics::Real;

/// Complex number over [`Real`].
#[derive(Clone, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}i)", self.re, self.im)
    }
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Complex {
        Complex { re, im }
    }

    pub fn from_real(re: Real) -> Complex {
        let bits = re.bits();
        Complex {
            re,
            im: Real::zero(bits),
        }
    }

    pub fn zero(bits: usize) -> Complex {
        Complex::from_real(Real::zero(bits))
    }

    pub fn one(bits: usize) -> Complex {
        Complex::from_real(Real::one(bits))
    }

    pub fn i(bits: usize) -> Complex {
        Complex::new(Real::zero(bits), Real::one(bits))
    }

    pub fn bits(&self) -> usize {
        self.re.bits().max(self.im.bits())
    }

    pub fn with_bits(&self, bits: usize) -> Complex {
        Complex::new(self.re.with_bits(bits), self.im.with_bits(bits))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> Complex {
        Complex::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> Real {
        self.re.sqr() + self.im.sqr()
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    /// Principal argument in `(-pi, pi]`.
    pub fn arg(&self) -> Option<Real> {
        Real::atan2(&self.im, &self.re)
    }

    pub fn scale(&self, k: &Real) -> Complex {
        Complex::new(&self.re * k, &self.im * k)
    }

    pub fn recip(&self) -> Complex {
        let n = self.norm_sqr();
        Complex::new(&self.re / &n, -(&self.im / &n))
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Option<Complex> {
        Some(Complex::new(self.abs().ln(), self.arg()?))
    }

    pub fn exp(&self) -> Complex {
        let r = self.re.exp();
        Complex::new(&r * &self.im.cos(), &r * &self.im.sin())
    }

    pub fn cos(&self) -> Complex {
        Complex::new(
            &self.re.cos() * &self.im.cosh(),
            -(&self.re.sin() * &self.im.sinh()),
        )
    }

    pub fn sin(&self) -> Complex {
        Complex::new(
            &self.re.sin() * &self.im.cosh(),
            &self.re.cos() * &self.im.sinh(),
        )
    }

    /// `self^t` through the principal logarithm.
    pub fn powr(&self, t: &Real) -> Option<Complex> {
        Some(self.ln()?.scale(t).exp())
    }

    /// Distance `|self - other|`.
    pub fn dist(&self, other: &Complex) -> Real {
        (self - other).abs()
    }
}

macro_rules! cbinop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Complex> for &Complex {
            type Output = Complex;
            fn $method(self, rhs: &Complex) -> Complex {
                let f: fn(&Complex, &Complex) -> Complex = $body;
                f(self, rhs)
            }
        }
        impl $tr<Complex> for Complex {
            type Output = Complex;
            fn $method(self, rhs: Complex) -> Complex {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Complex> for Complex {
            type Output = Complex;
            fn $method(self, rhs: &Complex) -> Complex {
                (&self).$method(rhs)
            }
        }
        impl $tr<Complex> for &Complex {
            type Output = Complex;
            fn $method(self, rhs: Complex) -> Complex {
                self.$method(&rhs)
            }
        }
    };
}

cbinop!(Add, add, |a, b| Complex::new(&a.re + &b.re, &a.im + &b.im));
cbinop!(Sub, sub, |a, b| Complex::new(&a.re - &b.re, &a.im - &b.im));
cbinop!(Mul, mul, |a, b| Complex::new(
    &a.re * &b.re - &a.im * &b.im,
    &a.re * &b.im + &a.im * &b.re
));
cbinop!(Div, div, |a, b| {
    let n = b.norm_sqr();
    Complex::new(
        (&a.re * &b.re + &a.im * &b.im) / &n,
        (&a.im * &b.re - &a.re * &b.im) / &n,
    )
});

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-&self.re, -&self.im)
    }
}
