//! Truncated formal power series without constant term.

use crate::error::{Error, Result};
use crate::numerics::{Field, FieldTag};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 16;

/// `c_1 y + c_2 y^2 + ... + c_N y^N`, truncated at order `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<F> {
    coeffs: Vec<F>,
}

impl<F: Field> PowerSeries<F> {
    /// Builds a series from `c_1..c_N`.
    pub fn new(coeffs: Vec<F>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("power series needs order >= 1".into()));
        }
        Ok(PowerSeries { coeffs })
    }

    /// `y` truncated at `order`.
    pub fn identity(order: usize, like: &F) -> Self {
        let mut coeffs = vec![like.zero_like(); order.max(1)];
        coeffs[0] = like.one_like();
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn field(&self) -> FieldTag {
        F::TAG
    }

    /// Coefficient of `y^j`, `1 <= j <= order`.
    pub fn coeff(&self, j: usize) -> &F {
        &self.coeffs[j - 1]
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        PowerSeries {
            coeffs: self.coeffs[..order.min(self.order()).max(1)].to_vec(),
        }
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> PowerSeries<G> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// `-a(-y)`: flips the sign of every even-degree coefficient.
    pub fn odd_reflection(&self) -> Self {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    /// Truncated product; both factors lack a constant term so the result
    /// starts at `y^2`. Stored with the same indexing (index 0 is `y^1`).
    fn mul_trunc(a: &[F], b: &[F], order: usize) -> Vec<F> {
        let zero = a[0].zero_like();
        let mut out = vec![zero; order];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                let deg = i + j + 2;
                if deg > order {
                    break;
                }
                out[deg - 1] = out[deg - 1].clone() + ai.clone() * bj.clone();
            }
        }
        out
    }

    /// Powers `b, b^2, ..., b^order`, each truncated at `order`.
    pub fn powers(&self, order: usize) -> Vec<Vec<F>> {
        let base: Vec<F> = {
            let mut v = self.coeffs.clone();
            v.resize(order, self.coeffs[0].zero_like());
            v.truncate(order);
            v
        };
        let mut out = Vec::with_capacity(order);
        out.push(base.clone());
        for _ in 1..order {
            let next = Self::mul_trunc(out.last().unwrap(), &base, order);
            out.push(next);
        }
        out
    }

    pub fn compose(&self, inner: &PowerSeries<F>) -> PowerSeries<F> {
        let order = self.order().min(inner.order());
        let powers = inner.powers(order);
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; order];
        for (k, ck) in self.coeffs.iter().take(order).enumerate() {
            if ck.is_zero() {
                continue;
            }
            for (n, p) in powers[k].iter().enumerate() {
                out[n] = out[n].clone() + ck.clone() * p.clone();
            }
        }
        PowerSeries { coeffs: out }
    }

    /// Compositional inverse.
    pub fn revert(&self) -> Result<PowerSeries<F>> {
        let a1 = self.coeffs[0].clone();
        if a1.is_zero() {
            return Err(Error::NotInvertible("series has zero linear coefficient".into()));
        }
        let order = self.order();
        let mut b = vec![a1.zero_like(); order];
        b[0] = a1.one_like() / a1.clone();
        for n in 2..=order {
            let trial = PowerSeries {
                coeffs: b[..n].to_vec(),
            };
            let c = self.truncate(n).compose(&trial);
            b[n - 1] = -(c.coeffs[n - 1].clone() / a1.clone());
        }
        Ok(PowerSeries { coeffs: b })
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, x: &F) -> F {
        let mut acc = self.coeffs.last().unwrap().clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc * x.clone() + c.clone();
        }
        acc * x.clone()
    }

    /// Evaluates the series in another field, converting each coefficient.
    pub fn eval_in<G: Field>(&self, x: &G, conv: impl Fn(&F) -> G) -> G {
        let mut acc = conv(self.coeffs.last().unwrap());
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc * x.clone() + conv(c);
        }
        acc * x.clone()
    }
}

/// `a(b(y)) mod y^(N+1)` with `N = min(order a, order b)`.
pub fn series_compose<F: Field>(a: &PowerSeries<F>, b: &PowerSeries<F>) -> Result<PowerSeries<F>> {
    check_same_field(a, b)?;
    Ok(a.compose(b))
}

pub fn series_revert<F: Field>(a: &PowerSeries<F>) -> Result<PowerSeries<F>> {
    a.revert()
}

pub fn series_eval<F: Field>(a: &PowerSeries<F>, x: &F) -> F {
    a.eval(x)
}

fn check_same_field<F: Field>(a: &PowerSeries<F>, b: &PowerSeries<F>) -> Result<()> {
    let mut seen: Option<&F> = None;
    for c in a.coeffs.iter().chain(b.coeffs.iter()) {
        if let Some(prev) = seen {
            if !F::compatible(prev, c) {
                return Err(Error::FieldMismatch(format!("{prev:?} vs {c:?}")));
            }
        }
        if F::carries_field(c) {
            seen = Some(c);
        }
    }
    Ok(())
}
