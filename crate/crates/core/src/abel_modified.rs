//! The two-branch real Abel function.
//!
//! Below the fixed point `F(x) = (κ + ln G(p-x) - c_g)/ln s`, above it
//! `F(x) = (ln H(x-p) - c_h)/ln s`. With `κ = c_g - c_h` it satisfies
//! `F(f(x)) = F(x) + 1/2`, and real fractional iterates are
//! `x_{k+δ} = F^-1(F(x_k) + δ/2)` taken on the side of `x_k`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linearize::{ChartMode, KoenigChart};
use crate::maps::{Branch, MapSpec, Side};
use crate::numerics::{Precision, Quad, Real, Value};

/// Forward steps allowed when reducing an argument into the core interval.
const MAX_REDUCTION: usize = 10_000;

#[derive(Clone, Debug)]
pub struct ModifiedAbelChart {
    koenig: KoenigChart,
    kappa: Real,
    c_g: Real,
    c_h: Real,
    y_ref_g: Real,
    y_ref_h: Real,
    log_s: Real,
}

/// Full-step increment of `F`.
pub fn delta() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

pub fn build_chart(spec: &MapSpec) -> Result<ModifiedAbelChart> {
    ModifiedAbelChart::new(spec)
}

impl ModifiedAbelChart {
    pub fn new(spec: &MapSpec) -> Result<ModifiedAbelChart> {
        let m = spec.multiplier();
        if !(m.is_negative() && *m > Real::from_i64(-1, m.bits())) {
            return Err(Error::domain("multiplier", "need -1 < m < 0"));
        }
        let koenig = KoenigChart::new(spec)?;
        let bits = spec.bits();
        let (y_ref_g, y_ref_h) = if koenig.mode() == ChartMode::Closed {
            (Real::one(bits), Real::one(bits))
        } else {
            let half = |b: Branch| {
                spec.branch_domain(b)
                    .upper
                    .expect("bounded branch domain")
                    .div_int(2)
            };
            (half(Branch::Even), half(Branch::Odd))
        };
        let c_g = koenig.eval(Branch::Even, &y_ref_g)?.ln();
        let c_h = koenig.eval(Branch::Odd, &y_ref_h)?.ln();
        Ok(ModifiedAbelChart {
            kappa: &c_g - &c_h,
            log_s: spec.step_multiplier().ln(),
            koenig,
            c_g,
            c_h,
            y_ref_g,
            y_ref_h,
        })
    }

    pub fn spec(&self) -> &MapSpec {
        self.koenig.spec()
    }

    pub fn koenig(&self) -> &KoenigChart {
        &self.koenig
    }

    pub fn precision(&self) -> Precision {
        self.spec().precision()
    }

    pub fn kappa(&self) -> &Real {
        &self.kappa
    }

    /// `(c_g, c_h)`.
    pub fn normalization(&self) -> (&Real, &Real) {
        (&self.c_g, &self.c_h)
    }

    /// Reference points `(y_g, y_h)` with `c_g = ln G(y_g)`, `c_h = ln H(y_h)`.
    pub fn reference_points(&self) -> (&Real, &Real) {
        (&self.y_ref_g, &self.y_ref_h)
    }

    pub fn log_s(&self) -> &Real {
        &self.log_s
    }

    fn near_fixed_point(&self, x: &Real) -> bool {
        (x - self.spec().fixed_point()).abs() < self.precision().snap_radius()
    }

    /// `F(x)`. Arguments outside the core interval are first moved into it
    /// by `j` forward steps, and `j/2` is subtracted.
    pub fn eval(&self, x: &Real) -> Result<Real> {
        let spec = self.spec();
        let bits = spec.bits();
        let mut x = x.with_bits(bits);
        if !spec.in_basin(&x) {
            return Err(Error::domain(
                format!("argument for the {} map", spec.kind()),
                x.to_decimal(20),
            ));
        }
        let mut steps = 0usize;
        while !spec.in_core(&x) {
            if steps == MAX_REDUCTION {
                return Err(Error::NonConvergence {
                    what: "reduction into the core interval".into(),
                    iterations: MAX_REDUCTION,
                });
            }
            x = spec.eval(&x)?;
            steps += 1;
        }
        if self.near_fixed_point(&x) {
            return Err(Error::Singular(
                "F has a logarithmic singularity at the fixed point".into(),
            ));
        }
        let p = spec.fixed_point();
        let v = match spec.side(&x).unwrap() {
            Side::Below => {
                let g = self.koenig.eval(Branch::Even, &(p - &x))?;
                (&self.kappa + &g.ln() - &self.c_g) / &self.log_s
            }
            Side::Above => {
                let h = self.koenig.eval(Branch::Odd, &(&x - p))?;
                (h.ln() - &self.c_h) / &self.log_s
            }
        };
        Ok(v - Real::ratio(steps as i64, 2, bits))
    }

    /// The point on `side` of the fixed point where `F` takes the value `w`.
    pub fn inverse(&self, w: &Real, side: Side) -> Result<Real> {
        let spec = self.spec();
        let p = spec.fixed_point();
        let w = w.with_bits(spec.bits());
        let (branch, log_k) = match side {
            Side::Below => (Branch::Even, &w * &self.log_s - &self.kappa + &self.c_g),
            Side::Above => (Branch::Odd, &w * &self.log_s + &self.c_h),
        };
        let y = self.koenig.inverse(branch, &log_k.exp()).map_err(|e| match e {
            Error::OutOfDomain { .. } => Error::domain(
                format!("F^-1 argument on the {} side", side.name()),
                w.to_decimal(20),
            ),
            e => e,
        })?;
        Ok(match side {
            Side::Below => p - &y,
            Side::Above => p + &y,
        })
    }

    /// Exact `F^-1(F(x) + 1/4)` on the side of `x`, for the Möbius maps.
    /// There `s^(1/4) = 1/p`, so the step stays in the field of `p`.
    fn exact_half_step(&self, x: &Quad) -> Result<Option<Quad>> {
        let spec = self.spec();
        let Some(p) = spec.fixed_point_exact() else {
            return Ok(None);
        };
        if self.koenig.mode() != ChartMode::Closed {
            return Ok(None);
        }
        let diff = x.checked_add(&-p.clone())?;
        let (branch, y) = match diff.signum() {
            0 => return Ok(Some(p.clone())),
            s if s < 0 => (Branch::Even, -diff),
            _ => (Branch::Odd, diff),
        };
        let g = self.koenig.eval_exact(branch, &y)?.unwrap();
        let g = g.checked_div(p)?;
        let y2 = self.koenig.inverse_exact(branch, &g)?.unwrap();
        Ok(Some(match branch {
            Branch::Even => p - &y2,
            Branch::Odd => p + &y2,
        }))
    }
}

#[derive(Clone, Debug)]
pub struct FracIterate {
    pub t: BigRational,
    pub value: Real,
    pub exact: Option<Quad>,
    pub side: Option<Side>,
    /// `|F(value) - F(x_k) - δ/2|`, zero for integer `t`.
    pub residual: Real,
}

impl ModifiedAbelChart {
    /// `x_t` for rational `t >= 0`: `k = floor(t)` exact map steps, then
    /// `F^-1(F(x_k) + δ/2)` on the side of `x_k`.
    pub fn frac_iterate(&self, x0: &Value, t: &BigRational) -> Result<FracIterate> {
        if t.is_negative() {
            return Err(Error::InvalidInput("t must be non-negative".into()));
        }
        let spec = self.spec();
        let bits = spec.bits();
        if !spec.in_basin(&x0.to_real(bits)) {
            return Err(Error::domain(
                format!("seed for the {} map", spec.kind()),
                x0.to_real(bits).to_decimal(20),
            ));
        }
        let k = t.floor().to_integer();
        let frac = t - BigRational::from_integer(k.clone());
        let k: usize = k
            .try_into()
            .map_err(|_| Error::InvalidInput("t is too large".into()))?;
        let mut x = x0.clone();
        for _ in 0..k {
            x = spec.step(&x)?;
        }
        let xk = x.to_real(bits);
        let zero = Real::zero(bits);
        if frac.is_zero() {
            return Ok(FracIterate {
                t: t.clone(),
                side: spec.side(&xk),
                exact: x.exact().cloned(),
                value: xk,
                residual: zero,
            });
        }
        if self.near_fixed_point(&xk) {
            return Ok(FracIterate {
                t: t.clone(),
                side: None,
                exact: spec.fixed_point_exact().cloned(),
                value: spec.fixed_point().clone(),
                residual: zero,
            });
        }
        let side = spec.side(&xk).unwrap();
        let fx = self.eval(&xk)?;
        let half = Real::from_rational(&(&frac / BigInt::from(2)), bits);
        let w = &fx + &half;
        let exact = match (&x, frac == delta()) {
            (Value::Exact(q), true) if spec.in_core(&xk) => self.exact_half_step(q)?,
            _ => None,
        };
        let value = match &exact {
            Some(q) => q.to_real(bits),
            None => self.inverse(&w, side)?,
        };
        let residual = (self.eval(&value)? - &w).abs();
        Ok(FracIterate {
            t: t.clone(),
            value,
            exact,
            side: Some(side),
            residual,
        })
    }

    /// `x_0, x_{1/n}, ..., x_1` by `n` successive `1/n` steps, each step
    /// `F^-1(F(x_{j/n}) + 1/(2n))`. The last point lands on the side of
    /// `x_1`, the floor iterate of index 1.
    pub fn step_chain(&self, x0: &Real, n: usize) -> Result<Vec<Real>> {
        if n == 0 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        let spec = self.spec();
        let bits = spec.bits();
        let x0 = x0.with_bits(bits);
        let x1 = spec.eval(&x0)?;
        let (Some(s0), Some(s1)) = (spec.side(&x0), spec.side(&x1)) else {
            return Err(Error::Singular("seed at the fixed point".into()));
        };
        let inc = Real::ratio(1, 2 * n as i64, bits);
        let mut out = vec![x0.clone()];
        let mut x = x0;
        for j in 1..=n {
            let w = self.eval(&x)? + &inc;
            let side = if j == n { s1 } else { s0 };
            x = self.inverse(&w, side)?;
            out.push(x.clone());
        }
        Ok(out)
    }

    /// `F(f(x)) - F(x) - 1/2`.
    pub fn half_step_residual(&self, x: &Real) -> Result<Real> {
        let fx = self.spec().eval(x)?;
        Ok(self.eval(&fx)? - self.eval(x)? - Real::ratio(1, 2, x.bits()))
    }
}

pub fn modified_f(chart: &ModifiedAbelChart, x: &Real) -> Result<Real> {
    chart.eval(x)
}

pub fn modified_f_inverse(chart: &ModifiedAbelChart, w: &Real, side: Side) -> Result<Real> {
    chart.inverse(w, side)
}

pub fn frac_iterate_real(
    chart: &ModifiedAbelChart,
    x0: &Value,
    t: &BigRational,
) -> Result<FracIterate> {
    chart.frac_iterate(x0, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::MapKind;
    use crate::numerics::parse_exact;

    fn prec() -> Precision {
        Precision::default()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn chart(kind: MapKind) -> ModifiedAbelChart {
        build_chart(&MapSpec::new(kind, prec()).unwrap()).unwrap()
    }

    fn logistic() -> MapKind {
        MapKind::Logistic(q(5, 2))
    }

    fn close(a: &Real, b: &Real, k: i32) -> bool {
        (a - b).abs() < Real::pow10(-k, a.bits())
    }

    #[test]
    fn kappa_closed_forms() {
        let g = chart(MapKind::Golden);
        let want = (Quad::int(1) + Quad::phi()).to_real(prec().bits()).ln();
        assert!(close(g.kappa(), &want, 45));
        let s = chart(MapKind::Silver);
        let want = parse_exact("5/7+4/7*psi").unwrap().to_real(prec().bits()).ln();
        assert!(close(s.kappa(), &want, 45));
    }

    #[test]
    fn golden_half_iterates_are_exact() {
        let g = chart(MapKind::Golden);
        let one = Value::Exact(Quad::int(1));
        for (t, want) in [
            ((1, 2), "2-1/2*phi"),
            ((3, 2), "17/11+2/11*phi"),
            ((5, 2), "48/29-2/29*phi"),
            ((7, 2), "61/38+1/38*phi"),
            ((9, 2), "323/199-2/199*phi"),
        ] {
            let r = g.frac_iterate(&one, &q(t.0, t.1)).unwrap();
            assert_eq!(r.exact.unwrap(), parse_exact(want).unwrap());
            assert!(r.residual < prec().tolerance());
        }
        let three = Value::Exact(Quad::int(3));
        let r = g.frac_iterate(&three, &q(3, 2)).unwrap();
        assert_eq!(r.exact.unwrap(), parse_exact("19/11-2/11*phi").unwrap());
    }

    #[test]
    fn golden_radical_iterates() {
        let g = chart(MapKind::Golden);
        let bits = prec().bits();
        let phi = Quad::phi().to_real(bits);
        let r = |x: i64| Real::from_i64(x, bits);
        // x_{1/3} = [11 - (20+35φ)^(1/3) + (-55+35φ)^(1/3)]/7
        let want = (r(11) - (r(20) + phi.mul_int(35)).cbrt() + (r(-55) + phi.mul_int(35)).cbrt())
            .div_int(7);
        let got = g.frac_iterate(&Value::Exact(Quad::int(1)), &q(1, 3)).unwrap();
        assert!(close(&got.value, &want, 40));
        // x_{1/4} = [17 + 2φ - sqrt(-15+50φ)]/11
        let want = (r(17) + phi.mul_int(2) - (r(-15) + phi.mul_int(50)).sqrt()).div_int(11);
        let got = g.frac_iterate(&Value::Exact(Quad::int(1)), &q(1, 4)).unwrap();
        assert!(close(&got.value, &want, 40));
    }

    #[test]
    fn silver_half_iterates() {
        let s = chart(MapKind::Silver);
        let two = Value::Exact(Quad::int(2));
        for (t, want) in [
            ((1, 2), "18/7-1/7*psi"),
            ((3, 2), "98/41+1/41*psi"),
            ((9, 2), "19602/8119-1/8119*psi"),
        ] {
            let r = s.frac_iterate(&two, &q(t.0, t.1)).unwrap();
            assert_eq!(r.exact.unwrap(), parse_exact(want).unwrap());
        }
        let r = s.frac_iterate(&Value::Exact(Quad::int(3)), &q(1, 2)).unwrap();
        assert_eq!(r.exact.unwrap(), parse_exact("16/7+1/7*psi").unwrap());
    }

    #[test]
    fn two_valued_inverse() {
        let g = chart(MapKind::Golden);
        let bits = prec().bits();
        let f1 = g.eval(&Real::one(bits)).unwrap();
        assert!(close(&g.eval(&Real::from_i64(3, bits)).unwrap(), &f1, 45));
        assert!(close(&g.inverse(&f1, Side::Below).unwrap(), &Real::one(bits), 45));
        assert!(close(&g.inverse(&f1, Side::Above).unwrap(), &Real::from_i64(3, bits), 45));
        let f2 = g.eval(&Real::from_i64(2, bits)).unwrap();
        assert!(close(&g.eval(&Real::ratio(4, 3, bits)).unwrap(), &f2, 45));
        let s = chart(MapKind::Silver);
        let f2 = s.eval(&Real::from_i64(2, bits)).unwrap();
        assert!(close(&s.inverse(&f2, Side::Above).unwrap(), &Real::from_i64(3, bits), 45));
    }

    #[test]
    fn half_step_residuals() {
        for kind in [MapKind::Golden, MapKind::Silver, MapKind::Cosine, logistic()] {
            let c = chart(kind);
            let bits = prec().bits();
            let p = c.spec().fixed_point().clone();
            for off in [(-1, 20), (1, 50), (-1, 7), (1, 100)] {
                let x = &p + &Real::ratio(off.0, off.1, bits);
                let r = c.half_step_residual(&x).unwrap();
                assert!(r.abs() < prec().tolerance(), "{} {:?}", c.spec().kind(), off);
            }
        }
    }

    #[test]
    fn step_chains_reach_f() {
        for kind in [MapKind::Golden, MapKind::Cosine, logistic()] {
            let c = chart(kind);
            let bits = prec().bits();
            let x0 = c.spec().fixed_point() - &Real::ratio(1, 20, bits);
            let fx = c.spec().eval(&x0).unwrap();
            for n in 2..=4 {
                let chain = c.step_chain(&x0, n).unwrap();
                assert!(close(chain.last().unwrap(), &fx, 30), "{} n={n}", c.spec().kind());
            }
        }
    }

    #[test]
    fn cosine_half_iterate_from_zero() {
        let c = chart(MapKind::Cosine);
        let r = c.frac_iterate(&Value::Exact(Quad::int(0)), &q(1, 2)).unwrap();
        assert!(r.value.is_positive() && r.value < *c.spec().fixed_point());
        assert!(r.residual < prec().tolerance());
        assert_eq!(r.side, Some(Side::Below));
    }

    #[test]
    fn integer_and_fixed_point_cases() {
        let g = chart(MapKind::Golden);
        let r = g.frac_iterate(&Value::Exact(Quad::int(1)), &q(1, 1)).unwrap();
        assert_eq!(r.exact.unwrap(), Quad::int(2));
        let r = g.frac_iterate(&Value::Exact(Quad::phi()), &q(1, 3)).unwrap();
        assert_eq!(r.exact.unwrap(), Quad::phi());
        assert!(g.eval(g.spec().fixed_point()).is_err());
        assert!(g.frac_iterate(&Value::Exact(Quad::int(1)), &q(-1, 2)).is_err());
    }

    #[test]
    fn segments_are_monotone_and_disjoint() {
        let g = chart(MapKind::Golden);
        let one = Value::Exact(Quad::int(1));
        let vals: Vec<Real> = [1, 2, 3, 4, 5, 6, 7]
            .iter()
            .map(|&n| g.frac_iterate(&one, &q(n, 8)).unwrap().value)
            .collect();
        assert!(vals.windows(2).all(|w| w[0] < w[1]));
        // x_{1-ε} stays well away from x_1 = 2
        let late = g.frac_iterate(&one, &q(999, 1000)).unwrap().value;
        assert!(late < Real::from_i64(2, late.bits()).min(g.spec().fixed_point().clone()));
    }
}
