//! Koenig linearization. Schröder series by coefficient matching, the
//! iterative limit `g^k(y)/s^k`, inverses, and complex fractional iterates
//! `K^-1(m^t K(x))` of the full map.

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::maps::{Branch, LocalSeries, MapKind, MapSpec};
use crate::numerics::roots::newton_bisect;
use crate::numerics::{Complex, Field, PowerSeries, Precision, Quad, Real, DEFAULT_ORDER};

/// Iteration cap for the Koenig limit.
pub const KOENIG_MAX_ITER: usize = 1_000_000;
/// The limit is never accepted before this many steps.
pub const KOENIG_MIN_ITER: usize = 8;

/// Normalized solution `G(y) = y + γ_2 y^2 + ...` of `G(g(y)) = s G(y)`.
///
/// `γ_n (s - s^n) = Σ_{k<n} γ_k [g^k]_n`, where `[g^k]_n` is the coefficient
/// of `y^n` in the k-th power of `g`.
pub fn schroeder_series<F: Field>(
    conj: &PowerSeries<F>,
    s: &F,
    order: usize,
) -> Result<PowerSeries<F>> {
    let mag = s.magnitude();
    if s.is_zero() || (mag - 1.0).abs() < 1e-12 {
        return Err(Error::SmallDivisor(format!(
            "multiplier of modulus {mag} leaves s - s^n unbounded below"
        )));
    }
    if order == 0 || conj.order() < order {
        return Err(Error::InvalidInput(format!(
            "need {order} conjugate coefficients, have {}",
            conj.order()
        )));
    }
    if (conj.coeff(1).clone() - s.clone()).magnitude() > 1e-12 * mag {
        return Err(Error::InvalidInput(
            "linear coefficient of the conjugate differs from the multiplier".into(),
        ));
    }
    let powers = conj.truncate(order).powers(order);
    let mut gamma = vec![s.one_like()];
    let mut s_pow = s.clone();
    for n in 2..=order {
        s_pow = s_pow * s.clone();
        let mut acc = s.zero_like();
        for (k, g) in gamma.iter().enumerate() {
            acc = acc + g.clone() * powers[k][n - 1].clone();
        }
        let denom = s.clone() - s_pow.clone();
        if denom.is_zero() {
            return Err(Error::SmallDivisor(format!("s - s^{n} vanishes")));
        }
        gamma.push(acc / denom);
    }
    PowerSeries::new(gamma)
}

/// Scalars the Koenig limit can run over.
pub trait Modulus: Field {
    fn modulus(&self) -> Real;
    fn finite(&self) -> bool;
}

impl Modulus for Real {
    fn modulus(&self) -> Real {
        self.abs()
    }
    fn finite(&self) -> bool {
        self.is_finite()
    }
}

impl Modulus for Complex {
    fn modulus(&self) -> Real {
        self.abs()
    }
    fn finite(&self) -> bool {
        self.is_finite()
    }
}

/// `lim g^k(y)/s^k` together with its derivative `lim Π g'(y_j)/s^k`.
///
/// `step` returns `(g(y), g'(y))`. Stops once successive estimates agree to
/// `10^-digits` relative, after at least [`KOENIG_MIN_ITER`] steps. The
/// caller chooses the working precision through `y` and `s`.
pub fn koenig_limit<T: Modulus>(
    mut step: impl FnMut(&T) -> Result<(T, T)>,
    s: &T,
    y: &T,
    digits: u32,
) -> Result<(T, T)> {
    let tol = Real::pow10(-(digits as i32), y.modulus().bits());
    let mut yk = y.clone();
    let mut deriv = y.one_like();
    let mut s_pow = y.one_like();
    let mut prev = y.clone();
    for k in 1..=KOENIG_MAX_ITER {
        let (next, dg) = step(&yk)?;
        deriv = deriv * dg;
        yk = next;
        s_pow = s_pow * s.clone();
        let est = yk.clone() / s_pow.clone();
        if !est.finite() {
            break;
        }
        let diff = (est.clone() - prev).modulus();
        if k >= KOENIG_MIN_ITER && diff <= &tol * &est.modulus() {
            return Ok((est, deriv / s_pow));
        }
        prev = est;
    }
    Err(Error::NonConvergence {
        what: "Koenig limit".into(),
        iterations: KOENIG_MAX_ITER,
    })
}

/// Koenig function of a double-step conjugate by the iterative limit,
/// evaluated at extended precision and rounded to working precision.
pub fn koenig_iterative(spec: &MapSpec, branch: Branch, y: &Real) -> Result<Real> {
    koenig_iterative_with_deriv(spec, branch, y).map(|(v, _)| v)
}

pub fn koenig_iterative_with_deriv(
    spec: &MapSpec,
    branch: Branch,
    y: &Real,
) -> Result<(Real, Real)> {
    if !spec.branch_domain(branch).contains(y) {
        return Err(Error::domain(
            format!("{branch:?} Koenig argument"),
            y.to_decimal(20),
        ));
    }
    let prec = spec.precision();
    let ext = prec.extended_bits();
    let s = spec.step_multiplier_at(ext);
    let (v, d) = koenig_limit(
        |y: &Real| {
            Ok((
                spec.conjugate_unchecked(branch, y)?,
                spec.conjugate_deriv(branch, y)?,
            ))
        },
        &s,
        &y.with_bits(ext),
        prec.digits,
    )?;
    Ok((v.with_bits(prec.bits()), d.with_bits(prec.bits())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChartMode {
    /// Truncated Schröder series.
    Series,
    /// Koenig limit.
    Iterative,
    /// Möbius closed forms (golden and silver maps only).
    Closed,
}

impl ChartMode {
    pub fn name(self) -> &'static str {
        match self {
            ChartMode::Series => "series",
            ChartMode::Iterative => "iterative",
            ChartMode::Closed => "closed",
        }
    }
}

/// Koenig functions `G` (even branch) and `H` (odd branch) of a map, and
/// the Schröder function `K` of the full map.
#[derive(Clone, Debug)]
pub struct KoenigChart {
    spec: MapSpec,
    mode: ChartMode,
    even: LocalSeries,
    odd: LocalSeries,
    /// Schröder series of the full map, multiplier `m`.
    full: LocalSeries,
    /// `c = p - p'` where `p'` is the repelling fixed point of a Möbius map.
    closed_c: Option<Quad>,
}

fn schroeder_local(series: LocalSeries, s: Option<&Quad>, s_real: &Real, order: usize) -> Result<LocalSeries> {
    Ok(match series {
        LocalSeries::Exact(c) => LocalSeries::Exact(schroeder_series(&c, s.unwrap(), order)?),
        LocalSeries::Real(c) => LocalSeries::Real(schroeder_series(&c, s_real, order)?),
    })
}

impl KoenigChart {
    /// Chart in the default mode: closed forms for the golden and silver
    /// maps, the iterative limit otherwise.
    pub fn new(spec: &MapSpec) -> Result<KoenigChart> {
        KoenigChart::with_order(spec, DEFAULT_ORDER)
    }

    pub fn with_order(spec: &MapSpec, order: usize) -> Result<KoenigChart> {
        let s_exact = spec.step_multiplier_exact();
        let m_exact = spec.multiplier_exact();
        let even = schroeder_local(
            spec.conjugate_series(Branch::Even, order),
            s_exact,
            spec.step_multiplier(),
            order,
        )?;
        let odd = schroeder_local(
            spec.conjugate_series(Branch::Odd, order),
            s_exact,
            spec.step_multiplier(),
            order,
        )?;
        let full = schroeder_local(spec.local_series(order), m_exact, spec.multiplier(), order)?;
        let closed_c = match spec.kind() {
            MapKind::Golden => Some(Quad::sqrt(5)),
            MapKind::Silver => Some(&Quad::int(2) * &Quad::sqrt(2)),
            _ => None,
        };
        let mode = if closed_c.is_some() {
            ChartMode::Closed
        } else {
            ChartMode::Iterative
        };
        Ok(KoenigChart {
            spec: spec.clone(),
            mode,
            even,
            odd,
            full,
            closed_c,
        })
    }

    pub fn with_mode(mut self, mode: ChartMode) -> Result<KoenigChart> {
        if mode == ChartMode::Closed && self.closed_c.is_none() {
            return Err(Error::InvalidInput(format!(
                "no closed form for the {} map",
                self.spec.kind()
            )));
        }
        self.mode = mode;
        Ok(self)
    }

    pub fn spec(&self) -> &MapSpec {
        &self.spec
    }

    pub fn mode(&self) -> ChartMode {
        self.mode
    }

    pub fn order(&self) -> usize {
        match &self.even {
            LocalSeries::Exact(s) => s.order(),
            LocalSeries::Real(s) => s.order(),
        }
    }

    pub fn precision(&self) -> Precision {
        self.spec.precision()
    }

    /// Schröder series of `G` (even) or `H` (odd).
    pub fn series(&self, branch: Branch) -> &LocalSeries {
        match branch {
            Branch::Even => &self.even,
            Branch::Odd => &self.odd,
        }
    }

    pub fn full_series(&self) -> &LocalSeries {
        &self.full
    }

    fn check_domain(&self, branch: Branch, y: &Real) -> Result<()> {
        if self.spec.branch_domain(branch).contains(y) {
            Ok(())
        } else {
            Err(Error::domain(
                format!("{branch:?} Koenig argument"),
                y.to_decimal(20),
            ))
        }
    }

    /// `G(y)` or `H(y)` in the chart's mode.
    pub fn eval(&self, branch: Branch, y: &Real) -> Result<Real> {
        self.eval_with_deriv(branch, y).map(|(v, _)| v)
    }

    pub fn eval_with_deriv(&self, branch: Branch, y: &Real) -> Result<(Real, Real)> {
        match self.mode {
            ChartMode::Closed => {
                self.check_domain(branch, y)?;
                Ok(self.closed(branch, y))
            }
            ChartMode::Iterative => koenig_iterative_with_deriv(&self.spec, branch, y),
            ChartMode::Series => {
                self.check_domain(branch, y)?;
                Ok(self.series_with_deriv(branch, y))
            }
        }
    }

    /// Truncated series value, regardless of mode.
    pub fn eval_series(&self, branch: Branch, y: &Real) -> Result<Real> {
        self.check_domain(branch, y)?;
        Ok(self.series_with_deriv(branch, y).0)
    }

    fn series_with_deriv(&self, branch: Branch, y: &Real) -> (Real, Real) {
        let bits = self.spec.bits();
        let series = self.series(branch).to_real(bits);
        let y = y.with_bits(bits);
        let coeffs = series.coeffs();
        let mut d = Real::zero(bits);
        for (j, c) in coeffs.iter().enumerate().rev() {
            d = d * &y + c.mul_int(j as i64 + 1);
        }
        (series.eval(&y), d)
    }

    /// `G(y) = c y/(c - y)`, `H(y) = c y/(c + y)`.
    fn closed(&self, branch: Branch, y: &Real) -> (Real, Real) {
        let bits = self.spec.bits().max(y.bits());
        let c = self.closed_c.as_ref().unwrap().to_real(bits);
        let den = match branch {
            Branch::Even => &c - y,
            Branch::Odd => &c + y,
        };
        let v = &c * y / &den;
        let d = c.sqr() / den.sqr();
        (v, d)
    }

    /// Exact `G(y)` or `H(y)` when the chart has closed forms.
    pub fn eval_exact(&self, branch: Branch, y: &Quad) -> Result<Option<Quad>> {
        let Some(c) = &self.closed_c else {
            return Ok(None);
        };
        let den = match branch {
            Branch::Even => c.checked_add(&-y.clone())?,
            Branch::Odd => c.checked_add(y)?,
        };
        Ok(Some(c.checked_mul(y)?.checked_div(&den)?))
    }

    /// Exact `G^-1(w) = c w/(c + w)` or `H^-1(w) = c w/(c - w)`.
    pub fn inverse_exact(&self, branch: Branch, w: &Quad) -> Result<Option<Quad>> {
        let Some(c) = &self.closed_c else {
            return Ok(None);
        };
        let den = match branch {
            Branch::Even => c.checked_add(w)?,
            Branch::Odd => c.checked_add(&-w.clone())?,
        };
        Ok(Some(c.checked_mul(w)?.checked_div(&den)?))
    }

    /// Largest value of `G` or `H` on its domain, `None` when unbounded.
    pub fn range_upper(&self, branch: Branch) -> Result<Option<Real>> {
        let dom = self.spec.branch_domain(branch);
        match (&dom.upper, self.mode, branch) {
            (None, _, _) => Ok(self
                .closed_c
                .as_ref()
                .map(|c| c.to_real(self.spec.bits()))),
            (Some(u), _, _) if dom.closed => self.eval(branch, u).map(Some),
            // open end: golden/silver even branch, G(p) is finite
            (Some(u), ChartMode::Closed, _) => Ok(Some(self.closed(branch, u).0)),
            (Some(u), _, _) => self.eval(branch, u).map(Some),
        }
    }

    /// `y` in the branch domain with `G(y) = w` (or `H(y) = w`).
    pub fn inverse(&self, branch: Branch, w: &Real) -> Result<Real> {
        let prec = self.precision();
        let bits = self.spec.bits();
        let w = w.with_bits(bits);
        let upper = self.range_upper(branch)?;
        let slack = prec.tolerance();
        let in_range = w >= -slack.clone()
            && upper.as_ref().is_none_or(|u| match (branch, self.mode) {
                // H of the Möbius maps tends to c but never reaches it
                (Branch::Odd, ChartMode::Closed) => w < *u,
                _ => w <= u + &slack,
            });
        if !in_range {
            return Err(Error::domain(
                format!("{branch:?} Koenig inverse argument"),
                w.to_decimal(20),
            ));
        }
        if w.is_zero() {
            return Ok(Real::zero(bits));
        }
        if self.mode == ChartMode::Closed {
            let c = self.closed_c.as_ref().unwrap().to_real(bits);
            let den = match branch {
                Branch::Even => &c + &w,
                Branch::Odd => &c - &w,
            };
            return Ok(&c * &w / den);
        }
        let dom = self.spec.branch_domain(branch);
        let hi = dom.upper.clone().expect("iterative branches have bounded domains");
        let guess = match self.series(branch).to_real(bits).revert() {
            Ok(r) => r.eval(&w),
            Err(_) => w.clone(),
        };
        let (lo, hi) = (Real::zero(bits), hi);
        if let Some(u) = &upper {
            if w >= *u {
                return Ok(hi);
            }
        }
        newton_bisect(
            |y| {
                let (v, d) = self.eval_with_deriv(branch, y)?;
                Ok((v - &w, d))
            },
            lo,
            hi,
            true,
            guess,
            &prec.epsilon(prec.digits as i32 - 3),
            200,
        )
    }

    /// Schröder function `K` of the full map with its derivative.
    ///
    /// Closed forms use `K(z) = c(z - p)/(c + z - p)`; otherwise
    /// `K(z) = lim (f^k(z) - p)/m^k`.
    pub fn full_eval(&self, z: &Complex) -> Result<(Complex, Complex)> {
        let prec = self.precision();
        let ext = prec.extended_bits();
        let z = z.with_bits(ext);
        let p = Complex::from_real(self.spec.fixed_point_at(ext));
        let y = &z - &p;
        if let Some(c) = &self.closed_c {
            let c = Complex::from_real(c.to_real(ext));
            let den = &c + &y;
            if den.abs() < prec.snap_radius() {
                return Err(Error::Singular("pole of the Schröder function".into()));
            }
            let v = &(&c * &y) / &den;
            let d = &(&c * &c) / &(&den * &den);
            return Ok((v, d));
        }
        let m = Complex::from_real(self.spec.multiplier_at(ext));
        let spec = &self.spec;
        // iterate in the offset variable y = z - p
        let (v, d) = koenig_limit(
            |y: &Complex| {
                let x = y + &p;
                Ok((&spec.eval_complex(&x)? - &p, spec.deriv_complex(&x)))
            },
            &m,
            &y,
            prec.digits,
        )?;
        Ok((v, d))
    }

    /// Inverse of the full-map Schröder function.
    pub fn full_inverse(&self, w: &Complex) -> Result<Complex> {
        let prec = self.precision();
        let ext = prec.extended_bits();
        let w = w.with_bits(ext);
        let p = Complex::from_real(self.spec.fixed_point_at(ext));
        if let Some(c) = &self.closed_c {
            let c = Complex::from_real(c.to_real(ext));
            let den = &c - &w;
            if den.abs() < prec.snap_radius() {
                return Err(Error::Singular("K^-1 has a pole at w = c".into()));
            }
            return Ok(&p + &(&(&c * &w) / &den));
        }
        let rev = self.full.to_real(ext).revert()?;
        let mut z = &p + &rev.eval_in(&w, |c| Complex::from_real(c.clone()));
        let tol = Real::pow10(-(prec.digits as i32), ext);
        for _ in 0..100 {
            let (k, dk) = self.full_eval(&z)?;
            if dk.is_zero() {
                return Err(Error::NotInvertible("K' vanishes".into()));
            }
            let step = &(&k - &w) / &dk;
            z = &z - &step;
            let scale = z.abs().max(Real::one(ext));
            if step.abs() <= &tol * &scale {
                return Ok(z);
            }
        }
        Err(Error::NonConvergence {
            what: "inverse Schröder function".into(),
            iterations: 100,
        })
    }

    /// `K^-1(m^t K(x))`, with `m^t` through the principal logarithm.
    pub fn frac_iterate(&self, x: &Complex, t: &BigRational) -> Result<Complex> {
        let prec = self.precision();
        let ext = prec.extended_bits();
        if x.im.is_zero() && !self.spec.in_basin(&x.re) {
            return Err(Error::domain(
                format!("seed for the {} map", self.spec.kind()),
                x.re.to_decimal(20),
            ));
        }
        let (k, _) = self.full_eval(x)?;
        let mt = principal_power(&self.spec.multiplier_at(ext), t, ext);
        let z = self.full_inverse(&(&mt * &k))?;
        Ok(z.with_bits(prec.bits()))
    }
}

/// `m^t = |m|^t e^{iπt}` for a negative real `m`, or `m^t` for positive `m`.
pub fn principal_power(m: &Real, t: &BigRational, bits: usize) -> Complex {
    let t = Real::from_rational(t, bits);
    let modulus = (m.abs().ln() * &t).exp();
    if m.is_negative() {
        let angle = Real::pi(bits) * &t;
        Complex::new(&modulus * &angle.cos(), &modulus * &angle.sin())
    } else {
        Complex::from_real(modulus)
    }
}

pub fn koenig_inverse(chart: &KoenigChart, branch: Branch, w: &Real) -> Result<Real> {
    chart.inverse(branch, w)
}

pub fn frac_iterate_complex(spec: &MapSpec, x: &Complex, t: &BigRational) -> Result<Complex> {
    KoenigChart::new(spec)?.frac_iterate(x, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn prec() -> Precision {
        Precision::default()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn golden() -> MapSpec {
        MapSpec::new(MapKind::Golden, prec()).unwrap()
    }

    fn cosine() -> MapSpec {
        MapSpec::new(MapKind::Cosine, prec()).unwrap()
    }

    fn logistic() -> MapSpec {
        MapSpec::new(MapKind::Logistic(q(5, 2)), prec()).unwrap()
    }

    fn dec(s: &str) -> Real {
        Real::from_rational(&crate::numerics::parse_rational(s).unwrap(), prec().bits())
    }

    fn close(a: &Real, b: &Real, k: i32) -> bool {
        (a - b).abs() < Real::pow10(-k, a.bits())
    }

    #[test]
    fn logistic_gammas_are_exact() {
        let chart = KoenigChart::with_order(&logistic(), 8).unwrap();
        let g = chart.series(Branch::Even).exact().unwrap();
        let want = [
            (1, 1),
            (-10, 3),
            (-200, 9),
            (1000, 9),
            (-4000, 27),
            (-1000000, 891),
            (68000000, 18711),
            (4810000000, 344817),
        ];
        for (j, (n, d)) in want.iter().enumerate() {
            assert_eq!(g.coeff(j + 1), &Quad::ratio(*n, *d), "gamma_{}", j + 1);
        }
        let h = chart.series(Branch::Odd).exact().unwrap();
        for j in 1..=8 {
            let sign = if j % 2 == 1 { Quad::int(1) } else { Quad::int(-1) };
            assert_eq!(h.coeff(j), &(&sign * g.coeff(j)));
        }
    }

    #[test]
    fn cosine_gammas() {
        let chart = KoenigChart::with_order(&cosine(), 8).unwrap();
        let g = chart.series(Branch::Even).to_real(prec().bits());
        let want = [
            "-0.3277931305953677271045803",
            "-0.7486243776658610242164076",
            "0.4577246514588478179217120",
            "0.3010324155830439550743236",
            "-0.4470215225416579495572650",
            "-0.1066634338781197816943286",
            "0.3716684648125405104090988",
        ];
        for (j, w) in want.iter().enumerate() {
            assert!(close(g.coeff(j + 2), &dec(w), 25), "gamma_{}", j + 2);
        }
        // closed form of gamma_2
        let th = cosine().fixed_point().clone();
        let s = Real::one(th.bits()) - th.sqr();
        let g2 = (&s - &s.sqrt()) / (th.mul_int(2) * &s);
        assert!(close(g.coeff(2), &g2, 45));
    }

    #[test]
    fn linear_map_has_identity_chart() {
        let s = Quad::ratio(1, 3);
        let mut c = vec![Quad::int(0); 6];
        c[0] = s.clone();
        let g = PowerSeries::new(c).unwrap();
        let gs = schroeder_series(&g, &s, 6).unwrap();
        assert_eq!(gs.coeff(1), &Quad::int(1));
        assert!(gs.coeffs()[1..].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn schroeder_rejects_unit_multiplier() {
        let g = PowerSeries::new(vec![Quad::int(1), Quad::int(2)]).unwrap();
        assert!(matches!(
            schroeder_series(&g, &Quad::int(1), 2),
            Err(Error::SmallDivisor(_))
        ));
        let g = PowerSeries::new(vec![Quad::int(0), Quad::int(2)]).unwrap();
        assert!(schroeder_series(&g, &Quad::int(0), 2).is_err());
    }

    #[test]
    fn schroeder_residual_vanishes() {
        for spec in [golden(), cosine(), logistic()] {
            let chart = KoenigChart::with_order(&spec, 12).unwrap();
            let bits = spec.bits();
            let g = spec.conjugate_series(Branch::Even, 12).to_real(bits);
            let gs = chart.series(Branch::Even).to_real(bits);
            let lhs = gs.compose(&g);
            let s = spec.step_multiplier();
            for j in 1..=12 {
                let r = lhs.coeff(j) - &(s * gs.coeff(j));
                assert!(r.abs() < prec().tolerance(), "{} j={j}", spec.kind());
            }
        }
    }

    #[test]
    fn golden_series_is_geometric() {
        let chart = KoenigChart::new(&golden()).unwrap();
        let k = chart.full_series().exact().unwrap();
        let r = -(Quad::int(1) / Quad::sqrt(5));
        for j in 1..=16 {
            assert_eq!(k.coeff(j), &r.pow(j as u32 - 1));
        }
    }

    #[test]
    fn iterative_matches_closed_form() {
        let g = golden();
        let bits = g.bits();
        let y = g.fixed_point() - &Real::one(bits);
        let it = koenig_iterative(&g, Branch::Even, &y).unwrap();
        let chart = KoenigChart::new(&g).unwrap();
        let closed = chart.eval(Branch::Even, &y).unwrap();
        assert!(close(&it, &closed, 45));
        assert_eq!(closed.to_decimal(19), "0.8541019662496845446");
    }

    #[test]
    fn cosine_iterative_values() {
        let c = cosine();
        let chart = KoenigChart::new(&c).unwrap();
        let bits = c.bits();
        let g = chart.eval(Branch::Even, c.fixed_point()).unwrap();
        // printed values are truncated, so compare within one unit of the last digit
        assert!(close(&g, &dec("0.3983002403035094139563243"), 25));
        let y = Real::one(bits) - c.fixed_point();
        let h = chart.eval(Branch::Odd, &y).unwrap();
        assert!(close(&h, &dec("0.2682998330950090571338993"), 25));
        let back = chart.inverse(Branch::Even, &g).unwrap();
        assert!(close(&back, c.fixed_point(), 40));
    }

    #[test]
    fn logistic_values_and_inverse() {
        let l = logistic();
        let chart = KoenigChart::new(&l).unwrap();
        let bits = l.bits();
        let g = chart.eval(Branch::Even, &Real::ratio(1, 10, bits)).unwrap();
        assert!(close(&g, &dec("0.0533831106341909825926069"), 25));
        let h = chart.eval(Branch::Odd, &Real::ratio(1, 40, bits)).unwrap();
        assert!(close(&h, &dec("0.0266915553170954912963034"), 25));
        let w = dec("0.0533831106341909825926069");
        let y = chart.inverse(Branch::Even, &w).unwrap();
        // G'(1/10) = 0 since f'(1/2) = 0, so a 25-digit w fixes y to about 12
        assert!(close(&y, &Real::ratio(1, 10, bits), 12));
        let y = Real::ratio(1, 20, bits);
        let w = chart.eval(Branch::Even, &y).unwrap();
        assert!(close(&chart.inverse(Branch::Even, &w).unwrap(), &y, 40));
        assert!(chart.inverse(Branch::Even, &Real::ratio(1, 5, bits)).is_err());
        assert!(chart.inverse(Branch::Odd, &Real::ratio(-1, 5, bits)).is_err());
    }

    #[test]
    fn series_and_iterative_agree_for_small_arguments() {
        for spec in [cosine(), logistic()] {
            let chart = KoenigChart::with_order(&spec, 40).unwrap();
            let y = Real::pow10(-2, spec.bits());
            for branch in [Branch::Even, Branch::Odd] {
                let a = chart.eval(branch, &y).unwrap();
                let b = chart.eval_series(branch, &y).unwrap();
                assert!((a - b).abs() < prec().tolerance(), "{}", spec.kind());
            }
        }
    }

    #[test]
    fn golden_round_trip() {
        let chart = KoenigChart::new(&golden()).unwrap();
        let y = Real::ratio(1, 10, chart.spec().bits());
        for branch in [Branch::Even, Branch::Odd] {
            let w = chart.eval(branch, &y).unwrap();
            assert!(close(&chart.inverse(branch, &w).unwrap(), &y, 45));
        }
        let w = chart.eval_exact(Branch::Even, &Quad::ratio(1, 10)).unwrap().unwrap();
        assert_eq!(
            chart.inverse_exact(Branch::Even, &w).unwrap().unwrap(),
            Quad::ratio(1, 10)
        );
    }

    #[test]
    fn golden_complex_half_iterates() {
        let g = golden();
        let bits = g.bits();
        let one = Complex::from_real(Real::one(bits));
        let half = frac_iterate_complex(&g, &one, &q(1, 2)).unwrap();
        let want = Complex::new(Real::ratio(3, 2, bits), Real::ratio(-1, 2, bits));
        assert!(half.dist(&want) < Real::pow10(-45, bits));
        let three_halves = frac_iterate_complex(&g, &one, &q(3, 2)).unwrap();
        let want = Complex::new(Real::ratio(8, 5, bits), Real::ratio(1, 5, bits));
        assert!(three_halves.dist(&want) < Real::pow10(-45, bits));
        let recip = half.recip();
        let want = Complex::new(Real::ratio(3, 5, bits), Real::ratio(1, 5, bits));
        assert!(recip.dist(&want) < Real::pow10(-45, bits));
    }

    #[test]
    fn complex_iterates_compose_for_iterative_charts() {
        for spec in [cosine(), logistic()] {
            let chart = KoenigChart::new(&spec).unwrap();
            let bits = spec.bits();
            let x = Complex::from_real(spec.fixed_point() - &Real::ratio(1, 20, bits));
            let one = chart.frac_iterate(&x, &q(1, 1)).unwrap();
            let fx = spec.eval_complex(&x).unwrap();
            assert!(one.dist(&fx) < Real::pow10(-35, bits), "{}", spec.kind());
            let half = chart.frac_iterate(&x, &q(1, 2)).unwrap();
            let twice = chart.frac_iterate(&half, &q(1, 2)).unwrap();
            assert!(twice.dist(&fx) < Real::pow10(-35, bits), "{}", spec.kind());
        }
    }

    #[test]
    fn complex_iterate_rejects_seed_outside_basin() {
        let bits = prec().bits();
        let x = Complex::from_real(Real::from_i64(-2, bits));
        assert!(frac_iterate_complex(&golden(), &x, &q(1, 2)).is_err());
    }
}
