//! The four map families, their fixed points and multipliers, the even/odd
//! double-step conjugates and orbit generation.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{Complex, PowerSeries, Precision, Quad, Real, Value};

#[derive(Clone, Debug, PartialEq)]
pub enum MapKind {
    /// `1 + 1/x`
    Golden,
    /// `2 + 1/x`
    Silver,
    /// `cos x`
    Cosine,
    /// `lambda x (1 - x)` with `2 < lambda < 3`
    Logistic(BigRational),
}

impl MapKind {
    pub fn name(&self) -> &'static str {
        match self {
            MapKind::Golden => "golden",
            MapKind::Silver => "silver",
            MapKind::Cosine => "cosine",
            MapKind::Logistic(_) => "logistic",
        }
    }

    pub fn lambda(&self) -> Option<&BigRational> {
        match self {
            MapKind::Logistic(l) => Some(l),
            _ => None,
        }
    }

    /// Additive constant `k` of the continued-fraction maps `k + 1/x`.
    fn cf_constant(&self) -> Option<i64> {
        match self {
            MapKind::Golden => Some(1),
            MapKind::Silver => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapKind::Logistic(l) => write!(f, "logistic({})", crate::numerics::fmt_rat(l)),
            k => f.write_str(k.name()),
        }
    }
}

/// Which double-step conjugate: `Even` follows the iterates below the fixed
/// point through `g(y) = p - f(f(p - y))`, `Odd` those above it through
/// `h(y) = f(f(p + y)) - p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Even,
    Odd,
}

/// Position relative to the fixed point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Below,
    Above,
}

impl Side {
    pub fn branch(self) -> Branch {
        match self {
            Side::Below => Branch::Even,
            Side::Above => Branch::Odd,
        }
    }

    pub fn flip(self) -> Side {
        match self {
            Side::Below => Side::Above,
            Side::Above => Side::Below,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::Below => "below",
            Side::Above => "above",
        }
    }
}

impl Branch {
    pub fn side(self) -> Side {
        match self {
            Branch::Even => Side::Below,
            Branch::Odd => Side::Above,
        }
    }
}

/// Upper end of the interval `[0, upper]` (or `[0, upper)`) on which a
/// double-step conjugate is known to be increasing and conjugate to `f∘f`.
#[derive(Clone, Debug)]
pub struct BranchDomain {
    pub upper: Option<Real>,
    pub closed: bool,
    /// Rounding allowance at a closed end.
    pub slack: Real,
}

impl BranchDomain {
    pub fn contains(&self, y: &Real) -> bool {
        if y.is_negative() {
            return false;
        }
        match &self.upper {
            None => true,
            Some(u) if self.closed => *y <= u + &self.slack,
            Some(u) => y < u,
        }
    }
}

/// A map with an attracting fixed point approached from alternating sides.
#[derive(Clone, Debug)]
pub struct MapSpec {
    kind: MapKind,
    prec: Precision,
    fixed_point: Real,
    fixed_point_ext: Real,
    fixed_point_exact: Option<Quad>,
    multiplier: Real,
    multiplier_exact: Option<Quad>,
    step_multiplier: Real,
    step_multiplier_exact: Option<Quad>,
    /// Interval around the fixed point on which `f` is decreasing and which
    /// `f` maps into itself. `None` on the right means unbounded.
    core_lo: Real,
    core_lo_open: bool,
    core_hi: Option<Real>,
}

pub fn make_map(kind: MapKind, prec: Precision) -> Result<MapSpec> {
    MapSpec::new(kind, prec)
}

impl MapSpec {
    pub fn new(kind: MapKind, prec: Precision) -> Result<MapSpec> {
        let bits = prec.bits();
        let ext = prec.extended_bits();
        match &kind {
            MapKind::Golden | MapKind::Silver => {
                let k = kind.cf_constant().unwrap();
                let p = if k == 1 { Quad::phi() } else { Quad::psi() };
                // f'(p) = -1/p^2
                let m = -(Quad::int(1) / (&p * &p));
                let s = &m * &m;
                Ok(MapSpec {
                    fixed_point: p.to_real(bits),
                    fixed_point_ext: p.to_real(ext),
                    multiplier: m.to_real(bits),
                    step_multiplier: s.to_real(bits),
                    fixed_point_exact: Some(p),
                    multiplier_exact: Some(m),
                    step_multiplier_exact: Some(s),
                    core_lo: Real::zero(bits),
                    core_lo_open: true,
                    core_hi: None,
                    kind,
                    prec,
                })
            }
            MapKind::Cosine => {
                let theta_ext = dottie(ext);
                let theta = theta_ext.with_bits(bits);
                let sin = (Real::one(bits) - theta.sqr()).sqrt();
                Ok(MapSpec {
                    step_multiplier: Real::one(bits) - theta.sqr(),
                    multiplier: -sin,
                    fixed_point: theta,
                    fixed_point_ext: theta_ext,
                    fixed_point_exact: None,
                    multiplier_exact: None,
                    step_multiplier_exact: None,
                    core_lo: Real::zero(bits),
                    core_lo_open: false,
                    core_hi: Some(Real::one(bits)),
                    kind,
                    prec,
                })
            }
            MapKind::Logistic(lambda) => {
                let two = BigRational::from_integer(BigInt::from(2));
                let three = BigRational::from_integer(BigInt::from(3));
                if *lambda <= two || *lambda >= three {
                    return Err(Error::domain(
                        "logistic parameter",
                        format!(
                            "lambda = {} must satisfy 2 < lambda < 3",
                            crate::numerics::fmt_rat(lambda)
                        ),
                    ));
                }
                let l = Quad::rational(lambda.clone());
                let p = (&l - &Quad::int(1)) / &l;
                let m = &Quad::int(2) - &l;
                let s = &m * &m;
                let hi = &l / &Quad::int(4);
                Ok(MapSpec {
                    fixed_point: p.to_real(bits),
                    fixed_point_ext: p.to_real(ext),
                    multiplier: m.to_real(bits),
                    step_multiplier: s.to_real(bits),
                    fixed_point_exact: Some(p),
                    multiplier_exact: Some(m),
                    step_multiplier_exact: Some(s),
                    core_lo: Real::ratio(1, 2, bits),
                    core_lo_open: false,
                    core_hi: Some(hi.to_real(bits)),
                    kind,
                    prec,
                })
            }
        }
    }

    pub fn kind(&self) -> &MapKind {
        &self.kind
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    pub fn bits(&self) -> usize {
        self.prec.bits()
    }

    pub fn fixed_point(&self) -> &Real {
        &self.fixed_point
    }

    /// Fixed point at a precision at least matching `bits`.
    pub fn fixed_point_at(&self, bits: usize) -> Real {
        if bits <= self.fixed_point.bits() {
            self.fixed_point.clone()
        } else if let Some(q) = &self.fixed_point_exact {
            q.to_real(bits)
        } else {
            self.fixed_point_ext.with_bits(bits.min(self.fixed_point_ext.bits()))
        }
    }

    pub fn fixed_point_exact(&self) -> Option<&Quad> {
        self.fixed_point_exact.as_ref()
    }

    /// `m = f'(p)`, in `(-1, 0)`.
    pub fn multiplier(&self) -> &Real {
        &self.multiplier
    }

    pub fn multiplier_at(&self, bits: usize) -> Real {
        match &self.multiplier_exact {
            Some(q) => q.to_real(bits),
            None => -(Real::one(bits) - self.fixed_point_at(bits).sqr()).sqrt(),
        }
    }

    pub fn multiplier_exact(&self) -> Option<&Quad> {
        self.multiplier_exact.as_ref()
    }

    /// `s = m^2`, the multiplier of both double-step conjugates.
    pub fn step_multiplier(&self) -> &Real {
        &self.step_multiplier
    }

    pub fn step_multiplier_at(&self, bits: usize) -> Real {
        self.multiplier_at(bits).sqr()
    }

    pub fn step_multiplier_exact(&self) -> Option<&Quad> {
        self.step_multiplier_exact.as_ref()
    }

    pub fn has_exact_arithmetic(&self) -> bool {
        self.fixed_point_exact.is_some()
    }

    pub fn in_basin(&self, x: &Real) -> bool {
        match &self.kind {
            MapKind::Golden | MapKind::Silver => x.is_positive(),
            MapKind::Cosine => x.is_finite(),
            MapKind::Logistic(_) => x.is_positive() && *x < Real::one(x.bits()),
        }
    }

    /// Whether `x` lies in the interval where orbits alternate around `p`
    /// and the branch charts are monotone.
    pub fn in_core(&self, x: &Real) -> bool {
        let slack = self.prec.tolerance();
        let above_lo = if self.core_lo_open {
            *x > self.core_lo
        } else {
            *x >= &self.core_lo - &slack
        };
        above_lo && self.core_hi.as_ref().is_none_or(|hi| *x <= hi + &slack)
    }

    pub fn core_bounds(&self) -> (&Real, Option<&Real>) {
        (&self.core_lo, self.core_hi.as_ref())
    }

    pub fn side(&self, x: &Real) -> Option<Side> {
        let p = self.fixed_point_at(x.bits());
        if *x < p {
            Some(Side::Below)
        } else if *x > p {
            Some(Side::Above)
        } else {
            None
        }
    }

    pub fn branch_domain(&self, branch: Branch) -> BranchDomain {
        match branch {
            Branch::Even => BranchDomain {
                upper: Some(&self.fixed_point - &self.core_lo),
                closed: !self.core_lo_open,
                slack: self.prec.tolerance(),
            },
            Branch::Odd => BranchDomain {
                upper: self.core_hi.as_ref().map(|hi| hi - &self.fixed_point),
                closed: true,
                slack: self.prec.tolerance(),
            },
        }
    }

    /// `f(x)` at the precision of `x`.
    pub fn eval(&self, x: &Real) -> Result<Real> {
        let bits = x.bits();
        match &self.kind {
            MapKind::Golden | MapKind::Silver => {
                if x.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let k = self.kind.cf_constant().unwrap();
                Ok(Real::from_i64(k, bits) + x.recip())
            }
            MapKind::Cosine => Ok(x.cos()),
            MapKind::Logistic(l) => {
                let l = Real::from_rational(l, bits);
                Ok(l * x * (Real::one(bits) - x))
            }
        }
    }

    /// `f'(x)`.
    pub fn deriv(&self, x: &Real) -> Real {
        let bits = x.bits();
        match &self.kind {
            MapKind::Golden | MapKind::Silver => -(x.sqr().recip()),
            MapKind::Cosine => -(x.sin()),
            MapKind::Logistic(l) => {
                Real::from_rational(l, bits) * (Real::one(bits) - x.mul_int(2))
            }
        }
    }

    pub fn eval_complex(&self, z: &Complex) -> Result<Complex> {
        let bits = z.bits();
        match &self.kind {
            MapKind::Golden | MapKind::Silver => {
                if z.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let k = Real::from_i64(self.kind.cf_constant().unwrap(), bits);
                Ok(Complex::from_real(k) + z.recip())
            }
            MapKind::Cosine => Ok(z.cos()),
            MapKind::Logistic(l) => {
                let l = Real::from_rational(l, bits);
                Ok((z * &(Complex::one(bits) - z)).scale(&l))
            }
        }
    }

    pub fn deriv_complex(&self, z: &Complex) -> Complex {
        let bits = z.bits();
        match &self.kind {
            MapKind::Golden | MapKind::Silver => -(z * z).recip(),
            MapKind::Cosine => -z.sin(),
            MapKind::Logistic(l) => {
                let l = Real::from_rational(l, bits);
                (Complex::one(bits) - z.scale(&Real::from_i64(2, bits))).scale(&l)
            }
        }
    }

    /// `f(x)` in exact arithmetic, when the map admits it.
    pub fn eval_exact(&self, x: &Quad) -> Result<Option<Quad>> {
        match &self.kind {
            MapKind::Golden | MapKind::Silver => {
                let k = Quad::int(self.kind.cf_constant().unwrap());
                Ok(Some(k.checked_add(&x.checked_recip()?)?))
            }
            MapKind::Cosine => Ok(None),
            MapKind::Logistic(l) => {
                let l = Quad::rational(l.clone());
                let one_minus = Quad::int(1).checked_add(&-x.clone())?;
                Ok(Some(l.checked_mul(x)?.checked_mul(&one_minus)?))
            }
        }
    }

    /// One map step, exact when possible.
    pub fn step(&self, x: &Value) -> Result<Value> {
        if let Value::Exact(q) = x {
            if let Some(next) = self.eval_exact(q)? {
                return Ok(Value::Exact(next));
            }
        }
        Ok(Value::Approx(self.eval(&x.to_real(self.bits()))?))
    }

    /// Double-step conjugate without a domain check. Works at the precision
    /// of `y`.
    pub fn conjugate_unchecked(&self, branch: Branch, y: &Real) -> Result<Real> {
        let p = self.fixed_point_at(y.bits());
        match branch {
            Branch::Even => Ok(&p - &self.eval(&self.eval(&(&p - y))?)?),
            Branch::Odd => Ok(self.eval(&self.eval(&(&p + y))?)? - &p),
        }
    }

    /// Derivative of the double-step conjugate.
    pub fn conjugate_deriv(&self, branch: Branch, y: &Real) -> Result<Real> {
        let p = self.fixed_point_at(y.bits());
        let x = match branch {
            Branch::Even => &p - y,
            Branch::Odd => &p + y,
        };
        let fx = self.eval(&x)?;
        Ok(self.deriv(&fx) * self.deriv(&x))
    }

    /// `g(y)` or `h(y)`, rejecting arguments outside the conservative domain.
    pub fn eval_conjugate(&self, branch: Branch, y: &Real) -> Result<Real> {
        if !self.branch_domain(branch).contains(y) {
            return Err(Error::domain(
                format!("{branch:?} conjugate argument"),
                y.to_decimal(20),
            ));
        }
        self.conjugate_unchecked(branch, y)
    }

    pub fn eval_conjugate_exact(&self, branch: Branch, y: &Quad) -> Result<Option<Quad>> {
        let Some(p) = &self.fixed_point_exact else {
            return Ok(None);
        };
        let x = match branch {
            Branch::Even => p.checked_add(&-y.clone())?,
            Branch::Odd => p.checked_add(y)?,
        };
        let Some(fx) = self.eval_exact(&x)? else {
            return Ok(None);
        };
        let ffx = self.eval_exact(&fx)?.unwrap();
        Ok(Some(match branch {
            Branch::Even => p - &ffx,
            Branch::Odd => &ffx - p,
        }))
    }

    /// Taylor series of `f(p + y) - p`.
    pub fn local_series(&self, order: usize) -> LocalSeries {
        let bits = self.bits();
        match &self.kind {
            MapKind::Golden | MapKind::Silver => {
                // 1/(p + y) - 1/p = sum_{j>=1} (-1)^j y^j / p^(j+1)
                let p = self.fixed_point_exact.clone().unwrap();
                let inv = Quad::int(1) / &p;
                let mut coeffs = Vec::with_capacity(order);
                let mut pw = &inv * &inv;
                for j in 1..=order {
                    let c = if j % 2 == 1 { -pw.clone() } else { pw.clone() };
                    coeffs.push(c);
                    pw = &pw * &inv;
                }
                LocalSeries::Exact(PowerSeries::new(coeffs).unwrap())
            }
            MapKind::Logistic(l) => {
                let m = self.multiplier_exact.clone().unwrap();
                let mut coeffs = vec![Quad::int(0); order.max(2)];
                coeffs[0] = m;
                coeffs[1] = -Quad::rational(l.clone());
                coeffs.truncate(order);
                LocalSeries::Exact(PowerSeries::new(coeffs).unwrap())
            }
            MapKind::Cosine => {
                // cos(p + y) - p = p (cos y - 1) - sin(p) sin y
                let p = self.fixed_point.clone();
                let sin_p = (Real::one(bits) - p.sqr()).sqrt();
                let mut coeffs = Vec::with_capacity(order);
                let mut fact = Real::one(bits);
                for j in 1..=order {
                    fact = fact.mul_int(j as i64);
                    let c = if j % 2 == 0 {
                        let sign = if (j / 2) % 2 == 1 { -1 } else { 1 };
                        (&p / &fact).mul_int(sign)
                    } else {
                        let sign = if (j / 2) % 2 == 0 { -1 } else { 1 };
                        (&sin_p / &fact).mul_int(sign)
                    };
                    coeffs.push(c);
                }
                LocalSeries::Real(PowerSeries::new(coeffs).unwrap())
            }
        }
    }

    /// Taylor series of the double-step conjugate `g` or `h` at 0.
    pub fn conjugate_series(&self, branch: Branch, order: usize) -> LocalSeries {
        match self.local_series(order) {
            LocalSeries::Exact(f1) => {
                let h = f1.compose(&f1);
                LocalSeries::Exact(match branch {
                    Branch::Odd => h,
                    Branch::Even => h.odd_reflection(),
                })
            }
            LocalSeries::Real(f1) => {
                let h = f1.compose(&f1);
                LocalSeries::Real(match branch {
                    Branch::Odd => h,
                    Branch::Even => h.odd_reflection(),
                })
            }
        }
    }
}

/// A series over the map's exact field when it has one, otherwise over the
/// reals.
#[derive(Clone, Debug)]
pub enum LocalSeries {
    Exact(PowerSeries<Quad>),
    Real(PowerSeries<Real>),
}

impl LocalSeries {
    pub fn to_real(&self, bits: usize) -> PowerSeries<Real> {
        match self {
            LocalSeries::Exact(s) => s.map_coeffs(|c| c.to_real(bits)),
            LocalSeries::Real(s) => s.map_coeffs(|c| c.with_bits(bits)),
        }
    }

    pub fn exact(&self) -> Option<&PowerSeries<Quad>> {
        match self {
            LocalSeries::Exact(s) => Some(s),
            LocalSeries::Real(_) => None,
        }
    }
}

/// Dottie's number, the fixed point of `cos`, by Newton's method with a
/// precision-doubling schedule.
fn dottie(bits: usize) -> Real {
    let mut x = Real::from_f64(0.739_085_133_215_160_6, 64);
    let mut b = 64;
    loop {
        b = (2 * b).min(bits);
        x = x.with_bits(b);
        let fx = x.cos() - &x;
        let dfx = -(x.sin()) - Real::one(b);
        x = &x - &(fx / dfx);
        if b == bits {
            break;
        }
    }
    // one more step at full precision absorbs the last doubling's error
    let fx = x.cos() - &x;
    let dfx = -(x.sin()) - Real::one(bits);
    &x - &(fx / dfx)
}

#[derive(Clone, Debug)]
pub struct OrbitEntry {
    pub index: BigRational,
    pub value: Real,
    pub exact: Option<Quad>,
}

/// Iterates `x_0, x_1, ..., x_n` (and, when filled by fractional
/// iteration, intermediate indices).
#[derive(Clone, Debug)]
pub struct OrbitTable {
    pub entries: Vec<OrbitEntry>,
    pub exact: bool,
}

pub fn orbit(spec: &MapSpec, x0: &Value, n: usize) -> Result<OrbitTable> {
    let bits = spec.bits();
    let start = x0.to_real(bits);
    if !spec.in_basin(&start) {
        return Err(Error::domain(
            format!("seed for the {} map", spec.kind()),
            start.to_decimal(20),
        ));
    }
    let mut x = match (x0, spec.has_exact_arithmetic()) {
        (Value::Exact(q), true) => {
            // reject seeds from another quadratic field up front
            spec.eval_exact(q)?;
            Value::Exact(q.clone())
        }
        _ => Value::Approx(start),
    };
    let mut entries = Vec::with_capacity(n + 1);
    for k in 0..=n {
        entries.push(OrbitEntry {
            index: BigRational::from_integer(BigInt::from(k)),
            value: x.to_real(bits),
            exact: x.exact().cloned(),
        });
        if k < n {
            x = spec.step(&x)?;
        }
    }
    let exact = entries.iter().all(|e| e.exact.is_some());
    Ok(OrbitTable { entries, exact })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::parse_exact;

    fn prec() -> Precision {
        Precision::default()
    }

    fn logistic(n: i64, d: i64) -> MapSpec {
        MapSpec::new(
            MapKind::Logistic(BigRational::new(BigInt::from(n), BigInt::from(d))),
            prec(),
        )
        .unwrap()
    }

    fn exact_values(t: &OrbitTable) -> Vec<String> {
        t.entries
            .iter()
            .map(|e| e.exact.as_ref().unwrap().exact_form())
            .collect()
    }

    #[test]
    fn golden_constants() {
        let g = MapSpec::new(MapKind::Golden, prec()).unwrap();
        let phi = Quad::phi();
        assert_eq!(g.fixed_point_exact(), Some(&phi));
        let one_plus = &Quad::int(1) + &phi;
        assert_eq!(g.multiplier_exact().unwrap(), &(-(Quad::int(1) / &one_plus)));
        assert_eq!(
            g.step_multiplier_exact().unwrap(),
            &(Quad::int(1) / (&one_plus * &one_plus))
        );
    }

    #[test]
    fn dottie_number() {
        let c = MapSpec::new(MapKind::Cosine, prec()).unwrap();
        assert_eq!(
            c.fixed_point().to_decimal(25),
            "0.7390851332151606416553121"
        );
        let resid = c.fixed_point_at(prec().extended_bits());
        assert!((resid.cos() - &resid).abs() < Real::pow10(-110, resid.bits()));
        let s = Real::one(c.bits()) - c.fixed_point().sqr();
        assert_eq!(c.step_multiplier(), &s);
    }

    #[test]
    fn logistic_constants() {
        let l = logistic(5, 2);
        assert_eq!(l.fixed_point_exact().unwrap(), &Quad::ratio(3, 5));
        assert_eq!(l.step_multiplier_exact().unwrap(), &Quad::ratio(1, 4));
        assert_eq!(l.multiplier_exact().unwrap(), &Quad::ratio(-1, 2));
    }

    #[test]
    fn logistic_parameter_range() {
        for (n, d) in [(2, 1), (3, 1), (7, 2), (1, 1)] {
            let r = MapSpec::new(
                MapKind::Logistic(BigRational::new(BigInt::from(n), BigInt::from(d))),
                prec(),
            );
            assert!(matches!(r, Err(Error::OutOfDomain { .. })));
        }
    }

    #[test]
    fn fibonacci_and_pell_orbits() {
        let g = MapSpec::new(MapKind::Golden, prec()).unwrap();
        let t = orbit(&g, &Value::Exact(Quad::int(1)), 5).unwrap();
        assert!(t.exact);
        assert_eq!(exact_values(&t), ["1", "2", "3/2", "5/3", "8/5", "13/8"]);

        let s = MapSpec::new(MapKind::Silver, prec()).unwrap();
        let t = orbit(&s, &Value::Exact(Quad::int(2)), 5).unwrap();
        assert_eq!(exact_values(&t), ["2", "5/2", "12/5", "29/12", "70/29", "169/70"]);

        let t = orbit(&g, &Value::Exact(Quad::phi()), 3).unwrap();
        assert_eq!(exact_values(&t), ["phi"; 4]);
    }

    #[test]
    fn logistic_orbit_is_exact() {
        let l = logistic(5, 2);
        let t = orbit(&l, &Value::Exact(Quad::ratio(1, 2)), 3).unwrap();
        assert_eq!(exact_values(&t), ["1/2", "5/8", "75/128", "19875/32768"]);
    }

    #[test]
    fn orbit_rejects_bad_seeds() {
        let g = MapSpec::new(MapKind::Golden, prec()).unwrap();
        assert!(orbit(&g, &Value::Exact(Quad::int(-1)), 3).is_err());
        assert!(orbit(&g, &Value::Exact(Quad::int(0)), 3).is_err());
        // 1 + 1/x does not care which quadratic field the seed lives in
        assert!(orbit(&g, &Value::Exact(Quad::psi()), 3).unwrap().exact);
        let l = logistic(5, 2);
        assert!(orbit(&l, &Value::Exact(Quad::int(1)), 3).is_err());
    }

    #[test]
    fn golden_even_conjugate_matches_paper_form() {
        let g = MapSpec::new(MapKind::Golden, prec()).unwrap();
        let phi = Quad::phi();
        // (phi - 1) - (phi - y)/(phi + 1 - y)
        let paper = |y: &Quad| {
            &(&phi - &Quad::int(1)) - &((&phi - y) / (&(&phi + &Quad::int(1)) - y))
        };
        for y in [Quad::int(0), Quad::ratio(1, 3), &phi - &Quad::int(1), Quad::ratio(3, 2)] {
            let ours = g.eval_conjugate_exact(Branch::Even, &y).unwrap().unwrap();
            assert_eq!(ours, paper(&y));
        }
        // g(phi - 1) = phi - f(f(1)) = phi - 3/2
        let y = &phi - &Quad::int(1);
        assert_eq!(
            g.eval_conjugate_exact(Branch::Even, &y).unwrap().unwrap(),
            parse_exact("phi-3/2").unwrap()
        );
        let z = g.eval_conjugate(Branch::Even, &Real::zero(g.bits())).unwrap();
        assert!(z.abs() < prec().tolerance());
    }

    #[test]
    fn silver_conjugates_match_paper_forms() {
        let s = MapSpec::new(MapKind::Silver, prec()).unwrap();
        let psi = Quad::psi();
        let two = Quad::int(2);
        let g_paper = |y: &Quad| {
            &(&psi - &two) - &((&psi - y) / (&(&(&two * &psi) + &Quad::int(1)) - &(&two * y)))
        };
        let h_paper = |y: &Quad| {
            &((&psi + y) / (&(&(&two * &psi) + &Quad::int(1)) + &(&two * y))) - &(&psi - &two)
        };
        for y in [Quad::ratio(1, 5), Quad::ratio(2, 3), Quad::int(4)] {
            assert_eq!(s.eval_conjugate_exact(Branch::Even, &y).unwrap().unwrap(), g_paper(&y));
            assert_eq!(s.eval_conjugate_exact(Branch::Odd, &y).unwrap().unwrap(), h_paper(&y));
        }
    }

    /// The double-step conjugates of the logistic map are quartics. Direct
    /// expansion of `f(f(mu + y)) - mu` gives the odd one; note the printed
    /// even/odd quartics in the literature are interchanged relative to the
    /// orbit (x_0 = 1/2 below mu, x_2 = 75/128).
    #[test]
    fn logistic_quartics() {
        let l = logistic(5, 2);
        let lam = Quad::ratio(5, 2);
        let a = &lam - &Quad::int(2);
        let b = &lam - &Quad::int(3);
        let quartic = |y: &Quad, sign: i64| {
            let s = Quad::int(sign);
            &(&(&(&a * &a) * y) - &(&(&(&s * &b) * &(&a * &lam)) * &y.pow(2)))
                - &(&(&(&Quad::int(2) * &a) * &(&lam * &lam)) * &y.pow(3))
                - &(&(&s * &lam.pow(3)) * &y.pow(4))
        };
        for y in [Quad::ratio(1, 40), Quad::ratio(1, 10), Quad::ratio(-3, 7)] {
            let even = l.eval_conjugate_exact(Branch::Even, &y).unwrap().unwrap();
            let odd = l.eval_conjugate_exact(Branch::Odd, &y).unwrap().unwrap();
            assert_eq!(even, quartic(&y, -1));
            assert_eq!(odd, quartic(&y, 1));
        }
        // even branch follows 1/2 -> 75/128
        let g = l.eval_conjugate_exact(Branch::Even, &Quad::ratio(1, 10)).unwrap().unwrap();
        assert_eq!(g, &Quad::ratio(3, 5) - &Quad::ratio(75, 128));
        // odd branch at 1/40 from the quartic
        let h = l.eval_conjugate(Branch::Odd, &Real::ratio(1, 40, l.bits())).unwrap();
        let direct = quartic(&Quad::ratio(1, 40), 1).to_real(l.bits());
        assert!((h - direct).abs() < prec().tolerance());
    }

    #[test]
    fn conjugate_domains() {
        let l = logistic(5, 2);
        let bits = l.bits();
        assert!(l.eval_conjugate(Branch::Even, &Real::ratio(1, 10, bits)).is_ok());
        assert!(l.eval_conjugate(Branch::Even, &Real::ratio(1, 5, bits)).is_err());
        assert!(l.eval_conjugate(Branch::Odd, &Real::ratio(-1, 5, bits)).is_err());
        let g = MapSpec::new(MapKind::Golden, prec()).unwrap();
        assert!(g.eval_conjugate(Branch::Odd, &Real::from_i64(100, bits)).is_ok());
        assert!(g.eval_conjugate(Branch::Even, g.fixed_point()).is_err());
    }

    #[test]
    fn conjugate_series_match_evaluation() {
        for spec in [
            MapSpec::new(MapKind::Golden, prec()).unwrap(),
            MapSpec::new(MapKind::Cosine, prec()).unwrap(),
            logistic(5, 2),
        ] {
            let bits = spec.bits();
            let y = Real::pow10(-3, bits);
            for branch in [Branch::Even, Branch::Odd] {
                let series = spec.conjugate_series(branch, 16).to_real(bits);
                let direct = spec.eval_conjugate(branch, &y).unwrap();
                // truncation error ~ y^17
                assert!((series.eval(&y) - direct).abs() < Real::pow10(-45, bits), "{}", spec.kind());
                let s = spec.step_multiplier();
                assert!((series.coeff(1) - s).abs() < prec().tolerance());
            }
        }
    }

    #[test]
    fn multiplier_matches_numerical_derivative() {
        for spec in [
            MapSpec::new(MapKind::Golden, prec()).unwrap(),
            MapSpec::new(MapKind::Silver, prec()).unwrap(),
            MapSpec::new(MapKind::Cosine, prec()).unwrap(),
            logistic(5, 2),
            logistic(11, 4),
        ] {
            let bits = spec.prec.extended_bits();
            let p = spec.fixed_point_at(bits);
            let h = Real::pow10(-30, bits);
            // central difference, error O(h^2)
            let d = (spec.eval(&(&p + &h)).unwrap() - spec.eval(&(&p - &h)).unwrap()) / h.mul_int(2);
            let tol = Real::pow10(-(prec().trusted_digits() as i32 - 5), bits);
            assert!((d - spec.multiplier_at(bits)).abs() < tol, "{}", spec.kind());
            let m = spec.multiplier().to_f64();
            assert!(-1.0 < m && m < 0.0);
        }
    }
}
