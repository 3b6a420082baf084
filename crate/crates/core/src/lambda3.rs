//! The neutral case λ = 3 of the logistic map, where the multiplier is -1
//! and the double-step conjugates reduce to the recurrences
//!
//! `u_k = u - 18u³ - 27u⁴` (odd side, `u₀ = 1/12`) and
//! `v_k = v - 18v³ + 27v⁴` (even side, `v₀ = 1/6`).
//!
//! Both decay like `1/(6√k)`. Nothing here attempts fractional iteration.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{Precision, Quad, Real, Value};

/// Index through which orbits stay exact by default. The numerator degree
/// grows by a factor 4 per step, so index 8 already carries ~70k digits.
pub const DEFAULT_EXACT_UNTIL: usize = 8;

/// Reference values quoted without a defining formula. No test asserts them.
pub const C_U: &str = "-0.1805303007686495535981970";
pub const C_V: &str = "-0.1388636341019828869315303";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NeutralKind {
    U,
    V,
}

impl NeutralKind {
    pub fn name(self) -> &'static str {
        match self {
            NeutralKind::U => "u",
            NeutralKind::V => "v",
        }
    }

    pub fn seed(self) -> BigRational {
        match self {
            NeutralKind::U => ratio(1, 12),
            NeutralKind::V => ratio(1, 6),
        }
    }

    /// Sign of the quartic term.
    fn quartic_sign(self) -> i64 {
        match self {
            NeutralKind::U => -1,
            NeutralKind::V => 1,
        }
    }
}

impl std::str::FromStr for NeutralKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "u" => Ok(NeutralKind::U),
            "v" => Ok(NeutralKind::V),
            _ => Err(Error::InvalidInput(format!("unknown kind {s:?}, expected u or v"))),
        }
    }
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn step_exact(kind: NeutralKind, x: &BigRational) -> BigRational {
    let x3 = x * x * x;
    let x4 = &x3 * x;
    x - x3 * ratio(18, 1) + x4 * ratio(27 * kind.quartic_sign(), 1)
}

pub fn step_real(kind: NeutralKind, x: &Real) -> Real {
    let x3 = x.sqr() * x;
    let x4 = x3.clone() * x;
    x.clone() - x3.mul_int(18) + x4.mul_int(27 * kind.quartic_sign())
}

#[derive(Clone, Debug)]
pub struct NeutralOrbit {
    pub kind: NeutralKind,
    pub seed: BigRational,
    /// `entries[k]` is the k-th iterate.
    pub entries: Vec<Value>,
}

/// `n + 1` entries, indices `0..=n`; exact through `exact_until`.
pub fn lambda3_orbit(
    kind: NeutralKind,
    n: usize,
    prec: &Precision,
    exact_until: usize,
) -> Result<NeutralOrbit> {
    if n < 1 {
        return Err(Error::InvalidInput("orbit length must be at least 1".into()));
    }
    let bits = prec.bits();
    let seed = kind.seed();
    let mut entries = Vec::with_capacity(n + 1);
    let mut exact = Some(seed.clone());
    let mut real = Real::from_rational(&seed, bits);
    for k in 0..=n {
        match &exact {
            Some(q) => {
                real = Real::from_rational(q, bits);
                entries.push(Value::Exact(Quad::rational(q.clone())));
            }
            None => entries.push(Value::Approx(real.clone())),
        }
        if k == n {
            break;
        }
        exact = match exact {
            Some(q) if k < exact_until => Some(step_exact(kind, &q)),
            _ => None,
        };
        if exact.is_none() {
            real = step_real(kind, &real);
        }
    }
    Ok(NeutralOrbit { kind, seed, entries })
}

/// Runs the real recurrence from the seed and calls `visit(k, x_k)` for
/// every `k` in `0..=k_max`. Nothing is stored.
pub fn scan(kind: NeutralKind, k_max: usize, bits: usize, mut visit: impl FnMut(usize, &Real)) {
    let mut x = Real::from_rational(&kind.seed(), bits);
    visit(0, &x);
    for k in 1..=k_max {
        x = step_real(kind, &x);
        visit(k, &x);
    }
}

#[derive(Clone, Debug)]
pub struct ScaledPoint {
    pub k: usize,
    pub value: Real,
    pub scaled: Real,
}

/// `(k, √k·x_k)` at `k = stride, 2·stride, …` and always at `k_max`.
pub fn sqrtk_scaling(
    kind: NeutralKind,
    k_max: usize,
    stride: usize,
    prec: &Precision,
) -> Result<Vec<ScaledPoint>> {
    if k_max < 100 {
        return Err(Error::InvalidInput("k_max must be at least 100".into()));
    }
    if stride == 0 {
        return Err(Error::InvalidInput("stride must be positive".into()));
    }
    let bits = prec.bits();
    let mut out = Vec::new();
    scan(kind, k_max, bits, |k, x| {
        if k > 0 && (k % stride == 0 || k == k_max) {
            let scaled = Real::from_i64(k as i64, bits).sqrt() * x;
            out.push(ScaledPoint { k, value: x.clone(), scaled });
        }
    });
    Ok(out)
}

/// `√k·x_k` at each requested index (any order, duplicates allowed).
pub fn scaled_at(kind: NeutralKind, ks: &[usize], bits: usize) -> Vec<Real> {
    let k_max = ks.iter().copied().max().unwrap_or(0);
    let mut at: BTreeMap<usize, Real> = ks.iter().map(|&k| (k, Real::zero(bits))).collect();
    scan(kind, k_max, bits, |k, x| {
        if let Some(slot) = at.get_mut(&k) {
            *slot = Real::from_i64(k as i64, bits).sqrt() * x;
        }
    });
    ks.iter().map(|k| at[k].clone()).collect()
}

/// Polynomial extrapolation to `h = 0` through `(h_i, a_i)` (Neville).
pub fn extrapolate(points: &[(Real, Real)]) -> Result<Real> {
    if points.is_empty() {
        return Err(Error::InvalidInput("no points to extrapolate".into()));
    }
    let mut p: Vec<Real> = points.iter().map(|(_, a)| a.clone()).collect();
    let n = points.len();
    for m in 1..n {
        for i in 0..n - m {
            let (hi, hj) = (&points[i].0, &points[i + m].0);
            let den = hi.clone() - hj;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            p[i] = (hi.clone() * &p[i + 1] - hj.clone() * &p[i]) / den;
        }
    }
    Ok(p[0].clone())
}

/// Richardson-style hook: evaluates `functional(k, x_k)` at each `k` and
/// extrapolates the results polynomially in `1/k`.
pub fn richardson(
    kind: NeutralKind,
    ks: &[usize],
    bits: usize,
    mut functional: impl FnMut(usize, &Real) -> Real,
) -> Result<Real> {
    if ks.contains(&0) {
        return Err(Error::InvalidInput("indices must be positive".into()));
    }
    let k_max = ks.iter().copied().max().unwrap_or(0);
    let mut vals: BTreeMap<usize, Real> = BTreeMap::new();
    scan(kind, k_max, bits, |k, x| {
        if ks.contains(&k) {
            vals.insert(k, functional(k, x));
        }
    });
    let points: Vec<(Real, Real)> = ks
        .iter()
        .map(|&k| (Real::ratio(1, k as i64, bits), vals[&k].clone()))
        .collect();
    extrapolate(&points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prec() -> Precision {
        Precision::default()
    }

    #[test]
    fn first_steps_exact() {
        let u = lambda3_orbit(NeutralKind::U, 2, &prec(), DEFAULT_EXACT_UNTIL).unwrap();
        assert_eq!(u.entries[0], Value::Exact(Quad::ratio(1, 12)));
        assert_eq!(u.entries[1], Value::Exact(Quad::ratio(55, 768)));
        let v = lambda3_orbit(NeutralKind::V, 1, &prec(), DEFAULT_EXACT_UNTIL).unwrap();
        assert_eq!(v.entries[0], Value::Exact(Quad::ratio(1, 6)));
        assert_eq!(v.entries[1], Value::Exact(Quad::ratio(5, 48)));
        assert!(lambda3_orbit(NeutralKind::U, 0, &prec(), 8).is_err());
    }

    #[test]
    fn exact_prefix_matches_reals() {
        let p = prec();
        for kind in [NeutralKind::U, NeutralKind::V] {
            let exact = lambda3_orbit(kind, 8, &p, 8).unwrap();
            let mut x = Real::from_rational(&kind.seed(), p.bits());
            for k in 1..=8 {
                x = step_real(kind, &x);
                let e = exact.entries[k].to_real(p.bits());
                assert!(exact.entries[k].is_exact());
                assert!((e - &x).abs() < p.tolerance(), "{} at {k}", kind.name());
            }
            // switchover: exact through 3, real afterwards
            let mixed = lambda3_orbit(kind, 8, &p, 3).unwrap();
            assert!(mixed.entries[3].is_exact());
            assert!(!mixed.entries[4].is_exact());
            let d = mixed.entries[8].to_real(p.bits()) - exact.entries[8].to_real(p.bits());
            assert!(d.abs() < p.tolerance());
        }
    }

    #[test]
    fn positive_and_decreasing() {
        for kind in [NeutralKind::U, NeutralKind::V] {
            let o = lambda3_orbit(kind, 200, &prec(), 4).unwrap();
            let xs: Vec<Real> = o.entries.iter().map(|v| v.to_real(200)).collect();
            for w in xs.windows(2) {
                assert!(w[0] > w[1] && w[1].is_positive());
            }
        }
    }

    #[test]
    fn scaling_trend() {
        let bits = 96;
        // for v the doubling differences only start to shrink after k = 2000
        let ks = [2_000, 4_000, 8_000, 16_000, 32_000];
        for kind in [NeutralKind::U, NeutralKind::V] {
            let s = scaled_at(kind, &ks, bits);
            let sixth = Real::ratio(1, 6, bits);
            let devs: Vec<Real> = s.iter().map(|x| (x.clone() - &sixth).abs()).collect();
            for w in devs.windows(2) {
                assert!(w[1] < w[0]);
            }
            let diffs: Vec<Real> = s.windows(2).map(|w| (w[1].clone() - &w[0]).abs()).collect();
            for w in diffs.windows(2) {
                assert!(w[1] < w[0]);
            }
        }
    }

    #[test]
    fn scaling_sequence_shape() {
        let pts = sqrtk_scaling(NeutralKind::U, 250, 100, &prec()).unwrap();
        let ks: Vec<usize> = pts.iter().map(|p| p.k).collect();
        assert_eq!(ks, vec![100, 200, 250]);
        assert!(sqrtk_scaling(NeutralKind::U, 99, 10, &prec()).is_err());
    }

    #[test]
    fn extrapolation_is_exact_on_polynomials() {
        let bits = 128;
        let pts: Vec<(Real, Real)> = (1..=4)
            .map(|i| {
                let h = Real::ratio(1, i, bits);
                let a = Real::from_i64(3, bits) + h.clone() * Real::from_i64(2, bits) - h.sqr();
                (h, a)
            })
            .collect();
        let l = extrapolate(&pts).unwrap();
        assert!((l - Real::from_i64(3, bits)).abs() < Real::pow10(-30, bits));
        // the hook runs on the orbit without asserting any limit
        let r = richardson(NeutralKind::V, &[100, 200, 400], bits, |k, x| {
            Real::from_i64(k as i64, bits).sqrt() * x
        })
        .unwrap();
        assert!(r.is_finite());
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("u".parse::<NeutralKind>().unwrap(), NeutralKind::U);
        assert!("w".parse::<NeutralKind>().is_err());
    }
}
