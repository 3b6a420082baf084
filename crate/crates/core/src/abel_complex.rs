//! Complex Abel functions of `1 + 1/z` built from branch-cut logarithms.
//!
//! `F_θ(z) = log_θ(K(z)) / log_θ(m)` with `K(z) = √5(z-φ)/(√5+z-φ)` and
//! `m = -1/(1+φ)`. `F_{+π/2}` solves `F(f(z)) = F(z) + 1` inside the disk
//! `|z - 1/2| < φ - 1/2`, `F_{-π/2}` outside it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{Complex, Precision, Quad, Real};

/// Logarithm cut along the ray at angle `theta`. Arguments are taken in
/// `(theta, theta + 2π]`, so the cut ray itself belongs to the top end.
#[derive(Clone, Debug)]
pub struct BranchCut {
    pub theta: Real,
    snap: Real,
}

impl BranchCut {
    pub fn new(theta: Real, prec: Precision) -> BranchCut {
        BranchCut {
            theta,
            snap: prec.snap_radius(),
        }
    }

    /// `theta = +π/2`.
    pub fn upper(prec: Precision) -> BranchCut {
        BranchCut::new(Real::pi(prec.bits()).div_int(2), prec)
    }

    /// `theta = -π/2`.
    pub fn lower(prec: Precision) -> BranchCut {
        BranchCut::new(-Real::pi(prec.bits()).div_int(2), prec)
    }

    /// Representative of `arg z` in `(theta, theta + 2π]`. Angles within the
    /// snap radius of the cut are put on the cut.
    pub fn arg(&self, z: &Complex) -> Result<Real> {
        let a = z
            .arg()
            .ok_or_else(|| Error::Singular("argument of zero".into()))?;
        let bits = a.bits().max(self.theta.bits());
        let two_pi = Real::pi(bits).mul_int(2);
        let turns = ((&a - &self.theta) / &two_pi).round_to_bigint();
        let mut v = &a - &(&two_pi * &Real::from_bigint(&turns, bits));
        // now v - theta is in [-π, π]; move into (0, 2π]
        let mut off = &v - &self.theta;
        if !off.is_positive() {
            v = &v + &two_pi;
            off = &off + &two_pi;
        }
        if off < self.snap || (&two_pi - &off) < self.snap {
            v = &self.theta + &two_pi;
        }
        Ok(v)
    }

    pub fn log(&self, z: &Complex) -> Result<Complex> {
        Ok(Complex::new(z.abs().ln(), self.arg(z)?))
    }
}

pub fn arg_theta(z: &Complex, cut: &BranchCut) -> Result<Real> {
    cut.arg(z)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DiskPosition {
    Inside,
    Boundary,
    Outside,
}

/// The disk `|z - 1/2| < φ - 1/2`, whose boundary passes through both
/// fixed points of `1 + 1/z`.
#[derive(Clone, Debug)]
pub struct DiskD {
    pub center: Real,
    pub radius: Real,
}

impl DiskD {
    pub fn new(bits: usize) -> DiskD {
        DiskD {
            center: Real::ratio(1, 2, bits),
            radius: (Quad::phi() - Quad::ratio(1, 2)).to_real(bits),
        }
    }

    pub fn position(&self, z: &Complex, snap: &Real) -> DiskPosition {
        let c = Complex::from_real(self.center.clone());
        let d = z.dist(&c) - &self.radius;
        if d.abs() < *snap {
            DiskPosition::Boundary
        } else if d.is_negative() {
            DiskPosition::Inside
        } else {
            DiskPosition::Outside
        }
    }

    /// Point at polar offset `(r, angle)` from the center.
    pub fn point(&self, r: &Real, angle: &Real) -> Complex {
        Complex::new(&self.center + &(r * &angle.cos()), r * &angle.sin())
    }
}

/// Golden-map Abel functions for one branch cut.
#[derive(Clone, Debug)]
pub struct AbelChart {
    prec: Precision,
    sqrt5: Real,
    phi: Real,
    multiplier: Real,
    disk: DiskD,
}

impl AbelChart {
    pub fn new(prec: Precision) -> AbelChart {
        let bits = prec.extended_bits();
        let phi = Quad::phi();
        AbelChart {
            prec,
            sqrt5: Quad::sqrt(5).to_real(bits),
            phi: phi.to_real(bits),
            multiplier: (-(Quad::int(1) / (&Quad::int(1) + &phi))).to_real(bits),
            disk: DiskD::new(bits),
        }
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    pub fn disk(&self) -> &DiskD {
        &self.disk
    }

    fn snap(&self) -> Real {
        self.prec.snap_radius()
    }

    /// `√5(z-φ)/(√5+z-φ)`, rejecting the zero `φ` and the pole `1-φ`.
    pub fn schroeder(&self, z: &Complex) -> Result<Complex> {
        let z = z.with_bits(self.prec.extended_bits());
        let y = &z - &Complex::from_real(self.phi.clone());
        let s5 = Complex::from_real(self.sqrt5.clone());
        let den = &s5 + &y;
        if y.abs() < self.snap() {
            return Err(Error::Singular("z = φ (zero of the Schröder function)".into()));
        }
        if den.abs() < self.snap() {
            return Err(Error::Singular("z = 1 - φ (pole of the Schröder function)".into()));
        }
        Ok(&(&s5 * &y) / &den)
    }

    /// `F_θ(z)`.
    pub fn abel(&self, z: &Complex, cut: &BranchCut) -> Result<Complex> {
        let k = self.schroeder(z)?;
        let num = cut.log(&k)?;
        let den = cut.log(&Complex::from_real(self.multiplier.clone()))?;
        Ok((&num / &den).with_bits(self.prec.bits()))
    }

    /// `F_θ(f(z)) - F_θ(z) - 1`. Points on or near the boundary of the disk
    /// are rejected.
    pub fn residual(&self, z: &Complex, cut: &BranchCut) -> Result<Complex> {
        if self.disk.position(&z.with_bits(self.prec.extended_bits()), &self.snap())
            == DiskPosition::Boundary
        {
            return Err(Error::domain(
                "Abel residual argument",
                "within the snap radius of the disk boundary",
            ));
        }
        let bits = self.prec.extended_bits();
        let z = z.with_bits(bits);
        if z.abs() < self.snap() {
            return Err(Error::DivisionByZero);
        }
        let fz = &Complex::one(bits) + &z.recip();
        let r = &(&self.abel(&fz, cut)? - &self.abel(&z, cut)?) - &Complex::one(self.prec.bits());
        Ok(r)
    }

    /// `F_{+π/2}(z) - F_{-π/2}(z)`.
    pub fn branch_jump(&self, z: &Complex) -> Result<Complex> {
        let up = self.abel(z, &BranchCut::upper(self.prec))?;
        let down = self.abel(z, &BranchCut::lower(self.prec))?;
        Ok(&up - &down)
    }

    /// `2π/(π + i ln(1+φ))`, the jump across the cut at `z_{3/2}`.
    pub fn expected_jump(&self) -> Complex {
        let bits = self.prec.bits();
        let pi = Real::pi(bits);
        let l = (Quad::int(1) + Quad::phi()).to_real(bits).ln();
        &Complex::from_real(pi.mul_int(2)) / &Complex::new(pi, l)
    }
}

pub fn abel_f(z: &Complex, cut: &BranchCut, prec: Precision) -> Result<Complex> {
    AbelChart::new(prec).abel(z, cut)
}

pub fn abel_residual(z: &Complex, cut: &BranchCut, prec: Precision) -> Result<Complex> {
    AbelChart::new(prec).residual(z, cut)
}

pub fn branch_jump(z: &Complex, prec: Precision) -> Result<Complex> {
    AbelChart::new(prec).branch_jump(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prec() -> Precision {
        Precision::default()
    }

    fn c(re: (i64, i64), im: (i64, i64)) -> Complex {
        let b = prec().bits();
        Complex::new(Real::ratio(re.0, re.1, b), Real::ratio(im.0, im.1, b))
    }

    fn small(z: &Complex, k: i32) -> bool {
        z.abs() < Real::pow10(-k, z.bits())
    }

    #[test]
    fn bullet_arguments() {
        let up = BranchCut::upper(prec());
        let down = BranchCut::lower(prec());
        let pi = Real::pi(prec().bits());
        let two_pi = pi.mul_int(2);
        let zero = Real::zero(prec().bits());
        assert_eq!(up.arg(&c((1, 2), (0, 1))).unwrap(), two_pi);
        assert_eq!(up.arg(&c((3, 1), (0, 1))).unwrap(), two_pi);
        assert_eq!(up.arg(&c((-1, 2), (0, 1))).unwrap(), pi);
        assert_eq!(up.arg(&c((-1, 1), (0, 1))).unwrap(), pi);
        assert_eq!(down.arg(&c((2, 1), (0, 1))).unwrap(), zero);
        assert_eq!(down.arg(&c((3, 2), (0, 1))).unwrap(), zero);
        assert_eq!(down.arg(&c((-2, 1), (0, 1))).unwrap(), pi);
        assert_eq!(down.arg(&c((1, 2), (0, 1))).unwrap(), zero);
        assert!(up.arg(&c((0, 1), (0, 1))).is_err());
    }

    #[test]
    fn cut_ray_belongs_to_the_top_end() {
        let up = BranchCut::upper(prec());
        let pi = Real::pi(prec().bits());
        // +i lies on the cut of theta = π/2
        assert_eq!(up.arg(&c((0, 1), (1, 1))).unwrap(), pi.mul_int(5).div_int(2));
        assert_eq!(up.arg(&c((0, 1), (-1, 1))).unwrap(), pi.mul_int(3).div_int(2));
        let down = BranchCut::lower(prec());
        assert_eq!(down.arg(&c((0, 1), (-1, 1))).unwrap(), pi.mul_int(3).div_int(2));
    }

    #[test]
    fn residual_inside_and_outside() {
        let chart = AbelChart::new(prec());
        let up = BranchCut::upper(prec());
        let down = BranchCut::lower(prec());
        assert!(small(&chart.residual(&c((1, 1), (0, 1)), &up).unwrap(), 45));
        assert!(small(&chart.residual(&c((3, 1), (0, 1)), &down).unwrap(), 45));
        assert!(small(&chart.residual(&c((1, 3), (1, 2)), &up).unwrap(), 45));
        // 2 is outside the disk, so the upper cut fails there
        let r = chart.residual(&c((2, 1), (0, 1)), &up).unwrap();
        assert!(!small(&r, 5));
    }

    #[test]
    fn singular_points_are_rejected() {
        let chart = AbelChart::new(prec());
        let up = BranchCut::upper(prec());
        let bits = prec().bits();
        let phi = Complex::from_real(Quad::phi().to_real(bits));
        let one_minus = Complex::from_real((Quad::int(1) - Quad::phi()).to_real(bits));
        assert!(chart.abel(&phi, &up).is_err());
        assert!(chart.abel(&one_minus, &up).is_err());
        // z_{1/2} is on the boundary
        assert!(chart.residual(&c((3, 2), (-1, 2)), &up).is_err());
    }

    #[test]
    fn branch_jump_values() {
        let chart = AbelChart::new(prec());
        let j = chart.branch_jump(&c((8, 5), (1, 5))).unwrap();
        assert!(small(&(&j - &chart.expected_jump()), 45));
        let j = chart.branch_jump(&c((3, 2), (-1, 2))).unwrap();
        assert!(small(&j, 45));
        // at 2 the cuts differ by a full turn of the numerator's argument
        let j = chart.branch_jump(&c((2, 1), (0, 1))).unwrap();
        assert!(small(&(&j - &chart.expected_jump()), 45));
    }

    #[test]
    fn abel_matches_schroeder_iterates() {
        let chart = AbelChart::new(prec());
        let up = BranchCut::upper(prec());
        let f1 = chart.abel(&c((1, 1), (0, 1)), &up).unwrap();
        let f_half = chart.abel(&c((3, 2), (-1, 2)), &up).unwrap();
        let f_3half = chart.abel(&c((8, 5), (1, 5)), &up).unwrap();
        let half = Complex::from_real(Real::ratio(1, 2, prec().bits()));
        let three_half = Complex::from_real(Real::ratio(3, 2, prec().bits()));
        assert!(small(&(&(&f_half - &f1) - &half), 45));
        assert!(small(&(&(&f_3half - &f1) - &three_half), 45));
    }

    #[test]
    fn disk_boundary_points() {
        let bits = prec().extended_bits();
        let d = DiskD::new(bits);
        let snap = prec().snap_radius();
        let r = &d.radius;
        for z in [
            Complex::from_real((Quad::int(1) - Quad::phi()).to_real(bits)),
            Complex::from_real(Quad::phi().to_real(bits)),
            Complex::new(Real::ratio(1, 2, bits), r.clone()),
            Complex::new(Real::ratio(3, 2, bits), Real::ratio(-1, 2, bits)),
            Complex::new(Real::ratio(8, 5, bits), Real::ratio(1, 5, bits)),
        ] {
            assert_eq!(d.position(&z, &snap), DiskPosition::Boundary);
        }
        assert_eq!(
            d.position(&Complex::from_real(Real::one(bits)), &snap),
            DiskPosition::Inside
        );
    }
}
