//! Values that stay exact while the arithmetic allows it, and parsers for
//! the textual forms accepted on the command line.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numerics::{Complex, Quad, Real};

/// An exact quadratic-field element or a floating-point approximation.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(Quad),
    Approx(Real),
}

impl Value {
    pub fn to_real(&self, bits: usize) -> Real {
        match self {
            Value::Exact(q) => q.to_real(bits),
            Value::Approx(r) => r.with_bits(bits),
        }
    }

    pub fn exact(&self) -> Option<&Quad> {
        match self {
            Value::Exact(q) => Some(q),
            Value::Approx(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }
}

impl From<Quad> for Value {
    fn from(q: Quad) -> Self {
        Value::Exact(q)
    }
}

impl From<Real> for Value {
    fn from(r: Real) -> Self {
        Value::Approx(r)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(q) => write!(f, "{q}"),
            Value::Approx(r) => write!(f, "{r}"),
        }
    }
}

/// Parses `7`, `-3/4`, `1.25`, `-2.5e-3` as an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if (int.is_empty() && frac.is_empty())
        || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}0").parse::<BigInt>().map_err(|_| bad())? / 10;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10u32);
    let mut q = if scale >= 0 {
        BigRational::from_integer(digits * ten.pow(scale as u32))
    } else {
        BigRational::new(digits, ten.pow(scale.unsigned_abs()))
    };
    if neg {
        q = -q;
    }
    Ok(q)
}

/// Parses a sum of rational terms and multiples of `phi` / `psi`, e.g.
/// `17/11+2/11*phi`, `2-1/2*phi`, `psi`, `0.5`.
pub fn parse_exact(s: &str) -> Result<Quad> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::InvalidInput("empty value".into()));
    }
    let mut acc = Quad::int(0);
    for (neg, term) in split_terms(&s) {
        let q = parse_term(term)?;
        let q = if neg { -q } else { q };
        acc = acc.checked_add(&q)?;
    }
    Ok(acc)
}

fn split_terms(s: &str) -> Vec<(bool, &str)> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut start = 0;
    let mut neg = false;
    for i in 0..=bytes.len() {
        let at_sign = i < bytes.len()
            && (bytes[i] == b'+' || bytes[i] == b'-')
            && !(i > 0 && matches!(bytes[i - 1], b'e' | b'E' | b'*' | b'/'));
        if i == bytes.len() || at_sign {
            if i > start {
                out.push((neg, &s[start..i]));
            }
            if i < bytes.len() {
                neg = bytes[i] == b'-';
                start = i + 1;
            }
        }
    }
    out
}

fn parse_term(term: &str) -> Result<Quad> {
    let symbol = |name: &str| match name {
        "phi" => Some(Quad::phi()),
        "psi" => Some(Quad::psi()),
        _ => None,
    };
    if let Some(q) = symbol(term) {
        return Ok(q);
    }
    if let Some((coef, name)) = term.rsplit_once('*') {
        let sym = symbol(name)
            .ok_or_else(|| Error::InvalidInput(format!("unknown symbol {name:?}")))?;
        let c = parse_rational(coef)?;
        return Ok(Quad::rational(c) * sym);
    }
    Ok(Quad::rational(parse_rational(term)?))
}

/// Parses a complex number written as `re`, `re+im*i`, `re-im*i`, `im*i`
/// or `i`, with rational parts.
pub fn parse_complex(s: &str, bits: usize) -> Result<Complex> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut re = BigRational::zero();
    let mut im = BigRational::zero();
    for (neg, term) in split_terms(&s) {
        let sign = if neg { -BigRational::one() } else { BigRational::one() };
        if term == "i" {
            im += sign;
        } else if let Some(c) = term.strip_suffix("*i").or_else(|| term.strip_suffix('i')) {
            im += sign * parse_rational(c)?;
        } else {
            re += sign * parse_rational(term)?;
        }
    }
    Ok(Complex::new(
        Real::from_rational(&re, bits),
        Real::from_rational(&im, bits),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rationals_and_decimals() {
        assert_eq!(parse_rational("3/2").unwrap(), q(3, 2));
        assert_eq!(parse_rational("-1/4").unwrap(), q(-1, 4));
        assert_eq!(parse_rational("0.125").unwrap(), q(1, 8));
        assert_eq!(parse_rational("-2.5e-3").unwrap(), q(-1, 400));
        assert_eq!(parse_rational("12e2").unwrap(), q(1200, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn exact_forms_round_trip() {
        for s in ["17/11+2/11*phi", "2-1/2*phi", "phi", "-psi", "13/8", "18/7-1/7*psi"] {
            assert_eq!(parse_exact(s).unwrap().exact_form(), s);
        }
        assert_eq!(parse_exact("1+phi").unwrap(), &Quad::phi() * &Quad::phi());
        assert!(parse_exact("phi+psi").is_err());
        assert!(parse_exact("2*tau").is_err());
    }

    #[test]
    fn complex_forms() {
        let z = parse_complex("3/2-1/2*i", 128).unwrap();
        assert_eq!(z.re, Real::ratio(3, 2, 128));
        assert_eq!(z.im, Real::ratio(-1, 2, 128));
        let w = parse_complex("i", 128).unwrap();
        assert!(w.re.is_zero());
        assert_eq!(w.im, Real::one(128));
        let v = parse_complex("8/5+1/5i", 128).unwrap();
        assert_eq!(v.im, Real::ratio(1, 5, 128));
    }
}
