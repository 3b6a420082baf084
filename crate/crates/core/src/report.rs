use serde::{Serialize, Serializer};

use crate::numerics::Real;

/// One named pass/fail finding.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "short_real")]
    pub residual: Option<Real>,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
            residual: None,
        }
    }

    pub fn with_residual(mut self, r: Real) -> Check {
        self.residual = Some(r);
        self
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

/// Largest recorded residual, if any check carries one.
pub fn max_residual(checks: &[Check]) -> Option<Real> {
    checks
        .iter()
        .filter_map(|c| c.residual.as_ref())
        .fold(None, |acc: Option<Real>, r| match acc {
            Some(a) if a >= *r => Some(a),
            _ => Some(r.clone()),
        })
}

pub(crate) fn short_real<S: Serializer>(r: &Option<Real>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_decimal(3)),
        None => s.serialize_none(),
    }
}
