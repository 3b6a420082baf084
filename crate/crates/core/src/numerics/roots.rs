use crate::error::{Error, Result};
use crate::numerics::Real;

/// Safeguarded Newton iteration for a monotone function on `[lo, hi]`.
///
/// `eval` returns the function value and derivative. The root must lie in
/// the bracket; `increasing` gives the direction of monotonicity so the
/// endpoints never have to be evaluated. A Newton step that leaves the
/// current bracket is replaced by bisection. Stops once a step is below
/// `tol` in absolute terms.
pub fn newton_bisect(
    mut eval: impl FnMut(&Real) -> Result<(Real, Real)>,
    lo: Real,
    hi: Real,
    increasing: bool,
    guess: Real,
    tol: &Real,
    max_iter: usize,
) -> Result<Real> {
    let (mut lo, mut hi) = (lo, hi);
    let mut x = if guess > lo && guess < hi {
        guess
    } else {
        (&lo + &hi).div_int(2)
    };
    for _ in 0..max_iter {
        let (fx, dfx) = eval(&x)?;
        if fx.is_zero() {
            return Ok(x);
        }
        if fx.is_positive() == increasing {
            hi = x.clone();
        } else {
            lo = x.clone();
        }
        let newton = if dfx.is_zero() || !dfx.is_finite() {
            None
        } else {
            let cand = &x - &(&fx / &dfx);
            (cand > lo && cand < hi).then_some(cand)
        };
        let next = newton.unwrap_or_else(|| (&lo + &hi).div_int(2));
        if (&next - &x).abs() <= *tol || (&hi - &lo) <= *tol {
            return Ok(next);
        }
        x = next;
    }
    Err(Error::NonConvergence {
        what: "newton-bisection root search".into(),
        iterations: max_iter,
    })
}
