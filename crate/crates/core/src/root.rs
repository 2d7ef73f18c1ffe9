//! Safeguarded Newton iteration on a sign-changing bracket.

use crate::error::{HupError, Result};

/// Finds `t ∈ [lo, hi]` with `|f(t)| ≤ ftol`, given that `f(lo)` and `f(hi)`
/// differ in sign (or one of them is already within tolerance).
///
/// Newton steps are taken from the current iterate when they stay inside the
/// bracket and at least halve the bracket width; otherwise the step falls
/// back to bisection. The bracket always shrinks.
pub fn newton_bisect<F, D>(f: F, df: D, mut lo: f64, mut hi: f64, ftol: f64, max_iter: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo.abs() <= ftol {
        return Ok(lo);
    }
    if f_hi.abs() <= ftol {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(HupError::RootNotFound(format!(
            "no sign change on [{lo}, {hi}]: f = {f_lo}, {f_hi}"
        )));
    }

    let mut t = 0.5 * (lo + hi);
    for _ in 0..max_iter {
        let ft = f(t);
        if ft.abs() <= ftol {
            return Ok(t);
        }
        if ft.signum() == f_lo.signum() {
            lo = t;
            f_lo = ft;
        } else {
            hi = t;
        }
        if hi - lo <= f64::EPSILON * t.abs().max(1.0) {
            // bracket exhausted at double precision
            return Ok(t);
        }
        let slope = df(t);
        let newton = t - ft / slope;
        let width = hi - lo;
        t = if slope != 0.0 && newton > lo && newton < hi && (newton - t).abs() < 0.5 * width {
            newton
        } else {
            0.5 * (lo + hi)
        };
    }
    Err(HupError::RootNotFound(format!(
        "no convergence after {max_iter} iterations on [{lo}, {hi}]"
    )))
}
