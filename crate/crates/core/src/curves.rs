//! Measures on the exponential curve `Γ = {(t, e^{t²})}` and the surface
//! `x_3 = e^{u_1²} + e^{u_2²}`.
//!
//! For `dμ = g(t) dt` on `Γ`,
//!
//! ```text
//! μ̂(x, y) = ∫ e^{-iπ(xt + y e^{t²})} g(t) dt.
//! ```
//!
//! Along the line `y = cx` the phase is `π c x h_c(t) - πx/(4c)` with
//! `h_c(t) = e^{t²} + t/c + 1/(4c²)`, a strictly convex function. The
//! substitution `u² = h_c(t)` (right branch for `u > 0`, left branch for
//! `u < 0`) turns the integral into `∫ e^{-iπcxu²} ψ_c(u) du`, which vanishes
//! for every `x` exactly when `ψ_c` is odd.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::config::Tolerances;
use crate::error::{HupError, Result};
use crate::measures::{Density, DensityAtom};
use crate::quadrature::{phased, Estimate, OscillationBudget};
use crate::root::newton_bisect;

/// Default truncation radius: densities on the curve vanish for `|t| > 2.5`.
pub const DEFAULT_SUPPORT_RADIUS: f64 = 2.5;

const MAX_ROOT_ITER: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `t ≤ t_min`, where `h_c` decreases.
    Left,
    /// `t ≥ t_min`, where `h_c` increases.
    Right,
}

/// `h_c(t) = (t + 1/(2c))² + e^{t²} - t²` together with its minimiser.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HcFunction {
    c: f64,
    t_min: f64,
    h_min: f64,
}

impl HcFunction {
    pub fn new(c: f64) -> Result<Self> {
        if c == 0.0 || !c.is_finite() {
            return Err(HupError::Domain(format!("c must be a nonzero real, got {c}")));
        }
        let slope = |t: f64| 2.0 * t * (t * t).exp() + 1.0 / c;
        let curvature = |t: f64| (2.0 + 4.0 * t * t) * (t * t).exp();
        // the minimiser has the sign of -c
        let dir = -c.signum();
        let mut far = dir;
        while slope(far).signum() != dir {
            far *= 2.0;
        }
        let (lo, hi) = if dir < 0.0 { (far, 0.0) } else { (0.0, far) };
        let ftol = 1e-14 * (1.0 / c.abs()).max(1.0);
        let t_min = newton_bisect(slope, curvature, lo, hi, ftol, MAX_ROOT_ITER)?;
        let h = Self { c, t_min, h_min: 0.0 };
        let h_min = h.eval(t_min);
        if h_min.is_nan() || h_min <= 0.0 {
            return Err(HupError::Construction(format!(
                "h_c has non-positive minimum {h_min} for c = {c}"
            )));
        }
        Ok(Self { h_min, ..h })
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn t_min(&self) -> f64 {
        self.t_min
    }

    pub fn h_min(&self) -> f64 {
        self.h_min
    }

    /// `e^{t²} + t/c + 1/(4c²)`.
    pub fn eval(&self, t: f64) -> f64 {
        (t * t).exp() + t / self.c + 0.25 / (self.c * self.c)
    }

    /// `(t + 1/(2c))² + e^{t²} - t²`, the unsimplified form.
    pub fn eval_expanded(&self, t: f64) -> f64 {
        let s = t + 0.5 / self.c;
        s * s + (t * t).exp() - t * t
    }

    /// `2t e^{t²} + 1/c`.
    pub fn derivative(&self, t: f64) -> f64 {
        2.0 * t * (t * t).exp() + 1.0 / self.c
    }

    /// Largest `|h_c'|` on `[a, b]`.
    fn derivative_bound(&self, a: f64, b: f64) -> f64 {
        let m = a.abs().max(b.abs());
        2.0 * m * (m * m).exp() + 1.0 / self.c.abs()
    }

    /// The unique `t` on `branch` with `h_c(t) = v`.
    pub fn inverse(&self, v: f64, branch: Branch, tol: &Tolerances) -> Result<f64> {
        let ftol = tol.inversion * v.abs().max(1.0);
        if v < self.h_min - ftol {
            return Err(HupError::BelowMinimum {
                value: v,
                minimum: self.h_min,
            });
        }
        if v <= self.h_min {
            return Ok(self.t_min);
        }
        let dir = match branch {
            Branch::Left => -1.0,
            Branch::Right => 1.0,
        };
        let mut step = 1.0;
        while self.eval(self.t_min + dir * step) < v {
            step *= 2.0;
        }
        let far = self.t_min + dir * step;
        let (lo, hi) = if dir < 0.0 { (far, self.t_min) } else { (self.t_min, far) };
        newton_bisect(|t| self.eval(t) - v, |t| self.derivative(t), lo, hi, ftol, MAX_ROOT_ITER)
    }
}

pub fn hc_eval(h: &HcFunction, t: f64) -> f64 {
    h.eval(t)
}

pub fn hc_inverse(h: &HcFunction, v: f64, branch: Branch, tol: &Tolerances) -> Result<f64> {
    h.inverse(v, branch, tol)
}

#[derive(Debug, Clone, PartialEq)]
enum Representation {
    Atoms(Density),
    /// `g(t) = φ(√h_c(t)) h_c'(t) / (2√h_c(t))`.
    HcWitness { hc: HcFunction, phi: DensityAtom },
}

/// Density `g` of a measure `g(t) dt` on the curve, zero outside
/// `[support.0, support.1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveDensity {
    repr: Representation,
    support: (f64, f64),
    breakpoints: Vec<f64>,
}

impl CurveDensity {
    /// Restricts an atom mixture to `|t| ≤ radius`.
    pub fn from_density(density: Density, radius: f64) -> Result<Self> {
        if radius.is_nan() || radius <= 0.0 {
            return Err(HupError::Domain(format!("support radius must be positive, got {radius}")));
        }
        let (lo, hi) = match density.support() {
            Some((lo, hi)) if hi > -radius && lo < radius => (lo.max(-radius), hi.min(radius)),
            _ => (0.0, 0.0),
        };
        let breakpoints = density
            .breakpoints()
            .into_iter()
            .filter(|&b| b > lo && b < hi)
            .collect();
        Ok(Self {
            repr: Representation::Atoms(density),
            support: (lo, hi),
            breakpoints,
        })
    }

    pub fn support(&self) -> (f64, f64) {
        self.support
    }

    /// Support radius `T = max(|lo|, |hi|)`.
    pub fn radius(&self) -> f64 {
        self.support.0.abs().max(self.support.1.abs())
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        if t < self.support.0 || t > self.support.1 {
            return Complex64::new(0.0, 0.0);
        }
        match &self.repr {
            Representation::Atoms(d) => d.eval(t),
            Representation::HcWitness { hc, phi } => {
                let h = hc.eval(t);
                let root = h.sqrt();
                phi.eval(root) * (hc.derivative(t) / (2.0 * root))
            }
        }
    }

    /// Integration partition: support ends plus interior kinks.
    pub fn partition(&self) -> Vec<f64> {
        let mut pts = vec![self.support.0];
        pts.extend(self.breakpoints.iter().copied());
        pts.push(self.support.1);
        pts
    }
}

/// Builds `g(t) = φ(√h_c(t)) h_c'(t) / (2√h_c(t))` from an odd profile `φ`
/// centred at 0 whose positive lobe starts at least `tol.support_gap` beyond
/// `√h_min`. The resulting `μ̂` vanishes on the line `y = cx`.
pub fn construct_single_line_witness(c: f64, phi: &DensityAtom, tol: &Tolerances) -> Result<CurveDensity> {
    let hc = HcFunction::new(c)?;
    let offset = match phi.kind() {
        crate::measures::AtomKind::OddBump { offset } if phi.center() == 0.0 => offset,
        _ => {
            return Err(HupError::Construction(
                "witness profile must be an odd bump centred at 0".into(),
            ))
        }
    };
    let inner = offset - 0.5 * phi.width();
    let outer = offset + 0.5 * phi.width();
    let floor = hc.h_min().sqrt() + tol.support_gap;
    if inner < floor {
        return Err(HupError::Construction(format!(
            "profile starts at {inner}, needs ≥ √h_min + δ = {floor}"
        )));
    }
    let inv = |u: f64, b: Branch| hc.inverse(u * u, b, tol);
    let lo = inv(outer, Branch::Left)?;
    let hi = inv(outer, Branch::Right)?;
    // left-branch images decrease as u grows
    let breakpoints = vec![
        inv(offset, Branch::Left)?,
        inv(inner, Branch::Left)?,
        inv(inner, Branch::Right)?,
        inv(offset, Branch::Right)?,
    ];
    Ok(CurveDensity {
        repr: Representation::HcWitness { hc, phi: *phi },
        support: (lo, hi),
        breakpoints,
    })
}

fn substituted<F>(value: F, hc: &HcFunction, u: f64, tol: &Tolerances) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    if u.abs() < hc.h_min().sqrt() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let branch = if u > 0.0 { Branch::Right } else { Branch::Left };
    let t = hc.inverse(u * u, branch, tol)?;
    let slope = hc.derivative(t);
    if slope == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(value(t) * (2.0 * u / slope))
}

/// `ψ_c(u) = g(h_c^{-1}(u²)) · 2u / h_c'(h_c^{-1}(u²))`, zero for `|u| < √h_min`.
pub fn psi_c(g: &CurveDensity, c: f64, u: f64, tol: &Tolerances) -> Result<Complex64> {
    let hc = HcFunction::new(c)?;
    substituted(|t| g.eval(t), &hc, u, tol)
}

/// `φ_c`: the same substitution applied to `χ(t) = e^{-iπ d e^{t²}} g(t)`;
/// oddness of `φ_c` is equivalent to `μ̂` vanishing on `y = cx + d`.
pub fn phi_c(g: &CurveDensity, c: f64, d: f64, u: f64, tol: &Tolerances) -> Result<Complex64> {
    let hc = HcFunction::new(c)?;
    substituted(
        |t| Complex64::from_polar(1.0, -PI * d * (t * t).exp()) * g.eval(t),
        &hc,
        u,
        tol,
    )
}

/// `μ̂(x, y) = ∫ e^{-iπ(xt + y e^{t²})} g(t) dt` by phase-budgeted panels.
pub fn exp_curve_ft(
    g: &CurveDensity,
    x: f64,
    y: f64,
    budget: &OscillationBudget,
    tol: &Tolerances,
) -> Result<Estimate> {
    let radius = g.radius();
    budget.check(x.abs() * radius + y.abs() * (radius * radius).exp())?;
    let (lo, hi) = g.support();
    if hi <= lo {
        return Ok(Estimate::ZERO);
    }
    phased(
        |t| g.eval(t) * Complex64::from_polar(1.0, -PI * (x * t + y * (t * t).exp())),
        |a, b| {
            let m = a.abs().max(b.abs());
            PI * (x.abs() + 2.0 * y.abs() * m * (m * m).exp())
        },
        &g.partition(),
        tol.quadrature_abs,
    )
}

/// `∫ e^{-iπ c x h_c(t)} g(t) dt`.
pub fn hc_phase_integral(
    g: &CurveDensity,
    c: f64,
    x: f64,
    budget: &OscillationBudget,
    tol: &Tolerances,
) -> Result<Estimate> {
    let hc = HcFunction::new(c)?;
    let radius = g.radius();
    budget.check((c * x).abs() * hc.eval(radius).max(hc.eval(-radius)))?;
    let (lo, hi) = g.support();
    if hi <= lo {
        return Ok(Estimate::ZERO);
    }
    phased(
        |t| g.eval(t) * Complex64::from_polar(1.0, -PI * c * x * hc.eval(t)),
        |a, b| PI * (c * x).abs() * hc.derivative_bound(a, b),
        &g.partition(),
        tol.quadrature_abs,
    )
}

/// Transform of `g(u) = τ(u_1) h(u_2)` on `x_3 = e^{u_1²} + e^{u_2²}` at
/// `x = (x_1, x_2, x_3)`:
///
/// ```text
/// μ̂(x) = ∫∫ e^{-iπ(x_1u_1 + x_2u_2 + x_3(e^{u_1²} + e^{u_2²}))} τ(u_1) h(u_2) du
/// ```
///
/// The tensor-product rule on a separable integrand factors into the two
/// one-dimensional curve transforms, which is how it is evaluated.
pub fn surface_ft(
    tau: &CurveDensity,
    h: &CurveDensity,
    x: [f64; 3],
    budget: &OscillationBudget,
    tol: &Tolerances,
) -> Result<Estimate> {
    let first = exp_curve_ft(tau, x[0], x[2], budget, tol)?;
    let second = exp_curve_ft(h, x[1], x[2], budget, tol)?;
    Ok(Estimate {
        value: first.value * second.value,
        error: first.value.norm() * second.error + second.value.norm() * first.error + first.error * second.error,
    })
}
