//! Gauss–Kronrod quadrature for complex integrands.
//!
//! [`adaptive`] is a global bisection scheme on the 7/15-point pair and
//! serves as the reference integrator for closed-form transforms.
//! [`phased`] integrates `F(t)` whose oscillation is driven by a known
//! phase: panels are sized so the phase advances by at most `π/4` across
//! each, then refined locally until the Kronrod/Gauss discrepancy meets the
//! panel's share of the error target.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{HupError, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Integral value with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: Complex64,
    pub error: f64,
}

impl Estimate {
    pub const ZERO: Estimate = Estimate {
        value: Complex64::new(0.0, 0.0),
        error: 0.0,
    };
}

/// One G7/K15 application on `[a, b]`; the error is `|K15 - G7|`.
pub fn gauss_kronrod15<F>(f: &F, a: f64, b: f64) -> Estimate
where
    F: Fn(f64) -> Complex64 + ?Sized,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    Estimate {
        value: kronrod * half,
        error: ((kronrod - gauss) * half).norm(),
    }
}

/// Globally adaptive integration of `f` over `[a, b]`, splitting the worst
/// interval until the summed error is at most `abs_tol`.
pub fn adaptive<F>(f: F, a: f64, b: f64, abs_tol: f64, max_intervals: usize) -> Result<Estimate>
where
    F: Fn(f64) -> Complex64,
{
    adaptive_with_breaks(f, &[a, b], abs_tol, max_intervals)
}

/// As [`adaptive`], starting from the partition given by sorted `points`
/// (so known kinks or jumps sit on interval ends).
pub fn adaptive_with_breaks<F>(f: F, points: &[f64], abs_tol: f64, max_intervals: usize) -> Result<Estimate>
where
    F: Fn(f64) -> Complex64,
{
    let mut intervals: Vec<(f64, f64, Estimate)> = points
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| (w[0], w[1], gauss_kronrod15(&f, w[0], w[1])))
        .collect();
    loop {
        let total_error: f64 = intervals.iter().map(|iv| iv.2.error).sum();
        if total_error <= abs_tol {
            break;
        }
        if intervals.len() >= max_intervals {
            return Err(HupError::QuadratureFailed {
                estimate: total_error,
                target: abs_tol,
            });
        }
        let worst = intervals
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .2.error.total_cmp(&y.1 .2.error))
            .map(|(i, _)| i)
            .expect("at least one interval");
        let (a, b, _) = intervals.swap_remove(worst);
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            return Err(HupError::QuadratureFailed {
                estimate: total_error,
                target: abs_tol,
            });
        }
        intervals.push((a, mid, gauss_kronrod15(&f, a, mid)));
        intervals.push((mid, b, gauss_kronrod15(&f, mid, b)));
    }
    let value = intervals.iter().map(|iv| iv.2.value).sum();
    let error = intervals.iter().map(|iv| iv.2.error).sum();
    Ok(Estimate { value, error })
}

/// Limit on the phase span a single oscillatory integral may cover.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillationBudget {
    pub max_span: f64,
}

impl OscillationBudget {
    /// Covers `|x|, |y| ≤ 20` on `|t| ≤ 2.5` for the curve `y = e^{t^2}`.
    pub fn standard() -> Self {
        Self {
            max_span: 20.0 * (2.5 + 6.25f64.exp()),
        }
    }

    pub fn check(&self, span: f64) -> Result<()> {
        if span.is_nan() || span > self.max_span {
            return Err(HupError::BudgetExceeded {
                span,
                budget: self.max_span,
            });
        }
        Ok(())
    }
}

impl Default for OscillationBudget {
    fn default() -> Self {
        Self::standard()
    }
}

const MAX_PANEL_DEPTH: u32 = 40;
const PHASE_STEP: f64 = PI / 4.0;

/// Integrates `f` over the partition `points`, where `rate(a, b)` bounds
/// `|φ'(t)|` on `[a, b]` for the phase `φ` carried by `f`.
pub fn phased<F, R>(f: F, rate: R, points: &[f64], abs_tol: f64) -> Result<Estimate>
where
    F: Fn(f64) -> Complex64,
    R: Fn(f64, f64) -> f64,
{
    let length: f64 = points.windows(2).map(|w| (w[1] - w[0]).max(0.0)).sum();
    if length == 0.0 {
        return Ok(Estimate::ZERO);
    }
    let density = abs_tol / length;
    let mut total = Estimate::ZERO;
    for w in points.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b <= a {
            continue;
        }
        let mut t = a;
        while t < b {
            let h = panel_width(&rate, t, b);
            let end = if b - (t + h) <= 1e-12 * h { b } else { t + h };
            let est = refine(&f, t, end, density, 0)?;
            total.value += est.value;
            total.error += est.error;
            t = end;
        }
    }
    if total.error > abs_tol {
        return Err(HupError::QuadratureFailed {
            estimate: total.error,
            target: abs_tol,
        });
    }
    Ok(total)
}

fn panel_width<R: Fn(f64, f64) -> f64>(rate: &R, t: f64, b: f64) -> f64 {
    let mut h = b - t;
    for _ in 0..200 {
        let r = rate(t, t + h);
        if r * h <= PHASE_STEP {
            return h;
        }
        h = 0.99 * PHASE_STEP / r;
    }
    h
}

fn refine<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, density: f64, depth: u32) -> Result<Estimate> {
    let est = gauss_kronrod15(f, a, b);
    let target = density * (b - a);
    if est.error <= target || depth >= MAX_PANEL_DEPTH {
        return Ok(est);
    }
    let mid = 0.5 * (a + b);
    let left = refine(f, a, mid, density, depth + 1)?;
    let right = refine(f, mid, b, density, depth + 1)?;
    Ok(Estimate {
        value: left.value + right.value,
        error: left.error + right.error,
    })
}
