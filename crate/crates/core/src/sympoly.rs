//! Elementary and complete homogeneous symmetric polynomials evaluated at
//! complex points.
//!
//! Evaluation goes through the one-variable-at-a-time recursions
//!
//! ```text
//! h_k(x_1..x_s) = h_k(x_1..x_{s-1}) + x_s · h_{k-1}(x_1..x_s)
//! e_k(x_1..x_s) = e_k(x_1..x_{s-1}) + x_s · e_{k-1}(x_1..x_{s-1})
//! ```
//!
//! which cost `O(k·s)` and never expand monomials. Conventions:
//! `h_0 = e_0 = 1` for every tuple (including the empty one), `h_k(∅) = 0`
//! for `k > 0`, and `e_k = 0` whenever `k` exceeds the arity.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::config::Tolerances;
use crate::error::{HupError, Result};

/// Ordered tuple of points on (or within tolerance of) the unit circle,
/// typically `a_j = e^{iπη_j}`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnimodularTuple {
    values: Vec<Complex64>,
}

impl UnimodularTuple {
    /// Builds `a_j = e^{iπη_j}` from real phases.
    pub fn from_phases(etas: &[f64]) -> Self {
        Self {
            values: etas.iter().map(|&eta| unit_phase(eta)).collect(),
        }
    }

    /// Wraps explicit complex values, checking `| |a_j| - 1 | ≤ tol.unimodular`.
    pub fn from_values(values: Vec<Complex64>, tol: &Tolerances) -> Result<Self> {
        if let Some(bad) = values
            .iter()
            .find(|a| (a.norm() - 1.0).abs() > tol.unimodular)
        {
            return Err(HupError::Domain(format!(
                "value {bad} is not unimodular (|a| = {})",
                bad.norm()
            )));
        }
        Ok(Self { values })
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Smallest pairwise distance `|a_i - a_j|`; `+∞` for fewer than two nodes.
    pub fn min_gap(&self) -> f64 {
        min_pairwise_gap(&self.values)
    }

    pub fn into_vec(self) -> Vec<Complex64> {
        self.values
    }
}

impl AsRef<[Complex64]> for UnimodularTuple {
    fn as_ref(&self) -> &[Complex64] {
        &self.values
    }
}

/// `e^{iπη}`.
pub fn unit_phase(eta: f64) -> Complex64 {
    Complex64::from_polar(1.0, PI * eta)
}

pub(crate) fn min_pairwise_gap(xs: &[Complex64]) -> f64 {
    let mut gap = f64::INFINITY;
    for (i, a) in xs.iter().enumerate() {
        for b in &xs[i + 1..] {
            gap = gap.min((a - b).norm());
        }
    }
    gap
}

/// A labelled polynomial value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyValue {
    pub value: Complex64,
    pub degree: usize,
    pub arity: usize,
}

impl PolyValue {
    pub fn complete(k: usize, xs: &[Complex64]) -> Self {
        Self {
            value: complete_homogeneous(k, xs),
            degree: k,
            arity: xs.len(),
        }
    }

    pub fn elementary(k: usize, xs: &[Complex64]) -> Self {
        Self {
            value: elementary_symmetric(k, xs),
            degree: k,
            arity: xs.len(),
        }
    }
}

/// `[h_0(xs), h_1(xs), …, h_k(xs)]`.
pub fn complete_homogeneous_table(k: usize, xs: &[Complex64]) -> Vec<Complex64> {
    let mut h = vec![Complex64::new(0.0, 0.0); k + 1];
    h[0] = Complex64::new(1.0, 0.0);
    for &x in xs {
        for j in 1..=k {
            let prev = h[j - 1];
            h[j] += x * prev;
        }
    }
    h
}

/// `h_k(xs)`, the sum of all degree-`k` monomials in `xs`.
pub fn complete_homogeneous(k: usize, xs: &[Complex64]) -> Complex64 {
    complete_homogeneous_table(k, xs)[k]
}

/// `[e_0(xs), …, e_k(xs)]`.
pub fn elementary_table(k: usize, xs: &[Complex64]) -> Vec<Complex64> {
    let mut e = vec![Complex64::new(0.0, 0.0); k + 1];
    e[0] = Complex64::new(1.0, 0.0);
    for &x in xs {
        for j in (1..=k).rev() {
            let prev = e[j - 1];
            e[j] += x * prev;
        }
    }
    e
}

/// `e_k(xs)`, the sum of products of `k` distinct entries.
pub fn elementary_symmetric(k: usize, xs: &[Complex64]) -> Complex64 {
    if k > xs.len() {
        return Complex64::new(0.0, 0.0);
    }
    elementary_table(k, xs)[k]
}

/// Residual of the difference identity
///
/// ```text
/// h_k(x̄, x) - h_k(x̄, y) = (x - y) · h_{k-1}(x̄, x, y)
/// ```
///
/// i.e. `LHS - RHS`. With `h_{-1} = 0` the `k = 0` case is the trivial
/// `1 - 1 = 0`.
pub fn h_difference_residual(k: usize, xbar: &[Complex64], x: Complex64, y: Complex64) -> Complex64 {
    let mut with_x = xbar.to_vec();
    with_x.push(x);
    let mut with_y = xbar.to_vec();
    with_y.push(y);
    let lhs = complete_homogeneous(k, &with_x) - complete_homogeneous(k, &with_y);
    let rhs = if k == 0 {
        Complex64::new(0.0, 0.0)
    } else {
        with_x.push(y);
        (x - y) * complete_homogeneous(k - 1, &with_x)
    };
    lhs - rhs
}
