//! Measures on systems of horizontal lines and on crosses, their Fourier
//! transforms, and explicit nonzero measures whose transforms vanish on a
//! prescribed set.

mod density;

use std::f64::consts::PI;

use num_complex::Complex64;

pub use density::{density_ft, sinc, AtomKind, Density, DensityAtom};

use crate::classifier::LambdaSet;
use crate::error::{HupError, Result};

/// `dμ(x, y) = Σ_j f_j(x) dx dδ_{h_j}(y)` on the lines `y = h_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct LineMeasure {
    heights: Vec<f64>,
    densities: Vec<Density>,
}

impl LineMeasure {
    pub fn new(heights: Vec<f64>, densities: Vec<Density>) -> Result<Self> {
        if heights.len() != densities.len() {
            return Err(HupError::Domain(format!(
                "{} heights but {} densities",
                heights.len(),
                densities.len()
            )));
        }
        if heights.windows(2).any(|w| w[0] >= w[1]) || heights.iter().any(|h| !h.is_finite()) {
            return Err(HupError::Domain("heights must be finite and strictly increasing".into()));
        }
        Ok(Self { heights, densities })
    }

    /// Lines at `0, 1, …, n` and `p > n`; `densities` lists `f_0, …, f_{n+1}`.
    pub fn on_lines(n: usize, p: u32, densities: Vec<Density>) -> Result<Self> {
        if (p as usize) <= n {
            return Err(HupError::Domain(format!("need p > n, got p = {p}, n = {n}")));
        }
        let heights = (0..=n).map(|j| j as f64).chain([p as f64]).collect();
        Self::new(heights, densities)
    }

    pub fn heights(&self) -> &[f64] {
        &self.heights
    }

    pub fn densities(&self) -> &[Density] {
        &self.densities
    }

    /// `μ̂(ξ, η) = Σ_j e^{-iπ h_j η} f̂_j(ξ)`.
    pub fn ft(&self, xi: f64, eta: f64) -> Complex64 {
        self.heights
            .iter()
            .zip(&self.densities)
            .map(|(&h, f)| Complex64::from_polar(1.0, -PI * h * eta) * f.ft(xi))
            .sum()
    }
}

pub fn line_system_ft(m: &LineMeasure, xi: f64, eta: f64) -> Complex64 {
    m.ft(xi, eta)
}

/// Antisymmetric measure on `(ℝ × F_n) ∪ (F_n × ℝ)`:
/// `dμ = Σ_k (f_k(x) dx dδ_k(y) - f_k(y) dδ_k(x) dy)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossMeasure {
    densities: Vec<Density>,
}

impl CrossMeasure {
    /// One density per level `k = 0, …, n`.
    pub fn new(densities: Vec<Density>) -> Result<Self> {
        if densities.is_empty() {
            return Err(HupError::Domain("a cross measure needs at least one level".into()));
        }
        Ok(Self { densities })
    }

    pub fn level_count(&self) -> usize {
        self.densities.len()
    }

    pub fn densities(&self) -> &[Density] {
        &self.densities
    }

    /// `Σ_k (e^{-ikπη} f̂_k(ξ) - e^{-ikπξ} f̂_k(η))`.
    pub fn ft(&self, xi: f64, eta: f64) -> Complex64 {
        self.densities
            .iter()
            .enumerate()
            .map(|(k, f)| {
                let k = k as f64;
                Complex64::from_polar(1.0, -PI * k * eta) * f.ft(xi)
                    - Complex64::from_polar(1.0, -PI * k * xi) * f.ft(eta)
            })
            .sum()
    }
}

pub fn cross_ft(m: &CrossMeasure, xi: f64, eta: f64) -> Complex64 {
    m.ft(xi, eta)
}

/// Horizontal lines `ℝ × {heights}` in the frequency plane.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessLines {
    pub heights: Vec<f64>,
}

impl WitnessLines {
    /// Samples `{(ξ, h) : ξ ∈ xis, h ∈ heights}` in row-major order.
    pub fn sample(&self, xis: &[f64]) -> LambdaSet {
        LambdaSet::new(
            xis.iter()
                .flat_map(|&xi| self.heights.iter().map(move |&h| (xi, h)))
                .collect(),
        )
    }

    /// Whether `eta` lies within `tol` of one of the heights modulo 2.
    pub fn contains_height(&self, eta: f64, tol: f64) -> bool {
        self.heights.iter().any(|h| {
            let d = (h - eta).rem_euclid(2.0);
            d.min(2.0 - d) <= tol
        })
    }
}

/// Nonzero measure on `ℝ × {0, 1, …, n+1}` annihilated on
/// `ℝ × {2k/(n+1) : k = 0..n}`.
///
/// Uses `f_0 = -seed`, `f_{n+1} = seed` and zero in between, so
/// `μ̂(ξ, η) = f̂(ξ)(e^{-iπ(n+1)η} - 1)`, which vanishes exactly when
/// `(n+1)η ∈ 2ℤ`.
pub fn construct_consecutive_witness(n: usize, seed: &Density) -> Result<(LineMeasure, WitnessLines)> {
    if n < 1 {
        return Err(HupError::Domain("consecutive witness needs n ≥ 1".into()));
    }
    if seed.is_zero() {
        return Err(HupError::DegenerateWitness("seed density is zero".into()));
    }
    let mut densities = vec![Density::zero(); n + 2];
    densities[0] = -seed.clone();
    densities[n + 1] = seed.clone();
    let heights = (0..=n + 1).map(|j| j as f64).collect();
    let measure = LineMeasure::new(heights, densities)?;
    let lines = WitnessLines {
        heights: (0..=n).map(|k| 2.0 * k as f64 / (n + 1) as f64).collect(),
    };
    Ok((measure, lines))
}

/// Cross measure built from arbitrary levels; its transform vanishes on the
/// diagonal `η = ξ` by antisymmetry.
pub fn construct_cross_diagonal_witness(densities: Vec<Density>) -> Result<CrossMeasure> {
    if densities.iter().all(Density::is_zero) {
        return Err(HupError::DegenerateWitness("all cross densities are zero".into()));
    }
    CrossMeasure::new(densities)
}

/// Two-level cross measure `f_1 = -f_0` with `f̂_0(0) = 0`, annihilated on
/// both the diagonal and the ξ-axis.
pub fn construct_cross_axis_witness(f0: &Density) -> Result<CrossMeasure> {
    if f0.is_zero() {
        return Err(HupError::DegenerateWitness("level density is zero".into()));
    }
    let mass = f0.ft(0.0).norm();
    if mass > 1e-12 {
        return Err(HupError::Construction(format!(
            "axis witness needs zero total mass, got |f̂(0)| = {mass:e}"
        )));
    }
    CrossMeasure::new(vec![f0.clone(), -f0.clone()])
}

/// `max_t |f̂(t + α) - f̂(t)|` over `sample_count` equispaced `t ∈ [-20, 20]`.
///
/// A positive value certifies that `f̂` is not `α`-periodic.
pub fn translation_periodicity_residual(f: &Density, alpha: f64, sample_count: usize) -> Result<f64> {
    if alpha == 0.0 || !alpha.is_finite() {
        return Err(HupError::Domain(format!("shift must be nonzero, got {alpha}")));
    }
    if sample_count < 2 {
        return Err(HupError::Domain("need at least two samples".into()));
    }
    let step = 40.0 / (sample_count - 1) as f64;
    Ok((0..sample_count)
        .map(|i| {
            let t = -20.0 + step * i as f64;
            (f.ft(t + alpha) - f.ft(t)).norm()
        })
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gauss() -> Density {
        DensityAtom::unit_gaussian().into()
    }

    fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
        let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
        (0..count).map(|i| lo + step * i as f64).collect()
    }

    #[test]
    fn single_line_ignores_eta() {
        let m = LineMeasure::new(vec![0.0], vec![gauss()]).unwrap();
        for eta in [0.0, 0.4, 1.7, -3.0] {
            assert_eq!(m.ft(0.8, eta), gauss().ft(0.8));
        }
    }

    #[test]
    fn two_equal_lines_cancel_at_eta_one() {
        let m = LineMeasure::new(vec![0.0, 1.0], vec![gauss(), gauss()]).unwrap();
        for xi in grid(-5.0, 5.0, 0.25) {
            assert!(m.ft(xi, 1.0).norm() < 1e-15);
        }
    }

    #[test]
    fn three_line_witness_by_substitution() {
        let m = LineMeasure::new(vec![0.0, 1.0, 2.0], vec![-gauss(), Density::zero(), gauss()]).unwrap();
        for xi in grid(-3.0, 3.0, 0.5) {
            assert!(m.ft(xi, 0.0).norm() < 1e-15);
            assert!(m.ft(xi, 1.0).norm() < 1e-15);
        }
    }

    #[test]
    fn integer_heights_are_two_periodic() {
        let f = Density::from_atoms(vec![
            DensityAtom::triangle(0.3, 1.0, 1.0).unwrap(),
            DensityAtom::gaussian(-0.5, 0.6, 2.0).unwrap(),
        ]);
        let m = LineMeasure::on_lines(2, 5, vec![f.clone(), gauss(), -f, Density::zero()]).unwrap();
        for (xi, eta) in [(0.2, 0.1), (-1.4, 1.3), (3.0, -0.7)] {
            assert!((m.ft(xi, eta + 2.0) - m.ft(xi, eta)).norm() < 1e-12);
        }
    }

    #[test]
    fn line_measure_validation() {
        assert!(LineMeasure::new(vec![0.0, 0.0], vec![gauss(), gauss()]).is_err());
        assert!(LineMeasure::new(vec![0.0, 1.0], vec![gauss()]).is_err());
        assert!(LineMeasure::on_lines(2, 2, vec![gauss(); 4]).is_err());
    }

    #[test]
    fn consecutive_witness_shapes() {
        let (m, lines) = construct_consecutive_witness(1, &gauss()).unwrap();
        assert_eq!(m.heights(), &[0.0, 1.0, 2.0]);
        assert_eq!(lines.heights, vec![0.0, 1.0]);
        let (_, lines) = construct_consecutive_witness(4, &gauss()).unwrap();
        let expected = [0.0, 0.4, 0.8, 1.2, 1.6];
        for (h, e) in lines.heights.iter().zip(expected) {
            assert!((h - e).abs() < 1e-15);
        }
        assert!(construct_consecutive_witness(0, &gauss()).is_err());
        assert!(matches!(
            construct_consecutive_witness(2, &Density::zero()),
            Err(HupError::DegenerateWitness(_))
        ));
    }

    #[test]
    fn consecutive_witness_vanishes_on_lines_only() {
        for n in 1..=4 {
            let (m, lines) = construct_consecutive_witness(n, &gauss()).unwrap();
            let xis = grid(-10.0, 10.0, 0.02);
            let on = xis
                .iter()
                .flat_map(|&xi| lines.heights.iter().map(move |&h| (xi, h)))
                .map(|(xi, h)| m.ft(xi, h).norm())
                .fold(0.0, f64::max);
            assert!(on <= 1e-12, "n = {n}: {on:e}");
            let star = 1.0 / (n + 1) as f64;
            assert!(m.ft(0.0, star).norm() > 1.0);
        }
    }

    #[test]
    fn cross_examples() {
        let f = gauss();
        let m = CrossMeasure::new(vec![f.clone()]).unwrap();
        for t in grid(-5.0, 5.0, 0.01) {
            assert_eq!(m.ft(t, t), Complex64::new(0.0, 0.0));
        }
        let expected = f.ft(0.0) - f.ft(2.0);
        assert!((m.ft(0.0, 2.0) - expected).norm() < 1e-15);
        // 1 - e^{-π}
        assert!((m.ft(0.0, 2.0).re - (1.0 - (-PI).exp())).abs() < 1e-15);

        let zero = CrossMeasure::new(vec![Density::zero(); 3]).unwrap();
        assert_eq!(zero.ft(0.3, -1.2), Complex64::new(0.0, 0.0));

        let off = grid(-10.0, 10.0, 0.02)
            .into_iter()
            .map(|t| m.ft(t, t + 1.0).norm())
            .fold(0.0, f64::max);
        assert!(off > 0.1);
    }

    #[test]
    fn cross_witness_errors() {
        assert!(construct_cross_diagonal_witness(vec![Density::zero(), Density::zero()]).is_err());
        assert!(construct_cross_axis_witness(&gauss()).is_err());
        let odd: Density = DensityAtom::odd_bump_on(0.0, 0.2, 1.0, 1.0).unwrap().into();
        let m = construct_cross_axis_witness(&odd).unwrap();
        for xi in grid(-10.0, 10.0, 0.05) {
            assert!(m.ft(xi, 0.0).norm() < 1e-12);
            assert!(m.ft(xi, xi).norm() < 1e-12);
        }
    }

    #[test]
    fn periodicity_residual() {
        assert_eq!(translation_periodicity_residual(&Density::zero(), 1.0, 11).unwrap(), 0.0);
        let r = translation_periodicity_residual(&gauss(), 1.0, 401).unwrap();
        assert!(r > 0.5);
        assert!((r - translation_periodicity_residual(&gauss(), -1.0, 401).unwrap()).abs() < 1e-14);
        assert!(translation_periodicity_residual(&gauss(), 0.0, 11).is_err());
        assert!(translation_periodicity_residual(&gauss(), 1.0, 1).is_err());
    }
}
