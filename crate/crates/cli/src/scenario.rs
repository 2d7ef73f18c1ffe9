//! Scenario files: one TOML document per scenario, selected by `kind`.
//!
//! Optional keys fall back to the defaults below; [`Scenario::validate`]
//! checks numeric ranges before anything is evaluated.

use std::path::Path;

use hup_core::{AtomKind, Complex64, Density, DensityAtom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{LabError, LabResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Scenario {
    ConsecutiveWitness(ConsecutiveWitness),
    CrossWitness(CrossWitness),
    ExpCurveWitness(ExpCurveWitness),
    SurfaceWitness(SurfaceWitness),
    Classify(Classify),
    Discriminant(Discriminant),
    Reduce(Reduce),
    FtGrid(FtGrid),
    KroneckerCheck(KroneckerCheck),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AtomKindSpec {
    Gaussian,
    Box,
    Triangle,
    OddBump,
}

/// One density atom. `offset` is required for `odd_bump` and rejected
/// otherwise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomSpec {
    pub kind: AtomKindSpec,
    #[serde(default)]
    pub center: f64,
    #[serde(default = "one")]
    pub width: f64,
    #[serde(default = "one")]
    pub amplitude: f64,
    #[serde(default)]
    pub amplitude_im: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offset: Option<f64>,
}

impl AtomSpec {
    pub fn build(&self) -> LabResult<DensityAtom> {
        let kind = match (self.kind, self.offset) {
            (AtomKindSpec::OddBump, Some(offset)) => AtomKind::OddBump { offset },
            (AtomKindSpec::OddBump, None) => {
                return Err(LabError::Scenario("odd_bump atom needs `offset`".into()))
            }
            (_, Some(_)) => {
                return Err(LabError::Scenario("`offset` only applies to odd_bump atoms".into()))
            }
            (AtomKindSpec::Gaussian, None) => AtomKind::Gaussian,
            (AtomKindSpec::Box, None) => AtomKind::Box,
            (AtomKindSpec::Triangle, None) => AtomKind::Triangle,
        };
        Ok(DensityAtom::new(
            kind,
            self.center,
            self.width,
            Complex64::new(self.amplitude, self.amplitude_im),
        )?)
    }
}

/// Density given as a list of atoms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DensitySpec {
    #[serde(default)]
    pub atoms: Vec<AtomSpec>,
}

impl DensitySpec {
    pub fn build(&self) -> LabResult<Density> {
        Ok(Density::from_atoms(
            self.atoms.iter().map(AtomSpec::build).collect::<LabResult<_>>()?,
        ))
    }

    fn unit_gaussian() -> Self {
        Self {
            atoms: vec![AtomSpec {
                kind: AtomKindSpec::Gaussian,
                center: 0.0,
                width: 1.0,
                amplitude: 1.0,
                amplitude_im: 0.0,
                offset: None,
            }],
        }
    }
}

/// Equispaced samples `min, min + step, …` not exceeding `max`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisSpec {
    pub min: f64,
    pub max: f64,
    pub step: f64,
}

const MAX_AXIS_SAMPLES: usize = 1_000_000;

impl AxisSpec {
    pub const fn new(min: f64, max: f64, step: f64) -> Self {
        Self { min, max, step }
    }

    fn validate(&self, name: &str) -> LabResult<()> {
        if !(self.min.is_finite() && self.max.is_finite() && self.step.is_finite()) {
            return Err(LabError::Scenario(format!("axis `{name}` must be finite")));
        }
        if self.step <= 0.0 {
            return Err(LabError::Scenario(format!("axis `{name}` needs step > 0")));
        }
        if self.max < self.min {
            return Err(LabError::Scenario(format!("axis `{name}` needs max ≥ min")));
        }
        if (self.max - self.min) / self.step >= MAX_AXIS_SAMPLES as f64 {
            return Err(LabError::Scenario(format!(
                "axis `{name}` has more than {MAX_AXIS_SAMPLES} samples"
            )));
        }
        Ok(())
    }

    pub fn count(&self) -> usize {
        ((self.max - self.min) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.count())
            .map(|i| self.min + self.step * i as f64)
            .collect()
    }
}

fn one() -> f64 {
    1.0
}

fn validate_np(n: usize, p: u32) -> LabResult<()> {
    if (p as usize) < n + 1 {
        return Err(LabError::Scenario(format!("need p ≥ n + 1, got n = {n}, p = {p}")));
    }
    Ok(())
}

fn positive(name: &str, v: f64) -> LabResult<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(LabError::Scenario(format!("`{name}` must be positive, got {v}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConsecutiveWitness {
    pub n: usize,
    #[serde(default = "DensitySpec::unit_gaussian")]
    pub seed_density: DensitySpec,
    #[serde(default = "default_witness_xi")]
    pub xi: AxisSpec,
    #[serde(default = "default_exact_tol")]
    pub tolerance: f64,
    #[serde(default = "default_off_threshold")]
    pub off_threshold: f64,
}

fn default_witness_xi() -> AxisSpec {
    AxisSpec::new(-10.0, 10.0, 0.02)
}

fn default_exact_tol() -> f64 {
    1e-12
}

fn default_off_threshold() -> f64 {
    1e-3
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossMode {
    /// Arbitrary levels, annihilated on `η = ξ`.
    Diagonal,
    /// `f_1 = -f_0` with zero mass, annihilated on `η = ξ` and `η = 0`.
    Axis,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossWitness {
    pub mode: CrossMode,
    /// Explicit levels; when empty, `random_levels` mixtures are drawn from
    /// `seed` (diagonal mode) or an odd bump is used (axis mode).
    #[serde(default)]
    pub levels: Vec<DensitySpec>,
    #[serde(default = "default_random_levels")]
    pub random_levels: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_cross_samples")]
    pub samples: usize,
    #[serde(default = "default_cross_range")]
    pub range: f64,
    #[serde(default = "default_exact_tol")]
    pub tolerance: f64,
    #[serde(default = "default_off_threshold")]
    pub off_threshold: f64,
}

fn default_random_levels() -> usize {
    3
}

fn default_cross_samples() -> usize {
    1001
}

fn default_cross_range() -> f64 {
    10.0
}

impl CrossWitness {
    /// Level densities, drawing reproducible random mixtures if none are
    /// listed.
    pub fn densities(&self) -> LabResult<Vec<Density>> {
        if !self.levels.is_empty() {
            return self.levels.iter().map(DensitySpec::build).collect();
        }
        match self.mode {
            CrossMode::Diagonal => Ok(random_mixtures(self.seed, self.random_levels)),
            CrossMode::Axis => {
                let bump = DensityAtom::new(AtomKind::OddBump { offset: 1.0 }, 0.0, 1.0, 1.0.into())?;
                Ok(vec![bump.into()])
            }
        }
    }
}

/// `levels` mixtures of one to three gaussian/box/triangle atoms with
/// complex amplitudes.
pub fn random_mixtures(seed: u64, levels: usize) -> Vec<Density> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..levels)
        .map(|_| {
            let count = rng.random_range(1..=3);
            let atoms = (0..count)
                .map(|_| {
                    let kind = match rng.random_range(0..3) {
                        0 => AtomKind::Gaussian,
                        1 => AtomKind::Box,
                        _ => AtomKind::Triangle,
                    };
                    let center = rng.random_range(-2.0..2.0);
                    let width = rng.random_range(0.3..2.0);
                    let amp = Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
                    DensityAtom::new(kind, center, width, amp).expect("sampled parameters are valid")
                })
                .collect();
            Density::from_atoms(atoms)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpCurveWitness {
    pub c: f64,
    /// Positive lobe of the odd profile φ.
    #[serde(default = "default_phi_inner")]
    pub inner: f64,
    #[serde(default = "default_phi_outer")]
    pub outer: f64,
    #[serde(default = "one")]
    pub amplitude: f64,
    #[serde(default = "default_curve_x")]
    pub x: AxisSpec,
    /// Offset of the second line `y = cx + d`.
    #[serde(default = "one")]
    pub d: f64,
    #[serde(default = "default_quad_tol")]
    pub tolerance: f64,
    #[serde(default = "default_mass_ratio")]
    pub mass_ratio: f64,
    #[serde(default = "default_off_threshold")]
    pub off_threshold: f64,
}

fn default_phi_inner() -> f64 {
    1.2
}

fn default_phi_outer() -> f64 {
    2.2
}

fn default_curve_x() -> AxisSpec {
    AxisSpec::new(-5.0, 5.0, 0.1)
}

fn default_quad_tol() -> f64 {
    1e-6
}

fn default_mass_ratio() -> f64 {
    0.1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceCase {
    /// `g = ψ(u_1) h(u_2)` with `ψ` odd, tested on `x_1 = 0`.
    OddFactor,
    /// `g = τ(u_1) h(u_2)` with `τ` an exponential-curve witness, tested on
    /// `x_3 = c x_1`.
    CurveFactor,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceWitness {
    pub case: SurfaceCase,
    #[serde(default = "one")]
    pub c: f64,
    /// First factor for `odd_factor`; must be odd about 0.
    #[serde(default = "default_surface_psi")]
    pub psi: AtomSpec,
    /// Second factor `h`.
    #[serde(default = "default_surface_h")]
    pub h: DensitySpec,
    /// Profile lobe for the `curve_factor` witness.
    #[serde(default = "default_phi_inner")]
    pub inner: f64,
    #[serde(default = "default_phi_outer")]
    pub outer: f64,
    /// Both free hyperplane coordinates are sampled on this axis.
    #[serde(default = "default_surface_axis")]
    pub axis: AxisSpec,
    #[serde(default = "default_quad_tol")]
    pub tolerance: f64,
    #[serde(default = "default_off_threshold")]
    pub off_threshold: f64,
}

fn default_surface_psi() -> AtomSpec {
    AtomSpec {
        kind: AtomKindSpec::OddBump,
        center: 0.0,
        width: 1.0,
        amplitude: 1.0,
        amplitude_im: 0.0,
        offset: Some(0.8),
    }
}

fn default_surface_h() -> DensitySpec {
    DensitySpec {
        atoms: vec![AtomSpec {
            kind: AtomKindSpec::Triangle,
            center: 0.2,
            width: 0.8,
            amplitude: 1.0,
            amplitude_im: 0.0,
            offset: None,
        }],
    }
}

fn default_surface_axis() -> AxisSpec {
    AxisSpec::new(-5.0, 5.0, 0.5)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Classify {
    pub n: usize,
    pub p: u32,
    /// A single fiber.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub etas: Option<Vec<f64>>,
    /// A candidate set `Λ` as `[ξ, η]` pairs; folded before partitioning.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<[f64; 2]>>,
    /// Expected class of `etas`, or of every fiber of `points`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Discriminant {
    pub n: usize,
    pub p: u32,
    pub etas: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<f64>,
    #[serde(default = "default_exact_tol")]
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Reduce {
    pub n: usize,
    pub p: u32,
    /// Phases `η_j` of the nodes `β_j = e^{iπη_j}`.
    pub betas: Vec<f64>,
    #[serde(default = "default_reduce_tol")]
    pub tolerance: f64,
}

fn default_reduce_tol() -> f64 {
    1e-9
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum MeasureSpec {
    Zero,
    /// One density per height.
    Lines {
        heights: Vec<f64>,
        lines: Vec<DensitySpec>,
    },
    /// Witness on heights `0..=n+1`; its annihilating heights are checked.
    ConsecutiveWitness {
        n: usize,
        #[serde(default = "DensitySpec::unit_gaussian")]
        seed_density: DensitySpec,
    },
    Cross {
        levels: Vec<DensitySpec>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FtGrid {
    pub measure: MeasureSpec,
    pub xi: AxisSpec,
    pub eta: AxisSpec,
    #[serde(default = "default_exact_tol")]
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KroneckerCheck {
    #[serde(default = "DensitySpec::unit_gaussian")]
    pub density: DensitySpec,
    pub alpha: f64,
    #[serde(default = "default_kronecker_samples")]
    pub samples: usize,
    /// Smallest residual accepted as proof that `f̂` is not periodic.
    #[serde(default = "default_off_threshold")]
    pub tolerance: f64,
}

fn default_kronecker_samples() -> usize {
    2001
}

impl Scenario {
    pub fn parse(text: &str) -> LabResult<Self> {
        let scenario: Scenario = toml::from_str(text).map_err(|e| LabError::Scenario(e.to_string()))?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn load(path: &Path) -> LabResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| LabError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Scenario::ConsecutiveWitness(_) => "consecutive_witness",
            Scenario::CrossWitness(_) => "cross_witness",
            Scenario::ExpCurveWitness(_) => "exp_curve_witness",
            Scenario::SurfaceWitness(_) => "surface_witness",
            Scenario::Classify(_) => "classify",
            Scenario::Discriminant(_) => "discriminant",
            Scenario::Reduce(_) => "reduce",
            Scenario::FtGrid(_) => "ft_grid",
            Scenario::KroneckerCheck(_) => "kronecker_check",
        }
    }

    /// Normalised TOML with every default filled in.
    pub fn echo(&self) -> String {
        toml::to_string(self).expect("scenario types serialise")
    }

    /// Replaces the primary threshold of the scenario.
    pub fn set_tolerance(&mut self, tolerance: f64) {
        match self {
            Scenario::ConsecutiveWitness(s) => s.tolerance = tolerance,
            Scenario::CrossWitness(s) => s.tolerance = tolerance,
            Scenario::ExpCurveWitness(s) => s.tolerance = tolerance,
            Scenario::SurfaceWitness(s) => s.tolerance = tolerance,
            Scenario::Discriminant(s) => s.tolerance = tolerance,
            Scenario::Reduce(s) => s.tolerance = tolerance,
            Scenario::FtGrid(s) => s.tolerance = tolerance,
            Scenario::KroneckerCheck(s) => s.tolerance = tolerance,
            Scenario::Classify(_) => {}
        }
    }

    pub fn validate(&self) -> LabResult<()> {
        match self {
            Scenario::ConsecutiveWitness(s) => {
                if s.n < 1 {
                    return Err(LabError::Scenario("consecutive_witness needs n ≥ 1".into()));
                }
                s.xi.validate("xi")?;
                positive("tolerance", s.tolerance)?;
            }
            Scenario::CrossWitness(s) => {
                if s.samples < 2 {
                    return Err(LabError::Scenario("`samples` must be at least 2".into()));
                }
                if s.levels.is_empty() && s.mode == CrossMode::Diagonal && s.random_levels == 0 {
                    return Err(LabError::Scenario("no levels given".into()));
                }
                positive("range", s.range)?;
                positive("tolerance", s.tolerance)?;
            }
            Scenario::ExpCurveWitness(s) => {
                if s.c == 0.0 || !s.c.is_finite() {
                    return Err(LabError::Scenario("`c` must be nonzero".into()));
                }
                s.x.validate("x")?;
                positive("tolerance", s.tolerance)?;
            }
            Scenario::SurfaceWitness(s) => {
                if s.c == 0.0 || !s.c.is_finite() {
                    return Err(LabError::Scenario("`c` must be nonzero".into()));
                }
                s.axis.validate("axis")?;
                positive("tolerance", s.tolerance)?;
            }
            Scenario::Classify(s) => {
                validate_np(s.n, s.p)?;
                if s.etas.is_some() == s.points.is_some() {
                    return Err(LabError::Scenario("classify needs exactly one of `etas`, `points`".into()));
                }
            }
            Scenario::Discriminant(s) => {
                validate_np(s.n, s.p)?;
                positive("tolerance", s.tolerance)?;
            }
            Scenario::Reduce(s) => {
                validate_np(s.n, s.p)?;
                positive("tolerance", s.tolerance)?;
            }
            Scenario::FtGrid(s) => {
                s.xi.validate("xi")?;
                s.eta.validate("eta")?;
                positive("tolerance", s.tolerance)?;
                if let MeasureSpec::Lines { heights, lines } = &s.measure {
                    if heights.len() != lines.len() {
                        return Err(LabError::Scenario("`heights` and `lines` differ in length".into()));
                    }
                }
            }
            Scenario::KroneckerCheck(s) => {
                if s.samples < 2 {
                    return Err(LabError::Scenario("`samples` must be at least 2".into()));
                }
                positive("tolerance", s.tolerance)?;
            }
        }
        Ok(())
    }
}
