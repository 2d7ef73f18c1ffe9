//! Integrable densities on the real line with exact Fourier transforms
//! `f̂(ξ) = ∫ e^{-iπxξ} f(x) dx`.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg};

use num_complex::Complex64;

use crate::error::{HupError, Result};

/// Gaussians are treated as supported on `center ± GAUSSIAN_REACH · width`;
/// the neglected mass is below `e^{-π·144}`.
const GAUSSIAN_REACH: f64 = 12.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AtomKind {
    /// `A e^{-a(x-c)^2}` with `a = π / width²`.
    Gaussian,
    /// `A` on `|x - c| ≤ width / 2`.
    Box,
    /// `A (1 - |x - c| / width)` on `|x - c| ≤ width`.
    Triangle,
    /// Antisymmetric pair of raised-cosine lobes of full width `width`,
    /// centred at `c + offset` (sign `+`) and `c - offset` (sign `-`).
    OddBump { offset: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityAtom {
    kind: AtomKind,
    center: f64,
    width: f64,
    amplitude: Complex64,
}

impl DensityAtom {
    pub fn new(kind: AtomKind, center: f64, width: f64, amplitude: Complex64) -> Result<Self> {
        if !(width > 0.0 && width.is_finite()) {
            return Err(HupError::Domain(format!("atom width must be positive, got {width}")));
        }
        if !center.is_finite() || !amplitude.is_finite() {
            return Err(HupError::Domain("atom center and amplitude must be finite".into()));
        }
        if let AtomKind::OddBump { offset } = kind {
            if !(offset > 0.0 && offset.is_finite()) {
                return Err(HupError::Domain(format!(
                    "odd bump offset must be positive, got {offset}"
                )));
            }
        }
        Ok(Self {
            kind,
            center,
            width,
            amplitude,
        })
    }

    pub fn gaussian(center: f64, width: f64, amplitude: f64) -> Result<Self> {
        Self::new(AtomKind::Gaussian, center, width, amplitude.into())
    }

    /// `e^{-πx²}`, whose transform is `e^{-πξ²/4}`.
    pub fn unit_gaussian() -> Self {
        Self {
            kind: AtomKind::Gaussian,
            center: 0.0,
            width: 1.0,
            amplitude: Complex64::new(1.0, 0.0),
        }
    }

    pub fn boxcar(center: f64, width: f64, amplitude: f64) -> Result<Self> {
        Self::new(AtomKind::Box, center, width, amplitude.into())
    }

    pub fn triangle(center: f64, width: f64, amplitude: f64) -> Result<Self> {
        Self::new(AtomKind::Triangle, center, width, amplitude.into())
    }

    /// Odd bump centred at `center` whose positive lobe covers `[inner, outer]`
    /// relative to the centre.
    pub fn odd_bump_on(center: f64, inner: f64, outer: f64, amplitude: f64) -> Result<Self> {
        if !(0.0 <= inner && inner < outer) {
            return Err(HupError::Domain(format!(
                "odd bump needs 0 ≤ inner < outer, got [{inner}, {outer}]"
            )));
        }
        Self::new(
            AtomKind::OddBump {
                offset: 0.5 * (inner + outer),
            },
            center,
            outer - inner,
            amplitude.into(),
        )
    }

    pub fn kind(&self) -> AtomKind {
        self.kind
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn amplitude(&self) -> Complex64 {
        self.amplitude
    }

    /// Gaussian decay rate `π / width²`.
    pub fn decay(&self) -> f64 {
        PI / (self.width * self.width)
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            amplitude: self.amplitude * factor,
            ..*self
        }
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        let s = x - self.center;
        let w = self.width;
        let shape = match self.kind {
            AtomKind::Gaussian => (-self.decay() * s * s).exp(),
            AtomKind::Box => {
                if s.abs() <= 0.5 * w {
                    1.0
                } else {
                    0.0
                }
            }
            AtomKind::Triangle => (1.0 - s.abs() / w).max(0.0),
            AtomKind::OddBump { offset } => {
                let r = 0.5 * w;
                raised_cosine((s - offset) / r) - raised_cosine((s + offset) / r)
            }
        };
        self.amplitude * shape
    }

    pub fn ft(&self, xi: f64) -> Complex64 {
        let w = self.width;
        let shift = Complex64::from_polar(1.0, -PI * self.center * xi);
        let shape = match self.kind {
            AtomKind::Gaussian => Complex64::new(w * (-PI * xi * xi * w * w / 4.0).exp(), 0.0),
            AtomKind::Box => Complex64::new(w * sinc(PI * xi * w / 2.0), 0.0),
            AtomKind::Triangle => {
                let s = sinc(PI * xi * w / 2.0);
                Complex64::new(w * s * s, 0.0)
            }
            AtomKind::OddBump { offset } => {
                let r = 0.5 * w;
                let lobe = r * raised_cosine_ft(PI * xi * r);
                Complex64::new(0.0, -2.0 * lobe * (PI * offset * xi).sin())
            }
        };
        self.amplitude * shift * shape
    }

    /// Closed interval outside of which the atom vanishes (numerically, for
    /// gaussians).
    pub fn support(&self) -> (f64, f64) {
        let reach = match self.kind {
            AtomKind::Gaussian => GAUSSIAN_REACH * self.width,
            AtomKind::Box => 0.5 * self.width,
            AtomKind::Triangle => self.width,
            AtomKind::OddBump { offset } => offset + 0.5 * self.width,
        };
        (self.center - reach, self.center + reach)
    }

    /// Points where the atom is not smooth.
    pub fn breakpoints(&self) -> Vec<f64> {
        let c = self.center;
        let w = self.width;
        match self.kind {
            AtomKind::Gaussian => vec![],
            AtomKind::Box => vec![c - 0.5 * w, c + 0.5 * w],
            AtomKind::Triangle => vec![c - w, c, c + w],
            AtomKind::OddBump { offset } => {
                let r = 0.5 * w;
                vec![c - offset - r, c - offset + r, c + offset - r, c + offset + r]
            }
        }
    }

    /// True for kinds that satisfy `f(c + t) = -f(c - t)`.
    pub fn is_odd(&self) -> bool {
        matches!(self.kind, AtomKind::OddBump { .. })
    }
}

/// `(1 + cos πs) / 2` on `|s| ≤ 1`, zero outside.
fn raised_cosine(s: f64) -> f64 {
    if s.abs() <= 1.0 {
        0.5 * (1.0 + (PI * s).cos())
    } else {
        0.0
    }
}

/// `sin z / z`, with the series near zero.
pub fn sinc(z: f64) -> f64 {
    if z.abs() < 1e-4 {
        let z2 = z * z;
        1.0 - z2 / 6.0 + z2 * z2 / 120.0
    } else {
        z.sin() / z
    }
}

/// Transform of the unit-half-width raised cosine, `π² sin z / (z (π² - z²))`
/// at `z = π ξ r` (divided by `r`). Removable singularities at `z = 0, ±π`
/// are handled by factoring the vanishing sine through `sinc`.
fn raised_cosine_ft(z: f64) -> f64 {
    let pi2 = PI * PI;
    if z.abs() < 0.5 {
        sinc(z) * pi2 / (pi2 - z * z)
    } else if (z - PI).abs() < 0.5 {
        sinc(PI - z) * pi2 / (z * (PI + z))
    } else if (z + PI).abs() < 0.5 {
        -sinc(PI + z) * pi2 / (z * (PI - z))
    } else {
        pi2 * z.sin() / (z * (pi2 - z * z))
    }
}

/// Finite mixture of atoms.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Density {
    atoms: Vec<DensityAtom>,
}

impl Density {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_atoms(atoms: Vec<DensityAtom>) -> Self {
        Self { atoms }
    }

    pub fn atoms(&self) -> &[DensityAtom] {
        &self.atoms
    }

    pub fn is_zero(&self) -> bool {
        self.atoms.iter().all(|a| a.amplitude == Complex64::new(0.0, 0.0))
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            atoms: self.atoms.iter().map(|a| a.scaled(factor)).collect(),
        }
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        self.atoms.iter().map(|a| a.eval(x)).sum()
    }

    pub fn ft(&self, xi: f64) -> Complex64 {
        self.atoms.iter().map(|a| a.ft(xi)).sum()
    }

    /// Hull of the atom supports; `None` for the empty mixture.
    pub fn support(&self) -> Option<(f64, f64)> {
        self.atoms.iter().map(DensityAtom::support).reduce(|(a, b), (c, d)| (a.min(c), b.max(d)))
    }

    /// Sorted, deduplicated non-smooth points of all atoms.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut pts: Vec<f64> = self.atoms.iter().flat_map(DensityAtom::breakpoints).collect();
        pts.sort_by(f64::total_cmp);
        pts.dedup();
        pts
    }
}

impl From<DensityAtom> for Density {
    fn from(atom: DensityAtom) -> Self {
        Self { atoms: vec![atom] }
    }
}

impl Add for Density {
    type Output = Density;

    fn add(mut self, rhs: Density) -> Density {
        self.atoms.extend(rhs.atoms);
        self
    }
}

impl Neg for Density {
    type Output = Density;

    fn neg(self) -> Density {
        self.scaled(Complex64::new(-1.0, 0.0))
    }
}

impl Mul<Complex64> for Density {
    type Output = Density;

    fn mul(self, rhs: Complex64) -> Density {
        self.scaled(rhs)
    }
}

/// `f̂(ξ)`.
pub fn density_ft(f: &Density, xi: f64) -> Complex64 {
    f.ft(xi)
}
