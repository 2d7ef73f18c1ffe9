//! Computational toolkit for Heisenberg uniqueness pairs.
//!
//! The crate evaluates Fourier transforms of measures carried by systems of
//! parallel lines, crosses and the exponential curve `y = e^{t^2}`, builds
//! explicit nonzero measures whose transforms vanish on a candidate set, and
//! classifies the fibers of a candidate set through complete homogeneous
//! symmetric polynomials.
//!
//! Throughout, the Fourier transform of a measure `μ` on the plane is
//!
//! ```text
//! μ̂(ξ, η) = ∫ e^{-iπ(xξ + yη)} dμ(x, y)
//! ```
//!
//! so one-dimensional transforms use the kernel `e^{-iπxξ}`.

pub mod classifier;
pub mod config;
pub mod curves;
pub mod error;
pub mod linsys;
pub mod measures;
pub mod quadrature;
pub mod root;
pub mod sympoly;

pub use num_complex::Complex64;

pub use classifier::{FiberClass, FiberPartition, LambdaSet};
pub use config::Tolerances;
pub use curves::{Branch, CurveDensity, HcFunction};
pub use error::{HupError, Result};
pub use linsys::{PowerSystem, ReducedMatrix, TauVector};
pub use measures::{AtomKind, CrossMeasure, Density, DensityAtom, LineMeasure, WitnessLines};
pub use quadrature::{Estimate, OscillationBudget};
pub use sympoly::UnimodularTuple;
