//! Numerical tolerances shared by every module.

/// Tolerance record. All thresholds used for distinctness, vanishing and
/// quadrature targets live here so a single override reaches every caller.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Allowed deviation of `|a_j|` from 1 for phase-built nodes.
    pub unimodular: f64,
    /// Minimum pairwise gap `|a_i - a_j|` before a power system is declared
    /// ill-conditioned.
    pub node_gap: f64,
    /// Values of the fiber discriminant at or below this are treated as zero.
    pub discriminant: f64,
    /// Merge radius for ξ grouping and η deduplication in candidate sets.
    pub merge: f64,
    /// Absolute error target for oscillatory quadrature.
    pub quadrature_abs: f64,
    /// `|h_c(t) - v|` target relative to `max(1, v)` for branch inversion.
    pub inversion: f64,
    /// Smallest allowed distance between `√h_min` and the inner edge of a
    /// witness profile.
    pub support_gap: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        unimodular: 1e-12,
        node_gap: 1e-9,
        discriminant: 1e-9,
        merge: 1e-9,
        quadrature_abs: 1e-9,
        inversion: 1e-12,
        support_gap: 1e-3,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Cap on the number of (prefix, pair) choices examined per fiber.
pub const SUBSET_SEARCH_CAP: usize = 100_000;
