//! Power-column linear systems over unimodular nodes.
//!
//! A [`PowerSystem`] has matrix entries `a_i^{c_j}` for nodes `a_i` and
//! increasing column powers `c_j`, and right-hand side `-a_i^q`. The
//! canonical case (`c = 0..m-1`, `q = m`) is a Vandermonde system whose
//! solution is `τ_k = (-1)^{m-k} e_{m-k}(a)`.
//!
//! The same module performs the triangular reduction of the
//! `(n+2) × (n+2)` matrix with columns `β^0, …, β^n, β^p` and evaluates the
//! fiber discriminant `|h_{p-n}(a_0..a_n) - h_{p-n}(a_0..a_{n-1}, a_{n+1})|`.

use num_complex::Complex64;

use crate::config::Tolerances;
use crate::error::{HupError, Result};
use crate::sympoly::{complete_homogeneous, min_pairwise_gap, UnimodularTuple};

type Matrix = Vec<Vec<Complex64>>;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSystem {
    nodes: Vec<Complex64>,
    column_powers: Vec<u32>,
    target_power: u32,
}

impl PowerSystem {
    pub fn new(nodes: Vec<Complex64>, column_powers: Vec<u32>, target_power: u32) -> Result<Self> {
        if column_powers.windows(2).any(|w| w[0] >= w[1]) {
            return Err(HupError::Domain(
                "column powers must be strictly increasing".into(),
            ));
        }
        if column_powers.contains(&target_power) {
            return Err(HupError::Domain(format!(
                "target power {target_power} duplicates a column power"
            )));
        }
        Ok(Self {
            nodes,
            column_powers,
            target_power,
        })
    }

    /// Columns `0..m`, target `m`.
    pub fn canonical(nodes: Vec<Complex64>) -> Self {
        let m = nodes.len() as u32;
        Self {
            nodes,
            column_powers: (0..m).collect(),
            target_power: m,
        }
    }

    pub fn nodes(&self) -> &[Complex64] {
        &self.nodes
    }

    pub fn column_powers(&self) -> &[u32] {
        &self.column_powers
    }

    pub fn target_power(&self) -> u32 {
        self.target_power
    }

    pub fn is_square(&self) -> bool {
        self.nodes.len() == self.column_powers.len()
    }

    pub fn matrix(&self) -> Matrix {
        power_matrix(&self.nodes, &self.column_powers)
    }

    pub fn rhs(&self) -> Vec<Complex64> {
        self.nodes
            .iter()
            .map(|a| -a.powu(self.target_power))
            .collect()
    }

    /// `max_j |Σ_k τ_k a_j^{c_k} + a_j^q|`.
    pub fn residual(&self, tau: &[Complex64]) -> f64 {
        self.nodes
            .iter()
            .map(|a| {
                let lhs: Complex64 = self
                    .column_powers
                    .iter()
                    .zip(tau)
                    .map(|(&c, t)| t * a.powu(c))
                    .sum();
                (lhs + a.powu(self.target_power)).norm()
            })
            .fold(0.0, f64::max)
    }
}

/// Solution of a power system with its equation defect.
#[derive(Debug, Clone, PartialEq)]
pub struct TauVector {
    pub coefficients: Vec<Complex64>,
    pub residual: f64,
}

/// `M[i][j] = nodes[i]^{powers[j]}`.
pub fn power_matrix(nodes: &[Complex64], powers: &[u32]) -> Matrix {
    nodes
        .iter()
        .map(|a| powers.iter().map(|&c| a.powu(c)).collect())
        .collect()
}

/// `Π_{i<j} (a_j - a_i)`; `1` for fewer than two nodes.
pub fn vandermonde_det(nodes: &[Complex64]) -> Complex64 {
    let mut det = ONE;
    for j in 0..nodes.len() {
        for i in 0..j {
            det *= nodes[j] - nodes[i];
        }
    }
    det
}

fn check_gap(nodes: &[Complex64], tol: &Tolerances) -> Result<()> {
    let min_gap = min_pairwise_gap(nodes);
    if min_gap < tol.node_gap {
        return Err(HupError::IllConditioned {
            min_gap,
            tolerance: tol.node_gap,
        });
    }
    Ok(())
}

/// In-place LU factorisation with partial pivoting. Returns the row
/// permutation parity sign, or `None` when a zero pivot is met.
fn lu_factor(a: &mut Matrix, perm: &mut [usize]) -> Option<f64> {
    let m = a.len();
    let mut sign = 1.0;
    for k in 0..m {
        let pivot_row = (k..m)
            .max_by(|&i, &j| a[i][k].norm().total_cmp(&a[j][k].norm()))
            .unwrap_or(k);
        if a[pivot_row][k].norm() == 0.0 {
            return None;
        }
        if pivot_row != k {
            a.swap(pivot_row, k);
            perm.swap(pivot_row, k);
            sign = -sign;
        }
        let pivot = a[k][k];
        let (upper, lower) = a.split_at_mut(k + 1);
        let row_k = &upper[k];
        for row in lower.iter_mut() {
            let factor = row[k] / pivot;
            row[k] = factor;
            for (x, &r) in row[k + 1..].iter_mut().zip(&row_k[k + 1..]) {
                *x -= factor * r;
            }
        }
    }
    Some(sign)
}

/// Determinant of a square complex matrix by LU with partial pivoting.
pub fn dense_determinant(matrix: &[Vec<Complex64>]) -> Complex64 {
    let mut a = matrix.to_vec();
    let mut perm: Vec<usize> = (0..a.len()).collect();
    match lu_factor(&mut a, &mut perm) {
        None => ZERO,
        Some(sign) => (0..a.len()).fold(Complex64::new(sign, 0.0), |acc, k| acc * a[k][k]),
    }
}

/// Solves `M x = b` by LU with partial pivoting.
pub fn dense_solve(matrix: &[Vec<Complex64>], b: &[Complex64]) -> Option<Vec<Complex64>> {
    let mut a = matrix.to_vec();
    let mut perm: Vec<usize> = (0..a.len()).collect();
    lu_factor(&mut a, &mut perm)?;
    Some(lu_solve(&a, &perm, b))
}

fn lu_solve(a: &Matrix, perm: &[usize], b: &[Complex64]) -> Vec<Complex64> {
    let m = a.len();
    let mut y: Vec<Complex64> = perm.iter().map(|&p| b[p]).collect();
    for i in 0..m {
        for j in 0..i {
            let delta = a[i][j] * y[j];
            y[i] -= delta;
        }
    }
    for i in (0..m).rev() {
        for j in i + 1..m {
            let delta = a[i][j] * y[j];
            y[i] -= delta;
        }
        y[i] /= a[i][i];
    }
    y
}

const MAX_REFINEMENT_STEPS: usize = 4;

/// `hi + lo` with `|lo| ≤ ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
struct DoubleDouble {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    (s, (a - (s - v)) + (b - v))
}

fn fast_two_sum(a: f64, b: f64) -> DoubleDouble {
    let s = a + b;
    DoubleDouble { hi: s, lo: b - (s - a) }
}

impl DoubleDouble {
    const ZERO: Self = Self { hi: 0.0, lo: 0.0 };

    fn add(self, other: Self) -> Self {
        let (s, e) = two_sum(self.hi, other.hi);
        fast_two_sum(s, e + self.lo + other.lo)
    }

    fn neg(self) -> Self {
        Self { hi: -self.hi, lo: -self.lo }
    }

    fn mul(self, other: Self) -> Self {
        let p = self.hi * other.hi;
        let e = self.hi.mul_add(other.hi, -p);
        fast_two_sum(p, e + self.hi * other.lo + self.lo * other.hi)
    }
}

impl From<f64> for DoubleDouble {
    fn from(hi: f64) -> Self {
        Self { hi, lo: 0.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct DdComplex {
    re: DoubleDouble,
    im: DoubleDouble,
}

impl DdComplex {
    const ZERO: Self = Self {
        re: DoubleDouble::ZERO,
        im: DoubleDouble::ZERO,
    };
    const ONE: Self = Self {
        re: DoubleDouble { hi: 1.0, lo: 0.0 },
        im: DoubleDouble::ZERO,
    };

    fn powu(self, mut exp: u32) -> Self {
        let mut base = self;
        let mut acc = Self::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    fn to_complex(self) -> Complex64 {
        Complex64::new(self.re.hi + self.re.lo, self.im.hi + self.im.lo)
    }
}

impl From<Complex64> for DdComplex {
    fn from(z: Complex64) -> Self {
        Self {
            re: z.re.into(),
            im: z.im.into(),
        }
    }
}

impl std::ops::Mul for DdComplex {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self {
            re: self.re.mul(o.re).add(self.im.mul(o.im).neg()),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }
}

impl std::ops::Mul<Complex64> for DdComplex {
    type Output = Self;
    fn mul(self, o: Complex64) -> Self {
        self * DdComplex::from(o)
    }
}

impl std::ops::Sub for DdComplex {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self {
            re: self.re.add(o.re.neg()),
            im: self.im.add(o.im.neg()),
        }
    }
}

/// Solves `Σ_k τ_k a_j^{c_k} = -a_j^q` for every node.
///
/// LU with partial pivoting followed by iterative refinement whose residuals
/// are formed in double-double arithmetic (powers included), so the result
/// is accurate to working precision whenever `κ(M)·ε < 1`, not just
/// backward stable.
pub fn solve_power_system(sys: &PowerSystem, tol: &Tolerances) -> Result<TauVector> {
    if !sys.is_square() {
        return Err(HupError::Domain(format!(
            "power system is {}×{}, expected square",
            sys.nodes.len(),
            sys.column_powers.len()
        )));
    }
    check_gap(&sys.nodes, tol)?;
    let singular = || HupError::IllConditioned {
        min_gap: min_pairwise_gap(&sys.nodes),
        tolerance: tol.node_gap,
    };
    let mut lu = sys.matrix();
    let mut perm: Vec<usize> = (0..lu.len()).collect();
    lu_factor(&mut lu, &mut perm).ok_or_else(singular)?;
    let mut coefficients = lu_solve(&lu, &perm, &sys.rhs());
    let powers: Vec<Vec<DdComplex>> = sys
        .nodes
        .iter()
        .map(|&a| {
            let a = DdComplex::from(a);
            sys.column_powers
                .iter()
                .chain(std::iter::once(&sys.target_power))
                .map(|&c| a.powu(c))
                .collect()
        })
        .collect();
    for _ in 0..MAX_REFINEMENT_STEPS {
        let residual: Vec<Complex64> = powers
            .iter()
            .map(|row| {
                let (target, columns) = row.split_last().expect("target power present");
                let mut acc = DdComplex::ZERO - *target;
                for (&x, &power) in coefficients.iter().zip(columns) {
                    acc = acc - power * x;
                }
                acc.to_complex()
            })
            .collect();
        let correction = lu_solve(&lu, &perm, &residual);
        let size: f64 = coefficients.iter().map(|x| x.norm()).fold(0.0, f64::max);
        let step: f64 = correction.iter().map(|x| x.norm()).fold(0.0, f64::max);
        for (x, d) in coefficients.iter_mut().zip(&correction) {
            *x += d;
        }
        if step <= f64::EPSILON * size {
            break;
        }
    }
    let residual = sys.residual(&coefficients);
    Ok(TauVector {
        coefficients,
        residual,
    })
}

/// Upper-triangular form produced by the row-reduction chain.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedMatrix {
    pub upper: Matrix,
    pub pivots: Vec<Complex64>,
    pub column_powers: Vec<u32>,
}

impl ReducedMatrix {
    pub fn pivot_product(&self) -> Complex64 {
        self.pivots.iter().product()
    }

    pub fn final_pivot(&self) -> Complex64 {
        *self.pivots.last().expect("reduced matrix is never empty")
    }
}

/// Reduces the matrix with rows `(β_i^0, …, β_i^n, β_i^p)` to upper
/// triangular form.
///
/// Stage `k` replaces every row `R_i`, `i > k`, by
/// `R_i - (U_{ik} / U_{kk}) R_k`; the first two stages are `R_i - R_0` and
/// `R'_i - ((β_i - β_0)/(β_1 - β_0)) R'_1`. No row exchanges occur, so the
/// pivot product is the determinant of the original matrix and every entry
/// of row `k` has the closed form given by [`reduced_entry_closed_form`].
pub fn appendix_a_reduce(
    betas: &UnimodularTuple,
    n: usize,
    p: u32,
    tol: &Tolerances,
) -> Result<ReducedMatrix> {
    let size = n + 2;
    if betas.len() != size {
        return Err(HupError::Domain(format!(
            "expected {size} nodes for n = {n}, got {}",
            betas.len()
        )));
    }
    if (p as usize) < n + 1 {
        return Err(HupError::Domain(format!("need p ≥ n + 1, got p = {p}, n = {n}")));
    }
    check_gap(betas.as_slice(), tol)?;

    let column_powers = reduction_powers(n, p);
    let mut u = power_matrix(betas.as_slice(), &column_powers);
    for k in 0..size {
        let pivot = u[k][k];
        let (upper, lower) = u.split_at_mut(k + 1);
        let row_k = &upper[k];
        for row in lower.iter_mut() {
            let ratio = row[k] / pivot;
            row[k] = ZERO;
            for (x, &r) in row[k + 1..].iter_mut().zip(&row_k[k + 1..]) {
                *x -= ratio * r;
            }
        }
    }
    let pivots = (0..size).map(|k| u[k][k]).collect();
    Ok(ReducedMatrix {
        upper: u,
        pivots,
        column_powers,
    })
}

/// Column powers `0, 1, …, n, p`.
pub fn reduction_powers(n: usize, p: u32) -> Vec<u32> {
    (0..=n as u32).chain(std::iter::once(p)).collect()
}

/// Entry of row `row` and column power `power` after `row` elimination
/// stages: `Π_{l<row}(β_row - β_l) · h_{power-row}(β_0, …, β_row)`, zero when
/// `power < row`. Follows from repeated use of
/// `h_k(x̄,x) - h_k(x̄,y) = (x-y) h_{k-1}(x̄,x,y)`.
pub fn reduced_entry_closed_form(betas: &[Complex64], row: usize, power: u32) -> Complex64 {
    if (power as usize) < row {
        return ZERO;
    }
    let prefactor: Complex64 = (0..row).map(|l| betas[row] - betas[l]).product();
    prefactor * complete_homogeneous(power as usize - row, &betas[..=row])
}

/// Closed form of the last pivot:
/// `(h_{p-n}(β_0..β_{n-1}, β_{n+1}) - h_{p-n}(β_0..β_n)) · Π_{j<n}(β_{n+1} - β_j)`.
///
/// The difference is taken as "`β_{n+1}` version minus `β_n` version"; the
/// opposite orientation yields exactly the negative of the reduced entry.
pub fn final_pivot_closed_form(betas: &[Complex64], n: usize, p: u32) -> Complex64 {
    let degree = p as usize - n;
    let mut with_last = betas[..n].to_vec();
    with_last.push(betas[n + 1]);
    let diff = complete_homogeneous(degree, &with_last) - complete_homogeneous(degree, &betas[..=n]);
    let product: Complex64 = (0..n).map(|j| betas[n + 1] - betas[j]).product();
    diff * product
}

/// `|h_d(prefix, x) - h_d(prefix, y)|`.
pub fn node_discriminant(prefix: &[Complex64], x: Complex64, y: Complex64, degree: usize) -> f64 {
    let mut with_x = prefix.to_vec();
    with_x.push(x);
    let hx = complete_homogeneous(degree, &with_x);
    *with_x.last_mut().expect("nonempty") = y;
    let hy = complete_homogeneous(degree, &with_x);
    (hx - hy).norm()
}

/// `|h_{p-n}(a_0..a_n) - h_{p-n}(a_0..a_{n-1}, a_{n+1})|` with `a_j = e^{iπη_j}`.
pub fn hup_discriminant(etas: &[f64], n: usize, p: u32) -> Result<f64> {
    if etas.len() != n + 2 {
        return Err(HupError::Domain(format!(
            "expected {} phases for n = {n}, got {}",
            n + 2,
            etas.len()
        )));
    }
    if (p as usize) < n + 1 {
        return Err(HupError::Domain(format!("need p ≥ n + 1, got p = {p}, n = {n}")));
    }
    let a = UnimodularTuple::from_phases(etas);
    let a = a.as_slice();
    Ok(node_discriminant(&a[..n], a[n], a[n + 1], p as usize - n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sympoly::{elementary_symmetric, unit_phase};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1.0)
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(vandermonde_det(&[c(0.0), c(1.0)]), c(1.0));
        assert_eq!(vandermonde_det(&[c(1.0), c(2.0), c(3.0)]), c(2.0));
        let m = power_matrix(&[c(1.0), c(2.0), c(3.0)], &[0, 1, 2]);
        assert!(close(dense_determinant(&m), c(2.0), 1e-14));
        assert_eq!(vandermonde_det(&[c(1.0), c(2.0), c(1.0)]), c(0.0));
        assert_eq!(vandermonde_det(&[]), c(1.0));
        assert_eq!(vandermonde_det(&[c(4.0)]), c(1.0));
    }

    #[test]
    fn small_power_systems() {
        let tol = Tolerances::default();
        let a0 = unit_phase(0.3);
        let x = solve_power_system(&PowerSystem::canonical(vec![a0]), &tol).unwrap();
        assert!(close(x.coefficients[0], -a0, 1e-14));

        let a1 = unit_phase(1.1);
        let x = solve_power_system(&PowerSystem::canonical(vec![a0, a1]), &tol).unwrap();
        assert!(close(x.coefficients[0], a0 * a1, 1e-12));
        assert!(close(x.coefficients[1], -(a0 + a1), 1e-12));
        assert!(x.residual < 1e-13);
    }

    #[test]
    fn roots_of_unity_solution_is_minus_one_then_zeros() {
        let tol = Tolerances::default();
        for n in 0..7usize {
            let m = n + 1;
            let nodes: Vec<_> = (0..m).map(|k| unit_phase(2.0 * k as f64 / m as f64)).collect();
            let x = solve_power_system(&PowerSystem::canonical(nodes.clone()), &tol).unwrap();
            assert!(close(x.coefficients[0], c(-1.0), 1e-10), "n={n}");
            for t in &x.coefficients[1..] {
                assert!(t.norm() < 1e-10);
            }
            // closed form (-1)^m e_m agrees for every m
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            assert!(close(elementary_symmetric(m, &nodes) * sign, c(-1.0), 1e-10));
        }
    }

    #[test]
    fn coincident_nodes_are_rejected() {
        let tol = Tolerances::default();
        let a = unit_phase(0.4);
        let err = solve_power_system(&PowerSystem::canonical(vec![a, a * Complex64::from_polar(1.0, 1e-12)]), &tol)
            .unwrap_err();
        assert!(matches!(err, HupError::IllConditioned { min_gap, .. } if min_gap < 1e-9));
    }

    #[test]
    fn refinement_recovers_clustered_nodes() {
        // two pairs 1e-5 apart: plain LU loses about eight digits here
        let etas = [0.1, 0.1 + 1e-5, 0.7, 1.3, 1.3 + 1e-5, 1.8];
        let a: Vec<Complex64> = etas.iter().map(|&e| unit_phase(e)).collect();
        let m = a.len();
        let sol = solve_power_system(&PowerSystem::canonical(a.clone()), &Tolerances::default()).unwrap();
        for (k, tau) in sol.coefficients.iter().enumerate() {
            let sign = if (m - k).is_multiple_of(2) { 1.0 } else { -1.0 };
            assert!((tau - elementary_symmetric(m - k, &a) * sign).norm() < 1e-13, "k = {k}");
        }
    }

    #[test]
    fn invalid_systems() {
        assert!(PowerSystem::new(vec![c(1.0)], vec![1, 0], 3).is_err());
        assert!(PowerSystem::new(vec![c(1.0)], vec![0, 2], 2).is_err());
        let rect = PowerSystem::new(vec![unit_phase(0.1)], vec![0, 1], 3).unwrap();
        assert!(matches!(
            solve_power_system(&rect, &Tolerances::default()),
            Err(HupError::Domain(_))
        ));
    }

    #[test]
    fn non_canonical_columns() {
        // columns 0..=n and target p, as in the auxiliary systems
        let tol = Tolerances::default();
        let nodes: Vec<_> = [0.1, 0.7, 1.3].iter().map(|&e| unit_phase(e)).collect();
        let sys = PowerSystem::new(nodes, vec![0, 1, 2], 5).unwrap();
        let x = solve_power_system(&sys, &tol).unwrap();
        assert!(x.residual < 1e-12);
    }

    #[test]
    fn three_by_three_reduction_by_hand() {
        // R'_i = R_i - R_0, R''_2 = R'_2 - ((β_2-β_0)/(β_1-β_0)) R'_1 leaves
        // (β_2² - β_0²) - (β_2 - β_0)(β_1 + β_0) = (β_2 - β_0)(β_2 - β_1).
        let tol = Tolerances::default();
        let phases = [0.15, 0.8, 1.55];
        let betas = UnimodularTuple::from_phases(&phases);
        let b = betas.as_slice();
        let red = appendix_a_reduce(&betas, 1, 2, &tol).unwrap();
        let expected = (b[2] - b[0]) * (b[2] - b[1]);
        assert!(close(red.final_pivot(), expected, 1e-12));
        assert!(close(red.pivots[1], b[1] - b[0], 1e-12));
        // the literal (β_1 - β_2)(β_2 - β_0) orientation is the negative
        assert!(close(red.final_pivot(), -(b[1] - b[2]) * (b[2] - b[0]), 1e-12));
        assert!(close(final_pivot_closed_form(b, 1, 2), expected, 1e-12));
    }

    #[test]
    fn consecutive_case_pivot_factor() {
        // p = n + 1: the h_1 difference is β_{n+1} - β_n.
        let tol = Tolerances::default();
        for n in 1..5 {
            let phases: Vec<f64> = (0..n + 2).map(|j| 0.37 * j as f64 + 0.05).collect();
            let betas = UnimodularTuple::from_phases(&phases);
            let b = betas.as_slice();
            let red = appendix_a_reduce(&betas, n, n as u32 + 1, &tol).unwrap();
            let product: Complex64 = (0..=n).map(|j| b[n + 1] - b[j]).product();
            assert!(close(red.final_pivot(), product, 1e-10));
        }
    }

    #[test]
    fn reduced_entries_match_closed_form() {
        let tol = Tolerances::default();
        let phases = [0.05, 0.61, 1.02, 1.44, 1.9];
        let betas = UnimodularTuple::from_phases(&phases);
        let red = appendix_a_reduce(&betas, 3, 7, &tol).unwrap();
        for (row, entries) in red.upper.iter().enumerate() {
            for (col, &power) in red.column_powers.iter().enumerate() {
                let expected = if col < row {
                    ZERO
                } else {
                    reduced_entry_closed_form(betas.as_slice(), row, power)
                };
                assert!(close(entries[col], expected, 1e-10), "row {row} col {col}");
            }
        }
    }

    #[test]
    fn reduce_rejects_bad_input() {
        let tol = Tolerances::default();
        let betas = UnimodularTuple::from_phases(&[0.1, 0.5, 0.1]);
        assert!(matches!(
            appendix_a_reduce(&betas, 1, 3, &tol),
            Err(HupError::IllConditioned { .. })
        ));
        let betas = UnimodularTuple::from_phases(&[0.1, 0.5, 0.9]);
        assert!(appendix_a_reduce(&betas, 1, 1, &tol).is_err());
        assert!(appendix_a_reduce(&betas, 2, 4, &tol).is_err());
    }

    #[test]
    fn discriminant_examples() {
        assert!((hup_discriminant(&[0.0, 0.5, 1.5], 1, 3).unwrap() - 2.0).abs() < 1e-14);
        assert_eq!(hup_discriminant(&[0.2, 0.9, 0.9], 1, 2).unwrap(), 0.0);

        // n = 1, p = 3: |a_1 - a_2| · |h_1(a_0, a_1, a_2)|
        let etas = [0.3, 1.1, 1.7];
        let a = UnimodularTuple::from_phases(&etas);
        let a = a.as_slice();
        let factored = (a[1] - a[2]).norm() * (a[0] + a[1] + a[2]).norm();
        assert!((hup_discriminant(&etas, 1, 3).unwrap() - factored).abs() < 1e-13);

        assert!(hup_discriminant(&[0.0, 0.5], 1, 3).is_err());
        assert!(hup_discriminant(&[0.0, 0.5, 1.0], 1, 1).is_err());
    }
}
