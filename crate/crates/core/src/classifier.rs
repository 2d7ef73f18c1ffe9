//! Fibers of a candidate set and their partition classes.
//!
//! A finite candidate set `Λ ⊂ ℝ²` is folded modulo 2 in `η`. For each
//! projected `ξ` the fiber `Σ_ξ ⊂ [0, 2)` is assigned a class in
//! `1..=n+2`:
//!
//! * `m ≤ n` distinct values: class `m`;
//! * at least `p + 1` values: class `n + 2` (a degree-`p-n` polynomial in
//!   one node takes a given value at most `p - n` times);
//! * otherwise class `n + 2` if some choice of `n` prefix values and a pair
//!   `x ≠ y` gives `|h_{p-n}(prefix, x) - h_{p-n}(prefix, y)|` above the
//!   discriminant threshold, class `n + 1` if not.
//!
//! Membership in the dispensable subsets is not decided here: it depends on
//! local Fourier representability of functions on each class, which a
//! finite point set cannot settle.

use num_complex::Complex64;

use crate::config::{Tolerances, SUBSET_SEARCH_CAP};
use crate::error::{HupError, Result};
use crate::linsys::node_discriminant;
use crate::sympoly::unit_phase;

#[derive(Debug, Clone, PartialEq)]
pub struct LambdaSet {
    points: Vec<(f64, f64)>,
    folded: bool,
}

impl LambdaSet {
    pub fn new(points: Vec<(f64, f64)>) -> Self {
        Self {
            points,
            folded: false,
        }
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn is_folded(&self) -> bool {
        self.folded
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Reduces `η` into `[0, 2)`, treating values within `merge` of 2 as 0.
fn fold_eta(eta: f64, merge: f64) -> f64 {
    let r = eta.rem_euclid(2.0);
    if r >= 2.0 - merge {
        0.0
    } else {
        r
    }
}

/// Folds every `η` into `[0, 2)` and merges points closer than
/// `tol.merge` in both coordinates. Points are returned sorted by `ξ`, then
/// `η`; all points of one `ξ` cluster share the cluster's first `ξ`.
pub fn fold_periodic(raw: &LambdaSet, tol: &Tolerances) -> LambdaSet {
    let mut pts: Vec<(f64, f64)> = raw
        .points
        .iter()
        .map(|&(xi, eta)| (xi, fold_eta(eta, tol.merge)))
        .collect();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));

    let mut out: Vec<(f64, f64)> = Vec::with_capacity(pts.len());
    let mut start = 0;
    while start < pts.len() {
        let anchor = pts[start].0;
        let mut end = start;
        while end < pts.len() && pts[end].0 - anchor <= tol.merge {
            end += 1;
        }
        let mut etas: Vec<f64> = pts[start..end].iter().map(|p| p.1).collect();
        etas.sort_by(f64::total_cmp);
        for eta in dedup_sorted(etas, tol.merge) {
            out.push((anchor, eta));
        }
        start = end;
    }
    LambdaSet {
        points: out,
        folded: true,
    }
}

fn dedup_sorted(etas: Vec<f64>, merge: f64) -> Vec<f64> {
    let mut kept: Vec<f64> = Vec::with_capacity(etas.len());
    for eta in etas {
        match kept.last() {
            Some(&last) if eta - last <= merge => {}
            _ => kept.push(eta),
        }
    }
    // the circle closes at 2 ≡ 0
    if kept.len() > 1 && kept[0] + 2.0 - kept[kept.len() - 1] <= merge {
        kept.pop();
    }
    kept
}

/// `Σ_ξ`: sorted η-values of points whose first coordinate is within
/// `tol.merge` of `xi`.
pub fn fiber(lambda: &LambdaSet, xi: f64, tol: &Tolerances) -> Result<Vec<f64>> {
    if !lambda.folded {
        return Err(HupError::NotFolded);
    }
    let mut etas: Vec<f64> = lambda
        .points
        .iter()
        .filter(|p| (p.0 - xi).abs() <= tol.merge)
        .map(|p| p.1)
        .collect();
    etas.sort_by(f64::total_cmp);
    Ok(dedup_sorted(etas, tol.merge))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of (prefix, pair) choices examined for a fiber of size `m`.
pub fn search_size(m: usize, n: usize) -> u128 {
    binomial(m, n) * binomial(m.saturating_sub(n), 2)
}

/// Class index in `1..=n+2` of a fiber with distinct values `etas`.
pub fn classify_fiber(etas: &[f64], n: usize, p: u32, tol: &Tolerances) -> Result<usize> {
    let m = etas.len();
    if m == 0 {
        return Err(HupError::Domain("empty fiber".into()));
    }
    if (p as usize) < n + 1 {
        return Err(HupError::Domain(format!("need p ≥ n + 1, got p = {p}, n = {n}")));
    }
    if m <= n {
        return Ok(m);
    }
    if m > p as usize {
        return Ok(n + 2);
    }
    if m == n + 1 {
        return Ok(n + 1);
    }
    let required = search_size(m, n);
    if required > SUBSET_SEARCH_CAP as u128 {
        return Err(HupError::CapExceeded {
            required,
            cap: SUBSET_SEARCH_CAP,
        });
    }
    let nodes: Vec<Complex64> = etas.iter().map(|&e| unit_phase(e)).collect();
    let degree = p as usize - n;
    if exists_separating_choice(&nodes, n, degree, tol.discriminant) {
        Ok(n + 2)
    } else {
        Ok(n + 1)
    }
}

/// Searches prefixes of size `n` (as index combinations) and, for each,
/// pairs among the remaining nodes.
fn exists_separating_choice(nodes: &[Complex64], n: usize, degree: usize, threshold: f64) -> bool {
    let m = nodes.len();
    let mut prefix: Vec<usize> = (0..n).collect();
    loop {
        let chosen: Vec<Complex64> = prefix.iter().map(|&i| nodes[i]).collect();
        let rest: Vec<usize> = (0..m).filter(|i| !prefix.contains(i)).collect();
        for (a, &i) in rest.iter().enumerate() {
            for &j in &rest[a + 1..] {
                if node_discriminant(&chosen, nodes[i], nodes[j], degree) > threshold {
                    return true;
                }
            }
        }
        if !next_combination(&mut prefix, m) {
            return false;
        }
    }
}

/// Advances a sorted index combination in lexicographic order.
fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    for pos in (0..k).rev() {
        if idx[pos] < m - k + pos {
            idx[pos] += 1;
            for later in pos + 1..k {
                idx[later] = idx[later - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, PartialEq)]
pub struct FiberClass {
    pub xi: f64,
    pub etas: Vec<f64>,
    pub class: usize,
}

/// Fibers of a folded set with their classes, ordered by `ξ`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberPartition {
    pub n: usize,
    pub p: u32,
    pub fibers: Vec<FiberClass>,
}

impl FiberPartition {
    pub fn class_of(&self, xi: f64, tol: &Tolerances) -> Option<usize> {
        self.fibers
            .iter()
            .find(|f| (f.xi - xi).abs() <= tol.merge)
            .map(|f| f.class)
    }

    /// `counts[m - 1] = |Π^m(Λ)|` for `m = 1..=n+2`.
    pub fn counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n + 2];
        for f in &self.fibers {
            counts[f.class - 1] += 1;
        }
        counts
    }

    pub fn projection_size(&self) -> usize {
        self.fibers.len()
    }
}

/// Classifies every fiber of a folded set.
pub fn partition(lambda: &LambdaSet, n: usize, p: u32, tol: &Tolerances) -> Result<FiberPartition> {
    if !lambda.folded {
        return Err(HupError::NotFolded);
    }
    let mut fibers = Vec::new();
    let pts = &lambda.points;
    let mut start = 0;
    while start < pts.len() {
        let xi = pts[start].0;
        let mut end = start;
        while end < pts.len() && pts[end].0 - xi <= tol.merge {
            end += 1;
        }
        let etas: Vec<f64> = pts[start..end].iter().map(|q| q.1).collect();
        let class = classify_fiber(&etas, n, p, tol)?;
        fibers.push(FiberClass { xi, etas, class });
        start = end;
    }
    Ok(FiberPartition { n, p, fibers })
}
