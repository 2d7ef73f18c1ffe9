use std::f64::consts::PI;

use hup_core::classifier::{classify_fiber, fold_periodic, partition};
use hup_core::linsys::{
    appendix_a_reduce, dense_determinant, final_pivot_closed_form, hup_discriminant, power_matrix,
    solve_power_system, vandermonde_det,
};
use hup_core::measures::{
    construct_consecutive_witness, construct_cross_diagonal_witness, line_system_ft, Density,
    DensityAtom, LineMeasure,
};
use hup_core::quadrature::adaptive;
use hup_core::sympoly::{
    complete_homogeneous, elementary_symmetric, h_difference_residual, unit_phase,
};
use hup_core::{Complex64, HcFunction, LambdaSet, PowerSystem, Tolerances, UnimodularTuple};
use nalgebra::DMatrix;
use proptest::prelude::*;

fn tol() -> Tolerances {
    Tolerances::default()
}

fn phases(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0f64..2.0, len)
}

/// Phases on a coarse grid kept at least `0.05` apart.
fn spread_phases(count: usize) -> impl Strategy<Value = Vec<f64>> {
    Just((0..40).map(|k| k as f64 * 0.05).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(move |v| v[..count].to_vec())
}

fn nodes(etas: &[f64]) -> Vec<Complex64> {
    etas.iter().map(|&e| unit_phase(e)).collect()
}

fn small_complex() -> impl Strategy<Value = Complex64> {
    (0.0f64..0.5, 0.0f64..2.0 * PI).prop_map(|(r, a)| Complex64::from_polar(r, a))
}

/// `h_k` via partial fractions: `Σ_i x_i^{k+m-1} / Π_{j≠i}(x_i - x_j)`.
fn h_partial_fractions(k: usize, xs: &[Complex64]) -> Complex64 {
    let m = xs.len();
    (0..m)
        .map(|i| {
            let denom: Complex64 = (0..m).filter(|&j| j != i).map(|j| xs[i] - xs[j]).product();
            xs[i].powu((k + m - 1) as u32) / denom
        })
        .sum()
}

fn nalgebra_det(m: &[Vec<Complex64>]) -> Complex64 {
    let n = m.len();
    DMatrix::from_fn(n, n, |i, j| m[i][j]).determinant()
}

/// Uncapped reference: all `n`-subsets as prefix and all pairs of the rest,
/// no cardinality shortcut, `h` from partial fractions.
fn brute_force_class(etas: &[f64], n: usize, p: u32) -> usize {
    let m = etas.len();
    if m <= n + 1 {
        return m;
    }
    let a = nodes(etas);
    let degree = p as usize - n;
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != n {
            continue;
        }
        let prefix: Vec<Complex64> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| a[i]).collect();
        let rest: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 0).collect();
        for (s, &i) in rest.iter().enumerate() {
            for &j in &rest[s + 1..] {
                let mut with_i = prefix.clone();
                with_i.push(a[i]);
                let mut with_j = prefix.clone();
                with_j.push(a[j]);
                let d = h_partial_fractions(degree, &with_i) - h_partial_fractions(degree, &with_j);
                if d.norm() > 1e-9 {
                    return n + 2;
                }
            }
        }
    }
    n + 1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn h_difference_identity(etas in phases(0..=6), x in 0.0f64..2.0, y in 0.0f64..2.0, k in 0usize..=8) {
        let r = h_difference_residual(k, &nodes(&etas), unit_phase(x), unit_phase(y));
        prop_assert!(r.norm() <= 1e-12);
    }

    #[test]
    fn h_matches_partial_fractions(etas in spread_phases(5), k in 0usize..=10) {
        let xs = nodes(&etas);
        let ours = complete_homogeneous(k, &xs);
        let oracle = h_partial_fractions(k, &xs);
        prop_assert!((ours - oracle).norm() <= 1e-9 * oracle.norm().max(1.0));
    }

    #[test]
    fn generating_function(xs in prop::collection::vec(small_complex(), 1..=6)) {
        let t = Complex64::new(0.3, 0.0);
        let series: Complex64 = (0..=40).map(|k| complete_homogeneous(k, &xs) * t.powu(k as u32)).sum();
        let product: Complex64 = xs.iter().map(|x| (Complex64::new(1.0, 0.0) - x * t).inv()).product();
        prop_assert!((series - product).norm() <= 1e-10);
    }

    #[test]
    fn elementary_complete_duality(etas in phases(1..=8), k in 1usize..=8) {
        let xs = nodes(&etas);
        let sum: Complex64 = (0..=k)
            .map(|i| {
                let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                elementary_symmetric(i, &xs) * complete_homogeneous(k - i, &xs) * sign
            })
            .sum();
        prop_assert!(sum.norm() <= 1e-11);
    }

    #[test]
    fn vandermonde_against_nalgebra(etas in spread_phases(7)) {
        let a = nodes(&etas);
        let powers: Vec<u32> = (0..a.len() as u32).collect();
        let m = power_matrix(&a, &powers);
        let oracle = nalgebra_det(&m);
        prop_assert!((vandermonde_det(&a) - oracle).norm() <= 1e-10 * oracle.norm());
        prop_assert!((dense_determinant(&m) - oracle).norm() <= 1e-10 * oracle.norm());
    }

    #[test]
    fn canonical_tau_is_signed_elementary(etas in spread_phases(6)) {
        let a = nodes(&etas);
        let m = a.len();
        let sol = solve_power_system(&PowerSystem::canonical(a.clone()), &tol()).unwrap();
        for (k, tau) in sol.coefficients.iter().enumerate() {
            let sign = if (m - k).is_multiple_of(2) { 1.0 } else { -1.0 };
            let expected = elementary_symmetric(m - k, &a) * sign;
            prop_assert!((tau - expected).norm() <= 1e-10);
        }
        prop_assert!(sol.residual <= 1e-10);
    }

    #[test]
    fn pivot_product_is_determinant(n in 0usize..=5, extra in 0u32..=6, etas in phases(7..=7)) {
        let p = n as u32 + 1 + extra;
        prop_assume!(p <= 12);
        let betas = UnimodularTuple::from_phases(&etas[..n + 2]);
        prop_assume!(betas.min_gap() > 1e-2);
        let reduced = appendix_a_reduce(&betas, n, p, &tol()).unwrap();
        let m = power_matrix(betas.as_slice(), &reduced.column_powers);
        let oracle = nalgebra_det(&m);
        // the determinant is the Vandermonde product times a Schur polynomial,
        // which can vanish; the Vandermonde product sets the scale
        let scale = oracle.norm().max(vandermonde_det(betas.as_slice()).norm());
        prop_assert!((reduced.pivot_product() - oracle).norm() <= 1e-9 * scale);
        let closed = final_pivot_closed_form(betas.as_slice(), n, p);
        prop_assert!((reduced.final_pivot() - closed).norm() <= 1e-9 * closed.norm().max(1.0));
    }

    #[test]
    fn discriminant_ignores_prefix_order(etas in spread_phases(5), p in 4u32..=8) {
        let n = 3;
        let base = hup_discriminant(&etas, n, p).unwrap();
        let mut swapped = etas.clone();
        swapped.swap(0, 2);
        prop_assert!((hup_discriminant(&swapped, n, p).unwrap() - base).abs() <= 1e-10 * base.max(1.0));
        swapped.swap(1, 2);
        prop_assert!((hup_discriminant(&swapped, n, p).unwrap() - base).abs() <= 1e-10 * base.max(1.0));
    }

    #[test]
    fn folding_is_idempotent(points in prop::collection::vec((-3i32..3, -6.0f64..6.0), 0..30)) {
        let raw = LambdaSet::new(points.iter().map(|&(x, e)| (x as f64 * 0.5, e)).collect());
        let once = fold_periodic(&raw, &tol());
        let twice = fold_periodic(&once, &tol());
        prop_assert_eq!(once.points(), twice.points());
        prop_assert!(once.points().iter().all(|p| (0.0..2.0).contains(&p.1)));
    }

    #[test]
    fn partition_covers_projection(points in prop::collection::vec((0i32..6, 0i32..12), 1..40), n in 1usize..=3, extra in 0u32..=3) {
        let p = n as u32 + 1 + extra;
        let raw = LambdaSet::new(points.iter().map(|&(x, e)| (x as f64, e as f64 / 6.0)).collect());
        let folded = fold_periodic(&raw, &tol());
        let part = partition(&folded, n, p, &tol()).unwrap();
        let mut xs: Vec<i32> = points.iter().map(|p| p.0).collect();
        xs.sort();
        xs.dedup();
        prop_assert_eq!(part.counts().iter().sum::<usize>(), xs.len());
        prop_assert_eq!(part.projection_size(), xs.len());
        for x in xs {
            prop_assert!(part.class_of(x as f64, &tol()).is_some());
        }
    }

    #[test]
    fn classification_matches_brute_force(grid in Just((0..12).collect::<Vec<i32>>()).prop_shuffle(), m in 1usize..=8, n in 1usize..=3, extra in 0u32..=3) {
        let p = n as u32 + 1 + extra;
        let mut etas: Vec<f64> = grid[..m].iter().map(|&k| k as f64 / 6.0).collect();
        let shuffled = etas.clone();
        etas.sort_by(f64::total_cmp);
        let class = classify_fiber(&etas, n, p, &tol()).unwrap();
        prop_assert_eq!(class, brute_force_class(&etas, n, p));
        prop_assert_eq!(classify_fiber(&shuffled, n, p, &tol()).unwrap(), class);
    }

    #[test]
    fn class_is_monotone(grid in Just((0..12).collect::<Vec<i32>>()).prop_shuffle(), m in 1usize..=7, n in 1usize..=3, extra in 0u32..=3) {
        let p = n as u32 + 1 + extra;
        let etas: Vec<f64> = grid[..m].iter().map(|&k| k as f64 / 6.0).collect();
        let mut grown = etas.clone();
        grown.push(grid[m] as f64 / 6.0);
        let before = classify_fiber(&etas, n, p, &tol()).unwrap();
        let after = classify_fiber(&grown, n, p, &tol()).unwrap();
        prop_assert!(after >= before);
        prop_assert!(brute_force_class(&grown, n, p) >= brute_force_class(&etas, n, p));
    }

    #[test]
    fn line_transform_is_linear(a in -3.0f64..3.0, b in -3.0f64..3.0, xi in -8.0f64..8.0, eta in -4.0f64..4.0) {
        let f = Density::from(DensityAtom::gaussian(0.3, 0.7, 1.0).unwrap());
        let g = Density::from(DensityAtom::triangle(-0.5, 1.3, 2.0).unwrap());
        let mu = LineMeasure::new(vec![0.0, 2.0], vec![f.clone(), g.clone()]).unwrap();
        let nu = LineMeasure::new(vec![0.0, 2.0], vec![g.clone(), f.clone()]).unwrap();
        let (ca, cb) = (Complex64::new(a, 0.0), Complex64::new(b, 0.0));
        let combo = LineMeasure::new(
            vec![0.0, 2.0],
            vec![f.scaled(ca) + g.scaled(cb), g.scaled(ca) + f.scaled(cb)],
        )
        .unwrap();
        let lhs = line_system_ft(&combo, xi, eta);
        let rhs = line_system_ft(&mu, xi, eta) * a + line_system_ft(&nu, xi, eta) * b;
        prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
    }

    #[test]
    fn line_transform_is_two_periodic(xi in -8.0f64..8.0, eta in -4.0f64..4.0, k in -3i32..3) {
        let f = Density::from(DensityAtom::boxcar(0.1, 0.9, 1.0).unwrap());
        let mu = LineMeasure::on_lines(2, 5, vec![f.clone(), f.scaled(Complex64::new(0.0, 1.0)), f.clone(), -f.clone()]).unwrap();
        let shifted = line_system_ft(&mu, xi, eta + 2.0 * k as f64);
        prop_assert!((shifted - line_system_ft(&mu, xi, eta)).norm() <= 1e-11);
    }

    #[test]
    fn cross_diagonal_is_antisymmetric(widths in prop::collection::vec(0.2f64..2.0, 1..4), xi in -5.0f64..5.0, eta in -5.0f64..5.0) {
        let densities: Vec<Density> = widths
            .iter()
            .enumerate()
            .map(|(k, &w)| Density::from(DensityAtom::gaussian(k as f64 * 0.3, w, 1.0 + k as f64).unwrap()))
            .collect();
        let mu = construct_cross_diagonal_witness(densities).unwrap();
        prop_assert!((mu.ft(xi, eta) + mu.ft(eta, xi)).norm() <= 1e-12 * (1.0 + mu.ft(xi, eta).norm()));
        prop_assert!(mu.ft(xi, xi).norm() <= 1e-12);
    }

    #[test]
    fn consecutive_witness_vanishes_on_heights(n in 1usize..=4, xi in -10.0f64..10.0, k in -6i32..6) {
        let seed = Density::from(DensityAtom::unit_gaussian());
        let (mu, lines) = construct_consecutive_witness(n, &seed).unwrap();
        let eta = 2.0 * k as f64 / (n as f64 + 1.0);
        prop_assert!(lines.contains_height(eta, 1e-12));
        prop_assert!(mu.ft(xi, eta).norm() <= 1e-12);
    }

    #[test]
    fn substitution_consistency(c in prop_oneof![Just(1.0), Just(-0.5), Just(2.0)], lo in 0.1f64..0.8, len in 0.1f64..0.8) {
        // ∫_a^b F(h_c(t)) h_c'(t) dt = ∫_{h_c(a)}^{h_c(b)} F(v) dv on the right branch
        let h = HcFunction::new(c).unwrap();
        let a = h.t_min() + lo;
        let b = a + len;
        let f = |v: f64| Complex64::new((v * 0.7).cos() / (1.0 + v * v), 0.0);
        let lhs = adaptive(|t| f(h.eval(t)) * h.derivative(t), a, b, 1e-12, 500).unwrap();
        let rhs = adaptive(f, h.eval(a), h.eval(b), 1e-12, 500).unwrap();
        prop_assert!((lhs.value - rhs.value).norm() <= 1e-9);
    }
}

#[test]
fn roots_of_unity_solution() {
    for m in 1..=8usize {
        let a: Vec<Complex64> = (0..m)
            .map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / m as f64))
            .collect();
        let sol = solve_power_system(&PowerSystem::canonical(a), &tol()).unwrap();
        assert!((sol.coefficients[0] + 1.0).norm() < 1e-12, "m = {m}");
        for t in &sol.coefficients[1..] {
            assert!(t.norm() < 1e-12);
        }
    }
}
