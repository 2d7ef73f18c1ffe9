//! Dispatch from a scenario to the owning `hup_core` module.

use hup_core::classifier::{classify_fiber, fiber, fold_periodic, partition, search_size};
use hup_core::curves::{
    construct_single_line_witness, exp_curve_ft, psi_c, surface_ft, DEFAULT_SUPPORT_RADIUS,
};
use hup_core::linsys::{
    appendix_a_reduce, dense_determinant, final_pivot_closed_form, hup_discriminant, power_matrix,
    vandermonde_det,
};
use hup_core::measures::{
    construct_consecutive_witness, construct_cross_axis_witness, construct_cross_diagonal_witness,
    translation_periodicity_residual,
};
use hup_core::quadrature::adaptive_with_breaks;
use hup_core::{
    Complex64, CrossMeasure, CurveDensity, DensityAtom, LambdaSet, OscillationBudget, Tolerances,
    UnimodularTuple,
};

use crate::error::{LabError, LabResult};
use crate::grid::evaluate_grid;
use crate::report::{fmt_f64, Check, Comparator, Report};
use crate::scenario::*;

pub fn run_scenario(scenario: &Scenario) -> LabResult<Report> {
    let mut report = Report::new(scenario.echo());
    match scenario {
        Scenario::ConsecutiveWitness(s) => consecutive(s, &mut report)?,
        Scenario::CrossWitness(s) => cross(s, &mut report)?,
        Scenario::ExpCurveWitness(s) => exp_curve(s, &mut report)?,
        Scenario::SurfaceWitness(s) => surface(s, &mut report)?,
        Scenario::Classify(s) => classify(s, &mut report)?,
        Scenario::Discriminant(s) => discriminant(s, &mut report)?,
        Scenario::Reduce(s) => reduce(s, &mut report)?,
        Scenario::FtGrid(s) => {
            let grid = evaluate_grid(s)?;
            grid.summarize(s, &mut report);
        }
        Scenario::KroneckerCheck(s) => kronecker(s, &mut report)?,
    }
    Ok(report)
}

fn list(values: &[f64]) -> String {
    let items: Vec<String> = values.iter().map(|&v| fmt_f64(v)).collect();
    format!("[{}]", items.join(", "))
}

fn consecutive(s: &ConsecutiveWitness, report: &mut Report) -> LabResult<()> {
    let (mu, lines) = construct_consecutive_witness(s.n, &s.seed_density.build()?)?;
    let xis = s.xi.values();
    let off: Vec<f64> = (0..=s.n)
        .map(|k| (2 * k + 1) as f64 / (s.n + 1) as f64)
        .collect();
    let max_over = |etas: &[f64]| {
        xis.iter()
            .flat_map(|&xi| etas.iter().map(move |&eta| (xi, eta)))
            .map(|(xi, eta)| mu.ft(xi, eta).norm())
            .fold(0.0, f64::max)
    };
    report.value("line_heights", list(mu.heights()));
    report.value("lambda_heights", list(&lines.heights));
    report.value("off_heights", list(&off));
    report.value("xi_samples", xis.len().to_string());
    report.check(Check::at_most("max_abs_on_lambda", max_over(&lines.heights), s.tolerance));
    report.check(Check::at_least("max_abs_off_lambda", max_over(&off), s.off_threshold));
    Ok(())
}

fn cross(s: &CrossWitness, report: &mut Report) -> LabResult<()> {
    let densities = s.densities()?;
    let mu: CrossMeasure = match s.mode {
        CrossMode::Diagonal => construct_cross_diagonal_witness(densities)?,
        CrossMode::Axis => construct_cross_axis_witness(&densities[0])?,
    };
    let step = 2.0 * s.range / (s.samples - 1) as f64;
    let ts: Vec<f64> = (0..s.samples).map(|i| -s.range + step * i as f64).collect();
    let max_of = |f: &dyn Fn(f64) -> Complex64| ts.iter().map(|&t| f(t).norm()).fold(0.0, f64::max);
    report.value("levels", mu.level_count().to_string());
    report.value("samples", s.samples.to_string());
    report.check(Check::at_most("max_abs_on_diagonal", max_of(&|t| mu.ft(t, t)), s.tolerance));
    if s.mode == CrossMode::Axis {
        report.check(Check::at_most("max_abs_on_xi_axis", max_of(&|t| mu.ft(t, 0.0)), s.tolerance));
    }
    report.check(Check::at_least(
        "max_abs_off_diagonal",
        max_of(&|t| mu.ft(t, t + 1.0)),
        s.off_threshold,
    ));
    Ok(())
}

/// `∫|f|` over a partition, to `1e-10`.
fn l1_norm(f: impl Fn(f64) -> Complex64, points: &[f64]) -> LabResult<f64> {
    Ok(adaptive_with_breaks(|t| Complex64::new(f(t).norm(), 0.0), points, 1e-10, 100_000)?
        .value
        .re)
}

fn exp_curve(s: &ExpCurveWitness, report: &mut Report) -> LabResult<()> {
    let tol = Tolerances::default();
    let budget = OscillationBudget::standard();
    let phi = DensityAtom::odd_bump_on(0.0, s.inner, s.outer, s.amplitude)?;
    let g = construct_single_line_witness(s.c, &phi, &tol)?;

    let mut on = 0.0f64;
    let mut off = 0.0f64;
    let mut quad_error = 0.0f64;
    for x in s.x.values() {
        let a = exp_curve_ft(&g, x, s.c * x, &budget, &tol)?;
        let b = exp_curve_ft(&g, x, s.c * x + s.d, &budget, &tol)?;
        on = on.max(a.value.norm());
        off = off.max(b.value.norm());
        quad_error = quad_error.max(a.error).max(b.error);
    }

    let mut phi_points = phi.breakpoints();
    phi_points.sort_by(f64::total_cmp);
    let mass_phi = l1_norm(|u| phi.eval(u), &phi_points)?;
    let mass_g = l1_norm(|t| g.eval(t), &g.partition())?;

    let mut psi_defect = 0.0f64;
    let mut odd_defect = 0.0f64;
    for i in 0..=200 {
        let u = s.outer * (i as f64 / 200.0);
        let plus = psi_c(&g, s.c, u, &tol)?;
        let minus = psi_c(&g, s.c, -u, &tol)?;
        psi_defect = psi_defect.max((plus - phi.eval(u)).norm());
        odd_defect = odd_defect.max((plus + minus).norm());
    }

    let (lo, hi) = g.support();
    report.value("support", list(&[lo, hi]));
    report.number("l1_g", mass_g);
    report.number("l1_phi", mass_phi);
    report.number("max_quadrature_error", quad_error);
    report.check(Check::at_most("max_abs_on_line", on, s.tolerance));
    report.check(Check::at_least("l1_ratio", mass_g / mass_phi, s.mass_ratio));
    report.check(Check::at_least("max_abs_on_shifted_line", off, s.off_threshold));
    report.check(Check::at_most("psi_minus_phi", psi_defect, 1e-10));
    report.check(Check::at_most("psi_oddness", odd_defect, 1e-10));
    Ok(())
}

fn surface(s: &SurfaceWitness, report: &mut Report) -> LabResult<()> {
    let tol = Tolerances::default();
    let budget = OscillationBudget::standard();
    let h = CurveDensity::from_density(s.h.build()?, DEFAULT_SUPPORT_RADIUS)?;
    let tau = match s.case {
        SurfaceCase::OddFactor => {
            let psi = s.psi.build()?;
            if !psi.is_odd() || psi.center() != 0.0 {
                return Err(LabError::Scenario("`psi` must be an odd_bump centred at 0".into()));
            }
            CurveDensity::from_density(psi.into(), DEFAULT_SUPPORT_RADIUS)?
        }
        SurfaceCase::CurveFactor => {
            let phi = DensityAtom::odd_bump_on(0.0, s.inner, s.outer, 1.0)?;
            construct_single_line_witness(s.c, &phi, &tol)?
        }
    };
    // hyperplane point and its shifted counterpart for free coordinates (a, b)
    let place = |a: f64, b: f64, shift: f64| -> [f64; 3] {
        match s.case {
            SurfaceCase::OddFactor => [shift, a, b],
            SurfaceCase::CurveFactor => [a, b, s.c * a + shift],
        }
    };
    let axis = s.axis.values();
    let mut on = 0.0f64;
    let mut off = 0.0f64;
    let mut quad_error = 0.0f64;
    for &a in &axis {
        for &b in &axis {
            let x = surface_ft(&tau, &h, place(a, b, 0.0), &budget, &tol)?;
            let y = surface_ft(&tau, &h, place(a, b, 1.0), &budget, &tol)?;
            on = on.max(x.value.norm());
            off = off.max(y.value.norm());
            quad_error = quad_error.max(x.error).max(y.error);
        }
    }
    report.value("samples", (axis.len() * axis.len()).to_string());
    report.number("max_quadrature_error", quad_error);
    report.check(Check::at_most("max_abs_on_hyperplane", on, s.tolerance));
    report.check(Check::at_least("max_abs_off_hyperplane", off, s.off_threshold));
    Ok(())
}

fn classify(s: &Classify, report: &mut Report) -> LabResult<()> {
    let tol = Tolerances::default();
    if let Some(etas) = &s.etas {
        let raw = LambdaSet::new(etas.iter().map(|&e| (0.0, e)).collect());
        let sigma = fiber(&fold_periodic(&raw, &tol), 0.0, &tol)?;
        let class = classify_fiber(&sigma, s.n, s.p, &tol)?;
        report.value("fiber", list(&sigma));
        report.value("search_size", search_size(sigma.len(), s.n).to_string());
        report.value("class", class.to_string());
        if let Some(expected) = s.expected {
            report.check(Check::new("class", class as f64, Comparator::Equal, expected as f64));
        }
    }
    if let Some(points) = &s.points {
        let raw = LambdaSet::new(points.iter().map(|q| (q[0], q[1])).collect());
        let part = partition(&fold_periodic(&raw, &tol), s.n, s.p, &tol)?;
        let counts = part.counts();
        for (m, count) in counts.iter().enumerate() {
            report.value(format!("class_{}", m + 1), count.to_string());
        }
        report.value("projection_size", part.projection_size().to_string());
        report.check(Check::new(
            "partition_total",
            counts.iter().sum::<usize>() as f64,
            Comparator::Equal,
            part.projection_size() as f64,
        ));
        if let Some(expected) = s.expected {
            let outside = part.fibers.iter().filter(|f| f.class != expected).count();
            report.check(Check::at_most("fibers_outside_expected_class", outside as f64, 0.0));
        }
    }
    Ok(())
}

fn discriminant(s: &Discriminant, report: &mut Report) -> LabResult<()> {
    let value = hup_discriminant(&s.etas, s.n, s.p)?;
    report.number("discriminant", value);
    report.value(
        "separating",
        (value > Tolerances::default().discriminant).to_string(),
    );
    if let Some(expected) = s.expected {
        report.check(Check::at_most("abs_error", (value - expected).abs(), s.tolerance));
    }
    Ok(())
}

fn reduce(s: &Reduce, report: &mut Report) -> LabResult<()> {
    let tol = Tolerances::default();
    let betas = UnimodularTuple::from_phases(&s.betas);
    let reduced = appendix_a_reduce(&betas, s.n, s.p, &tol)?;
    let det = dense_determinant(&power_matrix(betas.as_slice(), &reduced.column_powers));
    let closed = final_pivot_closed_form(betas.as_slice(), s.n, s.p);
    // the determinant can vanish; the Vandermonde product sets its scale
    let scale = det.norm().max(vandermonde_det(betas.as_slice()).norm());
    let pivot = reduced.final_pivot();
    report.value("pivots", reduced.pivots.len().to_string());
    report.number("final_pivot_re", pivot.re);
    report.number("final_pivot_im", pivot.im);
    report.number("determinant_re", det.re);
    report.number("determinant_im", det.im);
    report.check(Check::at_most(
        "pivot_product_vs_determinant",
        (reduced.pivot_product() - det).norm() / scale,
        s.tolerance,
    ));
    report.check(Check::at_most(
        "final_pivot_vs_closed_form",
        (pivot - closed).norm() / closed.norm().max(1.0),
        s.tolerance,
    ));
    Ok(())
}

fn kronecker(s: &KroneckerCheck, report: &mut Report) -> LabResult<()> {
    let residual = translation_periodicity_residual(&s.density.build()?, s.alpha, s.samples)?;
    report.number("residual", residual);
    report.check(Check::at_least("periodicity_residual", residual, s.tolerance));
    Ok(())
}
