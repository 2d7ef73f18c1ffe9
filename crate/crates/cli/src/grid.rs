//! Transform grids and their CSV form.

use std::fmt::Write as _;
use std::path::Path;

use hup_core::measures::construct_consecutive_witness;
use hup_core::{Complex64, CrossMeasure, LineMeasure, WitnessLines};

use crate::error::{LabError, LabResult};
use crate::report::{fmt_f64, Check, Report};
use crate::scenario::{DensitySpec, FtGrid, MeasureSpec, Scenario};

pub const CSV_HEADER: &str = "xi,eta,re,im,abs";

enum Measure {
    Zero,
    Lines(LineMeasure),
    Cross(CrossMeasure),
}

impl Measure {
    fn ft(&self, xi: f64, eta: f64) -> Complex64 {
        match self {
            Measure::Zero => Complex64::new(0.0, 0.0),
            Measure::Lines(m) => m.ft(xi, eta),
            Measure::Cross(m) => m.ft(xi, eta),
        }
    }
}

/// Sampled transform in row-major order (`ξ` outer, `η` inner).
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub rows: Vec<(f64, f64, Complex64)>,
    /// Heights on which the measure is known to be annihilated.
    pub annihilated: Option<WitnessLines>,
}

pub fn evaluate_grid(s: &FtGrid) -> LabResult<Grid> {
    let (measure, annihilated) = match &s.measure {
        MeasureSpec::Zero => (Measure::Zero, None),
        MeasureSpec::Lines { heights, lines } => {
            let densities = lines.iter().map(DensitySpec::build).collect::<LabResult<_>>()?;
            (Measure::Lines(LineMeasure::new(heights.clone(), densities)?), None)
        }
        MeasureSpec::ConsecutiveWitness { n, seed_density } => {
            let (m, lines) = construct_consecutive_witness(*n, &seed_density.build()?)?;
            (Measure::Lines(m), Some(lines))
        }
        MeasureSpec::Cross { levels } => {
            let densities = levels.iter().map(DensitySpec::build).collect::<LabResult<_>>()?;
            (Measure::Cross(CrossMeasure::new(densities)?), None)
        }
    };
    let etas = s.eta.values();
    let rows = s
        .xi
        .values()
        .into_iter()
        .flat_map(|xi| etas.iter().map(move |&eta| (xi, eta)))
        .map(|(xi, eta)| (xi, eta, measure.ft(xi, eta)))
        .collect();
    Ok(Grid { rows, annihilated })
}

impl Grid {
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(96 * (self.rows.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for &(xi, eta, v) in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                fmt_f64(xi),
                fmt_f64(eta),
                fmt_f64(v.re),
                fmt_f64(v.im),
                fmt_f64(v.norm())
            );
        }
        out
    }

    pub fn summarize(&self, s: &FtGrid, report: &mut Report) {
        let max_abs = self.rows.iter().map(|r| r.2.norm()).fold(0.0, f64::max);
        report.value("rows", self.rows.len().to_string());
        report.number("max_abs", max_abs);
        if let Some(lines) = &self.annihilated {
            let on: Vec<f64> = self
                .rows
                .iter()
                .filter(|r| lines.contains_height(r.1, 1e-9))
                .map(|r| r.2.norm())
                .collect();
            report.value("rows_on_lambda", on.len().to_string());
            report.check(Check::at_most(
                "max_abs_on_lambda",
                on.iter().copied().fold(0.0, f64::max),
                s.tolerance,
            ));
        }
    }
}

/// Writes the grid of an `ft_grid` scenario to `path` and returns its report.
pub fn emit_grid(scenario: &Scenario, path: &Path) -> LabResult<Report> {
    let Scenario::FtGrid(s) = scenario else {
        return Err(LabError::Usage(format!(
            "grid needs an ft_grid scenario, got {}",
            scenario.kind()
        )));
    };
    let grid = evaluate_grid(s)?;
    std::fs::write(path, grid.to_csv()).map_err(|source| LabError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut report = Report::new(scenario.echo());
    grid.summarize(s, &mut report);
    Ok(report)
}
