use std::fmt::Write as _;

/// Floats in reports and grids: 17 significant digits, enough to
/// round-trip any `f64`.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparator {
    AtMost,
    AtLeast,
    Equal,
}

impl Comparator {
    fn symbol(self) -> &'static str {
        match self {
            Comparator::AtMost => "<=",
            Comparator::AtLeast => ">=",
            Comparator::Equal => "==",
        }
    }

    fn holds(self, measured: f64, threshold: f64) -> bool {
        match self {
            Comparator::AtMost => measured <= threshold,
            Comparator::AtLeast => measured >= threshold,
            Comparator::Equal => measured == threshold,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub threshold: f64,
    pub comparator: Comparator,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, measured: f64, comparator: Comparator, threshold: f64) -> Self {
        Self {
            name: name.into(),
            measured,
            threshold,
            comparator,
            pass: comparator.holds(measured, threshold),
        }
    }

    pub fn at_most(name: impl Into<String>, measured: f64, threshold: f64) -> Self {
        Self::new(name, measured, Comparator::AtMost, threshold)
    }

    pub fn at_least(name: impl Into<String>, measured: f64, threshold: f64) -> Self {
        Self::new(name, measured, Comparator::AtLeast, threshold)
    }
}

/// Outcome of one scenario. Wall-clock timing is kept out of the report so
/// that reruns are byte-identical.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub echo: String,
    pub values: Vec<(String, String)>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(echo: String) -> Self {
        Self {
            echo,
            values: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn value(&mut self, name: impl Into<String>, v: impl Into<String>) {
        self.values.push((name.into(), v.into()));
    }

    pub fn number(&mut self, name: impl Into<String>, v: f64) {
        self.value(name, fmt_f64(v));
    }

    pub fn check(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check_named(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render(&self) -> String {
        let mut out = String::from("[scenario]\n");
        out.push_str(&self.echo);
        if !self.echo.ends_with('\n') {
            out.push('\n');
        }
        out.push_str("\n[values]\n");
        for (name, v) in &self.values {
            let _ = writeln!(out, "{name} = {v}");
        }
        out.push_str("\n[checks]\n");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{} {}: {} {} {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                fmt_f64(c.measured),
                c.comparator.symbol(),
                fmt_f64(c.threshold),
            );
        }
        let _ = writeln!(out, "\nstatus: {}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

/// Report body for a scenario that stopped with an error.
pub fn render_error(echo: Option<&str>, message: &str) -> String {
    let mut out = String::new();
    if let Some(echo) = echo {
        out.push_str("[scenario]\n");
        out.push_str(echo);
        if !echo.ends_with('\n') {
            out.push('\n');
        }
        out.push('\n');
    }
    let _ = writeln!(out, "error: {message}\nstatus: ERROR");
    out
}
