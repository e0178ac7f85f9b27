/// One asserted comparison `value ≤ limit` (or a boolean property encoded as 0/1).
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub limit: f64,
    pub pass: bool,
}

impl Check {
    pub fn at_most(name: impl Into<String>, value: f64, limit: f64) -> Self {
        Self {
            name: name.into(),
            value,
            limit,
            pass: value <= limit,
        }
    }

    pub fn flag(name: impl Into<String>, ok: bool) -> Self {
        Self {
            name: name.into(),
            value: ok as u8 as f64,
            limit: 1.0,
            pass: ok,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub suite: String,
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>, seed: Option<u64>) -> Self {
        Self {
            suite: suite.into(),
            seed,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

/// Rows of `(parameter, values…)` with a fitted log-log slope of the first value column.
#[derive(Clone, Debug, PartialEq)]
pub struct RateTable {
    pub parameter: String,
    pub columns: Vec<String>,
    pub rows: Vec<(f64, Vec<f64>)>,
}

impl RateTable {
    pub fn new(parameter: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            parameter: parameter.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn column(&self, k: usize) -> Vec<f64> {
        self.rows.iter().map(|r| r.1[k]).collect()
    }

    /// Strict decrease of column `k` in row order.
    pub fn strictly_decreasing(&self, k: usize) -> bool {
        let v = self.column(k);
        v.windows(2).all(|w| w[1] < w[0])
    }

    /// Least-squares slope of `log value` against `log parameter`, first row dropped.
    /// Needs at least three rows.
    pub fn slope(&self, k: usize) -> Option<f64> {
        if self.rows.len() < 3 {
            return None;
        }
        let pts: Vec<(f64, f64)> = self.rows[1..]
            .iter()
            .map(|r| (r.0.ln(), r.1[k].ln()))
            .collect();
        if pts.iter().any(|p| !p.0.is_finite() || !p.1.is_finite()) {
            return None;
        }
        let n = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        Some(sxy / sxx)
    }
}
