use std::collections::BTreeMap;

use serde::Serialize;

use super::grid::ScanGrid;

/// Report format identifier written into every JSON report.
pub const REPORT_SCHEMA: &str = "pqelliptic.verification/1";

/// Number of individual failures listed per claim; the counts stay exact.
pub const MAX_LISTED_FAILURES: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// How `worst_residual` is to be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    /// Largest absolute residual; the check is `residual < tolerance`.
    MaxAbsResidual,
    /// Largest relative residual; the check is `residual < tolerance`.
    MaxRelResidual,
    /// Smallest margin of a strict inequality; the check is `margin > 0`.
    MinMargin,
}

/// Coordinates of one sample. Axes a claim does not use are omitted.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct Location {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<f64>,
    /// Coordinates of samples drawn directly in ₂F₁ or `H_{a,b}` parameters.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<f64>,
}

impl Location {
    pub fn pq(p: f64, q: f64) -> Self {
        Location { p: Some(p), q: Some(q), ..Default::default() }
    }

    pub fn pqr(p: f64, q: f64, r: f64) -> Self {
        Location { r: Some(r), ..Self::pq(p, q) }
    }

    pub fn pqrs(p: f64, q: f64, r: f64, s: f64) -> Self {
        Location { s: Some(s), ..Self::pqr(p, q, r) }
    }

    pub fn abr(a: f64, b: f64, r: f64) -> Self {
        Location { a: Some(a), b: Some(b), r: Some(r), ..Default::default() }
    }

    pub fn contiguous(sigma: f64, alpha: f64, rho: f64, z: f64) -> Self {
        Location {
            sigma: Some(sigma),
            alpha: Some(alpha),
            rho: Some(rho),
            z: Some(z),
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub location: Location,
    pub residual: f64,
    pub detail: String,
}

/// Outcome of one claim over its samples.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub description: String,
    pub status: Status,
    pub metric: Metric,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub evaluated: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub worst_residual: Option<f64>,
    pub worst_location: Option<Location>,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    /// Named values kept for reference (constants, alternative conventions).
    pub recorded: BTreeMap<String, f64>,
}

/// The JSON document written by `verify`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub grid: ScanGrid,
    pub status: Status,
    pub claims_passed: usize,
    pub claims_failed: usize,
    pub claims_skipped: usize,
    pub claims: Vec<ClaimReport>,
}

impl VerificationReport {
    pub fn new(grid: ScanGrid, claims: Vec<ClaimReport>) -> Self {
        let count = |s| claims.iter().filter(|c| c.status == s).count();
        let (passed, failed, skipped) = (count(Status::Pass), count(Status::Fail), count(Status::Skipped));
        VerificationReport {
            schema: REPORT_SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            grid,
            status: if failed > 0 { Status::Fail } else { Status::Pass },
            claims_passed: passed,
            claims_failed: failed,
            claims_skipped: skipped,
            claims,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.claims_failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Accumulates sample outcomes for one claim, in the order they are fed.
#[derive(Debug, Clone)]
pub struct Tally {
    metric: Metric,
    tolerance: Option<f64>,
    evaluated: usize,
    passed: usize,
    failed: usize,
    skipped: usize,
    worst: Option<(f64, Location)>,
    failures: Vec<Failure>,
    skip_reasons: BTreeMap<String, usize>,
    notes: Vec<String>,
    recorded: BTreeMap<String, f64>,
}

impl Tally {
    pub fn new(metric: Metric, tolerance: Option<f64>) -> Self {
        Tally {
            metric,
            tolerance,
            evaluated: 0,
            passed: 0,
            failed: 0,
            skipped: 0,
            worst: None,
            failures: Vec::new(),
            skip_reasons: BTreeMap::new(),
            notes: Vec::new(),
            recorded: BTreeMap::new(),
        }
    }

    /// Tally for a residual claim.
    pub fn residual(relative: bool, tolerance: f64) -> Self {
        let metric = if relative { Metric::MaxRelResidual } else { Metric::MaxAbsResidual };
        Self::new(metric, Some(tolerance))
    }

    /// Tally for a strict-inequality claim.
    pub fn margin() -> Self {
        Self::new(Metric::MinMargin, None)
    }

    /// A new tally with the same metric and tolerance.
    pub fn empty_like(&self) -> Tally {
        Tally::new(self.metric, self.tolerance)
    }

    pub fn tolerance(&self) -> Option<f64> {
        self.tolerance
    }

    fn is_worse(&self, value: f64, than: f64) -> bool {
        if value.is_nan() {
            return !than.is_nan();
        }
        match self.metric {
            Metric::MinMargin => value < than,
            _ => value > than,
        }
    }

    fn update_worst(&mut self, value: f64, at: Location) {
        let replace = match &self.worst {
            None => true,
            Some((w, _)) => self.is_worse(value, *w),
        };
        if replace {
            self.worst = Some((value, at));
        }
    }

    /// Records a sample: residuals are compared against the tolerance,
    /// margins against zero.
    pub fn check(&mut self, at: Location, value: f64, detail: impl FnOnce() -> String) -> bool {
        let ok = match self.metric {
            Metric::MinMargin => value > 0.0,
            _ => value < self.tolerance.unwrap_or(0.0),
        };
        self.record_outcome(at, value, ok, detail)
    }

    /// Records a sample whose pass/fail was decided by the caller.
    pub fn record_outcome(
        &mut self,
        at: Location,
        value: f64,
        ok: bool,
        detail: impl FnOnce() -> String,
    ) -> bool {
        self.evaluated += 1;
        self.update_worst(value, at);
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED_FAILURES {
                self.failures.push(Failure { location: at, residual: value, detail: detail() });
            }
        }
        ok
    }

    /// A sample whose evaluation raised an error counts as a failure.
    pub fn error(&mut self, at: Location, err: &crate::Error) {
        self.record_outcome(at, f64::NAN, false, || format!("evaluation error: {err}"));
    }

    /// Folds a computed residual or an evaluation error.
    pub fn check_result(
        &mut self,
        at: Location,
        value: crate::Result<f64>,
        detail: impl FnOnce(f64) -> String,
    ) {
        match value {
            Ok(v) => {
                self.check(at, v, || detail(v));
            }
            Err(e) => self.error(at, &e),
        }
    }

    pub fn skip(&mut self, reason: &str) {
        self.skipped += 1;
        *self.skip_reasons.entry(reason.to_string()).or_default() += 1;
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn record(&mut self, key: impl Into<String>, value: f64) {
        self.recorded.insert(key.into(), value);
    }

    /// Appends another tally's samples after this one's.
    pub fn merge(&mut self, other: Tally) {
        self.evaluated += other.evaluated;
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
        if let Some((v, at)) = other.worst {
            self.update_worst(v, at);
        }
        for f in other.failures {
            if self.failures.len() < MAX_LISTED_FAILURES {
                self.failures.push(f);
            }
        }
        for (k, n) in other.skip_reasons {
            *self.skip_reasons.entry(k).or_default() += n;
        }
        self.notes.extend(other.notes);
        self.recorded.extend(other.recorded);
    }

    pub fn finish(mut self, id: &str, description: &str) -> ClaimReport {
        for (reason, n) in &self.skip_reasons {
            let noun = if *n == 1 { "sample" } else { "samples" };
            self.notes.push(format!("{reason}: {n} {noun} skipped"));
        }
        let status = if self.failed > 0 {
            Status::Fail
        } else if self.passed == 0 {
            if self.skipped == 0 {
                self.notes.push("no samples evaluated".into());
            }
            Status::Skipped
        } else {
            Status::Pass
        };
        ClaimReport {
            id: id.to_string(),
            description: description.to_string(),
            status,
            metric: self.metric,
            tolerance: self.tolerance,
            evaluated: self.evaluated,
            passed: self.passed,
            failed: self.failed,
            skipped: self.skipped,
            worst_residual: self.worst.map(|w| w.0),
            worst_location: self.worst.map(|w| w.1),
            failures: self.failures,
            notes: self.notes,
            recorded: self.recorded,
        }
    }
}
