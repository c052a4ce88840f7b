use std::fmt;

use crate::configuration::ConfigurationSeed;
use crate::kernel::{all_collinear, orientation, Carrier, Point};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The claim holds only vacuously because two points coincide.
    DegeneratePass,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::DegeneratePass => "degenerate-pass",
        }
    }

    pub fn parse(s: &str) -> Option<CheckStatus> {
        match s {
            "pass" => Some(CheckStatus::Pass),
            "fail" => Some(CheckStatus::Fail),
            "degenerate-pass" => Some(CheckStatus::DegeneratePass),
            _ => None,
        }
    }

    pub fn is_ok(self) -> bool {
        self != CheckStatus::Fail
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A labelled exact value attached to a check result.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    pub label: String,
    pub value: String,
}

impl Witness {
    pub fn text(label: impl Into<String>, value: impl fmt::Display) -> Self {
        Witness { label: label.into(), value: value.to_string() }
    }

    pub fn scalar(label: impl Into<String>, value: &Scalar) -> Self {
        Witness::text(label, scalar::to_canonical(value))
    }

    pub fn point(label: impl Into<String>, p: &Point) -> Self {
        Witness::text(label, format_point(p))
    }
}

pub fn format_point(p: &Point) -> String {
    format!("({}, {})", scalar::to_canonical(&p.x), scalar::to_canonical(&p.y))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub witnesses: Vec<Witness>,
    pub notes: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub degenerate_pass: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub seed: Option<ConfigurationSeed>,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
    /// Interpretive choices the checks rest on.
    pub assumptions: Vec<&'static str>,
}

impl VerificationReport {
    pub fn new(seed: Option<ConfigurationSeed>, results: Vec<CheckResult>, assumptions: Vec<&'static str>) -> Self {
        let count = |s| results.iter().filter(|r| r.status == s).count();
        let summary = Summary {
            total: results.len(),
            pass: count(CheckStatus::Pass),
            fail: count(CheckStatus::Fail),
            degenerate_pass: count(CheckStatus::DegeneratePass),
        };
        VerificationReport { seed, results, summary, assumptions }
    }

    pub fn all_ok(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn result(&self, name: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.status == CheckStatus::Fail)
    }
}

/// Accumulates the outcome of one check.
pub(crate) struct Checker {
    name: String,
    failures: Vec<Witness>,
    info: Vec<Witness>,
    degenerate: Vec<String>,
    notes: Vec<String>,
}

impl Checker {
    pub fn new(name: impl Into<String>) -> Self {
        Checker {
            name: name.into(),
            failures: Vec::new(),
            info: Vec::new(),
            degenerate: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn fail(&mut self, w: Witness) {
        self.failures.push(w);
    }

    pub fn info(&mut self, w: Witness) {
        self.info.push(w);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn degenerate(&mut self, why: impl Into<String>) {
        self.degenerate.push(why.into());
    }

    pub fn require_zero(&mut self, label: impl Into<String>, value: Scalar) -> bool {
        let ok = num_traits::Zero::is_zero(&value);
        if !ok {
            self.fail(Witness::scalar(label, &value));
        }
        ok
    }

    pub fn require_equal(&mut self, label: impl Into<String>, got: &Point, expected: &Point) -> bool {
        let ok = got == expected;
        if !ok {
            self.fail(Witness::text(
                label,
                format!("{} != {}", format_point(got), format_point(expected)),
            ));
        }
        ok
    }

    pub fn require_scalar_equal(&mut self, label: impl Into<String>, got: &Scalar, expected: &Scalar) -> bool {
        let ok = got == expected;
        if !ok {
            self.fail(Witness::text(
                label,
                format!("{} != {}", scalar::to_canonical(got), scalar::to_canonical(expected)),
            ));
        }
        ok
    }

    /// Collinearity over a multiset; the witness is the first nonzero
    /// orientation determinant.
    pub fn require_collinear(&mut self, label: impl Into<String>, points: &[&Point]) -> bool {
        if all_collinear(points) {
            return true;
        }
        let mut distinct: Vec<&Point> = Vec::new();
        for p in points {
            if !distinct.contains(p) {
                distinct.push(p);
            }
        }
        let det = distinct[2..]
            .iter()
            .map(|r| orientation(distinct[0], distinct[1], r))
            .find(|d| !num_traits::Zero::is_zero(d))
            .expect("non-collinear multiset has a nonzero orientation");
        self.fail(Witness::scalar(label, &det));
        false
    }

    pub fn require_on<C: Carrier + ?Sized>(&mut self, label: impl Into<String>, carrier: &C, p: &Point) -> bool {
        self.require_zero(label, carrier.residual(p))
    }

    pub fn finish(self) -> CheckResult {
        let status = if !self.failures.is_empty() {
            CheckStatus::Fail
        } else if !self.degenerate.is_empty() {
            CheckStatus::DegeneratePass
        } else {
            CheckStatus::Pass
        };
        let mut notes = self.degenerate.into_iter().map(|d| format!("degenerate: {d}")).collect::<Vec<_>>();
        notes.extend(self.notes);
        let mut witnesses = self.failures;
        witnesses.extend(self.info);
        CheckResult {
            name: self.name,
            status,
            witnesses,
            notes: notes.join("; "),
        }
    }
}
