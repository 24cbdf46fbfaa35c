//! Residual records shared by every verification suite.

use std::time::Duration;

use serde::{Deserialize, Serialize};

/// One labelled relation check. `pass` is decided at construction time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub relation: String,
    pub residual: f64,
    pub pass: bool,
}

impl RelationCheck {
    /// Passes iff `residual` is finite and `≤ tol`.
    pub fn new(relation: impl Into<String>, residual: f64, tol: f64) -> Self {
        Self {
            relation: relation.into(),
            residual,
            pass: residual.is_finite() && residual <= tol,
        }
    }

    /// Passes iff `value` is finite and strictly above `threshold`; used for
    /// claims that something is nonzero.
    pub fn exceeds(relation: impl Into<String>, value: f64, threshold: f64) -> Self {
        Self {
            relation: relation.into(),
            residual: value,
            pass: value.is_finite() && value > threshold,
        }
    }
}

/// A relation that was evaluated but does not count towards the suite verdict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlaggedCheck {
    pub relation: String,
    pub residual: f64,
    pub flag: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Skipped {
    pub relation: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub entries: Vec<RelationCheck>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flagged: Vec<FlaggedCheck>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<Skipped>,
    pub pass: bool,
    /// Kept out of the JSON so that reports are byte-stable across runs.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            entries: Vec::new(),
            flagged: Vec::new(),
            skipped: Vec::new(),
            pass: true,
            wall_time: Duration::ZERO,
        }
    }

    pub fn push(&mut self, check: RelationCheck) {
        self.pass &= check.pass;
        self.entries.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = RelationCheck>) {
        for c in checks {
            self.push(c);
        }
    }

    pub fn flag(&mut self, relation: impl Into<String>, residual: f64, flag: impl Into<String>) {
        self.flagged.push(FlaggedCheck {
            relation: relation.into(),
            residual,
            flag: flag.into(),
        });
    }

    pub fn skip(&mut self, relation: impl Into<String>, reason: impl Into<String>) {
        self.skipped.push(Skipped {
            relation: relation.into(),
            reason: reason.into(),
        });
    }

    /// Appends every entry of `other`, prefixing its labels with `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: SuiteReport) {
        let tag = |s: String| {
            if prefix.is_empty() {
                s
            } else {
                format!("{prefix}/{s}")
            }
        };
        for mut e in other.entries {
            e.relation = tag(e.relation);
            self.push(e);
        }
        for mut f in other.flagged {
            f.relation = tag(f.relation);
            self.flagged.push(f);
        }
        for mut s in other.skipped {
            s.relation = tag(s.relation);
            self.skipped.push(s);
        }
        self.wall_time += other.wall_time;
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn max_residual(&self) -> f64 {
        self.entries.iter().map(|e| e.residual).fold(0.0, f64::max)
    }
}

/// Worst residual over a batch, NaN-propagating so a NaN never hides as a pass.
pub fn worst(residuals: impl IntoIterator<Item = f64>) -> f64 {
    residuals.into_iter().fold(0.0, |acc: f64, r| {
        if acc.is_nan() || r.is_nan() {
            f64::NAN
        } else {
            acc.max(r)
        }
    })
}
