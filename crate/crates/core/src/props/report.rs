use std::fmt::Write;
use std::time::Duration;

use super::SuiteId;
use crate::reduction::{format_step, StepRecord};
use crate::syntax::Term;

#[derive(Clone, Debug)]
pub struct Failure {
    pub input: Term,
    pub detail: String,
    /// The offending steps.
    pub trace: Vec<StepRecord>,
    /// Supporting steps (the other side of a peak, the expected simulation...).
    pub secondary: Vec<StepRecord>,
}

impl Failure {
    pub fn new(input: &Term, detail: impl Into<String>) -> Failure {
        Failure {
            input: input.clone(),
            detail: detail.into(),
            trace: Vec::new(),
            secondary: Vec::new(),
        }
    }

    pub fn with_trace(mut self, trace: Vec<StepRecord>) -> Failure {
        self.trace = trace;
        self
    }

    pub fn with_secondary(mut self, secondary: Vec<StepRecord>) -> Failure {
        self.secondary = secondary;
        self
    }
}

/// Outcome of one input term.
#[derive(Clone, Debug, Default)]
pub struct CaseResult {
    pub obligations: u64,
    pub failures: Vec<Failure>,
    pub inconclusive: usize,
}

impl CaseResult {
    pub fn check(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.obligations += 1;
        if !ok {
            self.failures.push(failure());
        }
    }

    pub fn pass(&mut self) {
        self.obligations += 1;
    }

    pub fn undecided(&mut self) {
        self.obligations += 1;
        self.inconclusive += 1;
    }

    pub fn merge(&mut self, other: CaseResult) {
        self.obligations += other.obligations;
        self.failures.extend(other.failures);
        self.inconclusive += other.inconclusive;
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub suite: SuiteId,
    pub profile: String,
    pub cases_run: usize,
    /// Individual checks performed across all cases.
    pub obligations: u64,
    pub failures: Vec<Failure>,
    pub inconclusive: usize,
    pub wall_time: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn exit_code(&self) -> i32 {
        if !self.failures.is_empty() {
            2
        } else if self.inconclusive > 0 {
            3
        } else {
            0
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "suite={} profile={} cases={} obligations={} failures={} inconclusive={}",
            self.suite,
            self.profile,
            self.cases_run,
            self.obligations,
            self.failures.len(),
            self.inconclusive
        )
    }

    /// Machine-readable text. Wall time is left out so that the output only
    /// depends on the suite, the corpus and the bounds.
    pub fn render(&self) -> String {
        let mut s = self.summary();
        s.push('\n');
        for f in &self.failures {
            let _ = writeln!(s, "failure input={} detail={}", f.input, f.detail);
            for (title, steps) in [("trace", &f.trace), ("secondary", &f.secondary)] {
                if steps.is_empty() {
                    continue;
                }
                let _ = writeln!(s, "  {title}:");
                for (i, st) in steps.iter().enumerate() {
                    let _ = writeln!(s, "    {}", format_step(i, st));
                }
            }
        }
        s
    }
}
