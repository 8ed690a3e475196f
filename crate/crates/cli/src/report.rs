//! Suite reports: line-oriented text, or JSON with `--machine`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub check: String,
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BranchCounts {
    pub lt: u64,
    pub eq: u64,
    pub gt: u64,
}

impl BranchCounts {
    pub fn complete(&self) -> bool {
        self.lt > 0 && self.eq > 0 && self.gt > 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    /// Cases drawn from a tie-heavy grid after the main run, until every
    /// branch of the product had been taken.
    pub top_up_cases: usize,
    pub checks: u64,
    pub branches: BranchCounts,
    pub stats: BTreeMap<String, u64>,
    /// Sorted, so the report does not depend on evaluation order.
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Failures beyond this many are counted but not printed.
const SHOWN_FAILURES: usize = 50;

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    /// Every line except the timing, which is the only part that varies
    /// between identical runs.
    pub fn body(&self) -> String {
        let mut s = String::new();
        let b = &self.branches;
        // writing into a String cannot fail
        let _ = writeln!(s, "suite: {}", self.suite);
        let _ = writeln!(s, "seed: {}", self.seed);
        let _ = writeln!(s, "cases: {}", self.cases);
        let _ = writeln!(s, "top-up cases: {}", self.top_up_cases);
        let _ = writeln!(s, "branches: lt={} eq={} gt={}", b.lt, b.eq, b.gt);
        let _ = writeln!(s, "checks: {}", self.checks);
        for (k, v) in &self.stats {
            let _ = writeln!(s, "stat: {k}={v}");
        }
        let _ = writeln!(s, "failures: {}", self.failures.len());
        for f in self.failures.iter().take(SHOWN_FAILURES) {
            let _ = writeln!(s, "failure: {} inputs={} expected={} got={}", f.check, f.inputs, f.expected, f.got);
        }
        if self.failures.len() > SHOWN_FAILURES {
            let _ = writeln!(s, "failure: ... {} more", self.failures.len() - SHOWN_FAILURES);
        }
        let _ = writeln!(s, "status: {}", self.status());
        s
    }

    pub fn render(&self) -> String {
        format!("{}elapsed_ms: {}\n", self.body(), self.elapsed.as_millis())
    }

    pub fn machine(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serialises");
        v["status"] = self.status().into();
        v["elapsed_ms"] = (self.elapsed.as_millis() as u64).into();
        serde_json::to_string_pretty(&v).expect("report serialises")
    }
}
