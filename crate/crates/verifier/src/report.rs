use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

/// One mismatching instance, replayable from its parameters.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub params: Value,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one verification suite run. Proved identities report
/// `pass`/`fail`; statements only checked instance-wise report
/// `conjecture-pass`/`conjecture-fail` so automation can treat them as
/// non-blocking.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: Value,
    pub count: usize,
    pub failures: Vec<Failure>,
    pub seed: u64,
    pub elapsed_ms: u128,
    pub status: String,
}

/// At most this many failures are kept per report; the total is recorded
/// in the parameters when truncation happens.
pub const FAILURE_CAP: usize = 50;

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn is_conjecture(&self) -> bool {
        self.status.starts_with("conjecture")
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serialization")
    }
}

/// Collects instances and failures for a suite and freezes them into a
/// report with timing and status.
pub struct Suite {
    suite: String,
    params: Value,
    seed: u64,
    conjecture: bool,
    count: usize,
    failures: Vec<Failure>,
    overflow: usize,
    start: Instant,
}

impl Suite {
    pub fn new(suite: &str, params: Value, conjecture: bool) -> Self {
        Suite {
            suite: suite.to_string(),
            params,
            seed: 0,
            conjecture,
            count: 0,
            failures: Vec::new(),
            overflow: 0,
            start: Instant::now(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Record a batch of already-checked instances.
    pub fn record(&mut self, count: usize, failures: Vec<Failure>) {
        self.count += count;
        for f in failures {
            if self.failures.len() < FAILURE_CAP {
                self.failures.push(f);
            } else {
                self.overflow += 1;
            }
        }
    }

    /// Record one instance; `failure` is `None` when it passed.
    pub fn instance(&mut self, failure: Option<Failure>) {
        self.record(1, failure.into_iter().collect());
    }

    pub fn finish(self) -> VerificationReport {
        let mut params = self.params;
        if self.overflow > 0 {
            params["failures_dropped"] = json!(self.overflow);
        }
        let passed = self.failures.is_empty() && self.overflow == 0;
        let status = match (self.conjecture, passed) {
            (false, true) => "pass",
            (false, false) => "fail",
            (true, true) => "conjecture-pass",
            (true, false) => "conjecture-fail",
        };
        VerificationReport {
            suite: self.suite,
            params,
            count: self.count,
            failures: self.failures,
            seed: self.seed,
            elapsed_ms: self.start.elapsed().as_millis(),
            status: status.to_string(),
        }
    }
}

/// Check independent instances in parallel, preserving instance order in
/// the failure list.
pub fn check_all<I, F>(instances: &[I], check: F) -> (usize, Vec<Failure>)
where
    I: Sync,
    F: Fn(&I) -> Option<Failure> + Sync,
{
    use rayon::prelude::*;
    let failures: Vec<Failure> = instances.par_iter().filter_map(|i| check(i)).collect();
    (instances.len(), failures)
}

/// Equality check producing a failure entry on mismatch.
pub fn expect_eq<T: PartialEq + std::fmt::Display>(
    params: Value,
    expected: &T,
    actual: &T,
) -> Option<Failure> {
    if expected == actual {
        None
    } else {
        Some(Failure {
            params,
            expected: expected.to_string(),
            actual: actual.to_string(),
        })
    }
}
