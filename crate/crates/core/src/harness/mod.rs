//! Verification suites with persisted, deterministic reports.
//!
//! A report serializes with a fixed key order; wall-clock runtime is kept
//! on the struct but left out of the JSON so reruns are byte-identical.

mod counts;
mod suites;

use std::path::PathBuf;
use std::time::Duration;

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::graph6;
use crate::par::Exec;

pub use counts::{check_pattern_counts, stated_count, Assertion, CountRow, Relation, B3_THRESHOLD};
pub use suites::{
    check_cds_claim, check_hindex_equivalence, check_local_chain, check_matching_lemma, empirical_bound_scan,
    validate_witnesses, ScanRow, WitnessConfig,
};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub claim: String,
    pub expected: String,
    pub actual: String,
}

impl Violation {
    pub fn new(g: &Graph, claim: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Violation {
        Violation {
            graph6: graph6::encode(g).unwrap_or_else(|_| format!("order-{}", g.order())),
            claim: claim.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub scope: String,
    pub checks: u64,
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
    /// Mismatches with stated values that are not hard failures.
    pub warnings: Vec<Violation>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counts: Option<Vec<CountRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan: Option<Vec<ScanRow>>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl SuiteReport {
    pub(crate) fn new(suite: &str, scope: impl Into<String>) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            scope: scope.into(),
            checks: 0,
            verdict: Verdict::Pass,
            violations: Vec::new(),
            warnings: Vec::new(),
            notes: Vec::new(),
            counts: None,
            scan: None,
            runtime: Duration::ZERO,
        }
    }

    /// Sorts rows and sets the verdict.
    pub(crate) fn finish(mut self, runtime: Duration) -> SuiteReport {
        self.violations.sort();
        self.warnings.sort();
        self.verdict = if self.violations.is_empty() { Verdict::Pass } else { Verdict::Fail };
        self.runtime = runtime;
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The scan table as CSV, if this report has one.
    pub fn scan_csv(&self) -> Option<String> {
        let rows = self.scan.as_ref()?;
        let mut out = String::from("order,free_graphs,max_value,argmax_graph6\n");
        for r in rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.order,
                r.free_graphs,
                r.max_value,
                r.argmax.as_deref().unwrap_or("")
            ));
        }
        Some(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    Builtin,
    File(PathBuf),
}

/// Which graphs a suite runs over: built-in exhaustive enumeration of orders
/// `1..=max_order`, or a graph6 file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationScope {
    pub max_order: usize,
    pub connected_only: bool,
    pub source: GraphSource,
}

impl EnumerationScope {
    pub fn builtin(max_order: usize, connected_only: bool) -> EnumerationScope {
        EnumerationScope { max_order, connected_only, source: GraphSource::Builtin }
    }

    pub fn describe(&self) -> String {
        let kind = if self.connected_only { "connected graphs" } else { "graphs" };
        match &self.source {
            GraphSource::Builtin => format!("all {kind} of order 1..={}", self.max_order),
            GraphSource::File(p) => format!("{kind} from {}", p.display()),
        }
    }

    pub fn load(&self, exec: Exec) -> Result<Vec<Graph>> {
        match &self.source {
            GraphSource::Builtin => crate::enumerate::enumerate_up_to(self.max_order, self.connected_only, exec),
            GraphSource::File(p) => {
                let gs = crate::enumerate::read_graph6_file(p)?;
                Ok(gs.into_iter().filter(|g| !self.connected_only || g.is_connected()).collect())
            }
        }
    }
}
