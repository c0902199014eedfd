//! Potential ledger for bottom-up heap construction.
//!
//! Build-heap can be read as a sequence of merges over a forest of heaps:
//! initially every array slot is a singleton heap, and each sift-down at
//! index `i` merges the singleton *parent heap* at `i` with the two
//! already-heapified *child heaps* at `2i` and `2i + 1` (a missing child
//! is an empty heap). The *level* of a heap is its height plus one, the
//! empty heap having level 0; a merge of child heaps with maximum level
//! `l` produces a heap of level `l + 1`.
//!
//! The potential is the sum of the levels of all heap roots in the
//! forest. It starts at `n` (n singletons of level 1) and ends at
//! `floor(log2 n) + 1` (one heap). Each merge consumes levels
//! `1 + left + right` and produces `max(left, right) + 1`, so with child
//! levels `l` and `l - 1` the potential drops by `l - 1`, and with equal
//! child levels `l` it drops by `l`. Since a sift-down at a node of
//! subtree height `l` costs at most `l` iterations, the amortized cost
//! (actual plus potential change) of every merge is at most 1 in the
//! first case and at most 0 in the second — which telescopes to a total
//! actual cost of at most `1.5 n`.
//!
//! [`ledger_run`] executes build-heap while recording one [`MergeEvent`]
//! per sift-down; [`verify_trace`] re-checks every identity on the
//! resulting [`PotentialTrace`].

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::heap::{subtree_height, HeapBuffer};
use crate::inputs::InputKind;

/// Heap level: height plus one; 0 for the empty heap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct HeapLevel(pub u32);

impl fmt::Display for HeapLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Whether the two child heaps of a merge had equal levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MergeCase {
    #[serde(rename = "diff")]
    DifferentLevels,
    #[serde(rename = "same")]
    SameLevel,
}

impl MergeCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            MergeCase::DifferentLevels => "diff",
            MergeCase::SameLevel => "same",
        }
    }
}

impl fmt::Display for MergeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Exact CSV header for merge-event traces.
pub const TRACE_CSV_HEADER: &str =
    "step,root_index,left_level,right_level,case,actual_cost,phi_before,phi_after,amortized";

/// One sift-down viewed as a heap merge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MergeEvent {
    /// 1-based position in the merge sequence.
    pub step: u32,
    /// Index the parent heap (and sift-down) started at.
    pub root_index: usize,
    pub left_level: HeapLevel,
    pub right_level: HeapLevel,
    #[serde(rename = "case")]
    pub case_tag: MergeCase,
    /// Sift-down iterations.
    pub actual_cost: u64,
    pub phi_before: u64,
    pub phi_after: u64,
    /// `actual_cost + phi_after - phi_before`.
    pub amortized: i64,
}

impl MergeEvent {
    pub fn max_child_level(&self) -> u32 {
        self.left_level.0.max(self.right_level.0)
    }

    /// CSV row matching [`TRACE_CSV_HEADER`].
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.step,
            self.root_index,
            self.left_level,
            self.right_level,
            self.case_tag,
            self.actual_cost,
            self.phi_before,
            self.phi_after,
            self.amortized
        )
    }
}

/// Complete ledger of one build-heap run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PotentialTrace {
    pub n: usize,
    pub phi_initial: u64,
    pub phi_final: u64,
    pub total_actual: u64,
    pub total_amortized: i64,
    pub events: Vec<MergeEvent>,
}

/// `levels[i - 1]` = level of the subtree rooted at 1-based index `i`:
/// `floor(log2(n / i)) + 1`.
pub fn subtree_levels(n: usize) -> Vec<HeapLevel> {
    (1..=n)
        .map(|i| HeapLevel(subtree_height(n, i) + 1))
        .collect()
}

/// Runs build-heap on `buf` while maintaining the forest potential.
///
/// Merges follow build-heap's index order, `n/2` down to 1, so a trace is
/// reproducible bit for bit from the input. An empty buffer yields an
/// empty trace with zero potential.
pub fn ledger_run<K: Ord>(buf: &mut HeapBuffer<K>) -> PotentialTrace {
    let n = buf.len();
    if n == 0 {
        return PotentialTrace {
            n,
            phi_initial: 0,
            phi_final: 0,
            total_actual: 0,
            total_amortized: 0,
            events: Vec::new(),
        };
    }

    // forest_level[i - 1]: level of the heap currently rooted at i.
    // Singletons start at level 1.
    let mut forest_level = vec![1u32; n];
    let mut phi = n as u64;
    let phi_initial = phi;
    let mut events = Vec::with_capacity(n / 2);
    let mut total_actual = 0u64;
    let mut total_amortized = 0i64;

    for (step, i) in (1..=n / 2).rev().enumerate() {
        let stats = buf.sift_down(i).expect("internal index in range");
        let left_level = forest_level[2 * i - 1];
        let right_level = if 2 * i < n { forest_level[2 * i] } else { 0 };
        debug_assert!(left_level.abs_diff(right_level) <= 1);

        let merged_level = left_level.max(right_level) + 1;
        debug_assert_eq!(merged_level, subtree_height(n, i) + 1);
        forest_level[i - 1] = merged_level;

        let consumed = 1 + u64::from(left_level) + u64::from(right_level);
        let phi_before = phi;
        let phi_after = phi - consumed + u64::from(merged_level);
        phi = phi_after;

        let case_tag = if left_level == right_level {
            MergeCase::SameLevel
        } else {
            MergeCase::DifferentLevels
        };
        let amortized = stats.iterations as i64 + phi_after as i64 - phi_before as i64;
        total_actual += stats.iterations;
        total_amortized += amortized;

        events.push(MergeEvent {
            step: step as u32 + 1,
            root_index: i,
            left_level: HeapLevel(left_level),
            right_level: HeapLevel(right_level),
            case_tag,
            actual_cost: stats.iterations,
            phi_before,
            phi_after,
            amortized,
        });
    }

    debug_assert!(buf.validate_heap());
    PotentialTrace {
        n,
        phi_initial,
        phi_final: phi,
        total_actual,
        total_amortized,
        events,
    }
}

/// Outcome of one named trace check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceCheck {
    pub name: &'static str,
    pub passed: bool,
    /// First counterexample, when failing.
    pub detail: String,
}

/// Pass/fail per identity for one trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<TraceCheck>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&TraceCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            let status = if check.passed { "pass" } else { "FAIL" };
            if check.detail.is_empty() {
                writeln!(f, "{status}  {}", check.name)?;
            } else {
                writeln!(f, "{status}  {}: {}", check.name, check.detail)?;
            }
        }
        Ok(())
    }
}

/// Re-checks every identity on a trace produced by [`ledger_run`]:
///
/// (a) per-merge amortized bounds (`<= 1` for different child levels,
///     `<= 0` for equal ones, with equality exactly when the actual cost
///     hit the max child level);
/// (b) the telescoping identity
///     `total_actual = total_amortized + phi_initial - phi_final`;
/// (c) `total_actual <= 1.5 n`;
/// (d) `phi_initial = n`;
/// (e) `phi_final = floor(log2 n) + 1`;
/// (f) exactly `floor(n / 2)` merges.
///
/// A failed check is reported, never panicked on. For `n = 0` the formula
/// checks pass vacuously.
pub fn verify_trace(trace: &PotentialTrace) -> VerificationReport {
    let mut checks = Vec::with_capacity(6);
    let n = trace.n;

    // (a)
    let mut case_detail = String::new();
    let mut case_ok = true;
    for e in &trace.events {
        let l = i64::from(e.max_child_level());
        let bound = match e.case_tag {
            MergeCase::DifferentLevels => 1,
            MergeCase::SameLevel => 0,
        };
        let tight = e.actual_cost as i64 == l;
        if e.amortized > bound || (e.amortized == bound) != tight {
            case_ok = false;
            case_detail = format!(
                "step {}: case {} amortized {} (actual {}, max child level {})",
                e.step, e.case_tag, e.amortized, e.actual_cost, l
            );
            break;
        }
    }
    checks.push(TraceCheck {
        name: "amortized-case-bounds",
        passed: case_ok,
        detail: case_detail,
    });

    // (b)
    let telescoped = trace.total_amortized + trace.phi_initial as i64 - trace.phi_final as i64;
    let sums_ok = trace.total_actual as i64 == telescoped
        && trace.total_actual == trace.events.iter().map(|e| e.actual_cost).sum::<u64>()
        && trace.total_amortized == trace.events.iter().map(|e| e.amortized).sum::<i64>();
    checks.push(TraceCheck {
        name: "telescoping-identity",
        passed: sums_ok,
        detail: if sums_ok {
            String::new()
        } else {
            format!(
                "total_actual {} != total_amortized {} + phi_initial {} - phi_final {}",
                trace.total_actual, trace.total_amortized, trace.phi_initial, trace.phi_final
            )
        },
    });

    // (c): 2 * total <= 3n, in integers.
    let bound_ok = 2 * trace.total_actual <= 3 * n as u64;
    checks.push(TraceCheck {
        name: "total-cost-bound-1.5n",
        passed: bound_ok,
        detail: if bound_ok {
            String::new()
        } else {
            format!("total actual cost {} > 1.5 * {}", trace.total_actual, n)
        },
    });

    // (d)
    let phi0_ok = trace.phi_initial == n as u64;
    checks.push(TraceCheck {
        name: "initial-potential-is-n",
        passed: phi0_ok,
        detail: if phi0_ok {
            String::new()
        } else {
            format!("phi_initial {} != n {}", trace.phi_initial, n)
        },
    });

    // (e)
    let expected_final = if n == 0 { 0 } else { u64::from(n.ilog2()) + 1 };
    let phif_ok = trace.phi_final == expected_final;
    checks.push(TraceCheck {
        name: "final-potential-is-floor-log2-plus-1",
        passed: phif_ok,
        detail: if phif_ok {
            String::new()
        } else {
            format!("phi_final {} != {}", trace.phi_final, expected_final)
        },
    });

    // (f)
    let merges_ok = trace.events.len() == n / 2;
    checks.push(TraceCheck {
        name: "merge-count-is-floor-n-over-2",
        passed: merges_ok,
        detail: if merges_ok {
            String::new()
        } else {
            format!("{} merges, expected {}", trace.events.len(), n / 2)
        },
    });

    VerificationReport { checks }
}

/// One row of a [`worst_case_scan`].
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub n: usize,
    pub kind: InputKind,
    pub total_actual: u64,
    /// `total_actual / n` (0 when `n = 0`).
    pub ratio: f64,
    pub passed: bool,
}

/// Result of sweeping `ledger_run` + `verify_trace` over sizes and inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanSummary {
    pub rows: Vec<ScanRow>,
    pub max_ratio: f64,
    /// `(n, kind)` realizing `max_ratio`.
    pub worst: Option<(usize, InputKind)>,
    pub all_passed: bool,
}

/// Runs the ledger for every `n` in `1..=n_max` and every input kind,
/// verifying each trace. Rows come out in `(n, kind)` order.
pub fn worst_case_scan(n_max: usize, kinds: &[InputKind]) -> Result<ScanSummary> {
    if n_max < 1 {
        return Err(Error::OutOfReach {
            what: "n_max",
            value: n_max as u64,
            max: u64::MAX,
            reason: "scan needs at least one size",
        });
    }
    let mut rows = Vec::with_capacity(n_max * kinds.len());
    let mut max_ratio = 0.0f64;
    let mut worst = None;
    let mut all_passed = true;

    for n in 1..=n_max {
        for kind in kinds {
            let mut buf = HeapBuffer::from_keys(kind.generate(n));
            let trace = ledger_run(&mut buf);
            let report = verify_trace(&trace);
            let passed = report.all_passed() && buf.validate_heap();
            let ratio = trace.total_actual as f64 / n as f64;
            if ratio > max_ratio {
                max_ratio = ratio;
                worst = Some((n, *kind));
            }
            all_passed &= passed;
            rows.push(ScanRow {
                n,
                kind: *kind,
                total_actual: trace.total_actual,
                ratio,
                passed,
            });
        }
    }

    Ok(ScanSummary {
        rows,
        max_ratio,
        worst,
        all_passed,
    })
}
