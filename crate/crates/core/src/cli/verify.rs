//! `verify` and `bench`.

use std::fmt;
use std::time::{Duration, Instant};

use clap::ValueEnum;

use super::CliError;
use crate::counting::{ExactCount, MemoTable, OpCounter};
use crate::enumeration::{count_dags_brute, count_mb_naive, extraction_image, Cap, Digraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleChoice {
    Naive,
    Extract,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    /// Acyclic digraphs among all digraphs.
    DagBrute,
    /// Digraphs passing the canonical MB check.
    MbNaive,
    /// Distinct MB projections of all DAGs.
    MbExtract,
}

impl OracleKind {
    pub fn quantity(self) -> &'static str {
        match self {
            OracleKind::DagBrute => "bn",
            OracleKind::MbNaive | OracleKind::MbExtract => "mb",
        }
    }
}

impl fmt::Display for OracleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleKind::DagBrute => "dag-brute",
            OracleKind::MbNaive => "naive",
            OracleKind::MbExtract => "extract",
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerifyRecord {
    pub n: usize,
    pub formula: ExactCount,
    pub oracle: ExactCount,
    pub kind: OracleKind,
    /// DAGs scanned, for the extraction oracle.
    pub dags_scanned: Option<u64>,
    pub elapsed: Duration,
}

impl VerifyRecord {
    pub fn matches(&self) -> bool {
        self.formula == self.oracle
    }

    /// Deterministic one-line summary (no timing).
    pub fn line(&self) -> String {
        let status = if self.matches() { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} n={} {} formula={} oracle={} [{}]",
            self.n,
            self.kind.quantity(),
            self.formula,
            self.oracle,
            self.kind
        );
        if let Some(dags) = self.dags_scanned {
            line.push_str(&format!(" from {dags} dags"));
        }
        line
    }
}

/// Formula-vs-oracle records in ascending n.
#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub records: Vec<VerifyRecord>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(VerifyRecord::matches)
    }

    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| !r.matches()).count()
    }

    pub fn render(&self) -> String {
        let mut out: String = self.records.iter().map(|r| r.line() + "\n").collect();
        if self.passed() {
            out.push_str(&format!(
                "verify: all {} checks passed\n",
                self.records.len()
            ));
        } else {
            out.push_str(&format!(
                "verify: {} of {} checks FAILED\n",
                self.failures(),
                self.records.len()
            ));
        }
        out
    }

    pub fn timings(&self) -> String {
        self.records
            .iter()
            .map(|r| format!("n={} {} {:.3}s\n", r.n, r.kind, r.elapsed.as_secs_f64()))
            .collect()
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

/// Checks BN(n) and MB(n) against the brute-force oracles for `n = 1..=max_n`.
///
/// `target` must be a node of the largest graph; rows with fewer nodes use
/// `min(target, n - 1)`.
pub fn cmd_verify(
    max_n: usize,
    oracle: OracleChoice,
    target: usize,
    cap: Cap,
) -> Result<VerifyReport, CliError> {
    cap.check(max_n)?;
    // target must be a node of the largest graph
    Digraph::empty(max_n, target)?;
    let mut memo = MemoTable::new();
    let mut report = VerifyReport::default();
    for n in 1..=max_n {
        let t = target.min(n - 1);
        let (oracle_bn, elapsed) = timed(|| count_dags_brute(n, cap));
        report.records.push(VerifyRecord {
            n,
            formula: memo.bn_count(n),
            oracle: oracle_bn?,
            kind: OracleKind::DagBrute,
            dags_scanned: None,
            elapsed,
        });
        let mb = memo.mb_count(n)?;
        if matches!(oracle, OracleChoice::Naive | OracleChoice::Both) {
            let (value, elapsed) = timed(|| count_mb_naive(n, t, cap));
            report.records.push(VerifyRecord {
                n,
                formula: mb.clone(),
                oracle: value?,
                kind: OracleKind::MbNaive,
                dags_scanned: None,
                elapsed,
            });
        }
        if matches!(oracle, OracleChoice::Extract | OracleChoice::Both) {
            let (image, elapsed) = timed(|| extraction_image(n, t, cap));
            let image = image?;
            report.records.push(VerifyRecord {
                n,
                formula: mb.clone(),
                oracle: ExactCount::from(image.structures.len() as u64),
                kind: OracleKind::MbExtract,
                dags_scanned: Some(image.dags_scanned),
                elapsed,
            });
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: usize,
    pub bn_ops: OpCounter,
    pub mb_ops: OpCounter,
    pub bn_elapsed: Duration,
    pub mb_elapsed: Duration,
}

/// Operation counts of BN(n) and MB(n), each on a fresh memo table.
pub fn cmd_bench(max_n: usize) -> Result<Vec<BenchRow>, CliError> {
    if max_n == 0 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    let mut rows = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let mut memo = MemoTable::new();
        let (_, bn_elapsed) = timed(|| memo.bn_count(n));
        let bn_ops = memo.ops();
        let mut memo = MemoTable::new();
        let (mb, mb_elapsed) = timed(|| memo.mb_count(n));
        mb?;
        rows.push(BenchRow {
            n,
            bn_ops,
            mb_ops: memo.ops(),
            bn_elapsed,
            mb_elapsed,
        });
    }
    Ok(rows)
}

pub fn render_bench(rows: &[BenchRow]) -> String {
    let mut out = String::from("n\tbn_terms\tbn_fill_terms\tbn_mults\tbn_adds\tmb_terms\tmb_fill_terms\tmb_mults\tmb_adds\n");
    for r in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.n,
            r.bn_ops.terms_evaluated,
            r.bn_ops.memo_fill_terms,
            r.bn_ops.big_multiplications,
            r.bn_ops.big_additions,
            r.mb_ops.terms_evaluated,
            r.mb_ops.memo_fill_terms,
            r.mb_ops.big_multiplications,
            r.mb_ops.big_additions,
        ));
    }
    out
}

pub fn render_bench_timings(rows: &[BenchRow]) -> String {
    rows.iter()
        .map(|r| {
            format!(
                "n={} bn {:.6}s mb {:.6}s\n",
                r.n,
                r.bn_elapsed.as_secs_f64(),
                r.mb_elapsed.as_secs_f64()
            )
        })
        .collect()
}
