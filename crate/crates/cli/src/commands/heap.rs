use std::path::Path;

use serde::Serialize;

use treelab_core::ledger::{ledger_run, verify_trace, worst_case_scan, TRACE_CSV_HEADER};
use treelab_core::{HeapBuffer, InputKind, MergeEvent};

use crate::args::{HeapInput, TraceFormat};
use crate::output::{read_keys_file, write_output, CliError, CliResult};

#[derive(Serialize)]
struct TraceConfig {
    subcommand: &'static str,
    size: usize,
    input: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    file: Option<String>,
    format: &'static str,
}

#[derive(Serialize)]
struct TraceSummary {
    n: usize,
    merges: usize,
    phi_initial: u64,
    phi_final: u64,
    total_actual: u64,
    total_amortized: i64,
}

#[derive(Serialize)]
struct TraceReport {
    config: TraceConfig,
    summary: TraceSummary,
    events: Vec<MergeEvent>,
}

pub fn trace(
    size: Option<usize>,
    input: HeapInput,
    seed: u64,
    file: Option<&Path>,
    format: TraceFormat,
) -> CliResult<bool> {
    let keys: Vec<i64> = match input {
        HeapInput::File => {
            let path = file
                .ok_or_else(|| CliError::Usage("--input file requires --file PATH".to_string()))?;
            let keys = read_keys_file(path)?;
            if let Some(s) = size {
                if s != keys.len() {
                    return Err(CliError::Usage(format!(
                        "--size {s} does not match the {} keys in {}",
                        keys.len(),
                        path.display()
                    )));
                }
            }
            keys
        }
        other => {
            if file.is_some() {
                return Err(CliError::Usage(
                    "--file only applies to --input file".to_string(),
                ));
            }
            let n = size.ok_or_else(|| {
                CliError::Usage("--size is required unless keys come from a file".to_string())
            })?;
            match other {
                HeapInput::Ascending => InputKind::Ascending.generate(n),
                HeapInput::Descending => InputKind::Descending.generate(n),
                HeapInput::Random => InputKind::Random { seed }.generate(n),
                HeapInput::File => unreachable!(),
            }
        }
    };

    let n = keys.len();
    let mut buf = HeapBuffer::from_keys(keys);
    let trace = ledger_run(&mut buf);

    let content = match format {
        TraceFormat::Csv => {
            let mut csv = String::from(TRACE_CSV_HEADER);
            csv.push('\n');
            for event in &trace.events {
                csv.push_str(&event.csv_row());
                csv.push('\n');
            }
            csv
        }
        TraceFormat::Json => {
            let report = TraceReport {
                config: TraceConfig {
                    subcommand: "heap trace",
                    size: n,
                    input: input.label(),
                    seed: match input {
                        HeapInput::Random => Some(seed),
                        _ => None,
                    },
                    file: file.map(|p| p.display().to_string()),
                    format: format.label(),
                },
                summary: TraceSummary {
                    n: trace.n,
                    merges: trace.events.len(),
                    phi_initial: trace.phi_initial,
                    phi_final: trace.phi_final,
                    total_actual: trace.total_actual,
                    total_amortized: trace.total_amortized,
                },
                events: trace.events.clone(),
            };
            let mut json =
                serde_json::to_string_pretty(&report).expect("report serialization is infallible");
            json.push('\n');
            json
        }
    };
    write_output(None, &content)?;

    // n = 0 produces an empty trace and skips the formula checks.
    let report = verify_trace(&trace);
    if !report.all_passed() {
        eprintln!("heap trace: LEDGER VERIFICATION FAILED\n{report}");
        return Ok(false);
    }
    Ok(true)
}

pub const VERIFY_CSV_HEADER: &str = "n,input,seed,total_actual,ratio,pass";

/// Ledger sweep: every size `1..=max_size` on ascending, descending, and
/// `seeds` seeded-random inputs, each trace fully verified.
pub fn verify(max_size: usize, seeds: u64) -> CliResult<bool> {
    if max_size < 1 {
        return Err(CliError::Usage("--max-size must be at least 1".to_string()));
    }
    let mut kinds = vec![InputKind::Ascending, InputKind::Descending];
    kinds.extend((0..seeds).map(|seed| InputKind::Random { seed }));

    let summary = worst_case_scan(max_size, &kinds)?;

    let mut csv = String::from(VERIFY_CSV_HEADER);
    csv.push('\n');
    for row in &summary.rows {
        let seed = row.kind.seed().map_or(String::new(), |s| s.to_string());
        csv.push_str(&format!(
            "{},{},{seed},{},{:.6},{}\n",
            row.n,
            row.kind.label(),
            row.total_actual,
            row.ratio,
            row.passed
        ));
    }
    write_output(None, &csv)?;

    let worst = summary.worst.map_or("n/a".to_string(), |(n, kind)| {
        format!("n={n} {}", kind.label())
    });
    eprintln!(
        "heap verify: max cost ratio {:.6} at {worst}; bound 1.5",
        summary.max_ratio
    );
    if !summary.all_passed {
        eprintln!("heap verify: TRACE VERIFICATION FAILURES (see pass column)");
    }
    Ok(summary.all_passed && summary.max_ratio <= 1.5)
}
