use std::path::Path;

use serde::Serialize;

use treelab_core::minimal::{
    build_recursive, generation_histogram, grow_from_empty, same_shape, GenerationRecord,
};
use treelab_core::{dot, fib, AvlTree};

use crate::args::{BuildMethod, TreeFormat};
use crate::output::{write_output, CliError, CliResult};

/// Heights past this build multi-million-node trees; refuse early.
const MAX_BUILD_HEIGHT: u32 = 30;

#[derive(Serialize)]
struct BuildConfig {
    subcommand: &'static str,
    height: u32,
    method: &'static str,
    format: &'static str,
}

#[derive(Serialize)]
struct BuildSummary {
    height: i32,
    nodes: u64,
    leaves: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    histogram: Option<Vec<u64>>,
}

#[derive(Serialize)]
struct BuildReport {
    config: BuildConfig,
    summary: BuildSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    generations: Option<Vec<GenerationRecord>>,
}

pub fn build(
    height: u32,
    method: BuildMethod,
    format: TreeFormat,
    out: Option<&Path>,
) -> CliResult<bool> {
    if height > MAX_BUILD_HEIGHT {
        return Err(CliError::Usage(format!(
            "--height {height} exceeds the supported maximum {MAX_BUILD_HEIGHT} \
             (the tree would have ~{} nodes)",
            fib::min_nodes(height.min(87))
                .map_or_else(|_| "too many".to_string(), |n| n.to_string())
        )));
    }

    let (tree, generations) = match method {
        BuildMethod::Recursive => (build_recursive(height as i32)?, None),
        BuildMethod::Grow => {
            let (tree, trace) = grow_from_empty(height)?;
            (tree, Some(trace.generations))
        }
    };

    let content = match format {
        TreeFormat::Dot => dot::tree_to_dot(&tree, "fibtree"),
        TreeFormat::Json => {
            let histogram = match method {
                BuildMethod::Grow => Some(generation_histogram(&tree)?),
                BuildMethod::Recursive => None,
            };
            let report = BuildReport {
                config: BuildConfig {
                    subcommand: "fibtree build",
                    height,
                    method: method.label(),
                    format: format.label(),
                },
                summary: BuildSummary {
                    height: tree.height(),
                    nodes: tree.count_nodes() as u64,
                    leaves: tree.count_leaves() as u64,
                    histogram,
                },
                generations,
            };
            let mut json =
                serde_json::to_string_pretty(&report).expect("report serialization is infallible");
            json.push('\n');
            json
        }
    };
    write_output(out, &content)?;
    Ok(true)
}

pub const VERIFY_CSV_HEADER: &str =
    "h,nodes,expected_nodes,leaves,expected_leaves,step_identity,bijection,shape,histogram,pass";

/// Sweeps both construction paths over `0..=max_height`, emitting one CSV
/// row per height. Also checks the step identity against the previous
/// height, the internal-node bijection, shape agreement between the two
/// paths, and the generation histogram.
pub fn verify(max_height: u32) -> CliResult<bool> {
    if max_height > MAX_BUILD_HEIGHT {
        return Err(CliError::Usage(format!(
            "--max-height {max_height} exceeds the supported maximum {MAX_BUILD_HEIGHT}"
        )));
    }

    let mut rows = String::from(VERIFY_CSV_HEADER);
    rows.push('\n');
    let mut all_ok = true;
    let mut prev_nodes = 0u64;

    for h in 0..=max_height {
        let recursive = build_recursive(h as i32)?;
        let (grown, _) = grow_from_empty(h)?;

        let expected_nodes = fib::min_nodes(h)?;
        let expected_leaves = fib::min_leaves(h)?;
        let nodes = recursive.count_nodes() as u64;
        let leaves = recursive.count_leaves() as u64;

        let counts_ok = nodes == expected_nodes
            && leaves == expected_leaves
            && grown.count_nodes() as u64 == expected_nodes
            && grown.count_leaves() as u64 == expected_leaves
            && recursive.height() == h as i32
            && grown.height() == h as i32
            && recursive.is_valid()
            && grown.is_valid();
        let step_identity = h == 0 || nodes == prev_nodes + leaves;
        let bijection = grown.count_internal() as u64 == if h == 0 { 0 } else { prev_nodes };
        let shape = same_shape(&recursive, &grown);
        let histogram = histogram_is_fibonacci(&grown, h)?;
        let pass = counts_ok && step_identity && bijection && shape && histogram;
        all_ok &= pass;

        rows.push_str(&format!(
            "{h},{nodes},{expected_nodes},{leaves},{expected_leaves},{step_identity},{bijection},{shape},{histogram},{pass}\n"
        ));
        prev_nodes = nodes;
    }

    write_output(None, &rows)?;
    if all_ok {
        eprintln!("fibtree verify: all heights 0..={max_height} ok");
    } else {
        eprintln!("fibtree verify: FAILURES above (see pass column)");
    }
    Ok(all_ok)
}

fn histogram_is_fibonacci(tree: &AvlTree<u64>, h: u32) -> CliResult<bool> {
    let hist = generation_histogram(tree)?;
    if hist.len() as u32 != h + 1 {
        return Ok(false);
    }
    for (g, &count) in hist.iter().enumerate() {
        if count != fib::fib(g as u32)? {
            return Ok(false);
        }
    }
    Ok(true)
}
