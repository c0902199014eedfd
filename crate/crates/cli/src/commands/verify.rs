use treelab_core::heap::aggregate_bound;
use treelab_core::ledger::worst_case_scan;
use treelab_core::minimal::{build_recursive, generation_histogram, grow_from_empty, same_shape};
use treelab_core::oracle;
use treelab_core::{fib, inputs, AvlTree, Error, InputKind};

use crate::output::{check_line, write_output, CliError, CliResult};

const DESK_SEEDS: u64 = 10;
const AGGREGATE_MAX_N: u64 = 1_000_000;

/// Runs every verification sweep at desk scale and prints one pass/fail
/// line per check. Exit status reflects the conjunction.
pub fn all(max_height: u32, max_size: usize) -> CliResult<bool> {
    if max_height > 30 {
        return Err(CliError::Usage(
            "--max-height beyond 30 builds multi-million-node trees; pick something smaller"
                .to_string(),
        ));
    }
    if max_size < 1 {
        return Err(CliError::Usage("--max-size must be at least 1".to_string()));
    }

    let mut out = String::new();
    let mut all_ok = true;
    let mut run = |passed: bool, label: String| {
        all_ok &= passed;
        check_line(passed, &label)
    };

    out.push_str(&run(
        fibtree_identities(max_height)?,
        format!("minimal-tree identities, both paths (h <= {max_height})"),
    ));
    out.push_str(&run(
        minimal_height_bounds(max_height)?,
        format!("height bound on minimal trees (h <= {max_height})"),
    ));
    out.push_str(&run(
        random_insert_bounds(max_size)?,
        format!("height bound on random-insert trees ({DESK_SEEDS} seeds, n = {max_size})"),
    ));
    out.push_str(&run(
        ledger_sweep(max_size)?,
        format!("heap ledger sweep (n <= {max_size}, ascending/descending/{DESK_SEEDS} seeds)"),
    ));
    out.push_str(&run(
        aggregate_sweep(),
        format!("aggregate cost bound <= 2n (n <= {AGGREGATE_MAX_N})"),
    ));
    out.push_str(&run(
        oracle_avl_agreement()?,
        "oracle agreement: minimal-tree counts (h <= 4)".to_string(),
    ));
    out.push_str(&run(
        oracle_heap_agreement()?,
        "oracle agreement: worst-case heap cost (n <= 8)".to_string(),
    ));

    out.push_str(if all_ok {
        "all checks passed\n"
    } else {
        "CHECKS FAILED\n"
    });
    write_output(None, &out)?;
    Ok(all_ok)
}

fn fibtree_identities(max_height: u32) -> CliResult<bool> {
    let mut prev_nodes = 0u64;
    for h in 0..=max_height {
        let recursive = build_recursive(h as i32)?;
        let (grown, trace) = grow_from_empty(h)?;
        let nodes = recursive.count_nodes() as u64;
        let leaves = recursive.count_leaves() as u64;

        let ok = nodes == fib::min_nodes(h)?
            && leaves == fib::min_leaves(h)?
            && grown.count_nodes() as u64 == nodes
            && grown.count_leaves() as u64 == leaves
            && (h == 0 || nodes == prev_nodes + leaves)
            && grown.count_internal() as u64 == if h == 0 { 0 } else { prev_nodes }
            && same_shape(&recursive, &grown)
            && histogram_matches(&grown, h)?
            && trace.generations.len() as u32 == h + 1
            && recursive.is_valid()
            && grown.is_valid();
        if !ok {
            eprintln!("minimal-tree identity failed at h = {h}");
            return Ok(false);
        }
        prev_nodes = nodes;
    }
    Ok(true)
}

fn histogram_matches(tree: &AvlTree<u64>, h: u32) -> CliResult<bool> {
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

fn minimal_height_bounds(max_height: u32) -> CliResult<bool> {
    for h in 0..=max_height {
        let tree = build_recursive(h as i32)?;
        if !tree.height_bound_check()? {
            eprintln!("height bound failed on the minimal tree of height {h}");
            return Ok(false);
        }
    }
    Ok(true)
}

fn random_insert_bounds(n: usize) -> CliResult<bool> {
    for seed in 0..DESK_SEEDS {
        let mut tree = AvlTree::new();
        for key in inputs::random_u64_keys(n, seed) {
            match tree.insert(key) {
                Ok(()) | Err(Error::DuplicateKey) => {}
                Err(e) => return Err(e.into()),
            }
        }
        if !tree.is_empty() && !tree.height_bound_check()? {
            eprintln!("height bound failed on random inserts, seed {seed}");
            return Ok(false);
        }
    }
    Ok(true)
}

fn ledger_sweep(max_size: usize) -> CliResult<bool> {
    let mut kinds = vec![InputKind::Ascending, InputKind::Descending];
    kinds.extend((0..DESK_SEEDS).map(|seed| InputKind::Random { seed }));
    let summary = worst_case_scan(max_size, &kinds)?;
    if !summary.all_passed {
        eprintln!("ledger sweep reported a failing trace");
    }
    Ok(summary.all_passed && summary.max_ratio <= 1.5)
}

fn aggregate_sweep() -> bool {
    (1..=AGGREGATE_MAX_N).all(|n| aggregate_bound(n) <= 2 * n)
}

fn oracle_avl_agreement() -> CliResult<bool> {
    for h in 0..=4u32 {
        if oracle::min_nodes_oracle(h)? != fib::min_nodes(h)?
            || oracle::min_leaves_oracle(h)? != fib::min_leaves(h)?
        {
            eprintln!("oracle disagreed with the closed form at h = {h}");
            return Ok(false);
        }
    }
    Ok(true)
}

fn oracle_heap_agreement() -> CliResult<bool> {
    for n in 1..=8usize {
        let worst = oracle::heap_worst_cost_oracle(n)?;
        if 2 * worst > 3 * n as u64 || worst != oracle::descent_depth_sum(n) {
            eprintln!("heap oracle bound failed at n = {n}");
            return Ok(false);
        }
    }
    Ok(true)
}
