use treelab_core::{fib, inputs, AvlTree, Error};

use crate::args::{AvlInput, TableFormat};
use crate::output::{write_output, CliResult};

pub const EXPERIMENT_CSV_HEADER: &str = "n,height,bound,pass";

/// Inserts `n` keys and reports `(n, height, log_phi(n+1), pass)` rows at
/// power-of-two checkpoints plus the final size.
///
/// Random keys are uniform 64-bit values; collisions are skipped, so the
/// reported sizes count distinct keys actually in the tree.
pub fn experiment(n: usize, input: AvlInput, seed: u64, _format: TableFormat) -> CliResult<bool> {
    let keys: Vec<u64> = match input {
        AvlInput::Ascending => (1..=n as u64).collect(),
        AvlInput::Random => inputs::random_u64_keys(n, seed),
    };

    let mut tree = AvlTree::new();
    let mut rows = String::from(EXPERIMENT_CSV_HEADER);
    rows.push('\n');
    let mut all_ok = true;
    let mut next_checkpoint = 1usize;

    for key in keys {
        match tree.insert(key) {
            Ok(()) => {}
            Err(Error::DuplicateKey) => continue,
            Err(e) => return Err(e.into()),
        }
        if tree.len() == next_checkpoint {
            all_ok &= record(&tree, &mut rows)?;
            next_checkpoint *= 2;
        }
    }
    // Final size, unless it landed exactly on a checkpoint.
    if tree.len() + 1 != next_checkpoint && !tree.is_empty() {
        all_ok &= record(&tree, &mut rows)?;
    }

    write_output(None, &rows)?;
    if all_ok {
        eprintln!(
            "avl experiment ({}): height bound held at every checkpoint (final n = {})",
            input.label(),
            tree.len()
        );
    } else {
        eprintln!("avl experiment: BOUND VIOLATION (see pass column)");
    }
    Ok(all_ok)
}

fn record(tree: &AvlTree<u64>, rows: &mut String) -> CliResult<bool> {
    let n = tree.count_nodes() as u64;
    let bound = fib::golden_height_bound(n)?;
    let pass = tree.height_bound_check()?;
    rows.push_str(&format!("{n},{},{bound:.6},{pass}\n", tree.height()));
    Ok(pass)
}
