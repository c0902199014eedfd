mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{AvlCommand, Cli, Command, FibtreeCommand, HeapCommand, OracleCommand, VerifyCommand};
use output::CliResult;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Fibtree(FibtreeCommand::Build {
            height,
            method,
            format,
            out,
        }) => commands::fibtree::build(height, method, format, out.as_deref()),
        Command::Fibtree(FibtreeCommand::Verify { max_height }) => {
            commands::fibtree::verify(max_height)
        }
        Command::Avl(AvlCommand::Experiment {
            n,
            input,
            seed,
            format,
        }) => commands::avl::experiment(n, input, seed, format),
        Command::Heap(HeapCommand::Trace {
            size,
            input,
            seed,
            file,
            format,
        }) => commands::heap::trace(size, input, seed, file.as_deref(), format),
        Command::Heap(HeapCommand::Verify { max_size, seeds }) => {
            commands::heap::verify(max_size, seeds)
        }
        Command::Oracle(OracleCommand::Avl { max_height }) => commands::oracle::avl(max_height),
        Command::Oracle(OracleCommand::Heap { max_size }) => commands::oracle::heap(max_size),
        Command::Verify(VerifyCommand::All {
            max_height,
            max_size,
        }) => commands::verify::all(max_height, max_size),
    }
}
