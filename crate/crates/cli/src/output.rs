use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

/// Usage and I/O problems (exit code 2). Verification failures are not
/// errors; they surface as a `false` command result (exit code 1).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io { path, source } => write!(f, "{path}: {source}"),
        }
    }
}

impl From<treelab_core::Error> for CliError {
    fn from(e: treelab_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Writes to `out` when given, stdout otherwise.
pub fn write_output(out: Option<&Path>, content: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, content).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(content.as_bytes())
                .and_then(|()| lock.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".to_string(),
                    source,
                })
        }
    }
}

/// One named pass/fail line for composite verification output.
pub fn check_line(passed: bool, label: &str) -> String {
    if passed {
        format!("[PASS] {label}\n")
    } else {
        format!("[FAIL] {label}\n")
    }
}

/// Reads a key file: one integer per line, optional trailing newline.
pub fn read_keys_file(path: &Path) -> CliResult<Vec<i64>> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    text.lines()
        .enumerate()
        .map(|(idx, line)| {
            line.trim().parse::<i64>().map_err(|_| {
                CliError::Usage(format!(
                    "{}:{}: expected one integer per line, got {line:?}",
                    path.display(),
                    idx + 1
                ))
            })
        })
        .collect()
}
