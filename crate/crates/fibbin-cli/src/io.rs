//! Input parsing and TSV output.
//!
//! Input is UTF-8 text: whitespace-separated `x y` pairs, or raw
//! observations (any number of integers per line) in raw mode. Blank lines
//! and lines starting with `#` are skipped. Output is tab-separated, LF
//! line endings, with Rust's shortest round-trip formatting for reals and
//! plain decimal for integer values.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};

use fibbin::FrequencyTable;

use crate::error::CliError;

/// Reads a frequency table from `path` (stdin when `None`).
pub fn read_table(
    path: Option<&str>,
    raw: bool,
    offset: Option<i64>,
) -> Result<FrequencyTable, CliError> {
    let source = path.unwrap_or("stdin");
    let text = read_to_string(path)?;
    if raw {
        let mut observations = Vec::new();
        for (number, line) in data_lines(&text) {
            for token in line.split_whitespace() {
                let x: i64 = token.parse().map_err(|_| {
                    CliError::Input(format!(
                        "{source}:{number}: expected an integer observation, found {token:?}"
                    ))
                })?;
                observations.push(x);
            }
        }
        FrequencyTable::tally(&observations, offset)
            .map_err(|e| CliError::Input(format!("{source}: {e}")))
    } else {
        let mut pairs: Vec<(i64, f64, usize)> = Vec::new();
        for (number, line) in data_lines(&text) {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(CliError::Input(format!(
                    "{source}:{number}: expected an `x y` pair, found {} field(s)",
                    fields.len()
                )));
            }
            let x: i64 = fields[0].parse().map_err(|_| {
                CliError::Input(format!(
                    "{source}:{number}: abscissa {:?} is not an integer",
                    fields[0]
                ))
            })?;
            let y: f64 = fields[1].parse().map_err(|_| {
                CliError::Input(format!(
                    "{source}:{number}: weight {:?} is not a number",
                    fields[1]
                ))
            })?;
            if !y.is_finite() {
                return Err(CliError::Input(format!(
                    "{source}:{number}: weight {y} is not finite"
                )));
            }
            pairs.push((x, y, number));
        }
        FrequencyTable::from_pairs(pairs.iter().map(|&(x, y, _)| (x, y)), offset).map_err(|e| {
            // attach the offending line where one can be identified
            let line = match e {
                fibbin::Error::DuplicateAbscissa(x) => pairs
                    .iter()
                    .filter(|p| p.0 == x)
                    .map(|p| p.2)
                    .max(),
                fibbin::Error::NegativeWeight { abscissa, .. } => pairs
                    .iter()
                    .find(|p| p.0 == abscissa)
                    .map(|p| p.2),
                fibbin::Error::OffsetViolation { abscissa, .. } => pairs
                    .iter()
                    .find(|p| p.0 == abscissa)
                    .map(|p| p.2),
                _ => None,
            };
            match line {
                Some(n) => CliError::Input(format!("{source}:{n}: {e}")),
                None => CliError::Input(format!("{source}: {e}")),
            }
        })
    }
}

fn read_to_string(path: Option<&str>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        Some(p) => {
            let file =
                File::open(p).map_err(|e| CliError::Input(format!("{p}: {e}")))?;
            BufReader::new(file)
                .read_to_string(&mut text)
                .map_err(|e| CliError::Input(format!("{p}: {e}")))?;
        }
        None => {
            io::stdin()
                .lock()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

// 1-based numbered lines with comments and blanks removed
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

/// Buffered writer to `path` (stdout when `None`).
pub fn writer(path: Option<&str>) -> Result<Box<dyn Write>, CliError> {
    match path {
        Some(p) => {
            let file = File::create(p)
                .map_err(|e| CliError::Input(format!("{p}: {e}")))?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout()))),
    }
}

pub fn write_error(e: io::Error) -> CliError {
    CliError::Input(format!("write failed: {e}"))
}
