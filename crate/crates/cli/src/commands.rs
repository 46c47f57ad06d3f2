use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bbwt_core::fibzeck::{family_w, family_y, fib_star, fib_word, ibbwt_fib};
use bbwt_core::measures::{Measure, MeasureReport};
use bbwt_core::transforms::{bbwt, bwt, ibbwt, ibwt};
use bbwt_core::verify::{ratio_row, run_suite, RatioRow, Suite};
use bbwt_core::Limits;
use serde::Serialize;

use crate::{Algo, Family, Format};

/// Largest `k` accepted by each family generator.
const MAX_FIB_K: usize = 40;
const MAX_STAR_K: usize = 20;
const MAX_IBBWT_FIB_K: usize = 30;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Failure(_) => ExitCode::from(1),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Failure(msg) => f.write_str(msg),
        }
    }
}

fn failure(e: impl fmt::Display) -> CliError {
    CliError::Failure(e.to_string())
}

fn usage(e: impl fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

pub fn load_limits(path: Option<&Path>) -> Result<Limits, CliError> {
    let Some(path) = path else {
        return Ok(Limits::default());
    };
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read limits file {}: {e}", path.display())))?;
    let limits: Limits = serde_json::from_str(&text)
        .map_err(|e| usage(format!("bad limits file {}: {e}", path.display())))?;
    limits.validate().map_err(usage)?;
    Ok(limits)
}

fn read_input(input: &str) -> Result<Vec<u8>, CliError> {
    if input == "-" {
        let mut buf = Vec::new();
        io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| failure(format!("cannot read standard input: {e}")))?;
        Ok(buf)
    } else {
        fs::read(input).map_err(|e| failure(format!("cannot read {input}: {e}")))
    }
}

fn write_stdout(bytes: &[u8]) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    out.write_all(bytes)
        .and_then(|_| out.flush())
        .map_err(|e| failure(format!("cannot write output: {e}")))
}

pub fn transform(algo: Algo, hex_mode: bool, input: &str) -> Result<ExitCode, CliError> {
    let raw = read_input(input)?;
    let data = if hex_mode {
        let text: String = String::from_utf8_lossy(&raw)
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        hex::decode(text).map_err(|e| failure(format!("bad hex input: {e}")))?
    } else {
        raw
    };
    let out = match algo {
        Algo::Bwt => bwt(&data),
        Algo::Bbwt => bbwt(&data),
        Algo::Ibwt => ibwt(&data),
        Algo::Ibbwt => ibbwt(&data),
    }
    .map_err(failure)?;
    if hex_mode {
        write_stdout(format!("{}\n", hex::encode(out)).as_bytes())?;
    } else {
        write_stdout(&out)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_set(set: &str) -> Result<Vec<Measure>, CliError> {
    let mut measures = Vec::new();
    for name in set.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let m: Measure = name.parse().map_err(usage)?;
        if !measures.contains(&m) {
            measures.push(m);
        }
    }
    if measures.is_empty() {
        return Err(usage("empty measure set"));
    }
    Ok(measures)
}

pub fn measure(
    set: &str,
    format: Format,
    input: &str,
    limits: &Limits,
) -> Result<ExitCode, CliError> {
    let measures = parse_set(set)?;
    let data = read_input(input)?;
    if data.is_empty() {
        return Err(failure("empty input"));
    }
    let report = MeasureReport::compute(&data, &measures, limits).map_err(failure)?;
    let text = match format {
        Format::Json => serde_json::to_string(&report).map_err(failure)?,
        Format::Csv => format!(
            "{}\n{}",
            MeasureReport::csv_header(&measures),
            report.csv_row(&measures)
        ),
    };
    write_stdout(format!("{text}\n").as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

fn check_k(k: usize, lo: usize, hi: usize) -> Result<(), CliError> {
    if k < lo || k > hi {
        return Err(usage(format!("k = {k} outside [{lo}, {hi}]")));
    }
    Ok(())
}

pub fn family(name: Family, k: usize) -> Result<ExitCode, CliError> {
    let word = match name {
        Family::Wk => {
            check_k(k, 2, MAX_STAR_K)?;
            family_w(k)
        }
        Family::Yk => {
            check_k(k, 2, MAX_STAR_K)?;
            family_y(k)
        }
        Family::Fib => {
            check_k(k, 0, MAX_FIB_K)?;
            Ok(fib_word(k))
        }
        Family::Fibstar => {
            check_k(k, 0, MAX_STAR_K)?;
            Ok(fib_star(k))
        }
        Family::IbbwtFib => {
            check_k(k, 2, MAX_IBBWT_FIB_K)?;
            ibbwt_fib(k)
        }
    }
    .map_err(usage)?;
    write_stdout(&word)?;
    Ok(ExitCode::SUCCESS)
}

pub fn verify(suite: &str, limits: &Limits, no_timing: bool) -> Result<ExitCode, CliError> {
    let suite: Suite = suite.parse().map_err(usage)?;
    let mut report = run_suite(suite, limits).map_err(usage)?;
    if no_timing {
        report = report.without_timing();
    }
    let json = serde_json::to_string_pretty(&report).map_err(failure)?;
    write_stdout(format!("{json}\n").as_bytes())?;
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Serialize)]
#[serde(untagged)]
enum RatioEntry {
    Row(RatioRow),
    Error { name: String, error: String },
}

pub fn ratio(format: Format, files: &[PathBuf]) -> Result<ExitCode, CliError> {
    let entries: Vec<RatioEntry> = files
        .iter()
        .map(|path| {
            let name = path.display().to_string();
            let row = fs::read(path)
                .map_err(|e| e.to_string())
                .and_then(|data| ratio_row(&name, &data).map_err(|e| e.to_string()));
            match row {
                Ok(row) => RatioEntry::Row(row),
                Err(error) => RatioEntry::Error { name, error },
            }
        })
        .collect();

    let text = match format {
        Format::Json => serde_json::to_string_pretty(&entries).map_err(failure)?,
        Format::Csv => {
            let header = RatioRow::csv_header();
            let blanks = ",".repeat(header.matches(',').count());
            let mut lines = vec![format!("{header},error")];
            for entry in &entries {
                lines.push(match entry {
                    RatioEntry::Row(row) => format!("{},", row.csv_row()),
                    RatioEntry::Error { name, error } => {
                        format!("{name}{blanks},{}", error.replace(',', ";"))
                    }
                });
            }
            lines.join("\n")
        }
    };
    write_stdout(format!("{text}\n").as_bytes())?;
    let all_failed = entries
        .iter()
        .all(|e| matches!(e, RatioEntry::Error { .. }));
    Ok(if all_failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
