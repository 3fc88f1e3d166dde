//! Null table files and power report export.
//!
//! A null table file is one line of JSON metadata followed by the sorted
//! values as little-endian `f64`. The header carries a SHA-256 checksum of
//! the payload.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::montecarlo::{NullTable, PowerReport};
use crate::stats::StatisticId;

pub const FORMAT_VERSION: u32 = 1;
pub const NULL_EXTENSION: &str = "null";

#[derive(Debug, Serialize, Deserialize)]
struct Header {
    format_version: u32,
    statistic: StatisticId,
    n: usize,
    p: usize,
    replications: usize,
    seed: u64,
    library_version: String,
    created_at: u64,
    checksum: String,
}

fn checksum(payload: &[u8]) -> String {
    hex::encode(Sha256::digest(payload))
}

/// File name under which [`save_null_in`] stores a table, e.g. `z2_hl_n20_p2.null`.
pub fn null_file_name(statistic: StatisticId, n: usize, p: usize) -> String {
    format!("{statistic}_n{n}_p{p}.{NULL_EXTENSION}")
}

pub fn encode_null(table: &NullTable) -> Result<Vec<u8>> {
    let payload: Vec<u8> = table.sorted_values.iter().flat_map(|v| v.to_le_bytes()).collect();
    let header = Header {
        format_version: FORMAT_VERSION,
        statistic: table.statistic,
        n: table.n,
        p: table.p,
        replications: table.replications,
        seed: table.seed,
        library_version: table.library_version.clone(),
        created_at: table.created_at,
        checksum: checksum(&payload),
    };
    let mut out = serde_json::to_vec(&header)?;
    out.push(b'\n');
    out.extend_from_slice(&payload);
    Ok(out)
}

pub fn decode_null(bytes: &[u8]) -> Result<NullTable> {
    let split = bytes
        .iter()
        .position(|&b| b == b'\n')
        .ok_or_else(|| Error::CorruptFile("no header line".into()))?;
    let (head, payload) = (&bytes[..split], &bytes[split + 1..]);
    let value: serde_json::Value =
        serde_json::from_slice(head).map_err(|e| Error::CorruptFile(format!("unreadable header: {e}")))?;
    let version = value
        .get("format_version")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| Error::CorruptFile("header has no format_version".into()))?;
    if version != u64::from(FORMAT_VERSION) {
        return Err(Error::UnsupportedVersion(u32::try_from(version).unwrap_or(u32::MAX)));
    }
    let header: Header =
        serde_json::from_value(value).map_err(|e| Error::CorruptFile(format!("invalid header: {e}")))?;
    if payload.len() % 8 != 0 || payload.len() / 8 != header.replications {
        return Err(Error::LengthMismatch {
            expected: header.replications,
            found: payload.len() / 8,
        });
    }
    let computed = checksum(payload);
    if computed != header.checksum {
        return Err(Error::ChecksumMismatch {
            expected: header.checksum,
            computed,
        });
    }
    let sorted_values: Vec<f64> = payload
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().expect("chunk of 8")))
        .collect();
    if sorted_values.windows(2).any(|w| w[0].total_cmp(&w[1]).is_gt()) {
        return Err(Error::CorruptFile("payload values are not ascending".into()));
    }
    Ok(NullTable {
        statistic: header.statistic,
        n: header.n,
        p: header.p,
        replications: header.replications,
        seed: header.seed,
        library_version: header.library_version,
        created_at: header.created_at,
        sorted_values,
    })
}

pub fn save_null(table: &NullTable, path: &Path) -> Result<()> {
    fs::write(path, encode_null(table)?)?;
    Ok(())
}

pub fn load_null(path: &Path) -> Result<NullTable> {
    decode_null(&fs::read(path)?)
}

/// Saves under the canonical file name in `dir`, returning the path.
pub fn save_null_in(table: &NullTable, dir: &Path) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(null_file_name(table.statistic, table.n, table.p));
    save_null(table, &path)?;
    Ok(path)
}

/// Loads the table for `(statistic, n, p)` from `dir`.
pub fn load_null_from(dir: &Path, statistic: StatisticId, n: usize, p: usize) -> Result<NullTable> {
    let path = dir.join(null_file_name(statistic, n, p));
    if !path.exists() {
        return Err(Error::MissingTable(format!(
            "{} (expected {})",
            NullTable::describe(statistic, n, p),
            path.display()
        )));
    }
    let table = load_null(&path)?;
    if table.statistic != statistic || table.n != n || table.p != p {
        return Err(Error::TableMismatch {
            expected: NullTable::describe(statistic, n, p),
            found: NullTable::describe(table.statistic, table.n, table.p),
        });
    }
    Ok(table)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            _ => Err(Error::Parse {
                input: s.into(),
                reason: "expected csv or json".into(),
            }),
        }
    }
}

impl ReportFormat {
    /// Guesses the format from a file extension, defaulting to CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => ReportFormat::Json,
            _ => ReportFormat::Csv,
        }
    }
}

#[derive(Debug, Serialize)]
struct CsvRow<'a> {
    alternative: String,
    n: usize,
    p: usize,
    statistic: &'a str,
    power: f64,
    se: f64,
    reps: usize,
}

/// Writes reports as CSV rows (one per alternative and statistic) or as a
/// JSON array of reports.
pub fn write_reports<W: Write>(reports: &[PowerReport], format: ReportFormat, mut out: W) -> Result<()> {
    match format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut out, reports)?;
            out.write_all(b"\n")?;
        }
        ReportFormat::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
            w.write_record(["alternative", "n", "p", "statistic", "power", "se", "reps"])
                .map_err(csv_error)?;
            for r in reports {
                for e in &r.entries {
                    let name = e.statistic.to_string();
                    w.serialize(CsvRow {
                        alternative: r.alternative.to_string(),
                        n: r.n,
                        p: r.p,
                        statistic: &name,
                        power: e.power,
                        se: e.se,
                        reps: e.reps,
                    })
                    .map_err(csv_error)?;
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn csv_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => Error::Io(e),
        other => Error::InvalidInput(format!("csv: {other:?}")),
    }
}

pub fn export_reports(reports: &[PowerReport], format: ReportFormat, path: &Path) -> Result<()> {
    let file = fs::File::create(path)?;
    write_reports(reports, format, std::io::BufWriter::new(file))
}

pub fn export_report(report: &PowerReport, format: ReportFormat, path: &Path) -> Result<()> {
    export_reports(std::slice::from_ref(report), format, path)
}

pub fn load_reports_json(path: &Path) -> Result<Vec<PowerReport>> {
    Ok(serde_json::from_slice(&fs::read(path)?)?)
}
