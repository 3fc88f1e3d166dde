//! Desk-scale reproductions of the power tables and the table of population
//! values.

use std::io::Write;
use std::path::Path;

use canorm::alternatives::{Alternative, AlternativeSpec};
use canorm::montecarlo::{calibrate, population_value, power, NullTable};
use canorm::stats::StatisticId;
use canorm::store::load_null_from;
use canorm::Error;

/// Column order of the reference tables.
pub fn table_columns() -> Vec<StatisticId> {
    let mut cols = vec![StatisticId::B1P, StatisticId::B2P];
    cols.extend(StatisticId::all().into_iter().filter(|s| s.functional.is_some()));
    cols
}

pub const OMNIBUS_MARKER: &str = "not implemented: no formula available";

/// Null tables for every column at `(n, p)`, loaded from `dir` when given,
/// otherwise simulated.
pub fn null_tables(dir: Option<&Path>, n: usize, p: usize, reps: usize, seed: u64) -> Result<Vec<NullTable>, Error> {
    let stats = table_columns();
    match dir {
        Some(dir) => stats.iter().map(|&s| load_null_from(dir, s, n, p)).collect(),
        None => calibrate(&stats, n, p, reps, seed),
    }
}

pub struct PowerTableConfig<'a> {
    pub p: usize,
    pub alpha: f64,
    pub reps: usize,
    pub null_reps: usize,
    pub seed: u64,
    pub null_dir: Option<&'a Path>,
}

pub fn power_table<W: Write>(cfg: &PowerTableConfig, out: W) -> Result<(), Error> {
    let cols = table_columns();
    let sizes = [20usize, 50];
    let mut tables = Vec::new();
    for &n in &sizes {
        eprintln!("null tables for n = {n}, p = {}", cfg.p);
        tables.extend(null_tables(cfg.null_dir, n, cfg.p, cfg.null_reps, cfg.seed)?);
    }
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["alternative".to_string(), "n".to_string()];
    header.extend(cols.iter().map(|s| s.to_string()));
    header.push("t_omnibus".into());
    header.extend(cols.iter().map(|s| format!("se_{s}")));
    w.write_record(&header).map_err(csv_error)?;
    for entry in Alternative::catalogue().into_iter().filter(|e| e.alternative != Alternative::Normal) {
        let spec = AlternativeSpec::new(entry.alternative, cfg.p);
        for &n in &sizes {
            eprintln!("{} n = {n}", entry.name);
            let report = power(&spec, &cols, n, cfg.alpha, cfg.reps, &tables, cfg.seed)?;
            let mut row = vec![entry.name.to_string(), n.to_string()];
            row.extend(report.entries.iter().map(|e| e.power.to_string()));
            row.push(OMNIBUS_MARKER.into());
            row.extend(report.entries.iter().map(|e| e.se.to_string()));
            w.write_record(&row).map_err(csv_error)?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Cells left empty in the reference table: the Mardia columns
/// of the p = 3 mixtures other than the first.
fn reference_gap(alt: Alternative, p: usize, stat: StatisticId) -> bool {
    matches!(alt, Alternative::Mixture { w, m, r } if p == 3
        && stat.functional.is_none()
        && !(w == 0.1 && m == 1.0 && r == 0.0))
}

pub fn population_table<W: Write>(out: W) -> Result<(), Error> {
    let cols = table_columns();
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["alternative".to_string(), "p".to_string()];
    header.extend(cols.iter().map(|s| s.to_string()));
    w.write_record(&header).map_err(csv_error)?;
    for entry in Alternative::catalogue() {
        for p in [2, 3] {
            let spec = AlternativeSpec::new(entry.alternative, p);
            let mut row = vec![entry.name.to_string(), p.to_string()];
            for &s in &cols {
                let cell = if reference_gap(entry.alternative, p, s) {
                    "X".to_string()
                } else {
                    match population_value(&spec, s) {
                        Ok(v) => format!("{v:.4}"),
                        Err(Error::InfiniteMoments { .. }) => "--".to_string(),
                        Err(e) => return Err(e),
                    }
                };
                row.push(cell);
            }
            w.write_record(&row).map_err(csv_error)?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn csv_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => Error::Io(e),
        other => Error::InvalidInput(format!("csv: {other:?}")),
    }
}
