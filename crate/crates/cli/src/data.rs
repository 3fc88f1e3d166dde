//! CSV ingestion: comma separated, decimal point, optional header row.

use std::io::Read;

use canorm::moments::Sample;
use canorm::Error;

/// Reads an `n x p` numeric table. The first row is a header when none of
/// its cells parses as a number.
pub fn read_sample<R: Read>(input: R) -> Result<Sample, Error> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(input);
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut width = None;
    for (k, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse {
            input: format!("row {}", k + 1),
            reason: e.to_string(),
        })?;
        let line = k + 1;
        if record.iter().all(str::is_empty) {
            continue;
        }
        if k == 0 && record.iter().all(|c| c.parse::<f64>().is_err()) {
            width = Some(record.len());
            continue;
        }
        let expected = *width.get_or_insert(record.len());
        if record.len() != expected {
            return Err(Error::Parse {
                input: format!("row {line}"),
                reason: format!("has {} columns, expected {expected}", record.len()),
            });
        }
        let row = record
            .iter()
            .enumerate()
            .map(|(j, cell)| {
                cell.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| Error::Parse {
                        input: format!("row {line}, column {}", j + 1),
                        reason: format!("'{cell}' is not a finite number"),
                    })
            })
            .collect::<Result<Vec<f64>, Error>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::InvalidInput("the data file holds no observations".into()));
    }
    Sample::from_rows(&rows)
}
