//! Null calibration, empirical p-values, power estimation and large-sample
//! population values.
//!
//! Replication `k` of any simulation draws from stream `k` of a key derived
//! from the user seed, and results are collected in replication order, so
//! every output is independent of the number of worker threads.

use std::time::{SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::alternatives::{generate, population_moments, Alternative, AlternativeSpec};
use crate::error::{Error, Result};
use crate::moments::Sample;
use crate::rng::{derive_seed, RngStream};
use crate::stats::{evaluate, population_statistic, StatisticId, Tail, TestResult};

pub const MIN_REPLICATIONS: usize = 1000;

const NULL_PURPOSE: u64 = 1;
const POWER_PURPOSE: u64 = 2;

/// Sorted null distribution of one statistic for one `(n, p)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NullTable {
    pub statistic: StatisticId,
    pub n: usize,
    pub p: usize,
    pub replications: usize,
    pub seed: u64,
    pub library_version: String,
    pub created_at: u64,
    pub sorted_values: Vec<f64>,
}

impl NullTable {
    /// Empirical p-value with the `(count + 1) / (R + 1)` correction.
    pub fn p_value(&self, value: f64, tail: Tail) -> f64 {
        let v = &self.sorted_values;
        let r = v.len() as f64;
        let upper = || (v.len() - v.partition_point(|&x| x < value)) as f64;
        let lower = || v.partition_point(|&x| x <= value) as f64;
        match tail {
            Tail::Upper => (upper() + 1.0) / (r + 1.0),
            Tail::Lower => (lower() + 1.0) / (r + 1.0),
            Tail::TwoSided => {
                let one = ((upper() + 1.0) / (r + 1.0)).min((lower() + 1.0) / (r + 1.0));
                (2.0 * one).min(1.0)
            }
        }
    }

    /// Describes what the table applies to, for error messages.
    pub fn describe(statistic: StatisticId, n: usize, p: usize) -> String {
        format!("{statistic} with n = {n}, p = {p}")
    }
}

/// Timestamp for new tables; `SOURCE_DATE_EPOCH` pins it for reproducible files.
pub fn timestamp() -> u64 {
    if let Some(t) = std::env::var("SOURCE_DATE_EPOCH").ok().and_then(|s| s.trim().parse().ok()) {
        return t;
    }
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn check_design(stats: &[StatisticId], n: usize, p: usize) -> Result<()> {
    if p == 0 {
        return Err(Error::InvalidInput("dimension p must be at least 1".into()));
    }
    for s in stats {
        let required = s.min_n(p);
        if n < required {
            return Err(Error::SampleTooSmall {
                n,
                required,
                what: "the requested statistics",
            });
        }
    }
    Ok(())
}

/// Statistic values for `reps` samples drawn by `draw(k)`; `None` marks a
/// replication where the statistic could not be evaluated.
fn simulate(
    stats: &[StatisticId],
    reps: usize,
    draw: impl Fn(u64) -> Result<Sample> + Sync,
) -> Result<Vec<Vec<Option<f64>>>> {
    (0..reps as u64)
        .into_par_iter()
        .map(|k| {
            let x = draw(k)?;
            Ok(match evaluate(&x, stats) {
                Ok(values) => values
                    .into_iter()
                    .map(|v| v.ok().filter(|x| x.is_finite()))
                    .collect(),
                Err(_) => vec![None; stats.len()],
            })
        })
        .collect()
}

/// Simulates the null distribution of each statistic from `replications`
/// standard normal samples of size `n x p`. All statistics share the samples.
pub fn calibrate(stats: &[StatisticId], n: usize, p: usize, replications: usize, seed: u64) -> Result<Vec<NullTable>> {
    check_design(stats, n, p)?;
    if replications < MIN_REPLICATIONS {
        return Err(Error::InvalidInput(format!(
            "at least {MIN_REPLICATIONS} replications are required, got {replications}"
        )));
    }
    let key = derive_seed(seed, NULL_PURPOSE);
    let spec = AlternativeSpec::new(Alternative::Normal, p);
    let rows = simulate(stats, replications, |k| generate(&spec, n, RngStream::new(key, k)))?;
    let created_at = timestamp();
    stats
        .iter()
        .enumerate()
        .map(|(j, &statistic)| {
            let mut values: Vec<f64> = rows.iter().filter_map(|r| r[j]).collect();
            let failures = replications - values.len();
            if failures > 0 {
                return Err(Error::CalibrationFailure {
                    statistic: statistic.to_string(),
                    failures,
                    replications,
                });
            }
            values.sort_by(f64::total_cmp);
            Ok(NullTable {
                statistic,
                n,
                p,
                replications,
                seed,
                library_version: env!("CARGO_PKG_VERSION").to_string(),
                created_at,
                sorted_values: values,
            })
        })
        .collect()
}

fn check_table(table: &NullTable, statistic: StatisticId, n: usize, p: usize) -> Result<()> {
    if table.statistic != statistic || table.n != n || table.p != p {
        return Err(Error::TableMismatch {
            expected: NullTable::describe(table.statistic, table.n, table.p),
            found: NullTable::describe(statistic, n, p),
        });
    }
    Ok(())
}

/// Tests one sample against a calibrated null table, rejecting in the
/// statistic's default tail.
pub fn run_test(x: &Sample, statistic: StatisticId, table: &NullTable, alpha: f64) -> Result<TestResult> {
    run_test_with_tail(x, statistic, table, alpha, statistic.tail())
}

pub fn run_test_with_tail(
    x: &Sample,
    statistic: StatisticId,
    table: &NullTable,
    alpha: f64,
    tail: Tail,
) -> Result<TestResult> {
    check_table(table, statistic, x.n(), x.p())?;
    let value = evaluate(x, &[statistic])?.remove(0)?;
    let p_value = table.p_value(value, tail);
    Ok(TestResult {
        statistic,
        tail,
        value,
        p_value,
        reject: p_value <= alpha,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerEntry {
    pub statistic: StatisticId,
    pub power: f64,
    pub se: f64,
    pub reps: usize,
    /// Replications in which the statistic could not be evaluated; they
    /// count as non-rejections.
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerReport {
    pub alternative: Alternative,
    pub n: usize,
    pub p: usize,
    pub alpha: f64,
    pub entries: Vec<PowerEntry>,
}

fn stream_key(seed: u64, spec: &AlternativeSpec, n: usize) -> u64 {
    let digest = Sha256::digest(format!("{}|{}|{}", spec.alternative, spec.p, n).as_bytes());
    let tag = u64::from_le_bytes(digest[..8].try_into().expect("digest has 32 bytes"));
    derive_seed(derive_seed(seed, POWER_PURPOSE), tag)
}

/// Rejection rates of the given tests on `reps` samples from an alternative.
/// `tables` must hold a null table for every statistic at this `(n, p)`.
pub fn power(
    spec: &AlternativeSpec,
    stats: &[StatisticId],
    n: usize,
    alpha: f64,
    reps: usize,
    tables: &[NullTable],
    seed: u64,
) -> Result<PowerReport> {
    check_design(stats, n, spec.p)?;
    if reps == 0 {
        return Err(Error::InvalidInput("power needs at least one replication".into()));
    }
    let chosen: Vec<&NullTable> = stats
        .iter()
        .map(|s| {
            tables
                .iter()
                .find(|t| t.statistic == *s && t.n == n && t.p == spec.p)
                .ok_or_else(|| Error::MissingTable(NullTable::describe(*s, n, spec.p)))
        })
        .collect::<Result<_>>()?;
    let key = stream_key(seed, spec, n);
    let rows = simulate(stats, reps, |k| generate(spec, n, RngStream::new(key, k)))?;
    let entries = stats
        .iter()
        .enumerate()
        .map(|(j, &statistic)| {
            let tail = statistic.tail();
            let mut rejections = 0usize;
            let mut failures = 0usize;
            for row in &rows {
                match row[j] {
                    Some(v) if chosen[j].p_value(v, tail) <= alpha => rejections += 1,
                    Some(_) => {}
                    None => failures += 1,
                }
            }
            let power = rejections as f64 / reps as f64;
            PowerEntry {
                statistic,
                power,
                se: (power * (1.0 - power) / reps as f64).sqrt(),
                reps,
                failures,
            }
        })
        .collect();
    Ok(PowerReport {
        alternative: spec.alternative,
        n,
        p: spec.p,
        alpha,
        entries,
    })
}

/// Large-sample limit of a statistic under an alternative.
pub fn population_value(spec: &AlternativeSpec, statistic: StatisticId) -> Result<f64> {
    let m = population_moments(spec, statistic.moment_order())?;
    population_statistic(&m, statistic)
}
