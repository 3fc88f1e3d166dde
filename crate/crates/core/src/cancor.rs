//! Squared canonical correlations between the two variable groups of a
//! partitioned covariance matrix, and the functionals built from them.

use std::fmt;
use std::str::FromStr;

use nalgebra::linalg::{Cholesky, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::covblocks::CovBlocks;
use crate::error::{Error, Result};
use crate::matalg::Matrix;

/// Raw eigenvalues within this distance of `[0, 1]` are clamped.
pub const CLAMP_TOL: f64 = 1e-8;
/// Blocks with a larger condition number (after scaling to unit diagonal)
/// are treated as singular.
pub const MAX_CONDITION: f64 = 1e12;
/// Squared correlations this close to 1 make the Pillai-Bartlett trace undefined.
pub const UNIT_TOL: f64 = 1e-12;

/// Squared canonical correlations, largest first.
#[derive(Debug, Clone, PartialEq)]
pub struct CanCorSq {
    pub values: Vec<f64>,
    pub clamped_count: usize,
}

fn unit_diagonal(a: &Matrix, block: &'static str) -> Result<Matrix> {
    let mut scale = Vec::with_capacity(a.nrows());
    for i in 0..a.nrows() {
        let d = a[(i, i)];
        if !(d > 0.0) || !d.is_finite() {
            return Err(Error::SingularBlock {
                block,
                condition: f64::INFINITY,
            });
        }
        scale.push(1.0 / d.sqrt());
    }
    Ok(Matrix::from_fn(a.nrows(), a.ncols(), |i, j| {
        let v = a[(i, j)] * scale[i] * scale[j];
        // symmetrize away rounding noise
        0.5 * (v + a[(j, i)] * scale[i] * scale[j])
    }))
}

fn checked_cholesky(a: &Matrix, block: &'static str) -> Result<(Matrix, Vec<f64>)> {
    let scale: Vec<f64> = (0..a.nrows()).map(|i| a[(i, i)].sqrt()).collect();
    let r = unit_diagonal(a, block)?;
    let eig = SymmetricEigen::new(r.clone()).eigenvalues;
    let (lo, hi) = (eig.min(), eig.max());
    let condition = if lo > 0.0 { hi / lo } else { f64::INFINITY };
    if !(condition < MAX_CONDITION) {
        return Err(Error::SingularBlock { block, condition });
    }
    let l = Cholesky::new(r)
        .ok_or(Error::SingularBlock { block, condition })?
        .unpack();
    Ok((l, scale))
}

/// Eigenvalues of `b11^-1 b12 b22^-1 b21`, computed through the similar
/// symmetric matrix `M M'` with `M = L11^-1 b12 L22^-T`.
pub fn cancor_sq(blocks: &CovBlocks) -> Result<CanCorSq> {
    let (l11, s1) = checked_cholesky(&blocks.b11, "b11")?;
    let (l22, s2) = checked_cholesky(&blocks.b22, "b22")?;
    let b12 = Matrix::from_fn(blocks.b12.nrows(), blocks.b12.ncols(), |i, j| {
        blocks.b12[(i, j)] / (s1[i] * s2[j])
    });
    let left = l11
        .solve_lower_triangular(&b12)
        .ok_or(Error::SingularBlock {
            block: "b11",
            condition: f64::INFINITY,
        })?;
    // M' = L22^-1 left'
    let mt = l22
        .solve_lower_triangular(&left.transpose())
        .ok_or(Error::SingularBlock {
            block: "b22",
            condition: f64::INFINITY,
        })?;
    let prod = mt.transpose() * &mt;
    let sym = (&prod + prod.transpose()) * 0.5;
    let mut raw: Vec<f64> = SymmetricEigen::new(sym).eigenvalues.iter().copied().collect();
    raw.sort_by(|a, b| b.total_cmp(a));
    clamp(raw)
}

fn clamp(raw: Vec<f64>) -> Result<CanCorSq> {
    let mut clamped_count = 0;
    let mut values = Vec::with_capacity(raw.len());
    for v in raw {
        if !v.is_finite() || !(-CLAMP_TOL..=1.0 + CLAMP_TOL).contains(&v) {
            return Err(Error::EigenvalueOutOfRange { value: v });
        }
        if !(0.0..=1.0).contains(&v) {
            clamped_count += 1;
        }
        values.push(v.clamp(0.0, 1.0));
    }
    Ok(CanCorSq {
        values,
        clamped_count,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Functional {
    /// Hotelling-Lawley trace.
    HL,
    /// Wilks' lambda.
    W,
    /// Pillai-Bartlett trace.
    PB,
    /// Largest squared canonical correlation.
    MAX,
    /// Smallest squared canonical correlation.
    MIN,
}

impl Functional {
    pub const ALL: [Functional; 5] = [
        Functional::HL,
        Functional::W,
        Functional::PB,
        Functional::MAX,
        Functional::MIN,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Functional::HL => "hl",
            Functional::W => "w",
            Functional::PB => "pb",
            Functional::MAX => "max",
            Functional::MIN => "min",
        }
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Functional {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Functional::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "expected one of hl, w, pb, max, min".into(),
            })
    }
}

/// The five functionals of a set of squared canonical correlations.
/// `pb` is `None` when some correlation is 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Functionals {
    pub hl: f64,
    pub w: f64,
    pub pb: Option<f64>,
    pub max: f64,
    pub min: f64,
}

impl Functionals {
    pub fn get(&self, f: Functional) -> Result<f64> {
        match f {
            Functional::HL => Ok(self.hl),
            Functional::W => Ok(self.w),
            Functional::PB => self.pb.ok_or(Error::UnitCorrelation),
            Functional::MAX => Ok(self.max),
            Functional::MIN => Ok(self.min),
        }
    }
}

pub fn functionals(c: &CanCorSq) -> Functionals {
    let v = &c.values;
    let pb = if v.iter().any(|&x| x >= 1.0 - UNIT_TOL) {
        None
    } else {
        Some(v.iter().map(|&x| x / (1.0 - x)).sum())
    };
    Functionals {
        hl: v.iter().sum(),
        w: v.iter().map(|&x| 1.0 - x).product(),
        pb,
        max: v.iter().copied().fold(f64::NEG_INFINITY, f64::max).max(0.0),
        min: v.iter().copied().fold(f64::INFINITY, f64::min).min(1.0),
    }
}
