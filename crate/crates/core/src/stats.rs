//! Test statistics: the canonical-correlation families built on the second-
//! and third-order sample moments, Mardia's skewness and kurtosis, and the
//! univariate closed forms.

use std::fmt;
use std::str::FromStr;

use nalgebra::linalg::Cholesky;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cancor::{cancor_sq, functionals, Functional, Functionals};
use crate::covblocks::{lambda_blocks, lambda_blocks_limit, psi_blocks, psi_blocks_limit, lambda_min_n, psi_min_n};
use crate::error::{Error, Result};
use crate::matalg::Matrix;
use crate::moments::{central_moments, sample_cov, sample_mean, sorted_indices, MomentTable, Sample};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Mean against the sample covariances.
    Z2,
    /// Mean against the third-order sample moments.
    Z3,
    MardiaSkew,
    MardiaKurt,
}

/// Which end of the null distribution counts as evidence against normality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tail {
    Upper,
    Lower,
    TwoSided,
}

impl fmt::Display for Tail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tail::Upper => "upper",
            Tail::Lower => "lower",
            Tail::TwoSided => "two_sided",
        })
    }
}

impl FromStr for Tail {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "upper" => Ok(Tail::Upper),
            "lower" => Ok(Tail::Lower),
            "two_sided" | "two-sided" => Ok(Tail::TwoSided),
            _ => Err(Error::Parse {
                input: s.into(),
                reason: "expected upper, lower or two_sided".into(),
            }),
        }
    }
}

/// One of the twelve statistics. The rejection tail is derived from the
/// statistic; see [`StatisticId::tail`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StatisticId {
    pub family: Family,
    pub functional: Option<Functional>,
}

impl StatisticId {
    pub const B1P: StatisticId = StatisticId {
        family: Family::MardiaSkew,
        functional: None,
    };
    pub const B2P: StatisticId = StatisticId {
        family: Family::MardiaKurt,
        functional: None,
    };

    pub fn z2(f: Functional) -> Self {
        Self {
            family: Family::Z2,
            functional: Some(f),
        }
    }

    pub fn z3(f: Functional) -> Self {
        Self {
            family: Family::Z3,
            functional: Some(f),
        }
    }

    /// All twelve statistics: the five Z2 and five Z3 functionals, then b1p and b2p.
    pub fn all() -> Vec<StatisticId> {
        let mut out: Vec<StatisticId> = Functional::ALL.into_iter().map(Self::z2).collect();
        out.extend(Functional::ALL.into_iter().map(Self::z3));
        out.push(Self::B1P);
        out.push(Self::B2P);
        out
    }

    /// Default rejection region: small values of Wilks' product reject,
    /// everything else (kurtosis included) rejects when large.
    pub fn tail(&self) -> Tail {
        match self.functional {
            Some(Functional::W) => Tail::Lower,
            _ => Tail::Upper,
        }
    }

    /// Smallest sample size for which the statistic is defined.
    pub fn min_n(&self, p: usize) -> usize {
        match self.family {
            Family::Z2 => lambda_min_n(p),
            Family::Z3 => psi_min_n(p),
            Family::MardiaSkew | Family::MardiaKurt => p + 1,
        }
    }

    /// Highest central moment order needed to evaluate the statistic.
    pub fn moment_order(&self) -> usize {
        match self.family {
            Family::Z2 | Family::MardiaKurt => 4,
            Family::Z3 => 6,
            Family::MardiaSkew => 3,
        }
    }
}

impl fmt::Display for StatisticId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.family, self.functional) {
            (Family::Z2, Some(x)) => write!(f, "z2_{x}"),
            (Family::Z3, Some(x)) => write!(f, "z3_{x}"),
            (Family::MardiaSkew, _) => f.write_str("b1p"),
            (Family::MardiaKurt, _) => f.write_str("b2p"),
            (family, None) => write!(f, "{family:?}"),
        }
    }
}

impl FromStr for StatisticId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let bad = || Error::Parse {
            input: s.into(),
            reason: "expected z2_<hl|w|pb|max|min>, z3_<hl|w|pb|max|min>, b1p or b2p".into(),
        };
        match lower.as_str() {
            "b1p" => Ok(Self::B1P),
            "b2p" => Ok(Self::B2P),
            _ => {
                let (family, rest) = lower.split_once('_').ok_or_else(bad)?;
                let f: Functional = rest.parse().map_err(|_| bad())?;
                match family {
                    "z2" => Ok(Self::z2(f)),
                    "z3" => Ok(Self::z3(f)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

impl Serialize for StatisticId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for StatisticId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Outcome of testing one sample with one statistic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestResult {
    pub statistic: StatisticId,
    pub tail: Tail,
    pub value: f64,
    pub p_value: f64,
    pub reject: bool,
}

/// Central moments of the sample after centring and whitening by the
/// `(n-1)`-divisor sample covariance. All the statistics are affine
/// invariant, so they can be computed from these moments.
pub fn standardized_moments(x: &Sample, max_order: usize) -> Result<MomentTable> {
    let x = &x.canonical_order();
    let (n, p) = (x.n(), x.p());
    let s = sample_cov(x)?;
    let chol = Cholesky::new(s.clone()).ok_or(Error::DegenerateSample)?;
    let l = chol.l();
    // a rank-deficient covariance can still pass Cholesky with a tiny pivot
    for i in 0..p {
        if !(l[(i, i)] > 1e-7 * s[(i, i)].sqrt()) {
            return Err(Error::DegenerateSample);
        }
    }
    let mean = sample_mean(x);
    let centred = Matrix::from_fn(p, n, |j, i| x.data()[(i, j)] - mean[j]);
    let white = l.solve_lower_triangular(&centred).ok_or(Error::DegenerateSample)?;
    central_moments(&Sample::new(white.transpose())?, max_order)
}

fn check_n(stat: &str, n: usize, required: usize) -> Result<()> {
    if n < required {
        return Err(Error::SampleTooSmall {
            n,
            required,
            what: if stat == "z2" { "the second-order statistics" } else { "the third-order statistics" },
        });
    }
    Ok(())
}

fn z2_from_moments(m: &MomentTable, n: usize) -> Result<Functionals> {
    Ok(functionals(&cancor_sq(&lambda_blocks(m, n)?)?))
}

fn z3_from_moments(m: &MomentTable, n: usize) -> Result<Functionals> {
    Ok(functionals(&cancor_sq(&psi_blocks(m, n)?)?))
}

/// Skewness from third moments of whitened data.
fn b1p_from_moments(m: &MomentTable) -> f64 {
    let p = m.p();
    sorted_indices(p, 3)
        .iter()
        .map(|idx| {
            // number of distinct orderings of the multi-index
            let w = match (idx[0] == idx[1], idx[1] == idx[2]) {
                (true, true) => 1.0,
                (false, false) => 6.0,
                _ => 3.0,
            };
            let v = m.get(idx);
            w * v * v
        })
        .sum()
}

/// Kurtosis from fourth moments of whitened data.
fn b2p_from_moments(m: &MomentTable) -> f64 {
    let p = m.p();
    let mut total = 0.0;
    for a in 0..p {
        total += m.get(&[a, a, a, a]);
        for b in (a + 1)..p {
            total += 2.0 * m.get(&[a, a, b, b]);
        }
    }
    total
}

/// The five functionals of the squared canonical correlations between the
/// sample mean and the sample covariances.
pub fn z2_statistics(x: &Sample) -> Result<Functionals> {
    check_n("z2", x.n(), lambda_min_n(x.p()))?;
    z2_from_moments(&standardized_moments(x, 4)?, x.n())
}

/// The five functionals of the squared canonical correlations between the
/// sample mean and the third-order sample moments.
pub fn z3_statistics(x: &Sample) -> Result<Functionals> {
    check_n("z3", x.n(), psi_min_n(x.p()))?;
    z3_from_moments(&standardized_moments(x, 6)?, x.n())
}

/// Mardia's multivariate skewness `n^-2 sum_ij ((x_i - mean)' S^-1 (x_j - mean))^3`.
pub fn mardia_b1p(x: &Sample) -> Result<f64> {
    Ok(b1p_from_moments(&standardized_moments(x, 3)?))
}

/// Mardia's multivariate kurtosis `n^-1 sum_i ((x_i - mean)' S^-1 (x_i - mean))^2`.
pub fn mardia_b2p(x: &Sample) -> Result<f64> {
    Ok(b2p_from_moments(&standardized_moments(x, 4)?))
}

struct Univariate {
    n: f64,
    gamma: f64,
    kappa: f64,
    m: [f64; 7],
}

fn univariate(x: &Sample, need: usize) -> Result<Univariate> {
    if x.p() != 1 {
        return Err(Error::InvalidInput(format!("univariate sample required, got p = {}", x.p())));
    }
    if x.n() < need {
        return Err(Error::SampleTooSmall {
            n: x.n(),
            required: need,
            what: "the univariate statistic",
        });
    }
    let x = x.canonical_order();
    let col = x.data().column(0);
    let n = x.n() as f64;
    let mean = col.mean();
    let mut m = [0.0; 7];
    for &v in col.iter() {
        let d = v - mean;
        let mut pw = 1.0;
        for slot in m.iter_mut() {
            *slot += pw;
            pw *= d;
        }
    }
    for slot in m.iter_mut() {
        *slot /= n;
    }
    if !(m[2] > 0.0) {
        return Err(Error::DegenerateSample);
    }
    Ok(Univariate {
        n,
        gamma: m[3] / m[2].powf(1.5),
        kappa: m[4] / (m[2] * m[2]) - 3.0,
        m,
    })
}

/// Sample correlation of the mean and the variance of a univariate sample.
pub fn z2_prime(x: &Sample) -> Result<f64> {
    let u = univariate(x, 4)?;
    Ok(u.gamma / (u.kappa + 3.0 - (u.n - 3.0) / (u.n - 1.0)).sqrt())
}

/// Sample correlation of the mean and the third-order sample moment of a
/// univariate sample.
pub fn z3_prime(x: &Sample) -> Result<f64> {
    let u = univariate(x, 6)?;
    let (n, g, k) = (u.n, u.gamma, u.kappa);
    let lambda = u.m[6] / u.m[2].powi(3) - 15.0 * k - 10.0 * g * g - 15.0;
    let denom = lambda + 9.0 * n / (n - 1.0) * (k + g * g) + 6.0 * n * n / ((n - 1.0) * (n - 2.0));
    Ok(k / denom.sqrt())
}

/// Values of a set of statistics on one sample, in the order requested.
/// Moments are computed once and shared.
pub fn evaluate(x: &Sample, stats: &[StatisticId]) -> Result<Vec<Result<f64>>> {
    let order = stats.iter().map(StatisticId::moment_order).max().unwrap_or(2);
    let m = standardized_moments(x, order)?;
    let n = x.n();
    let mut z2 = None;
    let mut z3 = None;
    Ok(stats
        .iter()
        .map(|s| match (s.family, s.functional) {
            (Family::Z2, Some(f)) => {
                check_n("z2", n, lambda_min_n(x.p()))?;
                let z = z2.get_or_insert_with(|| z2_from_moments(&m, n));
                z.as_ref().map_err(clone_error)?.get(f)
            }
            (Family::Z3, Some(f)) => {
                check_n("z3", n, psi_min_n(x.p()))?;
                let z = z3.get_or_insert_with(|| z3_from_moments(&m, n));
                z.as_ref().map_err(clone_error)?.get(f)
            }
            (Family::MardiaSkew, _) => Ok(b1p_from_moments(&m)),
            (Family::MardiaKurt, _) => Ok(b2p_from_moments(&m)),
            (_, None) => Err(Error::InvalidInput(format!("{s} has no functional"))),
        })
        .collect())
}

// The errors reachable from the statistic pipelines are all plain data.
fn clone_error(e: &Error) -> Error {
    match e {
        Error::SingularBlock { block, condition } => Error::SingularBlock {
            block,
            condition: *condition,
        },
        Error::EigenvalueOutOfRange { value } => Error::EigenvalueOutOfRange { value: *value },
        Error::SampleTooSmall { n, required, what } => Error::SampleTooSmall {
            n: *n,
            required: *required,
            what,
        },
        Error::UnitCorrelation => Error::UnitCorrelation,
        Error::DegenerateSample => Error::DegenerateSample,
        other => Error::InvalidInput(other.to_string()),
    }
}

/// Large-sample limit of a statistic, computed from population central moments.
///
/// The Mardia limits are the population skewness and kurtosis of the
/// standardized vector.
pub fn population_statistic(m: &MomentTable, stat: StatisticId) -> Result<f64> {
    let p = m.p();
    let sigma = Matrix::from_fn(p, p, |i, j| m.get(&[i, j]));
    let chol = Cholesky::new(sigma).ok_or(Error::DegenerateSample)?;
    let white = chol.l().try_inverse().ok_or(Error::DegenerateSample)?;
    match (stat.family, stat.functional) {
        (Family::Z2, Some(f)) => functionals(&cancor_sq(&lambda_blocks_limit(m)?)?).get(f),
        (Family::Z3, Some(f)) => functionals(&cancor_sq(&psi_blocks_limit(m)?)?).get(f),
        (Family::MardiaSkew, _) => {
            m.require_order(3)?;
            Ok(b1p_from_moments(&truncated(m, 3)?.transform(&white)?))
        }
        (Family::MardiaKurt, _) => {
            m.require_order(4)?;
            Ok(b2p_from_moments(&truncated(m, 4)?.transform(&white)?))
        }
        (_, None) => Err(Error::InvalidInput(format!("{stat} has no functional"))),
    }
}

fn truncated(m: &MomentTable, order: usize) -> Result<MomentTable> {
    MomentTable::from_fn(m.p(), order, |idx| m.get(idx))
}
