//! The distributions of the power study: the normal null, alternatives built
//! from dependent marginals, and purely multivariate alternatives. Each has
//! a generator and, where they exist, exact population moments.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use nalgebra::linalg::Cholesky;
use rand::Rng;
use rand_distr::{Distribution, Exp1, Gamma, StandardNormal};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matalg::Matrix;
use crate::moments::{MomentTable, Sample};
use crate::rng::RngStream;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Alternative {
    /// Standard multivariate normal.
    Normal,
    /// Independent Exp(1) marginals.
    IndepExp,
    /// `Y_i = X_0 X_i` with i.i.d. lognormal factors, so that each `Y_i` is
    /// LogN(0, s2).
    LogNormal { s2: f64 },
    /// `Y_i = X_i - X_0` with i.i.d. Exp(1) factors.
    LaplaceI,
    /// `Y_i = X_0 A_i + B_i C_i` with i.i.d. N(0,1) factors.
    LaplaceII,
    /// `Y_i = X_i / (X_i + X_0)`, `X_i ~ Gamma(a, 1)`, `X_0 ~ Gamma(b, 1)`.
    Beta { a: f64, b: f64 },
    /// `Y_i = X_0 + X_i` with i.i.d. chi-square(df/2) factors.
    ChiSquare { df: f64 },
    /// Multivariate t with identity scale.
    T { df: f64 },
    /// Asymmetric Laplace `W m 1 + sqrt(W) S_r^(1/2) Z` with `W ~ Exp(1)`.
    AsymLaplace { m: f64, r: f64 },
    /// `(1 - w) N(0, I) + w N(m 1, S_r)`.
    Mixture { w: f64, m: f64, r: f64 },
}

/// A named row of the alternative catalogue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatalogueEntry {
    pub name: &'static str,
    pub alternative: Alternative,
}

/// An alternative in a given dimension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlternativeSpec {
    pub alternative: Alternative,
    pub p: usize,
}

impl AlternativeSpec {
    pub fn new(alternative: Alternative, p: usize) -> Self {
        Self { alternative, p }
    }
}

const NAMES: &str = "normal, indep_exp, lognormal:s2=<v>, laplace1, laplace2, beta:a=<v>,b=<v>, \
                     chi2:df=<v>, t:df=<v> (or t2), al:m=<v>,r=<v>, mix:w=<v>,m=<v>,r=<v>";

impl Alternative {
    /// Every alternative of the power study in table order, starting with
    /// the null, with the names under which the rows are usually printed.
    ///
    /// The lognormal rows are named after the parameter of their factors;
    /// a row printed as `LogN(0,L)` has coordinates with log-variance `L^4 / 8`.
    pub fn catalogue() -> Vec<CatalogueEntry> {
        use Alternative::*;
        let rows = [
            ("Normal", Normal),
            ("Indep. Exp(1)", IndepExp),
            ("LogN(0,2)", LogNormal { s2: 2.0 }),
            ("LogN(0,1)", LogNormal { s2: 0.125 }),
            ("LogN(0,0.5)", LogNormal { s2: 0.0078125 }),
            ("Laplace(0,1) type I", LaplaceI),
            ("Laplace(0,1) type II", LaplaceII),
            ("Beta(1,1)", Beta { a: 1.0, b: 1.0 }),
            ("Beta(1,2)", Beta { a: 1.0, b: 2.0 }),
            ("Beta(2,2)", Beta { a: 2.0, b: 2.0 }),
            ("Chi2(2)", ChiSquare { df: 2.0 }),
            ("Chi2(8)", ChiSquare { df: 8.0 }),
            ("t(2)", T { df: 2.0 }),
            ("AL(0,S0)", AsymLaplace { m: 0.0, r: 0.0 }),
            ("AL(1,S0)", AsymLaplace { m: 1.0, r: 0.0 }),
            ("AL(3,S0)", AsymLaplace { m: 3.0, r: 0.0 }),
            ("AL(1,S0.5)", AsymLaplace { m: 1.0, r: 0.5 }),
            ("AL(1,S0.9)", AsymLaplace { m: 1.0, r: 0.9 }),
            ("0.9N(0,S0)+0.1N(1,S0)", Mixture { w: 0.1, m: 1.0, r: 0.0 }),
            ("0.9N(0,S0)+0.1N(2,S0)", Mixture { w: 0.1, m: 2.0, r: 0.0 }),
            ("0.9N(0,S0)+0.1N(0,S0.5)", Mixture { w: 0.1, m: 0.0, r: 0.5 }),
            ("0.9N(0,S0)+0.1N(1,S0.5)", Mixture { w: 0.1, m: 1.0, r: 0.5 }),
            ("0.9N(0,S0)+0.1N(2,S0.5)", Mixture { w: 0.1, m: 2.0, r: 0.5 }),
            ("0.75N(0,S0)+0.25N(1,S0)", Mixture { w: 0.25, m: 1.0, r: 0.0 }),
            ("0.75N(0,S0)+0.25N(2,S0)", Mixture { w: 0.25, m: 2.0, r: 0.0 }),
            ("0.75N(0,S0)+0.25N(0,S0.5)", Mixture { w: 0.25, m: 0.0, r: 0.5 }),
            ("0.75N(0,S0)+0.25N(1,S0.5)", Mixture { w: 0.25, m: 1.0, r: 0.5 }),
            ("0.75N(0,S0)+0.25N(2,S0.5)", Mixture { w: 0.25, m: 2.0, r: 0.5 }),
        ];
        rows.into_iter()
            .map(|(name, alternative)| CatalogueEntry { name, alternative })
            .collect()
    }

    /// Human-readable name used in reports.
    pub fn label(&self) -> String {
        match *self {
            Alternative::Normal => "Normal".into(),
            Alternative::IndepExp => "Indep. Exp(1)".into(),
            Alternative::LogNormal { s2 } => format!("LogN(0,{s2})"),
            Alternative::LaplaceI => "Laplace(0,1) type I".into(),
            Alternative::LaplaceII => "Laplace(0,1) type II".into(),
            Alternative::Beta { a, b } => format!("Beta({a},{b})"),
            Alternative::ChiSquare { df } => format!("Chi2({df})"),
            Alternative::T { df } => format!("t({df})"),
            Alternative::AsymLaplace { m, r } => format!("AL({m},S{r})"),
            Alternative::Mixture { w, m, r } => {
                format!("{}N(0,S0)+{}N({m},S{r})", 1.0 - w, w)
            }
        }
    }

    fn validate(&self, p: usize) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidInput(format!("{self}: {what}")));
        match *self {
            Alternative::LogNormal { s2 } if !(s2 > 0.0 && s2.is_finite()) => bad("s2 must be positive"),
            Alternative::Beta { a, b } if !(a > 0.0 && b > 0.0) => bad("a and b must be positive"),
            Alternative::ChiSquare { df } | Alternative::T { df } if !(df > 0.0 && df.is_finite()) => {
                bad("df must be positive")
            }
            Alternative::Mixture { w, .. } if !(0.0..=1.0).contains(&w) => bad("w must lie in [0, 1]"),
            Alternative::AsymLaplace { m, r } | Alternative::Mixture { m, r, .. } => {
                if !m.is_finite() {
                    return bad("m must be finite");
                }
                equicorrelation_factor(p, r).map(|_| ())
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Alternative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Alternative::Normal => write!(f, "normal"),
            Alternative::IndepExp => write!(f, "indep_exp"),
            Alternative::LogNormal { s2 } => write!(f, "lognormal:s2={s2}"),
            Alternative::LaplaceI => write!(f, "laplace1"),
            Alternative::LaplaceII => write!(f, "laplace2"),
            Alternative::Beta { a, b } => write!(f, "beta:a={a},b={b}"),
            Alternative::ChiSquare { df } => write!(f, "chi2:df={df}"),
            Alternative::T { df } => write!(f, "t:df={df}"),
            Alternative::AsymLaplace { m, r } => write!(f, "al:m={m},r={r}"),
            Alternative::Mixture { w, m, r } => write!(f, "mix:w={w},m={m},r={r}"),
        }
    }
}

impl FromStr for Alternative {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| Error::Parse {
            input: s.to_string(),
            reason,
        };
        let s_trim = s.trim().to_ascii_lowercase();
        let (name, args) = s_trim.split_once(':').unwrap_or((&s_trim, ""));
        let mut params: HashMap<&str, f64> = HashMap::new();
        for kv in args.split(',').filter(|kv| !kv.trim().is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| err(format!("parameter '{kv}' is not key=value")))?;
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|_| err(format!("parameter '{kv}' is not a number")))?;
            params.insert(k.trim(), v);
        }
        let mut take = |key: &str| {
            params
                .remove(key)
                .ok_or_else(|| err(format!("missing parameter '{key}'")))
        };
        let alt = match name {
            "normal" => Alternative::Normal,
            "indep_exp" => Alternative::IndepExp,
            "lognormal" => Alternative::LogNormal { s2: take("s2")? },
            "laplace1" => Alternative::LaplaceI,
            "laplace2" => Alternative::LaplaceII,
            "beta" => Alternative::Beta {
                a: take("a")?,
                b: take("b")?,
            },
            "chi2" => Alternative::ChiSquare { df: take("df")? },
            "t" => Alternative::T { df: take("df")? },
            "t2" => Alternative::T { df: 2.0 },
            "al" => Alternative::AsymLaplace {
                m: take("m")?,
                r: take("r")?,
            },
            "mix" => Alternative::Mixture {
                w: take("w")?,
                m: take("m")?,
                r: take("r")?,
            },
            _ => return Err(err(format!("unknown alternative; valid names: {NAMES}"))),
        };
        if let Some(k) = params.keys().next() {
            return Err(err(format!("unexpected parameter '{k}'")));
        }
        Ok(alt)
    }
}

impl Serialize for Alternative {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Alternative {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Lower Cholesky factor of the `p x p` matrix with unit diagonal and all
/// correlations `r`.
pub fn equicorrelation_factor(p: usize, r: f64) -> Result<Matrix> {
    let sigma = Matrix::from_fn(p, p, |i, j| if i == j { 1.0 } else { r });
    if !(r < 1.0 && 1.0 + (p as f64 - 1.0) * r > 0.0) {
        return Err(Error::NotPositiveDefinite { r, p });
    }
    Cholesky::new(sigma)
        .map(|c| c.l())
        .ok_or(Error::NotPositiveDefinite { r, p })
}

fn normal_vec<R: Rng>(rng: &mut R, p: usize) -> Vec<f64> {
    (0..p).map(|_| rng.sample(StandardNormal)).collect()
}

fn times_lower(l: &Matrix, z: &[f64]) -> Vec<f64> {
    (0..z.len())
        .map(|i| (0..=i).map(|j| l[(i, j)] * z[j]).sum())
        .collect()
}

fn gamma(shape: f64, scale: f64) -> Result<Gamma<f64>> {
    Gamma::new(shape, scale).map_err(|e| Error::InvalidInput(format!("gamma({shape}, {scale}): {e}")))
}

/// Draws `n` independent observations.
pub fn generate(spec: &AlternativeSpec, n: usize, stream: RngStream) -> Result<Sample> {
    let p = spec.p;
    if p == 0 {
        return Err(Error::InvalidInput("dimension p must be at least 1".into()));
    }
    spec.alternative.validate(p)?;
    let mut rng = stream.rng();
    let mut data = Matrix::zeros(n, p);
    match spec.alternative {
        Alternative::Normal => fill(&mut data, |_| normal_vec(&mut rng, p)),
        Alternative::IndepExp => fill(&mut data, |_| (0..p).map(|_| rng.sample(Exp1)).collect()),
        Alternative::LogNormal { s2 } => {
            let sd = (s2 / 2.0).sqrt();
            fill(&mut data, |_| {
                let x0 = (sd * rng.sample::<f64, _>(StandardNormal)).exp();
                (0..p)
                    .map(|_| x0 * (sd * rng.sample::<f64, _>(StandardNormal)).exp())
                    .collect()
            })
        }
        Alternative::LaplaceI => fill(&mut data, |_| {
            let x0: f64 = rng.sample(Exp1);
            (0..p).map(|_| rng.sample::<f64, _>(Exp1) - x0).collect()
        }),
        Alternative::LaplaceII => fill(&mut data, |_| {
            let x0: f64 = rng.sample(StandardNormal);
            (0..p)
                .map(|_| {
                    let [a, b, c]: [f64; 3] = std::array::from_fn(|_| rng.sample(StandardNormal));
                    x0 * a + b * c
                })
                .collect()
        }),
        Alternative::Beta { a, b } => {
            let (ga, gb) = (gamma(a, 1.0)?, gamma(b, 1.0)?);
            fill(&mut data, |_| {
                let x0 = gb.sample(&mut rng);
                (0..p)
                    .map(|_| {
                        let x = ga.sample(&mut rng);
                        x / (x + x0)
                    })
                    .collect()
            })
        }
        Alternative::ChiSquare { df } => {
            let g = gamma(df / 4.0, 2.0)?;
            fill(&mut data, |_| {
                let x0 = g.sample(&mut rng);
                (0..p).map(|_| x0 + g.sample(&mut rng)).collect()
            })
        }
        Alternative::T { df } => {
            let g = gamma(df / 2.0, 2.0)?;
            fill(&mut data, |_| {
                let z = normal_vec(&mut rng, p);
                let scale = (g.sample(&mut rng) / df).sqrt();
                z.into_iter().map(|v| v / scale).collect()
            })
        }
        Alternative::AsymLaplace { m, r } => {
            let l = equicorrelation_factor(p, r)?;
            fill(&mut data, |_| {
                let w: f64 = rng.sample(Exp1);
                let z = times_lower(&l, &normal_vec(&mut rng, p));
                z.into_iter().map(|v| w * m + w.sqrt() * v).collect()
            })
        }
        Alternative::Mixture { w, m, r } => {
            let l = equicorrelation_factor(p, r)?;
            fill(&mut data, |_| {
                let polluted = rng.random::<f64>() < w;
                let z = normal_vec(&mut rng, p);
                if polluted {
                    times_lower(&l, &z).into_iter().map(|v| m + v).collect()
                } else {
                    z
                }
            })
        }
    }
    Sample::new(data)
}

fn fill(data: &mut Matrix, mut row: impl FnMut(usize) -> Vec<f64>) {
    for i in 0..data.nrows() {
        for (j, v) in row(i).into_iter().enumerate() {
            data[(i, j)] = v;
        }
    }
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|x| x as f64).product()
}

fn double_factorial_odd(k: usize) -> f64 {
    // (k-1)!! for even k, 0 for odd k
    if k % 2 == 1 {
        return 0.0;
    }
    (1..k).step_by(2).map(|x| x as f64).product()
}

fn binomial(n: usize, k: usize) -> f64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Gaussian moment `E[Z_{i1} .. Z_{ik}]` for covariance `cov`.
fn isserlis(cov: &Matrix, idx: &[usize]) -> f64 {
    if idx.is_empty() {
        return 1.0;
    }
    if idx.len() % 2 == 1 {
        return 0.0;
    }
    let mut total = 0.0;
    let mut rest = Vec::with_capacity(idx.len() - 2);
    for k in 1..idx.len() {
        let c = cov[(idx[0], idx[k])];
        if c == 0.0 {
            continue;
        }
        rest.clear();
        rest.extend(idx[1..].iter().enumerate().filter(|(j, _)| j + 1 != k).map(|(_, &v)| v));
        total += c * isserlis(cov, &rest);
    }
    total
}

/// Exponent of each coordinate in a multi-index.
fn counts(p: usize, idx: &[usize]) -> Vec<usize> {
    let mut c = vec![0; p];
    for &i in idx {
        c[i] += 1;
    }
    c
}

/// `E[prod_i (F_i + s G)^(c_i)]` for independent `F_i` and a shared `G`,
/// given the raw moments of each.
fn shared_factor_moment(c: &[usize], f_mom: impl Fn(usize) -> f64, g_mom: impl Fn(usize) -> f64, s: f64) -> f64 {
    fn rec(c: &[usize], k: usize, g_power: usize, coef: f64, f_mom: &dyn Fn(usize) -> f64, g_mom: &dyn Fn(usize) -> f64, s: f64) -> f64 {
        if k == c.len() {
            return coef * g_mom(g_power) * s.powi(g_power as i32);
        }
        (0..=c[k])
            .map(|j| {
                let term = binomial(c[k], j) * f_mom(c[k] - j);
                rec(c, k + 1, g_power + j, coef * term, f_mom, g_mom, s)
            })
            .sum()
    }
    rec(c, 0, 0, 1.0, &f_mom, &g_mom, s)
}

fn gamma_raw(shape: f64, rate: f64, k: usize) -> f64 {
    (0..k).map(|j| (shape + j as f64) / rate).product()
}

/// `integral_0^inf f(x) dx` through `x = t / (1 - t)`.
fn integrate_half_line(f: impl Fn(f64) -> f64, tol: f64) -> f64 {
    quadrature::integrate(
        |t: f64| {
            if t >= 1.0 {
                return 0.0;
            }
            let x = t / (1.0 - t);
            let v = f(x) / ((1.0 - t) * (1.0 - t));
            if v.is_finite() { v } else { 0.0 }
        },
        0.0,
        1.0,
        tol,
    )
    .integral
}

fn gamma_density(shape: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    ((shape - 1.0) * x.ln() - x - libm::lgamma(shape)).exp()
}

/// `E[prod_i (X_i / (X_i + X_0))^(c_i)]` by nested quadrature.
fn beta_ratio_moment(a: f64, b: f64, c: &[usize]) -> f64 {
    let c: Vec<usize> = c.iter().copied().filter(|&k| k > 0).collect();
    if c.is_empty() {
        return 1.0;
    }
    let inner = |k: usize, x0: f64| {
        integrate_half_line(|x| (x / (x + x0)).powi(k as i32) * gamma_density(a, x), 1e-14)
    };
    integrate_half_line(
        |x0| {
            let mut prod = gamma_density(b, x0);
            if prod == 0.0 {
                return 0.0;
            }
            for &k in &c {
                prod *= inner(k, x0);
            }
            prod
        },
        1e-13,
    )
}

/// Raw moment `E[Y_{i1} .. Y_{ik}]`.
fn raw_moment(alt: &Alternative, p: usize, idx: &[usize], cache: &mut HashMap<Vec<usize>, f64>) -> f64 {
    let c = counts(p, idx);
    let k = idx.len();
    match *alt {
        Alternative::Normal => c.iter().map(|&ci| double_factorial_odd(ci)).product(),
        Alternative::IndepExp => c.iter().map(|&ci| factorial(ci)).product(),
        Alternative::LogNormal { s2 } => {
            let v = s2 / 2.0;
            let lognormal = |j: usize| (j as f64 * j as f64 * v / 2.0).exp();
            lognormal(k) * c.iter().map(|&ci| lognormal(ci)).product::<f64>()
        }
        Alternative::LaplaceI => shared_factor_moment(&c, factorial, factorial, -1.0),
        Alternative::ChiSquare { df } => {
            let g = |j| gamma_raw(df / 4.0, 0.5, j);
            shared_factor_moment(&c, g, g, 1.0)
        }
        Alternative::LaplaceII => {
            // Y_i = X_0 A_i + (B_i C_i)
            let bc = |j: usize| double_factorial_odd(j).powi(2);
            let mut total = 0.0;
            let mut stack = vec![(0usize, 0usize, 1.0f64)];
            while let Some((pos, x0_power, coef)) = stack.pop() {
                if pos == p {
                    total += coef * double_factorial_odd(x0_power);
                    continue;
                }
                for j in 0..=c[pos] {
                    let term = binomial(c[pos], j) * double_factorial_odd(j) * bc(c[pos] - j);
                    if term != 0.0 {
                        stack.push((pos + 1, x0_power + j, coef * term));
                    }
                }
            }
            total
        }
        Alternative::Beta { a, b } => {
            let mut key: Vec<usize> = c.iter().copied().filter(|&x| x > 0).collect();
            key.sort_unstable();
            *cache.entry(key.clone()).or_insert_with(|| beta_ratio_moment(a, b, &key))
        }
        Alternative::T { .. } => unreachable!("moments checked before evaluation"),
        Alternative::AsymLaplace { m, r } => {
            let l = equicorrelation_factor(p, r).expect("validated");
            let cov = &l * l.transpose();
            subsets(k)
                .map(|mask| {
                    let shifted = mask.count_ones() as usize;
                    let rest: Vec<usize> = (0..k).filter(|b| mask & (1 << b) == 0).map(|b| idx[b]).collect();
                    if rest.len() % 2 == 1 {
                        return 0.0;
                    }
                    factorial(shifted + rest.len() / 2) * m.powi(shifted as i32) * isserlis(&cov, &rest)
                })
                .sum()
        }
        Alternative::Mixture { w, m, r } => {
            let l = equicorrelation_factor(p, r).expect("validated");
            let cov = &l * l.transpose();
            let shifted: f64 = subsets(k)
                .map(|mask| {
                    let rest: Vec<usize> = (0..k).filter(|b| mask & (1 << b) == 0).map(|b| idx[b]).collect();
                    m.powi(mask.count_ones() as i32) * isserlis(&cov, &rest)
                })
                .sum();
            let base: f64 = c.iter().map(|&ci| double_factorial_odd(ci)).product();
            (1.0 - w) * base + w * shifted
        }
    }
}

fn subsets(k: usize) -> impl Iterator<Item = u32> {
    0..(1u32 << k)
}

/// Exact population central moments up to `max_order`.
pub fn population_moments(spec: &AlternativeSpec, max_order: usize) -> Result<MomentTable> {
    let p = spec.p;
    spec.alternative.validate(p)?;
    if let Alternative::T { df } = spec.alternative {
        let first_missing = df.ceil().max(1.0) as usize;
        if max_order >= first_missing {
            return Err(Error::InfiniteMoments {
                alternative: spec.alternative.to_string(),
                order: first_missing,
            });
        }
        // only the normal-like low orders remain: mean 0 and, for df > 2,
        // covariance df / (df - 2)
        return MomentTable::from_fn(p, max_order, |idx| match idx.len() {
            0 => 1.0,
            2 if idx[0] == idx[1] => df / (df - 2.0),
            _ => 0.0,
        });
    }
    let mut cache = HashMap::new();
    let raw = MomentTable::from_fn(p, max_order, |idx| raw_moment(&spec.alternative, p, idx, &mut cache))?;
    let mean: Vec<f64> = (0..p).map(|i| if max_order >= 1 { raw.get(&[i]) } else { 0.0 }).collect();
    MomentTable::from_fn(p, max_order, |idx| {
        let k = idx.len();
        let mut sub = Vec::with_capacity(k);
        subsets(k)
            .map(|mask| {
                sub.clear();
                let mut coef = 1.0;
                for (b, &i) in idx.iter().enumerate() {
                    if mask & (1 << b) != 0 {
                        sub.push(i);
                    } else {
                        coef *= -mean[i];
                    }
                }
                coef * raw.get(&sub)
            })
            .sum()
    })
}
