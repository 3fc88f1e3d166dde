//! Canonical-correlation tests of multivariate normality.
//!
//! The sample mean is uncorrelated with the sample covariances and with the
//! third-order sample moments whenever the data are normal. The squared
//! canonical correlations between the mean and either set of moments,
//! estimated from the sample, summarize departures from normality. This
//! crate computes those statistics together with Mardia's skewness and
//! kurtosis, calibrates them by simulation under the null, and estimates
//! power against a catalogue of non-normal alternatives.

pub mod alternatives;
pub mod cancor;
pub mod covblocks;
pub mod error;
pub mod matalg;
pub mod moments;
pub mod montecarlo;
pub mod rng;
pub mod stats;
pub mod store;

pub use error::{Error, Result};
