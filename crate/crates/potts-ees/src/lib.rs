//! Samplers and exact analysis tools for the mean-field q-color Potts model.
//!
//! The library has four layers:
//!
//! - [`model`]: configurations, the order parameter, energy, Gibbs log-weights
//!   and the free-energy landscape `f` on the probability simplex, including
//!   its critical structure (critical inverse temperature, local maxima).
//! - [`lumped`]: the exact chain induced on color-count classes. Energy and
//!   all acceptance ratios depend on a configuration only through its color
//!   counts, so the projected process is Markov and its transition matrices
//!   can be built exactly on an O(N^2) lattice instead of the 3^N spin space.
//! - [`sampler`]: trajectory simulation, including the multi-replica
//!   equi-energy sampler with per-temperature band records.
//! - [`spectral`]: conductance, spectral gaps, Cheeger-sandwich checks and
//!   exponential-rate fits.
//!
//! Data-parallel construction and experiment fan-out use rayon when the
//! `parallel` feature (default) is enabled; every entry point has a
//! sequential fallback that produces identical results.

pub mod error;
pub mod exec;
pub mod export;
pub mod lumped;
pub mod model;
pub mod sampler;
pub mod selftest;
pub mod spectral;

pub use error::{Error, Result};
