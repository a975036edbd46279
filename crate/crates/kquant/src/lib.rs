//! k-quantile non-uniform quantization toolkit.
//!
//! Trains small convolutional networks with Gaussian k-quantile quantizers,
//! executes them with integer-only arithmetic that is bit-exact with a
//! threshold/comparator-chain hardware datapath, and exports per-layer
//! integer threshold tables for reconfigurable hardware.

pub mod error;
pub mod gauss;

pub use error::{Error, Result};
