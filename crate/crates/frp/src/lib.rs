//! Command-line front end for `frp-core`: edge-list and JSON formats,
//! generator specs, oracle sweeps and timing benchmarks.

pub mod bench;
pub mod cli;
pub mod formats;
pub mod genspec;
pub mod pool;
pub mod verify;
