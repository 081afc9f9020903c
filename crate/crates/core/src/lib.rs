//! Fault-tolerant shortest paths around a fixed source/target pair.
//!
//! The crate computes exact distances `d_{G∖F}(s, t)` for failure sets `F`
//! of one, two or more edges in directed graphs with integer weights
//! (negative weights allowed, negative cycles rejected):
//!
//! * [`frp_weighted`] — the cubic two-fault replacement-paths algorithm and
//!   its recursive extension to `k` faults;
//! * [`frp_bounded`] — the interval-partition data structure for bounded
//!   weights, answering single `(e1, e2)` queries;
//! * [`backwards_f`] — the backwards-distance table `f(v, u)` by dynamic
//!   programming and by hop-bounded rounds;
//! * [`lowerbound_gadget`] — the triangle-detection reduction, used as a
//!   self-checking instance generator;
//! * [`oracle`] — brute-force references for everything above.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod backwards_f;
pub mod dso_one_fault;
mod error;
pub mod fixtures;
pub mod frp_bounded;
pub mod frp_weighted;
pub mod graph_core;
pub mod lowerbound_gadget;
pub mod oracle;
pub mod range_structures;
pub mod ssrp;

pub use error::{Error, Result};
pub use graph_core::{Dist, EdgeId, Graph, GraphView, PathSeq, VertexId};
