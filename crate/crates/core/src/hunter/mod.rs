//! Complete candidate generation for primitive number fields of bounded
//! discriminant.
//!
//! Every degree-n field with |d_K| <= X contains an integral generator whose
//! trace t lies in [0, n/2] and whose T2 norm (sum of squared embedding
//! absolute values) is at most t^2/n + gamma_{n-1} * (X/n)^{1/(n-1)}, where
//! gamma_m is the Hermite constant. This module turns that bound into
//! finite per-coefficient search boxes, walks them in a fixed odometer
//! order with staged pruning, filters by real-root signature, and supports
//! sharding and checkpointed resumption so long jobs survive interruption.

mod bounds;
mod enumerate;
mod signature;

pub use bounds::{coefficient_bounds, hermite_upper, t2_bound, HunterBox};
pub use enumerate::{
    enumerate_candidates, prefix_blocks, shard, CandidateSink, Checkpoint, CheckpointError,
    CollectSink, EnumerationSummary, EnumerationTask, Prefix,
};
pub use signature::SignatureSet;

use core::fmt;

/// Errors from box construction and task setup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HunterError {
    /// Requested degree outside the supported range 2..=11.
    UnsupportedDegree { degree: u32 },
}

impl fmt::Display for HunterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HunterError::UnsupportedDegree { degree } => {
                write!(f, "degree {} outside the supported range 2..=11", degree)
            }
        }
    }
}
