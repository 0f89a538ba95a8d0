//! Density constants and class-group statistics for number-field counts.
//!
//! This module computes the analytic reference quantities that the census
//! data is compared against: the mass-formula density constants expressed
//! as Euler products, the prime zeta function, automorphism-group orders of
//! finite abelian groups, the probability laws for relative class groups in
//! the quadratic (CM) setting and their two-adic refinement, and the
//! observed-versus-predicted distribution tables built from ingested class
//! group data.
//!
//! All series and products carry explicit truncation bounds; the fixed-point
//! layer in [`fixed`] keeps rounding error far below every tolerance used.

pub mod abelian;
pub mod bhargava;
pub mod cm;
pub mod fixed;
pub mod malle;
pub mod tables;
pub mod zeta;

pub use abelian::{abelian_types_of_order, aut_order_by_enumeration, AbelianGroupType};
pub use bhargava::{
    archimedean_mass, bhargava_constant, local_mass, local_mass_coefficients,
    partitions_at_most, BoundedReal, EulerMethod, EulerProductJob, SignatureSet,
};
pub use cm::{cm_constant, cm_mass_sum, cm_probability};
pub use fixed::{Fx, FRAC_BITS};
pub use malle::{
    malle_normalization, malle_probability, malle_two_constant,
    malle_two_part_probability,
};
pub use tables::{class_distribution, deviation_table, ProportionRow};
pub use zeta::{bernoulli_numbers, moebius, prime_zeta, zeta};

/// Errors from the statistical layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeuristicsError {
    /// The requested accuracy is beyond what the chosen method can certify.
    PrecisionUnreachable {
        requested_digits: u32,
        attainable_digits: u32,
    },
    /// A group was passed whose order is not coprime to the excluded primes.
    BadSupport { prime: u64 },
    /// A record lacked class-group data needed for the distribution.
    MissingClassData { index: usize },
}

impl core::fmt::Display for HeuristicsError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            HeuristicsError::PrecisionUnreachable {
                requested_digits,
                attainable_digits,
            } => write!(
                f,
                "requested {requested_digits} digits but only \
                 {attainable_digits} are certified"
            ),
            HeuristicsError::BadSupport { prime } => {
                write!(f, "group order is divisible by excluded prime {prime}")
            }
            HeuristicsError::MissingClassData { index } => {
                write!(f, "record {index} has no class group attached")
            }
        }
    }
}
