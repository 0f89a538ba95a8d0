//! Field discriminants from defining polynomials.
//!
//! A monic irreducible f of degree n defines the order Z[x]/(f) inside the
//! number field K = Q[x]/(f), and disc(f) = d_K * [O_K : Z[x]/(f)]^2.  This
//! module recovers d_K exactly: `dedekind_is_pmaximal` decides in one shot
//! whether the equation order is already maximal at a prime, `round2_local`
//! measures v_p of the index by repeatedly enlarging the order through the
//! p-radical and its ring of multipliers, and `field_discriminant` drives
//! both across the factorization of disc(f).
//!
//! Every step is exact integer or F_p arithmetic; the only uncertainty that
//! can survive is an unfactored composite cofactor of disc(f), which is
//! recorded in the `certified` flag rather than hidden.

mod dedekind;
mod disc;
mod round2;

pub use dedekind::dedekind_is_pmaximal;
pub use disc::{field_discriminant, Effort, FieldDisc};
pub use round2::{round2_local, LocalOrderResult};

use num_bigint::BigInt;

/// Errors from discriminant certification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrdersError {
    /// A composite cofactor of disc(f) could not be factored within budget
    /// and the caller (or the cofactor's shape) ruled out a flagged result.
    FactorizationIncomplete { cofactor: BigInt },
    /// A prime needing maximality work does not fit the machine-word
    /// arithmetic used for the local linear algebra.
    PrimeTooLarge { prime: BigInt },
}

impl core::fmt::Display for OrdersError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            OrdersError::FactorizationIncomplete { cofactor } => {
                write!(f, "discriminant cofactor {cofactor} resisted factorization")
            }
            OrdersError::PrimeTooLarge { prime } => {
                write!(f, "prime {prime} too large for local order arithmetic")
            }
        }
    }
}
