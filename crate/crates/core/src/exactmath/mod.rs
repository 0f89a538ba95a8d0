//! Exact arithmetic building blocks.
//!
//! All operations here are exact over Z, F_p or dyadic rationals; any
//! floating point that appears is only used to pick search parameters and
//! never to decide a mathematical predicate.

mod dyadic;
mod fpoly;
mod intfactor;
mod poly;
mod primes;
mod qfactor;
mod roots;
mod sturm;

pub use dyadic::{cbox_product, dyadic_ceil_int, dyadic_floor_int, CBox, Dyadic, Interval};
pub use fpoly::{factor_mod_p, factor_mod_p_full, FPoly};
pub use intfactor::{factor_integer, is_probable_prime, is_prime_u64, IntFactorization};
pub use poly::IntPoly;
pub use primes::{small_primes, SMALL_PRIME_LIMIT};
pub use qfactor::{factor_over_q, is_irreducible_over_q, QFactorError};
pub use roots::{complex_roots, RootBox, RootsError};
pub use sturm::{count_real_roots, SturmChain, SturmError};
