//! Shared table of small primes.
//!
//! A single sieve of Eratosthenes up to [`SMALL_PRIME_LIMIT`] is computed on
//! first use and cached for the lifetime of the process.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

/// Exclusive upper bound of the cached prime table.
pub const SMALL_PRIME_LIMIT: u64 = 1_000_000;

static PRIMES: OnceBox<Vec<u64>> = OnceBox::new();

/// All primes below [`SMALL_PRIME_LIMIT`], ascending.
pub fn small_primes() -> &'static [u64] {
    PRIMES.get_or_init(|| Box::new(sieve(SMALL_PRIME_LIMIT as usize)))
}

fn sieve(limit: usize) -> Vec<u64> {
    let mut composite = vec![false; limit];
    let mut out = Vec::with_capacity(80_000);
    for n in 2..limit {
        if composite[n] {
            continue;
        }
        out.push(n as u64);
        let mut m = n * n;
        while m < limit {
            composite[m] = true;
            m += n;
        }
    }
    out
}
