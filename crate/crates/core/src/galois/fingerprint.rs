//! Frobenius sampling: factorization shapes of a polynomial at small primes.
//!
//! For a monic irreducible f and a prime p not dividing disc(f), the degrees
//! of the irreducible factors of f mod p form a partition of deg f equal to
//! the cycle type of the Frobenius class at p in the Galois group of the
//! splitting field, acting on the roots. Sampling many primes therefore
//! observes a subset of the group's cycle-type set, with each type appearing
//! at a frequency approaching its density in the group.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::exactmath::{factor_mod_p, small_primes, IntPoly};

/// Cycle types of f at the first `m` usable primes, paired with the primes
/// themselves, skipping primes dividing disc(f). Fewer than `m` pairs come
/// back only if the precomputed prime table (primes below one million) runs
/// out first.
pub fn sampled_types(f: &IntPoly, m: usize) -> Vec<(u64, Vec<u8>)> {
    assert!(f.is_monic(), "sampling requires a monic polynomial");
    let disc = f.discriminant();
    assert!(!disc.is_zero(), "sampling requires a squarefree polynomial");
    let mut out = Vec::with_capacity(m);
    for &p in small_primes() {
        if out.len() == m {
            break;
        }
        if (&disc % p).is_zero() {
            continue;
        }
        let mut t: Vec<u8> = factor_mod_p(f, p).iter().map(|&d| d as u8).collect();
        t.sort_unstable_by(|x, y| y.cmp(x));
        out.push((p, t));
    }
    out
}

/// Multiset of factorization shapes of f at the first `m` primes not
/// dividing disc(f): each observed cycle type mapped to its count.
pub fn frobenius_fingerprint(f: &IntPoly, m: usize) -> BTreeMap<Vec<u8>, u32> {
    let mut hist: BTreeMap<Vec<u8>, u32> = BTreeMap::new();
    for (_, t) in sampled_types(f, m) {
        *hist.entry(t).or_insert(0) += 1;
    }
    hist
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn gaussian_quadratic_splits_at_one_mod_four_only() {
        // x^2 + 1: inert at p = 3 mod 4, split at p = 1 mod 4, disc -4.
        let f = IntPoly::from_i64(&[1, 0, 1]);
        let hist = frobenius_fingerprint(&f, 10);
        assert_eq!(hist.len(), 2);
        // First ten odd primes: 3,5,7,11,13,17,19,23,29,31 — four are 1 mod 4.
        assert_eq!(hist[&vec![2]], 6);
        assert_eq!(hist[&vec![1, 1]], 4);
    }

    #[test]
    fn fifth_cyclotomic_types_stay_inside_the_cyclic_set() {
        // x^4 + x^3 + x^2 + x + 1 has cyclic Galois group of order 4:
        // shapes 1^4, 2^2, and 4 only — never (3,1) or (2,1,1).
        let f = IntPoly::from_i64(&[1, 1, 1, 1, 1]);
        let hist = frobenius_fingerprint(&f, 40);
        for t in hist.keys() {
            assert!(
                t == &vec![1, 1, 1, 1] || t == &vec![2, 2] || t == &vec![4],
                "unexpected shape {:?}",
                t
            );
        }
        // All three classes appear quickly (densities 1/4, 1/4, 1/2).
        assert_eq!(hist.len(), 3);
    }

    #[test]
    fn generic_quartic_shows_odd_order_witnesses_early() {
        // x^4 - x - 1 has the full symmetric group; both a 4-cycle and a
        // (3,1) class appear among the primes below 200.
        let f = IntPoly::from_i64(&[-1, -1, 0, 0, 1]);
        let types = sampled_types(&f, 46); // primes up to 199, minus disc divisors
        let mut saw_four = false;
        let mut saw_three_one = false;
        for (p, t) in &types {
            assert!(*p < 200);
            if t == &vec![4] {
                saw_four = true;
            }
            if t == &vec![3, 1] {
                saw_three_one = true;
            }
        }
        assert!(saw_four && saw_three_one);
    }

    #[test]
    fn ramified_primes_are_skipped() {
        // disc(x^2 - 5) = 20, so 2 and 5 never appear.
        let f = IntPoly::from_i64(&[-5, 0, 1]);
        for (p, _) in sampled_types(&f, 25) {
            assert!(p != 2 && p != 5);
        }
    }
}
