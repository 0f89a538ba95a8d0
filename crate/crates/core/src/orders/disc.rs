//! Assembling the field discriminant from local data.
//!
//! disc(f) factors as d_K times the square of the order index, so only
//! primes appearing at least twice in disc(f) can divide the index.  Each
//! such prime is settled locally (a one-shot maximality test first, the
//! enlargement loop when that fails); primes appearing once pass straight
//! into d_K.  When the integer factorizer leaves a composite cofactor, the
//! result can still be reported optimistically-unverified if the cofactor
//! is provably not a square and clear of all trial-division primes; the
//! `certified` flag records exactly this distinction.

use super::{dedekind_is_pmaximal, round2_local, OrdersError};
use crate::exactmath::{factor_integer, small_primes, IntPoly};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// How to treat an incomplete factorization of disc(f).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Effort {
    /// Any unfactored cofactor is a hard error.
    Certified,
    /// A provably-honest cofactor may be folded in, flagged uncertified.
    BestEffort,
}

/// A field discriminant with its certification status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldDisc {
    /// d_K, signed.
    pub d: BigInt,
    /// False iff an unfactored cofactor was folded in optimistically.
    pub certified: bool,
}

/// Computes d_K for the field defined by monic irreducible `f`.
pub fn field_discriminant(f: &IntPoly, effort: Effort) -> Result<FieldDisc, OrdersError> {
    debug_assert!(f.is_monic() && f.degree() >= 2);
    let disc = f.discriminant();
    assert!(!disc.is_zero(), "defining polynomial must be squarefree");
    let fac = factor_integer(&disc);

    let mut d = BigInt::from(fac.sign);
    for (prime, e) in &fac.factors {
        let v = if *e == 1 {
            // v_p(index) = 0 is forced when p divides disc(f) exactly once.
            1
        } else {
            let p = prime
                .to_u64()
                .ok_or_else(|| OrdersError::PrimeTooLarge { prime: prime.clone() })?;
            if dedekind_is_pmaximal(f, p) {
                *e
            } else {
                round2_local(f, p).v_field_disc
            }
        };
        d *= prime.pow(v);
    }

    let mut certified = true;
    if let Some(c) = &fac.cofactor {
        let refuse = || OrdersError::FactorizationIncomplete { cofactor: c.clone() };
        if effort == Effort::Certified {
            return Err(refuse());
        }
        // The cofactor is composite with unknown structure.  Folding it into
        // d_K assumes it is squarefree; that assumption is only defensible
        // when c is not itself a square and contains no small prime (the
        // factorizer already stripped those, but verify).
        let root = c.sqrt();
        if &root * &root == *c {
            return Err(refuse());
        }
        if small_primes().iter().any(|&q| (c % BigInt::from(q)).is_zero()) {
            return Err(refuse());
        }
        d *= c;
        certified = false;
    }
    Ok(FieldDisc { d, certified })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::count_real_roots;
    use crate::hunter::{enumerate_candidates, CollectSink, EnumerationTask, SignatureSet};
    use alloc::vec::Vec;
    use num_integer::Integer;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn certified_disc(f: &IntPoly) -> BigInt {
        let r = field_discriminant(f, Effort::Certified).expect("certifiable");
        assert!(r.certified);
        r.d
    }

    #[test]
    fn cyclotomic_fields() {
        assert_eq!(certified_disc(&poly(&[1, 1, 1, 1, 1])), BigInt::from(125));
        assert_eq!(certified_disc(&poly(&[1, 0, 0, 0, 1])), BigInt::from(256));
    }

    #[test]
    fn small_catalogue() {
        // The classical cubic with an inessential discriminant divisor.
        assert_eq!(certified_disc(&poly(&[-8, -2, -1, 1])), BigInt::from(-503));
        // x^5 - x + 1: disc 2869 = 19 * 151 is squarefree.
        assert_eq!(certified_disc(&poly(&[1, -1, 0, 0, 0, 1])), BigInt::from(2869));
        // The smallest totally complex quartic field.
        assert_eq!(certified_disc(&poly(&[1, 1, -1, -1, 1])), BigInt::from(117));
    }

    #[test]
    fn quadratic_closed_form() {
        let ds: [i64; 12] = [-1, 2, -2, 3, 5, -5, -7, 13, -15, 45, 98, 147];
        for &d in &ds {
            let mut d0 = d;
            for q in 2..=13i64 {
                while d0 % (q * q) == 0 {
                    d0 /= q * q;
                }
            }
            let expect = if d0.rem_euclid(4) == 1 { d0 } else { 4 * d0 };
            assert_eq!(certified_disc(&poly(&[-d, 0, 1])), BigInt::from(expect), "d = {d}");
        }
    }

    #[test]
    fn random_quartics_cross_checks() {
        use crate::exactmath::is_irreducible_over_q;
        fn step(s: &mut u64) -> u64 {
            *s ^= *s << 13;
            *s ^= *s >> 7;
            *s ^= *s << 17;
            *s
        }
        let mut st = 0x93C467E37DB0C7A4u64;
        let mut found = 0;
        while found < 20 {
            let mut c = [0i64; 5];
            c[4] = 1;
            for x in c[..4].iter_mut() {
                *x = (step(&mut st) % 13) as i64 - 6;
            }
            let f = poly(&c);
            if f.degree() != 4 || !f.is_squarefree() || !is_irreducible_over_q(&f).unwrap() {
                continue;
            }
            found += 1;
            let d = certified_disc(&f);

            // disc(f) / d_K is a perfect square
            let (q, r) = f.discriminant().div_rem(&d);
            assert!(r.is_zero() && q > BigInt::zero());
            let root = q.sqrt();
            assert_eq!(&root * &root, q, "non-square index part for {c:?}");

            // invariant under x -> x + 1
            let shifted = f.translate(&BigInt::from(1));
            assert_eq!(certified_disc(&shifted), d);

            // Stickelberger
            let tail = d.mod_floor(&BigInt::from(4)).to_u64().unwrap();
            assert!(tail == 0 || tail == 1, "d_K = {d} for {c:?}");

            // sign against the Sturm signature
            let r1 = count_real_roots(&f).unwrap();
            let r2 = (4 - r1) / 2;
            assert_eq!(d > BigInt::zero(), r2 % 2 == 0);
        }
    }

    #[test]
    fn totally_complex_quartic_floor() {
        // Every candidate the degree-4 totally complex box emits generates
        // a field with |d_K| >= 117, and 117 itself is hit.
        let sigs = SignatureSet::preset("tc", 4).unwrap();
        let mut task = EnumerationTask::new(4, 1000.0, sigs).unwrap();
        let mut sink = CollectSink::default();
        enumerate_candidates(&mut task, &mut sink).unwrap();
        assert!(!sink.polys.is_empty());
        let mut discs: Vec<BigInt> = Vec::new();
        for (f, _r1, r2) in &sink.polys {
            assert_eq!(*r2, 2);
            discs.push(certified_disc(f));
        }
        for d in &discs {
            assert!(*d > BigInt::zero(), "totally complex quartic d_K must be positive");
            let tail = d.mod_floor(&BigInt::from(4)).to_u64().unwrap();
            assert!(tail == 0 || tail == 1);
            assert!(*d >= BigInt::from(117));
        }
        assert!(discs.iter().any(|d| *d == BigInt::from(117)));
    }
}
