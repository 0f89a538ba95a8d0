//! Integer factorization: trial division over the shared prime table,
//! Miller-Rabin primality testing, and Brent-cycle Pollard rho with an
//! iteration budget. When the budget runs out the remaining cofactor is
//! reported unfactored rather than looping forever; callers treat such
//! results as uncertified.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::primes::small_primes;

/// Iteration budget for one rho run on one composite.
const RHO_BUDGET: u64 = 1_000_000;

/// Outcome of factoring an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntFactorization {
    /// -1, 0 or +1.
    pub sign: i8,
    /// (prime, exponent), primes ascending. Each prime passed a primality test.
    pub factors: Vec<(BigInt, u32)>,
    /// Composite remainder left unfactored when the budget ran out.
    pub cofactor: Option<BigInt>,
}

impl IntFactorization {
    /// True when the factorization is complete.
    pub fn is_certified(&self) -> bool {
        self.cofactor.is_none()
    }

    /// The exponent of `p` among the certified factors.
    pub fn exponent_of(&self, p: &BigInt) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// Recomposes the factored value (including the cofactor).
    pub fn value(&self) -> BigInt {
        let mut v = BigInt::from(self.sign);
        for (p, e) in &self.factors {
            v *= p.pow(*e);
        }
        if let Some(c) = &self.cofactor {
            v *= c;
        }
        v
    }

    /// True when the factorization is complete and every exponent is even.
    pub fn all_exponents_even(&self) -> bool {
        self.is_certified() && self.factors.iter().all(|(_, e)| e % 2 == 0)
    }
}

#[inline]
fn mulm_u64(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

#[inline]
fn rho_step(y: u64, c: u64, n: u64) -> u64 {
    ((y as u128 * y as u128 + c as u128) % n as u128) as u64
}

fn powm_u64(mut a: u64, mut e: u64, n: u64) -> u64 {
    let mut acc = 1u64 % n;
    a %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm_u64(acc, a, n);
        }
        a = mulm_u64(a, a, n);
        e >>= 1;
    }
    acc
}

const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Deterministic Miller-Rabin for u64 (the first 13 prime bases decide
/// primality far beyond the u64 range).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'base: for &a in &MR_BASES {
        let mut x = powm_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm_u64(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin for arbitrary-size inputs. Deterministic (13 fixed bases)
/// below 3317044064679887385961981; above that, 40 rounds with bases drawn
/// from a generator seeded by the input, so results are reproducible.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(u) = n.to_u64() {
        return is_prime_u64(u);
    }
    for &p in &[
        2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
        89, 97,
    ] {
        if (n % p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;

    let deterministic_limit = BigUint::parse_bytes(b"3317044064679887385961981", 10).unwrap();
    let bases: Vec<BigUint> = if *n < deterministic_limit {
        MR_BASES.iter().map(|&b| BigUint::from(b)).collect()
    } else {
        let mut state = seed_from_biguint(n);
        (0..40)
            .map(|_| {
                state = xorshift(state);
                // Bases in [2, 2^63], far below any n on this branch.
                BigUint::from((state >> 1) | 2)
            })
            .collect()
    };

    'base: for a in bases {
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

fn seed_from_biguint(n: &BigUint) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    for b in n.to_bytes_le() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    if h == 0 {
        0x9e3779b97f4a7c15
    } else {
        h
    }
}

fn xorshift(mut x: u64) -> u64 {
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    x.wrapping_mul(0x2545F4914F6CDD1D)
}

/// Brent-cycle rho for an odd composite u64 with no small prime factors.
/// Returns a nontrivial factor, or None when the budget is exhausted.
fn brent_rho_u64(n: u64, budget: &mut u64) -> Option<u64> {
    debug_assert!(n & 1 == 1 && n > 3);
    let mut c = 1u64;
    loop {
        let mut y = 2u64;
        let mut d = 1u64;
        let m = 64u64;
        let mut r = 1u64;
        let mut q = 1u64;
        while d == 1 {
            let x = y;
            for _ in 0..r {
                y = rho_step(y, c, n);
            }
            let mut k = 0u64;
            while k < r && d == 1 {
                let batch_start = y;
                let lim = m.min(r - k);
                for _ in 0..lim {
                    if *budget == 0 {
                        return None;
                    }
                    *budget -= 1;
                    y = rho_step(y, c, n);
                    let diff = x.abs_diff(y);
                    if diff != 0 {
                        q = mulm_u64(q, diff, n);
                    }
                }
                d = gcd_u64(q, n);
                if d == n {
                    // The batched product jumped past the factor; replay
                    // the batch one step at a time.
                    let mut ys = batch_start;
                    d = 1;
                    while d == 1 {
                        ys = rho_step(ys, c, n);
                        let diff = x.abs_diff(ys);
                        if diff == 0 {
                            d = n;
                            break;
                        }
                        d = gcd_u64(diff, n);
                    }
                    break;
                }
                k += lim;
            }
            r <<= 1;
        }
        if d != n && d != 1 {
            return Some(d);
        }
        // Degenerate cycle; change the polynomial and retry.
        c += 1;
        if *budget == 0 {
            return None;
        }
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Rho for inputs beyond u64, on big integers, with the same budget scheme.
fn brent_rho_big(n: &BigUint, budget: &mut u64) -> Option<BigUint> {
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let mut y = BigUint::from(2u32);
        let mut d = BigUint::one();
        let m = 64u64;
        let mut r = 1u64;
        let mut q = BigUint::one();
        while d.is_one() {
            let x = y.clone();
            for _ in 0..r {
                y = (&y * &y + &c) % n;
            }
            let mut k = 0u64;
            while k < r && d.is_one() {
                let batch_start = y.clone();
                let lim = m.min(r - k);
                for _ in 0..lim {
                    if *budget == 0 {
                        return None;
                    }
                    *budget -= 1;
                    y = (&y * &y + &c) % n;
                    let diff = if x > y { &x - &y } else { &y - &x };
                    if !diff.is_zero() {
                        q = (&q * &diff) % n;
                    }
                }
                d = q.gcd(n);
                if &d == n {
                    let mut ys = batch_start;
                    d = BigUint::one();
                    while d.is_one() {
                        ys = (&ys * &ys + &c) % n;
                        let diff = if x > ys { &x - &ys } else { &ys - &x };
                        if diff.is_zero() {
                            d = n.clone();
                            break;
                        }
                        d = diff.gcd(n);
                    }
                    break;
                }
                k += lim;
            }
            r <<= 1;
        }
        if !d.is_one() && &d != n {
            return Some(d);
        }
        c += &one;
        if *budget == 0 {
            return None;
        }
    }
}

/// Factors a u64 completely (staged trial division, perfect-power peeling,
/// then rho).
fn factor_u64_into(mut m: u64, out: &mut Vec<(u64, u32)>, cofactor: &mut Option<BigUint>) {
    if m <= 1 {
        return;
    }
    // Stage 1: tiny primes, so most inputs finish instantly.
    let table = small_primes();
    let mut idx = 0;
    for (i, &p) in table.iter().enumerate() {
        if p > 10_000 || p * p > m {
            idx = i;
            break;
        }
        if m % p == 0 {
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        idx = i + 1;
    }
    if m == 1 {
        return;
    }
    if is_prime_u64(m) {
        out.push((m, 1));
        return;
    }
    // Stage 2: the rest of the table.
    for &p in &table[idx..] {
        if p * p > m {
            break;
        }
        if m % p == 0 {
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
            if m == 1 {
                return;
            }
            if is_prime_u64(m) {
                out.push((m, 1));
                return;
            }
        }
    }
    if m == 1 {
        return;
    }
    if is_prime_u64(m) {
        out.push((m, 1));
        return;
    }
    // Perfect powers defeat rho; peel squares and cubes first.
    let r = m.sqrt();
    if r * r == m {
        let mut sub = Vec::new();
        factor_u64_into(r, &mut sub, cofactor);
        for (p, e) in sub {
            push_merge_u64(out, p, 2 * e);
        }
        return;
    }
    let r = m.cbrt();
    if r * r * r == m {
        let mut sub = Vec::new();
        factor_u64_into(r, &mut sub, cofactor);
        for (p, e) in sub {
            push_merge_u64(out, p, 3 * e);
        }
        return;
    }
    let mut budget = RHO_BUDGET;
    match brent_rho_u64(m, &mut budget) {
        Some(d) => {
            factor_u64_into(d, out, cofactor);
            factor_u64_into(m / d, out, cofactor);
        }
        None => {
            let prev = cofactor.take().unwrap_or_else(BigUint::one);
            *cofactor = Some(prev * BigUint::from(m));
        }
    }
}

fn push_merge_u64(out: &mut Vec<(u64, u32)>, p: u64, e: u32) {
    for entry in out.iter_mut() {
        if entry.0 == p {
            entry.1 += e;
            return;
        }
    }
    out.push((p, e));
}

fn factor_big_into(m: BigUint, out: &mut Vec<(BigUint, u32)>, cofactor: &mut Option<BigUint>) {
    if m.is_one() {
        return;
    }
    if let Some(u) = m.to_u64() {
        let mut small = Vec::new();
        factor_u64_into(u, &mut small, cofactor);
        for (p, e) in small {
            out.push((BigUint::from(p), e));
        }
        return;
    }
    if is_probable_prime(&m) {
        out.push((m, 1));
        return;
    }
    let r = m.sqrt();
    if &r * &r == m {
        let mut sub = Vec::new();
        let mut sub_cof = None;
        factor_big_into(r, &mut sub, &mut sub_cof);
        for (p, e) in sub {
            out.push((p, 2 * e));
        }
        if let Some(c) = sub_cof {
            let prev = cofactor.take().unwrap_or_else(BigUint::one);
            *cofactor = Some(prev * (&c * &c));
        }
        return;
    }
    let r = m.cbrt();
    if &r * &r * &r == m {
        let mut sub = Vec::new();
        let mut sub_cof = None;
        factor_big_into(r, &mut sub, &mut sub_cof);
        for (p, e) in sub {
            out.push((p, 3 * e));
        }
        if let Some(c) = sub_cof {
            let prev = cofactor.take().unwrap_or_else(BigUint::one);
            *cofactor = Some(prev * (&c * &c * &c));
        }
        return;
    }
    let mut budget = RHO_BUDGET;
    match brent_rho_big(&m, &mut budget) {
        Some(d) => {
            let q = &m / &d;
            factor_big_into(d, out, cofactor);
            factor_big_into(q, out, cofactor);
        }
        None => {
            let prev = cofactor.take().unwrap_or_else(BigUint::one);
            *cofactor = Some(prev * m);
        }
    }
}

/// Factors an integer. The sign is reported separately; 0 yields an empty
/// factorization with sign 0.
pub fn factor_integer(n: &BigInt) -> IntFactorization {
    if n.is_zero() {
        return IntFactorization {
            sign: 0,
            factors: Vec::new(),
            cofactor: None,
        };
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mag = n.magnitude().clone();

    let mut big_factors: Vec<(BigUint, u32)> = Vec::new();
    let mut cofactor: Option<BigUint> = None;

    if let Some(u) = mag.to_u64() {
        let mut small = Vec::new();
        factor_u64_into(u, &mut small, &mut cofactor);
        for (p, e) in small {
            big_factors.push((BigUint::from(p), e));
        }
    } else {
        // Peel tiny primes cheaply before handing off.
        let mut m = mag;
        for &p in small_primes().iter().take(1_000) {
            if m.is_one() {
                break;
            }
            let pb = BigUint::from(p);
            let mut e = 0u32;
            loop {
                let (q, r) = m.div_rem(&pb);
                if r.is_zero() {
                    m = q;
                    e += 1;
                } else {
                    break;
                }
            }
            if e > 0 {
                big_factors.push((pb, e));
            }
        }
        if !m.is_one() {
            factor_big_into(m, &mut big_factors, &mut cofactor);
        }
    }

    big_factors.sort_by(|a, b| a.0.cmp(&b.0));
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    for (p, e) in big_factors {
        let p = BigInt::from(p);
        if let Some(last) = factors.last_mut() {
            if last.0 == p {
                last.1 += e;
                continue;
            }
        }
        factors.push((p, e));
    }

    IntFactorization {
        sign,
        factors,
        cofactor: cofactor.map(BigInt::from),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_and_medium() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(561)); // Carmichael
        assert!(is_prime_u64(1_000_003));
        assert!(is_prime_u64(2_147_483_647)); // 2^31-1
        assert!(!is_prime_u64(2_147_483_649));
        assert!(is_prime_u64(18_446_744_073_709_551_557)); // largest u64 prime
    }

    #[test]
    fn probable_prime_big() {
        // 2^89-1 is prime.
        let m89 = (BigUint::one() << 89u32) - BigUint::one();
        assert!(is_probable_prime(&m89));
        // 2^67-1 = 193707721 * 761838257287 is not.
        let m67 = (BigUint::one() << 67u32) - BigUint::one();
        assert!(!is_probable_prime(&m67));
    }

    #[test]
    fn factor_small_composites() {
        let f = factor_integer(&BigInt::from(360));
        assert_eq!(f.sign, 1);
        assert!(f.is_certified());
        assert_eq!(
            f.factors,
            vec![
                (BigInt::from(2), 3u32),
                (BigInt::from(3), 2),
                (BigInt::from(5), 1)
            ]
        );
        assert_eq!(f.value(), BigInt::from(360));
    }

    #[test]
    fn factor_negative_and_units() {
        let f = factor_integer(&BigInt::from(-20));
        assert_eq!(f.sign, -1);
        assert_eq!(
            f.factors,
            vec![(BigInt::from(2), 2u32), (BigInt::from(5), 1)]
        );
        assert_eq!(f.value(), BigInt::from(-20));

        let one = factor_integer(&BigInt::from(1));
        assert!(one.factors.is_empty());
        assert_eq!(one.value(), BigInt::from(1));

        let zero = factor_integer(&BigInt::from(0));
        assert_eq!(zero.sign, 0);
        assert_eq!(zero.value(), BigInt::from(0));
    }

    #[test]
    fn factor_medium_semiprime() {
        // 1000003 * 1000033 straddles the trial-division limit.
        let n = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        let f = factor_integer(&n);
        assert!(f.is_certified());
        assert_eq!(
            f.factors,
            vec![
                (BigInt::from(1_000_003), 1u32),
                (BigInt::from(1_000_033), 1)
            ]
        );
    }

    #[test]
    fn factor_u64_semiprime_needs_rho() {
        // Both primes near 2^31; the product has no small factors.
        let p = 2_147_483_647u64; // 2^31-1
        let q = 2_147_483_629u64;
        let n = BigInt::from(p) * BigInt::from(q);
        let f = factor_integer(&n);
        assert!(f.is_certified());
        assert_eq!(
            f.factors,
            vec![(BigInt::from(q), 1u32), (BigInt::from(p), 1)]
        );
    }

    #[test]
    fn factor_prime_powers() {
        let n = BigInt::from(1_000_003u64).pow(3);
        let f = factor_integer(&n);
        assert!(f.is_certified());
        assert_eq!(f.factors, vec![(BigInt::from(1_000_003), 3u32)]);

        // Square of a large prime: exercises the perfect-square peel.
        let big = BigInt::from(2_147_483_647u64).pow(2);
        let f = factor_integer(&big);
        assert!(f.is_certified());
        assert_eq!(f.factors, vec![(BigInt::from(2_147_483_647u64), 2u32)]);
    }

    #[test]
    fn factor_beyond_u64() {
        // (2^61-1) * (2^32+15): both prime, product above u64.
        let p61 = (BigUint::one() << 61u32) - BigUint::one();
        let q = BigUint::from(4_294_967_311u64);
        let n = BigInt::from(&p61 * &q);
        let f = factor_integer(&n);
        assert!(f.is_certified());
        assert_eq!(
            f.factors,
            vec![(BigInt::from(q), 1u32), (BigInt::from(p61), 1)]
        );
        assert_eq!(f.value(), n);
    }

    #[test]
    fn factor_big_square() {
        // 3 * (2^61-1)^2: the square peel must fire on the big path.
        let p61 = (BigUint::one() << 61u32) - BigUint::one();
        let n = BigInt::from(&p61 * &p61 * 3u32);
        let f = factor_integer(&n);
        assert!(f.is_certified());
        assert_eq!(
            f.factors,
            vec![(BigInt::from(3), 1u32), (BigInt::from(p61), 2)]
        );
    }

    #[test]
    fn exponent_lookup_and_squareness() {
        let f = factor_integer(&BigInt::from(7056)); // 2^4 3^2 7^2
        assert_eq!(f.exponent_of(&BigInt::from(2)), 4);
        assert_eq!(f.exponent_of(&BigInt::from(3)), 2);
        assert_eq!(f.exponent_of(&BigInt::from(11)), 0);
        assert!(f.all_exponents_even());
        assert!(!factor_integer(&BigInt::from(12)).all_exponents_even());
    }
}
