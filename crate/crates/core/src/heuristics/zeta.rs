//! Riemann zeta, Bernoulli numbers, and the prime zeta function at integer
//! arguments.
//!
//! `zeta(s)` is evaluated once per `s` by Euler–Maclaurin summation with
//! split point `N = 64`: the power sum, the two boundary terms, and the
//! Bernoulli correction terms are all exact rationals, so the only rounding
//! is the final conversion into [`Fx`].  Correction terms are generated by a
//! ratio recurrence and the loop stops once a term drops below `2^-220`,
//! which bounds the truncation error well under one ulp of the fixed-point
//! grid.  Values for `2 <= s <= MAX_S` are built eagerly and cached.
//!
//! `prime_zeta(s)` uses the Möbius inversion of `ln zeta`:
//! `P(s) = sum_{m>=1} mu(m)/m * ln zeta(m*s)`, truncated at `m*s <= MAX_S`;
//! the dropped terms are below `2^(1-MAX_S)` because `ln zeta(t) ~ 2^-t`.

use alloc::boxed::Box;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::race::OnceBox;

use super::fixed::{Fx, FRAC_BITS};

/// Largest argument at which [`zeta`], [`ln_zeta`], and [`prime_zeta`] are
/// tabulated.  Beyond it `zeta(s) - 1 < 2^-210` is far below one ulp.
pub const MAX_S: u32 = 210;

/// Bernoulli numbers `B_0..=B_n` (second kind, `B_1 = -1/2`), exact.
pub fn bernoulli_numbers(n: u32) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n as usize + 1);
    b.push(BigRational::one());
    for m in 1..=n as usize {
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one(); // C(m+1, 0)
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                acc += bj * &binom;
            }
            // C(m+1, j+1) = C(m+1, j) * (m+1-j) / (j+1)
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// Möbius function by trial division.
pub fn moebius(mut m: u64) -> i32 {
    assert!(m >= 1, "moebius is defined on positive integers");
    let mut mu = 1i32;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        mu = -mu;
    }
    mu
}

/// True if `|r| < 2^-thresh_bits`.
fn below_threshold(r: &BigRational, thresh_bits: u64) -> bool {
    r.is_zero() || r.numer().bits() + thresh_bits < r.denom().bits() + 1
}

/// Euler–Maclaurin evaluation of `zeta(s)` as a rational approximation with
/// total truncation error below `2^-204`.
fn zeta_rational(s: u32, bern: &[BigRational]) -> BigRational {
    assert!(s >= 2);
    const N: u32 = 64;
    let mut acc = BigRational::zero();
    for k in 1..N {
        let kp = BigInt::from(k).pow(s);
        if kp.bits() > FRAC_BITS as u64 + 40 {
            // every remaining term is below 2^-(FRAC_BITS+39); at most 62 of
            // them, so the omitted block is under 2^-(FRAC_BITS+33)
            break;
        }
        acc += BigRational::new(BigInt::one(), kp);
    }
    let np = BigInt::from(N).pow(s);
    // N^(1-s)/(s-1) and N^(-s)/2
    acc += BigRational::new(BigInt::from(N), &np * BigInt::from(s - 1));
    acc += BigRational::new(BigInt::one(), &np * BigInt::from(2u32));
    // correction terms T_i = B_2i/(2i)! * (s)(s+1)..(s+2i-2) * N^(1-s-2i),
    // built by the ratio T_{i+1}/T_i = (B_{2i+2}/B_{2i}) * (s+2i-1)(s+2i)
    //                                   / ((2i+1)(2i+2) N^2)
    let mut term = &bern[2]
        * BigRational::new(
            BigInt::from(s),
            BigInt::from(2u32) * &np * BigInt::from(N),
        );
    let mut i = 1u32;
    loop {
        if below_threshold(&term, 220) || i > 80 {
            // remainder is bounded by a small multiple of the first omitted
            // term (factor < 2^7 for s <= MAX_S), total under 2^-206
            break;
        }
        acc += &term;
        let i64s = s as u64 + 2 * i as u64;
        let ratio = &bern[2 * i as usize + 2] / &bern[2 * i as usize]
            * BigRational::new(
                BigInt::from((i64s - 1) * i64s),
                BigInt::from(
                    (2 * i as u64 + 1) * (2 * i as u64 + 2) * (N as u64 * N as u64),
                ),
            );
        term *= ratio;
        i += 1;
    }
    acc
}

struct Tables {
    /// `zeta[s - 2]` holds `zeta(s)` for `s = 2..=MAX_S`.
    zeta: Vec<Fx>,
    /// `ln_zeta[s - 2]` holds `ln zeta(s)`.
    ln_zeta: Vec<Fx>,
}

static TABLES: OnceBox<Tables> = OnceBox::new();

fn tables() -> &'static Tables {
    TABLES.get_or_init(|| {
        let bern = bernoulli_numbers(166);
        let mut zeta = Vec::with_capacity((MAX_S - 1) as usize);
        let mut ln_zeta = Vec::with_capacity((MAX_S - 1) as usize);
        for s in 2..=MAX_S {
            let z = Fx::from_rational(&zeta_rational(s, &bern));
            ln_zeta.push(z.ln());
            zeta.push(z);
        }
        Box::new(Tables { zeta, ln_zeta })
    })
}

/// `zeta(s)` for integer `2 <= s <= MAX_S`, accurate to a few ulp.
pub fn zeta(s: u32) -> &'static Fx {
    assert!((2..=MAX_S).contains(&s), "zeta tabulated for 2..={MAX_S}");
    &tables().zeta[(s - 2) as usize]
}

/// `ln zeta(s)` for integer `2 <= s <= MAX_S`.
pub fn ln_zeta(s: u32) -> &'static Fx {
    assert!((2..=MAX_S).contains(&s), "zeta tabulated for 2..={MAX_S}");
    &tables().ln_zeta[(s - 2) as usize]
}

/// Prime zeta `P(s) = sum over primes p of p^-s`, for `2 <= s <= MAX_S`,
/// with error below `2^-185`.
pub fn prime_zeta(s: u32) -> Fx {
    assert!(
        (2..=MAX_S).contains(&s),
        "prime_zeta needs 2 <= s <= {MAX_S}"
    );
    let mut acc = Fx::zero();
    let mut m = 1u32;
    while m * s <= MAX_S {
        let mu = moebius(m as u64);
        if mu != 0 {
            let t = ln_zeta(m * s).div_u64(m as u64);
            acc = if mu > 0 { acc.add(&t) } else { acc.sub(&t) };
        }
        m += 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::small_primes;
    use core::cmp::Ordering;

    fn assert_close(v: &Fx, reference: &str, tol_log10: i32) {
        let want = Fx::from_decimal(reference);
        let diff = v.sub(&want).abs();
        let tol = Fx::from_ratio(
            &BigInt::one(),
            &BigInt::from(10u32).pow((-tol_log10) as u32),
        );
        assert!(
            diff.cmp_val(&tol) == Ordering::Less,
            "value {} differs from {} beyond 1e{}",
            v.to_decimal_string(45),
            reference,
            tol_log10
        );
    }

    #[test]
    fn bernoulli_exact_values() {
        let b = bernoulli_numbers(20);
        let frac = |n: i64, d: i64| {
            BigRational::new(BigInt::from(n), BigInt::from(d))
        };
        assert_eq!(b[0], frac(1, 1));
        assert_eq!(b[1], frac(-1, 2));
        assert_eq!(b[2], frac(1, 6));
        assert_eq!(b[3], frac(0, 1));
        assert_eq!(b[4], frac(-1, 30));
        assert_eq!(b[6], frac(1, 42));
        assert_eq!(b[8], frac(-1, 30));
        assert_eq!(b[10], frac(5, 66));
        assert_eq!(b[12], frac(-691, 2730));
        assert_eq!(b[20], frac(-174611, 330));
    }

    #[test]
    fn moebius_values() {
        let expect = [
            (1u64, 1),
            (2, -1),
            (3, -1),
            (4, 0),
            (6, 1),
            (8, 0),
            (9, 0),
            (30, -1),
            (105, -1),
            (210, 1),
        ];
        for (m, mu) in expect {
            assert_eq!(moebius(m), mu, "mu({m})");
        }
    }

    #[test]
    fn zeta_reference_digits() {
        assert_close(zeta(2), "1.644934066848226436472415166646025189219", -35);
        assert_close(zeta(3), "1.202056903159594285399738161511449990765", -35);
        assert_close(zeta(4), "1.082323233711138191516003696541167902775", -35);
        assert_close(zeta(5), "1.036927755143369926331365486457034168057", -35);
    }

    #[test]
    fn zeta_ratio_identity() {
        // zeta(4)/zeta(2)^2 = 2/5 exactly
        let ratio = zeta(4).div(&zeta(2).square());
        assert_close(&ratio, "0.4", -45);
    }

    #[test]
    fn zeta_of_large_argument_rounds_to_one() {
        // zeta(200) - 1 ~ 2^-200, below half an ulp of the 192-bit grid
        assert_eq!(zeta(200), &Fx::one());
        assert!(ln_zeta(200).is_zero());
    }

    #[test]
    fn ln_zeta_consistency() {
        let back = ln_zeta(2).exp();
        let diff = back.sub(zeta(2)).abs();
        let tol = Fx::from_ratio(&BigInt::one(), &BigInt::from(10u64).pow(50));
        assert!(diff.cmp_val(&tol) == Ordering::Less);
    }

    #[test]
    fn prime_zeta_reference_digits() {
        assert_close(
            &prime_zeta(2),
            "0.4522474200410654985065433648322479341732",
            -35,
        );
        assert_close(
            &prime_zeta(3),
            "0.1747626392994435364231133146657067009754",
            -35,
        );
        assert_close(
            &prime_zeta(4),
            "0.07699313976424684494261929593315787016204",
            -35,
        );
        assert_close(
            &prime_zeta(5),
            "0.0357550174839242571328182425388557111317",
            -35,
        );
        assert_close(
            &prime_zeta(10),
            "0.0009936035744369802178558507001477394163019",
            -35,
        );
        assert_close(
            &prime_zeta(20),
            "0.0000009539611241036233263528834939770057955701",
            -35,
        );
    }

    #[test]
    fn prime_zeta_brackets_direct_prime_sum() {
        // sum over the sieved primes below 10^6, then a tail of at most
        // P^(1-s)/(s-1) remains
        for s in [2u32, 3] {
            let mut acc = Fx::zero();
            for &p in small_primes() {
                acc = acc.add(&Fx::from_u64_ratio(1, p.pow(s)));
            }
            let diff = prime_zeta(s).sub(&acc);
            assert!(diff.is_positive(), "P({s}) must exceed its partial sum");
            let bound = match s {
                2 => Fx::from_u64_ratio(1, 500_000),
                _ => Fx::from_u64_ratio(1, 1_000_000_000_000),
            };
            assert!(
                diff.cmp_val(&bound) == Ordering::Less,
                "P({s}) tail too large: {}",
                diff.to_decimal_string(20)
            );
        }
    }
}
