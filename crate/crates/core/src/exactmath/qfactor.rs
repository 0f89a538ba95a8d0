//! Factorization of integer polynomials over the rationals.
//!
//! Irreducibility testing runs in two stages. A cheap certificate first:
//! factor shapes modulo several small primes constrain the possible degrees
//! of a rational factor (a factor of degree d reduces to a sub-multiset of
//! degrees summing to d modulo every prime not dividing the leading
//! coefficient), and when the surviving degree set is trivial the polynomial
//! is proven irreducible. When shapes cannot decide — famously x^4 + 1 or
//! x^4 - 10x^2 + 1 split modulo every prime — we fall back to a complete
//! factorization: pick a single prime larger than twice a Mignotte-style
//! coefficient bound, factor modulo it, and recombine subsets of the modular
//! factors. At such a prime the symmetric lift of a subset product *is* the
//! rational factor whenever one exists, so trial division over Z certifies
//! every factor exactly and no Hensel lifting is required.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::fpoly::FPoly;
use super::intfactor::is_prime_u64;
use super::poly::IntPoly;

/// Failure modes of rational factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QFactorError {
    /// The single-prime strategy needs a prime exceeding the word size;
    /// coefficients this large never arise from the enumeration pipeline.
    CoefficientsTooLarge,
}

/// Decides irreducibility over Q (equivalently, of the primitive part over
/// Z). Constants are not irreducible. Degree-shape certificates handle the
/// bulk of inputs; the rest get a full factorization.
pub fn is_irreducible_over_q(f: &IntPoly) -> Result<bool, QFactorError> {
    if f.is_zero() || f.is_constant() {
        return Ok(false);
    }
    if f.degree() == 1 {
        return Ok(true);
    }
    if f.coeff(0).is_zero() {
        return Ok(false); // divisible by x
    }
    if !f.is_squarefree() {
        return Ok(false);
    }
    if degree_shapes_certify(f) {
        return Ok(true);
    }
    let mut g = f.primitive_part();
    if g.leading().is_negative() {
        g = g.neg();
    }
    Ok(split_squarefree(&g)?.len() == 1)
}

/// Full factorization over Q: returns the irreducible primitive factors of
/// `f` with positive leading coefficients and their multiplicities, sorted
/// by (degree, coefficients). The rational content (and sign) is dropped;
/// the product of the returned powers equals `f` up to that constant.
pub fn factor_over_q(f: &IntPoly) -> Result<Vec<(IntPoly, usize)>, QFactorError> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut g = f.primitive_part();
    if g.leading().is_negative() {
        g = g.neg();
    }
    let mut out: Vec<(IntPoly, usize)> = Vec::new();
    // Strip powers of x so every later stage sees a nonzero constant term.
    let mut xmult = 0usize;
    while g.degree() >= 1 && g.coeff(0).is_zero() {
        g = g.div_exact_poly(&IntPoly::x()).expect("x divides");
        xmult += 1;
    }
    if xmult > 0 {
        out.push((IntPoly::x(), xmult));
    }
    if g.degree() >= 1 {
        for (part, mult) in squarefree_decomposition_z(&g) {
            for irreducible in split_squarefree(&part)? {
                out.push((irreducible, mult));
            }
        }
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.cmp(&b.0))
    });
    Ok(out)
}

/// Yun's squarefree decomposition in characteristic zero: returns pairwise
/// coprime squarefree parts `a_i` with multiplicities so that f = prod
/// a_i^i up to a constant. Input must be nonconstant with positive leading
/// coefficient; parts come back primitive with positive leading coefficient.
fn squarefree_decomposition_z(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    let fp = f.derivative();
    let g = f.gcd(&fp);
    if g.is_constant() {
        return vec![(f.primitive_part(), 1)];
    }
    let mut c = f.div_exact_poly(&g).expect("gcd divides");
    let mut d = fp.div_exact_poly(&g).expect("gcd divides f'").sub(&c.derivative());
    let mut out = Vec::new();
    let mut mult = 1usize;
    while !c.is_constant() {
        let a = c.gcd(&d);
        if a.degree() >= 1 {
            out.push((a.primitive_part(), mult));
        }
        c = c.div_exact_poly(&a).expect("Yun gcd divides c");
        d = d.div_exact_poly(&a).expect("Yun gcd divides d").sub(&c.derivative());
        mult += 1;
    }
    out
}

const SHAPE_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// True when factor shapes modulo small primes prove irreducibility: any
/// rational factor reduces modulo a good prime to a sub-multiset of the
/// modular factors, so its degree is a subset sum of the modular degrees.
/// Intersecting those subset-sum sets over several primes often leaves only
/// {0, n}, which certifies irreducibility.
fn degree_shapes_certify(f: &IntPoly) -> bool {
    let n = f.degree();
    if n < 2 || n > 60 {
        return false;
    }
    let trivial: u64 = 1 | (1u64 << n);
    let mut possible: u64 = (1u64 << (n + 1)) - 1;
    for &p in SHAPE_PRIMES.iter() {
        let fp = FPoly::from_int_poly(f, p);
        if fp.degree() != n {
            continue; // p divides the leading coefficient
        }
        let mut mask: u64 = 1;
        for d in fp.factor_degrees() {
            mask |= mask << d;
        }
        possible &= mask;
        if possible & !trivial == 0 {
            return true;
        }
    }
    false
}

/// Bound on the sup-norm of `(lc(f)/lc(g)) * g` over divisors g of f,
/// following the Mignotte inequality applied to lc(f)*f.
fn factor_coeff_bound(f: &IntPoly) -> BigInt {
    let n = f.degree();
    let l2 = f.norm2_sq().sqrt() + 1u32; // ceil of the 2-norm
    let lc = f.leading().abs();
    binom_big(n - 1, (n - 1) / 2) * (l2 + &lc) * lc
}

fn binom_big(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::from(1u32);
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Smallest usable prime >= start: keeps the degree, leaves f squarefree.
fn next_good_prime(f: &IntPoly, start: u64) -> u64 {
    let mut p = start.max(5) | 1;
    loop {
        if is_prime_u64(p) {
            let fp = FPoly::from_int_poly(f, p);
            if fp.degree() == f.degree() && fp.gcd(&fp.derivative()).is_constant() {
                return p;
            }
        }
        p += 2;
    }
}

/// Factors a primitive squarefree polynomial with positive leading
/// coefficient into irreducible primitive factors (positive leading
/// coefficients, unsorted).
fn split_squarefree(f: &IntPoly) -> Result<Vec<IntPoly>, QFactorError> {
    let n = f.degree();
    if n <= 1 {
        return Ok(vec![f.clone()]);
    }
    let two_bound = factor_coeff_bound(f) * 2u32;
    if two_bound.bits() > 62 {
        return Err(QFactorError::CoefficientsTooLarge);
    }
    let p = next_good_prime(f, two_bound.to_u64().expect("bits checked") + 1);
    let modular: Vec<FPoly> = FPoly::from_int_poly(f, p)
        .factor()
        .into_iter()
        .map(|(g, e)| {
            debug_assert_eq!(e, 1);
            g
        })
        .collect();
    if modular.len() == 1 {
        return Ok(vec![f.clone()]);
    }
    assert!(modular.len() <= 60, "degree cap keeps masks in a word");

    let mut remaining: Vec<usize> = (0..modular.len()).collect();
    let mut f_rem = f.clone();
    let mut out: Vec<IntPoly> = Vec::new();
    let mut k = 1usize;
    'sizes: while 2 * k <= remaining.len() {
        let r = remaining.len();
        for mask in 1u64..(1u64 << r) {
            if mask.count_ones() as usize != k {
                continue;
            }
            // At half size, fixing the lowest live factor inside the subset
            // avoids probing both a subset and its complement.
            if 2 * k == r && mask & 1 == 0 {
                continue;
            }
            let cand = lift_subset(&modular, &remaining, mask, &f_rem.leading(), p);
            if cand.degree() == 0 {
                continue;
            }
            if let Some(quot) = f_rem.div_exact_poly(&cand) {
                out.push(cand);
                f_rem = quot;
                remaining = remaining
                    .iter()
                    .enumerate()
                    .filter(|(bit, _)| mask & (1u64 << bit) == 0)
                    .map(|(_, &idx)| idx)
                    .collect();
                continue 'sizes;
            }
        }
        k += 1;
    }
    if f_rem.degree() >= 1 {
        out.push(f_rem);
    }
    Ok(out)
}

/// Symmetric lift of lc * prod of the masked modular factors, reduced to a
/// primitive polynomial with positive leading coefficient. When the subset
/// corresponds to a true rational factor this reconstructs it exactly,
/// because the prime exceeds twice every coefficient of the scaled factor.
fn lift_subset(modular: &[FPoly], live: &[usize], mask: u64, lc: &BigInt, p: u64) -> IntPoly {
    let lc_mod = (lc % BigInt::from(p)).to_u64().unwrap_or(0) % p;
    let mut prod = FPoly::from_u64(p, &[lc_mod]);
    for (bit, &idx) in live.iter().enumerate() {
        if mask & (1u64 << bit) != 0 {
            prod = prod.mul(&modular[idx]);
        }
    }
    let mut cand = prod.to_int_poly_symmetric().primitive_part();
    if cand.leading().is_negative() {
        cand = cand.neg();
    }
    cand
}
