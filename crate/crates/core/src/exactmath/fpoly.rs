//! Dense univariate polynomials over the prime field F_p, p < 2^63.
//!
//! Provides the factorization ladder used throughout the crate: squarefree
//! decomposition, distinct-degree splitting, and equal-degree splitting with
//! a deterministic (input-seeded) random source, so every run of the library
//! factors a given polynomial identically.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::poly::IntPoly;

/// A polynomial over F_p; coefficients ascending, reduced into [0, p),
/// canonical (no trailing zeros).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FPoly {
    p: u64,
    coeffs: Vec<u64>,
}

#[inline]
fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a.wrapping_add(b);
    if s >= p || s < a {
        s.wrapping_sub(p)
    } else {
        s
    }
}

#[inline]
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a.wrapping_sub(b).wrapping_add(p)
    }
}

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse of a mod p (p prime, a not divisible by p).
fn invm(a: u64, p: u64) -> u64 {
    // Extended Euclid over i128.
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        let r = r0 - q * r1;
        r0 = r1;
        r1 = r;
        let t = t0 - q * t1;
        t0 = t1;
        t1 = t;
    }
    debug_assert_eq!(r0, 1, "non-invertible element");
    (t0.rem_euclid(p as i128)) as u64
}

/// Deterministic generator used for equal-degree splitting; seeded from the
/// polynomial so factorizations are reproducible across runs and platforms.
struct SplitRng {
    state: u64,
}

impl SplitRng {
    fn seeded_from(f: &FPoly) -> SplitRng {
        // FNV-1a over the modulus and coefficients.
        let mut h = 0xcbf29ce484222325u64;
        let mut eat = |v: u64| {
            for b in v.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        };
        eat(f.p);
        for &c in &f.coeffs {
            eat(c);
        }
        SplitRng {
            state: if h == 0 { 0x9e3779b97f4a7c15 } else { h },
        }
    }

    fn next(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }
}

impl FPoly {
    pub fn from_u64(p: u64, coeffs: &[u64]) -> FPoly {
        debug_assert!(p >= 2);
        let coeffs = coeffs.iter().map(|&c| c % p).collect();
        FPoly { p, coeffs }.trimmed()
    }

    /// Reduces an integer polynomial mod p.
    pub fn from_int_poly(f: &IntPoly, p: u64) -> FPoly {
        debug_assert!(p >= 2);
        let pp = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| {
                let mut r = c % &pp;
                if r.sign() == num_bigint::Sign::Minus {
                    r += &pp;
                }
                // r in [0, p), fits u64
                let (_, digits) = r.to_u64_digits();
                digits.first().copied().unwrap_or(0)
            })
            .collect();
        FPoly { p, coeffs }.trimmed()
    }

    pub fn zero(p: u64) -> FPoly {
        FPoly {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: u64) -> FPoly {
        FPoly {
            p,
            coeffs: vec![1 % p],
        }
        .trimmed()
    }

    pub fn x(p: u64) -> FPoly {
        FPoly {
            p,
            coeffs: vec![0, 1],
        }
    }

    fn trimmed(mut self) -> FPoly {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = addm(mulm(acc, x % self.p, self.p), c, self.p);
        }
        acc
    }

    pub fn add(&self, other: &FPoly) -> FPoly {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| addm(self.coeff(i), other.coeff(i), self.p))
            .collect();
        FPoly { p: self.p, coeffs }.trimmed()
    }

    pub fn sub(&self, other: &FPoly) -> FPoly {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| subm(self.coeff(i), other.coeff(i), self.p))
            .collect();
        FPoly { p: self.p, coeffs }.trimmed()
    }

    pub fn scale(&self, k: u64) -> FPoly {
        let k = k % self.p;
        let coeffs = self.coeffs.iter().map(|&c| mulm(c, k, self.p)).collect();
        FPoly { p: self.p, coeffs }.trimmed()
    }

    pub fn mul(&self, other: &FPoly) -> FPoly {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return FPoly::zero(self.p);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = addm(coeffs[i + j], mulm(a, b, self.p), self.p);
            }
        }
        FPoly { p: self.p, coeffs }.trimmed()
    }

    pub fn pow_usize(&self, mut e: usize) -> FPoly {
        let mut base = self.clone();
        let mut acc = FPoly::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Scales so the leading coefficient becomes 1.
    pub fn monic(&self) -> FPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(invm(self.leading(), self.p))
    }

    /// Euclidean division; `g` may have any nonzero leading coefficient.
    pub fn divrem(&self, g: &FPoly) -> (FPoly, FPoly) {
        debug_assert_eq!(self.p, g.p);
        debug_assert!(!g.is_zero());
        if self.is_zero() || self.degree() < g.degree() {
            return (FPoly::zero(self.p), self.clone());
        }
        let p = self.p;
        let dg = g.degree();
        let linv = invm(g.leading(), p);
        let mut rem = self.coeffs.clone();
        let dq = self.degree() - dg;
        let mut quot = vec![0u64; dq + 1];
        for k in (0..=dq).rev() {
            let top = rem[k + dg];
            if top == 0 {
                continue;
            }
            let q = mulm(top, linv, p);
            quot[k] = q;
            for (j, &gc) in g.coeffs.iter().enumerate() {
                rem[k + j] = subm(rem[k + j], mulm(q, gc, p), p);
            }
        }
        rem.truncate(dg);
        (
            FPoly { p, coeffs: quot }.trimmed(),
            FPoly { p, coeffs: rem }.trimmed(),
        )
    }

    pub fn rem(&self, g: &FPoly) -> FPoly {
        self.divrem(g).1
    }

    /// Exact quotient; panics in debug builds when the division is inexact.
    pub fn div_exact(&self, g: &FPoly) -> FPoly {
        let (q, r) = self.divrem(g);
        debug_assert!(r.is_zero(), "inexact division over F_p");
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &FPoly) -> FPoly {
        debug_assert_eq!(self.p, other.p);
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> FPoly {
        if self.coeffs.len() <= 1 {
            return FPoly::zero(self.p);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulm(c, (i as u64) % self.p, self.p))
            .collect();
        FPoly { p: self.p, coeffs }.trimmed()
    }

    /// self^e mod m, with an arbitrary-precision exponent.
    pub fn pow_mod(&self, e: &BigUint, m: &FPoly) -> FPoly {
        let mut base = self.rem(m);
        let mut acc = FPoly::one(self.p);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
            if i + 1 < bits {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// self^p mod m (Frobenius power).
    pub fn pow_p_mod(&self, m: &FPoly) -> FPoly {
        self.pow_mod(&BigUint::from(self.p), m)
    }

    /// Lift with coefficients in [0, p).
    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Lift with coefficients in the symmetric range (-p/2, p/2].
    pub fn to_int_poly_symmetric(&self) -> IntPoly {
        let half = self.p / 2;
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|&c| {
                    if c > half {
                        BigInt::from(c) - BigInt::from(self.p)
                    } else {
                        BigInt::from(c)
                    }
                })
                .collect(),
        )
    }

    /// Squarefree decomposition: pairwise-coprime squarefree monic g_i with
    /// multiplicities e_i such that self = lc * prod g_i^(e_i).
    pub fn squarefree_decomposition(&self) -> Vec<(FPoly, usize)> {
        let f = self.monic();
        let mut out = Vec::new();
        sff_into(&f, 1, &mut out);
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.coeffs.cmp(&b.0.coeffs)));
        out
    }

    /// Product of the distinct irreducible factors (the radical), monic.
    pub fn radical(&self) -> FPoly {
        let mut r = FPoly::one(self.p);
        for (g, _) in self.squarefree_decomposition() {
            r = r.mul(&g);
        }
        r
    }

    /// Distinct-degree splitting of a squarefree monic polynomial: returns
    /// (product of all irreducible factors of degree d, d), ascending in d.
    pub fn distinct_degree_split(&self) -> Vec<(FPoly, usize)> {
        debug_assert!(self.is_monic());
        let p = self.p;
        let mut rest = self.clone();
        let mut out = Vec::new();
        let mut h = FPoly::x(p);
        let mut d = 0usize;
        while rest.degree() >= 1 {
            d += 1;
            if rest.degree() < 2 * d {
                // What remains is irreducible.
                out.push((rest.clone(), rest.degree()));
                break;
            }
            h = h.pow_p_mod(&rest);
            let g = rest.gcd(&h.sub(&FPoly::x(p)));
            if !g.is_one() {
                rest = rest.div_exact(&g);
                h = h.rem(&rest);
                out.push((g, d));
            }
        }
        out
    }

    /// Degrees (with multiplicity) of the irreducible factors, ascending.
    /// Never uses randomness.
    pub fn factor_degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (g, e) in self.squarefree_decomposition() {
            for (prod, d) in g.distinct_degree_split() {
                let count = prod.degree() / d;
                for _ in 0..count * e {
                    out.push(d);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_irreducible(&self) -> bool {
        if self.degree() == 0 {
            return false;
        }
        if self.degree() == 1 {
            return true;
        }
        let f = self.monic();
        if !f.gcd(&f.derivative()).is_one() {
            return false;
        }
        let split = f.distinct_degree_split();
        split.len() == 1 && split[0].1 == f.degree()
    }

    /// Equal-degree splitting: factors a monic squarefree product of
    /// irreducibles, all of degree d, into those irreducibles.
    pub fn equal_degree_split(&self, d: usize) -> Vec<FPoly> {
        debug_assert!(self.is_monic());
        debug_assert_eq!(self.degree() % d, 0);
        let mut rng = SplitRng::seeded_from(self);
        let mut todo = vec![self.clone()];
        let mut done = Vec::new();
        while let Some(f) = todo.pop() {
            if f.degree() == d {
                done.push(f);
                continue;
            }
            let g = split_once(&f, d, &mut rng);
            let h = f.div_exact(&g);
            todo.push(g);
            todo.push(h);
        }
        done.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        done
    }

    /// Full factorization into monic irreducibles with multiplicities,
    /// sorted by (degree, coefficients); deterministic.
    pub fn factor(&self) -> Vec<(FPoly, usize)> {
        let mut out: Vec<(FPoly, usize)> = Vec::new();
        for (g, e) in self.squarefree_decomposition() {
            for (prod, d) in g.distinct_degree_split() {
                if prod.degree() == d {
                    out.push((prod, e));
                } else {
                    for irr in prod.equal_degree_split(d) {
                        out.push((irr, e));
                    }
                }
            }
        }
        out.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| a.0.coeffs.cmp(&b.0.coeffs))
        });
        out
    }
}

/// Recursive worker for squarefree decomposition in characteristic p.
fn sff_into(f: &FPoly, mult: usize, out: &mut Vec<(FPoly, usize)>) {
    let p = f.p;
    if f.is_constant() {
        return;
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f is a polynomial in x^p; take the p-th root and recurse.
        sff_into(&pth_root(f), mult * p as usize, out);
        return;
    }
    let mut c = f.gcd(&deriv);
    let mut w = f.div_exact(&c);
    let mut i = 1usize;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if !z.is_one() {
            out.push((z, mult * i));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w);
    }
    if !c.is_one() {
        sff_into(&pth_root(&c), mult * p as usize, out);
    }
}

/// p-th root of a polynomial in x^p over the prime field (a^p = a in F_p).
fn pth_root(f: &FPoly) -> FPoly {
    let p = f.p as usize;
    let mut coeffs = Vec::with_capacity(f.coeffs.len() / p + 1);
    let mut i = 0;
    while i < f.coeffs.len() {
        coeffs.push(f.coeffs[i]);
        i += p;
    }
    FPoly { p: f.p, coeffs }.trimmed()
}

/// Finds one proper monic factor of f (product of >= 2 irreducibles of
/// degree d) by Cantor-Zassenhaus splitting.
fn split_once(f: &FPoly, d: usize, rng: &mut SplitRng) -> FPoly {
    let p = f.p;
    loop {
        // Random polynomial of degree < deg f, not constant-zero.
        let mut coeffs: Vec<u64> = (0..f.degree()).map(|_| rng.next() % p).collect();
        if coeffs.iter().all(|&c| c == 0) {
            coeffs[0] = 1;
        }
        let a = FPoly { p, coeffs }.trimmed();
        let g0 = f.gcd(&a);
        if !g0.is_one() && g0.degree() < f.degree() {
            return g0;
        }
        let candidate = if p == 2 {
            // Trace map a + a^2 + a^4 + ... + a^(2^(d-1)) mod f.
            let mut acc = a.clone();
            let mut t = a.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            f.gcd(&acc)
        } else {
            // a^((p^d-1)/2) - 1 splits the roots by quadratic residuosity.
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let b = a.pow_mod(&e, f);
            f.gcd(&b.sub(&FPoly::one(p)))
        };
        if !candidate.is_one() && candidate.degree() < f.degree() {
            return candidate;
        }
    }
}

/// Degrees (with multiplicity) of the irreducible factors of f mod p.
pub fn factor_mod_p(f: &IntPoly, p: u64) -> Vec<usize> {
    FPoly::from_int_poly(f, p).factor_degrees()
}

/// Full factorization of f mod p into monic irreducibles with multiplicity.
pub fn factor_mod_p_full(f: &IntPoly, p: u64) -> Vec<(FPoly, usize)> {
    FPoly::from_int_poly(f, p).monic().factor()
}
