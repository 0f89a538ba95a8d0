//! Dense univariate polynomials over Z.
//!
//! Coefficients are stored in ascending order of degree and the
//! representation is canonical: the last element, if any, is nonzero.
//! The zero polynomial is the empty vector.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    /// Coefficients, ascending by degree; empty means the zero polynomial,
    /// otherwise the last entry is nonzero.
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            first = false;
            match i {
                0 => write!(f, "{}", a)?,
                1 if a.is_one() => write!(f, "x")?,
                1 => write!(f, "{}*x", a)?,
                _ if a.is_one() => write!(f, "x^{}", i)?,
                _ => write!(f, "{}*x^{}", a, i)?,
            }
        }
        Ok(())
    }
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Builds a polynomial from machine-integer coefficients, ascending by degree.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial x.
    pub fn x() -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// Monic polynomial of degree `n` from its lower coefficients
    /// `a_0, ..., a_{n-1}`.
    pub fn monic_with_lower(lower: &[BigInt]) -> Self {
        let mut coeffs: Vec<BigInt> = lower.to_vec();
        coeffs.push(BigInt::one());
        IntPoly::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree. The zero polynomial reports 0; callers branch on `is_zero`
    /// first where the distinction matters.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Evaluates at an integer point by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        if k.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiplies by x^k.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Substitutes x -> x + a.
    pub fn translate(&self, a: &BigInt) -> IntPoly {
        let mut acc = IntPoly::zero();
        let shift = IntPoly::from_coeffs(vec![a.clone(), BigInt::one()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&shift);
            acc = acc.add(&IntPoly::from_coeffs(vec![c.clone()]));
        }
        acc
    }

    /// Substitutes x -> -x.
    pub fn reflect(&self) -> IntPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    /// Content: gcd of all coefficients (nonnegative; 0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `k`, which must divide each one exactly.
    pub fn div_exact(&self, k: &BigInt) -> IntPoly {
        debug_assert!(!k.is_zero());
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(k);
                    debug_assert!(r.is_zero(), "non-exact coefficient division");
                    q
                })
                .collect(),
        }
    }

    /// Primitive part; the sign of the leading coefficient is preserved.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        self.div_exact(&c)
    }

    /// Exact polynomial division, returning `None` when `other` does not
    /// divide `self` over Z.
    pub fn div_exact_poly(&self, other: &IntPoly) -> Option<IntPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.degree() < other.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dq = self.degree() - other.degree();
        let mut quot = vec![BigInt::zero(); dq + 1];
        let lead = other.leading();
        for k in (0..=dq).rev() {
            let top = rem[k + other.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in other.coeffs.iter().enumerate() {
                let t = &q * c;
                rem[k + j] -= t;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Pseudo-remainder R satisfying
    /// `lc(g)^(deg f - deg g + 1) * f = Q*g + R` with `deg R < deg g`.
    /// Requires `deg f >= deg g`; returns `self` unchanged otherwise.
    pub fn pseudo_rem(&self, g: &IntPoly) -> IntPoly {
        debug_assert!(!g.is_zero());
        if self.is_zero() || self.degree() < g.degree() {
            return self.clone();
        }
        let dg = g.degree();
        let lg = g.leading();
        let mut r = self.clone();
        let mut e = self.degree() - dg + 1;
        while !r.is_zero() && r.degree() >= dg {
            let dr = r.degree();
            let lr = r.leading();
            // r <- lc(g)*r - lr * x^(dr-dg) * g; the top terms cancel.
            let mut coeffs = vec![BigInt::zero(); dr];
            for (i, c) in coeffs.iter_mut().enumerate() {
                *c = r.coeff(i) * &lg;
            }
            let off = dr - dg;
            for (j, gc) in g.coeffs.iter().enumerate().take(dg) {
                coeffs[off + j] -= &lr * gc;
            }
            r = IntPoly::from_coeffs(coeffs);
            e -= 1;
        }
        if e > 0 {
            r.scale(&num_traits::pow::pow(lg, e))
        } else {
            r
        }
    }

    /// Greatest common divisor over Z via the primitive pseudo-remainder
    /// sequence; the result carries the gcd of the two contents and has a
    /// nonnegative leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.abs_poly();
        }
        if other.is_zero() {
            return self.abs_poly();
        }
        let cont = self.content().gcd(&other.content());
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.positive_primitive().scale(&cont)
    }

    fn positive_primitive(&self) -> IntPoly {
        let p = self.primitive_part();
        if p.leading().is_negative() {
            p.neg()
        } else {
            p
        }
    }

    fn abs_poly(&self) -> IntPoly {
        if self.leading().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// True when gcd(f, f') is constant, i.e. no repeated complex roots.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.degree() <= 1 {
            return true;
        }
        self.gcd(&self.derivative()).is_constant()
    }

    /// Resultant Res(f, g), exact over Z.
    pub fn resultant(&self, other: &IntPoly) -> BigInt {
        resultant_prs(self, other)
    }

    /// Discriminant of a monic polynomial: (-1)^(n(n-1)/2) * Res(f, f').
    pub fn discriminant(&self) -> BigInt {
        debug_assert!(self.is_monic(), "discriminant requires monic input here");
        let n = self.degree();
        if n == 0 {
            return BigInt::one();
        }
        let res = resultant_prs(self, &self.derivative());
        if (n * (n - 1) / 2) % 2 == 1 {
            -res
        } else {
            res
        }
    }

    /// Squared l2 norm of the coefficient vector.
    pub fn norm2_sq(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Max |coefficient|.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

/// Exact resultant via the subresultant pseudo-remainder sequence
/// (the classical g/h bookkeeping keeps every division exact).
fn resultant_prs(f: &IntPoly, g: &IntPoly) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    if f.is_constant() {
        return num_traits::pow::pow(f.leading(), g.degree());
    }
    if g.is_constant() {
        return num_traits::pow::pow(g.leading(), f.degree());
    }

    let f_cont = f.content();
    let g_cont = g.content();
    let mut a = f.div_exact(&f_cont);
    let mut b = g.div_exact(&g_cont);
    // Res(c*A, B) = c^deg(B) * Res(A, B) and symmetrically.
    let t = num_traits::pow::pow(f_cont, g.degree()) * num_traits::pow::pow(g_cont, f.degree());

    let mut sign = 1i8;
    if a.degree() < b.degree() {
        if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
            sign = -sign;
        }
        core::mem::swap(&mut a, &mut b);
    }

    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    while b.degree() > 0 {
        let delta = a.degree() - b.degree();
        if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            // Nontrivial common factor of positive degree.
            return BigInt::zero();
        }
        let denom = &gg * num_traits::pow::pow(h.clone(), delta);
        b = r.div_exact(&denom);
        gg = a.leading();
        h = match delta {
            0 => h,
            1 => gg.clone(),
            _ => exact_div(
                num_traits::pow::pow(gg.clone(), delta),
                num_traits::pow::pow(h, delta - 1),
            ),
        };
    }
    // b is now a nonzero constant.
    let da = a.degree();
    let hh = if da == 0 {
        BigInt::one()
    } else {
        exact_div(
            num_traits::pow::pow(b.leading(), da),
            num_traits::pow::pow(h, da - 1),
        )
    };
    let res = t * hh;
    if sign < 0 {
        -res
    } else {
        res
    }
}

fn exact_div(num: BigInt, den: BigInt) -> BigInt {
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero(), "inexact division in resultant bookkeeping");
    q
}
