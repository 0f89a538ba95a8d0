//! Exact real-root counting for squarefree integer polynomials via sign
//! variation chains.
//!
//! Chain elements are successive negated remainders, kept in Z by
//! pseudo-division with strictly positive scale factors (a negative scale is
//! compensated by a sign flip) and shrunk by dividing out the (positive)
//! content, so every sign along the chain equals the sign of the rational
//! remainder sequence.
//!
//! A fixed-width i128 path handles the small polynomials that dominate the
//! enumeration workload; any overflow falls back to big-integer arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::IntPoly;

/// Error for inputs outside the squarefree contract.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SturmError {
    /// gcd(f, f') has positive degree (or f is zero).
    NonSquarefree,
}

/// Counts the real roots of a squarefree polynomial.
pub fn count_real_roots(f: &IntPoly) -> Result<usize, SturmError> {
    if f.is_zero() {
        return Err(SturmError::NonSquarefree);
    }
    if f.degree() == 0 {
        return Ok(0);
    }
    if f.degree() == 1 {
        return Ok(1);
    }
    if let Some(outcome) = try_count_i128(f) {
        return outcome;
    }
    let chain = SturmChain::new(f)?;
    Ok(chain.count_all_real_roots())
}

/// A sign-variation chain over Z for root counting and isolation.
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    /// Builds the chain; fails when f is zero or has repeated roots.
    pub fn new(f: &IntPoly) -> Result<SturmChain, SturmError> {
        if f.is_zero() {
            return Err(SturmError::NonSquarefree);
        }
        let mut polys = vec![f.primitive_part()];
        if f.degree() >= 1 {
            let d = f.derivative().primitive_part();
            polys.push(d);
            loop {
                let a = &polys[polys.len() - 2];
                let b = &polys[polys.len() - 1];
                if b.is_zero() || b.degree() == 0 {
                    break;
                }
                let e = a.degree() - b.degree() + 1;
                let r = a.pseudo_rem(b);
                if r.is_zero() {
                    break;
                }
                // pseudo_rem scaled `a` by lc(b)^e; keep the effective
                // multiplier positive, then negate for the chain.
                let flip_back = b.leading().is_negative() && e % 2 == 1;
                let next = if flip_back {
                    r.primitive_part()
                } else {
                    r.primitive_part().neg()
                };
                polys.push(next);
            }
        }
        let last = polys.last().unwrap();
        if f.degree() >= 1 && (last.is_zero() || last.degree() >= 1) {
            return Err(SturmError::NonSquarefree);
        }
        Ok(SturmChain { polys })
    }

    fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
        let mut count = 0;
        let mut prev = 0i8;
        for s in signs {
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    fn sign_at_pos_inf(p: &IntPoly) -> i8 {
        sign_big(&p.leading())
    }

    fn sign_at_neg_inf(p: &IntPoly) -> i8 {
        let s = sign_big(&p.leading());
        if p.degree() % 2 == 1 {
            -s
        } else {
            s
        }
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.polys.iter().map(Self::sign_at_neg_inf))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.polys.iter().map(Self::sign_at_pos_inf))
    }

    /// Sign variations of the chain evaluated at a rational point.
    pub fn variations_at(&self, x: &BigRational) -> usize {
        let num = x.numer();
        let den = x.denom(); // > 0 by normalization
        Self::variations(self.polys.iter().map(|p| sign_big(&eval_hom(p, num, den))))
    }

    /// Number of real roots on the whole line.
    pub fn count_all_real_roots(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }

    /// Number of roots in the half-open interval (a, b]; requires a <= b.
    pub fn count_roots_in(&self, a: &BigRational, b: &BigRational) -> usize {
        debug_assert!(a <= b);
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of roots in (a, +inf).
    pub fn count_roots_above(&self, a: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at_pos_inf()
    }
}

fn sign_big(v: &BigInt) -> i8 {
    match v.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Homogeneous evaluation: den^deg(p) * p(num/den), exact in Z.
fn eval_hom(p: &IntPoly, num: &BigInt, den: &BigInt) -> BigInt {
    if p.is_zero() {
        return BigInt::zero();
    }
    // Horner with a den power folded into each step:
    // acc_i = acc_{i+1}*num + c_i*den^(n-i).
    let n = p.degree();
    let mut den_pows = Vec::with_capacity(n + 1);
    let mut dp = BigInt::from(1);
    for _ in 0..=n {
        den_pows.push(dp.clone());
        dp *= den;
    }
    let mut total = BigInt::zero();
    for i in (0..=n).rev() {
        total = total * num + p.coeff(i) * &den_pows[n - i];
    }
    total
}

// ---------- fixed-width fast path ----------

fn trim_i128(v: &mut Vec<i128>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn content_i128(v: &[i128]) -> i128 {
    let mut g: i128 = 0;
    for &c in v {
        let mut a = g.abs();
        let mut b = c.abs();
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        g = a;
        if g == 1 {
            break;
        }
    }
    g
}

/// Pseudo-remainder over i128 with overflow detection.
fn pseudo_rem_i128(a: &[i128], b: &[i128]) -> Option<Vec<i128>> {
    let db = b.len() - 1;
    let lb = b[db];
    let mut r: Vec<i128> = a.to_vec();
    let mut e = (a.len() - 1) - db + 1;
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr];
        let mut next = vec![0i128; dr];
        for i in 0..dr {
            next[i] = r[i].checked_mul(lb)?;
        }
        let off = dr - db;
        for j in 0..db {
            let t = lr.checked_mul(b[j])?;
            next[off + j] = next[off + j].checked_sub(t)?;
        }
        trim_i128(&mut next);
        r = next;
        e -= 1;
        if r.is_empty() {
            break;
        }
    }
    if e > 0 && !r.is_empty() {
        let m = lb.checked_pow(e as u32)?;
        for c in &mut r {
            *c = c.checked_mul(m)?;
        }
    }
    Some(r)
}

/// Fast path for the total real-root count. Returns None on overflow
/// (caller falls back to big integers).
fn try_count_i128(f: &IntPoly) -> Option<Result<usize, SturmError>> {
    // Convert; bail out if any coefficient exceeds ~2^96 (headroom for the
    // chain's intermediate products).
    const LIMIT: i128 = 1 << 96;
    let mut cur: Vec<i128> = Vec::with_capacity(f.degree() + 1);
    for c in f.coeffs() {
        let v = big_to_i128(c)?;
        if v.checked_abs().map_or(true, |a| a > LIMIT) {
            return None;
        }
        cur.push(v);
    }
    let g = content_i128(&cur);
    if g > 1 {
        for c in &mut cur {
            *c /= g;
        }
    }
    // Derivative.
    let mut der: Vec<i128> = cur
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c.checked_mul(i as i128))
        .collect::<Option<Vec<_>>>()?;
    trim_i128(&mut der);
    let gd = content_i128(&der);
    if gd > 1 {
        for c in &mut der {
            *c /= gd;
        }
    }

    let mut chain: Vec<Vec<i128>> = vec![cur, der];
    loop {
        let b = &chain[chain.len() - 1];
        if b.is_empty() || b.len() == 1 {
            break;
        }
        let a = &chain[chain.len() - 2];
        let e = (a.len() - 1) - (b.len() - 1) + 1;
        let mut r = pseudo_rem_i128(a, b)?;
        if r.is_empty() {
            break;
        }
        let c = content_i128(&r);
        if c > 1 {
            for v in &mut r {
                *v /= c;
            }
        }
        let lb_neg = b[b.len() - 1] < 0;
        let flip_back = lb_neg && e % 2 == 1;
        if !flip_back {
            for v in &mut r {
                *v = v.checked_neg()?;
            }
        }
        chain.push(r);
    }
    let last = chain.last().unwrap();
    if last.is_empty() || last.len() >= 2 {
        return Some(Err(SturmError::NonSquarefree));
    }

    let sign = |v: i128| -> i8 {
        match v.cmp(&0) {
            core::cmp::Ordering::Less => -1,
            core::cmp::Ordering::Equal => 0,
            core::cmp::Ordering::Greater => 1,
        }
    };
    let at_pos = SturmChain::variations(chain.iter().map(|p| sign(*p.last().unwrap())));
    let at_neg = SturmChain::variations(chain.iter().map(|p| {
        let s = sign(*p.last().unwrap());
        if (p.len() - 1) % 2 == 1 {
            -s
        } else {
            s
        }
    }));
    Some(Ok(at_neg - at_pos))
}

fn big_to_i128(v: &BigInt) -> Option<i128> {
    use num_traits::ToPrimitive;
    v.to_i128()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(v: &[i64]) -> IntPoly {
        IntPoly::from_i64(v)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn counts_for_quadratics() {
        assert_eq!(count_real_roots(&p(&[-5, 0, 1])), Ok(2)); // x^2-5
        assert_eq!(count_real_roots(&p(&[5, 0, 1])), Ok(0)); // x^2+5
        assert_eq!(count_real_roots(&p(&[3, 1])), Ok(1));
    }

    #[test]
    fn counts_for_known_quartics() {
        assert_eq!(count_real_roots(&p(&[-2, 0, 0, 0, 1])), Ok(2)); // x^4-2
        assert_eq!(count_real_roots(&p(&[1, 0, 0, 0, 1])), Ok(0)); // x^4+1
        assert_eq!(count_real_roots(&p(&[1, -3, 0, 0, 1])), Ok(2)); // x^4-3x+1
        // (x^2-2)(x^2-3) has four real roots.
        assert_eq!(count_real_roots(&p(&[6, 0, -5, 0, 1])), Ok(4));
    }

    #[test]
    fn counts_for_quintics() {
        assert_eq!(count_real_roots(&p(&[-1, -1, 0, 0, 0, 1])), Ok(1)); // x^5-x-1
        assert_eq!(count_real_roots(&p(&[-2, 0, 0, 0, 0, 1])), Ok(1)); // x^5-2
        assert_eq!(count_real_roots(&p(&[12, -5, 0, 0, 0, 1])), Ok(1)); // r1=1
        // minimal polynomial of 2cos(2pi/11): all five roots real
        assert_eq!(count_real_roots(&p(&[1, 3, -3, -4, 1, 1])), Ok(5));
    }

    #[test]
    fn totally_real_cyclotomic_cosine_fields() {
        // minimal polynomial of 2cos(2pi/7): x^3+x^2-2x-1, all roots real.
        assert_eq!(count_real_roots(&p(&[-1, -2, 1, 1])), Ok(3));
    }

    #[test]
    fn rejects_repeated_roots() {
        let sq = p(&[1, 1]).mul(&p(&[1, 1]));
        assert_eq!(count_real_roots(&sq), Err(SturmError::NonSquarefree));
        assert_eq!(count_real_roots(&IntPoly::zero()), Err(SturmError::NonSquarefree));
    }

    #[test]
    fn interval_counts() {
        // x^2-5: roots +-sqrt(5) ~ +-2.236
        let chain = SturmChain::new(&p(&[-5, 0, 1])).unwrap();
        assert_eq!(chain.count_all_real_roots(), 2);
        assert_eq!(chain.count_roots_in(&rat(0, 1), &rat(3, 1)), 1);
        assert_eq!(chain.count_roots_in(&rat(-3, 1), &rat(3, 1)), 2);
        assert_eq!(chain.count_roots_in(&rat(2, 1), &rat(9, 4)), 1); // 2.236 in (2, 2.25]
        assert_eq!(chain.count_roots_in(&rat(9, 4), &rat(3, 1)), 0);
        assert_eq!(chain.count_roots_above(&rat(0, 1)), 1);
    }

    #[test]
    fn interval_counts_qubic_with_three_roots() {
        // x^3 - 4x = x(x-2)(x+2) is squarefree with roots -2, 0, 2.
        let chain = SturmChain::new(&p(&[0, -4, 0, 1])).unwrap();
        assert_eq!(chain.count_all_real_roots(), 3);
        // Half-open intervals include the right endpoint.
        assert_eq!(chain.count_roots_in(&rat(-2, 1), &rat(0, 1)), 1); // just 0
        assert_eq!(chain.count_roots_in(&rat(-3, 1), &rat(0, 1)), 2); // -2 and 0
        assert_eq!(chain.count_roots_in(&rat(0, 1), &rat(2, 1)), 1);
        assert_eq!(chain.count_roots_in(&rat(0, 1), &rat(1, 1)), 0);
    }

    #[test]
    fn fast_and_big_paths_agree() {
        // Polynomials chosen to exercise both routes.
        let polys = [
            p(&[-1, -1, 0, 0, 0, 1]),
            p(&[6, 0, -5, 0, 1]),
            p(&[1, 1, 1, 1, 1]),
            p(&[-121, 0, 33, 0, -11, 0, 1]),
            p(&[17, -9, 3, -1, 4, 2, 1]),
        ];
        for f in &polys {
            let fast = try_count_i128(f).expect("small inputs stay in range");
            let chain = SturmChain::new(f).map(|c| c.count_all_real_roots());
            match (fast, chain) {
                (Ok(a), Ok(b)) => assert_eq!(a, b, "{f:?}"),
                (Err(_), Err(_)) => {}
                other => panic!("paths disagree on {f:?}: {other:?}"),
            }
        }
    }
}
