//! Dyadic rationals (m * 2^e), exact intervals over them, and rectangular
//! complex boxes.
//!
//! Ring operations are exact; mantissa growth is controlled by explicit
//! outward-rounding (`compress`). Division is the only inherently inexact
//! operation and always takes a direction, so interval bounds stay true
//! bounds. Every f64 that enters is converted exactly (all finite doubles
//! are dyadic); converting back to f64 is for display and search steering
//! only, never for decisions.

use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// An exact binary rational m * 2^e with m odd or zero (canonical form).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    m: BigInt,
    e: i64,
}

impl Dyadic {
    pub fn new(m: BigInt, e: i64) -> Dyadic {
        Dyadic { m, e }.normalized()
    }

    fn normalized(mut self) -> Dyadic {
        if self.m.is_zero() {
            self.e = 0;
            return self;
        }
        let tz = self.m.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.m >>= tz;
            self.e += tz as i64;
        }
        self
    }

    pub fn zero() -> Dyadic {
        Dyadic {
            m: BigInt::zero(),
            e: 0,
        }
    }

    pub fn one() -> Dyadic {
        Dyadic {
            m: BigInt::from(1),
            e: 0,
        }
    }

    pub fn from_bigint(v: &BigInt) -> Dyadic {
        Dyadic::new(v.clone(), 0)
    }

    pub fn from_i64(v: i64) -> Dyadic {
        Dyadic::new(BigInt::from(v), 0)
    }

    /// Exact power of two, 2^e.
    pub fn pow2(e: i64) -> Dyadic {
        Dyadic {
            m: BigInt::from(1),
            e,
        }
    }

    /// Exact conversion of a finite f64.
    pub fn from_f64(v: f64) -> Dyadic {
        debug_assert!(v.is_finite());
        if v == 0.0 {
            return Dyadic::zero();
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & 0xf_ffff_ffff_ffff;
        let (mant, e) = if exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), exp - 1075)
        };
        Dyadic::new(BigInt::from(sign) * BigInt::from(mant), e)
    }

    /// Nearest-ish f64 (rounding not carefully controlled; display only).
    /// Exact conversion to a rational number.
    pub fn to_rational(&self) -> BigRational {
        if self.e >= 0 {
            BigRational::from_integer(&self.m << self.e as usize)
        } else {
            BigRational::new(self.m.clone(), BigInt::from(1u32) << ((-self.e) as usize))
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.m.is_zero() {
            return 0.0;
        }
        let bits = self.m.bits() as i64;
        // Keep the top 53 bits.
        let drop = (bits - 53).max(0);
        let top = (&self.m >> drop as u64).to_i64().unwrap_or(i64::MAX) as f64;
        let scale = self.e + drop;
        top * pow2_f64(scale)
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn signum(&self) -> i8 {
        match self.m.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            m: -&self.m,
            e: self.e,
        }
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            m: self.m.abs(),
            e: self.e,
        }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.e.min(other.e);
        let a = &self.m << (self.e - e) as u64;
        let b = &other.m << (other.e - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() || other.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            m: &self.m * &other.m,
            e: self.e + other.e,
        }
    }

    pub fn mul_i64(&self, k: i64) -> Dyadic {
        Dyadic::new(&self.m * BigInt::from(k), self.e)
    }

    /// Multiplies by 2^k.
    pub fn scale2(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            m: self.m.clone(),
            e: self.e + k,
        }
    }

    pub fn square(&self) -> Dyadic {
        self.mul(self)
    }

    /// Number of significant mantissa bits.
    pub fn mantissa_bits(&self) -> u64 {
        self.m.bits()
    }

    /// An integer L with 2^(L-1) <= |self| < 2^L (None for zero).
    pub fn magnitude_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.m.bits() as i64 + self.e)
        }
    }

    /// Largest dyadic with at most `bits` mantissa bits that is <= self.
    pub fn round_down(&self, bits: u64) -> Dyadic {
        self.round_dir(bits, false)
    }

    /// Smallest dyadic with at most `bits` mantissa bits that is >= self.
    pub fn round_up(&self, bits: u64) -> Dyadic {
        self.round_dir(bits, true)
    }

    fn round_dir(&self, bits: u64, up: bool) -> Dyadic {
        let have = self.m.bits();
        if have <= bits {
            return self.clone();
        }
        let drop = have - bits;
        let m = if up {
            // ceil(m / 2^drop) = -floor(-m / 2^drop); BigInt >> floors.
            -((-&self.m) >> drop)
        } else {
            &self.m >> drop
        };
        Dyadic::new(m, self.e + drop as i64)
    }

    /// Upper bound for sqrt(self) with about `prec` extra bits; self >= 0.
    pub fn sqrt_upper(&self, prec: u64) -> Dyadic {
        self.sqrt_dir(prec, true)
    }

    /// Lower bound for sqrt(self) with about `prec` extra bits; self >= 0.
    pub fn sqrt_lower(&self, prec: u64) -> Dyadic {
        self.sqrt_dir(prec, false)
    }

    fn sqrt_dir(&self, prec: u64, up: bool) -> Dyadic {
        debug_assert!(self.signum() >= 0);
        if self.is_zero() {
            return Dyadic::zero();
        }
        let mut m = self.m.magnitude().clone();
        let mut e = self.e;
        if e % 2 != 0 {
            m <<= 1u32;
            e -= 1;
        }
        // self = m * 2^e with e even; shift in 2*prec bits for accuracy.
        let shifted = &m << (2 * prec);
        let root = shifted.sqrt(); // floor
        let half_e = e / 2 - prec as i64;
        if up {
            Dyadic::new(BigInt::from(root + 1u32), half_e)
        } else {
            Dyadic::new(BigInt::from(root), half_e)
        }
    }

    /// Directed division: result >= self/other when `up`, <= otherwise,
    /// with about `prec` significant bits of accuracy. `other` nonzero.
    pub fn div_dir(&self, other: &Dyadic, prec: u64, up: bool) -> Dyadic {
        debug_assert!(!other.is_zero());
        if self.is_zero() {
            return Dyadic::zero();
        }
        let shift = prec + other.m.bits();
        let num = &self.m << shift;
        let (q, r) = num_integer::Integer::div_mod_floor(&num, &other.m);
        // div_mod_floor: q = floor(num/den) regardless of signs; remainder
        // has the divisor's sign, with q*den + r = num.
        let q = if up && !r.is_zero() { q + 1 } else { q };
        Dyadic::new(q, self.e - other.e - shift as i64)
    }

    /// Exact comparison.
    pub fn cmp_exact(&self, other: &Dyadic) -> Ordering {
        let sa = self.signum();
        let sb = other.signum();
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        // Same nonzero sign: magnitude-exponent shortcut.
        let la = self.magnitude_exponent().unwrap();
        let lb = other.magnitude_exponent().unwrap();
        if la != lb {
            let mag = la.cmp(&lb);
            return if sa > 0 { mag } else { mag.reverse() };
        }
        let e = self.e.min(other.e);
        let a = &self.m << (self.e - e) as u64;
        let b = &other.m << (other.e - e) as u64;
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

fn pow2_f64(e: i64) -> f64 {
    // Exact while in range; saturates to 0/inf outside, which is fine for
    // display purposes.
    if e >= 1024 {
        f64::INFINITY
    } else if e <= -1075 {
        0.0
    } else if e >= -1022 {
        f64::from_bits(((e + 1023) as u64) << 52)
    } else {
        // subnormal range
        f64::from_bits(1u64 << (e + 1074) as u64)
    }
}

/// A closed interval [lo, hi] over dyadics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl Interval {
    pub fn point(v: Dyadic) -> Interval {
        Interval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn new(lo: Dyadic, hi: Dyadic) -> Interval {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn zero() -> Interval {
        Interval::point(Dyadic::zero())
    }

    pub fn from_i64(v: i64) -> Interval {
        Interval::point(Dyadic::from_i64(v))
    }

    pub fn from_bigint(v: &BigInt) -> Interval {
        Interval::point(Dyadic::from_bigint(v))
    }

    /// Smallest interval containing both f64 endpoints (exact conversion).
    pub fn from_f64_pair(lo: f64, hi: f64) -> Interval {
        Interval::new(Dyadic::from_f64(lo), Dyadic::from_f64(hi))
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn midpoint(&self) -> Dyadic {
        self.lo.add(&self.hi).scale2(-1)
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    pub fn contains(&self, v: &Dyadic) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.lo.signum() > 0
    }

    pub fn is_strictly_negative(&self) -> bool {
        self.hi.signum() < 0
    }

    /// Definite sign of every point in the interval, if one exists.
    pub fn definite_sign(&self) -> Option<i8> {
        if self.is_strictly_positive() {
            Some(1)
        } else if self.is_strictly_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval {
            lo: self.lo.add(&o.lo),
            hi: self.hi.add(&o.hi),
        }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let c = [
            self.lo.mul(&o.lo),
            self.lo.mul(&o.hi),
            self.hi.mul(&o.lo),
            self.hi.mul(&o.hi),
        ];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if *v < lo {
                lo = v.clone();
            }
            if *v > hi {
                hi = v.clone();
            }
        }
        Interval { lo, hi }
    }

    pub fn mul_i64(&self, k: i64) -> Interval {
        if k >= 0 {
            Interval {
                lo: self.lo.mul_i64(k),
                hi: self.hi.mul_i64(k),
            }
        } else {
            Interval {
                lo: self.hi.mul_i64(k),
                hi: self.lo.mul_i64(k),
            }
        }
    }

    pub fn square(&self) -> Interval {
        let a = self.lo.square();
        let b = self.hi.square();
        let hi = if a > b { a.clone() } else { b.clone() };
        let lo = if self.contains_zero() {
            Dyadic::zero()
        } else if a < b {
            a
        } else {
            b
        };
        Interval { lo, hi }
    }

    /// Upper bound of |x| over the interval.
    pub fn abs_upper(&self) -> Dyadic {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a > b {
            a
        } else {
            b
        }
    }

    /// Lower bound of |x| over the interval (zero if it straddles 0).
    pub fn abs_lower(&self) -> Dyadic {
        if self.contains_zero() {
            return Dyadic::zero();
        }
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a < b {
            a
        } else {
            b
        }
    }

    /// Interval division, outward rounded to `prec` bits; o must not
    /// contain zero.
    pub fn div(&self, o: &Interval, prec: u64) -> Interval {
        debug_assert!(!o.contains_zero());
        let cands_lo = [
            self.lo.div_dir(&o.lo, prec, false),
            self.lo.div_dir(&o.hi, prec, false),
            self.hi.div_dir(&o.lo, prec, false),
            self.hi.div_dir(&o.hi, prec, false),
        ];
        let cands_hi = [
            self.lo.div_dir(&o.lo, prec, true),
            self.lo.div_dir(&o.hi, prec, true),
            self.hi.div_dir(&o.lo, prec, true),
            self.hi.div_dir(&o.hi, prec, true),
        ];
        let lo = cands_lo.iter().min().unwrap().clone();
        let hi = cands_hi.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    /// Outward rounding of both endpoints to at most `bits` mantissa bits.
    pub fn compress(&self, bits: u64) -> Interval {
        Interval {
            lo: self.lo.round_down(bits),
            hi: self.hi.round_up(bits),
        }
    }

    /// Convex hull.
    pub fn hull(&self, o: &Interval) -> Interval {
        Interval {
            lo: if self.lo < o.lo {
                self.lo.clone()
            } else {
                o.lo.clone()
            },
            hi: if self.hi > o.hi {
                self.hi.clone()
            } else {
                o.hi.clone()
            },
        }
    }

    /// The unique integer in the interval, if there is exactly one.
    pub fn unique_integer(&self) -> Option<BigInt> {
        let lo_int = dyadic_ceil_int(&self.lo);
        let hi_int = dyadic_floor_int(&self.hi);
        if lo_int == hi_int {
            Some(lo_int)
        } else {
            None
        }
    }
}

/// floor of a dyadic as an integer.
pub fn dyadic_floor_int(v: &Dyadic) -> BigInt {
    if v.e >= 0 {
        &v.m << v.e as u64
    } else {
        &v.m >> (-v.e) as u64 // BigInt shr floors
    }
}

/// ceil of a dyadic as an integer.
pub fn dyadic_ceil_int(v: &Dyadic) -> BigInt {
    -dyadic_floor_int(&v.neg())
}

/// Rectangular complex interval: re + i*im with both parts intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CBox {
    pub re: Interval,
    pub im: Interval,
}

impl CBox {
    pub fn point(re: Dyadic, im: Dyadic) -> CBox {
        CBox {
            re: Interval::point(re),
            im: Interval::point(im),
        }
    }

    pub fn from_f64(re: f64, im: f64) -> CBox {
        CBox::point(Dyadic::from_f64(re), Dyadic::from_f64(im))
    }

    pub fn zero() -> CBox {
        CBox {
            re: Interval::zero(),
            im: Interval::zero(),
        }
    }

    pub fn real(i: Interval) -> CBox {
        CBox {
            re: i,
            im: Interval::zero(),
        }
    }

    pub fn conj(&self) -> CBox {
        CBox {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn neg(&self) -> CBox {
        CBox {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn add(&self, o: &CBox) -> CBox {
        CBox {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &CBox) -> CBox {
        CBox {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    pub fn mul(&self, o: &CBox) -> CBox {
        CBox {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn square(&self) -> CBox {
        // (a+bi)^2 = a^2-b^2 + 2abi; using interval squares tightens re.
        CBox {
            re: self.re.square().sub(&self.im.square()),
            im: self.re.mul(&self.im).mul_i64(2),
        }
    }

    pub fn add_real(&self, v: &Interval) -> CBox {
        CBox {
            re: self.re.add(v),
            im: self.im.clone(),
        }
    }

    /// |z|^2 as an interval.
    pub fn norm_sq(&self) -> Interval {
        self.re.square().add(&self.im.square())
    }

    /// Complex division with outward rounding; the divisor box must
    /// exclude zero (its |.|^2 interval must be strictly positive).
    pub fn div(&self, o: &CBox, prec: u64) -> CBox {
        let den = o.norm_sq();
        debug_assert!(den.is_strictly_positive());
        let num = self.mul(&o.conj());
        CBox {
            re: num.re.div(&den, prec),
            im: num.im.div(&den, prec),
        }
    }

    pub fn compress(&self, bits: u64) -> CBox {
        CBox {
            re: self.re.compress(bits),
            im: self.im.compress(bits),
        }
    }

    /// Max of the two component widths.
    pub fn width(&self) -> Dyadic {
        let wr = self.re.width();
        let wi = self.im.width();
        if wr > wi {
            wr
        } else {
            wi
        }
    }

    pub fn mid(&self) -> (Dyadic, Dyadic) {
        (self.re.midpoint(), self.im.midpoint())
    }

    /// Evaluates a polynomial with integer coefficients on the box.
    pub fn eval_int_poly(&self, coeffs: &[BigInt]) -> CBox {
        let mut acc = CBox::zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(self).add_real(&Interval::from_bigint(c));
        }
        acc
    }
}

/// Product of a list of complex boxes.
pub fn cbox_product(items: &[CBox]) -> CBox {
    let mut acc = CBox::point(Dyadic::one(), Dyadic::zero());
    for it in items {
        acc = acc.mul(it);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: f64) -> Dyadic {
        Dyadic::from_f64(v)
    }

    #[test]
    fn f64_roundtrip_is_exact_for_dyadics() {
        for v in [0.0, 1.0, -1.5, 0.375, 1048576.25, -3.0e-9] {
            let x = Dyadic::from_f64(v);
            assert_eq!(x.to_f64(), v);
        }
    }

    #[test]
    fn arithmetic_matches_rationals() {
        let a = d(1.5);
        let b = d(0.25);
        assert_eq!(a.add(&b), d(1.75));
        assert_eq!(a.sub(&b), d(1.25));
        assert_eq!(a.mul(&b), d(0.375));
        assert_eq!(a.square(), d(2.25));
        assert_eq!(a.scale2(2), d(6.0));
        assert_eq!(a.mul_i64(-3), d(-4.5));
    }

    #[test]
    fn ordering_with_mixed_exponents() {
        assert!(d(0.9999) < d(1.0));
        assert!(Dyadic::pow2(-100) > Dyadic::zero());
        assert!(Dyadic::pow2(100) > Dyadic::from_i64(1_000_000));
        assert!(d(-2.0) < d(-1.0));
        assert_eq!(d(2.0).cmp_exact(&Dyadic::pow2(1)), Ordering::Equal);
    }

    #[test]
    fn rounding_directions() {
        let x = Dyadic::new(BigInt::from(0b10110111), 0); // 183
        let down = x.round_down(4);
        let up = x.round_up(4);
        assert!(down <= x && x <= up);
        assert!(down.mantissa_bits() <= 4 && up.mantissa_bits() <= 5);
        let y = x.neg();
        assert!(y.round_down(4) <= y && y <= y.round_up(4));
    }

    #[test]
    fn directed_division_brackets_quotient() {
        let a = d(1.0);
        let b = d(3.0);
        let lo = a.div_dir(&b, 60, false);
        let hi = a.div_dir(&b, 60, true);
        assert!(lo < hi);
        // 3*lo <= 1 <= 3*hi
        assert!(lo.mul(&b) <= d(1.0));
        assert!(hi.mul(&b) >= d(1.0));
        // and the gap is tiny
        assert!(hi.sub(&lo) < Dyadic::pow2(-58));
    }

    #[test]
    fn interval_mul_and_square() {
        let a = Interval::new(d(-1.0), d(2.0));
        let b = Interval::new(d(3.0), d(4.0));
        let m = a.mul(&b);
        assert_eq!(m.lo, d(-4.0));
        assert_eq!(m.hi, d(8.0));
        let s = a.square();
        assert_eq!(s.lo, d(0.0));
        assert_eq!(s.hi, d(4.0));
    }

    #[test]
    fn interval_division_contains_truth() {
        let a = Interval::new(d(1.0), d(2.0));
        let b = Interval::new(d(3.0), d(4.0));
        let q = a.div(&b, 50);
        // True range is [1/4, 2/3]: check lo <= 1/4 and 3*hi >= 2 exactly.
        assert!(q.lo <= d(0.25));
        assert!(q.hi.mul_i64(3) >= d(2.0));
        // Bounds stay tight.
        assert!(q.hi.sub(&q.lo).to_f64() < 2.0 / 3.0 - 0.25 + 1e-9);
    }

    #[test]
    fn unique_integer_detection() {
        let i = Interval::new(d(2.9), d(3.1));
        assert_eq!(i.unique_integer(), Some(BigInt::from(3)));
        let j = Interval::new(d(2.9), d(4.1));
        assert_eq!(j.unique_integer(), None);
        let k = Interval::new(d(-0.2), d(0.3));
        assert_eq!(k.unique_integer(), Some(BigInt::from(0)));
        let neg = Interval::new(d(-3.4), d(-2.8));
        assert_eq!(neg.unique_integer(), Some(BigInt::from(-3)));
    }

    #[test]
    fn floor_ceil_integers() {
        assert_eq!(dyadic_floor_int(&d(2.5)), BigInt::from(2));
        assert_eq!(dyadic_ceil_int(&d(2.5)), BigInt::from(3));
        assert_eq!(dyadic_floor_int(&d(-2.5)), BigInt::from(-3));
        assert_eq!(dyadic_ceil_int(&d(-2.5)), BigInt::from(-2));
        assert_eq!(dyadic_floor_int(&d(4.0)), BigInt::from(4));
        assert_eq!(dyadic_ceil_int(&d(4.0)), BigInt::from(4));
    }

    #[test]
    fn complex_box_mul_contains_product() {
        // (1+2i)(3-i) = 5+5i
        let a = CBox::from_f64(1.0, 2.0);
        let b = CBox::from_f64(3.0, -1.0);
        let prod = a.mul(&b);
        assert!(prod.re.contains(&d(5.0)));
        assert!(prod.im.contains(&d(5.0)));
        assert_eq!(prod.width(), Dyadic::zero());
    }

    #[test]
    fn complex_division_brackets() {
        // (1+i)/(1-i) = i
        let a = CBox::from_f64(1.0, 1.0);
        let b = CBox::from_f64(1.0, -1.0);
        let q = a.div(&b, 60);
        assert!(q.re.contains(&Dyadic::zero()));
        assert!(q.im.contains(&d(1.0)));
        assert!(q.width() < Dyadic::pow2(-50));
    }

    #[test]
    fn poly_eval_on_point_box() {
        // f(x) = x^2 - 2 at x = 1.5 -> 0.25
        let coeffs = [BigInt::from(-2), BigInt::from(0), BigInt::from(1)];
        let x = CBox::from_f64(1.5, 0.0);
        let y = x.eval_int_poly(&coeffs);
        assert!(y.re.contains(&d(0.25)));
        assert!(y.im.contains(&Dyadic::zero()));
    }

    #[test]
    fn compress_is_outward() {
        let x = Interval::new(d(1.0 / 3.0_f64), d(2.0 / 3.0_f64));
        let c = x.compress(8);
        assert!(c.lo <= x.lo && x.hi <= c.hi);
        assert!(c.lo.mantissa_bits() <= 8);
    }

    #[test]
    fn product_helper() {
        let items = [CBox::from_f64(2.0, 0.0), CBox::from_f64(0.0, 1.0)];
        let p = cbox_product(&items);
        assert!(p.re.contains(&Dyadic::zero()));
        assert!(p.im.contains(&d(2.0)));
    }

    #[test]
    fn sqrt_bounds_bracket() {
        for (v, truth) in [(2.0, core::f64::consts::SQRT_2), (9.0, 3.0), (0.25, 0.5)] {
            let x = d(v);
            let lo = x.sqrt_lower(60);
            let hi = x.sqrt_upper(60);
            assert!(lo.cmp_exact(&hi) != Ordering::Greater);
            // lo^2 <= x <= hi^2 certifies the bracket without any floats.
            assert!(lo.square().cmp_exact(&x) != Ordering::Greater);
            assert!(hi.square().cmp_exact(&x) != Ordering::Less);
            assert!((lo.to_f64() - truth).abs() < 1e-12);
            assert!((hi.to_f64() - truth).abs() < 1e-12);
        }
        assert!(Dyadic::zero().sqrt_upper(10).is_zero());
    }
}
