//! Fixed-point arithmetic on big-integer mantissas with 192 fractional bits.
//!
//! Every value is `m / 2^192` for a signed big integer `m`, so additions are
//! exact and each multiplication or division rounds once, to the nearest
//! representable value, with error at most one ulp (`2^-192 ~ 1.6e-58`).
//! The density constants and class-group probabilities computed from this
//! type need at most ~30 significant digits, and their series truncations
//! are bounded analytically well above the ulp scale, so a fixed global
//! precision with round-to-nearest is simpler and faster than directed
//! rounding here.
//!
//! Transcendentals are evaluated by classical series with geometric error
//! control: `ln` through the inverse hyperbolic tangent identity
//! `ln x = 2 atanh((x-1)/(x+1))` after normalising `x` into `[3/4, 3/2)` by
//! powers of two, and `exp` by argument halving followed by the Taylor
//! series and repeated squaring.

use alloc::string::{String, ToString};
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, Signed, ToPrimitive, Zero};
use once_cell::race::OnceBox;

/// Number of fractional bits carried by every [`Fx`] value.
pub const FRAC_BITS: u32 = 192;

/// A signed fixed-point number with [`FRAC_BITS`] fractional bits.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Fx {
    m: BigInt,
}

/// Shift `v` right by `bits`, rounding to nearest (ties away from zero).
fn shr_round(v: BigInt, bits: u32) -> BigInt {
    if bits == 0 {
        return v;
    }
    let (sign, mag) = v.into_parts();
    let half = num_bigint::BigUint::from(1u32) << (bits - 1) as usize;
    let q = (mag + half) >> bits as usize;
    BigInt::from_biguint(sign, q)
}

/// Divide `n` by `d > 0`, rounding to nearest (ties away from zero).
fn div_round(n: BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    let (sign, mag) = n.into_parts();
    let dm = d.magnitude();
    let (q, r) = num_integer::Integer::div_rem(&mag, dm);
    let q = if &(&r << 1usize) >= dm { q + 1u32 } else { q };
    BigInt::from_biguint(sign, q)
}

impl Fx {
    pub fn zero() -> Fx {
        Fx { m: BigInt::zero() }
    }

    pub fn one() -> Fx {
        Fx::from_i64(1)
    }

    pub fn from_i64(v: i64) -> Fx {
        Fx {
            m: BigInt::from(v) << FRAC_BITS as usize,
        }
    }

    /// `num / den` rounded to the nearest representable value.
    pub fn from_ratio(num: &BigInt, den: &BigInt) -> Fx {
        assert!(!den.is_zero(), "fixed-point division by zero");
        let mut n = num << FRAC_BITS as usize;
        let mut d = den.clone();
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Fx { m: div_round(n, &d) }
    }

    pub fn from_u64_ratio(num: u64, den: u64) -> Fx {
        Fx::from_ratio(&BigInt::from(num), &BigInt::from(den))
    }

    pub fn from_rational(q: &BigRational) -> Fx {
        Fx::from_ratio(q.numer(), q.denom())
    }

    /// Parse a plain decimal literal such as `"0.7240197953"` or `"-1.5"`.
    pub fn from_decimal(s: &str) -> Fx {
        let (neg, rest) = match s.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let mut digits = String::new();
        let mut frac_len = 0usize;
        let mut seen_dot = false;
        for ch in rest.chars() {
            match ch {
                '0'..='9' => {
                    digits.push(ch);
                    if seen_dot {
                        frac_len += 1;
                    }
                }
                '.' if !seen_dot => seen_dot = true,
                _ => panic!("invalid decimal literal"),
            }
        }
        assert!(!digits.is_empty(), "empty decimal literal");
        let mut num: BigInt = digits.parse().expect("digits parse");
        if neg {
            num = -num;
        }
        let den = BigInt::from(10u32).pow(frac_len as u32);
        Fx::from_ratio(&num, &den)
    }

    /// `2^e` for any (possibly negative) exponent.
    pub fn pow2(e: i32) -> Fx {
        let shift = FRAC_BITS as i64 + e as i64;
        if shift < 0 {
            // below one ulp: rounds to zero, except the exact half-ulp tie
            let m = if shift == -1 {
                BigInt::from(1u32)
            } else {
                BigInt::zero()
            };
            return Fx { m };
        }
        Fx {
            m: BigInt::from(1u32) << shift as usize,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.m.is_positive()
    }

    pub fn abs(&self) -> Fx {
        Fx { m: self.m.abs() }
    }

    pub fn neg(&self) -> Fx {
        Fx { m: -&self.m }
    }

    pub fn add(&self, o: &Fx) -> Fx {
        Fx { m: &self.m + &o.m }
    }

    pub fn sub(&self, o: &Fx) -> Fx {
        Fx { m: &self.m - &o.m }
    }

    pub fn mul(&self, o: &Fx) -> Fx {
        Fx {
            m: shr_round(&self.m * &o.m, FRAC_BITS),
        }
    }

    pub fn square(&self) -> Fx {
        self.mul(self)
    }

    pub fn mul_i64(&self, k: i64) -> Fx {
        Fx { m: &self.m * k }
    }

    pub fn div(&self, o: &Fx) -> Fx {
        assert!(!o.m.is_zero(), "fixed-point division by zero");
        let mut n = &self.m << FRAC_BITS as usize;
        let mut d = o.m.clone();
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Fx { m: div_round(n, &d) }
    }

    pub fn div_u64(&self, k: u64) -> Fx {
        assert!(k != 0);
        Fx {
            m: div_round(self.m.clone(), &BigInt::from(k)),
        }
    }

    /// Exact halving `self / 2^k` (rounded once).
    pub fn shr(&self, k: u32) -> Fx {
        Fx {
            m: shr_round(self.m.clone(), k),
        }
    }

    pub fn cmp_val(&self, o: &Fx) -> Ordering {
        self.m.cmp(&o.m)
    }

    /// Number of significant bits of the magnitude (0 for zero); the value
    /// lies in `[2^(b-1), 2^b) * 2^-192` for result `b`.
    pub fn magnitude_bits(&self) -> u64 {
        self.m.magnitude().bits()
    }

    pub fn to_f64(&self) -> f64 {
        // Split off the low bits so huge mantissas stay inside f64 range
        // before scaling.
        let bits = self.m.magnitude().bits();
        if bits <= 900 {
            self.m.to_f64().unwrap_or(0.0) * Float::exp2(-(FRAC_BITS as f64))
        } else {
            let drop = (bits - 900) as u32;
            let top = shr_round(self.m.clone(), drop);
            top.to_f64().unwrap_or(0.0) * Float::exp2(drop as f64 - FRAC_BITS as f64)
        }
    }

    /// Render with exactly `frac_digits` digits after the decimal point,
    /// rounded to nearest.
    pub fn to_decimal_string(&self, frac_digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(frac_digits as u32);
        let scaled = shr_round(&self.m * &scale, FRAC_BITS);
        let neg = scaled.is_negative();
        let digits = scaled.magnitude().to_string();
        let mut int_part;
        let mut frac_part;
        if digits.len() > frac_digits {
            let split = digits.len() - frac_digits;
            int_part = digits[..split].to_string();
            frac_part = digits[split..].to_string();
        } else {
            int_part = String::from("0");
            frac_part = String::new();
            for _ in 0..(frac_digits - digits.len()) {
                frac_part.push('0');
            }
            frac_part.push_str(&digits);
        }
        if int_part.is_empty() {
            int_part.push('0');
        }
        let mut out = String::new();
        if neg && (int_part != "0" || frac_part.bytes().any(|b| b != b'0')) {
            out.push('-');
        }
        out.push_str(&int_part);
        if frac_digits > 0 {
            out.push('.');
            out.push_str(&frac_part);
        }
        out
    }

    /// Natural logarithm; requires a strictly positive value.
    pub fn ln(&self) -> Fx {
        assert!(self.m.is_positive(), "ln of a non-positive value");
        // Normalise into [3/4, 3/2): value = x * 2^e.
        let bits = self.m.magnitude().bits() as i64;
        let mut e = bits - 1 - FRAC_BITS as i64; // value in [2^e, 2^(e+1))
        let mut x = self.clone();
        if e >= 0 {
            x = x.shr(e as u32);
        } else {
            x = Fx {
                m: &self.m << (-e) as usize,
            };
        }
        // x in [1, 2); fold the top half down to keep |u| small.
        let three_half = Fx::from_u64_ratio(3, 2);
        if x.cmp_val(&three_half) != Ordering::Less {
            x = x.shr(1);
            e += 1;
        }
        // ln x = 2 atanh(u), u = (x-1)/(x+1), |u| <= 1/5.
        let one = Fx::one();
        let u = x.sub(&one).div(&x.add(&one));
        let u2 = u.square();
        let mut term = u.clone();
        let mut acc = u.clone();
        let mut k = 1u64;
        loop {
            term = term.mul(&u2);
            k += 2;
            let add = term.div_u64(k);
            if add.is_zero() {
                break;
            }
            acc = acc.add(&add);
            if term.magnitude_bits() < 8 {
                break;
            }
        }
        let mut out = acc.mul_i64(2);
        if e != 0 {
            out = out.add(&ln2().mul_i64(e));
        }
        out
    }

    /// Exponential; the argument magnitude must stay below `2^20`.
    pub fn exp(&self) -> Fx {
        assert!(
            self.magnitude_bits() < FRAC_BITS as u64 + 20,
            "exp argument too large"
        );
        // Halve until |y| <= 1/16, then Taylor, then square back up.
        let mut halvings = 0u32;
        let sixteenth_bits = FRAC_BITS as u64 - 4;
        let mut y = self.clone();
        while y.magnitude_bits() > sixteenth_bits {
            y = y.shr(1);
            halvings += 1;
        }
        let mut term = Fx::one();
        let mut acc = Fx::one();
        let mut k = 0u64;
        loop {
            k += 1;
            term = term.mul(&y).div_u64(k);
            if term.is_zero() {
                break;
            }
            acc = acc.add(&term);
            if term.magnitude_bits() < 8 {
                break;
            }
        }
        for _ in 0..halvings {
            acc = acc.square();
        }
        acc
    }
}

static LN2: OnceBox<Fx> = OnceBox::new();

/// `ln 2`, computed once as `2 atanh(1/3)`.
pub fn ln2() -> &'static Fx {
    LN2.get_or_init(|| {
        let third = Fx::from_u64_ratio(1, 3);
        let u2 = third.square();
        let mut term = third.clone();
        let mut acc = third;
        let mut k = 1u64;
        loop {
            term = term.mul(&u2);
            k += 2;
            let add = term.div_u64(k);
            if add.is_zero() {
                break;
            }
            acc = acc.add(&add);
        }
        alloc::boxed::Box::new(acc.mul_i64(2))
    })
}

/// Sum of a short list of values (convenience for table code).
pub fn fx_sum(vals: &[Fx]) -> Fx {
    let mut acc = Fx::zero();
    for v in vals {
        acc = acc.add(v);
    }
    acc
}
