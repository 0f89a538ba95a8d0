//! Trace-indexed search boxes: the T2 bound built from Hermite constants
//! and per-coefficient ranges via elementary symmetric function estimates.

use alloc::vec::Vec;
use num_traits::Float;

use super::HunterError;

/// Upper bounds for the Hermite constants gamma_1 .. gamma_10.
///
/// For m <= 8 the constants are known exactly (gamma_m^m = 1, 4/3, 2, 4, 8,
/// 64/3, 64, 256); each irrational value is stored rounded UP in the 12th
/// decimal place so the stored double always dominates the exact real.
/// gamma_9 and gamma_10 are not known exactly; they use the Mordell
/// inequality gamma_m <= gamma_{m-1}^{(m-1)/(m-2)} iterated from
/// gamma_8 = 2, giving 2^{8/7} and 2^{9/7}. Any upper bound keeps the
/// search boxes complete; overshoot only enlarges them.
const HERMITE_UPPER: [f64; 10] = [
    1.0,            // gamma_1 = 1
    1.154700538380, // gamma_2 = (4/3)^(1/2) = 1.15470053837925152...
    1.259921049895, // gamma_3 = 2^(1/3)     = 1.25992104989487316...
    1.414213562374, // gamma_4 = 2^(1/2)     = 1.41421356237309504...
    1.515716566511, // gamma_5 = 8^(1/5)     = 1.51571656651039808...
    1.665366355312, // gamma_6 = (64/3)^(1/6) = 1.66536635531120863...
    1.811447328528, // gamma_7 = 64^(1/7)    = 1.81144732852781334...
    2.0,            // gamma_8 = 2
    2.208179027348, // Mordell bound 2^(8/7) = 2.20817902734762467...
    2.438027308409, // Mordell bound 2^(9/7) = 2.43802730840895088...
];

/// Upper bound for the Hermite constant gamma_m, for 1 <= m <= 10.
pub fn hermite_upper(m: u32) -> Option<f64> {
    if (1..=10).contains(&m) {
        Some(HERMITE_UPPER[(m - 1) as usize])
    } else {
        None
    }
}

/// The T2 budget for a degree-n generator of trace `trace` in a field with
/// |d_K| <= x: trace^2/n + gamma_{n-1} * (x/n)^{1/(n-1)}.
pub fn t2_bound(degree: u32, x: f64, trace: u32) -> Result<f64, HunterError> {
    if !(2..=11).contains(&degree) {
        return Err(HunterError::UnsupportedDegree { degree });
    }
    assert!(x >= 1.0, "discriminant bound must be at least 1");
    assert!(
        2 * trace <= degree,
        "trace {trace} outside [0, {degree}/2]"
    );
    let n = degree as f64;
    let gamma = HERMITE_UPPER[(degree - 2) as usize];
    let radial = gamma * Float::powf(x / n, 1.0 / (n - 1.0));
    Ok((trace * trace) as f64 / n + radial)
}

/// A finite search box for monic integer polynomials
/// x^n - trace*x^{n-1} + a_{n-2} x^{n-2} + ... + a_0
/// whose roots have squared-absolute-value sum at most `t2`.
#[derive(Clone, Debug)]
pub struct HunterBox {
    pub degree: u32,
    pub trace: u32,
    /// The T2 budget the ranges were derived from.
    pub t2: f64,
    /// The gamma_{n-1} upper bound associated with this degree.
    pub hermite: f64,
    /// `bounds[k-2]` bounds |a_{n-k}| for k = 2..=n (a_{n-1} = -trace is
    /// fixed and has no entry).
    pub bounds: Vec<i64>,
}

impl HunterBox {
    /// The symmetric bound on |a_{n-k}|, for k in 2..=degree.
    pub fn bound_for(&self, k: u32) -> i64 {
        self.bounds[(k - 2) as usize]
    }

    /// Inclusive range for a_{n-2} after intersecting the box with the
    /// second power-sum constraint |s_2| = |trace^2 - 2 a_{n-2}| <= T2.
    /// May be empty (lo > hi) only for degenerate inputs.
    pub fn second_coefficient_range(&self) -> (i64, i64) {
        let b2 = self.bounds[0];
        let tt = (self.trace * self.trace) as f64;
        let lo = Float::ceil((tt - self.t2) / 2.0) as i64;
        let hi = Float::floor((tt + self.t2) / 2.0) as i64;
        (lo.max(-b2), hi.min(b2))
    }
}

/// Per-coefficient ranges from the T2 budget: any k roots have squared
/// quadratic mean at most T2/k, so the elementary symmetric function of
/// degree k is at most binom(n,k) (T2/k)^{k/2} in absolute value. Ranges
/// store the ceiling, so they always contain the exact real bound.
pub fn coefficient_bounds(degree: u32, trace: u32, t2: f64) -> HunterBox {
    assert!(
        (2..=11).contains(&degree),
        "degree {degree} outside the supported range 2..=11"
    );
    assert!(2 * trace <= degree);
    assert!(t2 > 0.0);
    let n = degree as f64;
    let mut bounds = Vec::with_capacity(degree as usize - 1);
    let mut binom = n; // C(n, 1)
    for k in 2..=degree {
        binom = binom * (n - (k - 1) as f64) / k as f64; // C(n, k)
        let b = binom * Float::powf(t2 / k as f64, k as f64 / 2.0);
        assert!(
            b < 9.0e18,
            "coefficient bound {b:e} exceeds the machine word; the box is \
             far beyond any enumerable size"
        );
        bounds.push(Float::ceil(b) as i64);
    }
    HunterBox {
        degree,
        trace,
        t2,
        hermite: HERMITE_UPPER[(degree - 2) as usize],
        bounds,
    }
}
