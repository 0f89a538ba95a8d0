//! Mass-formula density constants for degree-`n` fields as Euler products.
//!
//! The heuristic count of fields of degree `n`, fixed signature set, and
//! absolute discriminant up to `X` is `B * X` with
//!
//! ```text
//! B = 1/2 * sum_{(r1,r2)} 1/(2^r2 r1! r2!) * prod_p (1 - 1/p) m_p(n),
//! ```
//!
//! where the local mass is `m_p(n) = sum_j q_j p^-j` and `q_j` counts the
//! partitions of `j` into parts of size at most `n - j`.
//!
//! Two independent evaluations of the product over primes are provided.
//! The direct method multiplies `g(1/p)` over all sieved primes up to a
//! bound `P`, where `g(x) = (1 - x) m(x)`; since `g(x) = 1 + O(x^2)` the
//! omitted factors perturb the logarithm by at most `2 G / P` with
//! `G = sum_{k>=2} |g_k|`.  The series method expands `ln g(x) = sum c_j x^j`
//! with exact rational `c_j`, sums `c_j P(j)` over `2 <= j <= 200` against
//! the prime zeta function, and bounds the tail through a certified lower
//! bound `R` on the smallest complex root of `g`: `|c_j| <= 2n R^-j / j` and
//! `P(j) < 2^(1-j)` give a geometric remainder with ratio `1/(2R) < 1`.
//! Both results carry a rigorous error bound.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::fixed::Fx;
use super::zeta::prime_zeta;
use super::HeuristicsError;
use crate::exactmath::{complex_roots, small_primes, IntPoly, SMALL_PRIME_LIMIT};

/// Number of partitions of `m` into parts of size at most `max_part`.
pub fn partitions_at_most(max_part: u32, m: u32) -> u64 {
    let mut dp = alloc::vec![0u64; m as usize + 1];
    dp[0] = 1;
    for part in 1..=max_part.min(m.max(1)) as usize {
        for t in part..=m as usize {
            dp[t] += dp[t - part];
        }
    }
    dp[m as usize]
}

/// Coefficients `q_0..q_{n-1}` of the local mass `m_p(n) = sum q_j p^-j`.
pub fn local_mass_coefficients(n: u32) -> Vec<BigInt> {
    assert!(n >= 2);
    (0..n)
        .map(|j| BigInt::from(partitions_at_most(n - j, j)))
        .collect()
}

/// The local mass `m_p(n)` as an exact rational.
pub fn local_mass(n: u32, p: u64) -> BigRational {
    let q = local_mass_coefficients(n);
    let p = BigInt::from(p);
    let mut num = BigInt::zero();
    for c in &q {
        num = num * &p + c;
    }
    BigRational::new(num, p.pow(n - 1))
}

/// Coefficients of `g(x) = (1 - x) m(x)`, an integer polynomial of degree
/// `n` with `g(0) = 1` and vanishing linear term.
pub fn g_coefficients(n: u32) -> Vec<BigInt> {
    let q = local_mass_coefficients(n);
    let mut g = Vec::with_capacity(n as usize + 1);
    g.push(q[0].clone());
    for k in 1..n as usize {
        g.push(&q[k] - &q[k - 1]);
    }
    g.push(-q[n as usize - 1].clone());
    g
}

/// `c_1..c_jmax` of `ln g(x) = sum_j c_j x^j`, exact rationals, via
/// `j c_j = j g_j - sum_{i<j} i c_i g_{j-i}`.
fn log_series_coeffs(g: &[BigInt], j_max: usize) -> Vec<BigRational> {
    let coeff = |k: usize| -> BigInt {
        g.get(k).cloned().unwrap_or_else(BigInt::zero)
    };
    let mut c: Vec<BigRational> = Vec::with_capacity(j_max + 1);
    c.push(BigRational::zero()); // c_0 unused
    for j in 1..=j_max {
        let mut acc = BigRational::from_integer(BigInt::from(j as u64) * coeff(j));
        for (i, ci) in c.iter().enumerate().skip(1) {
            if !ci.is_zero() {
                acc -= ci * BigRational::from_integer(BigInt::from(i as u64) * coeff(j - i));
            }
        }
        c.push(acc / BigRational::from_integer(BigInt::from(j as u64)));
    }
    c
}

/// A value together with a rigorous bound on its absolute error.
#[derive(Clone, Debug)]
pub struct BoundedReal {
    pub value: Fx,
    pub error_bound: Fx,
}

pub use crate::hunter::SignatureSet;

/// How to evaluate the product over primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EulerMethod {
    /// Multiply `g(1/p)` over sieved primes `p <= prime_bound`.
    Direct { prime_bound: u64 },
    /// Sum the logarithmic series against the prime zeta function.
    PrimeZeta,
}

/// A request for one density constant.
#[derive(Clone, Debug)]
pub struct EulerProductJob {
    pub degree: u32,
    pub signatures: SignatureSet,
    /// The result must be certified to within `10^-precision_digits`.
    pub precision_digits: u32,
    pub method: EulerMethod,
}

/// `1 / (2^r2 r1! r2!)`.
pub fn archimedean_mass(r1: u32, r2: u32) -> BigRational {
    BigRational::new(
        BigInt::one(),
        factorial(r1) * factorial(r2) * (BigInt::one() << r2),
    )
}

fn factorial(k: u32) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=k as u64 {
        f *= BigInt::from(i);
    }
    f
}

const SERIES_CUTOFF: usize = 200;

/// Certified lower bound on the modulus of the smallest complex root of `g`.
fn min_root_radius_lower(g_coeffs: &[BigInt]) -> BigRational {
    let g = IntPoly::from_coeffs(g_coeffs.to_vec());
    let sf = if g.is_squarefree() {
        g
    } else {
        let d = g.derivative();
        let common = g.gcd(&d);
        g.div_exact_poly(&common)
            .expect("squarefree part divides exactly")
    };
    let roots = complex_roots(&sf, 40).expect("root isolation of mass polynomial");
    let mut best: Option<BigRational> = None;
    for r in &roots {
        let low = r.region.norm_sq().abs_lower().sqrt_lower(80).to_rational();
        if best.as_ref().map_or(true, |b| low < *b) {
            best = Some(low);
        }
    }
    best.expect("mass polynomial has roots")
}

/// Greatest `d <= 60` with `err <= 10^-d` (0 if none).
fn certified_digits(err: &Fx) -> u32 {
    for d in (0..=60u32).rev() {
        let tol = Fx::from_ratio(&BigInt::one(), &BigInt::from(10u32).pow(d));
        if err.cmp_val(&tol) != core::cmp::Ordering::Greater {
            return d;
        }
    }
    0
}

/// The density constant for the job, with a rigorous error bound, or an
/// error when the method cannot certify the requested precision.
pub fn bhargava_constant(job: &EulerProductJob) -> Result<BoundedReal, HeuristicsError> {
    let n = job.degree;
    assert!((2..=11).contains(&n), "degree must lie in 2..=11");
    let mut arch = BigRational::zero();
    for (r1, r2) in job.signatures.pairs(n) {
        arch += archimedean_mass(r1, r2);
    }
    arch /= BigRational::from_integer(BigInt::from(2));

    let g = g_coefficients(n);
    // ln of the finite evaluation, plus a bound on |ln finite - ln full|
    let (ln_finite, ln_err) = match job.method {
        EulerMethod::Direct { prime_bound } => {
            assert!(
                (11..=SMALL_PRIME_LIMIT).contains(&prime_bound),
                "direct prime bound must lie in 11..=10^6"
            );
            let mut acc = Fx::one();
            let pn = |p: u64| BigInt::from(p).pow(n);
            for &p in small_primes() {
                if p > prime_bound {
                    break;
                }
                let bp = BigInt::from(p);
                let mut num = BigInt::zero();
                for c in &g {
                    num = num * &bp + c;
                }
                acc = acc.mul(&Fx::from_ratio(&num, &pn(p)));
            }
            // sum_{k>=2} |g_k|, so |ln g(1/p)| <= 2 G / p^2 for p > 2
            let gsum: BigInt = g.iter().skip(2).map(|c| c.abs()).sum();
            let tail = Fx::from_ratio(&(gsum * 2), &BigInt::from(prime_bound));
            (acc.ln(), tail)
        }
        EulerMethod::PrimeZeta => {
            let radius = min_root_radius_lower(&g);
            let half = BigRational::new(BigInt::one(), BigInt::from(2));
            if radius <= half {
                return Err(HeuristicsError::PrecisionUnreachable {
                    requested_digits: job.precision_digits,
                    attainable_digits: 0,
                });
            }
            let c = log_series_coeffs(&g, SERIES_CUTOFF);
            let mut sum = Fx::zero();
            let mut abs_c = Fx::zero();
            for (j, cj) in c.iter().enumerate().skip(2) {
                if cj.is_zero() {
                    continue;
                }
                let cj_fx = Fx::from_rational(cj);
                abs_c = abs_c.add(&cj_fx.abs());
                sum = sum.add(&cj_fx.mul(&prime_zeta(j as u32)));
            }
            // geometric tail with ratio q = 1/(2R) < 1:
            //   sum_{j>J} |c_j| P(j) <= 2n/(J+1) * q^(J+1) / (1-q)
            let q = half / radius;
            let tail = BigRational::from_integer(BigInt::from(2 * n as u64))
                / BigRational::from_integer(BigInt::from(SERIES_CUTOFF as u64 + 1))
                * q.pow(SERIES_CUTOFF as i32 + 1)
                / (BigRational::one() - &q);
            // each prime_zeta value is off by < 2^-184, amplified by |c_j|
            let rounding = abs_c.mul(&Fx::pow2(-184));
            (sum, Fx::from_rational(&tail).add(&rounding))
        }
    };

    let value = Fx::from_rational(&arch).mul(&ln_finite.exp());
    // |B - B_true| <= B (e^eps - 1), plus slack for fixed-point rounding
    let err = value
        .mul(&ln_err.exp().sub(&Fx::one()))
        .abs()
        .add(&Fx::pow2(-140));
    let attainable = certified_digits(&err);
    if attainable < job.precision_digits {
        return Err(HeuristicsError::PrecisionUnreachable {
            requested_digits: job.precision_digits,
            attainable_digits: attainable,
        });
    }
    Ok(BoundedReal {
        value,
        error_bound: err,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
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
            v.to_decimal_string(40),
            reference,
            tol_log10
        );
    }

    fn pz_job(degree: u32, r1: u32, r2: u32) -> EulerProductJob {
        EulerProductJob {
            degree,
            signatures: SignatureSet::single(r1, r2),
            precision_digits: 10,
            method: EulerMethod::PrimeZeta,
        }
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_at_most(1, 5), 1);
        assert_eq!(partitions_at_most(5, 5), 7);
        assert_eq!(partitions_at_most(6, 6), 11);
        assert_eq!(partitions_at_most(2, 4), 3);
        assert_eq!(partitions_at_most(5, 6), 10);
        assert_eq!(partitions_at_most(4, 6), 9);
        assert_eq!(partitions_at_most(3, 0), 1);
    }

    #[test]
    fn mass_coefficients_all_degrees() {
        let expect: [&[i64]; 8] = [
            &[1, 1, 2, 1],
            &[1, 1, 2, 2, 1],
            &[1, 1, 2, 3, 3, 1],
            &[1, 1, 2, 3, 4, 3, 1],
            &[1, 1, 2, 3, 5, 5, 4, 1],
            &[1, 1, 2, 3, 5, 6, 7, 4, 1],
            &[1, 1, 2, 3, 5, 7, 9, 8, 5, 1],
            &[1, 1, 2, 3, 5, 7, 10, 11, 10, 5, 1],
        ];
        for (i, want) in expect.iter().enumerate() {
            let n = i as u32 + 4;
            let got = local_mass_coefficients(n);
            let want: Vec<BigInt> = want.iter().map(|&x| BigInt::from(x)).collect();
            assert_eq!(got, want, "degree {n}");
        }
    }

    #[test]
    fn local_mass_example() {
        assert_eq!(
            local_mass(4, 2),
            BigRational::new(BigInt::from(17), BigInt::from(8))
        );
        // degree 2: m_p = 1 + 1/p
        assert_eq!(
            local_mass(2, 5),
            BigRational::new(BigInt::from(6), BigInt::from(5))
        );
    }

    #[test]
    fn g_polynomial_examples() {
        let want4: Vec<BigInt> = [1, 0, 1, -1, -1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(g_coefficients(4), want4);
        let want11: Vec<BigInt> = [1, 0, 1, 1, 2, 2, 3, 1, -1, -5, -4, -1]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        assert_eq!(g_coefficients(11), want11);
        // linear coefficient always cancels
        for n in 2..=11 {
            assert!(g_coefficients(n)[1].is_zero(), "degree {n}");
        }
    }

    #[test]
    fn log_series_matches_closed_form() {
        // g = 1 - x gives c_j = -1/j
        let g: Vec<BigInt> = alloc::vec![BigInt::one(), -BigInt::one()];
        let c = log_series_coeffs(&g, 6);
        for j in 1..=6usize {
            assert_eq!(
                c[j],
                BigRational::new(-BigInt::one(), BigInt::from(j as u64)),
                "c_{j}"
            );
        }
    }

    #[test]
    fn density_constants_reference_digits() {
        let cases = [
            (4, 0, 2, "0.0760431429316456833605899429271"),
            (5, 1, 2, "0.0863505349264514530493988863455"),
            (6, 0, 3, "0.0170253012626073658192445300619"),
            (7, 1, 3, "0.018221853949838958566660812599"),
            (8, 0, 4, "0.00246880322489801728345764770696"),
            (9, 1, 4, "0.00257368056215922149955588477473"),
            (10, 0, 5, "0.000268396213604080788525652593733"),
            (11, 1, 5, "0.000274776289277041651332609140347"),
        ];
        for (n, r1, r2, digits) in cases {
            let b = bhargava_constant(&pz_job(n, r1, r2)).expect("series method");
            assert_close(&b.value, digits, -20);
            let tol = Fx::from_ratio(&BigInt::one(), &BigInt::from(10u64).pow(18));
            assert!(
                b.error_bound.cmp_val(&tol) == Ordering::Less,
                "degree {n} bound {}",
                b.error_bound.to_decimal_string(30)
            );
        }
    }

    #[test]
    fn imaginary_quadratic_constant() {
        // 3/(2 pi^2)
        let b = bhargava_constant(&pz_job(2, 0, 1)).expect("series method");
        assert_close(&b.value, "0.151981775463506657165819194815", -20);
    }

    #[test]
    fn totally_real_quartic_constant() {
        let b = bhargava_constant(&pz_job(4, 4, 0)).expect("series method");
        assert_close(&b.value, "0.0253477143105485611201966476424", -20);
    }

    #[test]
    fn paired_degrees_increase() {
        for n in [4u32, 6, 8, 10] {
            let even = bhargava_constant(&pz_job(n, 0, n / 2)).unwrap();
            let odd = bhargava_constant(&pz_job(n + 1, 1, n / 2)).unwrap();
            assert!(
                even.value.cmp_val(&odd.value) == Ordering::Less,
                "expected B_{n} < B_{}",
                n + 1
            );
        }
    }

    #[test]
    fn all_signatures_scale_by_archimedean_mass() {
        // for n = 2 the two signatures have equal archimedean mass, so
        // summing them exactly doubles the totally complex constant
        let tc = bhargava_constant(&pz_job(2, 0, 1)).unwrap();
        let all = bhargava_constant(&EulerProductJob {
            degree: 2,
            signatures: SignatureSet::All,
            precision_digits: 10,
            method: EulerMethod::PrimeZeta,
        })
        .unwrap();
        let diff = all.value.sub(&tc.value.mul_i64(2)).abs();
        let tol = Fx::from_ratio(&BigInt::one(), &BigInt::from(10u64).pow(25));
        assert!(diff.cmp_val(&tol) == Ordering::Less);
    }

    #[test]
    fn direct_product_agrees_within_bounds() {
        for n in [4u32, 11] {
            let r2 = n / 2;
            let r1 = n - 2 * r2;
            let series = bhargava_constant(&pz_job(n, r1, r2)).unwrap();
            let direct = bhargava_constant(&EulerProductJob {
                degree: n,
                signatures: SignatureSet::single(r1, r2),
                precision_digits: 3,
                method: EulerMethod::Direct {
                    prime_bound: 1_000_000,
                },
            })
            .unwrap();
            let gap = series.value.sub(&direct.value).abs();
            let budget = series.error_bound.add(&direct.error_bound);
            assert!(
                gap.cmp_val(&budget) == Ordering::Less,
                "degree {n}: gap {} exceeds budget {}",
                gap.to_decimal_string(12),
                budget.to_decimal_string(12)
            );
        }
    }

    #[test]
    fn unreachable_precision_is_reported() {
        let res = bhargava_constant(&EulerProductJob {
            degree: 4,
            signatures: SignatureSet::single(0, 2),
            precision_digits: 12,
            method: EulerMethod::Direct { prime_bound: 10_000 },
        });
        match res {
            Err(HeuristicsError::PrecisionUnreachable {
                requested_digits: 12,
                attainable_digits,
            }) => {
                assert!(attainable_digits < 12);
            }
            other => panic!("expected precision error, got {other:?}"),
        }
    }
}
