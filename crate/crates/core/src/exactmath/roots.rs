//! Certified root isolation for squarefree integer polynomials.
//!
//! Floating point only *suggests* where roots are (an Aberth-Ehrlich sweep
//! in f64); everything returned is certified with exact dyadic arithmetic.
//! Real roots are isolated with Sturm-chain counts and pinned down by exact
//! sign bisection. Complex roots are polished by Newton iteration over
//! dyadic rectangles and certified through the inclusion disk
//! D(z, n*|f(z)/f'(z)|), which always contains at least one root; once the
//! disks (and their mirror images) are pairwise disjoint and disjoint from
//! the real isolating segments, a counting argument pins exactly one root in
//! each region. No square roots are taken on the exact path: disjointness is
//! checked on squared distances against 2*(r_i^2 + r_j^2) >= (r_i + r_j)^2.

use alloc::vec;
use alloc::vec::Vec;

use core::cmp::Ordering;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::dyadic::{CBox, Dyadic, Interval};
use super::poly::IntPoly;
use super::sturm::SturmChain;

/// Why certified isolation failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootsError {
    /// Repeated roots: disjoint one-root boxes cannot exist.
    NonSquarefree,
    /// Certification did not succeed within the precision budget.
    PrecisionExhausted,
}

/// A rectangle certified to contain exactly one root of the input.
#[derive(Clone, Debug)]
pub struct RootBox {
    pub region: CBox,
    pub is_real: bool,
}

const MAX_WORK_BITS: u64 = 1 << 16;
const NEWTON_ROUNDS: usize = 32;
const ABERTH_ATTEMPTS: usize = 6;

/// Isolates all complex roots of a squarefree polynomial (degree >= 1) in
/// boxes of width at most 2^-target_bits.
///
/// Order of the result: real roots first, ascending; then the strictly
/// complex roots in conjugate pairs (upper-half representative first, then
/// its mirror image), pairs sorted by the exact (re, im) coordinates of
/// their certified centers.
pub fn complex_roots(f: &IntPoly, target_bits: u64) -> Result<Vec<RootBox>, RootsError> {
    assert!(!f.is_zero() && f.degree() >= 1, "need a nonconstant polynomial");
    let n = f.degree();
    let chain = match SturmChain::new(f) {
        Ok(c) => c,
        Err(_) => return Err(RootsError::NonSquarefree),
    };
    let real_brackets = isolate_reals(f, &chain, target_bits);
    let r1 = real_brackets.len();
    debug_assert_eq!((n - r1) % 2, 0, "non-real roots pair up");
    let r2 = (n - r1) / 2;

    let mut out: Vec<RootBox> = real_brackets
        .into_iter()
        .map(|(lo, hi)| RootBox {
            region: CBox {
                re: Interval::new(lo, hi),
                im: Interval::point(Dyadic::zero()),
            },
            is_real: true,
        })
        .collect();

    if r2 > 0 {
        for (cre, cim, rho) in certified_pairs(f, r2, target_bits)? {
            let re = Interval::new(cre.sub(&rho), cre.add(&rho));
            let im_up = Interval::new(cim.sub(&rho), cim.add(&rho));
            let im_dn = im_up.neg();
            out.push(RootBox {
                region: CBox { re: re.clone(), im: im_up },
                is_real: false,
            });
            out.push(RootBox {
                region: CBox { re, im: im_dn },
                is_real: false,
            });
        }
    }
    Ok(out)
}

/// Exact sign of f at a dyadic point (Horner, fully exact).
fn sign_at(f: &IntPoly, x: &Dyadic) -> i8 {
    let mut acc = Dyadic::zero();
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(x).add(&Dyadic::from_bigint(c));
    }
    acc.signum()
}

/// Strict bound B with every root inside |z| < B (Cauchy's bound).
fn cauchy_bound(f: &IntPoly) -> BigInt {
    let lc = f.leading().abs();
    let (q, r) = f.height().div_rem(&lc);
    let mut b = q + 1u32;
    if !r.is_zero() {
        b += 1u32;
    }
    b
}

/// All real roots as brackets [lo, hi] (lo == hi for an exact dyadic root)
/// of width at most 2^-target, sorted ascending. Endpoints are never roots
/// unless the bracket is an exact point.
fn isolate_reals(f: &IntPoly, chain: &SturmChain, target: u64) -> Vec<(Dyadic, Dyadic)> {
    let bound = cauchy_bound(f);
    let lo = Dyadic::from_bigint(&-bound.clone());
    let hi = Dyadic::from_bigint(&bound);
    let total = chain.count_roots_in(&lo.to_rational(), &hi.to_rational());
    let mut found: Vec<(Dyadic, Dyadic)> = Vec::new();
    let mut stack: Vec<(Dyadic, Dyadic, usize)> = vec![(lo, hi, total)];
    while let Some((lo, hi, count)) = stack.pop() {
        match count {
            0 => {}
            1 => found.push(refine_bracket(f, lo, hi, target)),
            _ => {
                let mid = pick_split(f, &lo, &hi, count);
                let left = chain.count_roots_in(&lo.to_rational(), &mid.to_rational());
                stack.push((lo, mid.clone(), left));
                stack.push((mid, hi, count - left));
            }
        }
    }
    found.sort_by(|a, b| a.0.cmp_exact(&b.0));
    found
}

/// A dyadic point strictly inside (lo, hi) where f does not vanish. With at
/// most `count` roots inside, some candidate among count+1 distinct interior
/// points must work.
fn pick_split(f: &IntPoly, lo: &Dyadic, hi: &Dyadic, count: usize) -> Dyadic {
    let span = hi.sub(lo);
    let mut level = 1u32;
    while (1usize << (level - 1)) < count + 1 {
        level += 1;
    }
    let mut k: i64 = 1;
    loop {
        debug_assert!(k < (1i64 << level));
        let cand = lo.add(&span.mul_i64(k).scale2(-(level as i64)));
        if sign_at(f, &cand) != 0 {
            return cand;
        }
        k += 2;
    }
}

/// Shrinks a bracket (lo, hi) known to hold exactly one root, with nonzero
/// opposite signs of f at the endpoints, to width <= 2^-target. Hitting the
/// root exactly collapses the bracket to a point.
fn refine_bracket(f: &IntPoly, mut lo: Dyadic, mut hi: Dyadic, target: u64) -> (Dyadic, Dyadic) {
    let slo = sign_at(f, &lo);
    debug_assert!(slo != 0 && sign_at(f, &hi) == -slo, "simple root must flip sign");
    let eps = Dyadic::pow2(-(target as i64));
    while hi.sub(&lo).cmp_exact(&eps) == Ordering::Greater {
        let mid = lo.add(&hi).scale2(-1);
        let sm = sign_at(f, &mid);
        if sm == 0 {
            return (mid.clone(), mid);
        }
        if sm == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Certified upper-half-plane roots as (re, im, rho): the disk of radius rho
/// around each center holds exactly one root, im > rho > 0, and rho <=
/// 2^-(target+1) so the enclosing boxes meet the width contract.
fn certified_pairs(
    f: &IntPoly,
    r2: usize,
    target: u64,
) -> Result<Vec<(Dyadic, Dyadic, Dyadic)>, RootsError> {
    let fp = f.derivative();
    let rho2_cap = Dyadic::pow2(-2 * (target as i64 + 2));

    for attempt in 0..ABERTH_ATTEMPTS {
        let seeds = match aberth_upper_seeds(f, r2, attempt) {
            Some(s) => s,
            None => continue,
        };
        let mut centers: Vec<(Dyadic, Dyadic)> = seeds
            .iter()
            .map(|z| (Dyadic::from_f64(z.re), Dyadic::from_f64(z.im)))
            .collect();
        let mut work: u64 = (2 * (target + 8)).max(96);
        while work <= MAX_WORK_BITS {
            let mut rho2: Vec<Dyadic> = Vec::with_capacity(r2);
            let mut refined_ok = true;
            for c in centers.iter_mut() {
                match newton_refine(f, &fp, c, work, target) {
                    Some(bound) => rho2.push(bound),
                    None => {
                        refined_ok = false;
                        break;
                    }
                }
            }
            if refined_ok && certify(&centers, &rho2, &rho2_cap) {
                let mut pairs: Vec<(Dyadic, Dyadic, Dyadic)> = centers
                    .into_iter()
                    .zip(rho2)
                    .map(|((re, im), r2b)| {
                        let rho = r2b.sqrt_upper(32);
                        (re, im, rho)
                    })
                    .collect();
                pairs.sort_by(|a, b| a.0.cmp_exact(&b.0).then_with(|| a.1.cmp_exact(&b.1)));
                return Ok(pairs);
            }
            work *= 2;
        }
    }
    Err(RootsError::PrecisionExhausted)
}

/// Newton-polishes one center at `work` bits and returns an upper bound on
/// rho^2 where rho = n*|f(c)/f'(c)| is the inclusion-disk radius. None when
/// the derivative vanishes at the center (needs a different seed).
fn newton_refine(
    f: &IntPoly,
    fp: &IntPoly,
    center: &mut (Dyadic, Dyadic),
    work: u64,
    target: u64,
) -> Option<Dyadic> {
    let n = f.degree() as i64;
    debug_assert!(n <= 16, "step goal calibrated for small degrees");
    let step_goal = Dyadic::pow2(-2 * (target as i64 + 4));
    for _ in 0..NEWTON_ROUNDS {
        let c = CBox::point(center.0.clone(), center.1.clone());
        let fz = c.eval_int_poly(f.coeffs());
        if fz.norm_sq().abs_upper().is_zero() {
            break; // the center is the root, exactly
        }
        let fpz = c.eval_int_poly(fp.coeffs());
        if !fpz.norm_sq().is_strictly_positive() {
            return None;
        }
        let q = fz.div(&fpz, work);
        let moved = c.sub(&q);
        let (mre, mim) = moved.mid();
        center.0 = mre.round_down(work);
        center.1 = mim.round_down(work);
        if q.norm_sq().abs_upper().cmp_exact(&step_goal) != Ordering::Greater {
            break;
        }
    }
    let c = CBox::point(center.0.clone(), center.1.clone());
    let den_lo = c.eval_int_poly(fp.coeffs()).norm_sq().abs_lower();
    if den_lo.signum() <= 0 {
        return None;
    }
    let num_up = c
        .eval_int_poly(f.coeffs())
        .norm_sq()
        .abs_upper()
        .mul_i64(n * n);
    Some(num_up.div_dir(&den_lo, 64, true))
}

/// Exact disjointness certificate. Each center must sit strictly above the
/// real axis by more than its radius, radii must meet the cap, and both the
/// disks and their complex-conjugate mirrors must be pairwise disjoint.
fn certify(centers: &[(Dyadic, Dyadic)], rho2: &[Dyadic], rho2_cap: &Dyadic) -> bool {
    for (i, ((re_i, im_i), r2i)) in centers.iter().zip(rho2).enumerate() {
        if r2i.cmp_exact(rho2_cap) == Ordering::Greater {
            return false;
        }
        if im_i.signum() <= 0 || im_i.square().cmp_exact(r2i) != Ordering::Greater {
            return false;
        }
        for ((re_j, im_j), r2j) in centers.iter().zip(rho2).skip(i + 1) {
            let need = r2i.add(r2j).scale2(1); // 2(r_i^2+r_j^2) >= (r_i+r_j)^2
            let dr2 = re_i.sub(re_j).square();
            let direct = dr2.add(&im_i.sub(im_j).square());
            if direct.cmp_exact(&need) != Ordering::Greater {
                return false;
            }
            let mirrored = dr2.add(&im_i.add(im_j).square());
            if mirrored.cmp_exact(&need) != Ordering::Greater {
                return false;
            }
        }
    }
    true
}

fn big_to_f64(v: &BigInt) -> Option<f64> {
    let x = v.to_f64()?;
    if x.is_finite() {
        Some(x)
    } else {
        None
    }
}

/// Floating-point Aberth-Ehrlich sweep; returns the r2 approximations with
/// the largest imaginary parts, or None when this attempt produced unusable
/// seeds. Deterministic: the start configuration depends only on f and the
/// attempt number.
fn aberth_upper_seeds(f: &IntPoly, r2: usize, attempt: usize) -> Option<Vec<Complex64>> {
    let n = f.degree();
    let mut c: Vec<f64> = Vec::with_capacity(n + 1);
    for v in f.coeffs() {
        c.push(big_to_f64(v)?);
    }
    let lead = c[n];
    if lead == 0.0 {
        return None;
    }
    let spread = 1.0
        + c[..n]
            .iter()
            .map(|a| (a / lead).abs())
            .fold(0.0_f64, f64::max);
    let radius = spread.max(0.5) * (0.6 + 0.17 * attempt as f64);
    let phase = 0.39996 + 0.77 * attempt as f64;
    let tau = core::f64::consts::TAU;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, tau * (k as f64) / (n as f64) + phase))
        .collect();

    for _pass in 0..500 {
        let mut max_step = 0.0_f64;
        for i in 0..n {
            let zi = z[i];
            let (fv, fd) = horner_pair(&c, zi);
            if !fv.re.is_finite() || !fv.im.is_finite() {
                return None;
            }
            if fv.norm_sqr() == 0.0 {
                continue;
            }
            let w = if fd.norm_sqr() > 1e-280 {
                fv / fd
            } else {
                Complex64::new(1e-6, 1e-6)
            };
            let mut s = Complex64::new(0.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j != i {
                    let d = zi - zj;
                    s += if d.norm_sqr() > 1e-280 {
                        Complex64::new(1.0, 0.0) / d
                    } else {
                        Complex64::new(1e6, 1e6)
                    };
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * s;
            let delta = if denom.norm_sqr() > 1e-280 { w / denom } else { w };
            z[i] = zi - delta;
            max_step = max_step.max(delta.norm_sqr());
        }
        if max_step < 1e-28 {
            break;
        }
    }
    z.sort_by(|a, b| b.im.partial_cmp(&a.im).unwrap_or(Ordering::Equal));
    let picked: Vec<Complex64> = z.into_iter().take(r2).collect();
    if picked.len() < r2 || picked.iter().any(|w| w.im <= 0.0) {
        return None;
    }
    Some(picked)
}

/// Evaluates (f(z), f'(z)) by a joint Horner pass.
fn horner_pair(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        d = d * z + p;
        p = p * z + Complex64::new(a, 0.0);
    }
    (p, d)
}
