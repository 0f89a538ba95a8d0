//! Probability law for class groups with support away from a set of primes.
//!
//! In the random-group model, a finite abelian group `H` of order coprime
//! to every prime in `S` occurs as the relevant class-group invariant with
//! probability
//!
//! ```text
//! pr(H) = c(e, S) / (|H|^e |Aut H|),
//! ```
//!
//! where `e` is the weight exponent (1 for the basic law, 2 for relative
//! class groups of CM fields) and the normalizing constant is the
//! convergent product
//!
//! ```text
//! c(e, S) = prod_{k >= e+1} [ zeta(k)^-1 prod_{p in S} (1 - p^-k)^-1 ].
//! ```
//!
//! The product is truncated at `k = 210`, where the omitted factors differ
//! from 1 by less than `2^-210`.  The identity behind the constant,
//! `sum_H 1/(|H|^e |Aut H|) = 1/c(e, S)` over groups with support away from
//! `S`, is exercised directly by the tests through [`cm_mass_sum`].

use num_bigint::BigInt;
use num_traits::One;

use super::abelian::{abelian_types_of_order, AbelianGroupType};
use super::fixed::Fx;
use super::zeta::{zeta, MAX_S};
use super::HeuristicsError;
use crate::exactmath::is_prime_u64;

/// The normalizing constant `c(e, S)`; `excluded` lists the primes in `S`.
pub fn cm_constant(e: u32, excluded: &[u64]) -> Fx {
    assert!((1..=8).contains(&e), "weight exponent out of range");
    for &p in excluded {
        assert!(is_prime_u64(p), "{p} is not prime");
    }
    let mut prod = Fx::one();
    for k in e + 1..=MAX_S {
        prod = prod.div(zeta(k));
        for &p in excluded {
            // 1/(1 - p^-k) = p^k / (p^k - 1)
            let pk = BigInt::from(p).pow(k);
            prod = prod.mul(&Fx::from_ratio(&pk, &(&pk - BigInt::one())));
        }
    }
    prod
}

/// Probability of the group `h` under the weight-`e` law away from `S`.
pub fn cm_probability(
    h: &AbelianGroupType,
    e: u32,
    excluded: &[u64],
) -> Result<Fx, HeuristicsError> {
    for p in h.primes() {
        if excluded.contains(&p) {
            return Err(HeuristicsError::BadSupport { prime: p });
        }
    }
    let denom = h.order().pow(e) * h.aut_order();
    Ok(cm_constant(e, excluded).mul(&Fx::from_ratio(&BigInt::one(), &denom)))
}

/// Partial sum of `1/(|H|^e |Aut H|)` over all abelian `H` of order at most
/// `cutoff` and coprime to `excluded`; converges to `1/c(e, S)`.
pub fn cm_mass_sum(e: u32, excluded: &[u64], cutoff: u64) -> Fx {
    let mut acc = Fx::zero();
    for n in 1..=cutoff {
        if excluded.iter().any(|&p| n % p == 0) {
            continue;
        }
        for h in abelian_types_of_order(n) {
            let denom = h.order().pow(e) * h.aut_order();
            acc = acc.add(&Fx::from_ratio(&BigInt::one(), &denom));
        }
    }
    acc
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

    fn group(label: &str) -> AbelianGroupType {
        AbelianGroupType::from_label(label).expect("valid label")
    }

    #[test]
    fn constants_reference_digits() {
        assert_close(
            &cm_constant(1, &[2]),
            "0.754458172249049575254792280987",
            -25,
        );
        assert_close(
            &cm_constant(2, &[5]),
            "0.724019795302287271241296710278",
            -25,
        );
        assert_close(
            &cm_constant(2, &[2, 3]),
            "0.984725878649332358932284691678",
            -25,
        );
        assert_close(
            &cm_constant(2, &[2, 5]),
            "0.940161411975578397874787836577",
            -25,
        );
    }

    #[test]
    fn trivial_group_probability_is_the_constant() {
        let p = cm_probability(&AbelianGroupType::trivial(), 2, &[5]).unwrap();
        assert_eq!(p, cm_constant(2, &[5]));
    }

    #[test]
    fn weight_one_row_away_from_two() {
        // odd groups under the weight-1 law: c / (|H| |Aut H|)
        let cases = [
            ("1", "0.7544581722490496"),
            ("3", "0.1257430287081749"),
            ("5", "0.03772290861245248"),
            ("7", "0.01796328981545356"),
            ("9", "0.01397144763424166"),
            ("3x3", "0.001746430954280207"),
            ("11", "0.006858710656809542"),
            ("13", "0.004836270334929805"),
            ("15", "0.006287151435408746"),
        ];
        for (label, want) in cases {
            let p = cm_probability(&group(label), 1, &[2]).unwrap();
            assert_close(&p, want, -15);
        }
    }

    #[test]
    fn weight_two_row_away_from_five() {
        // relative class-group law: c / (|H|^2 |Aut H|)
        let cases = [
            ("1", "0.7240197953022873"),
            ("2", "0.1810049488255718"),
            ("3", "0.04022332196123818"),
            ("4", "0.02262561860319648"),
            ("2x2", "0.007541872867732159"),
            ("6", "0.01005583049030955"),
            ("7", "0.002462652364973766"),
            ("8", "0.00282820232539956"),
            ("4x2", "0.00141410116269978"),
            ("2x2x2", "0.00006733815060475142"),
            ("9", "0.001489752665231044"),
            ("3x3", "0.0001862190831538805"),
        ];
        for (label, want) in cases {
            let p = cm_probability(&group(label), 2, &[5]).unwrap();
            assert_close(&p, want, -15);
        }
    }

    #[test]
    fn excluded_support_is_rejected() {
        assert_eq!(
            cm_probability(&group("2"), 1, &[2]),
            Err(HeuristicsError::BadSupport { prime: 2 })
        );
        assert_eq!(
            cm_probability(&group("15"), 2, &[5]),
            Err(HeuristicsError::BadSupport { prime: 5 })
        );
        assert!(cm_probability(&group("15"), 2, &[2]).is_ok());
    }

    #[test]
    fn mass_sum_inverts_the_constant_weight_two() {
        // weight 2 converges fast: within 1e-6 of 1/c by order 10^4
        let sum = cm_mass_sum(2, &[5], 10_000);
        let inv_c = Fx::one().div(&cm_constant(2, &[5]));
        let diff = sum.sub(&inv_c).abs();
        let tol = Fx::from_u64_ratio(1, 1_000_000);
        assert!(
            diff.cmp_val(&tol) == Ordering::Less,
            "gap {}",
            diff.to_decimal_string(12)
        );
    }

    #[test]
    fn mass_sum_brackets_the_constant_weight_one() {
        // weight 1 has a ~1/cutoff tail: the partial sum must sit strictly
        // below 1/c and within 1e-3 of it at cutoff 10^4
        let sum = cm_mass_sum(1, &[2], 10_000);
        let inv_c = Fx::one().div(&cm_constant(1, &[2]));
        let gap = inv_c.sub(&sum);
        assert!(gap.is_positive(), "partial sum must undershoot");
        let tol = Fx::from_u64_ratio(1, 1_000);
        assert!(
            gap.cmp_val(&tol) == Ordering::Less,
            "gap {}",
            gap.to_decimal_string(12)
        );
    }
}
