//! Two-adic refinement of the relative class-group law.
//!
//! The two-part of the relevant class groups does not follow the weight-2
//! law of [`super::cm`]; instead a 2-group `H` of rank `r` occurs with
//! probability
//!
//! ```text
//! P2(H) = C * 2^((r^2-r)/2) * prod_{i=3}^{r+2} (1 - 2^-i) / (|H|^2 |Aut H|).
//! ```
//!
//! The constant `C` is pinned down by normalization: summing the weights
//! over all 2-group types (truncated at order `2^40`, where the blocks of
//! fixed order have decayed below `10^-35`) and inverting.  The odd part is
//! independent and follows the weight-2 law away from `{2, 5}`, so the
//! combined prediction for a group `H` of order coprime to 5 is
//! `P2(Syl_2 H) * c(2, {2,5}) / (|H_odd|^2 |Aut H_odd|)`.

use alloc::boxed::Box;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;
use once_cell::race::OnceBox;

use super::abelian::{abelian_types_of_order, partitions_into, AbelianGroupType};
use super::cm::cm_constant;
use super::fixed::Fx;
use super::HeuristicsError;

const TWO_CUTOFF_LOG2: u32 = 40;

/// `prod_{i=3}^{r+2} (1 - 2^-i)` for `r = 0..=max_rank`.
fn rank_products(max_rank: u32) -> Vec<Fx> {
    let mut out = Vec::with_capacity(max_rank as usize + 1);
    out.push(Fx::one());
    for r in 1..=max_rank {
        let i = r + 2;
        let pk = BigInt::from(2u32).pow(i);
        let factor = Fx::from_ratio(&(&pk - BigInt::one()), &pk);
        out.push(out[r as usize - 1].mul(&factor));
    }
    out
}

/// Unnormalized weight of the 2-group with the given exponent partition.
fn two_group_weight(partition: &[u32], rank_prod: &[Fx]) -> Fx {
    let r = partition.len() as u32;
    let a: u32 = partition.iter().sum();
    let aut = AbelianGroupType::from_primary_parts(&[(2, partition)]).aut_order();
    // 2^((r^2 - r)/2 - 2a) * prod / |Aut|
    let exp = (r * r - r) as i32 / 2 - 2 * a as i32;
    Fx::pow2(exp)
        .mul(&rank_prod[r as usize])
        .mul(&Fx::from_ratio(&BigInt::one(), &aut))
}

static TWO_CONSTANT: OnceBox<Fx> = OnceBox::new();
static ODD_CONSTANT: OnceBox<Fx> = OnceBox::new();

/// The normalizing constant `C` of the two-part law.
pub fn malle_two_constant() -> &'static Fx {
    TWO_CONSTANT.get_or_init(|| {
        let rank_prod = rank_products(TWO_CUTOFF_LOG2);
        let mut total = Fx::zero();
        for a in 0..=TWO_CUTOFF_LOG2 {
            for partition in partitions_into(a, a.max(1)) {
                total = total.add(&two_group_weight(&partition, &rank_prod));
            }
        }
        Box::new(Fx::one().div(&total))
    })
}

fn odd_constant() -> &'static Fx {
    ODD_CONSTANT.get_or_init(|| Box::new(cm_constant(2, &[2, 5])))
}

/// Probability of the 2-group `h2` under the refined two-part law.
pub fn malle_two_part_probability(h2: &AbelianGroupType) -> Result<Fx, HeuristicsError> {
    if let Some(p) = h2.primes().find(|&p| p != 2) {
        return Err(HeuristicsError::BadSupport { prime: p });
    }
    let rank = h2.exponents_at(2).len() as u32;
    let rank_prod = rank_products(rank);
    Ok(malle_two_constant().mul(&two_group_weight(h2.exponents_at(2), &rank_prod)))
}

/// Combined prediction for a group of order coprime to 5: refined law on
/// the two-part, weight-2 law away from `{2, 5}` on the odd part.
pub fn malle_probability(h: &AbelianGroupType) -> Result<Fx, HeuristicsError> {
    if h.primes().any(|p| p == 5) {
        return Err(HeuristicsError::BadSupport { prime: 5 });
    }
    let two = malle_two_part_probability(&h.sylow(2))?;
    let odd = h.odd_part();
    let denom = odd.order().pow(2) * odd.aut_order();
    Ok(two
        .mul(odd_constant())
        .mul(&Fx::from_ratio(&BigInt::one(), &denom)))
}

/// Sum of [`malle_probability`] over every abelian group of order at most
/// `cutoff` and coprime to 5; converges to 1.
pub fn malle_normalization(cutoff: u64) -> Fx {
    let mut acc = Fx::zero();
    for n in 1..=cutoff {
        if n % 5 == 0 {
            continue;
        }
        for h in abelian_types_of_order(n) {
            acc = acc.add(&malle_probability(&h).expect("coprime to 5"));
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
    fn two_part_constant_digits() {
        assert_close(
            malle_two_constant(),
            "0.7864170783658267457061677",
            -24,
        );
    }

    #[test]
    fn two_part_small_groups() {
        let trivial = malle_two_part_probability(&AbelianGroupType::trivial()).unwrap();
        assert_eq!(&trivial, malle_two_constant());
        let c2 = malle_two_part_probability(&group("2")).unwrap();
        assert_close(&c2, "0.1720287358925246006232242", -24);
        // same rank: P2(C2)/P2(C4) = (16*2)/(4*1) = 8 exactly
        let c4 = malle_two_part_probability(&group("4")).unwrap();
        let ratio = c2.div(&c4);
        assert_close(&ratio, "8", -30);
    }

    #[test]
    fn combined_row_reference() {
        let cases = [
            ("1", "0.7393589907981248"),
            ("2", "0.1617347792370898"),
            ("3", "0.04107549948878471"),
            ("4", "0.02021684740463622"),
            ("2x2", "0.01263552962789764"),
            ("6", "0.008985265513171655"),
            ("7", "0.00251482649931335"),
            ("8", "0.002527105925579528"),
            ("4x2", "0.002369161805230807"),
            ("2x2x2", "0.0004371667616794942"),
            ("9", "0.001521314795880915"),
            ("3x3", "0.0001901643494851144"),
        ];
        for (label, want) in cases {
            let p = malle_probability(&group(label)).unwrap();
            assert_close(&p, want, -15);
        }
    }

    #[test]
    fn support_at_five_is_rejected() {
        assert_eq!(
            malle_probability(&group("5")),
            Err(HeuristicsError::BadSupport { prime: 5 })
        );
        assert_eq!(
            malle_two_part_probability(&group("6")),
            Err(HeuristicsError::BadSupport { prime: 3 })
        );
    }

    #[test]
    fn normalization_sums_to_one() {
        let total = malle_normalization(4096);
        let one = Fx::one();
        // the joint order cutoff leaves a genuine ~3e-8 tail from odd
        // groups near the bound (sum of 1/(n^2 phi(n)) past 4096)
        let gap = total.sub(&one).abs();
        let tol = Fx::from_ratio(&BigInt::one(), &BigInt::from(10u64).pow(7));
        assert!(
            gap.cmp_val(&tol) == Ordering::Less,
            "normalization {} strays from 1",
            total.to_decimal_string(16)
        );
        // the bounds used by the acceptance gate
        assert!(total.cmp_val(&Fx::from_u64_ratio(999, 1000)) == Ordering::Greater);
        assert!(total.cmp_val(&Fx::from_u64_ratio(10001, 10000)) == Ordering::Less);
    }
}
