//! Galois group identification for number fields of degree four through
//! eleven.
//!
//! Quartic and quintic fields are settled exactly by resolvents. For degree
//! six and above the module combines exact filters — the squareness class of
//! the field discriminant (square iff the group lies in the alternating
//! group), the cycle type of complex conjugation, and a block-compatibility
//! certificate of primitivity — with Frobenius sampling matched against the
//! exact cycle-type sets of the groups that can occur at each degree. A
//! sampled transposition (or 3-cycle, in the square-discriminant class)
//! together with a long prime cycle turns the label into a proven one; all
//! other assignments at degree six and above are statistical, with the
//! misidentification probability decaying geometrically in the number of
//! sampled primes because distinct candidates have distinct type sets.

pub mod fingerprint;
pub mod perm;
pub mod resolvents;
pub mod tables;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::exactmath::IntPoly;

pub use fingerprint::{frobenius_fingerprint, sampled_types};
pub use perm::{group_cycle_types, CycleTypeSet};
pub use resolvents::{quartic_group, quintic_group};
pub use tables::{candidate_list, Candidate};

/// The transitive groups assigned by this module, identified by the names
/// used in the census tables. `Sn` and `An` take their point count from the
/// degree carried alongside.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GroupName {
    /// Full symmetric group on `degree` points.
    Sn,
    /// Alternating group on `degree` points.
    An,
    /// Cyclic group of order 5.
    C5,
    /// Dihedral group of order 10 on 5 points.
    D5,
    /// Frobenius group of order 20 on 5 points.
    F20,
    /// Fractional-linear group on the 6 points of the projective line over
    /// the field with five elements (the exotic degree-6 copy of S5).
    Pgl2_5,
    /// Dihedral group of order 14 on 7 points.
    D7,
    /// Frobenius group of order 42 on 7 points.
    F42,
    /// Semilinear affine group on the field with eight elements (order 168).
    T8_36,
    /// Fractional-linear group of determinant-square maps over the field
    /// with seven elements, acting on 8 points (order 168).
    T8_37,
    /// Full fractional-linear group over the field with seven elements,
    /// acting on 8 points (order 336).
    T8_43,
    /// Full affine group of a 3-dimensional space over the field with two
    /// elements (order 1344).
    T8_48,
    /// Sharply 2-transitive quaternion affine group on 9 points (order 72).
    T9_16,
    /// Semilinear fractional group over the field with eight elements on
    /// 9 points (order 1512).
    T9_32,
    /// Full fractional-linear group over the field with nine elements on
    /// 10 points (order 720).
    Pgl2_9,
    /// Semilinear fractional group over the field with nine elements on
    /// 10 points (order 1440).
    AutS6,
    /// Dihedral group of order 22 on 11 points.
    D11,
    /// Frobenius group of order 110 on 11 points.
    F110,
    /// The field has a proper subfield; the group preserves a block system
    /// and is excluded from the primitive census rather than named further.
    Imprimitive,
}

impl GroupName {
    /// Display name at the given degree, matching the census tables.
    pub fn text(&self, degree: usize) -> alloc::string::String {
        use alloc::format;
        use alloc::string::ToString;
        match self {
            GroupName::Sn => format!("S{}", degree),
            GroupName::An => format!("A{}", degree),
            GroupName::C5 => "C5".to_string(),
            GroupName::D5 => "D5".to_string(),
            GroupName::F20 => "F20".to_string(),
            GroupName::Pgl2_5 => "PGL2(5)".to_string(),
            GroupName::D7 => "D7".to_string(),
            GroupName::F42 => "F42".to_string(),
            GroupName::T8_36 => "8T36".to_string(),
            GroupName::T8_37 => "PSL2(7)".to_string(),
            GroupName::T8_43 => "PGL2(7)".to_string(),
            GroupName::T8_48 => "8T48".to_string(),
            GroupName::T9_16 => "9T16".to_string(),
            GroupName::T9_32 => "PSL2(8).3".to_string(),
            GroupName::Pgl2_9 => "PGL2(9)".to_string(),
            GroupName::AutS6 => "Aut(S6)".to_string(),
            GroupName::D11 => "D11".to_string(),
            GroupName::F110 => "F110".to_string(),
            GroupName::Imprimitive => "imprimitive".to_string(),
        }
    }
}

/// Whether a label is backed by an exact proof or by sampling statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Certainty {
    /// Backed by a resolvent computation, a rigorous Frobenius witness, or
    /// a primitivity certificate plus a classified generator type.
    Proven,
    /// Consistent with every exact filter and every sampled type; the true
    /// group could in principle be a smaller candidate whose type set was
    /// not yet separated, with probability decaying in the sample count.
    Statistical,
}

/// A Galois group assignment for one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisLabel {
    /// Degree of the field (number of points the group acts on).
    pub degree: usize,
    pub name: GroupName,
    pub certainty: Certainty,
    /// For labels proven from sampled Frobenius types: the primes whose
    /// types certify the claim (long-prime-cycle prime and transposition or
    /// 3-cycle prime for the symmetric/alternating upgrades; the observing
    /// prime twice for the order-10 dihedral witness). `None` when the
    /// proof is by resolvent or the label is statistical.
    pub witness: Option<(u64, u64)>,
}

impl core::fmt::Display for GaloisLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.name.text(self.degree))
    }
}

/// Why identification failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaloisError {
    /// Group closure was asked to enumerate more than the supported number
    /// of elements.
    OrderCapExceeded,
    /// After exact filtering and sampling, no unique smallest candidate
    /// remains: `remaining` counts the incomparable minimal candidates
    /// still standing (zero when every candidate was excluded outright).
    /// Calling again with a larger sample count can separate candidates
    /// whose type sets differ.
    AmbiguousAfterSampling { remaining: usize },
}

impl core::fmt::Display for GaloisError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GaloisError::OrderCapExceeded => write!(f, "group order exceeds the closure cap"),
            GaloisError::AmbiguousAfterSampling { remaining } => {
                write!(f, "{} candidate groups remain after sampling", remaining)
            }
        }
    }
}

/// Exact integer squareness test.
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// (head, 1, 1, ..., 1) as a cycle type of n points.
fn tail_type(n: usize, head: u8) -> Vec<u8> {
    let mut t = alloc::vec![head];
    t.extend(core::iter::repeat(1u8).take(n - head as usize));
    t
}

/// A cycle of prime length greater than n/2 on fewer than n points: such an
/// element rules out every block system, so a primitive group containing a
/// transposition is symmetric and one containing a 3-cycle contains the
/// alternating group.
fn is_long_prime_cycle(n: usize, t: &[u8]) -> bool {
    let l = t[0] as usize;
    [2usize, 3, 5, 7].contains(&l)
        && 2 * l > n
        && l <= n - 1
        && t.len() == n - l + 1
        && t[1..].iter().all(|&x| x == 1)
}

/// Chooses a label for a degree-6..11 field from its exact invariants and
/// sampled Frobenius types.
///
/// `conjugation` is the cycle type of complex conjugation, i.e. one 2 per
/// complex-embedding pair and one 1 per real embedding, descending.
/// `samples` pairs each sampled prime with its factorization shape.
///
/// The decision sequence: refute every block system from the observed types
/// (failing that, a composite degree is labeled imprimitive); upgrade to a
/// proven symmetric/alternating label when a long prime cycle plus a
/// transposition/3-cycle was sampled; otherwise keep the candidates whose
/// type sets pass the squareness, conjugation, and sample filters and pick
/// the unique inclusion-minimal one, erring with the count of incomparable
/// minimal candidates when it is not unique.
pub fn select_label(
    degree: usize,
    disc_is_square: bool,
    conjugation: &[u8],
    samples: &[(u64, Vec<u8>)],
) -> Result<GaloisLabel, GaloisError> {
    assert!(
        (6..=11).contains(&degree),
        "selection applies to degrees six through eleven"
    );
    assert_eq!(
        conjugation.iter().map(|&x| x as usize).sum::<usize>(),
        degree,
        "conjugation type must partition the degree"
    );

    let mut observed: Vec<&[u8]> = samples.iter().map(|(_, t)| t.as_slice()).collect();
    observed.push(conjugation);

    // A single element incompatible with a block shape excludes that shape
    // for the whole group, because an imprimitive group's every element
    // permutes the same blocks.
    let certified_primitive = {
        let mut all_refuted = true;
        for b in 2..degree {
            if degree % b != 0 || degree / b < 2 {
                continue;
            }
            let s = degree / b;
            if !observed.iter().any(|t| !perm::type_admits_blocks(t, b, s)) {
                all_refuted = false;
                break;
            }
        }
        all_refuted
    };

    if !certified_primitive {
        // Composite degree and every observed type fits some block system:
        // the overwhelmingly likely explanation is a genuine block system,
        // since every primitive candidate contains block-refuting classes
        // of density at least about one seventh.
        return Ok(GaloisLabel {
            degree,
            name: GroupName::Imprimitive,
            certainty: Certainty::Statistical,
            witness: None,
        });
    }

    // Proven upgrades on a primitivity certificate.
    if let Some((p_long, _)) = samples
        .iter()
        .find(|(_, t)| is_long_prime_cycle(degree, t))
    {
        let transposition = tail_type(degree, 2);
        let three_cycle = tail_type(degree, 3);
        if !disc_is_square {
            if let Some((p_wit, _)) = samples.iter().find(|(_, t)| *t == transposition) {
                return Ok(GaloisLabel {
                    degree,
                    name: GroupName::Sn,
                    certainty: Certainty::Proven,
                    witness: Some((*p_long, *p_wit)),
                });
            }
        } else if perm::type_is_even(degree, conjugation) {
            if let Some((p_wit, _)) = samples.iter().find(|(_, t)| *t == three_cycle) {
                return Ok(GaloisLabel {
                    degree,
                    name: GroupName::An,
                    certainty: Certainty::Proven,
                    witness: Some((*p_long, *p_wit)),
                });
            }
        }
    }

    // Exact filters: squareness class, conjugation membership, samples.
    let passing: Vec<&Candidate> = candidate_list(degree)
        .iter()
        .filter(|c| {
            c.set.even_only() == disc_is_square
                && c.set.contains(conjugation)
                && samples.iter().all(|(_, t)| c.set.contains(t))
        })
        .collect();

    if passing.is_empty() {
        return Err(GaloisError::AmbiguousAfterSampling { remaining: 0 });
    }

    // Unique inclusion-minimal candidate. Containment chains (a smaller
    // group whose whole type set was sampled) resolve toward the smaller
    // group: a larger group would have shown one of its extra types.
    let minimal: Vec<&&Candidate> = passing
        .iter()
        .filter(|c| {
            !passing.iter().any(|o| {
                o.name != c.name
                    && o.set.types.len() < c.set.types.len()
                    && o.set.is_subset_of(&c.set)
            })
        })
        .collect();
    debug_assert!(!minimal.is_empty());

    if minimal.len() == 1 {
        Ok(GaloisLabel {
            degree,
            name: minimal[0].name,
            certainty: Certainty::Statistical,
            witness: None,
        })
    } else {
        Err(GaloisError::AmbiguousAfterSampling {
            remaining: minimal.len(),
        })
    }
}

/// Identifies the Galois group of the field defined by the monic
/// irreducible polynomial `f` with field discriminant `field_disc` and the
/// given signature `(r1, r2)`, sampling `m` primes at degree six and above.
///
/// Degrees four and five ignore `m` and go through exact resolvents. The
/// error [`GaloisError::AmbiguousAfterSampling`] invites a retry with a
/// larger `m`.
pub fn identify_group(
    f: &IntPoly,
    field_disc: &BigInt,
    signature: (usize, usize),
    m: usize,
) -> Result<GaloisLabel, GaloisError> {
    let degree = f.degree();
    assert!(
        (4..=11).contains(&degree),
        "identification covers degrees four through eleven"
    );
    assert!(f.is_monic(), "need a monic defining polynomial");
    assert_eq!(
        signature.0 + 2 * signature.1,
        degree,
        "signature must match the degree"
    );
    match degree {
        4 => Ok(quartic_group(f, field_disc)),
        5 => Ok(quintic_group(f, field_disc)),
        _ => {
            let mut conjugation = alloc::vec![2u8; signature.1];
            conjugation.extend(core::iter::repeat(1u8).take(signature.0));
            let samples = sampled_types(f, m);
            select_label(
                degree,
                is_perfect_square(field_disc),
                &conjugation,
                &samples,
            )
        }
    }
}
