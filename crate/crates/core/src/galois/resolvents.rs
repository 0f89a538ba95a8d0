//! Exact resolvent computations for quartic and quintic fields.
//!
//! The quartic case reduces to the cubic resolvent, whose reducibility
//! detects a proper subfield and whose irreducibility leaves only the
//! symmetric and alternating groups, separated by discriminant squareness.
//!
//! The quintic case evaluates a degree-six resolvent attached to the
//! pentagon invariant u = (sum of products over a 5-cycle's edges) minus
//! (sum over its diagonals): the stabilizer of u^2 is exactly the order-20
//! Frobenius group, so u^2 takes six values, one per coset, and their monic
//! product polynomial has integer coefficients. The values are evaluated
//! with certified interval arithmetic over isolated roots and the integer
//! coefficients are read off exactly; precision escalates until every
//! coefficient interval traps a unique integer. A rational (hence integer)
//! root of the resolvent is equivalent to the Galois group fixing a coset,
//! i.e. to solvability; the nonsolvable side splits by squareness, and the
//! solvable square-discriminant side splits into the cyclic and dihedral
//! groups by sampling for a (2,2,1) Frobenius shape, which is a rigorous
//! witness when found.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use once_cell::race::OnceBox;

use crate::exactmath::{complex_roots, is_irreducible_over_q, CBox, Dyadic, IntPoly, RootsError};

use super::fingerprint::sampled_types;
use super::perm::all_permutations;
use super::{is_perfect_square, Certainty, GaloisLabel, GroupName};

/// Galois group of an irreducible monic quartic, decided exactly.
///
/// The cubic resolvent of x^4 + ax^3 + bx^2 + cx + d is
/// y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2); it is irreducible
/// exactly when the quartic field has no quadratic subfield, leaving S4 or
/// A4 by discriminant squareness. A reducible resolvent means the group
/// preserves a block system, reported as the imprimitive label.
pub fn quartic_group(f: &IntPoly, field_disc: &BigInt) -> GaloisLabel {
    assert_eq!(f.degree(), 4, "quartic classification needs degree four");
    assert!(f.is_monic(), "need a monic defining polynomial");
    let a = f.coeff(3);
    let b = f.coeff(2);
    let c = f.coeff(1);
    let d = f.coeff(0);
    let four = BigInt::from(4);
    let resolvent = IntPoly::from_coeffs(alloc::vec![
        -(&a * &a * &d - &four * &b * &d + &c * &c),
        &a * &c - &four * &d,
        -&b,
        BigInt::one(),
    ]);
    let irreducible =
        is_irreducible_over_q(&resolvent).expect("cubic resolvent coefficients stay small");
    if !irreducible {
        return GaloisLabel {
            degree: 4,
            name: GroupName::Imprimitive,
            certainty: Certainty::Proven,
            witness: None,
        };
    }
    let name = if is_perfect_square(field_disc) {
        GroupName::An
    } else {
        GroupName::Sn
    };
    GaloisLabel {
        degree: 4,
        name,
        certainty: Certainty::Proven,
        witness: None,
    }
}

/// Number of primes sampled to separate the cyclic from the dihedral
/// quintic group; the dihedral group shows its (2,2,1) shape at half of all
/// primes, so the miss probability is 2^-120.
const DIHEDRAL_SAMPLES: usize = 120;

/// Galois group of an irreducible monic quintic, decided by the degree-six
/// resolvent (with a rigorous Frobenius witness separating the dihedral
/// group from the cyclic one, the only statistical case).
pub fn quintic_group(f: &IntPoly, field_disc: &BigInt) -> GaloisLabel {
    assert_eq!(f.degree(), 5, "quintic classification needs degree five");
    assert!(f.is_monic(), "need a monic defining polynomial");
    let (g, resolvent) = squarefree_sextic_resolvent(f);
    let solvable = has_integer_root(&resolvent);
    let square = is_perfect_square(field_disc);
    let proven = |name| GaloisLabel {
        degree: 5,
        name,
        certainty: Certainty::Proven,
        witness: None,
    };
    if !solvable {
        // Only the symmetric and alternating groups are nonsolvable and
        // transitive on five points.
        return proven(if square { GroupName::An } else { GroupName::Sn });
    }
    if !square {
        // Solvable with odd elements: the full Frobenius group.
        return proven(GroupName::F20);
    }
    // Solvable inside the alternating group: cyclic or dihedral. A sampled
    // (2,2,1) shape is an element of the group, so it proves the dihedral
    // label outright; seeing only (1,1,1,1,1) and (5) leaves the cyclic
    // label with misidentification probability 2^-samples.
    for (p, t) in sampled_types(&g, DIHEDRAL_SAMPLES) {
        assert!(
            t == [1, 1, 1, 1, 1] || t == [5] || t == [2, 2, 1],
            "impossible Frobenius shape for a solvable square-class quintic"
        );
        if t == [2, 2, 1] {
            return GaloisLabel {
                degree: 5,
                name: GroupName::D5,
                certainty: Certainty::Proven,
                witness: Some((p, p)),
            };
        }
    }
    GaloisLabel {
        degree: 5,
        name: GroupName::C5,
        certainty: Certainty::Statistical,
        witness: None,
    }
}

/// Certified-precision schedule for resolvent evaluation.
const PRECISION_LADDER: [u64; 6] = [192, 384, 768, 1536, 3072, 6144];

/// Interval mantissas are kept at this multiple of the root-isolation
/// precision, so compression never dominates the error budget.
const WORK_BITS_FACTOR: u64 = 4;

/// Root-squaring attempts before giving up on a degenerate resolvent.
const TSCHIRNHAUS_ATTEMPTS: usize = 12;

/// Returns a defining polynomial of the same field whose sextic resolvent
/// is squarefree, together with that resolvent.
///
/// The pentagon invariant is unchanged by root translation, so a collision
/// among the six resolvent values cannot be fixed by shifting; instead the
/// polynomial is replaced by the characteristic polynomial of (root + t)^2,
/// which generates the same field (the degree is prime) and reshuffles the
/// invariant values.
fn squarefree_sextic_resolvent(f: &IntPoly) -> (IntPoly, IntPoly) {
    let mut g = f.clone();
    for attempt in 0..TSCHIRNHAUS_ATTEMPTS {
        if g.degree() == 5 && g.is_squarefree() {
            let resolvent = cayley_resolvent(&g);
            if resolvent.is_squarefree() {
                return (g, resolvent);
            }
        }
        let shifted = f.translate(&BigInt::from(-(attempt as i64) - 1));
        g = squared_root_poly(&shifted);
    }
    panic!("no squarefree sextic resolvent after root-squaring transformations");
}

/// The six edge/diagonal pair structures indexing the cosets of the
/// order-20 stabilizer: images of the pentagon under all of S5, keyed up to
/// the edge/diagonal swap (which negates u and fixes u^2).
fn coset_pair_structures() -> &'static [(Vec<(usize, usize)>, Vec<(usize, usize)>)] {
    type Pairs = Vec<(usize, usize)>;
    static STRUCTURES: OnceBox<Vec<(Pairs, Pairs)>> = OnceBox::new();
    STRUCTURES.get_or_init(|| {
        const EDGES: [(usize, usize); 5] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        const DIAGONALS: [(usize, usize); 5] = [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)];
        let mut reps: BTreeMap<(Pairs, Pairs), (Pairs, Pairs)> = BTreeMap::new();
        for g in all_permutations(5) {
            let map_pairs = |pairs: &[(usize, usize); 5]| -> Pairs {
                let mut v: Pairs = pairs
                    .iter()
                    .map(|&(i, j)| {
                        let (a, b) = (g[i] as usize, g[j] as usize);
                        if a < b {
                            (a, b)
                        } else {
                            (b, a)
                        }
                    })
                    .collect();
                v.sort_unstable();
                v
            };
            let e = map_pairs(&EDGES);
            let d = map_pairs(&DIAGONALS);
            let key = if e <= d {
                (e.clone(), d.clone())
            } else {
                (d.clone(), e.clone())
            };
            reps.entry(key).or_insert((e, d));
        }
        assert_eq!(reps.len(), 6, "the pentagon invariant has six cosets");
        Box::new(reps.into_values().collect())
    })
}

/// Monic integer sextic whose roots are the six values of the squared
/// pentagon invariant, evaluated by certified interval arithmetic with an
/// escalating precision ladder.
fn cayley_resolvent(f: &IntPoly) -> IntPoly {
    debug_assert_eq!(f.degree(), 5);
    let structures = coset_pair_structures();
    'ladder: for &bits in &PRECISION_LADDER {
        let work_bits = bits * WORK_BITS_FACTOR;
        let roots = match complex_roots(f, bits) {
            Ok(r) => r,
            Err(RootsError::PrecisionExhausted) => continue,
            Err(RootsError::NonSquarefree) => unreachable!("caller ensures squarefreeness"),
        };
        let boxes: Vec<CBox> = roots.into_iter().map(|r| r.region).collect();
        // Multiply out prod_c (y - theta_c) with interval coefficients; the
        // leading coefficient stays the exact point 1.
        let mut coeffs = alloc::vec![CBox::zero(); 7];
        coeffs[0] = CBox::point(Dyadic::one(), Dyadic::zero());
        let mut deg = 0usize;
        for (edges, diagonals) in structures {
            let mut u = CBox::zero();
            for &(i, j) in edges {
                u = u.add(&boxes[i].mul(&boxes[j]));
            }
            for &(i, j) in diagonals {
                u = u.sub(&boxes[i].mul(&boxes[j]));
            }
            let theta = u.square().compress(work_bits);
            for k in (0..=deg + 1).rev() {
                let shifted = if k > 0 {
                    coeffs[k - 1].clone()
                } else {
                    CBox::zero()
                };
                coeffs[k] = shifted.sub(&theta.mul(&coeffs[k])).compress(work_bits);
            }
            deg += 1;
        }
        let mut ints: Vec<BigInt> = Vec::with_capacity(7);
        for c in &coeffs {
            if !c.im.contains_zero() {
                continue 'ladder;
            }
            match c.re.unique_integer() {
                Some(v) => ints.push(v),
                None => continue 'ladder,
            }
        }
        assert!(ints[6].is_one(), "resolvent is monic by construction");
        return IntPoly::from_coeffs(ints);
    }
    panic!("resolvent interval arithmetic did not converge");
}

/// Whether the monic squarefree polynomial has an integer root (for monic
/// integer polynomials every rational root is an integer). Each certified
/// real-root interval is narrower than 1, so it traps at most one integer,
/// which is then checked exactly.
fn has_integer_root(r: &IntPoly) -> bool {
    let roots = complex_roots(r, 64).expect("squarefree polynomial isolates");
    for rb in roots.iter().filter(|rb| rb.is_real) {
        if let Some(k) = rb.region.re.unique_integer() {
            if r.eval(&k).is_zero() {
                return true;
            }
        }
    }
    false
}

/// Power sums p_0..p_count of the roots of a monic polynomial, by the
/// Newton identities (exact integer arithmetic).
fn power_sums(f: &IntPoly, count: usize) -> Vec<BigInt> {
    debug_assert!(f.is_monic());
    let n = f.degree();
    // Elementary symmetric functions: e_i = (-1)^i * coefficient of x^(n-i).
    let e: Vec<BigInt> = (1..=n)
        .map(|i| {
            let c = f.coeff(n - i);
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    let mut p: Vec<BigInt> = Vec::with_capacity(count + 1);
    p.push(BigInt::from(n as i64));
    for k in 1..=count {
        let mut acc = BigInt::zero();
        for i in 1..k.min(n + 1) {
            let term = &e[i - 1] * &p[k - i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if k <= n {
            let term = BigInt::from(k as i64) * &e[k - 1];
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p.push(acc);
    }
    p
}

/// Monic polynomial whose roots are the squares of the roots of `f`,
/// recovered from power sums (the even-indexed power sums of `f`).
fn squared_root_poly(f: &IntPoly) -> IntPoly {
    let n = f.degree();
    let p = power_sums(f, 2 * n);
    // Elementary symmetric functions of the squares, by inverted Newton
    // identities; every division is exact.
    let mut elem: Vec<BigInt> = alloc::vec![BigInt::one()];
    for k in 1..=n {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            let term = &elem[k - i] * &p[2 * i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (q, r) = acc.div_rem(&BigInt::from(k as i64));
        assert!(r.is_zero(), "Newton inversion divides exactly");
        elem.push(q);
    }
    let mut coeffs = alloc::vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    for k in 1..=n {
        coeffs[n - k] = if k % 2 == 1 {
            -elem[k].clone()
        } else {
            elem[k].clone()
        };
    }
    IntPoly::from_coeffs(coeffs)
}
