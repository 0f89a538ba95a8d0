//! Reference cycle-type sets for the transitive groups that occur as Galois
//! groups of the fields in the census, keyed by degree.
//!
//! Symmetric, alternating, cyclic, dihedral, and full Frobenius groups on a
//! prime number of points come from closed forms. The remaining groups ship
//! as generator files (one permutation per line, cycle notation) expanded by
//! group closure on first use; every loaded set is checked against the
//! group's documented order, so a corrupted file cannot load silently.

use alloc::vec::Vec;

use once_cell::race::OnceBox;

use super::perm::{
    alternating_type_set, dihedral_prime_type_set, frobenius_prime_type_set, group_cycle_types,
    parse_cycles, symmetric_type_set, CycleTypeSet,
};
use super::GroupName;

/// A named group together with its exact cycle-type set, as used by the
/// statistical identification filter.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub name: GroupName,
    pub set: CycleTypeSet,
}

/// Parses a generator file (one permutation per line in cycle notation on
/// {1..degree}; blank lines and `#` comments ignored), closes the group,
/// and checks the order.
fn load_group(text: &str, degree: usize, expected_order: u64) -> CycleTypeSet {
    let gens: Vec<Vec<u8>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_cycles(l, degree).expect("malformed generator line"))
        .collect();
    let set = group_cycle_types(&gens).expect("group data exceeds the closure cap");
    assert_eq!(
        set.order, expected_order,
        "generator file closes to the wrong order"
    );
    set
}

macro_rules! group_file {
    ($fn_name:ident, $file:literal, $degree:literal, $order:literal) => {
        fn $fn_name() -> &'static CycleTypeSet {
            static SET: OnceBox<CycleTypeSet> = OnceBox::new();
            SET.get_or_init(|| {
                alloc::boxed::Box::new(load_group(
                    include_str!(concat!("../../data/groups/", $file)),
                    $degree,
                    $order,
                ))
            })
        }
    };
}

group_file!(pgl2_5, "pgl2_5.txt", 6, 120);
group_file!(psl2_7, "psl2_7.txt", 8, 168);
group_file!(pgl2_7, "pgl2_7.txt", 8, 336);
group_file!(agammal1_8, "agammal1_8.txt", 8, 168);
group_file!(agl3_2, "agl3_2.txt", 8, 1344);
group_file!(m9, "m9.txt", 9, 72);
group_file!(pgammal2_8, "pgammal2_8.txt", 9, 1512);
group_file!(pgl2_9, "pgl2_9.txt", 10, 720);
group_file!(pgammal2_9, "pgammal2_9.txt", 10, 1440);

/// The transitive groups that occur for primitive fields of the given
/// degree (6 through 11) in this census, largest first.
pub fn candidate_list(degree: usize) -> &'static [Candidate] {
    fn build(degree: usize) -> alloc::boxed::Box<Vec<Candidate>> {
        use GroupName::*;
        let list = match degree {
            6 => alloc::vec![
                Candidate { name: Sn, set: symmetric_type_set(6) },
                Candidate { name: Pgl2_5, set: pgl2_5().clone() },
            ],
            7 => alloc::vec![
                Candidate { name: Sn, set: symmetric_type_set(7) },
                Candidate { name: F42, set: frobenius_prime_type_set(7) },
                Candidate { name: D7, set: dihedral_prime_type_set(7) },
            ],
            8 => alloc::vec![
                Candidate { name: Sn, set: symmetric_type_set(8) },
                Candidate { name: An, set: alternating_type_set(8) },
                Candidate { name: T8_48, set: agl3_2().clone() },
                Candidate { name: T8_43, set: pgl2_7().clone() },
                Candidate { name: T8_37, set: psl2_7().clone() },
                Candidate { name: T8_36, set: agammal1_8().clone() },
            ],
            9 => alloc::vec![
                Candidate { name: Sn, set: symmetric_type_set(9) },
                Candidate { name: An, set: alternating_type_set(9) },
                Candidate { name: T9_32, set: pgammal2_8().clone() },
                Candidate { name: T9_16, set: m9().clone() },
            ],
            10 => alloc::vec![
                Candidate { name: Sn, set: symmetric_type_set(10) },
                Candidate { name: AutS6, set: pgammal2_9().clone() },
                Candidate { name: Pgl2_9, set: pgl2_9().clone() },
            ],
            11 => alloc::vec![
                Candidate { name: Sn, set: symmetric_type_set(11) },
                Candidate { name: F110, set: frobenius_prime_type_set(11) },
                Candidate { name: D11, set: dihedral_prime_type_set(11) },
            ],
            _ => panic!("no candidate table for degree {}", degree),
        };
        alloc::boxed::Box::new(list)
    }
    macro_rules! table {
        ($deg:literal) => {{
            static LIST: OnceBox<Vec<Candidate>> = OnceBox::new();
            LIST.get_or_init(|| build($deg))
        }};
    }
    match degree {
        6 => table!(6),
        7 => table!(7),
        8 => table!(8),
        9 => table!(9),
        10 => table!(10),
        11 => table!(11),
        _ => panic!("no candidate table for degree {}", degree),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::perm::type_is_even;
    use alloc::collections::BTreeSet;
    use alloc::vec;
    use alloc::vec::Vec;

    fn types(set: &CycleTypeSet) -> &BTreeSet<Vec<u8>> {
        &set.types
    }

    #[test]
    fn degree_six_projective_group_has_the_expected_shapes() {
        let g = pgl2_5();
        assert_eq!(g.order, 120);
        let expected: BTreeSet<Vec<u8>> = [
            vec![1, 1, 1, 1, 1, 1],
            vec![2, 2, 1, 1],
            vec![2, 2, 2],
            vec![3, 3],
            vec![4, 1, 1],
            vec![5, 1],
            vec![6],
        ]
        .into_iter()
        .collect();
        assert_eq!(types(g), &expected);
        assert!(!g.even_only());
        // A transposition or a (3,1,1,1) witness separates the full
        // symmetric group from this subgroup.
        assert!(!g.contains(&[2, 1, 1, 1, 1]));
        assert!(!g.contains(&[3, 1, 1, 1]));
    }

    #[test]
    fn degree_eight_linear_groups_have_documented_shape_sets() {
        let inner = psl2_7();
        assert_eq!(inner.order, 168);
        let expected: BTreeSet<Vec<u8>> = [
            vec![1; 8],
            vec![2, 2, 2, 2],
            vec![3, 3, 1, 1],
            vec![4, 4],
            vec![7, 1],
        ]
        .into_iter()
        .collect();
        assert_eq!(types(inner), &expected);
        assert!(inner.even_only());

        let full = pgl2_7();
        assert_eq!(full.order, 336);
        let expected_full: BTreeSet<Vec<u8>> = [
            vec![1; 8],
            vec![2, 2, 2, 2],
            vec![2, 2, 2, 1, 1],
            vec![3, 3, 1, 1],
            vec![4, 4],
            vec![6, 1, 1],
            vec![7, 1],
            vec![8],
        ]
        .into_iter()
        .collect();
        assert_eq!(types(full), &expected_full);
        assert!(!full.even_only());
        assert!(inner.is_subset_of(full));
    }

    #[test]
    fn degree_eight_affine_groups_have_documented_shape_sets() {
        let semilinear = agammal1_8();
        assert_eq!(semilinear.order, 168);
        let expected: BTreeSet<Vec<u8>> = [
            vec![1; 8],
            vec![2, 2, 2, 2],
            vec![3, 3, 1, 1],
            vec![6, 2],
            vec![7, 1],
        ]
        .into_iter()
        .collect();
        assert_eq!(types(semilinear), &expected);
        assert!(semilinear.even_only());

        let affine = agl3_2();
        assert_eq!(affine.order, 1344);
        assert!(affine.even_only());
        assert!(semilinear.is_subset_of(affine));
        // Shapes present in the full affine group but not the semilinear one.
        assert!(affine.contains(&[4, 2, 1, 1]));
        assert!(affine.contains(&[2, 2, 1, 1, 1, 1]));
        // The two order-168 groups are separated by their order-6 and
        // order-4 shapes.
        assert!(!semilinear.contains(&[4, 4]));
        assert!(semilinear.contains(&[6, 2]));
        assert!(!psl2_7().contains(&[6, 2]));
    }

    #[test]
    fn degree_nine_groups_have_documented_shape_sets() {
        let quaternion_affine = m9();
        assert_eq!(quaternion_affine.order, 72);
        let expected: BTreeSet<Vec<u8>> = [
            vec![1; 9],
            vec![2, 2, 2, 2, 1],
            vec![3, 3, 3],
            vec![4, 4, 1],
        ]
        .into_iter()
        .collect();
        assert_eq!(types(quaternion_affine), &expected);
        assert!(quaternion_affine.even_only());

        let semilinear = pgammal2_8();
        assert_eq!(semilinear.order, 1512);
        let expected_psl: BTreeSet<Vec<u8>> = [
            vec![1; 9],
            vec![2, 2, 2, 2, 1],
            vec![3, 3, 3],
            vec![3, 3, 1, 1, 1],
            vec![6, 2, 1],
            vec![7, 1, 1],
            vec![9],
        ]
        .into_iter()
        .collect();
        assert_eq!(types(semilinear), &expected_psl);
        assert!(semilinear.even_only());

        // The two are incomparable: order-4 shapes on one side, 7- and
        // 9-cycles on the other, so sampling separates them.
        assert!(!semilinear.contains(&[4, 4, 1]));
        assert!(!quaternion_affine.contains(&[7, 1, 1]));
    }

    #[test]
    fn degree_ten_projective_groups_have_documented_shape_sets() {
        let inner = pgl2_9();
        assert_eq!(inner.order, 720);
        let expected: BTreeSet<Vec<u8>> = [
            vec![1; 10],
            vec![2, 2, 2, 2, 1, 1],
            vec![2, 2, 2, 2, 2],
            vec![3, 3, 3, 1],
            vec![4, 4, 1, 1],
            vec![5, 5],
            vec![8, 1, 1],
            vec![10],
        ]
        .into_iter()
        .collect();
        assert_eq!(types(inner), &expected);
        assert!(!inner.even_only());

        let full = pgammal2_9();
        assert_eq!(full.order, 1440);
        assert!(inner.is_subset_of(full));
        assert!(full.contains(&[2, 2, 2, 1, 1, 1, 1]));
        assert!(full.contains(&[6, 3, 1]));
        assert!(!full.even_only());
    }

    #[test]
    fn candidate_lists_cover_the_census_degrees() {
        assert_eq!(candidate_list(6).len(), 2);
        assert_eq!(candidate_list(7).len(), 3);
        assert_eq!(candidate_list(8).len(), 6);
        assert_eq!(candidate_list(9).len(), 4);
        assert_eq!(candidate_list(10).len(), 3);
        assert_eq!(candidate_list(11).len(), 3);
        for degree in 6..=11 {
            for c in candidate_list(degree) {
                assert_eq!(c.set.degree, degree);
                assert!(c.set.contains(&vec![1u8; degree]));
            }
        }
    }

    #[test]
    fn every_candidate_set_lies_inside_the_symmetric_set() {
        for degree in 6..=11 {
            let sym = symmetric_type_set(degree);
            for c in candidate_list(degree) {
                assert!(c.set.is_subset_of(&sym));
                // Square-discriminant class agrees with the even-only test.
                for t in &c.set.types {
                    if !c.set.even_only() {
                        continue;
                    }
                    assert!(type_is_even(degree, t));
                }
            }
        }
    }
}
