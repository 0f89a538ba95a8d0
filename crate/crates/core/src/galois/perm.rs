//! Permutations on {1..n}, cycle types, and group closure.
//!
//! A permutation is stored as a dense image table: `p[i]` is the 0-indexed
//! image of point `i`. A cycle type is the partition of n formed by the
//! cycle lengths, kept in descending order, so types compare and hash as
//! plain vectors. Reference type sets for the named groups come either
//! from closed forms (symmetric, alternating, and the cyclic, dihedral,
//! and full Frobenius groups on a prime number of points) or from explicit
//! generator lists expanded by breadth-first closure.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::GaloisError;

/// Cycle-type set of a finite transitive permutation group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleTypeSet {
    /// Number of points the group acts on.
    pub degree: usize,
    /// Group order.
    pub order: u64,
    /// Every cycle type (descending partition of `degree`) the group contains.
    pub types: BTreeSet<Vec<u8>>,
}

impl CycleTypeSet {
    pub fn contains(&self, t: &[u8]) -> bool {
        self.types.contains(t)
    }

    /// True when every member type is an even permutation, i.e. the group
    /// embeds in the alternating group.
    pub fn even_only(&self) -> bool {
        self.types.iter().all(|t| type_is_even(self.degree, t))
    }

    pub fn is_subset_of(&self, other: &CycleTypeSet) -> bool {
        self.types.is_subset(&other.types)
    }
}

/// Sign of a permutation with the given cycle type: even iff n minus the
/// number of cycles is even.
pub fn type_is_even(degree: usize, t: &[u8]) -> bool {
    (degree - t.len()) % 2 == 0
}

/// Parses one permutation in cycle notation, e.g. `(1 2 3)(4 5)` or
/// `(1,2,3)(4,5)`, acting on {1..n}. Points outside 1..=n, repeated points,
/// and malformed text give `None`. The empty string and `()` denote the
/// identity.
pub fn parse_cycles(s: &str, n: usize) -> Option<Vec<u8>> {
    let mut images: Vec<u8> = (0..n as u8).collect();
    let mut seen = vec![false; n];
    let mut rest = s.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return None;
        }
        let close = rest.find(')')?;
        let body = &rest[1..close];
        rest = rest[close + 1..].trim_start();
        let mut cycle: Vec<usize> = Vec::new();
        for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let v: usize = tok.parse().ok()?;
            if v < 1 || v > n {
                return None;
            }
            if seen[v - 1] {
                return None;
            }
            seen[v - 1] = true;
            cycle.push(v - 1);
        }
        for (k, &p) in cycle.iter().enumerate() {
            images[p] = cycle[(k + 1) % cycle.len()] as u8;
        }
    }
    Some(images)
}

/// Composition `a` after `b`: the result maps i to a[b[i]].
pub fn compose(a: &[u8], b: &[u8]) -> Vec<u8> {
    b.iter().map(|&i| a[i as usize]).collect()
}

/// Cycle type of a permutation, as a descending partition.
pub fn cycle_type(p: &[u8]) -> Vec<u8> {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut parts: Vec<u8> = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0u8;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            i = p[i] as usize;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|x, y| y.cmp(x));
    parts
}

/// Maximum group order `group_cycle_types` will enumerate.
pub const ORDER_CAP: usize = 100_000;

/// Expands the group generated by the given permutations by breadth-first
/// closure and records its order and exact cycle-type set.
///
/// All generators must act on the same point set {1..n}; enumeration stops
/// with `OrderCapExceeded` as soon as more than [`ORDER_CAP`] elements are
/// found.
pub fn group_cycle_types(gens: &[Vec<u8>]) -> Result<CycleTypeSet, GaloisError> {
    assert!(!gens.is_empty(), "need at least one generator");
    let n = gens[0].len();
    assert!(
        gens.iter().all(|g| g.len() == n),
        "generators act on different point sets"
    );
    let identity: Vec<u8> = (0..n as u8).collect();
    let mut elements: BTreeSet<Vec<u8>> = BTreeSet::new();
    elements.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(e) = frontier.pop() {
        for g in gens {
            let prod = compose(g, &e);
            if !elements.contains(&prod) {
                if elements.len() >= ORDER_CAP {
                    return Err(GaloisError::OrderCapExceeded);
                }
                elements.insert(prod.clone());
                frontier.push(prod);
            }
        }
    }
    let types: BTreeSet<Vec<u8>> = elements.iter().map(|e| cycle_type(e)).collect();
    Ok(CycleTypeSet {
        degree: n,
        order: elements.len() as u64,
        types,
    })
}

/// All partitions of n in descending order (each partition itself descending).
pub fn partitions(n: usize) -> Vec<Vec<u8>> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = remaining.min(max_part);
        for part in (1..=top).rev() {
            prefix.push(part as u8);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Type set of the full symmetric group: every partition of n.
pub fn symmetric_type_set(n: usize) -> CycleTypeSet {
    CycleTypeSet {
        degree: n,
        order: factorial(n),
        types: partitions(n).into_iter().collect(),
    }
}

/// Type set of the alternating group: the even partitions of n.
pub fn alternating_type_set(n: usize) -> CycleTypeSet {
    CycleTypeSet {
        degree: n,
        order: factorial(n) / 2,
        types: partitions(n)
            .into_iter()
            .filter(|t| type_is_even(n, t))
            .collect(),
    }
}

/// Type set of the cyclic group of prime order p on p points:
/// the identity and the p-cycles.
pub fn cyclic_prime_type_set(p: usize) -> CycleTypeSet {
    let mut types = BTreeSet::new();
    types.insert(vec![1u8; p]);
    types.insert(vec![p as u8]);
    CycleTypeSet {
        degree: p,
        order: p as u64,
        types,
    }
}

/// Type set of the dihedral group of order 2p on p points (p an odd prime):
/// rotations are p-cycles, reflections fix one point and pair the rest.
pub fn dihedral_prime_type_set(p: usize) -> CycleTypeSet {
    let mut set = cyclic_prime_type_set(p);
    let mut refl = vec![2u8; (p - 1) / 2];
    refl.push(1);
    set.types.insert(refl);
    set.order = 2 * p as u64;
    set
}

/// Type set of the full Frobenius group of order p(p-1) on p points (the
/// affine maps x -> ax+b over the field with p elements): translations are
/// p-cycles and every other non-identity element fixes one point and splits
/// the rest into cycles of equal length d for some divisor d > 1 of p-1.
pub fn frobenius_prime_type_set(p: usize) -> CycleTypeSet {
    let mut set = cyclic_prime_type_set(p);
    for d in 2..=(p - 1) {
        if (p - 1) % d == 0 {
            let mut t = vec![d as u8; (p - 1) / d];
            t.push(1);
            t.sort_unstable_by(|x, y| y.cmp(x));
            set.types.insert(t);
        }
    }
    set.order = (p * (p - 1)) as u64;
    set
}

/// Decides whether a single element with this cycle type can preserve some
/// partition of the n points into `b` blocks of size `s` (b*s = n).
///
/// The element permutes the blocks; a block-cycle of length k is covered by
/// original cycles whose lengths are k*m with the m-values summing to s.
/// The search assigns cycles to block-cycles exactly that way; each new
/// block-cycle is opened on the largest unassigned cycle, which canonicalizes
/// the search without losing solutions.
pub fn type_admits_blocks(t: &[u8], b: usize, s: usize) -> bool {
    // counts[len] = multiplicity of cycles of that length; lengths <= n <= 255.
    let mut counts = [0u32; 16];
    for &part in t {
        counts[part as usize] += 1;
    }
    fn search(counts: &mut [u32; 16], open: Option<(usize, usize)>, blocks_left: usize, s: usize) -> bool {
        match open {
            Some((_, fill)) if fill == s => search(counts, None, blocks_left, s),
            Some((k, fill)) => {
                for len in (1..16).rev() {
                    if counts[len] == 0 || len % k != 0 || len / k > s - fill {
                        continue;
                    }
                    counts[len] -= 1;
                    if search(counts, Some((k, fill + len / k)), blocks_left, s) {
                        counts[len] += 1;
                        return true;
                    }
                    counts[len] += 1;
                }
                false
            }
            None => {
                let largest = match (1..16).rev().find(|&l| counts[l] > 0) {
                    Some(l) => l,
                    None => return blocks_left == 0,
                };
                counts[largest] -= 1;
                for k in 1..=largest {
                    if largest % k != 0 || k > blocks_left || largest / k > s {
                        continue;
                    }
                    if search(counts, Some((k, largest / k)), blocks_left - k, s) {
                        counts[largest] += 1;
                        return true;
                    }
                }
                counts[largest] += 1;
                false
            }
        }
    }
    search(&mut counts, None, b, s)
}

/// All n! permutations of {0..n-1}, in a fixed deterministic order.
pub fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(factorial(n) as usize);
    let mut cur: Vec<u8> = (0..n as u8).collect();
    fn heap(k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Vec<u8> {
        parse_cycles(s, n).expect("well-formed cycles")
    }

    #[test]
    fn parsing_accepts_both_separators_and_rejects_garbage() {
        assert_eq!(p("(1 2 3)", 3), vec![1, 2, 0]);
        assert_eq!(p("(1,2,3)", 3), vec![1, 2, 0]);
        assert_eq!(p("(1 2)(3 4)", 4), vec![1, 0, 3, 2]);
        assert_eq!(p("", 4), vec![0, 1, 2, 3]);
        assert!(parse_cycles("(1 2", 4).is_none());
        assert!(parse_cycles("(1 5)", 4).is_none());
        assert!(parse_cycles("(1 2)(2 3)", 4).is_none());
        assert!(parse_cycles("(0 1)", 4).is_none());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let a = p("(1 2)", 3);
        let b = p("(2 3)", 3);
        // (1 2) after (2 3): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
        assert_eq!(compose(&a, &b), p("(1 2 3)", 3));
    }

    #[test]
    fn cycle_types_come_out_descending() {
        assert_eq!(cycle_type(&p("(1 2 3)(4 5)", 6)), vec![3, 2, 1]);
        assert_eq!(cycle_type(&p("", 4)), vec![1, 1, 1, 1]);
        assert_eq!(cycle_type(&p("(1 2 3 4 5 6)", 6)), vec![6]);
    }

    #[test]
    fn three_cycle_generates_c3() {
        let set = group_cycle_types(&[p("(1 2 3)", 3)]).unwrap();
        assert_eq!(set.order, 3);
        let expected: BTreeSet<Vec<u8>> = [vec![1, 1, 1], vec![3]].into_iter().collect();
        assert_eq!(set.types, expected);
    }

    #[test]
    fn dihedral_on_seven_points_closes_to_fourteen_elements() {
        let rot = p("(1 2 3 4 5 6 7)", 7);
        let refl = p("(2 7)(3 6)(4 5)", 7);
        let set = group_cycle_types(&[rot, refl]).unwrap();
        assert_eq!(set.order, 14);
        let expected: BTreeSet<Vec<u8>> = [vec![1; 7], vec![7], vec![2, 2, 2, 1]]
            .into_iter()
            .collect();
        assert_eq!(set.types, expected);
        assert_eq!(set, dihedral_prime_type_set(7));
    }

    #[test]
    fn s4_generators_reach_all_five_partitions() {
        let set = group_cycle_types(&[p("(1 2 3 4)", 4), p("(1 2)", 4)]).unwrap();
        assert_eq!(set.order, 24);
        assert_eq!(set.types.len(), 5);
        assert_eq!(set, symmetric_type_set(4));
    }

    #[test]
    fn closure_stops_at_the_order_cap() {
        // A9 has order 181440 > ORDER_CAP.
        let gens = [p("(1 2 3 4 5 6 7 8 9)", 9), p("(1 2 3)", 9)];
        assert_eq!(group_cycle_types(&gens), Err(GaloisError::OrderCapExceeded));
    }

    #[test]
    fn closed_forms_match_explicit_generators() {
        let a4 = group_cycle_types(&[p("(1 2 3)", 4), p("(2 3 4)", 4)]).unwrap();
        assert_eq!(a4, alternating_type_set(4));

        let c5 = group_cycle_types(&[p("(1 2 3 4 5)", 5)]).unwrap();
        assert_eq!(c5, cyclic_prime_type_set(5));

        let d5 = group_cycle_types(&[p("(1 2 3 4 5)", 5), p("(2 5)(3 4)", 5)]).unwrap();
        assert_eq!(d5, dihedral_prime_type_set(5));

        // x -> x+1 and x -> 2x on the field with five elements.
        let f20 = group_cycle_types(&[p("(1 2 3 4 5)", 5), p("(2 3 5 4)", 5)]).unwrap();
        assert_eq!(f20, frobenius_prime_type_set(5));
        assert_eq!(f20.order, 20);

        let s5 = group_cycle_types(&[p("(1 2 3 4 5)", 5), p("(1 2)", 5)]).unwrap();
        assert_eq!(s5, symmetric_type_set(5));
        assert_eq!(s5.types.len(), 7);

        let a5 = group_cycle_types(&[p("(1 2 3 4 5)", 5), p("(1 2 3)", 5)]).unwrap();
        assert_eq!(a5, alternating_type_set(5));
    }

    #[test]
    fn frobenius_sets_nest_as_subgroups() {
        assert!(cyclic_prime_type_set(5).is_subset_of(&dihedral_prime_type_set(5)));
        assert!(dihedral_prime_type_set(5).is_subset_of(&frobenius_prime_type_set(5)));
        assert!(frobenius_prime_type_set(5).is_subset_of(&symmetric_type_set(5)));
        // The even part of F20 is D5: the order-4 elements are odd.
        assert!(!frobenius_prime_type_set(5).even_only());
        assert!(dihedral_prime_type_set(5).even_only());
    }

    #[test]
    fn partition_counts_match_the_partition_function() {
        // p(4)=5, p(6)=11, p(9)=30, p(11)=56.
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(6).len(), 11);
        assert_eq!(partitions(9).len(), 30);
        assert_eq!(partitions(11).len(), 56);
        for t in partitions(9) {
            assert_eq!(t.iter().map(|&x| x as usize).sum::<usize>(), 9);
            assert!(t.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn block_compatibility_matches_hand_checked_cases() {
        // Two 4-cycles and a fixed point cannot preserve 3 blocks of 3.
        assert!(!type_admits_blocks(&[4, 4, 1], 3, 3));
        // Three 3-cycles and a fixed point refute both decompositions of 10.
        assert!(!type_admits_blocks(&[3, 3, 3, 1], 5, 2));
        assert!(!type_admits_blocks(&[3, 3, 3, 1], 2, 5));
        // A 5-cycle with one fixed point refutes both decompositions of 6.
        assert!(!type_admits_blocks(&[5, 1], 2, 3));
        assert!(!type_admits_blocks(&[5, 1], 3, 2));
        // Compatible examples: elements of C6 preserve 2 blocks of 3.
        assert!(type_admits_blocks(&[2, 2, 2], 2, 3));
        assert!(type_admits_blocks(&[3, 3], 2, 3));
        assert!(type_admits_blocks(&[6], 2, 3));
        assert!(type_admits_blocks(&[1, 1, 1, 1, 1, 1], 2, 3));
        // A 4-cycle plus 2-cycle fills two blocks of 3 in one block swap.
        assert!(type_admits_blocks(&[4, 2], 2, 3));
        // An 8-cycle with two fixed points: fine for 5 blocks of 2,
        // impossible for 2 blocks of 5.
        assert!(type_admits_blocks(&[8, 1, 1], 5, 2));
        assert!(!type_admits_blocks(&[8, 1, 1], 2, 5));
    }

    #[test]
    fn heap_enumeration_is_complete_and_duplicate_free() {
        let perms = all_permutations(5);
        assert_eq!(perms.len(), 120);
        let set: BTreeSet<Vec<u8>> = perms.into_iter().collect();
        assert_eq!(set.len(), 120);
    }
}
