//! Finite abelian group types and their automorphism group orders.
//!
//! A group type is stored as a map from each prime `p` to the nonincreasing
//! partition giving the exponents of its `p`-power cyclic factors, so
//! `C12 x C2 = {2: [2, 1], 3: [1]}`.  The automorphism order of a `p`-group
//! with ascending exponents `e_1 <= ... <= e_n` is the Hillar–Rhea product
//!
//! ```text
//! |Aut| = prod_k (p^d_k - p^(k-1)) * prod_j p^(e_j (n - d_j))
//!                                  * prod_i p^((e_i - 1)(n - c_i + 1))
//! ```
//!
//! with `d_k = max{l : e_l = e_k}` and `c_k = min{l : e_l = e_k}`, and the
//! full automorphism order is the product over primes.  For small groups an
//! independent count is available that enumerates homomorphic generator
//! images directly and counts the surjective ones.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::exactmath::factor_integer;

/// Isomorphism type of a finite abelian group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct AbelianGroupType {
    /// prime -> nonincreasing positive exponents of its cyclic p-factors
    parts: BTreeMap<u64, Vec<u32>>,
}

impl AbelianGroupType {
    /// The trivial group.
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Build from explicit primary parts; exponent lists are sorted and
    /// zero entries dropped.
    pub fn from_primary_parts(parts: &[(u64, &[u32])]) -> Self {
        let mut map: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &(p, exps) in parts {
            let entry = map.entry(p).or_default();
            entry.extend(exps.iter().copied().filter(|&e| e > 0));
        }
        map.retain(|_, v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            !v.is_empty()
        });
        AbelianGroupType { parts: map }
    }

    /// The direct sum of cyclic groups of the given orders (factors of 1
    /// are ignored).  Returns `None` when a factor cannot be factored.
    pub fn from_cyclic_factors(orders: &[u64]) -> Option<Self> {
        let mut map: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &m in orders {
            if m == 0 {
                return None;
            }
            if m == 1 {
                continue;
            }
            let f = factor_integer(&BigInt::from(m));
            if !f.is_certified() {
                return None;
            }
            for (p, e) in &f.factors {
                map.entry(p.to_u64()?).or_default().push(*e);
            }
        }
        for v in map.values_mut() {
            v.sort_unstable_by(|a, b| b.cmp(a));
        }
        Some(AbelianGroupType { parts: map })
    }

    /// Parse a label of cyclic orders joined by `x`, e.g. `"4x2"`; `"1"` is
    /// the trivial group.
    pub fn from_label(label: &str) -> Option<Self> {
        let mut orders = Vec::new();
        for piece in label.split('x') {
            orders.push(piece.trim().parse::<u64>().ok()?);
        }
        Self::from_cyclic_factors(&orders)
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.is_empty()
    }

    /// Primes dividing the order.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.parts.keys().copied()
    }

    /// Group order.
    pub fn order(&self) -> BigInt {
        let mut n = BigInt::one();
        for (&p, exps) in &self.parts {
            n *= BigInt::from(p).pow(exps.iter().sum::<u32>());
        }
        n
    }

    /// The Sylow p-subgroup.
    pub fn sylow(&self, p: u64) -> Self {
        let mut map = BTreeMap::new();
        if let Some(v) = self.parts.get(&p) {
            map.insert(p, v.clone());
        }
        AbelianGroupType { parts: map }
    }

    /// The subgroup of odd order (all parts at odd primes).
    pub fn odd_part(&self) -> Self {
        self.coprime_part(&[2])
    }

    /// The largest subgroup of order coprime to every listed prime.
    pub fn coprime_part(&self, primes: &[u64]) -> Self {
        let mut map = self.parts.clone();
        map.retain(|p, _| !primes.contains(p));
        AbelianGroupType { parts: map }
    }

    /// Elementary divisors `d_1, d_2, ...` with `d_{i+1} | d_i`.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        let rows = self
            .parts
            .values()
            .map(Vec::len)
            .max()
            .unwrap_or(0);
        let mut divisors = Vec::with_capacity(rows);
        for i in 0..rows {
            let mut d = BigInt::one();
            for (&p, exps) in &self.parts {
                if let Some(&e) = exps.get(i) {
                    d *= BigInt::from(p).pow(e);
                }
            }
            divisors.push(d);
        }
        divisors
    }

    /// Order of the automorphism group, via the Hillar–Rhea formula applied
    /// to each primary part.
    pub fn aut_order(&self) -> BigInt {
        let mut total = BigInt::one();
        for (&p, exps) in &self.parts {
            total *= aut_order_primary(p, exps);
        }
        total
    }

    /// Exponent vector at `p` (nonincreasing), empty if `p` is coprime to
    /// the order.
    pub fn exponents_at(&self, p: u64) -> &[u32] {
        self.parts.get(&p).map(|v| v.as_slice()).unwrap_or(&[])
    }
}

impl fmt::Display for AbelianGroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        let labels: Vec<String> = self
            .elementary_divisors()
            .iter()
            .map(|d| d.to_string())
            .collect();
        f.write_str(&labels.join("x"))
    }
}

/// `|Aut|` of the abelian p-group with the given nonincreasing exponents.
fn aut_order_primary(p: u64, exps_desc: &[u32]) -> BigInt {
    let e: Vec<u32> = exps_desc.iter().rev().copied().collect(); // ascending
    let n = e.len();
    let p = BigInt::from(p);
    let mut total = BigInt::one();
    for k in 0..n {
        // d_k = max index with the same exponent, 1-based; k itself 0-based
        let d = e.iter().rposition(|&x| x == e[k]).unwrap() + 1;
        total *= p.pow(d as u32) - p.pow(k as u32);
    }
    for j in 0..n {
        let d = e.iter().rposition(|&x| x == e[j]).unwrap() + 1;
        total *= p.pow(e[j] * (n - d) as u32);
    }
    for i in 0..n {
        let c = e.iter().position(|&x| x == e[i]).unwrap() + 1;
        total *= p.pow((e[i] - 1) * (n - c + 1) as u32);
    }
    total
}

/// All partitions of `m` into nonincreasing positive parts, each part at
/// most `max_part`, in lexicographically decreasing order.
pub(crate) fn partitions_into(m: u32, max_part: u32) -> Vec<Vec<u32>> {
    if m == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    let top = m.min(max_part);
    for first in (1..=top).rev() {
        for mut rest in partitions_into(m - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All isomorphism types of abelian groups of order `n`, in a fixed
/// deterministic order.
pub fn abelian_types_of_order(n: u64) -> Vec<AbelianGroupType> {
    assert!(n >= 1);
    let f = factor_integer(&BigInt::from(n));
    assert!(f.is_certified());
    let primaries: Vec<(u64, Vec<Vec<u32>>)> = f
        .factors
        .iter()
        .map(|(p, a)| (p.to_u64().expect("prime fits u64"), partitions_into(*a, *a)))
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<(u64, Vec<u32>)>> = alloc::vec![Vec::new()];
    for (p, options) in &primaries {
        let mut next = Vec::new();
        for partial in &stack {
            for opt in options {
                let mut ext = partial.clone();
                ext.push((*p, opt.clone()));
                next.push(ext);
            }
        }
        stack = next;
    }
    for combo in stack {
        let parts: Vec<(u64, &[u32])> =
            combo.iter().map(|(p, v)| (*p, v.as_slice())).collect();
        out.push(AbelianGroupType::from_primary_parts(&parts));
    }
    out
}

/// Automorphism order by direct enumeration of generator images, for groups
/// of order at most 64.  Each homomorphism from the group to itself is fixed
/// by the images of the canonical cyclic generators; an image tuple gives an
/// automorphism exactly when the images generate the whole group.
pub fn aut_order_by_enumeration(h: &AbelianGroupType) -> u64 {
    let order = h.order().to_u64().expect("group too large");
    assert!(order <= 64, "enumeration check limited to order <= 64");
    let moduli: Vec<u64> = h
        .elementary_divisors()
        .iter()
        .map(|d| d.to_u64().expect("divisor fits"))
        .collect();
    let n = order as usize;
    if moduli.is_empty() {
        return 1;
    }

    // mixed-radix element encoding and the full addition table
    let k = moduli.len();
    let mut add = alloc::vec![0u8; n * n];
    for a in 0..n {
        for b in 0..n {
            let (mut x, mut y, mut s, mut w) = (a as u64, b as u64, 0u64, 1u64);
            for &m in &moduli {
                s += ((x % m + y % m) % m) * w;
                x /= m;
                y /= m;
                w *= m;
            }
            add[a * n + b] = s as u8;
        }
    }
    let add_of = |a: usize, b: usize| add[a * n + b] as usize;

    // torsion[i] = bitmask of x with moduli[i] * x = 0
    let mut torsion = alloc::vec![0u64; k];
    for (i, &m) in moduli.iter().enumerate() {
        for x in 0..n {
            let mut acc = 0usize;
            for _ in 0..m {
                acc = add_of(acc, x);
            }
            if acc == 0 {
                torsion[i] |= 1 << x;
            }
        }
    }

    // suffix capacity: product of the remaining moduli
    let mut suffix = alloc::vec![1u64; k + 1];
    for i in (0..k).rev() {
        suffix[i] = suffix[i + 1] * moduli[i];
    }

    let translate = |span: u64, t: usize| -> u64 {
        let mut out = 0u64;
        let mut rest = span;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << add_of(b, t);
        }
        out
    };
    // subgroup generated by span (a subgroup) and x
    let closure = |span: u64, x: usize| -> u64 {
        let mut acc = span;
        let mut t = x;
        while span >> t & 1 == 0 {
            acc |= translate(span, t);
            t = add_of(t, x);
        }
        acc
    };

    let elem2 = moduli.iter().all(|&m| m == 2);

    struct Ctx<'a> {
        n: usize,
        k: usize,
        moduli: &'a [u64],
        torsion: &'a [u64],
        suffix: &'a [u64],
        elem2: bool,
    }
    fn dfs(
        ctx: &Ctx<'_>,
        closure: &impl Fn(u64, usize) -> u64,
        level: usize,
        span: u64,
        size: u64,
    ) -> u64 {
        if size * ctx.suffix[level] < ctx.n as u64 {
            return 0;
        }
        // in an elementary 2-group every descent doubles the span, so the
        // last two generator counts depend only on the sizes
        if ctx.elem2 && ctx.k >= 2 && level == ctx.k - 2 {
            return (ctx.n as u64 - size) * (ctx.n as u64 - 2 * size);
        }
        if level == ctx.k {
            return u64::from(size == ctx.n as u64);
        }
        let m = ctx.moduli[level];
        let cands = ctx.torsion[level];
        if level == ctx.k - 1 && is_small_prime(m) {
            // a prime-order generator multiplies the span size by exactly m
            // unless it already lies in the span
            return if size == ctx.n as u64 {
                u64::from(cands.count_ones())
            } else if m * size == ctx.n as u64 {
                u64::from((cands & !span).count_ones())
            } else {
                0
            };
        }
        let mut count = 0;
        let mut rest = cands;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let new_span = closure(span, x);
            count += dfs(
                ctx,
                closure,
                level + 1,
                new_span,
                u64::from(new_span.count_ones()),
            );
        }
        count
    }

    let ctx = Ctx {
        n,
        k,
        moduli: &moduli,
        torsion: &torsion,
        suffix: &suffix,
        elem2,
    };
    dfs(&ctx, &closure, 0, 1, 1)
}

fn is_small_prime(m: u64) -> bool {
    m >= 2 && (2..m).all(|d| m % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::ToString;

    fn group(label: &str) -> AbelianGroupType {
        AbelianGroupType::from_label(label).expect("valid label")
    }

    #[test]
    fn labels_roundtrip_and_normalize() {
        assert_eq!(group("4x2").to_string(), "4x2");
        assert_eq!(group("2x4").to_string(), "4x2");
        assert_eq!(group("6x2").to_string(), "6x2");
        // C12 x C2 and C4 x C6 are the same group
        assert_eq!(group("12x2"), group("4x6"));
        assert_eq!(group("12x2").to_string(), "12x2");
        assert_eq!(group("1").to_string(), "1");
        assert!(group("1").is_trivial());
        assert_eq!(group("2x2x2").to_string(), "2x2x2");
        assert_eq!(AbelianGroupType::from_label("0"), None);
        assert_eq!(AbelianGroupType::from_label("x"), None);
    }

    #[test]
    fn order_and_parts() {
        let g = group("12x2");
        assert_eq!(g.order(), BigInt::from(24));
        assert_eq!(g.sylow(2).to_string(), "4x2");
        assert_eq!(g.sylow(3).to_string(), "3");
        assert_eq!(g.odd_part().to_string(), "3");
        assert_eq!(g.exponents_at(2), &[2, 1]);
        assert_eq!(g.exponents_at(5), &[] as &[u32]);
        assert!(group("1").odd_part().is_trivial());
    }

    #[test]
    fn aut_orders_match_known_values() {
        let cases = [
            ("1", 1u64),
            ("2", 1),
            ("3", 2),
            ("6", 2),
            ("3x3", 48),
            ("4x2", 8),
            ("4x2x2", 192),
            ("8", 4),
            ("4x4", 96),
            ("9", 6),
            ("15", 8),
            ("2x2x2", 168),
            ("9x3", 108),
            ("8x4x2", 2048),
        ];
        for (label, want) in cases {
            assert_eq!(
                group(label).aut_order(),
                BigInt::from(want),
                "Aut({label})"
            );
        }
    }

    #[test]
    fn aut_orders_of_large_two_groups() {
        let big = [
            ("4x2x2x2x2", 10_321_920u64),
            ("2x2x2x2x2", 9_999_360),
            ("2x2x2x2x2x2", 20_158_709_760),
        ];
        for (label, want) in big {
            assert_eq!(group(label).aut_order(), BigInt::from(want), "{label}");
        }
    }

    #[test]
    fn type_counts_by_order() {
        assert_eq!(abelian_types_of_order(1).len(), 1);
        assert_eq!(abelian_types_of_order(16).len(), 5);
        assert_eq!(abelian_types_of_order(32).len(), 7);
        assert_eq!(abelian_types_of_order(64).len(), 11);
        assert_eq!(abelian_types_of_order(36).len(), 4);
        assert_eq!(abelian_types_of_order(30).len(), 1);
    }

    #[test]
    fn enumeration_matches_formula_up_to_order_64() {
        for n in 1..=64u64 {
            for h in abelian_types_of_order(n) {
                let brute = aut_order_by_enumeration(&h);
                assert_eq!(
                    h.aut_order(),
                    BigInt::from(brute),
                    "Aut mismatch for {} (order {})",
                    format!("{h}"),
                    n
                );
            }
        }
    }
}
