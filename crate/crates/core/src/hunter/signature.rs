//! Signature filters: which pairs (r1, r2) of real embedding counts and
//! complex-conjugate pair counts a candidate polynomial may have.

use alloc::string::String;
use alloc::vec::Vec;

/// A set of admissible signatures `(r1, r2)` with `r1 + 2*r2 = degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignatureSet {
    /// Explicit list of `(r1, r2)` pairs, each with `r1 + 2 r2 = degree`.
    Exact(Vec<(u32, u32)>),
    /// Every signature of the degree.
    All,
}

impl SignatureSet {
    pub fn single(r1: u32, r2: u32) -> Self {
        SignatureSet::Exact(alloc::vec![(r1, r2)])
    }

    /// Named presets: `tc` (totally complex, even degree only), `r1le1`
    /// (the unique signature with at most one real embedding, as parity
    /// dictates), `tr` (totally real). Returns `None` for unknown names or
    /// a `tc` request in odd degree.
    pub fn preset(name: &str, degree: u32) -> Option<SignatureSet> {
        match name {
            "tc" => (degree % 2 == 0).then(|| SignatureSet::single(0, degree / 2)),
            "r1le1" => Some(SignatureSet::single(degree % 2, degree / 2)),
            "tr" => Some(SignatureSet::single(degree, 0)),
            _ => None,
        }
    }

    /// Membership test for a concrete signature of the given degree.
    pub fn contains(&self, degree: u32, r1: u32, r2: u32) -> bool {
        debug_assert!(r1 + 2 * r2 == degree);
        match self {
            SignatureSet::All => true,
            SignatureSet::Exact(v) => v.contains(&(r1, r2)),
        }
    }

    /// Expands to the explicit pair list for a degree, validating each
    /// member against `r1 + 2 r2 = degree`.
    pub fn pairs(&self, degree: u32) -> Vec<(u32, u32)> {
        let out = match self {
            SignatureSet::Exact(v) => v.clone(),
            SignatureSet::All => (0..=degree / 2)
                .map(|r2| (degree - 2 * r2, r2))
                .collect(),
        };
        for &(r1, r2) in &out {
            assert!(
                r1 + 2 * r2 == degree,
                "signature ({r1},{r2}) does not match degree {degree}"
            );
        }
        assert!(!out.is_empty(), "empty signature set");
        out
    }

    /// Canonical text form: `all`, or sorted deduplicated `r1,r2` pairs
    /// joined by `+` (e.g. `0,2` or `0,3+2,2`). Stable across runs; used
    /// verbatim in checkpoint files and output headers.
    pub fn to_text(&self) -> String {
        match self {
            SignatureSet::All => String::from("all"),
            SignatureSet::Exact(v) => {
                let mut pairs = v.clone();
                pairs.sort_unstable();
                pairs.dedup();
                let mut s = String::new();
                for (i, (r1, r2)) in pairs.iter().enumerate() {
                    if i > 0 {
                        s.push('+');
                    }
                    s.push_str(&alloc::format!("{},{}", r1, r2));
                }
                s
            }
        }
    }

    /// Parses the canonical text form back; `None` on malformed input.
    pub fn from_text(text: &str) -> Option<SignatureSet> {
        if text == "all" {
            return Some(SignatureSet::All);
        }
        let mut pairs = Vec::new();
        for part in text.split('+') {
            let (a, b) = part.split_once(',')?;
            pairs.push((a.parse().ok()?, b.parse().ok()?));
        }
        if pairs.is_empty() {
            return None;
        }
        pairs.sort_unstable();
        pairs.dedup();
        Some(SignatureSet::Exact(pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_resolve_by_degree_parity() {
        assert_eq!(SignatureSet::preset("tc", 4), Some(SignatureSet::single(0, 2)));
        assert_eq!(SignatureSet::preset("tc", 10), Some(SignatureSet::single(0, 5)));
        assert_eq!(SignatureSet::preset("tc", 5), None);
        assert_eq!(SignatureSet::preset("r1le1", 4), Some(SignatureSet::single(0, 2)));
        assert_eq!(SignatureSet::preset("r1le1", 5), Some(SignatureSet::single(1, 2)));
        assert_eq!(SignatureSet::preset("r1le1", 11), Some(SignatureSet::single(1, 5)));
        assert_eq!(SignatureSet::preset("tr", 6), Some(SignatureSet::single(6, 0)));
        assert_eq!(SignatureSet::preset("bogus", 4), None);
    }

    #[test]
    fn membership_and_expansion() {
        let tc = SignatureSet::single(0, 2);
        assert!(tc.contains(4, 0, 2));
        assert!(!tc.contains(4, 2, 1));
        assert!(SignatureSet::All.contains(4, 4, 0));
        assert_eq!(
            SignatureSet::All.pairs(5),
            alloc::vec![(5, 0), (3, 1), (1, 2)]
        );
    }

    #[test]
    fn text_form_round_trips() {
        for set in [
            SignatureSet::All,
            SignatureSet::single(0, 2),
            SignatureSet::Exact(alloc::vec![(2, 2), (0, 3)]),
        ] {
            let text = set.to_text();
            let back = SignatureSet::from_text(&text).unwrap();
            assert_eq!(back.to_text(), text);
            for r2 in 0..=3 {
                let r1 = 6 - 2 * r2;
                assert_eq!(set.contains(6, r1, r2), back.contains(6, r1, r2));
            }
        }
        assert_eq!(SignatureSet::from_text("0,2").unwrap(), SignatureSet::single(0, 2));
        assert!(SignatureSet::from_text("junk").is_none());
        assert!(SignatureSet::from_text("").is_none());
    }
}
