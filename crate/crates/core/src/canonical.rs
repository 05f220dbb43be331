//! Named finite orders: chains, antichains, `N`, fences and finite prefixes
//! of the binary tree and its relatives.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Canonical {
    Chain,
    Antichain,
    N,
    BinaryTreePrefix,
    ReversedBinaryTreePrefix,
    PerpPrefix,
    Fence,
}

impl Canonical {
    pub const ALL: [Canonical; 7] = [
        Canonical::Chain,
        Canonical::Antichain,
        Canonical::N,
        Canonical::BinaryTreePrefix,
        Canonical::ReversedBinaryTreePrefix,
        Canonical::PerpPrefix,
        Canonical::Fence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Canonical::Chain => "chain",
            Canonical::Antichain => "antichain",
            Canonical::N => "N",
            Canonical::BinaryTreePrefix => "binary_tree_prefix",
            Canonical::ReversedBinaryTreePrefix => "reversed_binary_tree_prefix",
            Canonical::PerpPrefix => "perp_prefix",
            Canonical::Fence => "fence",
        }
    }
}

impl FromStr for Canonical {
    type Err = Error;

    fn from_str(s: &str) -> Result<Canonical> {
        Canonical::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl fmt::Display for Canonical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Element names `a, b, c, ...` for small orders, `e0, e1, ...` beyond 26.
pub fn letter_ids(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..n).map(|i| format!("e{i}")).collect()
    }
}

/// Builds the named order with size parameter `k`.
///
/// * `chain`, `antichain`: `k` elements.
/// * `N`: the four-point order `1 < 0`, `1 < 2`, `3 < 2` (ignores `k`).
/// * `binary_tree_prefix`: 0/1 sequences of length `< k` under prefix order.
/// * `reversed_binary_tree_prefix`: the same, reversed.
/// * `perp_prefix`: same carrier, `s < t` iff `s = u0s'` and `t = u1t'`.
/// * `fence`: the zigzag `a < b > c < ...` on `k + 2` elements.
pub fn canonical(name: Canonical, k: usize) -> Result<Poset> {
    match name {
        Canonical::Chain => {
            let ids = letter_ids(k);
            Poset::from_index_pairs(ids, (1..k).map(|i| (i - 1, i)))
        }
        Canonical::Antichain => Poset::from_index_pairs(letter_ids(k), []),
        Canonical::N => Poset::new(["0", "1", "2", "3"], [("1", "0"), ("1", "2"), ("3", "2")]),
        Canonical::BinaryTreePrefix => binary_sequences(k, |s, t| t.len() > s.len() && t.starts_with(s)),
        Canonical::ReversedBinaryTreePrefix => binary_sequences(k, |s, t| s.len() > t.len() && s.starts_with(t)),
        Canonical::PerpPrefix => binary_sequences(k, perp_less),
        Canonical::Fence => {
            let n = k + 2;
            let pairs = (1..n).map(|i| if i % 2 == 1 { (i - 1, i) } else { (i, i - 1) });
            Poset::from_index_pairs(letter_ids(n), pairs)
        }
    }
}

/// Parses a name and builds it.
pub fn canonical_by_name(name: &str, k: usize) -> Result<Poset> {
    canonical(name.parse()?, k)
}

fn perp_less(s: &str, t: &str) -> bool {
    let common = s.bytes().zip(t.bytes()).take_while(|(a, b)| a == b).count();
    s.as_bytes().get(common) == Some(&b'0') && t.as_bytes().get(common) == Some(&b'1')
}

/// All 0/1 strings of length `< k` in length-then-lexicographic order.
fn sequences(k: usize) -> Vec<String> {
    let mut out = Vec::new();
    for len in 0..k {
        for bits in 0..(1usize << len) {
            out.push((0..len).rev().map(|b| if bits >> b & 1 == 1 { '1' } else { '0' }).collect());
        }
    }
    out
}

fn binary_sequences(k: usize, less: impl Fn(&str, &str) -> bool) -> Result<Poset> {
    let seqs = sequences(k);
    let mut pairs = Vec::new();
    for (i, s) in seqs.iter().enumerate() {
        for (j, t) in seqs.iter().enumerate() {
            if less(s, t) {
                pairs.push((i, j));
            }
        }
    }
    let ids = seqs.iter().map(|s| format!("s{s}")).collect();
    Poset::from_index_pairs(ids, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_of_three() {
        let c = canonical(Canonical::Chain, 3).unwrap();
        assert_eq!(c.elements(), ["a", "b", "c"]);
        assert!(c.lt(0, 1) && c.lt(1, 2) && c.lt(0, 2));
    }

    #[test]
    fn perp_prefix_two() {
        let p = canonical(Canonical::PerpPrefix, 2).unwrap();
        assert_eq!(p.elements(), ["s", "s0", "s1"]);
        assert_eq!(p.pairs().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn perp_rule_by_enumeration() {
        // independent check: s < t iff some prefix u with s = u0.., t = u1..
        let seqs = sequences(4);
        let p = canonical(Canonical::PerpPrefix, 4).unwrap();
        for (i, s) in seqs.iter().enumerate() {
            for (j, t) in seqs.iter().enumerate() {
                let expected =
                    (0..s.len().min(t.len())).any(|c| s[..c] == t[..c] && &s[c..c + 1] == "0" && &t[c..c + 1] == "1");
                assert_eq!(p.lt(i, j), expected, "{s} {t}");
            }
        }
    }

    #[test]
    fn binary_prefix_two() {
        let p = canonical(Canonical::BinaryTreePrefix, 2).unwrap();
        assert_eq!(p.pairs().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        let r = canonical(Canonical::ReversedBinaryTreePrefix, 2).unwrap();
        assert_eq!(r, p.reversed());
    }

    #[test]
    fn fences() {
        let f = canonical(Canonical::Fence, 2).unwrap();
        assert_eq!(f.elements(), ["a", "b", "c", "d"]);
        assert!(f.lt(0, 1) && f.lt(2, 1) && f.lt(2, 3));
        assert_eq!(f.pairs().count(), 3);
    }

    #[test]
    fn names() {
        assert_eq!("perp_prefix".parse::<Canonical>().unwrap(), Canonical::PerpPrefix);
        assert_eq!(canonical_by_name("tree", 2).unwrap_err(), Error::UnknownName("tree".into()));
    }
}
