use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// The colour id used when a poset carries no colouring.
pub const DEFAULT_COLOUR: &str = "_";

/// A finite quasi-order (reflexive, transitive; not necessarily antisymmetric)
/// over named colours.
#[derive(Clone, PartialEq, Eq)]
pub struct QuasiOrder {
    colours: Vec<String>,
    index: HashMap<String, usize>,
    le: Vec<bool>,
}

impl QuasiOrder {
    /// Reflexive-transitive closure of `pairs` over `colours`.
    pub fn new<C, S, P, A, B>(colours: C, pairs: P) -> Result<QuasiOrder>
    where
        C: IntoIterator<Item = S>,
        S: Into<String>,
        P: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let colours: Vec<String> = colours.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, c) in colours.iter().enumerate() {
            if index.insert(c.clone(), i).is_some() {
                return Err(Error::DuplicateElement(c.clone()));
            }
        }
        let n = colours.len();
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        for (a, b) in pairs {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = *index.get(a).ok_or_else(|| Error::UnknownColour(a.to_string()))?;
            let j = *index.get(b).ok_or_else(|| Error::UnknownColour(b.to_string()))?;
            le[i * n + j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if le[i * n + k] {
                    for j in 0..n {
                        if le[k * n + j] {
                            le[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Ok(QuasiOrder { colours, index, le })
    }

    /// Only reflexive comparabilities.
    pub fn discrete<C, S>(colours: C) -> Result<QuasiOrder>
    where
        C: IntoIterator<Item = S>,
        S: Into<String>,
    {
        QuasiOrder::new(colours, Vec::<(&str, &str)>::new())
    }

    /// The one-colour palette used for uncoloured posets.
    pub fn single() -> QuasiOrder {
        QuasiOrder::discrete([DEFAULT_COLOUR]).expect("one colour")
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn colours(&self) -> &[String] {
        &self.colours
    }

    pub fn colour(&self, i: usize) -> &str {
        &self.colours[i]
    }

    pub fn index_of(&self, c: &str) -> Option<usize> {
        self.index.get(c).copied()
    }

    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i * self.len() + j]
    }

    pub fn le_ids(&self, a: &str, b: &str) -> Result<bool> {
        let i = self.index_of(a).ok_or_else(|| Error::UnknownColour(a.to_string()))?;
        let j = self.index_of(b).ok_or_else(|| Error::UnknownColour(b.to_string()))?;
        Ok(self.le(i, j))
    }

    /// Non-reflexive `le` pairs, as ids.
    pub fn strict_pairs(&self) -> Vec<(&str, &str)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.le(i, j) {
                    out.push((self.colour(i), self.colour(j)));
                }
            }
        }
        out
    }

    /// Disjoint union: comparabilities only within one side.
    ///
    /// Colour ids are kept when the two sides are disjoint; otherwise they are
    /// prefixed with `0.` and `1.`.
    pub fn union(&self, other: &QuasiOrder) -> QuasiOrder {
        let clash = self.colours.iter().any(|c| other.index.contains_key(c));
        let rename = |side: usize, c: &str| if clash { format!("{side}.{c}") } else { c.to_string() };
        let colours: Vec<String> =
            self.colours.iter().map(|c| rename(0, c)).chain(other.colours.iter().map(|c| rename(1, c))).collect();
        let mut pairs = Vec::new();
        for (a, b) in self.strict_pairs() {
            pairs.push((rename(0, a), rename(0, b)));
        }
        for (a, b) in other.strict_pairs() {
            pairs.push((rename(1, a), rename(1, b)));
        }
        QuasiOrder::new(colours, pairs).expect("renamed union is well formed")
    }

    /// Componentwise product; colours are rendered `(a,b)`.
    pub fn product(&self, other: &QuasiOrder) -> QuasiOrder {
        let name = |i: usize, j: usize| format!("({},{})", self.colour(i), other.colour(j));
        let mut colours = Vec::new();
        for i in 0..self.len() {
            for j in 0..other.len() {
                colours.push(name(i, j));
            }
        }
        let mut pairs = Vec::new();
        for i in 0..self.len() {
            for j in 0..other.len() {
                for k in 0..self.len() {
                    for l in 0..other.len() {
                        if (i, j) != (k, l) && self.le(i, k) && other.le(j, l) {
                            pairs.push((name(i, j), name(k, l)));
                        }
                    }
                }
            }
        }
        QuasiOrder::new(colours, pairs).expect("product is well formed")
    }

    /// Set of colour ids, for comparisons that ignore enumeration order.
    pub fn colour_set(&self) -> BTreeSet<&str> {
        self.colours.iter().map(String::as_str).collect()
    }

    /// Same colours and the same `le`, regardless of enumeration order.
    pub fn same_as(&self, other: &QuasiOrder) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let map: Option<Vec<usize>> = self.colours.iter().map(|c| other.index_of(c)).collect();
        let Some(map) = map else { return false };
        (0..self.len()).all(|i| (0..self.len()).all(|j| self.le(i, j) == other.le(map[i], map[j])))
    }
}

impl fmt::Debug for QuasiOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuasiOrder{{{}", self.colours.join(","))?;
        for (a, b) in self.strict_pairs() {
            write!(f, " {a}<={b}")?;
        }
        f.write_str("}")
    }
}
