//! Finite strict partial orders over named elements.
//!
//! The order is stored transitively closed as a dense boolean matrix, so
//! every comparability query is a single lookup. Element order is the
//! canonical enumeration used for all tie-breaking downstream.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// How two elements of a poset relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Equal,
    Less,
    Greater,
    Incomparable,
}

impl Relation {
    pub fn flip(self) -> Relation {
        match self {
            Relation::Less => Relation::Greater,
            Relation::Greater => Relation::Less,
            r => r,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    index: HashMap<String, usize>,
    lt: Vec<bool>,
}

impl Poset {
    /// Builds the transitive closure of `pairs` over `elements`.
    ///
    /// `pairs` may be any generating set of the strict order. Fails with
    /// [`Error::Cycle`] if the closure is not irreflexive.
    pub fn new<E, S, P, A, B>(elements: E, pairs: P) -> Result<Poset>
    where
        E: IntoIterator<Item = S>,
        S: Into<String>,
        P: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        let index = build_index(&elements)?;
        let n = elements.len();
        let mut lt = vec![false; n * n];
        for (a, b) in pairs {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = *index.get(a).ok_or_else(|| Error::UnknownElement(a.to_string()))?;
            let j = *index.get(b).ok_or_else(|| Error::UnknownElement(b.to_string()))?;
            lt[i * n + j] = true;
        }
        transitive_closure(&mut lt, n);
        if let Some(i) = (0..n).find(|&i| lt[i * n + i]) {
            return Err(Error::Cycle(elements[i].clone()));
        }
        Ok(Poset { elements, index, lt })
    }

    /// Builds from index pairs, closing transitively.
    pub fn from_index_pairs(elements: Vec<String>, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Poset> {
        let index = build_index(&elements)?;
        let n = elements.len();
        let mut lt = vec![false; n * n];
        for (i, j) in pairs {
            lt[i * n + j] = true;
        }
        transitive_closure(&mut lt, n);
        if let Some(i) = (0..n).find(|&i| lt[i * n + i]) {
            return Err(Error::Cycle(elements[i].clone()));
        }
        Ok(Poset { elements, index, lt })
    }

    /// Builds from a relation already known to be a strict partial order.
    pub(crate) fn from_closed(elements: Vec<String>, lt: Vec<bool>) -> Result<Poset> {
        let index = build_index(&elements)?;
        debug_assert_eq!(lt.len(), elements.len() * elements.len());
        Ok(Poset { elements, index, lt })
    }

    pub fn empty() -> Poset {
        Poset { elements: Vec::new(), index: HashMap::new(), lt: Vec::new() }
    }

    /// The one-point order with element `id`.
    pub fn singleton(id: impl Into<String>) -> Poset {
        let id = id.into();
        let mut index = HashMap::new();
        index.insert(id.clone(), 0);
        Poset { elements: vec![id], index, lt: vec![false] }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn id(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub(crate) fn require(&self, id: &str) -> Result<usize> {
        self.index_of(id).ok_or_else(|| Error::UnknownElement(id.to_string()))
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.lt[i * self.len() + j]
    }

    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j)
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j) || self.lt(j, i)
    }

    pub fn relation(&self, i: usize, j: usize) -> Relation {
        if i == j {
            Relation::Equal
        } else if self.lt(i, j) {
            Relation::Less
        } else if self.lt(j, i) {
            Relation::Greater
        } else {
            Relation::Incomparable
        }
    }

    /// All strictly ordered index pairs `(i, j)` with `i < j` in the order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |i| (0..n).filter(move |&j| self.lt(i, j)).map(move |j| (i, j)))
    }

    /// Cover pairs of the order (its Hasse diagram).
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        self.pairs().filter(|&(i, j)| !(0..n).any(|k| self.lt(i, k) && self.lt(k, j))).collect()
    }

    /// Number of elements strictly above `i`.
    pub fn up_degree(&self, i: usize) -> usize {
        (0..self.len()).filter(|&j| self.lt(i, j)).count()
    }

    /// Number of elements strictly below `i`.
    pub fn down_degree(&self, i: usize) -> usize {
        (0..self.len()).filter(|&j| self.lt(j, i)).count()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down_degree(i) == 0).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up_degree(i) == 0).collect()
    }

    pub fn is_chain(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| self.comparable(i, j)))
    }

    pub fn is_antichain(&self) -> bool {
        self.pairs().next().is_none()
    }

    /// Every down-set `{y : y <= x}` is a chain.
    pub fn is_forest(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            let below: Vec<usize> = (0..n).filter(|&y| self.lt(y, x)).collect();
            below.iter().all(|&a| below.iter().all(|&b| self.comparable(a, b)))
        })
    }

    /// A non-empty forest with a least element.
    pub fn is_rooted_tree(&self) -> bool {
        !self.is_empty() && self.minimal_elements().len() == 1 && self.is_forest()
    }

    /// Immediate successors of `i`.
    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        let n = self.len();
        (0..n).filter(|&j| self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j))).collect()
    }

    /// Greatest common lower bound, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let n = self.len();
        let lower: Vec<usize> = (0..n).filter(|&z| self.le(z, a) && self.le(z, b)).collect();
        lower.iter().copied().find(|&z| lower.iter().all(|&w| self.le(w, z)))
    }

    /// The induced suborder on `members`, listed in the given order.
    ///
    /// Element ids are kept.
    pub fn induced(&self, members: &[usize]) -> Poset {
        let m = members.len();
        let mut lt = vec![false; m * m];
        for (a, &i) in members.iter().enumerate() {
            for (b, &j) in members.iter().enumerate() {
                lt[a * m + b] = self.lt(i, j);
            }
        }
        let elements = members.iter().map(|&i| self.elements[i].clone()).collect();
        Poset::from_closed(elements, lt).expect("members must be distinct")
    }

    /// The order with all comparabilities reversed.
    pub fn reversed(&self) -> Poset {
        let n = self.len();
        let mut lt = vec![false; n * n];
        for (i, j) in self.pairs() {
            lt[j * n + i] = true;
        }
        Poset { elements: self.elements.clone(), index: self.index.clone(), lt }
    }

    /// Same order, element ids rewritten by `f`.
    pub fn relabelled(&self, mut f: impl FnMut(usize, &str) -> String) -> Result<Poset> {
        let elements = self.elements.iter().enumerate().map(|(i, e)| f(i, e)).collect();
        Poset::from_closed(elements, self.lt.clone())
    }
}

fn build_index(elements: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(elements.len());
    for (i, e) in elements.iter().enumerate() {
        if index.insert(e.clone(), i).is_some() {
            return Err(Error::DuplicateElement(e.clone()));
        }
    }
    Ok(index)
}

fn transitive_closure(lt: &mut [bool], n: usize) {
    for k in 0..n {
        for i in 0..n {
            if lt[i * n + k] {
                for j in 0..n {
                    if lt[k * n + j] {
                        lt[i * n + j] = true;
                    }
                }
            }
        }
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset{{{}", self.elements.join(","))?;
        let covers = self.covers();
        if !covers.is_empty() {
            f.write_str(" |")?;
            for (i, j) in covers {
                write!(f, " {}<{}", self.elements[i], self.elements[j])?;
            }
        }
        f.write_str("}")
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The `index`-sum of `parts`: each index point is replaced by its part.
///
/// Elements are rendered `"p.a"` for index element `p` and part element `a`,
/// enumerated in index order and then part order.
pub fn p_sum(index: &Poset, parts: &BTreeMap<String, Poset>) -> Result<Poset> {
    let ordered = sum_parts(index, |id| parts.get(id))?;
    Ok(sum_of(index, &ordered).0)
}

pub(crate) fn sum_parts<'a, T: 'a>(index: &Poset, mut lookup: impl FnMut(&str) -> Option<&'a T>) -> Result<Vec<&'a T>> {
    index.elements().iter().map(|p| lookup(p).ok_or_else(|| Error::MissingPart(p.clone()))).collect()
}

/// Sum over already-resolved parts; also returns the block offset of each part.
pub(crate) fn sum_of(index: &Poset, parts: &[&Poset]) -> (Poset, Vec<usize>) {
    let mut offsets = Vec::with_capacity(parts.len());
    let mut elements = Vec::new();
    for (p, part) in parts.iter().enumerate() {
        offsets.push(elements.len());
        for a in part.elements() {
            elements.push(format!("{}.{}", index.id(p), a));
        }
    }
    let n = elements.len();
    let mut lt = vec![false; n * n];
    for (p, part) in parts.iter().enumerate() {
        for (q, other) in parts.iter().enumerate() {
            let (op, oq) = (offsets[p], offsets[q]);
            if p == q {
                for (a, b) in part.pairs() {
                    lt[(op + a) * n + op + b] = true;
                }
            } else if index.lt(p, q) {
                for a in 0..part.len() {
                    for b in 0..other.len() {
                        lt[(op + a) * n + oq + b] = true;
                    }
                }
            }
        }
    }
    (Poset::from_closed(elements, lt).expect("sum ids are unique"), offsets)
}

pub(crate) fn check_nonempty_parts(index: &Poset, parts: &[&Poset]) -> Result<()> {
    match parts.iter().position(|p| p.is_empty()) {
        Some(p) => Err(Error::EmptyPart(index.id(p).to_string())),
        None => Ok(()),
    }
}

/// Checked variant of [`p_sum`] that also rejects empty parts.
pub fn p_sum_checked(index: &Poset, parts: &BTreeMap<String, Poset>) -> Result<Poset> {
    let ordered = sum_parts(index, |id| parts.get(id))?;
    check_nonempty_parts(index, &ordered)?;
    Ok(sum_of(index, &ordered).0)
}

/// The `zeta`-tree-sum: trees hung above points of a chain.
///
/// `hangings` is keyed by (chain element id, branch index). A point `a` of the
/// chain lies below every element of a tree hung at `i` whenever `a <= i` in
/// the chain. Chain elements keep their ids; hung elements become
/// `"i.g.a"`.
pub fn zeta_tree_sum(zeta: &Poset, hangings: &BTreeMap<(String, usize), Poset>) -> Result<Poset> {
    if !zeta.is_chain() {
        return Err(Error::NotAChain);
    }
    let mut elements: Vec<String> = zeta.elements().to_vec();
    let mut blocks = Vec::new();
    for ((at, branch), tree) in hangings {
        let i = zeta.require(at)?;
        if !tree.is_empty() && !tree.is_rooted_tree() {
            return Err(Error::NotATree(format!(" (hanging {at}.{branch})")));
        }
        blocks.push((i, elements.len(), tree));
        elements.extend(tree.elements().iter().map(|a| format!("{at}.{branch}.{a}")));
    }
    let n = elements.len();
    let z = zeta.len();
    let mut lt = vec![false; n * n];
    for (a, b) in zeta.pairs() {
        lt[a * n + b] = true;
    }
    for &(at, offset, tree) in &blocks {
        for (a, b) in tree.pairs() {
            lt[(offset + a) * n + offset + b] = true;
        }
        for c in (0..z).filter(|&c| zeta.le(c, at)) {
            for b in 0..tree.len() {
                lt[c * n + offset + b] = true;
            }
        }
    }
    Poset::from_closed(elements, lt)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n_poset() -> Poset {
        Poset::new(["0", "1", "2", "3"], [("1", "0"), ("1", "2"), ("3", "2")]).unwrap()
    }

    #[test]
    fn closure_and_cycles() {
        let p = Poset::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        assert!(p.lt(0, 2));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        let err = Poset::new(["a", "b"], [("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::Cycle(_)));
        let err = Poset::new(["a", "a"], Vec::<(&str, &str)>::new()).unwrap_err();
        assert_eq!(err, Error::DuplicateElement("a".into()));
        let err = Poset::new(["a"], [("a", "z")]).unwrap_err();
        assert_eq!(err, Error::UnknownElement("z".into()));
    }

    #[test]
    fn singleton_and_n() {
        let one = Poset::new(["a"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(one.len(), 1);
        let n = n_poset();
        assert_eq!(n.relation(1, 0), Relation::Less);
        assert_eq!(n.relation(3, 0), Relation::Incomparable);
        assert_eq!(n.relation(2, 3), Relation::Greater);
        assert_eq!(n.pairs().count(), 3);
    }

    #[test]
    fn sums() {
        let ch2 = Poset::new(["x", "y"], [("x", "y")]).unwrap();
        let ac2 = Poset::new(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
        let parts = BTreeMap::from([("x".to_string(), ac2.clone()), ("y".to_string(), Poset::singleton("c"))]);
        let s = p_sum(&ch2, &parts).unwrap();
        assert_eq!(s.elements(), ["x.a", "x.b", "y.c"]);
        assert!(!s.comparable(0, 1));
        assert!(s.lt(0, 2) && s.lt(1, 2));

        let parts = BTreeMap::from([("x".to_string(), ch2.clone()), ("y".to_string(), ch2.clone())]);
        let s = p_sum(&ac2.relabelled(|i, _| ["x", "y"][i].into()).unwrap(), &parts).unwrap();
        assert_eq!(s.pairs().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);

        let missing = BTreeMap::from([("x".to_string(), ch2.clone())]);
        assert_eq!(p_sum(&ch2, &missing).unwrap_err(), Error::MissingPart("y".into()));
        let empty = BTreeMap::from([("x".to_string(), ch2.clone()), ("y".to_string(), Poset::empty())]);
        assert_eq!(p_sum_checked(&ch2, &empty).unwrap_err(), Error::EmptyPart("y".into()));
    }

    #[test]
    fn tree_sums() {
        let ch1 = Poset::singleton("r");
        let hang = BTreeMap::from([
            (("r".to_string(), 0), Poset::singleton("x")),
            (("r".to_string(), 1), Poset::singleton("x")),
        ]);
        let t = zeta_tree_sum(&ch1, &hang).unwrap();
        assert_eq!(t.len(), 3);
        assert!(t.lt(0, 1) && t.lt(0, 2) && !t.comparable(1, 2));
        assert!(t.is_rooted_tree());

        let ch2 = Poset::new(["b", "t"], [("b", "t")]).unwrap();
        assert_eq!(zeta_tree_sum(&ch2, &BTreeMap::new()).unwrap(), ch2);

        let hang = BTreeMap::from([(("b".to_string(), 0), Poset::singleton("l"))]);
        let t = zeta_tree_sum(&ch2, &hang).unwrap();
        // bottom < {top, leaf}, top incomparable to leaf
        assert!(t.lt(0, 1) && t.lt(0, 2) && !t.comparable(1, 2));

        let ac2 = Poset::new(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(zeta_tree_sum(&ac2, &BTreeMap::new()).unwrap_err(), Error::NotAChain);
        let vee = Poset::new(["a", "b", "c"], [("a", "c"), ("b", "c")]).unwrap();
        let bad = BTreeMap::from([(("b".to_string(), 0), vee)]);
        assert!(matches!(zeta_tree_sum(&ch2, &bad), Err(Error::NotATree(_))));
    }

    #[test]
    fn meets_and_trees() {
        let t = Poset::new(["r", "a", "b", "c"], [("r", "a"), ("r", "b"), ("a", "c")]).unwrap();
        assert!(t.is_rooted_tree());
        assert_eq!(t.meet(3, 2), Some(0));
        assert_eq!(t.meet(3, 1), Some(1));
        assert_eq!(t.upper_covers(0), vec![1, 2]);
        assert!(!n_poset().is_forest());
    }
}
