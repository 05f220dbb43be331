//! Composition sequences of sums, their evaluation, and the recursive
//! decomposition of a poset into indecomposable arities.
//!
//! A composition sequence lists sums `Σ_{A_0}, Σ_{A_1}, ...`, each with a
//! distinguished slot `s_i` into which the rest of the sequence is nested.
//! Its evaluation is a single sum over the order [`h_eta`]. A
//! [`CompositionSet`] is a finite tree of such sequences whose leaves carry
//! one-point arguments.

use std::collections::BTreeMap;
use std::fmt;

use crate::coloured::{coloured_sum_ordered, ColouredPoset};
use crate::embed::{coloured_isomorphism, is_isomorphic};
use crate::error::{Error, Result};
use crate::interval::{interval_closure, is_indecomposable, maximal_chain_idx, IntervalChain};
use crate::poset::{Poset, Relation};

/// A slot `u` of layer `i`: an element of `a_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    pub layer: usize,
    pub slot: String,
}

impl Position {
    pub fn new(layer: usize, slot: impl Into<String>) -> Position {
        Position { layer, slot: slot.into() }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.layer, self.slot)
    }
}

/// One sum in a composition sequence: the arity and its distinguished slot.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositionStep {
    arity: Poset,
    distinguished: String,
}

impl CompositionStep {
    pub fn new(arity: Poset, distinguished: impl Into<String>) -> Result<CompositionStep> {
        let distinguished = distinguished.into();
        if arity.is_empty() {
            return Err(Error::Malformed("empty arity".into()));
        }
        if arity.index_of(&distinguished).is_none() {
            return Err(Error::Malformed(format!("distinguished slot `{distinguished}` not in arity")));
        }
        Ok(CompositionStep { arity, distinguished })
    }

    pub fn arity(&self) -> &Poset {
        &self.arity
    }

    pub fn distinguished(&self) -> &str {
        &self.distinguished
    }

    fn distinguished_index(&self) -> usize {
        self.arity.index_of(&self.distinguished).expect("validated")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompositionSequence {
    steps: Vec<CompositionStep>,
}

/// Arguments of a composition sequence, keyed by position.
pub type Arguments = BTreeMap<Position, ColouredPoset>;

impl CompositionSequence {
    pub fn new(steps: Vec<CompositionStep>) -> Result<CompositionSequence> {
        if steps.is_empty() {
            return Err(Error::Malformed("empty composition sequence".into()));
        }
        Ok(CompositionSequence { steps })
    }

    /// Convenience constructor from `(arity, distinguished)` pairs.
    pub fn from_pairs<S: Into<String>>(steps: impl IntoIterator<Item = (Poset, S)>) -> Result<CompositionSequence> {
        let steps = steps.into_iter().map(|(a, s)| CompositionStep::new(a, s)).collect::<Result<Vec<_>>>()?;
        CompositionSequence::new(steps)
    }

    pub fn steps(&self) -> &[CompositionStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn step(&self, i: usize) -> &CompositionStep {
        &self.steps[i]
    }

    fn is_last(&self, i: usize) -> bool {
        i + 1 == self.steps.len()
    }

    /// Arity indices of `a_i`: every slot except the distinguished one,
    /// which is kept only in the last layer.
    fn slot_indices(&self, i: usize) -> Vec<usize> {
        let step = &self.steps[i];
        let s = step.distinguished_index();
        (0..step.arity.len()).filter(|&u| self.is_last(i) || u != s).collect()
    }

    /// Slot ids of `a_i`.
    pub fn slots(&self, i: usize) -> Vec<&str> {
        self.slot_indices(i).into_iter().map(|u| self.steps[i].arity.id(u)).collect()
    }

    /// Is `slot` the nesting slot of a non-final layer?
    pub fn is_nesting_slot(&self, i: usize, slot: &str) -> bool {
        !self.is_last(i) && self.steps[i].distinguished == slot
    }

    /// All positions `A^η`, layer by layer in arity order.
    pub fn positions(&self) -> Vec<Position> {
        (0..self.len()).flat_map(|i| self.slots(i).into_iter().map(move |u| Position::new(i, u))).collect()
    }

    /// `η_j^-`: layers `0..=j`.
    pub fn head(&self, j: usize) -> Result<CompositionSequence> {
        self.check_index(j)?;
        Ok(CompositionSequence { steps: self.steps[..=j].to_vec() })
    }

    /// `η_j^+`: layers after `j`, or `None` when `j` is the last layer.
    pub fn tail(&self, j: usize) -> Result<Option<CompositionSequence>> {
        self.check_index(j)?;
        Ok((!self.is_last(j)).then(|| CompositionSequence { steps: self.steps[j + 1..].to_vec() }))
    }

    /// `η_j`: layers from `j` on.
    pub fn suffix(&self, j: usize) -> Result<CompositionSequence> {
        self.check_index(j)?;
        Ok(CompositionSequence { steps: self.steps[j..].to_vec() })
    }

    fn check_index(&self, j: usize) -> Result<()> {
        if j < self.len() {
            Ok(())
        } else {
            Err(Error::BadIndex { index: j, len: self.len() })
        }
    }
}

impl fmt::Display for CompositionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ; ")?;
            }
            write!(f, "{}@{}", ArityRecord(&step.arity), step.distinguished)?;
        }
        Ok(())
    }
}

/// Inline arity record: `NAME{e1,e2,...|a<b,...}` listing cover pairs.
pub struct ArityRecord<'a>(pub &'a Poset);

impl fmt::Display for ArityRecord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.0;
        let covers: Vec<String> = p.covers().into_iter().map(|(a, b)| format!("{}<{}", p.id(a), p.id(b))).collect();
        write!(f, "{}{{{}|{}}}", arity_name(p), p.elements().join(","), covers.join(","))
    }
}

/// Short name of an arity: `1`, `CHn`, `ACn`, `N`, or `Pn`.
pub fn arity_name(p: &Poset) -> String {
    let n = p.len();
    if n == 1 {
        "1".into()
    } else if p.is_chain() {
        format!("CH{n}")
    } else if p.is_antichain() {
        format!("AC{n}")
    } else if n == 4 && is_isomorphic(p, &crate::canonical::canonical(crate::canonical::Canonical::N, 0).expect("N")) {
        "N".into()
    } else {
        format!("P{n}")
    }
}

fn render_positions(i: usize, step: &CompositionStep) -> impl Fn(usize) -> String + '_ {
    move |u| format!("{i}.{}", step.arity.id(u))
}

/// The index order whose sum is the composition of the sequence.
///
/// Carrier: all positions. For `u` in layer `i` and `v` in layer `j`,
/// `u < v` iff `i = j` and `u < v` in the arity, or `i < j` and `u < s_i`,
/// or `i > j` and `s_j < v`.
pub fn h_eta(eta: &CompositionSequence) -> Poset {
    let layered: Vec<(usize, usize)> =
        (0..eta.len()).flat_map(|i| eta.slot_indices(i).into_iter().map(move |u| (i, u))).collect();
    let n = layered.len();
    let mut lt = vec![false; n * n];
    for (a, &(i, u)) in layered.iter().enumerate() {
        for (b, &(j, v)) in layered.iter().enumerate() {
            let less = if i == j {
                eta.steps[i].arity.lt(u, v)
            } else if i < j {
                eta.steps[i].arity.lt(u, eta.steps[i].distinguished_index())
            } else {
                eta.steps[j].arity.lt(eta.steps[j].distinguished_index(), v)
            };
            lt[a * n + b] = less;
        }
    }
    let elements = layered.iter().map(|&(i, u)| render_positions(i, &eta.steps[i])(u)).collect();
    Poset::from_closed(elements, lt).expect("positions are unique")
}

/// `f^η(k)`: the `H_η`-sum of the arguments.
pub fn eval_f_eta(eta: &CompositionSequence, k: &Arguments) -> Result<ColouredPoset> {
    let positions = eta.positions();
    if let Some(extra) = k.keys().find(|p| !positions.contains(p)) {
        return Err(Error::Malformed(format!("argument at unknown position {extra}")));
    }
    let parts = positions
        .iter()
        .map(|p| k.get(p).ok_or_else(|| Error::MissingArgument(p.to_string())))
        .collect::<Result<Vec<_>>>()?;
    coloured_sum_ordered(&h_eta(eta), &parts)
}

/// Arguments of layers `>= from`, re-indexed to start at layer 0.
pub fn shift_arguments(k: &Arguments, from: usize) -> Arguments {
    k.iter()
        .filter(|(p, _)| p.layer >= from)
        .map(|(p, v)| (Position::new(p.layer - from, p.slot.clone()), v.clone()))
        .collect()
}

/// Checks the splitting law at layer `j`: evaluating the whole sequence
/// equals evaluating `η_j^-` with its nesting slot filled by `f^{η_j^+}` of
/// the tail arguments. Compared up to coloured isomorphism.
pub fn split_assoc_check(eta: &CompositionSequence, k: &Arguments, j: usize) -> Result<bool> {
    let head = eta.head(j)?;
    let whole = eval_f_eta(eta, k)?;
    let Some(tail) = eta.tail(j)? else {
        return Ok(coloured_isomorphism(&whole, &eval_f_eta(&head, k)?).is_some());
    };
    let inner = eval_f_eta(&tail, &shift_arguments(k, j + 1))?;
    let mut head_args: Arguments =
        k.iter().filter(|(p, _)| p.layer <= j).map(|(p, v)| (p.clone(), v.clone())).collect();
    head_args.insert(Position::new(j, eta.steps[j].distinguished.clone()), inner);
    let split = eval_f_eta(&head, &head_args)?;
    Ok(coloured_isomorphism(&whole, &split).is_some())
}

/// A maximal composition sequence for a poset, with its arguments and the
/// interval chain it was read from.
#[derive(Debug, Clone)]
pub struct MaximalDecomposition {
    pub sequence: CompositionSequence,
    pub arguments: Arguments,
    pub chain: IntervalChain,
}

/// An id for the nesting slot that does not clash with `p`'s elements.
fn nesting_slot_name(p: &Poset) -> String {
    let mut name = String::from("*");
    while p.index_of(&name).is_some() {
        name.push('*');
    }
    name
}

/// Decomposes `x` along the canonical maximal interval chain anchored at
/// its first element.
///
/// Layer `j` is `I_j \ I_{j+1}`. Its elements, together with one extra
/// point standing for `I_{j+1}`, form an order in which the maximal
/// intervals avoiding the extra point are collapsed; the result is the
/// (indecomposable) arity of layer `j` and the collapsed pieces are its
/// arguments.
pub fn maximal_decomposition(x: &ColouredPoset) -> Result<MaximalDecomposition> {
    if x.is_empty() {
        return Err(Error::EmptyPoset);
    }
    let p = x.poset();
    let chain = maximal_chain_idx(p, 0);
    let star = nesting_slot_name(p);
    let intervals = chain.intervals();
    let mut steps = Vec::with_capacity(intervals.len());
    let mut arguments = Arguments::new();

    for (j, outer) in intervals.iter().enumerate() {
        let Some(inner) = intervals.get(j + 1) else {
            assert_eq!(outer.len(), 1, "a maximal chain ends in a singleton");
            let a = outer.members()[0];
            steps.push(CompositionStep::new(Poset::singleton(p.id(a)), p.id(a))?);
            arguments.insert(Position::new(j, p.id(a)), x.induced(&[a]));
            continue;
        };
        let layer: Vec<usize> = outer.members().iter().copied().filter(|&e| !inner.contains(e)).collect();
        let rep = inner.members()[0];
        let side: Vec<Relation> = layer.iter().map(|&d| p.relation(d, rep)).collect();
        for (&d, &r) in layer.iter().zip(&side) {
            assert!(
                inner.members().iter().all(|&e| p.relation(d, e) == r),
                "inner interval is not seen uniformly from the layer"
            );
        }

        let nest = layer.len();
        let mut pairs = Vec::new();
        for a in 0..nest {
            for b in 0..nest {
                if p.lt(layer[a], layer[b]) {
                    pairs.push((a, b));
                }
            }
            match side[a] {
                Relation::Less => pairs.push((a, nest)),
                Relation::Greater => pairs.push((nest, a)),
                _ => {}
            }
        }
        let ids: Vec<String> = layer.iter().map(|&e| p.id(e).to_string()).chain([star.clone()]).collect();
        let with_nest = Poset::from_index_pairs(ids, pairs)?;

        let classes = collapse_classes(&with_nest, nest);
        let keep: Vec<usize> = classes.iter().map(|c| c[0]).chain([nest]).collect();
        let arity = with_nest.induced(&keep);
        for class in &classes {
            let members: Vec<usize> = class.iter().map(|&c| layer[c]).collect();
            arguments.insert(Position::new(j, p.id(layer[class[0]])), x.induced(&members));
        }
        steps.push(CompositionStep::new(arity, star.clone())?);
    }

    Ok(MaximalDecomposition { sequence: CompositionSequence::new(steps)?, arguments, chain })
}

/// Partition of `0..nest` into the maximal intervals of `b` avoiding the
/// point `nest` (singletons where no such interval has two members).
fn collapse_classes(b: &Poset, nest: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..nest).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for a in 0..nest {
        for c in a + 1..nest {
            let k = interval_closure(b, &[a, c]);
            if k.contains(nest) {
                continue;
            }
            let root = find(&mut parent, k.members()[0]);
            for &m in &k.members()[1..] {
                let r = find(&mut parent, m);
                parent[r] = root;
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..nest {
        let r = find(&mut parent, i);
        classes.entry(r).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.sort_by_key(|c| c[0]);
    for c in out.iter().filter(|c| c.len() > 1) {
        assert!(crate::interval::is_interval_idx(b, c), "collapsed class must be an interval");
    }
    out
}

/// Checks the defining properties of a maximal decomposition of `x`:
/// indecomposable arities, `f^η(k) ≅ x`, and for every layer `j` the tail
/// `f^{η_j}` of the arguments is exactly the chain interval `I_j`.
pub fn verify_maximal(x: &ColouredPoset, md: &MaximalDecomposition) -> std::result::Result<(), String> {
    let eta = &md.sequence;
    for (i, step) in eta.steps().iter().enumerate() {
        if !is_indecomposable(step.arity()).map_err(|e| e.to_string())? {
            return Err(format!("arity of layer {i} is decomposable"));
        }
    }
    let whole = eval_f_eta(eta, &md.arguments).map_err(|e| e.to_string())?;
    if coloured_isomorphism(&whole, x).is_none() {
        return Err("f^η(k) is not isomorphic to x".into());
    }
    if md.chain.len() != eta.len() {
        return Err("chain and sequence lengths differ".into());
    }
    for (j, interval) in md.chain.intervals().iter().enumerate() {
        let tail_args = shift_arguments(&md.arguments, j);
        let mut covered: Vec<&str> =
            tail_args.values().flat_map(|a| a.poset().elements().iter().map(String::as_str)).collect();
        covered.sort_unstable();
        let mut expected: Vec<&str> = interval.members().iter().map(|&i| x.poset().id(i)).collect();
        expected.sort_unstable();
        if covered != expected {
            return Err(format!("layer {j}: tail arguments do not cover I_{j}"));
        }
        let tail = eval_f_eta(&eta.suffix(j).map_err(|e| e.to_string())?, &tail_args).map_err(|e| e.to_string())?;
        if coloured_isomorphism(&tail, &x.induced(interval.members())).is_none() {
            return Err(format!("layer {j}: f^η_j is not isomorphic to I_{j}"));
        }
    }
    Ok(())
}

/// A finite path of positions from the root of a composition set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositionPath(pub Vec<Position>);

impl PositionPath {
    pub fn root() -> PositionPath {
        PositionPath(Vec::new())
    }

    pub fn child(&self, p: Position) -> PositionPath {
        let mut v = self.0.clone();
        v.push(p);
        PositionPath(v)
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Is `self` a (non-strict) prefix of `other`?
    pub fn is_prefix_of(&self, other: &PositionPath) -> bool {
        other.0.len() >= self.0.len() && other.0[..self.0.len()] == self.0[..]
    }

    /// `other` with the prefix `self` removed.
    pub fn strip_from(&self, other: &PositionPath) -> Option<PositionPath> {
        self.is_prefix_of(other).then(|| PositionPath(other.0[self.0.len()..].to_vec()))
    }

    pub fn concat(&self, rest: &PositionPath) -> PositionPath {
        PositionPath(self.0.iter().chain(&rest.0).cloned().collect())
    }
}

impl fmt::Display for PositionPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("<>");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Leaf arguments of a composition set, keyed by leaf path.
pub type LeafValues = BTreeMap<PositionPath, ColouredPoset>;

/// A finite tree of composition sequences. Each internal node carries a
/// sequence `η(p)` and has exactly one child per position of `η(p)`.
#[derive(Debug, Clone, PartialEq)]
pub enum CompositionSet {
    Leaf,
    Node(Box<CompositionNode>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompositionNode {
    sequence: CompositionSequence,
    children: Vec<(Position, CompositionSet)>,
}

impl CompositionNode {
    pub fn sequence(&self) -> &CompositionSequence {
        &self.sequence
    }

    /// Children in position order.
    pub fn children(&self) -> &[(Position, CompositionSet)] {
        &self.children
    }

    pub fn child(&self, p: &Position) -> Option<&CompositionSet> {
        self.children.iter().find(|(q, _)| q == p).map(|(_, c)| c)
    }
}

impl CompositionSet {
    /// A node whose children are keyed exactly by the positions of `sequence`.
    pub fn node(
        sequence: CompositionSequence,
        mut children: BTreeMap<Position, CompositionSet>,
    ) -> Result<CompositionSet> {
        let mut ordered = Vec::with_capacity(children.len());
        for p in sequence.positions() {
            let c = children.remove(&p).ok_or_else(|| Error::Malformed(format!("no child at position {p}")))?;
            ordered.push((p, c));
        }
        if let Some(extra) = children.keys().next() {
            return Err(Error::Malformed(format!("child at unknown position {extra}")));
        }
        Ok(CompositionSet::Node(Box::new(CompositionNode { sequence, children: ordered })))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, CompositionSet::Leaf)
    }

    pub fn as_node(&self) -> Option<&CompositionNode> {
        match self {
            CompositionSet::Leaf => None,
            CompositionSet::Node(n) => Some(n),
        }
    }

    /// The subtree at `path`.
    pub fn at(&self, path: &PositionPath) -> Option<&CompositionSet> {
        let mut cur = self;
        for p in &path.0 {
            cur = cur.as_node()?.child(p)?;
        }
        Some(cur)
    }

    /// Every position path, preorder.
    pub fn paths(&self) -> Vec<PositionPath> {
        let mut out = Vec::new();
        self.walk(&PositionPath::root(), &mut |p, _| out.push(p.clone()));
        out
    }

    /// Leaf paths, preorder.
    pub fn leaves(&self) -> Vec<PositionPath> {
        let mut out = Vec::new();
        self.walk(&PositionPath::root(), &mut |p, s| {
            if s.is_leaf() {
                out.push(p.clone());
            }
        });
        out
    }

    /// Internal paths with their sequences, preorder.
    pub fn sequences(&self) -> Vec<(PositionPath, &CompositionSequence)> {
        let mut out = Vec::new();
        self.walk(&PositionPath::root(), &mut |p, s| {
            if let CompositionSet::Node(n) = s {
                out.push((p.clone(), &n.sequence));
            }
        });
        out
    }

    fn walk<'a>(&'a self, path: &PositionPath, visit: &mut dyn FnMut(&PositionPath, &'a CompositionSet)) {
        visit(path, self);
        if let Some(n) = self.as_node() {
            for (p, c) in &n.children {
                c.walk(&path.child(p.clone()), visit);
            }
        }
    }

    /// Indented text rendering, one line per position path. Leaf lines show
    /// the leaf value from `leaves` when given.
    pub fn render(&self, leaves: Option<&LeafValues>) -> String {
        let mut out = String::new();
        self.render_into(&PositionPath::root(), leaves, &mut out);
        out
    }

    fn render_into(&self, path: &PositionPath, leaves: Option<&LeafValues>, out: &mut String) {
        use std::fmt::Write;
        let indent = "  ".repeat(path.len());
        match self {
            CompositionSet::Leaf => {
                let _ = write!(out, "{indent}{path} ->");
                match leaves.and_then(|l| l.get(path)) {
                    Some(v) if v.len() == 1 => {
                        let _ = write!(out, " {} [{}]", v.poset().id(0), v.colour(0));
                    }
                    Some(v) => {
                        let _ = write!(out, " {v:?}");
                    }
                    None => {}
                }
                out.push('\n');
            }
            CompositionSet::Node(n) => {
                let _ = writeln!(out, "{indent}{path} := {}", n.sequence);
                for (p, c) in &n.children {
                    c.render_into(&path.child(p.clone()), leaves, out);
                }
            }
        }
    }
}

/// Recursively decomposes `x` until every argument is a single point.
pub fn decomposition_function(x: &ColouredPoset) -> Result<(CompositionSet, LeafValues)> {
    if x.is_empty() {
        return Err(Error::EmptyPoset);
    }
    let mut leaves = LeafValues::new();
    let set = decompose_into(x, &PositionPath::root(), &mut leaves)?;
    Ok((set, leaves))
}

fn decompose_into(x: &ColouredPoset, path: &PositionPath, leaves: &mut LeafValues) -> Result<CompositionSet> {
    if x.len() == 1 {
        leaves.insert(path.clone(), x.clone());
        return Ok(CompositionSet::Leaf);
    }
    let md = maximal_decomposition(x)?;
    let mut children = BTreeMap::new();
    for (pos, arg) in &md.arguments {
        assert!(arg.len() < x.len(), "arguments must shrink");
        let child = decompose_into(arg, &path.child(pos.clone()), leaves)?;
        children.insert(pos.clone(), child);
    }
    CompositionSet::node(md.sequence, children)
}

/// `g^𝔉(d)`: evaluates a composition set bottom-up.
pub fn eval_g(set: &CompositionSet, leaves: &LeafValues) -> Result<ColouredPoset> {
    eval_at(set, &PositionPath::root(), leaves)
}

fn eval_at(set: &CompositionSet, path: &PositionPath, leaves: &LeafValues) -> Result<ColouredPoset> {
    match set {
        CompositionSet::Leaf => leaves.get(path).cloned().ok_or_else(|| Error::MissingLeaf(path.to_string())),
        CompositionSet::Node(n) => {
            let mut k = Arguments::new();
            for (p, c) in &n.children {
                k.insert(p.clone(), eval_at(c, &path.child(p.clone()), leaves)?);
            }
            eval_f_eta(&n.sequence, &k)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{canonical, Canonical};

    fn ch(k: usize) -> Poset {
        canonical(Canonical::Chain, k).unwrap()
    }
    fn n() -> Poset {
        canonical(Canonical::N, 0).unwrap()
    }
    fn single(id: &str) -> ColouredPoset {
        ColouredPoset::uncoloured(Poset::singleton(id))
    }
    fn singletons(eta: &CompositionSequence) -> Arguments {
        eta.positions().into_iter().map(|p| (p.clone(), single(&p.to_string()))).collect()
    }

    #[test]
    fn h_eta_examples() {
        let eta = CompositionSequence::from_pairs([(n(), "3")]).unwrap();
        let h = h_eta(&eta);
        assert_eq!(h.elements(), ["0.0", "0.1", "0.2", "0.3"]);
        assert_eq!(h.pairs().collect::<Vec<_>>(), n().pairs().collect::<Vec<_>>());

        let eta = CompositionSequence::from_pairs([(ch(2), "b"), (ch(2), "b")]).unwrap();
        let h = h_eta(&eta);
        assert_eq!(h.elements(), ["0.a", "1.a", "1.b"]);
        assert!(is_isomorphic(&h, &ch(3)));
    }

    #[test]
    fn h_eta_two_n_layers() {
        // nothing lies below the slot 3 in N, and only 2 lies above it, so
        // every inner position sits below 0.2 and nothing else crosses.
        let eta = CompositionSequence::from_pairs([(n(), "3"), (n(), "3")]).unwrap();
        let h = h_eta(&eta);
        assert_eq!(h.len(), 7);
        let idx = |s: &str| h.index_of(s).unwrap();
        let mut expected = vec![("0.1", "0.0"), ("0.1", "0.2")];
        for v in ["1.0", "1.1", "1.2", "1.3"] {
            expected.push((v, "0.2"));
        }
        expected.extend([("1.1", "1.0"), ("1.1", "1.2"), ("1.3", "1.2")]);
        let mut want: Vec<(usize, usize)> = expected.iter().map(|(a, b)| (idx(a), idx(b))).collect();
        want.sort_unstable();
        assert_eq!(h.pairs().collect::<Vec<_>>(), want);
    }

    #[test]
    fn eval_examples() {
        let eta = CompositionSequence::from_pairs([(ch(2), "b"), (ch(2), "b")]).unwrap();
        let x = eval_f_eta(&eta, &singletons(&eta)).unwrap();
        assert!(is_isomorphic(x.poset(), &ch(3)));

        let ac2 = canonical(Canonical::Antichain, 2).unwrap();
        let eta = CompositionSequence::from_pairs([(ac2, "a")]).unwrap();
        let k: Arguments = eta.positions().into_iter().map(|p| (p, ColouredPoset::uncoloured(ch(2)))).collect();
        let x = eval_f_eta(&eta, &k).unwrap();
        assert_eq!(x.poset().pairs().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);

        let eta = CompositionSequence::from_pairs([(n(), "3")]).unwrap();
        assert!(is_isomorphic(eval_f_eta(&eta, &singletons(&eta)).unwrap().poset(), &n()));

        let mut k = singletons(&eta);
        k.remove(&Position::new(0, "2"));
        assert_eq!(eval_f_eta(&eta, &k).unwrap_err(), Error::MissingArgument("0.2".into()));
    }

    #[test]
    fn split_examples() {
        let eta = CompositionSequence::from_pairs([(n(), "3")]).unwrap();
        assert!(split_assoc_check(&eta, &singletons(&eta), 0).unwrap());

        let eta = CompositionSequence::from_pairs([(ch(2), "b"), (ch(2), "b"), (ch(2), "b")]).unwrap();
        assert!(split_assoc_check(&eta, &singletons(&eta), 1).unwrap());
        assert!(is_isomorphic(eval_f_eta(&eta, &singletons(&eta)).unwrap().poset(), &ch(4)));

        let ac2 = canonical(Canonical::Antichain, 2).unwrap();
        let eta = CompositionSequence::from_pairs([(n(), "3"), (ac2, "a")]).unwrap();
        assert!(split_assoc_check(&eta, &singletons(&eta), 0).unwrap());
        assert!(matches!(split_assoc_check(&eta, &singletons(&eta), 2), Err(Error::BadIndex { .. })));
    }

    #[test]
    fn malformed_sequences() {
        assert!(matches!(CompositionSequence::from_pairs([(ch(2), "z")]), Err(Error::Malformed(_))));
        assert!(matches!(CompositionSequence::from_pairs([(Poset::empty(), "z")]), Err(Error::Malformed(_))));
        assert!(matches!(CompositionSequence::from_pairs(Vec::<(Poset, &str)>::new()), Err(Error::Malformed(_))));
    }

    #[test]
    fn maximal_decomposition_of_ch3() {
        let x = ColouredPoset::uncoloured(ch(3));
        let md = maximal_decomposition(&x).unwrap();
        assert_eq!(md.chain.display(x.poset()).to_string(), "{a,b,c} > {a,b} > {a}");
        assert_eq!(md.sequence.to_string(), "CH2{c,*|*<c}@* ; CH2{b,*|*<b}@* ; 1{a|}@a");
        assert!(md.arguments.values().all(|a| a.len() == 1));
        verify_maximal(&x, &md).unwrap();
    }

    #[test]
    fn maximal_decomposition_of_n() {
        let x = ColouredPoset::uncoloured(n());
        let md = maximal_decomposition(&x).unwrap();
        assert_eq!(md.sequence.len(), 2);
        assert_eq!(arity_name(md.sequence.step(0).arity()), "N");
        assert_eq!(md.sequence.step(0).distinguished(), "*");
        assert_eq!(md.arguments.keys().filter(|p| p.layer == 0).count(), 3);
        assert_eq!(md.arguments.keys().filter(|p| p.layer == 1).count(), 1);
        verify_maximal(&x, &md).unwrap();
    }

    #[test]
    fn maximal_decomposition_collapses_intervals() {
        // a apart from the chain b < c: the layer {b, c} collapses to one slot
        let p = Poset::new(["a", "b", "c"], [("b", "c")]).unwrap();
        let x = ColouredPoset::uncoloured(p);
        let md = maximal_decomposition(&x).unwrap();
        assert_eq!(md.sequence.to_string(), "AC2{b,*|}@* ; 1{a|}@a");
        assert_eq!(md.arguments[&Position::new(0, "b")].len(), 2);
        verify_maximal(&x, &md).unwrap();
    }

    #[test]
    fn singleton_decomposition() {
        let x = single("q");
        let md = maximal_decomposition(&x).unwrap();
        assert_eq!(md.sequence.to_string(), "1{q|}@q");
        let (set, leaves) = decomposition_function(&x).unwrap();
        assert!(set.is_leaf());
        assert_eq!(set.leaves(), vec![PositionPath::root()]);
        assert_eq!(eval_g(&set, &leaves).unwrap().poset(), x.poset());
        assert_eq!(maximal_decomposition(&ColouredPoset::uncoloured(Poset::empty())).unwrap_err(), Error::EmptyPoset);
    }

    #[test]
    fn ch2_decomposition() {
        let x = ColouredPoset::uncoloured(ch(2));
        let (set, leaves) = decomposition_function(&x).unwrap();
        let node = set.as_node().unwrap();
        assert_eq!(node.sequence().to_string(), "CH2{b,*|*<b}@* ; 1{a|}@a");
        assert_eq!(set.leaves().len(), 2);
        assert_eq!(set.render(Some(&leaves)), "<> := CH2{b,*|*<b}@* ; 1{a|}@a\n  0.b -> b [_]\n  1.a -> a [_]\n");
        assert!(coloured_isomorphism(&eval_g(&set, &leaves).unwrap(), &x).is_some());
    }

    #[test]
    fn n_decomposition_roundtrip() {
        let x = ColouredPoset::uncoloured(n());
        let (set, leaves) = decomposition_function(&x).unwrap();
        assert_eq!(set.leaves().len(), 4);
        assert!(coloured_isomorphism(&eval_g(&set, &leaves).unwrap(), &x).is_some());
        let mut partial = leaves.clone();
        let first = partial.keys().next().unwrap().clone();
        partial.remove(&first);
        assert!(matches!(eval_g(&set, &partial), Err(Error::MissingLeaf(_))));
    }

    #[test]
    fn composition_set_membership_rule() {
        let eta = CompositionSequence::from_pairs([(ch(2), "b"), (Poset::singleton("a"), "a")]).unwrap();
        let ok = BTreeMap::from([
            (Position::new(0, "a"), CompositionSet::Leaf),
            (Position::new(1, "a"), CompositionSet::Leaf),
        ]);
        assert!(CompositionSet::node(eta.clone(), ok).is_ok());
        let missing = BTreeMap::from([(Position::new(0, "a"), CompositionSet::Leaf)]);
        assert!(matches!(CompositionSet::node(eta.clone(), missing), Err(Error::Malformed(_))));
        let extra = BTreeMap::from([
            (Position::new(0, "a"), CompositionSet::Leaf),
            (Position::new(0, "b"), CompositionSet::Leaf),
            (Position::new(1, "a"), CompositionSet::Leaf),
        ]);
        assert!(matches!(CompositionSet::node(eta, extra), Err(Error::Malformed(_))));
    }
}
