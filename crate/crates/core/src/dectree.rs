//! Labelled structured trees, decomposition trees of coloured posets,
//! structured-tree embedding and its lifting back to posets, and tree ranks.
//!
//! Trees grow upwards: the root is the least node and every down-set is a
//! chain. Each node `v` labels the nodes above it through the child cone
//! they lie in; labels are elements of the arity `range(l_v)`.

use std::collections::BTreeMap;
use std::fmt::{self, Write};
use std::sync::Arc;

use crate::bounds::check;
use crate::coloured::ColouredPoset;
use crate::composition::{
    decomposition_function, eval_f_eta, eval_g, ArityRecord, CompositionSequence, CompositionSet, CompositionStep,
    LeafValues, Position, PositionPath,
};
use crate::embed::{embed, verify_coloured_embedding, EmbeddingKind, EmbeddingMap};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::quasi::QuasiOrder;

/// Node colour in the combined palette: a sum over an arity, or a ground
/// colour (index into the tree's palette). `Sum(A) <= Sum(B)` iff `A`
/// embeds in `B`; ground colours follow the palette; the two kinds are
/// incomparable.
#[derive(Debug, Clone, PartialEq)]
pub enum NodeColour {
    Sum(Poset),
    Ground(usize),
}

#[derive(Debug, Clone)]
pub struct StructuredTree {
    order: Poset,
    colours: Vec<NodeColour>,
    ranges: Vec<Option<Poset>>,
    // per node: (child, label index in range)
    child_labels: Vec<Vec<(usize, usize)>>,
    // labels[v][x]: l_v(x) for x > v
    labels: Vec<Vec<Option<usize>>>,
    palette: Arc<QuasiOrder>,
}

impl StructuredTree {
    /// Builds a tree from its order, colours, label ranges and one label
    /// (an id in `ranges[v]`) for every child of every node.
    pub fn new(
        order: Poset,
        colours: Vec<NodeColour>,
        ranges: Vec<Option<Poset>>,
        child_labels: &[Vec<(usize, String)>],
        palette: Arc<QuasiOrder>,
    ) -> Result<StructuredTree> {
        let n = order.len();
        if !order.is_rooted_tree() {
            return Err(Error::NotATree(format!("{order:?}")));
        }
        if colours.len() != n || ranges.len() != n || child_labels.len() != n {
            return Err(Error::Malformed("per-node data does not match the node count".into()));
        }
        for c in &colours {
            if let NodeColour::Ground(g) = *c {
                if g >= palette.len() {
                    return Err(Error::UnknownColour(g.to_string()));
                }
            }
        }
        let mut resolved = Vec::with_capacity(n);
        for v in 0..n {
            let children = order.upper_covers(v);
            let given = &child_labels[v];
            if children.is_empty() {
                if !given.is_empty() {
                    return Err(Error::BadLabel(format!("{} has no children", order.id(v))));
                }
                resolved.push(Vec::new());
                continue;
            }
            let range = ranges[v]
                .as_ref()
                .ok_or_else(|| Error::BadLabel(format!("{} has children but no label range", order.id(v))))?;
            let mut row = Vec::with_capacity(children.len());
            for &c in &children {
                let label = given
                    .iter()
                    .find(|(d, _)| *d == c)
                    .map(|(_, l)| l)
                    .ok_or_else(|| Error::BadLabel(format!("{} unlabelled under {}", order.id(c), order.id(v))))?;
                let l = range
                    .index_of(label)
                    .ok_or_else(|| Error::BadLabel(format!("{label} not in range of {}", order.id(v))))?;
                row.push((c, l));
            }
            if given.len() != children.len() {
                return Err(Error::BadLabel(format!("labels under {} name non-children", order.id(v))));
            }
            resolved.push(row);
        }
        let labels = (0..n)
            .map(|v| (0..n).map(|x| resolved[v].iter().find(|&&(c, _)| order.le(c, x)).map(|&(_, l)| l)).collect())
            .collect();
        Ok(StructuredTree { order, colours, ranges, child_labels: resolved, labels, palette })
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn id(&self, v: usize) -> &str {
        self.order.id(v)
    }

    pub fn root(&self) -> usize {
        self.order.minimal_elements()[0]
    }

    pub fn colour(&self, v: usize) -> &NodeColour {
        &self.colours[v]
    }

    pub fn range(&self, v: usize) -> Option<&Poset> {
        self.ranges[v].as_ref()
    }

    pub fn palette(&self) -> &Arc<QuasiOrder> {
        &self.palette
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        self.child_labels[v].iter().map(|&(c, _)| c).collect()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&p| self.child_labels[p].iter().any(|&(c, _)| c == v))
    }

    /// Ancestors of `v`, root first.
    pub fn ancestors(&self, v: usize) -> Vec<usize> {
        let mut a: Vec<usize> = (0..self.len()).filter(|&u| self.order.lt(u, v)).collect();
        a.sort_by_key(|&u| self.order.down_degree(u));
        a
    }

    /// `l_v(x)` as an id of `range(l_v)`, for `x > v`.
    pub fn label(&self, v: usize, x: usize) -> Option<&str> {
        self.labels[v][x].map(|l| self.ranges[v].as_ref().expect("labelled node has a range").id(l))
    }

    fn label_index(&self, v: usize, x: usize) -> Option<usize> {
        self.labels[v][x]
    }

    fn ground_on(&self, other: &StructuredTree) -> Vec<usize> {
        (0..other.palette.len())
            .map(|c| self.palette.index_of(other.palette.colour(c)).expect("palettes agree"))
            .collect()
    }

    fn same_palette(&self, other: &StructuredTree) -> bool {
        Arc::ptr_eq(&self.palette, &other.palette) || *self.palette == *other.palette
    }

    /// Nodes in a root-first linear extension.
    fn root_first(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.len()).collect();
        v.sort_by_key(|&u| self.order.down_degree(u));
        v
    }

    /// One line per node: id, colour, parent and the label under each
    /// ancestor, root first.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for v in 0..self.len() {
            let parent = self.parent(v).map_or("-", |p| self.id(p));
            let labels: Vec<String> = self
                .ancestors(v)
                .into_iter()
                .map(|a| format!("{}={}", self.id(a), self.label(a, v).expect("ancestor labels")))
                .collect();
            let _ = writeln!(
                out,
                "{} colour={} parent={} labels={}",
                self.id(v),
                ColourDisplay(self, v),
                parent,
                labels.join(",")
            );
        }
        out
    }
}

struct ColourDisplay<'a>(&'a StructuredTree, usize);

impl fmt::Display for ColourDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.colour(self.1) {
            NodeColour::Sum(a) => write!(f, "sum:{}", ArityRecord(a)),
            NodeColour::Ground(g) => write!(f, "ground:{}", self.0.palette.colour(*g)),
        }
    }
}

/// What a decomposition-tree node stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    /// Layer `layer` of the sequence at `path`.
    Internal {
        path: PositionPath,
        layer: usize,
    },
    Leaf {
        path: PositionPath,
    },
}

impl NodeKind {
    pub fn path(&self) -> &PositionPath {
        match self {
            NodeKind::Internal { path, .. } | NodeKind::Leaf { path } => path,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, NodeKind::Leaf { .. })
    }

    fn id(&self) -> String {
        match self {
            NodeKind::Internal { path, layer } => format!("{path}#{layer}"),
            NodeKind::Leaf { path } => path.to_string(),
        }
    }
}

/// The structured tree of a composition set together with its leaf
/// arguments and the poset they evaluate to.
#[derive(Debug, Clone)]
pub struct DecompositionTree {
    source: ColouredPoset,
    set: CompositionSet,
    leaves: LeafValues,
    nodes: Vec<NodeKind>,
    tree: StructuredTree,
}

impl DecompositionTree {
    /// Realises the tree of `set` with one-point `leaves`; `source` is the
    /// poset they evaluate to.
    pub fn from_parts(set: CompositionSet, leaves: LeafValues, source: ColouredPoset) -> Result<DecompositionTree> {
        let mut nodes = Vec::new();
        collect_nodes(&set, &PositionPath::root(), &mut nodes);
        let n = nodes.len();
        let seq_at = |p: &PositionPath| set.at(p).and_then(CompositionSet::as_node).map(|n| n.sequence());

        let mut pairs = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if node_less(&nodes[a], &nodes[b]) {
                    pairs.push((a, b));
                }
            }
        }
        let order = Poset::from_index_pairs(nodes.iter().map(NodeKind::id).collect(), pairs)?;

        let palette = Arc::clone(source.palette());
        let mut colours = Vec::with_capacity(n);
        let mut ranges = Vec::with_capacity(n);
        for node in &nodes {
            match node {
                NodeKind::Internal { path, layer } => {
                    let arity = seq_at(path).expect("internal path").step(*layer).arity().clone();
                    colours.push(NodeColour::Sum(arity.clone()));
                    ranges.push(Some(arity));
                }
                NodeKind::Leaf { path } => {
                    let v = leaves.get(path).ok_or_else(|| Error::MissingLeaf(path.to_string()))?;
                    if v.len() != 1 {
                        return Err(Error::Malformed(format!("leaf {path} is not a single point")));
                    }
                    if !Arc::ptr_eq(v.palette(), &palette) && **v.palette() != *palette {
                        return Err(Error::PaletteMismatch);
                    }
                    colours.push(NodeColour::Ground(v.colour_index(0)));
                    ranges.push(None);
                }
            }
        }
        let child_labels: Vec<Vec<(usize, String)>> = (0..n)
            .map(|v| match &nodes[v] {
                NodeKind::Leaf { .. } => Vec::new(),
                NodeKind::Internal { path, layer } => {
                    let seq = seq_at(path).expect("internal path");
                    order
                        .upper_covers(v)
                        .into_iter()
                        .map(|c| (c, node_label(seq, path, *layer, &nodes[c]).to_string()))
                        .collect()
                }
            })
            .collect();
        let tree = StructuredTree::new(order, colours, ranges, &child_labels, palette)?;
        Ok(DecompositionTree { source, set, leaves, nodes, tree })
    }

    pub fn tree(&self) -> &StructuredTree {
        &self.tree
    }

    pub fn source(&self) -> &ColouredPoset {
        &self.source
    }

    pub fn composition_set(&self) -> &CompositionSet {
        &self.set
    }

    pub fn leaves(&self) -> &LeafValues {
        &self.leaves
    }

    pub fn nodes(&self) -> &[NodeKind] {
        &self.nodes
    }

    pub fn node(&self, id: &str) -> Option<usize> {
        self.tree.order.index_of(id)
    }

    pub fn internal_nodes(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&v| !self.nodes[v].is_leaf()).collect()
    }

    /// The ground element carried by a leaf node.
    pub fn ground_element(&self, v: usize) -> Option<&str> {
        match &self.nodes[v] {
            NodeKind::Leaf { path } => self.leaves.get(path).map(|q| q.poset().id(0)),
            NodeKind::Internal { .. } => None,
        }
    }

    /// The leaf node carrying `element`.
    pub fn leaf_of(&self, element: &str) -> Option<usize> {
        (0..self.nodes.len()).find(|&v| self.ground_element(v) == Some(element))
    }

    /// Every admissible chain: the down-set of each internal node.
    pub fn admissible_chains(&self) -> Vec<Vec<usize>> {
        self.internal_nodes()
            .into_iter()
            .map(|v| {
                let mut c = self.tree.ancestors(v);
                c.push(v);
                c
            })
            .collect()
    }
}

fn collect_nodes(set: &CompositionSet, path: &PositionPath, out: &mut Vec<NodeKind>) {
    match set {
        CompositionSet::Leaf => out.push(NodeKind::Leaf { path: path.clone() }),
        CompositionSet::Node(n) => {
            for layer in 0..n.sequence().len() {
                out.push(NodeKind::Internal { path: path.clone(), layer });
                for (pos, child) in n.children().iter().filter(|(p, _)| p.layer == layer) {
                    collect_nodes(child, &path.child(pos.clone()), out);
                }
            }
        }
    }
}

// first step of `q` after the strict prefix `p`
fn step_after<'a>(p: &PositionPath, q: &'a PositionPath) -> Option<&'a Position> {
    (q.len() > p.len() && p.is_prefix_of(q)).then(|| &q.0[p.len()])
}

fn node_less(a: &NodeKind, b: &NodeKind) -> bool {
    let NodeKind::Internal { path: p, layer: i } = a else {
        return false;
    };
    match b {
        NodeKind::Internal { path: q, layer: j } if q == p => j > i,
        _ => step_after(p, b.path()).is_some_and(|s| s.layer >= *i),
    }
}

fn node_label<'a>(seq: &'a CompositionSequence, p: &PositionPath, i: usize, x: &'a NodeKind) -> &'a str {
    let nest = seq.step(i).distinguished();
    match x {
        NodeKind::Internal { path, .. } if path == p => nest,
        _ => match step_after(p, x.path()) {
            Some(s) if s.layer == i => &s.slot,
            _ => nest,
        },
    }
}

/// Builds the decomposition tree of `x` from its decomposition function.
pub fn decomposition_tree(x: &ColouredPoset) -> Result<DecompositionTree> {
    let (set, leaves) = decomposition_function(x)?;
    DecompositionTree::from_parts(set, leaves, x.clone())
}

/// The cone above internal node `t` with label `u`, as the decomposition
/// tree of the sub-poset it spans.
pub fn subtree_extract(tree: &DecompositionTree, t: usize, u: &str) -> Result<DecompositionTree> {
    let Some(NodeKind::Internal { path, layer }) = tree.nodes.get(t) else {
        return Err(Error::BadLabel(format!("node {t} is not internal")));
    };
    let node = tree.set.at(path).and_then(CompositionSet::as_node).expect("internal path");
    let seq = node.sequence();
    let i = *layer;
    if seq.step(i).arity().index_of(u).is_none() {
        return Err(Error::BadLabel(format!("{u} is not a label of {}", tree.tree.id(t))));
    }

    let (set, leaves) = if !seq.is_nesting_slot(i, u) {
        let child_path = path.child(Position::new(i, u));
        let sub = tree.set.at(&child_path).expect("position has a child").clone();
        let leaves: LeafValues =
            tree.leaves.iter().filter_map(|(q, v)| child_path.strip_from(q).map(|r| (r, v.clone()))).collect();
        (sub, leaves)
    } else {
        let tail = seq.tail(i)?.expect("nesting slot of a non-final layer");
        let shift = |p: &Position| Position::new(p.layer - i - 1, p.slot.clone());
        let children =
            node.children().iter().filter(|(p, _)| p.layer > i).map(|(p, c)| (shift(p), c.clone())).collect();
        let set = CompositionSet::node(tail, children)?;
        let leaves: LeafValues = tree
            .leaves
            .iter()
            .filter_map(|(q, v)| {
                let first = step_after(path, q).filter(|s| s.layer > i)?;
                let mut rest = vec![shift(first)];
                rest.extend_from_slice(&q.0[path.len() + 1..]);
                Some((PositionPath(rest), v.clone()))
            })
            .collect();
        (set, leaves)
    };

    let x = tree.source.poset();
    let mut members: Vec<usize> = leaves.values().map(|v| x.require(v.poset().id(0))).collect::<Result<_>>()?;
    members.sort_unstable();
    let source = tree.source.induced(&members);
    DecompositionTree::from_parts(set, leaves, source)
}

/// Re-evaluates the tree along the chain `zeta` (node indices): the chain
/// must be the full down-set of an internal node.
pub fn recompose_along_chain(tree: &DecompositionTree, zeta: &[usize]) -> Result<ColouredPoset> {
    let t = &tree.tree;
    let mut chain = zeta.to_vec();
    chain.sort_by_key(|&v| t.order.down_degree(v));
    chain.dedup();
    let Some(&top) = chain.last() else {
        return Err(Error::NotUpClosedChain);
    };
    let below: Vec<usize> = (0..t.len()).filter(|&w| t.order.le(w, top)).collect();
    let mut sorted = chain.clone();
    sorted.sort_unstable();
    if sorted != below || chain.iter().any(|&v| v >= tree.nodes.len() || tree.nodes[v].is_leaf()) {
        return Err(Error::NotUpClosedChain);
    }

    let mut steps = Vec::with_capacity(chain.len());
    for (k, &v) in chain.iter().enumerate() {
        let next = match chain.get(k + 1) {
            Some(&w) => w,
            None => t.children(v)[0],
        };
        let NodeColour::Sum(arity) = t.colour(v) else { unreachable!("internal nodes carry sums") };
        steps.push(CompositionStep::new(arity.clone(), t.label(v, next).expect("next lies above"))?);
    }
    let eta = CompositionSequence::new(steps)?;
    let mut k = BTreeMap::new();
    for p in eta.positions() {
        let sub = subtree_extract(tree, chain[p.layer], &p.slot)?;
        k.insert(p, sub.source);
    }
    eval_f_eta(&eta, &k)
}

fn colour_le(s: &StructuredTree, a: usize, t: &StructuredTree, b: usize, ground: &[usize]) -> bool {
    match (s.colour(a), t.colour(b)) {
        (NodeColour::Sum(x), NodeColour::Sum(y)) => embed(x, y).is_some(),
        (NodeColour::Ground(x), NodeColour::Ground(y)) => s.palette.le(*x, ground[*y]),
        _ => false,
    }
}

fn label_pair_ok(
    s: &StructuredTree,
    t: &StructuredTree,
    v: usize,
    pv: usize,
    (x, px): (usize, usize),
    (y, py): (usize, usize),
) -> bool {
    let (Some(a), Some(a2)) = (s.label_index(v, x), s.label_index(v, y)) else { return false };
    let (Some(b), Some(b2)) = (t.label_index(pv, px), t.label_index(pv, py)) else { return false };
    let rs = s.range(v).expect("labelled");
    let rt = t.range(pv).expect("labelled");
    (a == a2) == (b == b2) && rs.relation(a, a2) == rt.relation(b, b2)
}

/// Searches for a structured-tree embedding of `s` into `t`: an order
/// embedding preserving meets, increasing colours, and inducing label maps
/// that are arity embeddings.
pub fn st_embed(s: &StructuredTree, t: &StructuredTree) -> Result<Option<EmbeddingMap>> {
    if !s.same_palette(t) {
        return Err(Error::PaletteMismatch);
    }
    if s.len() > t.len() {
        return Ok(None);
    }
    let ground = s.ground_on(t);
    let visit = s.root_first();
    let candidates: Vec<Vec<usize>> = (0..s.len())
        .map(|a| {
            (0..t.len())
                .filter(|&b| {
                    s.order.up_degree(a) <= t.order.up_degree(b)
                        && s.order.down_degree(a) <= t.order.down_degree(b)
                        && colour_le(s, a, t, b, &ground)
                })
                .collect()
        })
        .collect();
    let mut images = vec![usize::MAX; s.len()];
    let mut used = vec![false; t.len()];
    let found = st_extend(s, t, &visit, &candidates, 0, &mut images, &mut used);
    Ok(found.then(|| EmbeddingMap::from_indices(EmbeddingKind::StructuredTree, &s.order, &t.order, images)))
}

fn st_extend(
    s: &StructuredTree,
    t: &StructuredTree,
    visit: &[usize],
    candidates: &[Vec<usize>],
    k: usize,
    images: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&a) = visit.get(k) else { return true };
    let assigned = &visit[..k];
    'next: for &b in &candidates[a] {
        if used[b] {
            continue;
        }
        for &x in assigned {
            if s.order.relation(x, a) != t.order.relation(images[x], b) {
                continue 'next;
            }
            let m = s.order.meet(x, a).expect("trees have meets");
            let want = if m == a { b } else { images[m] };
            if t.order.meet(images[x], b) != Some(want) {
                continue 'next;
            }
        }
        for &v in assigned.iter().filter(|&&v| s.order.lt(v, a)) {
            let pv = images[v];
            let ok = std::iter::once(a).chain(assigned.iter().copied().filter(|&x| s.order.lt(v, x))).all(|x| {
                let px = if x == a { b } else { images[x] };
                label_pair_ok(s, t, v, pv, (a, b), (x, px))
            });
            if !ok {
                continue 'next;
            }
        }
        images[a] = b;
        used[b] = true;
        if st_extend(s, t, visit, candidates, k + 1, images, used) {
            return true;
        }
        used[b] = false;
        images[a] = usize::MAX;
    }
    false
}

/// Checks every structured-tree embedding condition for `map`.
pub fn verify_st_embedding(s: &StructuredTree, t: &StructuredTree, map: &EmbeddingMap) -> bool {
    let im = map.images();
    if !s.same_palette(t) || im.len() != s.len() || im.iter().any(|&b| b >= t.len()) || !map.is_injective() {
        return false;
    }
    let ground = s.ground_on(t);
    let n = s.len();
    for a in 0..n {
        if !colour_le(s, a, t, im[a], &ground) {
            return false;
        }
        for x in 0..n {
            if s.order.relation(a, x) != t.order.relation(im[a], im[x]) {
                return false;
            }
            let m = s.order.meet(a, x).expect("trees have meets");
            if t.order.meet(im[a], im[x]) != Some(im[m]) {
                return false;
            }
        }
    }
    for v in 0..n {
        let above: Vec<usize> = (0..n).filter(|&x| s.order.lt(v, x)).collect();
        for &x in &above {
            for &y in &above {
                if !label_pair_ok(s, t, v, im[v], (x, im[x]), (y, im[y])) {
                    return false;
                }
            }
        }
    }
    true
}

/// Lifts a structured-tree embedding of decomposition trees to a coloured
/// embedding of the underlying posets, sending each element to the ground
/// element of the image of its leaf.
pub fn lift_embedding(sx: &DecompositionTree, ty: &DecompositionTree, phi: &EmbeddingMap) -> Result<EmbeddingMap> {
    if !verify_st_embedding(&sx.tree, &ty.tree, phi) {
        return Err(Error::VerificationFailure("not a structured-tree embedding".into()));
    }
    let (x, y) = (sx.source(), ty.source());
    let mut images = Vec::with_capacity(x.len());
    for a in x.poset().elements() {
        let leaf = sx.leaf_of(a).ok_or_else(|| Error::MissingLeaf(a.clone()))?;
        let target = phi.images()[leaf];
        let g = ty
            .ground_element(target)
            .ok_or_else(|| Error::VerificationFailure(format!("leaf of {a} maps to internal node")))?;
        images.push(y.poset().require(g)?);
    }
    let map = EmbeddingMap::from_indices(EmbeddingKind::Coloured, x.poset(), y.poset(), images);
    if !verify_coloured_embedding(x, y, &map) {
        return Err(Error::VerificationFailure(format!("lifted map {map} is not an embedding")));
    }
    Ok(map)
}

/// Rank of the root: `rank(t) = sup{rank(s) + 1 : t < s}`.
pub fn tree_rank(tree: &Poset) -> Result<usize> {
    if !tree.is_rooted_tree() {
        return Err(Error::NotATree(format!("{tree:?}")));
    }
    let mut by_depth: Vec<usize> = (0..tree.len()).collect();
    by_depth.sort_by_key(|&v| std::cmp::Reverse(tree.down_degree(v)));
    let mut rank = vec![0usize; tree.len()];
    for &v in &by_depth {
        rank[v] = tree.upper_covers(v).into_iter().map(|c| rank[c] + 1).max().unwrap_or(0);
    }
    Ok(rank[tree.minimal_elements()[0]])
}

/// Least `α` such that the tree is an iterated tree-sum over finite chains
/// of trees of rank below `α`; singletons (and the empty tree) have rank 0.
pub fn scattered_rank(tree: &StructuredTree, bound: usize) -> Result<usize> {
    scattered_rank_of(tree.order(), bound)
}

/// [`scattered_rank`] on a bare tree order.
pub fn scattered_rank_of(tree: &Poset, bound: usize) -> Result<usize> {
    check(tree.len(), bound)?;
    if tree.is_empty() {
        return Ok(0);
    }
    if !tree.is_rooted_tree() {
        return Err(Error::NotATree(format!("{tree:?}")));
    }
    let children: Vec<Vec<usize>> = (0..tree.len()).map(|v| tree.upper_covers(v)).collect();
    let mut memo = vec![None; tree.len()];
    Ok(cone_rank(tree, &children, tree.minimal_elements()[0], &mut memo))
}

// tries every chain from v to a node w of its cone; the hangings are the
// cones of children leaving the chain
fn cone_rank(tree: &Poset, children: &[Vec<usize>], v: usize, memo: &mut [Option<usize>]) -> usize {
    if let Some(r) = memo[v] {
        return r;
    }
    let r = if children[v].is_empty() {
        0
    } else {
        let mut best = usize::MAX;
        for w in (0..tree.len()).filter(|&w| tree.le(v, w)) {
            let mut worst = 0;
            for z in (0..tree.len()).filter(|&z| tree.le(v, z) && tree.le(z, w)) {
                for &c in children[z].iter().filter(|&&c| !tree.le(c, w)) {
                    worst = worst.max(cone_rank(tree, children, c, memo));
                }
            }
            best = best.min(worst + 1);
        }
        best
    };
    memo[v] = Some(r);
    r
}

/// Decomposition tree of the cone above (and including) node `v`, where
/// that cone is itself a subtree: used to rebuild the pieces `x(t, u)`.
pub fn cone_source(tree: &DecompositionTree, v: usize) -> Result<ColouredPoset> {
    let x = tree.source.poset();
    let mut members: Vec<usize> = (0..tree.nodes.len())
        .filter(|&w| tree.tree.order.le(v, w))
        .filter_map(|w| tree.ground_element(w))
        .map(|g| x.require(g))
        .collect::<Result<_>>()?;
    members.sort_unstable();
    Ok(tree.source.induced(&members))
}

/// Evaluates the tree's composition set; isomorphic to its source.
pub fn evaluate(tree: &DecompositionTree) -> Result<ColouredPoset> {
    eval_g(&tree.set, &tree.leaves)
}
