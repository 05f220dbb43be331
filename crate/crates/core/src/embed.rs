//! Exhaustive backtracking search for induced embeddings.
//!
//! Source elements are assigned in canonical order and candidates are tried
//! in canonical target order, so the first witness found is reproducible.
//! A `None` result is a proof that no embedding exists.

use std::fmt;

use crate::coloured::ColouredPoset;
use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EmbeddingKind {
    Poset,
    Coloured,
    StructuredTree,
}

impl fmt::Display for EmbeddingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EmbeddingKind::Poset => "poset",
            EmbeddingKind::Coloured => "coloured",
            EmbeddingKind::StructuredTree => "structured-tree",
        })
    }
}

/// An injective element map witnessing an embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingMap {
    kind: EmbeddingKind,
    images: Vec<usize>,
    pairs: Vec<(String, String)>,
}

impl EmbeddingMap {
    pub fn from_indices(kind: EmbeddingKind, source: &Poset, target: &Poset, images: Vec<usize>) -> EmbeddingMap {
        let pairs =
            images.iter().enumerate().map(|(i, &j)| (source.id(i).to_string(), target.id(j).to_string())).collect();
        EmbeddingMap { kind, images, pairs }
    }

    pub fn kind(&self) -> EmbeddingKind {
        self.kind
    }

    /// Target index of each source index.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(source id, target id)` pairs in canonical source order.
    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }

    pub fn get(&self, source_id: &str) -> Option<&str> {
        self.pairs.iter().find(|(a, _)| a == source_id).map(|(_, b)| b.as_str())
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.images.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for EmbeddingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}->{b}")?;
        }
        Ok(())
    }
}

/// Core search: injective `images` with `x.relation(a,b) == y.relation(φa,φb)`
/// for every pair, subject to a per-element compatibility filter.
pub(crate) fn search(x: &Poset, y: &Poset, compatible: &dyn Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    let n = x.len();
    if n > y.len() {
        return None;
    }
    let up_x: Vec<usize> = (0..n).map(|i| x.up_degree(i)).collect();
    let down_x: Vec<usize> = (0..n).map(|i| x.down_degree(i)).collect();
    let up_y: Vec<usize> = (0..y.len()).map(|j| y.up_degree(j)).collect();
    let down_y: Vec<usize> = (0..y.len()).map(|j| y.down_degree(j)).collect();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..y.len()).filter(|&j| up_x[i] <= up_y[j] && down_x[i] <= down_y[j] && compatible(i, j)).collect())
        .collect();
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; y.len()];
    if extend(x, y, &candidates, 0, &mut images, &mut used) {
        Some(images)
    } else {
        None
    }
}

fn extend(x: &Poset, y: &Poset, candidates: &[Vec<usize>], i: usize, images: &mut [usize], used: &mut [bool]) -> bool {
    if i == images.len() {
        return true;
    }
    for &j in &candidates[i] {
        if used[j] {
            continue;
        }
        if (0..i).all(|a| x.relation(a, i) == y.relation(images[a], j)) {
            images[i] = j;
            used[j] = true;
            if extend(x, y, candidates, i + 1, images, used) {
                return true;
            }
            used[j] = false;
        }
    }
    images[i] = usize::MAX;
    false
}

/// Finds an induced-suborder embedding of `x` into `y`.
pub fn embed(x: &Poset, y: &Poset) -> Option<EmbeddingMap> {
    search(x, y, &|_, _| true).map(|images| EmbeddingMap::from_indices(EmbeddingKind::Poset, x, y, images))
}

/// Embedding that is also colour-increasing: `c(a) <= c(φ(a))` in the palette.
pub fn coloured_embed(x: &ColouredPoset, y: &ColouredPoset) -> Result<Option<EmbeddingMap>> {
    if !x.same_palette(y) {
        return Err(Error::PaletteMismatch);
    }
    let pal = x.palette();
    let y_on_x = palette_translation(x, y);
    let found = search(x.poset(), y.poset(), &|i, j| pal.le(x.colour_index(i), y_on_x[y.colour_index(j)]));
    Ok(found.map(|images| EmbeddingMap::from_indices(EmbeddingKind::Coloured, x.poset(), y.poset(), images)))
}

// maps y's palette indices onto x's when the palettes are equal but distinct allocations
fn palette_translation(x: &ColouredPoset, y: &ColouredPoset) -> Vec<usize> {
    let (px, py) = (x.palette(), y.palette());
    (0..py.len()).map(|c| px.index_of(py.colour(c)).expect("palettes agree")).collect()
}

/// An order isomorphism, if one exists.
pub fn isomorphism(x: &Poset, y: &Poset) -> Option<EmbeddingMap> {
    if x.len() != y.len() || x.pairs().count() != y.pairs().count() {
        return None;
    }
    embed(x, y)
}

/// Isomorphism of coloured posets preserving colour ids exactly.
pub fn coloured_isomorphism(x: &ColouredPoset, y: &ColouredPoset) -> Option<EmbeddingMap> {
    if x.len() != y.len() || x.poset().pairs().count() != y.poset().pairs().count() {
        return None;
    }
    if x.colour_multiset() != y.colour_multiset() {
        return None;
    }
    search(x.poset(), y.poset(), &|i, j| x.colour(i) == y.colour(j))
        .map(|images| EmbeddingMap::from_indices(EmbeddingKind::Coloured, x.poset(), y.poset(), images))
}

pub fn is_isomorphic(x: &Poset, y: &Poset) -> bool {
    isomorphism(x, y).is_some()
}

/// Re-checks a witness pair by pair against the iff condition.
pub fn verify_embedding(x: &Poset, y: &Poset, map: &EmbeddingMap) -> bool {
    let im = map.images();
    im.len() == x.len()
        && im.iter().all(|&j| j < y.len())
        && map.is_injective()
        && (0..x.len()).all(|a| (0..x.len()).all(|b| x.relation(a, b) == y.relation(im[a], im[b])))
}

pub fn verify_coloured_embedding(x: &ColouredPoset, y: &ColouredPoset, map: &EmbeddingMap) -> bool {
    if !x.same_palette(y) || !verify_embedding(x.poset(), y.poset(), map) {
        return false;
    }
    let pal = x.palette();
    let tr = palette_translation(x, y);
    map.images().iter().enumerate().all(|(i, &j)| pal.le(x.colour_index(i), tr[y.colour_index(j)]))
}
