use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poset::{check_nonempty_parts, sum_of, sum_parts, Poset};
use crate::quasi::QuasiOrder;

/// A poset together with a colouring of its elements by a quasi-ordered
/// palette.
#[derive(Clone)]
pub struct ColouredPoset {
    poset: Poset,
    colours: Vec<usize>,
    palette: Arc<QuasiOrder>,
}

impl ColouredPoset {
    /// Colours `poset` via the id map `colouring`. Every element must be
    /// coloured and every colour must exist in `palette`.
    pub fn new<K, V>(
        poset: Poset,
        colouring: impl IntoIterator<Item = (K, V)>,
        palette: Arc<QuasiOrder>,
    ) -> Result<ColouredPoset>
    where
        K: AsRef<str>,
        V: AsRef<str>,
    {
        let mut colours = vec![None; poset.len()];
        for (e, c) in colouring {
            let i = poset.require(e.as_ref())?;
            let c = palette.index_of(c.as_ref()).ok_or_else(|| Error::UnknownColour(c.as_ref().to_string()))?;
            colours[i] = Some(c);
        }
        let colours = colours
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or_else(|| Error::MissingColour(poset.id(i).to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(ColouredPoset { poset, colours, palette })
    }

    /// Colours given as palette indices, one per element in canonical order.
    pub fn from_indices(poset: Poset, colours: Vec<usize>, palette: Arc<QuasiOrder>) -> Result<ColouredPoset> {
        if colours.len() != poset.len() {
            let missing = poset.elements().get(colours.len()).cloned().unwrap_or_default();
            return Err(Error::MissingColour(missing));
        }
        if let Some(&bad) = colours.iter().find(|&&c| c >= palette.len()) {
            return Err(Error::UnknownColour(bad.to_string()));
        }
        Ok(ColouredPoset { poset, colours, palette })
    }

    /// Every element coloured by the single default colour.
    pub fn uncoloured(poset: Poset) -> ColouredPoset {
        Self::monochrome(poset, Arc::new(QuasiOrder::single()), 0)
    }

    pub fn monochrome(poset: Poset, palette: Arc<QuasiOrder>, colour: usize) -> ColouredPoset {
        let colours = vec![colour; poset.len()];
        ColouredPoset { poset, colours, palette }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn palette(&self) -> &Arc<QuasiOrder> {
        &self.palette
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// Palette index of element `i`'s colour.
    pub fn colour_index(&self, i: usize) -> usize {
        self.colours[i]
    }

    pub fn colour(&self, i: usize) -> &str {
        self.palette.colour(self.colours[i])
    }

    pub fn colour_indices(&self) -> &[usize] {
        &self.colours
    }

    /// Shares a palette with `other` (same allocation or structurally equal).
    pub fn same_palette(&self, other: &ColouredPoset) -> bool {
        Arc::ptr_eq(&self.palette, &other.palette) || *self.palette == *other.palette
    }

    pub fn induced(&self, members: &[usize]) -> ColouredPoset {
        ColouredPoset {
            poset: self.poset.induced(members),
            colours: members.iter().map(|&i| self.colours[i]).collect(),
            palette: Arc::clone(&self.palette),
        }
    }

    pub fn relabelled(&self, f: impl FnMut(usize, &str) -> String) -> Result<ColouredPoset> {
        Ok(ColouredPoset { poset: self.poset.relabelled(f)?, ..self.clone() })
    }

    /// Same order and colour names over a different palette.
    pub fn with_palette(&self, palette: Arc<QuasiOrder>) -> Result<ColouredPoset> {
        let colours = self
            .colours
            .iter()
            .map(|&c| {
                let id = self.palette.colour(c);
                palette.index_of(id).ok_or_else(|| Error::UnknownColour(id.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ColouredPoset { poset: self.poset.clone(), colours, palette })
    }

    /// Colour multiset as sorted colour ids.
    pub fn colour_multiset(&self) -> Vec<&str> {
        let mut v: Vec<&str> = (0..self.len()).map(|i| self.colour(i)).collect();
        v.sort_unstable();
        v
    }
}

impl fmt::Debug for ColouredPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} colours [", self.poset)?;
        for i in 0..self.len() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}={}", self.poset.id(i), self.colour(i))?;
        }
        f.write_str("]")
    }
}

/// Coloured `index`-sum; colours are inherited from the parts, which must
/// share one palette.
pub fn coloured_sum(index: &Poset, parts: &BTreeMap<String, ColouredPoset>) -> Result<ColouredPoset> {
    let ordered = sum_parts(index, |id| parts.get(id))?;
    coloured_sum_ordered(index, &ordered)
}

pub(crate) fn coloured_sum_ordered(index: &Poset, parts: &[&ColouredPoset]) -> Result<ColouredPoset> {
    let posets: Vec<&Poset> = parts.iter().map(|p| p.poset()).collect();
    check_nonempty_parts(index, &posets)?;
    let palette = match parts.first() {
        Some(p) => Arc::clone(p.palette()),
        None => Arc::new(QuasiOrder::single()),
    };
    if parts.iter().any(|p| !Arc::ptr_eq(p.palette(), &palette) && **p.palette() != *palette) {
        return Err(Error::PaletteMismatch);
    }
    let (poset, _) = sum_of(index, &posets);
    let colours = parts.iter().flat_map(|p| p.colours.iter().copied()).collect();
    Ok(ColouredPoset { poset, colours, palette })
}
