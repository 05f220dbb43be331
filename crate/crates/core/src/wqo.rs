//! Finite quasi-order experiments: the coloured fence antichain,
//! embeddability matrices and bad-pair search.

use std::fmt;
use std::sync::Arc;

use crate::bounds::{check, Bounds};
use crate::canonical::{canonical, Canonical};
use crate::coloured::ColouredPoset;
use crate::embed::coloured_embed;
use crate::error::{Error, Result};
use crate::quasi::QuasiOrder;

/// A non-empty named list of coloured posets over one palette.
#[derive(Debug, Clone)]
pub struct Family {
    names: Vec<String>,
    members: Vec<ColouredPoset>,
}

impl Family {
    pub fn new(members: Vec<(String, ColouredPoset)>) -> Result<Family> {
        let Some((_, first)) = members.first() else {
            return Err(Error::EmptyFamily);
        };
        if members.iter().any(|(_, m)| !m.same_palette(first)) {
            return Err(Error::PaletteMismatch);
        }
        let (names, members) = members.into_iter().unzip();
        Ok(Family { names, members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn members(&self) -> &[ColouredPoset] {
        &self.members
    }

    pub fn get(&self, i: usize) -> &ColouredPoset {
        &self.members[i]
    }

    fn check_bounds(&self, bounds: &Bounds) -> Result<()> {
        check(self.len(), bounds.family)?;
        self.members.iter().try_for_each(|m| bounds.check_elements(m.len()))
    }
}

/// `Z_1, ..., Z_n`: `Z_k` is the fence on `k + 2` points with both ends
/// coloured `1` and the rest `0`, over the two-colour antichain palette.
pub fn fence_antichain(n_max: usize) -> Result<Family> {
    if n_max == 0 {
        return Err(Error::EmptyFamily);
    }
    let palette = Arc::new(QuasiOrder::discrete(["0", "1"])?);
    let members = (1..=n_max)
        .map(|k| {
            let fence = canonical(Canonical::Fence, k)?;
            let last = fence.len() - 1;
            let colours = (0..fence.len()).map(|i| usize::from(i == 0 || i == last)).collect();
            Ok((format!("Z{k}"), ColouredPoset::from_indices(fence, colours, Arc::clone(&palette))?))
        })
        .collect::<Result<Vec<_>>>()?;
    Family::new(members)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddabilityMatrix {
    names: Vec<String>,
    entries: Vec<Vec<bool>>,
}

impl EmbeddabilityMatrix {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Does member `i` embed into member `j`?
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i][j]
    }

    pub fn is_identity(&self) -> bool {
        (0..self.len()).all(|i| (0..self.len()).all(|j| self.entries[i][j] == (i == j)))
    }

    /// Least `(i, j)` with `i < j` and member `i` not embedding into `j`.
    pub fn first_bad_pair(&self) -> Option<(usize, usize)> {
        (0..self.len()).flat_map(|i| (i + 1..self.len()).map(move |j| (i, j))).find(|&(i, j)| !self.entries[i][j])
    }

    /// Machine-readable block.
    pub fn stanza(&self) -> String {
        let mut out = format!("matrix {}\nnames {}\n", self.len(), self.names.join(" "));
        for row in &self.entries {
            out.push_str("row ");
            out.extend(row.iter().map(|&b| if b { '1' } else { '0' }));
            out.push('\n');
        }
        out.push_str("end\n");
        out
    }
}

impl fmt::Display for EmbeddabilityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.names.iter().map(String::len).max().unwrap_or(0);
        write!(f, "{:w$}", "")?;
        for name in &self.names {
            write!(f, " {name:>w$}")?;
        }
        writeln!(f)?;
        for (name, row) in self.names.iter().zip(&self.entries) {
            write!(f, "{name:w$}")?;
            for &b in row {
                write!(f, " {:>w$}", u8::from(b))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Entry `(i, j)` records whether member `i` embeds into member `j`. Rows
/// are computed on separate threads.
pub fn embeddability_matrix(fam: &Family, bounds: &Bounds) -> Result<EmbeddabilityMatrix> {
    fam.check_bounds(bounds)?;
    let entries = std::thread::scope(|s| {
        let rows: Vec<_> = (0..fam.len())
            .map(|i| {
                s.spawn(move || {
                    (0..fam.len())
                        .map(|j| coloured_embed(fam.get(i), fam.get(j)).map(|m| m.is_some()))
                        .collect::<Result<Vec<bool>>>()
                })
            })
            .collect();
        rows.into_iter().map(|h| h.join().expect("matrix row")).collect::<Result<Vec<_>>>()
    })?;
    Ok(EmbeddabilityMatrix { names: fam.names.clone(), entries })
}

/// Lexicographically least `(i, j)`, `i < j`, with `fam[i]` not embedding
/// into `fam[j]`.
pub fn bad_pair_search(fam: &Family, bounds: &Bounds) -> Result<Option<(usize, usize)>> {
    fam.check_bounds(bounds)?;
    for i in 0..fam.len() {
        for j in i + 1..fam.len() {
            if coloured_embed(fam.get(i), fam.get(j))?.is_none() {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;

    fn chains(ks: &[usize]) -> Family {
        Family::new(
            ks.iter()
                .map(|&k| (format!("CH{k}"), ColouredPoset::uncoloured(canonical(Canonical::Chain, k).unwrap())))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn fences() {
        let f = fence_antichain(2).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.get(0).poset().elements(), ["a", "b", "c"]);
        let colours = |z: &ColouredPoset| (0..z.len()).map(|i| z.colour(i).to_string()).collect::<Vec<_>>();
        assert_eq!(colours(f.get(0)), ["1", "0", "1"]);
        assert_eq!(colours(f.get(1)), ["1", "0", "0", "1"]);
        for (k, z) in fence_antichain(6).unwrap().members().iter().enumerate() {
            assert_eq!(z.len(), k + 3);
            assert_eq!(z.colour_multiset().iter().filter(|c| **c == "1").count(), 2);
        }
        assert_eq!(fence_antichain(0).unwrap_err(), Error::EmptyFamily);
    }

    #[test]
    fn matrices() {
        let m = embeddability_matrix(&chains(&[1, 2, 3]), &Bounds::default()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.get(i, j), i <= j);
            }
        }
        assert!(embeddability_matrix(&fence_antichain(4).unwrap(), &Bounds::default()).unwrap().is_identity());
        let ac2 = ColouredPoset::uncoloured(canonical(Canonical::Antichain, 2).unwrap());
        let ch2 = ColouredPoset::uncoloured(canonical(Canonical::Chain, 2).unwrap());
        let fam = Family::new(vec![("AC2".into(), ac2), ("CH2".into(), ch2)]).unwrap();
        let m = embeddability_matrix(&fam, &Bounds::default()).unwrap();
        assert!(m.is_identity());
        assert_eq!(m.to_string(), "    AC2 CH2\nAC2   1   0\nCH2   0   1\n");
        assert_eq!(m.stanza(), "matrix 2\nnames AC2 CH2\nrow 10\nrow 01\nend\n");
    }

    #[test]
    fn bad_pairs() {
        let b = Bounds::default();
        assert_eq!(bad_pair_search(&chains(&[1, 2, 3]), &b).unwrap(), None);
        assert_eq!(bad_pair_search(&chains(&[3, 2]), &b).unwrap(), Some((0, 1)));
        assert_eq!(bad_pair_search(&fence_antichain(3).unwrap(), &b).unwrap(), Some((0, 1)));
        let big = chains(&[1; 11]);
        assert_eq!(bad_pair_search(&big, &b).unwrap_err(), Error::TooLarge { size: 11, bound: 10 });
    }

    #[test]
    fn family_invariants() {
        assert_eq!(Family::new(Vec::new()).unwrap_err(), Error::EmptyFamily);
        let pal = Arc::new(QuasiOrder::discrete(["r"]).unwrap());
        let a = ColouredPoset::monochrome(Poset::singleton("x"), pal, 0);
        let b = ColouredPoset::uncoloured(Poset::singleton("y"));
        assert_eq!(Family::new(vec![("a".into(), a), ("b".into(), b)]).unwrap_err(), Error::PaletteMismatch);
    }
}
