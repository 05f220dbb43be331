use crate::error::{Error, Result};

/// Environment variable that overrides [`Bounds::elements`].
pub const BOUND_ENV: &str = "POSET_FORGE_BOUND";

/// Size limits for the exponential operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Maximum carrier size for subset enumeration (intervals, indecomposable
    /// subsets, class checks, search families).
    pub elements: usize,
    /// Maximum node count for scattered-rank search.
    pub scattered_nodes: usize,
    /// Maximum number of members in an embeddability family.
    pub family: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { elements: 16, scattered_nodes: 15, family: 10 }
    }
}

impl Bounds {
    /// Defaults, with [`BOUND_ENV`] applied when set to a number.
    pub fn from_env() -> Bounds {
        let mut b = Bounds::default();
        if let Some(v) = std::env::var(BOUND_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            b.elements = v;
        }
        b
    }

    pub fn check_elements(&self, size: usize) -> Result<()> {
        check(size, self.elements)
    }
}

pub(crate) fn check(size: usize, bound: usize) -> Result<()> {
    if size > bound {
        Err(Error::TooLarge { size, bound })
    } else {
        Ok(())
    }
}
