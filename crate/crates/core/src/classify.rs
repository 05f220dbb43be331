//! Membership of finite posets in classes defined by their indecomposable
//! subsets, with pathological-prefix diagnostics.

use std::fmt;

use crate::bounds::Bounds;
use crate::canonical::{canonical, Canonical};
use crate::coloured::ColouredPoset;
use crate::embed::{embed, is_isomorphic, EmbeddingMap};
use crate::error::{Error, Result};
use crate::interval::is_indecomposable;
use crate::poset::Poset;

/// Which indecomposable orders a class admits.
#[derive(Debug, Clone)]
pub enum Allowed {
    /// Orders isomorphic to a listed one.
    Listed(Vec<Poset>),
    /// Every indecomposable order of at most this size.
    MaxSize(usize),
}

#[derive(Debug, Clone)]
pub struct ClassSpec {
    allowed: Allowed,
    prefix_depth: usize,
}

impl ClassSpec {
    pub fn new(allowed: Allowed, prefix_depth: usize) -> Result<ClassSpec> {
        if prefix_depth == 0 {
            return Err(Error::Malformed("prefix depth must be at least 1".into()));
        }
        match &allowed {
            Allowed::MaxSize(0) => return Err(Error::Malformed("maximum size must be at least 1".into())),
            Allowed::Listed(l) if l.iter().any(Poset::is_empty) => {
                return Err(Error::Malformed("listed orders must be non-empty".into()))
            }
            _ => {}
        }
        Ok(ClassSpec { allowed, prefix_depth })
    }

    /// `{1, CH2, AC2}`: the class of N-free orders.
    pub fn n_free(prefix_depth: usize) -> Result<ClassSpec> {
        let listed = vec![Poset::singleton("a"), canonical(Canonical::Chain, 2)?, canonical(Canonical::Antichain, 2)?];
        ClassSpec::new(Allowed::Listed(listed), prefix_depth)
    }

    pub fn allowed(&self) -> &Allowed {
        &self.allowed
    }

    pub fn prefix_depth(&self) -> usize {
        self.prefix_depth
    }
}

fn subsets_by_size(n: usize, sizes: std::ops::RangeInclusive<usize>) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u64..1 << n)
        .filter(|m| sizes.contains(&(m.count_ones() as usize)))
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    out.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn indecomposable_in(x: &Poset, sizes: std::ops::RangeInclusive<usize>, bounds: &Bounds) -> Result<Vec<Vec<usize>>> {
    bounds.check_elements(x.len())?;
    Ok(subsets_by_size(x.len(), sizes)
        .into_iter()
        .filter(|s| is_indecomposable(&x.induced(s)).expect("non-empty"))
        .collect())
}

/// Subsets of size `2..=max_size` inducing an indecomposable order, by size
/// then lexicographically. `max_size` is clamped to `|x|`.
pub fn indecomposable_subsets(x: &Poset, max_size: usize, bounds: &Bounds) -> Result<Vec<Vec<usize>>> {
    indecomposable_in(x, 2..=max_size.min(x.len()), bounds)
}

/// Does `x` avoid `N` as an induced suborder?
pub fn is_n_free(x: &Poset) -> bool {
    embed(&canonical(Canonical::N, 0).expect("N"), x).is_none()
}

/// Which of the three pathological prefixes of depth `k` embed, with
/// witnesses.
#[derive(Debug, Clone)]
pub struct PrefixReport {
    pub depth: usize,
    pub entries: Vec<(Canonical, Option<EmbeddingMap>)>,
}

impl PrefixReport {
    pub fn embeds(&self, which: Canonical) -> Option<bool> {
        self.entries.iter().find(|(c, _)| *c == which).map(|(_, m)| m.is_some())
    }
}

impl fmt::Display for PrefixReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, m) in &self.entries {
            match m {
                Some(m) => writeln!(f, "prefix {c}({}) present {m}", self.depth)?,
                None => writeln!(f, "prefix {c}({}) absent", self.depth)?,
            }
        }
        Ok(())
    }
}

pub fn pathological_prefix_check(x: &Poset, k: usize, bounds: &Bounds) -> Result<PrefixReport> {
    bounds.check_elements(x.len())?;
    let entries = [Canonical::BinaryTreePrefix, Canonical::ReversedBinaryTreePrefix, Canonical::PerpPrefix]
        .into_iter()
        .map(|c| Ok((c, embed(&canonical(c, k)?, x))))
        .collect::<Result<Vec<_>>>()?;
    Ok(PrefixReport { depth: k, entries })
}

#[derive(Debug, Clone)]
pub struct ClassReport {
    /// Offending indecomposable subsets, as element ids.
    pub violations: Vec<Vec<String>>,
    pub prefixes: PrefixReport,
}

impl ClassReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "violation {}", v.join(","))?;
        }
        write!(f, "{}", self.prefixes)?;
        writeln!(f, "verdict {}", if self.passes() { "pass" } else { "fail" })
    }
}

/// Lists every indecomposable subset of `x` the class does not admit.
pub fn class_check(x: &ColouredPoset, spec: &ClassSpec, bounds: &Bounds) -> Result<ClassReport> {
    let p = x.poset();
    let bad = match &spec.allowed {
        Allowed::MaxSize(n) => indecomposable_in(p, n + 1..=p.len(), bounds)?,
        Allowed::Listed(list) => indecomposable_in(p, 1..=p.len(), bounds)?
            .into_iter()
            .filter(|s| {
                let y = p.induced(s);
                !list.iter().any(|l| is_isomorphic(l, &y))
            })
            .collect(),
    };
    let violations = bad.into_iter().map(|s| s.into_iter().map(|i| p.id(i).to_string()).collect()).collect();
    let prefixes = pathological_prefix_check(p, spec.prefix_depth, bounds)?;
    Ok(ClassReport { violations, prefixes })
}
