//! Intervals (modules) of a poset: subsets that every outside point sees
//! uniformly.
//!
//! Enumeration is brute force over subsets and therefore bounded. The
//! maximal chain construction and the indecomposability test avoid
//! enumeration by working with interval closures: the least interval
//! containing a seed set, obtained by repeatedly absorbing any outside point
//! that distinguishes two members.

use std::collections::BTreeMap;
use std::fmt;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::poset::Poset;

/// A non-empty interval, as sorted canonical element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    members: Vec<usize>,
}

impl Interval {
    /// Validates `members` (indices into `carrier`) as an interval.
    pub fn new(carrier: &Poset, mut members: Vec<usize>) -> Result<Interval> {
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(&bad) = members.iter().find(|&&i| i >= carrier.len()) {
            return Err(Error::UnknownElement(format!("#{bad}")));
        }
        if !is_interval_idx(carrier, &members) {
            return Err(Error::NotAnInterval(ids(carrier, &members)));
        }
        Ok(Interval { members })
    }

    pub fn from_ids<S: AsRef<str>>(carrier: &Poset, members: &[S]) -> Result<Interval> {
        let idx = members.iter().map(|m| carrier.require(m.as_ref())).collect::<Result<Vec<_>>>()?;
        Interval::new(carrier, idx)
    }

    pub(crate) fn trusted(mut members: Vec<usize>) -> Interval {
        members.sort_unstable();
        Interval { members }
    }

    pub fn full(carrier: &Poset) -> Interval {
        Interval { members: (0..carrier.len()).collect() }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &Interval) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }

    pub fn ids(&self, carrier: &Poset) -> Vec<String> {
        ids(carrier, &self.members)
    }

    /// `(size, sorted indices)`, the canonical tie-break key.
    fn key(&self) -> (usize, &[usize]) {
        (self.members.len(), &self.members)
    }
}

fn ids(carrier: &Poset, members: &[usize]) -> Vec<String> {
    members.iter().map(|&i| carrier.id(i).to_string()).collect()
}

/// A chain of intervals, strictly decreasing under inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalChain {
    intervals: Vec<Interval>,
}

impl IntervalChain {
    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn display<'a>(&'a self, carrier: &'a Poset) -> impl fmt::Display + 'a {
        ChainDisplay { chain: self, carrier }
    }
}

struct ChainDisplay<'a> {
    chain: &'a IntervalChain,
    carrier: &'a Poset,
}

impl fmt::Display for ChainDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.chain.intervals.iter().enumerate() {
            if k > 0 {
                f.write_str(" > ")?;
            }
            write!(f, "{{{}}}", i.ids(self.carrier).join(","))?;
        }
        Ok(())
    }
}

/// Does `p` relate to `a` and `b` in the same way (`<`, `>` or `⊥`)?
pub fn ssr(carrier: &Poset, p: &str, a: &str, b: &str) -> Result<bool> {
    let (p, a, b) = (carrier.require(p)?, carrier.require(a)?, carrier.require(b)?);
    Ok(ssr_idx(carrier, p, a, b))
}

#[inline]
pub fn ssr_idx(carrier: &Poset, p: usize, a: usize, b: usize) -> bool {
    carrier.relation(p, a) == carrier.relation(p, b)
}

/// Is `members` a (non-empty) interval of `carrier`?
pub fn is_interval<S: AsRef<str>>(carrier: &Poset, members: &[S]) -> Result<bool> {
    if members.is_empty() {
        return Err(Error::EmptySet);
    }
    let idx = members.iter().map(|m| carrier.require(m.as_ref())).collect::<Result<Vec<_>>>()?;
    Ok(is_interval_idx(carrier, &idx))
}

/// Interval test on indices; `members` must be non-empty.
pub fn is_interval_idx(carrier: &Poset, members: &[usize]) -> bool {
    let mut inside = vec![false; carrier.len()];
    for &m in members {
        inside[m] = true;
    }
    let first = members[0];
    (0..carrier.len()).filter(|&p| !inside[p]).all(|p| members.iter().all(|&m| ssr_idx(carrier, p, first, m)))
}

/// All intervals of `carrier`, ordered by size then by sorted indices.
pub fn enumerate_intervals(carrier: &Poset, bounds: &Bounds) -> Result<Vec<Interval>> {
    bounds.check_elements(carrier.len())?;
    let n = carrier.len();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if is_interval_idx(carrier, &members) {
            out.push(Interval { members });
        }
    }
    out.sort_by(|a, b| a.key().cmp(&b.key()));
    Ok(out)
}

/// Least interval containing every element of `seed`.
pub fn interval_closure(carrier: &Poset, seed: &[usize]) -> Interval {
    let n = carrier.len();
    let mut inside = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    for &s in seed {
        if !inside[s] {
            inside[s] = true;
            members.push(s);
        }
    }
    assert!(!members.is_empty(), "closure of an empty seed");
    let first = members[0];
    loop {
        let grow = (0..n).find(|&p| !inside[p] && members.iter().any(|&m| !ssr_idx(carrier, p, first, m)));
        match grow {
            Some(p) => {
                inside[p] = true;
                members.push(p);
            }
            None => break,
        }
    }
    Interval::trusted(members)
}

/// Only singletons and the whole carrier are intervals.
pub fn is_indecomposable(carrier: &Poset) -> Result<bool> {
    if carrier.is_empty() {
        return Err(Error::EmptyPoset);
    }
    let n = carrier.len();
    // a proper interval with >= 2 members contains the closure of some pair
    Ok((0..n).all(|a| (a + 1..n).all(|b| interval_closure(carrier, &[a, b]).len() == n)))
}

/// Result of collapsing disjoint intervals to single points.
#[derive(Debug, Clone, PartialEq)]
pub struct Quotient {
    pub poset: Poset,
    /// `(element id, representative id)` for every carrier element.
    pub representatives: BTreeMap<String, String>,
}

/// `carrier / parts`: keeps the first canonical element of each part.
pub fn quotient<S: AsRef<str>>(carrier: &Poset, parts: &[Vec<S>]) -> Result<Quotient> {
    let mut owner: Vec<Option<usize>> = vec![None; carrier.len()];
    let mut validated = Vec::with_capacity(parts.len());
    for (k, part) in parts.iter().enumerate() {
        let idx = part.iter().map(|m| carrier.require(m.as_ref())).collect::<Result<Vec<_>>>()?;
        let interval = Interval::new(carrier, idx)?;
        for &m in interval.members() {
            if owner[m].replace(k).is_some() {
                return Err(Error::Overlap(carrier.id(m).to_string()));
            }
        }
        validated.push(interval);
    }
    let keep: Vec<usize> =
        (0..carrier.len()).filter(|&i| owner[i].is_none_or(|k| validated[k].members()[0] == i)).collect();
    let representatives = (0..carrier.len())
        .map(|i| {
            let rep = owner[i].map_or(i, |k| validated[k].members()[0]);
            (carrier.id(i).to_string(), carrier.id(rep).to_string())
        })
        .collect();
    Ok(Quotient { poset: carrier.induced(&keep), representatives })
}

/// A maximal chain of intervals from the whole carrier down to `{anchor}`.
///
/// Starting from `{carrier, {anchor}}`, repeatedly inserts the smallest
/// interval (ties broken by sorted canonical indices) that is comparable
/// under inclusion with every member, until none remains. The anchor
/// defaults to the first canonical element.
pub fn maximal_interval_chain(carrier: &Poset, anchor: Option<&str>) -> Result<IntervalChain> {
    if carrier.is_empty() {
        return Err(Error::EmptyPoset);
    }
    let anchor = match anchor {
        Some(a) => carrier.require(a)?,
        None => 0,
    };
    Ok(maximal_chain_idx(carrier, anchor))
}

pub(crate) fn maximal_chain_idx(carrier: &Poset, anchor: usize) -> IntervalChain {
    let mut chain = vec![Interval::full(carrier)];
    if carrier.len() > 1 {
        chain.push(Interval::trusted(vec![anchor]));
    }
    loop {
        let mut best: Option<(usize, Interval)> = None;
        for gap in 0..chain.len().saturating_sub(1) {
            let (outer, inner) = (&chain[gap], &chain[gap + 1]);
            for &x in outer.members().iter().filter(|&&x| !inner.contains(x)) {
                let mut seed = inner.members().to_vec();
                seed.push(x);
                let k = interval_closure(carrier, &seed);
                if k.len() < outer.len() && best.as_ref().is_none_or(|(_, b)| k.key() < b.key()) {
                    best = Some((gap + 1, k));
                }
            }
        }
        match best {
            Some((at, k)) => chain.insert(at, k),
            None => break,
        }
    }
    IntervalChain { intervals: chain }
}
