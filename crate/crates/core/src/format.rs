//! Line-oriented text format for posets and colour quasi-orders.
//!
//! ```text
//! # comment
//! poset n
//! elem 0 colour=red
//! elem 1 colour=blue
//! lt 1 0
//! end
//! quasi colours
//! elem red
//! elem blue
//! le red blue
//! end
//! ```

use std::collections::HashSet;
use std::fmt::Write;
use std::sync::Arc;

use crate::coloured::ColouredPoset;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::quasi::{QuasiOrder, DEFAULT_COLOUR};

/// One `poset` section.
#[derive(Debug, Clone)]
pub struct PosetRecord {
    pub name: String,
    pub poset: Poset,
    /// Colour ids per element, when the section colours its elements.
    pub colours: Option<Vec<String>>,
}

/// All sections of a file.
#[derive(Debug, Clone, Default)]
pub struct Document {
    pub posets: Vec<PosetRecord>,
    pub quasis: Vec<(String, QuasiOrder)>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

enum Section {
    Poset { name: String, start: usize, elems: Vec<(String, Option<String>)>, lts: Vec<(String, String)> },
    Quasi { name: String, start: usize, elems: Vec<String>, les: Vec<(String, String)> },
}

pub fn parse_document(text: &str) -> Result<Document> {
    let mut doc = Document::default();
    let mut section: Option<Section> = None;
    let mut names = HashSet::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let words: Vec<&str> = trimmed.split_whitespace().collect();
        match (&mut section, words.as_slice()) {
            (None, ["poset", name]) | (None, ["quasi", name]) => {
                if !names.insert(name.to_string()) {
                    return Err(parse_err(line, format!("duplicate section name `{name}`")));
                }
                section = Some(if words[0] == "poset" {
                    Section::Poset { name: name.to_string(), start: line, elems: Vec::new(), lts: Vec::new() }
                } else {
                    Section::Quasi { name: name.to_string(), start: line, elems: Vec::new(), les: Vec::new() }
                });
            }
            (None, _) => {
                return Err(parse_err(line, format!("expected `poset <name>` or `quasi <name>`, got `{trimmed}`")))
            }
            (Some(Section::Poset { elems, .. }), ["elem", id]) => elems.push((id.to_string(), None)),
            (Some(Section::Poset { elems, .. }), ["elem", id, colour]) => {
                let Some(c) = colour.strip_prefix("colour=").filter(|c| !c.is_empty()) else {
                    return Err(parse_err(line, format!("expected `colour=<id>`, got `{colour}`")));
                };
                elems.push((id.to_string(), Some(c.to_string())));
            }
            (Some(Section::Poset { lts, .. }), ["lt", a, b]) => lts.push((a.to_string(), b.to_string())),
            (Some(Section::Quasi { elems, .. }), ["elem", c]) => elems.push(c.to_string()),
            (Some(Section::Quasi { les, .. }), ["le", a, b]) => les.push((a.to_string(), b.to_string())),
            (Some(_), ["end"]) => match section.take().expect("inside a section") {
                Section::Poset { name, start, elems, lts } => doc.posets.push(finish_poset(name, start, elems, lts)?),
                Section::Quasi { name, start, elems, les } => {
                    let q = QuasiOrder::new(elems, les).map_err(|e| parse_err(start, e.to_string()))?;
                    doc.quasis.push((name, q));
                }
            },
            (Some(_), _) => return Err(parse_err(line, format!("unexpected line `{trimmed}`"))),
        }
    }
    if let Some(Section::Poset { start, .. } | Section::Quasi { start, .. }) = section {
        return Err(parse_err(start, "section is missing `end`"));
    }
    Ok(doc)
}

fn finish_poset(
    name: String,
    start: usize,
    elems: Vec<(String, Option<String>)>,
    lts: Vec<(String, String)>,
) -> Result<PosetRecord> {
    let coloured = elems.iter().filter(|(_, c)| c.is_some()).count();
    if coloured != 0 && coloured != elems.len() {
        return Err(parse_err(start, format!("poset `{name}` mixes coloured and uncoloured elements")));
    }
    let (ids, colours): (Vec<String>, Vec<Option<String>>) = elems.into_iter().unzip();
    let poset = Poset::new(ids, lts).map_err(|e| parse_err(start, e.to_string()))?;
    let colours = (coloured != 0).then(|| colours.into_iter().map(|c| c.expect("all coloured")).collect());
    Ok(PosetRecord { name, poset, colours })
}

impl Document {
    /// The palette the file's posets are coloured from: its first `quasi`
    /// section, else the discrete order on the colours used, else the
    /// one-colour palette.
    pub fn palette(&self) -> Result<Arc<QuasiOrder>> {
        if let Some((_, q)) = self.quasis.first() {
            return Ok(Arc::new(q.clone()));
        }
        let used = self.used_colours();
        if used.is_empty() {
            Ok(Arc::new(QuasiOrder::single()))
        } else {
            Ok(Arc::new(QuasiOrder::discrete(used)?))
        }
    }

    /// Every poset, coloured over `palette`. Uncoloured records take the
    /// default colour, which must then be in the palette.
    pub fn coloured_with(&self, palette: &Arc<QuasiOrder>) -> Result<Vec<(String, ColouredPoset)>> {
        self.posets
            .iter()
            .map(|r| {
                let colours: Vec<&str> = match &r.colours {
                    Some(c) => c.iter().map(String::as_str).collect(),
                    None => vec![DEFAULT_COLOUR; r.poset.len()],
                };
                let pairs = r.poset.elements().iter().map(String::as_str).zip(colours);
                Ok((r.name.clone(), ColouredPoset::new(r.poset.clone(), pairs, Arc::clone(palette))?))
            })
            .collect()
    }

    /// Every poset, coloured over [`Document::palette`].
    pub fn coloured(&self) -> Result<Vec<(String, ColouredPoset)>> {
        self.coloured_with(&self.palette()?)
    }

    /// Colours used by the poset sections, in first-use order.
    pub fn used_colours(&self) -> Vec<&str> {
        let mut used: Vec<&str> = Vec::new();
        for c in self.posets.iter().filter_map(|r| r.colours.as_ref()).flatten() {
            if !used.contains(&c.as_str()) {
                used.push(c);
            }
        }
        used
    }
}

/// Writes a `poset` section listing cover pairs.
pub fn write_poset(name: &str, p: &Poset) -> String {
    write_section(name, p, None)
}

/// Writes a `poset` section with colours, unless the palette is the
/// one-colour default.
pub fn write_coloured(name: &str, x: &ColouredPoset) -> String {
    let default = x.palette().len() == 1 && x.palette().colour(0) == DEFAULT_COLOUR;
    let colours: Vec<&str> = (0..x.len()).map(|i| x.colour(i)).collect();
    write_section(name, x.poset(), (!default).then_some(&colours[..]))
}

fn write_section(name: &str, p: &Poset, colours: Option<&[&str]>) -> String {
    let mut out = format!("poset {name}\n");
    for (i, id) in p.elements().iter().enumerate() {
        match colours {
            Some(c) => writeln!(out, "elem {id} colour={}", c[i]),
            None => writeln!(out, "elem {id}"),
        }
        .expect("writing to a string");
    }
    for (a, b) in p.covers() {
        writeln!(out, "lt {} {}", p.id(a), p.id(b)).expect("writing to a string");
    }
    out.push_str("end\n");
    out
}

/// Writes a `quasi` section listing every non-reflexive `le` pair.
pub fn write_quasi(name: &str, q: &QuasiOrder) -> String {
    let mut out = format!("quasi {name}\n");
    for c in q.colours() {
        writeln!(out, "elem {c}").expect("writing to a string");
    }
    for (a, b) in q.strict_pairs() {
        writeln!(out, "le {a} {b}").expect("writing to a string");
    }
    out.push_str("end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{canonical, Canonical};

    #[test]
    fn parse_basic() {
        let doc =
            parse_document("# N\nposet n\nelem 0\nelem 1\nelem 2\nelem 3\nlt 1 0\nlt 1 2\nlt 3 2\nend\n").unwrap();
        assert_eq!(doc.posets.len(), 1);
        assert_eq!(doc.posets[0].poset, canonical(Canonical::N, 0).unwrap());
        assert!(doc.posets[0].colours.is_none());
        assert_eq!(doc.palette().unwrap().colours(), ["_"]);
    }

    #[test]
    fn parse_coloured_with_quasi() {
        let text =
            "poset x\nelem a colour=lo\nelem b colour=hi\nlt a b\nend\nquasi q\nelem lo\nelem hi\nle lo hi\nend\n";
        let doc = parse_document(text).unwrap();
        let (_, x) = &doc.coloured().unwrap()[0];
        assert_eq!(x.colour(1), "hi");
        assert!(x.palette().le_ids("lo", "hi").unwrap());
    }

    #[test]
    fn implicit_discrete_palette() {
        let doc = parse_document("poset x\nelem a colour=r\nelem b colour=g\nend\n").unwrap();
        assert_eq!(doc.palette().unwrap().colours(), ["r", "g"]);
        assert!(!doc.palette().unwrap().le_ids("r", "g").unwrap());
    }

    #[test]
    fn errors_carry_lines() {
        let err = |t: &str| match parse_document(t).unwrap_err() {
            Error::Parse { line, .. } => line,
            e => panic!("{e}"),
        };
        assert_eq!(err("poset x\nelem a\nbogus\nend\n"), 3);
        assert_eq!(err("poset x\nelem a\n"), 1);
        assert_eq!(err("poset x\nelem a\nlt a b\nend\n"), 1);
        assert_eq!(err("poset x\nelem a\nelem b\nlt a b\nlt b a\nend\n"), 1);
        assert_eq!(err("poset x\nelem a colour=r\nelem b\nend\n"), 1);
        assert_eq!(err("\n\nlt a b\n"), 3);
        assert_eq!(err("poset x\nelem a colour\nend\n"), 2);
        assert_eq!(err("poset x\nend\nposet x\nend\n"), 3);
    }

    #[test]
    fn writer_round_trip() {
        let fence = canonical(Canonical::Fence, 3).unwrap();
        let text = write_poset("f", &fence);
        assert_eq!(text, "poset f\nelem a\nelem b\nelem c\nelem d\nelem e\nlt a b\nlt c b\nlt c d\nlt e d\nend\n");
        assert_eq!(parse_document(&text).unwrap().posets[0].poset, fence);

        let q = QuasiOrder::new(["x", "y", "z"], [("x", "y"), ("y", "x"), ("y", "z")]).unwrap();
        let back = parse_document(&write_quasi("q", &q)).unwrap();
        assert_eq!(back.quasis[0].1, q);
    }
}
