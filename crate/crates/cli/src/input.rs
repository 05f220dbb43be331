use std::fmt;
use std::sync::Arc;

use poset_forge::format::parse_document;
use poset_forge::quasi::DEFAULT_COLOUR;
use poset_forge::{ColouredPoset, Document, Poset, QuasiOrder};

#[derive(Debug)]
pub enum CliError {
    Io(String, std::io::Error),
    Core(String, poset_forge::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
            CliError::Core(ctx, e) if ctx.is_empty() => write!(f, "{e}"),
            CliError::Core(ctx, e) => write!(f, "{ctx}: {e}"),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<poset_forge::Error> for CliError {
    fn from(e: poset_forge::Error) -> Self {
        CliError::Core(String::new(), e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub struct Loaded {
    pub path: String,
    pub doc: Document,
}

pub fn load(path: &str) -> CliResult<Loaded> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_string(), e))?;
    let doc = parse_document(&text).map_err(|e| CliError::Core(path.to_string(), e))?;
    Ok(Loaded { path: path.to_string(), doc })
}

impl Loaded {
    pub fn first_poset(&self) -> CliResult<&Poset> {
        self.doc
            .posets
            .first()
            .map(|r| &r.poset)
            .ok_or_else(|| CliError::Usage(format!("{}: no poset section", self.path)))
    }

    /// Every poset coloured over `palette`.
    pub fn coloured(&self, palette: &Arc<QuasiOrder>) -> CliResult<Vec<(String, ColouredPoset)>> {
        if self.doc.posets.is_empty() {
            return Err(CliError::Usage(format!("{}: no poset section", self.path)));
        }
        self.doc.coloured_with(palette).map_err(|e| CliError::Core(self.path.clone(), e))
    }

    pub fn first_coloured(&self, palette: &Arc<QuasiOrder>) -> CliResult<ColouredPoset> {
        Ok(self.coloured(palette)?.swap_remove(0).1)
    }
}

/// One palette for several files: their shared `quasi` section if any
/// (all such sections must agree), otherwise the discrete order on every
/// colour used, with the default colour added for uncoloured sections.
pub fn shared_palette(files: &[&Loaded]) -> CliResult<Arc<QuasiOrder>> {
    let mut declared: Option<&QuasiOrder> = None;
    for f in files {
        if let Some((_, q)) = f.doc.quasis.first() {
            match declared {
                Some(d) if !d.same_as(q) => {
                    return Err(CliError::Core(f.path.clone(), poset_forge::Error::PaletteMismatch))
                }
                Some(_) => {}
                None => declared = Some(q),
            }
        }
    }
    if let Some(q) = declared {
        return Ok(Arc::new(q.clone()));
    }
    let mut used: Vec<&str> = Vec::new();
    let mut plain = false;
    for f in files {
        for c in f.doc.used_colours() {
            if !used.contains(&c) {
                used.push(c);
            }
        }
        plain |= f.doc.posets.iter().any(|r| r.colours.is_none());
    }
    if used.is_empty() {
        return Ok(Arc::new(QuasiOrder::single()));
    }
    if plain && !used.contains(&DEFAULT_COLOUR) {
        used.push(DEFAULT_COLOUR);
    }
    Ok(Arc::new(QuasiOrder::discrete(used)?))
}
