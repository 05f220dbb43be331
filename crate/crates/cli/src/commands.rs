use std::fmt::Write;
use std::sync::Arc;

use poset_forge::dectree::scattered_rank_of;
use poset_forge::format::{write_coloured, write_poset};
use poset_forge::interval::quotient;
use poset_forge::{
    class_check, coloured_embed, decomposition_function, decomposition_tree, embed, embeddability_matrix,
    fence_antichain, lift_embedding, maximal_decomposition, scattered_rank, st_embed, tree_rank, Allowed, Bounds,
    ClassSpec, ColouredPoset, Error, Family, QuasiOrder,
};

use crate::input::{load, shared_palette, CliError, CliResult, Loaded};
use crate::Command;

pub struct Output {
    pub text: String,
    pub success: bool,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, success: true }
    }
}

pub fn run(cmd: Command, bounds: &Bounds) -> CliResult<Output> {
    match cmd {
        Command::Validate { file } => validate(&file),
        Command::Decompose { file } => decompose(&file, bounds),
        Command::Tree { file } => tree(&file, bounds),
        Command::Embed { a, b, coloured } => embed_cmd(&a, &b, coloured, bounds),
        Command::Lift { a, b } => lift(&a, &b, bounds),
        Command::Classify { file, max_indecomposable, allowed, prefix_depth } => {
            classify(&file, max_indecomposable, &allowed, prefix_depth, bounds)
        }
        Command::Rank { file, scattered, tree: _, decomposition } => rank(&file, scattered, decomposition, bounds),
        Command::Quotient { file, interval } => quotient_cmd(&file, &interval),
        Command::Antichain { n } => antichain(n, bounds),
        Command::Matrix { files } => matrix(&files, bounds),
    }
}

fn own_palette(f: &Loaded) -> CliResult<Arc<QuasiOrder>> {
    shared_palette(&[f])
}

fn validate(file: &str) -> CliResult<Output> {
    let f = load(file)?;
    let mut out = String::new();
    for r in &f.doc.posets {
        let _ = writeln!(out, "poset {} elements={} relations={}", r.name, r.poset.len(), r.poset.pairs().count());
    }
    for (name, q) in &f.doc.quasis {
        let _ = writeln!(out, "quasi {} colours={} relations={}", name, q.len(), q.strict_pairs().len());
    }
    out.push_str("ok\n");
    Ok(Output::ok(out))
}

fn decompose(file: &str, bounds: &Bounds) -> CliResult<Output> {
    let f = load(file)?;
    let mut out = String::new();
    for (name, x) in f.coloured(&own_palette(&f)?)? {
        bounds.check_elements(x.len())?;
        let md = maximal_decomposition(&x)?;
        let _ = writeln!(out, "poset {name}");
        let _ = writeln!(out, "chain {}", md.chain.display(x.poset()));
        let _ = writeln!(out, "eta {}", md.sequence);
        for (pos, arg) in &md.arguments {
            let _ = writeln!(out, "arg {pos} {}", arg.poset());
        }
        let (set, leaves) = decomposition_function(&x)?;
        out.push_str(&set.render(Some(&leaves)));
    }
    Ok(Output::ok(out))
}

fn tree(file: &str, bounds: &Bounds) -> CliResult<Output> {
    let f = load(file)?;
    let mut out = String::new();
    for (name, x) in f.coloured(&own_palette(&f)?)? {
        bounds.check_elements(x.len())?;
        let t = decomposition_tree(&x)?;
        let _ = writeln!(out, "tree {name}");
        out.push_str(&t.tree().dump());
    }
    Ok(Output::ok(out))
}

fn embed_cmd(a: &str, b: &str, coloured: bool, bounds: &Bounds) -> CliResult<Output> {
    let (fa, fb) = (load(a)?, load(b)?);
    let map = if coloured {
        let palette = shared_palette(&[&fa, &fb])?;
        let (x, y) = (fa.first_coloured(&palette)?, fb.first_coloured(&palette)?);
        bounds.check_elements(x.len().max(y.len()))?;
        coloured_embed(&x, &y)?
    } else {
        let (x, y) = (fa.first_poset()?, fb.first_poset()?);
        bounds.check_elements(x.len().max(y.len()))?;
        embed(x, y)
    };
    Ok(match map {
        Some(m) => Output::ok(format!("EMBEDS {m}\n")),
        None => Output { text: "ABSENT\n".into(), success: false },
    })
}

fn lift(a: &str, b: &str, bounds: &Bounds) -> CliResult<Output> {
    let (fa, fb) = (load(a)?, load(b)?);
    let palette = shared_palette(&[&fa, &fb])?;
    let (x, y) = (fa.first_coloured(&palette)?, fb.first_coloured(&palette)?);
    bounds.check_elements(x.len().max(y.len()))?;
    let (sx, ty) = (decomposition_tree(&x)?, decomposition_tree(&y)?);
    let Some(phi) = st_embed(sx.tree(), ty.tree())? else {
        return Ok(Output { text: "ABSENT\n".into(), success: false });
    };
    let lifted = lift_embedding(&sx, &ty, &phi)?;
    Ok(Output::ok(format!("tree {phi}\nEMBEDS {lifted}\n")))
}

fn classify(
    file: &str,
    max: Option<usize>,
    allowed: &[String],
    prefix_depth: usize,
    bounds: &Bounds,
) -> CliResult<Output> {
    let f = load(file)?;
    let allowed = match max {
        Some(n) => Allowed::MaxSize(n),
        None => {
            let mut listed = Vec::new();
            for path in allowed {
                listed.extend(load(path)?.doc.posets.into_iter().map(|r| r.poset));
            }
            Allowed::Listed(listed)
        }
    };
    let spec = ClassSpec::new(allowed, prefix_depth)?;
    let mut out = String::new();
    let mut success = true;
    for (name, x) in f.coloured(&own_palette(&f)?)? {
        let report = class_check(&x, &spec, bounds)?;
        success &= report.passes();
        let _ = write!(out, "poset {name}\n{report}");
    }
    Ok(Output { text: out, success })
}

fn rank(file: &str, scattered: bool, decomposition: bool, bounds: &Bounds) -> CliResult<Output> {
    let f = load(file)?;
    let mut out = String::new();
    for (name, x) in f.coloured(&own_palette(&f)?)? {
        let r = if decomposition {
            bounds.check_elements(x.len())?;
            let t = decomposition_tree(&x)?;
            if scattered {
                scattered_rank(t.tree(), bounds.scattered_nodes)?
            } else {
                tree_rank(t.tree().order())?
            }
        } else if scattered {
            scattered_rank_of(x.poset(), bounds.scattered_nodes)?
        } else {
            tree_rank(x.poset())?
        };
        let kind = if scattered { "scattered" } else { "tree" };
        let _ = writeln!(out, "{kind}-rank {name} {r}");
    }
    Ok(Output::ok(out))
}

fn quotient_cmd(file: &str, intervals: &[String]) -> CliResult<Output> {
    let f = load(file)?;
    let record = f.doc.posets.first().ok_or_else(|| CliError::Usage(format!("{file}: no poset section")))?;
    let parts: Vec<Vec<&str>> = intervals.iter().map(|s| s.split(',').map(str::trim).collect()).collect();
    let q = match quotient(&record.poset, &parts) {
        Ok(q) => q,
        Err(Error::NotAnInterval(members)) => {
            return Ok(Output { text: format!("not-an-interval {}\n", members.join(",")), success: false })
        }
        Err(e) => return Err(e.into()),
    };
    let name = format!("{}_quotient", record.name);
    let mut out = match &record.colours {
        Some(colours) => {
            let palette = own_palette(&f)?;
            let keep = q.poset.elements().iter().map(|id| {
                let i = record.poset.index_of(id).expect("quotient keeps carrier ids");
                (id.as_str(), colours[i].as_str())
            });
            write_coloured(&name, &ColouredPoset::new(q.poset.clone(), keep, palette)?)
        }
        None => write_poset(&name, &q.poset),
    };
    for (id, rep) in &q.representatives {
        let _ = writeln!(out, "# {id} -> {rep}");
    }
    Ok(Output::ok(out))
}

fn matrix_output(fam: &Family, bounds: &Bounds) -> CliResult<(String, bool)> {
    let m = embeddability_matrix(fam, bounds)?;
    let mut out = format!("{m}{}", m.stanza());
    match m.first_bad_pair() {
        Some((i, j)) => {
            let _ = writeln!(out, "bad-pair {} {}", fam.names()[i], fam.names()[j]);
        }
        None => out.push_str("bad-pair none\n"),
    }
    Ok((out, m.is_identity()))
}

fn antichain(n: usize, bounds: &Bounds) -> CliResult<Output> {
    let fam = fence_antichain(n)?;
    let (text, identity) = matrix_output(&fam, bounds)?;
    Ok(Output { text, success: identity })
}

fn matrix(files: &[String], bounds: &Bounds) -> CliResult<Output> {
    let loaded = files.iter().map(|p| load(p)).collect::<CliResult<Vec<_>>>()?;
    let refs: Vec<&Loaded> = loaded.iter().collect();
    let palette = shared_palette(&refs)?;
    let mut members = Vec::new();
    for f in &loaded {
        members.extend(f.coloured(&palette)?);
    }
    let (text, _) = matrix_output(&Family::new(members)?, bounds)?;
    Ok(Output::ok(text))
}
