use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use poset_forge::bounds::BOUND_ENV;
use poset_forge::Bounds;

mod commands;
mod input;

/// Decompose, embed and classify finite coloured partial orders.
#[derive(Parser, Debug)]
#[command(name = "poset-forge", version)]
struct Cli {
    #[command(flatten)]
    bounds: BoundFlags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct BoundFlags {
    /// Largest carrier for subset enumeration and search families
    #[arg(long, global = true, env = BOUND_ENV, default_value_t = 16)]
    element_bound: usize,
    /// Largest tree accepted by the scattered rank search
    #[arg(long, global = true, default_value_t = 15)]
    scattered_bound: usize,
    /// Largest family accepted by `matrix` and `antichain`
    #[arg(long, global = true, default_value_t = 10)]
    family_bound: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a file and summarise its sections
    Validate { file: String },
    /// Print the maximal decomposition and the decomposition function
    Decompose { file: String },
    /// Print the decomposition tree
    Tree { file: String },
    /// Search for an embedding of the first poset of A into the first of B
    Embed {
        a: String,
        b: String,
        /// Require colours to increase
        #[arg(long)]
        coloured: bool,
    },
    /// Embed decomposition trees and lift the result to the posets
    Lift { a: String, b: String },
    /// Check which indecomposable subsets a poset contains
    Classify {
        file: String,
        /// Admit every indecomposable order with at most this many elements
        #[arg(long, conflicts_with = "allowed", required_unless_present = "allowed")]
        max_indecomposable: Option<usize>,
        /// Admit only orders isomorphic to those in these files
        #[arg(long, num_args = 1..)]
        allowed: Vec<String>,
        /// Depth of the pathological prefixes to test
        #[arg(long, default_value_t = 2)]
        prefix_depth: usize,
    },
    /// Rank of a tree order
    Rank {
        file: String,
        #[arg(long, conflicts_with = "tree", required_unless_present = "tree")]
        scattered: bool,
        #[arg(long)]
        tree: bool,
        /// Rank the decomposition tree of the poset instead of the poset
        #[arg(long)]
        decomposition: bool,
    },
    /// Collapse disjoint intervals to points
    Quotient {
        file: String,
        /// Comma-separated members of one interval; repeatable
        #[arg(long, required = true)]
        interval: Vec<String>,
    },
    /// Embeddability matrix of the coloured fence antichain
    Antichain {
        #[arg(long)]
        n: usize,
    },
    /// Embeddability matrix of every poset in the given files
    Matrix {
        #[arg(required = true)]
        files: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let bounds = Bounds {
        elements: cli.bounds.element_bound,
        scattered_nodes: cli.bounds.scattered_bound,
        family: cli.bounds.family_bound,
    };
    match commands::run(cli.command, &bounds) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.success { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
