//! `edgeideal`: invariants, `G′`, Betti tables and regularity checks for edge ideals.
//!
//! Exit codes: 0 success, 1 harness assertion failure or internal error,
//! 2 usage or input error, 3 resource cap exceeded.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use edgeideal_core::Error;

#[derive(Parser, Debug)]
#[command(name = "edgeideal", version, about = "Edge ideals of graphs: invariants, colon graphs, regularity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Matching numbers, independence, co-chordal cover number and graph classes.
    Invariants {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        common: Common,
    },
    /// The graph G′ of the colon ideal (I(G)^{s+1} : e1⋯es).
    Gprime {
        #[command(flatten)]
        input: GraphInput,
        /// Edge multiset, e.g. "x2 x3, x4 x5"; repeat a pair for multiplicity.
        #[arg(long)]
        edges: String,
        /// Build G′ from the polarized colon ideal instead of even walks.
        #[arg(long)]
        algebraic: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Print I(G)^s, or the colon ideal when --edges is given.
    Ideal {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 1)]
        s: usize,
        /// Colon (I^{k+1} : e1⋯ek) by these k edges.
        #[arg(long)]
        edges: Option<String>,
        /// Take the colon one edge at a time, polarizing after each step.
        #[arg(long, requires = "edges")]
        iterated: bool,
        #[arg(long)]
        polarize: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Graded Betti numbers of I(G)^s or of an ideal file.
    Betti {
        #[command(flatten)]
        input: GraphInput,
        /// Monomial ideal file (text, or JSON when it starts with `{`).
        #[arg(long, conflicts_with_all = ["graph", "family", "random"])]
        ideal: Option<String>,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[command(flatten)]
        common: Common,
    },
    /// reg(I(G)^s) from the Betti oracle, or of the colon ideal when --edges is given.
    Reg {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long)]
        edges: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Closed-form bounds and exact-class values for reg(I(G)^s).
    Bounds {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Check every bound, exact formula and G′ claim against the oracle.
    Check {
        #[command(flatten)]
        input: GraphInput,
        /// Powers to check, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        s: Vec<usize>,
        /// Largest edge multiset used for G′ (0 skips the colon checks).
        #[arg(long, default_value_t = 1)]
        max_multiset: usize,
        /// Skip the Betti oracle entirely.
        #[arg(long)]
        no_oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Regularity gaps over an enumerated family such as `connected-bipartite:6`.
    GapSearch {
        /// connected:N, connected-bipartite:N, forests:E or cycles-plus-edges:N.
        family: String,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[command(flatten)]
        common: Common,
    },
    /// List the family syntax, or build one family graph.
    Families {
        #[arg(long)]
        family: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    /// Edge-list file (`u v` per line) or graph JSON.
    #[arg(long, conflicts_with_all = ["family", "random"])]
    pub graph: Option<String>,
    /// Family expression, e.g. C6, K2,5, W(P4), U(C5,P2), star(2;[4,4]).
    #[arg(long, conflicts_with = "random")]
    pub family: Option<String>,
    /// Random graph `N,P` on x1..xN with edge probability P (see --seed).
    #[arg(long)]
    pub random: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Print witnesses and certificates.
    #[arg(long, short)]
    pub verbose: bool,
    /// Seed for randomized inputs.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Coefficient field characteristic for homology: 0 or a prime.
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u64,
    #[arg(long)]
    pub cap_vertices: Option<usize>,
    #[arg(long)]
    pub cap_edges: Option<usize>,
    #[arg(long)]
    pub cap_lattice: Option<usize>,
    #[arg(long)]
    pub cap_generators: Option<usize>,
    #[arg(long)]
    pub cap_faces: Option<usize>,
}

/// Why the command stopped.
pub enum Failure {
    Library(Error),
    Usage(String),
    Harness(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Harness(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceCap { .. } => 3,
                Error::Invariant(_) => 1,
                _ => 2,
            })
        }
    }
}
