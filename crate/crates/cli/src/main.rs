mod commands;
mod output;
mod verify;

use clap::{ArgGroup, Args, Parser, Subcommand};
use output::{envelope, render, Format};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_DOMAIN: u8 = 2;
const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 64;

/// Exact computations with root systems, Niemeier lattices, the Leech lattice
/// and Conway-group frame shapes.
#[derive(Parser, Debug)]
#[command(name = "leech", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// allow enumeration up to norm 4 on rank-24 lattices
    #[arg(long, global = true)]
    deep: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Classification data, Weyl vector and weights of a simple type
    Lie(LieArgs),
    /// Invariants and short-vector counts of a lattice
    Lattice(LatticeArgs),
    /// Reports for one or all Niemeier root systems
    Niemeier {
        #[arg(long)]
        name: Option<String>,
    },
    /// Leech lattice from the deep hole of a Niemeier lattice
    Hole {
        #[arg(long)]
        niemeier: String,
    },
    /// W-element constraints on candidate weight-one Lie algebras
    Classify(ClassifyArgs),
    /// Frame-shape arithmetic
    Frames {
        #[command(subcommand)]
        op: FramesCmd,
    },
    /// Inner products of linear characters with the Leech character
    Characters(CharactersArgs),
    /// Conformal weights of twisted modules
    Twisted {
        #[command(subcommand)]
        op: TwistedCmd,
    },
    /// Recompute every table and compare with the expected values
    VerifyAll,
}

#[derive(Args, Debug)]
pub struct LieArgs {
    /// e.g. E8, B4, G2
    #[arg(long = "type")]
    r#type: String,
    /// list the integrable highest weights at this level
    #[arg(long)]
    level: Option<u32>,
    /// Dynkin labels of a highest weight, e.g. 1,0,1
    #[arg(long)]
    highest: Option<String>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).args(["file", "root", "niemeier", "hole", "leech"])))]
pub struct LatticeArgs {
    /// JSON lattice file
    #[arg(long)]
    file: Option<PathBuf>,
    /// root lattice, e.g. A2 or D4+E8
    #[arg(long)]
    root: Option<String>,
    #[arg(long)]
    niemeier: Option<String>,
    /// hole construction from this Niemeier root system
    #[arg(long)]
    hole: Option<String>,
    #[arg(long)]
    leech: bool,
    /// count vectors of norm up to this bound
    #[arg(long, default_value = "2")]
    bound: String,
    /// also write the Gram matrix as a lattice file
    #[arg(long)]
    write: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").required(true).args(["rank", "candidate", "cases", "noone"])))]
pub struct ClassifyArgs {
    /// enumerate semisimple types of these ranks, e.g. 4 or 4,6,8
    #[arg(long, value_delimiter = ',')]
    rank: Vec<u32>,
    /// keep only types with N₀ and K₀ both composite
    #[arg(long)]
    composite: bool,
    /// keep only types whose derived levels are integers
    #[arg(long)]
    integral_levels: bool,
    /// W-element report for a levelled candidate, e.g. E8,2+B8,1
    #[arg(long)]
    candidate: Option<String>,
    /// order of the automorphism, if known
    #[arg(long, requires = "candidate")]
    r: Option<u64>,
    #[arg(long, requires = "candidate")]
    r_prime: bool,
    /// inequality chain refuting a candidate
    #[arg(long)]
    cases: Option<String>,
    /// search for single-component candidates
    #[arg(long)]
    noone: bool,
}

#[derive(Args, Debug)]
pub struct ShapeArg {
    /// frame shape such as "1^8 4^8 / 2^8", or a class name such as -4A
    #[arg(long, allow_hyphen_values = true)]
    shape: String,
}

#[derive(Subcommand, Debug)]
pub enum FramesCmd {
    Power {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        k: u64,
    },
    Fixdim {
        #[command(flatten)]
        shape: ShapeArg,
    },
    /// multiplicity of the primitive r-th roots of unity
    Eigmult {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        r: u64,
    },
    Classify {
        #[command(flatten)]
        shape: ShapeArg,
    },
    Table,
}

#[derive(Args, Debug)]
pub struct CharactersArgs {
    /// subgroup row, 1 to 17
    #[arg(long)]
    row: u32,
    /// order of the linear character; defaults to the exponent of the group
    #[arg(long)]
    r: Option<u64>,
    /// θ(τ) = ζ_R^exponent
    #[arg(long, default_value_t = 1)]
    exponent: u64,
}

#[derive(Subcommand, Debug)]
pub enum TwistedCmd {
    /// Weight of a module with the given components, e.g. --component A2,3:1,1
    Weight {
        #[arg(long, required = true)]
        component: Vec<String>,
    },
    /// Minimum over all integrable weights
    Minimize {
        #[arg(long, required = true)]
        component: Vec<String>,
    },
    /// Zero-mode and grading shifts
    Shift {
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// The lower bound of the weight for a full candidate
    Bound {
        #[arg(long)]
        candidate: String,
    },
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut code = 0;
    let outcome = match &cli.cmd {
        Cmd::Lie(a) => commands::lie(a),
        Cmd::Lattice(a) => commands::lattice(a, cli.deep),
        Cmd::Niemeier { name } => commands::niemeier(name.as_deref()),
        Cmd::Hole { niemeier } => commands::hole(niemeier, cli.deep),
        Cmd::Classify(a) => commands::classify(a),
        Cmd::Frames { op } => commands::frames(op),
        Cmd::Characters(a) => commands::characters(a),
        Cmd::Twisted { op } => commands::twisted(op),
        Cmd::VerifyAll => {
            let (ok, out) = verify::verify_all();
            if !ok {
                code = EXIT_MISMATCH;
            }
            Ok((serde_json::json!({}), out))
        }
    };
    match outcome {
        Ok((inputs, outputs)) => {
            print!("{}", render(&envelope(&argv[1..], inputs, outputs), cli.format));
            ExitCode::from(code)
        }
        Err(msg) => {
            eprintln!("leech: {msg}");
            ExitCode::from(EXIT_DOMAIN)
        }
    }
}
