//! `qeuler`: tables, expansions, bijections, poset invariants and verification suites.

mod cmd;
mod out;
mod spec;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qeuler::{Caps, Error, DEFAULT_DEGREE_CAP, DEFAULT_PERM_CAP};

use out::Format;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

#[derive(Parser, Debug)]
#[command(name = "qeuler", version, about = "q-Eulerian statistics, quasisymmetric functions and Rees products")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest n for which a command may enumerate all of S_n.
    #[arg(long, env = "QEULER_PERM_CAP", default_value_t = DEFAULT_PERM_CAP, global = true)]
    perm_cap: usize,
    /// Largest degree for symmetric function basis changes.
    #[arg(long, env = "QEULER_DEGREE_CAP", default_value_t = DEFAULT_DEGREE_CAP, global = true)]
    degree_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Statistics of a permutation given in one-line ("31542", "3,1,5,4,2") or cycle form.
    Stats { perm: String },
    /// Character values, q-Eulerian rows, Whitney numbers or class sizes.
    Table {
        #[command(subcommand)]
        kind: TableKind,
    },
    /// Expand an Eulerian quasisymmetric function in a basis.
    Expand(ExpandArgs),
    /// Run a verification suite by id or alias, or all of them.
    Verify(VerifyArgs),
    /// Apply one of the bijections.
    Biject {
        #[command(subcommand)]
        kind: BijectKind,
    },
    /// Möbius invariants of posets, Rees products and the ideals I_j.
    Poset {
        #[command(subcommand)]
        kind: PosetKind,
    },
}

#[derive(Subcommand, Debug)]
pub enum TableKind {
    /// Character values of V_((n),j) on every conjugacy class.
    Char {
        #[arg(long)]
        n: usize,
        /// Every j = 0..n-1 rather than j = 1..n/2.
        #[arg(long)]
        all_j: bool,
    },
    /// Sum of q^maj over permutations with j excedances, one row per j.
    Qeuler {
        #[arg(long)]
        n: usize,
        /// Only permutations with this many fixed points.
        #[arg(long)]
        fix: Option<usize>,
    },
    /// Whitney numbers of the second kind of a poset.
    Whitney {
        /// One of boolean:N, chain:N, tree:T,N, subspace:Q,N, cross:N, isotropic:Q,N.
        poset: String,
    },
    /// Number of permutations of cycle type lambda with j excedances.
    Dims {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Object {
    #[value(name = "Q", alias = "q")]
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    H,
    E,
    S,
    P,
    M,
    /// Fundamental quasisymmetric functions.
    F,
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    #[arg(value_enum)]
    pub object: Object,
    /// Cycle type, e.g. "6" or "4,2,2".
    #[arg(long, conflicts_with_all = ["n", "k"])]
    pub lambda: Option<String>,
    #[arg(long, required_unless_present = "lambda")]
    pub n: Option<usize>,
    /// Number of excedances; without it the generating function in t (and r) is expanded.
    #[arg(long)]
    pub j: Option<u32>,
    /// Number of fixed points (with --n).
    #[arg(long, requires = "n")]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value_t = BasisArg::H)]
    pub basis: BasisArg,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite id or alias, or "all".
    #[arg(required_unless_present = "list")]
    pub suite: Option<String>,
    /// List the suites with their bounds.
    #[arg(long)]
    pub list: bool,
    /// Override a bound, e.g. --bound n-max=5. Repeatable.
    #[arg(long = "bound", value_name = "NAME=VALUE")]
    pub bounds: Vec<String>,
    /// Shorthand for --bound n-max=N.
    #[arg(long)]
    pub nmax: Option<u64>,
    /// Shorthand for --bound z-max=N.
    #[arg(long)]
    pub zmax: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    /// 1 < 1' < 2 < 2' < ...
    Interleaved,
    /// 1' < 2' < ... < 1 < 2 < ...
    BarredFirst,
}

#[derive(Subcommand, Debug)]
pub enum BijectKind {
    /// Barred permutation (e.g. 31'4) to the permutation with one descent per bar.
    Phi { word: String },
    /// Inverse of phi: a word of distinct letters to its barred permutation.
    Eta { word: String },
    /// The recurrence bijection: a banner to a shorter banner and a marked sequence.
    Gamma { banner: String },
    /// Lyndon factorization of a bicolored word.
    Lyndon {
        word: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Interleaved)]
        order: OrderArg,
    },
    /// Factorization into Lyndon words of length at least 2, weakly increasing.
    Incfact {
        word: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Interleaved)]
        order: OrderArg,
    },
    /// A permutation and a compatible weakly decreasing sequence to an ornament.
    Grphi { perm: String, seq: String },
    /// An ornament such as (7'5'47)(7'5)(2'2) to its permutation and sequence.
    Greta { ornament: String },
}

#[derive(Subcommand, Debug)]
pub enum PosetKind {
    /// μ(0̂, 1̂) after adjoining whichever extremes P lacks (both with --hat), or μ(x, y).
    Mobius {
        poset: String,
        #[arg(long)]
        hat: bool,
        #[arg(long, requires = "to")]
        from: Option<String>,
        #[arg(long, requires = "from")]
        to: Option<String>,
    },
    /// The Rees product P ∗ Q with its Whitney numbers and μ of the completion.
    Rees {
        left: String,
        right: String,
        /// Remove the bottom of the left factor first.
        #[arg(long)]
        minus: bool,
    },
    /// I_j(P) for a bounded ranked P, for one j or all of them.
    Ideal {
        poset: String,
        #[arg(long)]
        j: Option<usize>,
    },
}

fn exit_code(e: &CliError) -> u8 {
    match e {
        CliError::Usage(_) => 2,
        CliError::Core(Error::CapExceeded { .. }) => 3,
        CliError::Core(_) => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps {
        perm: cli.perm_cap,
        degree: cli.degree_cap,
    };
    let result = match &cli.command {
        Command::Stats { perm } => cmd::stats(perm),
        Command::Table { kind } => cmd::table(kind, &caps),
        Command::Expand(a) => cmd::expand(a, &caps),
        Command::Verify(a) => cmd::verify(a, &caps),
        Command::Biject { kind } => cmd::biject(kind),
        Command::Poset { kind } => cmd::poset(kind),
    };
    let out = match result.and_then(|o| o.render(cli.format).map(|s| (s, o.failure))) {
        Ok(x) => x,
        Err(e) => {
            let msg = match &e {
                CliError::Usage(m) => format!("error: {m}"),
                CliError::Core(c) => format!("error: {c}"),
            };
            eprintln!("{msg}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let (text, failure) = out;
    let mut stdout = std::io::stdout().lock();
    // a closed pipe is not an error worth reporting
    let _ = stdout.write_all(text.as_bytes());
    let _ = stdout.flush();
    match failure {
        Some(f) => {
            eprintln!("first failure: {f}");
            ExitCode::from(1)
        }
        None => ExitCode::SUCCESS,
    }
}
