//! `opbialg`: command-line access to the operad and bialgebra engine.
//!
//! Exit codes: 0 when the computation succeeds and every check holds, 1 when
//! a mathematical check fails (the report carries the witness), 2 on usage
//! errors.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "opbialg", version, about = "Exact computations with operads and generalized bialgebras")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Degree bound for commands that enumerate or truncate.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=40))]
    pub max_degree: Option<u32>,
    /// Recorded in reports; every shipped check is exhaustive, so results do
    /// not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Planar binary trees: enumeration, grafting and path cuts.
    Trees(TreesArgs),
    /// Apply a reduced coproduct to an element.
    Coproduct(CoproductArgs),
    /// Multiply two elements.
    Product(ProductArgs),
    /// Check a compatibility relation (or a cooperation law) exhaustively.
    Check(CheckArgs),
    /// Basis of the primitive part in one degree.
    Prim(PrimArgs),
    /// Expand an element over the primitive part.
    Pbw(PbwArgs),
    /// Build an idempotent and report its ranks or matrices.
    Idempotent(IdempotentArgs),
    /// Verify the H2 hypothesis or the structure dimension count.
    Verify(VerifyArgs),
    /// Generating series and their identities.
    Series(SeriesArgs),
    /// Homology of the duplicial bicomplex.
    Homology(HomologyArgs),
    /// Run the numbered criteria or the worked tables.
    Suite(SuiteArgs),
}

#[derive(Args, Debug)]
pub struct TreesArgs {
    #[command(subcommand)]
    pub action: TreesAction,
}

#[derive(Subcommand, Debug)]
pub enum TreesAction {
    /// All trees with the given number of leaves, in canonical order.
    Enumerate {
        #[arg(long)]
        leaves: usize,
    },
    /// Graft `right` onto the first leaf (`over`) or the last leaf (`under`) of `left`.
    Graft {
        #[arg(long, value_parser = ["over", "under"])]
        op: String,
        left: String,
        right: String,
    },
    /// The path cuts of a tree at each interior leaf.
    Cuts { tree: String },
}

#[derive(Args, Debug)]
pub struct ModelArgs {
    /// as, classical, dup, dup-bi, mag, mag-livernet, mag-hopf, zinb, lie or nil.
    #[arg(long)]
    pub model: String,
    /// Number of letters; defaults to the model's own and grows to cover the input.
    #[arg(long)]
    pub alphabet: Option<usize>,
}

#[derive(Args, Debug)]
pub struct CoproductArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub coproduct: Option<String>,
    #[arg(long)]
    pub element: String,
}

#[derive(Args, Debug)]
pub struct ProductArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub product: Option<String>,
    #[arg(long)]
    pub left: String,
    #[arg(long)]
    pub right: String,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub coproduct: Option<String>,
    #[arg(long)]
    pub product: Option<String>,
    /// A library relation name.
    #[arg(long, conflicts_with_all = ["relation_file", "law"])]
    pub relation: Option<String>,
    /// A JSON file holding a relation as a term list.
    #[arg(long, conflicts_with = "law")]
    pub relation_file: Option<std::path::PathBuf>,
    /// A law of the cooperation alone: coassociative, cocommutative or nap.
    #[arg(long)]
    pub law: Option<String>,
    /// Include the first failing pair in the report.
    #[arg(long)]
    pub witness: bool,
}

#[derive(Args, Debug)]
pub struct PrimArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub degree: usize,
}

#[derive(Args, Debug)]
pub struct PbwArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub element: String,
}

#[derive(Args, Debug)]
pub struct IdempotentArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// versal, eulerian:I, dynkin or geometric.
    #[arg(long, default_value = "versal")]
    pub kind: String,
    #[arg(long, value_parser = ["ranks", "matrix"], default_value = "ranks")]
    pub report: String,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_parser = ["h2", "structure-iso"])]
    pub what: String,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// Print the coefficients of a named series (As, Com, Lie, Mag, Dup, Dup!, Nil, Sabinin).
    #[arg(long, conflicts_with = "check")]
    pub show: Option<String>,
    /// Check an identity: triple (C,A,P) or koszul (P,PDUAL).
    #[arg(long, value_parser = ["triple", "koszul"], requires = "names")]
    pub check: Option<String>,
    #[arg(long, value_delimiter = ',')]
    pub names: Vec<String>,
    #[arg(long, default_value_t = 12)]
    pub order: usize,
}

#[derive(Args, Debug)]
pub struct HomologyArgs {
    #[arg(long)]
    pub internal_degree: usize,
    /// Only verify the differential identities.
    #[arg(long)]
    pub check_only: bool,
}

#[derive(Args, Debug)]
pub struct SuiteArgs {
    /// Run only these criteria.
    #[arg(long, value_delimiter = ',', conflicts_with = "tables")]
    pub criteria: Vec<u32>,
    /// Run the worked PBW tables and the series identities instead.
    #[arg(long, alias = "paper-tables")]
    pub tables: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            match output::render(&out, cli.format) {
                Ok(text) => {
                    use std::io::Write;
                    // A closed pipe (`| head`) is not an error worth reporting.
                    let _ = writeln!(std::io::stdout(), "{text}");
                }
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}
