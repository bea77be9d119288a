//! `rphp` command-line front end. Results go to stdout as JSON; exit status
//! is 0 for success or a true property, 1 for a false property or a "no"
//! decision, 2 for input and budget errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "rphp", version, about = "Finite pigeonhole reductions toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Wall-clock limit for searches, in seconds
    #[arg(long, global = true)]
    budget_secs: Option<f64>,

    /// Node limit for searches
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,

    /// Suppress stdout; only the exit status reports the result
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Disjoint function families
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Latin squares, affine planes, Kirkman systems, factorizations
    #[command(subcommand)]
    Design(DesignCmd),
    /// Translations between designs, families and reductions
    #[command(subcommand)]
    Bridge(BridgeCmd),
    /// Counting bounds for a shape
    Bound(ShapeArgs),
    /// Reductions between finite problems
    #[command(subcommand)]
    Reduce(ReduceCmd),
    /// AUC / ACC / C_k witnesses
    #[command(subcommand)]
    Jump(JumpCmd),
    /// The reduction atlas
    #[command(subcommand)]
    Atlas(AtlasCmd),
}

#[derive(Args, Clone, Copy)]
struct ShapeArgs {
    #[arg(short)]
    m: usize,
    #[arg(short)]
    n: usize,
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Checks that a family file (or `builtin:<id>`) is pairwise disjoint
    Verify { input: String },
    /// Finds a maximum disjoint family
    Search {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Ignore constructions and search from scratch
        #[arg(long)]
        exhaustive: bool,
    },
    /// Prints a stored family: warmup-4-2-3, nine-4-6 or seven-5-10
    Builtin { id: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum FactorKind {
    One,
    Near,
    Hamiltonian,
}

#[derive(Subcommand)]
enum DesignCmd {
    /// q-1 MOLS of prime-power order q
    Mols {
        #[arg(long)]
        order: usize,
    },
    /// Affine plane of order q
    Plane {
        #[arg(long)]
        order: usize,
    },
    /// Kirkman triple system of order 9 or 15
    Ktr {
        #[arg(long)]
        order: usize,
    },
    /// Edge decomposition of K_m
    Factorize {
        #[arg(short)]
        m: usize,
        #[arg(long, value_enum, default_value = "one")]
        kind: FactorKind,
    },
    /// Checks a design file
    Verify { input: PathBuf },
}

#[derive(Subcommand)]
enum BridgeCmd {
    /// Latin squares file to a family on (n², n)
    MolsToFamily { input: PathBuf },
    /// Resolvable design file to a family
    RbibdToFamily { input: PathBuf },
    /// Family on (m, n) to an AUC witness on (mn, n)
    Product { input: PathBuf },
    /// Padding reduction from (m, n) to (mq+r, nq+r): the witness, or the
    /// padded family when --family is given
    Padding {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(short)]
        q: usize,
        #[arg(short, default_value_t = 0)]
        r: usize,
        #[arg(long)]
        family: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ReduceCmd {
    /// Decides whether FROM reduces to TO (problems `php:m,n` or `id:k`)
    Decide {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Write the witness of a "yes" answer here
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// Checks a witness file for FROM <= TO
    Verify {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        witness: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanKind {
    Auc,
    Acc,
}

#[derive(Subcommand)]
enum JumpCmd {
    /// Checks an AUC witness (family file with a "g" slot)
    CheckAuc { input: PathBuf },
    /// Checks an ACC witness (family file with at least three functions)
    CheckAcc { input: PathBuf },
    /// Checks a C_k tree file, or the stored C_3 tree on (8,2)
    CheckCk {
        input: Option<PathBuf>,
        #[arg(long)]
        stored: bool,
        /// Read "tau extends sigma" as proper extension
        #[arg(long)]
        strict: bool,
    },
    /// Searches for a witness; "no" means none exists on the shape
    Scan {
        #[arg(long, value_enum)]
        kind: ScanKind,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        /// Defaults to n²+1 for AUC and n^(k+1)+1 for ACC
        #[arg(short)]
        m: Option<usize>,
    },
}

#[derive(Args)]
struct AtlasArgs {
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    /// Largest m for every n (default n²+1)
    #[arg(long)]
    max_m: Option<usize>,
    /// Atlas JSON reused when present and rewritten afterwards
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Keep only strict and claimed edges in DOT output
    #[arg(long)]
    strict_only: bool,
    /// Draw only the shapes of the classical picture
    #[arg(long)]
    landmarks: bool,
}

#[derive(Subcommand)]
enum AtlasCmd {
    /// Builds the atlas and prints it as JSON
    Build {
        #[command(flatten)]
        atlas: AtlasArgs,
        /// Also write DOT here
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Prints the atlas as DOT
    Dot {
        #[command(flatten)]
        atlas: AtlasArgs,
        /// Jump-level picture for fixed n instead of the atlas
        #[arg(long)]
        jump_levels: bool,
        #[arg(short, default_value_t = 2)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "4,5,8,9")]
        ms: Vec<usize>,
        /// Largest k tried for AUC/ACC witnesses
        #[arg(long, default_value_t = 4)]
        cap: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let quiet = cli.quiet;
    match commands::run(cli) {
        Ok(out) => {
            if !quiet && !out.text.is_empty() {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            if !quiet {
                let body = json!({"error": commands::error_kind(&e), "message": e.to_string()});
                println!("{}", serde_json::to_string_pretty(&body).expect("json"));
            }
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use clap::CommandFactory;

    #[test]
    fn argument_definitions_are_consistent() {
        super::Cli::command().debug_assert();
    }
}
