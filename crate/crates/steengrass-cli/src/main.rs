use std::process::ExitCode;

use clap::{Parser, Subcommand};

use steengrass_cli::verify::{self, Suite};
use steengrass_cli::{parse_grass, Grass, PosetFormat, TableFormat};

#[derive(Parser)]
#[command(name = "steengrass", version, about = "Landweber-Novikov and Steenrod operations on symmetric functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn grass_arg(s: &str) -> Result<Grass, String> {
    parse_grass(s).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Apply an operation to a Schur function or a Schubert class
    Act {
        #[arg(long)]
        op: String,
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        #[arg(long)]
        prime: Option<u64>,
        /// `n,N` for Gr_n(C^N)
        #[arg(long, value_parser = grass_arg)]
        grass: Option<Grass>,
        /// Add the Grassmannian and prime to the output object
        #[arg(long, requires = "grass")]
        envelope: bool,
    },
    /// Elementary expansion of m_(1^k p^n)
    Wu {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Keep only rows with alpha nonzero mod p
        #[arg(long = "mod")]
        nonzero_mod_p: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Inverse Kostka rows in one degree
    KostkaInv {
        #[arg(long)]
        degree: usize,
    },
    /// Attaching poset of Schubert cells
    Poset {
        /// `n,N` for Gr_n(C^N)
        #[arg(long, value_parser = grass_arg)]
        grass: Grass,
        #[arg(long)]
        prime: u64,
        #[arg(long, value_enum, default_value = "dot")]
        format: PosetFormat,
    },
    /// Two-component product formula report
    Conjecture {
        #[arg(long)]
        max_boxes: usize,
        #[arg(long = "box", default_value_t = 6)]
        side: usize,
        /// List every shape, not only disagreements
        #[arg(long)]
        all: bool,
    },
    /// Run an invariant suite
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// a_{λμ} as a polynomial in the frame content
    APoly {
        #[arg(long, allow_hyphen_values = true)]
        inner: String,
        #[arg(long)]
        outer: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Act { op, class, prime, grass, envelope } => {
            steengrass_cli::act(&op, &class, prime, grass, envelope).map(|s| s + "\n")
        }
        Command::Wu { p, n, k, nonzero_mod_p, format } => steengrass_cli::wu(p, n, k, nonzero_mod_p, format),
        Command::KostkaInv { degree } => steengrass_cli::kostka_inv(degree).map(|s| s + "\n"),
        Command::Poset { grass, prime, format } => steengrass_cli::poset(grass, prime, format),
        Command::Conjecture { max_boxes, side, all } => {
            steengrass_cli::conjecture(max_boxes, side, all).map(|s| s + "\n")
        }
        Command::Verify { suite, max_degree } => {
            let checks = verify::run(suite, max_degree);
            print!("{}", verify::render(suite, &checks));
            return if checks.iter().all(|c| c.passed()) { ExitCode::SUCCESS } else { ExitCode::FAILURE };
        }
        Command::APoly { inner, outer } => steengrass_cli::a_poly_cmd(&inner, &outer).map(|s| s + "\n"),
    };
    match out {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
