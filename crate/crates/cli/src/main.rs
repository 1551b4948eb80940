use clap::{Parser, Subcommand};

use glr_cli::{
    cmd_ahss, cmd_catalog_list, cmd_catalog_show, cmd_classify, cmd_decompose, cmd_homology, cmd_ko_table,
    cmd_self_test, CliResult,
};

/// Classify split crystallographic groups Z^n x| Z/m against the positive and
/// negative GLR criteria.
///
/// GROUP arguments are paths to JSON files {"name", "n", "m", "matrix"} or
/// names of bundled catalog entries.
#[derive(Parser)]
#[command(name = "glr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a group and print every hypothesis check.
    Classify {
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Type (r, s, t) of Z^n as a Z/p-module.
    Decompose {
        group: String,
        #[arg(long = "prime")]
        prime: u64,
    },
    /// H_k of the group with its E^2 summands.
    Homology {
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
    },
    /// KO_*(R[Z/p^s]) in degrees 0 to 7.
    KoTable {
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Atiyah-Hirzebruch E^2 page of ko_*(BΓ) and Tate vanishing summaries.
    Ahss {
        group: String,
        #[arg(long = "max-degree", allow_hyphen_values = true)]
        max_degree: i64,
        #[arg(long)]
        json: bool,
    },
    /// Bundled reference groups.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Randomized consistency checks on seeded random groups.
    SelfTest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
}

fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Classify { group, json } => cmd_classify(&group, json),
        Command::Decompose { group, prime } => cmd_decompose(&group, prime),
        Command::Homology { group, degree } => cmd_homology(&group, degree),
        Command::KoTable { prime, power } => cmd_ko_table(prime, power),
        Command::Ahss {
            group,
            max_degree,
            json,
        } => cmd_ahss(&group, max_degree, json),
        Command::Catalog { action } => match action {
            CatalogAction::List => Ok(cmd_catalog_list()),
            CatalogAction::Show { name } => cmd_catalog_show(&name),
        },
        Command::SelfTest { seed, count } => cmd_self_test(seed, count),
    }
}

fn main() {
    match run(Cli::parse()) {
        Ok(out) => print!("{out}"),
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.code);
        }
    }
}
