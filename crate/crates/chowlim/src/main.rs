use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use chowlim::commands::{self, MatrixSpec, Outcome};
use chowlim::{CliResult, GroupSpec};
use chowlim_core::groups::DEFAULT_CAP;
use chowlim_core::wreath::WreathVariant;
use clap::{Parser, Subcommand, ValueEnum};

/// Mod-p Chow rings of classifying spaces of finite groups.
#[derive(Parser)]
#[command(name = "chowlim", version)]
struct Cli {
    /// Print the report as one line of JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Largest group order to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Cp,
    Sp,
}

#[derive(Subcommand)]
enum Command {
    /// Inverse limit over the category of elementary abelian p-subgroups.
    Limit {
        input: Option<PathBuf>,
        #[arg(long)]
        prime: usize,
        #[arg(long, default_value_t = 20)]
        max_degree: usize,
    },
    /// Toral witnesses for each elementary abelian class of a classical group.
    Toral {
        input: Option<PathBuf>,
        #[arg(long)]
        prime: usize,
    },
    /// Stable elements in a model of the Sylow subgroup.
    Stable {
        input: Option<PathBuf>,
        #[arg(long)]
        prime: usize,
        #[arg(long, default_value_t = 20)]
        max_degree: usize,
        /// Inner group G of a Sylow Z/p wr G, as a JSON group specification.
        #[arg(long)]
        inner: Option<String>,
    },
    /// Chow ring model of Z/p or S_p wreath an elementary abelian group.
    Wreath {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Variant::Cp)]
        variant: Variant,
        #[arg(long)]
        prime: usize,
        #[arg(long, default_value_t = 20)]
        max_degree: usize,
    },
    /// Invariants of the matrix group generated by {"n", "generators"}.
    Invariants {
        input: Option<PathBuf>,
        #[arg(long)]
        prime: usize,
        #[arg(long, default_value_t = 20)]
        max_degree: usize,
    },
    /// Double cosets K\G/H, subgroups given by JSON generator lists.
    DoubleCosets {
        input: Option<PathBuf>,
        #[arg(long)]
        k: String,
        #[arg(long)]
        h: String,
    },
    /// Runs the acceptance criteria.
    Verify {
        #[arg(long, default_value = "paper")]
        suite: String,
        #[arg(long, default_value_t = 20)]
        max_degree: usize,
    },
}

fn read_input(path: &Option<PathBuf>) -> CliResult<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(std::fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    let cap = cli.cap;
    match &cli.command {
        Command::Limit { input, prime, max_degree } => commands::limit(&GroupSpec::parse(&read_input(input)?)?, *prime, *max_degree, cap),
        Command::Toral { input, prime } => commands::toral(&GroupSpec::parse(&read_input(input)?)?, *prime, cap),
        Command::Stable { input, prime, max_degree, inner } => {
            let inner = inner.as_deref().map(GroupSpec::parse).transpose()?;
            commands::stable(&GroupSpec::parse(&read_input(input)?)?, *prime, *max_degree, inner.as_ref(), cap)
        }
        Command::Wreath { input, variant, prime, max_degree } => {
            let variant = match variant {
                Variant::Cp => WreathVariant::Cp,
                Variant::Sp => WreathVariant::Sp,
            };
            commands::wreath(&GroupSpec::parse(&read_input(input)?)?, variant, *prime, *max_degree, cap)
        }
        Command::Invariants { input, prime, max_degree } => {
            let spec: MatrixSpec = serde_json::from_str(&read_input(input)?)?;
            commands::invariants(&spec, *prime, *max_degree, cap)
        }
        Command::DoubleCosets { input, k, h } => {
            let (k, h): (Vec<Vec<u32>>, Vec<Vec<u32>>) = (serde_json::from_str(k)?, serde_json::from_str(h)?);
            commands::double_cosets(&GroupSpec::parse(&read_input(input)?)?, &k, &h, cap)
        }
        Command::Verify { suite, max_degree } => commands::verify(suite, *max_degree),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let r = &outcome.report;
            if cli.json {
                println!("{}", r.to_json());
                for w in &r.warnings {
                    eprintln!("warning: {w}");
                }
            } else {
                print!("{}", r.to_text());
            }
            match outcome.violation {
                Some(v) => {
                    eprintln!("invariant violation: {v}");
                    ExitCode::from(4)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
