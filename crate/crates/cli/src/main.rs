mod commands;
mod config;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use semigroup_forge::presentation::ToricStrategy;

use commands::{Failure, FamilyRequest, Outcome};
use report::{Format, Report};

/// Numerical semigroup invariants, monomial curve presentations and checks of
/// the concatenation families S(n, e).
#[derive(Debug, Parser)]
#[command(name = "semigroup-forge", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// S-pair budget for each Gröbner basis computation. Overrides the
    /// SEMIGROUP_FORGE_BUDGET environment variable.
    #[arg(long, global = true)]
    max_spairs: Option<u64>,
    /// Worker threads for sweeps (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Strategy {
    Saturation,
    Elimination,
}

impl From<Strategy> for ToricStrategy {
    fn from(s: Strategy) -> Self {
        match s {
            Strategy::Saturation => ToricStrategy::Saturation,
            Strategy::Elimination => ToricStrategy::Elimination,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Frobenius number, genus, pseudo-Frobenius numbers and type.
    Invariants {
        /// Comma-separated generators, e.g. 3,4,5.
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        gens: Vec<i64>,
        /// Also print the Apéry table with respect to the multiplicity.
        #[arg(long)]
        show_apery: bool,
    },
    /// A certified generating set of the defining ideal, its Betti degrees
    /// and its minimal number of generators.
    Ideal {
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        gens: Vec<i64>,
        #[arg(long, value_enum, default_value_t = Strategy::Saturation)]
        strategy: Strategy,
    },
    /// Check every closed form for one member S(n, e) of a family.
    Verify {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        i: i64,
        /// How e = 4 generating sets are computed.
        #[arg(long, value_enum, default_value_t = Strategy::Saturation)]
        strategy: Strategy,
    },
    /// Verify a range of family members, one row each.
    Sweep {
        #[arg(long)]
        e: usize,
        /// Inclusive range of i, written `2..4`, `2..=4` or `3`.
        #[arg(long = "i-range", visible_alias = "i", value_parser = parse_range)]
        i_range: (i64, i64),
        #[arg(long, value_enum, default_value_t = Strategy::Saturation)]
        strategy: Strategy,
    },
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let s = s.trim();
    let bound = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("not an integer: {t:?}"));
    if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        Ok((bound(lo)?, bound(hi)?))
    } else {
        let v = bound(s)?;
        Ok((v, v))
    }
}

fn run(cli: &Cli) -> Result<(Report, Outcome), Failure> {
    let env = std::env::var(config::BUDGET_ENV).ok();
    let budget = config::resolve_budget(env.as_deref(), cli.max_spairs).map_err(Failure::Invalid)?;
    match &cli.command {
        Command::Invariants { gens, show_apery } => commands::invariants(gens, *show_apery),
        Command::Ideal { gens, strategy } => commands::ideal(gens, (*strategy).into(), &budget),
        Command::Verify { e, i, strategy } => {
            let req = FamilyRequest {
                e: *e,
                i_min: *i,
                i_max: *i,
                strategy: (*strategy).into(),
                budget,
            };
            commands::family_table("verify", &req)
        }
        Command::Sweep { e, i_range, strategy } => {
            let req = FamilyRequest {
                e: *e,
                i_min: i_range.0,
                i_max: i_range.1,
                strategy: (*strategy).into(),
                budget,
            };
            commands::family_table("sweep", &req)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok((report, outcome)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(report.render(cli.format).as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.code())
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..4"), Ok((2, 4)));
        assert_eq!(parse_range("2..=4"), Ok((2, 4)));
        assert_eq!(parse_range(" 3 "), Ok((3, 3)));
        assert!(parse_range("a..4").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
