use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use duadic::exec::Exec;
use duadic_cli::commands::{parse_list, reports_json};
use duadic_cli::report::render_table;
use duadic_cli::spec::{GroupSpec, MuSpec};
use duadic_cli::verify::{outcome, render_checks, run_suite};
use duadic_cli::{cmd_construct, cmd_scan, CliError, ConstructArgs, Family, Options, ScanArgs};

#[derive(Parser)]
#[command(name = "duadic", version, about = "Duadic group algebra codes and their CSS quantum codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Cyclic,
    Pp,
}

#[derive(Subcommand)]
enum Command {
    /// Existence and parameters over a grid of group sizes and fields.
    Scan {
        /// Sizes: `a..b` (inclusive) or a comma list.
        #[arg(long, short)]
        n: String,
        /// Field orders, comma separated.
        #[arg(long, short, default_value = "2")]
        q: String,
        #[arg(long, value_enum, default_value = "cyclic")]
        family: FamilyArg,
        #[arg(long, default_value = "mu-1")]
        mu: String,
        /// Enumerate minimum weights up to the cap instead of reporting bounds.
        #[arg(long)]
        distances: bool,
        #[arg(long, default_value_t = 1 << 24)]
        max_enum: u128,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        sequential: bool,
    },
    /// Build the canonical duadic pair, its codes and the quantum code.
    Construct {
        /// `7`, `3x3`, `3x3,3x3` or `@file.cayley`.
        #[arg(long)]
        group: String,
        #[arg(long)]
        q: u64,
        /// `mu-1`, `swap`, `swap*swap` or `@file.perm`.
        #[arg(long, default_value = "mu-1")]
        mu: String,
        /// Take the product of the pairs on the two factors of the group spec.
        #[arg(long)]
        product: bool,
        /// List every pair, not only the canonical one.
        #[arg(long)]
        enumerate_all: bool,
        #[arg(long, default_value_t = 1 << 24)]
        max_enum: u128,
        /// Write generator and stabilizer matrices into this directory.
        #[arg(long)]
        emit: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        sequential: bool,
    },
    /// Run a verification suite: key-prop, existence, structure, duality,
    /// bounds, paper-81, css, oracle or all.
    Verify {
        suite: String,
        #[arg(long)]
        json: bool,
        /// Also list passing checks.
        #[arg(long, short)]
        verbose: bool,
        #[arg(long)]
        sequential: bool,
    },
}

fn exec(sequential: bool) -> Exec {
    if sequential {
        Exec::Sequential
    } else {
        Exec::default()
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Scan {
            n,
            q,
            family,
            mu,
            distances,
            max_enum,
            json,
            timing,
            sequential,
        } => {
            let args = ScanArgs {
                ns: parse_list(&n)?,
                qs: parse_list(&q)?,
                family: match family {
                    FamilyArg::Cyclic => Family::Cyclic,
                    FamilyArg::Pp => Family::PrimeSquare,
                },
                mu: mu.parse()?,
                options: Options {
                    cap: max_enum,
                    exec: exec(sequential),
                    timing,
                    distances,
                    degeneracy: false,
                },
            };
            let reports = cmd_scan(&args)?;
            if json {
                println!("{}", reports_json(&reports));
            } else {
                print!("{}", render_table(&reports));
            }
            Ok(())
        }
        Command::Construct {
            group,
            q,
            mu,
            product,
            enumerate_all,
            max_enum,
            emit,
            json,
            timing,
            sequential,
        } => {
            let args = ConstructArgs {
                group: group.parse::<GroupSpec>()?,
                q,
                mu: mu.parse::<MuSpec>()?,
                product,
                enumerate_all,
                emit,
                options: Options {
                    cap: max_enum,
                    exec: exec(sequential),
                    timing,
                    ..Options::default()
                },
            };
            let report = cmd_construct(&args)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(())
        }
        Command::Verify {
            suite,
            json,
            verbose,
            sequential,
        } => {
            let checks = run_suite(&suite, exec(sequential))?;
            if json {
                println!("{}", serde_json::to_string_pretty(&checks).expect("checks serialize"));
            } else {
                print!("{}", render_checks(&checks, verbose));
            }
            outcome(&checks)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
