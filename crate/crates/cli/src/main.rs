use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use monodromy::commands::{self, ClassifyArgs, Family, GenArgs};
use monodromy::{write_atomic, CliError, Format, Output};

/// Semistability tests for l-adic monodromy representations.
#[derive(Parser)]
#[command(version, about, long_about = None)]
struct Cli {
    /// Output format (defaults to text for nr/bounds, json otherwise)
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,

    /// Write output to this file (atomically) instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exceptional moduli sets N(r) and N'(r)
    Nr {
        r: u64,
    },
    /// Divisibility of (zeta - 1)^r in cyclotomic integers
    Bounds {
        #[command(subcommand)]
        query: BoundsQuery,
    },
    /// Classify a representation file
    Classify {
        file: PathBuf,
        /// Exterior power degree
        #[arg(long)]
        k: usize,
        /// Exponent in (M - 1)^r
        #[arg(long)]
        r: u64,
        /// Modulus
        #[arg(long)]
        n: u64,
        /// Maximum size of the finite image group
        #[arg(long, default_value_t = monodromy_core::inertia::DEFAULT_CLOSURE_CAP)]
        cap: usize,
        /// Largest tame power checked in integer mode
        #[arg(long, default_value_t = monodromy_core::inertia::DEFAULT_WORD_BOUND)]
        word_bound: u32,
    },
    /// Run brute-force verification suites
    Verify {
        /// Suite name, or `all`
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Generate a representation file from a built-in family
    Gen {
        #[arg(value_enum)]
        family: FamilyArg,
        /// Half-dimension for the random families
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Prime order of the twist
        #[arg(long, default_value_t = 5)]
        ell: u64,
        /// Half-dimension of the untwisted factor
        #[arg(long, default_value_t = 1)]
        a: usize,
    },
}

#[derive(Subcommand)]
enum BoundsQuery {
    /// Is (zeta - 1)^r divisible by n for zeta of order ell^s?
    Membership {
        #[arg(long)]
        ell: u64,
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: u64,
    },
    /// Search prime-power roots of unity witnessing n in N(r)
    Scan {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 3)]
        s_max: u32,
        #[arg(long, default_value_t = monodromy_core::cyclotomic::DEFAULT_DEGREE_CAP)]
        degree_cap: u64,
    },
    /// Least r with (zeta - 1)^r divisible by ell^m
    Groupring {
        #[arg(long)]
        ell: u64,
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[arg(long)]
        m: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Semistable,
    BrieflyUnstable,
    TwistedProduct,
    SignTwist,
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let pick = |default: Format| match cli.format {
        Some(FormatArg::Json) => Format::Json,
        Some(FormatArg::Text) => Format::Text,
        None => default,
    };
    match cli.command {
        Command::Nr { r } => commands::nr(r, pick(Format::Text)),
        Command::Bounds { query } => match query {
            BoundsQuery::Membership { ell, s, r, n } => commands::membership(ell, s, r, n, pick(Format::Text)),
            BoundsQuery::Scan {
                r,
                n,
                s_max,
                degree_cap,
            } => commands::scan(r, n, s_max, degree_cap, pick(Format::Text)),
            BoundsQuery::Groupring { ell, s, m } => commands::groupring(ell, s, m, pick(Format::Text)),
        },
        Command::Classify {
            file,
            k,
            r,
            n,
            cap,
            word_bound,
        } => commands::classify_file(
            &ClassifyArgs {
                file: &file,
                k,
                r,
                n,
                cap,
                word_bound,
            },
            pick(Format::Json),
        ),
        Command::Verify { suite, seed } => {
            let mut timings = Vec::new();
            let out = commands::verify_suites(&suite, seed, pick(Format::Json), &mut timings);
            for (name, secs) in &timings {
                eprintln!("{name}: {secs:.3}s");
            }
            out
        }
        Command::Gen {
            family,
            d,
            seed,
            ell,
            a,
        } => {
            let family = match family {
                FamilyArg::Semistable => Family::Semistable,
                FamilyArg::BrieflyUnstable => Family::BrieflyUnstable,
                FamilyArg::TwistedProduct => Family::TwistedProduct,
                FamilyArg::SignTwist => Family::SignTwist,
            };
            commands::generate(&GenArgs { family, d, seed, ell, a })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = cli.out.clone();
    let result = run(cli).and_then(|output| {
        match &out_path {
            Some(path) => write_atomic(path, output.body.as_bytes())?,
            None => std::io::stdout().write_all(output.body.as_bytes())?,
        }
        Ok(output.exit_code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
