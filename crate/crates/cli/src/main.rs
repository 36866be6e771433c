mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use nfsize::intpoly::{FamilyKind, IntPolynomial};
use nfsize::lattice::parse_basis;
use nfsize::measures::ExtensionSignature;
use nfsize::roots::RootConfig;
use nfsize::verify::Suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Square sizes, lattice minima and low-degree searches for algebraic
/// integers.
#[derive(Debug, Parser)]
#[command(name = "nfsize", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads for searches and the verification suite.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    /// Relative stopping tolerance of the root finder.
    #[arg(long, global = true, value_parser = parse_precision)]
    precision: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Roots, signature, size profile and bound comparisons of a polynomial.
    Analyze {
        /// Monic irreducible polynomial, e.g. `x^3-x-1` or `-1,-1,0,1`.
        #[arg(value_parser = parse_polynomial, allow_hyphen_values = true)]
        polynomial: IntPolynomial,
        /// Signature `s2,t2` of a linearly disjoint extension to size
        /// the element in the compositum.
        #[arg(long, value_parser = parse_extension)]
        extension: Option<ExtensionSignature>,
    },
    /// All monic irreducible polynomials of degree n with m < 1.
    Search {
        n: usize,
        /// Restrict to one signature `s,t`.
        #[arg(long, value_parser = parse_pair)]
        signature: Option<(usize, usize)>,
        /// Enumerate the raw coefficient box without pruning.
        #[arg(long)]
        no_prune: bool,
    },
    /// Shortest vector of the canonical-embedding lattice of Z[alpha] or a
    /// supplied order.
    Lattice {
        #[arg(value_parser = parse_polynomial, allow_hyphen_values = true)]
        polynomial: IntPolynomial,
        /// Rows of rational power-basis coordinates, `;`-separated, e.g.
        /// `1,0;1/2,1/2`.
        #[arg(long, value_parser = parse_basis_arg, allow_hyphen_values = true)]
        basis: Option<Basis>,
    },
    /// A family member with its root-location checks.
    Family {
        /// multinacci, multinacci-cofactor, truncated-geom, even-spread or
        /// root-power.
        kind: String,
        n: u32,
    },
    /// Numeric verification suite; exits with 1 if any check fails.
    Verify {
        #[arg(long, value_parser = parse_suite, default_value = "fast")]
        suite: Suite,
    },
}

#[derive(Clone, Debug)]
struct Basis(Vec<Vec<BigRational>>);

fn parse_polynomial(s: &str) -> Result<IntPolynomial, String> {
    s.parse::<IntPolynomial>().map_err(|e| e.to_string())
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `a,b`, got `{s}`"))?;
    let a = a.trim().parse().map_err(|_| format!("bad number `{a}`"))?;
    let b = b.trim().parse().map_err(|_| format!("bad number `{b}`"))?;
    Ok((a, b))
}

fn parse_extension(s: &str) -> Result<ExtensionSignature, String> {
    let (s2, t2) = parse_pair(s)?;
    ExtensionSignature::new(s2, t2).map_err(|e| e.to_string())
}

fn parse_basis_arg(s: &str) -> Result<Basis, String> {
    parse_basis(s).map(Basis).map_err(|e| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: nfsize::Error| e.to_string())
}

fn parse_precision(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("bad number `{s}`"))?;
    if !(v > 0.0 && v < 1e-3) {
        return Err(format!("precision must lie in (0, 1e-3), got {v}"));
    }
    Ok(v)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        // a second initialization only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n as usize).build_global();
    }
    let mut config = RootConfig::default();
    if let Some(p) = cli.precision {
        config.tolerance = p;
    }
    let outcome = match &cli.command {
        Command::Analyze { polynomial, extension } => report::analyze(polynomial, *extension, &config, cli.format),
        Command::Search { n, signature, no_prune } => {
            report::search(*n, *signature, !no_prune, cli.threads.map(usize::from), cli.format)
        }
        Command::Lattice { polynomial, basis } => {
            report::lattice(polynomial, basis.as_ref().map(|b| b.0.as_slice()), &config, cli.format)
        }
        Command::Family { kind, n } => match FamilyKind::from_name(kind, *n) {
            Ok(k) => report::family(k, &config, cli.format),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        Command::Verify { suite } => report::verify(*suite, cli.format),
    };
    match outcome {
        Ok(report::Outcome { text, success }) => {
            print!("{text}");
            if success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
