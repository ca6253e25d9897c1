//! Command-line surface: generate family pairs, verify quadruples, run the
//! quartic-square solver, drive searches, and run the symbolic identity
//! suites. JSON/CSV on stdout for scripting.
//!
//! Exit codes: 0 success, 1 domain error, 2 identity/verification failure,
//! 64 usage error.

use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand};
use serde_json::json;

use bq_lab::arith::{format_rational, parse_rational, rational_square_root};
use bq_lab::fermat::{self, Quartic};
use bq_lab::identities::{self, IdentityCheck};
use bq_lab::isosceles::{self, IsoParams};
use bq_lab::poly::UniPoly;
use bq_lab::quad::{self, QuadSides};
use bq_lab::record::quad_json;
use bq_lab::scalene::{self, ScaleneParams};
use bq_lab::search::{self, SearchConfig};

#[derive(Parser)]
#[command(name = "bq-lab", version, about = "Brahmagupta quadrilateral pairs with equal perimeters and equal areas", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Pair with two equal sides per quadrilateral, from two integer parameters
    FamilyA {
        #[arg(long, allow_hyphen_values = true)]
        r1: String,
        #[arg(long, allow_hyphen_values = true)]
        r2: String,
        /// Emit the trapezoid reordering instead
        #[arg(long, action = ArgAction::SetTrue)]
        trapezium: bool,
    },
    /// Pair with all sides unequal, from one rational parameter
    FamilyB {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Metrics of one quadruple, or the pair report for two
    Verify {
        /// Comma-separated sides, e.g. 3,4,3,4 (rationals allowed)
        #[arg(long, allow_hyphen_values = true)]
        sides: String,
        /// Second quadruple for an equal-pair check
        #[arg(long, allow_hyphen_values = true)]
        other: Option<String>,
    },
    /// Rational arguments giving a quartic square values
    Fermat {
        /// Coefficients c0,c1,c2,c3,c4, or polynomial text like z^4-2*z+1
        #[arg(long, allow_hyphen_values = true)]
        quartic: String,
        /// Expansion anchor: const or leading
        #[arg(long, default_value = "const")]
        anchor: String,
        /// Number of solutions to chase by shifting
        #[arg(long, default_value_t = 1)]
        iterations: usize,
    },
    /// Enumerate quadruples as CSV, or emit equal pairs as JSON
    Search {
        #[arg(long, default_value_t = 300)]
        max_perimeter: u64,
        /// Keep only integer-area quadruples
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        integer_area: bool,
        /// Keep only quadruples with rational diagonals
        #[arg(long, action = ArgAction::SetTrue)]
        square_diagonals: bool,
        /// Parallel enumeration shards
        #[arg(long, env = "BQ_LAB_SHARDS", default_value_t = 1)]
        shards: usize,
        /// Group and emit equal-perimeter/equal-area pairs as JSON lines
        #[arg(long, action = ArgAction::SetTrue)]
        pairs: bool,
    },
    /// Run a symbolic identity suite and report each identity
    Identities {
        /// Which suite: 2.1 (two equal sides) or 2.2 (all sides unequal)
        #[arg(long)]
        section: String,
    },
}

const EXIT_DOMAIN: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// Malformed input (exit 64) versus a well-formed request the mathematics
/// rejects (exit 1).
enum CliError {
    Usage(String),
    Domain(String),
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn domain<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Domain(e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli.cmd) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DOMAIN)
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, CliError> {
    match cmd {
        Cmd::FamilyA { r1, r2, trapezium } => {
            let r1 = parse_rational(&r1).map_err(usage)?;
            let r2 = parse_rational(&r2).map_err(usage)?;
            let params = IsoParams::from_rationals(&r1, &r2).map_err(domain)?;
            let record = if trapezium {
                isosceles::trapezium_variant(&params)
            } else {
                isosceles::build_pair(&params)
            }
            .map_err(domain)?;
            println!("{}", record.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::FamilyB { t } => {
            let t = parse_rational(&t).map_err(usage)?;
            let params = ScaleneParams::new(t).map_err(domain)?;
            let record = scalene::build_pair(&params).map_err(domain)?;
            println!("{}", record.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { sides, other } => {
            let first = parse_sides(&sides)?;
            match other {
                None => {
                    quad::metrics(&first).map_err(domain)?;
                    println!("{}", quad_json(first.sides()));
                    Ok(ExitCode::SUCCESS)
                }
                Some(second) => {
                    let second = parse_sides(&second)?;
                    let report =
                        quad::equal_pair_check(&first, &second).map_err(domain)?;
                    println!(
                        "{}",
                        json!({
                            "perimeter_equal": report.perimeter_equal,
                            "area_sq_equal": report.area_sq_equal,
                            "first_triple_square": report.first_triple_square,
                            "second_triple_square": report.second_triple_square,
                            "multisets_distinct": report.multisets_distinct,
                            "pass": report.all_pass(),
                        })
                    );
                    if report.all_pass() {
                        Ok(ExitCode::SUCCESS)
                    } else {
                        Ok(ExitCode::from(EXIT_VERIFY))
                    }
                }
            }
        }
        Cmd::Fermat {
            quartic,
            anchor,
            iterations,
        } => run_fermat(&quartic, &anchor, iterations),
        Cmd::Search {
            max_perimeter,
            integer_area,
            square_diagonals,
            shards,
            pairs,
        } => {
            let cfg = SearchConfig {
                max_perimeter,
                require_integer_area: integer_area,
                require_square_diagonals: square_diagonals,
                worker_shards: shards,
            };
            if pairs {
                let found = search::find_equal_pairs(&cfg).map_err(domain)?;
                for pair in found {
                    println!("{}", pair.to_json());
                }
            } else {
                println!("{}", search::CSV_HEADER);
                if cfg.worker_shards == 1 {
                    search::for_each_row(&cfg, |row| println!("{}", row.csv_line()))
                        .map_err(domain)?;
                } else {
                    for row in search::enumerate(&cfg).map_err(domain)? {
                        println!("{}", row.csv_line());
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Identities { section } => {
            let checks = match section.as_str() {
                "2.1" | "isosceles" => identities::isosceles_suite(),
                "2.2" | "scalene" => identities::scalene_suite(),
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown identity suite {other:?}; use 2.1 or 2.2"
                    )))
                }
            };
            let mut all_pass = true;
            for IdentityCheck { name, pass, detail } in checks {
                println!("{} {}", if pass { "PASS" } else { "FAIL" }, name);
                if let Some(d) = detail {
                    let trimmed: String = d.chars().take(200).collect();
                    eprintln!("  {trimmed}");
                }
                all_pass &= pass;
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY)
            })
        }
    }
}

fn parse_sides(text: &str) -> Result<QuadSides, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(CliError::Usage(format!(
            "expected four comma-separated sides, got {text:?}"
        )));
    }
    let mut sides = Vec::with_capacity(4);
    for p in parts {
        sides.push(parse_rational(p).map_err(usage)?);
    }
    QuadSides::new([
        sides[0].clone(),
        sides[1].clone(),
        sides[2].clone(),
        sides[3].clone(),
    ])
    .map_err(domain)
}

fn parse_quartic(text: &str) -> Result<Quartic, CliError> {
    if text.chars().any(|c| c.is_ascii_alphabetic()) {
        let poly = UniPoly::parse(text).map_err(usage)?;
        if poly.degree().is_some_and(|d| d > 4) {
            return Err(CliError::Usage("polynomial degree exceeds 4".into()));
        }
        Quartic::new([
            poly.coeff(0),
            poly.coeff(1),
            poly.coeff(2),
            poly.coeff(3),
            poly.coeff(4),
        ])
        .map_err(usage)
    } else {
        Quartic::parse(text).map_err(usage)
    }
}

fn run_fermat(quartic: &str, anchor: &str, iterations: usize) -> Result<ExitCode, CliError> {
    let f = parse_quartic(quartic)?;
    let first = match anchor {
        "const" => fermat::root_from_constant(&f),
        "leading" => fermat::root_from_leading(&f),
        other => {
            return Err(CliError::Usage(format!(
                "unknown anchor {other:?}; use const or leading"
            )))
        }
    };
    let outcome = match first {
        Ok(z) => fermat::iterate_from(&f, z, iterations),
        Err(fermat::FermatError::IdenticallySquare) => fermat::iterate(&f, iterations),
        Err(e) => return Err(domain(e)),
    };
    let solutions: Vec<_> = outcome
        .solutions
        .iter()
        .map(|z| {
            let value = f.eval(z);
            let witness = rational_square_root(&value).expect("produced values are squares");
            json!({
                "z": format_rational(z),
                "value": format_rational(&value),
                "witness": format_rational(&witness),
            })
        })
        .collect();
    println!(
        "{}",
        json!({
            "quartic": f.to_string(),
            "anchor": anchor,
            "solutions": solutions,
            "stalled": outcome.stalled,
            "identically_square": outcome.identically_square,
        })
    );
    Ok(ExitCode::SUCCESS)
}
