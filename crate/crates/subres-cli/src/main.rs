//! Command-line front end: parses polynomial expressions, dispatches to the
//! library, and prints JSON (default) or text reports.
//!
//! Exit codes: 0 success, 1 usage, 2 expression parse error, 3 singular `U`
//! block, 4 verification failure, 5 internal invariant breach.

mod bench;
mod output;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use subres::prs::{self, DivisionRule};
use subres::subresultant::{classic, nested, recursive, reduced};
use subres::verify;
use subres::{parse_poly, Error, Poly};

#[derive(Parser)]
#[command(
    name = "subres",
    about = "Exact recursive polynomial remainder sequences and subresultant families",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Euclidean,
    Primitive,
    Subresultant,
}

impl From<RuleArg> for DivisionRule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Euclidean => DivisionRule::Euclidean,
            RuleArg::Primitive => DivisionRule::Primitive,
            RuleArg::Subresultant => DivisionRule::Subresultant,
        }
    }
}

#[derive(Args)]
struct CommonOpts {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct PairArgs {
    /// First polynomial, e.g. "x^2 - 1".
    f: String,
    /// Second polynomial; its degree must not exceed the first's.
    g: String,
}

#[derive(Subcommand)]
enum Command {
    /// One remainder sequence for (f, g) under a division rule.
    Prs {
        #[command(flatten)]
        pair: PairArgs,
        /// Division rule for the pseudo-division steps.
        #[arg(long, value_enum, default_value = "subresultant")]
        rule: RuleArg,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// The complete staged remainder sequence (gcd and derivative restarts).
    Rprs {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value = "subresultant")]
        rule: RuleArg,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Classical j-th subresultant polynomial of (f, g).
    Subres {
        #[command(flatten)]
        pair: PairArgs,
        /// Target index j, 0 <= j < deg g.
        #[arg(long)]
        j: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Recursive subresultant at stage k, index j.
    Recsubres {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        j: usize,
        /// Refuse depths k >= 3 unless the depth-3 layout check passes.
        #[arg(long)]
        strict_layout: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Nested subresultant at stage k, index j.
    Nested {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        j: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Reduced subresultant at stage k, index j.
    Reduced {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        j: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Randomized identity suites: theorem 1 (nested vs recursive),
    /// theorem 2 (nested vs reduced), 0 (proportionality to sequence
    /// elements).
    Verify {
        #[arg(long)]
        theorem: u8,
        #[arg(long, default_value = "100")]
        trials: u64,
        #[arg(long, default_value = "8")]
        max_deg: usize,
        #[arg(long, default_value = "42")]
        seed: u64,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Squarefree decomposition of one polynomial.
    Sqfree {
        /// The polynomial to decompose, degree >= 1.
        p: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Matrix-size and timing records over a canonical gcd-chain family.
    Bench {
        /// Instance family.
        #[arg(long, default_value = "gcd-chain")]
        family: String,
        /// Chain depth (2 or 3).
        #[arg(long, default_value = "3")]
        depth: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Prints one of the family matrices.
    Matrix {
        #[command(flatten)]
        pair: PairArgs,
        /// Which matrix: sylvester, subres, recursive, nested or reduced.
        #[arg(long, default_value = "sylvester")]
        kind: String,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long, default_value = "1")]
        k: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        Error::SingularU { .. } => 3,
        Error::Internal(_) => 5,
        _ => 1,
    }
}

fn parse_pair(pair: &PairArgs) -> Result<(Poly, Poly), Error> {
    Ok((parse_poly(&pair.f)?, parse_poly(&pair.g)?))
}

fn chain_for(f: &Poly, g: &Poly) -> Result<Vec<usize>, Error> {
    Ok(prs::recursive_prs(f, g, DivisionRule::Subresultant)?.degree_chain())
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Prs { pair, rule, common } => {
            let (f, g) = parse_pair(&pair)?;
            let stage = prs::prs(&f, &g, rule.into())?;
            output::emit_stage(&stage, rule_name(rule), matches!(common.format, Format::Json));
            Ok(0)
        }
        Command::Rprs { pair, rule, common } => {
            let (f, g) = parse_pair(&pair)?;
            let rprs = prs::recursive_prs(&f, &g, rule.into())?;
            output::emit_rprs(&rprs, matches!(common.format, Format::Json));
            Ok(0)
        }
        Command::Subres { pair, j, common } => {
            let (f, g) = parse_pair(&pair)?;
            let mat = classic::subres_matrix(&f, &g, j)?;
            let poly = classic::subresultant_poly(&f, &g, j)?;
            output::emit_family(
                "classical",
                1,
                j,
                &mat,
                &poly,
                None,
                matches!(common.format, Format::Json),
            );
            Ok(0)
        }
        Command::Recsubres {
            pair,
            k,
            j,
            strict_layout,
            common,
        } => {
            let (f, g) = parse_pair(&pair)?;
            let chain = chain_for(&f, &g)?;
            let mat = if strict_layout {
                recursive::recursive_matrix_strict(&f, &g, &chain, k, j)?
            } else {
                recursive::recursive_matrix(&f, &g, &chain, k, j)?
            };
            let poly = recursive::recursive_subresultant(&f, &g, &chain, k, j)?;
            output::emit_family(
                "recursive",
                k,
                j,
                &mat,
                &poly,
                None,
                matches!(common.format, Format::Json),
            );
            Ok(0)
        }
        Command::Nested { pair, k, j, common } => {
            let (f, g) = parse_pair(&pair)?;
            let chain = chain_for(&f, &g)?;
            let mat = nested::nested_matrix(&f, &g, &chain, k, j)?;
            let poly = nested::nested_subresultant(&f, &g, &chain, k, j)?;
            let constants = if k >= 2 {
                let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
                Some(output::ConstantsJson::Sign(nested::sign_constants(
                    m, n, &chain, k, j,
                )?))
            } else {
                None
            };
            output::emit_family(
                "nested",
                k,
                j,
                &mat,
                &poly,
                constants,
                matches!(common.format, Format::Json),
            );
            Ok(0)
        }
        Command::Reduced { pair, k, j, common } => {
            let (f, g) = parse_pair(&pair)?;
            let chain = chain_for(&f, &g)?;
            let mat = reduced::reduced_matrix(&f, &g, &chain, k, j)?;
            let poly = reduced::reduced_subresultant(&f, &g, &chain, k, j)?;
            let constants = if k >= 2 {
                Some(output::ConstantsJson::Reduction(
                    reduced::reduction_constants(&f, &g, &chain, k, j)?,
                ))
            } else {
                None
            };
            output::emit_family(
                "reduced",
                k,
                j,
                &mat,
                &poly,
                constants,
                matches!(common.format, Format::Json),
            );
            Ok(0)
        }
        Command::Verify {
            theorem,
            trials,
            max_deg,
            seed,
            common,
        } => {
            let summary = match theorem {
                1 => verify::nested_recursive_suite(trials, max_deg, seed),
                2 => verify::nested_reduced_suite(trials, max_deg, seed),
                0 => verify::proportionality_suite(trials, max_deg, seed),
                other => {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: format!("unknown theorem {other}; use 1, 2 or 0"),
                    })
                }
            };
            let failed = !summary.all_passed();
            output::emit_summary(&summary, matches!(common.format, Format::Json));
            Ok(if failed { 4 } else { 0 })
        }
        Command::Sqfree { p, common } => {
            let poly = parse_poly(&p)?;
            let d = subres::sqfree::square_free(&poly)?;
            output::emit_sqfree(&poly, &d, matches!(common.format, Format::Json));
            Ok(0)
        }
        Command::Bench {
            family,
            depth,
            common,
        } => {
            if family != "gcd-chain" {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("unknown bench family {family:?}"),
                });
            }
            let table = bench::run_gcd_chain(depth)?;
            output::emit_bench(&table, matches!(common.format, Format::Json));
            Ok(0)
        }
        Command::Matrix {
            pair,
            kind,
            j,
            k,
            common,
        } => {
            let (f, g) = parse_pair(&pair)?;
            let mat = match kind.as_str() {
                "sylvester" => classic::sylvester_matrix(&f, &g)?,
                "subres" => classic::subres_matrix(&f, &g, require_j(j)?)?,
                "recursive" => {
                    let chain = chain_for(&f, &g)?;
                    recursive::recursive_matrix(&f, &g, &chain, k, require_j(j)?)?
                }
                "nested" => {
                    let chain = chain_for(&f, &g)?;
                    nested::nested_matrix(&f, &g, &chain, k, require_j(j)?)?
                }
                "reduced" => {
                    let chain = chain_for(&f, &g)?;
                    reduced::reduced_matrix(&f, &g, &chain, k, require_j(j)?)?
                }
                other => {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: format!("unknown matrix kind {other:?}"),
                    })
                }
            };
            output::emit_matrix(&mat, matches!(common.format, Format::Json));
            Ok(0)
        }
    }
}

fn require_j(j: Option<usize>) -> Result<usize, Error> {
    j.ok_or_else(|| Error::Parse {
        pos: 0,
        msg: "this matrix kind needs --j".into(),
    })
}

fn rule_name(rule: RuleArg) -> &'static str {
    DivisionRule::from(rule).name()
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            std::process::exit(0);
        }
        Err(e) => {
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}
