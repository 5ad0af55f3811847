//! The `lgpot` command line.
//!
//! Every subcommand prints one JSON object on stdout. Exit status: 0 on
//! success or a passing check, 1 on a failing check or a mathematical
//! inconsistency, 2 on usage and parse errors.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;
use serde::de::DeserializeOwned;

use crate::algebra::{apply_hom, closed_open_bs_check, hom_check};
use crate::error::Error;
use crate::expr::{parse_poly, parse_scalar};
use crate::json::{AlgebraFile, FamilyFile, HomFile, PolyJson, SubstitutionFile};
use crate::laurent::{LaurentPoly, TwistData, UnimodularMatrix, Vars};
use crate::struct_const::extract_structure_constants;
use crate::twisted::{build_complex, BettiVector};
use crate::wallcross::{substitute, wall_crossing_check};

#[derive(Debug, Parser)]
#[command(name = "lgpot", version, about = "Exact toolkit for Laurent-polynomial potentials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a polynomial at a point of the torus.
    Eval {
        #[arg(long)]
        vars: String,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        /// Comma-separated coordinates, e.g. `1,-1/2,1+i`.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        /// Evaluate in floating point; coordinates may be decimals.
        #[arg(long)]
        approx: bool,
    },
    /// Raise a polynomial to a nonnegative power.
    Pow {
        #[arg(long)]
        vars: String,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        k: u32,
    },
    /// Apply a GL(m, Z) change of basis, given as rows `a,b;c,d`.
    ChangeBasis {
        #[arg(long)]
        vars: String,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Solve for the structure constants of a potential family.
    StructConst {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Betti numbers of the twisted Koszul complex on the n-torus.
    TwistedRanks {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Check that a homomorphism extends to the localized algebra.
    HomCheck {
        #[arg(long)]
        alg: PathBuf,
        #[arg(long)]
        hom: PathBuf,
        /// Target variables, for hom files without a `vars` list.
        #[arg(long)]
        target_vars: Option<String>,
    },
    /// Check h(bs) = d·W.
    BsCheck {
        #[arg(long)]
        alg: PathBuf,
        #[arg(long)]
        hom: PathBuf,
        #[arg(long)]
        target_vars: Option<String>,
        /// Numerator of the element, over the generators.
        #[arg(long, allow_hyphen_values = true)]
        bs: String,
        /// Power of the localized element dividing `bs`.
        #[arg(long, default_value_t = 0)]
        bs_denom_power: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, allow_hyphen_values = true)]
        potential: String,
    },
    /// Check W1∘φ = W0.
    Wallcross {
        #[arg(long, allow_hyphen_values = true)]
        w0: String,
        #[arg(long, allow_hyphen_values = true)]
        w1: String,
        #[arg(long)]
        phi: PathBuf,
        /// Variables of W0; defaults to the `vars` list of the φ file.
        #[arg(long)]
        vars: Option<String>,
        /// Variables of W1; defaults to those of W0.
        #[arg(long)]
        source_vars: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    Failure = 1,
    Usage = 2,
}

#[derive(Debug)]
pub struct CliError {
    pub code: ExitCode,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: ExitCode::Usage,
            message: message.into(),
        }
    }
}

/// Errors raised while reading input are usage errors.
fn input(e: Error) -> CliError {
    CliError::usage(e.to_string())
}

/// Errors raised while computing are classified by kind.
fn compute(e: Error) -> CliError {
    let code = match e {
        Error::Inconsistent
        | Error::Underdetermined { .. }
        | Error::NotInvertible(_)
        | Error::OutsideDomain { .. }
        | Error::ExponentOverflow
        | Error::NotAComplex { .. }
        | Error::ZeroPolynomial
        | Error::InvalidHom(_) => ExitCode::Failure,
        _ => ExitCode::Usage,
    };
    CliError {
        code,
        message: e.to_string(),
    }
}

/// Result of a successful run: the JSON to print and whether the check held.
#[derive(Debug)]
pub struct Report {
    pub output: String,
    pub holds: bool,
}

impl Report {
    fn ok(output: impl Serialize) -> Result<Self, CliError> {
        Self::check(output, true)
    }

    fn check(output: impl Serialize, holds: bool) -> Result<Self, CliError> {
        let output = serde_json::to_string(&output).map_err(|e| CliError::usage(e.to_string()))?;
        Ok(Report { output, holds })
    }

    pub fn exit_code(&self) -> ExitCode {
        if self.holds {
            ExitCode::Success
        } else {
            ExitCode::Failure
        }
    }
}

#[derive(Serialize)]
struct PolyOutput {
    result: PolyJson,
    rendered: String,
}

impl From<&LaurentPoly> for PolyOutput {
    fn from(p: &LaurentPoly) -> Self {
        PolyOutput {
            result: PolyJson::from(p),
            rendered: p.to_string(),
        }
    }
}

#[derive(Serialize)]
struct ApproxValue {
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct EvalOutput<T> {
    value: T,
}

#[derive(Serialize)]
struct RanksOutput {
    betti: BettiVector,
    acyclic: bool,
}

#[derive(Serialize)]
struct HomCheckOutput {
    valid: bool,
    image_of_inverted: String,
}

#[derive(Serialize)]
struct BsCheckOutput {
    holds: bool,
    image: String,
}

#[derive(Serialize)]
struct WallcrossOutput {
    holds: bool,
    numerator: String,
    denominator: String,
}

fn vars(list: &str) -> Result<Vars, CliError> {
    Vars::parse_list(list).map_err(input)
}

fn poly(src: &str, vars: &Vars) -> Result<LaurentPoly, CliError> {
    parse_poly(src, vars).map_err(input)
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim)
}

fn exact_point(at: &str) -> Result<TwistData, CliError> {
    let coords = split_list(at)
        .map(|c| {
            parse_scalar(c).map_err(|e| {
                if c.parse::<Complex64>().is_ok() {
                    CliError::usage(format!(
                        "{c:?} is not an exact value; pass --approx to evaluate in floating point"
                    ))
                } else {
                    CliError::usage(format!("{c:?}: {e}"))
                }
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    TwistData::new(coords).map_err(input)
}

fn approx_point(at: &str) -> Result<Vec<Complex64>, CliError> {
    split_list(at)
        .map(|c| match parse_scalar(c) {
            Ok(s) => Ok(s.to_complex64()),
            Err(_) => c
                .parse::<Complex64>()
                .map_err(|_| CliError::usage(format!("{c:?} is not a number"))),
        })
        .collect()
}

/// Runs one command.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Eval {
            vars: v,
            expr,
            at,
            approx,
        } => {
            let v = vars(v)?;
            let p = poly(expr, &v)?;
            if *approx {
                let point = approx_point(at)?;
                let z = p.eval_approx(&point).map_err(input)?;
                Report::ok(EvalOutput {
                    value: ApproxValue { re: z.re, im: z.im },
                })
            } else {
                let rho = exact_point(at)?;
                let value = p.eval(&rho).map_err(input)?;
                Report::ok(EvalOutput {
                    value: value.to_string(),
                })
            }
        }
        Command::Pow { vars: v, expr, k } => {
            let v = vars(v)?;
            let p = poly(expr, &v)?;
            let r = p.pow(*k).map_err(compute)?;
            Report::ok(PolyOutput::from(&r))
        }
        Command::ChangeBasis {
            vars: v,
            expr,
            matrix,
        } => {
            let v = vars(v)?;
            let p = poly(expr, &v)?;
            let a: UnimodularMatrix = matrix.parse().map_err(CliError::usage)?;
            let r = p.change_basis(&a).map_err(|e| match e {
                Error::DimensionMismatch { .. } => input(e),
                e => compute(e),
            })?;
            Report::ok(PolyOutput::from(&r))
        }
        Command::StructConst { family, k } => {
            let file: FamilyFile = read_json(family)?;
            let fam = file.to_family().map_err(input)?;
            let c = extract_structure_constants(&fam, *k).map_err(|e| match e {
                Error::IndexOutOfRange { .. } => input(e),
                e => compute(e),
            })?;
            Report::ok(c)
        }
        Command::TwistedRanks { n, lambda } => {
            let entries = split_list(lambda)
                .map(|c| parse_scalar(c).map_err(|e| CliError::usage(format!("{c:?}: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let twist = TwistData::new(entries).map_err(input)?;
            let complex = build_complex(*n, &twist).map_err(compute)?;
            let betti = complex.betti_numbers();
            let acyclic = betti.is_zero();
            Report::ok(RanksOutput { betti, acyclic })
        }
        Command::HomCheck {
            alg,
            hom,
            target_vars,
        } => {
            let alg = read_json::<AlgebraFile>(alg)?.to_algebra().map_err(input)?;
            let target = target_vars.as_deref().map(vars).transpose()?;
            let h = read_json::<HomFile>(hom)?
                .to_hom(&alg, target.as_ref())
                .map_err(input)?;
            let image = h.image_of_inverted(&alg).map_err(compute)?;
            let valid = hom_check(&alg, &h).map_err(compute)?;
            Report::check(
                HomCheckOutput {
                    valid,
                    image_of_inverted: image.to_string(),
                },
                valid,
            )
        }
        Command::BsCheck {
            alg,
            hom,
            target_vars,
            bs,
            bs_denom_power,
            d,
            potential,
        } => {
            let alg = read_json::<AlgebraFile>(alg)?.to_algebra().map_err(input)?;
            let target = target_vars.as_deref().map(vars).transpose()?;
            let h = read_json::<HomFile>(hom)?
                .to_hom(&alg, target.as_ref())
                .map_err(input)?;
            let num = poly(bs, alg.gens())?;
            let element = alg.element(num, *bs_denom_power).map_err(input)?;
            let w = poly(potential, h.target())?;
            if *d == 0 {
                return Err(CliError::usage("--d must be positive"));
            }
            if !hom_check(&alg, &h).map_err(compute)? {
                return Err(compute(Error::InvalidHom(
                    "the image of the localized element is not a unit".into(),
                )));
            }
            let image = apply_hom(&alg, &h, &element).map_err(compute)?;
            let holds = closed_open_bs_check(&alg, &h, &element, *d, &w).map_err(compute)?;
            Report::check(
                BsCheckOutput {
                    holds,
                    image: image.to_string(),
                },
                holds,
            )
        }
        Command::Wallcross {
            w0,
            w1,
            phi,
            vars: target,
            source_vars,
        } => {
            let file: SubstitutionFile = read_json(phi)?;
            let target = match target {
                Some(t) => vars(t)?,
                None => file.target_vars().map_err(input)?.ok_or_else(|| {
                    CliError::usage("give --vars or a \"vars\" list in the φ file")
                })?,
            };
            let source = match source_vars {
                Some(s) => vars(s)?,
                None => target.clone(),
            };
            let map = file.to_map(&target).map_err(input)?;
            if map.source_arity() != source.len() {
                return Err(CliError::usage(format!(
                    "φ has {} entries for {} source variables",
                    map.source_arity(),
                    source.len()
                )));
            }
            let w0 = poly(w0, &target)?;
            let w1 = poly(w1, &source)?;
            let image = substitute(&w1, &map).map_err(compute)?;
            let holds = wall_crossing_check(&w0, &w1, &map).map_err(compute)?;
            Report::check(
                WallcrossOutput {
                    holds,
                    numerator: image.num().to_string(),
                    denominator: image.den().to_string(),
                },
                holds,
            )
        }
    }
}

/// Parses arguments, runs, prints, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { ExitCode::Usage } else { ExitCode::Success };
            let _ = e.print();
            return code as i32;
        }
    };
    match run(&cli) {
        Ok(report) => {
            println!("{}", report.output);
            report.exit_code() as i32
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.code as i32
        }
    }
}
