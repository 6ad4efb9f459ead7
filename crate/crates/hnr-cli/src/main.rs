//! `hnr`: evaluate element expressions, trace and convert them, run the
//! relation verification suites, and enumerate the fixed-subalgebra data,
//! all against a parameter set loaded from a JSON config file.
//!
//! Exit codes: 0 success, 1 verification failure or domain refusal
//! (non-symmetrizing trace, size guard), 2 usage, config, or expression
//! errors. Results are JSON on stdout (or `--out`); the verify table goes
//! to stderr.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hnr::{
    format_element, gram_check, parameter_change_map, parse_element_in, tau, to_coordinates,
    verify_all, verify_b_presentation, verify_definition_images, verify_definition_presentation,
    verify_lemma_suite, verify_yokonuma_presentation, AlgebraElement, BasisTag, ColorVector,
    Context, Error, ParameterSet, VerificationReport,
};

#[derive(Parser)]
#[command(name = "hnr", version, about = "Exact computer algebra for the algebra H(n, r)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an element expression to its normal form.
    Mult(ExprArgs),
    /// Evaluate an expression and print its trace.
    Trace(TraceArgs),
    /// Evaluate an expression and print its coordinates in a basis.
    Convert(ExprArgs),
    /// Run relation verification suites.
    Verify(VerifyArgs),
    /// Check the Gram matrix of the trace pairing against the identity.
    Gram(ConfigArgs),
    /// Enumerate the fixed-subalgebra basis and check generation.
    FixedBasis(ConfigArgs),
    /// Compute the spectral-parameter change isomorphism.
    Isomap(IsomapArgs),
    /// List the color relabeling orbits.
    Orbits(ConfigArgs),
}

#[derive(Args)]
struct ConfigArgs {
    /// Parameter set JSON: {"n", "r", "q", "u"}.
    #[arg(long)]
    config: PathBuf,
    /// Write the JSON result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExprArgs {
    #[command(flatten)]
    common: ConfigArgs,
    /// Element expression, e.g. "g1*b[1,2] - 3/2*t1^2".
    #[arg(long)]
    expr: String,
    /// Coordinate basis for the output.
    #[arg(long, value_enum, default_value_t = Basis::Bg)]
    basis: Basis,
}

#[derive(Args)]
struct TraceArgs {
    #[command(flatten)]
    common: ConfigArgs,
    /// Element expression to trace.
    #[arg(long)]
    expr: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: ConfigArgs,
    /// Which suite to run.
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Also fuzz this many freshly sampled parameter sets at the same (n, r).
    #[arg(long)]
    trials: Option<usize>,
    /// Seed for the fuzz trials.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct IsomapArgs {
    #[command(flatten)]
    common: ConfigArgs,
    /// Target parameter set JSON (same n, r, q; different u).
    #[arg(long)]
    target: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    #[value(name = "bg")]
    Bg,
    #[value(name = "tg")]
    Tg,
    #[value(name = "tT")]
    Tt,
}

impl From<Basis> for BasisTag {
    fn from(b: Basis) -> BasisTag {
        match b {
            Basis::Bg => BasisTag::Bg,
            Basis::Tg => BasisTag::Tg,
            Basis::Tt => BasisTag::Tt,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    #[value(name = "def")]
    Def,
    #[value(name = "yh")]
    Yh,
    #[value(name = "b")]
    B,
    #[value(name = "lemmas")]
    Lemmas,
    #[value(name = "all")]
    All,
}

/// A failed run: the message goes to stderr, the code to the shell.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::NotSymmetrizing
            | Error::SizeGuard(_)
            | Error::AssertFailed(_)
            | Error::Singular => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn execute(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Mult(args) => {
            let ctx = load_context(&args.common.config)?;
            let x = parse_element_in(&args.expr, &ctx)?;
            let tag = BasisTag::from(args.basis);
            let payload = json!({
                "text": format_element(&x, tag),
                "coordinates": to_coordinates(&x, tag),
            });
            emit(&args.common.out, &to_pretty(&payload)?)?;
            Ok(0)
        }
        Command::Trace(args) => {
            let ctx = load_context(&args.common.config)?;
            let x = parse_element_in(&args.expr, &ctx)?;
            let payload = serde_json::to_string(&tau(&x)).map_err(invalid_json)?;
            emit(&args.common.out, &payload)?;
            Ok(0)
        }
        Command::Convert(args) => {
            let ctx = load_context(&args.common.config)?;
            let x = parse_element_in(&args.expr, &ctx)?;
            let coords = to_coordinates(&x, args.basis.into());
            emit(&args.common.out, &to_pretty(&coords)?)?;
            Ok(0)
        }
        Command::Verify(args) => {
            let ctx = load_context(&args.common.config)?;
            let mut reports = match args.suite {
                Suite::Def => vec![verify_definition_presentation(&ctx)?],
                Suite::Yh => vec![verify_yokonuma_presentation(&ctx)?],
                Suite::B => vec![verify_b_presentation(&ctx)?],
                Suite::Lemmas => vec![verify_lemma_suite(&ctx)?],
                Suite::All => verify_all(&ctx)?,
            };
            if let Some(trials) = args.trials {
                reports.push(hnr::multi_parameter_fuzz(
                    ctx.n(),
                    ctx.r(),
                    trials,
                    args.seed,
                )?);
            }
            print_check_table(&reports);
            let pass = reports.iter().all(|r| r.pass);
            let payload = json!({ "pass": pass, "reports": reports });
            emit(&args.common.out, &to_pretty(&payload)?)?;
            Ok(if pass { 0 } else { 1 })
        }
        Command::Gram(args) => {
            let ctx = load_context(&args.config)?;
            let report = gram_check(&ctx)?;
            let ok = report.is_identity;
            emit(&args.out, &to_pretty(&report)?)?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::FixedBasis(args) => {
            let ctx = load_context(&args.config)?;
            let basis = hnr::fixed_basis(&ctx)?;
            let generation = hnr::generation_check(&ctx)?;
            let labels: Vec<_> = basis
                .iter()
                .map(|e| json!({ "orbit": e.orbit_rep, "w": e.perm }))
                .collect();
            let ok = generation.generated;
            let payload = json!({
                "dimension": basis.len(),
                "labels": labels,
                "generation": generation,
            });
            emit(&args.out, &to_pretty(&payload)?)?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Isomap(args) => {
            let ctx = load_context(&args.common.config)?;
            let target = load_params(&args.target)?;
            let map = parameter_change_map(&ctx, &target)?;
            let hecke: Vec<AlgebraElement> = (1..ctx.n())
                .map(|i| AlgebraElement::hecke_gen(&ctx, i))
                .collect::<Result<_, _>>()?;
            let verification = verify_definition_images(&map.images, &hecke, &target)?;
            let ok = verification.pass;
            let payload = json!({
                "coefficients": map.coefficients,
                "images": map.images,
                "verification": verification,
            });
            emit(&args.common.out, &to_pretty(&payload)?)?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Orbits(args) => {
            let ctx = load_context(&args.config)?;
            let reps = ColorVector::orbit_representatives(ctx.n(), ctx.r());
            let mut orbits = Vec::with_capacity(reps.len());
            for rep in &reps {
                orbits.push(json!({
                    "representative": rep,
                    "members": rep.orbit(ctx.r())?,
                }));
            }
            let payload = json!({ "count": reps.len(), "orbits": orbits });
            emit(&args.out, &to_pretty(&payload)?)?;
            Ok(0)
        }
    }
}

fn load_params(path: &PathBuf) -> Result<ParameterSet, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    serde_json::from_str(&text).map_err(|e| Failure {
        code: 2,
        message: format!("bad parameter file {}: {e}", path.display()),
    })
}

fn load_context(path: &PathBuf) -> Result<Context, Failure> {
    Ok(Context::new(load_params(path)?)?)
}

fn to_pretty(value: &impl serde::Serialize) -> Result<String, Failure> {
    serde_json::to_string_pretty(value).map_err(invalid_json)
}

fn invalid_json(e: serde_json::Error) -> Failure {
    Failure {
        code: 2,
        message: format!("cannot serialize result: {e}"),
    }
}

fn emit(out: &Option<PathBuf>, payload: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, format!("{payload}\n")).map_err(|e| Failure {
            code: 2,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => match writeln!(io::stdout(), "{payload}") {
            Ok(()) => Ok(()),
            // A downstream consumer closing the pipe early is not our error.
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
            Err(e) => Err(Failure {
                code: 2,
                message: format!("cannot write to stdout: {e}"),
            }),
        },
    }
}

fn print_check_table(reports: &[VerificationReport]) {
    for report in reports {
        for check in &report.checks {
            let status = if check.ok { "  ok" } else { "FAIL" };
            eprintln!("{status}  {}/{}", report.suite, check.id);
        }
        eprintln!(
            "{}  suite {} ({} checks)",
            if report.pass { "pass" } else { "FAIL" },
            report.suite,
            report.checks.len()
        );
    }
}
