//! Command-line front end: argument handling, context flags and JSON output.
//!
//! [`run`] is the whole program minus process exit, so tests can call it
//! in-process.

// Errors carry exact scalars as witnesses; their size is not a concern here.
#![allow(clippy::result_large_err)]

pub mod expr;
pub mod json;
mod selfcheck;

use std::sync::Arc;

use clap::{Parser, Subcommand};
use pommiez_core::algebra::GaussianRational;
use pommiez_core::classify::{self, inclusion, join, membership, SubspaceDescriptor};
use pommiez_core::domain::{G0Context, Omega, Unit, UnitPreset};
use pommiez_core::jet::Jet;
use pommiez_core::{duality, operator};
use serde::Serialize;
use serde_json::{json, Value};

use expr::{
    parse_cofunction, parse_factored, parse_function, parse_scalar, Function, FunctionError, Span, SyntaxError,
};
use json::{descriptor_from_str, DecodeError, DescriptorJson};

#[derive(Parser, Debug)]
#[command(
    name = "pommiez",
    version,
    about = "Exact calculus for the generalized backward shift f -> (f(t) - g0(t) f(0))/t"
)]
pub struct Cli {
    /// Domain: `plane` or `disk:R`.
    #[arg(long, global = true, default_value = "plane")]
    omega: String,
    /// Zeros of g0 in factored form, e.g. `(1-z)^2*(1-z/2)`, or `1`.
    #[arg(long, global = true, default_value = "1")]
    q: String,
    /// Unit factor of g0: `generic`, `exp:c:N` or `geom:c:N`.
    #[arg(long, global = true, default_value = "generic")]
    unit: String,
    /// Function, e.g. `g0*(z/(1-z))` or `(z-1) + g0*(0)`; `join` accepts several.
    #[arg(long = "f", global = true, allow_hyphen_values = true)]
    f: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply the operator to a g0-multiple (or a jet, with a concrete unit).
    Apply {
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// Descriptor of the closed invariant subspace generated by `--f`.
    Classify,
    /// Whether `--f` lies in a descriptor.
    Member {
        #[arg(long)]
        descriptor: String,
    },
    /// Whether descriptor `--d1` is contained in `--d2`.
    Include {
        #[arg(long)]
        d1: String,
        #[arg(long)]
        d2: String,
    },
    /// Smallest descriptor containing the given descriptors and generated subspaces.
    Join {
        #[arg(long)]
        d1: Option<String>,
        #[arg(long)]
        d2: Option<String>,
    },
    /// Whether `--f` is a cyclic vector.
    Cyclic,
    /// Operator isolating `g0*(z-λ)^-m` from a g0-multiple, target `λ:m`.
    Sieve {
        #[arg(long, allow_hyphen_values = true)]
        target: String,
    },
    /// Basis of the kernel of the n-th power.
    Kernel {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Residue pairing of a rational `--f` with `h = Σ c/t^k`.
    Pair {
        #[arg(long, allow_hyphen_values = true)]
        h: String,
    },
    /// Whether the closed invariant subspaces form a chain.
    Unicellular {
        /// Also emit the first N members of the chain when it exists.
        #[arg(long)]
        chain: Option<usize>,
    },
    /// Randomized comparison of classification against the orbit oracle.
    Selfcheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances per built-in context.
        #[arg(long, default_value_t = 20)]
        cases: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct ErrorBody {
    kind: &'static str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    flag: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    span: Option<[usize; 2]>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Syntax { flag: String, err: SyntaxError },
    Domain(String),
    Failed(Value),
}

impl CliError {
    fn syntax(flag: &str, err: SyntaxError) -> Self {
        CliError::Syntax { flag: flag.to_string(), err }
    }

    fn outcome(self) -> Outcome {
        let (code, body) = match self {
            CliError::Usage(message) => (2, ErrorBody { kind: "usage", message, flag: None, span: None }),
            CliError::Syntax { flag, err } => {
                let Span { start, end } = err.span;
                (2, ErrorBody { kind: "syntax", message: err.message, flag: Some(flag), span: Some([start, end]) })
            }
            CliError::Domain(message) => (1, ErrorBody { kind: "domain", message, flag: None, span: None }),
            CliError::Failed(report) => {
                return Outcome { code: 1, stdout: format!("{report}\n"), stderr: String::new() };
            }
        };
        let stderr = serde_json::to_string(&json!({ "error": body })).expect("error serializes");
        Outcome { code, stdout: String::new(), stderr: format!("{stderr}\n") }
    }
}

impl From<pommiez_core::Error> for CliError {
    fn from(e: pommiez_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn decode(flag: &str, src: &str, ctx: &G0Context) -> Result<SubspaceDescriptor, CliError> {
    descriptor_from_str(src, ctx).map_err(|e| match e {
        DecodeError::Json(e) => CliError::Usage(format!("{flag}: {e}")),
        DecodeError::Syntax { field, err } => CliError::syntax(&format!("{flag}.{field}"), err),
        DecodeError::Shape(m) => CliError::Usage(format!("{flag}: {m}")),
        DecodeError::Invalid(e) => CliError::Domain(format!("{flag}: {e}")),
    })
}

fn parse_omega(src: &str) -> Result<Omega, CliError> {
    if src == "plane" {
        return Ok(Omega::Plane);
    }
    let Some(r) = src.strip_prefix("disk:") else {
        return Err(CliError::Usage(format!("--omega must be `plane` or `disk:R`, got `{src}`")));
    };
    let r = parse_scalar(r).map_err(|e| CliError::syntax("--omega", shift(e, 5)))?;
    if !r.is_real() {
        return Err(CliError::Usage("disk radius must be real".into()));
    }
    Ok(Omega::disk(r.re().clone())?)
}

fn parse_unit(src: &str) -> Result<Unit, CliError> {
    if src == "generic" {
        return Ok(Unit::Generic);
    }
    let parts: Vec<&str> = src.split(':').collect();
    let [kind, c, order] = parts.as_slice() else {
        return Err(CliError::Usage(format!("--unit must be `generic`, `exp:c:N` or `geom:c:N`, got `{src}`")));
    };
    let c = parse_scalar(c).map_err(|e| CliError::syntax("--unit", shift(e, kind.len() + 1)))?;
    let order: usize =
        order.parse().map_err(|_| CliError::Usage(format!("--unit order must be an integer, got `{order}`")))?;
    let preset = match *kind {
        "exp" => UnitPreset::Exp(c),
        "geom" => UnitPreset::Geometric(c),
        _ => return Err(CliError::Usage(format!("unknown unit kind `{kind}`"))),
    };
    Ok(Unit::Concrete { preset, order })
}

fn shift(mut e: SyntaxError, by: usize) -> SyntaxError {
    e.span.start += by;
    e.span.end += by;
    e
}

fn context(cli: &Cli) -> Result<Arc<G0Context>, CliError> {
    let omega = parse_omega(&cli.omega)?;
    let q = parse_factored(&cli.q).map_err(|e| CliError::syntax("--q", e))?;
    let unit = parse_unit(&cli.unit)?;
    Ok(G0Context::new(omega, q, unit)?)
}

fn function(src: &str, ctx: &Arc<G0Context>) -> Result<Function, CliError> {
    parse_function(src, ctx).map_err(|e| match e {
        FunctionError::Syntax(err) => CliError::syntax("--f", err),
        FunctionError::Domain(e) => e.into(),
    })
}

fn single_function(cli: &Cli, ctx: &Arc<G0Context>) -> Result<Function, CliError> {
    match cli.f.as_slice() {
        [src] => function(src, ctx),
        [] => Err(CliError::Usage("--f is required".into())),
        _ => Err(CliError::Usage("expected exactly one --f".into())),
    }
}

fn strings(xs: &[GaussianRational]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn descriptor_value(d: &SubspaceDescriptor) -> Value {
    serde_json::to_value(DescriptorJson::from(d)).expect("descriptor serializes")
}

fn execute(cli: &Cli) -> Result<Value, CliError> {
    if let Command::Selfcheck { seed, cases } = cli.command {
        let report = selfcheck::run(seed, cases);
        let passed = report.failures.is_empty();
        let value = serde_json::to_value(report).expect("report serializes");
        return if passed { Ok(value) } else { Err(CliError::Failed(value)) };
    }
    let ctx = context(cli)?;
    Ok(match &cli.command {
        Command::Apply { times } => match single_function(cli, &ctx)? {
            Function::Multiple(f) => json!({ "result": operator::apply_times(&f, *times).to_string() }),
            Function::Sym(f) => {
                let g0 = ctx.g0_jet()?;
                let mut jet = f.jet()?;
                for _ in 0..*times {
                    jet = Jet::apply_pommiez(&g0, &jet)?;
                }
                json!({ "jet": strings(jet.coeffs()), "order": jet.order() })
            }
        },
        Command::Classify => {
            let f = single_function(cli, &ctx)?;
            descriptor_value(&classify::generated_subspace(&f.to_sym())?)
        }
        Command::Member { descriptor } => {
            let f = single_function(cli, &ctx)?;
            let d = decode("--descriptor", descriptor, &ctx)?;
            json!({ "member": membership(&f.to_sym(), &d)? })
        }
        Command::Include { d1, d2 } => {
            let d1 = decode("--d1", d1, &ctx)?;
            let d2 = decode("--d2", d2, &ctx)?;
            json!({ "included": inclusion(&ctx, &d1, &d2) })
        }
        Command::Join { d1, d2 } => {
            let mut parts = Vec::new();
            for (flag, src) in [("--d1", d1), ("--d2", d2)] {
                if let Some(src) = src {
                    parts.push(decode(flag, src, &ctx)?);
                }
            }
            for src in &cli.f {
                parts.push(classify::generated_subspace(&function(src, &ctx)?.to_sym())?);
            }
            if parts.is_empty() {
                return Err(CliError::Usage("join needs at least one of --d1, --d2, --f".into()));
            }
            let mut acc = SubspaceDescriptor::Trivial;
            for d in &parts {
                acc = join(&ctx, &acc, d)?;
            }
            descriptor_value(&acc)
        }
        Command::Cyclic => json!({ "cyclic": classify::is_cyclic(&single_function(cli, &ctx)?.to_sym())? }),
        Command::Sieve { target } => {
            let Function::Multiple(f) = single_function(cli, &ctx)? else {
                return Err(pommiez_core::Error::NotGMultiple.into());
            };
            let Some((point, order)) = target.rsplit_once(':') else {
                return Err(CliError::Usage(format!("--target must be `λ:m`, got `{target}`")));
            };
            let lambda = parse_scalar(point).map_err(|e| CliError::syntax("--target", e))?;
            let m: usize = order
                .parse()
                .map_err(|_| CliError::Usage(format!("--target order must be a positive integer, got `{order}`")))?;
            let (op, result) = operator::isolate(&f, &lambda, m)?;
            json!({ "operator": strings(op.coeffs()), "result": result.to_string() })
        }
        Command::Kernel { n } => {
            let basis = operator::kernel_basis(&ctx, *n as usize);
            json!({ "basis": basis.iter().map(ToString::to_string).collect::<Vec<_>>() })
        }
        Command::Pair { h } => {
            let h = parse_cofunction(h).map_err(|e| CliError::syntax("--h", e))?;
            let [src] = cli.f.as_slice() else {
                return Err(CliError::Usage("expected exactly one --f".into()));
            };
            let raw = expr::parse_raw(src).map_err(|e| CliError::syntax("--f", e))?;
            if !raw.b.is_zero() {
                return Err(CliError::Domain("pair needs a rational --f without g0".into()));
            }
            json!({ "pair": duality::pair(&raw.a, &h)?.to_string() })
        }
        Command::Unicellular { chain } => {
            let verdict = classify::is_unicellular(&ctx);
            match (chain, classify::unicellular_chain(&ctx, chain.unwrap_or(0))) {
                (Some(_), Some(ds)) => {
                    json!({ "unicellular": verdict, "chain": ds.iter().map(descriptor_value).collect::<Vec<_>>() })
                }
                _ => json!({ "unicellular": verdict }),
            }
        }
        Command::Selfcheck { .. } => unreachable!("handled above"),
    })
}

/// Runs one invocation. Exit codes: 0 success, 1 domain error or failed
/// selfcheck, 2 usage or syntax error.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(value) => Outcome { code: 0, stdout: format!("{value}\n"), stderr: String::new() },
        Err(e) => e.outcome(),
    }
}
