//! `kmx`: command-line front end. Exit codes are 0 on success, 1 when a
//! verification reports failures and 2 on bad input or usage.

mod report;
mod verify;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgGroup, Parser, Subcommand};
use kmx_core::base_lie::Algebra;
use kmx_core::cartan::{classify, named_matrix, validate_gcm, CartanKind, NamedType};
use kmx_core::geometry::{cartan_slice, curvature_report, Quadruple, Sign};
use kmx_core::group_action::{flat_solver, is_singular, weyl_orbit, FlatConfig};
use kmx_core::kac_moody::{affine_generators, KmTriple};
use kmx_core::loop_algebra::{LaurentLoop, LoopTerm};
use kmx_core::sampling;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Input(m) => write!(f, "input error: {m}"),
        }
    }
}

impl From<kmx_core::Error> for CliError {
    fn from(e: kmx_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "kmx", version, about = "Affine Kac-Moody algebras: classification, realization and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a generalized Cartan matrix given as a file or by name.
    #[command(group(ArgGroup::new("source").required(true).args(["matrix", "name"])))]
    Classify {
        /// JSON file holding `{"matrix": [[..]]}` or a bare array of rows.
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Named type such as `G2`, `A~3` or `A~1'`.
        #[arg(long)]
        name: Option<String>,
    },
    /// Emit the loop realization generators of an untwisted type-A affine algebra.
    Construct {
        #[arg(long)]
        name: String,
    },
    /// Run identity suites and emit a report.
    Verify {
        /// Suite to run; repeatable. Defaults to every suite.
        #[arg(long = "suite", value_parser = clap::builder::PossibleValuesParser::new(verify::SUITES))]
        suites: Vec<String>,
        #[arg(long, conflicts_with = "suites")]
        all: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Affine types for the serre suite; repeatable.
        #[arg(long = "type")]
        types: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monodromy and flat kernel of the Lax equation for a compact loop.
    Flat {
        #[arg(long, default_value = "sl2")]
        algebra: String,
        /// JSON list of `{"deg": k, "matrix": rows}` terms.
        #[arg(long = "loop")]
        loop_file: PathBuf,
        #[arg(long, default_value_t = 4096)]
        steps: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Curvature identities on random samples.
    Curvature {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value = "sl2")]
        algebra: String,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Points of the rank-one Cartan slice at a fixed level.
    Slice {
        #[arg(long, allow_hyphen_values = true)]
        level: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        rd: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Write `a,r_c,r_d` rows here instead of JSON on stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Orbit of a line coordinate under the affine Weyl group.
    Weyl {
        #[arg(long, allow_hyphen_values = true)]
        orbit: String,
        #[arg(long, default_value_t = 4)]
        radius: usize,
    },
}

fn seed_override(seed: u64) -> Result<u64, CliError> {
    match std::env::var("KMX_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("KMX_SEED is not an unsigned integer: {s:?}"))),
        Err(_) => Ok(seed),
    }
}

fn parse_algebra(s: &str) -> Result<Algebra, CliError> {
    Algebra::parse(s).ok_or_else(|| CliError::Usage(format!("unknown algebra {s:?}")))
}

fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    BigRational::from_str(s.trim()).map_err(|_| CliError::Usage(format!("not a rational number: {s:?}")))
}

fn rows_of(v: &Value) -> Result<Vec<Vec<i64>>, CliError> {
    let rows = v.get("matrix").unwrap_or(v);
    serde_json::from_value(rows.clone()).map_err(|e| CliError::Input(format!("matrix must be integer rows: {e}")))
}

fn kind_name(k: CartanKind) -> String {
    k.to_string()
}

fn cmd_classify(matrix: Option<PathBuf>, name: Option<String>) -> Result<bool, CliError> {
    let (m, name, twist) = match (matrix, name) {
        (Some(path), _) => (validate_gcm(rows_of(&report::read_json(&path)?)?)?, None, None),
        (None, Some(n)) => {
            let t = NamedType::parse(&n)?;
            (named_matrix(t)?, Some(t.to_string()), Some(t.twist_order()))
        }
        (None, None) => return Err(CliError::Usage("one of --matrix or --name is required".into())),
    };
    let class = classify(&m);
    report::emit(
        &json!({
            "matrix": m.entries(),
            "class": kind_name(class.kind),
            "components": class.components,
            "component_classes": class.component_kinds.iter().map(|&k| kind_name(k)).collect::<Vec<_>>(),
            "name": name,
            "twist": twist,
        }),
        None,
    )?;
    Ok(true)
}

#[derive(Serialize)]
struct Construction {
    name: String,
    generators: Vec<KmTriple>,
}

fn cmd_construct(name: &str) -> Result<bool, CliError> {
    let t = NamedType::parse(name)?;
    let generators = affine_generators(&named_matrix(t)?)?;
    report::emit(&Construction { name: t.to_string(), generators }, None)?;
    Ok(true)
}

fn cmd_verify(
    suites: Vec<String>,
    seed: u64,
    trials: usize,
    types: Vec<String>,
    out: Option<&Path>,
) -> Result<bool, CliError> {
    let seed = seed_override(seed)?;
    let suites = if suites.is_empty() {
        verify::SUITES.iter().map(|s| s.to_string()).collect()
    } else {
        suites
    };
    let names = if types.is_empty() { vec!["A~1".to_string(), "A~2".to_string()] } else { types };
    let parsed = names
        .iter()
        .map(|n| NamedType::parse(n))
        .collect::<kmx_core::Result<Vec<_>>>()?;
    for &t in &parsed {
        affine_generators(&named_matrix(t)?)?;
    }
    let rep = verify::run(&suites, seed, trials, Some(names.join(",")), &parsed);
    report::emit(&rep, out)?;
    if out.is_some() {
        // Keep a one-line summary on stdout when the report goes to a file.
        let failures: usize = rep.suites.iter().map(|s| s.failures).sum();
        println!("{} suites, {failures} failures", rep.suites.len());
    }
    Ok(rep.passed)
}

#[derive(serde::Deserialize)]
#[serde(untagged)]
enum LoopFile {
    Terms(Vec<LoopTerm>),
    Wrapped {
        #[serde(rename = "loop")]
        terms: Vec<LoopTerm>,
    },
}

fn cmd_flat(algebra: &str, loop_file: &Path, steps: usize, tol: f64, out: Option<&Path>) -> Result<bool, CliError> {
    let alg = parse_algebra(algebra)?;
    if steps == 0 || tol.is_nan() || tol <= 0.0 {
        return Err(CliError::Usage("--steps must be positive and --tol must be a positive number".into()));
    }
    let terms = match serde_json::from_value(report::read_json(loop_file)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", loop_file.display())))?
    {
        LoopFile::Terms(t) | LoopFile::Wrapped { terms: t } => t,
    };
    let u = LaurentLoop::from_wire(alg, terms)?;
    let result = flat_solver(&u, FlatConfig { steps, tol })?;
    report::emit(&result, out)?;
    Ok(true)
}

fn cmd_curvature(samples: usize, algebra: &str, out: Option<&Path>, seed: u64) -> Result<bool, CliError> {
    let seed = seed_override(seed)?;
    let alg = parse_algebra(algebra)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let quads: Vec<Quadruple> = (0..samples)
        .map(|_| {
            let [g, h, k, l] = [0, 1, 2, 3].map(|_| sampling::random_compact_km(&mut rng, alg, 2));
            (g, h, k, l)
        })
        .collect();
    let rep = curvature_report(&quads)?;
    let negative = rep.sign_samples.iter().filter(|s| s.sign == Sign::Negative).count();
    let passed = rep.failures == 0 && negative == 0;
    report::emit(
        &json!({
            "algebra": alg.to_string(),
            "seed": seed,
            "samples": samples,
            "negative_signs": negative,
            "passed": passed,
            "report": rep,
        }),
        out,
    )?;
    Ok(passed)
}

fn cmd_slice(level: &str, rd: &str, samples: usize, csv: Option<&Path>) -> Result<bool, CliError> {
    let slice = cartan_slice(&parse_rational(level)?, &parse_rational(rd)?, samples)?;
    match csv {
        Some(path) => {
            let mut text = String::from("a,r_c,r_d\n");
            for p in &slice.points {
                text.push_str(&format!("{},{},{}\n", p.a, p.r_c, p.r_d));
            }
            fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        }
        None => report::emit(&slice, None)?,
    }
    Ok(true)
}

fn cmd_weyl(orbit: &str, radius: usize) -> Result<bool, CliError> {
    let x = parse_rational(orbit)?;
    let points: Vec<String> = weyl_orbit(&x, radius).iter().map(|y| y.to_string()).collect();
    report::emit(
        &json!({
            "x": x.to_string(),
            "radius": radius,
            "orbit": points,
            "singular": is_singular(&x, radius),
        }),
        None,
    )?;
    Ok(true)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Classify { matrix, name } => cmd_classify(matrix, name),
        Command::Construct { name } => cmd_construct(&name),
        Command::Verify { suites, all: _, seed, trials, types, out } => {
            cmd_verify(suites, seed, trials, types, out.as_deref())
        }
        Command::Flat { algebra, loop_file, steps, tol, out } => {
            cmd_flat(&algebra, &loop_file, steps, tol, out.as_deref())
        }
        Command::Curvature { samples, algebra, report, seed } => cmd_curvature(samples, &algebra, report.as_deref(), seed),
        Command::Slice { level, rd, samples, csv } => cmd_slice(&level, &rd, samples, csv.as_deref()),
        Command::Weyl { orbit, radius } => cmd_weyl(&orbit, radius),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("kmx: {e}");
            ExitCode::from(2)
        }
    }
}
