use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use oddchain::logic::{check_consequence, eval, parse_formula, parse_theory, Assignment, SearchOutcome};
use oddchain::plp::is_grpart_discretely_embedded;
use oddchain::towers::{build_representation, build_standard_target, Countertower, RepresentationSpec, TowerMode};
use oddchain::verify::{check_isos_for, check_map, check_zjk, verify_algebra, verify_spec, Report, Suite};
use oddchain::{parse_algebra, parse_elem_in, Algebra, Elem, Error};

#[derive(Parser)]
#[command(name = "oddchain", version, about = "Build, check and search odd FL_e-chains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the tower of a representation spec and print its stages.
    Build(BuildArgs),
    /// Run property suites on sampled elements.
    Verify(VerifyArgs),
    /// Search for an assignment that makes a theory true and a formula false.
    Countermodel(CountermodelArgs),
    /// Evaluate a formula under an assignment.
    Eval(EvalArgs),
    /// Check the canonical isomorphisms on sampled elements.
    IsoCheck(IsoArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    #[value(name = "i-ii")]
    OneTwo,
    #[value(name = "iii-iv")]
    ThreeFour,
}

impl From<Mode> for TowerMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::OneTwo => TowerMode::OneTwo,
            Mode::ThreeFour => TowerMode::ThreeFour,
        }
    }
}

/// Where the algebra comes from: a spec file or a literal.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Representation spec (JSON).
    #[arg(long, value_name = "FILE")]
    spec: Option<PathBuf>,
    /// Algebra literal such as `PLPI(Q,Z,Q_2)` or `BND(Z)`.
    #[arg(long, value_name = "EXPR")]
    algebra: Option<String>,
}

#[derive(Args)]
struct BuildArgs {
    spec: PathBuf,
    #[arg(long, value_enum, default_value = "i-ii")]
    mode: Mode,
    /// Build the standard target tower instead.
    #[arg(long)]
    standard: bool,
    /// Write the tower file here.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CountermodelArgs {
    #[command(flatten)]
    source: Source,
    /// Formula to falsify.
    formula: String,
    /// Theory file, one formula per line.
    #[arg(long, value_name = "FILE")]
    theory: Option<PathBuf>,
    /// With `--spec`, search the top stage of the standard target.
    #[arg(long)]
    standard: bool,
    /// With `--spec`, adjoin global bounds to the searched algebra.
    #[arg(long)]
    bounded: bool,
    #[arg(long, default_value_t = 10_000)]
    budget: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Attach unit-interval values for every element met in the evaluation.
    #[arg(long)]
    render_unit: bool,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, value_name = "EXPR")]
    algebra: String,
    formula: String,
    /// Variable assignment `name=ELEM`; repeatable.
    #[arg(short, long = "assign", value_name = "NAME=ELEM")]
    assign: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct IsoArgs {
    /// Check the isomorphisms that apply to this algebra instead of the
    /// default set.
    #[arg(long, value_name = "EXPR")]
    algebra: Option<String>,
    #[arg(long, value_name = "FILE", conflicts_with = "algebra")]
    spec: Option<PathBuf>,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

/// A finished command: 0 for success, 1 for a negative answer.
enum Outcome {
    Success,
    Negative,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build(a) => cmd_build(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Countermodel(a) => cmd_countermodel(a),
        Command::Eval(a) => cmd_eval(a),
        Command::IsoCheck(a) => cmd_iso(a),
    };
    match result {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_spec(path: &Path) -> anyhow::Result<RepresentationSpec> {
    RepresentationSpec::from_json(&read(path)?).with_context(|| format!("invalid spec {}", path.display()))
}

fn write_json(path: &Path, v: &Value) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(v)? + "\n";
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn tower_json(tower: &Countertower, mode: &str, spec: &RepresentationSpec) -> Value {
    let stages: Vec<Value> = tower
        .stages
        .iter()
        .enumerate()
        .map(|(i, a)| {
            json!({
                "index": i + 1,
                "algebra": a.to_string(),
                "group_part": a.group_part_descriptor().to_string(),
                "discretely_embedded": is_grpart_discretely_embedded(a),
            })
        })
        .collect();
    json!({ "mode": mode, "spec": spec.to_value(), "stages": stages })
}

fn cmd_build(args: BuildArgs) -> anyhow::Result<Outcome> {
    let spec = load_spec(&args.spec)?;
    let (tower, mode) = if args.standard {
        (build_standard_target(&spec)?.target, "standard".to_string())
    } else {
        let mode = TowerMode::from(args.mode);
        (build_representation(&spec, mode)?, mode.to_string())
    };
    let doc = tower_json(&tower, &mode, &spec);
    if let Some(out) = &args.out {
        write_json(out, &doc)?;
    }
    if args.json {
        println!("{}", serde_json::to_string_pretty(&doc)?);
        return Ok(Outcome::Success);
    }
    let names: Vec<String> = tower.stages.iter().map(Algebra::to_string).collect();
    println!("{}", names.join("; "));
    for (i, a) in tower.stages.iter().enumerate() {
        println!(
            "stage {}: {}  group part: {}  discretely embedded: {}",
            i + 1,
            a,
            a.group_part_descriptor(),
            if is_grpart_discretely_embedded(a) { "yes" } else { "no" }
        );
    }
    Ok(Outcome::Success)
}

/// Syntax and field errors are usage errors; anything else raised while
/// constructing an algebra is a property of the input and fails the run.
fn is_usage_error(e: &Error) -> bool {
    matches!(e, Error::Parse { .. } | Error::Field { .. })
}

fn print_report(report: &Report, json: bool) -> anyhow::Result<Outcome> {
    if json {
        println!("{}", serde_json::to_string_pretty(&report.to_json())?);
    } else {
        print!("{report}");
        let failed = report.properties.iter().filter(|p| !p.passed()).count();
        println!("{} of {} properties passed", report.properties.len() - failed, report.properties.len());
    }
    Ok(if report.passed() { Outcome::Success } else { Outcome::Negative })
}

fn build_failure(e: Error, json: bool) -> anyhow::Result<Outcome> {
    if json {
        println!("{}", serde_json::to_string_pretty(&json!({"passed": false, "error": e.to_string()}))?);
    } else {
        println!("verification error: {e}");
    }
    Ok(Outcome::Negative)
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<Outcome> {
    let suite: Suite = args.suite.parse()?;
    let report = match (&args.source.spec, &args.source.algebra) {
        (Some(path), _) => match verify_spec(&load_spec(path)?, suite, args.samples, args.seed) {
            Ok(r) => r,
            Err(e) => return build_failure(e, args.json),
        },
        (None, Some(text)) => match parse_algebra(text) {
            Ok(a) => verify_algebra(&a, suite, args.samples, args.seed),
            Err(e) if is_usage_error(&e) => return Err(anyhow!(e).context("invalid --algebra")),
            Err(e) => return build_failure(e, args.json),
        },
        (None, None) => unreachable!("clap requires a source"),
    };
    print_report(&report, args.json)
}

fn search_algebra(args: &CountermodelArgs) -> anyhow::Result<Algebra> {
    let a = match (&args.source.spec, &args.source.algebra) {
        (Some(path), _) => {
            let spec = load_spec(path)?;
            let top = if args.standard {
                build_standard_target(&spec)?.target.top().clone()
            } else {
                build_representation(&spec, TowerMode::OneTwo)?.top().clone()
            };
            if args.bounded {
                top.adjoin_bounds()?
            } else {
                top
            }
        }
        (None, Some(text)) => {
            if args.standard || args.bounded {
                bail!("--standard and --bounded apply to --spec only; write BND(..) in the literal instead");
            }
            parse_algebra(text).context("invalid --algebra")?
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    Ok(a)
}

fn cmd_countermodel(args: CountermodelArgs) -> anyhow::Result<Outcome> {
    let a = search_algebra(&args)?;
    let phi = parse_formula(&args.formula).context("invalid formula")?;
    let theory = match &args.theory {
        Some(path) => parse_theory(&read(path)?).with_context(|| format!("invalid theory {}", path.display()))?,
        None => Vec::new(),
    };
    match check_consequence(&a, &theory, &phi, args.budget, args.seed)? {
        SearchOutcome::Found(mut c) => {
            if args.render_unit {
                c.render_unit()?;
            }
            c.validate().context("countermodel failed validation")?;
            let doc = c.to_json();
            if let Some(out) = &args.out {
                write_json(out, &doc)?;
            }
            println!("{}", serde_json::to_string_pretty(&doc)?);
            Ok(Outcome::Success)
        }
        SearchOutcome::NotFound { tried } => {
            if args.json {
                println!("{}", json!({"found": false, "tried": tried}));
            } else {
                let noun = if tried == 1 { "assignment" } else { "assignments" };
                println!("NotFound: no countermodel among {tried} {noun} in {a}");
            }
            Ok(Outcome::Negative)
        }
    }
}

fn cmd_eval(args: EvalArgs) -> anyhow::Result<Outcome> {
    let a = parse_algebra(&args.algebra).context("invalid --algebra")?;
    let phi = parse_formula(&args.formula).context("invalid formula")?;
    let mut env = Assignment::new();
    for item in &args.assign {
        let (name, elem) = item
            .split_once('=')
            .ok_or_else(|| anyhow!("assignment `{item}` is not of the form NAME=ELEM"))?;
        let e = parse_elem_in(&a, elem.trim()).with_context(|| format!("invalid value for `{}`", name.trim()))?;
        env.insert(name.trim().to_string(), e);
    }
    let v = eval(&a, &phi, &env)?;
    let truth = a.leq(&a.unit(), &v)?;
    if args.json {
        println!("{}", json!({"value": v.to_string(), "true": truth}));
    } else {
        println!("{v} ({})", if truth { "true" } else { "not true" });
    }
    Ok(Outcome::Success)
}

fn default_iso_report(samples: usize, seed: u64) -> anyhow::Result<Report> {
    let mut properties = Vec::new();
    for (j, k) in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1)] {
        properties.push(check_zjk(j, k, samples, seed));
    }
    for (x, y, z) in [("Z", "Z", "Z"), ("Z_2", "Z", "Q"), ("Z", "Z_2", "Q_2")] {
        let f = oddchain::towers::fuse_type2_iso(&parse_algebra(x)?, &parse_algebra(y)?, &parse_algebra(z)?)?;
        let to_r = |e: &Elem| f.to_right(e);
        let to_l = |e: &Elem| f.to_left(e);
        properties.push(check_map(
            &format!("re-association {} ~ {}", f.left, f.right),
            &f.left,
            &f.right,
            &to_r,
            Some(&to_l),
            samples,
            seed,
        ));
    }
    Ok(Report { properties })
}

fn cmd_iso(args: IsoArgs) -> anyhow::Result<Outcome> {
    let report = if let Some(text) = &args.algebra {
        let a = parse_algebra(text).context("invalid --algebra")?;
        let properties = check_isos_for(&a, args.samples, args.seed);
        if properties.is_empty() {
            println!("no canonical isomorphism applies to {a}");
            return Ok(Outcome::Success);
        }
        Report { properties }
    } else if let Some(path) = &args.spec {
        match verify_spec(&load_spec(path)?, Suite::Iso, args.samples, args.seed) {
            Ok(r) => r,
            Err(e) => return build_failure(e, args.json),
        }
    } else {
        default_iso_report(args.samples, args.seed)?
    };
    print_report(&report, args.json)
}
