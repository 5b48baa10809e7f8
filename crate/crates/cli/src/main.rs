use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use voakit_core::affine::{is_admissible, AffineWeight};
use voakit_core::checks::{run_all, run_check, suite_json, CheckOptions, CheckReport, Status, CHECK_NAMES};
use voakit_core::classify::{classify_category_o, classify_dominant};
use voakit_core::exact::{format_scalar, int, parse_scalar, q, Scalar};
use voakit_core::liealg::gf;
use voakit_core::rootsys::{Label, RootSystem};
use voakit_core::uea::Pbw;

#[derive(Parser)]
#[command(name = "voakit", version, about = "Exact checks for the conformal embedding of B4 into F4 at level -5/2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run named verification checks.
    Verify(VerifyArgs),
    /// Classify highest weights for an algebra and level.
    Classify(ClassifyArgs),
    /// Test a weight for admissibility.
    Admissible(AdmissibleArgs),
    /// Run every check and print a readable report with details.
    Report(OutputArgs),
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check to run; repeat for several.
    #[arg(long = "check", value_parser = clap::builder::PossibleValuesParser::new(CHECK_NAMES), required_unless_present = "all")]
    checks: Vec<String>,
    /// Run every check.
    #[arg(long, conflicts_with = "checks")]
    all: bool,
    /// Level index: the family n − 7/2 is examined up to this n.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Largest n for the singular-vector checks.
    #[arg(long = "n-max", default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    n_max: u32,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, value_enum)]
    algebra: Algebra,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, value_enum, default_value_t = Category::O)]
    category: Category,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct AdmissibleArgs {
    #[arg(long, value_enum, default_value_t = Algebra::F4)]
    algebra: Algebra,
    /// Level, e.g. -5/2. Defaults to n − 7/2.
    #[arg(long, allow_hyphen_values = true)]
    level: Option<String>,
    #[arg(long, default_value_t = 1)]
    n: i64,
    /// Finite part in fundamental coordinates, comma separated, e.g. "-3/2,0,0,0".
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    #[value(name = "B4")]
    B4,
    #[value(name = "F4")]
    F4,
}

impl Algebra {
    fn label(self) -> Label {
        match self {
            Algebra::B4 => Label::B4,
            Algebra::F4 => Label::F4,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Category {
    #[value(name = "O")]
    O,
    #[value(name = "dominant")]
    Dominant,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<voakit_core::Error> for Failure {
    fn from(e: voakit_core::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Failure::Runtime(e.to_string()))
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn status_tag(s: Status) -> &'static str {
    match s {
        Status::Pass => "[PASS]",
        Status::Fail => "[FAIL]",
        Status::Skip => "[SKIP]",
    }
}

fn render_reports(reports: &[CheckReport], format: Format, elapsed_ms: u128, verbose: bool) -> String {
    match format {
        Format::Json => {
            let mut v = suite_json(reports);
            v["elapsed_ms"] = json!(elapsed_ms as u64);
            pretty(&v)
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                s.push_str(&format!("{} {} ({} ms)\n", status_tag(r.status), r.check_name, r.elapsed_ms));
                if verbose || r.status == Status::Fail {
                    for line in serde_json::to_string_pretty(&r.details).expect("serializable").lines() {
                        s.push_str("    ");
                        s.push_str(line);
                        s.push('\n');
                    }
                }
            }
            let pass = reports.iter().filter(|r| r.status == Status::Pass).count();
            let fail = reports.iter().filter(|r| r.status == Status::Fail).count();
            s.push_str(&format!("{pass} passed, {fail} failed\n"));
            s
        }
    }
}

fn suite_exit(reports: &[CheckReport]) -> u8 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

fn verify(args: VerifyArgs) -> Result<u8, Failure> {
    let opts = CheckOptions { n: args.n, n_max: args.n_max };
    let start = Instant::now();
    let reports = if args.all {
        run_all(&opts)
    } else {
        args.checks.iter().map(|c| run_check(c, &opts)).collect::<voakit_core::Result<Vec<_>>>()?
    };
    let text = render_reports(&reports, args.output.format, start.elapsed().as_millis(), false);
    emit(&args.output.out, &text)?;
    Ok(suite_exit(&reports))
}

fn report(args: OutputArgs) -> Result<u8, Failure> {
    let start = Instant::now();
    let reports = run_all(&CheckOptions::default());
    let text = render_reports(&reports, args.format, start.elapsed().as_millis(), true);
    emit(&args.out, &text)?;
    Ok(suite_exit(&reports))
}

fn classify(args: ClassifyArgs) -> Result<u8, Failure> {
    let label = args.algebra.label();
    let rs = RootSystem::build(label);
    let level = int(args.n as i64) - q(7, 2);
    let value = match args.category {
        Category::O => {
            let pbw = Pbw::new(gf());
            classify_category_o(&pbw, label, args.n)?.to_json(&rs, &level)
        }
        Category::Dominant => {
            let ws = classify_dominant(&rs, args.n)?;
            json!({
                "algebra": label.name(),
                "level": format_scalar(&level),
                "weights": ws.iter().map(|w| json!({
                    "eps": w.coords().iter().map(format_scalar).collect::<Vec<_>>(),
                    "fund": rs.fund_coords(w).iter().map(format_scalar).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "count": ws.len(),
            })
        }
    };
    let text = match args.output.format {
        Format::Json => pretty(&value),
        Format::Text => {
            let mut s = format!("{} at level {}: {} weights\n", value["algebra"].as_str().unwrap_or(""), value["level"].as_str().unwrap_or(""), value["count"]);
            for w in value["weights"].as_array().into_iter().flatten() {
                let join = |v: &Value| v.as_array().into_iter().flatten().map(|x| x.as_str().unwrap_or("")).collect::<Vec<_>>().join(", ");
                s.push_str(&format!("  eps [{}]  fund [{}]\n", join(&w["eps"]), join(&w["fund"])));
            }
            s
        }
    };
    emit(&args.output.out, &text)?;
    Ok(0)
}

fn parse_fund(s: &str) -> Result<[Scalar; 4], Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(Failure::Usage(format!("--weight needs four comma-separated coordinates, got {s:?}")));
    }
    let mut out: [Scalar; 4] = Default::default();
    for (o, p) in out.iter_mut().zip(parts) {
        *o = parse_scalar(p).map_err(|e| Failure::Usage(e.to_string()))?;
    }
    Ok(out)
}

fn admissible(args: AdmissibleArgs) -> Result<u8, Failure> {
    let rs = RootSystem::build(args.algebra.label());
    let level = match &args.level {
        Some(l) => parse_scalar(l).map_err(|e| Failure::Usage(e.to_string()))?,
        None => int(args.n) - q(7, 2),
    };
    let finite = match &args.weight {
        Some(w) => rs.from_fund(&parse_fund(w)?),
        None => Default::default(),
    };
    let lam = AffineWeight::at_level(level, finite);
    let a = is_admissible(&lam, &rs)?;
    let value = json!({
        "algebra": rs.label().name(),
        "weight": lam.to_json(),
        "admissible": a.admissible,
        "regular_dominant": a.regular_dominant,
        "integral_rank": a.integral_rank,
        "simple_coroots": a.simple_coroots.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    });
    let text = match args.output.format {
        Format::Json => pretty(&value),
        Format::Text => {
            let mut s = format!("{lam}: {}\n", if a.admissible { "admissible" } else { "not admissible" });
            s.push_str(&format!("  regular dominant: {}\n  integral rank: {}\n", a.regular_dominant, a.integral_rank));
            for c in &a.simple_coroots {
                s.push_str(&format!("  {c}\n"));
            }
            s
        }
    };
    emit(&args.output.out, &text)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Classify(a) => classify(a),
        Command::Admissible(a) => admissible(a),
        Command::Report(a) => report(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
