use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use maxseg_core::lattice::{parse_rational, Rational, ShapeSpec};
use maxseg_core::multigrid::{
    default_jitter, geometric_ladder, parse_checks, report_bounds, run_experiment, write_csv,
    ExperimentConfig, ExperimentError,
};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Shape {
    Disk,
    Ellipse,
}

/// Digitize a disk or ellipse over a ladder of resolutions and tabulate its
/// convex digital polygon, maximal segments and curvature estimates.
#[derive(Debug, Parser)]
#[command(name = "maxseg", version)]
struct Args {
    #[arg(long, value_enum, default_value = "disk")]
    shape: Shape,
    /// Radius (x radius for an ellipse). Accepts 1, 0.6 or 3/5.
    #[arg(long, default_value = "1")]
    radius: String,
    /// y radius of an ellipse; defaults to --radius.
    #[arg(long)]
    radius2: Option<String>,
    #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
    center: String,
    #[arg(long)]
    m_min: i64,
    #[arg(long)]
    m_max: i64,
    #[arg(long, default_value_t = 10)]
    steps: usize,
    /// Comma separated: cdp, lemma1, prop4, prop5, thm2, thm3, thm4, all, none...
    #[arg(long, default_value = "all")]
    checks: String,
    /// Compare against brute-force maximal segments for m up to this value.
    #[arg(long, default_value_t = 0)]
    oracle_max_m: i64,
    /// CSV destination; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Center offsets X,Y, one run per offset at every resolution.
    #[arg(long, num_args = 1.., allow_hyphen_values = true)]
    jitter: Vec<String>,
}

fn pair(text: &str) -> Result<(Rational, Rational), String> {
    let (x, y) = text.split_once(',').ok_or_else(|| format!("expected X,Y, got {text:?}"))?;
    Ok((parse_rational(x).map_err(|e| e.to_string())?, parse_rational(y).map_err(|e| e.to_string())?))
}

fn config(args: &Args) -> Result<ExperimentConfig, String> {
    let radius = parse_rational(&args.radius).map_err(|e| e.to_string())?;
    let center = pair(&args.center)?;
    let shape = match args.shape {
        Shape::Disk => {
            if args.radius2.is_some() {
                return Err("--radius2 only applies to ellipses".into());
            }
            ShapeSpec::disk(center, radius)
        }
        Shape::Ellipse => {
            let r2 = args.radius2.as_deref().map(parse_rational).transpose().map_err(|e| e.to_string())?;
            ShapeSpec::ellipse(center, radius, r2.unwrap_or(radius))
        }
    }
    .map_err(|e| e.to_string())?;
    let ladder = geometric_ladder(args.m_min, args.m_max, args.steps).map_err(|e| e.to_string())?;
    let mut cfg = ExperimentConfig::new(shape, ladder);
    cfg.checks = parse_checks(&args.checks).map_err(|e| e.to_string())?;
    cfg.oracle_max_m = args.oracle_max_m;
    cfg.out = args.out.clone();
    cfg.jitter = if args.jitter.is_empty() {
        default_jitter()
    } else {
        args.jitter.iter().map(|j| pair(j)).collect::<Result<_, _>>()?
    };
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let cfg = match config(&args) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let records = match run_experiment(&cfg) {
        Ok(records) => records,
        Err(e @ ExperimentError::CheckFailed { .. }) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
        Err(e @ (ExperimentError::InvalidArgument(_) | ExperimentError::Io(_))) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if cfg.out.is_none() {
        let stdout = std::io::stdout();
        if let Err(e) = write_csv(stdout.lock(), &records) {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    if let Ok(report) = report_bounds(&records) {
        let mut err = std::io::stderr();
        let _ = write!(err, "{report}");
    }
    ExitCode::SUCCESS
}
