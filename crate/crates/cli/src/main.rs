//! `arguesia`: generate instances, verify theorems, replay proofs and draw
//! figures. Exit status is 0 when every verdict holds, 1 when some verdict
//! is false, and 2 on a usage or configuration error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use arguesia::batch::run_seeds;
use arguesia::instance::{generate_verified, replay_trace, InstanceConfig, Kind, DEFAULT_BOUNDS};
use arguesia::projective::{AffineChart, Param};
use arguesia::svg::render_svg;
use arguesia::theorems::harmonic_conjugate;
use arguesia::Rat;
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "arguesia", version, about = "Exact verification of the classical involution theorems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SeedArg {
    /// Instance seed; defaults to $ARGUESIA_SEED, then 0.
    #[arg(long, env = "ARGUESIA_SEED")]
    seed: Option<u64>,
}

impl SeedArg {
    fn value(&self) -> u64 {
        self.seed.unwrap_or(0)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate instances and check every claim of a theorem.
    Verify {
        /// Required unless --config names it.
        kind: Option<Kind>,
        /// JSON instance configuration (kind, seed, bounds, point overrides);
        /// command-line options override its seed and bounds when given.
        #[arg(long, conflicts_with = "trials")]
        config: Option<PathBuf>,
        #[command(flatten)]
        seed: SeedArg,
        /// Number of consecutive seeds to run.
        #[arg(long, default_value_t = 1)]
        trials: u64,
        /// Largest numerator or denominator drawn.
        #[arg(long, default_value_t = DEFAULT_BOUNDS)]
        bounds: u32,
        #[arg(long)]
        json: bool,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Replay a proof step by step.
    Replay {
        kind: Kind,
        #[command(flatten)]
        seed: SeedArg,
        #[arg(long, default_value_t = DEFAULT_BOUNDS)]
        bounds: u32,
        #[arg(long)]
        json: bool,
    },
    /// Direct constructions on explicit data.
    #[command(subcommand)]
    Construct(Construct),
    /// Draw a generated instance as SVG.
    Figure {
        kind: Kind,
        #[command(flatten)]
        seed: SeedArg,
        #[arg(long, default_value_t = DEFAULT_BOUNDS)]
        bounds: u32,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Harmonic conjugate of D with respect to B, C, as coordinates on one line.
    Harmonic {
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        b: Rat,
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        c: Rat,
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        d: Rat,
    },
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    Rat::parse(s).map_err(|e| e.to_string())
}

enum Failure {
    Verdict,
    Config(String),
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Config(format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Failure::Config(e.to_string()))
        }
    }
}

fn config_err(e: impl ToString) -> Failure {
    Failure::Config(e.to_string())
}

fn json(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn verify_one(cfg: &InstanceConfig, as_json: bool, output: Option<&PathBuf>) -> Result<(), Failure> {
    let (_, report) = generate_verified(cfg).map_err(config_err)?;
    let text = if as_json { json(&report) } else { format!("{report}\n") };
    emit(&text, output)?;
    if report.verdict { Ok(()) } else { Err(Failure::Verdict) }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Verify { kind, config, seed, trials, bounds, json: as_json, output } => {
            if trials == 0 {
                return Err(config_err("--trials must be at least 1"));
            }
            if let Some(path) = config {
                let text = fs::read_to_string(&path).map_err(|e| config_err(format!("{}: {e}", path.display())))?;
                let mut cfg: InstanceConfig = serde_json::from_str(&text).map_err(config_err)?;
                if kind.is_some_and(|k| k != cfg.kind) {
                    return Err(config_err("kind argument disagrees with the configuration file"));
                }
                if let Some(v) = seed.seed {
                    cfg.seed = v;
                }
                if bounds != DEFAULT_BOUNDS {
                    cfg.bounds = bounds;
                }
                return verify_one(&cfg, as_json, output.as_ref());
            }
            let kind = kind.ok_or_else(|| config_err("a theorem kind or --config is required"))?;
            if trials == 1 {
                let cfg = InstanceConfig::new(kind, seed.value()).with_bounds(bounds);
                return verify_one(&cfg, as_json, output.as_ref());
            }
            let sweep = run_seeds(kind, seed.value(), trials, bounds);
            let text = if as_json {
                json(&sweep)
            } else {
                let mut s = String::new();
                for o in &sweep.outcomes {
                    let status = match (&o.error, o.verdict) {
                        (Some(e), _) => format!("error: {e}"),
                        (None, true) => "✓".into(),
                        (None, false) => "✗".into(),
                    };
                    s += &format!("seed {}: {status}\n", o.seed);
                }
                s += &format!(
                    "{kind}: {} of {trials} verified, {} false, {} errors\n",
                    sweep.passed, sweep.failed, sweep.errors
                );
                s
            };
            emit(&text, output.as_ref())?;
            if sweep.errors > 0 {
                Err(Failure::Config(format!("{} seeds could not be generated", sweep.errors)))
            } else if sweep.failed > 0 {
                Err(Failure::Verdict)
            } else {
                Ok(())
            }
        }
        Command::Replay { kind, seed, bounds, json: as_json } => {
            let cfg = InstanceConfig::new(kind, seed.value()).with_bounds(bounds);
            let trace = replay_trace(&cfg).map_err(config_err)?;
            let text = if as_json { json(&trace) } else { format!("{trace}\n") };
            emit(&text, None)?;
            if trace.verdict { Ok(()) } else { Err(Failure::Verdict) }
        }
        Command::Construct(Construct::Harmonic { b, c, d }) => {
            let axis = AffineChart::x_axis();
            let at = |t: Rat| axis.point(&Param::Finite(t));
            let f = harmonic_conjugate(&at(b), &at(c), &at(d)).map_err(config_err)?;
            let x = axis.coordinate(&f).map_err(config_err)?;
            emit(&format!("{x}\n"), None)
        }
        Command::Figure { kind, seed, bounds, output } => {
            let cfg = InstanceConfig::new(kind, seed.value()).with_bounds(bounds);
            let (inst, report) = generate_verified(&cfg).map_err(config_err)?;
            let svg = render_svg(&inst, Some(&report)).map_err(config_err)?;
            emit(&svg, Some(&output))?;
            if report.verdict { Ok(()) } else { Err(Failure::Verdict) }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict) => ExitCode::from(1),
        Err(Failure::Config(msg)) => {
            eprintln!("arguesia: {msg}");
            ExitCode::from(2)
        }
    }
}
