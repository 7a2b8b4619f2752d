use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use divtower::checkers::{run_checker, CheckOptions, Verdict, CHECKERS};
use divtower::curve::FunctionElement;
use divtower::divisor::{alpha, Divisor};
use divtower::ideals::{
    boolean_dictionary, radical, radical_matches_common_zeros, two_generators, BoolOp, FgIdeal, RadicalIdeal,
};
use divtower::sampling::Pools;
use divtower::tower::Tower;
use divtower::Error;

#[derive(Parser)]
#[command(
    name = "divtower",
    version,
    about = "Exact divisor and Picard arithmetic on towers of curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Tower description (JSON).
    #[arg(long)]
    tower: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Overrides the tower's torsion search bound.
    #[arg(long)]
    torsion_bound: Option<u32>,
    /// Writes the JSON report here instead of stdout.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Runs a checker pipeline on a tower.
    Check {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(CHECKERS))]
        checker: String,
        #[command(flatten)]
        common: Common,
    },
    /// Ideal-theoretic dictionary computations.
    Ideal {
        #[command(subcommand)]
        command: IdealCommand,
    },
    /// Interpretation constructions.
    Interpret {
        #[command(subcommand)]
        command: InterpretCommand,
    },
}

#[derive(Subcommand)]
enum IdealCommand {
    /// Two generators `f, g` with `min((f), (g)) = d` for an effective divisor.
    TwoGen {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        level: String,
        /// Divisor literal, e.g. `E1: {(0, 0):1}`.
        #[arg(long)]
        divisor: String,
    },
    /// The radical of `(f, g)` as a finite point set.
    Radical {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        level: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Meet, join or difference by point sets and again by ideals.
    BoolCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        level: String,
        #[arg(long, value_enum)]
        op: Op,
        /// Divisor literal whose support is the left operand.
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Meet,
    Join,
    Difference,
}

#[derive(Subcommand)]
enum InterpretCommand {
    /// Rebuilds `Q` on the plane spanned by the classes of two points.
    Field {
        /// Weierstrass equation over `Q`, e.g. `x^2 = t^3 - 2`.
        #[arg(long)]
        curve: String,
        /// Two points, as repeated flags or separated by `;`.
        #[arg(long, required = true)]
        points: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        torsion_bound: Option<u32>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

enum Failure {
    Config(Error),
    Other(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::Config(_)
            | Error::InvalidLevel { .. }
            | Error::InvalidCover { .. }
            | Error::InvalidField(_) => Failure::Config(e),
            e => Failure::Other(e),
        }
    }
}

fn emit(out: &Option<PathBuf>, body: &str, summary: &[String]) -> Result<(), Failure> {
    match out {
        Some(p) => {
            std::fs::write(p, body)
                .map_err(|e| Failure::Config(Error::Config(format!("cannot write {}: {e}", p.display()))))?;
            for l in summary {
                println!("{l}");
            }
        }
        None => print!("{body}"),
    }
    Ok(())
}

fn report_json(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("json") + "\n"
}

fn check(checker: &str, common: &Common) -> Result<Verdict, Failure> {
    let tower = Tower::load(&common.tower)?;
    let opts = CheckOptions {
        seed: common.seed,
        torsion_bound: common.torsion_bound,
    };
    let report = run_checker(checker, &tower, &opts)?;
    let mut lines = report.summary_lines();
    lines.push(format!("verdict: {:?}", report.verdict).to_lowercase());
    emit(&common.json, &report.to_json(), &lines)?;
    Ok(report.verdict)
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn ideal(cmd: &IdealCommand) -> Result<Verdict, Failure> {
    match cmd {
        IdealCommand::TwoGen { common, level, divisor } => {
            let tower = Tower::load(&common.tower)?;
            let level = tower.level(level)?;
            let d = Divisor::parse(&level, divisor)?;
            let (f, g) = two_generators(&level, &d)?;
            let a = alpha(&f, &g)?;
            let ok = a == d;
            let body = report_json(json!({
                "divisor": d.to_string(),
                "f": f.to_string(),
                "g": g.to_string(),
                "min_divisor": a.to_string(),
                "verified": ok,
            }));
            emit(
                &common.json,
                &body,
                &[
                    format!("f = {f}"),
                    format!("g = {g}"),
                    format!("min((f), (g)) = d: {ok}"),
                ],
            )?;
            Ok(verdict(ok))
        }
        IdealCommand::Radical { common, level, f, g } => {
            let tower = Tower::load(&common.tower)?;
            let level = tower.level(level)?;
            let i = FgIdeal::new(FunctionElement::parse(&level, f)?, FunctionElement::parse(&level, g)?)?;
            let r = radical(&i)?;
            let pools = Pools::build(&tower)?;
            let ok = radical_matches_common_zeros(&i, pools.points(level.id()))?;
            let body = report_json(json!({
                "f": f,
                "g": g,
                "radical": r.to_string(),
                "common_zeros_agree_on_pool": ok,
            }));
            emit(
                &common.json,
                &body,
                &[format!("radical = {r}"), format!("common zeros agree: {ok}")],
            )?;
            Ok(verdict(ok))
        }
        IdealCommand::BoolCheck {
            common,
            level,
            op,
            left,
            right,
        } => {
            let tower = Tower::load(&common.tower)?;
            let level = tower.level(level)?;
            let set = |s: &str| -> Result<RadicalIdeal, Error> {
                RadicalIdeal::new(&level, Divisor::parse(&level, s)?.support())
            };
            let op = match op {
                Op::Meet => BoolOp::Meet,
                Op::Join => BoolOp::Join,
                Op::Difference => BoolOp::Difference,
            };
            let chk = boolean_dictionary(op, &set(left)?, &set(right)?)?;
            let body = serde_json::to_string_pretty(&chk).expect("json") + "\n";
            emit(
                &common.json,
                &body,
                &[
                    format!("set route: {}", chk.set_route),
                    format!("ideal route: {}", chk.ideal_route),
                    format!("agree: {}", chk.agree),
                ],
            )?;
            Ok(verdict(chk.agree))
        }
    }
}

fn interpret(cmd: &InterpretCommand) -> Result<Verdict, Failure> {
    let InterpretCommand::Field {
        curve,
        points,
        seed,
        torsion_bound,
        json: out,
    } = cmd;
    let pts: Vec<&str> = points
        .iter()
        .flat_map(|p| p.split(';'))
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .collect();
    if pts.len() != 2 {
        return Err(Failure::Config(Error::Config(format!(
            "expected two points, got {}",
            pts.len()
        ))));
    }
    let config = json!({
        "name": "interpret",
        "levels": [
            {"id": "L", "kind": "base"},
            {"id": "E", "kind": "plane", "equation": curve, "parent": "L"}
        ],
        "points": {
            "A1": {"level": "E", "at": pts[0]},
            "A2": {"level": "E", "at": pts[1]}
        },
        "field_basis": {"level": "E", "a1": "A1", "a2": "A2"}
    });
    let tower = Tower::from_json(&serde_json::to_string_pretty(&config).expect("json"))?;
    let opts = CheckOptions {
        seed: *seed,
        torsion_bound: *torsion_bound,
    };
    let report = run_checker("field-reconstruct", &tower, &opts)?;
    let mut lines = report.summary_lines();
    lines.push(format!("verdict: {:?}", report.verdict).to_lowercase());
    emit(out, &report.to_json(), &lines)?;
    Ok(report.verdict)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match &cli.command {
        Command::Check { checker, common } => check(checker, common),
        Command::Ideal { command } => ideal(command),
        Command::Interpret { command } => interpret(command),
    };
    match r {
        Ok(v) => ExitCode::from(v.exit_code() as u8),
        Err(Failure::Config(e)) => {
            eprintln!("config error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
