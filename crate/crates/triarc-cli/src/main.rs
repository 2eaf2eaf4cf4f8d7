//! Command-line surface of the planner.
//!
//! Exit codes: 0 success, 2 degenerate input, 3 unreachable length,
//! 4 nonexistent middle-circle locus, 64 usage error.

use triarc_cli::{args, document, render};

use args::{Args, UsageError, USAGE};
use document::TrajectoryDocument;
use std::f64::consts::FRAC_PI_2;
use std::process::ExitCode;
use triarc::{
    discontinuities, oracle, plan, plan_with_radii, reachable_lengths, shortest, Branch,
    CccTrajectory, Error, OrientedPoint,
};

const EXIT_DEGENERATE: u8 = 2;
const EXIT_UNREACHABLE: u8 = 3;
const EXIT_NO_LOCUS: u8 = 4;
const EXIT_USAGE: u8 = 64;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let args = match args::parse(&argv) {
        Ok(args) => args,
        Err(err) => return usage_exit(&err),
    };
    let run = match args.command.as_str() {
        "shortest" => cmd_shortest(&args),
        "plan" => cmd_plan(&args),
        "reachable" => cmd_reachable(&args),
        "sweep" => cmd_sweep(&args),
        "validate" => cmd_validate(&args),
        _ => unreachable!("unknown commands are rejected by the parser"),
    };
    match run {
        Ok(code) => code,
        Err(CmdError::Usage(err)) => usage_exit(&err),
        Err(CmdError::Planner(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                Error::DegeneratePair => EXIT_DEGENERATE,
                Error::UnreachableLength { .. } | Error::BelowMinimum { .. } => EXIT_UNREACHABLE,
                Error::NoHyperbola { .. } => EXIT_NO_LOCUS,
                _ => 1,
            })
        }
        Err(CmdError::Io(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn usage_exit(err: &UsageError) -> ExitCode {
    eprintln!("error: {err}\n\n{USAGE}");
    ExitCode::from(EXIT_USAGE)
}

enum CmdError {
    Usage(UsageError),
    Planner(Error),
    Io(std::io::Error),
}

impl From<UsageError> for CmdError {
    fn from(e: UsageError) -> Self {
        CmdError::Usage(e)
    }
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        CmdError::Planner(e)
    }
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError::Io(e)
    }
}

fn emit_outputs(
    args: &Args,
    trajectory: &CccTrajectory,
    a: &OrientedPoint,
    b: &OrientedPoint,
    r_min: f64,
    requested: Option<f64>,
) -> Result<(), CmdError> {
    let doc = TrajectoryDocument::new(trajectory, a, b, r_min, requested);
    let json = document::to_json_string(&doc);
    if let Some(path) = &args.json {
        std::fs::write(path, &json)?;
    } else {
        println!("{json}");
    }
    if let Some(path) = &args.csv {
        std::fs::write(path, render::pose_csv(trajectory))?;
    }
    if let Some(path) = &args.svg {
        std::fs::write(path, render::svg(trajectory))?;
    }
    Ok(())
}

fn cmd_shortest(args: &Args) -> Result<ExitCode, CmdError> {
    let (a, b) = args.oriented_pair()?;
    let r_min = args.r_min()?;
    let sol = shortest(&a, &b, r_min)?;
    eprintln!("word {}  length {:.6} m", sol.word, sol.length);
    let trajectory = CccTrajectory::from_dubins(&sol, r_min);
    emit_outputs(args, &trajectory, &a, &b, r_min, None)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_plan(args: &Args) -> Result<ExitCode, CmdError> {
    let (a, b) = args.oriented_pair()?;
    let r_min = args.r_min()?;
    let l_o = args
        .length
        .ok_or_else(|| UsageError("--length is required for plan".into()))?;
    let trajectory = match (args.r1, args.r3) {
        (None, None) => plan(&a, &b, r_min, l_o)?,
        (Some(r1), Some(r3)) => plan_with_radii(&a, &b, r1, r3, r_min, l_o)?,
        _ => {
            return Err(UsageError("--r1 and --r3 must be given together".into()).into());
        }
    };
    eprintln!(
        "word {}  length {:.6} m  changeovers {}",
        trajectory.word,
        trajectory.length,
        trajectory.changeover_count()
    );
    emit_outputs(args, &trajectory, &a, &b, r_min, Some(l_o))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_reachable(args: &Args) -> Result<ExitCode, CmdError> {
    let (a, b) = args.oriented_pair()?;
    let r_min = args.r_min()?;
    let set = reachable_lengths(&a, &b, r_min)?;
    println!("{set}");
    if let Some(path) = &args.json {
        let intervals: Vec<serde_json::Value> = set
            .intervals
            .iter()
            .map(|iv| {
                serde_json::json!({
                    "lo": iv.lo,
                    "hi": if iv.hi.is_finite() { Some(iv.hi) } else { None },
                    "lo_closed": iv.lo_closed,
                    "hi_closed": iv.hi_closed,
                })
            })
            .collect();
        std::fs::write(
            path,
            serde_json::to_string_pretty(&serde_json::json!({ "intervals": intervals }))
                .expect("length set to JSON"),
        )?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_sweep(args: &Args) -> Result<ExitCode, CmdError> {
    let (a, b) = args.oriented_pair()?;
    let _ = args.r_min()?;
    let (Some(r1), Some(r3)) = (args.r1, args.r3) else {
        return Err(UsageError("sweep requires --r1 and --r3".into()).into());
    };
    let grid = args.grid.unwrap_or(1024);
    if grid < 16 {
        return Err(UsageError("--grid must be at least 16".into()).into());
    }
    let mut rows: Vec<(f64, String)> = Vec::new();
    for pole in [FRAC_PI_2, -FRAC_PI_2] {
        match triarc::csc_limit(&a, &b, r1, r3, pole) {
            Ok(t) => rows.push((
                pole,
                format!("{pole:.9},inf,{:.9},{},pole", t.length, t.word),
            )),
            Err(_) => rows.push((pole, format!("{pole:.9},nan,nan,,pole"))),
        }
    }
    for branch in [Branch::Right, Branch::Left] {
        for d in discontinuities(&a, &b, r1, r3, branch)? {
            let site = match d.site {
                triarc::DiscontinuitySite::Start => "jump_start",
                triarc::DiscontinuitySite::End => "jump_end",
            };
            rows.push((
                d.k,
                format!("{:.9},nan,nan,,{site}:{:.9}", d.k, d.magnitude),
            ));
        }
        let (lo, hi) = branch.interval();
        let (lo, hi) = (lo + 2e-6, hi - 2e-6);
        for i in 0..grid {
            let k = lo + (hi - lo) * i as f64 / (grid - 1) as f64;
            if let Ok(t) = triarc::build_trajectory(&a, &b, r1, r3, k) {
                let r2 = t.radii[1];
                let r2s = if r2.is_finite() {
                    format!("{r2:.9}")
                } else {
                    "inf".to_string()
                };
                rows.push((k, format!("{k:.9},{r2s},{:.9},{},", t.length, t.word)));
            }
        }
    }
    rows.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut csv = String::from("k,r2,length,word,flag\n");
    for (_, row) in rows {
        csv.push_str(&row);
        csv.push('\n');
    }
    if let Some(path) = &args.csv {
        std::fs::write(path, csv)?;
    } else {
        print!("{csv}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_validate(args: &Args) -> Result<ExitCode, CmdError> {
    let path = args
        .json
        .as_ref()
        .ok_or_else(|| UsageError("validate requires --json PATH".into()))?;
    let text = std::fs::read_to_string(path)?;
    let doc = document::from_json_str(&text)
        .map_err(|e| UsageError(format!("cannot parse document: {e}")))?;
    let (a, b) = doc.oriented_points()?;
    let trajectory = doc.rebuild()?;
    let samples = args.samples.unwrap_or(256).max(64);
    let tolerances = match args.tol {
        Some(tol) => triarc::oracle::Tolerances {
            position: tol,
            heading: tol,
            ..Default::default()
        },
        None => Default::default(),
    };
    let report = oracle::validate_with(
        &trajectory,
        &a,
        &b,
        doc.meta.r_min,
        samples,
        &tolerances,
    );
    println!(
        "pass {}  endpoint_pos {:.3e}  endpoint_heading {:.3e}  max_curvature {:.6}  \
         length_analytic {:.9}  length_polyline {:.9}",
        report.pass,
        report.endpoint_pos_err,
        report.endpoint_heading_err,
        report.max_curvature,
        report.length_analytic,
        report.length_polyline,
    );
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
