//! Hand-rolled flag parsing for the planner CLI.

use triarc::OrientedPoint;

#[derive(Debug, Default, Clone)]
pub struct Args {
    pub command: String,
    pub a: Option<(f64, f64, f64)>,
    pub b: Option<(f64, f64, f64)>,
    pub r_min: Option<f64>,
    pub length: Option<f64>,
    pub r1: Option<f64>,
    pub r3: Option<f64>,
    pub json: Option<String>,
    pub csv: Option<String>,
    pub svg: Option<String>,
    pub grid: Option<usize>,
    pub tol: Option<f64>,
    pub samples: Option<usize>,
    pub degrees: bool,
}

pub const USAGE: &str = "\
triarc — fixed-length curvature-bounded trajectory planner

USAGE:
    triarc <COMMAND> [FLAGS]

COMMANDS:
    shortest    shortest path between two oriented points
    plan        trajectory of a requested length (optionally fixed --r1/--r3)
    reachable   the set of reachable lengths
    sweep       CSV sweep of the locus parameter for fixed --r1/--r3
    validate    re-check a saved trajectory document

FLAGS:
    --a X,Y,THETA      start oriented point
    --b X,Y,THETA      goal oriented point
    --rmin R           minimum turn radius (meters)
    --length L         requested trajectory length (plan)
    --r1 R / --r3 R    signed terminal radii (plan with fixed radii, sweep)
    --grid N           sweep grid points per branch (default 1024, min 16)
    --tol EPS          validation tolerance override
    --samples N        validation samples per arc (default 256)
    --degrees          headings given in degrees instead of radians
    --json PATH        write (or for validate: read) a trajectory document
    --csv PATH         write CSV output
    --svg PATH         write an SVG rendering
";

#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn parse_triple(text: &str, flag: &str) -> Result<(f64, f64, f64), UsageError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(UsageError(format!(
            "{flag} expects X,Y,THETA; got `{text}`"
        )));
    }
    let mut vals = [0.0; 3];
    for (v, p) in vals.iter_mut().zip(&parts) {
        *v = p
            .trim()
            .parse::<f64>()
            .map_err(|_| UsageError(format!("{flag}: `{p}` is not a number")))?;
    }
    Ok((vals[0], vals[1], vals[2]))
}

pub fn parse(argv: &[String]) -> Result<Args, UsageError> {
    let mut args = Args {
        command: argv
            .first()
            .cloned()
            .ok_or_else(|| UsageError("missing command".into()))?,
        ..Args::default()
    };
    if !matches!(
        args.command.as_str(),
        "shortest" | "plan" | "reachable" | "sweep" | "validate"
    ) {
        return Err(UsageError(format!("unknown command `{}`", args.command)));
    }
    let mut it = argv[1..].iter();
    while let Some(flag) = it.next() {
        let mut value = |name: &str| -> Result<&String, UsageError> {
            it.next()
                .ok_or_else(|| UsageError(format!("{name} expects a value")))
        };
        match flag.as_str() {
            "--a" => args.a = Some(parse_triple(value("--a")?, "--a")?),
            "--b" => args.b = Some(parse_triple(value("--b")?, "--b")?),
            "--rmin" => args.r_min = Some(parse_num(value("--rmin")?, "--rmin")?),
            "--length" => args.length = Some(parse_num(value("--length")?, "--length")?),
            "--r1" => args.r1 = Some(parse_num(value("--r1")?, "--r1")?),
            "--r3" => args.r3 = Some(parse_num(value("--r3")?, "--r3")?),
            "--tol" => args.tol = Some(parse_num(value("--tol")?, "--tol")?),
            "--grid" => {
                args.grid = Some(
                    value("--grid")?
                        .parse::<usize>()
                        .map_err(|_| UsageError("--grid expects an integer".into()))?,
                )
            }
            "--samples" => {
                args.samples = Some(
                    value("--samples")?
                        .parse::<usize>()
                        .map_err(|_| UsageError("--samples expects an integer".into()))?,
                )
            }
            "--json" => args.json = Some(value("--json")?.clone()),
            "--csv" => args.csv = Some(value("--csv")?.clone()),
            "--svg" => args.svg = Some(value("--svg")?.clone()),
            "--degrees" => args.degrees = true,
            other => return Err(UsageError(format!("unknown flag `{other}`"))),
        }
    }
    Ok(args)
}

fn parse_num(text: &str, flag: &str) -> Result<f64, UsageError> {
    text.parse::<f64>()
        .map_err(|_| UsageError(format!("{flag}: `{text}` is not a number")))
}

impl Args {
    pub fn oriented_pair(&self) -> Result<(OrientedPoint, OrientedPoint), UsageError> {
        let to_op = |t: (f64, f64, f64), name: &str| -> Result<OrientedPoint, UsageError> {
            let heading = if self.degrees { t.2.to_radians() } else { t.2 };
            OrientedPoint::from_parts(t.0, t.1, heading)
                .map_err(|e| UsageError(format!("{name}: {e}")))
        };
        let a = self
            .a
            .ok_or_else(|| UsageError("--a is required".into()))
            .and_then(|t| to_op(t, "--a"))?;
        let b = self
            .b
            .ok_or_else(|| UsageError("--b is required".into()))
            .and_then(|t| to_op(t, "--b"))?;
        Ok((a, b))
    }

    pub fn r_min(&self) -> Result<f64, UsageError> {
        let r = self
            .r_min
            .ok_or_else(|| UsageError("--rmin is required".into()))?;
        if r <= 0.0 || !r.is_finite() {
            return Err(UsageError(format!("--rmin must be positive, got {r}")));
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(parts: &[&str]) -> Vec<String> {
        parts.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_plan_flags() {
        let args = parse(&argv(&[
            "plan", "--a", "-3,1,0.785", "--b", "0,0,0", "--rmin", "1", "--length", "7.0",
        ]))
        .unwrap();
        assert_eq!(args.command, "plan");
        assert_eq!(args.a, Some((-3.0, 1.0, 0.785)));
        assert_eq!(args.length, Some(7.0));
        let (a, _) = args.oriented_pair().unwrap();
        assert!((a.heading - 0.785).abs() < 1e-12);
    }

    #[test]
    fn rejects_malformed_triple() {
        assert!(parse(&argv(&["plan", "--a", "1,2"])).is_err());
        assert!(parse(&argv(&["plan", "--a", "1,2,zebra"])).is_err());
        assert!(parse(&argv(&["frobnicate"])).is_err());
        assert!(parse(&argv(&["plan", "--mystery", "1"])).is_err());
    }

    #[test]
    fn degrees_flag_converts() {
        let args = parse(&argv(&[
            "shortest", "--a", "0,0,90", "--b", "1,1,0", "--rmin", "1", "--degrees",
        ]))
        .unwrap();
        let (a, _) = args.oriented_pair().unwrap();
        assert!((a.heading - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }
}
