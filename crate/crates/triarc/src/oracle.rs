//! Brute-force validation of planned trajectories, working only from
//! sampled points: polyline length sums, three-point curvature estimates
//! and finite-difference continuity checks. It never consults the
//! tangency or changeover formulas it is judging.

use crate::construction::CccTrajectory;
use crate::error::Error;
use crate::geometry::{wrap_angle, OrientedPoint, Pose};
use crate::hyperbola::Branch;
use crate::vec2::Vec2;
use std::f64::consts::FRAC_PI_2;

/// Tolerances applied by [`validate`].
#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    /// Endpoint and joint position error, meters.
    pub position: f64,
    /// Endpoint and joint heading error, radians.
    pub heading: f64,
    /// Relative slack on the curvature bound.
    pub curvature: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            position: 1e-9,
            heading: 1e-9,
            curvature: 1e-4,
        }
    }
}

/// Outcome of sampling-based validation of one trajectory.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub endpoint_pos_err: f64,
    pub endpoint_heading_err: f64,
    /// Heading mismatch at each changeover.
    pub joint_heading_errs: Vec<f64>,
    /// Position gap at each changeover.
    pub joint_pos_errs: Vec<f64>,
    /// Largest three-point curvature estimate away from the joints, 1/m.
    pub max_curvature: f64,
    pub length_analytic: f64,
    pub length_polyline: f64,
    pub pass: bool,
}

/// Curvature of the circle through three points; 0 for collinear triples.
fn circumscribed_curvature(p: Vec2, q: Vec2, r: Vec2) -> f64 {
    let a = p.distance(q);
    let b = q.distance(r);
    let c = p.distance(r);
    let cross = (q - p).cross(r - p);
    let denom = a * b * c;
    if denom == 0.0 {
        0.0
    } else {
        2.0 * cross.abs() / denom
    }
}

/// Samples every arc and checks the feasibility definition: unit-speed
/// consistency of the polyline, the curvature bound, endpoint and joint
/// continuity, and agreement of polyline and analytic lengths.
pub fn validate(
    trajectory: &CccTrajectory,
    a: &OrientedPoint,
    b: &OrientedPoint,
    r_min: f64,
    n_samples: usize,
) -> ValidationReport {
    validate_with(trajectory, a, b, r_min, n_samples, &Tolerances::default())
}

pub fn validate_with(
    trajectory: &CccTrajectory,
    a: &OrientedPoint,
    b: &OrientedPoint,
    r_min: f64,
    n_samples: usize,
    tol: &Tolerances,
) -> ValidationReport {
    assert!(n_samples >= 64, "need at least 64 samples per arc");
    let sampled: Vec<Vec<Pose>> = trajectory
        .arcs
        .iter()
        .map(|arc| arc.sample(n_samples))
        .collect();

    let first = sampled.first().and_then(|s| s.first()).expect("samples");
    let last = sampled.last().and_then(|s| s.last()).expect("samples");
    let endpoint_pos_err = first
        .position
        .distance(a.position)
        .max(last.position.distance(b.position));
    let endpoint_heading_err = wrap_angle(first.heading - a.heading)
        .abs()
        .max(wrap_angle(last.heading - b.heading).abs());

    let mut joint_heading_errs = Vec::new();
    let mut joint_pos_errs = Vec::new();
    for w in sampled.windows(2) {
        let end = w[0].last().expect("samples");
        let begin = w[1].first().expect("samples");
        joint_pos_errs.push(end.position.distance(begin.position));
        joint_heading_errs.push(wrap_angle(end.heading - begin.heading).abs());
    }

    // Curvature from circumscribed circles of consecutive triples; joints
    // are excluded because curvature is discontinuous there by design.
    let mut max_curvature: f64 = 0.0;
    let mut length_polyline = 0.0;
    let mut poly_ok = true;
    for (arc, poses) in trajectory.arcs.iter().zip(&sampled) {
        let mut arc_poly = 0.0;
        for w in poses.windows(2) {
            arc_poly += w[0].position.distance(w[1].position);
        }
        length_polyline += arc_poly;
        // chord sums converge to the arc length at second order
        let budget = 10.0 * arc.length() / (n_samples as f64 * n_samples as f64);
        if (arc_poly - arc.length()).abs() > budget.max(1e-12) {
            poly_ok = false;
        }
        for w in poses.windows(3) {
            // Triples tighter than the rounding noise of the coordinate
            // magnitude give meaningless circumcircles; skip them.
            let scale = w[1].position.norm().max(1.0);
            let chord_floor = (f64::EPSILON * scale * 1e6).sqrt();
            if w[0].position.distance(w[1].position) < chord_floor
                || w[1].position.distance(w[2].position) < chord_floor
            {
                continue;
            }
            max_curvature = max_curvature.max(circumscribed_curvature(
                w[0].position,
                w[1].position,
                w[2].position,
            ));
        }
    }

    let length_analytic = trajectory.length;
    let pass = endpoint_pos_err <= tol.position
        && endpoint_heading_err <= tol.heading
        && joint_pos_errs.iter().all(|e| *e <= tol.position.max(1e-9))
        && joint_heading_errs.iter().all(|e| *e <= tol.heading)
        && max_curvature <= (1.0 + tol.curvature) / r_min
        && poly_ok;
    ValidationReport {
        endpoint_pos_err,
        endpoint_heading_err,
        joint_heading_errs,
        joint_pos_errs,
        max_curvature,
        length_analytic,
        length_polyline,
        pass,
    }
}

/// Minimum trajectory length over a dense uniform parameter grid on both
/// branches plus the straight-middle limits. Lengths are measured from
/// polylines of the sampled arcs, keeping the estimate independent of the
/// analytic arc-length bookkeeping.
pub fn grid_min_length(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r1: f64,
    r3: f64,
    grid_n: usize,
) -> Result<f64, Error> {
    let fam = crate::construction::Family::new(a, b, r1, r3)?;
    let polyline_length = |t: &CccTrajectory| -> f64 {
        t.arcs
            .iter()
            .map(|arc| {
                arc.sample(257)
                    .windows(2)
                    .map(|w| w[0].position.distance(w[1].position))
                    .sum::<f64>()
            })
            .sum()
    };
    let mut best = f64::INFINITY;
    for pole in [FRAC_PI_2, -FRAC_PI_2] {
        if let Ok(t) = fam.csc_limit(pole) {
            best = best.min(polyline_length(&t));
        }
    }
    for branch in [Branch::Right, Branch::Left] {
        let (lo, hi) = branch.interval();
        let (lo, hi) = (
            lo + crate::construction::POLE_MARGIN,
            hi - crate::construction::POLE_MARGIN,
        );
        let vals = crate::exec::map_range(grid_n, |i| {
            let k = lo + (hi - lo) * i as f64 / (grid_n - 1) as f64;
            fam.build(k).map(|t| polyline_length(&t)).ok()
        });
        for v in vals.into_iter().flatten() {
            best = best.min(v);
        }
    }
    Ok(best)
}

/// Magnitude of the length jump straddling `k_star`:
/// `|l(k_star - eps) - l(k_star + eps)|`.
pub fn jump_probe(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r1: f64,
    r3: f64,
    k_star: f64,
    eps: f64,
) -> Result<f64, Error> {
    let fam = crate::construction::Family::new(a, b, r1, r3)?;
    let lo = fam.eval(k_star - eps)?.length;
    let hi = fam.eval(k_star + eps)?.length;
    Ok((lo - hi).abs())
}
