//! Curvature-bounded trajectories of any reachable length between two
//! oriented points in the plane, built from three tangent circular arcs.
//!
//! The classic shortest-path words (`CSC`, `CCC` at the minimum turn
//! radius) appear here as special members of a richer family: for fixed
//! signed terminal radii, the centers of admissible middle circles trace a
//! hyperbola, and sweeping its parameter elongates the trajectory from the
//! shortest solution out to arbitrary length while keeping at most two
//! curvature discontinuities. The solver walks that family — switching a
//! terminal circle's side whenever a changeover point crosses an endpoint —
//! to reach any length in the reachable set, and reports the set itself
//! (a half-line, or a half-line minus one open gap) in closed form.
//!
//! ```
//! use triarc::{plan, reachable_lengths, OrientedPoint};
//!
//! let a = OrientedPoint::from_parts(-3.0, 1.0, 0.785).unwrap();
//! let b = OrientedPoint::from_parts(0.0, 0.0, 0.0).unwrap();
//! let set = reachable_lengths(&a, &b, 1.0).unwrap();
//! assert!(set.contains(7.0, 1e-9));
//! let t = plan(&a, &b, 1.0, 7.0).unwrap();
//! assert!((t.length - 7.0).abs() < 1e-5);
//! assert!(t.changeover_count() <= 2);
//! ```
//!
//! With the default `parallel` feature the grid sweeps inside the solvers
//! run on rayon; disabling it falls back to identical sequential scans.

mod error;
mod exec;
mod vec2;

pub mod construction;
pub mod dubins;
pub mod geometry;
pub mod hyperbola;
pub mod oracle;
pub mod solver;
pub mod word;

pub use construction::{
    build_trajectory, changeover_points, csc_limit, discontinuities, length_fn, CccTrajectory,
    Discontinuity, DiscontinuitySite,
};
pub use dubins::{all_word_solutions, classify_pair, shortest, DubinsSolution, PairCategory,
    PairClass};
pub use error::Error;
pub use geometry::{
    arc_between, tangency, Arc, OrientedPoint, Pose, SignedCircle, TangencyKind, GEOM_TOL,
};
pub use hyperbola::{middle_center, middle_radius, Branch, Hyperbola, POLE_EPS};
pub use oracle::{grid_min_length, jump_probe, validate, validate_with, Tolerances,
    ValidationReport};
pub use solver::{
    classify_radii, enumerate_plans, plan, plan_with_radii, reachable_lengths, EnumeratedPlans,
    LengthInterval, LengthSet, RadiiPlanClass,
};
pub use vec2::Vec2;
pub use word::{Letter, Word};
