//! Error type shared by all planner operations.

use crate::solver::LengthSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A radius was zero or non-finite.
    InvalidRadius(f64),
    /// A coordinate or angle was NaN or infinite.
    NonFinite(&'static str),
    /// Start and goal coincide in both position and heading.
    DegeneratePair,
    /// An arc endpoint does not lie on its circle.
    OffCircle { distance: f64, radius: f64 },
    /// The middle-circle locus does not exist: `d(o3, o1) <= |r3 - r1|`.
    /// `deficit` is `d(o3, o1) - |r3 - r1|`.
    NoHyperbola { deficit: f64 },
    /// The locus parameter sits at a pole of the parametrization
    /// (`k = +-pi/2`), where the middle element degenerates to a line.
    AtPole { k: f64 },
    /// No forward common tangent line exists for the requested limit.
    NoTangent,
    /// Middle radius coincides with a terminal radius; the changeover point
    /// is undefined.
    DegenerateTangency,
    /// Requested length is below the minimum of the admissible family.
    BelowMinimum { requested: f64, minimum: f64 },
    /// Requested length lies outside the reachable set.
    UnreachableLength {
        requested: f64,
        reachable: LengthSet,
    },
    /// The radii pair carries no elongation guarantee.
    NoGuarantee,
    /// Computed reachability bounds are inconsistent (`l1 >= l2`).
    GapOrder { l1: f64, l2: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidRadius(r) => write!(f, "invalid signed radius {r}"),
            Error::NonFinite(what) => write!(f, "non-finite {what}"),
            Error::DegeneratePair => write!(f, "start and goal oriented points coincide"),
            Error::OffCircle { distance, radius } => write!(
                f,
                "arc endpoint is {distance:.3e} m off a circle of radius {radius}"
            ),
            Error::NoHyperbola { deficit } => write!(
                f,
                "no middle-circle locus: center distance short of |r3 - r1| by {:.6} m",
                -deficit
            ),
            Error::AtPole { k } => write!(f, "parameter k = {k} is at a pole; use the line limit"),
            Error::NoTangent => write!(f, "no forward common tangent line exists"),
            Error::DegenerateTangency => {
                write!(f, "middle radius equals a terminal radius")
            }
            Error::BelowMinimum { requested, minimum } => write!(
                f,
                "requested length {requested} is below the minimum {minimum:.6}"
            ),
            Error::UnreachableLength {
                requested,
                reachable,
            } => write!(f, "length {requested} is not reachable; set is {reachable}"),
            Error::NoGuarantee => write!(
                f,
                "radii pair carries no elongation guarantee for this geometry"
            ),
            Error::GapOrder { l1, l2 } => {
                write!(f, "inconsistent reachability bounds: l1 = {l1} >= l2 = {l2}")
            }
        }
    }
}

impl std::error::Error for Error {}
