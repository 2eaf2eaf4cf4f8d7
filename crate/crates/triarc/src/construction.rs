//! Assembly of three-arc trajectories from the middle-circle locus.
//!
//! For fixed oriented endpoints and signed terminal radii, every locus
//! parameter `k` determines a middle circle tangent to both terminal
//! circles, two changeover points and a complete trajectory. Varying `k`
//! sweeps the trajectory length; the sweep has at most two jump
//! discontinuities, at the parameters where a changeover point crosses a
//! terminal point.

use crate::error::Error;
use crate::geometry::{
    arc_between, mod_tau, Arc, OrientedPoint, Pose, SignedCircle, GEOM_TOL,
};
use crate::hyperbola::{Branch, Hyperbola, POLE_EPS};
use crate::vec2::Vec2;
use crate::word::{Letter, Word};
use std::f64::consts::FRAC_PI_2;

/// Grid density per branch used to bracket changeover crossings.
pub(crate) const DISC_GRID: usize = 2048;

/// Keep grid evaluations this far from the poles.
pub(crate) const POLE_MARGIN: f64 = 2.0 * POLE_EPS;

/// A trajectory of tangent circular arcs: three arcs in general, two in the
/// circle-circle degenerate, with a straight middle element in the
/// infinite-radius limit.
#[derive(Clone, Debug)]
pub struct CccTrajectory {
    pub arcs: Vec<Arc>,
    /// Tangency points between consecutive arcs.
    pub changeovers: Vec<Vec2>,
    /// Signed radius per arc; `f64::INFINITY` marks the straight middle.
    pub radii: Vec<f64>,
    /// Locus parameter, when the trajectory came from the locus family.
    pub k: Option<f64>,
    pub word: Word,
    pub length: f64,
}

impl CccTrajectory {
    fn assemble(arcs: Vec<Arc>, changeovers: Vec<Vec2>, radii: Vec<f64>, k: Option<f64>) -> Self {
        let letters: Vec<Letter> = arcs
            .iter()
            .map(|a| match a {
                Arc::Circular { circle, .. } => Letter::from_radius(circle.radius),
                Arc::Line { .. } => Letter::S,
            })
            .collect();
        let word = match letters.len() {
            2 => Word::pair(letters[0], letters[1]),
            _ => Word::triple(letters[0], letters[1], letters[2]),
        };
        let length = arcs.iter().map(Arc::length).sum();
        Self {
            arcs,
            changeovers,
            radii,
            k,
            word,
            length,
        }
    }

    pub fn start_pose(&self) -> Pose {
        self.arcs[0].pose_at(0.0)
    }

    pub fn end_pose(&self) -> Pose {
        let last = self.arcs.last().expect("trajectory has arcs");
        last.pose_at(last.length())
    }

    /// Number of curvature discontinuities (the changeover points).
    pub fn changeover_count(&self) -> usize {
        self.changeovers.len()
    }

    /// Largest curvature magnitude over the arcs.
    pub fn max_curvature(&self) -> f64 {
        self.arcs
            .iter()
            .map(|a| a.curvature().abs())
            .fold(0.0, f64::max)
    }

    /// Wraps a Dubins solution in the same representation.
    pub fn from_dubins(sol: &crate::dubins::DubinsSolution, r_min: f64) -> Self {
        let (r1, r3) = crate::dubins::terminal_signs(sol.word, r_min);
        let mid = match sol.word.letters()[1] {
            Letter::S => f64::INFINITY,
            Letter::L => r_min,
            Letter::R => -r_min,
        };
        let changeovers = vec![sol.arcs[0].end(), sol.arcs[1].end()];
        Self::assemble(sol.arcs.to_vec(), changeovers, vec![r1, mid, r3], None)
    }
}

/// Changeover (tangency) points of a chained circle triple, by the weighted
/// center formula `c1 = (r2 o1 - r1 o2) / (r2 - r1)`.
pub fn changeover_points(
    c1: &SignedCircle,
    c2: &SignedCircle,
    c3: &SignedCircle,
) -> Result<(Vec2, Vec2), Error> {
    let scale = c2.radius.abs().max(1.0);
    if (c2.radius - c1.radius).abs() <= GEOM_TOL * scale
        || (c2.radius - c3.radius).abs() <= GEOM_TOL * scale
    {
        return Err(Error::DegenerateTangency);
    }
    let p1 = (c1.center * c2.radius - c2.center * c1.radius) / (c2.radius - c1.radius);
    let p2 = (c3.center * c2.radius - c2.center * c3.radius) / (c2.radius - c3.radius);
    Ok((p1, p2))
}

/// Everything the length sweep needs from one locus evaluation, without
/// materializing arcs.
#[derive(Clone, Copy, Debug)]
pub(crate) struct RawEval {
    pub o2: Vec2,
    pub r2: f64,
    pub c1: Vec2,
    pub c2: Vec2,
    pub length: f64,
}

/// The full configuration shared across a `k` sweep.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Family {
    pub a: OrientedPoint,
    pub b: OrientedPoint,
    pub hyperbola: Hyperbola,
}

impl Family {
    pub fn new(a: &OrientedPoint, b: &OrientedPoint, r1: f64, r3: f64) -> Result<Self, Error> {
        Ok(Self {
            a: *a,
            b: *b,
            hyperbola: Hyperbola::build(a, b, r1, r3)?,
        })
    }

    pub fn r1(&self) -> f64 {
        self.hyperbola.r1
    }

    pub fn r3(&self) -> f64 {
        self.hyperbola.r3
    }

    /// Evaluates the trajectory at `k` in closed form.
    ///
    /// Changeover points use the cancellation-free form
    /// `c1 = o1 - (r1 / sigma) * w` with `w` the unit vector from `o1`
    /// toward `o2`, which stays exact as the middle radius grows.
    pub fn eval(&self, k: f64) -> Result<RawEval, Error> {
        let h = &self.hyperbola;
        let o2 = h.point(k)?;
        let (r1, r3) = (h.r1, h.r3);
        let w1 = o2 - h.focus1;
        let s1 = w1.norm();
        let sigma = h.radius_sign(Branch::of_k(k));
        let r2 = sigma * s1 + r1;
        if r2.abs() <= GEOM_TOL * r1.abs().max(1.0) {
            return Err(Error::DegenerateTangency);
        }
        let w1 = w1 / s1;
        let c1 = h.focus1 - w1 * (r1 / sigma);
        let w3 = o2 - h.focus2;
        let s3 = w3.norm();
        let sigma3 = if r2 >= r3 { 1.0 } else { -1.0 };
        let w3 = w3 / s3;
        let c2 = h.focus2 - w3 * (r3 / sigma3);

        // Radial directions on the middle circle fall out of the same
        // identities: c1 - o2 = -sigma r2 w1, c2 - o2 = -sigma3 r2 w3.
        let theta_a = (self.a.position - h.focus1).angle();
        let theta_c1_first = (w1 * (-r1 / sigma)).angle();
        let theta_c1_mid = (w1 * (-sigma * r2)).angle();
        let theta_c2_mid = (w3 * (-sigma3 * r2)).angle();
        let theta_c2_last = (w3 * (-r3 / sigma3)).angle();
        let theta_b = (self.b.position - h.focus2).angle();

        let sw = |ccw: bool, from: f64, to: f64| {
            if ccw {
                mod_tau(to - from)
            } else {
                mod_tau(from - to)
            }
        };
        let sw1 = sw(r1 > 0.0, theta_a, theta_c1_first);
        let sw2 = sw(r2 > 0.0, theta_c1_mid, theta_c2_mid);
        let sw3 = sw(r3 > 0.0, theta_c2_last, theta_b);
        let length = r1.abs() * sw1 + r2.abs() * sw2 + r3.abs() * sw3;
        Ok(RawEval {
            o2,
            r2,
            c1,
            c2,
            length,
        })
    }

    /// Materializes the arcs of the evaluation at `k`.
    pub fn build(&self, k: f64) -> Result<CccTrajectory, Error> {
        let raw = self.eval(k)?;
        let h = &self.hyperbola;
        let first = SignedCircle::new(h.focus1, h.r1)?;
        let middle = SignedCircle::new(raw.o2, raw.r2)?;
        let last = SignedCircle::new(h.focus2, h.r3)?;
        let arcs = vec![
            arc_between(&first, self.a.position, raw.c1)?,
            arc_between(&middle, raw.c1, raw.c2)?,
            arc_between(&last, raw.c2, self.b.position)?,
        ];
        Ok(CccTrajectory::assemble(
            arcs,
            vec![raw.c1, raw.c2],
            vec![h.r1, raw.r2, h.r3],
            Some(k),
        ))
    }

    /// Straight-line limit of the middle element at the given pole.
    ///
    /// Contact points are the limits of the changeover points along the
    /// pole's asymptote direction `w`: `c1 = o1 - (r1 / sigma) w` and
    /// `c2 = o3 - (r3 / sigma) w`, traversed along `sigma * rot(-90) w`.
    /// Exactly one pole yields forward travel; the other is rejected.
    pub fn csc_limit(&self, pole: f64) -> Result<CccTrajectory, Error> {
        let h = &self.hyperbola;
        let w = h.pole_direction(pole);
        let sigma = h.radius_sign(Branch::Right);
        let c1 = h.focus1 - w * (h.r1 / sigma);
        let c2 = h.focus2 - w * (h.r3 / sigma);
        let dir = w.perp_cw() * sigma;
        let chord = c2 - c1;
        let length = chord.dot(dir);
        if length < -GEOM_TOL * chord.norm().max(1.0) {
            return Err(Error::NoTangent);
        }
        debug_assert!(chord.cross(dir).abs() <= 1e-6 * chord.norm().max(1.0));
        let first = SignedCircle::new(h.focus1, h.r1)?;
        let last = SignedCircle::new(h.focus2, h.r3)?;
        let arcs = vec![
            arc_between(&first, self.a.position, c1)?,
            Arc::line_with_dir(c1, dir, length.max(0.0)),
            arc_between(&last, c2, self.b.position)?,
        ];
        Ok(CccTrajectory::assemble(
            arcs,
            vec![c1, c2],
            vec![h.r1, f64::INFINITY, h.r3],
            Some(pole),
        ))
    }

    /// Pole hosting the forward line limit, if any.
    pub fn forward_pole(&self) -> Option<f64> {
        [FRAC_PI_2, -FRAC_PI_2]
            .into_iter()
            .find(|&pole| self.csc_limit(pole).is_ok())
    }
}

/// Builds the trajectory for `(A, B, r1, r3)` at locus parameter `k`.
/// Parameters within `1e-6` of a pole route to the straight-line limit.
pub fn build_trajectory(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r1: f64,
    r3: f64,
    k: f64,
) -> Result<CccTrajectory, Error> {
    let fam = Family::new(a, b, r1, r3)?;
    if (k - FRAC_PI_2).abs() < POLE_EPS {
        return fam.csc_limit(FRAC_PI_2);
    }
    if (k + FRAC_PI_2).abs() < POLE_EPS || k >= 3.0 * FRAC_PI_2 - POLE_EPS {
        return fam.csc_limit(-FRAC_PI_2);
    }
    fam.build(k)
}

/// Straight-middle limit trajectory at the given pole (`+-pi/2`).
pub fn csc_limit(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r1: f64,
    r3: f64,
    pole: f64,
) -> Result<CccTrajectory, Error> {
    Family::new(a, b, r1, r3)?.csc_limit(pole)
}

/// Trajectory length at locus parameter `k`.
pub fn length_fn(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r1: f64,
    r3: f64,
    k: f64,
) -> Result<f64, Error> {
    let fam = Family::new(a, b, r1, r3)?;
    if (k - FRAC_PI_2).abs() < POLE_EPS
        || (k + FRAC_PI_2).abs() < POLE_EPS
        || k >= 3.0 * FRAC_PI_2 - POLE_EPS
    {
        let pole = if (k - FRAC_PI_2).abs() < POLE_EPS {
            FRAC_PI_2
        } else {
            -FRAC_PI_2
        };
        return fam.csc_limit(pole).map(|t| t.length);
    }
    fam.eval(k).map(|r| r.length)
}

/// Word predicted by the sign/magnitude/branch classification table.
///
/// Valid whenever the terminal circles do not overlap
/// (`d(o1, o3) > |r1| + |r3|`); nested terminal circles can realize the
/// same-sign middle arc on either branch.
pub fn table_word(r1: f64, r3: f64, branch: Branch) -> Word {
    let right = branch == Branch::Right;
    let (l1, l3) = (Letter::from_radius(r1), Letter::from_radius(r3));
    let mid = if r1 * r3 > 0.0 {
        let mag_ge = r1.abs() >= r3.abs();
        let turn_mid = right == mag_ge;
        if turn_mid {
            // opposite of the outer letters
            if l1 == Letter::L {
                Letter::R
            } else {
                Letter::L
            }
        } else {
            l1
        }
    } else {
        // Mixed signs: the middle letter copies the first letter on the
        // right branch and the last letter on the left branch.
        if right {
            if l1 == Letter::L {
                Letter::R
            } else {
                Letter::L
            }
        } else if l3 == Letter::L {
            Letter::R
        } else {
            Letter::L
        }
    };
    Word::triple(l1, mid, l3)
}

/// Where a length jump sits: the changeover crossing the start or end point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscontinuitySite {
    Start,
    End,
}

/// A located jump discontinuity of the length sweep.
#[derive(Clone, Copy, Debug)]
pub struct Discontinuity {
    pub k: f64,
    /// Jump magnitude: `2 pi |r1|` at the start site, `2 pi |r3|` at the end.
    pub magnitude: f64,
    pub site: DiscontinuitySite,
}

/// Locates the parameters on one branch where a changeover point coincides
/// with a terminal point. At most one per site exists on a branch; the scan
/// brackets sign changes of the wrapped angular offset on a uniform grid and
/// refines them by bisection to `1e-12` in `k`.
pub fn discontinuities(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r1: f64,
    r3: f64,
    branch: Branch,
) -> Result<Vec<Discontinuity>, Error> {
    let fam = Family::new(a, b, r1, r3)?;
    Ok(scan_discontinuities(&fam, branch, DISC_GRID))
}

pub(crate) fn scan_discontinuities(
    fam: &Family,
    branch: Branch,
    grid: usize,
) -> Vec<Discontinuity> {
    let h = &fam.hyperbola;
    let theta_a = (fam.a.position - h.focus1).angle();
    let theta_b = (fam.b.position - h.focus2).angle();
    let (lo, hi) = branch.interval();
    let (lo, hi) = (lo + POLE_MARGIN, hi - POLE_MARGIN);

    // Wrapped angular offset of each changeover from its terminal point.
    let offsets = |k: f64| -> Option<(f64, f64)> {
        let raw = fam.eval(k).ok()?;
        let da = crate::geometry::wrap_angle((raw.c1 - h.focus1).angle() - theta_a);
        let db = crate::geometry::wrap_angle((raw.c2 - h.focus2).angle() - theta_b);
        Some((da, db))
    };

    let ks: Vec<f64> = (0..=grid)
        .map(|i| lo + (hi - lo) * i as f64 / grid as f64)
        .collect();
    let values = crate::exec::map(&ks, |&k| offsets(k));

    let mut out = Vec::new();
    for (site, pick, magnitude) in [
        (
            DiscontinuitySite::Start,
            0usize,
            std::f64::consts::TAU * fam.r1().abs(),
        ),
        (
            DiscontinuitySite::End,
            1usize,
            std::f64::consts::TAU * fam.r3().abs(),
        ),
    ] {
        let get = |v: &Option<(f64, f64)>| v.map(|p| if pick == 0 { p.0 } else { p.1 });
        for i in 0..grid {
            let (Some(f0), Some(f1)) = (get(&values[i]), get(&values[i + 1])) else {
                continue;
            };
            // Skip brackets straddling the angle wrap.
            if f0 == 0.0 || f0 * f1 >= 0.0 || (f0 - f1).abs() > std::f64::consts::PI {
                continue;
            }
            let f = |k: f64| get(&offsets(k)).unwrap_or(f64::NAN);
            let (mut ka, mut kb) = (ks[i], ks[i + 1]);
            let mut fa = f0;
            while kb - ka > 1e-12 {
                let km = 0.5 * (ka + kb);
                let fm = f(km);
                if !fm.is_finite() {
                    break;
                }
                if fa * fm <= 0.0 {
                    kb = km;
                } else {
                    ka = km;
                    fa = fm;
                }
            }
            out.push(Discontinuity {
                k: 0.5 * (ka + kb),
                magnitude,
                site,
            });
        }
    }
    out.sort_by(|x, y| x.k.total_cmp(&y.k));
    out
}
