//! Planar primitives shared by the planners: oriented points, circles with
//! signed radii, circular/straight arcs and the tangency predicates that tie
//! them together.
//!
//! The sign of a radius encodes the direction of motion on the circle:
//! positive is counter-clockwise (a left turn, `L`), negative is clockwise
//! (a right turn, `R`). Under this convention any two tangent circles
//! satisfy `d(centers) = |r_a - r_b|`, internally tangent circles carry
//! radii of equal sign and externally tangent ones carry opposite signs.

use crate::error::Error;
use crate::vec2::Vec2;
use std::f64::consts::{FRAC_PI_2, TAU};

/// Default absolute geometric tolerance for unit-scale quantities.
/// On-circle tests scale it by `max(1, |r|)`.
pub const GEOM_TOL: f64 = 1e-9;

/// Reduce an angle into `[0, 2pi)`.
#[inline]
pub fn mod_tau(theta: f64) -> f64 {
    let r = theta % TAU;
    if r < 0.0 {
        r + TAU
    } else {
        r
    }
}

/// Wrap-safe signed angular difference, in `(-pi, pi]`.
#[inline]
pub fn wrap_angle(theta: f64) -> f64 {
    let r = mod_tau(theta);
    if r > std::f64::consts::PI {
        r - TAU
    } else {
        r
    }
}

/// A planar position with a heading angle in `[0, 2pi)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrientedPoint {
    pub position: Vec2,
    pub heading: f64,
}

impl OrientedPoint {
    /// Builds an oriented point, normalizing the heading into `[0, 2pi)`.
    pub fn new(position: Vec2, heading: f64) -> Result<Self, Error> {
        if !position.is_finite() || !heading.is_finite() {
            return Err(Error::NonFinite("oriented point"));
        }
        Ok(Self {
            position,
            heading: mod_tau(heading),
        })
    }

    pub fn from_parts(x: f64, y: f64, heading: f64) -> Result<Self, Error> {
        Self::new(Vec2::new(x, y), heading)
    }

    /// Unit tangent direction of the heading.
    #[inline]
    pub fn direction(&self) -> Vec2 {
        Vec2::from_angle(self.heading)
    }

    /// True when both position and heading coincide within `tol`.
    pub fn coincides_with(&self, other: &Self, tol: f64) -> bool {
        self.position.distance(other.position) <= tol
            && wrap_angle(self.heading - other.heading).abs() <= tol
    }
}

/// A circle with a signed radius; the sign selects the direction of motion.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SignedCircle {
    pub center: Vec2,
    pub radius: f64,
}

impl SignedCircle {
    pub fn new(center: Vec2, radius: f64) -> Result<Self, Error> {
        if radius == 0.0 || !radius.is_finite() || !center.is_finite() {
            return Err(Error::InvalidRadius(radius));
        }
        Ok(Self { center, radius })
    }

    /// The circle through `p` whose tangent direction at `p` equals the
    /// heading of `p`. Its center sits at `p + r * (-sin h, cos h)`, i.e. on
    /// the normal to the heading, left of it for `r > 0`.
    pub fn terminal(p: &OrientedPoint, r: f64) -> Result<Self, Error> {
        if r == 0.0 || !r.is_finite() {
            return Err(Error::InvalidRadius(r));
        }
        let n = Vec2::new(-p.heading.sin(), p.heading.cos());
        Ok(Self {
            center: p.position + n * r,
            radius: r,
        })
    }

    #[inline]
    pub fn is_ccw(&self) -> bool {
        self.radius > 0.0
    }

    /// Polar angle of a point as seen from the center.
    #[inline]
    pub fn angle_of(&self, p: Vec2) -> f64 {
        (p - self.center).angle()
    }

    #[inline]
    pub fn point_at(&self, theta: f64) -> Vec2 {
        self.center + Vec2::from_angle(theta) * self.radius.abs()
    }

    /// Motion heading at polar angle `theta`, following the circle's
    /// orientation.
    #[inline]
    pub fn heading_at(&self, theta: f64) -> f64 {
        if self.is_ccw() {
            mod_tau(theta + FRAC_PI_2)
        } else {
            mod_tau(theta - FRAC_PI_2)
        }
    }

    /// Distance from the circle boundary, negative inside.
    #[inline]
    pub fn boundary_distance(&self, p: Vec2) -> f64 {
        p.distance(self.center) - self.radius.abs()
    }

    fn on_circle(&self, p: Vec2, tol: f64) -> bool {
        self.boundary_distance(p).abs() <= tol * self.radius.abs().max(1.0)
    }
}

/// Kind of contact between two circles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TangencyKind {
    Internal,
    External,
    None,
}

/// Classifies the tangency of two signed circles.
///
/// Tangency requires `d(centers) = |r_a - r_b|` within `tol`; the kind then
/// follows from the radii signs: equal signs are internally tangent,
/// opposite signs externally.
pub fn tangency(ca: &SignedCircle, cb: &SignedCircle, tol: f64) -> TangencyKind {
    let d = ca.center.distance(cb.center);
    let scale = ca.radius.abs().max(cb.radius.abs()).max(1.0);
    if (d - (ca.radius - cb.radius).abs()).abs() > tol * scale {
        TangencyKind::None
    } else if ca.radius * cb.radius > 0.0 {
        TangencyKind::Internal
    } else {
        TangencyKind::External
    }
}

/// One piece of a trajectory: a circular arc traversed in the orientation of
/// its signed circle, or a straight segment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Arc {
    Circular {
        circle: SignedCircle,
        start: Vec2,
        end: Vec2,
        /// Angle traversed in the circle's orientation, in `[0, 2pi)`.
        /// Coincident endpoints give sweep 0, never a full circle.
        sweep: f64,
    },
    Line {
        start: Vec2,
        /// Unit direction of travel. Kept explicit so that zero-length
        /// segments still carry a heading.
        dir: Vec2,
        length: f64,
    },
}

impl Arc {
    /// Straight segment from `start` to `end`.
    pub fn line(start: Vec2, end: Vec2) -> Self {
        let chord = end - start;
        let length = chord.norm();
        let dir = if length > 0.0 {
            chord / length
        } else {
            Vec2::new(1.0, 0.0)
        };
        Arc::Line { start, dir, length }
    }

    pub fn line_with_dir(start: Vec2, dir: Vec2, length: f64) -> Self {
        Arc::Line { start, dir, length }
    }

    pub fn length(&self) -> f64 {
        match self {
            Arc::Circular { circle, sweep, .. } => circle.radius.abs() * sweep,
            Arc::Line { length, .. } => *length,
        }
    }

    pub fn start(&self) -> Vec2 {
        match self {
            Arc::Circular { start, .. } => *start,
            Arc::Line { start, .. } => *start,
        }
    }

    pub fn end(&self) -> Vec2 {
        match self {
            Arc::Circular { end, .. } => *end,
            Arc::Line { start, dir, length } => *start + *dir * *length,
        }
    }

    pub fn start_heading(&self) -> f64 {
        match self {
            Arc::Circular { circle, start, .. } => circle.heading_at(circle.angle_of(*start)),
            Arc::Line { dir, .. } => mod_tau(dir.angle()),
        }
    }

    pub fn end_heading(&self) -> f64 {
        match self {
            Arc::Circular { circle, end, .. } => circle.heading_at(circle.angle_of(*end)),
            Arc::Line { dir, .. } => mod_tau(dir.angle()),
        }
    }

    /// Signed curvature along the arc; 0 for straight segments.
    pub fn curvature(&self) -> f64 {
        match self {
            Arc::Circular { circle, .. } => 1.0 / circle.radius,
            Arc::Line { .. } => 0.0,
        }
    }

    /// Pose after traveling `s` meters from the start (clamped to the arc).
    pub fn pose_at(&self, s: f64) -> Pose {
        let s = s.clamp(0.0, self.length());
        match self {
            Arc::Circular { circle, start, .. } => {
                let theta0 = circle.angle_of(*start);
                let delta = s / circle.radius.abs();
                let theta = if circle.is_ccw() {
                    theta0 + delta
                } else {
                    theta0 - delta
                };
                Pose {
                    position: circle.point_at(theta),
                    heading: circle.heading_at(theta),
                }
            }
            Arc::Line { start, dir, .. } => Pose {
                position: *start + *dir * s,
                heading: mod_tau(dir.angle()),
            },
        }
    }

    /// `n >= 2` poses evenly spaced by arc length; first and last match the
    /// arc endpoints exactly in parameter.
    pub fn sample(&self, n: usize) -> Vec<Pose> {
        assert!(n >= 2, "need at least the two endpoint samples");
        let len = self.length();
        (0..n)
            .map(|i| self.pose_at(len * i as f64 / (n - 1) as f64))
            .collect()
    }
}

/// A sampled position with its tangent heading.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Pose {
    pub position: Vec2,
    pub heading: f64,
}

/// Arc on `c` from `from` to `to`, traversed in the circle's orientation.
///
/// Coincident endpoints yield sweep 0 (a zero-length arc), never 2pi; this
/// is what turns a changeover point crossing a terminal point into a jump
/// of the trajectory length rather than a smooth wrap.
pub fn arc_between(c: &SignedCircle, from: Vec2, to: Vec2) -> Result<Arc, Error> {
    for p in [from, to] {
        if !c.on_circle(p, GEOM_TOL) {
            return Err(Error::OffCircle {
                distance: c.boundary_distance(p).abs(),
                radius: c.radius,
            });
        }
    }
    let a0 = c.angle_of(from);
    let a1 = c.angle_of(to);
    let sweep = if c.is_ccw() {
        mod_tau(a1 - a0)
    } else {
        mod_tau(a0 - a1)
    };
    Ok(Arc::Circular {
        circle: *c,
        start: from,
        end: to,
        sweep,
    })
}

/// A directed common tangent line of two signed circles: the motion leaves
/// `ca` at `from`, travels along `dir` for `length >= 0` meters and enters
/// `cb` at `to`, with matching tangent directions at both contacts.
#[derive(Clone, Copy, Debug)]
pub struct DirectedTangent {
    pub from: Vec2,
    pub to: Vec2,
    pub dir: Vec2,
    pub length: f64,
}

/// Constructs the forward directed common tangent of two signed circles, if
/// one exists. For fixed radii signs there is at most one: the second
/// algebraic solution always runs backwards.
pub fn directed_common_tangent(
    ca: &SignedCircle,
    cb: &SignedCircle,
) -> Result<DirectedTangent, Error> {
    let span = cb.center - ca.center;
    let d = span.norm();
    let dr = cb.radius - ca.radius;
    if d <= GEOM_TOL * ca.radius.abs().max(cb.radius.abs()).max(1.0) {
        if dr.abs() <= GEOM_TOL {
            // Coincident circles: a degenerate zero-length tangent anywhere.
            let p = ca.point_at(0.0);
            let dir = Vec2::from_angle(ca.heading_at(0.0));
            return Ok(DirectedTangent {
                from: p,
                to: p,
                dir,
                length: 0.0,
            });
        }
        return Err(Error::NoTangent);
    }
    // A line with unit direction u is tangent-consistent with a signed
    // circle (o, r) at o - r*perp(u). Requiring both contact points to be
    // collinear along u gives span . perp(u) = dr, i.e.
    // sin(phi - psi) = dr / d with phi the angle of span and psi of u.
    let ratio = dr / d;
    if ratio.abs() > 1.0 {
        return Err(Error::NoTangent);
    }
    let psi = span.angle() - ratio.asin();
    let dir = Vec2::from_angle(psi);
    let from = ca.center - dir.perp() * ca.radius;
    let to = cb.center - dir.perp() * cb.radius;
    let length = (to - from).dot(dir);
    debug_assert!((to - from).cross(dir).abs() <= 1e-7 * d.max(1.0));
    Ok(DirectedTangent {
        from,
        to,
        dir,
        length: length.max(0.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn op(x: f64, y: f64, h: f64) -> OrientedPoint {
        OrientedPoint::from_parts(x, y, h).unwrap()
    }

    #[test]
    fn terminal_circle_centers() {
        let c = SignedCircle::terminal(&op(0.0, 0.0, 0.0), 1.0).unwrap();
        assert!(c.center.distance(Vec2::new(0.0, 1.0)) < 1e-12);
        let c = SignedCircle::terminal(&op(0.0, 0.0, 0.0), -1.0).unwrap();
        assert!(c.center.distance(Vec2::new(0.0, -1.0)) < 1e-12);
        // center = (-3 + sin h, 1 - cos h) for r = -1
        let h = 0.785;
        let c = SignedCircle::terminal(&op(-3.0, 1.0, h), -1.0).unwrap();
        assert!(c.center.distance(Vec2::new(-3.0 + h.sin(), 1.0 - h.cos())) < 1e-12);
        assert!(c.center.distance(Vec2::new(-2.293, 0.293)) < 1e-3);
    }

    #[test]
    fn terminal_circle_passes_through_point_with_heading() {
        for (h, r) in [(0.3, 2.0), (4.0, -0.7), (1.2, 5.0)] {
            let p = op(2.0, -1.0, h);
            let c = SignedCircle::terminal(&p, r).unwrap();
            assert!(c.boundary_distance(p.position).abs() < 1e-12);
            let theta = c.angle_of(p.position);
            assert!(wrap_angle(c.heading_at(theta) - p.heading).abs() < 1e-12);
        }
    }

    #[test]
    fn terminal_circle_rejects_bad_radius() {
        assert!(SignedCircle::terminal(&op(0.0, 0.0, 0.0), 0.0).is_err());
        assert!(SignedCircle::terminal(&op(0.0, 0.0, 0.0), f64::NAN).is_err());
    }

    #[test]
    fn tangency_cases() {
        let c = |x: f64, r: f64| SignedCircle::new(Vec2::new(x, 0.0), r).unwrap();
        assert_eq!(
            tangency(&c(0.0, 1.0), &c(3.0, -2.0), GEOM_TOL),
            TangencyKind::External
        );
        assert_eq!(
            tangency(&c(0.0, 3.0), &c(1.0, 2.0), GEOM_TOL),
            TangencyKind::Internal
        );
        assert_eq!(
            tangency(&c(0.0, 1.0), &c(5.0, 2.0), GEOM_TOL),
            TangencyKind::None
        );
    }

    #[test]
    fn arc_between_quarter_turns() {
        let ccw = SignedCircle::new(Vec2::ZERO, 1.0).unwrap();
        let a = arc_between(&ccw, Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)).unwrap();
        let Arc::Circular { sweep, .. } = a else {
            panic!()
        };
        assert!((sweep - PI / 2.0).abs() < 1e-12);
        assert!((a.length() - PI / 2.0).abs() < 1e-12);

        let cw = SignedCircle::new(Vec2::ZERO, -1.0).unwrap();
        let a = arc_between(&cw, Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)).unwrap();
        let Arc::Circular { sweep, .. } = a else {
            panic!()
        };
        assert!((sweep - 3.0 * PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn arc_between_zero_sweep_convention() {
        let c = SignedCircle::new(Vec2::ZERO, 1.0).unwrap();
        let p = Vec2::new(1.0, 0.0);
        let a = arc_between(&c, p, p).unwrap();
        assert_eq!(a.length(), 0.0);
    }

    #[test]
    fn arc_between_rejects_off_circle() {
        let c = SignedCircle::new(Vec2::ZERO, 1.0).unwrap();
        assert!(arc_between(&c, Vec2::new(1.5, 0.0), Vec2::new(0.0, 1.0)).is_err());
    }

    #[test]
    fn sample_headings_and_spacing() {
        let c = SignedCircle::new(Vec2::ZERO, 1.0).unwrap();
        let a = arc_between(&c, Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)).unwrap();
        let poses = a.sample(2);
        assert!((poses[0].heading - PI / 2.0).abs() < 1e-12);
        assert!((poses[1].heading - PI).abs() < 1e-12);

        let line = Arc::line(Vec2::ZERO, Vec2::new(2.0, 0.0));
        let poses = line.sample(3);
        assert!(poses[1].position.distance(Vec2::new(1.0, 0.0)) < 1e-12);
        assert!(poses.iter().all(|p| p.heading.abs() < 1e-12));
    }

    #[test]
    fn sample_polyline_length_converges() {
        let c = SignedCircle::new(Vec2::ZERO, 2.0).unwrap();
        let a = arc_between(&c, Vec2::new(2.0, 0.0), Vec2::new(-2.0, 0.0)).unwrap();
        let poly = |n: usize| {
            a.sample(n)
                .windows(2)
                .map(|w| w[0].position.distance(w[1].position))
                .sum::<f64>()
        };
        let e64 = (a.length() - poly(64)).abs();
        let e128 = (a.length() - poly(128)).abs();
        assert!(e128 < e64 / 3.5, "second order convergence: {e64} {e128}");
    }

    #[test]
    fn directed_tangent_straight_case() {
        let a = SignedCircle::terminal(&op(0.0, 0.0, 0.0), 1.0).unwrap();
        let b = SignedCircle::terminal(&op(10.0, 0.0, 0.0), 1.0).unwrap();
        let t = directed_common_tangent(&a, &b).unwrap();
        assert!(t.from.distance(Vec2::ZERO) < 1e-12);
        assert!(t.to.distance(Vec2::new(10.0, 0.0)) < 1e-12);
        assert!((t.length - 10.0).abs() < 1e-12);
    }

    #[test]
    fn directed_tangent_touches_both_circles() {
        let a = SignedCircle::new(Vec2::new(-2.0, 0.5), -1.5).unwrap();
        let b = SignedCircle::new(Vec2::new(4.0, -1.0), 2.0).unwrap();
        let t = directed_common_tangent(&a, &b).unwrap();
        assert!(a.boundary_distance(t.from).abs() < 1e-9);
        assert!(b.boundary_distance(t.to).abs() < 1e-9);
        // motion heading matches at both contacts
        let ha = a.heading_at(a.angle_of(t.from));
        let hb = b.heading_at(b.angle_of(t.to));
        assert!(wrap_angle(ha - t.dir.angle()).abs() < 1e-9);
        assert!(wrap_angle(hb - t.dir.angle()).abs() < 1e-9);
    }

    #[test]
    fn directed_tangent_nonexistent_when_nested() {
        let a = SignedCircle::new(Vec2::ZERO, 1.0).unwrap();
        let b = SignedCircle::new(Vec2::new(0.5, 0.0), 5.0).unwrap();
        assert!(directed_common_tangent(&a, &b).is_err());
    }
}
