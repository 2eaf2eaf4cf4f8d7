//! Locus of the middle-circle center for fixed terminal circles.
//!
//! With the terminal circles pinned, every center o2 that admits tangency to
//! both satisfies `|d(o2, o1) - d(o2, o3)| = |r1 - r3|`: a hyperbola with
//! foci at the terminal centers. Points are parameterized by
//! `k in [-pi/2, 3pi/2)`; `k in [-pi/2, pi/2)` covers the branch nearer the
//! third circle ("right" in the axis frame) and `k in [pi/2, 3pi/2)` the
//! other. The poles `k = +-pi/2` are the straight-line limits of the middle
//! element.

use crate::error::Error;
use crate::geometry::{OrientedPoint, SignedCircle};
use crate::vec2::Vec2;
use std::f64::consts::{FRAC_PI_2, PI};

/// Parameters `k` this close to a pole are routed to the line limit instead
/// of the closed-form point evaluation.
pub const POLE_EPS: f64 = 1e-6;

/// Hyperbola branch, named after its side in the rotated axis frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `k in [-pi/2, pi/2)`; points are farther from the first focus.
    Right,
    /// `k in [pi/2, 3pi/2)`; points are farther from the second focus.
    Left,
}

impl Branch {
    pub fn of_k(k: f64) -> Self {
        if (-FRAC_PI_2..FRAC_PI_2).contains(&k) {
            Branch::Right
        } else {
            Branch::Left
        }
    }

    /// Open parameter interval of the branch, excluding the poles.
    pub fn interval(self) -> (f64, f64) {
        match self {
            Branch::Right => (-FRAC_PI_2, FRAC_PI_2),
            Branch::Left => (FRAC_PI_2, 3.0 * FRAC_PI_2),
        }
    }
}

/// The middle-center locus for one `(A, B, r1, r3)` configuration.
#[derive(Clone, Copy, Debug)]
pub struct Hyperbola {
    pub focus1: Vec2,
    pub focus2: Vec2,
    /// `|r3 - r1| / 2`; zero when the radii are equal and the locus
    /// degenerates to the perpendicular bisector of the focal segment.
    pub semi_major: f64,
    pub semi_minor: f64,
    /// Half the focal distance.
    pub focal: f64,
    /// Unit vector from the first focus toward the second.
    pub axis_unit: Vec2,
    pub center: Vec2,
    pub r1: f64,
    pub r3: f64,
}

impl Hyperbola {
    /// Builds the locus from the oriented endpoints and signed terminal
    /// radii. Fails when `d(o3, o1) <= |r3 - r1|`, reporting the deficit.
    pub fn build(
        a: &OrientedPoint,
        b: &OrientedPoint,
        r1: f64,
        r3: f64,
    ) -> Result<Self, Error> {
        let c1 = SignedCircle::terminal(a, r1)?;
        let c3 = SignedCircle::terminal(b, r3)?;
        Self::from_circles(&c1, &c3)
    }

    pub fn from_circles(c1: &SignedCircle, c3: &SignedCircle) -> Result<Self, Error> {
        let (o1, o3) = (c1.center, c3.center);
        let (r1, r3) = (c1.radius, c3.radius);
        let d = o1.distance(o3);
        let deficit = d - (r3 - r1).abs();
        if deficit <= 0.0 {
            return Err(Error::NoHyperbola { deficit });
        }
        let semi_major = (r3 - r1).abs() / 2.0;
        let focal = d / 2.0;
        let semi_minor = (focal * focal - semi_major * semi_major).sqrt();
        Ok(Self {
            focus1: o1,
            focus2: o3,
            semi_major,
            semi_minor,
            focal,
            axis_unit: (o3 - o1) / d,
            center: (o1 + o3) * 0.5,
            r1,
            r3,
        })
    }

    /// True when the radii are equal and the locus is a straight line.
    pub fn is_degenerate_line(&self) -> bool {
        self.semi_major == 0.0
    }

    fn check_k(&self, k: f64) -> Result<(), Error> {
        if !(-FRAC_PI_2..3.0 * FRAC_PI_2).contains(&k) {
            return Err(Error::AtPole { k });
        }
        if (k - FRAC_PI_2).abs() < POLE_EPS || (k + FRAC_PI_2).abs() < POLE_EPS {
            return Err(Error::AtPole { k });
        }
        Ok(())
    }

    /// Rotate a point from the axis frame into world coordinates.
    #[inline]
    fn world_of(&self, local: Vec2) -> Vec2 {
        let n = self.axis_unit;
        self.center + Vec2::new(n.x * local.x - n.y * local.y, n.y * local.x + n.x * local.y)
    }

    #[inline]
    fn local_of(&self, world: Vec2) -> Vec2 {
        let n = self.axis_unit;
        let v = world - self.center;
        Vec2::new(n.x * v.x + n.y * v.y, -n.y * v.x + n.x * v.y)
    }

    /// Middle-circle center at parameter `k`:
    /// `R * (a sec k, b tan k) + (o1 + o3)/2`.
    pub fn point(&self, k: f64) -> Result<Vec2, Error> {
        self.check_k(k)?;
        let local = Vec2::new(self.semi_major / k.cos(), self.semi_minor * k.tan());
        Ok(self.world_of(local))
    }

    /// Recovers the parameter of a locus point on the given branch.
    pub fn k_of_point(&self, p: Vec2, branch: Branch) -> f64 {
        let local = self.local_of(p);
        let t = (local.y / self.semi_minor).atan();
        match branch {
            Branch::Right => t,
            Branch::Left => PI + t,
        }
    }

    /// Branch hosting a known middle circle `(center, radius)`.
    ///
    /// The branch cannot always be read off the center alone: with equal
    /// terminal radii the locus degenerates to a line that both branches
    /// cover, each carrying one of the two tangency solutions. Matching the
    /// radius against each branch's sign rule resolves it in every case.
    pub fn branch_of_circle(&self, center: Vec2, radius: f64) -> Branch {
        let s = center.distance(self.focus1);
        let miss =
            |branch: Branch| (self.radius_sign(branch) * s + self.r1 - radius).abs();
        if miss(Branch::Right) <= miss(Branch::Left) {
            Branch::Right
        } else {
            Branch::Left
        }
    }

    /// Signed middle radius at parameter `k`.
    ///
    /// With `s = d(o2, o1)`, the radius is `sign * s + r1` where the sign
    /// depends on the radii signs, their magnitude order and the branch;
    /// the returned pair carries that sign for downstream use.
    pub fn middle_radius_signed(&self, k: f64) -> Result<(f64, f64), Error> {
        let o2 = self.point(k)?;
        let s = o2.distance(self.focus1);
        let sigma = self.radius_sign(Branch::of_k(k));
        Ok((sigma * s + self.r1, sigma))
    }

    /// The `+-1` factor applied to `s` in the middle-radius expression for
    /// the given branch.
    pub fn radius_sign(&self, branch: Branch) -> f64 {
        let (r1, r3) = (self.r1, self.r3);
        let right = branch == Branch::Right;
        if r1 * r3 > 0.0 {
            // Ties in magnitude fall into the |r1| >= |r3| column.
            let mag_ge = r1.abs() >= r3.abs();
            if (right == mag_ge) == (r1 > 0.0) {
                -1.0
            } else {
                1.0
            }
        } else if right == (r1 > 0.0) {
            -1.0
        } else {
            1.0
        }
    }

    /// Asymptote escape direction associated with a pole, as a unit vector.
    pub fn pole_direction(&self, pole: f64) -> Vec2 {
        let y = if pole > 0.0 {
            self.semi_minor
        } else {
            -self.semi_minor
        };
        let w = Vec2::new(self.semi_major, y);
        let n = self.axis_unit;
        Vec2::new(n.x * w.x - n.y * w.y, n.y * w.x + n.x * w.y).normalized()
    }
}

/// Convenience wrapper: locus point at `k` for the given configuration.
pub fn middle_center(h: &Hyperbola, k: f64) -> Result<Vec2, Error> {
    h.point(k)
}

/// Convenience wrapper: signed middle radius at `k`.
pub fn middle_radius(h: &Hyperbola, k: f64) -> Result<f64, Error> {
    h.middle_radius_signed(k).map(|(r2, _)| r2)
}
