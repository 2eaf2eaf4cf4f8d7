//! Shared helpers for the integration suites.

use triarc::{CccTrajectory, OrientedPoint};

/// Tiny deterministic generator (splitmix64) so the randomized suites are
/// reproducible without extra dependencies.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }
}

pub fn op(x: f64, y: f64, heading: f64) -> OrientedPoint {
    OrientedPoint::from_parts(x, y, heading).expect("finite oriented point")
}

/// Endpoint, heading, chaining and curvature checks shared by the suites.
pub fn assert_feasible(t: &CccTrajectory, a: &OrientedPoint, b: &OrientedPoint, r_min: f64) {
    use triarc::geometry::wrap_angle;
    assert!(
        t.start_pose().position.distance(a.position) < 1e-9,
        "start position"
    );
    assert!(
        t.end_pose().position.distance(b.position) < 1e-9,
        "end position"
    );
    assert!(wrap_angle(t.start_pose().heading - a.heading).abs() < 1e-9);
    assert!(wrap_angle(t.end_pose().heading - b.heading).abs() < 1e-9);
    assert!(t.changeover_count() <= 2);
    assert!(t.max_curvature() <= 1.0 / r_min + 1e-9);
    for w in t.arcs.windows(2) {
        assert!(w[0].end().distance(w[1].start()) < 1e-9, "joint gap");
        assert!(
            wrap_angle(w[0].end_heading() - w[1].start_heading()).abs() < 1e-9,
            "joint heading"
        );
    }
}
