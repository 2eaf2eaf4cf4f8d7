//! SVG and CSV output for planned trajectories.

use triarc::{CccTrajectory, Pose, Vec2};

const VIEW_W: f64 = 800.0;
const VIEW_H: f64 = 600.0;
const SAMPLES_PER_ARC: usize = 256;

/// Renders the trajectory as a polyline with the changeover points drawn as
/// filled dots. World coordinates are scaled uniformly into the viewport.
pub fn svg(trajectory: &CccTrajectory) -> String {
    let mut points: Vec<Vec2> = Vec::new();
    for arc in &trajectory.arcs {
        for pose in arc.sample(SAMPLES_PER_ARC) {
            points.push(pose.position);
        }
    }
    let (min_x, max_x) = bounds(points.iter().map(|p| p.x));
    let (min_y, max_y) = bounds(points.iter().map(|p| p.y));
    let span_x = (max_x - min_x).max(1e-9);
    let span_y = (max_y - min_y).max(1e-9);
    let scale = ((VIEW_W * 0.9) / span_x).min((VIEW_H * 0.9) / span_y);
    let offset_x = (VIEW_W - span_x * scale) / 2.0;
    let offset_y = (VIEW_H - span_y * scale) / 2.0;
    // y grows upward in world coordinates, downward in SVG
    let map = |p: Vec2| {
        (
            offset_x + (p.x - min_x) * scale,
            VIEW_H - offset_y - (p.y - min_y) * scale,
        )
    };

    let mut path = String::new();
    for (i, p) in points.iter().enumerate() {
        let (x, y) = map(*p);
        let cmd = if i == 0 { 'M' } else { 'L' };
        path.push_str(&format!("{cmd}{x:.2} {y:.2} "));
    }

    let dot_r = 0.005 * VIEW_W.max(VIEW_H);
    let mut dots = String::new();
    for c in &trajectory.changeovers {
        let (x, y) = map(*c);
        dots.push_str(&format!(
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"{dot_r:.2}\" fill=\"#d33\"/>\n"
        ));
    }
    let (sx, sy) = map(points[0]);
    let (ex, ey) = map(*points.last().expect("samples"));

    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{VIEW_W}\" height=\"{VIEW_H}\" \
         viewBox=\"0 0 {VIEW_W} {VIEW_H}\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n\
         <path d=\"{path}\" fill=\"none\" stroke=\"#225\" stroke-width=\"2\"/>\n\
         {dots}\
         <circle cx=\"{sx:.2}\" cy=\"{sy:.2}\" r=\"{r}\" fill=\"none\" stroke=\"#282\"/>\n\
         <circle cx=\"{ex:.2}\" cy=\"{ey:.2}\" r=\"{r}\" fill=\"none\" stroke=\"#822\"/>\n\
         </svg>\n",
        r = dot_r * 1.4,
    )
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    })
}

/// Pose samples of the whole trajectory as `s,x,y,heading` rows.
pub fn pose_csv(trajectory: &CccTrajectory) -> String {
    let mut out = String::from("s,x,y,heading\n");
    let mut s0 = 0.0;
    for arc in &trajectory.arcs {
        let poses: Vec<Pose> = arc.sample(SAMPLES_PER_ARC);
        for (i, pose) in poses.iter().enumerate() {
            let s = s0 + arc.length() * i as f64 / (SAMPLES_PER_ARC - 1) as f64;
            out.push_str(&format!(
                "{s:.9},{:.9},{:.9},{:.9}\n",
                pose.position.x, pose.position.y, pose.heading
            ));
        }
        s0 += arc.length();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use triarc::{plan, OrientedPoint};

    #[test]
    fn svg_contains_changeover_dots() {
        let a = OrientedPoint::from_parts(-3.0, 1.0, 0.785).unwrap();
        let b = OrientedPoint::from_parts(0.0, 0.0, 0.0).unwrap();
        let t = plan(&a, &b, 1.0, 7.0).unwrap();
        let image = svg(&t);
        assert!(image.starts_with("<svg"));
        assert_eq!(image.matches("fill=\"#d33\"").count(), t.changeovers.len());
    }

    #[test]
    fn pose_csv_covers_length() {
        let a = OrientedPoint::from_parts(-3.0, 1.0, 0.785).unwrap();
        let b = OrientedPoint::from_parts(0.0, 0.0, 0.0).unwrap();
        let t = plan(&a, &b, 1.0, 7.0).unwrap();
        let csv = pose_csv(&t);
        let last = csv.lines().last().unwrap();
        let s: f64 = last.split(',').next().unwrap().parse().unwrap();
        assert!((s - t.length).abs() < 1e-6);
    }
}
