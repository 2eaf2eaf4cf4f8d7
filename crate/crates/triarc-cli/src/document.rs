//! JSON schema for planned trajectories and its lossless serializer.

use serde::{Deserialize, Serialize};
use triarc::{Arc, CccTrajectory, Error, OrientedPoint, SignedCircle, Vec2, Word};

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl From<Vec2> for Point {
    fn from(v: Vec2) -> Self {
        Self { x: v.x, y: v.y }
    }
}

impl From<Point> for Vec2 {
    fn from(p: Point) -> Self {
        Vec2::new(p.x, p.y)
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub struct PoseDoc {
    pub x: f64,
    pub y: f64,
    pub heading: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Meta {
    pub r_min: f64,
    pub a: PoseDoc,
    pub b: PoseDoc,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub requested_length: Option<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ArcDoc {
    Circular {
        center: Point,
        signed_radius: f64,
        start: Point,
        end: Point,
        sweep: f64,
    },
    Line {
        start: Point,
        end: Point,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Solution {
    pub word: String,
    /// Signed radius per arc; `null` marks a straight middle element.
    pub radii: Vec<Option<f64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<f64>,
    pub changeovers: Vec<Point>,
    pub length: f64,
    pub arcs: Vec<ArcDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Provenance {
    pub solver: String,
    pub tolerances: Tolerances,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub struct Tolerances {
    pub geometric: f64,
    pub length_relative: f64,
}

/// A planned trajectory with its problem statement and solver provenance.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TrajectoryDocument {
    pub meta: Meta,
    pub solution: Solution,
    pub provenance: Provenance,
}

impl TrajectoryDocument {
    pub fn new(
        trajectory: &CccTrajectory,
        a: &OrientedPoint,
        b: &OrientedPoint,
        r_min: f64,
        requested_length: Option<f64>,
    ) -> Self {
        let arcs = trajectory
            .arcs
            .iter()
            .map(|arc| match arc {
                Arc::Circular {
                    circle,
                    start,
                    end,
                    sweep,
                } => ArcDoc::Circular {
                    center: circle.center.into(),
                    signed_radius: circle.radius,
                    start: (*start).into(),
                    end: (*end).into(),
                    sweep: *sweep,
                },
                Arc::Line { .. } => ArcDoc::Line {
                    start: arc.start().into(),
                    end: arc.end().into(),
                },
            })
            .collect();
        Self {
            meta: Meta {
                r_min,
                a: PoseDoc {
                    x: a.position.x,
                    y: a.position.y,
                    heading: a.heading,
                },
                b: PoseDoc {
                    x: b.position.x,
                    y: b.position.y,
                    heading: b.heading,
                },
                requested_length,
            },
            solution: Solution {
                word: trajectory.word.to_string(),
                radii: trajectory
                    .radii
                    .iter()
                    .map(|r| if r.is_finite() { Some(*r) } else { None })
                    .collect(),
                k: trajectory.k,
                changeovers: trajectory.changeovers.iter().map(|c| (*c).into()).collect(),
                length: trajectory.length,
                arcs,
            },
            provenance: Provenance {
                solver: format!("triarc {}", env!("CARGO_PKG_VERSION")),
                tolerances: Tolerances {
                    geometric: triarc::GEOM_TOL,
                    length_relative: 1e-6,
                },
            },
        }
    }

    pub fn oriented_points(&self) -> Result<(OrientedPoint, OrientedPoint), Error> {
        let a = OrientedPoint::from_parts(self.meta.a.x, self.meta.a.y, self.meta.a.heading)?;
        let b = OrientedPoint::from_parts(self.meta.b.x, self.meta.b.y, self.meta.b.heading)?;
        Ok((a, b))
    }

    /// Rebuilds the trajectory from the embedded arcs.
    pub fn rebuild(&self) -> Result<CccTrajectory, Error> {
        let mut arcs = Vec::with_capacity(self.solution.arcs.len());
        for doc in &self.solution.arcs {
            arcs.push(match doc {
                ArcDoc::Circular {
                    center,
                    signed_radius,
                    start,
                    end,
                    sweep,
                } => Arc::Circular {
                    circle: SignedCircle::new((*center).into(), *signed_radius)?,
                    start: (*start).into(),
                    end: (*end).into(),
                    sweep: *sweep,
                },
                ArcDoc::Line { start, end } => Arc::line((*start).into(), (*end).into()),
            });
        }
        let word = Word::parse(&self.solution.word).ok_or(Error::NonFinite("word"))?;
        let length = arcs.iter().map(Arc::length).sum();
        Ok(CccTrajectory {
            arcs,
            changeovers: self
                .solution
                .changeovers
                .iter()
                .map(|c| (*c).into())
                .collect(),
            radii: self
                .solution
                .radii
                .iter()
                .map(|r| r.unwrap_or(f64::INFINITY))
                .collect(),
            k: self.solution.k,
            word,
            length,
        })
    }
}

/// Serializes with every float written at 17 significant digits, so the
/// round trip is bit-exact.
pub fn to_json_string(doc: &TrajectoryDocument) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FullPrecision::default());
    doc.serialize(&mut ser).expect("trajectory document to JSON");
    String::from_utf8(out).expect("JSON is UTF-8")
}

pub fn from_json_str(text: &str) -> serde_json::Result<TrajectoryDocument> {
    serde_json::from_str(text)
}

/// `serde_json` formatter printing floats with 17 significant digits.
#[derive(Default)]
pub struct FullPrecision {
    pretty: serde_json::ser::PrettyFormatter<'static>,
}

impl serde_json::ser::Formatter for FullPrecision {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        write!(writer, "{value:.16e}")
    }

    // Delegate layout to the pretty formatter.
    fn begin_array<W>(&mut self, w: &mut W) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        serde_json::ser::Formatter::begin_array(&mut self.pretty, w)
    }
    fn end_array<W>(&mut self, w: &mut W) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        serde_json::ser::Formatter::end_array(&mut self.pretty, w)
    }
    fn begin_array_value<W>(&mut self, w: &mut W, first: bool) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        serde_json::ser::Formatter::begin_array_value(&mut self.pretty, w, first)
    }
    fn end_array_value<W>(&mut self, w: &mut W) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        serde_json::ser::Formatter::end_array_value(&mut self.pretty, w)
    }
    fn begin_object<W>(&mut self, w: &mut W) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        serde_json::ser::Formatter::begin_object(&mut self.pretty, w)
    }
    fn end_object<W>(&mut self, w: &mut W) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        serde_json::ser::Formatter::end_object(&mut self.pretty, w)
    }
    fn begin_object_key<W>(&mut self, w: &mut W, first: bool) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        serde_json::ser::Formatter::begin_object_key(&mut self.pretty, w, first)
    }
    fn end_object_key<W>(&mut self, w: &mut W) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        serde_json::ser::Formatter::end_object_key(&mut self.pretty, w)
    }
    fn begin_object_value<W>(&mut self, w: &mut W) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        serde_json::ser::Formatter::begin_object_value(&mut self.pretty, w)
    }
    fn end_object_value<W>(&mut self, w: &mut W) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        serde_json::ser::Formatter::end_object_value(&mut self.pretty, w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use triarc::plan;

    #[test]
    fn round_trip_is_lossless() {
        let a = OrientedPoint::from_parts(-3.0, 1.0, 0.785).unwrap();
        let b = OrientedPoint::from_parts(0.0, 0.0, 0.0).unwrap();
        let t = plan(&a, &b, 1.0, 7.0).unwrap();
        let doc = TrajectoryDocument::new(&t, &a, &b, 1.0, Some(7.0));
        let text = to_json_string(&doc);
        let back = from_json_str(&text).unwrap();
        assert_eq!(doc, back);
        let rebuilt = back.rebuild().unwrap();
        assert_eq!(rebuilt.length.to_bits(), t.length.to_bits());
        assert_eq!(rebuilt.word, t.word);
    }

    #[test]
    fn straight_middle_serializes_radius_null() {
        let a = OrientedPoint::from_parts(0.0, 0.0, 0.0).unwrap();
        let b = OrientedPoint::from_parts(10.0, 0.0, 0.0).unwrap();
        let t = plan(&a, &b, 1.0, 10.0).unwrap();
        let doc = TrajectoryDocument::new(&t, &a, &b, 1.0, Some(10.0));
        assert_eq!(doc.solution.radii[1], None);
        let back = from_json_str(&to_json_string(&doc)).unwrap();
        let rebuilt = back.rebuild().unwrap();
        assert!(rebuilt.radii[1].is_infinite());
    }
}
