//! Classic Dubins shortest paths at a fixed minimum turn radius, plus the
//! classification of oriented-point pairs that governs which elongation
//! guarantee applies.
//!
//! `CSC` words are built from the forward directed common tangent of the two
//! terminal circles; `CCC` words place the middle circle at the two
//! intersections of circles of radius `2 r_min` around the terminal centers,
//! so both the short and the long three-arc solutions are reported.

use crate::error::Error;
use crate::geometry::{
    arc_between, directed_common_tangent, Arc, OrientedPoint, SignedCircle, GEOM_TOL,
};
use crate::word::{Letter, Word, DUBINS_WORDS};
use std::collections::BTreeMap;
use std::f64::consts::PI;

/// One realized Dubins word: three chained arcs and their lengths.
#[derive(Clone, Debug)]
pub struct DubinsSolution {
    pub word: Word,
    pub arcs: [Arc; 3],
    pub length: f64,
    /// Arc lengths in meters: first turn, middle element, last turn.
    pub params: (f64, f64, f64),
}

/// Set memberships of an oriented-point pair, evaluated on its shortest path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairClass {
    /// First turn of the shortest CSC spans at least pi.
    pub o1: bool,
    /// Last turn of the shortest CSC spans at least pi.
    pub o2: bool,
    /// Straight segment of the shortest CSC is at least `4 r_min` long.
    pub o3: bool,
    /// Right terminal circle centers are at least `4 r_min` apart.
    pub o4: bool,
    /// Left terminal circle centers are at least `4 r_min` apart.
    pub o5: bool,
    pub category: PairCategory,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairCategory {
    /// Shortest path is CSC and at least one membership holds.
    InO,
    /// Shortest path is CSC and no membership holds.
    InOComplement,
    /// Shortest path is a three-circle word.
    CccShortest,
}

impl PairClass {
    pub fn any_membership(&self) -> bool {
        self.o1 || self.o2 || self.o3 || self.o4 || self.o5
    }
}

fn check_pair(a: &OrientedPoint, b: &OrientedPoint, r_min: f64) -> Result<(), Error> {
    if r_min <= 0.0 || !r_min.is_finite() {
        return Err(Error::InvalidRadius(r_min));
    }
    if a.coincides_with(b, GEOM_TOL) {
        return Err(Error::DegeneratePair);
    }
    Ok(())
}

fn csc_solution(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r_min: f64,
    word: Word,
) -> Option<DubinsSolution> {
    let letters = word.letters();
    let r1 = if letters[0] == Letter::L { r_min } else { -r_min };
    let r3 = if letters[2] == Letter::L { r_min } else { -r_min };
    let c1 = SignedCircle::terminal(a, r1).ok()?;
    let c3 = SignedCircle::terminal(b, r3).ok()?;
    let t = directed_common_tangent(&c1, &c3).ok()?;
    let first = arc_between(&c1, a.position, t.from).ok()?;
    let last = arc_between(&c3, t.to, b.position).ok()?;
    let mid = Arc::line_with_dir(t.from, t.dir, t.length);
    let params = (first.length(), mid.length(), last.length());
    Some(DubinsSolution {
        word,
        length: params.0 + params.1 + params.2,
        arcs: [first, mid, last],
        params,
    })
}

fn ccc_solutions(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r_min: f64,
    word: Word,
) -> Vec<DubinsSolution> {
    let outer = if word.letters()[0] == Letter::L {
        r_min
    } else {
        -r_min
    };
    let Ok(c1) = SignedCircle::terminal(a, outer) else {
        return Vec::new();
    };
    let Ok(c3) = SignedCircle::terminal(b, outer) else {
        return Vec::new();
    };
    let span = c3.center - c1.center;
    let d = span.norm();
    if d > 4.0 * r_min || d < GEOM_TOL * r_min.max(1.0) {
        return Vec::new();
    }
    // Middle circle center: intersection of radius-2r circles about the
    // terminal centers. Both intersection points yield valid paths.
    let h = (4.0 * r_min * r_min - d * d / 4.0).max(0.0).sqrt();
    let mid = (c1.center + c3.center) * 0.5;
    let n = span.perp() / d;
    let mut out = Vec::with_capacity(2);
    for side in [1.0, -1.0] {
        let o2 = mid + n * (h * side);
        let Ok(c2) = SignedCircle::new(o2, -outer) else {
            continue;
        };
        let j1 = (c1.center + o2) * 0.5;
        let j2 = (o2 + c3.center) * 0.5;
        let (Ok(first), Ok(middle), Ok(last)) = (
            arc_between(&c1, a.position, j1),
            arc_between(&c2, j1, j2),
            arc_between(&c3, j2, b.position),
        ) else {
            continue;
        };
        let params = (first.length(), middle.length(), last.length());
        out.push(DubinsSolution {
            word,
            length: params.0 + params.1 + params.2,
            arcs: [first, middle, last],
            params,
        });
    }
    out.sort_by(|x, y| x.length.total_cmp(&y.length));
    out
}

/// Every realizable solution for each of the six words. CSC words carry at
/// most one entry; CCC words up to two, shortest first. Words with no
/// solution map to an empty list.
pub fn all_word_solutions(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r_min: f64,
) -> Result<BTreeMap<Word, Vec<DubinsSolution>>, Error> {
    check_pair(a, b, r_min)?;
    let mut map = BTreeMap::new();
    for word in DUBINS_WORDS {
        let sols = if word.has_straight() {
            csc_solution(a, b, r_min, word).into_iter().collect()
        } else {
            ccc_solutions(a, b, r_min, word)
        };
        map.insert(word, sols);
    }
    Ok(map)
}

/// The Dubins shortest path. Ties between words break in the fixed order
/// `LSL < LSR < RSL < RSR < LRL < RLR`.
pub fn shortest(a: &OrientedPoint, b: &OrientedPoint, r_min: f64) -> Result<DubinsSolution, Error> {
    let map = all_word_solutions(a, b, r_min)?;
    let mut best: Option<DubinsSolution> = None;
    for word in DUBINS_WORDS {
        for sol in &map[&word] {
            if best.as_ref().is_none_or(|b| sol.length < b.length) {
                best = Some(sol.clone());
            }
        }
    }
    best.ok_or(Error::DegeneratePair)
}

/// Evaluates the five set memberships on the shortest path and assigns the
/// pair its reachability category.
pub fn classify_pair(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r_min: f64,
) -> Result<PairClass, Error> {
    let best = shortest(a, b, r_min)?;
    classify_from_shortest(a, b, r_min, &best)
}

pub(crate) fn classify_from_shortest(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r_min: f64,
    best: &DubinsSolution,
) -> Result<PairClass, Error> {
    if !best.word.has_straight() {
        return Ok(PairClass {
            o1: false,
            o2: false,
            o3: false,
            o4: false,
            o5: false,
            category: PairCategory::CccShortest,
        });
    }
    let (eta, d, zeta) = best.params;
    let right_a = SignedCircle::terminal(a, -r_min)?.center;
    let right_b = SignedCircle::terminal(b, -r_min)?.center;
    let left_a = SignedCircle::terminal(a, r_min)?.center;
    let left_b = SignedCircle::terminal(b, r_min)?.center;
    let class = PairClass {
        o1: eta >= PI * r_min,
        o2: zeta >= PI * r_min,
        o3: d >= 4.0 * r_min,
        o4: right_a.distance(right_b) >= 4.0 * r_min,
        o5: left_a.distance(left_b) >= 4.0 * r_min,
        category: PairCategory::InOComplement,
    };
    Ok(PairClass {
        category: if class.any_membership() {
            PairCategory::InO
        } else {
            PairCategory::InOComplement
        },
        ..class
    })
}

/// Signed terminal radii implied by a word's first and last letters.
pub(crate) fn terminal_signs(word: Word, r_min: f64) -> (f64, f64) {
    let letters = word.letters();
    let first = if letters[0] == Letter::L { r_min } else { -r_min };
    let last = if letters[letters.len() - 1] == Letter::L {
        r_min
    } else {
        -r_min
    };
    (first, last)
}
