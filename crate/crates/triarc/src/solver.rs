//! Reachable-length sets and the elongation planner.
//!
//! Planning starts from the shortest solution and seeks the requested
//! length along the locus parameter, switching a terminal circle's side
//! whenever a changeover point crosses a terminal point (the jump
//! parameters). Operationally the switched continuations live in the other
//! sign families, so the planner searches the four `(+-r1, +-r3)` families
//! in a deterministic order, splits each branch at its jump parameters and
//! brackets the requested length inside the continuous segments.

use crate::construction::{
    scan_discontinuities, CccTrajectory, Family, POLE_MARGIN,
};
use crate::dubins::{
    all_word_solutions, classify_from_shortest, terminal_signs, DubinsSolution, PairCategory,
};
use crate::error::Error;
use crate::geometry::{arc_between, OrientedPoint, SignedCircle, GEOM_TOL};
use crate::hyperbola::Branch;
use crate::vec2::Vec2;
use crate::word::{Word, DUBINS_WORDS, LRL, RLR};
use std::f64::consts::{PI, TAU};
use std::fmt;

/// Grid density per branch for the global length minimization.
pub(crate) const TILDE_GRID: usize = 4096;

/// Grid density per continuous segment when bracketing length roots.
const SEGMENT_GRID: usize = 512;

/// Relative length tolerance of the planner.
#[inline]
pub fn length_tolerance(l: f64) -> f64 {
    1e-6 * l.abs().max(1.0)
}

/// One interval of reachable lengths.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LengthInterval {
    pub lo: f64,
    /// `f64::INFINITY` for an unbounded interval.
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

/// Union of disjoint, sorted length intervals; the first starts at the
/// shortest-path length and the last extends to infinity.
#[derive(Clone, Debug, PartialEq)]
pub struct LengthSet {
    pub intervals: Vec<LengthInterval>,
}

impl LengthSet {
    pub fn from_minimum(l_min: f64) -> Self {
        Self {
            intervals: vec![LengthInterval {
                lo: l_min,
                hi: f64::INFINITY,
                lo_closed: true,
                hi_closed: false,
            }],
        }
    }

    pub fn with_gap(l_min: f64, l1: f64, l2: f64) -> Self {
        Self {
            intervals: vec![
                LengthInterval {
                    lo: l_min,
                    hi: l1,
                    lo_closed: true,
                    hi_closed: true,
                },
                LengthInterval {
                    lo: l2,
                    hi: f64::INFINITY,
                    lo_closed: true,
                    hi_closed: false,
                },
            ],
        }
    }

    pub fn minimum(&self) -> f64 {
        self.intervals[0].lo
    }

    pub fn contains(&self, l: f64, tol: f64) -> bool {
        self.intervals
            .iter()
            .any(|iv| l >= iv.lo - tol && l <= iv.hi + tol)
    }
}

impl fmt::Display for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            if iv.hi.is_infinite() {
                write!(f, "[{:.3}, ∞)", iv.lo)?;
            } else {
                write!(f, "[{:.3}, {:.3}]", iv.lo, iv.hi)?;
            }
        }
        Ok(())
    }
}

/// Set memberships of a `(A, B, r1, r3)` configuration, evaluated on the
/// shortest trajectory of its own locus family.
#[derive(Clone, Debug)]
pub struct RadiiPlanClass {
    /// Middle arc of the family minimum spans at least pi.
    pub p0: bool,
    /// First arc spans at least pi.
    pub p1: bool,
    /// Last arc spans at least pi.
    pub p2: bool,
    /// Right terminal centers at least `|r1| + |r3| + 2 r_min` apart.
    pub p3: bool,
    /// Left terminal centers at least `|r1| + |r3| + 2 r_min` apart.
    pub p4: bool,
    /// Length of the shortest trajectory within the family.
    pub tilde_l: f64,
    pub tilde_trajectory: CccTrajectory,
}

impl RadiiPlanClass {
    pub fn any_membership(&self) -> bool {
        self.p0 || self.p1 || self.p2 || self.p3 || self.p4
    }
}

/// Reachable lengths between two oriented points at minimum turn radius
/// `r_min`: the full half-line from the shortest length, except for pairs
/// whose shortest path is CSC with no elongation membership, which lose an
/// open gap `(l1, l2)`.
pub fn reachable_lengths(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r_min: f64,
) -> Result<LengthSet, Error> {
    let sols = all_word_solutions(a, b, r_min)?;
    let best = shortest_of(&sols)?;
    reachable_from_solutions(a, b, r_min, &sols, &best)
}

fn shortest_of(
    sols: &std::collections::BTreeMap<Word, Vec<DubinsSolution>>,
) -> Result<DubinsSolution, Error> {
    let mut best: Option<&DubinsSolution> = None;
    for word in DUBINS_WORDS {
        for sol in &sols[&word] {
            if best.is_none_or(|b| sol.length < b.length) {
                best = Some(sol);
            }
        }
    }
    best.cloned().ok_or(Error::DegeneratePair)
}

fn reachable_from_solutions(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r_min: f64,
    sols: &std::collections::BTreeMap<Word, Vec<DubinsSolution>>,
    best: &DubinsSolution,
) -> Result<LengthSet, Error> {
    let class = classify_from_shortest(a, b, r_min, best)?;
    match class.category {
        PairCategory::InO | PairCategory::CccShortest => {
            Ok(LengthSet::from_minimum(best.length))
        }
        PairCategory::InOComplement => {
            let lrl = &sols[&LRL];
            let rlr = &sols[&RLR];
            // Outside every membership set both circle centers are closer
            // than 4 r_min, so both three-circle words have two solutions.
            debug_assert!(lrl.len() == 2 && rlr.len() == 2);
            if lrl.len() < 2 || rlr.len() < 2 {
                return Err(Error::GapOrder {
                    l1: f64::NAN,
                    l2: f64::NAN,
                });
            }
            let l1 = lrl[0].length.max(rlr[0].length);
            let mut l2 = (best.length + TAU * r_min).min(lrl[1].length.min(rlr[1].length));
            for word in DUBINS_WORDS.iter().filter(|w| w.has_straight()) {
                for sol in &sols[word] {
                    if (sol.length - best.length).abs() > 1e-9 {
                        l2 = l2.min(sol.length);
                    }
                }
            }
            if l1 >= l2 {
                return Err(Error::GapOrder { l1, l2 });
            }
            Ok(LengthSet::with_gap(best.length, l1, l2))
        }
    }
}

/// A located solution of `l(k) = l_o` within one family.
struct Root {
    k: f64,
    trajectory: CccTrajectory,
}

/// All curvature-feasible solutions of `l(k) = l_o` in one family: both
/// branches split at their jump parameters, plus the straight-middle limit
/// when its length matches.
fn length_roots(fam: &Family, l_o: f64, r_min: f64) -> Vec<Root> {
    let tol = length_tolerance(l_o);
    let feasible = |t: &CccTrajectory| t.radii.iter().all(|r| r.abs() >= r_min * (1.0 - 1e-9));
    let mut out: Vec<Root> = Vec::new();

    for branch in [Branch::Right, Branch::Left] {
        let (lo, hi) = branch.interval();
        let (lo, hi) = (lo + POLE_MARGIN, hi - POLE_MARGIN);
        let mut bounds = vec![lo];
        for d in scan_discontinuities(fam, branch, crate::construction::DISC_GRID) {
            if d.k > lo && d.k < hi {
                bounds.push(d.k);
            }
        }
        bounds.push(hi);
        for pair in bounds.windows(2) {
            let (s_lo, s_hi) = (pair[0], pair[1] - 1e-9);
            if s_hi <= s_lo {
                continue;
            }
            let ks: Vec<f64> = (0..=SEGMENT_GRID)
                .map(|i| s_lo + (s_hi - s_lo) * i as f64 / SEGMENT_GRID as f64)
                .collect();
            let vals = crate::exec::map(&ks, |&k| fam.eval(k).ok().map(|r| r.length));
            for i in 0..SEGMENT_GRID {
                let (Some(f0), Some(f1)) = (vals[i], vals[i + 1]) else {
                    continue;
                };
                let (g0, g1) = (f0 - l_o, f1 - l_o);
                if g0 == 0.0 || g0 * g1 < 0.0 {
                    let (mut ka, mut kb, mut ga) = (ks[i], ks[i + 1], g0);
                    while kb - ka > 1e-13 {
                        let km = 0.5 * (ka + kb);
                        let Ok(ev) = fam.eval(km) else { break };
                        let gm = ev.length - l_o;
                        if ga * gm <= 0.0 {
                            kb = km;
                        } else {
                            ka = km;
                            ga = gm;
                        }
                    }
                    let k = 0.5 * (ka + kb);
                    if let Ok(t) = fam.build(k) {
                        if (t.length - l_o).abs() <= tol && feasible(&t) {
                            out.push(Root { k, trajectory: t });
                        }
                    }
                }
            }
        }
    }
    for pole in [std::f64::consts::FRAC_PI_2, -std::f64::consts::FRAC_PI_2] {
        if let Ok(t) = fam.csc_limit(pole) {
            if (t.length - l_o).abs() <= tol && feasible(&t) {
                out.push(Root {
                    k: pole,
                    trajectory: t,
                });
            }
        }
    }
    out.sort_by(|x, y| x.k.total_cmp(&y.k));
    out.dedup_by(|x, y| (x.k - y.k).abs() < 1e-9);
    out
}

/// Parameter of the family's own shortest trajectory, used as the
/// continuation anchor.
fn family_anchor(fam: &Family, shortest: &DubinsSolution, r_min: f64) -> f64 {
    let (s1, s3) = terminal_signs(shortest.word, r_min);
    if (s1 - fam.r1()).abs() < 1e-12 && (s3 - fam.r3()).abs() < 1e-12 {
        if shortest.word.has_straight() {
            if let Some(pole) = fam.forward_pole() {
                return pole;
            }
        } else if let crate::geometry::Arc::Circular { circle, .. } = &shortest.arcs[1] {
            let h = &fam.hyperbola;
            let branch = h.branch_of_circle(circle.center, circle.radius);
            return h.k_of_point(circle.center, branch);
        }
    }
    fam.forward_pole().unwrap_or(0.0)
}

/// Plans a trajectory of length `l_o` between `a` and `b` with curvature
/// bound `1 / r_min` and at most two changeover points.
pub fn plan(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r_min: f64,
    l_o: f64,
) -> Result<CccTrajectory, Error> {
    if !l_o.is_finite() {
        return Err(Error::NonFinite("requested length"));
    }
    let sols = all_word_solutions(a, b, r_min)?;
    let best = shortest_of(&sols)?;
    let set = reachable_from_solutions(a, b, r_min, &sols, &best)?;
    let tol = length_tolerance(l_o);
    if l_o < set.minimum() - tol {
        return Err(Error::BelowMinimum {
            requested: l_o,
            minimum: set.minimum(),
        });
    }
    if !set.contains(l_o, tol) {
        return Err(Error::UnreachableLength {
            requested: l_o,
            reachable: set,
        });
    }
    if (l_o - best.length).abs() <= tol {
        return Ok(CccTrajectory::from_dubins(&best, r_min));
    }
    // Sweep families starting from the shortest solution's circles; a jump
    // parameter crossing switches one terminal circle, i.e. moves the
    // continuation into the family with that sign flipped.
    let (s1, s3) = terminal_signs(best.word, r_min);
    let families = [(s1, s3), (-s1, s3), (s1, -s3), (-s1, -s3)];
    for (r1, r3) in families {
        let Ok(fam) = Family::new(a, b, r1, r3) else {
            continue;
        };
        let anchor = family_anchor(&fam, &best, r_min);
        let picked = length_roots(&fam, l_o, r_min)
            .into_iter()
            .min_by(|x, y| {
                (x.k - anchor)
                    .abs()
                    .total_cmp(&(y.k - anchor).abs())
            });
        if let Some(root) = picked {
            return Ok(root.trajectory);
        }
    }
    Err(Error::UnreachableLength {
        requested: l_o,
        reachable: set,
    })
}

/// Golden-section refinement of a length minimum inside `[lo, hi]`.
fn refine_minimum(fam: &Family, mut lo: f64, mut hi: f64) -> Option<(f64, f64)> {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let eval = |k: f64| fam.eval(k).ok().map(|r| r.length);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let (mut f1, mut f2) = (eval(x1)?, eval(x2)?);
    for _ in 0..80 {
        if hi - lo < 1e-12 {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = eval(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = eval(x2)?;
        }
    }
    let k = 0.5 * (lo + hi);
    Some((k, eval(k)?))
}

/// Family minimum: grid scan per branch split at jump parameters, local
/// refinement of the bracketed minima, and the straight-middle limits.
pub(crate) fn family_minimum(fam: &Family, grid: usize) -> Result<CccTrajectory, Error> {
    let mut best: Option<CccTrajectory> = None;
    let mut consider = |t: CccTrajectory| {
        if best.as_ref().is_none_or(|b| t.length < b.length) {
            best = Some(t);
        }
    };
    for pole in [std::f64::consts::FRAC_PI_2, -std::f64::consts::FRAC_PI_2] {
        if let Ok(t) = fam.csc_limit(pole) {
            consider(t);
        }
    }
    for branch in [Branch::Right, Branch::Left] {
        let (lo, hi) = branch.interval();
        let (lo, hi) = (lo + POLE_MARGIN, hi - POLE_MARGIN);
        let mut bounds = vec![lo];
        for d in scan_discontinuities(fam, branch, crate::construction::DISC_GRID) {
            if d.k > lo && d.k < hi {
                bounds.push(d.k);
            }
        }
        bounds.push(hi);
        for pair in bounds.windows(2) {
            let (s_lo, s_hi) = (pair[0], pair[1] - 1e-9);
            if s_hi <= s_lo {
                continue;
            }
            let n = (grid as f64 * (s_hi - s_lo) / PI).ceil().max(8.0) as usize;
            let ks: Vec<f64> = (0..=n)
                .map(|i| s_lo + (s_hi - s_lo) * i as f64 / n as f64)
                .collect();
            let vals = crate::exec::map(&ks, |&k| fam.eval(k).ok().map(|r| r.length));
            let Some((i_min, _)) = vals
                .iter()
                .enumerate()
                .filter_map(|(i, v)| v.map(|l| (i, l)))
                .min_by(|x, y| x.1.total_cmp(&y.1))
            else {
                continue;
            };
            let w_lo = if i_min == 0 { s_lo } else { ks[i_min - 1] };
            let w_hi = if i_min == n { s_hi } else { ks[i_min + 1] };
            if let Some((k, _)) = refine_minimum(fam, w_lo, w_hi) {
                if let Ok(t) = fam.build(k) {
                    consider(t);
                }
            }
            // segment endpoints can host one-sided minima at the jumps
            for k in [s_lo, s_hi] {
                if let Ok(t) = fam.build(k) {
                    consider(t);
                }
            }
        }
    }
    best.ok_or(Error::NoTangent)
}

/// Evaluates the family minimum and the elongation memberships for a fixed
/// `(r1, r3)` pair.
pub fn classify_radii(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r1: f64,
    r3: f64,
    r_min: f64,
) -> Result<RadiiPlanClass, Error> {
    if r_min <= 0.0 || !r_min.is_finite() {
        return Err(Error::InvalidRadius(r_min));
    }
    if r1.abs() < r_min * (1.0 - 1e-9) || r3.abs() < r_min * (1.0 - 1e-9) {
        return Err(Error::InvalidRadius(if r1.abs() < r_min { r1 } else { r3 }));
    }
    let fam = Family::new(a, b, r1, r3)?;
    classify_family(a, b, &fam, r_min)
}

fn classify_family(
    a: &OrientedPoint,
    b: &OrientedPoint,
    fam: &Family,
    r_min: f64,
) -> Result<RadiiPlanClass, Error> {
    let tilde = family_minimum(fam, TILDE_GRID)?;
    let (r1, r3) = (fam.r1(), fam.r3());
    let sweep_of = |arc: &crate::geometry::Arc| match arc {
        crate::geometry::Arc::Circular { circle, .. } => arc.length() / circle.radius.abs(),
        crate::geometry::Arc::Line { .. } => 0.0,
    };
    let p0 = !tilde.word.has_straight() && tilde.arcs.len() == 3 && sweep_of(&tilde.arcs[1]) >= PI;
    let p1 = sweep_of(&tilde.arcs[0]) >= PI;
    let p2 = sweep_of(tilde.arcs.last().expect("arcs")) >= PI;
    let span = r1.abs() + r3.abs() + 2.0 * r_min;
    let right_a = SignedCircle::terminal(a, -r1.abs())?.center;
    let right_b = SignedCircle::terminal(b, -r3.abs())?.center;
    let left_a = SignedCircle::terminal(a, r1.abs())?.center;
    let left_b = SignedCircle::terminal(b, r3.abs())?.center;
    Ok(RadiiPlanClass {
        p0,
        p1,
        p2,
        p3: right_a.distance(right_b) >= span,
        p4: left_a.distance(left_b) >= span,
        tilde_l: tilde.length,
        tilde_trajectory: tilde,
    })
}

/// Plans a trajectory of length `l_o` with prescribed terminal radii.
///
/// Pairs on (or rounded onto) the circle-circle boundary, where no locus
/// exists, degenerate to a two-arc trajectory: the radii are re-solved
/// along the tangency manifold, keeping their signs and staying near the
/// requested pair, so that the requested length is met exactly.
pub fn plan_with_radii(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r1: f64,
    r3: f64,
    r_min: f64,
    l_o: f64,
) -> Result<CccTrajectory, Error> {
    if !l_o.is_finite() {
        return Err(Error::NonFinite("requested length"));
    }
    if r_min <= 0.0 || !r_min.is_finite() {
        return Err(Error::InvalidRadius(r_min));
    }
    if r1.abs() < r_min * (1.0 - 1e-9) || r3.abs() < r_min * (1.0 - 1e-9) {
        return Err(Error::InvalidRadius(if r1.abs() < r_min { r1 } else { r3 }));
    }
    let fam = match Family::new(a, b, r1, r3) {
        Ok(fam) => fam,
        Err(Error::NoHyperbola { deficit }) => {
            // Tangency is a measure-zero condition, so any finitely printed
            // circle-circle pair misses it; accept small deficits as
            // intent to plan the two-arc form.
            if -deficit <= 0.01 * (r1.abs() + r3.abs()) {
                return circle_circle_plan(a, b, r1, r3, r_min, l_o);
            }
            return Err(Error::NoHyperbola { deficit });
        }
        Err(e) => return Err(e),
    };
    let class = classify_family(a, b, &fam, r_min)?;
    if !class.any_membership() {
        return Err(Error::NoGuarantee);
    }
    let tol = length_tolerance(l_o);
    if l_o < class.tilde_l - tol {
        return Err(Error::BelowMinimum {
            requested: l_o,
            minimum: class.tilde_l,
        });
    }
    if (l_o - class.tilde_l).abs() <= tol {
        return Ok(class.tilde_trajectory);
    }
    let anchor = class.tilde_trajectory.k.unwrap_or(0.0);
    length_roots(&fam, l_o, r_min)
        .into_iter()
        .min_by(|x, y| (x.k - anchor).abs().total_cmp(&(y.k - anchor).abs()))
        .map(|r| r.trajectory)
        .ok_or(Error::UnreachableLength {
            requested: l_o,
            reachable: LengthSet::from_minimum(class.tilde_l),
        })
}

/// Tangent partner radius: the `r3` putting the terminal circles exactly on
/// the circle-circle boundary for a given `r1`.
fn tangent_partner(a: &OrientedPoint, b: &OrientedPoint, r1: f64) -> Option<f64> {
    let o1 = SignedCircle::terminal(a, r1).ok()?.center;
    let q = o1 - b.position;
    let e = Vec2::new(-b.heading.sin(), b.heading.cos());
    let denom = 2.0 * (r1 - q.dot(e));
    if denom.abs() < 1e-12 {
        return None;
    }
    Some((r1 * r1 - q.norm() * q.norm()) / denom)
}

fn circle_circle_build(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r1: f64,
    r3: f64,
) -> Result<CccTrajectory, Error> {
    let c1 = SignedCircle::terminal(a, r1)?;
    let c3 = SignedCircle::terminal(b, r3)?;
    if (r3 - r1).abs() < GEOM_TOL {
        return Err(Error::DegenerateTangency);
    }
    let contact = (c1.center * r3 - c3.center * r1) / (r3 - r1);
    let arcs = vec![
        arc_between(&c1, a.position, contact)?,
        arc_between(&c3, contact, b.position)?,
    ];
    let word = Word::pair(
        crate::word::Letter::from_radius(r1),
        crate::word::Letter::from_radius(r3),
    );
    let length = arcs.iter().map(crate::geometry::Arc::length).sum();
    Ok(CccTrajectory {
        arcs,
        changeovers: vec![contact],
        radii: vec![r1, r3],
        k: None,
        word,
        length,
    })
}

fn circle_circle_plan(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r1_seed: f64,
    r3_seed: f64,
    r_min: f64,
    l_o: f64,
) -> Result<CccTrajectory, Error> {
    let sign3 = r3_seed.signum();
    let cc_length = |r1: f64| -> Option<f64> {
        let r3 = tangent_partner(a, b, r1)?;
        if r3.signum() != sign3 || r3.abs() < r_min * (1.0 - 1e-9) {
            return None;
        }
        circle_circle_build(a, b, r1, r3).ok().map(|t| t.length)
    };
    let tol = length_tolerance(l_o);
    let sign1 = r1_seed.signum();
    let mut bracket: Option<(f64, f64)> = None;
    let base = cc_length(r1_seed);
    // Expand around the seed until the requested length is straddled.
    'outer: for step in 1..=400 {
        let h = r1_seed.abs().max(1.0) * 0.01 * step as f64;
        for dir in [-1.0, 1.0] {
            let r1 = r1_seed + sign1 * dir * h;
            if r1.abs() < r_min || r1.signum() != sign1 {
                continue;
            }
            let (Some(l0), Some(l1)) = (base, cc_length(r1)) else {
                continue;
            };
            if (l0 - l_o) * (l1 - l_o) <= 0.0 {
                bracket = Some((r1_seed.min(r1), r1_seed.max(r1)));
                break 'outer;
            }
        }
    }
    let Some((mut lo, mut hi)) = bracket else {
        return Err(Error::UnreachableLength {
            requested: l_o,
            reachable: LengthSet::from_minimum(l_o),
        });
    };
    let f_lo = cc_length(lo).ok_or(Error::DegenerateTangency)? - l_o;
    let mut g_lo = f_lo;
    for _ in 0..200 {
        if (hi - lo).abs() < 1e-14 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let Some(lm) = cc_length(mid) else { break };
        let gm = lm - l_o;
        if g_lo * gm <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
            g_lo = gm;
        }
    }
    let r1 = 0.5 * (lo + hi);
    let r3 = tangent_partner(a, b, r1).ok_or(Error::DegenerateTangency)?;
    let t = circle_circle_build(a, b, r1, r3)?;
    if (t.length - l_o).abs() > tol {
        return Err(Error::UnreachableLength {
            requested: l_o,
            reachable: LengthSet::from_minimum(t.length),
        });
    }
    Ok(t)
}

/// Outcome of planning one radii sample.
#[derive(Debug)]
pub struct EnumeratedPlans {
    /// One entry per input sample, in input order.
    pub outcomes: Vec<Result<CccTrajectory, Error>>,
    /// Fallback trajectory from the minimum-radius families, present only
    /// when every sample failed but the length is reachable.
    pub fallback: Option<CccTrajectory>,
}

impl EnumeratedPlans {
    /// The successfully planned trajectories, in sample order, followed by
    /// the fallback when present.
    pub fn trajectories(&self) -> Vec<&CccTrajectory> {
        let mut out: Vec<&CccTrajectory> =
            self.outcomes.iter().filter_map(|o| o.as_ref().ok()).collect();
        if let Some(f) = &self.fallback {
            out.push(f);
        }
        out
    }
}

/// Plans one trajectory of length `l_o` per feasible radii sample.
/// Infeasible samples are skipped and reported in place; when all samples
/// fail but `l_o` is reachable at `r_min`, a minimum-radius plan is
/// appended so the result is never empty for reachable lengths.
pub fn enumerate_plans(
    a: &OrientedPoint,
    b: &OrientedPoint,
    r_min: f64,
    l_o: f64,
    radii_samples: &[(f64, f64)],
) -> Result<EnumeratedPlans, Error> {
    let outcomes = crate::exec::map(radii_samples, |&(r1, r3)| {
        plan_with_radii(a, b, r1, r3, r_min, l_o)
    });
    let fallback = if outcomes.iter().all(|o| o.is_err()) {
        plan(a, b, r_min, l_o).ok()
    } else {
        None
    };
    Ok(EnumeratedPlans { outcomes, fallback })
}
