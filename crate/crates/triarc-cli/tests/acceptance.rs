//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (visible with `--nocapture`) and failing on any unmet
//! check. Golden values follow the reference examples this planner
//! reproduces; derived quantities were frozen from brute-force
//! recomputation.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::time::Instant;
use triarc::geometry::wrap_angle;
use triarc::{
    build_trajectory, classify_radii, csc_limit, discontinuities, jump_probe, oracle, plan,
    plan_with_radii, reachable_lengths, shortest, Branch, CccTrajectory, Hyperbola,
    OrientedPoint, Word,
};

fn op(x: f64, y: f64, heading: f64) -> OrientedPoint {
    OrientedPoint::from_parts(x, y, heading).unwrap()
}

fn example1() -> (OrientedPoint, OrientedPoint) {
    (op(-3.0, 1.0, 0.785), op(0.0, 0.0, 0.0))
}

fn example2() -> (OrientedPoint, OrientedPoint) {
    (op(-30.0, 10.0, 0.714), op(0.0, 0.0, 0.0))
}

/// splitmix64; deterministic randomized checks.
struct Rng(u64);

impl Rng {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    fn sign(&mut self) -> f64 {
        if self.next_u64() & 1 == 0 {
            1.0
        } else {
            -1.0
        }
    }
}

struct Criterion {
    label: &'static str,
    failures: Vec<String>,
    checks: usize,
}

impl Criterion {
    fn new(label: &'static str) -> Self {
        Self {
            label,
            failures: Vec::new(),
            checks: 0,
        }
    }

    fn require(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("{}: PASS ({} checks)", self.label, self.checks);
        } else {
            println!(
                "{}: FAIL ({} of {} checks failed)",
                self.label,
                self.failures.len(),
                self.checks
            );
            for f in &self.failures {
                println!("    - {f}");
            }
            panic!("{} failed: {:?}", self.label, self.failures);
        }
    }
}

fn feasible(t: &CccTrajectory, a: &OrientedPoint, b: &OrientedPoint, r_min: f64) -> bool {
    oracle::validate(t, a, b, r_min, 256).pass
}

#[test]
fn criterion_01_example1_shortest() {
    let mut c = Criterion::new("criterion 01 (shortest path)");
    let (a, b) = example1();
    let sol = shortest(&a, &b, 1.0).unwrap();
    c.require(sol.word == Word::parse("RSL").unwrap(), || {
        format!("word {} != RSL", sol.word)
    });
    c.require((sol.length - 3.484).abs() <= 0.005, || {
        format!("length {} != 3.484 +- 0.005", sol.length)
    });
    // warm caches, then time a single solve
    for _ in 0..16 {
        let _ = shortest(&a, &b, 1.0).unwrap();
    }
    let t0 = Instant::now();
    let reps = 64;
    for _ in 0..reps {
        std::hint::black_box(shortest(&a, &b, 1.0).unwrap());
    }
    let per_call = t0.elapsed() / reps;
    c.require(per_call.as_secs_f64() < 1e-3, || {
        format!("runtime {per_call:?} >= 1 ms")
    });
    c.finish();
}

#[test]
fn criterion_02_example1_reachability() {
    let mut c = Criterion::new("criterion 02 (reachability bounds)");
    let (a, b) = example1();
    let set = reachable_lengths(&a, &b, 1.0).unwrap();
    c.require(set.intervals.len() == 2, || {
        format!("expected a gap, got {set}")
    });
    let l1 = set.intervals[0].hi;
    let l2 = set.intervals[1].lo;
    c.require((l1 - 4.144).abs() <= 0.005, || {
        format!("l1 {l1:.6} != 4.144 +- 0.005")
    });
    // Known red: the longer three-circle solution evaluates to 6.850066
    // (confirmed by forward integration of both tangent constructions),
    // 0.006 away from the quoted 6.856. The quoted value is kept here
    // unchanged rather than widening the tolerance.
    c.require((l2 - 6.856).abs() <= 0.005, || {
        format!("l2 {l2:.6} != 6.856 +- 0.005")
    });
    // `plan` refuses the in-gap length with exit code 3
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_triarc"))
        .args([
            "plan", "--a", "-3,1,0.785", "--b", "0,0,0", "--rmin", "1", "--length", "5.5",
        ])
        .output()
        .expect("run planner binary");
    c.require(out.status.code() == Some(3), || {
        format!("exit code {:?} != 3", out.status.code())
    });
    let stderr = String::from_utf8_lossy(&out.stderr);
    c.require(stderr.contains('\u{222a}'), || {
        format!("reachable set not printed: {stderr}")
    });
    c.finish();
}

#[test]
fn criterion_03_table3_reproduction() {
    let mut c = Criterion::new("criterion 03 (first example table)");
    let (a, b) = example1();
    let rows = [
        (3.60, -1.0, -1.37, 2.634, 1.0),
        (4.05, 1.0, -1.031, -0.379, 1.0),
        (7.00, 1.0, -1.015, 0.360, 1.0),
        (11.15, 1.0, -1.57, 0.748, 1.0),
        (12.45, -1.0, 1.49, -0.634, 1.0),
        (14.90, -1.0, 1.87, -0.876, 1.0),
    ];
    for (l_o, r1, r2, k, r3) in rows {
        let t = build_trajectory(&a, &b, r1, r3, k).unwrap();
        c.require((t.radii[1] - r2).abs() <= 0.02, || {
            format!("row {l_o}: r2 {:.4} != {r2} +- 0.02", t.radii[1])
        });
        c.require((t.length - l_o).abs() <= 0.02, || {
            format!("row {l_o}: length {:.4} != {l_o} +- 0.02", t.length)
        });
        let planned = plan(&a, &b, 1.0, l_o).unwrap();
        c.require(
            (planned.length - l_o).abs() <= 1e-6 * l_o.max(1.0),
            || format!("row {l_o}: planned length {:.8}", planned.length),
        );
        c.require(feasible(&planned, &a, &b, 1.0), || {
            format!("row {l_o}: planned trajectory fails validation")
        });
    }
    c.finish();
}

#[test]
fn criterion_04_table4_reproduction() {
    let mut c = Criterion::new("criterion 04 (second example table)");
    let started = Instant::now();
    let (a, b) = example2();
    let rows = [
        (-2.5, 1.5, 32.099, 20.683),
        (-5.5, -3.58, 33.467, 9.601),
        (-1.0, -1.01, 32.389, 14.798),
        (13.79, 10.01, 35.998, -9.145),
        (1.94, 12.01, 35.673, -27.42),
    ];
    for (r1, r3, tilde, r2) in rows {
        let class = classify_radii(&a, &b, r1, r3, 1.0).unwrap();
        c.require((class.tilde_l - tilde).abs() <= 0.02, || {
            format!("({r1},{r3}): tilde {:.4} != {tilde} +- 0.02", class.tilde_l)
        });
        let t = plan_with_radii(&a, &b, r1, r3, 1.0, 44.5).unwrap();
        c.require((t.length - 44.5).abs() <= 0.05, || {
            format!("({r1},{r3}): length {:.4} != 44.5 +- 0.05", t.length)
        });
        // Known red on four rows: the quoted r2 values are inconsistent
        // with the quoted k values, which this suite does match to their
        // printed precision. The middle radius is forced by tangency once
        // (r1, r3, k) are fixed; the tangency-consistent values are
        // 20.5127, 9.6726, 14.8120, -8.9038, -28.3444. The quoted values
        // are kept unchanged rather than repaired.
        c.require((t.radii[1] - r2).abs() <= 0.05, || {
            format!("({r1},{r3}): r2 {:.4} != {r2} +- 0.05", t.radii[1])
        });
        c.require(feasible(&t, &a, &b, 1.0), || {
            format!("({r1},{r3}): trajectory fails validation")
        });
    }
    // last row: no locus, the planner degenerates to two arcs
    let t = plan_with_radii(&a, &b, 2.04, 59.314, 1.0, 44.5).unwrap();
    c.require(t.arcs.len() == 2 && t.word.to_string() == "LL", || {
        format!("degenerate row: {} arcs, word {}", t.arcs.len(), t.word)
    });
    c.require((t.length - 44.5).abs() <= 0.05, || {
        format!("degenerate row: length {:.4}", t.length)
    });
    c.require(feasible(&t, &a, &b, 1.0), || {
        "degenerate row fails validation".to_string()
    });
    let elapsed = started.elapsed();
    c.require(elapsed.as_secs_f64() < 10.0, || {
        format!("suite took {elapsed:?} >= 10 s")
    });
    c.finish();
}

#[test]
fn criterion_05_locus_invariant() {
    let mut c = Criterion::new("criterion 05 (locus invariant, 1e4 samples)");
    let mut rng = Rng(0xacce_5501);
    let mut tested = 0;
    let mut worst: f64 = 0.0;
    while tested < 10_000 {
        let a = op(
            rng.range(-15.0, 15.0),
            rng.range(-15.0, 15.0),
            rng.range(0.0, TAU),
        );
        let b = op(
            rng.range(-15.0, 15.0),
            rng.range(-15.0, 15.0),
            rng.range(0.0, TAU),
        );
        let r1 = rng.sign() * rng.range(0.3, 8.0);
        let r3 = rng.sign() * rng.range(0.3, 8.0);
        let Ok(h) = Hyperbola::build(&a, &b, r1, r3) else {
            continue;
        };
        let k = rng.range(-FRAC_PI_2 + 0.02, 3.0 * FRAC_PI_2 - 0.02);
        let Ok(o2) = h.point(k) else { continue };
        tested += 1;
        let gap = (o2.distance(h.focus1) - o2.distance(h.focus2)).abs();
        let err = (gap - (r1 - r3).abs()).abs() / h.focal.max(1.0);
        worst = worst.max(err);
    }
    c.require(worst <= 1e-9, || format!("worst relative error {worst:.3e}"));
    c.finish();
}

#[test]
fn criterion_06_jump_magnitudes() {
    let mut c = Criterion::new("criterion 06 (jump magnitudes, 100 configs)");
    let mut rng = Rng(0xacce_5506);
    let mut configs = 0;
    let mut attempts = 0;
    let mut probed = 0;
    while configs < 100 && attempts < 20_000 {
        attempts += 1;
        let a = op(
            rng.range(-6.0, 6.0),
            rng.range(-6.0, 6.0),
            rng.range(0.0, TAU),
        );
        let b = op(
            rng.range(-6.0, 6.0),
            rng.range(-6.0, 6.0),
            rng.range(0.0, TAU),
        );
        if a.position.distance(b.position) < 0.5 {
            continue;
        }
        let r1 = rng.sign() * rng.range(1.0, 2.0);
        let r3 = rng.sign() * rng.range(1.0, 2.0);
        let mut any = false;
        for branch in [Branch::Right, Branch::Left] {
            let Ok(discs) = discontinuities(&a, &b, r1, r3, branch) else {
                continue;
            };
            for d in discs {
                // The straddle reads jump +- slope * 2 eps; skip jumps whose
                // local slope alone would exceed the tolerance budget.
                let eps = 1e-6;
                let slope = [-1.0, 1.0]
                    .iter()
                    .filter_map(|side| {
                        let near = triarc::length_fn(&a, &b, r1, r3, d.k + side * eps).ok()?;
                        let far = triarc::length_fn(&a, &b, r1, r3, d.k + side * 3.0 * eps).ok()?;
                        Some((far - near).abs() / (2.0 * eps))
                    })
                    .fold(f64::INFINITY, f64::min);
                if !slope.is_finite() || slope * 2.0 * eps > 2.5e-4 {
                    continue;
                }
                let probe = jump_probe(&a, &b, r1, r3, d.k, eps).unwrap();
                any = true;
                probed += 1;
                c.require((probe - d.magnitude).abs() <= 1e-3, || {
                    format!(
                        "probe {probe:.6} != {:.6} at k={} ({r1},{r3})",
                        d.magnitude, d.k
                    )
                });
            }
        }
        if any {
            configs += 1;
        }
    }
    c.require(configs >= 100, || {
        format!("only {configs} configurations with jumps in {attempts} attempts")
    });
    c.require(probed >= 100, || format!("only {probed} probes"));
    c.finish();
}

#[test]
fn criterion_07_gap_soundness() {
    let mut c = Criterion::new("criterion 07 (gap soundness sweep)");
    let started = Instant::now();
    let (a, b) = example1();
    let mut in_gap_feasible = 0u64;
    let mut in_gap_raw = 0u64;
    for (r1, r3) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
        for branch in [Branch::Right, Branch::Left] {
            let (lo, hi) = match branch {
                Branch::Right => (-FRAC_PI_2 + 1e-5, FRAC_PI_2 - 1e-5),
                Branch::Left => (FRAC_PI_2 + 1e-5, 3.0 * FRAC_PI_2 - 1e-5),
            };
            let n = 10_000;
            for i in 0..n {
                let k = lo + (hi - lo) * i as f64 / (n - 1) as f64;
                let Ok(t) = build_trajectory(&a, &b, r1, r3, k) else {
                    continue;
                };
                if t.length > 4.154 && t.length < 6.846 {
                    in_gap_raw += 1;
                    if t.radii.iter().all(|r| r.abs() >= 1.0 - 1e-9) {
                        in_gap_feasible += 1;
                    }
                }
            }
        }
    }
    c.require(in_gap_raw > 0, || {
        "sweep never even entered the gap band; no coverage".to_string()
    });
    c.require(in_gap_feasible == 0, || {
        format!("{in_gap_feasible} curvature-feasible trajectories inside the gap")
    });
    let elapsed = started.elapsed();
    c.require(elapsed.as_secs_f64() < 5.0, || {
        format!("sweep took {elapsed:?} >= 5 s")
    });
    c.finish();
}

#[test]
fn criterion_08_classification_and_line_limit() {
    let mut c = Criterion::new("criterion 08 (classification cells + line limit)");
    let (a, b) = example1();
    // one instance per cell of the sign/magnitude/branch table
    let cells = [
        (1.0, 1.0, 0.0, "LRL"),
        (1.0, 2.0, 0.0, "LLL"),
        (1.0, 1.0, PI, "LLL"),
        (1.0, 2.0, PI, "LRL"),
        (-1.0, -1.0, 0.0, "RLR"),
        (-1.0, -2.0, 0.0, "RRR"),
        (-1.0, -1.0, PI, "RRR"),
        (-1.0, -2.0, PI, "RLR"),
        (1.0, -1.0, 0.0, "LRR"),
        (1.0, -1.0, PI, "LLR"),
        (-1.0, 1.0, 0.0, "RLL"),
        (-1.0, 1.0, PI, "RRL"),
    ];
    for (r1, r3, k, expected) in cells {
        let t = build_trajectory(&a, &b, r1, r3, k).unwrap();
        c.require(t.word.to_string() == expected, || {
            format!("cell ({r1},{r3},k={k:.2}): word {} != {expected}", t.word)
        });
    }
    // line-limit direction convergence at both hosting poles
    for (r1, r3, pole) in [(-1.0, 1.0, FRAC_PI_2), (1.0, 1.0, -FRAC_PI_2)] {
        let limit = csc_limit(&a, &b, r1, r3, pole).unwrap();
        let limit_dir = (limit.changeovers[1] - limit.changeovers[0]).angle();
        for side in [-1.0, 1.0] {
            let k = pole + side * 1.000001e-6;
            if !(-FRAC_PI_2..3.0 * FRAC_PI_2).contains(&k) {
                continue;
            }
            let t = build_trajectory(&a, &b, r1, r3, k).unwrap();
            let chord = t.changeovers[1] - t.changeovers[0];
            let err = wrap_angle(chord.angle() - limit_dir).abs();
            c.require(err <= 1e-6, || {
                format!("({r1},{r3}) pole {pole:.3} side {side}: direction error {err:.3e}")
            });
        }
    }
    c.finish();
}

#[test]
fn criterion_09_oracle_convergence() {
    let mut c = Criterion::new("criterion 09 (oracle convergence)");
    let (a1, b1) = example1();
    let (a2, b2) = example2();
    let goldens: Vec<(CccTrajectory, OrientedPoint, OrientedPoint)> = vec![
        (plan(&a1, &b1, 1.0, 3.60).unwrap(), a1, b1),
        (plan(&a1, &b1, 1.0, 7.00).unwrap(), a1, b1),
        (plan(&a1, &b1, 1.0, 14.90).unwrap(), a1, b1),
        (plan_with_radii(&a2, &b2, -2.5, 1.5, 1.0, 44.5).unwrap(), a2, b2),
        (plan_with_radii(&a2, &b2, 2.04, 59.314, 1.0, 44.5).unwrap(), a2, b2),
    ];
    for (i, (t, a, b)) in goldens.iter().enumerate() {
        let err = |n: usize| {
            let r = oracle::validate(t, a, b, 1.0, n);
            (r.length_polyline - r.length_analytic).abs()
        };
        let (e1, e2) = (err(128), err(256));
        c.require(e2 <= e1 / 3.5 + 1e-12, || {
            format!("golden {i}: polyline error {e1:.3e} -> {e2:.3e}, not second order")
        });
        let report = oracle::validate(t, a, b, 1.0, 256);
        c.require(report.max_curvature <= 1.0 + 1e-4, || {
            format!("golden {i}: max curvature {:.6}", report.max_curvature)
        });
    }
    c.finish();
}

#[test]
fn criterion_10_planner_contract() {
    let mut c = Criterion::new("criterion 10 (planner contract, 500 pairs)");
    let started = Instant::now();
    let mut rng = Rng(0xacce_5510);
    let mut pairs = 0;
    while pairs < 500 {
        let a = op(
            rng.range(-8.0, 8.0),
            rng.range(-8.0, 8.0),
            rng.range(0.0, TAU),
        );
        let b = op(
            rng.range(-8.0, 8.0),
            rng.range(-8.0, 8.0),
            rng.range(0.0, TAU),
        );
        if a.position.distance(b.position) < 0.3 {
            continue;
        }
        let Ok(set) = reachable_lengths(&a, &b, 1.0) else {
            continue;
        };
        pairs += 1;
        let lm = set.minimum();
        let lengths = if set.intervals.len() == 2 {
            let l1 = set.intervals[0].hi;
            let l2 = set.intervals[1].lo;
            [
                lm,
                lm + (l1 - lm) * rng.range(0.2, 0.8),
                l2 + rng.range(0.5, 6.0),
            ]
        } else {
            [
                lm,
                lm + rng.range(0.4, 2.0),
                lm + TAU + rng.range(0.0, 5.0),
            ]
        };
        for l_o in lengths {
            match plan(&a, &b, 1.0, l_o) {
                Ok(t) => {
                    c.require(
                        (t.length - l_o).abs() <= 1e-6 * l_o.max(1.0),
                        || format!("pair {pairs} l_o={l_o:.4}: length {:.8}", t.length),
                    );
                    c.require(t.changeover_count() <= 2, || {
                        format!("pair {pairs} l_o={l_o:.4}: {} changeovers", t.changeover_count())
                    });
                    c.require(feasible(&t, &a, &b, 1.0), || {
                        format!("pair {pairs} ({a:?} -> {b:?}) l_o={l_o:.4}: validation failed")
                    });
                }
                Err(e) => c.require(false, || {
                    format!("pair {pairs} ({a:?} -> {b:?}) l_o={l_o:.4}: {e}")
                }),
            }
        }
    }
    let elapsed = started.elapsed();
    c.require(elapsed.as_secs_f64() < 30.0, || {
        format!("500 pairs took {elapsed:?} >= 30 s")
    });
    c.finish();
}
