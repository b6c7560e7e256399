//! Invariant families run by `lmap selftest`. Each prints one PASS/FAIL
//! line; the run fails when any family does.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lmap_core::analysis::{oracle_map, random_polygon, regular_polygon, verify_interleaving};
use lmap_core::disprod::{bimonotone_violations, check_unimodal, edge_midpoint_rule, z_point, ZTable};
use lmap_core::pgram::area_identity_check;
use lmap_core::search::clamping_violations;
use lmap_core::{find_all_lmaps, Line, Pgram, Point, Polygon, SearchOptions, Unit};

type Family = Result<String, String>;
type Check = (&'static str, fn(&Ctx) -> Family);

struct Ctx {
    polys: Vec<Polygon>,
    seed: u64,
    inject_fault: bool,
}

fn triangle() -> Polygon {
    Polygon::new(&[(0.0, 0.0), (0.0, 4.0), (4.0, 0.0)]).unwrap()
}

fn lmaps(p: &Polygon) -> Vec<Pgram> {
    find_all_lmaps(p, &SearchOptions::default()).map(|r| r.lmaps.iter().map(|c| c.pgram).collect()).unwrap_or_default()
}

fn verdict(bad: usize, detail: String) -> Family {
    if bad == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn chasing_pairs(p: &Polygon) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = p.n();
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| i != j && p.chases(i, j))
}

fn fixtures(_: &Ctx) -> Family {
    let t = lmaps(&triangle());
    let pent = lmaps(&regular_polygon(5).unwrap());
    let ok = t.len() == 3 && t.iter().all(|q| (q.area() - 4.0).abs() < 1e-9) && pent.len() == 5;
    verdict(usize::from(!ok), format!("triangle {} LMAPs, pentagon {} LMAPs", t.len(), pent.len()))
}

fn unimodality(ctx: &Ctx) -> Family {
    let (mut pairs, mut bad) = (0, 0);
    for p in &ctx.polys {
        for (i, j) in chasing_pairs(p) {
            pairs += 1;
            bad += usize::from(!check_unimodal(p, i, j, 201).unwrap_or(false));
        }
    }
    verdict(bad, format!("{pairs} chasing pairs, {bad} violations"))
}

fn bimonotonicity(ctx: &Ctx) -> Family {
    let bad: usize = ctx.polys.iter().map(|p| bimonotone_violations(p, &ZTable::build(p))).sum();
    verdict(bad, format!("{} polygons, {bad} violations", ctx.polys.len()))
}

fn area_identity(ctx: &Ctx) -> Family {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let o = Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let phi: f64 = rng.gen_range(0.0..std::f64::consts::PI);
        let theta: f64 = rng.gen_range(0.2..3.0);
        let u = Point::new(phi.cos(), phi.sin());
        let w = Point::new((phi + theta).cos(), (phi + theta).sin());
        let mut pick = || o + u * rng.gen_range(0.05..2.0) + w * rng.gen_range(0.05..2.0);
        let (x, x2) = (pick(), pick());
        let (l, l2) = (Line::new(o, u).unwrap(), Line::new(o, w).unwrap());
        match area_identity_check(x, x2, &l, &l2, 1e-9) {
            Ok((a, b)) => worst = worst.max((a - b).abs() / a.max(1e-300)),
            Err(e) => return Err(e.to_string()),
        }
    }
    verdict(usize::from(worst > 1e-9), format!("200 instances, max relative error {worst:.1e}"))
}

fn z_points(ctx: &Ctx) -> Family {
    let mut worst = 0.0f64;
    for p in &ctx.polys {
        let z = ZTable::build(p);
        for (i, j) in chasing_pairs(p) {
            let Ok(single) = z_point(p, i, j) else { return Err(format!("no Z-point for ({i}, {j})")) };
            worst = worst.max(single.point.dist(z.z(i, j).point) / p.diameter());
            if let Unit::Edge(k) = single.unit {
                if let Ok(m) = edge_midpoint_rule(p, i, j, k) {
                    worst = worst.max(single.point.dist(m) / p.diameter());
                }
            }
        }
    }
    verdict(usize::from(worst > 1e-9), format!("max deviation {worst:.1e} of the diameter"))
}

/// Structural violations among the LMAPs of the triangle fixture and every
/// polygon: (checked, missing anchors, corners outside their stretch).
fn structure(ctx: &Ctx, fault: bool) -> (usize, usize, usize) {
    let (mut checked, mut anchors, mut clamps) = (0, 0, 0);
    let t = triangle();
    let mut cases: Vec<(&Polygon, Vec<Pgram>)> = vec![(&t, lmaps(&t))];
    if fault {
        // Inscribed but with no corner on a vertex.
        cases[0].1[0] = Pgram::new([(0.0, 1.0), (0.0, 3.0), (2.0, 2.0), (2.0, 0.0)].map(Point::from));
    }
    cases.extend(ctx.polys.iter().map(|p| (p, lmaps(p))));
    for (p, qs) in cases {
        let z = ZTable::build(p);
        for q in qs {
            checked += 1;
            match clamping_violations(p, &z, &q, 1e-7 * p.diameter()) {
                Ok(v) => {
                    let a = v.iter().filter(|m| m.starts_with("no corner")).count();
                    anchors += a;
                    clamps += v.len() - a;
                }
                Err(_) => anchors += 1,
            }
        }
    }
    (checked, anchors, clamps)
}

fn anchoring(ctx: &Ctx) -> Family {
    let (checked, bad, _) = structure(ctx, ctx.inject_fault);
    verdict(bad, format!("{checked} LMAPs, {bad} without a corner on a vertex"))
}

fn clamping(ctx: &Ctx) -> Family {
    let (checked, _, bad) = structure(ctx, false);
    verdict(bad, format!("{checked} LMAPs, {bad} corners outside their clamping stretch"))
}

fn interleaving(ctx: &Ctx) -> Family {
    let (mut pairs, mut bad) = (0, 0);
    for p in &ctx.polys {
        let rep = verify_interleaving(p, &lmaps(p));
        pairs += rep.pairs_checked;
        bad += rep.violations.len();
    }
    verdict(bad, format!("{pairs} LMAP pairs, {bad} violations"))
}

fn count_bound(ctx: &Ctx) -> Family {
    let worst = ctx.polys.iter().map(|p| lmaps(p).len() as f64 / p.n() as f64).fold(0.0, f64::max);
    verdict(usize::from(worst > 2.0), format!("largest LMAP count per vertex {worst:.2}"))
}

fn oracle(ctx: &Ctx) -> Family {
    let mut bad = 0;
    for (k, p) in ctx.polys.iter().enumerate() {
        let map = lmaps(p).iter().map(|q| q.area()).fold(0.0, f64::max);
        let o = oracle_map(p, 60);
        let best = o.best.area();
        if best > map * (1.0 + 1e-9) || map - best > o.slack_estimate {
            bad += 1;
            eprintln!("oracle disagrees on polygon {k}: {best} vs {map}");
        }
    }
    verdict(bad, format!("{} polygons, {bad} disagreements", ctx.polys.len()))
}

fn invariance(ctx: &Ctx) -> Family {
    let mut bad = 0;
    let (s, c) = 0.7f64.sin_cos();
    for p in &ctx.polys {
        let base = lmaps(p);
        let moved: Vec<Point> =
            p.vertices().iter().map(|v| Point::new(-(c * v.x - s * v.y), s * v.x + c * v.y) * 3.0).collect();
        let other = lmaps(&Polygon::new(&moved).unwrap());
        let same = base.len() == other.len()
            && base.iter().zip(&other).all(|(a, b)| (9.0 * a.area() - b.area()).abs() <= 1e-7 * b.area());
        bad += usize::from(!same);
    }
    verdict(bad, format!("{} polygons, {bad} changed under rotation, reflection and scaling", ctx.polys.len()))
}

/// Runs every family on `given`, or on `count` random polygons when no
/// polygon is given. Returns the name of the first failing family.
pub fn run(given: Option<Polygon>, count: usize, seed: u64, inject_fault: bool) -> Option<&'static str> {
    let polys = match given {
        Some(p) => vec![p],
        None => {
            (0..count as u64).filter_map(|s| random_polygon(5 + (s as usize % 16), seed.wrapping_add(s)).ok()).collect()
        }
    };
    let ctx = Ctx { polys, seed, inject_fault };
    let families: [Check; 11] = [
        ("fixtures", fixtures),
        ("unimodality", unimodality),
        ("bi-monotonicity", bimonotonicity),
        ("area identity", area_identity),
        ("z-points", z_points),
        ("anchoring", anchoring),
        ("clamping", clamping),
        ("interleaving", interleaving),
        ("count bound", count_bound),
        ("oracle agreement", oracle),
        ("invariance", invariance),
    ];
    let mut first = None;
    for (name, f) in families {
        match f(&ctx) {
            Ok(d) => println!("PASS {name}: {d}"),
            Err(d) => {
                first.get_or_insert(name);
                println!("FAIL {name}: {d}");
            }
        }
    }
    first
}
