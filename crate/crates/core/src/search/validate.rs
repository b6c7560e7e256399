//! Candidate screening: inscription, slidability, duplicate merging and
//! the sampled local-maximality probe.

use crate::clamping::zeta;
use crate::disprod::ZTable;
use crate::error::{Error, Result};
use crate::geom::Line;
use crate::pgram::{midpoint_pair_on_lines, Pgram};
use crate::polygon::{Chasing, Polygon, Unit};

use super::{Candidate, ProbeResult};

/// Sets the inscribed and non-slidable flags (and the corner units), then
/// runs the local-maximality probe when requested and applicable.
pub fn validate(p: &Polygon, mut c: Candidate, probe: bool) -> Candidate {
    let units: Option<[Unit; 4]> = c
        .pgram
        .corners
        .iter()
        .map(|&x| p.locate(x).map(|b| b.unit))
        .collect::<Option<Vec<_>>>()
        .map(|v| [v[0], v[1], v[2], v[3]]);
    c.corner_units = units;
    c.flags.inscribed = units.is_some();
    c.flags.non_slidable = units.is_some_and(|u| (0..4).all(|a| (a + 1..4).all(|b| !(u[a].is_edge() && u[a] == u[b]))));
    c.flags.local_max_probe = match units {
        Some(u) if probe && c.flags.non_slidable => local_max_probe(p, &c.pgram, &u),
        _ => ProbeResult::NotRun,
    };
    c
}

/// Merges candidates that are the same parallelogram up to relabeling
/// (corners within `1e-9 · diameter`), pooling their provenance. The result
/// is ordered by area.
pub fn dedup(p: &Polygon, mut cands: Vec<Candidate>) -> Vec<Candidate> {
    cands.sort_by(|a, b| a.area().total_cmp(&b.area()));
    let tol = 1e-9 * p.diameter();
    let area_tol = 8.0 * tol * p.diameter();
    let mut out: Vec<Candidate> = Vec::new();
    for c in cands {
        let area = c.area();
        let mut hit = None;
        for idx in (0..out.len()).rev() {
            if out[idx].area() < area - area_tol {
                break;
            }
            if out[idx].pgram.same_as(&c.pgram, tol) {
                hit = Some(idx);
                break;
            }
        }
        let Some(idx) = hit else {
            out.push(c);
            continue;
        };
        let o = &mut out[idx];
        let mut found_by = o.found_by.clone();
        for s in &c.found_by {
            if !found_by.contains(s) {
                found_by.push(*s);
            }
        }
        found_by.sort();
        let better = c.flags.inscribed && c.flags.non_slidable && !(o.flags.inscribed && o.flags.non_slidable);
        if better {
            *o = c;
        }
        o.source = found_by[0];
        o.found_by = found_by;
    }
    out
}

fn unit_lines(p: &Polygon, u: Unit) -> Vec<Line> {
    match u {
        Unit::Edge(e) => vec![p.edge_line(e)],
        Unit::Vertex(v) => vec![p.edge_line(v + p.n() - 1), p.edge_line(v)],
    }
}

const DIRECTIONS: [(f64, f64); 8] =
    [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0), (1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)];

/// Moves one pair of opposite corners along the boundary by small steps
/// (separately and jointly; the step is `1e-4 · perimeter` capped at a
/// tenth of the shortest edge touching a corner and shrunk for nearly
/// parallel support lines, at five decades), re-solves the other pair on the lines of
/// their units, and fails when any feasible neighbor has larger area.
pub fn local_max_probe(p: &Polygon, q: &Pgram, units: &[Unit; 4]) -> ProbeResult {
    let base = q.area();
    // Re-solved corners carry rounding error of order `ε · |coordinate| / sin θ`,
    // so area gains below `ε · |coordinate| · diameter / sin θ` are noise.
    let reach = p.vertices().iter().map(|v| v.x.abs().max(v.y.abs())).fold(0.0, f64::max);
    let noise = 16.0 * f64::EPSILON * reach * p.diameter();
    let rel_slack = p.tolerances().probe_slack * base;
    let feas = (1e-12 * p.diameter()).max(8.0 * f64::EPSILON * reach);
    let ptol = p.tolerances().parallel;
    let Some(located) = q.corners.iter().map(|&c| p.locate(c)).collect::<Option<Vec<_>>>() else {
        return ProbeResult::NotRun;
    };
    // Steps stay well inside the edges touching the corners, so re-solved
    // corners do not run off their units on finely subdivided polygons.
    let local = units
        .iter()
        .map(|&u| match u {
            Unit::Edge(e) => p.edge_len(e),
            Unit::Vertex(v) => p.edge_len(v + p.n() - 1).min(p.edge_len(v)),
        })
        .fold(f64::INFINITY, f64::min);
    let eps0 = (1e-4 * p.perimeter()).min(0.1 * local);
    let mut probed = false;
    for c in 0..2 {
        let (b0, b2) = (located[c], located[c + 2]);
        let lines1 = unit_lines(p, units[c + 1]);
        let lines3 = unit_lines(p, units[(c + 3) % 4]);
        // Re-solved corners move about `step / sin θ` for the angle θ between
        // their lines, so nearly parallel lines call for shorter steps.
        let sin = lines1.iter().flat_map(|l1| lines3.iter().map(move |l3| l1.sin_angle(l3))).fold(1.0f64, f64::min);
        let slack = rel_slack.max(noise / sin.max(1e-6));
        for scale in [1.0, 1e-1, 1e-2, 1e-3, 1e-4] {
            let eps = scale * eps0 * sin.max(1e-6);
            for (d0, d2) in DIRECTIONS {
                let x = p.advance(&b0, d0 * eps).point;
                let x2 = p.advance(&b2, d2 * eps).point;
                let m = x.midpoint(x2);
                for l1 in &lines1 {
                    for l3 in &lines3 {
                        let Ok((y1, y3)) = midpoint_pair_on_lines(l1, l3, m, ptol) else { continue };
                        if !p.contains_point(y1, feas) || !p.contains_point(y3, feas) {
                            continue;
                        }
                        probed = true;
                        let area = Pgram::new([x, y1, x2, y3]).area();
                        if area > base + slack {
                            return ProbeResult::Failed;
                        }
                    }
                }
            }
        }
    }
    if probed {
        ProbeResult::Passed
    } else {
        ProbeResult::NotRun
    }
}

/// Structural properties every locally maximal parallelogram has: at
/// least one corner on a vertex, and each corner inside the clamping
/// stretch of the units holding its neighbors. Returns a description of
/// each violated property.
pub fn clamping_violations(p: &Polygon, z: &ZTable, q: &Pgram, tol: f64) -> Result<Vec<String>> {
    let units: Vec<Unit> = q
        .corners
        .iter()
        .map(|&c| p.locate_with(c, tol).map(|b| b.unit).ok_or(Error::NotInscribed))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    if !units.iter().any(|u| u.is_vertex()) {
        out.push("no corner on a vertex".to_string());
    }
    for i in 0..4 {
        let u = units[(i + 1) % 4];
        let u2 = units[(i + 3) % 4];
        let Ok(rel) = p.unit_chasing(u, u2) else { continue };
        if rel == Chasing::U2ChasesU {
            continue;
        }
        let zt = zeta(p, z, u, u2)?;
        if !p.portion_contains_approx(&zt.portion, q.corners[i], tol) {
            out.push(format!("corner {i} outside zeta({u:?}, {u2:?}) ({rel:?})"));
        }
    }
    Ok(out)
}
