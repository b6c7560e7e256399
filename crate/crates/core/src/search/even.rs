//! Candidates whose four corners are all even.
//!
//! Both diagonals then join a vertex to a unit it neither chases nor is
//! chased by, so each diagonal comes from the pair set `S` and the common
//! center lies in both mid-regions.

use crate::clamping::{mid_region, s_set, MidRegion};
use crate::geom::Point;
use crate::polygon::{Polygon, Unit};

use super::{Raw, Sink, Source};

fn center_hit(r: &MidRegion, s: &MidRegion, tol: f64) -> Option<Point> {
    use MidRegion::*;
    match (*r, *s) {
        (Point(a), Point(b)) => (a.dist(b) <= tol).then_some(a),
        (Point(x), Segment(a, b)) | (Segment(a, b), Point(x)) => {
            let d = b - a;
            let t = (x - a).dot(d) / d.dot(d);
            ((-1e-9..=1.0 + 1e-9).contains(&t) && x.dist(a + d * t) <= tol).then_some(x)
        }
        (Segment(a, b), Segment(c, e)) => {
            let (d1, d2) = (b - a, e - c);
            let den = d1.cross(d2);
            // Collinear overlaps are skipped: they describe a sliding family.
            if den.abs() <= 1e-12 * d1.norm() * d2.norm() {
                return None;
            }
            let w = c - a;
            let s = w.cross(d2) / den;
            let t = w.cross(d1) / den;
            let ok = |v: f64| (-1e-9..=1.0 + 1e-9).contains(&v);
            (ok(s) && ok(t)).then(|| a + d1 * s)
        }
        _ => None,
    }
}

fn ends(p: &Polygon, (u, w): (Unit, Unit), c: Point) -> (Point, Point) {
    match (u, w) {
        (Unit::Vertex(v), _) => (p.vertex(v), c * 2.0 - p.vertex(v)),
        (_, Unit::Vertex(v)) => (c * 2.0 - p.vertex(v), p.vertex(v)),
        _ => unreachable!("every pair in S contains a vertex"),
    }
}

pub(crate) fn four_even(p: &Polygon, sink: &mut Sink) {
    let mut pairs: Vec<(Unit, Unit)> =
        s_set(p).into_iter().map(|(a, b)| if a <= b { (a, b) } else { (b, a) }).collect();
    pairs.sort();
    pairs.dedup();
    let regions: Vec<MidRegion> = pairs.iter().map(|&(a, b)| mid_region(p, a, b).expect("distinct units")).collect();
    let boxes: Vec<[f64; 4]> = regions
        .iter()
        .map(|r| {
            let c = r.corners();
            let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
            for q in c {
                x0 = x0.min(q.x);
                y0 = y0.min(q.y);
                x1 = x1.max(q.x);
                y1 = y1.max(q.y);
            }
            [x0, y0, x1, y1]
        })
        .collect();
    let tol = p.boundary_tol();
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            sink.stats.even_pairs += 1;
            let (ba, bb) = (&boxes[a], &boxes[b]);
            if ba[0] > bb[2] + tol || bb[0] > ba[2] + tol || ba[1] > bb[3] + tol || bb[1] > ba[3] + tol {
                continue;
            }
            let (pa, pb) = (pairs[a], pairs[b]);
            if pa.0 == pb.0 || pa.0 == pb.1 || pa.1 == pb.0 || pa.1 == pb.1 {
                continue;
            }
            let Some(c) = center_hit(&regions[a], &regions[b], tol) else { continue };
            let (a0, a2) = ends(p, pa, c);
            let (a1, a3) = ends(p, pb, c);
            let anchor = match (pa.0, pa.1) {
                (Unit::Vertex(v), _) | (_, Unit::Vertex(v)) => v,
                _ => unreachable!(),
            };
            sink.push(Raw { corners: [a0, a1, a2, a3], source: Source::Even, pair: pa, anchor });
        }
    }
}
