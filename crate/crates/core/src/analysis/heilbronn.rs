//! The four-point Heilbronn problem in a convex polygon: the largest
//! possible minimum triangle area over four placed points is
//! `max(t/3, p/2)`, where `t` is the maximum area triangle and `p` the
//! maximum area parallelogram.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::geom::{triangle_area, Point};
use crate::polygon::Polygon;
use crate::search::{find_map, SearchOptions};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Heilbronn4Result {
    pub value: f64,
    pub placement: [Point; 4],
    pub t: f64,
    pub p: f64,
}

/// Maximum area triangle by brute force over vertex triples.
pub fn max_area_triangle(p: &Polygon) -> ([Point; 3], f64) {
    let n = p.n();
    let mut best = ([p.vertex(0); 3], -1.0);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let t = [p.vertex(a), p.vertex(b), p.vertex(c)];
                let area = triangle_area(t[0], t[1], t[2]);
                if area > best.1 {
                    best = (t, area);
                }
            }
        }
    }
    best
}

/// Smallest of the four triangles spanned by four points.
pub fn min_triangle_area(q: &[Point; 4]) -> f64 {
    let [a, b, c, d] = *q;
    [triangle_area(a, b, c), triangle_area(a, b, d), triangle_area(a, c, d), triangle_area(b, c, d)]
        .into_iter()
        .fold(f64::INFINITY, f64::min)
}

pub fn heilbronn4(p: &Polygon, opts: &SearchOptions) -> Result<Heilbronn4Result> {
    let (tri, t) = max_area_triangle(p);
    let map = find_map(p, opts)?;
    let pa = map.pgram.area();
    let (value, placement) = if t / 3.0 >= pa / 2.0 {
        let g = (tri[0] + tri[1] + tri[2]) / 3.0;
        (t / 3.0, [tri[0], tri[1], tri[2], g])
    } else {
        (pa / 2.0, map.pgram.corners)
    };
    Ok(Heilbronn4Result { value, placement, t, p: pa })
}

fn sample_inside(p: &Polygon, rng: &mut ChaCha8Rng, lo: Point, hi: Point) -> Point {
    loop {
        let x = Point::new(rng.gen_range(lo.x..=hi.x), rng.gen_range(lo.y..=hi.y));
        if p.contains_point_linear(x, 0.0) {
            return x;
        }
    }
}

/// Baseline: best minimum triangle area found by `restarts` random
/// four-point placements, each refined by a short hill climb.
pub fn random_search_h4(p: &Polygon, restarts: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vs = p.vertices();
    let lo =
        Point::new(vs.iter().map(|v| v.x).fold(f64::MAX, f64::min), vs.iter().map(|v| v.y).fold(f64::MAX, f64::min));
    let hi =
        Point::new(vs.iter().map(|v| v.x).fold(f64::MIN, f64::max), vs.iter().map(|v| v.y).fold(f64::MIN, f64::max));
    let mut best = 0.0f64;
    for _ in 0..restarts {
        let mut q = [(); 4].map(|_| sample_inside(p, &mut rng, lo, hi));
        let mut val = min_triangle_area(&q);
        let mut step = 0.1 * p.diameter();
        for _ in 0..20 {
            let k = rng.gen_range(0..4);
            let old = q[k];
            q[k] = old + Point::new(rng.gen_range(-step..=step), rng.gen_range(-step..=step));
            let v = min_triangle_area(&q);
            if p.contains_point_linear(q[k], 0.0) && v > val {
                val = v;
            } else {
                q[k] = old;
                step *= 0.9;
            }
        }
        best = best.max(val);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_value_and_placement() {
        let t = Polygon::new(&[(0.0, 0.0), (0.0, 4.0), (4.0, 0.0)]).unwrap();
        let r = heilbronn4(&t, &SearchOptions::default()).unwrap();
        assert!((r.t - 8.0).abs() < 1e-12);
        assert!((r.p - 4.0).abs() < 1e-9);
        assert!((r.value - 8.0 / 3.0).abs() < 1e-9);
        assert!(r.placement[3].dist(Point::new(4.0 / 3.0, 4.0 / 3.0)) < 1e-12);
        assert!((min_triangle_area(&r.placement) - r.value).abs() < 1e-9);
    }
}
