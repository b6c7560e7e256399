//! Brute-force sampling oracle for the maximum area parallelogram.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::geom::Point;
use crate::pgram::Pgram;
use crate::polygon::Polygon;

/// Constant in the sampling slack `c · perimeter · diameter / N`.
pub const ORACLE_SLACK_C: f64 = 1.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleResult {
    pub best: Pgram,
    pub samples_per_boundary: usize,
    /// Upper bound on how far the sampled best can fall below the true
    /// maximum.
    pub slack_estimate: f64,
}

pub fn slack_estimate(p: &Polygon, samples: usize) -> f64 {
    ORACLE_SLACK_C * p.perimeter() * p.diameter() / samples as f64
}

/// Samples `samples` arc-length uniform boundary points; every clockwise
/// triple `A0, A1, A2` proposes `A3 = A0 + A2 - A1`, accepted when inside
/// the polygon. Runs in `O(samples^3 · n)`.
pub fn oracle_map(p: &Polygon, samples: usize) -> OracleResult {
    let samples = samples.max(8);
    let pts: Vec<Point> =
        (0..samples).map(|k| p.point_at_arc(p.perimeter() * k as f64 / samples as f64).point).collect();
    let tol = p.tolerances().containment * p.diameter();
    let best = (0..samples)
        .into_par_iter()
        .map(|a| {
            let mut best = (0.0, [0usize; 3]);
            for b in a + 1..samples {
                for c in b + 1..samples {
                    let a3 = pts[a] + pts[c] - pts[b];
                    let area = (pts[b] - pts[a]).cross(a3 - pts[a]).abs();
                    if area > best.0 && p.contains_point_linear(a3, tol) {
                        best = (area, [a, b, c]);
                    }
                }
            }
            best
        })
        .reduce(|| (0.0, [0; 3]), |x, y| if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) { y } else { x });
    let [a, b, c] = best.1;
    let best = Pgram::new([pts[a], pts[b], pts[c], pts[a] + pts[c] - pts[b]]);
    OracleResult { best, samples_per_boundary: samples, slack_estimate: slack_estimate(p, samples) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_oracle_brackets_half_area() {
        let t = Polygon::new(&[(0.0, 0.0), (0.0, 4.0), (4.0, 0.0)]).unwrap();
        let r = oracle_map(&t, 150);
        let a = r.best.area();
        assert!(a <= 4.0 + 1e-9);
        assert!(a >= 4.0 - r.slack_estimate, "{a} {}", r.slack_estimate);
        assert!(r.best.closure_error() < 1e-12);
    }

    #[test]
    fn smoke_with_minimum_samples() {
        let t = Polygon::new(&[(0.0, 0.0), (0.0, 4.0), (4.0, 0.0)]).unwrap();
        let r = oracle_map(&t, 3);
        assert_eq!(r.samples_per_boundary, 8);
        assert!(r.best.area() > 0.0);
    }
}
