//! Parallelograms and the construction from two opposite corners and two
//! lines carrying the other two corners.

use serde::{Deserialize, Serialize};

use crate::disprod::disprod;
use crate::error::{Error, Result};
use crate::geom::{line_intersection, orient, reflect, reflect_line, signed_area, Line, Point};

/// Four corners in clockwise order.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Pgram {
    pub corners: [Point; 4],
}

impl Pgram {
    /// Builds from four corners, reordering to clockwise when needed.
    pub fn new(corners: [Point; 4]) -> Self {
        let [a, b, c, d] = corners;
        if signed_area(&corners) > 0.0 {
            Pgram { corners: [a, d, c, b] }
        } else {
            Pgram { corners }
        }
    }

    pub fn area(&self) -> f64 {
        let [a, b, c, d] = self.corners;
        0.5 * (c - a).cross(d - b).abs()
    }

    pub fn center(&self) -> Point {
        self.corners[0].midpoint(self.corners[2])
    }

    /// `|(A0 + A2) - (A1 + A3)|`; zero for a true parallelogram.
    pub fn closure_error(&self) -> f64 {
        let [a, b, c, d] = self.corners;
        ((a + c) - (b + d)).norm()
    }

    /// Rotated so the lexicographically smallest corner comes first.
    pub fn canonical(&self) -> Pgram {
        let k = (0..4)
            .min_by(|&i, &j| {
                let (p, q) = (self.corners[i], self.corners[j]);
                p.x.total_cmp(&q.x).then(p.y.total_cmp(&q.y))
            })
            .unwrap();
        let mut corners = self.corners;
        corners.rotate_left(k);
        Pgram { corners }
    }

    /// Same parallelogram up to relabeling (rotation or reversal), with
    /// corners matched within `tol`.
    pub fn same_as(&self, other: &Pgram, tol: f64) -> bool {
        let rev = {
            let [a, b, c, d] = other.corners;
            [a, d, c, b]
        };
        for cand in [other.corners, rev] {
            for r in 0..4 {
                if (0..4).all(|i| self.corners[i].dist(cand[(i + r) % 4]) <= tol) {
                    return true;
                }
            }
        }
        false
    }

    pub fn lex_key(&self) -> [f64; 8] {
        let c = self.canonical().corners;
        [c[0].x, c[0].y, c[1].x, c[1].y, c[2].x, c[2].y, c[3].x, c[3].y]
    }
}

/// The unique `Y ∈ l`, `Y' ∈ l2` with midpoint `m`.
pub fn midpoint_pair_on_lines(l: &Line, l2: &Line, m: Point, parallel_tol: f64) -> Result<(Point, Point)> {
    let y = line_intersection(l, &reflect_line(l2, m), parallel_tol)?;
    Ok((y, reflect(y, m)))
}

fn same_quadrant(x: Point, x2: Point, l: &Line, l2: &Line, quad_tol: f64) -> bool {
    let agree = |a: f64, b: f64| a.abs() <= quad_tol || b.abs() <= quad_tol || (a > 0.0) == (b > 0.0);
    agree(l.signed_distance(x), l.signed_distance(x2)) && agree(l2.signed_distance(x), l2.signed_distance(x2))
}

/// The parallelogram with opposite corners `x`, `x2` and the other two
/// corners on `l` and `l2`.
pub fn pgram_from_opposite(x: Point, x2: Point, l: &Line, l2: &Line, quad_tol: f64) -> Result<Pgram> {
    if !same_quadrant(x, x2, l, l2, quad_tol) {
        if l.sin_angle(l2) <= 1e-12 {
            return Err(Error::ParallelLines);
        }
        return Err(Error::QuadrantMismatch);
    }
    let (y, y2) = midpoint_pair_on_lines(l, l2, x.midpoint(x2), 1e-12)?;
    Ok(Pgram::new([x, y, x2, y2]))
}

/// Area of the constructed parallelogram, and the same area predicted by
/// the distance products: `|d(X) - d(X')| / sin θ`.
pub fn area_identity_check(x: Point, x2: Point, l: &Line, l2: &Line, quad_tol: f64) -> Result<(f64, f64)> {
    let q = pgram_from_opposite(x, x2, l, l2, quad_tol)?;
    let rhs = (disprod(x, l, l2) - disprod(x2, l, l2)).abs() / l.sin_angle(l2);
    Ok((q.area(), rhs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleSide {
    /// `X` lies in the closed triangle `O Y Y'`, `X'` outside.
    XInside,
    X2Inside,
    Degenerate,
}

/// Which of the two given corners lies in the triangle cut off by the
/// other diagonal, decided by comparing distance products.
pub fn triangle_side_classification(x: Point, x2: Point, l: &Line, l2: &Line, quad_tol: f64) -> Result<TriangleSide> {
    pgram_from_opposite(x, x2, l, l2, quad_tol)?;
    let (d, d2) = (disprod(x, l, l2), disprod(x2, l, l2));
    let tie = 1e-12 * d.max(d2).max(f64::MIN_POSITIVE);
    Ok(if (d - d2).abs() <= tie {
        TriangleSide::Degenerate
    } else if d < d2 {
        TriangleSide::XInside
    } else {
        TriangleSide::X2Inside
    })
}

/// Closed triangle membership with an absolute slack on twice-areas.
pub fn in_triangle(a: Point, b: Point, c: Point, x: Point, slack: f64) -> bool {
    let s = orient(a, b, c).signum();
    orient(a, b, x) * s >= -slack && orient(b, c, x) * s >= -slack && orient(c, a, x) * s >= -slack
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn axes() -> (Line, Line) {
        (Line::new(p(0.0, 0.0), p(1.0, 0.0)).unwrap(), Line::new(p(0.0, 0.0), p(0.0, 1.0)).unwrap())
    }

    #[test]
    fn midpoint_pair_example() {
        let (y0, x0) = axes();
        let (y, y2) = midpoint_pair_on_lines(&y0, &x0, p(2.0, 1.5), 1e-12).unwrap();
        assert_eq!(y, p(4.0, 0.0));
        assert_eq!(y2, p(0.0, 3.0));
        let (y, y2) = midpoint_pair_on_lines(&y0, &x0, p(0.0, 0.0), 1e-12).unwrap();
        assert_eq!((y, y2), (p(0.0, 0.0), p(0.0, 0.0)));
    }

    #[test]
    fn opposite_corner_construction() {
        let (y0, x0) = axes();
        let q = pgram_from_opposite(p(1.0, 2.0), p(3.0, 1.0), &y0, &x0, 1e-9).unwrap();
        let expect = Pgram::new([p(1.0, 2.0), p(4.0, 0.0), p(3.0, 1.0), p(0.0, 3.0)]);
        assert!(q.same_as(&expect, 1e-12));
        assert!((q.area() - 1.0).abs() < 1e-12);
        assert!(signed_area(&q.corners) < 0.0);
        let degenerate = pgram_from_opposite(p(1.0, 1.0), p(1.0, 1.0), &y0, &x0, 1e-9).unwrap();
        assert_eq!(degenerate.area(), 0.0);
        let flat = pgram_from_opposite(p(1.0, 2.0), p(2.0, 1.0), &y0, &x0, 1e-9).unwrap();
        assert!(flat.area() < 1e-12);
    }

    #[test]
    fn quadrant_mismatch() {
        let (y0, x0) = axes();
        let e = pgram_from_opposite(p(1.0, 2.0), p(-3.0, 1.0), &y0, &x0, 1e-9).unwrap_err();
        assert_eq!(e, Error::QuadrantMismatch);
    }

    #[test]
    fn identity_and_sides_example() {
        let (y0, x0) = axes();
        let (lhs, rhs) = area_identity_check(p(1.0, 2.0), p(3.0, 1.0), &y0, &x0, 1e-9).unwrap();
        assert!((lhs - 1.0).abs() < 1e-12 && (rhs - 1.0).abs() < 1e-12);
        let (lhs, rhs) = area_identity_check(p(1.0, 2.0), p(2.0, 1.0), &y0, &x0, 1e-9).unwrap();
        assert!(lhs < 1e-12 && rhs < 1e-12);
        use TriangleSide::*;
        assert_eq!(triangle_side_classification(p(1.0, 2.0), p(3.0, 1.0), &y0, &x0, 1e-9).unwrap(), XInside);
        assert_eq!(triangle_side_classification(p(3.0, 1.0), p(1.0, 2.0), &y0, &x0, 1e-9).unwrap(), X2Inside);
        assert_eq!(triangle_side_classification(p(1.0, 2.0), p(2.0, 1.0), &y0, &x0, 1e-9).unwrap(), Degenerate);
        // O=(0,0), Y=(4,0), Y'=(0,3): X=(1,2) is inside, X'=(3,1) is not.
        assert!(in_triangle(p(0.0, 0.0), p(4.0, 0.0), p(0.0, 3.0), p(1.0, 2.0), 0.0));
        assert!(!in_triangle(p(0.0, 0.0), p(4.0, 0.0), p(0.0, 3.0), p(3.0, 1.0), 0.0));
    }

    #[test]
    fn relabeling_equivalence() {
        let q = Pgram::new([p(0.0, 0.0), p(0.0, 2.0), p(2.0, 2.0), p(2.0, 0.0)]);
        let rotated = Pgram { corners: [p(2.0, 2.0), p(2.0, 0.0), p(0.0, 0.0), p(0.0, 2.0)] };
        let reversed = Pgram { corners: [p(0.0, 0.0), p(2.0, 0.0), p(2.0, 2.0), p(0.0, 2.0)] };
        assert!(q.same_as(&rotated, 1e-12));
        assert!(q.same_as(&reversed, 1e-12));
        assert_eq!(q.canonical().corners[0], p(0.0, 0.0));
    }

    fn quadrant_instance() -> impl Strategy<Value = (Line, Line, Point, Point)> {
        (
            -5.0..5.0f64,
            -5.0..5.0f64,
            0.0..std::f64::consts::PI,
            0.2..(std::f64::consts::PI - 0.2),
            (0.05..1.0f64, 0.05..1.0f64, 0.05..1.0f64, 0.05..1.0f64),
            (0.1..10.0f64, 0.1..10.0f64),
        )
            .prop_map(|(ox, oy, phi, theta, (s1, t1, s2, t2), (r1, r2))| {
                let o = p(ox, oy);
                let u = p(phi.cos(), phi.sin());
                let w = p((phi + theta).cos(), (phi + theta).sin());
                let l = Line::new(o, u).unwrap();
                let l2 = Line::new(o, w).unwrap();
                (l, l2, o + (u * s1 + w * t1) * r1, o + (u * s2 + w * t2) * r2)
            })
    }

    proptest! {
        #[test]
        fn area_identity_holds((l, l2, x, x2) in quadrant_instance()) {
            let (lhs, rhs) = area_identity_check(x, x2, &l, &l2, 1e-9).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-9 * lhs.max(1.0));
        }

        #[test]
        fn construction_is_idempotent((l, l2, x, x2) in quadrant_instance()) {
            let m = x.midpoint(x2);
            let (y, y2) = midpoint_pair_on_lines(&l, &l2, m, 1e-12).unwrap();
            let scale = 1.0 + y.norm().max(y2.norm());
            prop_assert!(l.distance(y) <= 1e-9 * scale);
            prop_assert!(l2.distance(y2) <= 1e-9 * scale);
            let q = pgram_from_opposite(x, x2, &l, &l2, 1e-9).unwrap();
            prop_assert!(q.closure_error() <= 1e-9 * scale);
        }

        #[test]
        fn trichotomy_matches_geometry((l, l2, x, x2) in quadrant_instance()) {
            let side = triangle_side_classification(x, x2, &l, &l2, 1e-9).unwrap();
            let o = line_intersection(&l, &l2, 1e-12).unwrap();
            let (y, y2) = midpoint_pair_on_lines(&l, &l2, x.midpoint(x2), 1e-12).unwrap();
            let slack = 1e-9 * (1.0 + orient(o, y, y2).abs());
            match side {
                TriangleSide::XInside => {
                    prop_assert!(in_triangle(o, y, y2, x, slack));
                }
                TriangleSide::X2Inside => {
                    prop_assert!(in_triangle(o, y, y2, x2, slack));
                }
                TriangleSide::Degenerate => {}
            }
        }

        #[test]
        fn affine_equivariance((l, l2, x, x2) in quadrant_instance(),
                               a in 0.5..2.0f64, b in -1.0..1.0f64, c in -1.0..1.0f64, d in 0.5..2.0f64,
                               tx in -3.0..3.0f64, ty in -3.0..3.0f64) {
            let det = a * d - b * c;
            prop_assume!(det.abs() > 0.1);
            let map = |q: Point| p(a * q.x + b * q.y + tx, c * q.x + d * q.y + ty);
            let lin = |q: Point| p(a * q.x + b * q.y, c * q.x + d * q.y);
            let q = pgram_from_opposite(x, x2, &l, &l2, 1e-9).unwrap();
            let lm = Line::new(map(l.point), lin(l.direction)).unwrap();
            let l2m = Line::new(map(l2.point), lin(l2.direction)).unwrap();
            let qm = pgram_from_opposite(map(x), map(x2), &lm, &l2m, 1e-9).unwrap();
            let mapped = Pgram::new(q.corners.map(map));
            let scale = 1.0 + mapped.corners.iter().map(|c| c.norm()).fold(0.0, f64::max);
            prop_assert!(qm.same_as(&mapped, 1e-8 * scale));
            prop_assert!((qm.area() - q.area() * det.abs()).abs() <= 1e-8 * (1.0 + qm.area()));
        }
    }
}
