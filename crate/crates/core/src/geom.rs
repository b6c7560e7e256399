//! Plane primitives: points, lines, and the two affine maps the
//! construction relies on (point reflection and homothety).

use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point (or vector) in the plane, y axis pointing up.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z component of the 3d cross product; negative when `o` is clockwise of `self`.
    #[inline]
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    pub fn midpoint(self, o: Point) -> Point {
        Point::new(0.5 * (self.x + o.x), 0.5 * (self.y + o.y))
    }

    /// Rotation by +90 degrees (counterclockwise).
    #[inline]
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn lerp(self, o: Point, t: f64) -> Point {
        self + (o - self) * t
    }
}

impl From<[f64; 2]> for Point {
    fn from(a: [f64; 2]) -> Self {
        Point::new(a[0], a[1])
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl From<(f64, f64)> for Point {
    fn from(a: (f64, f64)) -> Self {
        Point::new(a.0, a.1)
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Div<f64> for Point {
    type Output = Point;
    #[inline]
    fn div(self, k: f64) -> Point {
        Point::new(self.x / k, self.y / k)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// An infinite line through `point` along `direction`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Line {
    pub point: Point,
    pub direction: Point,
}

impl Line {
    pub fn new(point: Point, direction: Point) -> Result<Self> {
        let len = direction.norm();
        if len.is_nan() || len <= 0.0 {
            return Err(Error::DegenerateLine);
        }
        Ok(Self { point, direction })
    }

    pub fn through(a: Point, b: Point) -> Result<Self> {
        Self::new(a, b - a)
    }

    /// Unsigned distance from `x` to the line.
    pub fn distance(&self, x: Point) -> f64 {
        self.signed_distance(x).abs()
    }

    /// Positive on the left of the direction vector.
    pub fn signed_distance(&self, x: Point) -> f64 {
        self.direction.cross(x - self.point) / self.direction.norm()
    }

    /// Sine of the (unoriented) angle between two lines.
    pub fn sin_angle(&self, other: &Line) -> f64 {
        (self.direction.cross(other.direction) / (self.direction.norm() * other.direction.norm())).abs()
    }

    pub fn translate(&self, by: Point) -> Line {
        Line { point: self.point + by, direction: self.direction }
    }
}

/// The intersection point of two lines; `parallel_tol` bounds the cross
/// product of the unit directions.
pub fn line_intersection(l: &Line, m: &Line, parallel_tol: f64) -> Result<Point> {
    let denom = l.direction.cross(m.direction);
    if denom.abs() <= parallel_tol * l.direction.norm() * m.direction.norm() {
        return Err(Error::ParallelLines);
    }
    let t = (m.point - l.point).cross(m.direction) / denom;
    Ok(l.point + l.direction * t)
}

/// Point reflection `2o - x`.
pub fn reflect(x: Point, o: Point) -> Point {
    o * 2.0 - x
}

pub fn reflect_line(l: &Line, o: Point) -> Line {
    Line { point: reflect(l.point, o), direction: l.direction }
}

/// Homothety `o + k (x - o)`.
pub fn scale(x: Point, k: f64, o: Point) -> Result<Point> {
    if k == 0.0 {
        return Err(Error::ZeroFactor);
    }
    Ok(o + (x - o) * k)
}

/// Twice the signed area of triangle `abc` (negative for clockwise).
#[inline]
pub fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

pub fn triangle_area(a: Point, b: Point, c: Point) -> f64 {
    0.5 * orient(a, b, c).abs()
}

/// Shoelace signed area, negative for clockwise rings.
pub fn signed_area(ring: &[Point]) -> f64 {
    let n = ring.len();
    (0..n).map(|i| ring[i].cross(ring[(i + 1) % n])).sum::<f64>() * 0.5
}
