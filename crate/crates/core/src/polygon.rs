//! Validated convex polygons and boundary addressing.
//!
//! Vertices are stored clockwise (y up). Edge `e_i` runs from `v_i` to
//! `v_{i+1}`; every index is taken modulo `n`. Edges are open segments, so a
//! point on the boundary belongs to exactly one *unit*: a vertex or an edge.
//! Boundary positions are addressed by a parameter `s` in `[0, n)`: vertex
//! `k` sits at `s = k`, and the point at fraction `t` along edge `k` sits at
//! `k + t`. Clockwise order along the boundary is the cyclic order of `s`.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{orient, signed_area, Line, Point};
use crate::tol::Tolerances;

/// A vertex or an (open) edge of the polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Unit {
    Vertex(usize),
    Edge(usize),
}

impl Unit {
    pub fn index(self) -> usize {
        match self {
            Unit::Vertex(i) | Unit::Edge(i) => i,
        }
    }

    pub fn is_vertex(self) -> bool {
        matches!(self, Unit::Vertex(_))
    }

    pub fn is_edge(self) -> bool {
        matches!(self, Unit::Edge(_))
    }
}

/// Result of comparing two units under the chasing relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chasing {
    UChasesU2,
    U2ChasesU,
    Neither,
}

/// A point on the boundary together with the unit housing it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundaryPoint {
    pub unit: Unit,
    /// Position along the edge in `(0, 1)`; zero for vertices.
    pub t: f64,
    pub point: Point,
}

impl BoundaryPoint {
    /// Boundary parameter in `[0, n)`.
    pub fn param(&self) -> f64 {
        match self.unit {
            Unit::Vertex(k) => k as f64,
            Unit::Edge(k) => k as f64 + self.t,
        }
    }
}

/// A directed clockwise stretch of the boundary from `start` to `end`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundaryPortion {
    pub start: BoundaryPoint,
    pub end: BoundaryPoint,
    pub include_start: bool,
    pub include_end: bool,
}

impl BoundaryPortion {
    pub fn closed(start: BoundaryPoint, end: BoundaryPoint) -> Self {
        Self { start, end, include_start: true, include_end: true }
    }

    pub fn open(start: BoundaryPoint, end: BoundaryPoint) -> Self {
        Self { start, end, include_start: false, include_end: false }
    }

    pub fn is_single_point(&self) -> bool {
        self.start.param() == self.end.param()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BuildOptions {
    pub tol: Tolerances,
    /// Rotate every vertex about the centroid by an independent uniform
    /// angle in `[-eps, eps]` radians before validating.
    pub perturb: Option<Perturbation>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Perturbation {
    pub eps: f64,
    pub seed: u64,
}

impl Default for Perturbation {
    fn default() -> Self {
        Self { eps: 1e-7, seed: 0 }
    }
}

/// A strictly convex polygon with pairwise nonparallel edges, stored clockwise.
#[derive(Clone, Debug)]
pub struct Polygon {
    vertices: Vec<Point>,
    dirs: Vec<Point>,
    lens: Vec<f64>,
    inward: Vec<Point>,
    farthest: Vec<usize>,
    cum_len: Vec<f64>,
    diameter: f64,
    perimeter: f64,
    merged: usize,
    tol: Tolerances,
}

impl Polygon {
    /// Validate with default tolerances.
    pub fn new<P: Into<Point> + Copy>(points: &[P]) -> Result<Self> {
        Self::build(points, &BuildOptions::default())
    }

    pub fn build<P: Into<Point> + Copy>(points: &[P], opts: &BuildOptions) -> Result<Self> {
        let mut pts: Vec<Point> = points.iter().map(|&p| p.into()).collect();
        if pts.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(Error::NonFinite);
        }
        if pts.len() < 3 {
            return Err(Error::TooFewVertices);
        }
        if let Some(pert) = opts.perturb {
            perturb(&mut pts, pert);
        }
        let tol = opts.tol;
        let diameter = diameter_of(&pts);
        if diameter <= 0.0 {
            return Err(Error::TooFewVertices);
        }

        // Drop repeated points, then orient clockwise.
        let dup = 1e-12 * diameter;
        let mut ring: Vec<Point> = Vec::with_capacity(pts.len());
        for p in pts {
            if ring.last().is_none_or(|q: &Point| q.dist(p) > dup) {
                ring.push(p);
            }
        }
        while ring.len() > 1 && ring[0].dist(*ring.last().unwrap()) <= dup {
            ring.pop();
        }
        if ring.len() < 3 {
            return Err(Error::TooFewVertices);
        }
        if signed_area(&ring) > 0.0 {
            ring.reverse();
        }

        // Merge straight-through collinear vertices.
        let collinear = tol.collinear * diameter * diameter;
        let mut merged = 0;
        loop {
            let n = ring.len();
            if n < 3 {
                return Err(Error::TooFewVertices);
            }
            let hit = (0..n).find(|&i| {
                let a = ring[(i + n - 1) % n];
                let b = ring[i];
                let c = ring[(i + 1) % n];
                orient(a, b, c).abs() <= collinear && (b - a).dot(c - b) > 0.0
            });
            match hit {
                Some(i) => {
                    ring.remove(i);
                    merged += 1;
                }
                None => break,
            }
        }

        let n = ring.len();
        let mut turning = 0.0;
        for i in 0..n {
            let a = ring[(i + n - 1) % n];
            let b = ring[i];
            let c = ring[(i + 1) % n];
            let (u, v) = (b - a, c - b);
            if u.cross(v) >= 0.0 {
                return Err(Error::NotConvex(i));
            }
            turning += u.cross(v).atan2(u.dot(v));
        }
        if (turning + std::f64::consts::TAU).abs() > 1e-6 {
            return Err(Error::NotConvex(0));
        }

        let dirs: Vec<Point> = (0..n).map(|i| ring[(i + 1) % n] - ring[i]).collect();
        let lens: Vec<f64> = dirs.iter().map(|d| d.norm()).collect();
        for i in 0..n {
            let ui = dirs[i] / lens[i];
            for j in i + 1..n {
                let uj = dirs[j] / lens[j];
                if ui.cross(uj).abs() < tol.parallel {
                    return Err(Error::ParallelEdges(i, j));
                }
            }
        }
        let inward: Vec<Point> = dirs.iter().zip(&lens).map(|(d, &l)| Point::new(d.y, -d.x) / l).collect();
        let mut cum_len = Vec::with_capacity(n + 1);
        let mut acc = 0.0;
        cum_len.push(0.0);
        for &l in &lens {
            acc += l;
            cum_len.push(acc);
        }

        let mut poly = Polygon {
            vertices: ring,
            dirs,
            lens,
            inward,
            farthest: Vec::new(),
            cum_len,
            diameter,
            perimeter: acc,
            merged,
            tol,
        };
        poly.farthest = poly.compute_farthest();
        Ok(poly)
    }

    fn compute_farthest(&self) -> Vec<usize> {
        let n = self.n();
        let mut out = vec![0; n];
        let mut k = (0..n)
            .max_by(|&a, &b| self.height(0, self.vertices[a]).total_cmp(&self.height(0, self.vertices[b])))
            .unwrap();
        for (i, slot) in out.iter_mut().enumerate() {
            while self.height(i, self.vertex(k + 1)) > self.height(i, self.vertex(k)) {
                k = (k + 1) % n;
            }
            *slot = k;
        }
        out
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    #[inline]
    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i % self.n()]
    }

    /// `v_{i+1} - v_i`.
    #[inline]
    pub fn edge_dir(&self, i: usize) -> Point {
        self.dirs[i % self.n()]
    }

    pub fn edge_len(&self, i: usize) -> f64 {
        self.lens[i % self.n()]
    }

    /// The extended line of edge `i`.
    pub fn edge_line(&self, i: usize) -> Line {
        let i = i % self.n();
        Line { point: self.vertices[i], direction: self.dirs[i] }
    }

    /// Signed distance from `x` to the line of edge `i`, positive inside.
    #[inline]
    pub fn height(&self, i: usize, x: Point) -> f64 {
        let i = i % self.n();
        self.inward[i].dot(x - self.vertices[i])
    }

    pub fn inward_normal(&self, i: usize) -> Point {
        self.inward[i % self.n()]
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    pub fn area(&self) -> f64 {
        -signed_area(&self.vertices)
    }

    pub fn centroid(&self) -> Point {
        let n = self.n();
        let (mut cx, mut cy, mut a2) = (0.0, 0.0, 0.0);
        for i in 0..n {
            let (p, q) = (self.vertices[i], self.vertices[(i + 1) % n]);
            let c = p.cross(q);
            a2 += c;
            cx += (p.x + q.x) * c;
            cy += (p.y + q.y) * c;
        }
        Point::new(cx / (3.0 * a2), cy / (3.0 * a2))
    }

    /// Number of collinear vertices removed while building.
    pub fn merged_vertices(&self) -> usize {
        self.merged
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    /// Absolute on-boundary distance tolerance.
    pub fn boundary_tol(&self) -> f64 {
        self.tol.on_boundary * self.diameter
    }

    pub fn degenerate_area(&self) -> f64 {
        self.tol.degenerate * self.diameter * self.diameter
    }

    #[inline]
    pub fn wrap(&self, i: isize) -> usize {
        i.rem_euclid(self.n() as isize) as usize
    }

    /// Clockwise index distance from `a` to `b`.
    #[inline]
    pub fn steps(&self, a: usize, b: usize) -> usize {
        (b + self.n() - a % self.n()) % self.n()
    }

    // ----- chasing -----------------------------------------------------

    /// `e_i ≺ e_j`: the lines of the two edges meet between them, clockwise.
    #[inline]
    pub fn chases(&self, i: usize, j: usize) -> bool {
        i % self.n() != j % self.n() && self.edge_dir(i).cross(self.edge_dir(j)) < 0.0
    }

    /// `e_i ⪯ e_j`.
    #[inline]
    pub fn chases_or_eq(&self, i: usize, j: usize) -> bool {
        i % self.n() == j % self.n() || self.chases(i, j)
    }

    pub fn edge_chasing(&self, i: usize, j: usize) -> Result<bool> {
        if i % self.n() == j % self.n() {
            return Err(Error::SameEdge(i % self.n()));
        }
        Ok(self.chases(i, j))
    }

    /// Backward and forward edge of a unit.
    pub fn back_forw(&self, u: Unit) -> (usize, usize) {
        match u {
            Unit::Vertex(i) => ((i + self.n() - 1) % self.n(), i % self.n()),
            Unit::Edge(i) => (i % self.n(), i % self.n()),
        }
    }

    /// `u` chases `u2` when both its backward and forward edges chase theirs.
    pub fn unit_chases(&self, u: Unit, u2: Unit) -> bool {
        let (b, f) = self.back_forw(u);
        let (b2, f2) = self.back_forw(u2);
        self.chases(b, b2) && self.chases(f, f2)
    }

    pub fn unit_chasing(&self, u: Unit, u2: Unit) -> Result<Chasing> {
        if self.canon_unit(u) == self.canon_unit(u2) {
            return Err(Error::SameUnit);
        }
        Ok(if self.unit_chases(u, u2) {
            Chasing::UChasesU2
        } else if self.unit_chases(u2, u) {
            Chasing::U2ChasesU
        } else {
            Chasing::Neither
        })
    }

    fn canon_unit(&self, u: Unit) -> Unit {
        match u {
            Unit::Vertex(i) => Unit::Vertex(i % self.n()),
            Unit::Edge(i) => Unit::Edge(i % self.n()),
        }
    }

    /// Index of the vertex farthest from the line of edge `i`.
    #[inline]
    pub fn farthest_vertex(&self, i: usize) -> usize {
        self.farthest[i % self.n()]
    }

    /// Units incident to each other (a vertex and one of its two edges).
    pub fn incident(&self, u: Unit, u2: Unit) -> bool {
        let n = self.n();
        match (u, u2) {
            (Unit::Vertex(v), Unit::Edge(e)) | (Unit::Edge(e), Unit::Vertex(v)) => {
                e % n == v % n || (e + 1) % n == v % n
            }
            _ => false,
        }
    }

    // ----- boundary points --------------------------------------------

    pub fn vertex_point(&self, i: usize) -> BoundaryPoint {
        let i = i % self.n();
        BoundaryPoint { unit: Unit::Vertex(i), t: 0.0, point: self.vertices[i] }
    }

    /// The point at fraction `t` of edge `i`, snapped to an endpoint when
    /// `t` is within the canonicalization tolerance of 0 or 1.
    pub fn edge_point(&self, i: usize, t: f64) -> BoundaryPoint {
        let i = i % self.n();
        if t <= self.tol.canon {
            self.vertex_point(i)
        } else if t >= 1.0 - self.tol.canon {
            self.vertex_point(i + 1)
        } else {
            BoundaryPoint { unit: Unit::Edge(i), t, point: self.vertices[i] + self.dirs[i] * t }
        }
    }

    pub fn canonicalize(&self, bp: &BoundaryPoint) -> BoundaryPoint {
        match bp.unit {
            Unit::Vertex(i) => self.vertex_point(i),
            Unit::Edge(i) => self.edge_point(i, bp.t),
        }
    }

    pub fn point_at_param(&self, s: f64) -> BoundaryPoint {
        let n = self.n() as f64;
        let s = s.rem_euclid(n);
        let k = (s.floor() as usize).min(self.n() - 1);
        self.edge_point(k, s - k as f64)
    }

    /// Clockwise arc length from `v_0`.
    pub fn arc_length(&self, bp: &BoundaryPoint) -> f64 {
        match bp.unit {
            Unit::Vertex(k) => self.cum_len[k],
            Unit::Edge(k) => self.cum_len[k] + bp.t * self.lens[k],
        }
    }

    pub fn point_at_arc(&self, a: f64) -> BoundaryPoint {
        let a = a.rem_euclid(self.perimeter);
        let k = match self.cum_len.binary_search_by(|c| c.total_cmp(&a)) {
            Ok(k) => return self.vertex_point(k % self.n()),
            Err(k) => k - 1,
        };
        let k = k.min(self.n() - 1);
        self.edge_point(k, (a - self.cum_len[k]) / self.lens[k])
    }

    /// Move along the boundary by arc length `ds` (clockwise when positive).
    pub fn advance(&self, bp: &BoundaryPoint, ds: f64) -> BoundaryPoint {
        self.point_at_arc(self.arc_length(bp) + ds)
    }

    /// Locate `x` on the boundary within `tol`; vertices capture every
    /// point within `tol` of them.
    pub fn locate_with(&self, x: Point, tol: f64) -> Option<BoundaryPoint> {
        let (k, d) = self.nearest_edge(x);
        if d > tol {
            return None;
        }
        let n = self.n();
        for v in [k, (k + 1) % n] {
            if x.dist(self.vertices[v]) <= tol {
                return Some(self.vertex_point(v));
            }
        }
        let t = ((x - self.vertices[k]).dot(self.dirs[k]) / (self.lens[k] * self.lens[k])).clamp(0.0, 1.0);
        Some(self.edge_point(k, t))
    }

    pub fn locate(&self, x: Point) -> Option<BoundaryPoint> {
        self.locate_with(x, self.boundary_tol())
    }

    /// Nearest edge (by segment distance) among the edges around the fan
    /// wedge containing `x`; exact for points near the boundary.
    fn nearest_edge(&self, x: Point) -> (usize, f64) {
        let n = self.n();
        let k = self.wedge(x);
        let mut best = (k, f64::INFINITY);
        let mut try_edge = |e: usize| {
            let d = self.segment_distance(e, x);
            if d < best.1 {
                best = (e, d);
            }
        };
        for e in [k + n - 1, k, k + 1, 0, n - 1] {
            try_edge(e % n);
        }
        best
    }

    fn segment_distance(&self, e: usize, x: Point) -> f64 {
        let a = self.vertices[e];
        let d = self.dirs[e];
        let t = ((x - a).dot(d) / (self.lens[e] * self.lens[e])).clamp(0.0, 1.0);
        x.dist(a + d * t)
    }

    /// Edge `k` such that `x` lies in the fan wedge `v_0 v_k v_{k+1}`.
    fn wedge(&self, x: Point) -> usize {
        let n = self.n();
        let v0 = self.vertices[0];
        // orient(v0, v_k, x) <= 0 holds for a prefix of k in 1..n.
        let (mut lo, mut hi) = (1usize, n - 1);
        if orient(v0, self.vertices[1], x) > 0.0 {
            return 0;
        }
        if orient(v0, self.vertices[n - 1], x) <= 0.0 {
            return n - 1;
        }
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if orient(v0, self.vertices[mid], x) <= 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// `x` inside the closed polygon, allowing `slack` outside.
    pub fn contains_point(&self, x: Point, slack: f64) -> bool {
        let k = self.wedge(x);
        let n = self.n();
        if (1..n - 1).contains(&k) {
            let v0 = self.vertices[0];
            let in_fan = orient(v0, self.vertices[k], x) <= 0.0 && orient(v0, self.vertices[k + 1], x) >= 0.0;
            if in_fan && self.height(k, x) >= -slack {
                return true;
            }
        }
        self.nearest_edge(x).1 <= slack
    }

    /// `x` inside the closed polygon, checked against every edge line.
    pub fn contains_point_linear(&self, x: Point, slack: f64) -> bool {
        (0..self.n()).all(|i| self.height(i, x) >= -slack)
    }

    /// Is `x` in unit `u` (closed segment for edges), within `tol`?
    pub fn unit_contains(&self, u: Unit, x: Point, tol: f64) -> bool {
        match u {
            Unit::Vertex(i) => x.dist(self.vertex(i)) <= tol,
            Unit::Edge(i) => self.segment_distance(i % self.n(), x) <= tol,
        }
    }

    // ----- portions -----------------------------------------------------

    fn offset(&self, from: f64, s: f64) -> f64 {
        (s - from).rem_euclid(self.n() as f64)
    }

    pub fn portion_contains(&self, rho: &BoundaryPortion, x: &BoundaryPoint) -> bool {
        let s0 = rho.start.param();
        let len = self.offset(s0, rho.end.param());
        let off = self.offset(s0, x.param());
        if len == 0.0 {
            return off == 0.0 && rho.include_start && rho.include_end;
        }
        (off > 0.0 && off < len) || (off == 0.0 && rho.include_start) || (off == len && rho.include_end)
    }

    /// Membership of a cartesian point, counting points within `tol` of an
    /// endpoint as members.
    pub fn portion_contains_approx(&self, rho: &BoundaryPortion, x: Point, tol: f64) -> bool {
        if x.dist(rho.start.point) <= tol || x.dist(rho.end.point) <= tol {
            return true;
        }
        match self.locate_with(x, tol) {
            Some(bp) => self.portion_contains(rho, &bp),
            None => false,
        }
    }

    /// Order of two members of `rho` along it.
    pub fn portion_order(&self, rho: &BoundaryPortion, a: &BoundaryPoint, b: &BoundaryPoint) -> Result<Ordering> {
        if !self.portion_contains(rho, a) || !self.portion_contains(rho, b) {
            return Err(Error::NotInPortion);
        }
        let s0 = rho.start.param();
        Ok(self.offset(s0, a.param()).total_cmp(&self.offset(s0, b.param())))
    }

    /// Vertices in `rho`, in clockwise order.
    pub fn vertices_in(&self, rho: &BoundaryPortion) -> Vec<usize> {
        let n = self.n();
        let s0 = rho.start.param();
        let len = self.offset(s0, rho.end.param());
        let first = s0.ceil() as usize % n;
        let mut out = Vec::new();
        for step in 0..=n {
            let v = (first + step) % n;
            let off = self.offset(s0, v as f64);
            if step > 0 && off == 0.0 {
                break;
            }
            if off > len {
                break;
            }
            if self.portion_contains(rho, &self.vertex_point(v)) {
                out.push(v);
            }
            if len == 0.0 {
                break;
            }
        }
        out
    }

    /// `count` points evenly spaced by arc length over a closed portion.
    pub fn sample_portion(&self, rho: &BoundaryPortion, count: usize) -> Vec<BoundaryPoint> {
        let a0 = self.arc_length(&rho.start);
        let span = (self.arc_length(&rho.end) - a0).rem_euclid(self.perimeter);
        if count <= 1 {
            return vec![rho.start];
        }
        (0..count)
            .map(|k| {
                if k == 0 {
                    rho.start
                } else if k == count - 1 {
                    rho.end
                } else {
                    self.point_at_arc(a0 + span * k as f64 / (count - 1) as f64)
                }
            })
            .collect()
    }

    /// Mirror image (x negated) re-indexed clockwise: vertex `m` of the
    /// mirror is `v_{-m}`, edge `m` of the mirror is `e_{-m-1}`.
    pub fn mirrored(&self) -> Polygon {
        let n = self.n();
        let pts: Vec<Point> = (0..n)
            .map(|m| {
                let v = self.vertices[(n - m) % n];
                Point::new(-v.x, v.y)
            })
            .collect();
        // Mirroring preserves every validated property.
        Polygon::build(&pts, &BuildOptions { tol: self.tol, perturb: None })
            .expect("mirror of a valid polygon is valid")
    }
}

fn diameter_of(pts: &[Point]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            d = d.max(a.dist(*b));
        }
    }
    d
}

fn perturb(pts: &mut [Point], pert: Perturbation) {
    let n = pts.len() as f64;
    let c = pts.iter().fold(Point::default(), |acc, &p| acc + p) / n;
    let mut rng = ChaCha8Rng::seed_from_u64(pert.seed);
    for p in pts.iter_mut() {
        let a: f64 = if pert.eps > 0.0 { rng.gen_range(-pert.eps..=pert.eps) } else { 0.0 };
        let (s, co) = a.sin_cos();
        let r = *p - c;
        *p = c + Point::new(co * r.x - s * r.y, s * r.x + co * r.y);
    }
}
