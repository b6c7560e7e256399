//! Boundary stretches that must contain a corner of a locally maximal
//! parallelogram, given the units holding its two neighbors, and the
//! planar regions derived from them.

use crate::disprod::ZTable;
use crate::error::{Error, Result};
use crate::geom::{reflect, Point};
use crate::polygon::{BoundaryPortion, Polygon, Unit};

/// `[Z_a^{a'} ↻ Z_b^{b'}]` together with its defining edges.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Zeta {
    pub portion: BoundaryPortion,
    pub a: usize,
    pub a2: usize,
    pub b: usize,
    pub b2: usize,
}

impl Zeta {
    /// Start point, vertices strictly inside, end point.
    pub fn polyline(&self, p: &Polygon) -> Vec<Point> {
        let mut out = vec![self.portion.start.point];
        let inner = BoundaryPortion::open(self.portion.start, self.portion.end);
        out.extend(p.vertices_in(&inner).into_iter().map(|v| p.vertex(v)));
        if !self.portion.is_single_point() {
            out.push(self.portion.end.point);
        }
        out
    }
}

/// The stretch clamping a corner whose clockwise-next neighbor lies in `u`
/// and clockwise-previous neighbor lies in `u2`. For chasing pairs this is
/// `[Z_{back u}^{back u'} ↻ Z_{forw u}^{forw u'}]`; otherwise edges fall
/// back to those of the farthest vertices.
pub fn zeta(p: &Polygon, z: &ZTable, u: Unit, u2: Unit) -> Result<Zeta> {
    let n = p.n();
    if normalize(n, u) == normalize(n, u2) {
        return Err(Error::SameUnit);
    }
    let (bu, fu) = p.back_forw(u);
    let (bu2, fu2) = p.back_forw(u2);
    let a = bu;
    let a2 = if p.chases(bu, bu2) { bu2 } else { (p.farthest_vertex(a) + n - 1) % n };
    let b2 = fu2;
    let b = if p.chases(fu, fu2) { fu } else { p.farthest_vertex(b2) };
    let start = z.try_z(a, a2)?;
    let end = z.try_z(b, b2)?;
    Ok(Zeta { portion: BoundaryPortion::closed(start, end), a, a2, b, b2 })
}

fn normalize(n: usize, u: Unit) -> Unit {
    match u {
        Unit::Vertex(i) => Unit::Vertex(i % n),
        Unit::Edge(i) => Unit::Edge(i % n),
    }
}

/// `u ⊕ u'`: midpoints of a point of `u` and a point of `u'`. Edges are
/// open, so segments and parallelograms exclude their boundary.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MidRegion {
    Point(Point),
    Segment(Point, Point),
    /// Corners in cyclic order.
    Parallelogram([Point; 4]),
}

impl MidRegion {
    pub fn corners(&self) -> Vec<Point> {
        match *self {
            MidRegion::Point(a) => vec![a],
            MidRegion::Segment(a, b) => vec![a, b],
            MidRegion::Parallelogram(c) => c.to_vec(),
        }
    }
}

pub fn mid_region(p: &Polygon, u: Unit, u2: Unit) -> Result<MidRegion> {
    let n = p.n();
    if normalize(n, u) == normalize(n, u2) {
        return Err(Error::SameUnit);
    }
    let v = |i: usize| p.vertex(i);
    Ok(match (u, u2) {
        (Unit::Vertex(i), Unit::Vertex(j)) => MidRegion::Point(v(i).midpoint(v(j))),
        (Unit::Vertex(i), Unit::Edge(j)) => MidRegion::Segment(v(i).midpoint(v(j)), v(i).midpoint(v(j + 1))),
        (Unit::Edge(i), Unit::Vertex(j)) => MidRegion::Segment(v(i).midpoint(v(j)), v(i + 1).midpoint(v(j))),
        (Unit::Edge(i), Unit::Edge(j)) => MidRegion::Parallelogram([
            v(i).midpoint(v(j)),
            v(i).midpoint(v(j + 1)),
            v(i + 1).midpoint(v(j + 1)),
            v(i + 1).midpoint(v(j)),
        ]),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    EdgeEdge,
    VertexVertex,
    VertexEdge,
    EdgeVertex,
}

/// Region that must hold the anchored narrow corner of a locally maximal
/// parallelogram whose neighbors lie in a chasing pair of units. Stored as
/// its bounding curves plus the band of heights it spans above the line
/// of `reference_edge`.
#[derive(Clone, Debug, PartialEq)]
pub struct Block {
    pub kind: BlockKind,
    pub curves: Vec<Vec<Point>>,
    pub reference_edge: usize,
    pub band: (f64, f64),
}

impl Block {
    pub fn band_contains(&self, p: &Polygon, x: Point, tol: f64) -> bool {
        let h = p.height(self.reference_edge, x);
        h >= self.band.0 - tol && h <= self.band.1 + tol
    }
}

fn twice_about(points: &[Point], o: Point) -> Vec<Point> {
    points.iter().map(|&m| m * 2.0 - o).collect()
}

fn reflect_all(points: &[Point], o: Point) -> Vec<Point> {
    points.iter().map(|&x| reflect(x, o)).collect()
}

pub fn block(p: &Polygon, z: &ZTable, u: Unit, u2: Unit) -> Result<Block> {
    let n = p.n();
    if !p.unit_chases(u, u2) {
        return Err(Error::NotChasing(u.index() % n, u2.index() % n));
    }
    let v = |i: usize| p.vertex(i);
    let (kind, curves, reference_edge) = match (u, u2) {
        (Unit::Edge(i), Unit::Edge(j)) => {
            let mid = mid_region(p, u, u2)?.corners();
            (BlockKind::EdgeEdge, vec![twice_about(&mid, z.z(i, j).point)], i)
        }
        (Unit::Vertex(i), Unit::Vertex(j)) => {
            let zeta = zeta(p, z, u, u2)?;
            let curve = reflect_all(&zeta.polyline(p), v(i).midpoint(v(j)));
            (BlockKind::VertexVertex, vec![curve], i)
        }
        (Unit::Vertex(i), Unit::Edge(j)) => {
            let seg = mid_region(p, u, u2)?.corners();
            let zeta = zeta(p, z, u, u2)?;
            let line = zeta.polyline(p);
            let curves = vec![
                twice_about(&seg, z.z(i + n - 1, j).point),
                twice_about(&seg, z.z(i, j).point),
                reflect_all(&line, v(i).midpoint(v(j))),
                reflect_all(&line, v(i).midpoint(v(j + 1))),
            ];
            (BlockKind::VertexEdge, curves, j % n)
        }
        (Unit::Edge(i), Unit::Vertex(j)) => {
            let seg = mid_region(p, u, u2)?.corners();
            let zeta = zeta(p, z, u, u2)?;
            let line = zeta.polyline(p);
            let curves = vec![
                twice_about(&seg, z.z(i, j + n - 1).point),
                twice_about(&seg, z.z(i, j).point),
                reflect_all(&line, v(i).midpoint(v(j))),
                reflect_all(&line, v(i + 1).midpoint(v(j))),
            ];
            (BlockKind::EdgeVertex, curves, i % n)
        }
    };
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for x in curves.iter().flatten() {
        let h = p.height(reference_edge, *x);
        lo = lo.min(h);
        hi = hi.max(h);
    }
    Ok(Block { kind, curves, reference_edge, band: (lo, hi) })
}

/// Units strictly between the farthest vertices of the two edges at `v_k`.
pub fn h_set(p: &Polygon, k: usize) -> Vec<Unit> {
    let n = p.n();
    let a = p.farthest_vertex(k + n - 1);
    let b = p.farthest_vertex(k);
    let mut out = Vec::new();
    if a == b {
        return out;
    }
    let mut e = a;
    loop {
        out.push(Unit::Edge(e));
        let next = (e + 1) % n;
        if next == b {
            break;
        }
        out.push(Unit::Vertex(next));
        e = next;
    }
    out
}

/// Ordered unit pairs `(V, u)` and `(u, V)` with `u` in the set above for
/// vertex `V`; every non-incident pair in which neither unit chases the
/// other appears here.
pub fn s_set(p: &Polygon) -> Vec<(Unit, Unit)> {
    let mut out = Vec::new();
    for k in 0..p.n() {
        for u in h_set(p, k) {
            out.push((Unit::Vertex(k), u));
            out.push((u, Unit::Vertex(k)));
        }
    }
    out.sort();
    out.dedup();
    out
}
