//! Distance products and their maximizers on the polygon boundary.
//!
//! For chasing edges `e_i ≺ e_j` the product of distances to the lines of
//! the two edges has a unique maximizer `Z_i^j` over the polygon. It lies
//! on the boundary strictly between `v_{j+1}` and `v_i`, and the product is
//! unimodal along that stretch, so a clockwise walk with a constant-time
//! comparison at each vertex finds it.

use crate::error::{Error, Result};
use crate::geom::{line_intersection, Line, Point};
use crate::polygon::{BoundaryPoint, BoundaryPortion, Polygon, Unit};

/// Product of the (unsigned) distances from `x` to `l` and `l2`.
pub fn disprod(x: Point, l: &Line, l2: &Line) -> f64 {
    l.distance(x) * l2.distance(x)
}

/// Distance product with respect to the lines of edges `i` and `j`,
/// using inward heights (both nonnegative inside the polygon).
#[inline]
pub fn edge_disprod(p: &Polygon, i: usize, j: usize, x: Point) -> f64 {
    p.height(i, x) * p.height(j, x)
}

/// Where `Z_i^j` sits relative to a vertex `v_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexSide {
    AtVertex,
    /// `Z_i^j` lies in `(v_{j+1} ↻ v_k)`.
    BeforeVertex,
    /// `Z_i^j` lies in `(v_k ↻ v_i)`.
    AfterVertex,
}

/// Classify `v_k` against `Z_i^j` by looking at the slope of the product
/// leaving `v_k` along each incident edge.
pub fn classify_vertex_vs_z(p: &Polygon, i: usize, j: usize, k: usize) -> Result<VertexSide> {
    let n = p.n();
    if !p.chases(i, j) {
        return Err(Error::NotChasing(i % n, j % n));
    }
    let s = p.steps(j + 1, k);
    if s == 0 || s >= p.steps(j + 1, i) {
        return Err(Error::VertexOutOfRange(k % n));
    }
    Ok(classify_unchecked(p, i, j, k))
}

fn classify_unchecked(p: &Polygon, i: usize, j: usize, k: usize) -> VertexSide {
    let n = p.n();
    let k = k % n;
    let v = p.vertex(k);
    let (a, b) = (p.height(i, v), p.height(j, v));
    let (ni, nj) = (p.inward_normal(i), p.inward_normal(j));
    let slope = |dir: Point| ni.dot(dir) * b + a * nj.dot(dir);
    let back = -(p.edge_dir(k + n - 1) / p.edge_len(k + n - 1));
    let fwd = p.edge_dir(k) / p.edge_len(k);
    let (sb, sf) = (slope(back), slope(fwd));
    let tol = p.tolerances().dominance * (a + b);
    if sb > tol && sb >= sf {
        VertexSide::BeforeVertex
    } else if sf > tol {
        VertexSide::AfterVertex
    } else {
        VertexSide::AtVertex
    }
}

/// Maximizer of the product restricted to edge `m`.
fn z_on_edge(p: &Polygon, i: usize, j: usize, m: usize) -> BoundaryPoint {
    let v = p.vertex(m);
    let d = p.edge_dir(m);
    let (a0, a1) = (p.height(i, v), p.inward_normal(i).dot(d));
    let (b0, b1) = (p.height(j, v), p.inward_normal(j).dot(d));
    let t = if a1 * b1 < 0.0 {
        -(a1 * b0 + a0 * b1) / (2.0 * a1 * b1)
    } else if a1 * b0 + a0 * b1 > 0.0 {
        1.0
    } else {
        0.0
    };
    p.edge_point(m, t.clamp(0.0, 1.0))
}

/// Walk vertices from `start` (inside the open search range) until `Z_i^j`
/// is bracketed. Returns the point and the vertex where the walk stopped.
fn walk(p: &Polygon, i: usize, j: usize, start: usize) -> (BoundaryPoint, usize) {
    let n = p.n();
    let end = i % n;
    let mut k = start % n;
    while k != end {
        match classify_unchecked(p, i, j, k) {
            VertexSide::AfterVertex => k = (k + 1) % n,
            VertexSide::AtVertex => return (p.vertex_point(k), k),
            VertexSide::BeforeVertex => return (z_on_edge(p, i, j, k + n - 1), k),
        }
    }
    (z_on_edge(p, i, j, end + n - 1), end)
}

/// `Z_i^j` by a clockwise walk from `v_{j+2}`.
pub fn z_point(p: &Polygon, i: usize, j: usize) -> Result<BoundaryPoint> {
    let n = p.n();
    if !p.chases(i, j) {
        return Err(Error::NotChasing(i % n, j % n));
    }
    Ok(walk(p, i, j, (j + 2) % n).0)
}

/// Z-points for pairs whose first and second edges both advance clockwise,
/// sharing a single boundary walk.
pub fn z_batch(p: &Polygon, pairs: &[(usize, usize)]) -> Result<Vec<BoundaryPoint>> {
    let n = p.n();
    let (mut run_a, mut run_b) = (0, 0);
    for (t, &(a, b)) in pairs.iter().enumerate() {
        if !p.chases(a, b) {
            return Err(Error::NotChasing(a % n, b % n));
        }
        if t > 0 {
            let (pa, pb) = pairs[t - 1];
            run_a += p.steps(pa, a);
            run_b += p.steps(pb, b);
            if run_a >= n || run_b >= n {
                return Err(Error::NotSorted(t));
            }
        }
    }
    let mut out = Vec::with_capacity(pairs.len());
    let mut cursor: Option<usize> = None;
    for &(a, b) in pairs {
        let first = (b + 2) % n;
        let span = p.steps(b + 1, a);
        let mut start = match cursor {
            Some(k) if p.steps(b + 1, k) > 0 && p.steps(b + 1, k) <= span => k % n,
            _ => first,
        };
        // A cursor past the new maximizer means the pairs were not
        // monotone after all; restart from the beginning of the range.
        if start != first && start != a % n {
            let prev = (start + n - 1) % n;
            if prev != (b + 1) % n && classify_unchecked(p, a, b, prev) == VertexSide::BeforeVertex {
                start = first;
            }
        }
        let (z, k) = walk(p, a, b, start);
        cursor = Some(k);
        out.push(z);
    }
    Ok(out)
}

/// All Z-points of a polygon, one row per first edge.
#[derive(Clone, Debug)]
pub struct ZTable {
    n: usize,
    entries: Vec<Option<BoundaryPoint>>,
}

impl ZTable {
    pub fn build(p: &Polygon) -> Self {
        let n = p.n();
        let mut entries = vec![None; n * n];
        for i in 0..n {
            let pairs: Vec<(usize, usize)> =
                (1..n).map(|s| (i, (i + s) % n)).take_while(|&(a, b)| p.chases(a, b)).collect();
            let zs = z_batch(p, &pairs).expect("row pairs are chasing and sorted");
            for ((_, j), z) in pairs.into_iter().zip(zs) {
                entries[i * n + j] = Some(z);
            }
        }
        Self { n, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&BoundaryPoint> {
        self.entries[(i % self.n) * self.n + j % self.n].as_ref()
    }

    /// `Z_i^j`; panics when `e_i` does not chase `e_j`.
    pub fn z(&self, i: usize, j: usize) -> BoundaryPoint {
        *self.get(i, j).unwrap_or_else(|| panic!("no Z-point for edges {i}, {j}"))
    }

    pub fn try_z(&self, i: usize, j: usize) -> Result<BoundaryPoint> {
        self.get(i, j).copied().ok_or(Error::NotChasing(i % self.n, j % self.n))
    }

    pub fn len(&self) -> usize {
        self.entries.iter().filter(|e| e.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BoundaryPoint)> + '_ {
        self.entries.iter().enumerate().filter_map(move |(idx, e)| e.as_ref().map(|z| (idx / self.n, idx % self.n, z)))
    }
}

/// The midpoint of `I_{i,k}` and `I_{j,k}`, which is where `Z_i^j` sits
/// when it lies on edge `k`.
pub fn edge_midpoint_rule(p: &Polygon, i: usize, j: usize, k: usize) -> Result<Point> {
    let tol = p.tolerances().parallel;
    let a = line_intersection(&p.edge_line(i), &p.edge_line(k), tol)?;
    let b = line_intersection(&p.edge_line(j), &p.edge_line(k), tol)?;
    Ok(a.midpoint(b))
}

/// Outcome of sampling the product along `[v_{j+1} ↻ v_i]`.
#[derive(Clone, Copy, Debug)]
pub struct UnimodalCheck {
    pub unimodal: bool,
    /// Arc distance from the sampled peak to `Z_i^j`, in sample spacings.
    pub peak_offset: f64,
}

/// Sample the product at `samples` arc-uniform points of `[v_{j+1} ↻ v_i]`
/// and test that it rises to a single peak then falls, with the peak
/// within one sample of `Z_i^j`.
pub fn check_unimodal(p: &Polygon, i: usize, j: usize, samples: usize) -> Result<bool> {
    Ok(unimodal_detail(p, i, j, samples)?.unimodal)
}

pub fn unimodal_detail(p: &Polygon, i: usize, j: usize, samples: usize) -> Result<UnimodalCheck> {
    let z = z_point(p, i, j)?;
    let samples = samples.max(3);
    let rho = BoundaryPortion::closed(p.vertex_point(j + 1), p.vertex_point(i));
    let pts = p.sample_portion(&rho, samples);
    let vals: Vec<f64> = pts.iter().map(|b| edge_disprod(p, i, j, b.point)).collect();
    let peak = vals.iter().cloned().fold(0.0, f64::max);
    // Values within this of each other count as flat rounding noise.
    let noise = 1e-13 * peak.max(f64::MIN_POSITIVE);
    let top = (0..vals.len()).max_by(|&a, &b| vals[a].total_cmp(&vals[b])).unwrap();
    let rising = vals[..=top].windows(2).all(|w| w[1] > w[0] - noise);
    let falling = vals[top..].windows(2).all(|w| w[1] < w[0] + noise);
    let a0 = p.arc_length(&rho.start);
    let along = |b: &BoundaryPoint| (p.arc_length(b) - a0).rem_euclid(p.perimeter());
    let spacing = along(&rho.end) / (samples - 1) as f64;
    let peak_offset = (along(&pts[top]) - along(&z)).abs() / spacing;
    Ok(UnimodalCheck { unimodal: rising && falling && peak_offset <= 1.0 + 1e-9, peak_offset })
}

/// Count adjacent-pair violations of the clockwise ordering of Z-points:
/// `Z_i^{j-1} ≤ Z_i^j` and `Z_i^j ≤ Z_{i+1}^j` along `[v_{j+1} ↻ v_i]`.
pub fn bimonotone_violations(p: &Polygon, z: &ZTable) -> usize {
    let n = p.n();
    let slack = 1e-9;
    let mut bad = 0;
    let before = |i: usize, j: usize, x: &BoundaryPoint, y: &BoundaryPoint| {
        let s0 = ((j + 1) % n) as f64;
        let off = |b: &BoundaryPoint| (b.param() - s0).rem_euclid(n as f64);
        let _ = i;
        off(x) <= off(y) + slack
    };
    for (i, j, zij) in z.iter() {
        if let Some(prev) = z.get(i, j + n - 1) {
            if (j + n - 1) % n != i && !before(i, j, prev, zij) {
                bad += 1;
            }
        }
        if let Some(next) = z.get(i + 1, j) {
            if (i + 1) % n != j && !before(i, j, zij, next) {
                bad += 1;
            }
        }
    }
    bad
}

/// Unit housing `Z_i^j` (exposed for diagnostics).
pub fn z_unit(p: &Polygon, i: usize, j: usize) -> Result<Unit> {
    Ok(z_point(p, i, j)?.unit)
}
