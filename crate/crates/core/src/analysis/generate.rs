//! Seeded polygon generators.

use std::f64::consts::PI;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::polygon::{BuildOptions, Polygon};

const MAX_ATTEMPTS: usize = 64;

/// Regular `k`-gon with unit circumradius and a vertex at the top.
/// Even `k` has parallel opposite edges and is rejected unless `opts`
/// requests a perturbation.
pub fn regular_polygon_with(k: usize, opts: &BuildOptions) -> Result<Polygon> {
    if k < 3 {
        return Err(Error::TooFewVertices);
    }
    let pts: Vec<Point> = (0..k)
        .map(|m| {
            let th = PI / 2.0 - 2.0 * PI * m as f64 / k as f64;
            Point::new(th.cos(), th.sin())
        })
        .collect();
    Polygon::build(&pts, opts)
}

pub fn regular_polygon(k: usize) -> Result<Polygon> {
    regular_polygon_with(k, &BuildOptions::default())
}

/// Splits sorted coordinates into two monotone chains and returns the
/// successive differences, which sum to zero.
fn chain_steps(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let mut xs: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
    xs.sort_by(f64::total_cmp);
    let (lo, hi) = (xs[0], xs[n - 1]);
    let mut out = Vec::with_capacity(n);
    let (mut a, mut b) = (lo, lo);
    for &x in &xs[1..n - 1] {
        if rng.gen::<bool>() {
            out.push(x - a);
            a = x;
        } else {
            out.push(b - x);
            b = x;
        }
    }
    out.push(hi - a);
    out.push(b - hi);
    out
}

/// Random convex polygon with exactly `n` vertices: Valtr's construction
/// (a uniform random convex polygon among those with vertices in the unit
/// square), scaled to unit diameter-ish and centered at the origin.
pub fn random_polygon(n: usize, seed: u64) -> Result<Polygon> {
    if n < 3 {
        return Err(Error::TooFewVertices);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let dx = chain_steps(&mut rng, n);
        let mut dy = chain_steps(&mut rng, n);
        dy.shuffle(&mut rng);
        let mut vecs: Vec<Point> = dx.into_iter().zip(dy).map(|(x, y)| Point::new(x, y)).collect();
        // Clockwise: sort by decreasing angle.
        vecs.sort_by(|a, b| b.y.atan2(b.x).total_cmp(&a.y.atan2(a.x)));
        let mut pts = Vec::with_capacity(n);
        let mut cur = Point::new(0.0, 0.0);
        for v in vecs {
            pts.push(cur);
            cur = cur + v;
        }
        let c = pts.iter().fold(Point::new(0.0, 0.0), |acc, &q| acc + q) / n as f64;
        let pts: Vec<Point> = pts.into_iter().map(|q| q - c).collect();
        if let Ok(p) = Polygon::new(&pts) {
            if p.n() == n && edges_well_spread(&p) {
                return Ok(p);
            }
        }
    }
    Err(Error::GenerationFailed(MAX_ATTEMPTS))
}

/// Rejects near-parallel edge pairs and tiny edges that make tolerance
/// decisions fragile.
fn edges_well_spread(p: &Polygon) -> bool {
    let n = p.n();
    let min_len = 1e-6 * p.diameter();
    (0..n).all(|i| p.edge_len(i) > min_len)
        && (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let (a, b) = (p.edge_dir(i), p.edge_dir(j));
                a.cross(b).abs() > 1e-9 * a.norm() * b.norm()
            })
        })
}
