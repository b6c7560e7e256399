//! Interleaving of inscribed parallelograms: walking the boundary, the
//! corners of the two alternate (ties allowed).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pgram::Pgram;
use crate::polygon::Polygon;

fn arc_params(p: &Polygon, q: &Pgram) -> Result<[f64; 4]> {
    let mut out = [0.0; 4];
    for (s, &c) in out.iter_mut().zip(&q.corners) {
        *s = p.arc_length(&p.locate(c).ok_or(Error::NotInscribed)?);
    }
    Ok(out)
}

/// Each closed arc `[a_i ↻ a_{i+1}]` holds a corner of `b`.
fn covers(per: f64, a: &[f64; 4], b: &[f64; 4], tol: f64) -> bool {
    (0..4).all(|i| {
        let len = (a[(i + 1) % 4] - a[i]).rem_euclid(per);
        b.iter().any(|&s| {
            let off = (s - a[i]).rem_euclid(per);
            off <= len + tol || off >= per - tol
        })
    })
}

pub fn interleaves(p: &Polygon, q1: &Pgram, q2: &Pgram) -> Result<bool> {
    let (a, b) = (arc_params(p, q1)?, arc_params(p, q2)?);
    let tol = p.boundary_tol();
    Ok(covers(p.perimeter(), &a, &b, tol) && covers(p.perimeter(), &b, &a, tol))
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct InterleavingReport {
    pub pairs_checked: usize,
    /// Index pairs that fail to interleave.
    pub violations: Vec<(usize, usize)>,
}

impl InterleavingReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_interleaving(p: &Polygon, lmaps: &[Pgram]) -> InterleavingReport {
    let mut r = InterleavingReport::default();
    for i in 0..lmaps.len() {
        for j in i + 1..lmaps.len() {
            r.pairs_checked += 1;
            if !interleaves(p, &lmaps[i], &lmaps[j]).unwrap_or(false) {
                r.violations.push((i, j));
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    fn tri() -> Polygon {
        Polygon::new(&[(0.0, 0.0), (0.0, 4.0), (4.0, 0.0)]).unwrap()
    }

    fn pg(c: [(f64, f64); 4]) -> Pgram {
        Pgram::new(c.map(Point::from))
    }

    #[test]
    fn triangle_lmaps_interleave() {
        let t = tri();
        let q1 = pg([(0.0, 0.0), (0.0, 2.0), (2.0, 2.0), (2.0, 0.0)]);
        let q2 = pg([(0.0, 4.0), (2.0, 2.0), (2.0, 0.0), (0.0, 2.0)]);
        assert!(interleaves(&t, &q1, &q2).unwrap());
        assert!(interleaves(&t, &q1, &q1).unwrap());
    }

    #[test]
    fn crowded_corners_do_not_interleave() {
        let t = tri();
        let q1 = pg([(0.0, 0.0), (0.0, 2.0), (2.0, 2.0), (2.0, 0.0)]);
        // Every corner sits on the arc from (0,2) to (2,2) through the apex.
        let q2 = Pgram { corners: [(0.0, 3.0), (0.0, 3.5), (0.25, 3.75), (0.5, 3.5)].map(Point::from) };
        assert!(!interleaves(&t, &q1, &q2).unwrap());
        assert!(!interleaves(&t, &q2, &q1).unwrap());
        let off = pg([(0.5, 0.5), (0.0, 2.0), (2.0, 2.0), (2.0, 0.0)]);
        assert_eq!(interleaves(&t, &q1, &off), Err(Error::NotInscribed));
    }

    #[test]
    fn empty_and_single_are_vacuous() {
        let t = tri();
        assert!(verify_interleaving(&t, &[]).ok());
        let q1 = pg([(0.0, 0.0), (0.0, 2.0), (2.0, 2.0), (2.0, 0.0)]);
        assert!(verify_interleaving(&t, &[q1]).ok());
    }
}
