//! Candidates with a narrow anchored corner.
//!
//! Fix an edge `e_i` with farthest vertex `v_k`. The units chased by `e_i`
//! form the chain `e_{i+1}, v_{i+2}, ..., v_{k-1}, e_{k-1}`, and the blocks
//! of the pairs `(e_i, u')` stack into contiguous height bands above the
//! line of `e_i`. Sweeping the anchor `V` from `v_i` to `v_k` raises its
//! height monotonically, so a two-pointer walk pairs each anchor with the
//! few bands containing it.

use crate::disprod::ZTable;
use crate::pgram::midpoint_pair_on_lines;
use crate::polygon::{Polygon, Unit};

use super::{ChainCursor, Raw, Sink, Source};

struct Band {
    lo: f64,
    hi: f64,
    unit: Unit,
}

fn bands(p: &Polygon, z: &ZTable, i: usize, k: usize) -> Vec<Band> {
    let n = p.n();
    let h = |x| p.height(i, x);
    let zh = |j: usize| h(z.z(i, j).point);
    let mut out = Vec::new();
    let mut j = (i + 1) % n;
    loop {
        let base = zh(j);
        out.push(Band { lo: h(p.vertex(j)) - base, hi: h(p.vertex(j + 1)) - base, unit: Unit::Edge(j) });
        let next = (j + 1) % n;
        if next == k {
            break;
        }
        let hv = h(p.vertex(next));
        out.push(Band { lo: hv - base, hi: hv - zh(next), unit: Unit::Vertex(next) });
        j = next;
    }
    out
}

/// Pairs `(e_i, u')` with `u'` chased by `e_i`, anchor `V` on `[v_i ↻ v_k]`.
/// The corner order is `V, A1 ∈ u', A2, A3 ∈ e_i`.
pub(crate) fn subroutine_edge_first(p: &Polygon, z: &ZTable, sink: &mut Sink) {
    let n = p.n();
    let tol = p.boundary_tol();
    let ptol = p.tolerances().parallel;
    for i in 0..n {
        let k = p.farthest_vertex(i);
        if p.steps(i, k) < 2 {
            continue;
        }
        let bands = bands(p, z, i, k);
        let li = p.edge_line(i);
        let mut cursor = ChainCursor::new(k, p.steps(k, i), i);
        let mut first = 0;
        for s in 0..=p.steps(i, k) {
            let vi = (i + s) % n;
            let v = p.vertex(vi);
            let hv = p.height(i, v);
            while first < bands.len() && bands[first].hi + tol < hv {
                first += 1;
            }
            let mut q = first;
            while q < bands.len() && bands[q].lo - tol <= hv {
                let band = &bands[q];
                q += 1;
                if band.hi + tol < hv {
                    continue;
                }
                sink.stats.narrow_triples += 1;
                let corners = match band.unit {
                    Unit::Edge(j) => {
                        let a2 = z.z(i, j).point;
                        let Ok((a3, a1)) = midpoint_pair_on_lines(&li, &p.edge_line(j), v.midpoint(a2), ptol) else {
                            continue;
                        };
                        [v, a1, a2, a3]
                    }
                    Unit::Vertex(j) => {
                        let a1 = p.vertex(j);
                        let tau = p.height(i, a1) - hv;
                        let Some(a2) = cursor.seek(p, tau, tol) else { continue };
                        [v, a1, a2, v + a2 - a1]
                    }
                };
                sink.push(Raw { corners, source: Source::Narrow, pair: (Unit::Edge(i), band.unit), anchor: vi });
            }
        }
    }
}
