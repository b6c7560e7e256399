//! Candidates with an anchored broad corner next to an anchored corner.
//!
//! For a chasing pair `(u, u')` the corner between the neighbors in `u'`
//! and `u` is confined to `ζ(u, u')`; when it sits on a vertex `V` of that
//! stretch the remaining corner follows from one height equation.

use crate::clamping::zeta;
use crate::disprod::ZTable;
use crate::polygon::{Polygon, Unit};

use super::{ChainCursor, Raw, Sink, Source};

/// Pairs `(e_i, v_j)` with `e_i` chasing `v_j`. Corner order is
/// `A0 ∈ [v_{i+1} ↻ v_j], A1 = v_j, A2 = V, A3 ∈ e_i`.
pub(crate) fn subroutine_edge_first(p: &Polygon, z: &ZTable, sink: &mut Sink) {
    let n = p.n();
    let tol = p.boundary_tol();
    for i in 0..n {
        let k = p.farthest_vertex(i);
        let span = p.steps(i, k);
        if span < 3 {
            continue;
        }
        let mut cursor = ChainCursor::new(i + 1, span - 1, i);
        for s in 2..span {
            let j = (i + s) % n;
            let Ok(zt) = zeta(p, z, Unit::Edge(i), Unit::Vertex(j)) else { continue };
            let a1 = p.vertex(j);
            let hj = p.height(i, a1);
            for vi in p.vertices_in(&zt.portion) {
                sink.stats.broad_triples += 1;
                let a2 = p.vertex(vi);
                let Some(a0) = cursor.seek(p, hj - p.height(i, a2), tol) else { continue };
                let corners = [a0, a1, a2, a0 + a2 - a1];
                sink.push(Raw { corners, source: Source::Broad, pair: (Unit::Edge(i), Unit::Vertex(j)), anchor: j });
            }
        }
    }
}

/// Pairs `(v_i, v_j)` with `v_i` chasing `v_j`. Corner order is
/// `A0, A1 = v_j, A2 = V, A3 = v_i` with `V` a vertex of `ζ(v_i, v_j)`.
/// The stretches for consecutive `j` overlap in at most one point, so the
/// total work stays quadratic.
pub(crate) fn subroutine_vertex_pairs(p: &Polygon, z: &ZTable, sink: &mut Sink) {
    let n = p.n();
    for i in 0..n {
        for s in 1..n {
            let j = (i + s) % n;
            let (u, u2) = (Unit::Vertex(i), Unit::Vertex(j));
            if !p.unit_chases(u, u2) {
                break;
            }
            let Ok(zt) = zeta(p, z, u, u2) else { continue };
            let (a1, a3) = (p.vertex(j), p.vertex(i));
            for vi in p.vertices_in(&zt.portion) {
                sink.stats.broad_triples += 1;
                let a2 = p.vertex(vi);
                let corners = [a1 + a3 - a2, a1, a2, a3];
                sink.push(Raw { corners, source: Source::Broad, pair: (u, u2), anchor: i });
            }
        }
    }
}
