//! Static SVG figure: the polygon filled light, each parallelogram
//! stroked in a fixed color order by area rank, the maximum heaviest.

use std::fmt::Write;

use crate::geom::Point;
use crate::pgram::Pgram;
use crate::polygon::Polygon;

const PALETTE: [&str; 8] = ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"];

fn path(points: &[Point]) -> String {
    let mut s = String::new();
    for (k, q) in points.iter().enumerate() {
        let _ = write!(s, "{}{:.6},{:.6}", if k == 0 { "M" } else { " L" }, q.x, -q.y);
    }
    s.push_str(" Z");
    s
}

pub fn render(p: &Polygon, pgrams: &[Pgram], map_index: Option<usize>) -> String {
    let vs = p.vertices();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for v in vs {
        x0 = x0.min(v.x);
        x1 = x1.max(v.x);
        y0 = y0.min(v.y);
        y1 = y1.max(v.y);
    }
    let (w, h) = (x1 - x0, y1 - y0);
    let m = 0.05 * w.max(h);
    let stroke = 0.004 * w.max(h);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\">",
        x0 - m,
        -y1 - m,
        w + 2.0 * m,
        h + 2.0 * m
    );
    let _ = writeln!(
        out,
        "  <path d=\"{}\" fill=\"#eef2f7\" stroke=\"#333333\" stroke-width=\"{:.6}\"/>",
        path(vs),
        stroke
    );
    let mut order: Vec<usize> = (0..pgrams.len()).collect();
    order.sort_by(|&a, &b| pgrams[b].area().total_cmp(&pgrams[a].area()).then(a.cmp(&b)));
    // Draw the lighter strokes first so the maximum stays on top.
    for (rank, &k) in order.iter().enumerate().rev() {
        let heavy = Some(k) == map_index;
        let _ = writeln!(
            out,
            "  <path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{:.6}\"{}/>",
            path(&pgrams[k].corners),
            PALETTE[rank % PALETTE.len()],
            if heavy { 3.0 * stroke } else { stroke },
            if heavy { " data-map=\"true\"" } else { "" }
        );
    }
    out.push_str("</svg>\n");
    out
}
