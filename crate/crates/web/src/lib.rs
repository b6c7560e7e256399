//! Browser bindings for the demo page in `www/`.
//!
//! The plain `*_json` functions carry the logic so they can be tested
//! natively; the `#[wasm_bindgen]` wrappers only convert errors.

use serde_json::json;
use wasm_bindgen::prelude::*;

use lmap_core::analysis::{heilbronn4, random_polygon};
use lmap_core::report::{PolygonJson, ReportJson};
use lmap_core::{find_all_lmaps, svg, Pgram, Polygon, SearchOptions};

fn parse(vertices: &str) -> Result<Polygon, String> {
    let pts: Vec<[f64; 2]> = serde_json::from_str(vertices).map_err(|e| format!("InvalidSpec: {e}"))?;
    Polygon::new(&pts).map_err(|e| format!("{}: {e}", e.name()))
}

/// Every locally maximal parallelogram of the polygon with the given
/// vertex list (`[[x, y], ...]`), plus an SVG drawing of the result.
pub fn lmaps_json(vertices: &str) -> Result<String, String> {
    let p = parse(vertices)?;
    let r = find_all_lmaps(&p, &SearchOptions::default()).map_err(|e| format!("{}: {e}", e.name()))?;
    let pg: Vec<Pgram> = r.lmaps.iter().map(|c| c.pgram).collect();
    let out = json!({
        "report": ReportJson::new(&p, &r),
        "svg": svg::render(&p, &pg, r.map_index),
    });
    Ok(out.to_string())
}

/// Best four-point placement for the smallest-triangle problem.
pub fn heilbronn_json(vertices: &str) -> Result<String, String> {
    let p = parse(vertices)?;
    let h = heilbronn4(&p, &SearchOptions::default()).map_err(|e| format!("{}: {e}", e.name()))?;
    let out = json!({
        "result": h,
        "svg": svg::render(&p, &[Pgram::new(h.placement)], Some(0)),
    });
    Ok(out.to_string())
}

/// Vertex list of a random convex polygon.
pub fn random_json(n: usize, seed: u64) -> Result<String, String> {
    let p = random_polygon(n, seed).map_err(|e| format!("{}: {e}", e.name()))?;
    serde_json::to_string(&PolygonJson::from(&p).vertices).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn lmaps(vertices: &str) -> Result<String, JsError> {
    lmaps_json(vertices).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn heilbronn(vertices: &str) -> Result<String, JsError> {
    heilbronn_json(vertices).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn random(n: usize, seed: u32) -> Result<String, JsError> {
    random_json(n, u64::from(seed)).map_err(|e| JsError::new(&e))
}
