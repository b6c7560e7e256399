//! Named numeric tolerances. Relative entries are multiplied by the
//! polygon diameter (or its square) when a polygon is built.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Cross product of unit edge directions below which edges count as parallel.
    pub parallel: f64,
    /// Distance to the boundary, relative to the diameter.
    pub on_boundary: f64,
    /// Edge parameter snapping to an endpoint.
    pub canon: f64,
    /// Turn cross product, relative to diameter squared.
    pub collinear: f64,
    /// Relative slack in the vertex dominance test.
    pub dominance: f64,
    /// Closed-quadrant half-plane slack, relative to the diameter.
    pub quadrant: f64,
    /// Zero-area cutoff, relative to diameter squared.
    pub degenerate: f64,
    /// Oracle containment slack, relative to the diameter.
    pub containment: f64,
    /// Relative area gain tolerated by the local-maximality probe.
    pub probe_slack: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            parallel: 1e-12,
            on_boundary: 1e-9,
            canon: 1e-12,
            collinear: 1e-12,
            dominance: 1e-12,
            quadrant: 1e-9,
            degenerate: 1e-12,
            containment: 1e-9,
            probe_slack: 1e-12,
        }
    }
}

impl Tolerances {
    /// Multiply every tolerance by `k`.
    pub fn scaled(self, k: f64) -> Self {
        Self {
            parallel: self.parallel * k,
            on_boundary: self.on_boundary * k,
            canon: self.canon * k,
            collinear: self.collinear * k,
            dominance: self.dominance * k,
            quadrant: self.quadrant * k,
            degenerate: self.degenerate * k,
            containment: self.containment * k,
            probe_slack: self.probe_slack * k,
        }
    }
}
