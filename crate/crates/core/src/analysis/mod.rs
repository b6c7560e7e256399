//! Checks and companions around the main search: interleaving, the
//! sampling oracle, the four-point Heilbronn reduction, a witness that the
//! natural quadratic formulation is not concave, and polygon generators.

mod generate;
mod heilbronn;
mod interleave;
mod oracle;

pub use generate::{random_polygon, regular_polygon, regular_polygon_with};
pub use heilbronn::{heilbronn4, max_area_triangle, min_triangle_area, random_search_h4, Heilbronn4Result};
pub use interleave::{interleaves, verify_interleaving, InterleavingReport};
pub use oracle::{oracle_map, slack_estimate, OracleResult, ORACLE_SLACK_C};

/// `|x1·y2 - x2·y1|` for `x = (x0, y0, x1, y1, x2, y2)`: twice the area of
/// the parallelogram centered at `(x0, y0)` with half-diagonals
/// `(x1, y1)` and `(x2, y2)`.
pub fn pgram_objective(x: [f64; 6]) -> f64 {
    (x[2] * x[5] - x[4] * x[3]).abs()
}

/// The objective at two points and at their midpoint; the midpoint value
/// falls below both, so the objective is not concave.
pub fn nonconcavity_witness() -> (f64, f64, f64) {
    let x = [0.0, 0.0, 1.0, 1.0, 1.0, -1.0];
    let x2 = [0.0, 0.0, -1.0, -1.0, -1.0, 1.0];
    let mid: [f64; 6] = std::array::from_fn(|k| 0.5 * (x[k] + x2[k]));
    (pgram_objective(x), pgram_objective(x2), pgram_objective(mid))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_values() {
        assert_eq!(nonconcavity_witness(), (2.0, 2.0, 0.0));
    }

    #[test]
    fn objective_scales_quadratically_and_ignores_swap() {
        let x = [0.3, -0.2, 1.5, 0.7, -0.4, 2.0];
        let c = 3.0;
        let scaled = x.map(|v| v * c);
        assert!((pgram_objective(scaled) - c * c * pgram_objective(x)).abs() < 1e-12);
        let swapped = [x[0], x[1], x[4], x[5], x[2], x[3]];
        assert_eq!(pgram_objective(swapped), pgram_objective(x));
    }
}
