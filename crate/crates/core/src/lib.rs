//! Locally maximal and maximum area parallelograms inscribed in a convex
//! polygon, computed in quadratic time, together with a brute-force
//! sampling oracle and a few related geometric utilities.
//!
//! ```
//! use lmap_core::{find_map, Polygon, SearchOptions};
//!
//! let tri = Polygon::new(&[(0.0, 0.0), (0.0, 4.0), (4.0, 0.0)]).unwrap();
//! let best = find_map(&tri, &SearchOptions::default()).unwrap();
//! assert!((best.pgram.area() - 4.0).abs() < 1e-9);
//! ```

pub mod analysis;
pub mod clamping;
pub mod disprod;
pub mod error;
pub mod geom;
pub mod pgram;
pub mod polygon;
pub mod report;
pub mod search;
pub mod svg;
pub mod tol;

pub use error::{Error, Result};
pub use geom::{Line, Point};
pub use pgram::Pgram;
pub use polygon::{BoundaryPoint, BoundaryPortion, BuildOptions, Chasing, Perturbation, Polygon, Unit};
pub use search::{find_all_lmaps, find_map, Candidate, Flags, LmapReport, ProbeResult, SearchOptions, Source, Stats};
pub use tol::Tolerances;
