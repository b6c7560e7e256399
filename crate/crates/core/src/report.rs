//! Serializable view of a search report.

use serde::{Deserialize, Serialize};

use crate::geom::Point;
use crate::polygon::{Polygon, Unit};
use crate::search::{Candidate, Flags, LmapReport, Source, Stats};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolygonJson {
    pub vertices: Vec<Point>,
}

impl From<&Polygon> for PolygonJson {
    fn from(p: &Polygon) -> Self {
        Self { vertices: p.vertices().to_vec() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CandidateJson {
    pub corners: [Point; 4],
    pub area: f64,
    pub source: Source,
    pub found_by: Vec<Source>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<(Unit, Unit)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchor: Option<usize>,
    pub flags: Flags,
}

impl From<&Candidate> for CandidateJson {
    fn from(c: &Candidate) -> Self {
        Self {
            corners: c.pgram.corners,
            area: c.area(),
            source: c.source,
            found_by: c.found_by.clone(),
            pair: c.pair,
            anchor: c.anchor,
            flags: c.flags,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub polygon: PolygonJson,
    pub lmaps: Vec<CandidateJson>,
    pub map_index: Option<usize>,
    /// Candidates failing validation, present only when requested.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rejected: Vec<CandidateJson>,
    pub stats: Stats,
}

impl ReportJson {
    pub fn new(p: &Polygon, r: &LmapReport) -> Self {
        Self {
            polygon: p.into(),
            lmaps: r.lmaps.iter().map(CandidateJson::from).collect(),
            map_index: r.map_index,
            rejected: r.candidates.iter().filter(|c| !c.is_valid()).map(CandidateJson::from).collect(),
            stats: r.stats,
        }
    }
}
