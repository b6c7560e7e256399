//! Enumeration of candidate parallelograms and the top-level queries.
//!
//! Every locally maximal parallelogram has an anchored narrow corner, an
//! anchored broad corner with an anchored neighbor, or four even corners.
//! One enumeration covers each case; their union is validated, merged and
//! (optionally) screened by a local-maximality probe.

mod broad;
mod even;
mod narrow;
mod validate;

use serde::{Deserialize, Serialize};

use crate::disprod::ZTable;
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::pgram::Pgram;
use crate::polygon::{Polygon, Unit};

pub use validate::{clamping_violations, dedup, local_max_probe, validate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Narrow,
    Broad,
    Even,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeResult {
    Passed,
    Failed,
    NotRun,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub inscribed: bool,
    pub non_slidable: bool,
    pub local_max_probe: ProbeResult,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Candidate {
    pub pgram: Pgram,
    /// Enumeration that produced this candidate first.
    pub source: Source,
    /// Every enumeration that produced it, after merging duplicates.
    pub found_by: Vec<Source>,
    /// Units `(u, u')` holding the two corners flanking the enumerated one.
    pub pair: Option<(Unit, Unit)>,
    /// Polygon vertex the enumeration placed a corner on.
    pub anchor: Option<usize>,
    /// Unit housing each corner, when the candidate is inscribed.
    pub corner_units: Option<[Unit; 4]>,
    pub flags: Flags,
}

impl Candidate {
    pub fn area(&self) -> f64 {
        self.pgram.area()
    }

    pub fn is_valid(&self) -> bool {
        self.flags.inscribed && self.flags.non_slidable && self.flags.local_max_probe != ProbeResult::Failed
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Screen candidates with the sampled local-maximality probe.
    pub probe: bool,
    /// Keep candidates that fail validation in the report.
    pub keep_rejected: bool,
    /// Run the three enumerations on the rayon pool.
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { probe: true, keep_rejected: false, parallel: false }
    }
}

/// Work counters; the triple counts grow quadratically with `n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub narrow_triples: u64,
    pub broad_triples: u64,
    pub even_pairs: u64,
    pub raw_candidates: u64,
    pub inscribed: u64,
    pub merged: u64,
    pub probe_failed: u64,
}

impl Stats {
    pub fn triples(&self) -> u64 {
        self.narrow_triples + self.broad_triples + self.even_pairs
    }

    fn add(&mut self, o: &Stats) {
        self.narrow_triples += o.narrow_triples;
        self.broad_triples += o.broad_triples;
        self.even_pairs += o.even_pairs;
        self.raw_candidates += o.raw_candidates;
    }
}

#[derive(Clone, Debug)]
pub struct LmapReport {
    /// Merged candidates (rejected ones only with `keep_rejected`).
    pub candidates: Vec<Candidate>,
    /// Candidates passing every check, largest area first.
    pub lmaps: Vec<Candidate>,
    /// Index of the maximum into `lmaps`.
    pub map_index: Option<usize>,
    pub stats: Stats,
    /// Wall time of the search; zero where no clock is available (wasm).
    pub elapsed_ms: f64,
}

impl LmapReport {
    pub fn map(&self) -> Option<&Candidate> {
        self.map_index.map(|i| &self.lmaps[i])
    }
}

/// `std::time::Instant` panics on `wasm32-unknown-unknown`.
struct Clock(#[cfg(not(target_arch = "wasm32"))] std::time::Instant);

impl Clock {
    fn start() -> Self {
        Clock(
            #[cfg(not(target_arch = "wasm32"))]
            std::time::Instant::now(),
        )
    }

    fn elapsed_ms(&self) -> f64 {
        #[cfg(not(target_arch = "wasm32"))]
        return self.0.elapsed().as_secs_f64() * 1e3;
        #[cfg(target_arch = "wasm32")]
        0.0
    }
}

/// Unvalidated output of an enumeration.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Raw {
    pub corners: [Point; 4],
    pub source: Source,
    pub pair: (Unit, Unit),
    pub anchor: usize,
}

/// Collects candidates, dropping degenerate ones and (unless asked to keep
/// them) ones that fail the cheap checks, so later stages see a short list.
pub(crate) struct Sink<'a> {
    p: &'a Polygon,
    /// Raw corners come from the mirror image and are mapped back first.
    mirrored: bool,
    keep_rejected: bool,
    pub out: Vec<Candidate>,
    pub stats: Stats,
}

impl<'a> Sink<'a> {
    pub fn new(p: &'a Polygon, keep_rejected: bool) -> Self {
        Self { p, mirrored: false, keep_rejected, out: Vec::new(), stats: Stats::default() }
    }

    fn for_mirror(p: &'a Polygon, keep_rejected: bool) -> Self {
        Self { mirrored: true, ..Self::new(p, keep_rejected) }
    }

    pub fn push(&mut self, raw: Raw) {
        self.stats.raw_candidates += 1;
        let raw = if self.mirrored { unmirror(self.p.n(), raw) } else { raw };
        let pgram = Pgram::new(raw.corners);
        if !pgram.area().is_finite() || pgram.area() <= self.p.degenerate_area() {
            return;
        }
        let c = validate::validate(
            self.p,
            Candidate {
                pgram,
                source: raw.source,
                found_by: vec![raw.source],
                pair: Some(raw.pair),
                anchor: Some(raw.anchor),
                corner_units: None,
                flags: Flags { inscribed: false, non_slidable: false, local_max_probe: ProbeResult::NotRun },
            },
            false,
        );
        if self.keep_rejected || (c.flags.inscribed && c.flags.non_slidable) {
            self.out.push(c);
        }
    }
}

/// A point on a monotone chain of vertices with a prescribed height above
/// a reference edge line. The position is cached so a slowly moving target
/// costs amortized constant time.
pub(crate) struct ChainCursor {
    start: usize,
    len: usize,
    edge: usize,
    pos: usize,
}

impl ChainCursor {
    /// Chain `v_start, ..., v_{start+len}`.
    pub fn new(start: usize, len: usize, edge: usize) -> Self {
        Self { start, len, edge, pos: 0 }
    }

    pub fn seek(&mut self, p: &Polygon, tau: f64, tol: f64) -> Option<Point> {
        if self.len == 0 {
            return None;
        }
        let h = |t: usize| p.height(self.edge, p.vertex(self.start + t));
        let (h0, hl) = (h(0), h(self.len));
        let asc = hl > h0;
        if tau < h0.min(hl) - tol || tau > h0.max(hl) + tol {
            return None;
        }
        let past = |a: f64, b: f64| if asc { a > b } else { a < b };
        self.pos = self.pos.min(self.len - 1);
        while self.pos + 1 < self.len && past(tau, h(self.pos + 1)) {
            self.pos += 1;
        }
        while self.pos > 0 && past(h(self.pos), tau) {
            self.pos -= 1;
        }
        let (ha, hb) = (h(self.pos), h(self.pos + 1));
        let t = if hb != ha { ((tau - ha) / (hb - ha)).clamp(0.0, 1.0) } else { 0.0 };
        Some(p.vertex(self.start + self.pos).lerp(p.vertex(self.start + self.pos + 1), t))
    }
}

/// Mirror image unit: vertex `m` of the mirror is `v_{-m}`, edge `m` is
/// `e_{-m-1}`.
pub(crate) fn unmirror_unit(n: usize, u: Unit) -> Unit {
    match u {
        Unit::Vertex(m) => Unit::Vertex((n - m % n) % n),
        Unit::Edge(m) => Unit::Edge((2 * n - m % n - 1) % n),
    }
}

pub(crate) fn unmirror(n: usize, raw: Raw) -> Raw {
    Raw {
        corners: raw.corners.map(|c| Point::new(-c.x, c.y)),
        source: raw.source,
        pair: (unmirror_unit(n, raw.pair.0), unmirror_unit(n, raw.pair.1)),
        anchor: (n - raw.anchor % n) % n,
    }
}

/// Shared inputs for the enumerations: the polygon, its mirror image and
/// their Z-point tables.
struct Prepared<'a> {
    p: &'a Polygon,
    z: ZTable,
    m: Polygon,
    zm: ZTable,
}

impl<'a> Prepared<'a> {
    fn new(p: &'a Polygon) -> Self {
        let m = p.mirrored();
        Self { p, z: ZTable::build(p), zm: ZTable::build(&m), m }
    }

    fn narrow(&self, keep: bool) -> (Vec<Candidate>, Stats) {
        let mut s = Sink::new(self.p, keep);
        narrow::subroutine_edge_first(self.p, &self.z, &mut s);
        let mut sm = Sink::for_mirror(self.p, keep);
        narrow::subroutine_edge_first(&self.m, &self.zm, &mut sm);
        join(s, sm)
    }

    fn broad(&self, keep: bool) -> (Vec<Candidate>, Stats) {
        let mut s = Sink::new(self.p, keep);
        broad::subroutine_edge_first(self.p, &self.z, &mut s);
        broad::subroutine_vertex_pairs(self.p, &self.z, &mut s);
        let mut sm = Sink::for_mirror(self.p, keep);
        broad::subroutine_edge_first(&self.m, &self.zm, &mut sm);
        join(s, sm)
    }

    fn even(&self, keep: bool) -> (Vec<Candidate>, Stats) {
        let mut s = Sink::new(self.p, keep);
        even::four_even(self.p, &mut s);
        (s.out, s.stats)
    }
}

fn join(mut a: Sink, b: Sink) -> (Vec<Candidate>, Stats) {
    a.stats.add(&b.stats);
    a.out.extend(b.out);
    (a.out, a.stats)
}

/// Candidates with an anchored narrow corner, cheaply validated (no probe),
/// rejected ones included.
pub fn alg_narrow(p: &Polygon) -> Vec<Candidate> {
    Prepared::new(p).narrow(true).0
}

/// Candidates with an anchored broad corner next to an anchored corner.
pub fn alg_broad(p: &Polygon) -> Vec<Candidate> {
    Prepared::new(p).broad(true).0
}

/// Candidates with four even corners.
pub fn alg_even(p: &Polygon) -> Vec<Candidate> {
    Prepared::new(p).even(true).0
}

fn enumerate(p: &Polygon, opts: &SearchOptions) -> (Vec<Candidate>, Stats) {
    let prep = Prepared::new(p);
    let keep = opts.keep_rejected;
    let parts = if opts.parallel {
        let ((a, b), c) = rayon::join(|| rayon::join(|| prep.narrow(keep), || prep.broad(keep)), || prep.even(keep));
        [a, b, c]
    } else {
        [prep.narrow(keep), prep.broad(keep), prep.even(keep)]
    };
    let mut all = Vec::new();
    let mut stats = Stats::default();
    for (out, s) in parts {
        all.extend(out);
        stats.add(&s);
    }
    (all, stats)
}

/// All locally maximal parallelograms (up to the probe's resolution) and
/// the maximum.
pub fn find_all_lmaps(p: &Polygon, opts: &SearchOptions) -> Result<LmapReport> {
    let t0 = Clock::start();
    let (raw, mut stats) = enumerate(p, opts);
    stats.inscribed = raw.iter().filter(|c| c.flags.inscribed && c.flags.non_slidable).count() as u64;
    let mut candidates = dedup(p, raw);
    stats.merged = candidates.len() as u64;
    if opts.probe {
        let probe_one = |c: &mut Candidate| {
            if c.flags.inscribed && c.flags.non_slidable {
                c.flags.local_max_probe = local_max_probe(p, &c.pgram, c.corner_units.as_ref().unwrap());
            }
        };
        if opts.parallel {
            use rayon::prelude::*;
            candidates.par_iter_mut().for_each(probe_one);
        } else {
            candidates.iter_mut().for_each(probe_one);
        }
        stats.probe_failed =
            candidates.iter().filter(|c| c.flags.local_max_probe == ProbeResult::Failed).count() as u64;
    }
    let mut lmaps: Vec<Candidate> = candidates.iter().filter(|c| c.is_valid()).cloned().collect();
    lmaps.sort_by(|a, b| b.area().total_cmp(&a.area()).then(cmp_lex(a, b)));
    if !opts.keep_rejected {
        candidates.retain(|c| c.is_valid());
    }
    let map_index = pick_map(&lmaps);
    Ok(LmapReport { candidates, lmaps, map_index, stats, elapsed_ms: t0.elapsed_ms() })
}

fn cmp_lex(a: &Candidate, b: &Candidate) -> std::cmp::Ordering {
    let (ka, kb) = (a.pgram.lex_key(), b.pgram.lex_key());
    ka.iter().zip(kb.iter()).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
}

/// Largest area; near ties go to the lexicographically smallest corners.
fn pick_map(lmaps: &[Candidate]) -> Option<usize> {
    let best = lmaps.iter().map(|c| c.area()).fold(f64::NEG_INFINITY, f64::max);
    let tie = 1e-9 * best.abs();
    (0..lmaps.len()).filter(|&i| lmaps[i].area() >= best - tie).min_by(|&i, &j| cmp_lex(&lmaps[i], &lmaps[j]))
}

/// The maximum area parallelogram.
pub fn find_map(p: &Polygon, opts: &SearchOptions) -> Result<Candidate> {
    let report = find_all_lmaps(p, opts)?;
    report.map().cloned().ok_or(Error::NoCandidates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{random_polygon, regular_polygon};

    fn tri() -> Polygon {
        Polygon::new(&[(0.0, 0.0), (0.0, 4.0), (4.0, 0.0)]).unwrap()
    }

    fn has_corner(c: &Candidate, x: Point) -> bool {
        c.pgram.corners.iter().any(|q| q.dist(x) < 1e-9)
    }

    #[test]
    fn triangle_has_three_half_area_lmaps() {
        let t = tri();
        let r = find_all_lmaps(&t, &SearchOptions::default()).unwrap();
        assert_eq!(r.lmaps.len(), 3, "{:#?}", r.lmaps);
        for c in &r.lmaps {
            assert!((c.area() - 4.0).abs() < 1e-9);
            assert_eq!(c.flags.local_max_probe, ProbeResult::Passed);
        }
        let anchored = r.lmaps.iter().find(|c| has_corner(c, Point::new(0.0, 0.0))).unwrap();
        for x in [(0.0, 2.0), (2.0, 2.0), (2.0, 0.0)] {
            assert!(has_corner(anchored, x.into()));
        }
        assert!((r.map().unwrap().area() - 4.0).abs() < 1e-9);
    }

    #[test]
    fn triangle_narrow_trace() {
        // Anchor v0, neighbors on the hypotenuse's flanking edges.
        let t = tri();
        let z = ZTable::build(&t);
        let mut sink = Sink::new(&t, true);
        narrow::subroutine_edge_first(&t, &z, &mut sink);
        let hit =
            sink.out.iter().any(|c| c.anchor == Some(0) && c.flags.inscribed && has_corner(c, Point::new(2.0, 2.0)));
        assert!(hit);
    }

    #[test]
    fn pentagon_has_five_lmaps() {
        let p = regular_polygon(5).unwrap();
        let r = find_all_lmaps(&p, &SearchOptions::default()).unwrap();
        assert_eq!(r.lmaps.len(), 5, "{:#?}", r.lmaps);
        let a0 = r.lmaps[0].area();
        for c in &r.lmaps {
            assert!((c.area() - a0).abs() <= 1e-9 * a0);
        }
    }

    #[test]
    fn narrow_and_broad_agree_after_merge() {
        let t = tri();
        let r = find_all_lmaps(&t, &SearchOptions::default()).unwrap();
        assert!(r.lmaps.iter().all(|c| !c.found_by.is_empty()));
        assert!(r.lmaps.iter().any(|c| c.found_by.contains(&Source::Narrow)));
    }

    #[test]
    fn count_bound_and_closure() {
        for seed in 0..15 {
            let p = random_polygon(5 + (seed as usize % 8), seed).unwrap();
            let r = find_all_lmaps(&p, &SearchOptions::default()).unwrap();
            assert!(!r.lmaps.is_empty());
            assert!(r.lmaps.len() <= 2 * p.n(), "seed {seed}: {}", r.lmaps.len());
            for c in &r.lmaps {
                assert!(c.pgram.closure_error() <= 1e-9 * p.diameter());
            }
        }
    }

    #[test]
    fn mirror_units_round_trip() {
        let p = random_polygon(7, 3).unwrap();
        let m = p.mirrored();
        for k in 0..7 {
            match unmirror_unit(7, Unit::Vertex(k)) {
                Unit::Vertex(v) => {
                    let w = m.vertex(k);
                    assert_eq!(p.vertex(v), Point::new(-w.x, w.y));
                }
                _ => unreachable!(),
            }
            if let Unit::Edge(e) = unmirror_unit(7, Unit::Edge(k)) {
                let (a, b) = (m.vertex(k), m.vertex(k + 1));
                let (pa, pb) = (p.vertex(e), p.vertex(e + 1));
                assert_eq!(Point::new(-a.x, a.y), pb);
                assert_eq!(Point::new(-b.x, b.y), pa);
            }
        }
    }
}
