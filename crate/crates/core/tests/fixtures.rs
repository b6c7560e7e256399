use lmap_core::analysis::regular_polygon;
use lmap_core::search::{alg_broad, alg_even, alg_narrow, dedup, validate};
use lmap_core::{
    find_all_lmaps, find_map, Candidate, Error, Flags, Pgram, Point, Polygon, ProbeResult, SearchOptions, Source, Unit,
};

fn triangle() -> Polygon {
    Polygon::new(&[(0.0, 0.0), (0.0, 4.0), (4.0, 0.0)]).unwrap()
}

fn pg(c: [(f64, f64); 4]) -> Pgram {
    Pgram::new(c.map(Point::from))
}

fn bare(q: Pgram, source: Source) -> Candidate {
    Candidate {
        pgram: q,
        source,
        found_by: vec![source],
        pair: None,
        anchor: None,
        corner_units: None,
        flags: Flags { inscribed: false, non_slidable: false, local_max_probe: ProbeResult::NotRun },
    }
}

fn all_candidates(p: &Polygon) -> Vec<Candidate> {
    let mut v = alg_narrow(p);
    v.extend(alg_broad(p));
    v.extend(alg_even(p));
    v
}

#[test]
fn triangle_lmaps_are_the_three_half_squares() {
    let t = triangle();
    let r = find_all_lmaps(&t, &SearchOptions::default()).unwrap();
    assert_eq!(r.lmaps.len(), 3);
    let want = [
        pg([(0.0, 0.0), (0.0, 2.0), (2.0, 2.0), (2.0, 0.0)]),
        pg([(0.0, 2.0), (0.0, 4.0), (2.0, 2.0), (2.0, 0.0)]),
        pg([(0.0, 2.0), (2.0, 2.0), (4.0, 0.0), (2.0, 0.0)]),
    ];
    for w in &want {
        assert!(r.lmaps.iter().any(|c| c.pgram.same_as(w, 1e-9)), "missing {w:?}");
    }
    for c in &r.lmaps {
        assert!((c.area() - 4.0).abs() < 1e-9);
        assert_eq!(c.flags.local_max_probe, ProbeResult::Passed);
        assert!(c.corner_units.unwrap().iter().any(|u| u.is_vertex()));
    }
    assert!((find_map(&t, &SearchOptions::default()).unwrap().area() - 4.0).abs() < 1e-9);
}

#[test]
fn triangle_enumerations_cover_the_answer() {
    let t = triangle();
    let merged = dedup(&t, all_candidates(&t));
    let valid: Vec<_> = merged.into_iter().map(|c| validate(&t, c, true)).filter(|c| c.is_valid()).collect();
    assert_eq!(valid.len(), 3);
    let narrow = alg_narrow(&t);
    assert!(narrow.iter().any(|c| c.is_valid() && (c.area() - 4.0).abs() < 1e-9));
    for c in &narrow {
        assert_eq!(c.source, Source::Narrow);
        assert!(c.anchor.is_some() && c.pair.is_some());
    }
}

#[test]
fn pentagon_has_five_congruent_lmaps() {
    let p = regular_polygon(5).unwrap();
    let r = find_all_lmaps(&p, &SearchOptions::default()).unwrap();
    assert_eq!(r.lmaps.len(), 5);
    let a0 = r.lmaps[0].area();
    for c in &r.lmaps {
        assert!((c.area() - a0).abs() <= 1e-9 * a0);
        assert!(c.pgram.closure_error() <= 1e-12);
    }
    let map = r.map().unwrap();
    assert!(r.lmaps.iter().any(|c| c.pgram.same_as(&map.pgram, 0.0)));
}

#[test]
fn pentagon_merging_pools_provenance() {
    let p = regular_polygon(5).unwrap();
    let raw = all_candidates(&p);
    let merged = dedup(&p, raw.clone());
    assert!(merged.len() < raw.len());
    let valid: Vec<_> = merged.iter().filter(|c| c.is_valid()).collect();
    assert!(valid.len() >= 5);
    for c in &merged {
        assert!(c.found_by.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(c.source, c.found_by[0]);
    }
}

#[test]
fn slidable_candidate_is_rejected() {
    let t = triangle();
    // Two corners share the interior of the left edge, so the whole
    // parallelogram can slide along it.
    let q = pg([(0.0, 1.0), (0.0, 3.0), (2.0, 2.0), (2.0, 0.0)]);
    let c = validate(&t, bare(q, Source::Oracle), true);
    assert!(c.flags.inscribed);
    assert!(!c.flags.non_slidable);
    assert_eq!(c.flags.local_max_probe, ProbeResult::NotRun);
    assert!(!c.is_valid());
}

#[test]
fn interior_corner_is_not_inscribed() {
    let t = triangle();
    let q = pg([(0.0, 0.0), (0.0, 2.0), (1.0, 2.0), (1.0, 0.0)]);
    let c = validate(&t, bare(q, Source::Oracle), true);
    assert!(!c.flags.inscribed);
    assert!(c.corner_units.is_none());
    assert!(!c.is_valid());
}

#[test]
fn relabeled_duplicates_merge() {
    let t = triangle();
    let [a, b, c, d] = [(0.0, 0.0), (0.0, 2.0), (2.0, 2.0), (2.0, 0.0)];
    let q1 = validate(&t, bare(pg([a, b, c, d]), Source::Broad), false);
    let q2 = validate(&t, bare(pg([c, d, a, b]), Source::Narrow), false);
    let q3 = validate(&t, bare(pg([a, d, c, b]), Source::Even), false);
    let out = dedup(&t, vec![q1, q2, q3]);
    assert_eq!(out.len(), 1);
    assert_eq!(out[0].found_by, vec![Source::Narrow, Source::Broad, Source::Even]);
    assert_eq!(out[0].source, Source::Narrow);
}

#[test]
fn valid_candidate_replaces_invalid_representative() {
    let t = triangle();
    let q = pg([(0.0, 0.0), (0.0, 2.0), (2.0, 2.0), (2.0, 0.0)]);
    let unchecked = bare(q, Source::Narrow);
    let checked = validate(&t, bare(q, Source::Broad), false);
    let out = dedup(&t, vec![unchecked, checked]);
    assert_eq!(out.len(), 1);
    assert!(out[0].flags.inscribed && out[0].flags.non_slidable);
    assert_eq!(out[0].source, Source::Narrow);
}

#[test]
fn keep_rejected_reports_extra_candidates() {
    let p = regular_polygon(7).unwrap();
    let opts = SearchOptions { keep_rejected: true, ..SearchOptions::default() };
    let r = find_all_lmaps(&p, &opts).unwrap();
    assert!(r.candidates.len() > r.lmaps.len());
    assert!(r.candidates.iter().any(|c| !c.is_valid()));
    let strict = find_all_lmaps(&p, &SearchOptions::default()).unwrap();
    assert_eq!(strict.lmaps.len(), r.lmaps.len());
    assert!(strict.candidates.iter().all(|c| c.is_valid()));
}

#[test]
fn invalid_inputs_are_typed_errors() {
    assert!(matches!(Polygon::new(&[(0.0, 0.0), (1.0, 0.0)]), Err(Error::TooFewVertices)));
    assert!(matches!(Polygon::new(&[(0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0)]), Err(Error::ParallelEdges(..))));
    assert!(matches!(Polygon::new(&[(0.0, 0.0), (f64::NAN, 1.0), (1.0, 0.0)]), Err(Error::NonFinite)));
    assert!(matches!(Polygon::new(&[(0.0, 0.0), (0.0, 4.0), (1.0, 1.0), (4.0, 0.0)]), Err(Error::NotConvex(..))));
    // Vertices and edge interiors locate to different unit kinds.
    let t = triangle();
    assert_eq!(t.locate(Point::new(0.0, 0.0)).unwrap().unit, Unit::Vertex(0));
    assert!(t.locate(Point::new(0.0, 1.0)).unwrap().unit.is_edge());
}
