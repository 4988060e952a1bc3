//! Collinear-overlap arithmetic between walls and boundary annotations.

use crate::geometry::{normalize_angle, Point2, Polygon, Segment, EPS_POINT};

/// Wall stretches shared by two abutting room polygons, merged into maximal
/// segments.
pub fn shared_wall_segments(a: &Polygon, b: &Polygon) -> Vec<Segment> {
    let mut overlaps = Vec::new();
    for ea in a.edges() {
        for eb in b.edges() {
            if let Some(o) = ea.collinear_overlap(&eb) {
                overlaps.push(o);
            }
        }
    }
    merge_collinear(overlaps)
}

/// Overlaps of a polygon's edges with a set of annotation segments, merged.
pub fn boundary_overlaps(poly: &Polygon, segments: &[Segment]) -> Vec<Segment> {
    let mut overlaps = Vec::new();
    for e in poly.edges() {
        for s in segments {
            if let Some(o) = e.collinear_overlap(s) {
                overlaps.push(o);
            }
        }
    }
    merge_collinear(overlaps)
}

/// Longest contiguous stretch of a room's walls lying on the given façade
/// segments; zero when the room never touches them.
pub fn facade_frontage(poly: &Polygon, facade_edges: &[Segment]) -> f64 {
    boundary_overlaps(poly, facade_edges)
        .iter()
        .map(|s| s.length())
        .fold(0.0, f64::max)
}

/// Merge collinear segments that touch or overlap into maximal segments.
pub fn merge_collinear(segments: Vec<Segment>) -> Vec<Segment> {
    // bucket by supporting line: (direction angle, signed line offset)
    let mut buckets: Vec<(f64, f64, Vec<(f64, f64, Segment)>)> = Vec::new();
    for s in segments {
        if s.length() < EPS_POINT {
            continue;
        }
        let angle = s.angle();
        let dir = Point2::new(angle.cos(), angle.sin());
        let normal = dir.perp();
        let off = s.a.dot(normal);
        let t0 = s.a.dot(dir);
        let t1 = s.b.dot(dir);
        let (t0, t1) = (t0.min(t1), t0.max(t1));
        let bucket = buckets.iter_mut().find(|(a, o, _)| {
            angle_close(*a, angle) && (*o - off).abs() < EPS_POINT
        });
        match bucket {
            Some((_, _, v)) => v.push((t0, t1, s)),
            None => buckets.push((angle, off, vec![(t0, t1, s)])),
        }
    }
    let mut out = Vec::new();
    for (angle, off, mut intervals) in buckets {
        intervals.sort_by(|x, y| x.0.total_cmp(&y.0));
        let dir = Point2::new(angle.cos(), angle.sin());
        let base = dir.perp().scale(off);
        let mut cur: Option<(f64, f64)> = None;
        for (t0, t1, _) in intervals {
            match cur {
                Some((c0, c1)) if t0 <= c1 + EPS_POINT => cur = Some((c0, c1.max(t1))),
                Some((c0, c1)) => {
                    out.push(seg_from_interval(base, dir, c0, c1));
                    cur = Some((t0, t1));
                }
                None => cur = Some((t0, t1)),
            }
        }
        if let Some((c0, c1)) = cur {
            out.push(seg_from_interval(base, dir, c0, c1));
        }
    }
    out.sort_by(|a, b| a.a.lex_cmp(b.a).then(a.b.lex_cmp(b.b)));
    out
}

fn seg_from_interval(base: Point2, dir: Point2, t0: f64, t1: f64) -> Segment {
    Segment::new(base.add(dir.scale(t0)), base.add(dir.scale(t1)))
}

fn angle_close(a: f64, b: f64) -> bool {
    let d = (normalize_angle(a) - normalize_angle(b)).abs();
    d < 1e-9 || (std::f64::consts::PI - d).abs() < 1e-9
}

#[cfg(test)]
mod tests {
    use crate::geometry::Polygon;

    use super::*;

    #[test]
    fn abutting_rooms_share_a_wall() {
        let a = Polygon::rectangle(0.0, 0.0, 3.0, 2.0).unwrap();
        let b = Polygon::rectangle(0.0, 2.0, 3.0, 4.0).unwrap();
        let shared = shared_wall_segments(&a, &b);
        assert_eq!(shared.len(), 1);
        assert!((shared[0].length() - 3.0).abs() < 1e-9);
    }

    #[test]
    fn disjoint_rooms_share_nothing() {
        let a = Polygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap();
        let b = Polygon::rectangle(2.0, 0.0, 3.0, 1.0).unwrap();
        assert!(shared_wall_segments(&a, &b).is_empty());
    }

    #[test]
    fn merge_joins_touching_collinear_runs() {
        let s1 = Segment::new(Point2::new(0.0, 0.0), Point2::new(1.0, 0.0));
        let s2 = Segment::new(Point2::new(1.0, 0.0), Point2::new(2.5, 0.0));
        let s3 = Segment::new(Point2::new(4.0, 0.0), Point2::new(5.0, 0.0));
        let merged = merge_collinear(vec![s1, s3, s2]);
        assert_eq!(merged.len(), 2);
        assert!((merged[0].length() - 2.5).abs() < 1e-9);
        assert!((merged[1].length() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn frontage_is_longest_contiguous_stretch() {
        let room = Polygon::rectangle(0.0, 0.0, 4.0, 3.0).unwrap();
        let facade = vec![
            Segment::new(Point2::new(0.0, 0.0), Point2::new(1.5, 0.0)),
            Segment::new(Point2::new(2.0, 0.0), Point2::new(4.0, 0.0)),
            Segment::new(Point2::new(4.0, 0.0), Point2::new(4.0, 0.5)),
        ];
        assert!((facade_frontage(&room, &facade) - 2.0).abs() < 1e-9);
    }
}
