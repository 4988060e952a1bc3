//! Boolean subtraction and inward offsetting, backed by `geo`'s clipping.
//!
//! Erosion is reduced to subtraction: strip a band of width `d` along every
//! edge plus a disc (circumscribed polygon) around every reflex vertex. For
//! convex corners the edge bands already cover the vertex neighborhood, so
//! rectangles erode exactly.

use geo::BooleanOps;

use crate::error::{Error, Result};

use super::{Point2, Polygon, EPS_AREA, EPS_POINT};

/// Sides of the circumscribed polygon standing in for a reflex-vertex disc.
const DISC_SIDES: usize = 24;

pub(crate) fn to_geo_polygon(p: &Polygon) -> geo::Polygon<f64> {
    let ring: Vec<geo::Coord<f64>> = p
        .vertices()
        .iter()
        .map(|v| geo::Coord { x: v.x, y: v.y })
        .collect();
    geo::Polygon::new(geo::LineString::from(ring), vec![])
}

/// Exterior rings of a boolean-op result. Rings below the degeneracy
/// threshold are dropped; an interior ring of meaningful size is a hole,
/// which the no-hole domain rejects.
pub(crate) fn geo_rings(mp: &geo::MultiPolygon<f64>) -> Result<Vec<Vec<Point2>>> {
    let mut out = Vec::new();
    for poly in &mp.0 {
        for interior in poly.interiors() {
            let ring: Vec<Point2> = interior.coords().map(|c| Point2::new(c.x, c.y)).collect();
            if ring_area_abs(&ring) > EPS_AREA {
                return Err(Error::HoleProduced);
            }
        }
        let ring: Vec<Point2> = poly
            .exterior()
            .coords()
            .map(|c| Point2::new(c.x, c.y))
            .collect();
        if ring_area_abs(&ring) > EPS_AREA {
            out.push(ring);
        }
    }
    Ok(out)
}

/// Convert a boolean-op result back into simple polygons. Rings thinner than
/// the point-coincidence tolerance collapse during normalization and are
/// dropped as noise.
pub(crate) fn from_geo_multi(mp: &geo::MultiPolygon<f64>) -> Result<Vec<Polygon>> {
    let mut out = Vec::new();
    for ring in geo_rings(mp)? {
        match Polygon::new(ring) {
            Ok(p) => out.push(p),
            Err(Error::DegenerateGeometry(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    out.sort_by(|a, b| a.vertices()[0].lex_cmp(b.vertices()[0]));
    Ok(out)
}

fn ring_area_abs(ring: &[Point2]) -> f64 {
    super::polygon::ring_signed_area(ring).abs()
}

/// `P \ Q` as simple polygons. A clip strictly interior to the subject would
/// punch a hole, which this domain has no representation for.
pub fn subtract(p: &Polygon, q: &Polygon) -> Result<Vec<Polygon>> {
    let diff = to_geo_polygon(p).difference(&to_geo_polygon(q));
    from_geo_multi(&diff)
}

/// Erode a polygon inward by `d` meters. The result may be empty or fall
/// apart into several pieces; both are valid answers.
pub fn inward_offset(p: &Polygon, d: f64) -> Result<Vec<Polygon>> {
    if d < 0.0 {
        return Err(Error::InvalidInput(format!("negative offset distance {d}")));
    }
    if d < EPS_POINT {
        return Ok(vec![p.clone()]);
    }

    let verts = p.vertices();
    let n = verts.len();
    let mut strips: Vec<geo::Polygon<f64>> = Vec::with_capacity(2 * n);
    for i in 0..n {
        let a = verts[i];
        let b = verts[(i + 1) % n];
        let dir = b.sub(a);
        let len = dir.norm();
        if len < EPS_POINT {
            continue;
        }
        // interior lies to the left of a CCW ring
        let inward = dir.perp().scale(d / len);
        let band = Polygon::new(vec![a, b, b.add(inward), a.add(inward)])
            .expect("edge band is a proper quad");
        strips.push(to_geo_polygon(&band));

        // reflex corner at b: points can clear both adjacent edges yet sit
        // within d of the vertex itself
        let c = verts[(i + 2) % n];
        if dir.cross(c.sub(b)) < 0.0 {
            strips.push(to_geo_polygon(&disc_polygon(b, d)));
        }
    }

    let mut union = geo::MultiPolygon::<f64>(vec![]);
    for s in strips {
        union = union.union(&geo::MultiPolygon(vec![s]));
    }
    let eroded = to_geo_polygon(p).difference(&union);
    // erosion of a hole-free region cannot have holes (the complement stays
    // connected), so surface any numeric artifact instead of repairing it
    from_geo_multi(&eroded)
}

/// Circumscribed regular polygon around a disc so the approximation never
/// under-erodes.
fn disc_polygon(center: Point2, radius: f64) -> Polygon {
    let r = radius / (std::f64::consts::PI / DISC_SIDES as f64).cos();
    let ring = (0..DISC_SIDES)
        .map(|k| {
            let a = 2.0 * std::f64::consts::PI * k as f64 / DISC_SIDES as f64;
            Point2::new(center.x + r * a.cos(), center.y + r * a.sin())
        })
        .collect();
    Polygon::new(ring).expect("disc polygon is regular")
}

/// Area of `P ∩ Q`; used for tiling/overlap checks.
pub(crate) fn intersection_area(p: &Polygon, q: &Polygon) -> f64 {
    let inter = to_geo_polygon(p).intersection(&to_geo_polygon(q));
    inter
        .0
        .iter()
        .map(|poly| {
            let ext: Vec<Point2> = poly
                .exterior()
                .coords()
                .map(|c| Point2::new(c.x, c.y))
                .collect();
            let holes: f64 = poly
                .interiors()
                .iter()
                .map(|r| {
                    let ring: Vec<Point2> = r.coords().map(|c| Point2::new(c.x, c.y)).collect();
                    ring_area_abs(&ring)
                })
                .sum();
            ring_area_abs(&ext) - holes
        })
        .sum()
}

/// Difference that tolerates holes by discarding them; only for internal
/// consumers that use the result as a candidate-anchor source, never as an
/// authoritative region.
pub(crate) fn subtract_keep_exterior(pieces: &[Polygon], q: &Polygon) -> Vec<Polygon> {
    let mut out = Vec::new();
    for p in pieces {
        let diff = to_geo_polygon(p).difference(&to_geo_polygon(q));
        for poly in &diff.0 {
            let ring: Vec<Point2> = poly
                .exterior()
                .coords()
                .map(|c| Point2::new(c.x, c.y))
                .collect();
            if ring_area_abs(&ring) > EPS_AREA {
                if let Ok(pg) = Polygon::new(ring) {
                    out.push(pg);
                }
            }
        }
    }
    out.sort_by(|a, b| a.vertices()[0].lex_cmp(b.vertices()[0]));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> Polygon {
        Polygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap()
    }

    #[test]
    fn subtract_half_overlap() {
        let q = Polygon::rectangle(0.5, 0.0, 1.5, 1.0).unwrap();
        let out = subtract(&unit_square(), &q).unwrap();
        assert_eq!(out.len(), 1);
        assert!(out[0].approx_eq(&Polygon::rectangle(0.0, 0.0, 0.5, 1.0).unwrap(), 1e-9));
    }

    #[test]
    fn subtract_disjoint_is_identity() {
        let q = Polygon::rectangle(5.0, 5.0, 6.0, 6.0).unwrap();
        let out = subtract(&unit_square(), &q).unwrap();
        assert_eq!(out.len(), 1);
        assert!(out[0].approx_eq(&unit_square(), 1e-9));
    }

    #[test]
    fn subtract_interior_square_is_hole() {
        let q = Polygon::rectangle(0.25, 0.25, 0.75, 0.75).unwrap();
        let err = subtract(&unit_square(), &q).unwrap_err();
        assert!(matches!(err, Error::HoleProduced));
    }

    #[test]
    fn erosion_of_square_is_exact() {
        let out = inward_offset(&unit_square(), 0.2).unwrap();
        assert_eq!(out.len(), 1);
        assert!(out[0].approx_eq(&Polygon::rectangle(0.2, 0.2, 0.8, 0.8).unwrap(), 1e-9));
    }

    #[test]
    fn over_erosion_is_empty() {
        assert!(inward_offset(&unit_square(), 0.6).unwrap().is_empty());
        // 3 m x 0.8 m corridor eroded by 0.45 m: thinner than 0.9 m, gone
        let corridor = Polygon::rectangle(0.0, 0.0, 3.0, 0.8).unwrap();
        assert!(inward_offset(&corridor, 0.45).unwrap().is_empty());
    }

    #[test]
    fn erosion_can_disconnect() {
        // barbell: two 2x2 plates joined by a 2 m x 0.4 m neck
        let barbell = Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 0.8),
            Point2::new(4.0, 0.8),
            Point2::new(4.0, 0.0),
            Point2::new(6.0, 0.0),
            Point2::new(6.0, 2.0),
            Point2::new(4.0, 2.0),
            Point2::new(4.0, 1.2),
            Point2::new(2.0, 1.2),
            Point2::new(2.0, 2.0),
            Point2::new(0.0, 2.0),
        ])
        .unwrap();
        let out = inward_offset(&barbell, 0.3).unwrap();
        assert_eq!(out.len(), 2);
    }

    #[test]
    fn intersection_area_of_offset_squares() {
        let q = Polygon::rectangle(0.5, 0.5, 1.5, 1.5).unwrap();
        assert!((intersection_area(&unit_square(), &q) - 0.25).abs() < 1e-9);
    }
}
