use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::point::segments_properly_intersect;
use super::{Point2, Segment, EPS_AREA, EPS_POINT};

/// A simple polygon: one counter-clockwise ring, no holes, implicitly closed.
///
/// Construction normalizes the ring (drops coincident and collinear vertices,
/// forces CCW orientation, rotates the lexicographically smallest vertex to
/// the front) and rejects self-intersecting or degenerate input, so two
/// polygons describing the same region compare equal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point2>", into = "Vec<Point2>")]
pub struct Polygon {
    vertices: Vec<Point2>,
}

impl TryFrom<Vec<Point2>> for Polygon {
    type Error = Error;
    fn try_from(v: Vec<Point2>) -> Result<Self> {
        Polygon::new(v)
    }
}

impl From<Polygon> for Vec<Point2> {
    fn from(p: Polygon) -> Self {
        p.vertices
    }
}

impl Polygon {
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        let ring = clean_ring(vertices)?;
        let ring = canonical_rotation(ring);
        let poly = Self { vertices: ring };
        poly.check_simple()?;
        Ok(poly)
    }

    /// Axis-aligned rectangle helper.
    pub fn rectangle(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        Self::new(vec![
            Point2::new(x0, y0),
            Point2::new(x1, y0),
            Point2::new(x1, y1),
            Point2::new(x0, y1),
        ])
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| Segment::new(self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn area(&self) -> f64 {
        ring_signed_area(&self.vertices).abs()
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|e| e.length()).sum()
    }

    pub fn centroid(&self) -> Point2 {
        let mut cx = 0.0;
        let mut cy = 0.0;
        let mut a = 0.0;
        let n = self.vertices.len();
        for i in 0..n {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            let w = p.cross(q);
            cx += (p.x + q.x) * w;
            cy += (p.y + q.y) * w;
            a += w;
        }
        Point2::new(cx / (3.0 * a), cy / (3.0 * a))
    }

    pub fn bbox(&self) -> (Point2, Point2) {
        let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for v in &self.vertices {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
        (lo, hi)
    }

    /// Point-in-polygon, inclusive of the boundary within `eps`.
    pub fn contains_point(&self, p: Point2, eps: f64) -> bool {
        if self.edges().any(|e| e.distance_to_point(p) <= eps) {
            return true;
        }
        self.contains_point_strict(p)
    }

    /// Crossing-number test; boundary points are unreliable here, use
    /// [`Polygon::contains_point`] when boundary inclusion matters.
    pub fn contains_point_strict(&self, p: Point2) -> bool {
        let n = self.vertices.len();
        let mut inside = false;
        let mut j = n - 1;
        for i in 0..n {
            let vi = self.vertices[i];
            let vj = self.vertices[j];
            if (vi.y > p.y) != (vj.y > p.y) {
                let x = vj.x + (p.y - vj.y) / (vi.y - vj.y) * (vi.x - vj.x);
                if p.x < x {
                    inside = !inside;
                }
            }
            j = i;
        }
        inside
    }

    /// Vertices of the convex hull, CCW.
    pub fn convex_hull(&self) -> Vec<Point2> {
        let mut pts = self.vertices.clone();
        pts.sort_by(|a, b| a.lex_cmp(*b));
        let mut hull: Vec<Point2> = Vec::with_capacity(pts.len() * 2);
        // lower then upper chain
        for pass in 0..2 {
            let start = hull.len();
            let iter: Box<dyn Iterator<Item = &Point2>> = if pass == 0 {
                Box::new(pts.iter())
            } else {
                Box::new(pts.iter().rev())
            };
            for &p in iter {
                while hull.len() >= start + 2 {
                    let a = hull[hull.len() - 2];
                    let b = hull[hull.len() - 1];
                    if b.sub(a).cross(p.sub(a)) <= 0.0 {
                        hull.pop();
                    } else {
                        break;
                    }
                }
                hull.push(p);
            }
            hull.pop();
        }
        hull
    }

    /// Minimum width over all directions (rotating calipers on the hull).
    pub fn min_caliper_width(&self) -> f64 {
        let hull = self.convex_hull();
        let n = hull.len();
        if n < 3 {
            return 0.0;
        }
        let mut best = f64::INFINITY;
        for i in 0..n {
            let e = hull[(i + 1) % n].sub(hull[i]);
            let len = e.norm();
            if len < EPS_POINT {
                continue;
            }
            let normal = e.perp().scale(1.0 / len);
            let mut w = 0.0f64;
            for &p in &hull {
                w = w.max(p.sub(hull[i]).dot(normal).abs());
            }
            best = best.min(w);
        }
        best
    }

    /// Aspect ratio (long/short) of the bounding rectangle aligned with the
    /// direction that attains the minimum caliper width.
    pub fn bounding_aspect(&self) -> f64 {
        let hull = self.convex_hull();
        let n = hull.len();
        if n < 3 {
            return f64::INFINITY;
        }
        let mut best = (f64::INFINITY, f64::INFINITY); // (width, length)
        for i in 0..n {
            let e = hull[(i + 1) % n].sub(hull[i]);
            let len = e.norm();
            if len < EPS_POINT {
                continue;
            }
            let dir = e.scale(1.0 / len);
            let normal = dir.perp();
            let (mut w, mut l0, mut l1) = (0.0f64, f64::INFINITY, f64::NEG_INFINITY);
            for &p in &hull {
                let d = p.sub(hull[i]);
                w = w.max(d.dot(normal).abs());
                l0 = l0.min(d.dot(dir));
                l1 = l1.max(d.dot(dir));
            }
            if w < best.0 {
                best = (w, l1 - l0);
            }
        }
        if best.0 < EPS_POINT {
            f64::INFINITY
        } else {
            (best.1 / best.0).max(1.0)
        }
    }

    /// Convexity diagnostic: area over convex-hull area, 1 for convex shapes.
    pub fn convexity(&self) -> f64 {
        let hull = self.convex_hull();
        let ha = ring_signed_area(&hull).abs();
        if ha < EPS_AREA {
            return 0.0;
        }
        (self.area() / ha).min(1.0)
    }

    /// Approximate equality: same vertex count, corresponding vertices within
    /// `eps`. Both rings are canonical so no cyclic search is needed.
    pub fn approx_eq(&self, other: &Polygon, eps: f64) -> bool {
        self.vertices.len() == other.vertices.len()
            && self
                .vertices
                .iter()
                .zip(&other.vertices)
                .all(|(a, b)| a.distance(*b) <= eps)
    }

    fn check_simple(&self) -> Result<()> {
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            for j in (i + 1)..n {
                // skip edges sharing a vertex
                if j == i || (j + 1) % n == i || j == (i + 1) % n {
                    continue;
                }
                let c = self.vertices[j];
                let d = self.vertices[(j + 1) % n];
                if segments_properly_intersect(a, b, c, d) {
                    return Err(Error::DegenerateGeometry(format!(
                        "self-intersection between edges {i} and {j}"
                    )));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn ring_signed_area(ring: &[Point2]) -> f64 {
    let n = ring.len();
    let mut s = 0.0;
    for i in 0..n {
        s += ring[i].cross(ring[(i + 1) % n]);
    }
    s * 0.5
}

/// Drop consecutive coincident vertices and collinear interior vertices,
/// force CCW orientation, reject degenerate rings.
fn clean_ring(input: Vec<Point2>) -> Result<Vec<Point2>> {
    if input.iter().any(|p| !p.is_finite()) {
        return Err(Error::DegenerateGeometry("non-finite coordinate".into()));
    }
    let mut ring: Vec<Point2> = Vec::with_capacity(input.len());
    for p in input {
        if ring.last().is_none_or(|q| !q.coincident(p)) {
            ring.push(p);
        }
    }
    while ring.len() >= 2 && ring[0].coincident(*ring.last().unwrap()) {
        ring.pop();
    }
    // remove collinear vertices (perpendicular deviation under EPS_POINT)
    let mut i = 0;
    while ring.len() >= 3 && i < ring.len() {
        let n = ring.len();
        let prev = ring[(i + n - 1) % n];
        let cur = ring[i];
        let next = ring[(i + 1) % n];
        if Segment::new(prev, next).distance_to_point(cur) < EPS_POINT {
            ring.remove(i);
            i = i.saturating_sub(1);
        } else {
            i += 1;
        }
    }
    if ring.len() < 3 {
        return Err(Error::DegenerateGeometry(format!(
            "{} distinct vertices after cleanup",
            ring.len()
        )));
    }
    let area = ring_signed_area(&ring);
    if area.abs() < EPS_AREA {
        return Err(Error::DegenerateGeometry(format!(
            "ring area {area:e} below threshold"
        )));
    }
    if area < 0.0 {
        ring.reverse();
    }
    Ok(ring)
}

fn canonical_rotation(ring: Vec<Point2>) -> Vec<Point2> {
    let start = ring
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.lex_cmp(**b))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut out = Vec::with_capacity(ring.len());
    out.extend_from_slice(&ring[start..]);
    out.extend_from_slice(&ring[..start]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> Polygon {
        Polygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap()
    }

    fn l_shape() -> Polygon {
        // 2x2 square minus the 1x1 top-right corner
        Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 1.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 2.0),
            Point2::new(0.0, 2.0),
        ])
        .unwrap()
    }

    #[test]
    fn area_unit_cases() {
        assert!((unit_square().area() - 1.0).abs() < 1e-12);
        let rect = Polygon::rectangle(0.0, 0.0, 2.0, 0.5).unwrap();
        assert!((rect.area() - 1.0).abs() < 1e-12);
        // decomposed by hand: 2x1 bottom + 1x1 upper-left = 3
        assert!((l_shape().area() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn perimeter_cases() {
        assert!((unit_square().perimeter() - 4.0).abs() < 1e-12);
        let rect = Polygon::rectangle(0.0, 0.0, 2.0, 0.5).unwrap();
        assert!((rect.perimeter() - 5.0).abs() < 1e-12);
        // six edges: 2 + 1 + 1 + 1 + 1 + 2
        assert!((l_shape().perimeter() - 8.0).abs() < 1e-12);
    }

    #[test]
    fn construction_normalizes_orientation_and_start() {
        let cw = Polygon::new(vec![
            Point2::new(0.0, 1.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 0.0),
        ])
        .unwrap();
        assert_eq!(cw, unit_square());
        assert_eq!(cw.vertices()[0], Point2::new(0.0, 0.0));
    }

    #[test]
    fn construction_drops_collinear_and_coincident() {
        let p = Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(0.5, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap();
        assert_eq!(p.vertices().len(), 4);
    }

    #[test]
    fn degenerate_rings_rejected() {
        assert!(Polygon::new(vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)]).is_err());
        // zero-area spike
        assert!(Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(2.0, 0.0),
        ])
        .is_err());
        // bow-tie
        assert!(Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        ])
        .is_err());
    }

    #[test]
    fn centroid_and_containment() {
        let sq = unit_square();
        let c = sq.centroid();
        assert!(c.coincident(Point2::new(0.5, 0.5)));
        assert!(sq.contains_point(Point2::new(0.5, 0.5), EPS_POINT));
        assert!(sq.contains_point(Point2::new(1.0, 0.5), EPS_POINT)); // boundary
        assert!(!sq.contains_point(Point2::new(1.5, 0.5), EPS_POINT));
        let l = l_shape();
        assert!(!l.contains_point(Point2::new(1.5, 1.5), EPS_POINT));
        assert!(l.contains_point(Point2::new(0.5, 1.5), EPS_POINT));
    }

    #[test]
    fn caliper_width_and_aspect() {
        let sliver = Polygon::rectangle(0.0, 0.0, 6.0, 1.0).unwrap();
        assert!((sliver.min_caliper_width() - 1.0).abs() < 1e-9);
        assert!((sliver.bounding_aspect() - 6.0).abs() < 1e-9);
        assert!((unit_square().bounding_aspect() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn convexity_diagnostic() {
        assert!((unit_square().convexity() - 1.0).abs() < 1e-9);
        // hull of the L adds the notch diagonal: area 3.5, so 3/3.5
        assert!((l_shape().convexity() - 6.0 / 7.0).abs() < 1e-9);
    }
}
