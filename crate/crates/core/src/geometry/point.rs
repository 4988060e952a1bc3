use serde::{Deserialize, Serialize};

use super::EPS_POINT;

/// A point in the plan plane, meters. Serializes as a `[x, y]` pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl From<[f64; 2]> for Point2 {
    fn from(v: [f64; 2]) -> Self {
        Point2::new(v[0], v[1])
    }
}

impl From<Point2> for [f64; 2] {
    fn from(p: Point2) -> Self {
        [p.x, p.y]
    }
}

/// A displacement between points.
pub type Vec2 = Point2;

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn add(self, other: Point2) -> Point2 {
        Point2::new(self.x + other.x, self.y + other.y)
    }

    pub fn sub(self, other: Point2) -> Point2 {
        Point2::new(self.x - other.x, self.y - other.y)
    }

    pub fn scale(self, k: f64) -> Point2 {
        Point2::new(self.x * k, self.y * k)
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product; positive when `other` is
    /// counter-clockwise from `self`.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point2) -> f64 {
        self.sub(other).norm()
    }

    /// Left-hand perpendicular (rotate by +90 degrees).
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }

    pub fn coincident(self, other: Point2) -> bool {
        self.distance(other) < EPS_POINT
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Lexicographic order on (x, y); used for canonical ring rotation.
    pub fn lex_cmp(self, other: Point2) -> std::cmp::Ordering {
        self.x
            .total_cmp(&other.x)
            .then(self.y.total_cmp(&other.y))
    }
}

/// A straight wall or annotation segment. Serializes as an endpoint pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[Point2; 2]", into = "[Point2; 2]")]
pub struct Segment {
    pub a: Point2,
    pub b: Point2,
}

impl From<[Point2; 2]> for Segment {
    fn from(v: [Point2; 2]) -> Self {
        Segment::new(v[0], v[1])
    }
}

impl From<Segment> for [Point2; 2] {
    fn from(s: Segment) -> Self {
        [s.a, s.b]
    }
}

impl Segment {
    pub fn new(a: Point2, b: Point2) -> Self {
        Self { a, b }
    }

    pub fn length(&self) -> f64 {
        self.a.distance(self.b)
    }

    pub fn midpoint(&self) -> Point2 {
        self.a.add(self.b).scale(0.5)
    }

    pub fn direction(&self) -> Vec2 {
        let d = self.b.sub(self.a);
        let n = d.norm();
        if n < EPS_POINT {
            Point2::new(0.0, 0.0)
        } else {
            d.scale(1.0 / n)
        }
    }

    /// Direction angle in [0, pi); segments are undirected for this purpose.
    pub fn angle(&self) -> f64 {
        let d = self.b.sub(self.a);
        super::normalize_angle(d.y.atan2(d.x))
    }

    /// Distance from a point to this (closed) segment.
    pub fn distance_to_point(&self, p: Point2) -> f64 {
        let d = self.b.sub(self.a);
        let len2 = d.dot(d);
        if len2 < EPS_POINT * EPS_POINT {
            return self.a.distance(p);
        }
        let t = (p.sub(self.a).dot(d) / len2).clamp(0.0, 1.0);
        self.a.add(d.scale(t)).distance(p)
    }

    /// Minimum distance between two segments.
    pub fn distance_to_segment(&self, other: &Segment) -> f64 {
        if segments_properly_intersect(self.a, self.b, other.a, other.b) {
            return 0.0;
        }
        self.distance_to_point(other.a)
            .min(self.distance_to_point(other.b))
            .min(other.distance_to_point(self.a))
            .min(other.distance_to_point(self.b))
    }

    /// Overlap of this segment with another collinear segment, if both lie on
    /// the same line (within `EPS_POINT`) and the shared interval is longer
    /// than `EPS_POINT`.
    pub fn collinear_overlap(&self, other: &Segment) -> Option<Segment> {
        let dir = self.direction();
        if dir.norm() < 0.5 {
            return None;
        }
        // both endpoints of `other` must sit on our supporting line
        let off = |p: Point2| p.sub(self.a).cross(dir).abs();
        if off(other.a) > EPS_POINT || off(other.b) > EPS_POINT {
            return None;
        }
        let t = |p: Point2| p.sub(self.a).dot(dir);
        let (s0, s1) = (0.0f64, t(self.b));
        let (mut o0, mut o1) = (t(other.a), t(other.b));
        if o0 > o1 {
            std::mem::swap(&mut o0, &mut o1);
        }
        let lo = s0.min(s1).max(o0);
        let hi = s0.max(s1).min(o1);
        if hi - lo > EPS_POINT {
            Some(Segment::new(
                self.a.add(dir.scale(lo)),
                self.a.add(dir.scale(hi)),
            ))
        } else {
            None
        }
    }
}

/// True when the open interiors of segments (a,b) and (c,d) cross.
pub(crate) fn segments_properly_intersect(a: Point2, b: Point2, c: Point2, d: Point2) -> bool {
    let d1 = d.sub(c).cross(a.sub(c));
    let d2 = d.sub(c).cross(b.sub(c));
    let d3 = b.sub(a).cross(c.sub(a));
    let d4 = b.sub(a).cross(d.sub(a));
    ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
}
