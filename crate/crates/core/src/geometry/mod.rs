//! 2D polygon arithmetic at building scale.
//!
//! Double precision with snapping tolerances: points closer than
//! [`EPS_POINT`] are coincident, rings with area below [`EPS_AREA`] are
//! degenerate. All polygons are normalized on construction (counter-clockwise,
//! lexicographically smallest vertex first) so equal regions compare equal.

mod point;
mod polygon;
mod split;
mod clip;

pub use clip::{inward_offset, subtract};
pub(crate) use clip::{intersection_area as intersection_area_of, subtract_keep_exterior};
pub(crate) use point::segments_properly_intersect;
pub use point::{Point2, Segment, Vec2};
pub use polygon::Polygon;
pub use split::{halfplane_area, split_at_ratio, split_by_line, CutLine};

/// Coincidence tolerance for points, meters.
pub const EPS_POINT: f64 = 1e-6;
/// Degeneracy threshold for ring areas, square meters.
pub const EPS_AREA: f64 = 1e-9;
/// Relative tolerance on the achieved area fraction of a ratio split.
pub const REL_AREA_TOL: f64 = 1e-6;

/// Normalize an angle to [0, pi). Lines are undirected, so angles are taken
/// modulo a half turn.
pub fn normalize_angle(angle: f64) -> f64 {
    let pi = std::f64::consts::PI;
    let mut a = angle % pi;
    if a < 0.0 {
        a += pi;
    }
    // a == pi can survive the remainder when angle is a tiny negative number
    if a >= pi {
        a -= pi;
    }
    if a.abs() < 1e-12 || (pi - a).abs() < 1e-12 {
        0.0
    } else {
        a
    }
}

/// Mirror an angle across the vertical axis: `a -> (pi - a) mod pi`.
pub fn mirror_angle(angle: f64) -> f64 {
    normalize_angle(std::f64::consts::PI - angle)
}
