//! Spatial validity heuristics: perimeter-difference scoring against the
//! source plan, failure-case detectors, and the fit-pipeline filters.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::config::Thresholds;
use crate::error::{Error, Result};
use crate::floorplan::{facade_frontage, BoundarySpec, FloorPlan, RoomId, RoomProgram};
use crate::geometry::{inward_offset, Polygon};
use crate::hypergraph::Hypergraph;

/// Reasons a geometrically valid plan is spatially infeasible.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ValidityFlag {
    /// A habitable room has no contiguous façade frontage of usable width.
    FacadeBlocked(RoomId),
    /// A habitable room is too narrow or too elongated to furnish.
    BadRoomGeometry(RoomId),
    /// A foyer that cannot be walked: its clear core vanishes under erosion
    /// or fails to reach one of its doors.
    PassageTooThin(RoomId),
    /// Door realization failed for an access edge.
    AccessUnrealizable,
}

impl std::fmt::Display for ValidityFlag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ValidityFlag::FacadeBlocked(r) => write!(f, "facade_blocked({r})"),
            ValidityFlag::BadRoomGeometry(r) => write!(f, "bad_room_geometry({r})"),
            ValidityFlag::PassageTooThin(r) => write!(f, "passage_too_thin({r})"),
            ValidityFlag::AccessUnrealizable => write!(f, "access_unrealizable"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidityReport {
    /// Per-room perimeter-difference scores, keyed by room id.
    pub per_room: BTreeMap<RoomId, f64>,
    /// Mean of the per-room scores.
    pub delta_r: f64,
    pub flags: BTreeSet<ValidityFlag>,
    pub passed: bool,
}

impl ValidityReport {
    pub fn new(
        per_room: BTreeMap<RoomId, f64>,
        flags: BTreeSet<ValidityFlag>,
        delta_max: f64,
    ) -> Self {
        let delta_r = if per_room.is_empty() {
            0.0
        } else {
            per_room.values().sum::<f64>() / per_room.len() as f64
        };
        let passed = flags.is_empty() && delta_r <= delta_max;
        Self {
            per_room,
            delta_r,
            flags,
            passed,
        }
    }

    /// A report for a plan whose doors could not be realized.
    pub fn unrealizable() -> Self {
        Self {
            per_room: BTreeMap::new(),
            delta_r: f64::INFINITY,
            flags: BTreeSet::from([ValidityFlag::AccessUnrealizable]),
            passed: false,
        }
    }
}

/// Perimeter difference score between two polygons:
/// `|1 - (L_SA * L_B) / (L_A * L_SB)|`, where `L_S` is the perimeter of the
/// square with the same area. Zero iff both shapes deviate from squareness by
/// the same factor; not symmetric in its arguments.
pub fn perimeter_diff(a: &Polygon, b: &Polygon) -> f64 {
    let l_a = a.perimeter();
    let l_b = b.perimeter();
    let l_sa = 4.0 * a.area().sqrt();
    let l_sb = 4.0 * b.area().sqrt();
    (1.0 - (l_sa * l_b) / (l_a * l_sb)).abs()
}

/// Mean per-room perimeter difference between a generated plan and its
/// source, rooms matched by id. The generated plan is polygon `B` per room.
pub fn plan_perimeter_diff(generated: &FloorPlan, source: &FloorPlan) -> Result<f64> {
    Ok(per_room_perimeter_diff(generated, source)?
        .values()
        .sum::<f64>()
        / source.rooms.len() as f64)
}

/// Per-room scores behind [`plan_perimeter_diff`], for reporting.
pub fn per_room_perimeter_diff(
    generated: &FloorPlan,
    source: &FloorPlan,
) -> Result<BTreeMap<RoomId, f64>> {
    let gen_ids = generated.room_ids();
    let src_ids = source.room_ids();
    if gen_ids != src_ids {
        let missing: Vec<String> = src_ids
            .symmetric_difference(&gen_ids)
            .map(|r| r.to_string())
            .collect();
        return Err(Error::RoomSetMismatch(missing.join(", ")));
    }
    let mut out = BTreeMap::new();
    for src in &source.rooms {
        let gen = generated.room(&src.id).expect("id sets match");
        out.insert(src.id.clone(), perimeter_diff(&src.polygon, &gen.polygon));
    }
    Ok(out)
}

/// Run the failure-case detectors over a realized plan.
///
/// * `FacadeBlocked`: a living/bedroom/kitchen without one contiguous façade
///   stretch of at least `facade_min_frontage`.
/// * `BadRoomGeometry`: a habitable room narrower than `habitable_min_width`
///   or more elongated than `habitable_max_aspect`.
/// * `PassageTooThin`: a foyer whose erosion by `passage_radius` is empty or
///   stays further than `passage_radius` from one of the foyer's doors.
pub fn check_plan(plan: &FloorPlan, t: &Thresholds) -> BTreeSet<ValidityFlag> {
    let mut flags = BTreeSet::new();
    for room in &plan.rooms {
        if room.program.is_habitable() {
            if facade_frontage(&room.polygon, &plan.facade_edges) < t.facade_min_frontage {
                flags.insert(ValidityFlag::FacadeBlocked(room.id.clone()));
            }
            if room.polygon.min_caliper_width() < t.habitable_min_width
                || room.polygon.bounding_aspect() > t.habitable_max_aspect
            {
                flags.insert(ValidityFlag::BadRoomGeometry(room.id.clone()));
            }
        }
        if room.program == RoomProgram::Foyer && !foyer_passable(plan, room, t) {
            flags.insert(ValidityFlag::PassageTooThin(room.id.clone()));
        }
    }
    flags
}

fn foyer_passable(plan: &FloorPlan, room: &crate::floorplan::Room, t: &Thresholds) -> bool {
    let core = match inward_offset(&room.polygon, t.passage_radius) {
        Ok(core) if !core.is_empty() => core,
        _ => return false,
    };
    // the clear core must come within the passage radius of every door
    // (tolerance absorbs the clipping kernel's grid snapping)
    for door in plan.doors_of(&room.id) {
        let reach = core.iter().any(|piece| {
            piece.edges().any(|e| {
                e.distance_to_segment(&door.segment)
                    <= t.passage_radius + crate::geometry::EPS_POINT
            })
        });
        if !reach {
            return false;
        }
    }
    true
}

/// The cheap pre-filters of the fit pipeline: source footprint within the
/// tolerance band of the target boundary area, and similar façade ratios.
pub fn fit_filter(hg: &Hypergraph, target: &BoundarySpec, t: &Thresholds) -> bool {
    let footprint = hg.source_area();
    if footprint <= 0.0 {
        return false;
    }
    let dev = (target.boundary.area() / footprint - 1.0).abs();
    if dev > t.footprint_tol {
        return false;
    }
    (target.facade_ratio() - hg.source.facade_ratio).abs() <= t.facade_ratio_tol
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perimeter_diff_identity_and_similarity() {
        let sq = Polygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap();
        assert_eq!(perimeter_diff(&sq, &sq), 0.0);
        let big = Polygon::rectangle(2.0, 2.0, 5.0, 5.0).unwrap();
        // similar shapes score zero regardless of scale
        assert!(perimeter_diff(&sq, &big).abs() < 1e-12);
    }

    #[test]
    fn perimeter_diff_square_vs_rectangle() {
        // L_A=4, L_SA=4, L_B=5, L_SB=4: |1 - 20/16| = 0.25
        let sq = Polygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap();
        let rect = Polygon::rectangle(0.0, 0.0, 2.0, 0.5).unwrap();
        assert!((perimeter_diff(&sq, &rect) - 0.25).abs() < 1e-12);
        // swapped arguments: |1 - (4*4)/(5*4)| = 0.2 — not symmetric
        assert!((perimeter_diff(&rect, &sq) - 0.2).abs() < 1e-12);
    }

    #[test]
    fn report_pass_condition() {
        let per_room = BTreeMap::from([
            (RoomId::new("a"), 0.2),
            (RoomId::new("b"), 0.0),
        ]);
        let r = ValidityReport::new(per_room, BTreeSet::new(), 0.1);
        assert!((r.delta_r - 0.1).abs() < 1e-12);
        assert!(r.passed, "delta_r exactly at the cull threshold passes");
        let r2 = ValidityReport::new(
            BTreeMap::from([(RoomId::new("a"), 0.21)]),
            BTreeSet::new(),
            0.1,
        );
        assert!(!r2.passed);
    }
}
