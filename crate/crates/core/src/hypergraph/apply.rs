//! Replay a subdivision tree into a boundary polygon.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::floorplan::{PlanSkeleton, Room};
use crate::geometry::{normalize_angle, split_at_ratio, Polygon};

use super::{Hypergraph, NodeKind, SubdivNode};

/// What a replay preserves from the source plan: the area ratios at every
/// cut, or the absolute room areas (slack going to the second child).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RetentionMode {
    RatioRetain,
    AreaRetain,
}

impl std::fmt::Display for RetentionMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RetentionMode::RatioRetain => f.write_str("ratio_retain"),
            RetentionMode::AreaRetain => f.write_str("area_retain"),
        }
    }
}

/// Subdivide `boundary` by the hypergraph's cut tree. Cut angles are stored
/// relative to the source circulation and re-anchored to
/// `target_frame_angle`; rooms inherit their source program and id, access
/// edges carry over verbatim.
pub fn apply(
    hg: &Hypergraph,
    boundary: &Polygon,
    mode: RetentionMode,
    target_frame_angle: f64,
) -> Result<PlanSkeleton> {
    hg.validate()?;
    if mode == RetentionMode::AreaRetain {
        let required = hg.source_area();
        let available = boundary.area();
        if available < required * (1.0 - 1e-9) {
            return Err(Error::InsufficientArea {
                required,
                available,
            });
        }
    }
    let mut rooms = Vec::with_capacity(hg.root.leaves().len());
    apply_node(&hg.root, boundary.clone(), mode, target_frame_angle, &mut rooms)?;
    rooms.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(PlanSkeleton {
        boundary: boundary.clone(),
        rooms,
        access_edges: hg.access_edges.clone(),
        entrance_room: hg.entrance_room.clone(),
    })
}

fn apply_node(
    node: &SubdivNode,
    region: Polygon,
    mode: RetentionMode,
    frame: f64,
    rooms: &mut Vec<Room>,
) -> Result<()> {
    match &node.kind {
        NodeKind::Leaf { program, room_id } => {
            rooms.push(Room::new(room_id.clone(), *program, region));
            Ok(())
        }
        NodeKind::Internal {
            angle,
            first,
            second,
        } => {
            let angle_abs = normalize_angle(angle + frame);
            let ratio = match mode {
                RetentionMode::RatioRetain => first.area_ratio,
                RetentionMode::AreaRetain => first.area_abs / region.area(),
            };
            let (lower, upper, _offset) =
                split_at_ratio(&region, angle_abs, ratio).map_err(|e| Error::ApplyFailed {
                    node: node.id.clone(),
                    source: Box::new(e),
                })?;
            apply_node(first, lower, mode, frame, rooms)?;
            apply_node(second, upper, mode, frame, rooms)
        }
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use crate::floorplan::{RoomId, RoomProgram};
    use crate::hypergraph::{mirror, SourceRef};

    use super::*;

    fn leaf(id: &str, area: f64, ratio: f64, program: RoomProgram, room: &str) -> SubdivNode {
        SubdivNode {
            id: id.into(),
            area_abs: area,
            area_ratio: ratio,
            kind: NodeKind::Leaf {
                program,
                room_id: RoomId::new(room),
            },
        }
    }

    fn two_leaf_graph(a1: f64, a2: f64, angle: f64) -> Hypergraph {
        let total = a1 + a2;
        let root = SubdivNode {
            id: "n0".into(),
            area_abs: total,
            area_ratio: 1.0,
            kind: NodeKind::Internal {
                angle,
                first: Box::new(leaf("n1", a1, a1 / total, RoomProgram::Bedroom, "bed")),
                second: Box::new(leaf("n2", a2, a2 / total, RoomProgram::Living, "liv")),
            },
        };
        Hypergraph {
            root,
            access_edges: BTreeSet::from([(RoomId::new("bed"), RoomId::new("liv"))]),
            entrance_room: RoomId::new("liv"),
            facade_rooms: BTreeSet::new(),
            frame_angle: 0.0,
            source: SourceRef {
                plan_id: "synthetic".into(),
                mirrored: false,
                facade_ratio: 0.5,
            },
        }
    }

    #[test]
    fn fifty_fifty_on_any_rectangle() {
        let hg = two_leaf_graph(10.0, 10.0, 0.0);
        let boundary = Polygon::rectangle(0.0, 0.0, 5.0, 8.0).unwrap();
        let sk = apply(&hg, &boundary, RetentionMode::RatioRetain, 0.0).unwrap();
        assert_eq!(sk.rooms.len(), 2);
        for r in &sk.rooms {
            assert!((r.polygon.area() - 20.0).abs() < 1e-6);
        }
    }

    #[test]
    fn area_retention_routes_slack_to_second_child() {
        // {12, 8} source areas applied to a 30 m2 boundary: 12 and 18
        let hg = two_leaf_graph(12.0, 8.0, 0.0);
        let boundary = Polygon::rectangle(0.0, 0.0, 5.0, 6.0).unwrap();
        let sk = apply(&hg, &boundary, RetentionMode::AreaRetain, 0.0).unwrap();
        let bed = sk.rooms.iter().find(|r| r.id == RoomId::new("bed")).unwrap();
        let liv = sk.rooms.iter().find(|r| r.id == RoomId::new("liv")).unwrap();
        assert!((bed.polygon.area() - 12.0).abs() < 1e-6);
        assert!((liv.polygon.area() - 18.0).abs() < 1e-6);
    }

    #[test]
    fn insufficient_area_is_rejected() {
        let hg = two_leaf_graph(12.0, 8.0, 0.0);
        let boundary = Polygon::rectangle(0.0, 0.0, 4.0, 4.0).unwrap();
        let err = apply(&hg, &boundary, RetentionMode::AreaRetain, 0.0).unwrap_err();
        assert!(matches!(err, Error::InsufficientArea { .. }));
    }

    #[test]
    fn mirrored_vertical_split_swaps_sides() {
        // vertical cut (pi/2): the lower side of the cut normal (-1, 0) is
        // the right half, so "bed" (the first child) lands right; after
        // mirroring it lands left.
        let hg = two_leaf_graph(10.0, 10.0, std::f64::consts::FRAC_PI_2);
        let boundary = Polygon::rectangle(0.0, 0.0, 4.0, 4.0).unwrap();
        let sk = apply(&hg, &boundary, RetentionMode::RatioRetain, 0.0).unwrap();
        let bed_x = sk.rooms.iter().find(|r| r.id == RoomId::new("bed")).unwrap()
            .polygon
            .centroid()
            .x;
        assert!(bed_x > 2.0, "first child on the right, got x={bed_x}");

        let sk_m = apply(&mirror(&hg), &boundary, RetentionMode::RatioRetain, 0.0).unwrap();
        let bed_x_m = sk_m.rooms.iter().find(|r| r.id == RoomId::new("bed")).unwrap()
            .polygon
            .centroid()
            .x;
        assert!(bed_x_m < 2.0, "mirrored first child on the left, got x={bed_x_m}");
    }

    #[test]
    fn mirror_is_involutive() {
        let hg = two_leaf_graph(12.0, 8.0, 1.1);
        let back = mirror(&mirror(&hg));
        assert_eq!(back, hg);
        assert!(!mirror(&hg).source.mirrored == hg.source.mirrored);
    }

    #[test]
    fn frame_rotation_reorients_cuts() {
        // a horizontal source cut applied with a quarter-turn frame becomes
        // vertical
        let hg = two_leaf_graph(10.0, 10.0, 0.0);
        let boundary = Polygon::rectangle(0.0, 0.0, 4.0, 4.0).unwrap();
        let sk = apply(
            &hg,
            &boundary,
            RetentionMode::RatioRetain,
            std::f64::consts::FRAC_PI_2,
        )
        .unwrap();
        let bed = sk.rooms.iter().find(|r| r.id == RoomId::new("bed")).unwrap();
        // halves split left/right instead of bottom/top
        let (lo, hi) = bed.polygon.bbox();
        assert!((hi.y - lo.y - 4.0).abs() < 1e-9, "full height strip");
        assert!((hi.x - lo.x - 2.0).abs() < 1e-6, "half width strip");
    }
}
