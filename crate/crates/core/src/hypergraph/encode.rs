//! Inverse subdivision: recover a cut tree from a finished plan.
//!
//! At every level the search enumerates "free cuts" — full straight chords of
//! the current region that lie entirely on existing room walls and split the
//! region's rooms into two nonempty groups without slicing any room. Ties go
//! to the most area-balanced cut, then the smallest angle, then the smallest
//! offset, which makes the encoding deterministic. A region with no free cut
//! is not BSP-representable (the pinwheel case).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::floorplan::{facade_frontage, FloorPlan, Room};
use crate::geometry::{
    normalize_angle, split_by_line, CutLine, Polygon, EPS_POINT,
};

use super::{circulation_frame, Hypergraph, NodeKind, SourceRef, SubdivNode};

/// Minimum contiguous façade overlap for a room to count as a façade room.
pub const FACADE_MIN_FRONTAGE: f64 = 0.9;

pub fn encode_plan(plan: &FloorPlan, plan_id: &str) -> Result<Hypergraph> {
    let frame = circulation_frame(&plan.boundary, &plan.circulation_edges)?;
    let rooms: Vec<&Room> = plan.rooms.iter().collect();
    let mut next_id = 0usize;
    let root = subdivide(&plan.boundary, &rooms, frame, 1.0, 0, &mut next_id)?;

    let facade_rooms: BTreeSet<_> = plan
        .rooms
        .iter()
        .filter(|r| facade_frontage(&r.polygon, &plan.facade_edges) >= FACADE_MIN_FRONTAGE)
        .map(|r| r.id.clone())
        .collect();
    let entrance_room = plan
        .entrance_room()
        .cloned()
        .ok_or(Error::EntranceCount(0))?;

    let hg = Hypergraph {
        root,
        access_edges: plan.access_edges(),
        entrance_room,
        facade_rooms,
        frame_angle: frame,
        source: SourceRef {
            plan_id: plan_id.to_string(),
            mirrored: false,
            facade_ratio: crate::floorplan::facade_ratio(plan),
        },
    };
    hg.validate()?;
    Ok(hg)
}

fn subdivide(
    region: &Polygon,
    rooms: &[&Room],
    frame: f64,
    ratio_of_parent: f64,
    depth: usize,
    next_id: &mut usize,
) -> Result<SubdivNode> {
    let id = format!("n{}", *next_id);
    *next_id += 1;

    if rooms.len() == 1 {
        return Ok(SubdivNode {
            id,
            area_abs: region.area(),
            area_ratio: ratio_of_parent,
            kind: NodeKind::Leaf {
                program: rooms[0].program,
                room_id: rooms[0].id.clone(),
            },
        });
    }

    let best = best_free_cut(region, rooms).ok_or(Error::NotBspRepresentable {
        depth,
        rooms: rooms.len(),
    })?;
    let FreeCut {
        cut,
        lower,
        upper,
        lower_rooms,
        upper_rooms,
        ..
    } = best;

    let area = region.area();
    let first_ratio = lower.area() / area;
    let angle_rel = normalize_angle(cut.angle - frame);
    let first = subdivide(&lower, &lower_rooms, frame, first_ratio, depth + 1, next_id)?;
    let second = subdivide(
        &upper,
        &upper_rooms,
        frame,
        1.0 - first_ratio,
        depth + 1,
        next_id,
    )?;

    Ok(SubdivNode {
        id,
        area_abs: area,
        area_ratio: ratio_of_parent,
        kind: NodeKind::Internal {
            angle: angle_rel,
            first: Box::new(first),
            second: Box::new(second),
        },
    })
}

struct FreeCut<'a> {
    cut: CutLine,
    lower: Polygon,
    upper: Polygon,
    lower_rooms: Vec<&'a Room>,
    upper_rooms: Vec<&'a Room>,
    balance: f64,
}

fn best_free_cut<'a>(region: &Polygon, rooms: &[&'a Room]) -> Option<FreeCut<'a>> {
    let mut best: Option<FreeCut<'a>> = None;
    for cut in candidate_lines(rooms) {
        let Some((lower_rooms, upper_rooms)) = partition_rooms(rooms, &cut) else {
            continue;
        };
        let Ok((lower, upper)) = split_by_line(region, &cut) else {
            continue;
        };
        // the chord must run on walls: each side's area matches its rooms
        let lower_sum: f64 = lower_rooms.iter().map(|r| r.polygon.area()).sum();
        if (lower.area() - lower_sum).abs() > 1e-6 * region.area() {
            continue;
        }
        let balance = (lower.area() - upper.area()).abs();
        let candidate = FreeCut {
            cut,
            lower,
            upper,
            lower_rooms,
            upper_rooms,
            balance,
        };
        let better = match &best {
            None => true,
            Some(b) => {
                (candidate.balance, candidate.cut.angle, candidate.cut.offset)
                    < (b.balance, b.cut.angle, b.cut.offset)
            }
        };
        if better {
            best = Some(candidate);
        }
    }
    best
}

/// Candidate cut lines: supporting lines of room wall segments, deduplicated.
fn candidate_lines(rooms: &[&Room]) -> Vec<CutLine> {
    let mut lines: Vec<CutLine> = Vec::new();
    for room in rooms {
        for edge in room.polygon.edges() {
            let angle = edge.angle();
            let normal = CutLine::new(angle, 0.0).normal();
            let offset = edge.a.dot(normal);
            let dup = lines.iter().any(|l| {
                (l.angle - angle).abs() < 1e-9 && (l.offset - offset).abs() < EPS_POINT
            });
            if !dup {
                lines.push(CutLine::new(angle, offset));
            }
        }
    }
    lines.sort_by(|a, b| a.angle.total_cmp(&b.angle).then(a.offset.total_cmp(&b.offset)));
    lines
}

/// Assign every room to one closed side of the cut; `None` when a room
/// straddles the line or one side ends up empty.
fn partition_rooms<'a>(rooms: &[&'a Room], cut: &CutLine) -> Option<(Vec<&'a Room>, Vec<&'a Room>)> {
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for room in rooms {
        let mut min_s = f64::INFINITY;
        let mut max_s = f64::NEG_INFINITY;
        for v in room.polygon.vertices() {
            let s = cut.signed_distance(*v);
            min_s = min_s.min(s);
            max_s = max_s.max(s);
        }
        if max_s <= EPS_POINT {
            lower.push(*room);
        } else if min_s >= -EPS_POINT {
            upper.push(*room);
        } else {
            return None; // the cut slices through this room
        }
    }
    if lower.is_empty() || upper.is_empty() {
        None
    } else {
        Some((lower, upper))
    }
}
