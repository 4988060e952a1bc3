//! Recursive placement of furniture blocks along room boundaries.
//!
//! Door clearance zones are subtracted from the room to form the placement
//! polygon; blocks are then tried flush against its edges in order, anchors
//! stepping along each edge. A successful block subtracts its circulation
//! zone from the placement polygon before the next block starts, so later
//! blocks walk the shrunken interior boundary. A block with no valid anchor
//! anywhere makes the room infeasible; placed blocks are never revisited.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::config::Thresholds;
use crate::error::Result;
use crate::floorplan::{Door, FloorPlan, Room, RoomId, RoomProgram};
use crate::furnishing::catalog::{Clearance, FurnitureBlock, FurnitureCatalog};
use crate::geometry::{
    segments_properly_intersect, subtract_keep_exterior, Point2, Polygon, EPS_POINT,
};

/// Overlaps shallower than this are contact, not conflict.
const CONTACT_EPS: f64 = 1e-6;

/// A placed block: local +x runs along the wall, +y into the room, and the
/// origin is the footprint's back-left corner (on the wall).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Placement {
    pub block: String,
    pub footprint: [f64; 2],
    pub clearance: Clearance,
    pub origin: Point2,
    pub rotation: f64,
}

impl Placement {
    fn new(block: &FurnitureBlock, origin: Point2, rotation: f64) -> Self {
        Self {
            block: block.name.clone(),
            footprint: block.footprint,
            clearance: block.clearance,
            origin,
            rotation,
        }
    }

    pub fn footprint_area(&self) -> f64 {
        self.footprint[0] * self.footprint[1]
    }

    fn axes(&self) -> (Point2, Point2) {
        let d = Point2::new(self.rotation.cos(), self.rotation.sin());
        (d, d.perp())
    }

    fn local_rect(&self, x0: f64, x1: f64, y0: f64, y1: f64) -> [Point2; 4] {
        let (d, n) = self.axes();
        let at = |x: f64, y: f64| self.origin.add(d.scale(x)).add(n.scale(y));
        [at(x0, y0), at(x1, y0), at(x1, y1), at(x0, y1)]
    }

    /// The blocked zone.
    pub fn footprint_corners(&self) -> [Point2; 4] {
        self.local_rect(0.0, self.footprint[0], 0.0, self.footprint[1])
    }

    /// Footprint extended by the clearance; may overlap other circulation.
    pub fn circulation_corners(&self) -> [Point2; 4] {
        let c = self.clearance;
        self.local_rect(
            -c.left,
            self.footprint[0] + c.right,
            -c.back,
            self.footprint[1] + c.front,
        )
    }
}

pub enum FurnishOutcome {
    Placed(Vec<Placement>),
    Infeasible { block: String },
}

/// Test-fit the required blocks into one room.
pub fn furnish_room(
    room: &Room,
    doors: &[&Door],
    blocks: &[FurnitureBlock],
    grid: f64,
) -> FurnishOutcome {
    let door_zones: Vec<[Point2; 4]> = doors
        .iter()
        .filter_map(|d| door_zone(d, &room.polygon))
        .collect();

    let mut working = vec![room.polygon.clone()];
    for z in &door_zones {
        if let Ok(zone) = Polygon::new(z.to_vec()) {
            working = subtract_keep_exterior(&working, &zone);
        }
    }

    let mut placed: Vec<Placement> = Vec::new();
    'blocks: for block in blocks {
        for edge in walk_edges(&working, &room.polygon) {
            let len = edge.length();
            if len + EPS_POINT < block.width() {
                continue;
            }
            let dir = edge.direction();
            let rotation = dir.y.atan2(dir.x);
            for t in anchor_steps(len - block.width(), grid) {
                let origin = edge.a.add(dir.scale(t));
                let cand = Placement::new(block, origin, rotation);
                if placement_valid(&cand, &room.polygon, &door_zones, &placed) {
                    if let Ok(circ) = Polygon::new(cand.circulation_corners().to_vec()) {
                        working = subtract_keep_exterior(&working, &circ);
                    }
                    placed.push(cand);
                    continue 'blocks;
                }
            }
        }
        return FurnishOutcome::Infeasible {
            block: block.name.clone(),
        };
    }
    FurnishOutcome::Placed(placed)
}

/// Edges of the placement polygon in walk order: stretches on the original
/// room walls first (furniture backs onto walls when it can), then the
/// interior edges left by earlier subtractions.
fn walk_edges(working: &[Polygon], room: &Polygon) -> Vec<crate::geometry::Segment> {
    let mut walls = Vec::new();
    let mut interior = Vec::new();
    for piece in working {
        for edge in piece.edges() {
            let on_wall = room.edges().any(|re| {
                re.distance_to_point(edge.a) <= 2.0 * EPS_POINT
                    && re.distance_to_point(edge.b) <= 2.0 * EPS_POINT
            });
            if on_wall {
                walls.push(edge);
            } else {
                interior.push(edge);
            }
        }
    }
    walls.extend(interior);
    walls
}

fn anchor_steps(max_t: f64, grid: f64) -> Vec<f64> {
    let mut out = Vec::new();
    let mut t = 0.0;
    while t <= max_t + EPS_POINT {
        out.push(t.min(max_t));
        t += grid;
    }
    if out.last().map(|&l| max_t - l > EPS_POINT).unwrap_or(false) {
        out.push(max_t);
    }
    out
}

/// The blocked zone must sit inside the room and clear of door zones, other
/// blocked zones, and other circulation zones. Circulation-on-circulation
/// contact remains legal, so only the candidate footprint is tested here.
pub fn placement_valid(
    cand: &Placement,
    room: &Polygon,
    door_zones: &[[Point2; 4]],
    placed: &[Placement],
) -> bool {
    let fp = cand.footprint_corners();
    if !rect_within_polygon(&fp, room) {
        return false;
    }
    for z in door_zones {
        if quads_overlap(&fp, z) {
            return false;
        }
    }
    for other in placed {
        if quads_overlap(&fp, &other.footprint_corners())
            || quads_overlap(&fp, &other.circulation_corners())
        {
            return false;
        }
        // the existing blocked zones also must not fall inside the
        // candidate's circulation zone
        if quads_overlap(&cand.circulation_corners(), &other.footprint_corners()) {
            return false;
        }
    }
    true
}

/// Clearance square on the room side of a door, side length = door width.
fn door_zone(door: &Door, room: &Polygon) -> Option<[Point2; 4]> {
    let w = door.width;
    let mid = door.segment.midpoint();
    let dir = door.segment.direction();
    if dir.norm() < 0.5 {
        return None;
    }
    let n = dir.perp();
    let probe = mid.add(n.scale(0.05 * w));
    let inward = if room.contains_point_strict(probe) {
        n
    } else {
        n.scale(-1.0)
    };
    let a = mid.sub(dir.scale(w / 2.0));
    let b = mid.add(dir.scale(w / 2.0));
    Some([a, b, b.add(inward.scale(w)), a.add(inward.scale(w))])
}

/// Separating-axis test for two convex quads; contact within `CONTACT_EPS`
/// does not count as overlap.
fn quads_overlap(a: &[Point2; 4], b: &[Point2; 4]) -> bool {
    for quad in [a, b] {
        for i in 0..4 {
            let edge = quad[(i + 1) % 4].sub(quad[i]);
            let len = edge.norm();
            if len < EPS_POINT {
                continue;
            }
            let axis = edge.perp().scale(1.0 / len);
            let (a0, a1) = project(a, axis);
            let (b0, b1) = project(b, axis);
            if a1.min(b1) - a0.max(b0) <= CONTACT_EPS {
                return false;
            }
        }
    }
    true
}

fn project(quad: &[Point2; 4], axis: Point2) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for p in quad {
        let s = p.dot(axis);
        lo = lo.min(s);
        hi = hi.max(s);
    }
    (lo, hi)
}

/// Convex quad inside a simple polygon, boundary contact allowed. Flush
/// placement makes hairline overhangs routine, so crossing tests run on the
/// quad shrunk inward by the point tolerance.
fn rect_within_polygon(quad: &[Point2; 4], poly: &Polygon) -> bool {
    for c in quad {
        if !poly.contains_point(*c, EPS_POINT) {
            return false;
        }
    }
    // a polygon vertex strictly inside the quad means a notch pokes in
    let (d, _) = axes_of(quad);
    let n = d.perp();
    let x0 = quad[0].dot(d);
    let x1 = quad[1].dot(d);
    let y0 = quad[0].dot(n);
    let y1 = quad[3].dot(n);
    let (x0, x1) = (x0.min(x1), x0.max(x1));
    let (y0, y1) = (y0.min(y1), y0.max(y1));
    for v in poly.vertices() {
        let x = v.dot(d);
        let y = v.dot(n);
        if x > x0 + EPS_POINT && x < x1 - EPS_POINT && y > y0 + EPS_POINT && y < y1 - EPS_POINT {
            return false;
        }
    }
    // and no polygon edge may slice through the (shrunken) quad
    let shrunk = shrink_quad(quad, EPS_POINT);
    for pe in poly.edges() {
        for i in 0..4 {
            if segments_properly_intersect(shrunk[i], shrunk[(i + 1) % 4], pe.a, pe.b) {
                return false;
            }
        }
    }
    true
}

/// Move every corner of a convex quad inward by `by` along both local axes.
fn shrink_quad(quad: &[Point2; 4], by: f64) -> [Point2; 4] {
    let cx = quad.iter().map(|p| p.x).sum::<f64>() / 4.0;
    let cy = quad.iter().map(|p| p.y).sum::<f64>() / 4.0;
    let center = Point2::new(cx, cy);
    let mut out = *quad;
    for p in &mut out {
        let to_center = center.sub(*p);
        let len = to_center.norm();
        if len > by {
            *p = p.add(to_center.scale(by / len));
        }
    }
    out
}

fn axes_of(quad: &[Point2; 4]) -> (Point2, Point2) {
    let e = quad[1].sub(quad[0]);
    let len = e.norm();
    let d = if len < EPS_POINT {
        Point2::new(1.0, 0.0)
    } else {
        e.scale(1.0 / len)
    };
    (d, d.perp())
}

/// Whole-plan furnishing summary. `f_tot` is clamped at the occupancy's
/// minimum furniture area; `feasible` records whether every required block
/// was actually placed and the raw total reached the minimum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FurnishResult {
    pub placements: BTreeMap<RoomId, Vec<Placement>>,
    pub f_tot: f64,
    pub placed_area: f64,
    pub extra_area: f64,
    pub feasible: bool,
    pub failures: Vec<String>,
}

/// Furnish every required room of the plan's occupancy class. Extra rooms
/// count toward the furniture total as-is; foyers do not.
pub fn furnish_plan(
    plan: &FloorPlan,
    catalog: &FurnitureCatalog,
    t: &Thresholds,
) -> Result<FurnishResult> {
    let spec = catalog.occupancy(plan.occupancy())?;

    let mut by_program: BTreeMap<RoomProgram, Vec<&Room>> = BTreeMap::new();
    for room in &plan.rooms {
        by_program.entry(room.program).or_default().push(room);
    }
    for rooms in by_program.values_mut() {
        rooms.sort_by(|a, b| {
            b.polygon
                .area()
                .total_cmp(&a.polygon.area())
                .then(a.id.cmp(&b.id))
        });
    }

    let mut placements = BTreeMap::new();
    let mut failures = Vec::new();
    let mut placed_area = 0.0;
    for req in &spec.rooms {
        let room = by_program
            .get(&req.program)
            .and_then(|rooms| rooms.get(req.rank))
            .copied();
        let Some(room) = room else {
            failures.push(format!("missing {} room (rank {})", req.program, req.rank));
            continue;
        };
        let blocks: Vec<FurnitureBlock> = req
            .blocks
            .iter()
            .map(|name| catalog.blocks[name].clone())
            .collect();
        let doors = plan.doors_of(&room.id);
        match furnish_room(room, &doors, &blocks, t.furnish_grid) {
            FurnishOutcome::Placed(p) => {
                placed_area += p.iter().map(|pl| pl.footprint_area()).sum::<f64>();
                placements.insert(room.id.clone(), p);
            }
            FurnishOutcome::Infeasible { block } => {
                failures.push(format!("{}: no space for {block}", room.id));
            }
        }
    }

    let extra_area: f64 = plan
        .rooms
        .iter()
        .filter(|r| r.program == RoomProgram::Extra)
        .map(|r| r.polygon.area())
        .sum();
    let raw = placed_area + extra_area;
    let min = spec.min_furniture_area;
    let feasible = failures.is_empty() && raw >= min - 1e-9;
    Ok(FurnishResult {
        placements,
        f_tot: raw.max(min),
        placed_area,
        extra_area,
        feasible,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn block(name: &str, w: f64, d: f64, front: f64) -> FurnitureBlock {
        FurnitureBlock {
            name: name.into(),
            program: RoomProgram::Bedroom,
            footprint: [w, d],
            clearance: Clearance {
                front,
                ..Clearance::default()
            },
        }
    }

    fn room(w: f64, d: f64) -> Room {
        Room::new(
            RoomId::new("r"),
            RoomProgram::Bedroom,
            Polygon::rectangle(0.0, 0.0, w, d).unwrap(),
        )
    }

    #[test]
    fn bed_and_drawer_fit_a_bedroom() {
        // 4 x 3 room, bed 1.6x2.0 with 0.6 m circulation on one long side,
        // drawer 1.0x0.6 with 0.6 m in front
        let bed = FurnitureBlock {
            name: "bed".into(),
            program: RoomProgram::Bedroom,
            footprint: [1.6, 2.0],
            clearance: Clearance {
                right: 0.6,
                ..Clearance::default()
            },
        };
        let drawer = block("drawer", 1.0, 0.6, 0.6);
        match furnish_room(&room(4.0, 3.0), &[], &[bed, drawer], 0.1) {
            FurnishOutcome::Placed(p) => assert_eq!(p.len(), 2),
            FurnishOutcome::Infeasible { block } => panic!("no space for {block}"),
        }
    }

    #[test]
    fn oversized_block_is_infeasible() {
        let bed = block("bed", 1.6, 2.0, 0.0);
        match furnish_room(&room(1.0, 1.0), &[], &[bed], 0.1) {
            FurnishOutcome::Placed(_) => panic!("cannot fit a 1.6x2 bed in 1x1"),
            FurnishOutcome::Infeasible { block } => assert_eq!(block, "bed"),
        }
    }

    #[test]
    fn empty_requirement_is_trivially_placed() {
        match furnish_room(&room(3.0, 3.0), &[], &[], 0.1) {
            FurnishOutcome::Placed(p) => assert!(p.is_empty()),
            FurnishOutcome::Infeasible { .. } => panic!("vacuous placement must succeed"),
        }
    }

    #[test]
    fn blocked_zones_never_overlap() {
        let blocks = vec![
            block("a", 2.0, 1.0, 0.4),
            block("b", 2.0, 1.0, 0.4),
            block("c", 2.0, 1.0, 0.4),
        ];
        let r = room(4.2, 3.4);
        match furnish_room(&r, &[], &blocks, 0.1) {
            FurnishOutcome::Placed(p) => {
                for i in 0..p.len() {
                    for j in (i + 1)..p.len() {
                        assert!(!quads_overlap(
                            &p[i].footprint_corners(),
                            &p[j].footprint_corners()
                        ));
                        assert!(!quads_overlap(
                            &p[i].footprint_corners(),
                            &p[j].circulation_corners()
                        ));
                    }
                    assert!(rect_within_polygon(&p[i].footprint_corners(), &r.polygon));
                }
            }
            FurnishOutcome::Infeasible { block } => panic!("no space for {block}"),
        }
    }

    #[test]
    fn door_zone_blocks_placement() {
        // a door dead center of the south wall carries a 0.9x0.9 clearance
        // square; whatever spot the walk finds must stay clear of it
        let r = room(2.0, 3.0);
        let door = Door::between(
            RoomId::new("r"),
            RoomId::new("other"),
            crate::geometry::Segment::new(Point2::new(0.55, 0.0), Point2::new(1.45, 0.0)),
            0.9,
        );
        let zone = [
            Point2::new(0.55, 0.0),
            Point2::new(1.45, 0.0),
            Point2::new(1.45, 0.9),
            Point2::new(0.55, 0.9),
        ];
        let b = block("chest", 2.0, 0.5, 0.0);
        match furnish_room(&r, &[&door], &[b], 0.1) {
            FurnishOutcome::Placed(p) => {
                assert!(!quads_overlap(&p[0].footprint_corners(), &zone));
            }
            FurnishOutcome::Infeasible { block } => panic!("no space for {block}"),
        }
        // and a block that cannot clear the zone anywhere is infeasible
        let wide = block("bench", 2.0, 2.5, 0.0);
        match furnish_room(&r, &[&door], &[wide], 0.1) {
            FurnishOutcome::Placed(p) => panic!("unexpected placement {p:?}"),
            FurnishOutcome::Infeasible { block } => assert_eq!(block, "bench"),
        }
    }
}
