use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Segment, EPS_POINT};

use super::plan::{BoundarySpec, FloorPlan, PlanSkeleton};
use super::program::RoomId;
use super::walls::{boundary_overlaps, shared_wall_segments};
use super::DOOR_WIDTH_MIN;

/// What a door connects: two rooms, or a room and the building circulation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DoorLink {
    /// Unordered room pair, stored sorted.
    Rooms(RoomId, RoomId),
    Entrance(RoomId),
}

impl DoorLink {
    pub fn rooms(a: RoomId, b: RoomId) -> Self {
        if a <= b {
            DoorLink::Rooms(a, b)
        } else {
            DoorLink::Rooms(b, a)
        }
    }
}

impl std::fmt::Display for DoorLink {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DoorLink::Rooms(a, b) => write!(f, "{a}-{b}"),
            DoorLink::Entrance(r) => write!(f, "{r}-ENTRANCE"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Door {
    pub link: DoorLink,
    pub segment: Segment,
    pub width: f64,
}

impl Door {
    pub fn between(a: RoomId, b: RoomId, segment: Segment, width: f64) -> Self {
        Self {
            link: DoorLink::rooms(a, b),
            segment,
            width,
        }
    }

    pub fn entrance(room: RoomId, segment: Segment, width: f64) -> Self {
        Self {
            link: DoorLink::Entrance(room),
            segment,
            width,
        }
    }
}

/// Place one door per access edge, centered on the longest shared wall
/// stretch, plus the entrance door on the circulation frontage. Fails with
/// [`Error::NoSharedWall`] when an access edge has no wall of at least door
/// width — the generated layout is then unrealizable.
pub fn realize_doors(skeleton: &PlanSkeleton, spec: &BoundarySpec) -> Result<FloorPlan> {
    let mut doors = Vec::new();
    for (a, b) in &skeleton.access_edges {
        let (ra, rb) = match (find(skeleton, a), find(skeleton, b)) {
            (Some(ra), Some(rb)) => (ra, rb),
            _ => return Err(Error::DanglingDoor(format!("{a}-{b}"))),
        };
        let walls = shared_wall_segments(&ra, &rb);
        let segment = centered_door(&walls)
            .ok_or_else(|| Error::NoSharedWall(format!("{a}-{b}")))?;
        doors.push(Door::between(a.clone(), b.clone(), segment, DOOR_WIDTH_MIN));
    }
    let entrance_poly = find(skeleton, &skeleton.entrance_room)
        .ok_or_else(|| Error::DanglingDoor(skeleton.entrance_room.to_string()))?;
    let frontage = boundary_overlaps(&entrance_poly, &spec.circulation_edges);
    let segment =
        centered_door(&frontage).ok_or_else(|| Error::NoSharedWall("ENTRANCE".into()))?;
    doors.push(Door::entrance(
        skeleton.entrance_room.clone(),
        segment,
        DOOR_WIDTH_MIN,
    ));

    FloorPlan::new(
        skeleton.boundary.clone(),
        skeleton.rooms.clone(),
        spec.facade_edges.clone(),
        spec.circulation_edges.clone(),
        doors,
    )
}

fn find(skeleton: &PlanSkeleton, id: &RoomId) -> Option<crate::geometry::Polygon> {
    skeleton
        .rooms
        .iter()
        .find(|r| &r.id == id)
        .map(|r| r.polygon.clone())
}

/// Door segment of standard width centered on the longest candidate wall.
fn centered_door(walls: &[Segment]) -> Option<Segment> {
    let longest = walls
        .iter()
        .max_by(|a, b| a.length().total_cmp(&b.length()))?;
    if longest.length() < DOOR_WIDTH_MIN - EPS_POINT {
        return None;
    }
    let mid = longest.midpoint();
    let dir = longest.direction();
    Some(Segment::new(
        mid.sub(dir.scale(DOOR_WIDTH_MIN / 2.0)),
        mid.add(dir.scale(DOOR_WIDTH_MIN / 2.0)),
    ))
}
