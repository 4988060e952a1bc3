use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{self, Polygon, Segment, EPS_POINT};

use super::doors::{Door, DoorLink};
use super::program::{RoomId, RoomProgram};
use super::walls::{boundary_overlaps, shared_wall_segments};
use super::DOOR_WIDTH_MIN;

/// Interior-overlap threshold between room pairs, square meters.
const OVERLAP_TOL: f64 = 1e-6;
/// Relative tolerance on the room-area sum against the boundary area.
const TILING_REL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Room {
    pub id: RoomId,
    pub program: RoomProgram,
    pub polygon: Polygon,
}

impl Room {
    pub fn new(id: RoomId, program: RoomProgram, polygon: Polygon) -> Self {
        Self {
            id,
            program,
            polygon,
        }
    }
}

/// A boundary polygon with its façade and circulation annotation; the input
/// side of the fit pipeline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundarySpec {
    pub boundary: Polygon,
    pub facade_edges: Vec<Segment>,
    pub circulation_edges: Vec<Segment>,
}

impl BoundarySpec {
    pub fn new(
        boundary: Polygon,
        mut facade_edges: Vec<Segment>,
        mut circulation_edges: Vec<Segment>,
    ) -> Result<Self> {
        validate_annotations(&boundary, &facade_edges, &circulation_edges)?;
        sort_segments(&mut facade_edges);
        sort_segments(&mut circulation_edges);
        Ok(Self {
            boundary,
            facade_edges,
            circulation_edges,
        })
    }

    pub fn facade_ratio(&self) -> f64 {
        let total: f64 = self.facade_edges.iter().map(|s| s.length()).sum();
        total / self.boundary.perimeter()
    }
}

/// An applied hypergraph before doors exist: room polygons with programs plus
/// the access structure carried over from the source.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanSkeleton {
    pub boundary: Polygon,
    pub rooms: Vec<Room>,
    pub access_edges: BTreeSet<(RoomId, RoomId)>,
    pub entrance_room: RoomId,
}

/// A complete floor plan: rooms tile the boundary, every door sits on a real
/// shared wall, and exactly one door reaches the building circulation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FloorPlan {
    pub boundary: Polygon,
    pub rooms: Vec<Room>,
    pub facade_edges: Vec<Segment>,
    pub circulation_edges: Vec<Segment>,
    pub doors: Vec<Door>,
}

impl FloorPlan {
    pub fn new(
        boundary: Polygon,
        mut rooms: Vec<Room>,
        mut facade_edges: Vec<Segment>,
        mut circulation_edges: Vec<Segment>,
        mut doors: Vec<Door>,
    ) -> Result<Self> {
        rooms.sort_by(|a, b| a.id.cmp(&b.id));
        doors.sort_by(|a, b| a.link.cmp(&b.link));
        sort_segments(&mut facade_edges);
        sort_segments(&mut circulation_edges);
        let plan = Self {
            boundary,
            rooms,
            facade_edges,
            circulation_edges,
            doors,
        };
        plan.validate()?;
        Ok(plan)
    }

    /// Bedroom count; zero bedrooms is a studio.
    pub fn occupancy(&self) -> usize {
        self.rooms
            .iter()
            .filter(|r| r.program == RoomProgram::Bedroom)
            .count()
    }

    pub fn room(&self, id: &RoomId) -> Option<&Room> {
        self.rooms.iter().find(|r| &r.id == id)
    }

    pub fn room_ids(&self) -> BTreeSet<RoomId> {
        self.rooms.iter().map(|r| r.id.clone()).collect()
    }

    /// The room holding the entrance door.
    pub fn entrance_room(&self) -> Option<&RoomId> {
        self.doors.iter().find_map(|d| match &d.link {
            DoorLink::Entrance(r) => Some(r),
            _ => None,
        })
    }

    /// Room-to-room access pairs, normalized.
    pub fn access_edges(&self) -> BTreeSet<(RoomId, RoomId)> {
        self.doors
            .iter()
            .filter_map(|d| match &d.link {
                DoorLink::Rooms(a, b) => Some((a.clone(), b.clone())),
                DoorLink::Entrance(_) => None,
            })
            .collect()
    }

    pub fn doors_of(&self, id: &RoomId) -> Vec<&Door> {
        self.doors
            .iter()
            .filter(|d| match &d.link {
                DoorLink::Rooms(a, b) => a == id || b == id,
                DoorLink::Entrance(r) => r == id,
            })
            .collect()
    }

    fn validate(&self) -> Result<()> {
        if self.rooms.is_empty() {
            return Err(Error::InvalidRecord("plan has no rooms".into()));
        }
        let mut seen = BTreeMap::new();
        for r in &self.rooms {
            if r.id.is_reserved() {
                return Err(Error::InvalidRecord(format!(
                    "room id {} is reserved",
                    r.id
                )));
            }
            if seen.insert(r.id.clone(), ()).is_some() {
                return Err(Error::InvalidRecord(format!("duplicate room id {}", r.id)));
            }
        }
        self.validate_tiling()?;
        validate_annotations(&self.boundary, &self.facade_edges, &self.circulation_edges)?;
        self.validate_doors()?;
        Ok(())
    }

    fn validate_tiling(&self) -> Result<()> {
        let bound_area = self.boundary.area();
        for i in 0..self.rooms.len() {
            for j in (i + 1)..self.rooms.len() {
                let overlap = geometry::intersection_area_of(
                    &self.rooms[i].polygon,
                    &self.rooms[j].polygon,
                );
                if overlap > OVERLAP_TOL {
                    return Err(Error::TilingOverlap {
                        a: self.rooms[i].id.to_string(),
                        b: self.rooms[j].id.to_string(),
                    });
                }
            }
        }
        let mut covered = 0.0;
        for r in &self.rooms {
            let inside = geometry::intersection_area_of(&r.polygon, &self.boundary);
            if r.polygon.area() - inside > OVERLAP_TOL {
                return Err(Error::TilingOverlap {
                    a: r.id.to_string(),
                    b: "(outside boundary)".into(),
                });
            }
            covered += inside;
        }
        if bound_area - covered > TILING_REL_TOL * bound_area {
            return Err(Error::TilingGap {
                covered,
                boundary: bound_area,
            });
        }
        Ok(())
    }

    fn validate_doors(&self) -> Result<()> {
        let mut entrances = 0;
        for d in &self.doors {
            if d.width < DOOR_WIDTH_MIN - EPS_POINT {
                return Err(Error::InvalidRecord(format!(
                    "door {} narrower than {} m",
                    d.link, DOOR_WIDTH_MIN
                )));
            }
            match &d.link {
                DoorLink::Rooms(a, b) => {
                    let (ra, rb) = match (self.room(a), self.room(b)) {
                        (Some(ra), Some(rb)) => (ra, rb),
                        _ => return Err(Error::DanglingDoor(d.link.to_string())),
                    };
                    let walls = shared_wall_segments(&ra.polygon, &rb.polygon);
                    if !segment_covered(&d.segment, &walls) {
                        return Err(Error::DanglingDoor(d.link.to_string()));
                    }
                }
                DoorLink::Entrance(r) => {
                    entrances += 1;
                    let room = self
                        .room(r)
                        .ok_or_else(|| Error::DanglingDoor(d.link.to_string()))?;
                    let frontage = boundary_overlaps(&room.polygon, &self.circulation_edges);
                    if !segment_covered(&d.segment, &frontage) {
                        return Err(Error::DanglingDoor(d.link.to_string()));
                    }
                }
            }
        }
        if entrances != 1 {
            return Err(Error::EntranceCount(entrances));
        }
        Ok(())
    }
}

fn sort_segments(segments: &mut [Segment]) {
    segments.sort_by(|s, t| s.a.lex_cmp(t.a).then(s.b.lex_cmp(t.b)));
}

/// Both endpoints of `seg` within tolerance of one covering segment.
fn segment_covered(seg: &Segment, covers: &[Segment]) -> bool {
    covers.iter().any(|c| {
        c.distance_to_point(seg.a) <= 10.0 * EPS_POINT
            && c.distance_to_point(seg.b) <= 10.0 * EPS_POINT
    })
}

fn validate_annotations(
    boundary: &Polygon,
    facade: &[Segment],
    circulation: &[Segment],
) -> Result<()> {
    for (kind, segs) in [("facade", facade), ("circulation", circulation)] {
        for s in segs {
            let on_boundary = boundary.edges().any(|e| {
                e.collinear_overlap(s)
                    .map(|o| o.length() >= s.length() - 10.0 * EPS_POINT)
                    .unwrap_or(false)
            });
            if !on_boundary {
                return Err(Error::InvalidRecord(format!(
                    "{kind} segment ({:.3},{:.3})-({:.3},{:.3}) not on the boundary",
                    s.a.x, s.a.y, s.b.x, s.b.y
                )));
            }
        }
    }
    for f in facade {
        for c in circulation {
            if f.collinear_overlap(c).is_some() {
                return Err(Error::InvalidRecord(
                    "facade and circulation edges overlap".into(),
                ));
            }
        }
    }
    Ok(())
}
