//! Concrete floor plans: rooms with programs, façade/circulation annotation,
//! doors, and the invariants that make a traced record a usable plan.

mod doors;
mod plan;
mod program;
mod walls;

pub use doors::{realize_doors, Door, DoorLink};
pub use plan::{BoundarySpec, FloorPlan, PlanSkeleton, Room};
pub use program::{RoomId, RoomProgram, ENTRANCE_TOKEN};
pub use walls::{facade_frontage, merge_collinear, shared_wall_segments};

/// Minimum clear door width, meters. Common accessibility clear-width.
pub const DOOR_WIDTH_MIN: f64 = 0.9;

/// Total façade edge length over boundary perimeter, in [0, 1].
pub fn facade_ratio(plan: &FloorPlan) -> f64 {
    let total: f64 = plan.facade_edges.iter().map(|s| s.length()).sum();
    total / plan.boundary.perimeter()
}
