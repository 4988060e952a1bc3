//! Procedural furniture test-fit against a per-occupancy catalog.

mod catalog;
mod place;

pub use catalog::{Clearance, FurnitureBlock, FurnitureCatalog, OccupancySpec, RoomRequirement};
pub use place::{
    furnish_plan, furnish_room, placement_valid, FurnishOutcome, FurnishResult, Placement,
};
