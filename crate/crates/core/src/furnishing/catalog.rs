use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::floorplan::RoomProgram;

/// Per-side extension of a block's circulation zone beyond its footprint,
/// in the block's local frame (back edge against the wall).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct Clearance {
    pub front: f64,
    pub back: f64,
    pub left: f64,
    pub right: f64,
}

/// A furniture block: the footprint is the blocked zone (planning-standard
/// furniture including its use space); the circulation zone extends it by the
/// clearance and may overlap other circulation zones.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FurnitureBlock {
    #[serde(skip, default)]
    pub name: String,
    pub program: RoomProgram,
    /// Width along the wall, depth into the room; meters.
    pub footprint: [f64; 2],
    #[serde(default)]
    pub clearance: Clearance,
}

impl FurnitureBlock {
    pub fn width(&self) -> f64 {
        self.footprint[0]
    }

    pub fn depth(&self) -> f64 {
        self.footprint[1]
    }

    pub fn footprint_area(&self) -> f64 {
        self.footprint[0] * self.footprint[1]
    }
}

/// One required room of an occupancy class: the `rank`-th largest room of the
/// program (0 = primary) must fit all listed blocks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoomRequirement {
    pub program: RoomProgram,
    pub rank: usize,
    pub blocks: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OccupancySpec {
    pub bedrooms: usize,
    /// Spatial-sufficiency floor for this occupancy, square meters.
    pub min_furniture_area: f64,
    pub rooms: Vec<RoomRequirement>,
}

/// Furniture catalog: block definitions plus the per-occupancy minimum sets.
/// The default catalog is a data file so deployments can localize it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FurnitureCatalog {
    pub format_version: String,
    pub kind: String,
    pub name: String,
    pub units: String,
    pub blocks: BTreeMap<String, FurnitureBlock>,
    pub occupancies: Vec<OccupancySpec>,
}

static DEFAULT_CATALOG: OnceLock<FurnitureCatalog> = OnceLock::new();

impl FurnitureCatalog {
    pub fn from_json(text: &str) -> Result<Self> {
        let mut catalog: FurnitureCatalog = serde_json::from_str(text)?;
        if catalog.kind != "catalog" {
            return Err(Error::RecordKind {
                found: catalog.kind,
                expected: "catalog".into(),
            });
        }
        if catalog.format_version != crate::corpus::FORMAT_VERSION {
            return Err(Error::FormatVersion {
                found: catalog.format_version,
                supported: crate::corpus::FORMAT_VERSION.into(),
            });
        }
        if catalog.units != "meters" {
            return Err(Error::UnitMismatch(format!(
                "catalog units {:?}, expected \"meters\"",
                catalog.units
            )));
        }
        for (name, block) in &mut catalog.blocks {
            block.name = name.clone();
            if !(block.footprint[0] > 0.0 && block.footprint[1] > 0.0) {
                return Err(Error::InvalidRecord(format!(
                    "block {name} has a non-positive footprint"
                )));
            }
        }
        for occ in &catalog.occupancies {
            for req in &occ.rooms {
                for b in &req.blocks {
                    if !catalog.blocks.contains_key(b) {
                        return Err(Error::InvalidRecord(format!(
                            "occupancy {} requires unknown block {b}",
                            occ.bedrooms
                        )));
                    }
                }
            }
        }
        Ok(catalog)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// The built-in catalog sized to the per-occupancy furniture-area minima.
    pub fn default_catalog() -> &'static FurnitureCatalog {
        DEFAULT_CATALOG.get_or_init(|| {
            Self::from_json(include_str!("../../data/catalog_default.json"))
                .expect("embedded catalog is valid")
        })
    }

    pub fn max_occupancy(&self) -> usize {
        self.occupancies.iter().map(|o| o.bedrooms).max().unwrap_or(0)
    }

    pub fn occupancy(&self, bedrooms: usize) -> Result<&OccupancySpec> {
        self.occupancies
            .iter()
            .find(|o| o.bedrooms == bedrooms)
            .ok_or_else(|| Error::UnknownOccupancy(bedrooms, self.max_occupancy()))
    }

    pub fn min_furniture_area(&self, bedrooms: usize) -> Result<f64> {
        Ok(self.occupancy(bedrooms)?.min_furniture_area)
    }

    pub fn block(&self, name: &str) -> Option<&FurnitureBlock> {
        self.blocks.get(name)
    }

    /// Total footprint area of every block an occupancy requires.
    pub fn required_footprint_area(&self, bedrooms: usize) -> Result<f64> {
        let spec = self.occupancy(bedrooms)?;
        Ok(spec
            .rooms
            .iter()
            .flat_map(|r| r.blocks.iter())
            .map(|b| self.blocks[b].footprint_area())
            .sum())
    }
}
