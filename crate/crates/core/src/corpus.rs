//! Versioned JSON record formats and the corpus bundle layout.
//!
//! Every record carries `format_version` and `kind`; lengths are meters,
//! angles radians, polygons CCW vertex arrays. A corpus is a directory:
//!
//! ```text
//! corpus/
//!   manifest.json
//!   plans/<id>.json
//!   hypergraphs/<id>.json
//!   catalog.json        (optional, default catalog otherwise)
//!   profiles.json       (optional, built-in city profiles otherwise)
//!   performance.json    (optional)
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::carbon::{builtin_profiles, CityProfile, PerformanceRecord};
use crate::error::{Error, Result};
use crate::floorplan::{
    BoundarySpec, Door, DoorLink, FloorPlan, Room, RoomId, ENTRANCE_TOKEN,
};
use crate::furnishing::FurnitureCatalog;
use crate::geometry::{Polygon, Segment};
use crate::hypergraph::Hypergraph;

pub const FORMAT_VERSION: &str = "1";

fn check_envelope(found_version: &str, found_kind: &str, expected_kind: &str) -> Result<()> {
    if found_version != FORMAT_VERSION {
        return Err(Error::FormatVersion {
            found: found_version.to_string(),
            supported: FORMAT_VERSION.to_string(),
        });
    }
    if found_kind != expected_kind {
        return Err(Error::RecordKind {
            found: found_kind.to_string(),
            expected: expected_kind.to_string(),
        });
    }
    Ok(())
}

fn to_pretty(value: &impl Serialize) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

// ---------------------------------------------------------------------------
// plan records

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RoomRecord {
    pub id: RoomId,
    pub program: String,
    pub polygon: Polygon,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DoorRecord {
    /// Two room ids, or a room id and `"ENTRANCE"`.
    pub between: [String; 2],
    pub segment: Segment,
    pub width: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlanRecord {
    pub format_version: String,
    pub kind: String,
    pub id: String,
    pub units: String,
    pub boundary: Polygon,
    pub facade_edges: Vec<Segment>,
    pub circulation_edges: Vec<Segment>,
    pub rooms: Vec<RoomRecord>,
    pub doors: Vec<DoorRecord>,
}

pub fn plan_to_record(id: &str, plan: &FloorPlan) -> PlanRecord {
    PlanRecord {
        format_version: FORMAT_VERSION.into(),
        kind: "plan".into(),
        id: id.to_string(),
        units: "meters".into(),
        boundary: plan.boundary.clone(),
        facade_edges: plan.facade_edges.clone(),
        circulation_edges: plan.circulation_edges.clone(),
        rooms: plan
            .rooms
            .iter()
            .map(|r| RoomRecord {
                id: r.id.clone(),
                program: r.program.to_string(),
                polygon: r.polygon.clone(),
            })
            .collect(),
        doors: plan
            .doors
            .iter()
            .map(|d| DoorRecord {
                between: match &d.link {
                    DoorLink::Rooms(a, b) => [a.to_string(), b.to_string()],
                    DoorLink::Entrance(r) => [r.to_string(), ENTRANCE_TOKEN.into()],
                },
                segment: d.segment,
                width: d.width,
            })
            .collect(),
    }
}

/// Validate and convert a traced record into a plan.
pub fn ingest_traced(record: &PlanRecord) -> Result<(String, FloorPlan)> {
    check_envelope(&record.format_version, &record.kind, "plan")?;
    if record.units != "meters" {
        return Err(Error::UnitMismatch(format!(
            "plan units {:?}, expected \"meters\"",
            record.units
        )));
    }
    let mut rooms = Vec::with_capacity(record.rooms.len());
    for r in &record.rooms {
        let program = r.program.parse()?;
        rooms.push(Room::new(r.id.clone(), program, r.polygon.clone()));
    }
    let mut doors = Vec::with_capacity(record.doors.len());
    for d in &record.doors {
        let [a, b] = &d.between;
        let link = match (a == ENTRANCE_TOKEN, b == ENTRANCE_TOKEN) {
            (true, true) => return Err(Error::DanglingDoor("ENTRANCE-ENTRANCE".into())),
            (true, false) => DoorLink::Entrance(RoomId::new(b.as_str())),
            (false, true) => DoorLink::Entrance(RoomId::new(a.as_str())),
            (false, false) => DoorLink::rooms(RoomId::new(a.as_str()), RoomId::new(b.as_str())),
        };
        doors.push(Door {
            link,
            segment: d.segment,
            width: d.width,
        });
    }
    let plan = FloorPlan::new(
        record.boundary.clone(),
        rooms,
        record.facade_edges.clone(),
        record.circulation_edges.clone(),
        doors,
    )?;
    Ok((record.id.clone(), plan))
}

pub fn read_plan(path: &Path) -> Result<(String, FloorPlan)> {
    let record: PlanRecord = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    ingest_traced(&record)
}

pub fn write_plan(path: &Path, id: &str, plan: &FloorPlan) -> Result<()> {
    std::fs::write(path, to_pretty(&plan_to_record(id, plan))?)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// hypergraph records

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HypergraphRecord {
    pub format_version: String,
    pub kind: String,
    pub id: String,
    pub units: String,
    #[serde(flatten)]
    pub hypergraph: Hypergraph,
}

pub fn hypergraph_to_record(id: &str, hg: &Hypergraph) -> HypergraphRecord {
    HypergraphRecord {
        format_version: FORMAT_VERSION.into(),
        kind: "hypergraph".into(),
        id: id.to_string(),
        units: "meters".into(),
        hypergraph: hg.clone(),
    }
}

pub fn read_hypergraph(path: &Path) -> Result<(String, Hypergraph)> {
    let record: HypergraphRecord = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    check_envelope(&record.format_version, &record.kind, "hypergraph")?;
    record.hypergraph.validate()?;
    Ok((record.id, record.hypergraph))
}

pub fn write_hypergraph(path: &Path, id: &str, hg: &Hypergraph) -> Result<()> {
    std::fs::write(path, to_pretty(&hypergraph_to_record(id, hg))?)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// boundary records

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundaryRecord {
    pub format_version: String,
    pub kind: String,
    pub id: String,
    pub units: String,
    pub boundary: Polygon,
    pub facade_edges: Vec<Segment>,
    pub circulation_edges: Vec<Segment>,
}

pub fn read_boundary(path: &Path) -> Result<(String, BoundarySpec)> {
    let record: BoundaryRecord = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    check_envelope(&record.format_version, &record.kind, "boundary")?;
    let spec = BoundarySpec::new(
        record.boundary,
        record.facade_edges,
        record.circulation_edges,
    )?;
    Ok((record.id, spec))
}

pub fn write_boundary(path: &Path, id: &str, spec: &BoundarySpec) -> Result<()> {
    let record = BoundaryRecord {
        format_version: FORMAT_VERSION.into(),
        kind: "boundary".into(),
        id: id.to_string(),
        units: "meters".into(),
        boundary: spec.boundary.clone(),
        facade_edges: spec.facade_edges.clone(),
        circulation_edges: spec.circulation_edges.clone(),
    };
    std::fs::write(path, to_pretty(&record)?)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// performance and profile files

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerformanceUnits {
    pub eui: String,
    pub sda: String,
}

impl Default for PerformanceUnits {
    fn default() -> Self {
        Self {
            eui: "kWh/m2/yr".into(),
            sda: "fraction".into(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PerformanceFile {
    pub format_version: String,
    pub kind: String,
    pub units: PerformanceUnits,
    pub records: Vec<PerformanceRecord>,
}

pub fn read_performance(path: &Path) -> Result<BTreeMap<String, PerformanceRecord>> {
    let file: PerformanceFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    check_envelope(&file.format_version, &file.kind, "performance")?;
    let expected = PerformanceUnits::default();
    if file.units != expected {
        return Err(Error::UnitMismatch(format!(
            "performance units {:?}/{:?}, expected {:?}/{:?}",
            file.units.eui, file.units.sda, expected.eui, expected.sda
        )));
    }
    let mut out = BTreeMap::new();
    for rec in file.records {
        rec.validate()?;
        out.insert(rec.apartment_id.clone(), rec);
    }
    Ok(out)
}

pub fn write_performance(path: &Path, records: &[PerformanceRecord]) -> Result<()> {
    let file = PerformanceFile {
        format_version: FORMAT_VERSION.into(),
        kind: "performance".into(),
        units: PerformanceUnits::default(),
        records: records.to_vec(),
    };
    std::fs::write(path, to_pretty(&file)?)?;
    Ok(())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProfilesFile {
    pub format_version: String,
    pub kind: String,
    pub profiles: Vec<CityProfile>,
}

pub fn read_profiles(path: &Path) -> Result<Vec<CityProfile>> {
    let file: ProfilesFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    check_envelope(&file.format_version, &file.kind, "profiles")?;
    Ok(file.profiles)
}

// ---------------------------------------------------------------------------
// manifest and bundle

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Manifest {
    pub format_version: String,
    pub kind: String,
    pub name: String,
    #[serde(default)]
    pub provenance: String,
    #[serde(default)]
    pub feature_set: String,
}

impl Manifest {
    pub fn new(name: &str, provenance: &str) -> Self {
        Self {
            format_version: FORMAT_VERSION.into(),
            kind: "manifest".into(),
            name: name.to_string(),
            provenance: provenance.to_string(),
            feature_set: crate::features::FEATURE_SET_VERSION.into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusBundle {
    pub manifest: Manifest,
    pub plans: BTreeMap<String, FloorPlan>,
    pub hypergraphs: BTreeMap<String, Hypergraph>,
    pub catalog: FurnitureCatalog,
    pub profiles: Vec<CityProfile>,
    pub performance: BTreeMap<String, PerformanceRecord>,
}

impl CorpusBundle {
    /// Every hypergraph whose source plan is present in the bundle, with the
    /// plan it came from.
    pub fn hypergraphs_with_sources(&self) -> Vec<(&String, &Hypergraph, &FloorPlan)> {
        self.hypergraphs
            .iter()
            .filter_map(|(id, hg)| {
                self.plans
                    .get(&hg.source.plan_id)
                    .map(|plan| (id, hg, plan))
            })
            .collect()
    }
}

pub fn load_bundle(dir: &Path) -> Result<CorpusBundle> {
    let manifest: Manifest =
        serde_json::from_str(&std::fs::read_to_string(dir.join("manifest.json"))?)?;
    check_envelope(&manifest.format_version, &manifest.kind, "manifest")?;

    let mut plans = BTreeMap::new();
    let plans_dir = dir.join("plans");
    if plans_dir.is_dir() {
        for entry in sorted_json_files(&plans_dir)? {
            let (id, plan) = read_plan(&entry)?;
            plans.insert(id, plan);
        }
    }
    let mut hypergraphs = BTreeMap::new();
    let hg_dir = dir.join("hypergraphs");
    if hg_dir.is_dir() {
        for entry in sorted_json_files(&hg_dir)? {
            let (id, hg) = read_hypergraph(&entry)?;
            hypergraphs.insert(id, hg);
        }
    }
    let catalog_path = dir.join("catalog.json");
    let catalog = if catalog_path.is_file() {
        FurnitureCatalog::load(&catalog_path)?
    } else {
        FurnitureCatalog::default_catalog().clone()
    };
    let profiles_path = dir.join("profiles.json");
    let profiles = if profiles_path.is_file() {
        read_profiles(&profiles_path)?
    } else {
        builtin_profiles()
    };
    let perf_path = dir.join("performance.json");
    let performance = if perf_path.is_file() {
        read_performance(&perf_path)?
    } else {
        BTreeMap::new()
    };
    Ok(CorpusBundle {
        manifest,
        plans,
        hypergraphs,
        catalog,
        profiles,
        performance,
    })
}

pub fn save_bundle(dir: &Path, bundle: &CorpusBundle) -> Result<()> {
    std::fs::create_dir_all(dir.join("plans"))?;
    std::fs::create_dir_all(dir.join("hypergraphs"))?;
    std::fs::write(dir.join("manifest.json"), to_pretty(&bundle.manifest)?)?;
    for (id, plan) in &bundle.plans {
        write_plan(&dir.join("plans").join(format!("{id}.json")), id, plan)?;
    }
    for (id, hg) in &bundle.hypergraphs {
        write_hypergraph(&dir.join("hypergraphs").join(format!("{id}.json")), id, hg)?;
    }
    std::fs::write(dir.join("catalog.json"), to_pretty(&bundle.catalog)?)?;
    let profiles = ProfilesFile {
        format_version: FORMAT_VERSION.into(),
        kind: "profiles".into(),
        profiles: bundle.profiles.clone(),
    };
    std::fs::write(dir.join("profiles.json"), to_pretty(&profiles)?)?;
    if !bundle.performance.is_empty() {
        let records: Vec<PerformanceRecord> = bundle.performance.values().cloned().collect();
        write_performance(&dir.join("performance.json"), &records)?;
    }
    Ok(())
}

fn sorted_json_files(dir: &Path) -> Result<Vec<std::path::PathBuf>> {
    let mut out: Vec<std::path::PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().map(|x| x == "json").unwrap_or(false))
        .collect();
    out.sort();
    Ok(out)
}
