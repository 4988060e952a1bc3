//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    // -- geometry --------------------------------------------------------
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
    #[error("split produced a disconnected side ({0} pieces)")]
    SplitDisconnected(usize),
    #[error("split offset {offset} outside polygon projection range [{min}, {max}]")]
    SplitEmpty { offset: f64, min: f64, max: f64 },
    #[error("no connected split achieves area ratio {ratio} at angle {angle} rad")]
    RatioSplitInfeasible { angle: f64, ratio: f64 },
    #[error("subtraction produced a hole (clip polygon strictly interior)")]
    HoleProduced,

    // -- hypergraph ------------------------------------------------------
    #[error("plan is not BSP-representable: no free cut separates {rooms} rooms at depth {depth}")]
    NotBspRepresentable { depth: usize, rooms: usize },
    #[error("apply failed at node {node}: {source}")]
    ApplyFailed {
        node: String,
        #[source]
        source: Box<Error>,
    },
    #[error("boundary area {available} m2 below required {required} m2 for area retention")]
    InsufficientArea { required: f64, available: f64 },
    #[error("no circulation edge on boundary")]
    NoCirculationEdge,

    // -- floor plan ------------------------------------------------------
    #[error("rooms cover {covered} m2 of a {boundary} m2 boundary (gap)")]
    TilingGap { covered: f64, boundary: f64 },
    #[error("room interiors overlap near rooms {a} and {b}")]
    TilingOverlap { a: String, b: String },
    #[error("unknown room program {0:?}")]
    UnknownProgram(String),
    #[error("door references {0}: no such room or segment off the shared wall")]
    DanglingDoor(String),
    #[error("no shared wall of at least door width for access edge {0}")]
    NoSharedWall(String),
    #[error("plan has no entrance door (expected exactly one, found {0})")]
    EntranceCount(usize),

    // -- validity --------------------------------------------------------
    #[error("room id sets differ between generated and source plan: {0}")]
    RoomSetMismatch(String),

    // -- carbon ----------------------------------------------------------
    #[error("missing sDA score for daylit room {0}")]
    MissingRoomScore(String),
    #[error("occupancy {0} exceeds furniture catalog maximum {1}")]
    UnknownOccupancy(usize, usize),
    #[error("empty cohort")]
    EmptyCohort,
    #[error("performance record {0} invalid: {1}")]
    BadPerformanceRecord(String, String),

    // -- features --------------------------------------------------------
    #[error("need at least 2 samples for PCA, got {0}")]
    TooFewSamples(usize),
    #[error("hypergraph and plan are inconsistent: {0}")]
    InconsistentPair(String),

    // -- corpus / io -----------------------------------------------------
    #[error("unsupported format version {found:?} (reader supports {supported:?})")]
    FormatVersion { found: String, supported: String },
    #[error("record kind {found:?}, expected {expected:?}")]
    RecordKind { found: String, expected: String },
    #[error("unit header mismatch: {0}")]
    UnitMismatch(String),
    #[error("{0}")]
    InvalidRecord(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("config: {0}")]
    Config(String),

    // -- general ---------------------------------------------------------
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Domain failures (valid input, the method does not apply) as opposed
    /// to malformed input; the CLI maps these to exit code 2.
    pub fn is_domain_failure(&self) -> bool {
        matches!(
            self,
            Error::SplitDisconnected(_)
                | Error::SplitEmpty { .. }
                | Error::RatioSplitInfeasible { .. }
                | Error::HoleProduced
                | Error::NotBspRepresentable { .. }
                | Error::ApplyFailed { .. }
                | Error::InsufficientArea { .. }
                | Error::NoSharedWall(_)
        )
    }
}
