//! Floor-plan graph engine.
//!
//! An apartment layout is encoded as a pair of graphs over its rooms: a
//! binary subdivision tree (recursive straight cuts, each carrying an angle
//! and the two child areas) and an undirected access graph (doors plus the
//! entrance link to the building circulation). The combined structure can be
//! re-applied to a different boundary polygon to regenerate a layout with the
//! same internal organization, which is then validated geometrically,
//! test-fitted with furniture, and scored for excess-area carbon.
//!
//! Modules map onto the stages of that pipeline:
//!
//! * [`geometry`] — polygon arithmetic: areas, half-plane splits,
//!   ratio-targeted splits, inward offsets, boolean subtraction.
//! * [`hypergraph`] — the codec: [`hypergraph::encode_plan`] and
//!   [`hypergraph::apply`].
//! * [`floorplan`] — concrete plans: rooms, doors, façade/circulation
//!   annotation, traced-record ingestion.
//! * [`validity`] — perimeter-difference scoring and failure-case detectors.
//! * [`furnishing`] — procedural furniture test-fit against a catalog.
//! * [`carbon`] — excess-area / excess-carbon accounting over externally
//!   supplied energy and daylight results.
//! * [`features`] — numeric descriptors, PCA, and spectral graph distances.
//! * [`corpus`] — versioned JSON record formats.
//! * [`pipeline`] — the end-to-end fit procedure over a hypergraph library.
//! * [`render`] — deterministic SVG output.

pub mod carbon;
pub mod config;
pub mod corpus;
pub mod error;
pub mod features;
pub mod floorplan;
pub mod furnishing;
pub mod geometry;
pub mod golden;
pub mod hypergraph;
pub mod pipeline;
pub mod render;
pub mod validity;

pub use error::{Error, Result};
