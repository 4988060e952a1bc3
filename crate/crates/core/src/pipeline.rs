//! The end-to-end fit procedure: evaluate a hypergraph library (plus mirrors)
//! against one boundary, filter, validate, furnish, optionally score carbon,
//! and rank. The pipeline has no randomness; candidate evaluation may fan out
//! across threads and is re-sorted afterwards, so parallel and serial runs
//! produce identical output.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::carbon::{carbon_report, daylight_score, CarbonReport, CityProfile, PerformanceRecord};
use crate::config::Thresholds;
use crate::error::Result;
use crate::floorplan::{realize_doors, BoundarySpec, FloorPlan, RoomId};
use crate::furnishing::{furnish_plan, FurnitureCatalog, Placement};
use crate::hypergraph::{apply, circulation_frame, mirror, Hypergraph, RetentionMode};
use crate::validity::{
    check_plan, fit_filter, per_room_perimeter_diff, ValidityReport,
};

/// One library entry: the hypergraph and, when available, the source plan the
/// perimeter-difference score compares against.
#[derive(Debug, Clone)]
pub struct LibraryEntry {
    pub id: String,
    pub hypergraph: Hypergraph,
    pub source_plan: Option<FloorPlan>,
}

/// Outcome of evaluating one (hypergraph, mirrored?) candidate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FitResult {
    pub hypergraph_id: String,
    pub mirrored: bool,
    pub accepted: bool,
    /// Why the candidate fell out of the pipeline, when it did.
    pub reject_reason: Option<String>,
    pub validity: Option<ValidityReport>,
    pub furnishing_feasible: Option<bool>,
    pub f_tot: Option<f64>,
    pub carbon: Option<CarbonReport>,
    #[serde(skip)]
    pub plan: Option<FloorPlan>,
    #[serde(skip)]
    pub placements: Option<BTreeMap<RoomId, Vec<Placement>>>,
}

impl FitResult {
    fn rejected(id: &str, mirrored: bool, reason: impl Into<String>) -> Self {
        Self {
            hypergraph_id: id.to_string(),
            mirrored,
            accepted: false,
            reject_reason: Some(reason.into()),
            validity: None,
            furnishing_feasible: None,
            f_tot: None,
            carbon: None,
            plan: None,
            placements: None,
        }
    }

    /// Sort key: accepted first, by ascending plan score, then daylight
    /// descending when present, then identity for total determinism.
    fn rank_key(&self) -> (u8, f64, f64, String, bool) {
        let delta = self
            .validity
            .as_ref()
            .map(|v| v.delta_r)
            .unwrap_or(f64::INFINITY);
        let d_tot = self.carbon.as_ref().map(|c| c.d_tot).unwrap_or(0.0);
        (
            u8::from(!self.accepted),
            delta,
            -d_tot,
            self.hypergraph_id.clone(),
            self.mirrored,
        )
    }
}

pub struct FitOptions<'a> {
    pub mode: RetentionMode,
    pub thresholds: &'a Thresholds,
    pub catalog: &'a FurnitureCatalog,
    /// Performance records keyed by candidate key (`<boundary>:<hg>[~m]`),
    /// enabling carbon reports for candidates that have been simulated.
    pub performance: &'a BTreeMap<String, PerformanceRecord>,
    pub profile: Option<&'a CityProfile>,
    pub boundary_id: &'a str,
}

/// Key under which a candidate's external performance record is looked up.
pub fn candidate_key(boundary_id: &str, hg_id: &str, mirrored: bool) -> String {
    format!(
        "{boundary_id}:{hg_id}{}",
        if mirrored { "~m" } else { "" }
    )
}

/// Evaluate every library hypergraph and its mirror against the boundary.
pub fn fit_boundary(
    library: &[LibraryEntry],
    target: &BoundarySpec,
    opts: &FitOptions,
) -> Result<Vec<FitResult>> {
    let frame = circulation_frame(&target.boundary, &target.circulation_edges)?;
    let mut candidates: Vec<(&LibraryEntry, bool)> = Vec::with_capacity(library.len() * 2);
    for entry in library {
        candidates.push((entry, false));
        candidates.push((entry, true));
    }
    let mut results: Vec<FitResult> = candidates
        .par_iter()
        .map(|(entry, mirrored)| evaluate_candidate(entry, *mirrored, target, frame, opts))
        .collect();
    results.sort_by(|a, b| {
        let (a0, a1, a2, a3, a4) = a.rank_key();
        let (b0, b1, b2, b3, b4) = b.rank_key();
        a0.cmp(&b0)
            .then(a1.total_cmp(&b1))
            .then(a2.total_cmp(&b2))
            .then(a3.cmp(&b3))
            .then(a4.cmp(&b4))
    });
    Ok(results)
}

fn evaluate_candidate(
    entry: &LibraryEntry,
    mirrored: bool,
    target: &BoundarySpec,
    frame: f64,
    opts: &FitOptions,
) -> FitResult {
    let hg_owned;
    let hg: &Hypergraph = if mirrored {
        hg_owned = mirror(&entry.hypergraph);
        &hg_owned
    } else {
        &entry.hypergraph
    };

    if !fit_filter(hg, target, opts.thresholds) {
        return FitResult::rejected(&entry.id, mirrored, "footprint/facade filter");
    }
    let skeleton = match apply(hg, &target.boundary, opts.mode, frame) {
        Ok(s) => s,
        Err(e) => return FitResult::rejected(&entry.id, mirrored, format!("apply: {e}")),
    };
    let plan = match realize_doors(&skeleton, target) {
        Ok(p) => p,
        Err(e) => {
            let mut r = FitResult::rejected(&entry.id, mirrored, format!("doors: {e}"));
            r.validity = Some(ValidityReport::unrealizable());
            return r;
        }
    };

    let flags = check_plan(&plan, opts.thresholds);
    let per_room = match &entry.source_plan {
        Some(source) => match per_room_perimeter_diff(&plan, source) {
            Ok(m) => m,
            Err(e) => {
                return FitResult::rejected(&entry.id, mirrored, format!("room match: {e}"))
            }
        },
        None => {
            return FitResult::rejected(&entry.id, mirrored, "source plan unavailable");
        }
    };

    let furnishing = match furnish_plan(&plan, opts.catalog, opts.thresholds) {
        Ok(f) => f,
        Err(e) => return FitResult::rejected(&entry.id, mirrored, format!("furnish: {e}")),
    };

    let validity = ValidityReport::new(per_room, flags, opts.thresholds.delta_max);
    let accepted = validity.passed && furnishing.feasible;
    let reject_reason = if accepted {
        None
    } else if !validity.flags.is_empty() {
        Some(format!(
            "flags: {}",
            validity
                .flags
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ))
    } else if !validity.passed {
        Some(format!("delta_r {:.4} above cull threshold", validity.delta_r))
    } else {
        Some(format!(
            "furnishing infeasible: {}",
            furnishing.failures.join("; ")
        ))
    };

    let key = candidate_key(opts.boundary_id, &entry.id, mirrored);
    let carbon = match (opts.performance.get(&key), opts.profile) {
        (Some(record), Some(profile)) => match daylight_score(&plan, record) {
            Ok(d_tot) => Some(carbon_report(
                &key,
                plan.boundary.area(),
                furnishing.f_tot,
                furnishing.feasible,
                d_tot,
                record,
                profile,
                opts.thresholds.multiplier_m,
            )),
            Err(_) => None,
        },
        _ => None,
    };

    FitResult {
        hypergraph_id: entry.id.clone(),
        mirrored,
        accepted,
        reject_reason,
        validity: Some(validity),
        furnishing_feasible: Some(furnishing.feasible),
        f_tot: Some(furnishing.f_tot),
        carbon,
        plan: Some(plan),
        placements: Some(furnishing.placements),
    }
}

/// Plain-text result table, deterministic, one line per candidate.
pub fn format_results(results: &[FitResult]) -> String {
    let mut out = String::new();
    out.push_str("rank\thypergraph\tmirrored\taccepted\tdelta_r\tf_tot\td_tot\treason\n");
    for (i, r) in results.iter().enumerate() {
        let delta = r
            .validity
            .as_ref()
            .map(|v| format!("{:.6}", v.delta_r))
            .unwrap_or_else(|| "-".into());
        let f_tot = r
            .f_tot
            .map(|f| format!("{f:.2}"))
            .unwrap_or_else(|| "-".into());
        let d_tot = r
            .carbon
            .as_ref()
            .map(|c| format!("{:.3}", c.d_tot))
            .unwrap_or_else(|| "-".into());
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            i + 1,
            r.hypergraph_id,
            if r.mirrored { "yes" } else { "no" },
            if r.accepted { "yes" } else { "no" },
            delta,
            f_tot,
            d_tot,
            r.reject_reason.as_deref().unwrap_or("-"),
        ));
    }
    out
}
