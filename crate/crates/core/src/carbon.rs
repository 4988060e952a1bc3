//! Operational-carbon accounting over externally supplied simulation results.
//!
//! Energy use intensities and per-room daylight scores come from outside
//! (building-physics tools); this module only implements the arithmetic that
//! turns them, together with the furniture test-fit, into excess-area and
//! excess-carbon figures, plus the built-in city constants.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::floorplan::{FloorPlan, RoomId};

/// Envelope construction constants carried for report provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnvelopeSpec {
    /// W/m2K
    pub u_value: f64,
    /// Window-to-wall ratio.
    pub wwr: f64,
    pub glazing: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CityProfile {
    pub name: String,
    /// kgCO2e/kWh
    pub grid_carbon: f64,
    pub envelope_standard: EnvelopeSpec,
    pub envelope_high: EnvelopeSpec,
    /// HVAC descriptor, identical across envelope variants.
    pub hvac: String,
}

fn profile(name: &str, grid_carbon: f64) -> CityProfile {
    CityProfile {
        name: name.to_string(),
        grid_carbon,
        envelope_standard: EnvelopeSpec {
            u_value: 0.3,
            wwr: 0.6,
            glazing: "double-clear".into(),
        },
        envelope_high: EnvelopeSpec {
            u_value: 0.1,
            wwr: 0.6,
            glazing: "triple-lowE".into(),
        },
        hvac: "electric heat pump COP 3.3".into(),
    }
}

/// Built-in city profiles; grid carbon intensities in kgCO2e/kWh.
pub fn builtin_profiles() -> Vec<CityProfile> {
    vec![
        profile("new_york", 0.55),
        profile("singapore", 0.4057),
        profile("zurich", 0.128),
    ]
}

pub fn builtin_profile(name: &str) -> Option<CityProfile> {
    builtin_profiles()
        .into_iter()
        .find(|p| p.name.eq_ignore_ascii_case(name))
}

/// Externally supplied simulation results for one apartment: energy use
/// intensity under both envelopes and per-room daylight scores.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerformanceRecord {
    pub apartment_id: String,
    /// kWh/m2/yr with the standard envelope.
    pub eui_standard: f64,
    /// kWh/m2/yr with the high-performance envelope.
    pub eui_high_performance: f64,
    /// Spatial daylight autonomy per room, each in [0, 1].
    pub sda: BTreeMap<RoomId, f64>,
    #[serde(default)]
    pub provenance: String,
}

impl PerformanceRecord {
    pub fn validate(&self) -> Result<()> {
        if !(self.eui_standard.is_finite() && self.eui_high_performance.is_finite()) {
            return Err(Error::BadPerformanceRecord(
                self.apartment_id.clone(),
                "non-finite EUI".into(),
            ));
        }
        if self.eui_high_performance < 0.0 || self.eui_standard < self.eui_high_performance {
            // an envelope upgrade never worsens energy use
            return Err(Error::BadPerformanceRecord(
                self.apartment_id.clone(),
                format!(
                    "EUI_s {} must be >= EUI_hp {} >= 0",
                    self.eui_standard, self.eui_high_performance
                ),
            ));
        }
        for (room, d) in &self.sda {
            if !(0.0..=1.0).contains(d) {
                return Err(Error::BadPerformanceRecord(
                    self.apartment_id.clone(),
                    format!("sDA {d} for room {room} outside [0, 1]"),
                ));
            }
        }
        Ok(())
    }
}

/// Area-weighted apartment daylight score over daylit rooms only
/// (living, kitchen, bedroom, foyer).
pub fn daylight_score(plan: &FloorPlan, record: &PerformanceRecord) -> Result<f64> {
    let mut weighted = 0.0;
    let mut total = 0.0;
    for room in &plan.rooms {
        if !room.program.is_daylit() {
            continue;
        }
        let d = record
            .sda
            .get(&room.id)
            .ok_or_else(|| Error::MissingRoomScore(room.id.to_string()))?;
        let a = room.polygon.area();
        weighted += d * a;
        total += a;
    }
    if total <= 0.0 {
        return Err(Error::MissingRoomScore("no daylit rooms".into()));
    }
    Ok(weighted / total)
}

/// Excess area beyond the buffered furniture minimum: `A_apt - F_tot * M`.
/// Negative values mean a compact apartment with no excess.
pub fn excess_area(apartment_area: f64, f_tot: f64, multiplier: f64) -> f64 {
    apartment_area - f_tot * multiplier
}

/// Annual carbon from conditioning excess area, kgCO2e/yr. Compact
/// apartments (negative excess area) emit no excess carbon.
pub fn excess_carbon(a_e: f64, eui_standard: f64, grid_carbon: f64) -> f64 {
    a_e.max(0.0) * eui_standard * grid_carbon
}

/// Excess-space emissions minus what the envelope upgrade would save:
/// `C_e - A * (EUI_s - EUI_hp) * g_cc`. Positive means compactness beats the
/// upgrade.
pub fn emission_delta(
    apartment_area: f64,
    a_e: f64,
    eui_standard: f64,
    eui_high_performance: f64,
    grid_carbon: f64,
) -> f64 {
    excess_carbon(a_e, eui_standard, grid_carbon)
        - apartment_area * (eui_standard - eui_high_performance) * grid_carbon
}

/// The full accounting chain for one apartment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CarbonReport {
    pub apartment_id: String,
    /// Square meters, already clamped at the occupancy minimum.
    pub f_tot: f64,
    pub apartment_area: f64,
    pub a_e: f64,
    /// kgCO2e/yr
    pub c_e: f64,
    /// kgCO2e/yr
    pub delta_e: f64,
    pub d_tot: f64,
    pub furnishing_feasible: bool,
}

/// Assemble a report from a furnished area total and a performance record.
pub fn carbon_report(
    apartment_id: &str,
    apartment_area: f64,
    f_tot: f64,
    furnishing_feasible: bool,
    d_tot: f64,
    record: &PerformanceRecord,
    profile: &CityProfile,
    multiplier: f64,
) -> CarbonReport {
    let a_e = excess_area(apartment_area, f_tot, multiplier);
    let c_e = excess_carbon(a_e, record.eui_standard, profile.grid_carbon);
    let delta_e = emission_delta(
        apartment_area,
        a_e,
        record.eui_standard,
        record.eui_high_performance,
        profile.grid_carbon,
    );
    CarbonReport {
        apartment_id: apartment_id.to_string(),
        f_tot,
        apartment_area,
        a_e,
        c_e,
        delta_e,
        d_tot,
        furnishing_feasible,
    }
}

/// Cohort aggregates. Because the right denominator for the positive-share is
/// debatable, both readings are reported: over all apartments and over the
/// feasibly furnished ones.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CohortSummary {
    pub n: usize,
    pub n_feasible: usize,
    /// Fraction with strictly positive emission delta, over all apartments.
    pub share_delta_positive: f64,
    /// The same share over feasibly furnished apartments (0 when none).
    pub share_delta_positive_feasible: f64,
    pub mean_c_e: f64,
    pub median_c_e: f64,
    pub mean_d_tot: f64,
}

pub fn cohort_summary(reports: &[CarbonReport]) -> Result<CohortSummary> {
    if reports.is_empty() {
        return Err(Error::EmptyCohort);
    }
    let n = reports.len();
    let positive = reports.iter().filter(|r| r.delta_e > 0.0).count();
    let feasible: Vec<&CarbonReport> =
        reports.iter().filter(|r| r.furnishing_feasible).collect();
    let positive_feasible = feasible.iter().filter(|r| r.delta_e > 0.0).count();
    let mut ces: Vec<f64> = reports.iter().map(|r| r.c_e).collect();
    ces.sort_by(f64::total_cmp);
    let median_c_e = if n % 2 == 1 {
        ces[n / 2]
    } else {
        0.5 * (ces[n / 2 - 1] + ces[n / 2])
    };
    Ok(CohortSummary {
        n,
        n_feasible: feasible.len(),
        share_delta_positive: positive as f64 / n as f64,
        share_delta_positive_feasible: if feasible.is_empty() {
            0.0
        } else {
            positive_feasible as f64 / feasible.len() as f64
        },
        mean_c_e: ces.iter().sum::<f64>() / n as f64,
        median_c_e,
        mean_d_tot: reports.iter().map(|r| r.d_tot).sum::<f64>() / n as f64,
    })
}

/// Synthetic EUI generator for exercising the pipeline without simulation
/// results. NOT physical: a plain linear blend of envelope U-value and façade
/// exposure, deterministic in its inputs.
pub fn synthetic_record(
    apartment_id: &str,
    plan: &FloorPlan,
    profile: &CityProfile,
    seed: u64,
) -> PerformanceRecord {
    let facade_ratio = crate::floorplan::facade_ratio(plan);
    let eui = |u: f64| 40.0 + 260.0 * u + 30.0 * facade_ratio;
    let mut sda = BTreeMap::new();
    for (i, room) in plan.rooms.iter().enumerate() {
        // bounded pseudo-score mixing the seed and room index
        let h = seed
            .wrapping_mul(0x9e37_79b9_7f4a_7c15)
            .wrapping_add(i as u64 + 1);
        let noise = (h % 1000) as f64 / 1000.0;
        let frontage = crate::floorplan::facade_frontage(&room.polygon, &plan.facade_edges);
        let base = if frontage > 0.0 { 0.55 } else { 0.15 };
        sda.insert(room.id.clone(), (base + 0.4 * noise).clamp(0.0, 1.0));
    }
    PerformanceRecord {
        apartment_id: apartment_id.to_string(),
        eui_standard: eui(profile.envelope_standard.u_value),
        eui_high_performance: eui(profile.envelope_high.u_value),
        sda,
        provenance: "synthetic (non-physical test generator)".into(),
    }
}
