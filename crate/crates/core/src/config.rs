//! Pipeline thresholds, overridable from a TOML config file.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// All tunable thresholds of the fit pipeline, with their defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Thresholds {
    /// Maximum accepted plan perimeter-difference score.
    pub delta_max: f64,
    /// Allowed deviation between source and target façade ratio.
    pub facade_ratio_tol: f64,
    /// Allowed relative deviation of the target footprint from the source.
    pub footprint_tol: f64,
    /// Clear door width, meters.
    pub door_width_min: f64,
    /// Minimum contiguous façade frontage for habitable rooms, meters.
    pub facade_min_frontage: f64,
    /// Minimum caliper width for habitable rooms, meters.
    pub habitable_min_width: f64,
    /// Maximum bounding aspect ratio for habitable rooms.
    pub habitable_max_aspect: f64,
    /// Erosion radius for the foyer passability check, meters
    /// (half the required clear passage width).
    pub passage_radius: f64,
    /// Anchor step for furniture placement along walls, meters.
    pub furnish_grid: f64,
    /// Excess-area buffer multiplier on the minimum furniture area.
    pub multiplier_m: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Self {
            delta_max: 0.1,
            facade_ratio_tol: 0.15,
            footprint_tol: 0.20,
            door_width_min: 0.9,
            facade_min_frontage: 0.9,
            habitable_min_width: 1.8,
            habitable_max_aspect: 4.0,
            passage_radius: 0.45,
            furnish_grid: 0.1,
            multiplier_m: 1.6,
        }
    }
}

impl Thresholds {
    pub fn from_toml(text: &str) -> Result<Self> {
        let t: Thresholds = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        t.validate()?;
        Ok(t)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }

    fn validate(&self) -> Result<()> {
        let positive = [
            ("delta_max", self.delta_max),
            ("facade_ratio_tol", self.facade_ratio_tol),
            ("footprint_tol", self.footprint_tol),
            ("door_width_min", self.door_width_min),
            ("facade_min_frontage", self.facade_min_frontage),
            ("habitable_min_width", self.habitable_min_width),
            ("habitable_max_aspect", self.habitable_max_aspect),
            ("passage_radius", self.passage_radius),
            ("furnish_grid", self.furnish_grid),
            ("multiplier_m", self.multiplier_m),
        ];
        for (name, v) in positive {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Config(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(())
    }
}

/// The default config as a commented TOML document, for `--config` templates.
pub const DEFAULT_CONFIG_TOML: &str = r#"# plangraph pipeline thresholds
# Values mirror the built-in defaults; uncomment and edit to override.

# Plans with a perimeter-difference score above this are culled.
#delta_max = 0.1

# A hypergraph fits a boundary only when the source and target facade ratios
# agree within this tolerance.
#facade_ratio_tol = 0.15

# Footprint filter: target boundary area within this relative range of the
# source plan's footprint.
#footprint_tol = 0.20

# Clear door width in meters (accessibility clear-width).
#door_width_min = 0.9

# Habitable rooms need one contiguous facade stretch at least this long.
#facade_min_frontage = 0.9

# Habitable-room geometry: minimum caliper width and maximum aspect ratio.
#habitable_min_width = 1.8
#habitable_max_aspect = 4.0

# Foyers must survive erosion by this radius (half the passage width) and the
# eroded core must come within the same distance of every door.
#passage_radius = 0.45

# Furniture placement anchors are tried every this many meters along walls.
#furnish_grid = 0.1

# Excess-area buffer multiplier M.
#multiplier_m = 1.6
"#;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_toml_parses_to_defaults() {
        let t = Thresholds::from_toml(DEFAULT_CONFIG_TOML).unwrap();
        assert_eq!(t, Thresholds::default());
    }

    #[test]
    fn overrides_apply() {
        let t = Thresholds::from_toml("delta_max = 0.2\nfurnish_grid = 0.05\n").unwrap();
        assert_eq!(t.delta_max, 0.2);
        assert_eq!(t.furnish_grid, 0.05);
        assert_eq!(t.multiplier_m, 1.6);
    }

    #[test]
    fn bad_values_rejected() {
        assert!(Thresholds::from_toml("delta_max = -1.0").is_err());
        assert!(Thresholds::from_toml("no_such_knob = 1").is_err());
    }
}
