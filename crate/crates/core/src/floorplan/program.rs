use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The closed set of room programs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RoomProgram {
    Living,
    Bedroom,
    Kitchen,
    Bath,
    Extra,
    Foyer,
}

impl RoomProgram {
    pub const ALL: [RoomProgram; 6] = [
        RoomProgram::Living,
        RoomProgram::Bedroom,
        RoomProgram::Kitchen,
        RoomProgram::Bath,
        RoomProgram::Extra,
        RoomProgram::Foyer,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RoomProgram::Living => "living",
            RoomProgram::Bedroom => "bedroom",
            RoomProgram::Kitchen => "kitchen",
            RoomProgram::Bath => "bath",
            RoomProgram::Extra => "extra",
            RoomProgram::Foyer => "foyer",
        }
    }

    /// Habitable rooms must reach a façade and pass the geometry checks.
    pub fn is_habitable(self) -> bool {
        matches!(
            self,
            RoomProgram::Living | RoomProgram::Bedroom | RoomProgram::Kitchen
        )
    }

    /// Rooms whose daylight enters the area-weighted apartment score.
    /// Baths and extra (storage) rooms are excluded.
    pub fn is_daylit(self) -> bool {
        matches!(
            self,
            RoomProgram::Living | RoomProgram::Bedroom | RoomProgram::Kitchen | RoomProgram::Foyer
        )
    }
}

impl std::str::FromStr for RoomProgram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        RoomProgram::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::UnknownProgram(s.to_string()))
    }
}

impl std::fmt::Display for RoomProgram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Opaque room identifier, unique within a plan and preserved verbatim by the
/// encode/apply round trip so rooms can be matched across plans.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RoomId(String);

/// Reserved token for the building-circulation side of an entrance door.
pub const ENTRANCE_TOKEN: &str = "ENTRANCE";

impl RoomId {
    pub fn new(id: impl Into<String>) -> Self {
        Self(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_reserved(&self) -> bool {
        self.0 == ENTRANCE_TOKEN
    }
}

impl std::fmt::Display for RoomId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for RoomId {
    fn from(s: &str) -> Self {
        RoomId::new(s)
    }
}
