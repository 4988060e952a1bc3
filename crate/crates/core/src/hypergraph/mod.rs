//! The plan codec: a binary subdivision tree plus a room-access graph.
//!
//! [`encode_plan`] inverts the subdivision of an existing plan into a tree of
//! cuts; [`apply`] replays those cuts into a (possibly different) boundary
//! polygon. On the original boundary the two are mutually inverse: the same
//! rooms come back, with their ids, programs and access edges intact.

mod apply;
mod encode;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

pub use apply::{apply, RetentionMode};
pub use encode::encode_plan;

use crate::error::{Error, Result};
use crate::floorplan::{RoomId, RoomProgram};
use crate::geometry::{mirror_angle, normalize_angle, Polygon, Segment};

/// How closely two child areas must agree with their parent, relative.
const AREA_CONSISTENCY_TOL: f64 = 1e-6;

/// One node of the subdivision tree. Internal nodes carry the cut angle
/// (relative to the source plan's circulation direction) and have exactly two
/// children; leaves carry a program and the room id.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubdivNode {
    pub id: String,
    /// Area of this region as measured in the source plan, square meters.
    pub area_abs: f64,
    /// Fraction of the parent area; 1 for the root.
    pub area_ratio: f64,
    #[serde(flatten)]
    pub kind: NodeKind,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NodeKind {
    Internal {
        /// Cut angle in [0, pi), relative to the source circulation frame.
        angle: f64,
        /// Lower side of the cut.
        first: Box<SubdivNode>,
        /// Upper side of the cut.
        second: Box<SubdivNode>,
    },
    Leaf {
        program: RoomProgram,
        room_id: RoomId,
    },
}

impl SubdivNode {
    pub fn is_leaf(&self) -> bool {
        matches!(self.kind, NodeKind::Leaf { .. })
    }

    pub fn leaves(&self) -> Vec<&SubdivNode> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a SubdivNode>) {
        match &self.kind {
            NodeKind::Leaf { .. } => out.push(self),
            NodeKind::Internal { first, second, .. } => {
                first.collect_leaves(out);
                second.collect_leaves(out);
            }
        }
    }

    pub fn count_internal(&self) -> usize {
        match &self.kind {
            NodeKind::Leaf { .. } => 0,
            NodeKind::Internal { first, second, .. } => {
                1 + first.count_internal() + second.count_internal()
            }
        }
    }

    /// Depth of each leaf, root at depth 0.
    pub fn leaf_depths(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_depths(0, &mut out);
        out
    }

    fn collect_depths(&self, depth: usize, out: &mut Vec<usize>) {
        match &self.kind {
            NodeKind::Leaf { .. } => out.push(depth),
            NodeKind::Internal { first, second, .. } => {
                first.collect_depths(depth + 1, out);
                second.collect_depths(depth + 1, out);
            }
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.area_abs.is_finite() && self.area_abs > 0.0) {
            return Err(Error::InvalidRecord(format!(
                "node {} area {} not positive",
                self.id, self.area_abs
            )));
        }
        if let NodeKind::Internal {
            first,
            second,
            angle,
        } = &self.kind
        {
            if !(0.0..std::f64::consts::PI).contains(angle) {
                return Err(Error::InvalidRecord(format!(
                    "node {} angle {} outside [0, pi)",
                    self.id, angle
                )));
            }
            let sum = first.area_abs + second.area_abs;
            if (sum - self.area_abs).abs() > AREA_CONSISTENCY_TOL * self.area_abs {
                return Err(Error::InvalidRecord(format!(
                    "node {} children sum to {} of {}",
                    self.id, sum, self.area_abs
                )));
            }
            if (first.area_ratio + second.area_ratio - 1.0).abs() > 1e-9 {
                return Err(Error::InvalidRecord(format!(
                    "node {} child ratios do not sum to 1",
                    self.id
                )));
            }
            first.validate()?;
            second.validate()?;
        }
        Ok(())
    }
}

/// Provenance of a hypergraph: which plan it came from and whether it has
/// been mirrored since. The source façade ratio rides along for the fit
/// filter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SourceRef {
    pub plan_id: String,
    pub mirrored: bool,
    pub facade_ratio: f64,
}

/// Unordered room pair, stored sorted.
pub type AccessEdge = (RoomId, RoomId);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hypergraph {
    pub root: SubdivNode,
    pub access_edges: BTreeSet<AccessEdge>,
    pub entrance_room: RoomId,
    pub facade_rooms: BTreeSet<RoomId>,
    /// Circulation direction of the source plan, in [0, pi).
    pub frame_angle: f64,
    pub source: SourceRef,
}

impl Hypergraph {
    pub fn validate(&self) -> Result<()> {
        self.root.validate()?;
        if self.source.plan_id.is_empty() {
            return Err(Error::InvalidRecord("empty source attribution".into()));
        }
        let rooms: BTreeSet<RoomId> = self
            .root
            .leaves()
            .iter()
            .map(|l| match &l.kind {
                NodeKind::Leaf { room_id, .. } => room_id.clone(),
                NodeKind::Internal { .. } => unreachable!(),
            })
            .collect();
        if rooms.len() != self.root.leaves().len() {
            return Err(Error::InvalidRecord("duplicate leaf room ids".into()));
        }
        for (a, b) in &self.access_edges {
            if a == b {
                return Err(Error::InvalidRecord(format!("self-loop on {a}")));
            }
            if !rooms.contains(a) || !rooms.contains(b) {
                return Err(Error::InvalidRecord(format!(
                    "access edge {a}-{b} references a non-leaf room"
                )));
            }
        }
        if !rooms.contains(&self.entrance_room) {
            return Err(Error::InvalidRecord(format!(
                "entrance room {} is not a leaf",
                self.entrance_room
            )));
        }
        if !self.is_access_connected(&rooms) {
            return Err(Error::InvalidRecord(
                "access graph is not connected over all rooms".into(),
            ));
        }
        Ok(())
    }

    /// Every room reachable from the entrance through access edges.
    fn is_access_connected(&self, rooms: &BTreeSet<RoomId>) -> bool {
        if rooms.len() <= 1 {
            return true;
        }
        let mut adj: BTreeMap<&RoomId, Vec<&RoomId>> = BTreeMap::new();
        for (a, b) in &self.access_edges {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let mut seen = BTreeSet::new();
        let mut stack = vec![&self.entrance_room];
        while let Some(r) = stack.pop() {
            if !seen.insert(r.clone()) {
                continue;
            }
            for n in adj.get(r).into_iter().flatten() {
                stack.push(n);
            }
        }
        seen.len() == rooms.len()
    }

    pub fn room_ids(&self) -> BTreeSet<RoomId> {
        self.root
            .leaves()
            .iter()
            .map(|l| match &l.kind {
                NodeKind::Leaf { room_id, .. } => room_id.clone(),
                NodeKind::Internal { .. } => unreachable!(),
            })
            .collect()
    }

    /// Source-plan footprint: the root region's absolute area.
    pub fn source_area(&self) -> f64 {
        self.root.area_abs
    }
}

/// Reflect a hypergraph: every cut angle maps to `pi - a`, child order swaps,
/// and the mirrored flag toggles. Access edges and room identity are
/// untouched, so a mirrored graph places the same rooms on the opposite side.
pub fn mirror(hg: &Hypergraph) -> Hypergraph {
    Hypergraph {
        root: mirror_node(&hg.root),
        access_edges: hg.access_edges.clone(),
        entrance_room: hg.entrance_room.clone(),
        facade_rooms: hg.facade_rooms.clone(),
        frame_angle: mirror_angle(hg.frame_angle),
        source: SourceRef {
            plan_id: hg.source.plan_id.clone(),
            mirrored: !hg.source.mirrored,
            facade_ratio: hg.source.facade_ratio,
        },
    }
}

fn mirror_node(node: &SubdivNode) -> SubdivNode {
    let kind = match &node.kind {
        NodeKind::Leaf { program, room_id } => NodeKind::Leaf {
            program: *program,
            room_id: room_id.clone(),
        },
        NodeKind::Internal {
            angle,
            first,
            second,
        } => NodeKind::Internal {
            angle: mirror_angle(*angle),
            first: Box::new(mirror_node(second)),
            second: Box::new(mirror_node(first)),
        },
    };
    SubdivNode {
        id: node.id.clone(),
        area_abs: node.area_abs,
        area_ratio: node.area_ratio,
        kind,
    }
}

/// Reference direction of a boundary's circulation: the angle of the longest
/// circulation edge, in [0, pi).
pub fn circulation_frame(_boundary: &Polygon, circulation_edges: &[Segment]) -> Result<f64> {
    let longest = circulation_edges
        .iter()
        .max_by(|a, b| a.length().total_cmp(&b.length()))
        .ok_or(Error::NoCirculationEdge)?;
    Ok(normalize_angle(longest.angle()))
}

#[cfg(test)]
mod tests {
    use crate::geometry::Point2;

    use super::*;

    #[test]
    fn circulation_frame_picks_longest_edge() {
        let square = Polygon::rectangle(0.0, 0.0, 4.0, 4.0).unwrap();
        let bottom = Segment::new(Point2::new(0.0, 0.0), Point2::new(4.0, 0.0));
        let left = Segment::new(Point2::new(0.0, 0.0), Point2::new(0.0, 4.0));
        assert_eq!(circulation_frame(&square, &[bottom]).unwrap(), 0.0);
        assert!(
            (circulation_frame(&square, &[left]).unwrap() - std::f64::consts::FRAC_PI_2).abs()
                < 1e-12
        );
        // 3 m horizontal beats 1 m vertical
        let short_left = Segment::new(Point2::new(0.0, 0.0), Point2::new(0.0, 1.0));
        let long_bottom = Segment::new(Point2::new(0.0, 0.0), Point2::new(3.0, 0.0));
        assert_eq!(
            circulation_frame(&square, &[short_left, long_bottom]).unwrap(),
            0.0
        );
        assert!(matches!(
            circulation_frame(&square, &[]),
            Err(Error::NoCirculationEdge)
        ));
    }
}
