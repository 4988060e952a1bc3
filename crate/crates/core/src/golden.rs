//! The built-in golden corpus: hand-built traced plans spanning studio to
//! three-bedroom layouts, rectilinear and not, used by tests and shipped as
//! reference data. Doors are synthesized on the declared access edges so all
//! plan invariants hold by construction.

use crate::floorplan::{
    realize_doors, BoundarySpec, FloorPlan, PlanSkeleton, Room, RoomId, RoomProgram,
};
use crate::geometry::{Point2, Polygon, Segment};

fn pt(x: f64, y: f64) -> Point2 {
    Point2::new(x, y)
}

fn seg(x1: f64, y1: f64, x2: f64, y2: f64) -> Segment {
    Segment::new(pt(x1, y1), pt(x2, y2))
}

fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Polygon {
    Polygon::rectangle(x0, y0, x1, y1).expect("golden rectangle")
}

fn poly(pts: &[(f64, f64)]) -> Polygon {
    Polygon::new(pts.iter().map(|&(x, y)| pt(x, y)).collect()).expect("golden polygon")
}

struct PlanDef<'a> {
    id: &'a str,
    boundary: Polygon,
    facade: Vec<Segment>,
    circulation: Vec<Segment>,
    rooms: Vec<(&'a str, RoomProgram, Polygon)>,
    access: Vec<(&'a str, &'a str)>,
    entrance: &'a str,
}

fn build(def: PlanDef) -> (String, FloorPlan) {
    let spec = BoundarySpec::new(def.boundary.clone(), def.facade, def.circulation)
        .unwrap_or_else(|e| panic!("golden plan {}: bad annotations: {e}", def.id));
    let rooms = def
        .rooms
        .into_iter()
        .map(|(id, program, polygon)| Room::new(RoomId::new(id), program, polygon))
        .collect();
    let access = def
        .access
        .iter()
        .map(|(a, b)| {
            let (a, b) = (RoomId::new(*a), RoomId::new(*b));
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    let skeleton = PlanSkeleton {
        boundary: def.boundary,
        rooms,
        access_edges: access,
        entrance_room: RoomId::new(def.entrance),
    };
    let plan = realize_doors(&skeleton, &spec)
        .unwrap_or_else(|e| panic!("golden plan {}: doors: {e}", def.id));
    (def.id.to_string(), plan)
}

/// Rotate a point about the origin.
fn rot(p: Point2, angle: f64) -> Point2 {
    let (s, c) = angle.sin_cos();
    pt(c * p.x - s * p.y, s * p.x + c * p.y)
}

fn rot_poly(p: &Polygon, angle: f64) -> Polygon {
    Polygon::new(p.vertices().iter().map(|&v| rot(v, angle)).collect()).expect("rotated polygon")
}

fn rot_seg(s: &Segment, angle: f64) -> Segment {
    Segment::new(rot(s.a, angle), rot(s.b, angle))
}

/// Mirror a point across the vertical line x = w/2.
fn mir(p: Point2, w: f64) -> Point2 {
    pt(w - p.x, p.y)
}

fn mir_poly(p: &Polygon, w: f64) -> Polygon {
    Polygon::new(p.vertices().iter().map(|&v| mir(v, w)).collect()).expect("mirrored polygon")
}

fn mir_seg(s: &Segment, w: f64) -> Segment {
    Segment::new(mir(s.a, w), mir(s.b, w))
}

/// All golden plans, keyed by id. Deterministic order.
pub fn golden_corpus() -> Vec<(String, FloorPlan)> {
    vec![
        zh_s1(),
        ny_s1(),
        sg_s1(),
        ny_s2(),
        zh_g1(),
        zh_g2(),
        ny_g1(),
        sg_g1(),
        zh_g3(),
        zh_g5(),
        ny_g2(),
        sg_g2(),
        zh_g4(),
        ny_g3(),
        zh_t1(),
        ny_t1(),
        sg_t1(),
    ]
}

pub fn golden_plan(id: &str) -> Option<FloorPlan> {
    golden_corpus()
        .into_iter()
        .find(|(pid, _)| pid == id)
        .map(|(_, p)| p)
}

/// Studio, rectangular, entrance from the east.
fn zh_s1() -> (String, FloorPlan) {
    build(PlanDef {
        id: "zh-s1",
        boundary: rect(0.0, 0.0, 7.4, 5.2),
        facade: vec![
            seg(0.0, 0.0, 7.4, 0.0),
            seg(0.0, 0.0, 0.0, 5.2),
            seg(0.0, 5.2, 4.8, 5.2),
        ],
        circulation: vec![seg(7.4, 2.8, 7.4, 5.2)],
        rooms: vec![
            ("living", RoomProgram::Living, rect(0.0, 0.0, 4.8, 5.2)),
            ("bath", RoomProgram::Bath, rect(4.8, 0.0, 7.4, 2.8)),
            ("foyer", RoomProgram::Foyer, rect(4.8, 2.8, 7.4, 5.2)),
        ],
        access: vec![("foyer", "living"), ("foyer", "bath")],
        entrance: "foyer",
    })
}

/// Studio in an L-shaped boundary (top-left corner missing).
fn ny_s1() -> (String, FloorPlan) {
    build(PlanDef {
        id: "ny-s1",
        boundary: poly(&[
            (0.0, 0.0),
            (7.6, 0.0),
            (7.6, 5.0),
            (3.0, 5.0),
            (3.0, 3.2),
            (0.0, 3.2),
        ]),
        facade: vec![
            seg(0.0, 0.0, 7.6, 0.0),
            seg(0.0, 0.0, 0.0, 3.2),
            seg(0.0, 3.2, 3.0, 3.2),
        ],
        circulation: vec![seg(7.6, 3.2, 7.6, 5.0)],
        rooms: vec![
            ("living", RoomProgram::Living, rect(0.0, 0.0, 7.6, 3.2)),
            ("bath", RoomProgram::Bath, rect(3.0, 3.2, 6.4, 5.0)),
            ("foyer", RoomProgram::Foyer, rect(6.4, 3.2, 7.6, 5.0)),
        ],
        access: vec![("foyer", "living"), ("foyer", "bath")],
        entrance: "foyer",
    })
}

/// Studio with a storage room that counts toward the furniture total.
fn sg_s1() -> (String, FloorPlan) {
    build(PlanDef {
        id: "sg-s1",
        boundary: rect(0.0, 0.0, 7.8, 5.2),
        facade: vec![seg(0.0, 0.0, 7.8, 0.0), seg(0.0, 0.0, 0.0, 5.2)],
        circulation: vec![seg(4.8, 5.2, 6.4, 5.2)],
        rooms: vec![
            ("living", RoomProgram::Living, rect(0.0, 0.0, 4.8, 5.2)),
            ("bath", RoomProgram::Bath, rect(4.8, 0.0, 7.8, 2.8)),
            ("foyer", RoomProgram::Foyer, rect(4.8, 2.8, 6.4, 5.2)),
            ("store", RoomProgram::Extra, rect(6.4, 2.8, 7.8, 5.2)),
        ],
        access: vec![
            ("foyer", "living"),
            ("foyer", "bath"),
            ("foyer", "store"),
        ],
        entrance: "foyer",
    })
}

/// Compact studio near the target footprint.
fn ny_s2() -> (String, FloorPlan) {
    build(PlanDef {
        id: "ny-s2",
        boundary: rect(0.0, 0.0, 6.4, 5.4),
        facade: vec![seg(0.0, 0.0, 6.4, 0.0), seg(0.0, 0.0, 0.0, 5.4)],
        circulation: vec![seg(4.4, 5.4, 6.4, 5.4)],
        rooms: vec![
            ("living", RoomProgram::Living, rect(0.0, 0.0, 4.4, 5.4)),
            ("bath", RoomProgram::Bath, rect(4.4, 0.0, 6.4, 3.2)),
            ("foyer", RoomProgram::Foyer, rect(4.4, 3.2, 6.4, 5.4)),
        ],
        access: vec![("foyer", "living"), ("foyer", "bath")],
        entrance: "foyer",
    })
}

/// One-bedroom, 9 x 7 m.
fn zh_g1() -> (String, FloorPlan) {
    build(PlanDef {
        id: "zh-g1",
        boundary: rect(0.0, 0.0, 9.0, 7.0),
        facade: vec![
            seg(0.0, 0.0, 9.0, 0.0),
            seg(0.0, 0.0, 0.0, 7.0),
            seg(9.0, 0.0, 9.0, 7.0),
        ],
        circulation: vec![seg(3.5, 7.0, 4.6, 7.0)],
        rooms: vec![
            ("bed_a", RoomProgram::Bedroom, rect(0.0, 0.0, 3.6, 4.2)),
            ("living", RoomProgram::Living, rect(3.6, 0.0, 9.0, 4.2)),
            ("bath", RoomProgram::Bath, rect(0.0, 4.2, 3.5, 7.0)),
            ("foyer", RoomProgram::Foyer, rect(3.5, 4.2, 4.6, 7.0)),
            ("kitchen", RoomProgram::Kitchen, rect(4.6, 4.2, 9.0, 7.0)),
        ],
        access: vec![
            ("bed_a", "living"),
            ("foyer", "living"),
            ("foyer", "bath"),
            ("kitchen", "living"),
        ],
        entrance: "foyer",
    })
}

fn zh_g2_def() -> PlanDef<'static> {
    PlanDef {
        id: "zh-g2",
        boundary: rect(0.0, 0.0, 8.0, 6.7),
        facade: vec![
            seg(0.0, 0.0, 8.0, 0.0),
            seg(0.0, 0.0, 0.0, 6.7),
            seg(8.0, 0.0, 8.0, 6.7),
        ],
        circulation: vec![seg(3.5, 6.7, 4.5, 6.7)],
        rooms: vec![
            ("bed_a", RoomProgram::Bedroom, rect(0.0, 0.0, 3.6, 3.9)),
            ("living", RoomProgram::Living, rect(3.6, 0.0, 8.0, 3.9)),
            ("bath", RoomProgram::Bath, rect(0.0, 3.9, 3.5, 6.7)),
            ("foyer", RoomProgram::Foyer, rect(3.5, 3.9, 4.5, 6.7)),
            ("kitchen", RoomProgram::Kitchen, rect(4.5, 3.9, 8.0, 6.7)),
        ],
        access: vec![
            ("bed_a", "living"),
            ("foyer", "living"),
            ("foyer", "bath"),
            ("foyer", "kitchen"),
        ],
        entrance: "foyer",
    }
}

/// One-bedroom at exactly 53.6 m2, the one-bed area target.
fn zh_g2() -> (String, FloorPlan) {
    build(zh_g2_def())
}

/// One-bedroom, the same strip layout stretched.
fn ny_g1() -> (String, FloorPlan) {
    build(PlanDef {
        id: "ny-g1",
        boundary: rect(0.0, 0.0, 8.6, 6.6),
        facade: vec![seg(0.0, 0.0, 8.6, 0.0), seg(8.6, 0.0, 8.6, 6.6)],
        circulation: vec![seg(3.5, 6.6, 4.5, 6.6)],
        rooms: vec![
            ("bed_a", RoomProgram::Bedroom, rect(0.0, 0.0, 3.6, 3.9)),
            ("living", RoomProgram::Living, rect(3.6, 0.0, 8.6, 3.9)),
            ("bath", RoomProgram::Bath, rect(0.0, 3.9, 3.5, 6.6)),
            ("foyer", RoomProgram::Foyer, rect(3.5, 3.9, 4.5, 6.6)),
            ("kitchen", RoomProgram::Kitchen, rect(4.5, 3.9, 8.6, 6.6)),
        ],
        access: vec![
            ("bed_a", "living"),
            ("foyer", "living"),
            ("foyer", "bath"),
            ("foyer", "kitchen"),
        ],
        entrance: "foyer",
    })
}

/// One-bedroom in a trapezoidal boundary (slanted east wall).
fn sg_g1() -> (String, FloorPlan) {
    build(PlanDef {
        id: "sg-g1",
        boundary: poly(&[(0.0, 0.0), (8.6, 0.0), (7.2, 6.0), (0.0, 6.0)]),
        facade: vec![
            seg(0.0, 0.0, 8.6, 0.0),
            seg(0.0, 0.0, 0.0, 6.0),
            seg(8.6, 0.0, 7.2, 6.0),
            seg(4.5, 6.0, 7.2, 6.0),
        ],
        circulation: vec![seg(3.5, 6.0, 4.5, 6.0)],
        rooms: vec![
            ("bed_a", RoomProgram::Bedroom, rect(0.0, 0.0, 3.6, 3.6)),
            (
                "living",
                RoomProgram::Living,
                poly(&[(3.6, 0.0), (8.6, 0.0), (7.76, 3.6), (3.6, 3.6)]),
            ),
            ("bath", RoomProgram::Bath, rect(0.0, 3.6, 3.5, 6.0)),
            ("foyer", RoomProgram::Foyer, rect(3.5, 3.6, 4.5, 6.0)),
            (
                "kitchen",
                RoomProgram::Kitchen,
                poly(&[(4.5, 3.6), (7.76, 3.6), (7.2, 6.0), (4.5, 6.0)]),
            ),
        ],
        access: vec![
            ("bed_a", "living"),
            ("foyer", "living"),
            ("foyer", "bath"),
            ("foyer", "kitchen"),
        ],
        entrance: "foyer",
    })
}

/// zh-g2 rotated by 30 degrees; exercises the circulation frame.
fn zh_g3() -> (String, FloorPlan) {
    let a = 30f64.to_radians();
    let d = zh_g2_def();
    build(PlanDef {
        id: "zh-g3",
        boundary: rot_poly(&d.boundary, a),
        facade: d.facade.iter().map(|s| rot_seg(s, a)).collect(),
        circulation: d.circulation.iter().map(|s| rot_seg(s, a)).collect(),
        rooms: d
            .rooms
            .into_iter()
            .map(|(id, p, poly)| (id, p, rot_poly(&poly, a)))
            .collect(),
        access: d.access,
        entrance: d.entrance,
    })
}

/// One-bedroom, mirrored strip layout (bedroom on the east).
fn zh_g5() -> (String, FloorPlan) {
    let w = 8.8;
    let d = PlanDef {
        id: "zh-g5",
        boundary: rect(0.0, 0.0, w, 6.8),
        facade: vec![
            seg(0.0, 0.0, w, 0.0),
            seg(0.0, 0.0, 0.0, 6.8),
            seg(w, 0.0, w, 6.8),
        ],
        circulation: vec![seg(3.5, 6.8, 4.5, 6.8)],
        rooms: vec![
            ("bed_a", RoomProgram::Bedroom, rect(0.0, 0.0, 3.6, 3.9)),
            ("living", RoomProgram::Living, rect(3.6, 0.0, w, 3.9)),
            ("bath", RoomProgram::Bath, rect(0.0, 3.9, 3.5, 6.8)),
            ("foyer", RoomProgram::Foyer, rect(3.5, 3.9, 4.5, 6.8)),
            ("kitchen", RoomProgram::Kitchen, rect(4.5, 3.9, w, 6.8)),
        ],
        access: vec![
            ("bed_a", "living"),
            ("foyer", "living"),
            ("foyer", "bath"),
            ("foyer", "kitchen"),
        ],
        entrance: "foyer",
    };
    build(PlanDef {
        id: d.id,
        boundary: mir_poly(&d.boundary, w),
        facade: d.facade.iter().map(|s| mir_seg(s, w)).collect(),
        circulation: d.circulation.iter().map(|s| mir_seg(s, w)).collect(),
        rooms: d
            .rooms
            .into_iter()
            .map(|(id, p, poly)| (id, p, mir_poly(&poly, w)))
            .collect(),
        access: d.access,
        entrance: d.entrance,
    })
}

fn two_bed_rooms(w: f64, h: f64, bw: f64) -> Vec<(&'static str, RoomProgram, Polygon)> {
    // lower strip: primary bedroom + living; upper strip: second bedroom,
    // foyer, kitchen, and the bath against the east wall
    vec![
        ("bed_a", RoomProgram::Bedroom, rect(0.0, 0.0, bw, 4.0)),
        ("living", RoomProgram::Living, rect(bw, 0.0, w, 4.0)),
        ("bed_b", RoomProgram::Bedroom, rect(0.0, 4.0, bw, h)),
        ("foyer", RoomProgram::Foyer, rect(bw, 4.0, bw + 1.2, h)),
        ("kitchen", RoomProgram::Kitchen, rect(bw + 1.2, 4.0, bw + 3.9, h)),
        ("bath", RoomProgram::Bath, rect(bw + 3.9, 4.0, w, h)),
    ]
}

const TWO_BED_ACCESS: [(&str, &str); 5] = [
    ("bed_a", "living"),
    ("foyer", "living"),
    ("foyer", "bed_b"),
    ("foyer", "kitchen"),
    ("bath", "living"),
];

/// Two-bedroom, 11 x 8 m.
fn ny_g2() -> (String, FloorPlan) {
    let (w, h) = (11.0, 8.0);
    build(PlanDef {
        id: "ny-g2",
        boundary: rect(0.0, 0.0, w, h),
        facade: vec![
            seg(0.0, 0.0, w, 0.0),
            seg(0.0, 0.0, 0.0, h),
            seg(w, 0.0, w, h),
            seg(0.0, h, 3.6, h),
            seg(4.8, h, w, h),
        ],
        circulation: vec![seg(3.6, h, 4.8, h)],
        rooms: two_bed_rooms(w, h, 3.6),
        access: TWO_BED_ACCESS.to_vec(),
        entrance: "foyer",
    })
}

/// Two-bedroom variant with a different envelope and façade mix.
fn sg_g2() -> (String, FloorPlan) {
    let (w, h) = (11.2, 8.0);
    build(PlanDef {
        id: "sg-g2",
        boundary: rect(0.0, 0.0, w, h),
        facade: vec![
            seg(0.0, 0.0, w, 0.0),
            seg(w, 0.0, w, h),
            seg(0.0, 0.0, 0.0, h),
            seg(4.9, h, w, h),
        ],
        circulation: vec![seg(3.7, h, 4.9, h)],
        rooms: two_bed_rooms(w, h, 3.7),
        access: TWO_BED_ACCESS.to_vec(),
        entrance: "foyer",
    })
}

/// Two-bedroom in an L (bottom-right corner notched out of the living room).
fn zh_g4() -> (String, FloorPlan) {
    let (w, h) = (11.0, 8.0);
    build(PlanDef {
        id: "zh-g4",
        boundary: poly(&[
            (0.0, 0.0),
            (9.6, 0.0),
            (9.6, 1.4),
            (w, 1.4),
            (w, h),
            (0.0, h),
        ]),
        facade: vec![
            seg(0.0, 0.0, 9.6, 0.0),
            seg(0.0, 0.0, 0.0, h),
            seg(w, 1.4, w, h),
            seg(4.8, h, w, h),
        ],
        circulation: vec![seg(3.6, h, 4.8, h)],
        rooms: vec![
            ("bed_a", RoomProgram::Bedroom, rect(0.0, 0.0, 3.6, 4.0)),
            (
                "living",
                RoomProgram::Living,
                poly(&[
                    (3.6, 0.0),
                    (9.6, 0.0),
                    (9.6, 1.4),
                    (w, 1.4),
                    (w, 4.0),
                    (3.6, 4.0),
                ]),
            ),
            ("bed_b", RoomProgram::Bedroom, rect(0.0, 4.0, 3.6, h)),
            ("foyer", RoomProgram::Foyer, rect(3.6, 4.0, 4.8, h)),
            ("kitchen", RoomProgram::Kitchen, rect(4.8, 4.0, 7.5, h)),
            ("bath", RoomProgram::Bath, rect(7.5, 4.0, w, h)),
        ],
        access: TWO_BED_ACCESS.to_vec(),
        entrance: "foyer",
    })
}

/// Two-bedroom with a recessed court in the south façade; the living room
/// wraps the recess in a U.
fn ny_g3() -> (String, FloorPlan) {
    let (w, h) = (11.0, 8.0);
    build(PlanDef {
        id: "ny-g3",
        boundary: poly(&[
            (0.0, 0.0),
            (6.0, 0.0),
            (6.0, 1.0),
            (7.4, 1.0),
            (7.4, 0.0),
            (w, 0.0),
            (w, h),
            (0.0, h),
        ]),
        facade: vec![
            seg(0.0, 0.0, 6.0, 0.0),
            seg(7.4, 0.0, w, 0.0),
            seg(6.0, 0.0, 6.0, 1.0),
            seg(6.0, 1.0, 7.4, 1.0),
            seg(7.4, 1.0, 7.4, 0.0),
            seg(0.0, 0.0, 0.0, h),
            seg(w, 0.0, w, h),
            seg(4.8, h, w, h),
        ],
        circulation: vec![seg(3.6, h, 4.8, h)],
        rooms: vec![
            ("bed_a", RoomProgram::Bedroom, rect(0.0, 0.0, 3.6, 4.0)),
            (
                "living",
                RoomProgram::Living,
                poly(&[
                    (3.6, 0.0),
                    (6.0, 0.0),
                    (6.0, 1.0),
                    (7.4, 1.0),
                    (7.4, 0.0),
                    (w, 0.0),
                    (w, 4.0),
                    (3.6, 4.0),
                ]),
            ),
            ("bed_b", RoomProgram::Bedroom, rect(0.0, 4.0, 3.6, h)),
            ("foyer", RoomProgram::Foyer, rect(3.6, 4.0, 4.8, h)),
            ("kitchen", RoomProgram::Kitchen, rect(4.8, 4.0, 7.5, h)),
            ("bath", RoomProgram::Bath, rect(7.5, 4.0, w, h)),
        ],
        access: TWO_BED_ACCESS.to_vec(),
        entrance: "foyer",
    })
}

fn three_bed_rooms(w: f64, h: f64, with_store: bool) -> Vec<(&'static str, RoomProgram, Polygon)> {
    // lower strip: kitchen, living, primary bedroom; upper strip: two more
    // bedrooms, foyer, a bath pair stacked behind the foyer
    let mut rooms = vec![
        ("kitchen", RoomProgram::Kitchen, rect(0.0, 0.0, 2.7, 4.4)),
        ("living", RoomProgram::Living, rect(2.7, 0.0, 9.4, 4.4)),
        ("bed_a", RoomProgram::Bedroom, rect(9.4, 0.0, w, 4.4)),
        ("bed_b", RoomProgram::Bedroom, rect(0.0, 4.4, 3.6, h)),
        ("foyer", RoomProgram::Foyer, rect(3.6, 4.4, 4.8, h)),
        ("bath_a", RoomProgram::Bath, rect(4.8, 4.4, 8.3, 6.7)),
        ("bath_b", RoomProgram::Bath, rect(4.8, 6.7, 8.3, h)),
        ("bed_c", RoomProgram::Bedroom, rect(8.3, 4.4, 11.9, h)),
    ];
    if with_store {
        // the column the L-variant notches away becomes storage
        rooms.push(("store", RoomProgram::Extra, rect(11.9, 4.4, w, h)));
    }
    rooms
}

const THREE_BED_ACCESS: [(&str, &str); 7] = [
    ("kitchen", "living"),
    ("bed_a", "living"),
    ("foyer", "living"),
    ("foyer", "bed_b"),
    ("foyer", "bath_a"),
    ("foyer", "bath_b"),
    ("bed_c", "living"),
];

/// Three-bedroom in an L (top-right notch), eight rooms.
fn zh_t1() -> (String, FloorPlan) {
    let (w, h) = (13.0, 8.0);
    build(PlanDef {
        id: "zh-t1",
        boundary: poly(&[
            (0.0, 0.0),
            (w, 0.0),
            (w, 4.4),
            (11.9, 4.4),
            (11.9, h),
            (0.0, h),
        ]),
        facade: vec![
            seg(0.0, 0.0, w, 0.0),
            seg(0.0, 0.0, 0.0, h),
            seg(w, 0.0, w, 4.4),
            seg(0.0, h, 3.6, h),
            seg(4.8, h, 11.9, h),
        ],
        circulation: vec![seg(3.6, h, 4.8, h)],
        rooms: three_bed_rooms(w, h, false),
        access: THREE_BED_ACCESS.to_vec(),
        entrance: "foyer",
    })
}

/// Three-bedroom on the full rectangle, with a storage closet off the
/// third bedroom.
fn ny_t1() -> (String, FloorPlan) {
    let (w, h) = (13.0, 8.0);
    let mut rooms = three_bed_rooms(w, h, false);
    for (id, _, poly) in &mut rooms {
        if *id == "bed_c" {
            *poly = rect(8.3, 4.4, 12.2, h);
        }
    }
    rooms.push(("store", RoomProgram::Extra, rect(12.2, 4.4, w, h)));
    let mut access = THREE_BED_ACCESS.to_vec();
    access.push(("store", "bed_c"));
    build(PlanDef {
        id: "ny-t1",
        boundary: rect(0.0, 0.0, w, h),
        facade: vec![
            seg(0.0, 0.0, w, 0.0),
            seg(0.0, 0.0, 0.0, h),
            seg(w, 0.0, w, h),
            seg(4.8, h, w, h),
        ],
        circulation: vec![seg(3.6, h, 4.8, h)],
        rooms,
        access,
        entrance: "foyer",
    })
}

/// zh-t1 mirrored east-west.
fn sg_t1() -> (String, FloorPlan) {
    let (w, h) = (13.0, 8.0);
    let base = PlanDef {
        id: "sg-t1",
        boundary: poly(&[
            (0.0, 0.0),
            (w, 0.0),
            (w, 4.4),
            (11.9, 4.4),
            (11.9, h),
            (0.0, h),
        ]),
        facade: vec![
            seg(0.0, 0.0, w, 0.0),
            seg(0.0, 0.0, 0.0, h),
            seg(w, 0.0, w, 4.4),
            seg(0.0, h, 3.6, h),
            seg(4.8, h, 11.9, h),
        ],
        circulation: vec![seg(3.6, h, 4.8, h)],
        rooms: three_bed_rooms(w, h, false),
        access: THREE_BED_ACCESS.to_vec(),
        entrance: "foyer",
    };
    build(PlanDef {
        id: base.id,
        boundary: mir_poly(&base.boundary, w),
        facade: base.facade.iter().map(|s| mir_seg(s, w)).collect(),
        circulation: base.circulation.iter().map(|s| mir_seg(s, w)).collect(),
        rooms: base
            .rooms
            .into_iter()
            .map(|(id, p, poly)| (id, p, mir_poly(&poly, w)))
            .collect(),
        access: base.access,
        entrance: base.entrance,
    })
}
