//! Shared test oracles, independent of the library's implementation paths.

#![allow(dead_code)]

use plangraph::furnishing::{Clearance, FurnitureBlock, Placement};
use plangraph::geometry::{Point2, Polygon};
use rand::Rng;

// ---------------------------------------------------------------------------
// Monte-Carlo polygon area (split_at_ratio oracle)

/// Fraction of the polygon's area on the lower side of the cut, estimated by
/// rejection sampling, together with the binomial standard error.
pub fn mc_lower_fraction(
    poly: &Polygon,
    angle: f64,
    offset: f64,
    samples: usize,
    rng: &mut impl Rng,
) -> (f64, f64) {
    let (lo, hi) = poly.bbox();
    let normal = Point2::new(-angle.sin(), angle.cos());
    let mut inside = 0usize;
    let mut lower = 0usize;
    for _ in 0..samples {
        let p = Point2::new(rng.gen_range(lo.x..hi.x), rng.gen_range(lo.y..hi.y));
        if poly.contains_point_strict(p) {
            inside += 1;
            if p.dot(normal) <= offset {
                lower += 1;
            }
        }
    }
    let n = inside.max(1) as f64;
    let f = lower as f64 / n;
    (f, (f * (1.0 - f) / n).sqrt())
}

// ---------------------------------------------------------------------------
// grid flood-fill component counter (split connectivity oracle)

/// Number of connected components of the polygon region at a given grid
/// resolution, by 4-neighbor flood fill over cell centers.
pub fn grid_components(poly: &Polygon, cell: f64) -> usize {
    let (lo, hi) = poly.bbox();
    let nx = ((hi.x - lo.x) / cell).ceil() as usize + 1;
    let ny = ((hi.y - lo.y) / cell).ceil() as usize + 1;
    let mut grid = vec![false; nx * ny];
    for iy in 0..ny {
        for ix in 0..nx {
            let p = Point2::new(
                lo.x + (ix as f64 + 0.5) * cell,
                lo.y + (iy as f64 + 0.5) * cell,
            );
            grid[iy * nx + ix] = poly.contains_point_strict(p);
        }
    }
    let mut seen = vec![false; nx * ny];
    let mut components = 0;
    for start in 0..nx * ny {
        if !grid[start] || seen[start] {
            continue;
        }
        components += 1;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            if seen[i] || !grid[i] {
                continue;
            }
            seen[i] = true;
            let (ix, iy) = (i % nx, i / nx);
            if ix > 0 {
                stack.push(i - 1);
            }
            if ix + 1 < nx {
                stack.push(i + 1);
            }
            if iy > 0 {
                stack.push(i - nx);
            }
            if iy + 1 < ny {
                stack.push(i + nx);
            }
        }
    }
    components
}

// ---------------------------------------------------------------------------
// furniture placement oracle (exhaustive 10 cm grid, 4 orientations)

/// Independent rotated-rectangle geometry for the placement rules, written
/// from the constraint definitions rather than the production code.
#[derive(Clone, Copy)]
pub struct OracleRect {
    pub origin: Point2,
    pub dir: Point2,
    pub w: f64,
    pub d: f64,
}

impl OracleRect {
    pub fn corners(&self) -> [Point2; 4] {
        let n = Point2::new(-self.dir.y, self.dir.x);
        let at = |x: f64, y: f64| {
            Point2::new(
                self.origin.x + self.dir.x * x + n.x * y,
                self.origin.y + self.dir.y * x + n.y * y,
            )
        };
        [at(0.0, 0.0), at(self.w, 0.0), at(self.w, self.d), at(0.0, self.d)]
    }
}

fn project(corners: &[Point2; 4], axis: Point2) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for c in corners {
        let s = c.x * axis.x + c.y * axis.y;
        lo = lo.min(s);
        hi = hi.max(s);
    }
    (lo, hi)
}

/// Overlap deeper than 1e-6 between two convex quads (separating axes).
pub fn oracle_quads_overlap(a: &[Point2; 4], b: &[Point2; 4]) -> bool {
    for quad in [a, b] {
        for i in 0..4 {
            let e = Point2::new(quad[(i + 1) % 4].x - quad[i].x, quad[(i + 1) % 4].y - quad[i].y);
            let len = (e.x * e.x + e.y * e.y).sqrt();
            if len < 1e-9 {
                continue;
            }
            let axis = Point2::new(-e.y / len, e.x / len);
            let (a0, a1) = project(a, axis);
            let (b0, b1) = project(b, axis);
            if a1.min(b1) - a0.max(b0) <= 1e-6 {
                return false;
            }
        }
    }
    true
}

/// Quad inside polygon: corners inside (with tolerance), centroid inside,
/// and a sampled perimeter check in place of exact crossing tests.
pub fn oracle_rect_inside(quad: &[Point2; 4], poly: &Polygon) -> bool {
    let centroid = Point2::new(
        quad.iter().map(|p| p.x).sum::<f64>() / 4.0,
        quad.iter().map(|p| p.y).sum::<f64>() / 4.0,
    );
    if !poly.contains_point(centroid, 1e-6) {
        return false;
    }
    for c in quad {
        if !poly.contains_point(*c, 1e-6) {
            return false;
        }
    }
    // sample each edge; every point must stay inside
    for i in 0..4 {
        let a = quad[i];
        let b = quad[(i + 1) % 4];
        for k in 1..10 {
            let t = k as f64 / 10.0;
            let p = Point2::new(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t);
            if !poly.contains_point(p, 1e-6) {
                return false;
            }
        }
    }
    true
}

pub struct OraclePlacement {
    pub footprint: OracleRect,
    pub circulation: OracleRect,
}

fn oracle_rects(block: &FurnitureBlock, origin: Point2, dir: Point2) -> OraclePlacement {
    let n = Point2::new(-dir.y, dir.x);
    let c: Clearance = block.clearance;
    let circ_origin = Point2::new(
        origin.x - dir.x * c.left - n.x * c.back,
        origin.y - dir.y * c.left - n.y * c.back,
    );
    OraclePlacement {
        footprint: OracleRect {
            origin,
            dir,
            w: block.width(),
            d: block.depth(),
        },
        circulation: OracleRect {
            origin: circ_origin,
            dir,
            w: block.width() + c.left + c.right,
            d: block.depth() + c.back + c.front,
        },
    }
}

/// Validity of one candidate against the placed set and door zones, per the
/// zone rules: blocked inside the room, blocked never intersecting any other
/// blocked or circulation zone; circulation-circulation contact is legal.
pub fn oracle_candidate_valid(
    block: &FurnitureBlock,
    origin: Point2,
    dir: Point2,
    room: &Polygon,
    door_zones: &[[Point2; 4]],
    placed: &[(FurnitureBlock, Point2, Point2)],
) -> bool {
    let cand = oracle_rects(block, origin, dir);
    let fp = cand.footprint.corners();
    if !oracle_rect_inside(&fp, room) {
        return false;
    }
    for z in door_zones {
        if oracle_quads_overlap(&fp, z) {
            return false;
        }
    }
    for (pb, po, pd) in placed {
        let other = oracle_rects(pb, *po, *pd);
        if oracle_quads_overlap(&fp, &other.footprint.corners())
            || oracle_quads_overlap(&fp, &other.circulation.corners())
            || oracle_quads_overlap(&cand.circulation.corners(), &other.footprint.corners())
        {
            return false;
        }
    }
    true
}

/// Confirm a returned placement set against the zone rules (soundness).
pub fn oracle_confirms(
    room: &Polygon,
    door_zones: &[[Point2; 4]],
    blocks: &[FurnitureBlock],
    placements: &[Placement],
) -> bool {
    if blocks.len() != placements.len() {
        return false;
    }
    let mut placed: Vec<(FurnitureBlock, Point2, Point2)> = Vec::new();
    for (block, p) in blocks.iter().zip(placements) {
        let dir = Point2::new(p.rotation.cos(), p.rotation.sin());
        if !oracle_candidate_valid(block, p.origin, dir, room, door_zones, &placed) {
            return false;
        }
        placed.push((block.clone(), p.origin, dir));
    }
    true
}

/// Exhaustive placement search over a 10 cm grid and 4 axis orientations;
/// true iff some full assignment exists. Depth-first with no pruning beyond
/// per-candidate validity.
pub fn oracle_search(
    room: &Polygon,
    door_zones: &[[Point2; 4]],
    blocks: &[FurnitureBlock],
) -> bool {
    fn candidates(room: &Polygon) -> Vec<(Point2, Point2)> {
        let (lo, hi) = room.bbox();
        let dirs = [
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
            Point2::new(-1.0, 0.0),
            Point2::new(0.0, -1.0),
        ];
        let mut out = Vec::new();
        let mut y = lo.y;
        while y <= hi.y + 1e-9 {
            let mut x = lo.x;
            while x <= hi.x + 1e-9 {
                for d in dirs {
                    out.push((Point2::new(x, y), d));
                }
                x += 0.1;
            }
            y += 0.1;
        }
        out
    }

    fn dfs(
        room: &Polygon,
        door_zones: &[[Point2; 4]],
        blocks: &[FurnitureBlock],
        idx: usize,
        placed: &mut Vec<(FurnitureBlock, Point2, Point2)>,
        anchors: &[(Point2, Point2)],
    ) -> bool {
        if idx == blocks.len() {
            return true;
        }
        for &(origin, dir) in anchors {
            if oracle_candidate_valid(&blocks[idx], origin, dir, room, door_zones, placed) {
                placed.push((blocks[idx].clone(), origin, dir));
                if dfs(room, door_zones, blocks, idx + 1, placed, anchors) {
                    return true;
                }
                placed.pop();
            }
        }
        false
    }

    let anchors = candidates(room);
    dfs(room, door_zones, blocks, 0, &mut Vec::new(), &anchors)
}

// ---------------------------------------------------------------------------
// Jacobi eigensolver (PCA / spectra oracle)

/// Classic cyclic Jacobi eigendecomposition for small symmetric matrices.
/// Returns (eigenvalues, eigenvectors as columns), unsorted.
pub fn jacobi_eigen(matrix: &[Vec<f64>]) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = matrix.len();
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p][q] * a[p][q];
            }
        }
        if off < 1e-24 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].abs() < 1e-18 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let eigenvalues = (0..n).map(|i| a[i][i]).collect();
    (eigenvalues, v)
}

// ---------------------------------------------------------------------------
// random polygon generators

/// Random convex polygon: convex hull of points on a jittered circle.
pub fn random_convex_polygon(rng: &mut impl Rng, vertices: usize, radius: f64) -> Polygon {
    loop {
        let mut angles: Vec<f64> = (0..vertices)
            .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
            .collect();
        angles.sort_by(f64::total_cmp);
        let pts: Vec<Point2> = angles
            .iter()
            .map(|a| {
                let r = radius * rng.gen_range(0.5..1.0);
                Point2::new(r * a.cos() + radius, r * a.sin() + radius)
            })
            .collect();
        let hull = match Polygon::new(pts) {
            Ok(p) => p.convex_hull(),
            Err(_) => continue,
        };
        if hull.len() >= 3 {
            if let Ok(p) = Polygon::new(hull) {
                return p;
            }
        }
    }
}

/// Random star-shaped (generally nonconvex) simple polygon.
pub fn random_star_polygon(rng: &mut impl Rng, vertices: usize, radius: f64) -> Polygon {
    loop {
        let mut angles: Vec<f64> = (0..vertices)
            .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
            .collect();
        angles.sort_by(f64::total_cmp);
        angles.dedup_by(|a, b| (*a - *b).abs() < 1e-3);
        if angles.len() < 3 {
            continue;
        }
        let pts: Vec<Point2> = angles
            .iter()
            .map(|a| {
                let r = radius * rng.gen_range(0.3..1.0);
                Point2::new(r * a.cos() + radius, r * a.sin() + radius)
            })
            .collect();
        if let Ok(p) = Polygon::new(pts) {
            return p;
        }
    }
}
