//! Numeric hypergraph descriptors, PCA over a corpus, and spectral
//! comparison of subdivision/access structure.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::floorplan::FloorPlan;
use crate::hypergraph::{Hypergraph, NodeKind, SubdivNode};

/// Identifies the descriptor layout; corpora are comparable only within one
/// feature-set version.
pub const FEATURE_SET_VERSION: &str = "fv1";

pub const FEATURE_NAMES: [&str; 10] = [
    "n_rooms",
    "n_bedrooms",
    "total_area",
    "access_edges_per_room",
    "mean_access_degree",
    "max_subdiv_depth",
    "mean_leaf_depth",
    "leaf_depth_variance",
    "facade_room_fraction",
    "boundary_compactness",
];

pub const FEATURE_LEN: usize = 10;

pub type FeatureVector = [f64; FEATURE_LEN];

/// Extract the fixed-order descriptor for a consistent hypergraph/plan pair.
pub fn features(hg: &Hypergraph, plan: &FloorPlan) -> Result<FeatureVector> {
    if hg.room_ids() != plan.room_ids() {
        return Err(Error::InconsistentPair(
            "hypergraph leaves and plan rooms differ".into(),
        ));
    }
    let n = plan.rooms.len() as f64;
    let bedrooms = plan.occupancy() as f64;
    let area = plan.boundary.area();
    let edges = hg.access_edges.len() as f64;
    let depths = hg.root.leaf_depths();
    let max_depth = depths.iter().copied().max().unwrap_or(0) as f64;
    let mean_depth = depths.iter().sum::<usize>() as f64 / depths.len() as f64;
    let var_depth = depths
        .iter()
        .map(|&d| (d as f64 - mean_depth).powi(2))
        .sum::<f64>()
        / depths.len() as f64;
    let facade_fraction = hg.facade_rooms.len() as f64 / n;
    let compactness = 4.0 * area.sqrt() / plan.boundary.perimeter();
    Ok([
        n,
        bedrooms,
        area,
        edges / n,
        2.0 * edges / n,
        max_depth,
        mean_depth,
        var_depth,
        facade_fraction,
        compactness,
    ])
}

/// A fitted principal-component model over standardized features.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PcaModel {
    pub feature_set: String,
    pub means: Vec<f64>,
    /// Population standard deviations; zero-variance features standardize to
    /// zero instead of being dropped.
    pub stds: Vec<f64>,
    /// Rows are components, orthonormal, sorted by descending eigenvalue.
    pub components: Vec<Vec<f64>>,
    /// Eigenvalue fractions; sum to one unless the matrix is degenerate.
    pub explained_variance: Vec<f64>,
    /// All features constant: eigenvalues vanish and the projection is
    /// meaningless.
    pub degenerate_variance: bool,
}

pub fn pca_fit(rows: &[FeatureVector]) -> Result<PcaModel> {
    let n = rows.len();
    if n < 2 {
        return Err(Error::TooFewSamples(n));
    }
    let k = FEATURE_LEN;
    let mut means = vec![0.0; k];
    for row in rows {
        for (m, v) in means.iter_mut().zip(row) {
            *m += v;
        }
    }
    for m in &mut means {
        *m /= n as f64;
    }
    let mut stds = vec![0.0; k];
    for row in rows {
        for j in 0..k {
            stds[j] += (row[j] - means[j]).powi(2);
        }
    }
    for s in &mut stds {
        *s = (*s / n as f64).sqrt();
    }

    // standardized matrix; constant columns become zero columns
    let z = DMatrix::from_fn(n, k, |i, j| {
        if stds[j] > 1e-12 {
            (rows[i][j] - means[j]) / stds[j]
        } else {
            0.0
        }
    });
    let cov = (z.transpose() * &z) / n as f64;
    let eig = SymmetricEigen::new(cov);

    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));

    let total: f64 = eig.eigenvalues.iter().map(|&l| l.max(0.0)).sum();
    let degenerate = total < 1e-12;
    let mut components = Vec::with_capacity(k);
    let mut explained = Vec::with_capacity(k);
    for &idx in &order {
        let col = eig.eigenvectors.column(idx);
        let mut v: Vec<f64> = col.iter().copied().collect();
        // deterministic sign: the largest-magnitude entry is positive
        let lead = v
            .iter()
            .enumerate()
            .max_by(|(_, a), (_, b)| a.abs().total_cmp(&b.abs()))
            .map(|(i, _)| i)
            .unwrap_or(0);
        if v[lead] < 0.0 {
            for x in &mut v {
                *x = -*x;
            }
        }
        components.push(v);
        explained.push(if degenerate {
            0.0
        } else {
            eig.eigenvalues[idx].max(0.0) / total
        });
    }
    Ok(PcaModel {
        feature_set: FEATURE_SET_VERSION.into(),
        means,
        stds,
        components,
        explained_variance: explained,
        degenerate_variance: degenerate,
    })
}

impl PcaModel {
    pub fn standardize(&self, row: &FeatureVector) -> Vec<f64> {
        (0..FEATURE_LEN)
            .map(|j| {
                if self.stds[j] > 1e-12 {
                    (row[j] - self.means[j]) / self.stds[j]
                } else {
                    0.0
                }
            })
            .collect()
    }

    /// Coordinates of a feature vector in component space.
    pub fn project(&self, row: &FeatureVector) -> Vec<f64> {
        let z = self.standardize(row);
        self.components
            .iter()
            .map(|c| c.iter().zip(&z).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Reconstruct the standardized row from all component coordinates.
    pub fn reconstruct_standardized(&self, projection: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; FEATURE_LEN];
        for (coord, comp) in projection.iter().zip(&self.components) {
            for (o, c) in out.iter_mut().zip(comp) {
                *o += coord * c;
            }
        }
        out
    }
}

/// Eigenvalue spectra of the subdivision-tree and access-graph adjacency
/// matrices, compared by Euclidean distance after zero-padding to a common
/// length (and re-sorting, so the padding interleaves correctly).
pub fn hypergraph_distance(a: &Hypergraph, b: &Hypergraph) -> (f64, f64) {
    let subdiv = spectral_distance(&subdivision_spectrum(&a.root), &subdivision_spectrum(&b.root));
    let access = spectral_distance(&access_spectrum(a), &access_spectrum(b));
    (subdiv, access)
}

pub(crate) fn subdivision_spectrum(root: &SubdivNode) -> Vec<f64> {
    // adjacency over all tree nodes, parent-child edges, undirected
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut count = 0usize;
    index_tree(root, &mut count, &mut edges);
    adjacency_eigenvalues(count, &edges)
}

fn index_tree(node: &SubdivNode, next: &mut usize, edges: &mut Vec<(usize, usize)>) -> usize {
    let me = *next;
    *next += 1;
    if let NodeKind::Internal { first, second, .. } = &node.kind {
        let f = index_tree(first, next, edges);
        edges.push((me, f));
        let s = index_tree(second, next, edges);
        edges.push((me, s));
    }
    me
}

pub(crate) fn access_spectrum(hg: &Hypergraph) -> Vec<f64> {
    let rooms: Vec<_> = hg.room_ids().into_iter().collect();
    let index = |r: &crate::floorplan::RoomId| rooms.iter().position(|x| x == r).unwrap();
    let edges: Vec<(usize, usize)> = hg
        .access_edges
        .iter()
        .map(|(a, b)| (index(a), index(b)))
        .collect();
    adjacency_eigenvalues(rooms.len(), &edges)
}

fn adjacency_eigenvalues(n: usize, edges: &[(usize, usize)]) -> Vec<f64> {
    if n == 0 {
        return Vec::new();
    }
    let mut m = DMatrix::zeros(n, n);
    for &(a, b) in edges {
        m[(a, b)] = 1.0;
        m[(b, a)] = 1.0;
    }
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    ev
}

fn spectral_distance(a: &[f64], b: &[f64]) -> f64 {
    let len = a.len().max(b.len());
    let mut pa = a.to_vec();
    let mut pb = b.to_vec();
    pa.resize(len, 0.0);
    pb.resize(len, 0.0);
    pa.sort_by(|x, y| y.total_cmp(x));
    pb.sort_by(|x, y| y.total_cmp(x));
    pa.iter()
        .zip(&pb)
        .map(|(x, y)| (x - y).powi(2))
        .sum::<f64>()
        .sqrt()
}
