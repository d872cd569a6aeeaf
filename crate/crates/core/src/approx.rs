//! Linear-time approximations from a constant number of BFS sweeps: double
//! sweeps, mutually distant pairs, middle vertices, and per-vertex
//! eccentricity lower bounds.
//!
//! All furthest-vertex ties resolve to the minimum id.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::traversal::{bfs, DistanceRow};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ApproxError {
    #[error("vertices {x} and {y} are not mutually distant (e({x})={ex}, e({y})={ey}, d={d})")]
    NotMutuallyDistant {
        x: usize,
        y: usize,
        ex: u32,
        ey: u32,
        d: u32,
    },
}

/// Record of the furthest-vertex iteration `v_{j+1} = min F(v_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepTrace {
    pub seed: usize,
    /// `v_1 = min F(seed)`, `v_2`, ...
    pub sequence: Vec<usize>,
    /// `distances[j] = d(sequence[j], sequence[j + 1])`.
    pub distances: Vec<u32>,
    pub final_pair: (usize, usize),
}

impl SweepTrace {
    pub fn pair_distance(&self) -> u32 {
        self.distances.last().copied().unwrap_or(0)
    }
}

/// Which pair a report was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairMode {
    /// Two sweeps from vertex 0; linear time, weaker bounds.
    Linear,
    /// Iterated sweeps until a mutually distant pair is reached.
    Mdp,
}

/// Middle-vertex rounding along a canonical path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rounding {
    Floor,
    Ceil,
}

/// A sweep result with the BFS rows of both endpoints kept around.
#[derive(Debug, Clone)]
pub struct SweptPair {
    pub mode: PairMode,
    pub x: DistanceRow,
    pub y: DistanceRow,
    pub trace: Option<SweepTrace>,
}

impl SweptPair {
    pub fn distance(&self) -> u32 {
        self.x.get(self.y.source)
    }

    /// Vertex at index `floor(d/2)` (or `ceil`) on the canonical path from
    /// `x` to `y`.
    pub fn middle(&self, rounding: Rounding) -> usize {
        middle_on_row(&self.x, self.y.source, rounding)
    }

    /// `max(d(x, v), d(y, v))` for every `v`.
    pub fn lower_bounds(&self) -> Vec<u32> {
        self.x
            .dist
            .iter()
            .zip(&self.y.dist)
            .map(|(&a, &b)| a.max(b))
            .collect()
    }
}

fn middle_on_row(row: &DistanceRow, target: usize, rounding: Rounding) -> usize {
    let path = row.path_to(target);
    let d = path.len() - 1;
    let idx = match rounding {
        Rounding::Floor => d / 2,
        Rounding::Ceil => d.div_ceil(2),
    };
    path[idx]
}

/// `x = min F(z)`, `y = min F(x)`.
pub fn double_sweep(g: &Graph, z: usize) -> (usize, usize) {
    let p = sweep_linear(g, z);
    (p.x.source, p.y.source)
}

/// Double sweep keeping both rows (BFS from `z`, then from `x`, then from `y`).
pub fn sweep_linear(g: &Graph, z: usize) -> SweptPair {
    let x = bfs(g, z).furthest_min();
    let row_x = bfs(g, x);
    let y = row_x.furthest_min();
    let row_y = bfs(g, y);
    SweptPair {
        mode: PairMode::Linear,
        x: row_x,
        y: row_y,
        trace: None,
    }
}

/// Iterates furthest vertices from `z` until the distance stops growing.
pub fn mutually_distant_pair(g: &Graph, z: usize) -> SweepTrace {
    sweep_mdp(g, z).trace.expect("mdp sweeps carry a trace")
}

pub fn sweep_mdp(g: &Graph, z: usize) -> SweptPair {
    let first = bfs(g, z).furthest_min();
    let mut prev = bfs(g, first);
    let mut sequence = vec![first];
    let mut distances = Vec::new();
    loop {
        let next = prev.furthest_min();
        let d = prev.get(next);
        sequence.push(next);
        distances.push(d);
        let row = bfs(g, next);
        if row.eccentricity() == d {
            let trace = SweepTrace {
                seed: z,
                sequence,
                distances,
                final_pair: (prev.source, next),
            };
            return SweptPair {
                mode: PairMode::Mdp,
                x: prev,
                y: row,
                trace: Some(trace),
            };
        }
        prev = row;
    }
}

pub fn sweep(g: &Graph, mode: PairMode) -> SweptPair {
    match mode {
        PairMode::Linear => sweep_linear(g, 0),
        PairMode::Mdp => sweep_mdp(g, 0),
    }
}

/// Vertex at index `floor(d(x, y) / 2)` on the canonical `x`-`y` path.
pub fn middle_vertex(g: &Graph, x: usize, y: usize) -> usize {
    middle_on_row(&bfs(g, x), y, Rounding::Floor)
}

/// Vertex at index `ceil(d(x, y) / 2)` on the canonical `x`-`y` path.
pub fn middle_vertex_ceil(g: &Graph, x: usize, y: usize) -> usize {
    middle_on_row(&bfs(g, x), y, Rounding::Ceil)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadiusEstimate {
    pub center: usize,
    pub pair: (usize, usize),
    pub pair_distance: u32,
    pub mode: PairMode,
    pub trace: Option<SweepTrace>,
}

/// Middle vertex of a double-sweep pair (`Linear`) or of a mutually distant
/// pair (`Mdp`), starting from vertex 0.
pub fn approx_radius(g: &Graph, mode: PairMode) -> RadiusEstimate {
    let p = sweep(g, mode);
    RadiusEstimate {
        center: p.middle(Rounding::Floor),
        pair: (p.x.source, p.y.source),
        pair_distance: p.distance(),
        trace: p.trace,
        mode,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterEstimate {
    /// A vertex whose eccentricity is the estimate.
    pub witness: usize,
    pub partner: usize,
    pub lower: u32,
    pub mode: PairMode,
}

/// Lower bound on the diameter: `e(min F(0))` in linear mode, the pair
/// distance in mdp mode. Both are realized distances.
pub fn approx_diameter(g: &Graph, mode: PairMode) -> DiameterEstimate {
    let p = sweep(g, mode);
    DiameterEstimate {
        witness: p.x.source,
        partner: p.y.source,
        lower: p.distance(),
        mode,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxEccReport {
    pub pair: (usize, usize),
    pub lower: Vec<u32>,
    pub mode: PairMode,
    /// Middle vertex of the pair.
    pub radius_witness: usize,
    /// `x`, whose eccentricity equals the pair distance.
    pub diameter_witness: usize,
    pub pair_distance: u32,
}

impl ApproxEccReport {
    fn from_pair(p: &SweptPair) -> Self {
        ApproxEccReport {
            pair: (p.x.source, p.y.source),
            lower: p.lower_bounds(),
            mode: p.mode,
            radius_witness: p.middle(Rounding::Floor),
            diameter_witness: p.x.source,
            pair_distance: p.distance(),
        }
    }
}

/// `max(d(x, v), d(y, v))` for a mutually distant pair `(x, y)`.
pub fn ecc_lower_bounds(g: &Graph, x: usize, y: usize) -> Result<ApproxEccReport, ApproxError> {
    let rx = bfs(g, x);
    let ry = bfs(g, y);
    let (ex, ey, d) = (rx.eccentricity(), ry.eccentricity(), rx.get(y));
    if ex != d || ey != d {
        return Err(ApproxError::NotMutuallyDistant { x, y, ex, ey, d });
    }
    Ok(ApproxEccReport::from_pair(&SweptPair {
        mode: PairMode::Mdp,
        x: rx,
        y: ry,
        trace: None,
    }))
}

/// Eccentricity lower bounds from the pair found in `mode`.
pub fn approx_eccentricities(g: &Graph, mode: PairMode) -> ApproxEccReport {
    ApproxEccReport::from_pair(&sweep(g, mode))
}
