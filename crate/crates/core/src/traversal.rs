//! Breadth-first search, canonical shortest paths, intervals and slices.
//!
//! Every traversal (single- or multi-source) bumps a thread-local counter so
//! callers can check how many linear-time passes an algorithm performed; see
//! [`count_bfs`].

use std::cell::Cell;
use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;
use crate::par::{self, Execution};

/// Distance value for vertices not reached by a restricted traversal.
pub const UNREACHED: u32 = u32::MAX;

thread_local! {
    static BFS_CALLS: Cell<u64> = const { Cell::new(0) };
}

pub(crate) fn bump() {
    BFS_CALLS.with(|c| c.set(c.get() + 1));
}

/// Number of traversals started on the current thread so far.
pub fn bfs_calls() -> u64 {
    BFS_CALLS.with(Cell::get)
}

/// Runs `f` and returns its result together with the number of traversals
/// it started on this thread.
pub fn count_bfs<R>(f: impl FnOnce() -> R) -> (R, u64) {
    let before = bfs_calls();
    let out = f();
    (out, bfs_calls() - before)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TraversalError {
    #[error("slice index {k} is outside 0..={dist}")]
    SliceOutOfRange { k: u32, dist: u32 },
}

/// Hop distances and canonical BFS parents from one source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<u32>,
    /// Minimum-id neighbour one level closer to the source; the source is its
    /// own parent.
    pub parent: Vec<u32>,
}

impl DistanceRow {
    #[inline]
    pub fn get(&self, v: usize) -> u32 {
        self.dist[v]
    }

    /// Eccentricity of the source.
    pub fn eccentricity(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// All vertices at maximum distance from the source, ascending.
    pub fn furthest(&self) -> Vec<usize> {
        let e = self.eccentricity();
        (0..self.dist.len()).filter(|&v| self.dist[v] == e).collect()
    }

    /// Minimum-id vertex at maximum distance from the source.
    pub fn furthest_min(&self) -> usize {
        let e = self.eccentricity();
        self.dist.iter().position(|&d| d == e).unwrap_or(self.source)
    }

    /// Canonical shortest path from the source to `target`.
    pub fn path_to(&self, target: usize) -> Vec<usize> {
        let mut path = Vec::with_capacity(self.dist[target] as usize + 1);
        let mut v = target;
        path.push(v);
        while v != self.source {
            v = self.parent[v] as usize;
            path.push(v);
        }
        path.reverse();
        path
    }
}

/// Breadth-first search from `source` with minimum-id parents.
pub fn bfs(g: &Graph, source: usize) -> DistanceRow {
    let dist = distances_from(g, std::slice::from_ref(&source));
    let mut parent = vec![0u32; g.n()];
    for v in 0..g.n() {
        parent[v] = if v == source {
            v as u32
        } else {
            // adjacency is sorted, so the first hit is the minimum id
            *g.adj(v)
                .iter()
                .find(|&&w| dist[w as usize] + 1 == dist[v])
                .expect("connected graph: every non-source vertex has a BFS parent")
        };
    }
    DistanceRow {
        source,
        dist,
        parent,
    }
}

/// Distances only (no parents) from `source`.
pub fn bfs_dist(g: &Graph, source: usize) -> Vec<u32> {
    distances_from(g, std::slice::from_ref(&source))
}

/// Multi-source BFS: `d(v, sources)` for every `v`.
pub fn distances_from(g: &Graph, sources: &[usize]) -> Vec<u32> {
    bump();
    let mut dist = vec![UNREACHED; g.n()];
    let mut queue = VecDeque::with_capacity(g.n());
    for &s in sources {
        if dist[s] != 0 {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u] + 1;
        for w in g.neighbors(u) {
            if dist[w] == UNREACHED {
                dist[w] = du;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// BFS from `source` that only walks through vertices with `allowed[v]`.
/// Unreached vertices get [`UNREACHED`].
pub fn bfs_within(g: &Graph, source: usize, allowed: &[bool]) -> Vec<u32> {
    bump();
    let mut dist = vec![UNREACHED; g.n()];
    if !allowed[source] {
        return dist;
    }
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u] + 1;
        for w in g.neighbors(u) {
            if allowed[w] && dist[w] == UNREACHED {
                dist[w] = du;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// The path obtained by following canonical BFS(x) parents from `y`.
pub fn canonical_path(g: &Graph, x: usize, y: usize) -> Vec<usize> {
    if x == y {
        return vec![x];
    }
    bfs(g, x).path_to(y)
}

/// `I(u, v)`, ascending.
pub fn interval(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    let du = bfs_dist(g, u);
    let dv = bfs_dist(g, v);
    interval_from_rows(&du, &dv)
}

/// `I(u, v)` from the two BFS rows of its endpoints.
pub fn interval_from_rows(du: &[u32], dv: &[u32]) -> Vec<usize> {
    let d = dv[position_of_zero(du)];
    (0..du.len()).filter(|&x| du[x] + dv[x] == d).collect()
}

fn position_of_zero(row: &[u32]) -> usize {
    row.iter().position(|&d| d == 0).expect("row has a source")
}

/// `S_k(u, v)`: interval vertices at distance `k` from `u`, ascending.
pub fn slice(g: &Graph, u: usize, v: usize, k: u32) -> Result<Vec<usize>, TraversalError> {
    let du = bfs_dist(g, u);
    let dv = bfs_dist(g, v);
    slice_from_rows(&du, &dv, k)
}

pub fn slice_from_rows(du: &[u32], dv: &[u32], k: u32) -> Result<Vec<usize>, TraversalError> {
    let d = dv[position_of_zero(du)];
    if k > d {
        return Err(TraversalError::SliceOutOfRange { k, dist: d });
    }
    Ok((0..du.len())
        .filter(|&x| du[x] == k && du[x] + dv[x] == d)
        .collect())
}

/// Dense all-pairs distance table (`n * n` entries).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Self {
        Self::with_execution(g, Execution::default())
    }

    pub fn with_execution(g: &Graph, exec: Execution) -> Self {
        let n = g.n();
        let rows = par::map_indices(n, exec, |s| bfs_dist(g, s));
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            data.extend_from_slice(&r);
        }
        DistanceMatrix { n, data }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn ecc(&self, u: usize) -> u32 {
        self.row(u).iter().copied().max().unwrap_or(0)
    }

    #[inline]
    pub fn in_interval(&self, u: usize, v: usize, x: usize) -> bool {
        self.get(u, x) + self.get(x, v) == self.get(u, v)
    }

    /// `d(v, set) = min over the set`.
    pub fn dist_to_set(&self, v: usize, set: &[usize]) -> u32 {
        set.iter().map(|&a| self.get(v, a)).min().unwrap_or(UNREACHED)
    }

    pub fn interval(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&x| self.in_interval(u, v, x)).collect()
    }

    /// Metric projection of `v` onto `set`: the members nearest to `v`.
    pub fn projection(&self, v: usize, set: &[usize]) -> Vec<usize> {
        let d = self.dist_to_set(v, set);
        let mut p: Vec<usize> = set.iter().copied().filter(|&a| self.get(v, a) == d).collect();
        p.sort_unstable();
        p
    }
}
