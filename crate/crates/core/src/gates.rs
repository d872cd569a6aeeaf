//! Gates and distance-two gates with respect to a vertex set, computed in one
//! multi-source BFS each.
//!
//! A gate of `v` with respect to `A` is a vertex of `N(A)` lying on a shortest
//! path from `v` to every nearest vertex of `A`. A distance-two gate is the
//! same notion one level further out. The propagation rules here produce a
//! candidate for every vertex; whether it is a genuine gate is checked by
//! [`verify_gate`] against exact distances.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::traversal::{bump, DistanceMatrix, UNREACHED};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GateError {
    #[error("target set is empty")]
    EmptyTarget,
    #[error("vertices {0} and {1} of the target set are not adjacent")]
    NotAClique(usize, usize),
}

const NONE: u32 = u32::MAX;

/// Multi-source BFS returning distances and the visiting order.
fn layered_bfs(g: &Graph, sources: &[usize]) -> (Vec<u32>, Vec<usize>) {
    bump();
    let mut dist = vec![UNREACHED; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s] != 0 {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for w in g.neighbors(u) {
            if dist[w] == UNREACHED {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    (dist, order)
}

fn membership(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &a in set {
        m[a] = true;
    }
    m
}

/// Gate candidates with respect to a target set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateMap {
    pub target: Vec<usize>,
    /// `d(v, A)`.
    pub dist: Vec<u32>,
    gate: Vec<u32>,
    /// `|N(gate(v)) ∩ A|`; 0 on `A`.
    pub p_value: Vec<u32>,
}

impl GateMap {
    /// Candidate gate of `v`, `None` for members of the target set.
    pub fn gate(&self, v: usize) -> Option<usize> {
        (self.gate[v] != NONE).then_some(self.gate[v] as usize)
    }
}

/// Vertices of `N(A)` are their own candidates; further out, each vertex
/// inherits the candidate of the predecessor whose candidate sees the most of
/// `A` (minimum id on ties).
pub fn compute_gates(g: &Graph, target: &[usize]) -> Result<GateMap, GateError> {
    if target.is_empty() {
        return Err(GateError::EmptyTarget);
    }
    let n = g.n();
    let in_a = membership(n, target);
    let (dist, order) = layered_bfs(g, target);
    let mut gate = vec![NONE; n];
    let mut p_value = vec![0u32; n];
    for &v in &order {
        match dist[v] {
            0 => {}
            1 => {
                gate[v] = v as u32;
                p_value[v] = g.neighbors(v).filter(|&a| in_a[a]).count() as u32;
            }
            d => {
                let best = g
                    .neighbors(v)
                    .filter(|&u| dist[u] + 1 == d)
                    .fold(None, |best: Option<usize>, u| match best {
                        Some(b) if p_value[b] >= p_value[u] => Some(b),
                        _ => Some(u),
                    })
                    .expect("BFS predecessor exists");
                gate[v] = gate[best];
                p_value[v] = p_value[best];
            }
        }
    }
    let mut target = target.to_vec();
    target.sort_unstable();
    target.dedup();
    Ok(GateMap {
        target,
        dist,
        gate,
        p_value,
    })
}

/// Whether `candidate` lies on a shortest path from `v` to every vertex of
/// `proj(v, A)`.
pub fn verify_gate(dm: &DistanceMatrix, target: &[usize], v: usize, candidate: usize) -> bool {
    let proj = dm.projection(v, target);
    proj.iter()
        .all(|&a| dm.get(v, candidate) + dm.get(candidate, a) == dm.get(v, a))
}

/// Brute force: some vertex at distance 1 from `A` is a gate of `v`
/// (`v` outside `A`).
pub fn gate_exists(dm: &DistanceMatrix, target: &[usize], v: usize) -> bool {
    let d = dm.dist_to_set(v, target);
    (0..dm.n())
        .filter(|&w| dm.dist_to_set(w, target) == 1 && dm.get(v, w) + 1 == d)
        .any(|w| verify_gate(dm, target, v, w))
}

/// Distance-two gate candidates with respect to a clique `K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct D2GateMap {
    pub clique: Vec<usize>,
    pub dist: Vec<u32>,
    gate: Vec<u32>,
    /// `J_K(u)` for vertices at distance two from `K`: an independent subset
    /// of `N(u) ∩ N(K)` whose neighbourhoods in `K` should tile `proj(u, K)`.
    /// Vertices of `N(K)` carry `[v]`; others are empty.
    pub j_set: Vec<Vec<usize>>,
    /// Sum of `|N(w) ∩ K|` over the `J` set of the candidate.
    pub p_value: Vec<u32>,
}

impl D2GateMap {
    /// Candidate of `v` (itself at distance 1 or 2), `None` inside `K`.
    pub fn gate(&self, v: usize) -> Option<usize> {
        (self.gate[v] != NONE).then_some(self.gate[v] as usize)
    }

    /// `J_K(v*)` for the candidate of `v`.
    pub fn j_of(&self, v: usize) -> &[usize] {
        self.gate(v).map_or(&[], |s| self.j_set[s].as_slice())
    }
}

pub fn compute_d2_gates(g: &Graph, clique: &[usize]) -> Result<D2GateMap, GateError> {
    if clique.is_empty() {
        return Err(GateError::EmptyTarget);
    }
    for (i, &a) in clique.iter().enumerate() {
        for &b in &clique[i + 1..] {
            if a != b && !g.has_edge(a, b) {
                return Err(GateError::NotAClique(a.min(b), a.max(b)));
            }
        }
    }
    Ok(d2_gates_unchecked(g, clique))
}

/// [`compute_d2_gates`] without the clique check, for searches that must run
/// to completion on any input.
pub(crate) fn d2_gates_unchecked(g: &Graph, clique: &[usize]) -> D2GateMap {
    let n = g.n();
    let in_k = membership(n, clique);
    let (dist, order) = layered_bfs(g, clique);
    let mut gate = vec![NONE; n];
    let mut p_value = vec![0u32; n];
    let mut j_set = vec![Vec::new(); n];
    let mut mark = vec![false; n];
    for &v in &order {
        match dist[v] {
            0 => {}
            1 => {
                gate[v] = v as u32;
                p_value[v] = g.neighbors(v).filter(|&a| in_k[a]).count() as u32;
                j_set[v] = vec![v];
            }
            2 => {
                let mut cands: Vec<usize> = g.neighbors(v).filter(|&w| dist[w] == 1).collect();
                cands.sort_by_key(|&w| (std::cmp::Reverse(p_value[w]), w));
                let earlier = earlier_adjacent_flags(g, &cands, &mut mark);
                let j: Vec<usize> = cands
                    .iter()
                    .zip(&earlier)
                    .filter(|(_, &skip)| !skip)
                    .map(|(&w, _)| w)
                    .collect();
                p_value[v] = j.iter().map(|&w| p_value[w]).sum();
                gate[v] = v as u32;
                j_set[v] = j;
            }
            d => {
                let best = g
                    .neighbors(v)
                    .filter(|&u| dist[u] + 1 == d)
                    .fold(None, |best: Option<usize>, u| match best {
                        Some(b) if p_value[b] >= p_value[u] => Some(b),
                        _ => Some(u),
                    })
                    .expect("BFS predecessor exists");
                gate[v] = gate[best];
                p_value[v] = p_value[best];
            }
        }
    }
    let mut clique = clique.to_vec();
    clique.sort_unstable();
    clique.dedup();
    D2GateMap {
        clique,
        dist,
        gate,
        j_set,
        p_value,
    }
}

/// `flags[i]` is set when `order[i]` is adjacent to some `order[j]`, `j < i`.
/// Each vertex scans the shorter of its adjacency list and the prefix.
/// `mark` must be all-false on entry and is restored before returning.
pub fn earlier_adjacent_flags(g: &Graph, order: &[usize], mark: &mut [bool]) -> Vec<bool> {
    let mut flags = Vec::with_capacity(order.len());
    for (i, &x) in order.iter().enumerate() {
        let hit = if g.degree(x) <= i {
            g.neighbors(x).any(|w| mark[w])
        } else {
            order[..i].iter().any(|&y| g.has_edge(x, y))
        };
        flags.push(hit);
        mark[x] = true;
    }
    for &x in order {
        mark[x] = false;
    }
    flags
}

/// Per edge (in [`Graph::edges`] order): whether it lies on a triangle.
/// Degree-ordered enumeration: each edge is oriented towards its endpoint of
/// larger `(degree, id)` and triangles are found by intersecting out-lists.
pub fn triangle_edges(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let rank = |v: usize| (g.degree(v), v);
    let out: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbors(v).filter(|&w| rank(w) > rank(v)).collect())
        .collect();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let index_of = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        edges.binary_search(&(a, b)).expect("edge present")
    };
    let mut flag = vec![false; edges.len()];
    let mut mark = vec![false; n];
    for v in 0..n {
        for &w in &out[v] {
            mark[w] = true;
        }
        for &w in &out[v] {
            for &x in &out[w] {
                if mark[x] {
                    flag[index_of(v, w)] = true;
                    flag[index_of(w, x)] = true;
                    flag[index_of(v, x)] = true;
                }
            }
        }
        for &w in &out[v] {
            mark[w] = false;
        }
    }
    flag
}
