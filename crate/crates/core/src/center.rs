//! Local search for central vertices of alpha_1-metric graphs.
//!
//! [`descend_rad2`] and [`local_min_step`] inspect one vertex and either move
//! to a neighbour of smaller eccentricity or certify a stopping condition.
//! [`find_rad_plus_1`], [`find_central_alpha1`] and
//! [`find_central_alpha1_delta`] chain them into full searches. Every search
//! runs to completion on any connected graph; exactness is only promised on
//! alpha_1-metric inputs (and, for the last one, under the triangle
//! condition).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::approx::{self, PairMode};
use crate::gates::{compute_gates, d2_gates_unchecked, GateMap};
use crate::graph::Graph;
use crate::oracle::EccReport;
use crate::traversal::{bfs, bfs_within, DistanceRow, UNREACHED};
use crate::tree::{bfs_tree, SpanningTree, TreeError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CenterError {
    #[error("classification violation: {0}")]
    ClassificationViolation(String),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// Which projection machinery [`local_min_step`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Distance-two gates; valid on every alpha_1-metric graph.
    General,
    /// Plain gates; needs the triangle condition.
    TriangleCondition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Descent {
    Improved { y: usize, ecc: u32 },
    AtMostRadPlusOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum LocalOutcome {
    Improved { y: usize, ecc: u32 },
    LocalMinimum,
}

/// Result of one local step at `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step<O> {
    pub x: usize,
    pub ecc: u32,
    pub outcome: O,
}

fn closed_neighborhood(g: &Graph, x: usize) -> Vec<usize> {
    let mut d = vec![x];
    d.extend(g.neighbors(x));
    d
}

fn ecc_of(g: &Graph, v: usize) -> u32 {
    bfs(g, v).eccentricity()
}

/// `N(x) ∩ ⋂ N(z*)` over the given members `z` of `F(x)`, where `z*` is the
/// gate of `z` with respect to `D(x, 1)`. An empty family yields `N(x)`.
fn common_gate_neighbors(g: &Graph, x: usize, gates: &GateMap, members: &[usize]) -> Vec<usize> {
    let mut distinct: Vec<usize> = members.iter().filter_map(|&z| gates.gate(z)).collect();
    distinct.sort_unstable();
    distinct.dedup();
    let mut hits = vec![0u32; g.n()];
    for &s in &distinct {
        for w in g.neighbors(s) {
            hits[w] += 1;
        }
    }
    g.neighbors(x)
        .filter(|&y| hits[y] as usize == distinct.len())
        .collect()
}

/// Neighbours of `x` on a shortest path to every furthest vertex of `x`,
/// plus the gate map used to find them.
fn toward_all_furthest(g: &Graph, row: &DistanceRow) -> (Vec<usize>, GateMap, Vec<usize>) {
    let x = row.source;
    let gates = compute_gates(g, &closed_neighborhood(g, x)).expect("closed neighbourhood is nonempty");
    let far = row.furthest();
    let k = common_gate_neighbors(g, x, &gates, &far);
    (k, gates, far)
}

/// Either a neighbour of smaller eccentricity or a certificate that
/// `e(x) <= rad + 1` (on alpha_1-metric graphs). Three BFS runs.
pub fn descend_rad2(g: &Graph, x: usize) -> Step<Descent> {
    descend_rad2_from(g, &bfs(g, x))
}

fn descend_rad2_from(g: &Graph, row: &DistanceRow) -> Step<Descent> {
    let (x, e) = (row.source, row.eccentricity());
    let step = |outcome| Step { x, ecc: e, outcome };
    if e < 2 {
        return step(Descent::AtMostRadPlusOne);
    }
    let (k, _, _) = toward_all_furthest(g, row);
    let Some(&y) = k.first() else {
        return step(Descent::AtMostRadPlusOne);
    };
    let ey = ecc_of(g, y);
    if ey < e {
        step(Descent::Improved { y, ecc: ey })
    } else {
        step(Descent::AtMostRadPlusOne)
    }
}

/// Either a neighbour of smaller eccentricity or a certificate that `x` is a
/// local minimum of the eccentricity function. At most four BFS runs.
pub fn local_min_step(g: &Graph, x: usize, variant: Variant) -> Step<LocalOutcome> {
    local_min_step_from(g, &bfs(g, x), variant)
}

fn local_min_step_from(g: &Graph, row: &DistanceRow, variant: Variant) -> Step<LocalOutcome> {
    let (x, e) = (row.source, row.eccentricity());
    let step = |outcome| Step { x, ecc: e, outcome };
    let n = g.n();
    if e <= 1 {
        return step(LocalOutcome::LocalMinimum);
    }
    if e == 2 {
        return match g.neighbors(x).find(|&y| g.degree(y) + 1 == n) {
            Some(y) => step(LocalOutcome::Improved { y, ecc: 1 }),
            None => step(LocalOutcome::LocalMinimum),
        };
    }
    let (k, _, _) = toward_all_furthest(g, row);
    if k.is_empty() {
        return step(LocalOutcome::LocalMinimum);
    }

    // weight[w] counts the far vertices whose projection onto K contains
    // N(w) ∩ K through w
    let mut weight = vec![0u32; n];
    let far_count = match variant {
        Variant::TriangleCondition => {
            let gm = compute_gates(g, &k).expect("K is nonempty");
            if gm.dist.iter().any(|&d| d >= e) {
                return step(LocalOutcome::LocalMinimum);
            }
            let mut count = 0;
            for v in (0..n).filter(|&v| gm.dist[v] == e - 1) {
                weight[gm.gate(v).expect("outside K")] += 1;
                count += 1;
            }
            count
        }
        Variant::General => {
            let dm = d2_gates_unchecked(g, &k);
            if dm.dist.iter().any(|&d| d >= e) {
                return step(LocalOutcome::LocalMinimum);
            }
            let mut count = 0;
            for v in (0..n).filter(|&v| dm.dist[v] == e - 1) {
                for &w in dm.j_of(v) {
                    weight[w] += 1;
                }
                count += 1;
            }
            count
        }
    };
    let mut in_k = vec![false; n];
    for &y in &k {
        in_k[y] = true;
    }
    let candidate = k.iter().copied().find(|&y| {
        let covered: u32 = g.neighbors(y).filter(|&w| !in_k[w]).map(|w| weight[w]).sum();
        covered == far_count
    });
    let Some(y) = candidate else {
        return step(LocalOutcome::LocalMinimum);
    };
    let ey = ecc_of(g, y);
    if ey < e {
        step(LocalOutcome::Improved { y, ecc: ey })
    } else {
        step(LocalOutcome::LocalMinimum)
    }
}

/// Follows [`local_min_step`] from `x` until it reports a local minimum.
fn descend_to_local_min(g: &Graph, x: usize, variant: Variant) -> (usize, u32) {
    let mut cur = x;
    loop {
        let s = local_min_step(g, cur, variant);
        match s.outcome {
            LocalOutcome::Improved { y, .. } => cur = y,
            LocalOutcome::LocalMinimum => return (cur, s.ecc),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Found {
    pub vertex: usize,
    pub ecc: u32,
}

/// A vertex with `e <= rad + 1`: sweep middle, then [`descend_rad2`] until it
/// stops improving.
pub fn find_rad_plus_1(g: &Graph) -> Found {
    let mut x = approx::approx_radius(g, PairMode::Linear).center;
    loop {
        let s = descend_rad2(g, x);
        match s.outcome {
            Descent::Improved { y, .. } => x = y,
            Descent::AtMostRadPlusOne => return Found { vertex: x, ecc: s.ecc },
        }
    }
}

/// How an iteration of [`find_central_alpha1`] ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IterationEnd {
    /// Low degree: best vertex found by local steps around `x`.
    LowDegree,
    /// No candidate left; `x` is returned.
    Exhausted,
    /// A probe had smaller eccentricity than `x`.
    ProbeImproved,
    /// A probe tied with `x` and becomes the next `x`.
    ProbeTied,
    /// Descending from a worse probe failed; `x` is returned.
    ProbeStuck,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Probe {
    pub y: usize,
    pub ecc: u32,
}

/// One iteration of [`find_central_alpha1`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchState {
    pub iteration: usize,
    pub x: usize,
    pub ecc_x: u32,
    /// `|X_i|`, the candidate set on entry.
    pub candidates: usize,
    /// Members of `X_{i+1}` (empty when the iteration stopped before it).
    pub next_candidates: Vec<usize>,
    pub witness: Option<usize>,
    pub probes: Vec<Probe>,
    pub end: IterationEnd,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralSearch {
    pub vertex: usize,
    pub ecc: u32,
    pub start: Found,
    pub trace: Vec<SearchState>,
}

/// Degree at or below which an iteration switches to exhaustive local steps.
pub fn low_degree_threshold(m: usize) -> usize {
    (m as f64).powf(0.29).floor() as usize
}

/// Exact central vertex on alpha_1-metric graphs.
pub fn find_central_alpha1(g: &Graph) -> CentralSearch {
    find_central_alpha1_with(g, low_degree_threshold(g.m()))
}

/// [`find_central_alpha1`] with an explicit low-degree cut-off; 0 forces
/// the candidate-shrinking iterations at every vertex of positive degree.
pub fn find_central_alpha1_with(g: &Graph, threshold: usize) -> CentralSearch {
    let start = find_rad_plus_1(g);
    let n = g.n();
    let mut in_x = vec![true; n];
    let mut size = n;
    let mut x = start.vertex;
    let mut row_x = bfs(g, x);
    let mut trace = Vec::new();

    for iteration in 0.. {
        let e_x = row_x.eccentricity();
        let mut state = SearchState {
            iteration,
            x,
            ecc_x: e_x,
            candidates: size,
            next_candidates: Vec::new(),
            witness: None,
            probes: Vec::new(),
            end: IterationEnd::Exhausted,
        };
        let finish = |mut state: SearchState, end, v: usize, e: u32, trace: &mut Vec<SearchState>| {
            state.end = end;
            trace.push(state);
            (v, e)
        };

        let result = 'iter: {
            if g.degree(x) <= threshold {
                let best = closed_neighborhood(g, x)
                    .into_iter()
                    .map(|w| {
                        let s = local_min_step(g, w, Variant::General);
                        match s.outcome {
                            LocalOutcome::Improved { y, ecc } => (ecc, y),
                            LocalOutcome::LocalMinimum => (s.ecc, w),
                        }
                    })
                    .min()
                    .expect("closed neighbourhood is nonempty");
                break 'iter Some(finish(state, IterationEnd::LowDegree, best.1, best.0, &mut trace));
            }

            let z = row_x.furthest_min();
            state.witness = Some(z);
            let row_z = bfs(g, z);
            for v in 0..n {
                if in_x[v] && (row_x.get(v) > 5 || row_z.get(v) + 1 > e_x) {
                    in_x[v] = false;
                    size -= 1;
                }
            }
            state.next_candidates = (0..n).filter(|&v| in_x[v]).collect();
            let Some(&first) = state.next_candidates.first() else {
                break 'iter Some(finish(state, IterationEnd::Exhausted, x, e_x, &mut trace));
            };

            let mut y = first;
            let mut row_y = bfs(g, y);
            loop {
                let e_y = row_y.eccentricity();
                state.probes.push(Probe { y, ecc: e_y });
                if e_y < e_x {
                    break 'iter Some(finish(state, IterationEnd::ProbeImproved, y, e_y, &mut trace));
                }
                if e_y == e_x {
                    trace.push(SearchState {
                        end: IterationEnd::ProbeTied,
                        ..state
                    });
                    x = y;
                    row_x = row_y;
                    break 'iter None;
                }
                let (k, _, _) = toward_all_furthest(g, &row_y);
                let Some(y2) = k.into_iter().find(|&v| in_x[v]) else {
                    break 'iter Some(finish(state, IterationEnd::ProbeStuck, x, e_x, &mut trace));
                };
                let row_y2 = bfs(g, y2);
                if row_y2.eccentricity() >= e_y {
                    state.probes.push(Probe {
                        y: y2,
                        ecc: row_y2.eccentricity(),
                    });
                    break 'iter Some(finish(state, IterationEnd::ProbeStuck, x, e_x, &mut trace));
                }
                y = y2;
                row_y = row_y2;
            }
        };
        if let Some((vertex, ecc)) = result {
            return CentralSearch {
                vertex,
                ecc,
                start,
                trace,
            };
        }
    }
    unreachable!("the candidate set shrinks every iteration")
}

/// Which branch of the linear-time procedure produced the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaBranch {
    /// The local minimum has eccentricity at most 1.
    Universal,
    /// A probe neighbour of `x` is worse than `x`.
    ProbeWorse,
    /// A probe neighbour is not a local minimum; its improvement is central.
    ProbeImproves,
    /// No edge between the two candidate sets.
    NoBridge,
    /// An incomparable pair whose far vertices are too far apart.
    FarApart,
    /// Best vertex around the universal vertex of the middle slice.
    SliceHub,
}

/// Diagnostics of [`find_central_alpha1_delta`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaTrace {
    pub local_min: Found,
    /// `f_x(y)` for every neighbour `y` of `x` with a positive count.
    pub f_counts: Vec<(usize, u32)>,
    pub y1: Option<usize>,
    pub z1: Option<usize>,
    pub y2: Option<usize>,
    pub b1: Vec<usize>,
    pub b2: Vec<usize>,
    pub pair: Option<(usize, usize)>,
    pub slice_hub: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaSearch {
    pub vertex: usize,
    pub ecc: u32,
    pub branch: DeltaBranch,
    pub trace: DeltaTrace,
}

fn violation(msg: impl Into<String>) -> CenterError {
    CenterError::ClassificationViolation(msg.into())
}

fn difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|v| b.binary_search(v).is_err()).collect()
}

/// Exact central vertex in linear time on alpha_1-metric graphs satisfying
/// the triangle condition, using a constant number of BFS runs.
pub fn find_central_alpha1_delta(g: &Graph) -> Result<DeltaSearch, CenterError> {
    let c = approx::approx_radius(g, PairMode::Linear).center;
    let (x, e) = descend_to_local_min(g, c, Variant::TriangleCondition);
    let mut trace = DeltaTrace {
        local_min: Found { vertex: x, ecc: e },
        f_counts: Vec::new(),
        y1: None,
        z1: None,
        y2: None,
        b1: Vec::new(),
        b2: Vec::new(),
        pair: None,
        slice_hub: None,
    };
    let done = |vertex, ecc, branch, trace| {
        Ok(DeltaSearch {
            vertex,
            ecc,
            branch,
            trace,
        })
    };
    if e <= 1 {
        return done(x, e, DeltaBranch::Universal, trace);
    }

    let row_x = bfs(g, x);
    let far_x = row_x.furthest();
    let gates = compute_gates(g, &closed_neighborhood(g, x)).expect("nonempty");
    let mut mult = vec![0u32; g.n()];
    for &z in &far_x {
        mult[gates.gate(z).expect("far vertices lie outside D(x,1)")] += 1;
    }
    let mut f = vec![0u32; g.n()];
    for s in (0..g.n()).filter(|&s| mult[s] > 0) {
        for y in g.neighbors(s) {
            if row_x.get(y) == 1 {
                f[y] += mult[s];
            }
        }
    }
    trace.f_counts = g.neighbors(x).filter(|&y| f[y] > 0).map(|y| (y, f[y])).collect();
    let argmax = |it: &mut dyn Iterator<Item = usize>| {
        it.fold(None, |best: Option<usize>, y| match best {
            Some(b) if f[b] >= f[y] => Some(b),
            _ => Some(y),
        })
    };

    // probe a neighbour: worse than x, or not a local minimum, ends the search
    enum Probed {
        Done(usize, u32, DeltaBranch),
        Row(DistanceRow),
    }
    let probe = |y: usize| {
        let row = bfs(g, y);
        if row.eccentricity() > e {
            return Probed::Done(x, e, DeltaBranch::ProbeWorse);
        }
        match local_min_step_from(g, &row, Variant::TriangleCondition).outcome {
            LocalOutcome::Improved { y, ecc } => Probed::Done(y, ecc, DeltaBranch::ProbeImproves),
            LocalOutcome::LocalMinimum => Probed::Row(row),
        }
    };

    let y1 = argmax(&mut g.neighbors(x)).expect("x has a neighbour");
    trace.y1 = Some(y1);
    let row_y1 = match probe(y1) {
        Probed::Done(v, ecc, b) => return done(v, ecc, b, trace),
        Probed::Row(r) => r,
    };
    let far_y1 = row_y1.furthest();

    let pair = if !difference(&far_y1, &far_x).is_empty() {
        (x, y1)
    } else {
        let z1 = far_y1[0];
        trace.z1 = Some(z1);
        let s1 = gates.gate(z1).expect("z1 is far from x");
        let y2 = argmax(&mut g.neighbors(x).filter(|&y| g.has_edge(y, s1)))
            .ok_or_else(|| violation("no neighbour of x towards z1"))?;
        trace.y2 = Some(y2);
        let row_y2 = match probe(y2) {
            Probed::Done(v, ecc, b) => return done(v, ecc, b, trace),
            Probed::Row(r) => r,
        };
        let far_y2 = row_y2.furthest();
        let b1 = common_gate_neighbors(g, x, &gates, &difference(&far_x, &far_y1));
        let b2 = common_gate_neighbors(g, x, &gates, &difference(&far_x, &far_y2));
        let mut in_b2 = vec![false; g.n()];
        for &v in &b2 {
            in_b2[v] = true;
        }
        let bridge = b1
            .iter()
            .find_map(|&u| g.neighbors(u).find(|&v| in_b2[v]).map(|v| (u, v)));
        trace.b1 = b1;
        trace.b2 = b2;
        let Some((u, v)) = bridge else {
            return done(x, e, DeltaBranch::NoBridge, trace);
        };
        if ecc_of(g, u).max(ecc_of(g, v)) > e {
            return done(x, e, DeltaBranch::ProbeWorse, trace);
        }
        (u, v)
    };
    trace.pair = Some(pair);

    let (u, v) = pair;
    let (far_u, far_v) = (bfs(g, u).furthest(), bfs(g, v).furthest());
    let (Some(&y), Some(&z)) = (
        difference(&far_u, &far_v).first(),
        difference(&far_v, &far_u).first(),
    ) else {
        return Err(violation(format!("furthest sets of {u} and {v} are comparable")));
    };
    let row_y = bfs(g, y);
    if row_y.get(z) + 1 >= 2 * e {
        return done(x, e, DeltaBranch::FarApart, trace);
    }
    let row_z = bfs(g, z);
    let d = row_y.get(z);
    let slice: Vec<usize> = (0..g.n())
        .filter(|&w| row_y.get(w) == e - 1 && row_y.get(w) + row_z.get(w) == d)
        .collect();
    let mut in_slice = vec![false; g.n()];
    for &w in &slice {
        in_slice[w] = true;
    }
    let hub = slice
        .iter()
        .copied()
        .find(|&w| g.neighbors(w).filter(|&t| in_slice[t]).count() + 1 == slice.len())
        .ok_or_else(|| violation(format!("slice between {y} and {z} has no universal vertex")))?;
    trace.slice_hub = Some(hub);
    let s = local_min_step(g, hub, Variant::TriangleCondition);
    let (xp, ep) = match s.outcome {
        LocalOutcome::Improved { y, ecc } => (y, ecc),
        LocalOutcome::LocalMinimum => (hub, s.ecc),
    };
    if ep < e {
        done(xp, ep, DeltaBranch::SliceHub, trace)
    } else {
        done(x, e, DeltaBranch::SliceHub, trace)
    }
}

/// Root choice for [`ecc_tree_alpha1`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TreeRoot {
    /// Output of [`find_central_alpha1`].
    Central,
    /// Output of [`find_central_alpha1_delta`].
    CentralDelta,
}

/// BFS tree rooted at a central vertex found by local search.
pub fn ecc_tree_alpha1(g: &Graph, root: TreeRoot) -> Result<SpanningTree, CenterError> {
    let r = match root {
        TreeRoot::Central => find_central_alpha1(g).vertex,
        TreeRoot::CentralDelta => find_central_alpha1_delta(g)?.vertex,
    };
    Ok(bfs_tree(g, r)?)
}

/// Minimum-id central vertex of the subgraph induced by `C(G)`, from exact
/// eccentricities. Used as the tightest tree root in tests.
pub fn center_of_center(g: &Graph, ecc: &EccReport) -> usize {
    let mut in_c = vec![false; g.n()];
    for &c in &ecc.center {
        in_c[c] = true;
    }
    ecc.center
        .iter()
        .map(|&c| {
            let d = bfs_within(g, c, &in_c);
            let e = ecc.center.iter().map(|&o| d[o]).max().unwrap_or(0);
            (e, c)
        })
        .filter(|&(e, _)| e != UNREACHED)
        .min()
        .map_or(ecc.center[0], |(_, c)| c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, named, star};
    use crate::oracle::exact_eccentricities;

    #[test]
    fn descend_on_path() {
        let p5 = named("p5").unwrap();
        assert_eq!(descend_rad2(&p5, 0).outcome, Descent::Improved { y: 1, ecc: 3 });
        assert_eq!(descend_rad2(&p5, 2).outcome, Descent::AtMostRadPlusOne);
    }

    #[test]
    fn local_steps() {
        let k2 = complete(2);
        for v in [Variant::General, Variant::TriangleCondition] {
            assert_eq!(local_min_step(&k2, 0, v).outcome, LocalOutcome::LocalMinimum);
            let p5 = named("p5").unwrap();
            assert_eq!(
                local_min_step(&p5, 1, v).outcome,
                LocalOutcome::Improved { y: 2, ecc: 2 }
            );
        }
        // e = 2 next to a universal vertex
        let s = star(4);
        assert_eq!(
            local_min_step(&s, 1, Variant::General).outcome,
            LocalOutcome::Improved { y: 0, ecc: 1 }
        );
    }

    #[test]
    fn small_searches() {
        let p5 = named("p5").unwrap();
        assert_eq!(find_central_alpha1(&p5).vertex, 2);
        assert_eq!(find_central_alpha1_delta(&p5).unwrap().vertex, 2);
        assert!([1, 2, 3].contains(&find_rad_plus_1(&p5).vertex));
        let c5 = cycle(5);
        assert_eq!(find_central_alpha1(&c5).ecc, 2);
        assert_eq!(find_rad_plus_1(&c5).ecc, 2);
        assert_eq!(find_central_alpha1_delta(&star(3)).unwrap().vertex, 0);
    }

    #[test]
    fn center_of_center_on_path() {
        let p5 = named("p5").unwrap();
        assert_eq!(center_of_center(&p5, &exact_eccentricities(&p5)), 2);
        let p4 = crate::generate::path(4);
        assert_eq!(center_of_center(&p4, &exact_eccentricities(&p4)), 1);
    }

    #[test]
    fn tree_from_search_on_tree_is_exact() {
        let p5 = named("p5").unwrap();
        let t = ecc_tree_alpha1(&p5, TreeRoot::Central).unwrap();
        assert_eq!(t.tree_ecc, vec![4, 3, 2, 3, 4]);
    }
}
