//! Metric classification: the alpha index, interval thinness, disk convexity,
//! `d^k`-convexity of vertex sets and the triangle condition.
//!
//! Everything here works from a dense [`DistanceMatrix`], so it is meant for
//! small graphs (a few hundred vertices).

use serde::{Deserialize, Serialize};

use crate::generate;
use crate::graph::Graph;
use crate::isometric::find_isometric_with;
use crate::par::{self, Execution};
use crate::traversal::DistanceMatrix;

/// Largest host on which the forbidden-pattern search runs inside
/// [`profile`]; above it `alpha1_by_characterization` is left empty.
pub const CHARACTERIZATION_MAX_N: usize = 120;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricProfile {
    pub alpha_index: u32,
    pub thinness: u32,
    pub disks_convex: bool,
    pub triangle_condition: bool,
    /// Convex disks and no isometric copy of the forbidden pattern; `None`
    /// when the pattern is unavailable or the graph is too large.
    pub alpha1_by_characterization: Option<bool>,
}

impl MetricProfile {
    /// alpha_1-metric and satisfying the triangle condition.
    pub fn is_alpha1_delta(&self) -> bool {
        self.alpha_index <= 1 && self.triangle_condition
    }
}

/// Computes every field of the profile.
pub fn profile(g: &Graph) -> MetricProfile {
    let dm = DistanceMatrix::new(g);
    profile_with(g, &dm)
}

pub fn profile_with(g: &Graph, dm: &DistanceMatrix) -> MetricProfile {
    let exec = Execution::default();
    let disks_convex = disks_convex_with(dm, exec);
    let alpha1_by_characterization = if g.n() <= CHARACTERIZATION_MAX_N {
        generate::w6pp().ok().map(|pattern| {
            let pdm = DistanceMatrix::new(&pattern);
            disks_convex && find_isometric_with(&pattern, &pdm, g, dm).is_none()
        })
    } else {
        None
    };
    MetricProfile {
        alpha_index: alpha_index_with(g, dm, exec),
        thinness: interval_thinness_with(dm, exec),
        disks_convex,
        triangle_condition: triangle_condition_with(g, dm),
        alpha1_by_characterization,
    }
}

/// A quadruple realizing a defect: `v in I(u, w)`, `w in I(v, x)`, `vw` an
/// edge, and `d(u, x) = d(u, v) + 1 + d(w, x) - defect`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaWitness {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub x: usize,
    pub defect: u32,
}

/// The minimal `i` for which the graph is alpha_i-metric.
pub fn alpha_index(g: &Graph) -> u32 {
    let dm = DistanceMatrix::new(g);
    alpha_index_with(g, &dm, Execution::default())
}

pub fn alpha_index_with(g: &Graph, dm: &DistanceMatrix, exec: Execution) -> u32 {
    alpha_witness(g, dm, exec).map_or(0, |w| w.defect)
}

/// A quadruple of maximum defect (ties: first oriented edge in vertex order),
/// or `None` for a single vertex.
pub fn alpha_witness(g: &Graph, dm: &DistanceMatrix, exec: Execution) -> Option<AlphaWitness> {
    let per_vertex = par::map_indices(g.n(), exec, |v| {
        let mut best: Option<AlphaWitness> = None;
        for w in g.neighbors(v) {
            let cand = max_defect_on_edge(dm, v, w, None);
            if best.is_none_or(|b| cand.defect > b.defect) {
                best = Some(cand);
            }
        }
        best
    });
    let mut best: Option<AlphaWitness> = None;
    for cand in per_vertex.into_iter().flatten() {
        if best.is_none_or(|b| cand.defect > b.defect) {
            best = Some(cand);
        }
    }
    best
}

/// Whether the graph is alpha_i-metric, stopping at the first violation.
pub fn is_alpha_i(g: &Graph, dm: &DistanceMatrix, i: u32, exec: Execution) -> bool {
    par::find_first(g.n(), exec, |v| {
        g.neighbors(v)
            .map(|w| max_defect_on_edge(dm, v, w, Some(i)))
            .find(|c| c.defect > i)
    })
    .is_none()
}

/// Max defect over the oriented edge `v -> w`; with `stop_above`, returns as
/// soon as a defect above that bound is seen.
fn max_defect_on_edge(dm: &DistanceMatrix, v: usize, w: usize, stop_above: Option<u32>) -> AlphaWitness {
    let n = dm.n();
    let dv = dm.row(v);
    let dw = dm.row(w);
    // u with v in I(u, w); x with w in I(v, x)
    let us: Vec<usize> = (0..n).filter(|&u| dw[u] == dv[u] + 1).collect();
    let xs: Vec<usize> = (0..n).filter(|&x| dv[x] == dw[x] + 1).collect();
    let mut best = AlphaWitness {
        u: v,
        v,
        w,
        x: w,
        defect: 0,
    };
    for &u in &us {
        let du = dm.row(u);
        let base = dv[u] + 1;
        for &x in &xs {
            let defect = base + dw[x] - du[x];
            if defect > best.defect {
                best = AlphaWitness { u, v, w, x, defect };
                if stop_above.is_some_and(|b| defect > b) {
                    return best;
                }
            }
        }
    }
    best
}

/// Maximum diameter of a slice `S_k(u, v)` over all pairs and `0 < k < d(u, v)`.
pub fn interval_thinness(g: &Graph) -> u32 {
    interval_thinness_with(&DistanceMatrix::new(g), Execution::default())
}

pub fn interval_thinness_with(dm: &DistanceMatrix, exec: Execution) -> u32 {
    let n = dm.n();
    par::max_over(n, exec, |u| {
        let du = dm.row(u);
        let mut best = 0;
        let mut layered: Vec<(u32, usize)> = Vec::new();
        for v in (u + 1)..n {
            let d = du[v];
            if d < 2 {
                continue;
            }
            let dv = dm.row(v);
            layered.clear();
            layered.extend((0..n).filter(|&x| du[x] + dv[x] == d && du[x] > 0 && du[x] < d).map(|x| (du[x], x)));
            layered.sort_unstable();
            for group in layered.chunk_by(|a, b| a.0 == b.0) {
                for (i, &(_, a)) in group.iter().enumerate() {
                    for &(_, b) in &group[i + 1..] {
                        best = best.max(dm.get(a, b));
                    }
                }
            }
        }
        best
    })
    .unwrap_or(0)
}

/// Whether all disks are convex, via the criterion
/// `d(v, z) <= max{d(x, z), d(y, z)}` for all `x, y, z` and `v in I(x, y)`.
pub fn disks_convex(g: &Graph) -> bool {
    disks_convex_with(&DistanceMatrix::new(g), Execution::default())
}

pub fn disks_convex_with(dm: &DistanceMatrix, exec: Execution) -> bool {
    disk_convexity_violation(dm, exec).is_none()
}

/// First violating `(x, y, v, z)` in lexicographic order, if any.
pub fn disk_convexity_violation(dm: &DistanceMatrix, exec: Execution) -> Option<(usize, usize, usize, usize)> {
    let n = dm.n();
    par::find_first(n, exec, |x| {
        let dx = dm.row(x);
        for y in (x + 1)..n {
            let dy = dm.row(y);
            let d = dx[y];
            if d < 2 {
                continue;
            }
            for v in 0..n {
                if v == x || v == y || dx[v] + dy[v] != d {
                    continue;
                }
                let dv = dm.row(v);
                if let Some(z) = (0..n).find(|&z| dv[z] > dx[z].max(dy[z])) {
                    return Some((x, y, v, z));
                }
            }
        }
        None
    })
}

/// `d^k`-convexity: every pair of members at distance at least `k` has its
/// whole interval inside the set. Negative `k` behaves like 0.
pub fn dk_convex(dm: &DistanceMatrix, set: &[usize], k: i64) -> bool {
    let n = dm.n();
    let mut member = vec![false; n];
    for &s in set {
        member[s] = true;
    }
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i + 1..] {
            let d = dm.get(a, b);
            if i64::from(d) < k || d < 2 {
                continue;
            }
            if (0..n).any(|x| !member[x] && dm.in_interval(a, b, x)) {
                return false;
            }
        }
    }
    true
}

/// For every edge `uv` and every `w` with `d(u, w) = d(v, w) = k >= 1`, some
/// common neighbour of `u` and `v` is at distance `k - 1` from `w`.
pub fn triangle_condition(g: &Graph) -> bool {
    triangle_condition_with(g, &DistanceMatrix::new(g))
}

pub fn triangle_condition_with(g: &Graph, dm: &DistanceMatrix) -> bool {
    triangle_condition_violation(g, dm).is_none()
}

/// First `(u, v, w)` breaking the triangle condition.
pub fn triangle_condition_violation(g: &Graph, dm: &DistanceMatrix) -> Option<(usize, usize, usize)> {
    let n = g.n();
    par::find_first(n, Execution::default(), |u| {
        let du = dm.row(u);
        for v in g.neighbors(u).filter(|&v| v > u) {
            let dv = dm.row(v);
            let common = common_neighbors(g, u, v);
            for w in 0..n {
                let k = du[w];
                if k == 0 || dv[w] != k {
                    continue;
                }
                if !common.iter().any(|&x| dm.get(x, w) + 1 == k) {
                    return Some((u, v, w));
                }
            }
        }
        None
    })
}

pub(crate) fn common_neighbors(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    let (a, b) = (g.adj(u), g.adj(v));
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i] as usize);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, named, path};

    /// Independent brute force over ordered quadruples (u, v, w, x).
    fn alpha_brute(g: &Graph) -> u32 {
        let dm = DistanceMatrix::new(g);
        let n = g.n();
        let mut best = 0;
        for (v, w) in g.edges().flat_map(|(a, b)| [(a, b), (b, a)]) {
            for u in 0..n {
                for x in 0..n {
                    let v_in = dm.get(u, v) + 1 == dm.get(u, w);
                    let w_in = dm.get(w, x) + 1 == dm.get(v, x);
                    if v_in && w_in {
                        let lhs = dm.get(u, v) + 1 + dm.get(w, x);
                        best = best.max(lhs - dm.get(u, x));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn alpha_of_small_graphs() {
        assert_eq!(alpha_index(&complete(4)), 0);
        assert_eq!(alpha_index(&named("c5").unwrap()), 1);
        assert_eq!(alpha_brute(&named("c5").unwrap()), 1);
        assert_eq!(alpha_index(&named("c6").unwrap()), 4);
        assert_eq!(alpha_brute(&named("c6").unwrap()), 4);
        assert_eq!(alpha_index(&path(7)), 0);
        assert_eq!(alpha_index(&named("c4").unwrap()), 2);
        assert_eq!(alpha_index(&complete(1)), 0);
    }

    #[test]
    fn c6_witness_from_hand_computation() {
        let c6 = named("c6").unwrap();
        let dm = DistanceMatrix::new(&c6);
        // u=0, v=1, w=2, x=4: d(0,4)=2 while 1 + 1 + 2 = 4, defect 2
        assert_eq!(dm.get(0, 4), 2);
        assert_eq!(dm.get(0, 1) + 1 + dm.get(2, 4), 4);
        // u=5 does better: d(5,4)=1 while 2 + 1 + 2 = 5, defect 4
        assert_eq!(dm.get(5, 2), dm.get(5, 1) + 1);
        assert_eq!(dm.get(5, 4), 1);
        let best = max_defect_on_edge(&dm, 1, 2, None);
        assert_eq!((best.u, best.x, best.defect), (5, 4, 4));
    }

    #[test]
    fn alpha_agrees_with_brute_force() {
        for seed in 0..12 {
            let g = crate::generate::gen_gnp_connected(14, 0.2, seed);
            let dm = DistanceMatrix::new(&g);
            let fast = alpha_index_with(&g, &dm, Execution::Sequential);
            assert_eq!(fast, alpha_brute(&g), "seed {seed}");
            assert!(is_alpha_i(&g, &dm, fast, Execution::Parallel));
            if fast > 0 {
                assert!(!is_alpha_i(&g, &dm, fast - 1, Execution::Parallel));
            }
        }
    }

    #[test]
    fn thinness() {
        assert_eq!(interval_thinness(&path(6)), 0);
        assert_eq!(interval_thinness(&named("c4").unwrap()), 2);
        assert_eq!(interval_thinness(&named("c6").unwrap()), 2);
        assert_eq!(interval_thinness(&named("c5").unwrap()), 0);
    }

    #[test]
    fn convexity_of_disks() {
        assert!(disks_convex(&named("c5").unwrap()));
        assert!(!disks_convex(&named("c6").unwrap()));
        let dm = DistanceMatrix::new(&named("c6").unwrap());
        let (x, y, v, z) = disk_convexity_violation(&dm, Execution::Sequential).unwrap();
        assert!(dm.in_interval(x, y, v));
        assert!(dm.get(v, z) > dm.get(x, z).max(dm.get(y, z)));
        assert!(disks_convex(&path(6)));
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(disks_convex(&star));
    }

    #[test]
    fn dk_convexity() {
        let c6 = named("c6").unwrap();
        let dm = DistanceMatrix::new(&c6);
        assert!(dk_convex(&dm, &[3], 0));
        assert!(dk_convex(&dm, &[0, 1], 0));
        assert!(!dk_convex(&dm, &[0, 2], 0));
        assert!(dk_convex(&dm, &[0, 2], 3));
        assert!(!dk_convex(&dm, &[0, 3], -1));
    }

    #[test]
    fn triangle_condition_examples() {
        assert!(!triangle_condition(&named("c5").unwrap()));
        assert!(triangle_condition(&complete(4)));
        assert!(triangle_condition(&named("diamond").unwrap()));
        assert!(triangle_condition(&cycle(3)));
    }
}
