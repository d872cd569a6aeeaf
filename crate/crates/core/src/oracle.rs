//! Brute-force ground truth: exact eccentricities, centers, furthest sets and
//! locality, all from one BFS per vertex.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::par::{self, Execution};
use crate::traversal::{bfs_dist, bfs_within, UNREACHED};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EccMode {
    Exact,
    Approximate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EccReport {
    pub ecc: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    pub center: Vec<usize>,
    pub mode: EccMode,
}

impl EccReport {
    /// Summarizes a per-vertex eccentricity table.
    pub fn from_table(ecc: Vec<u32>, mode: EccMode) -> Self {
        let radius = ecc.iter().copied().min().unwrap_or(0);
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        let center = (0..ecc.len()).filter(|&v| ecc[v] == radius).collect();
        EccReport {
            ecc,
            radius,
            diameter,
            center,
            mode,
        }
    }

    pub fn is_central(&self, v: usize) -> bool {
        self.ecc[v] == self.radius
    }
}

/// Exact eccentricities via `n` BFS runs.
pub fn exact_eccentricities(g: &Graph) -> EccReport {
    exact_eccentricities_with(g, Execution::default())
}

pub fn exact_eccentricities_with(g: &Graph, exec: Execution) -> EccReport {
    let ecc = par::map_indices(g.n(), exec, |s| {
        bfs_dist(g, s).into_iter().max().unwrap_or(0)
    });
    EccReport::from_table(ecc, EccMode::Exact)
}

/// Structure of the center `C(G)` and of the eccentricity level sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterInfo {
    pub center: Vec<usize>,
    /// Diameter of `C(G)` measured with distances of `G`.
    pub diam_of_center: u32,
    /// Diameter of `C(G)` measured inside the induced subgraph (only
    /// meaningful when `center_connected`).
    pub diam_of_center_induced: u32,
    /// Radius of the subgraph induced by `C(G)`; the maximum over components
    /// when that subgraph is disconnected.
    pub rad_of_center: u32,
    pub center_connected: bool,
    /// `level_sets[k] = { v : e(v) <= rad + k }` for `k = 0..=diam - rad`.
    pub level_sets: Vec<Vec<usize>>,
    /// 1 when `diam >= 2 rad - 1`, else 0.
    pub eps_flag: u8,
}

pub fn center_info(g: &Graph, ecc: &EccReport) -> CenterInfo {
    let n = g.n();
    let center = ecc.center.clone();
    let mut in_center = vec![false; n];
    for &c in &center {
        in_center[c] = true;
    }

    let mut diam_g = 0;
    let mut diam_induced = 0;
    let mut component = vec![usize::MAX; n];
    let mut comp_rad: Vec<u32> = Vec::new();
    for &c in &center {
        let dg = bfs_dist(g, c);
        let di = bfs_within(g, c, &in_center);
        let mut ecc_induced = 0;
        for &d in &center {
            diam_g = diam_g.max(dg[d]);
            if di[d] != UNREACHED {
                ecc_induced = ecc_induced.max(di[d]);
            }
        }
        diam_induced = diam_induced.max(ecc_induced);
        if component[c] == usize::MAX {
            let id = comp_rad.len();
            for &d in &center {
                if di[d] != UNREACHED {
                    component[d] = id;
                }
            }
            comp_rad.push(u32::MAX);
        }
        let id = component[c];
        comp_rad[id] = comp_rad[id].min(ecc_induced);
    }
    let center_connected = comp_rad.len() <= 1;
    let rad_of_center = comp_rad.iter().copied().max().unwrap_or(0);

    let spread = ecc.diameter - ecc.radius;
    let level_sets = (0..=spread)
        .map(|k| (0..n).filter(|&v| ecc.ecc[v] <= ecc.radius + k).collect())
        .collect();
    let eps_flag = u8::from(ecc.diameter + 1 >= 2 * ecc.radius);

    CenterInfo {
        center,
        diam_of_center: diam_g,
        diam_of_center_induced: diam_induced,
        rad_of_center,
        center_connected,
        level_sets,
        eps_flag,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FurthestSet {
    pub v: usize,
    pub members: Vec<usize>,
}

/// `F(v)`: the vertices at distance `e(v)` from `v`.
pub fn furthest_set(g: &Graph, v: usize) -> FurthestSet {
    let d = bfs_dist(g, v);
    let e = d.iter().copied().max().unwrap_or(0);
    FurthestSet {
        v,
        members: (0..g.n()).filter(|&u| d[u] == e).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Locality {
    /// Distance to the nearest vertex of strictly smaller eccentricity; 0 for
    /// central vertices.
    pub value: u32,
    pub is_central: bool,
}

/// `loc(v)`, reported as 0 with `is_central` set when `v` is central.
pub fn locality(g: &Graph, ecc: &EccReport, v: usize) -> Locality {
    if ecc.is_central(v) {
        return Locality {
            value: 0,
            is_central: true,
        };
    }
    let d = bfs_dist(g, v);
    let value = (0..g.n())
        .filter(|&x| ecc.ecc[x] < ecc.ecc[v])
        .map(|x| d[x])
        .min()
        .expect("a non-central vertex has a smaller-eccentricity target");
    Locality {
        value,
        is_central: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::named;

    #[test]
    fn cycle_and_path() {
        let c5 = exact_eccentricities(&named("c5").unwrap());
        assert_eq!(c5.ecc, vec![2; 5]);
        assert_eq!((c5.radius, c5.diameter), (2, 2));
        assert_eq!(c5.center, vec![0, 1, 2, 3, 4]);

        let p5 = exact_eccentricities(&named("p5").unwrap());
        assert_eq!(p5.ecc, vec![4, 3, 2, 3, 4]);
        assert_eq!((p5.radius, p5.diameter), (2, 4));
        assert_eq!(p5.center, vec![2]);
    }

    #[test]
    fn center_of_path_and_hexagon() {
        let p5 = named("p5").unwrap();
        let info = center_info(&p5, &exact_eccentricities(&p5));
        assert_eq!(info.center, vec![2]);
        assert_eq!(info.diam_of_center, 0);
        assert_eq!(info.rad_of_center, 0);
        assert_eq!(info.eps_flag, 1);
        assert_eq!(info.level_sets[0], vec![2]);
        assert_eq!(info.level_sets.len(), 3);

        let c6 = named("c6").unwrap();
        let info = center_info(&c6, &exact_eccentricities(&c6));
        assert_eq!(info.center.len(), 6);
        assert_eq!(info.diam_of_center, 3);
        assert!(info.center_connected);
        assert_eq!(info.rad_of_center, 3);
    }

    #[test]
    fn disconnected_center_is_flagged() {
        // 6-cycle with pendants on 0 and 3: center {1, 2, 4, 5} splits in two
        let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (3, 7)])
            .unwrap();
        let ecc = exact_eccentricities(&g);
        let info = center_info(&g, &ecc);
        assert!(!info.center_connected, "center {:?}", info.center);
    }

    #[test]
    fn furthest_and_locality() {
        let p5 = named("p5").unwrap();
        let ecc = exact_eccentricities(&p5);
        assert_eq!(furthest_set(&p5, 0).members, vec![4]);
        assert_eq!(
            locality(&p5, &ecc, 0),
            Locality {
                value: 1,
                is_central: false
            }
        );
        let c5 = named("c5").unwrap();
        let ecc = exact_eccentricities(&c5);
        for v in 0..5 {
            assert!(locality(&c5, &ecc, v).is_central);
        }
    }

    #[test]
    fn sequential_matches_parallel() {
        let g = crate::generate::gen_chordal(80, 3, 3);
        assert_eq!(
            exact_eccentricities_with(&g, Execution::Sequential),
            exact_eccentricities_with(&g, Execution::Parallel)
        );
    }
}
