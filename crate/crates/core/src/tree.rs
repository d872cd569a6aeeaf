//! BFS spanning trees and their eccentricities via the tree-center formula
//! `e_T(v) = d_T(v, C(T)) + rad(T)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::approx::{self, PairMode, Rounding};
use crate::graph::Graph;
use crate::traversal::{bfs, distances_from};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("input is not a tree ({n} vertices, {m} edges)")]
    NotATree { n: usize, m: usize },
    #[error("root {root} is outside 0..{n}")]
    RootOutOfRange { root: usize, n: usize },
}

/// Eccentricities of a tree together with its center.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeEccentricities {
    pub ecc: Vec<u32>,
    /// One vertex or two adjacent vertices, ascending.
    pub center: Vec<usize>,
    pub radius: u32,
}

/// Three BFS runs: two sweeps for a diametral path, then one multi-source
/// BFS from its middle.
pub fn tree_eccentricities(t: &Graph) -> Result<TreeEccentricities, TreeError> {
    if !t.is_tree() {
        return Err(TreeError::NotATree { n: t.n(), m: t.m() });
    }
    let a = bfs(t, 0).furthest_min();
    let row_a = bfs(t, a);
    let b = row_a.furthest_min();
    let path = row_a.path_to(b);
    let diam = path.len() - 1;
    let mut center = if diam % 2 == 0 {
        vec![path[diam / 2]]
    } else {
        vec![path[diam / 2], path[diam / 2 + 1]]
    };
    center.sort_unstable();
    let radius = diam.div_ceil(2) as u32;
    let to_center = distances_from(t, &center);
    Ok(TreeEccentricities {
        ecc: to_center.iter().map(|&d| d + radius).collect(),
        center,
        radius,
    })
}

/// How the root of the spanning tree is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "strategy", content = "root")]
pub enum RootStrategy {
    /// Middle of a mutually distant pair.
    MdpMiddle,
    /// Middle of a double-sweep pair.
    SweepMiddle,
    Given(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningTree {
    pub root: usize,
    /// Canonical BFS parent; the root is its own parent.
    pub parent: Vec<usize>,
    pub tree_ecc: Vec<u32>,
    pub tree_center: Vec<usize>,
    pub tree_radius: u32,
}

impl SpanningTree {
    /// The tree as a graph on the same vertex set.
    pub fn to_graph(&self) -> Graph {
        let edges = (0..self.parent.len())
            .filter(|&v| v != self.root)
            .map(|v| (v, self.parent[v]));
        Graph::from_edges(self.parent.len(), edges).expect("parent pointers form a spanning tree")
    }

    pub fn to_edge_list(&self) -> String {
        self.to_graph().to_edge_list()
    }
}

/// Canonical BFS tree rooted at `root` with formula eccentricities.
pub fn bfs_tree(g: &Graph, root: usize) -> Result<SpanningTree, TreeError> {
    if root >= g.n() {
        return Err(TreeError::RootOutOfRange { root, n: g.n() });
    }
    let row = bfs(g, root);
    let parent: Vec<usize> = row.parent.iter().map(|&p| p as usize).collect();
    let mut tree = SpanningTree {
        root,
        parent,
        tree_ecc: Vec::new(),
        tree_center: Vec::new(),
        tree_radius: 0,
    };
    let te = tree_eccentricities(&tree.to_graph()).expect("a BFS tree is a tree");
    tree.tree_ecc = te.ecc;
    tree.tree_center = te.center;
    tree.tree_radius = te.radius;
    Ok(tree)
}

pub fn build_ecc_tree(g: &Graph, strategy: RootStrategy) -> Result<SpanningTree, TreeError> {
    let root = match strategy {
        RootStrategy::MdpMiddle => approx::sweep_mdp(g, 0).middle(Rounding::Floor),
        RootStrategy::SweepMiddle => approx::approx_radius(g, PairMode::Linear).center,
        RootStrategy::Given(r) => r,
    };
    bfs_tree(g, root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, named, path, star};
    use crate::oracle::exact_eccentricities;

    #[test]
    fn star_and_paths() {
        let s = tree_eccentricities(&star(3)).unwrap();
        assert_eq!(s.ecc, vec![1, 2, 2, 2]);
        assert_eq!(s.center, vec![0]);
        let p5 = tree_eccentricities(&named("p5").unwrap()).unwrap();
        assert_eq!(p5.ecc, vec![4, 3, 2, 3, 4]);
        assert_eq!(p5.center, vec![2]);
        let p4 = tree_eccentricities(&path(4)).unwrap();
        assert_eq!((p4.center.clone(), p4.radius), (vec![1, 2], 2));
        let k1 = tree_eccentricities(&path(1)).unwrap();
        assert_eq!((k1.ecc, k1.radius), (vec![0], 0));
    }

    #[test]
    fn rejects_cycles() {
        assert!(matches!(
            tree_eccentricities(&cycle(4)),
            Err(TreeError::NotATree { n: 4, m: 4 })
        ));
    }

    #[test]
    fn hexagon_tree() {
        let t = bfs_tree(&cycle(6), 0).unwrap();
        assert_eq!(t.parent, vec![0, 0, 1, 2, 5, 0]);
        // tree is the path 3-2-1-0-5-4
        assert_eq!(t.tree_ecc, vec![3, 3, 4, 5, 5, 4]);
        let brute = exact_eccentricities(&t.to_graph());
        assert_eq!(t.tree_ecc, brute.ecc);
    }

    #[test]
    fn tree_input_is_exact() {
        let g = crate::generate::gen_distance_hereditary(
            40,
            3,
            crate::generate::OpMix {
                pendant: 1,
                true_twin: 0,
                false_twin: 0,
            },
        )
        .unwrap();
        let exact = exact_eccentricities(&g).ecc;
        for s in [RootStrategy::MdpMiddle, RootStrategy::SweepMiddle, RootStrategy::Given(7)] {
            assert_eq!(build_ecc_tree(&g, s).unwrap().tree_ecc, exact);
        }
    }
}
