//! Immutable, connected, simple undirected graphs in adjacency-array form.

use std::fmt::Write as _;

use thiserror::Error;

/// Largest vertex count accepted by the edge-list format.
pub const MAX_VERTICES: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("header declares {declared} edges but {found} edge lines follow")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected: vertex {unreached} is not reachable from vertex 0")]
    Disconnected { unreached: usize },
}

/// A connected simple undirected graph on vertices `0..n`.
///
/// Neighbour lists are stored contiguously and sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, parallel edges and
    /// disconnected inputs.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0] as usize;
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        let g = Graph { offsets, targets };
        if let Some(unreached) = g.first_unreachable() {
            return Err(GraphError::Disconnected { unreached });
        }
        Ok(g)
    }

    /// Parses the edge-list text format: a header `n m` followed by exactly
    /// `m` lines `u v`. Blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            message: "missing header \"n m\"".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, body) in lines {
            edges.push(parse_pair(line, body)?);
        }
        if edges.len() != m {
            return Err(GraphError::EdgeCountMismatch {
                declared: m,
                found: edges.len(),
            });
        }
        Graph::from_edges(n, edges)
    }

    /// Serializes to the edge-list format, edges as `u v` with `u < v` in
    /// lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(16 * (self.m() + 1));
        let _ = writeln!(out, "{} {}", self.n(), self.m());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Sorted neighbour list of `v`.
    #[inline]
    pub fn adj(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.adj(v).iter().map(|&w| w as usize)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adj(a).binary_search(&(b as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj(u)
                .iter()
                .filter(move |&&v| (v as usize) > u)
                .map(move |&v| (u, v as usize))
        })
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Whether the graph is a tree (connected with `n - 1` edges).
    pub fn is_tree(&self) -> bool {
        self.m() + 1 == self.n()
    }

    /// Graph obtained by adding one vertex (id `n`) adjacent to every vertex.
    pub fn with_universal_vertex(&self) -> Graph {
        let n = self.n();
        let edges = self.edges().chain((0..n).map(|v| (v, n)));
        Graph::from_edges(n + 1, edges).expect("adding a universal vertex keeps the graph simple")
    }

    fn first_unreachable(&self) -> Option<usize> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().position(|s| !s)
    }
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize), GraphError> {
    let mut it = body.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| GraphError::Parse {
            line,
            message: format!("missing {what}"),
        })?;
        tok.parse::<usize>().map_err(|_| GraphError::Parse {
            line,
            message: format!("invalid {what} {tok:?}"),
        })
    };
    let a = next("first integer")?;
    let b = next("second integer")?;
    if let Some(extra) = it.next() {
        return Err(GraphError::Parse {
            line,
            message: format!("unexpected trailing token {extra:?}"),
        });
    }
    Ok((a, b))
}
