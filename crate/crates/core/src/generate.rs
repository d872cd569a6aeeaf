//! Seeded generators for the graph classes the bounds quantify over, plus a
//! handful of fixed named graphs.
//!
//! All randomness comes from ChaCha8 seeded with a 64-bit value; the same
//! [`GenSpec`] always yields the same edge list.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify;
use crate::graph::Graph;
use crate::traversal::DistanceMatrix;

/// Edge list of the forbidden pattern `W6++` (hub 0, rim 1..=6, two
/// outer vertices 7 and 8).
const W6PP_EDGES: &str = include_str!("../data/w6pp.txt");

/// Golden-ratio increment used to derive sub-seeds.
const SEED_STEP: u64 = 0x9E37_79B9_7F4A_7C15;

/// Attempts before [`gen_ptolemaic`] gives up on post-generation checks.
const PTOLEMAIC_ATTEMPTS: u64 = 16;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("pattern {0:?} is unavailable")]
    PatternUnavailable(String),
    #[error("operation mix has no positive weight")]
    DegenerateMix,
    #[error("vertex count must be at least {min}, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("edge probability {0} is outside [0, 1]")]
    BadProbability(f64),
    #[error("generated sample failed its class check after {attempts} attempts")]
    CheckFailed { attempts: u64 },
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed for the `index`-th derived stream of `seed`.
pub fn sub_seed(seed: u64, index: u64) -> u64 {
    seed.wrapping_add(index.wrapping_mul(SEED_STEP))
}

fn from_adj(adj: &[Vec<usize>]) -> Graph {
    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)));
    Graph::from_edges(adj.len(), edges).expect("generator produced an invalid graph")
}

/// A chordal graph with its perfect elimination ordering.
#[derive(Debug, Clone)]
pub struct CertifiedChordal {
    pub graph: Graph,
    /// Vertices in elimination order: each is simplicial among the later ones.
    pub elimination_order: Vec<usize>,
}

/// Random chordal graph: every new vertex is attached to a random clique
/// (size `1..=max_attach`) inside the closed neighbourhood of a random
/// existing vertex.
pub fn gen_chordal(n: usize, seed: u64, max_attach: usize) -> Graph {
    gen_chordal_certified(n, seed, max_attach).graph
}

pub fn gen_chordal_certified(n: usize, seed: u64, max_attach: usize) -> CertifiedChordal {
    assert!(n >= 1, "chordal generator needs n >= 1");
    let max_attach = max_attach.max(1);
    let mut rng = rng_for(seed);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new()];
    for v in 1..n {
        let root = rng.random_range(0..v);
        let size = rng.random_range(1..=max_attach);
        let mut clique = vec![root];
        let mut pool = adj[root].clone();
        pool.shuffle(&mut rng);
        for c in pool {
            if clique.len() >= size {
                break;
            }
            if clique.iter().all(|&k| adj[k].contains(&c)) {
                clique.push(c);
            }
        }
        adj.push(Vec::new());
        for &k in &clique {
            adj[k].push(v);
            adj[v].push(k);
        }
    }
    CertifiedChordal {
        graph: from_adj(&adj),
        elimination_order: (0..n).rev().collect(),
    }
}

/// Whether `order` is a perfect elimination ordering of `g`.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
        later
            .iter()
            .enumerate()
            .all(|(i, &a)| later[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

/// Relative weights of the one-vertex extensions used to grow
/// distance-hereditary graphs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OpMix {
    pub pendant: u32,
    pub true_twin: u32,
    pub false_twin: u32,
}

impl Default for OpMix {
    fn default() -> Self {
        OpMix {
            pendant: 2,
            true_twin: 1,
            false_twin: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Extension {
    Pendant,
    TrueTwin,
    FalseTwin,
}

/// Distance-hereditary graph grown from `K1` by pendant vertices, true twins
/// and false twins drawn according to `mix`.
pub fn gen_distance_hereditary(n: usize, seed: u64, mix: OpMix) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::TooSmall { n, min: 1 });
    }
    let total = mix.pendant + mix.true_twin + mix.false_twin;
    if total == 0 {
        return Err(GenError::DegenerateMix);
    }
    let mut rng = rng_for(seed);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new()];
    for v in 1..n {
        let base = rng.random_range(0..v);
        let roll = rng.random_range(0..total);
        let mut op = if roll < mix.pendant {
            Extension::Pendant
        } else if roll < mix.pendant + mix.true_twin {
            Extension::TrueTwin
        } else {
            Extension::FalseTwin
        };
        // a false twin of an isolated vertex would disconnect the graph
        if op == Extension::FalseTwin && adj[base].is_empty() {
            op = if mix.true_twin > 0 {
                Extension::TrueTwin
            } else {
                Extension::Pendant
            };
        }
        let mut nbrs = match op {
            Extension::Pendant => vec![base],
            Extension::TrueTwin => {
                let mut l = adj[base].clone();
                l.push(base);
                l
            }
            Extension::FalseTwin => adj[base].clone(),
        };
        nbrs.sort_unstable();
        adj.push(Vec::new());
        for &w in &nbrs {
            adj[w].push(v);
            adj[v].push(w);
        }
    }
    Ok(from_adj(&adj))
}

/// Ptolemaic graph (pendants and true twins only), checked to be
/// alpha_0-metric after generation. A failing sample is regenerated from the
/// next sub-seed.
pub fn gen_ptolemaic(n: usize, seed: u64) -> Result<Graph, GenError> {
    let mix = OpMix {
        pendant: 1,
        true_twin: 1,
        false_twin: 0,
    };
    for attempt in 0..PTOLEMAIC_ATTEMPTS {
        let g = gen_distance_hereditary(n, sub_seed(seed, attempt), mix)?;
        let dm = DistanceMatrix::new(&g);
        if classify::is_alpha_i(&g, &dm, 0, crate::par::Execution::default()) {
            return Ok(g);
        }
    }
    Err(GenError::CheckFailed {
        attempts: PTOLEMAIC_ATTEMPTS,
    })
}

/// Connected random graph: a random recursive spanning tree plus every other
/// pair independently with probability `p`.
pub fn gen_gnp_connected(n: usize, p: f64, seed: u64) -> Graph {
    assert!(n >= 1, "gnp generator needs n >= 1");
    assert!((0.0..=1.0).contains(&p), "edge probability out of range");
    let mut rng = rng_for(seed);
    let mut edges = std::collections::BTreeSet::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        edges.insert((u, v));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("spanning tree keeps the graph connected")
}

/// Relative weights of the blocks glued by [`gen_glued_blocks`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlockMix {
    /// Grow a chordal block by one simplicial vertex.
    pub chordal: u32,
    /// Hang a new 5-cycle on an existing vertex.
    pub pentagon: u32,
    /// Hang a 5-wheel (5-cycle plus hub) on an existing vertex.
    pub wheel: u32,
    pub max_attach: usize,
}

impl Default for BlockMix {
    fn default() -> Self {
        BlockMix {
            chordal: 6,
            pentagon: 1,
            wheel: 1,
            max_attach: 3,
        }
    }
}

/// Blocks glued at cut vertices: chordal blocks grown by simplicial
/// vertices, pentagons and 5-wheels. Gluing at a single vertex keeps
/// distances additive through it, so the samples are alpha_1-metric but
/// usually neither chordal nor triangle-conditioned.
pub fn gen_glued_blocks(n: usize, seed: u64, mix: BlockMix) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::TooSmall { n, min: 1 });
    }
    let total = mix.chordal + mix.pentagon + mix.wheel;
    if total == 0 {
        return Err(GenError::DegenerateMix);
    }
    let mut rng = rng_for(seed);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new()];
    // chordal blocks as vertex lists; a block may start at any vertex
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let link = |adj: &mut Vec<Vec<usize>>, a: usize, b: usize| {
        adj[a].push(b);
        adj[b].push(a);
    };
    while adj.len() < n {
        let v = adj.len();
        let roll = rng.random_range(0..total);
        let room = n - v;
        if roll >= mix.chordal && roll < mix.chordal + mix.pentagon && room >= 4 {
            let x = rng.random_range(0..v);
            adj.extend(std::iter::repeat_with(Vec::new).take(4));
            let ring = [x, v, v + 1, v + 2, v + 3];
            for i in 0..5 {
                link(&mut adj, ring[i], ring[(i + 1) % 5]);
            }
            continue;
        }
        if roll >= mix.chordal + mix.pentagon && room >= 5 {
            // the old vertex is the hub or a rim vertex
            let x = rng.random_range(0..v);
            adj.extend(std::iter::repeat_with(Vec::new).take(5));
            let (hub, ring) = if rng.random_bool(0.5) {
                (x, [v, v + 1, v + 2, v + 3, v + 4])
            } else {
                (v + 4, [x, v, v + 1, v + 2, v + 3])
            };
            for i in 0..5 {
                link(&mut adj, ring[i], ring[(i + 1) % 5]);
                link(&mut adj, hub, ring[i]);
            }
            continue;
        }
        // chordal growth inside one block
        let b = rng.random_range(0..=blocks.len());
        if b == blocks.len() {
            blocks.push(vec![rng.random_range(0..v)]);
        }
        let block = &mut blocks[b];
        let root = block[rng.random_range(0..block.len())];
        let size = rng.random_range(1..=mix.max_attach.max(1));
        let mut clique = vec![root];
        let mut pool: Vec<usize> = adj[root].iter().copied().filter(|c| block.contains(c)).collect();
        pool.shuffle(&mut rng);
        for c in pool {
            if clique.len() >= size {
                break;
            }
            if clique.iter().all(|&k| adj[k].contains(&c)) {
                clique.push(c);
            }
        }
        adj.push(Vec::new());
        block.push(v);
        for &k in &clique {
            link(&mut adj, k, v);
        }
    }
    Ok(from_adj(&adj))
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs n >= 3");
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))).expect("complete")
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star")
}

/// `rows x cols` grid, vertex `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edges(rows * cols, edges).expect("grid")
}

/// The forbidden isometric pattern of the alpha_1 characterization.
pub fn w6pp() -> Result<Graph, GenError> {
    Graph::parse(W6PP_EDGES).map_err(|_| GenError::PatternUnavailable("w6pp".into()))
}

/// Fixed small graphs by name.
pub fn named(name: &str) -> Result<Graph, GenError> {
    match name {
        "c4" => Ok(cycle(4)),
        "c5" => Ok(cycle(5)),
        "c6" => Ok(cycle(6)),
        "p5" => Ok(path(5)),
        "k4" => Ok(complete(4)),
        "diamond" => Ok(Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).expect("diamond")),
        "w6pp" => w6pp(),
        other => Err(GenError::UnknownName(other.to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum GenClass {
    Chordal { max_attach: usize },
    DistanceHereditary { mix: OpMix },
    Ptolemaic,
    GluedBlocks { mix: BlockMix },
    Cycle,
    Path,
    Grid { cols: usize },
    Pattern { name: String },
    GnpConnected { p: f64 },
}

/// Everything needed to regenerate a sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    #[serde(flatten)]
    pub class: GenClass,
    pub n: usize,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Graph,
    pub elimination_order: Option<Vec<usize>>,
}

pub fn generate(spec: &GenSpec) -> Result<Generated, GenError> {
    let GenSpec { class, n, seed } = spec;
    let (n, seed) = (*n, *seed);
    let need = |min: usize| {
        if n < min {
            Err(GenError::TooSmall { n, min })
        } else {
            Ok(())
        }
    };
    let plain = |graph: Graph| Generated {
        graph,
        elimination_order: None,
    };
    match class {
        GenClass::Chordal { max_attach } => {
            need(1)?;
            let c = gen_chordal_certified(n, seed, *max_attach);
            Ok(Generated {
                graph: c.graph,
                elimination_order: Some(c.elimination_order),
            })
        }
        GenClass::DistanceHereditary { mix } => gen_distance_hereditary(n, seed, *mix).map(plain),
        GenClass::Ptolemaic => gen_ptolemaic(n, seed).map(plain),
        GenClass::GluedBlocks { mix } => gen_glued_blocks(n, seed, *mix).map(plain),
        GenClass::Cycle => {
            need(3)?;
            Ok(plain(cycle(n)))
        }
        GenClass::Path => {
            need(1)?;
            Ok(plain(path(n)))
        }
        GenClass::Grid { cols } => {
            let cols = (*cols).max(1);
            need(cols)?;
            Ok(plain(grid(n / cols, cols)))
        }
        GenClass::Pattern { name } => named(name).map(plain),
        GenClass::GnpConnected { p } => {
            need(1)?;
            if !(0.0..=1.0).contains(p) {
                return Err(GenError::BadProbability(*p));
            }
            Ok(plain(gen_gnp_connected(n, *p, seed)))
        }
    }
}
