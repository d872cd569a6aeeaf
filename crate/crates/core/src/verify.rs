//! Invariant checks against the exact oracle, grouped into suites that run
//! over seeded corpora.
//!
//! Every bound is an exact integer inequality. Fractional bounds such as
//! `rad + 4i + (i+1)/2 + 2` are compared after doubling both sides.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::approx::{self, Rounding, SweptPair};
use crate::center::{self, Descent, LocalOutcome, TreeRoot, Variant};
use crate::classify;
use crate::gates::{compute_d2_gates, compute_gates, gate_exists, verify_gate};
use crate::generate::{self, BlockMix, GenClass, GenError, GenSpec, OpMix};
use crate::graph::Graph;
use crate::isometric::find_isometric_with;
use crate::oracle::{self, exact_eccentricities, EccReport};
use crate::par::{self, Execution};
use crate::traversal::{bfs, count_bfs, distances_from, DistanceMatrix};
use crate::tree::{self, RootStrategy};

/// Upper limit on the BFS runs of the linear-time center search.
pub const DELTA_BFS_LIMIT: u64 = 60;

/// Graphs at or below this size get a dense distance matrix and a measured
/// alpha index; larger ones rely on their class bound.
pub const DENSE_MAX_N: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub sample: String,
    pub check: String,
    pub detail: String,
}

/// Accumulates check outcomes for one sample.
#[derive(Debug, Default, Clone)]
pub struct Checker {
    pub sample: String,
    pub checks: u64,
    pub violations: Vec<Violation>,
}

impl Checker {
    pub fn new(sample: impl Into<String>) -> Self {
        Checker {
            sample: sample.into(),
            ..Default::default()
        }
    }

    pub fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation {
                sample: self.sample.clone(),
                check: name.to_string(),
                detail: detail(),
            });
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorpusKind {
    Chordal,
    DistanceHereditary,
    Ptolemaic,
    /// Chordal blocks, pentagons and 5-wheels glued at cut vertices.
    GluedBlocks,
    /// Round-robin over every generator, including random graphs and grids.
    Mixed,
}

impl CorpusKind {
    /// Alpha index every member is known to respect.
    pub fn class_bound(self) -> Option<u32> {
        match self {
            CorpusKind::Chordal | CorpusKind::GluedBlocks => Some(1),
            CorpusKind::DistanceHereditary => Some(2),
            CorpusKind::Ptolemaic => Some(0),
            CorpusKind::Mixed => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Sample {
    pub id: String,
    pub spec: GenSpec,
    pub graph: Graph,
    pub class_bound: Option<u32>,
    /// Evaluate bounds at `class_bound` even when a measured index exists.
    pub bound_asserted: bool,
}

/// `count` samples with `n` drawn uniformly from `n_min..=n_max`.
pub fn corpus(kind: CorpusKind, seed: u64, count: usize, n_min: usize, n_max: usize) -> Result<Vec<Sample>, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let n = rng.random_range(n_min..=n_max.max(n_min));
            let s = generate::sub_seed(seed, k as u64 + 1);
            let (class, bound) = match kind {
                CorpusKind::Mixed => mixed_class(k, &mut rng),
                _ => (single_class(kind, &mut rng), kind.class_bound()),
            };
            let spec = GenSpec { class, n, seed: s };
            let graph = generate::generate(&spec)?.graph;
            Ok(Sample {
                id: format!("{kind:?}-{seed}-{k}").to_lowercase(),
                spec,
                graph,
                class_bound: bound,
                bound_asserted: false,
            })
        })
        .collect()
}

fn single_class(kind: CorpusKind, rng: &mut ChaCha8Rng) -> GenClass {
    match kind {
        CorpusKind::Chordal => GenClass::Chordal {
            max_attach: rng.random_range(1..=5),
        },
        CorpusKind::DistanceHereditary => GenClass::DistanceHereditary {
            mix: OpMix {
                pendant: rng.random_range(1..=3),
                true_twin: rng.random_range(0..=2),
                false_twin: rng.random_range(1..=3),
            },
        },
        CorpusKind::Ptolemaic => GenClass::Ptolemaic,
        CorpusKind::GluedBlocks => GenClass::GluedBlocks {
            mix: BlockMix {
                chordal: rng.random_range(2..=8),
                pentagon: rng.random_range(0..=2),
                wheel: rng.random_range(0..=2),
                max_attach: rng.random_range(1..=4),
            },
        },
        CorpusKind::Mixed => unreachable!("handled by mixed_class"),
    }
}

fn mixed_class(k: usize, rng: &mut ChaCha8Rng) -> (GenClass, Option<u32>) {
    match k % 6 {
        0 => (single_class(CorpusKind::Chordal, rng), Some(1)),
        1 => (single_class(CorpusKind::DistanceHereditary, rng), Some(2)),
        2 => (single_class(CorpusKind::GluedBlocks, rng), Some(1)),
        3 => (GenClass::Ptolemaic, Some(0)),
        4 => (
            GenClass::GnpConnected {
                p: [0.03, 0.06, 0.1, 0.2][rng.random_range(0..4)],
            },
            None,
        ),
        _ => (
            GenClass::Grid {
                cols: rng.random_range(2..=6),
            },
            None,
        ),
    }
}

/// Oracle data shared by the checks of one sample.
pub struct Facts {
    pub ecc: EccReport,
    pub dm: Option<DistanceMatrix>,
    /// Measured alpha index (dense samples only).
    pub alpha: Option<u32>,
    /// Alpha index the bounds are evaluated with: measured when available,
    /// else the class bound (or always the bound when it is asserted).
    pub i: Option<u32>,
}

impl Facts {
    pub fn gather(g: &Graph, class_bound: Option<u32>, asserted: bool, exec: Execution) -> Facts {
        let ecc = oracle::exact_eccentricities_with(g, exec);
        let dm = (g.n() <= DENSE_MAX_N).then(|| DistanceMatrix::with_execution(g, exec));
        let alpha = dm.as_ref().map(|dm| classify::alpha_index_with(g, dm, exec));
        Facts {
            ecc,
            i: if asserted { class_bound } else { alpha.or(class_bound) },
            dm,
            alpha,
        }
    }
}

fn sub(a: u32, b: u32) -> i64 {
    a as i64 - b as i64
}

/// Interval thinness is at most `alpha + 1`.
pub fn check_thinness(ck: &mut Checker, dm: &DistanceMatrix, alpha: u32) {
    let t = classify::interval_thinness_with(dm, Execution::Sequential);
    ck.check("thinness_at_most_alpha_plus_1", t <= alpha + 1, || {
        format!("thinness {t}, alpha {alpha}")
    });
}

/// Center diameter, `d^{2i-1}`-convexity of the center and of random disks,
/// locality and distance-to-center bounds.
pub fn check_center_structure(ck: &mut Checker, g: &Graph, dm: &DistanceMatrix, ecc: &EccReport, i: u32, seed: u64) {
    let info = oracle::center_info(g, ecc);
    let c = &ecc.center;
    ck.check("center_diameter_at_most_3i_plus_2", info.diam_of_center <= 3 * i + 2, || {
        format!("diam(C) = {}, i = {i}", info.diam_of_center)
    });
    let k = 2 * i as i64 - 1;
    ck.check("center_dk_convex", classify::dk_convex(dm, c, k), || {
        format!("center {c:?} not d^{k}-convex")
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let v = rng.random_range(0..g.n());
        let r = rng.random_range(0..=ecc.ecc[v]);
        let disk: Vec<usize> = (0..g.n()).filter(|&u| dm.get(v, u) <= r).collect();
        ck.check("disk_dk_convex", classify::dk_convex(dm, &disk, k), || {
            format!("D({v}, {r}) not d^{k}-convex")
        });
    }
    if i <= 1 {
        ck.check("center_diameter_at_most_3", info.diam_of_center <= 3, || {
            format!("diam(C) = {}", info.diam_of_center)
        });
        ck.check(
            "center_radius_at_most_2",
            info.center_connected && info.rad_of_center <= 2,
            || format!("rad(C) = {}, connected {}", info.rad_of_center, info.center_connected),
        );
    }
    ck.check(
        "diameter_at_least_2rad_minus_i_minus_1",
        ecc.diameter as i64 >= 2 * ecc.radius as i64 - i as i64 - 1,
        || format!("diam {} rad {}", ecc.diameter, ecc.radius),
    );
    let to_c = distances_from(g, c);
    for v in 0..g.n() {
        let k = ecc.ecc[v] - ecc.radius;
        if k > 0 {
            ck.check("distance_to_center_at_most_k_plus_i", to_c[v] <= k + i, || {
                format!("v {v}: e = rad + {k}, d(v, C) = {}", to_c[v])
            });
            let loc = oracle::locality(g, ecc, v).value;
            ck.check("locality_at_most_i_plus_1", loc <= i + 1, || format!("loc({v}) = {loc}"));
        }
        let lo = to_c[v] as i64 + ecc.radius as i64 - i as i64;
        ck.check(
            "ecc_within_i_of_center_formula",
            ecc.ecc[v] <= to_c[v] + ecc.radius && ecc.ecc[v] as i64 >= lo,
            || format!("v {v}: e {} d(v,C) {} rad {}", ecc.ecc[v], to_c[v], ecc.radius),
        );
    }
}

fn check_mdp_pair(ck: &mut Checker, g: &Graph, ecc: &EccReport, i: u32, p: &SweptPair) {
    let (rad, diam) = (ecc.radius, ecc.diameter);
    let (x, y) = (p.x.source, p.y.source);
    let d = p.distance();
    let trace = p.trace.as_ref().expect("mdp pair");
    ck.check("mdp_sequence_at_most_3i_plus_4", trace.sequence.len() as u32 <= 3 * i + 4, || {
        format!("sequence {:?}", trace.sequence)
    });
    ck.check("mdp_pair_mutually_distant", ecc.ecc[x] == d && ecc.ecc[y] == d, || {
        format!("e({x}) {} e({y}) {} d {d}", ecc.ecc[x], ecc.ecc[y])
    });
    ck.check(
        "mdp_distance_lower_bounds",
        d as i64 >= 2 * rad as i64 - 4 * i as i64 - 3 && d as i64 >= diam as i64 - 3 * i as i64 - 2,
        || format!("d {d} rad {rad} diam {diam}"),
    );
    let to_c_rows = |c: usize| {
        let row = bfs(g, c);
        ecc.center.iter().map(|&z| row.get(z)).max().unwrap_or(0)
    };
    for r in [Rounding::Floor, Rounding::Ceil] {
        let c = p.middle(r);
        ck.check("mdp_middle_ecc_at_most_rad_plus_2i_plus_1", ecc.ecc[c] <= rad + 2 * i + 1, || {
            format!("middle {c} ({r:?}) e {} rad {rad}", ecc.ecc[c])
        });
        ck.check(
            "mdp_middle_ecc_at_most_half_d_plus_2i_plus_1",
            ecc.ecc[c] <= d.div_ceil(2) + 2 * i + 1,
            || format!("middle {c} e {} d {d}", ecc.ecc[c]),
        );
        let far = to_c_rows(c);
        ck.check("center_within_4i_plus_3_of_mdp_middle", far <= 4 * i + 3, || {
            format!("middle {c}: center vertex at distance {far}")
        });
    }
    let slice: Vec<usize> = (0..g.n())
        .filter(|&v| p.x.get(v) == d / 2 && p.x.get(v) + p.y.get(v) == d)
        .collect();
    let best = slice.iter().map(|&v| ecc.ecc[v]).min().unwrap_or(u32::MAX);
    ck.check("mdp_slice_has_ecc_at_most_rad_plus_i", best <= rad + i, || {
        format!("best slice ecc {best}, rad {rad}")
    });
}

fn check_sweep_pair(ck: &mut Checker, g: &Graph, ecc: &EccReport, i: u32, p: &SweptPair, center_diam: u32) {
    let (rad, diam) = (ecc.radius, ecc.diameter);
    let (x, y) = (p.x.source, p.y.source);
    let d = p.distance();
    for v in [x, y] {
        ck.check(
            "furthest_vertex_ecc_at_least_diam_minus_3i_minus_2",
            ecc.ecc[v] as i64 >= diam as i64 - 3 * i as i64 - 2,
            || format!("v {v} e {} diam {diam}", ecc.ecc[v]),
        );
        ck.check(
            "furthest_vertex_ecc_at_least_2rad_minus_2i_minus_diam_center",
            ecc.ecc[v] as i64 >= 2 * rad as i64 - 2 * i as i64 - center_diam as i64,
            || format!("v {v} e {} rad {rad} diam(C) {center_diam}", ecc.ecc[v]),
        );
    }
    // doubled: e(c) <= rad + 4i + (i+1)/2 + 2
    let twice_bound = 2 * rad as i64 + 8 * i as i64 + i as i64 + 1 + 4;
    let slice: Vec<usize> = (0..g.n())
        .filter(|&v| p.x.get(v) == d / 2 && p.x.get(v) + p.y.get(v) == d)
        .collect();
    for &c in &slice {
        ck.check("sweep_slice_ecc_bound", 2 * ecc.ecc[c] as i64 <= twice_bound, || {
            format!("slice vertex {c} e {} rad {rad}", ecc.ecc[c])
        });
        ck.check("sweep_slice_ecc_at_most_half_d_plus_5i_plus_3", ecc.ecc[c] <= d.div_ceil(2) + 5 * i + 3, || {
            format!("slice vertex {c} e {} d {d}", ecc.ecc[c])
        });
    }
    for r in [Rounding::Floor, Rounding::Ceil] {
        let c = p.middle(r);
        ck.check("sweep_middle_ecc_bound", 2 * ecc.ecc[c] as i64 <= twice_bound, || {
            format!("middle {c} e {} rad {rad}", ecc.ecc[c])
        });
        let row = bfs(g, c);
        let far = ecc.center.iter().map(|&z| row.get(z)).max().unwrap_or(0);
        ck.check(
            "center_within_sweep_middle_radius",
            2 * far as i64 <= 8 * i as i64 + i as i64 + 1 + 4,
            || format!("middle {c}: center vertex at distance {far}"),
        );
    }
}

/// Sweep, mutually-distant-pair, middle-vertex and center-localization
/// bounds, from a few start vertices.
pub fn check_approximations(ck: &mut Checker, g: &Graph, ecc: &EccReport, i: u32, seed: u64) {
    let info = oracle::center_info(g, ecc);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut starts = vec![0, g.n() - 1];
    starts.extend((0..3).map(|_| rng.random_range(0..g.n())));
    for z in starts {
        check_mdp_pair(ck, g, ecc, i, &approx::sweep_mdp(g, z));
        check_sweep_pair(ck, g, ecc, i, &approx::sweep_linear(g, z), info.diam_of_center);
    }
}

/// Lower-bound deficits and spanning-tree deficits.
pub fn check_all_ecc(ck: &mut Checker, g: &Graph, ecc: &EccReport, i: u32) {
    let report = approx::approx_eccentricities(g, approx::PairMode::Mdp);
    for v in 0..g.n() {
        let (lo, e) = (report.lower[v], ecc.ecc[v]);
        ck.check("lower_bound_deficit_at_most_3i_plus_2", lo <= e && e <= lo + 3 * i + 2, || {
            format!("v {v}: lower {lo} exact {e}")
        });
    }
    for (strategy, slack, name) in [
        (RootStrategy::MdpMiddle, 4 * i + 3, "mdp_tree_deficit_at_most_4i_plus_3"),
        (RootStrategy::SweepMiddle, 7 * i + 5, "sweep_tree_deficit_at_most_7i_plus_5"),
    ] {
        let t = tree::build_ecc_tree(g, strategy).expect("valid root");
        check_tree(ck, g, ecc, &t, slack, name);
    }
}

fn check_tree(ck: &mut Checker, g: &Graph, ecc: &EccReport, t: &tree::SpanningTree, slack: u32, name: &str) {
    let tg = t.to_graph();
    ck.check("tree_edges_in_graph", tg.edges().all(|(a, b)| g.has_edge(a, b)), || {
        "tree edge missing from graph".into()
    });
    let brute = exact_eccentricities(&tg).ecc;
    ck.check("tree_formula_matches_brute_force", brute == t.tree_ecc, || {
        format!("root {}", t.root)
    });
    let worst = (0..g.n())
        .map(|v| sub(t.tree_ecc[v], ecc.ecc[v]))
        .max()
        .unwrap_or(0);
    let below = (0..g.n()).any(|v| t.tree_ecc[v] < ecc.ecc[v]);
    ck.check(name, !below && worst <= slack as i64, || {
        format!("root {}: worst deficit {worst}, bound {slack}", t.root)
    });
}

/// Eccentricity-function shape on alpha_1-metric graphs.
pub fn check_unimodality(ck: &mut Checker, g: &Graph, dm: &DistanceMatrix, ecc: &EccReport) {
    let (rad, diam) = (ecc.radius, ecc.diameter);
    let short = diam + 1 < 2 * rad;
    let to_c = distances_from(g, &ecc.center);
    for v in 0..g.n() {
        let e = ecc.ecc[v];
        let improvable = g.neighbors(v).any(|w| ecc.ecc[w] < e);
        if e > rad + 1 || (short && e > rad) {
            ck.check("improving_neighbor_exists", improvable, || {
                format!("v {v}: e {e}, rad {rad}, diam {diam}")
            });
        }
        if e > rad {
            ck.check("distance_to_center_at_most_k_plus_1", to_c[v] <= e - rad + 1, || {
                format!("v {v}: e = rad + {}, d(v, C) = {}", e - rad, to_c[v])
            });
            let loc = oracle::locality(g, ecc, v).value;
            ck.check("locality_at_most_2", loc <= 2, || format!("loc({v}) = {loc}"));
        }
        let eps = u32::from(!short);
        ck.check(
            "ecc_center_formula",
            e <= to_c[v] + rad && e + eps >= to_c[v] + rad,
            || format!("v {v}: e {e}, d(v,C) {}, rad {rad}", to_c[v]),
        );
    }
    for k in 0..=(diam - rad) {
        let level: Vec<usize> = (0..g.n()).filter(|&v| ecc.ecc[v] <= rad + k).collect();
        ck.check("level_set_convex", classify::dk_convex(dm, &level, 0), || {
            format!("level rad + {k}")
        });
    }
    check_decreasing_paths(ck, g, ecc, &to_c, short);
    check_interior_improvement(ck, dm, ecc);
}

/// Every vertex has a shortest path to the center along which the
/// eccentricity strictly decreases, except possibly one level step onto a
/// neighbour of the center (only allowed when `diam >= 2 rad - 1`).
fn check_decreasing_paths(ck: &mut Checker, g: &Graph, ecc: &EccReport, to_c: &[u32], short: bool) {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| to_c[v]);
    let mut good = vec![false; g.n()];
    for &u in &order {
        good[u] = to_c[u] == 0
            || g.neighbors(u).any(|w| {
                to_c[w] + 1 == to_c[u]
                    && good[w]
                    && (ecc.ecc[w] < ecc.ecc[u] || (!short && to_c[w] == 1 && ecc.ecc[w] == ecc.ecc[u]))
            });
    }
    for v in 0..g.n() {
        ck.check("decreasing_path_to_center", good[v], || format!("v {v}"));
    }
}

/// Pairs at distance at least 4 have an interior vertex of smaller
/// eccentricity than the worse endpoint.
fn check_interior_improvement(ck: &mut Checker, dm: &DistanceMatrix, ecc: &EccReport) {
    let n = dm.n();
    for s in 0..n {
        for t in (s + 1)..n {
            let d = dm.get(s, t);
            if d < 4 {
                continue;
            }
            let top = ecc.ecc[s].max(ecc.ecc[t]);
            let ok = (0..n).any(|c| c != s && c != t && dm.in_interval(s, t, c) && ecc.ecc[c] < top);
            ck.check("interior_vertex_of_smaller_ecc", ok, || format!("pair ({s}, {t})"));
        }
    }
}

/// Eccentricity bounds for interval vertices.
pub fn check_interval_ecc(ck: &mut Checker, dm: &DistanceMatrix, ecc: &EccReport, i: u32) {
    let n = dm.n();
    let i = i as i64;
    for x in 0..n {
        for y in (x + 1)..n {
            let d = dm.get(x, y) as i64;
            let top = ecc.ecc[x].max(ecc.ecc[y]) as i64;
            for c in (0..n).filter(|&c| dm.in_interval(x, y, c)) {
                let e = ecc.ecc[c] as i64;
                let near = dm.get(x, c).min(dm.get(y, c)) as i64;
                let mut ok = 2 * e <= 2 * top + 3 * i + 2;
                if d >= 4 * i + 2 && near >= 2 * i + 1 {
                    ok &= e <= top;
                }
                if d > 4 * i + 3 && near > 2 * i + 1 {
                    ok &= e < top;
                }
                ck.check("interval_vertex_ecc_bound", ok, || {
                    format!("x {x} y {y} c {c}: e {e}, max {top}")
                });
            }
        }
    }
}

/// Local-search building blocks and full searches against the oracle.
pub fn check_center_search(ck: &mut Checker, g: &Graph, ecc: &EccReport, delta: bool, seed: u64) {
    let rad = ecc.radius;
    let r1 = center::find_rad_plus_1(g);
    ck.check("rad_plus_1_search", r1.ecc <= rad + 1 && ecc.ecc[r1.vertex] == r1.ecc, || {
        format!("vertex {} e {} rad {rad}", r1.vertex, ecc.ecc[r1.vertex])
    });
    for threshold in [center::low_degree_threshold(g.m()), 0] {
        let c = center::find_central_alpha1_with(g, threshold);
        ck.check("central_search_exact", ecc.ecc[c.vertex] == rad && c.ecc == rad, || {
            format!("threshold {threshold}: vertex {} e {} rad {rad}", c.vertex, ecc.ecc[c.vertex])
        });
        let shrinking = c.trace.windows(2).all(|w| w[1].candidates < w[0].candidates);
        let mut xs: Vec<usize> = c.trace.iter().map(|s| s.x).collect();
        xs.sort_unstable();
        let distinct = xs.windows(2).all(|w| w[0] != w[1]);
        ck.check("central_search_progress", shrinking && distinct, || {
            format!("threshold {threshold}: trace of {} iterations", c.trace.len())
        });
    }
    if delta {
        let (res, calls) = count_bfs(|| center::find_central_alpha1_delta(g));
        match res {
            Ok(d) => {
                ck.check("linear_central_search_exact", ecc.ecc[d.vertex] == rad, || {
                    format!("vertex {} e {} rad {rad} via {:?}", d.vertex, ecc.ecc[d.vertex], d.branch)
                });
                ck.check("linear_central_search_bfs_budget", calls <= DELTA_BFS_LIMIT, || {
                    format!("{calls} BFS runs")
                });
            }
            Err(e) => ck.check("linear_central_search_exact", false, || e.to_string()),
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let probes: Vec<usize> = (0..8).map(|_| rng.random_range(0..g.n())).collect();
    for &x in &probes {
        let e = ecc.ecc[x];
        let better_nb = g.neighbors(x).any(|w| ecc.ecc[w] < e);
        match center::descend_rad2(g, x).outcome {
            Descent::Improved { y, .. } => {
                ck.check("descend_improves", g.has_edge(x, y) && ecc.ecc[y] < e, || {
                    format!("x {x} -> y {y}")
                });
            }
            Descent::AtMostRadPlusOne => {
                ck.check("descend_certificate", e <= rad + 1, || format!("x {x} e {e} rad {rad}"));
            }
        }
        let variants: &[Variant] = if delta {
            &[Variant::General, Variant::TriangleCondition]
        } else {
            &[Variant::General]
        };
        for &v in variants {
            let s = center::local_min_step(g, x, v);
            let agrees = match s.outcome {
                LocalOutcome::Improved { y, .. } => g.has_edge(x, y) && ecc.ecc[y] < e,
                LocalOutcome::LocalMinimum => !better_nb,
            };
            ck.check("local_step_matches_neighbourhood_scan", agrees, || {
                format!("x {x} {v:?}: {:?}", s.outcome)
            });
        }
    }

    let c_root = center::center_of_center(g, ecc);
    let (central_slack, cc_slack) = if delta { (3, 2) } else { (4, 3) };
    let root = if delta { TreeRoot::CentralDelta } else { TreeRoot::Central };
    match center::ecc_tree_alpha1(g, root) {
        Ok(t) => check_tree(ck, g, ecc, &t, central_slack, "central_root_tree_deficit"),
        Err(e) => ck.check("central_root_tree_deficit", false, || e.to_string()),
    }
    let t = tree::bfs_tree(g, c_root).expect("valid root");
    check_tree(ck, g, ecc, &t, cc_slack, "center_of_center_tree_deficit");
}

/// Gates with respect to closed neighbourhoods and cliques, and
/// distance-two gates with respect to cliques.
pub fn check_gates(ck: &mut Checker, g: &Graph, dm: &DistanceMatrix, delta: bool, seed: u64) {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..4 {
        let x = rng.random_range(0..n);
        let mut a = vec![x];
        a.extend(g.neighbors(x));
        let gm = compute_gates(g, &a).expect("nonempty");
        for v in (0..n).filter(|&v| gm.dist[v] > 0) {
            let cand = gm.gate(v).expect("outside target");
            let ok = verify_gate(dm, &a, v, cand);
            ck.check("neighbourhood_gate_verified", ok, || format!("x {x} v {v} candidate {cand}"));
        }
    }
    for _ in 0..4 {
        let k = random_clique(g, &mut rng);
        let gm = compute_gates(g, &k).expect("nonempty");
        for v in (0..n).filter(|&v| gm.dist[v] > 0) {
            let cand = gm.gate(v).expect("outside target");
            let verified = verify_gate(dm, &k, v, cand);
            if delta {
                ck.check("clique_gate_verified", verified, || format!("K {k:?} v {v}"));
            } else if gate_exists(dm, &k, v) {
                ck.check("gate_found_when_one_exists", verified, || format!("K {k:?} v {v}"));
            }
        }
        let d2 = compute_d2_gates(g, &k).expect("clique");
        for v in (0..n).filter(|&v| d2.dist[v] >= 2) {
            let s = d2.gate(v).expect("outside K");
            let pv = dm.projection(v, &k);
            let ps = dm.projection(s, &k);
            let on_path = d2.dist[s] == 2 && dm.get(s, v) + 2 == d2.dist[v];
            ck.check("distance_two_gate_projection", on_path && pv == ps, || {
                format!("K {k:?} v {v} gate {s}: proj {pv:?} vs {ps:?}")
            });
            let mut tiles: Vec<usize> = d2
                .j_of(v)
                .iter()
                .flat_map(|&w| k.iter().copied().filter(move |&a| g.has_edge(w, a)))
                .collect();
            let total = tiles.len();
            tiles.sort_unstable();
            tiles.dedup();
            ck.check("distance_two_gate_disjoint_tiling", tiles == ps && total == ps.len(), || {
                format!("K {k:?} gate {s}: tiles {tiles:?} proj {ps:?}")
            });
        }
    }
}

/// A random vertex, edge or triangle.
fn random_clique(g: &Graph, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let v = rng.random_range(0..g.n());
    let mut k = vec![v];
    let size = rng.random_range(1..=3);
    let mut nb: Vec<usize> = g.neighbors(v).collect();
    while k.len() < size && !nb.is_empty() {
        let w = nb.swap_remove(rng.random_range(0..nb.len()));
        if k.iter().all(|&a| g.has_edge(a, w)) {
            k.push(w);
        }
    }
    k.sort_unstable();
    k
}

/// `alpha <= 1` iff all disks are convex and the forbidden pattern is not an
/// isometric subgraph.
pub fn check_characterization(ck: &mut Checker, g: &Graph, dm: &DistanceMatrix, alpha: u32, pattern: &Graph) {
    let pdm = DistanceMatrix::new(pattern);
    let convex = classify::disks_convex_with(dm, Execution::Sequential);
    let copy = find_isometric_with(pattern, &pdm, g, dm);
    let characterized = convex && copy.is_none();
    ck.check("characterization_equivalence", (alpha <= 1) == characterized, || {
        format!("alpha {alpha}, convex {convex}, pattern copy {copy:?}")
    });
}

/// Named groups of checks runnable over a corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Thinness against alpha on mixed random graphs.
    Classifier,
    /// Center structure and disk convexity.
    CenterStructure,
    /// Radius and diameter approximations.
    Approx,
    /// Lower bounds and approximating trees.
    AllEcc,
    /// Eccentricity-function shape (alpha_1 samples).
    Unimodality,
    /// Center searches (alpha_1 samples).
    CenterSearch,
    /// Gate machinery (alpha_1 samples).
    Gates,
    /// Characterization equivalence on random graphs.
    Characterization,
    /// Every check that applies to alpha_1 samples.
    Alpha1Suite,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Classifier,
        Suite::CenterStructure,
        Suite::Approx,
        Suite::AllEcc,
        Suite::Unimodality,
        Suite::CenterSearch,
        Suite::Gates,
        Suite::Characterization,
        Suite::Alpha1Suite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Classifier => "classifier",
            Suite::CenterStructure => "center-structure",
            Suite::Approx => "approx",
            Suite::AllEcc => "all-ecc",
            Suite::Unimodality => "unimodality",
            Suite::CenterSearch => "center-search",
            Suite::Gates => "gates",
            Suite::Characterization => "characterization",
            Suite::Alpha1Suite => "alpha1-suite",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub samples: usize,
    /// Samples the suite did not apply to (unclassified, too large, or
    /// outside the required class).
    pub skipped: usize,
    pub checks: u64,
    pub violations: Vec<Violation>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs `suite` on every sample. Samples fan out in parallel; each sample's
/// checks run sequentially.
pub fn run_suite(suite: Suite, samples: &[Sample], seed: u64) -> SuiteReport {
    let pattern = generate::w6pp().ok();
    let results = par::map_slice(samples, Execution::default(), |s| {
        run_one(suite, s, seed, pattern.as_ref())
    });
    let mut report = SuiteReport {
        suite: suite.name().to_string(),
        samples: samples.len(),
        skipped: 0,
        checks: 0,
        violations: Vec::new(),
    };
    for r in results {
        match r {
            Some(ck) => {
                report.checks += ck.checks;
                report.violations.extend(ck.violations);
            }
            None => report.skipped += 1,
        }
    }
    report
}

/// `None` when the suite does not apply to the sample.
pub fn run_one(suite: Suite, s: &Sample, seed: u64, pattern: Option<&Graph>) -> Option<Checker> {
    let g = &s.graph;
    let facts = Facts::gather(g, s.class_bound, s.bound_asserted, Execution::Sequential);
    let mut ck = Checker::new(&s.id);
    let local_seed = generate::sub_seed(seed, s.spec.seed);
    let alpha1 = facts.i.is_some_and(|i| i <= 1);
    let delta = alpha1
        && match facts.dm.as_ref() {
            Some(dm) => classify::triangle_condition_with(g, dm),
            None => matches!(s.spec.class, GenClass::Chordal { .. } | GenClass::Ptolemaic),
        };
    match suite {
        Suite::Classifier => check_thinness(&mut ck, facts.dm.as_ref()?, facts.alpha?),
        Suite::CenterStructure => {
            check_center_structure(&mut ck, g, facts.dm.as_ref()?, &facts.ecc, facts.i?, local_seed)
        }
        Suite::Approx => check_approximations(&mut ck, g, &facts.ecc, facts.i?, local_seed),
        Suite::AllEcc => check_all_ecc(&mut ck, g, &facts.ecc, facts.i?),
        Suite::Unimodality => {
            if !alpha1 {
                return None;
            }
            check_unimodality(&mut ck, g, facts.dm.as_ref()?, &facts.ecc);
        }
        Suite::CenterSearch => {
            if !alpha1 {
                return None;
            }
            check_center_search(&mut ck, g, &facts.ecc, delta, local_seed);
        }
        Suite::Gates => {
            if !alpha1 {
                return None;
            }
            check_gates(&mut ck, g, facts.dm.as_ref()?, delta, local_seed);
        }
        Suite::Characterization => {
            check_characterization(&mut ck, g, facts.dm.as_ref()?, facts.alpha?, pattern?)
        }
        Suite::Alpha1Suite => {
            if !alpha1 {
                return None;
            }
            let i = facts.i?;
            check_approximations(&mut ck, g, &facts.ecc, i, local_seed);
            check_all_ecc(&mut ck, g, &facts.ecc, i);
            check_center_search(&mut ck, g, &facts.ecc, delta, local_seed);
            if let Some(dm) = facts.dm.as_ref() {
                check_center_structure(&mut ck, g, dm, &facts.ecc, i, local_seed);
                check_unimodality(&mut ck, g, dm, &facts.ecc);
                check_interval_ecc(&mut ck, dm, &facts.ecc, i);
                check_gates(&mut ck, g, dm, delta, local_seed);
            }
        }
    }
    Some(ck)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic() {
        let a = corpus(CorpusKind::Mixed, 3, 12, 10, 30).unwrap();
        let b = corpus(CorpusKind::Mixed, 3, 12, 10, 30).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.graph, y.graph);
            assert_eq!(x.id, y.id);
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
    }

    #[test]
    fn checker_records_failures() {
        let mut ck = Checker::new("x");
        ck.check("a", true, || unreachable!());
        ck.check("b", false, || "detail".into());
        assert_eq!(ck.checks, 2);
        assert_eq!(ck.violations.len(), 1);
        assert_eq!(ck.violations[0].check, "b");
    }

    #[test]
    fn small_alpha1_suite_is_clean() {
        let samples = corpus(CorpusKind::Chordal, 11, 4, 15, 40).unwrap();
        let r = run_suite(Suite::Alpha1Suite, &samples, 11);
        assert!(r.passed(), "{:?}", r.violations);
        assert!(r.checks > 0);
    }
}
