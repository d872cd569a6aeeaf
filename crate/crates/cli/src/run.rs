use std::fs;
use std::io::Read as _;
use std::path::Path;
use std::time::Instant;

use alphametric::approx::{self, ApproxEccReport, PairMode};
use alphametric::center::{self, TreeRoot};
use alphametric::classify;
use alphametric::generate::{self, BlockMix, GenClass, GenSpec, OpMix};
use alphametric::oracle::{self, center_info, exact_eccentricities_with};
use alphametric::par::{self, Execution};
use alphametric::tree::{self, RootStrategy, SpanningTree};
use alphametric::verify::{self, CorpusKind, Sample, Suite, SuiteReport};
use alphametric::{count_bfs, DistanceMatrix, Graph};
use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::args::*;
use crate::report::*;

/// Largest graph the CLI classifies on its own.
pub const CLASSIFY_MAX_N: usize = 300;

/// Cap on violations listed per suite in the report.
const MAX_LISTED_VIOLATIONS: usize = 200;

const NEEDS_ALPHA1: &str = "guarantee requires α₁-metric input";

pub struct Outcome {
    pub code: u8,
    pub stdout: String,
}

struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            kind: "usage",
            message: message.into(),
        }
    }

    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_NO_INPUT,
            kind: "input",
            message: message.into(),
        }
    }

    fn classification(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_CLASSIFICATION,
            kind: "classification_violation",
            message: message.into(),
        }
    }
}

/// Parses `argv` (program name first), runs the command and renders stdout.
pub fn run(argv: &[String]) -> Outcome {
    let mut rep = RunReport::new(argv.iter().skip(1).cloned().collect());
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Outcome {
                code: EXIT_OK,
                stdout: e.to_string(),
            };
        }
        Err(e) => {
            eprint!("{e}");
            return finish(rep, Err(Failure::usage(e.to_string())), None);
        }
    };
    let mut csv = None;
    let res = dispatch(&cli, &mut rep, &mut csv);
    finish(rep, res, csv)
}

fn finish(mut rep: RunReport, res: Result<u8, Failure>, csv: Option<String>) -> Outcome {
    let code = match res {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            rep.error = Some(ErrorInfo {
                kind: f.kind.to_string(),
                message: f.message,
            });
            f.code
        }
    };
    rep.exit_code = code;
    let stdout = match csv {
        Some(text) if rep.error.is_none() => text,
        _ => rep.to_json(),
    };
    Outcome { code, stdout }
}

fn dispatch(cli: &Cli, rep: &mut RunReport, csv: &mut Option<String>) -> Result<u8, Failure> {
    let wants_csv = cli.csv;
    if wants_csv && !matches!(cli.command, Command::Bench(_) | Command::Ecc(_)) {
        return Err(Failure::usage("--csv is supported by bench and ecc only"));
    }
    match &cli.command {
        Command::Profile(a) => cmd_profile(rep, a),
        Command::Ecc(a) => cmd_ecc(rep, a, wants_csv.then_some(csv)),
        Command::Center(a) => cmd_center(rep, a),
        Command::Tree(a) => cmd_tree(rep, a),
        Command::Gen(a) => cmd_gen(rep, a),
        Command::Verify(a) => cmd_verify(rep, a),
        Command::Bench(a) => cmd_bench(rep, a, wants_csv.then_some(csv)),
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn load(rep: &mut RunReport, path: &Path) -> Result<Graph, Failure> {
    let t = Instant::now();
    let shown = path.display().to_string();
    let bytes = if shown == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| Failure::input(format!("stdin: {e}")))?;
        buf
    } else {
        fs::read(path).map_err(|e| Failure::input(format!("{shown}: {e}")))?
    };
    let text = std::str::from_utf8(&bytes).map_err(|e| Failure::input(format!("{shown}: {e}")))?;
    let g = Graph::parse(text).map_err(|e| Failure::input(format!("{shown}: {e}")))?;
    rep.input = Some(InputInfo {
        path: shown,
        sha256: sha256_hex(&bytes),
        n: g.n(),
        m: g.m(),
    });
    rep.time("load", t);
    Ok(g)
}

/// Fills `rep.alpha` (and `rep.profile` when the classifier runs).
fn classify(rep: &mut RunReport, g: &Graph, asserted: Option<u32>) {
    if let Some(i) = asserted {
        rep.alpha = Some(AlphaUsed {
            i,
            basis: Basis::Asserted,
        });
        return;
    }
    if g.n() > CLASSIFY_MAX_N {
        rep.caveats.push(format!(
            "not classified (more than {CLASSIFY_MAX_N} vertices); pass --assert-alpha to report guarantees"
        ));
        return;
    }
    let t = Instant::now();
    let p = classify::profile(g);
    rep.time("classify", t);
    rep.alpha = Some(AlphaUsed {
        i: p.alpha_index,
        basis: Basis::Measured,
    });
    rep.profile = Some(p);
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payload serializes")
}

fn cmd_profile(rep: &mut RunReport, a: &InputArgs) -> Result<u8, Failure> {
    let g = load(rep, &a.input)?;
    let t = Instant::now();
    let (p, calls) = count_bfs(|| classify::profile(&g));
    rep.time("classify", t);
    rep.bfs_calls = calls;
    if p.alpha1_by_characterization.is_none() {
        rep.caveats
            .push("characterization skipped (graph too large or pattern unavailable)".into());
    }
    rep.result = to_value(&p);
    rep.alpha = Some(AlphaUsed {
        i: p.alpha_index,
        basis: Basis::Measured,
    });
    rep.profile = Some(p);
    Ok(EXIT_OK)
}

fn pair_mode(m: Mode) -> PairMode {
    match m {
        Mode::Linear => PairMode::Linear,
        Mode::Mdp => PairMode::Mdp,
    }
}

fn cmd_ecc(rep: &mut RunReport, a: &EccArgs, csv: Option<&mut Option<String>>) -> Result<u8, Failure> {
    let g = load(rep, &a.input.input)?;
    if a.kind != EccKind::Exact {
        classify(rep, &g, a.alpha.assert_alpha);
    }
    let t = Instant::now();
    let rows: Vec<String>;
    match a.kind {
        EccKind::Exact => {
            let (ecc, calls) = count_bfs(|| exact_eccentricities_with(&g, Execution::Sequential));
            rep.bfs_calls = calls;
            let info = center_info(&g, &ecc);
            let mut v = to_value(&ecc);
            if let (Value::Object(dst), Value::Object(src)) = (&mut v, to_value(&info)) {
                dst.extend(src);
            }
            rows = ecc.ecc.iter().enumerate().map(|(i, e)| format!("{i},{e}")).collect();
            rep.result = v;
        }
        EccKind::Approx | EccKind::Lower => {
            let mode = if a.kind == EccKind::Lower { PairMode::Mdp } else { pair_mode(a.mode) };
            let report = match (&a.pair, a.kind) {
                (Some(p), EccKind::Lower) => {
                    let (x, y) = (p[0], p[1]);
                    if x >= g.n() || y >= g.n() {
                        return Err(Failure::usage(format!("pair ({x}, {y}) outside 0..{}", g.n())));
                    }
                    let (r, calls) = count_bfs(|| approx::ecc_lower_bounds(&g, x, y));
                    rep.bfs_calls = calls;
                    r.map_err(|e| Failure::usage(e.to_string()))?
                }
                (Some(_), _) => return Err(Failure::usage("--pair applies to `ecc lower` only")),
                (None, _) => {
                    let (r, calls) = count_bfs(|| approx::approx_eccentricities(&g, mode));
                    rep.bfs_calls = calls;
                    r
                }
            };
            ecc_guarantees(rep, &report);
            let upper = rep.alpha.as_ref().filter(|_| report.mode == PairMode::Mdp).map(|al| {
                report.lower.iter().map(|&l| l + 3 * al.i + 2).collect::<Vec<u32>>()
            });
            rows = (0..g.n())
                .map(|v| match &upper {
                    Some(u) => format!("{v},{},{}", report.lower[v], u[v]),
                    None => format!("{v},{},", report.lower[v]),
                })
                .collect();
            let mut v = to_value(&report);
            v["upper"] = to_value(&upper);
            rep.result = v;
        }
    }
    rep.time("compute", t);
    if let Some(out) = csv {
        let header = match a.kind {
            EccKind::Exact => "vertex,ecc",
            _ => "vertex,lower,upper",
        };
        *out = Some(format!("{header}\n{}\n", rows.join("\n")));
    }
    Ok(EXIT_OK)
}

fn ecc_guarantees(rep: &mut RunReport, r: &ApproxEccReport) {
    let c = r.radius_witness;
    match r.mode {
        PairMode::Mdp => {
            rep.guarantee("mdp_middle_ecc", |i| format!("e({c}) <= rad + 2i + 1 = rad + {}", 2 * i + 1));
            rep.guarantee("mdp_pair_distance", |i| {
                format!(
                    "{} >= max(diam - 3i - 2, 2 rad - 4i - 3) = max(diam - {}, 2 rad - {})",
                    r.pair_distance,
                    3 * i + 2,
                    4 * i + 3
                )
            });
            rep.guarantee("center_near_mdp_middle", |i| {
                format!("every central vertex is within {} of {c}", 4 * i + 3)
            });
            rep.guarantee("lower_bound_deficit", |i| format!("lower(v) <= e(v) <= lower(v) + {}", 3 * i + 2));
        }
        PairMode::Linear => {
            let x = r.pair.0;
            rep.guarantee("sweep_middle_ecc", |i| {
                format!("e({c}) <= rad + 4i + (i+1)/2 + 2, so e({c}) <= rad + {}", 4 * i + (i + 1) / 2 + 2)
            });
            rep.guarantee("sweep_vertex_ecc", |i| format!("e({x}) >= diam - {}", 3 * i + 2));
            rep.guarantee("center_near_sweep_middle", |i| {
                format!("every central vertex is within {} of {c}", 4 * i + (i + 1) / 2 + 2)
            });
        }
    }
}

/// Checks the alpha_1 (and optionally triangle-condition) precondition.
/// `Ok(false)` when the graph was not classified.
fn require_alpha1(rep: &mut RunReport, needs_triangle: bool) -> Result<bool, Failure> {
    let Some(al) = rep.alpha.clone() else {
        rep.caveats.push(NEEDS_ALPHA1.to_string());
        return Ok(false);
    };
    if al.i > 1 {
        return Err(Failure::classification(format!(
            "alpha index {} ({:?}) exceeds 1; {NEEDS_ALPHA1}",
            al.i, al.basis
        )));
    }
    if needs_triangle {
        if let Some(p) = &rep.profile {
            if !p.triangle_condition {
                return Err(Failure::classification(
                    "triangle condition fails; the linear-time search requires it",
                ));
            }
        }
    }
    Ok(true)
}

fn cmd_center(rep: &mut RunReport, a: &CenterArgs) -> Result<u8, Failure> {
    let algo = a.algo.or(a.algo_flag).expect("clap requires one algo");
    let g = load(rep, &a.input.input)?;
    if algo != CenterAlgo::Oracle {
        classify(rep, &g, a.alpha.assert_alpha);
        require_alpha1(rep, algo == CenterAlgo::Alpha1Delta)?;
    }
    let t = Instant::now();
    let result = match algo {
        CenterAlgo::Oracle => {
            let (ecc, calls) = count_bfs(|| exact_eccentricities_with(&g, Execution::Sequential));
            rep.bfs_calls = calls;
            json!({ "vertex": ecc.center[0], "ecc": ecc.radius, "center": ecc.center })
        }
        CenterAlgo::RadPlus1 => {
            let (f, calls) = count_bfs(|| center::find_rad_plus_1(&g));
            rep.bfs_calls = calls;
            rep.guarantee("rad_plus_1_search", |_| format!("e({}) <= rad + 1", f.vertex));
            to_value(&f)
        }
        CenterAlgo::Alpha1 => {
            let (s, calls) = count_bfs(|| center::find_central_alpha1(&g));
            rep.bfs_calls = calls;
            rep.guarantee("central_search", |_| format!("e({}) = rad", s.vertex));
            let mut v = json!({ "vertex": s.vertex, "ecc": s.ecc, "start": s.start });
            if a.trace {
                v["trace"] = to_value(&s.trace);
            }
            v
        }
        CenterAlgo::Alpha1Delta => {
            let (s, calls) = count_bfs(|| center::find_central_alpha1_delta(&g));
            rep.bfs_calls = calls;
            let s = s.map_err(|e| Failure::classification(e.to_string()))?;
            rep.guarantee("linear_central_search", |_| {
                format!("e({}) = rad using at most {} BFS runs", s.vertex, verify::DELTA_BFS_LIMIT)
            });
            let mut v = json!({ "vertex": s.vertex, "ecc": s.ecc, "branch": s.branch });
            if a.trace {
                v["trace"] = to_value(&s.trace);
            }
            v
        }
    };
    rep.time("compute", t);
    rep.result = result;
    Ok(EXIT_OK)
}

fn cmd_tree(rep: &mut RunReport, a: &TreeArgs) -> Result<u8, Failure> {
    let g = load(rep, &a.input.input)?;
    classify(rep, &g, a.alpha.assert_alpha);
    let t = Instant::now();
    let tree: SpanningTree = match a.kind {
        TreeKind::Mdp | TreeKind::Sweep => {
            let strategy = if a.kind == TreeKind::Mdp {
                RootStrategy::MdpMiddle
            } else {
                RootStrategy::SweepMiddle
            };
            let (t, calls) = count_bfs(|| tree::build_ecc_tree(&g, strategy));
            rep.bfs_calls = calls;
            let t = t.expect("sweep roots are in range");
            let slack = |i: u32| if a.kind == TreeKind::Mdp { 4 * i + 3 } else { 7 * i + 5 };
            rep.guarantee("tree_deficit", |i| {
                format!("e(v) <= e_T(v) <= e(v) + {} for every v", slack(i))
            });
            t
        }
        TreeKind::Alpha1 => {
            require_alpha1(rep, false)?;
            let delta = rep.profile.as_ref().is_some_and(|p| p.triangle_condition);
            let root = if delta { TreeRoot::CentralDelta } else { TreeRoot::Central };
            let (t, calls) = count_bfs(|| center::ecc_tree_alpha1(&g, root));
            rep.bfs_calls = calls;
            let t = t.map_err(|e| Failure::classification(e.to_string()))?;
            let slack = if delta { 3 } else { 4 };
            rep.guarantee("tree_deficit", |_| format!("e(v) <= e_T(v) <= e(v) + {slack} for every v"));
            t
        }
    };
    rep.time("compute", t);
    if let Some(out) = &a.out {
        fs::write(out, tree.to_edge_list())
            .map_err(|e| Failure::usage(format!("{}: {e}", out.display())))?;
    }
    rep.result = to_value(&tree);
    Ok(EXIT_OK)
}

fn gen_class(a: &GenArgs) -> Result<(GenClass, &'static str), Failure> {
    Ok(match a.class {
        GenKind::Chordal => (GenClass::Chordal { max_attach: a.max_attach }, "chordal"),
        GenKind::DistanceHereditary => (
            GenClass::DistanceHereditary {
                mix: OpMix {
                    pendant: a.mix[0],
                    true_twin: a.mix[1],
                    false_twin: a.mix[2],
                },
            },
            "distance-hereditary",
        ),
        GenKind::Ptolemaic => (GenClass::Ptolemaic, "ptolemaic"),
        GenKind::GluedBlocks => (
            GenClass::GluedBlocks {
                mix: BlockMix {
                    chordal: a.block_mix[0],
                    pentagon: a.block_mix[1],
                    wheel: a.block_mix[2],
                    max_attach: a.max_attach,
                },
            },
            "glued-blocks",
        ),
        GenKind::Cycle => (GenClass::Cycle, "cycle"),
        GenKind::Path => (GenClass::Path, "path"),
        GenKind::Grid => (GenClass::Grid { cols: a.cols }, "grid"),
        GenKind::Pattern => {
            let name = a.name.clone().ok_or_else(|| Failure::usage("--class pattern needs --name"))?;
            (GenClass::Pattern { name }, "pattern")
        }
        GenKind::GnpConnected => (GenClass::GnpConnected { p: a.p }, "gnp-connected"),
    })
}

fn cmd_gen(rep: &mut RunReport, a: &GenArgs) -> Result<u8, Failure> {
    let (class, label) = gen_class(a)?;
    fs::create_dir_all(&a.out).map_err(|e| Failure::usage(format!("{}: {e}", a.out.display())))?;
    let t = Instant::now();
    let mut files = Vec::new();
    for k in 0..a.count {
        let spec = GenSpec {
            class: class.clone(),
            n: a.n,
            seed: a.seed.wrapping_add(k as u64),
        };
        let generated = generate::generate(&spec).map_err(|e| Failure::usage(e.to_string()))?;
        let g = &generated.graph;
        let edges = g.to_edge_list();
        let sha = sha256_hex(edges.as_bytes());
        let stem = format!("{label}-n{}-s{}", spec.n, spec.seed);
        let sidecar = json!({
            "spec": spec,
            "n": g.n(),
            "m": g.m(),
            "sha256": sha,
            "elimination_order": generated.elimination_order,
        });
        let write = |name: &str, body: &str| {
            fs::write(a.out.join(name), body).map_err(|e| Failure::usage(format!("{name}: {e}")))
        };
        write(&format!("{stem}.edges"), &edges)?;
        write(
            &format!("{stem}.json"),
            &(serde_json::to_string_pretty(&sidecar).expect("sidecar serializes") + "\n"),
        )?;
        files.push(json!({
            "edges": format!("{stem}.edges"),
            "sidecar": format!("{stem}.json"),
            "n": g.n(),
            "m": g.m(),
            "sha256": sha,
        }));
    }
    rep.time("generate", t);
    rep.result = json!({ "files": files });
    Ok(EXIT_OK)
}

fn corpus_kind(c: CorpusArg) -> CorpusKind {
    match c {
        CorpusArg::Chordal => CorpusKind::Chordal,
        CorpusArg::DistanceHereditary => CorpusKind::DistanceHereditary,
        CorpusArg::Ptolemaic => CorpusKind::Ptolemaic,
        CorpusArg::GluedBlocks => CorpusKind::GluedBlocks,
        CorpusArg::Mixed => CorpusKind::Mixed,
    }
}

fn build_corpus(rep: &mut RunReport, c: &CorpusArgs) -> Result<Vec<Sample>, Failure> {
    if c.n_min == 0 || c.n_min > c.n_max {
        return Err(Failure::usage("need 1 <= --n-min <= --n-max"));
    }
    let t = Instant::now();
    let samples = verify::corpus(corpus_kind(c.corpus), c.seed, c.count, c.n_min, c.n_max)
        .map_err(|e| Failure::usage(e.to_string()))?;
    rep.time("generate", t);
    Ok(samples)
}

fn cmd_verify(rep: &mut RunReport, a: &VerifyArgs) -> Result<u8, Failure> {
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::from_name(&a.suite).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            Failure::usage(format!("unknown suite {:?}; expected all or one of {}", a.suite, names.join(", ")))
        })?]
    };
    let (samples, seed) = match &a.input {
        Some(path) => {
            let g = load(rep, path)?;
            let spec = GenSpec {
                class: GenClass::Path,
                n: g.n(),
                seed: a.corpus.seed,
            };
            let s = Sample {
                id: "input".into(),
                spec,
                graph: g,
                class_bound: a.alpha.assert_alpha,
                bound_asserted: a.alpha.assert_alpha.is_some(),
            };
            (vec![s], a.corpus.seed)
        }
        None => (build_corpus(rep, &a.corpus)?, a.corpus.seed),
    };
    let t = Instant::now();
    let mut reports: Vec<SuiteReport> = suites.iter().map(|&s| verify::run_suite(s, &samples, seed)).collect();
    rep.time("verify", t);
    let violations: usize = reports.iter().map(|r| r.violations.len()).sum();
    let checks: u64 = reports.iter().map(|r| r.checks).sum();
    for r in &mut reports {
        r.violations.truncate(MAX_LISTED_VIOLATIONS);
    }
    rep.result = json!({
        "samples": samples.len(),
        "checks": checks,
        "violations": violations,
        "suites": reports,
    });
    Ok(if violations == 0 { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

#[derive(Debug, Serialize)]
struct BenchRow {
    graph_id: String,
    n: usize,
    m: usize,
    alpha: Option<u32>,
    alpha_basis: Option<&'static str>,
    rad: u32,
    diam: u32,
    c_approx: usize,
    e_c_approx: u32,
    deficit: u32,
    /// Whether the deficit respects the bound for the pair mode at `alpha`.
    within_bound: Option<bool>,
    approx_bfs_calls: u64,
}

fn cmd_bench(rep: &mut RunReport, a: &BenchArgs, csv: Option<&mut Option<String>>) -> Result<u8, Failure> {
    let samples = build_corpus(rep, &a.corpus)?;
    let mode = pair_mode(a.mode);
    let t = Instant::now();
    let rows = par::map_slice(&samples, Execution::default(), |s| {
        let g = &s.graph;
        let (alpha, basis) = if g.n() <= CLASSIFY_MAX_N {
            let dm = DistanceMatrix::with_execution(g, Execution::Sequential);
            (Some(classify::alpha_index_with(g, &dm, Execution::Sequential)), Some("measured"))
        } else {
            (s.class_bound, s.class_bound.map(|_| "class_bound"))
        };
        let ecc = oracle::exact_eccentricities_with(g, Execution::Sequential);
        let (est, calls) = count_bfs(|| approx::approx_radius(g, mode));
        let e = ecc.ecc[est.center];
        let deficit = e - ecc.radius;
        let slack = |i: u32| match mode {
            PairMode::Mdp => 2 * i + 1,
            PairMode::Linear => 4 * i + (i + 1) / 2 + 2,
        };
        BenchRow {
            graph_id: s.id.clone(),
            n: g.n(),
            m: g.m(),
            alpha,
            alpha_basis: basis,
            rad: ecc.radius,
            diam: ecc.diameter,
            c_approx: est.center,
            e_c_approx: e,
            deficit,
            within_bound: alpha.map(|i| deficit <= slack(i)),
            approx_bfs_calls: calls,
        }
    });
    rep.time("bench", t);
    if let Some(out) = csv {
        let mut text = String::from("graph_id,n,m,alpha,rad,diam,e(c_approx),deficit\n");
        for r in &rows {
            let alpha = r.alpha.map_or(String::new(), |a| a.to_string());
            text.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.graph_id, r.n, r.m, alpha, r.rad, r.diam, r.e_c_approx, r.deficit
            ));
        }
        *out = Some(text);
    }
    let outside = rows.iter().filter(|r| r.within_bound == Some(false)).count();
    rep.result = json!({ "mode": mode, "rows": rows, "outside_bound": outside });
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alphametric::generate::{cycle, gen_chordal, path};

    fn run_args(args: &[&str]) -> (u8, String) {
        let mut argv = vec!["alphametric".to_string()];
        argv.extend(args.iter().map(|s| s.to_string()));
        let out = run(&argv);
        (out.code, out.stdout)
    }

    fn json_of(args: &[&str]) -> (u8, Value) {
        let (code, out) = run_args(args);
        (code, serde_json::from_str(&out).expect("stdout is JSON"))
    }

    fn graph_file(dir: &Path, name: &str, g: &Graph) -> String {
        let p = dir.join(name);
        fs::write(&p, g.to_edge_list()).unwrap();
        p.display().to_string()
    }

    #[test]
    fn exact_eccentricities_of_a_path() {
        let dir = tempfile::tempdir().unwrap();
        let p5 = graph_file(dir.path(), "p5", &path(5));
        let (code, v) = json_of(&["ecc", "exact", "--input", &p5]);
        assert_eq!(code, 0);
        assert_eq!(v["schema"], 1);
        assert_eq!(v["result"]["radius"], 2);
        assert_eq!(v["result"]["diameter"], 4);
        assert_eq!(v["result"]["eps_flag"], 1);
        assert_eq!(v["bfs_calls"], 5);
        assert_eq!(v["input"]["n"], 5);
        assert_eq!(v["input"]["sha256"].as_str().unwrap().len(), 64);
        let (_, csv) = run_args(&["ecc", "exact", "--input", &p5, "--csv"]);
        assert_eq!(csv, "vertex,ecc\n0,4\n1,3\n2,2\n3,3\n4,4\n");
    }

    #[test]
    fn linear_search_on_pentagon_is_a_classification_violation() {
        let dir = tempfile::tempdir().unwrap();
        let c5 = graph_file(dir.path(), "c5", &cycle(5));
        let (code, v) = json_of(&["center", "alpha1-delta", "--input", &c5]);
        assert_eq!(code, EXIT_CLASSIFICATION);
        assert_eq!(v["error"]["kind"], "classification_violation");
        assert_eq!(v["profile"]["triangle_condition"], false);
        let (code, v) = json_of(&["center", "alpha1-delta", "--input", &c5, "--assert-alpha", "1"]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["ecc"], 2);
        assert_eq!(v["guarantees"][0]["basis"], "asserted");
        let (code, _) = json_of(&["center", "alpha1", "--input", &c5]);
        assert_eq!(code, 0);
        let c6 = graph_file(dir.path(), "c6", &cycle(6));
        let (code, _) = json_of(&["center", "alpha1", "--input", &c6]);
        assert_eq!(code, EXIT_CLASSIFICATION);
        let (code, _) = json_of(&["center", "--algo", "oracle", "--input", &c6]);
        assert_eq!(code, 0);
    }

    #[test]
    fn bad_flags_and_missing_input() {
        let (code, v) = json_of(&["ecc", "sideways", "--input", "x"]);
        assert_eq!(code, EXIT_USAGE);
        assert_eq!(v["error"]["kind"], "usage");
        let (code, v) = json_of(&["profile", "--input", "/definitely/not/here"]);
        assert_eq!(code, EXIT_NO_INPUT);
        assert!(v["result"].is_null());
        let (code, _) = json_of(&["verify", "no-such-suite"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _) = json_of(&["center", "alpha1", "--csv", "--input", "x"]);
        assert_eq!(code, EXIT_USAGE);
        let dir = tempfile::tempdir().unwrap();
        let bad = dir.path().join("bad");
        fs::write(&bad, "3 1\n0 1\n").unwrap();
        let (code, v) = json_of(&["profile", "--input", bad.to_str().unwrap()]);
        assert_eq!(code, EXIT_NO_INPUT);
        assert!(v["error"]["message"].as_str().unwrap().contains("disconnected"));
    }

    #[test]
    fn guarantees_name_bound_and_index() {
        let dir = tempfile::tempdir().unwrap();
        let g = graph_file(dir.path(), "g", &gen_chordal(60, 2, 3));
        let (code, v) = json_of(&["ecc", "approx", "--input", &g]);
        assert_eq!(code, 0);
        assert_eq!(v["alpha"]["basis"], "measured");
        let gs = v["guarantees"].as_array().unwrap();
        assert!(gs.iter().any(|x| x["name"] == "lower_bound_deficit" && x["i"] == 1));
        let lower = v["result"]["lower"].as_array().unwrap();
        let upper = v["result"]["upper"].as_array().unwrap();
        assert_eq!(upper[0].as_u64().unwrap(), lower[0].as_u64().unwrap() + 5);
        let (_, v) = json_of(&["ecc", "approx", "--input", &g, "--mode", "linear"]);
        assert_eq!(v["bfs_calls"], 3);
        assert!(v["result"]["upper"].is_null());
        let (_, v) = json_of(&["tree", "mdp", "--input", &g, "--alpha", "2"]);
        assert_eq!(v["alpha"]["basis"], "asserted");
        assert!(v["guarantees"][0]["statement"].as_str().unwrap().contains("e(v) + 11"));
    }

    #[test]
    fn lower_bounds_need_a_mutually_distant_pair() {
        let dir = tempfile::tempdir().unwrap();
        let p5 = graph_file(dir.path(), "p5", &path(5));
        let (code, v) = json_of(&["ecc", "lower", "--input", &p5, "--pair", "0", "4"]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["lower"], json!([4, 3, 2, 3, 4]));
        let (code, _) = json_of(&["ecc", "lower", "--input", &p5, "--pair", "0", "3"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn tree_export_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let g = graph_file(dir.path(), "g", &gen_chordal(40, 9, 3));
        let out = dir.path().join("t.edges");
        let (code, v) = json_of(&["tree", "alpha1", "--input", &g, "--out", out.to_str().unwrap()]);
        assert_eq!(code, 0);
        let t = Graph::parse(&fs::read_to_string(&out).unwrap()).unwrap();
        assert!(t.is_tree());
        assert_eq!(t.n(), 40);
        assert_eq!(v["result"]["tree_ecc"].as_array().unwrap().len(), 40);
    }

    #[test]
    fn gen_writes_edge_lists_and_sidecars() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("corpus");
        let (code, v) = json_of(&[
            "gen", "--class", "chordal", "--n", "25", "--seed", "3", "--count", "2", "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["files"].as_array().unwrap().len(), 2);
        let g = Graph::parse(&fs::read_to_string(out.join("chordal-n25-s4.edges")).unwrap()).unwrap();
        assert_eq!(g, gen_chordal(25, 4, 3));
        let side: Value = serde_json::from_str(&fs::read_to_string(out.join("chordal-n25-s4.json")).unwrap()).unwrap();
        assert_eq!(side["spec"]["class"], "chordal");
        assert_eq!(side["spec"]["seed"], 4);
        assert_eq!(side["elimination_order"].as_array().unwrap().len(), 25);
        let (code, _) = json_of(&["gen", "--class", "pattern", "--n", "9", "--out", out.to_str().unwrap()]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _) = json_of(&[
            "gen", "--class", "pattern", "--name", "w6pp", "--n", "9", "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
    }

    #[test]
    fn verify_reports_failures_with_exit_2() {
        let (code, v) = json_of(&["verify", "alpha1-suite", "--seed", "7", "--count", "5"]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["violations"], 0);
        let dir = tempfile::tempdir().unwrap();
        let c12 = graph_file(dir.path(), "c12", &cycle(12));
        let (code, v) = json_of(&["verify", "all-ecc", "--input", &c12, "--assert-alpha", "0"]);
        assert_eq!(code, EXIT_VERIFY_FAILED);
        assert!(v["result"]["violations"].as_u64().unwrap() > 0);
    }

    #[test]
    fn bench_csv_columns() {
        let (code, csv) = run_args(&["bench", "--count", "3", "--n-max", "40", "--csv"]);
        assert_eq!(code, 0);
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "graph_id,n,m,alpha,rad,diam,e(c_approx),deficit");
        assert_eq!(lines.len(), 4);
        let (_, v) = json_of(&["bench", "--count", "3", "--n-max", "40"]);
        assert_eq!(v["result"]["outside_bound"], 0);
    }
}
