//! Acceptance run: prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use alphametric::classify;
use alphametric::gates::{compute_gates, gate_exists, verify_gate};
use alphametric::generate::{self, complete, cycle, gen_distance_hereditary, gen_gnp_connected, path, star, OpMix};
use alphametric::par::{self, Execution};
use alphametric::verify::{self, corpus, run_suite, CorpusKind, Sample, Suite, SuiteReport, DELTA_BFS_LIMIT};
use alphametric::{count_bfs, DistanceMatrix};

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict {
            pass,
            detail: detail.into(),
        }
    }
}

/// Accumulates named sub-checks of one criterion.
#[derive(Default)]
struct Tally {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn suite(&mut self, label: &str, r: &SuiteReport) {
        self.notes.push(format!("{label}: {} checks, {} skipped", r.checks, r.skipped));
        if !r.passed() {
            let first = &r.violations[0];
            self.failures.push(format!(
                "{label}: {} violations, first {} on {}: {}",
                r.violations.len(),
                first.check,
                first.sample,
                first.detail
            ));
        }
    }

    fn within(&mut self, start: Instant, limit: Duration) {
        let took = start.elapsed();
        self.expect(took < limit, format!("took {took:?}, limit {limit:?}"));
    }

    fn verdict(self) -> Verdict {
        let pass = self.failures.is_empty();
        let mut parts = self.failures;
        parts.extend(self.notes);
        Verdict::new(pass, parts.join("; "))
    }
}

fn merged(parts: &[(CorpusKind, u64, usize, usize, usize)]) -> Vec<Sample> {
    parts
        .iter()
        .flat_map(|&(kind, seed, count, lo, hi)| corpus(kind, seed, count, lo, hi).expect("corpus generates"))
        .collect()
}

/// Every family, `n` in `lo..=hi`.
fn classified_corpus(seed: u64, per_class: usize, lo: usize, hi: usize) -> Vec<Sample> {
    merged(&[
        (CorpusKind::Chordal, seed, per_class, lo, hi),
        (CorpusKind::DistanceHereditary, seed + 1, per_class, lo, hi),
        (CorpusKind::Ptolemaic, seed + 2, per_class, lo, hi),
        (CorpusKind::GluedBlocks, seed + 3, per_class, lo, hi),
        (CorpusKind::Mixed, seed + 4, 2 * per_class, lo, hi),
    ])
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let mut t = Tally::default();
    let c5 = classify::alpha_index(&cycle(5));
    t.expect(c5 == 1, format!("alpha_index(C5) = {c5}, expected 1"));
    let c6 = classify::alpha_index(&cycle(6));
    t.expect(c6 == 2, format!("alpha_index(C6) = {c6}, expected 2"));
    for n in 1..=8 {
        let a = classify::alpha_index(&complete(n));
        t.expect(a == 0, format!("alpha_index(K{n}) = {a}"));
    }
    let pendant_only = OpMix {
        pendant: 1,
        true_twin: 0,
        false_twin: 0,
    };
    let mut trees = vec![path(9), star(6)];
    trees.extend((0..10).map(|s| gen_distance_hereditary(40, s, pendant_only).expect("tree")));
    for g in &trees {
        let a = classify::alpha_index(g);
        t.expect(g.is_tree() && a == 0, format!("tree with {} vertices: alpha_index {a}", g.n()));
    }
    let mixed = corpus(CorpusKind::Mixed, 101, 200, 4, 60).expect("corpus");
    t.suite("thinness", &run_suite(Suite::Classifier, &mixed, 101));
    t.within(start, Duration::from_secs(60));
    t.verdict()
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let mut t = Tally::default();
    let groups = [
        (CorpusKind::Chordal, 200, "chordal"),
        (CorpusKind::DistanceHereditary, 150, "distance-hereditary"),
        (CorpusKind::Ptolemaic, 100, "ptolemaic"),
    ];
    for (kind, n_max, label) in groups {
        let samples = corpus(kind, 202, 50, 2, n_max).expect("corpus");
        let bound = kind.class_bound().expect("class bound");
        let alphas = par::map_slice(&samples, Execution::default(), |s| classify::alpha_index(&s.graph));
        let worst = alphas.iter().copied().max().unwrap_or(0);
        let bad = alphas.iter().filter(|&&a| a > bound).count();
        t.expect(bad == 0, format!("{label}: {bad} samples above {bound}"));
        if kind == CorpusKind::Ptolemaic {
            t.expect(worst == 0, format!("{label}: max alpha {worst}"));
        }
        t.notes.push(format!("{label}: max alpha {worst}"));
    }
    t.within(start, Duration::from_secs(300));
    t.verdict()
}

fn criterion_3() -> Verdict {
    let mut t = Tally::default();
    let samples = classified_corpus(303, 40, 4, 120);
    t.suite("center structure", &run_suite(Suite::CenterStructure, &samples, 303));
    t.verdict()
}

fn large_corpus() -> Vec<Sample> {
    classified_corpus(404, 16, 8, 2000)
}

fn criterion_4() -> Verdict {
    let start = Instant::now();
    let mut t = Tally::default();
    t.suite("approximation", &run_suite(Suite::Approx, &large_corpus(), 404));
    t.within(start, Duration::from_secs(600));
    t.verdict()
}

fn criterion_5() -> Verdict {
    let mut t = Tally::default();
    t.suite("all eccentricities", &run_suite(Suite::AllEcc, &large_corpus(), 505));
    t.verdict()
}

fn criterion_6() -> Verdict {
    let mut t = Tally::default();
    let samples = merged(&[
        (CorpusKind::Chordal, 606, 40, 4, 120),
        (CorpusKind::GluedBlocks, 607, 40, 4, 120),
        (CorpusKind::Ptolemaic, 608, 20, 4, 120),
        (CorpusKind::Mixed, 609, 40, 4, 120),
    ]);
    t.suite("unimodality", &run_suite(Suite::Unimodality, &samples, 606));
    t.verdict()
}

fn criterion_7() -> Verdict {
    let start = Instant::now();
    let mut t = Tally::default();
    let alpha1 = merged(&[
        (CorpusKind::Chordal, 707, 50, 8, 200),
        (CorpusKind::GluedBlocks, 708, 50, 8, 200),
    ]);
    let classified = par::map_slice(&alpha1, Execution::default(), |s| classify::alpha_index(&s.graph) <= 1);
    let count = classified.iter().filter(|&&c| c).count();
    t.expect(count == 100, format!("only {count} of 100 samples classified alpha_1"));
    t.suite("alpha_1 searches", &run_suite(Suite::CenterSearch, &alpha1, 707));

    let chordal = corpus(CorpusKind::Chordal, 709, 100, 20, 1000).expect("corpus");
    t.suite("linear-time search", &run_suite(Suite::CenterSearch, &chordal, 709));
    let calls = par::map_slice(&chordal, Execution::default(), |s| {
        count_bfs(|| alphametric::center::find_central_alpha1_delta(&s.graph)).1
    });
    let max_calls = calls.iter().copied().max().unwrap_or(0);
    t.expect(max_calls <= DELTA_BFS_LIMIT, format!("{max_calls} BFS runs"));
    t.notes.push(format!("max BFS runs {max_calls}"));
    t.within(start, Duration::from_secs(600));
    t.verdict()
}

fn criterion_8() -> Verdict {
    let mut t = Tally::default();
    let samples = merged(&[
        (CorpusKind::Chordal, 808, 40, 4, 150),
        (CorpusKind::GluedBlocks, 809, 40, 4, 150),
        (CorpusKind::Ptolemaic, 810, 20, 4, 150),
    ]);
    t.suite("gates", &run_suite(Suite::Gates, &samples, 808));
    let c5 = cycle(5);
    let dm = DistanceMatrix::new(&c5);
    let edge = [0, 1];
    let candidate = compute_gates(&c5, &edge).expect("edge").gate(3).expect("outside");
    t.expect(
        !gate_exists(&dm, &edge, 3) && !verify_gate(&dm, &edge, 3, candidate),
        "C5: vertex 3 has a gate to edge 01",
    );
    t.verdict()
}

fn criterion_9() -> Verdict {
    let mut t = Tally::default();
    let Ok(pattern) = generate::w6pp() else {
        return Verdict::new(true, "skipped: forbidden pattern unavailable");
    };
    let graphs: Vec<_> = (0..300u64)
        .map(|k| {
            let n = 4 + (k as usize * 7) % 37;
            let seed = generate::sub_seed(909, k);
            match k % 3 {
                0 => gen_gnp_connected(n, [0.05, 0.15, 0.3, 0.5, 0.7, 0.9][k as usize % 6], seed),
                1 => with_random_edges(&generate::gen_chordal(n, seed, 3), seed, k % 4),
                _ => {
                    let g = generate::gen_glued_blocks(n, seed, Default::default()).expect("glued");
                    with_random_edges(&g, seed, k % 4)
                }
            }
        })
        .collect();
    let outcomes = par::map_slice(&graphs, Execution::default(), |g| {
        let dm = DistanceMatrix::new(g);
        let alpha = classify::alpha_index_with(g, &dm, Execution::Sequential);
        let mut ck = verify::Checker::new(format!("n{}m{}", g.n(), g.m()));
        verify::check_characterization(&mut ck, g, &dm, alpha, &pattern);
        (alpha <= 1, ck.violations)
    });
    let alpha1 = outcomes.iter().filter(|o| o.0).count();
    let bad: Vec<_> = outcomes.iter().flat_map(|o| o.1.iter()).collect();
    t.expect(bad.is_empty(), format!("{} disagreements, first {:?}", bad.len(), bad.first()));
    t.notes.push(format!("{alpha1} of 300 graphs alpha_1"));
    t.verdict()
}

/// `g` plus up to `extra` pseudo-random chords.
fn with_random_edges(g: &alphametric::Graph, seed: u64, extra: u64) -> alphametric::Graph {
    let n = g.n() as u64;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for j in 0..extra {
        let a = (generate::sub_seed(seed, 2 * j + 1) % n) as usize;
        let b = (generate::sub_seed(seed, 2 * j + 2) % n) as usize;
        let e = (a.min(b), a.max(b));
        if a != b && !edges.contains(&e) {
            edges.push(e);
        }
    }
    alphametric::Graph::from_edges(g.n(), edges).expect("adding edges keeps the graph connected")
}

fn strip_timing(report: &str) -> String {
    match report.find("\"timing_ms\": {") {
        Some(start) => {
            let end = start + report[start..].find('}').expect("closed timing block") + 1;
            format!("{}{}", &report[..start], &report[end..])
        }
        None => report.to_string(),
    }
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_alphametric"))
        .args(args)
        .output()
        .expect("cli runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8"))
}

/// Every file below `dir` with its contents, sorted by relative path.
fn read_dir_sorted(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files = Vec::new();
    for e in std::fs::read_dir(dir).expect("dir") {
        let p = e.expect("entry").path();
        let name = p.file_name().expect("name").to_string_lossy().into_owned();
        if p.is_dir() {
            files.extend(read_dir_sorted(&p).into_iter().map(|(n, b)| (format!("{name}/{n}"), b)));
        } else {
            files.push((name, std::fs::read(&p).expect("file")));
        }
    }
    files.sort();
    files
}

fn criterion_10() -> Verdict {
    let mut t = Tally::default();
    let dir = tempfile::tempdir().expect("tempdir");
    let d = dir.path();
    let write = |name: &str, g: &alphametric::Graph| {
        let p = d.join(name);
        std::fs::write(&p, g.to_edge_list()).expect("write graph");
        p.display().to_string()
    };
    let p5 = write("p5.txt", &path(5));
    let c5 = write("c5.txt", &cycle(5));
    let ch = write("chordal.txt", &generate::gen_chordal(90, 10, 4));
    let gb = write("glued.txt", &generate::gen_glued_blocks(70, 10, Default::default()).expect("glued"));
    let tree_out = d.join("tree.edges").display().to_string();
    let gen_out = d.join("gen").display().to_string();

    let mut runs: Vec<(Vec<&str>, Option<i32>)> = vec![
        (vec!["ecc", "exact", "--input", &p5], Some(0)),
        (vec!["center", "alpha1-delta", "--input", &c5], Some(3)),
        (vec!["verify", "alpha1-suite", "--seed", "7", "--count", "50"], Some(0)),
        (vec!["ecc", "exact", "--input", &ch, "--csv"], Some(0)),
        (vec!["bench", "--corpus", "mixed", "--seed", "3", "--count", "8", "--csv"], Some(0)),
        (vec!["bench", "--corpus", "mixed", "--seed", "3", "--count", "8"], Some(0)),
        (vec!["gen", "--class", "glued-blocks", "--n", "40", "--seed", "5", "--count", "3", "--out", &gen_out], Some(0)),
        (vec!["gen", "--class", "chordal", "--n", "40", "--seed", "5", "--count", "2", "--out", &gen_out], Some(0)),
        (vec!["ecc", "--bogus"], Some(64)),
        (vec!["profile", "--input", "/nonexistent/graph.txt"], Some(66)),
    ];
    for g in [&ch, &gb] {
        for cmd in [
            vec!["profile", "--input", g],
            vec!["ecc", "approx", "--input", g, "--mode", "mdp"],
            vec!["ecc", "approx", "--input", g, "--mode", "linear"],
            vec!["ecc", "lower", "--input", g],
            vec!["center", "alpha1", "--input", g, "--trace"],
            vec!["center", "alpha1-delta", "--input", g, "--trace", "--assert-alpha", "1"],
            vec!["center", "rad-plus-1", "--input", g],
            vec!["center", "oracle", "--input", g],
            vec!["tree", "mdp", "--input", g],
            vec!["tree", "sweep", "--input", g],
            vec!["tree", "alpha1", "--input", g, "--out", &tree_out],
        ] {
            runs.push((cmd, None));
        }
    }
    for (args, expected) in &runs {
        let (code_a, out_a) = run_cli(args);
        let side_a = read_dir_sorted(d);
        let (code_b, out_b) = run_cli(args);
        let side_b = read_dir_sorted(d);
        let label = args.join(" ");
        t.expect(code_a == code_b, format!("`{label}`: exit {code_a} then {code_b}"));
        if let Some(e) = expected {
            t.expect(code_a == *e, format!("`{label}`: exit {code_a}, expected {e}"));
        }
        t.expect(strip_timing(&out_a) == strip_timing(&out_b), format!("`{label}`: output differs"));
        t.expect(side_a == side_b, format!("`{label}`: written files differ"));
        if out_a.starts_with('{') {
            t.expect(out_a.contains("\"schema\": 1"), format!("`{label}`: missing schema"));
        }
    }
    let gen_files = read_dir_sorted(&d.join("gen")).len();
    t.expect(gen_files == 10, format!("gen wrote {gen_files} files"));
    let (_, p5_report) = run_cli(&["ecc", "exact", "--input", &p5]);
    t.expect(
        p5_report.contains("\"radius\": 2") && p5_report.contains("\"diameter\": 4"),
        "P5 report lacks radius 2 / diameter 4",
    );
    t.notes.push(format!("{} commands run twice", runs.len()));
    t.verdict()
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("classifier sanity", criterion_1),
        ("class containments", criterion_2),
        ("center structure", criterion_3),
        ("radius and diameter approximation", criterion_4),
        ("all-eccentricity approximation", criterion_5),
        ("unimodality", criterion_6),
        ("central-vertex algorithms", criterion_7),
        ("gate machinery", criterion_8),
        ("characterization equivalence", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = Vec::new();
    for (k, (name, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let v = f();
        let status = if v.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status} [{:.1}s] {name}: {}",
            k + 1,
            start.elapsed().as_secs_f64(),
            v.detail
        );
        if !v.pass {
            failed.push(k + 1);
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
