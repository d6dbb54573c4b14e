//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runs without the libtest harness so the lines always
//! show.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use levelpers::{fixtures, Map};
use levelpers_cli::corpus::random_corpus;
use levelpers_cli::{analyze, run_checks, CheckRecord, EndFlag, ResultDocument, Sections};

const CORPUS_SEED: u64 = 2024;
const CORPUS_SIZE: usize = 120;
const TIME_LIMIT: Duration = Duration::from_secs(60);

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn level_strings(doc: &ResultDocument) -> Vec<String> {
    let bracket = |e: EndFlag, open: &str, closed: &str| if e == EndFlag::Open { open.to_string() } else { closed.to_string() };
    doc.level_bars
        .iter()
        .flatten()
        .map(|b| {
            format!("H{} {}{}, {}{} x{}", b.degree, bracket(b.left, "(", "["), b.birth, b.death, bracket(b.right, ")", "]"), b.multiplicity)
        })
        .collect()
}

fn sublevel_strings(doc: &ResultDocument) -> Vec<String> {
    doc.sublevel_bars
        .iter()
        .flatten()
        .map(|b| format!("H{} [{}, {}) x{}", b.degree, b.birth, b.death.as_deref().unwrap_or("inf"), b.multiplicity))
        .collect()
}

fn sorted(v: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    v.sort();
    v
}

/// Criterion 1: fixture barcodes equal the hand-derived tables.
fn fixture_suite() -> Result<String, String> {
    let cases: Vec<(&str, Map, Vec<&str>, Vec<&str>)> = vec![
        ("interval edge", fixtures::interval_edge(), vec!["H0 [0, 1] x1"], vec!["H0 [0, inf) x1"]),
        (
            "square circle",
            fixtures::square_circle(),
            vec!["H0 [0, 2] x1", "H0 (0, 2) x1"],
            vec!["H0 [0, inf) x1", "H1 [2, inf) x1"],
        ),
        ("lambda map", fixtures::lambda_map(), vec!["H0 [0, 2] x1", "H0 [1, 2) x1"], vec!["H0 [0, inf) x1", "H0 [1, 2) x1"]),
        ("V map", fixtures::v_map(), vec!["H0 [0, 2] x1", "H0 (0, 1] x1"], vec!["H0 [0, inf) x1"]),
        (
            "octahedron",
            fixtures::octahedron(),
            vec!["H0 [-1, 1] x1", "H1 (-1, 1) x1"],
            vec!["H0 [-1, inf) x1", "H2 [1, inf) x1"],
        ),
        (
            "two points to edge (telescope)",
            fixtures::two_points_telescope(),
            vec!["H0 [0, 1] x1", "H0 [0, 1) x1"],
            vec!["H0 [0, 1) x1", "H0 [0, inf) x1"],
        ),
    ];
    let mut slowest = Duration::ZERO;
    for (name, f, level, sublevel) in &cases {
        let start = Instant::now();
        let a = analyze(f, None).map_err(|e| format!("{}: {}", name, e))?;
        let doc = ResultDocument::from_analysis(&a, Sections::ALL, None);
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        let (mut got_level, mut got_sub) = (level_strings(&doc), sublevel_strings(&doc));
        got_level.sort();
        got_sub.sort();
        if got_level != sorted(level) {
            return Err(format!("{}: level bars {:?}, expected {:?}", name, got_level, level));
        }
        if got_sub != sorted(sublevel) {
            return Err(format!("{}: sub-level bars {:?}, expected {:?}", name, got_sub, sublevel));
        }
        if elapsed > Duration::from_secs(1) {
            return Err(format!("{} took {:?}", name, elapsed));
        }
    }
    Ok(format!("{} fixtures match exactly, slowest {:.0?}", cases.len(), slowest))
}

struct CorpusRun {
    maps: usize,
    elapsed: Duration,
    /// Check records of every map, with the map's label.
    records: Vec<(String, Vec<CheckRecord>)>,
    errors: Vec<String>,
}

fn run_corpus() -> CorpusRun {
    let start = Instant::now();
    let mut maps: Vec<(String, Map)> = vec![
        ("interval edge".into(), fixtures::interval_edge()),
        ("square circle".into(), fixtures::square_circle()),
        ("lambda map".into(), fixtures::lambda_map()),
        ("V map".into(), fixtures::v_map()),
        ("octahedron".into(), fixtures::octahedron()),
        ("telescope".into(), fixtures::two_points_telescope()),
    ];
    maps.extend(random_corpus::<f64>(CORPUS_SEED, CORPUS_SIZE).into_iter().enumerate().map(|(k, f)| (format!("random #{}", k), f)));
    let mut records = Vec::new();
    let mut errors = Vec::new();
    for (label, f) in &maps {
        match analyze(f, None) {
            Ok(a) => records.push((label.clone(), run_checks(f, &a))),
            Err(e) => errors.push(format!("{}: {}", label, e)),
        }
    }
    CorpusRun { maps: maps.len(), elapsed: start.elapsed(), records, errors }
}

/// Passes when every map passed every named check.
fn corpus_criterion(run: &CorpusRun, checks: &[&str], extra: &str) -> Result<String, String> {
    if let Some(e) = run.errors.first() {
        return Err(format!("pipeline error: {}", e));
    }
    for (label, records) in &run.records {
        for name in checks {
            match records.iter().find(|r| r.name == *name) {
                Some(r) if r.passed => {}
                Some(r) => return Err(format!("{}: {}: {}", label, name, r.detail)),
                None => return Err(format!("{}: check {} missing", label, name)),
            }
        }
    }
    Ok(format!("{} maps ({} random, seed {}): {}{}", run.maps, CORPUS_SIZE, CORPUS_SEED, checks.join(", "), extra))
}

fn bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_levelpers")).args(args).output().expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

/// Criterion 7: the documented command lines and SVG determinism.
fn cli_contract() -> Result<String, String> {
    let circle = data("circle.json");
    let out = bin(&["analyze", "--input", path_str(&circle)]);
    if out.status.code() != Some(0) {
        return Err(format!("analyze circle exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    let doc: ResultDocument =
        serde_json::from_slice(&out.stdout).map_err(|e| format!("analyze output is not a result document: {}", e))?;
    let mut level = level_strings(&doc);
    level.sort();
    if level != sorted(&["H0 [0, 2] x1", "H0 (0, 2) x1"]) || sublevel_strings(&doc) != ["H0 [0, inf) x1", "H1 [2, inf) x1"] {
        return Err(format!("analyze circle reported {:?} / {:?}", level, sublevel_strings(&doc)));
    }
    if !doc.checks.as_ref().is_some_and(|c| !c.is_empty() && c.iter().all(|c| c.passed)) {
        return Err("analyze circle: check section missing or failing".into());
    }

    let out = bin(&["check", "--input", path_str(&circle)]);
    if out.status.code() != Some(0) {
        return Err(format!("check circle exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    let doc: ResultDocument = serde_json::from_slice(&out.stdout).map_err(|e| format!("check output: {}", e))?;
    if !doc.checks_passed() {
        return Err("check circle: a check failed".into());
    }

    let out = bin(&["analyze", "--input", path_str(&data("malformed.json"))]);
    let stderr = String::from_utf8_lossy(&out.stderr);
    if out.status.code() != Some(1) || !stderr.contains("line") {
        return Err(format!("analyze malformed exited {:?} with {:?}", out.status.code(), stderr));
    }

    let out = bin(&["analyze", "--input", path_str(&circle), "--bogus"]);
    if out.status.code() != Some(1) || !String::from_utf8_lossy(&out.stderr).contains("Usage") {
        return Err(format!("unknown flag exited {:?}", out.status.code()));
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let (a, b) = (dir.path().join("a.svg"), dir.path().join("b.svg"));
    for target in [&a, &b] {
        let out = bin(&["svg", "--input", path_str(&data("octahedron.json")), "--output", path_str(target)]);
        if out.status.code() != Some(0) {
            return Err(format!("svg exited {:?}", out.status.code()));
        }
    }
    let (x, y) = (std::fs::read(&a).map_err(|e| e.to_string())?, std::fs::read(&b).map_err(|e| e.to_string())?);
    if x != y || x.is_empty() {
        return Err("two SVG runs differ".into());
    }
    Ok(format!("analyze/check exit 0 with valid documents, malformed input and unknown flag exit 1, SVG identical across runs ({} bytes)", x.len()))
}

fn report(n: usize, title: &str, outcome: Result<String, String>) -> bool {
    match outcome {
        Ok(detail) => {
            println!("PASS criterion {} ({}): {}", n, title, detail);
            true
        }
        Err(why) => {
            println!("FAIL criterion {} ({}): {}", n, title, why);
            false
        }
    }
}

fn main() -> ExitCode {
    let mut ok = report(1, "fixture suite", fixture_suite());
    let run = run_corpus();
    let timing = format!(", {:.1?} total", run.elapsed);
    let bridge = corpus_criterion(&run, &["bridge"], &timing).and_then(|s| {
        if run.elapsed <= TIME_LIMIT {
            Ok(s)
        } else {
            Err(format!("corpus took {:?}, over {:?}", run.elapsed, TIME_LIMIT))
        }
    });
    ok &= report(2, "level-to-sublevel bridge", bridge);
    ok &= report(
        3,
        "conversion consistency",
        corpus_criterion(&run, &["conversion_agreement", "numbers_round_trip", "barcode_round_trip", "count_conservation"], ""),
    );
    ok &= report(4, "Betti round trip", corpus_criterion(&run, &["betti_round_trip"], ""));
    ok &= report(
        5,
        "structural invariants",
        corpus_criterion(&run, &["boundary_squared_zero", "euler_characteristic", "same_gap_betti", "refinement_independence"], ""),
    );
    ok &= report(6, "nonnegativity", corpus_criterion(&run, &["nonnegativity"], ""));
    ok &= report(7, "CLI contract", cli_contract());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
