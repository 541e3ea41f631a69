use std::fs;
use std::path::{Path, PathBuf};

use crate::run_args;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn d2kit(args: &[&str]) -> Output {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_args(std::iter::once("d2kit").chain(args.iter().copied()), &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn stdout(o: &Output) -> String {
    o.stdout.clone()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn analyze_trefoil_reports_a_tight_sandwich() {
    let o = d2kit(&["analyze", path(&corpus().join("trefoil.fp"))]);
    assert_eq!(o.code, 0);
    let text = stdout(&o);
    for line in ["order: unknown", "h1: Z", "tight: true", "d2n_upper: n/a"] {
        assert!(text.contains(line), "{text}");
    }
    assert!(text.contains("mu2_lower: 0 ") && text.contains("mu2_upper: 0 "), "{text}");
}

#[test]
fn analyze_check_and_exit_codes() {
    assert_eq!(d2kit(&["analyze", path(&corpus().join("a5.fp")), "--check"]).code, 0);
    assert_eq!(d2kit(&["analyze", "missing.fp"]).code, 1);

    let tmp = tempfile::tempdir().unwrap();
    fs::copy(corpus().join("z5.fp"), tmp.path().join("z5.fp")).unwrap();
    fs::write(tmp.path().join("z5.expect"), "order: 6\n").unwrap();
    let o = d2kit(&["analyze", path(&tmp.path().join("z5.fp")), "--check"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("order: expected 6, found 5"));
    assert_eq!(d2kit(&["check", path(tmp.path())]).code, 2);
}

#[test]
fn check_passes_on_the_shipped_corpus() {
    let o = d2kit(&["check", path(&corpus())]);
    assert_eq!(o.code, 0, "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 9);
}

#[test]
fn corpus_env_var_sets_the_default_directory() {
    std::env::set_var(crate::corpus::CORPUS_ENV, corpus());
    let o = d2kit(&["analyze", "z2.fp", "--format", "json"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["order"], 2);
    assert_eq!(v["mu2_lower"]["provenance"]["op"], "mu2_lower_bound");
}

#[test]
fn order_and_normal_generator() {
    assert_eq!(stdout(&d2kit(&["order", path(&corpus().join("q8.fp"))])), "order: 8\n");
    let o = d2kit(&["normal-gen", path(&corpus().join("a5.fp"))]);
    assert!(stdout(&o).starts_with("normal_generator: a\n"), "{}", stdout(&o));
    let o = d2kit(&["normal-gen", path(&corpus().join("z5.fp"))]);
    assert!(stdout(&o).contains("not found") && stdout(&o).contains("NonPerfect"));
}

#[test]
fn norm_cell_does_not_split() {
    let o = d2kit(&["split", path(&corpus().join("norm_z2.acx"))]);
    assert_eq!(o.code, 0);
    assert!(stdout(&o).starts_with("splits: false\n"));
}

#[test]
fn corrupted_complex_is_rejected() {
    let tmp = tempfile::tempdir().unwrap();
    let bad = tmp.path().join("bad.acx");
    let text = fs::read_to_string(corpus().join("norm_z2.acx")).unwrap();
    fs::write(&bad, text.replacen("[(0,1),(1,1)] []", "[(0,2),(1,1)] []", 1)).unwrap();
    let o = d2kit(&["split", path(&bad)]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("≠ 0"));
}

/// build, wedge 1, attach the matching 3-cell, split, quotient, certify.
#[test]
fn chain_pipeline_round_trip() {
    for name in ["z2", "z5", "s3"] {
        let tmp = tempfile::tempdir().unwrap();
        let t = |f: &str| tmp.path().join(f).to_str().unwrap().to_string();
        let fp = corpus().join(format!("{name}.fp"));
        let steps: [Vec<String>; 4] = [
            vec!["chain".into(), "--finite".into(), path(&fp).into(), "--out".into(), t("f.acx")],
            vec!["wedge".into(), t("f.acx"), "1".into(), "--out".into(), t("w.acx")],
            vec!["attach".into(), t("w.acx"), "--out".into(), t("g.acx")],
            vec!["quotient".into(), t("g.acx"), "--out".into(), t("q.acx")],
        ];
        for s in &steps {
            let args: Vec<&str> = s.iter().map(String::as_str).collect();
            assert_eq!(d2kit(&args).code, 0, "{name}: {s:?}");
        }
        assert!(stdout(&d2kit(&["split", &t("g.acx")])).starts_with("splits: true"));
        let o = d2kit(&["certify-equiv", &t("q.acx"), &t("f.acx")]);
        assert_eq!(o.code, 0);
        assert!(stdout(&o).starts_with("outcome: certificate\n"), "{name}: {}", stdout(&o));

        let again = tmp.path().join("again.acx");
        d2kit(&["chain", "--finite", path(&fp), "--out", path(&again)]);
        assert_eq!(fs::read(&again).unwrap(), fs::read(t("f.acx")).unwrap());
    }
}

/// Both sides stabilized once: equal χ, certified.
#[test]
fn stabilized_z5_complexes_are_equivalent() {
    let tmp = tempfile::tempdir().unwrap();
    let f = tmp.path().join("f.acx");
    let w = tmp.path().join("w.acx");
    d2kit(&["chain", "--finite", path(&corpus().join("z5.fp")), "--out", path(&f)]);
    d2kit(&["wedge", path(&f), "1", "--out", path(&w)]);
    let doubled = tmp.path().join("d.fp");
    fs::write(&doubled, "gens: x\nrels: x^5, x^10\n").unwrap();
    let g = tmp.path().join("g.acx");
    d2kit(&["chain", "--finite", path(&doubled), "--out", path(&g)]);
    let o = d2kit(&["certify-equiv", path(&w), path(&g)]);
    assert!(stdout(&o).starts_with("outcome: certificate"), "{}", stdout(&o));
    let o = d2kit(&["certify-equiv", path(&f), path(&g)]);
    assert!(stdout(&o).starts_with("outcome: not-equivalent"), "{}", stdout(&o));
}

#[test]
fn report_rows_errors_and_empty_dirs() {
    let tmp = tempfile::tempdir().unwrap();
    for name in ["trivial", "z5", "s3", "q8", "a5", "trefoil"] {
        fs::copy(corpus().join(format!("{name}.fp")), tmp.path().join(format!("{name}.fp"))).unwrap();
    }
    let o = d2kit(&["report", path(tmp.path())]);
    assert_eq!(o.code, 0);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 7, "{text}");
    assert!(text.lines().next().unwrap().starts_with("file"));
    let side = fs::read_to_string(tmp.path().join("report.jsonl")).unwrap();
    assert_eq!(side.lines().count(), 6);

    fs::write(tmp.path().join("broken.fp"), "gens: a\nrels: b^2\n").unwrap();
    let text = stdout(&d2kit(&["report", path(tmp.path())]));
    assert_eq!(text.lines().count(), 8);
    let broken = text.lines().find(|l| l.starts_with("broken.fp")).unwrap();
    assert!(broken.contains("error"), "{broken}");
    assert_eq!(text.lines().filter(|l| l.ends_with("ok")).count(), 6);

    let empty = tempfile::tempdir().unwrap();
    let o = d2kit(&["report", path(empty.path())]);
    assert_eq!(o.code, 0);
    assert_eq!(stdout(&o).lines().count(), 1);
}
