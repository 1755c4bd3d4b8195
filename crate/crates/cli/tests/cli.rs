use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use d2kit_core::format::write_presentation;
use d2kit_core::group::catalog;
use tempfile::TempDir;

fn d2kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_d2kit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const C2: &str = "group cyclic 2\ngens x\nrel x^2\n";
const C2_TIETZE: &str = "group cyclic 2\ngens x y\nrel x^2\nrel y\nmap x 1\nmap y 0\n";

const NOT_INJECTIVE: &str = "complex
group cyclic 2
ranks 1 1 2 1
augmentation 1
d1:
(0, 0, g1 - g0)
d2:
(0, 0, 1 + g1)
d3:
(1, 0, g1 - g0)
";

#[test]
fn build_then_verify_every_catalog_entry() {
    let dir = TempDir::new().unwrap();
    for e in catalog() {
        let name = e.family.to_string().replace(' ', "_");
        let pres = write(&dir, &format!("{name}.pres"), &write_presentation(&e.marked));
        let cx = dir.path().join(format!("{name}.cx"));
        let b = d2kit(&["build", s(&pres), "--out", s(&cx)]);
        assert_eq!(code(&b), 0, "{name}: {}", stdout(&b));
        let v = d2kit(&["verify", s(&cx), "--no-timing"]);
        let text = stdout(&v);
        assert_eq!(code(&v), 0, "{name}: {text}");
        assert!(text.contains("CHECK H0 = Z PASS"), "{text}");
        assert!(text.contains("CHECK H1 = 0 PASS"), "{text}");
        let i = d2kit(&["invariants", s(&pres), "--no-timing"]);
        assert_eq!(code(&i), 0, "{name}: {}", stdout(&i));
    }
}

#[test]
fn build_without_out_prints_the_complex() {
    let dir = TempDir::new().unwrap();
    let pres = write(&dir, "c2.pres", C2);
    let o = d2kit(&["build", s(&pres)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("complex\ngroup cyclic 2\nranks 1 1 1 0\n"));
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.cx", "complex\ngroup cyclic 2\nranks 1 1\n");
    let o = d2kit(&["verify", s(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(code(&d2kit(&["verify", "/nonexistent/file"])), 2);
    assert_eq!(code(&d2kit(&["frobnicate"])), 2);
    let pres = write(&dir, "p.pres", "group cyclic 2\ngens x\nrel z\n");
    assert_eq!(code(&d2kit(&["build", s(&pres)])), 2);
}

#[test]
fn reduce_reports_not_injective() {
    let dir = TempDir::new().unwrap();
    let cx = write(&dir, "x.cx", NOT_INJECTIVE);
    let o = d2kit(&["reduce", s(&cx), "--no-timing"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("CHECK d2 split FAIL NotInjective"));
}

#[test]
fn reduce_writes_complex_and_certificate() {
    let dir = TempDir::new().unwrap();
    let pres = write(&dir, "c2.pres", C2);
    let cx = dir.path().join("c2.cx");
    assert_eq!(code(&d2kit(&["build", s(&pres), "--out", s(&cx)])), 0);
    let script = write(&dir, "s.txt", "stab 1\nattach 1\n");
    let x = dir.path().join("x.cx");
    assert_eq!(code(&d2kit(&["apply", s(&cx), s(&script), "--out", s(&x)])), 0);
    let k = dir.path().join("k.cx");
    let o = d2kit(&["reduce", s(&x), "--out", s(&k), "--no-timing"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let cert = dir.path().join("k.cx.cert");
    assert!(cert.exists());
    let v = d2kit(&["verify", s(&cert), "--no-timing"]);
    assert_eq!(code(&v), 0, "{}", stdout(&v));
    assert!(stdout(&v).contains("CHECK cone acyclic PASS"));
    let kv = d2kit(&["verify", s(&k)]);
    assert_eq!(code(&kv), 0);
}

#[test]
fn tampered_certificate_fails_verification() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.pres", C2);
    let b = write(&dir, "b.pres", C2_TIETZE);
    let (ax, bx) = (dir.path().join("a.cx"), dir.path().join("b.cx"));
    assert_eq!(code(&d2kit(&["build", s(&a), "--out", s(&ax)])), 0);
    assert_eq!(code(&d2kit(&["build", s(&b), "--out", s(&bx)])), 0);
    let cert = dir.path().join("ab.cert");
    let o = d2kit(&["compare", s(&ax), s(&bx), "--out", s(&cert)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let text = std::fs::read_to_string(&cert).unwrap();
    let f1 = text.find("f1:\n").expect("f1 block") + 4;
    let line_end = f1 + text[f1..].find('\n').unwrap();
    let tampered = format!("{}(0, 0, 3*g0){}", &text[..f1], &text[line_end..]);
    let t = write(&dir, "t.cert", &tampered);
    let v = d2kit(&["verify", s(&t), "--no-timing"]);
    assert_eq!(code(&v), 1, "{}", stdout(&v));
    assert!(stdout(&v).contains("FAIL"));
}

#[test]
fn compare_exit_codes() {
    let dir = TempDir::new().unwrap();
    let c2 = write(&dir, "c2.pres", C2);
    let c3 = write(&dir, "c3.pres", "group cyclic 3\ngens x\nrel x^3\n");
    let (c2x, c3x) = (dir.path().join("c2.cx"), dir.path().join("c3.cx"));
    assert_eq!(code(&d2kit(&["build", s(&c2), "--out", s(&c2x)])), 0);
    assert_eq!(code(&d2kit(&["build", s(&c3), "--out", s(&c3x)])), 0);
    assert_eq!(code(&d2kit(&["compare", s(&c2x), s(&c3x)])), 2);
    let same = d2kit(&["compare", s(&c2x), s(&c2x), "--no-timing"]);
    assert_eq!(code(&same), 0, "{}", stdout(&same));
    // x^4 presents C4; over C2 its complex has H1 = Z/2.
    let wrong = write(&dir, "w.pres", "group cyclic 2\ngens x\nrel x^4\n");
    let wx = dir.path().join("w.cx");
    assert_eq!(code(&d2kit(&["build", s(&wrong), "--out", s(&wx)])), 0);
    let o = d2kit(&["compare", s(&c2x), s(&wx), "--budget", "20", "--no-timing"]);
    assert_eq!(code(&o), 1, "{}", stdout(&o));
}

#[test]
fn apply_reports_failing_move_index() {
    let dir = TempDir::new().unwrap();
    let pres = write(&dir, "c2.pres", C2);
    let cx = dir.path().join("c2.cx");
    assert_eq!(code(&d2kit(&["build", s(&pres), "--out", s(&cx)])), 0);
    let script = write(&dir, "s.txt", "stab 1\nexpand 2\ncollapse 2 9\n");
    let o = d2kit(&["apply", s(&cx), s(&script), "--no-timing"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("CHECK apply FAIL move 2"), "{}", stdout(&o));
    let bad = write(&dir, "b.txt", "stab one\n");
    assert_eq!(code(&d2kit(&["apply", s(&cx), s(&bad)])), 2);
}

#[test]
fn reports_are_byte_identical_without_timing() {
    let dir = TempDir::new().unwrap();
    let pres = write(&dir, "c2.pres", C2);
    let runs: Vec<Vec<u8>> = (0..3)
        .map(|_| d2kit(&["invariants", s(&pres), "--structured", "--no-timing"]).stdout)
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    let text = String::from_utf8(runs[0].clone()).unwrap();
    assert!(text.lines().all(|l| l.starts_with("{\"kind\":")));
    assert!(text.ends_with("{\"kind\":\"exit\",\"code\":0}\n"));
}

#[test]
fn timing_line_present_by_default() {
    let o = d2kit(&["catalog"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l.starts_with("TIME ")));
}
