use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn gendist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gendist")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = gendist(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn fixture_distance() {
    let (a, b) = (fixture("figA.mua"), fixture("figB.mua"));
    let args = ["dist", a.to_str().unwrap(), b.to_str().unwrap()];
    assert_eq!(stdout(&args), "4\n");
    assert_eq!(stdout(&["mgen", a.to_str().unwrap()]), "5\n");
    assert_eq!(stdout(&["mgen", b.to_str().unwrap()]), "6\n");
}

#[test]
fn oracle_agrees_within_cap() {
    let dir = TempDir::new().unwrap();
    let c3 = write(&dir, "c3.mua", "3\n1 2 0\n");
    let m = write(&dir, "m.mua", "# loop with a tail\n3\n1 2 2\n");
    let pair = write(&dir, "pair.mua", "2\n0 1\n");
    for (x, y) in [(&c3, &m), (&m, &pair), (&c3, &pair), (&m, &m)] {
        assert_eq!(stdout(&["dist", x, y]), stdout(&["oracle-dist", x, y]), "{x} {y}");
    }
    assert_eq!(stdout(&["oracle-dist", &c3, &m, "--cap", "8"]), stdout(&["dist", &c3, &m]));
}

#[test]
fn oracle_refuses_large_caps() {
    let (a, b) = (fixture("figA.mua"), fixture("figB.mua"));
    let out = gendist(&["oracle-dist", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit"));
}

#[test]
fn structure_queries() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.mua", "5\n1 0 1 4 4\n");
    let b = write(&dir, "b.mua", "5\n2 4 3 2 4\n");
    assert_eq!(stdout(&["iso", &a, &a]), "true\n");
    assert_eq!(stdout(&["iso", &a, &b]), "true\n");
    assert_eq!(stdout(&["canon", &a]), stdout(&["canon", &b]));
    assert_eq!(stdout(&["components", &a]), "0 1 2\n3 4\n");
    assert_eq!(stdout(&["core", &a]), "2: 0 1\n1: 4\n");
    assert_eq!(stdout(&["mgen", &a]), "2\n");

    let point = write(&dir, "p.mua", "1\n0\n");
    let c2 = write(&dir, "c2.mua", "2\n1 0\n");
    assert!(stdout(&["large", &point, &a]).starts_with("NO"));
    assert!(stdout(&["large", &c2, &a]).starts_with("NO"));
    let ext = write(&dir, "e.mua", "3\n1 0 1\n");
    assert!(stdout(&["large", &c2, &ext]).starts_with("YES tail"));
    let two = write(&dir, "two.mua", "3\n1 0 2\n");
    assert!(stdout(&["large", &c2, &two]).starts_with("YES disjoint cycle=1 tail=0"));
}

#[test]
fn symmetric_group_table() {
    let out = stdout(&["net", "--builtin", "sym:4"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("vertices 30"));
    assert_eq!(lines.next(), Some("red 60"));
    assert_eq!(lines.next(), Some("blue 224"));
    lines.next();
    let no: Vec<&str> = lines
        .filter(|l| l.split('\t').nth(3) == Some("NO"))
        .map(|l| l.split('\t').nth(4).unwrap())
        .collect();
    assert_eq!(
        no,
        ["{e}", "{e,(12)(34)}", "{e,(13)(24)}", "{e,(14)(23)}", "{e,(12)(34),(13)(24),(14)(23)}"]
    );
}

#[test]
fn net_from_file_with_dot() {
    let dir = TempDir::new().unwrap();
    let z4 = write(
        &dir,
        "z4.fa",
        "n 4\nop 2\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\nop 1\n0 3 2 1\nop 0\n0\n",
    );
    let dot = dir.path().join("z4.dot");
    let out = stdout(&["net", &z4, "--dot", dot.to_str().unwrap()]);
    assert!(out.starts_with("vertices 3\nred 0\nblue 3\n"), "{out}");
    let text = std::fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("graph network {"));
    assert_eq!(text.matches("color=blue").count(), 3);
    assert_eq!(out, stdout(&["net", &z4]));
}

#[test]
fn qz_commands() {
    let dist = |l: &str, r: &str| stdout(&["qz", "dist", "--left", l, "--right", r]);
    assert_eq!(dist("default=inf", "default=inf"), "0\n");
    assert_eq!(dist("default=inf;0:2", "default=inf;0:4"), "1\n");
    assert_eq!(dist("default=inf;0:1,1:2", "default=inf;0:2,1:1"), "2\n");
    assert_eq!(dist("default=0", "default=0;0:inf"), "inf\n");
    assert_eq!(stdout(&["qz", "diam", "default=inf;3:7"]), "1\n");
    assert_eq!(gendist(&["qz", "diam", "default=seven"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(gendist(&[]).status.code(), Some(1));
    assert_eq!(gendist(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(gendist(&["mgen", "--nope", "x"]).status.code(), Some(1));
    assert_eq!(gendist(&["net"]).status.code(), Some(1));
    assert_eq!(gendist(&["--help"]).status.code(), Some(0));

    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.mua", "3\n1 2 7\n");
    let out = gendist(&["mgen", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let missing = dir.path().join("missing.mua");
    assert_eq!(gendist(&["mgen", missing.to_str().unwrap()]).status.code(), Some(2));
    let fa = write(&dir, "bad.fa", "n 2\nop 1\n0\n");
    assert_eq!(gendist(&["net", &fa]).status.code(), Some(2));
    assert_eq!(gendist(&["net", "--builtin", "sym:9"]).status.code(), Some(2));
}
