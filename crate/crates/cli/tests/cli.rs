use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn value(&self, key: &str) -> Option<&str> {
        self.stdout
            .lines()
            .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
    }
}

fn tightbound(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_tightbound"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const THREE_CYCLE: &str = "p digraph 3 3\na 1 2 1\na 2 3 1\na 3 1 1\n";

#[test]
fn three_cycle_is_no() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "tri", THREE_CYCLE);
    let r = tightbound(&["loalb", "--k", "1", s(&f)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.value("verdict"), Some("NO"));
    assert!(r
        .stdout
        .contains("threshold=squared_weight>=12k^2 lhs=3 rhs=12 holds=false"));
    let fas = tightbound(&["fas", "--k", "1", s(&f)]);
    assert_eq!(fas.value("verdict"), Some("NO"));
}

#[test]
fn odd_set_system_decides_by_bound() {
    let dir = TempDir::new().unwrap();
    let f = file(
        &dir,
        "odd",
        "p lin2 4 4\ne 1 1 1\ne 1 0 2\ne 1 1 3\ne 1 0 4\n",
    );
    let r = tightbound(&["linalb", "--k", "1", "--case", "odd-set", s(&f)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.value("verdict"), Some("YES_BY_BOUND"));
    assert!(r
        .stdout
        .contains("threshold=m>=4k^2 lhs=4 rhs=4 holds=true"));
    let auto = tightbound(&["linalb", "--k", "1", s(&f)]);
    // every variable occurs once, so the occurrence case has threshold 0
    // and wins the auto policy; all equations are satisfiable together
    assert_eq!(auto.value("verdict"), Some("YES_WITNESS"));
    assert!(auto.value("case").unwrap().ends_with("rho=1"));
    let pair = file(
        &dir,
        "pair",
        "p lin2 2 2
e 1 1 1 2
e 1 0 1
",
    );
    let auto = tightbound(&["linalb", "--k", "1", s(&pair)]);
    assert!(
        auto.value("case").unwrap().starts_with("odd-set"),
        "{}",
        auto.stdout
    );
}

#[test]
fn single_clause_has_witness_and_json() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "one", "p ecnf 2 1 2\n1 2 0\n");
    let json = dir.path().join("out.json");
    let r = tightbound(&["rsat", "--k-num", "1", s(&f), "--emit", s(&json)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.value("verdict"), Some("YES_WITNESS"));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(v["verdict"], "YES_WITNESS");
    assert!(v["witness"]["assignment"].is_string());
    assert_eq!(v["thresholds"][0]["rhs"], "65536");
}

#[test]
fn witness_only_with_yes_witness() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "tri", THREE_CYCLE);
    let json = dir.path().join("no.json");
    tightbound(&["loalb", "--k", "1", s(&f), "--emit", s(&json)]);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert!(v["witness"].is_null());
    let path = file(&dir, "path", "p digraph 3 2\na 1 2 1\na 2 3 1\n");
    let r = tightbound(&["loalb", "--k", "1", s(&path)]);
    assert_eq!(r.value("verdict"), Some("YES_WITNESS"));
    assert_eq!(r.value("witness.order"), Some("1 2 3"));
}

#[test]
fn complete_formula_is_refused_with_diagnostic() {
    let dir = TempDir::new().unwrap();
    let gen = tightbound(&["gen", "complete-rcnf", "--r", "2"]);
    assert_eq!(gen.code, 0);
    let f = file(&dir, "c", &gen.stdout);
    let r = tightbound(&["rsat", "--k-num", "1", s(&f)]);
    assert_eq!(r.code, 2);
    assert_eq!(r.value("verdict"), Some("REFUSED"));
    assert_eq!(r.value("diagnostic.verdict"), Some("NO"));
}

#[test]
fn errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad", "p digraph 2 1\na 1 1 2\n");
    let r = tightbound(&["loalb", "--k", "1", s(&bad)]);
    assert_eq!(r.code, 2);
    assert_eq!(r.value("verdict"), Some("ERROR"));
    assert!(r.value("error").unwrap().contains("line 2"));

    let lin = file(&dir, "lin", "p lin2 1 1\ne 1 1 1\n");
    assert_eq!(tightbound(&["loalb", "--k", "1", s(&lin)]).code, 2);
    assert_eq!(
        tightbound(&["loalb", "--k", "1", "--cap", "0", s(&lin)]).code,
        2
    );
    assert_eq!(tightbound(&["loalb", "--k", "0", s(&lin)]).code, 2);
    assert_eq!(tightbound(&["loalb", "--bogus", s(&lin)]).code, 2);
    assert_eq!(tightbound(&["solve", s(&lin)]).code, 2);

    let heavy = file(&dir, "heavy", "p digraph 2 1\na 1 2 3\n");
    let r = tightbound(&["fas", "--k", "1", s(&heavy)]);
    assert_eq!((r.code, r.value("verdict")), (2, Some("ERROR")));

    let tri = file(&dir, "cyc", "p lin2 3 3\ne 1 1 1 2\ne 1 0 2 3\ne 1 1 1 3\n");
    let r = tightbound(&["linalb", "--k", "1", "--case", "odd-set", s(&tri)]);
    assert_eq!(
        (r.code, r.value("verdict")),
        (2, Some("REFUSED")),
        "{}{}",
        r.stdout,
        r.stderr
    );
}

#[test]
fn cap_yields_kernel() {
    let dir = TempDir::new().unwrap();
    let gen = tightbound(&["gen", "random-lin2", "--n", "8", "--m", "6", "--seed", "3"]);
    let f = file(&dir, "sys", &gen.stdout);
    let r = tightbound(&[
        "linalb",
        "--k",
        "3",
        "--case",
        "general",
        "--cap",
        "1",
        s(&f),
    ]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.value("verdict"), Some("KERNEL"));
    assert!(r.value("kernel.m").is_some());
}

#[test]
fn generators_are_deterministic_and_tight() {
    let dir = TempDir::new().unwrap();
    let a = tightbound(&["gen", "symmetric-digraph", "--n", "5", "--seed", "9"]);
    let b = tightbound(&["gen", "symmetric-digraph", "--n", "5", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
    let f = file(&dir, "sym", &a.stdout);
    assert_eq!(
        tightbound(&["loalb", "--k", "1", s(&f)]).value("verdict"),
        Some("NO")
    );

    let pairs = tightbound(&["gen", "cancelling-pairs-lin2", "--n", "4", "--pairs", "3"]);
    let f = file(&dir, "pairs", &pairs.stdout);
    assert!(pairs.stdout.starts_with("p lin2 4 6"));
    assert_eq!(
        tightbound(&["linalb", "--k", "1", s(&f)]).value("verdict"),
        Some("NO")
    );

    let out = dir.path().join("g.txt");
    let r = tightbound(&["gen", "remark2", "--n", "3", "--out", s(&out)]);
    assert_eq!(r.value("kind"), Some("remark2"));
    assert!(std::fs::read_to_string(out)
        .unwrap()
        .starts_with("p lin2 3 7"));
    assert_eq!(tightbound(&["gen", "remark2", "--n", "9"]).code, 2);
}

#[test]
fn moments_report() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "tri", THREE_CYCLE);
    let r = tightbound(&["moments", s(&f)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.value("e2"), Some("1/4"));
    assert_eq!(r.value("symmetric"), Some("true"));
    assert_eq!(r.value("second_moment.holds"), Some("true"));
    let sys = file(&dir, "two", "p lin2 2 2\ne 1 1 1\ne 2 1 1 2\n");
    assert_eq!(tightbound(&["moments", s(&sys)]).value("e2"), Some("5"));
}
