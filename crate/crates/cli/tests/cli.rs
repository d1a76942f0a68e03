use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const PSCA_7_3_2: &str = "\
# strength 3, twelve rows
0123465
0642315
1540362
1634052
2405163
2610543
3054261
3625401
4312560
4651230
5231064
5603124
";

fn psca(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_psca")).args(args).env("PSCA_JOBS", "1").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_accepts_a_psca() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "a.txt", PSCA_7_3_2);
    let o = psca(&["verify", s(&f), "--t", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "PSCA(7,3,2)");
}

#[test]
fn verify_rejects_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let broken: String = PSCA_7_3_2.replace("5603124", "5603142");
    let f = write(dir.path(), "a.txt", &broken);
    let o = psca(&["verify", s(&f), "--t", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not a PSCA: sequence"));
    let o = psca(&["--json", "verify", s(&f), "--t", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["is_psca"], false);
    assert_ne!(v["violation"]["observed"], v["violation"]["expected"]);
}

#[test]
fn input_errors_exit_two_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.txt", "0123\n0124\n");
    let o = psca(&["verify", s(&f), "--t", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("line 2") && err.contains("bad.txt"), "{err}");
    assert_eq!(psca(&["verify", "/nonexistent/file", "--t", "3"]).status.code(), Some(2));
    assert_eq!(psca(&["feasible", "3", "4", "1"]).status.code(), Some(2));
    assert_eq!(psca(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn feasible_counts() {
    let o = psca(&["feasible", "5", "3", "1", "--survivors"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "feasible=3 survivors=2");
    let o = psca(&["feasible", "4", "3", "3", "--list"]);
    assert_eq!(stdout(&o), "feasible=4\n(3,9,0,6)\n(4,6,3,5)\n(5,3,6,4)\n(6,0,9,3)\n");
}

#[test]
fn enumerate_writes_a_catalogue_and_realised_reads_it() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.jsonl");
    let o = psca(&["enumerate", "6", "3", "2", "--out", s(&out), "--method", "dynamic"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "classes=1957 complete=true\ngroups=5\n");
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 1958);
    assert!(text.lines().last().unwrap().starts_with(r#"{"complete":true,"count":1957"#));
    let o = psca(&["realised", s(&out)]);
    assert_eq!(stdout(&o).trim(), "realised=4 complete=true");
}

#[test]
fn enumerate_empty_and_capped_cells() {
    let o = psca(&["enumerate", "8", "3", "2"]);
    assert_eq!(stdout(&o), "classes=0 complete=true\ngroups=0\n");
    let o = psca(&["enumerate", "5", "3", "2", "--limit-classes", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("classes=10 complete=false"));
    let o = psca(&["--json", "enumerate", "5", "3", "2", "--time-limit", "0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["complete"], false);
    assert_eq!(psca(&["enumerate", "5", "3", "2", "--time-limit", "-1"]).status.code(), Some(2));
}

#[test]
fn enumerate_from_a_seed_class() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("b.jsonl");
    assert_eq!(psca(&["enumerate", "5", "3", "2", "--out", s(&base)]).status.code(), Some(0));
    let o = psca(&["enumerate", "6", "3", "2", "--seed", s(&base), "--seed-largest-aut"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let n: usize = stdout(&o).lines().next().unwrap().strip_prefix("classes=").unwrap().split(' ').next().unwrap().parse().unwrap();
    assert!(n > 0 && n <= 1957);
    let o = psca(&["enumerate", "6", "3", "2", "--seed", s(&base), "--seed-class", "zz"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn canon_and_iso() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", PSCA_7_3_2);
    // Relabel 0<->6 and reverse every row.
    let b_text: String = PSCA_7_3_2
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let row: String = l
                .chars()
                .rev()
                .map(|c| match c {
                    '0' => '6',
                    '6' => '0',
                    c => c,
                })
                .collect();
            format!("{row}\n")
        })
        .collect();
    let b = write(dir.path(), "b.txt", &b_text);
    let o = psca(&["iso", s(&a), s(&b)]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "isomorphic"));
    let ca = stdout(&psca(&["canon", s(&a)]));
    assert_eq!(ca, stdout(&psca(&["canon", s(&b)])));
    assert!(ca.lines().last().unwrap().starts_with("digest="));
    assert_eq!(ca.lines().count(), 13);
    let c = write(dir.path(), "c.txt", &PSCA_7_3_2.replace("5603124", "5603142"));
    let o = psca(&["iso", s(&a), s(&c)]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(1), "not isomorphic"));
}

#[test]
fn distributions_of_an_array() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", "012\n021\n102\n120\n201\n210\n");
    let o = psca(&["distributions", s(&a)]);
    assert_eq!(stdout(&o), "0: (2,2,2)\n1: (2,2,2)\n2: (2,2,2)\n");
}

#[test]
fn group_commands() {
    let o = psca(&["group", "close", "--v", "4", "(1,2,3)", "(0,1,2)"]);
    assert_eq!(stdout(&o).trim(), "order=12 transitive=true");
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a4.txt");
    let o = psca(&["group", "close", "--builtin", "t3-4-2-1", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(psca(&["group", "is-group", s(&out)]).status.code(), Some(0));
    assert_eq!(stdout(&psca(&["verify", s(&out), "--t", "3"])).trim(), "PSCA(4,3,2)");
    let not = write(dir.path(), "n.txt", "0123\n1032\n0213\n");
    let o = psca(&["group", "is-group", s(&not)]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(1), "not a group"));

    let o = psca(&["group", "search", "--builtin", "t3-6-2-1", "--t", "3", "--lambda", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("witness="));
    let o = psca(&["group", "search", "--v", "5", "(0,1,2,3,4)", "--t", "2", "--lambda", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = psca(&["group", "search", "--v", "4", "(0,1,2)", "(0,1)", "--t", "3", "--lambda", "1", "--budget", "1000"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("no witness") && stdout(&o).contains("exhausted=true"));
}

#[test]
fn builtin_listing_and_verification() {
    let o = psca(&["group", "builtin", "--list"]);
    let names = stdout(&o);
    assert!(names.lines().any(|l| l == "psca-16-3-16"));
    assert_eq!(names.lines().filter(|l| l.starts_with("t3-")).count(), 47);
    assert_eq!(names.lines().filter(|l| l.starts_with("t4-")).count(), 10);
    let o = psca(&["group", "builtin", "psca-8-3-4", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("PSCA(8,3,4)\n"));
    let o = psca(&["--json", "group", "builtin", "psca-32-3-96-right", "--verify"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verified"], false);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(psca(&["group", "builtin", "nope"]).status.code(), Some(2));
}
