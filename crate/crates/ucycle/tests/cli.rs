use std::process::Command;

use ucycle::cli::run;

struct Out {
    code: u8,
    stdout: String,
    stderr: String,
}

fn ucycle(args: &[&str], input: &str) -> Out {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let argv = std::iter::once("ucycle").chain(args.iter().copied());
    let code = run(argv, &mut input.as_bytes(), &mut stdout, &mut stderr);
    Out {
        code,
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

fn body(s: &str) -> Vec<&str> {
    s.lines().filter(|l| !l.starts_with('#')).collect()
}

#[test]
fn perm_uword_and_cycle() {
    let o = ucycle(&["perm", "--n", "3", "--uword"], "");
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "# uword d=2 n=3 columns=8\n78613245\n");
    let o = ucycle(&["perm", "--n", "3", "--verify"], "");
    assert_eq!(o.code, 0);
    assert_eq!(body(&o.stdout), ["564132"]);
    assert!(o.stdout.ends_with("# verified\n"));
}

#[test]
fn multiperm_rows() {
    let o = ucycle(&["multiperm", "--d", "3", "--n", "2"], "");
    assert_eq!(o.code, 0);
    assert_eq!(body(&o.stdout), ["4312", "4132"]);
    let o = ucycle(&["multiperm", "--d", "3", "--n", "3", "--complement-rows", "2", "--verify"], "");
    assert_eq!(o.code, 0);
    let rows = body(&o.stdout);
    assert_eq!(rows.len(), 2);
    assert!(rows[1].starts_with("2 1 3 35 34 36"), "{}", rows[1]);
}

#[test]
fn json_record() {
    let o = ucycle(&["perm", "--n", "3", "--json"], "");
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["kind"], "perm");
    assert_eq!(v["params"]["n"], 3);
    assert_eq!(v["rows"], serde_json::json!([[5, 6, 4, 1, 3, 2]]));
    assert!(v["verified"].is_null());
    let o = ucycle(&["perm", "--n", "3", "--json", "--verify"], "");
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["verified"], true);
}

#[test]
fn setpartition_search_and_single_run() {
    let o = ucycle(&["setpartition", "--n", "4", "--mode", "ucycle", "--search", "--jobs", "2"], "");
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "n=4 mode=ucycle alphabet_max=4 successes=1\n124\n");
    let o = ucycle(&["setpartition", "--n", "4", "--start", "124", "--verify"], "");
    assert_eq!(o.code, 0);
    assert_eq!(body(&o.stdout), ["124111121122313124"]);
    let o = ucycle(&["setpartition", "--n", "8", "--search"], "");
    assert_eq!(o.code, 2);
    assert!(!o.stderr.is_empty());
}

#[test]
fn debruijn_routes() {
    let o = ucycle(&["debruijn", "--n", "2", "--k", "3", "--verify"], "");
    assert_eq!(o.code, 0);
    assert_eq!(body(&o.stdout), ["200102112"]);
    let o = ucycle(&["debruijn", "--n", "3", "--k", "2", "--method", "euler", "--verify"], "");
    assert_eq!(o.code, 0);
    let o = ucycle(&["debruijn", "--n", "2", "--k", "2", "--start", "0"], "");
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("outcome=stalled"));
}

#[test]
fn graph_dot_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.dot");
    let o = ucycle(&["graph", "--d", "2", "--n", "3", "--dot", "--out", path.to_str().unwrap()], "");
    assert_eq!(o.code, 0);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches(" -> ").count(), 18);
    assert!(dot.contains("\"123\" -> \"123\""));
}

#[test]
fn graph_linearize() {
    let o = ucycle(&["graph", "--d", "2", "--n", "3", "--hamiltonian", "--linearize", "--verify"], "");
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("125463"), "{}", o.stdout);
}

#[test]
fn lab_commands() {
    let o = ucycle(&["lab", "--s4-switch", "--verify"], "");
    assert_eq!(o.code, 0, "{}", o.stderr);
    let o = ucycle(&["lab", "--keygroup", "123", "132"], "");
    assert!(o.stdout.contains("cycle=true"));
    let o = ucycle(&["lab", "--keygroup", "123", "231"], "");
    assert!(o.stdout.contains("cycle=false"));
}

#[test]
fn verify_reads_stdin() {
    let o = ucycle(&["verify", "--kind", "perm", "--n", "3", "--cyclic"], "564132\n");
    assert_eq!(o.code, 0);
    assert!(o.stdout.ends_with("verdict=pass\n"));
    let o = ucycle(&["verify", "--kind", "debruijn", "--n", "2", "--k", "2", "--cyclic"], "0101\n");
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("verdict=fail"));
    let o = ucycle(&["verify", "--kind", "perm", "--n", "3", "--cyclic"], "5x4\n");
    assert_eq!(o.code, 2);
}

#[test]
fn usage_errors() {
    assert_eq!(ucycle(&["nonsense"], "").code, 2);
    assert_eq!(ucycle(&["perm"], "").code, 2);
    assert_eq!(ucycle(&["perm", "--n", "0"], "").code, 2);
}

#[test]
fn binary_is_deterministic() {
    let exe = env!("CARGO_BIN_EXE_ucycle");
    let once = || Command::new(exe).args(["multiperm", "--d", "3", "--n", "3"]).output().unwrap();
    let (a, b) = (once(), once());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).starts_with("# cyclic d=3 n=3 columns=36"));
}
