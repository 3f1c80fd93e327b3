use std::io::Write;
use std::process::{Command, Output, Stdio};

fn positroid(args: &[&str], stdin: &str) -> Output {
    let mut child =
        Command::new(env!("CARGO_BIN_EXE_positroid")).args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(args: &[&str], stdin: &str) -> String {
    let out = positroid(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn build(kind_and_args: &[&str]) -> String {
    let mut args = vec!["construct"];
    args.extend(kind_and_args);
    stdout(&args, "")
}

#[test]
fn whirl_permutation_through_a_pipe() {
    assert_eq!(stdout(&["perm"], &build(&["whirl", "3"])), "(1,3,5)(6,4,2)\n");
    assert_eq!(stdout(&["perm", "-"], &build(&["whirl", "3"])), "(1,3,5)(6,4,2)\n");
}

#[test]
fn whirl_two_class_lists_the_four_matroids() {
    let out = stdout(&["class"], &build(&["whirl", "2"]));
    assert!(out.starts_with("# class size: 4\n"));
    let members: Vec<&str> = out.split("# member ").skip(1).collect();
    assert_eq!(members.len(), 4);
    for want in ["1 2\n1 4\n2 3\n3 4\n", "1 2\n1 3\n1 4\n2 3\n3 4\n", "1 2\n1 4\n2 3\n2 4\n3 4\n", "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n"] {
        assert!(members.iter().any(|m| m.ends_with(&format!("bases:\n{want}"))), "{want}");
    }
    let refused = positroid(&["class", "--budget", "1"], &build(&["whirl", "2"]));
    assert_eq!(refused.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&refused.stderr).contains("BudgetExceeded"));
}

#[test]
fn classify_uniform_two_five() {
    let kv = stdout(&["classify", "--format", "kv"], &build(&["uniform", "2", "5"]));
    assert!(kv.contains("is_positroid=true\n"));
    assert!(kv.contains("is_ternary=false\n"));
    let text = stdout(&["classify"], &build(&["whirl", "3"]));
    assert!(text.contains("ternary: true\n") && text.contains("envelope size: 4\n"));
}

#[test]
fn census_of_four() {
    let csv = stdout(&["census", "4"], "");
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,rank,permutation,binary,ternary,w,class_size");
    assert_eq!(lines.len(), 1 + 65);
    assert!(lines.contains(&"4,2,\"(1,3)(2,4)\",false,true,1,4"));
    assert_eq!(stdout(&["census", "4", "--rank", "2"], "").lines().count(), 1 + 33);
}

#[test]
fn outputs_are_deterministic() {
    for args in [&["census", "5"][..], &["construct", "nrelaxed", "3"]] {
        assert_eq!(stdout(args, ""), stdout(args, ""));
    }
    let w = build(&["whirl", "3"]);
    assert_eq!(stdout(&["decompose"], &w), stdout(&["decompose"], &w));
}

#[test]
fn files_and_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w3.txt");
    let u = dir.path().join("u24.txt");
    let dot = dir.path().join("tree.dot");
    stdout(&["construct", "whirl", "3", "-o", w.to_str().unwrap()], "");
    stdout(&["construct", "uniform", "2", "4", "-o", u.to_str().unwrap()], "");
    let found = stdout(&["minor", w.to_str().unwrap(), u.to_str().unwrap()], "");
    assert!(found.starts_with("delete: "));
    assert_eq!(stdout(&["minor", u.to_str().unwrap(), w.to_str().unwrap()], ""), "none\n");
    stdout(&["decompose", w.to_str().unwrap(), "--dot", dot.to_str().unwrap()], "");
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("graph tree {"));
    assert_eq!(stdout(&["is-positroid", w.to_str().unwrap()], ""), "true\n");
    let env = stdout(&["envelope"], &build(&["wheel", "3"]));
    assert_eq!(stdout(&["is-positroid"], &env), "true\n");
    assert_eq!(stdout(&["necklace"], &build(&["uniform", "2", "4"])).lines().next(), Some("J_1: {1,2}"));
    let info = stdout(&["info"], &build(&["circuit", "3"]));
    assert!(info.contains("circuits: {1,2,3}\n"));
}

#[test]
fn exit_codes() {
    let parse = positroid(&["perm"], "ground: 1 2\nrank: 1\nbases:\n3\n");
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("Parse"));
    let domain = positroid(&["construct", "whirl", "1"], "");
    assert_eq!(domain.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&domain.stderr).contains("RankTooSmall"));
    let ternary = positroid(&["decompose"], &build(&["uniform", "2", "5"]));
    assert!(ternary.status.success());
    assert_eq!(positroid(&["construct", "uniform", "3"], "").status.code(), Some(2));
    assert_eq!(positroid(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(positroid(&["info", "/nonexistent/file"], "").status.code(), Some(1));
}
