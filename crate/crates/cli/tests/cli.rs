use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgeideal"))
        .args(args)
        .env_remove("EDGEIDEAL_CAPS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("edgeideal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn reg_of_c6() {
    assert_eq!(stdout(&["reg", "--family", "C6", "--s", "1"]), "3\n");
    assert_eq!(stdout(&["reg", "--family", "C5", "--s", "2"]), "4\n");
}

#[test]
fn gprime_of_c6() {
    let out = stdout(&["gprime", "--family", "C6", "--edges", "x2 x3, x4 x5"]);
    assert!(out.contains("# added x1 x4\n"));
    assert!(out.contains("# added x3 x6\n"));
    let edges = out.lines().filter(|l| !l.starts_with('#')).count();
    assert_eq!(edges, 8);
    let algebraic = stdout(&["gprime", "--family", "C6", "--edges", "x2 x3, x4 x5", "--algebraic"]);
    assert_eq!(out, algebraic);
}

#[test]
fn empty_graph_invariants() {
    let path = temp_file("empty.txt", "# nothing\n");
    let out = stdout(&["invariants", "--graph", &path]);
    for key in ["vertices", "edges", "matching_number", "induced_matching_number", "cochordal_cover_number"] {
        let line = out.lines().find(|l| l.starts_with(key)).unwrap();
        assert!(line.ends_with(" 0"), "{line}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["reg", "--family", "C3"]).status.code(), Some(0));
    assert_eq!(run(&["reg", "--family", "C2"]).status.code(), Some(2));
    assert_eq!(run(&["reg", "--family", "Q3"]).status.code(), Some(2));
    assert_eq!(run(&["reg"]).status.code(), Some(2));
    assert_eq!(run(&["reg", "--family", "C6", "--char", "4"]).status.code(), Some(2));
    assert_eq!(run(&["reg", "--graph", "/nonexistent/graph.txt"]).status.code(), Some(2));
    let capped = run(&["reg", "--family", "K9", "--s", "3", "--cap-generators", "10"]);
    assert_eq!(capped.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap"));
}

#[test]
fn output_is_deterministic() {
    let args = ["check", "--random", "7,0.4", "--seed", "11", "--s", "1", "--json"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), second.status.code());
    assert_eq!(first.stdout, second.stdout);
    let gap = ["gap-search", "connected:5"];
    assert_eq!(stdout(&gap), stdout(&gap));
}

#[test]
fn json_round_trips() {
    let graph = stdout(&["families", "--family", "W(C4)", "--json"]);
    let path = temp_file("wc4.json", &graph);
    assert_eq!(stdout(&["reg", "--graph", &path, "--s", "2"]), "5\n");
    assert_eq!(
        stdout(&["invariants", "--graph", &path]).lines().skip(1).collect::<Vec<_>>(),
        stdout(&["invariants", "--family", "W(C4)"]).lines().skip(1).collect::<Vec<_>>()
    );

    let ideal = stdout(&["ideal", "--family", "C5", "--s", "2", "--json"]);
    let path = temp_file("c5sq.json", &ideal);
    let betti = stdout(&["betti", "--ideal", &path]);
    assert!(betti.contains("reg 4"), "{betti}");
    let text = stdout(&["ideal", "--family", "C5", "--s", "2"]);
    let path = temp_file("c5sq.txt", &text);
    assert_eq!(stdout(&["betti", "--ideal", &path]).lines().skip(1).collect::<Vec<_>>(),
        betti.lines().skip(1).collect::<Vec<_>>());
}

#[test]
fn bounds_report_names_citations() {
    let out = stdout(&["bounds", "--family", "C6", "--s", "1"]);
    assert!(out.contains("[co-chordal upper bound]"));
    assert!(out.lines().any(|l| l.starts_with("cochord") && l.contains(" 3 ")));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["bounds", "--family", "C7", "--s", "2", "--json"])).unwrap();
    assert_eq!(json["bounds"]["cochord"]["validity"], "observed, unproven");
}

#[test]
fn check_passes_on_small_bipartite_graph() {
    let out = stdout(&["check", "--family", "P5", "--s", "1,2", "--max-multiset", "2"]);
    assert!(out.ends_with("0 failed\n"), "{out}");
}

#[test]
fn iterated_colon_adds_generators() {
    let g = temp_file("eight.txt", "x1 x2\nx2 x3\nx3 x4\nx4 x5\nx5 x6\nx6 x7\nx7 x8\nx8 x1\n");
    let one = stdout(&["ideal", "--graph", &g, "--edges", "x2 x3, x4 x5", "--polarize"]);
    let it = stdout(&["ideal", "--graph", &g, "--edges", "x2 x3, x4 x5", "--iterated"]);
    assert!(it.lines().count() >= one.lines().count());
}
