//! End-to-end checks of the command-line surface and the file formats.

use std::io::Write as _;
use std::process::{Command, Stdio};

use proptest::prelude::*;

use sgcg::formats::{parse_graph, serialize_graph};
use sgcg_core::{Sign, SignedGraph};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sgcg"))
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("sgcg-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn solve_reports_winner_and_nodes() {
    let file = write_temp("k2.sg", "sg 2 1\n0 1 +\n");
    let out = bin().args(["solve"]).arg(&file).args(["--p", "2", "--d", "1"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("winner: salome\nnodes: "), "{text}");
}

#[test]
fn solve_without_symmetry_agrees() {
    let file = write_temp("c5.sg", "sg 5 5\n0 1 +\n1 2 +\n2 3 -\n3 4 +\n0 4 -\n");
    let base = bin().args(["solve"]).arg(&file).args(["--p", "4", "--d", "1"]).output().unwrap();
    let nosym = bin()
        .args(["solve"])
        .arg(&file)
        .args(["--p", "4", "--d", "1", "--no-symmetry"])
        .output()
        .unwrap();
    let pick_winner = |bytes: &[u8]| {
        String::from_utf8_lossy(bytes).lines().next().unwrap().to_string()
    };
    assert_eq!(pick_winner(&base.stdout), pick_winner(&nosym.stdout));
}

#[test]
fn solve_with_threads_agrees_and_is_deterministic() {
    let file = write_temp("c5t.sg", "sg 5 5\n0 1 +\n1 2 +\n2 3 -\n3 4 +\n0 4 -\n");
    let single = bin().args(["solve"]).arg(&file).args(["--p", "4", "--d", "1"]).output().unwrap();
    let par1 = bin()
        .args(["solve"])
        .arg(&file)
        .args(["--p", "4", "--d", "1", "--threads", "4"])
        .output()
        .unwrap();
    let par2 = bin()
        .args(["solve"])
        .arg(&file)
        .args(["--p", "4", "--d", "1", "--threads", "4"])
        .output()
        .unwrap();
    let first_line =
        |bytes: &[u8]| String::from_utf8_lossy(bytes).lines().next().unwrap().to_string();
    assert_eq!(first_line(&single.stdout), first_line(&par1.stdout));
    assert_eq!(par1.stdout, par2.stdout);
}

#[test]
fn equiv_on_switching_equivalent_cycles() {
    let a = write_temp("c4a.sg", "sg 4 4\n0 1 +\n1 2 +\n2 3 +\n0 3 +\n");
    let b = write_temp("c4b.sg", "sg 4 4\n0 1 -\n1 2 -\n2 3 +\n0 3 +\n");
    let out = bin().arg("equiv").arg(&a).arg(&b).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "equivalent");

    let c = write_temp("c4c.sg", "sg 4 4\n0 1 -\n1 2 +\n2 3 +\n0 3 +\n");
    let out = bin().arg("equiv").arg(&a).arg(&c).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "not equivalent");
}

#[test]
fn malformed_files_exit_with_usage_code() {
    let file = write_temp("dup.sg", "sg 2 2\n0 1 +\n1 0 -\n");
    let out = bin().arg("info").arg(&file).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");

    let out = bin().args(["gen", "moebius", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin().args(["audit", "--suite", "nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("class-count"), "should list valid suites: {err}");
}

#[test]
fn gen_is_deterministic() {
    let out1 = bin().args(["gen", "random-tree", "8", "--sign", "random", "--seed", "11"]).output().unwrap();
    let out2 = bin().args(["gen", "random-tree", "8", "--sign", "random", "--seed", "11"]).output().unwrap();
    assert!(out1.status.success());
    assert_eq!(out1.stdout, out2.stdout);
    let g = parse_graph(&String::from_utf8(out1.stdout).unwrap()).unwrap();
    assert_eq!(g.n(), 8);
    assert_eq!(g.cycle_rank(), 0);
}

#[test]
fn audit_class_count_exits_clean() {
    let out = bin().args(["audit", "--suite", "class-count", "--nmax", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("schema=1 ")), "{text}");
}

#[test]
fn play_full_scripted_game() {
    // Single positive edge, two points: the human colors 0, the engine's
    // reply is forced, the coloring completes.
    let file = write_temp("play.sg", "sg 2 1\n0 1 +\n");
    let mut child = bin()
        .arg("play")
        .arg(&file)
        .args(["--p", "2", "--d", "1"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    // First an illegal move (rejected and re-prompted), then a legal one.
    child.stdin.as_mut().unwrap().write_all(b"0 9\n0 0\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("is not a legal move"), "{text}");
    assert!(text.contains("engine plays 1 1"), "{text}");
    assert!(text.contains("salome wins"), "{text}");
}

#[test]
fn table_and_chi_smoke() {
    let file = write_temp("p3.sg", "sg 3 2\n0 1 +\n1 2 -\n");
    let out = bin().arg("table").arg(&file).args(["--pmax", "6", "--dmax", "2"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("p=2 d=1 winner="), "{text}");

    let out = bin().arg("chi").arg(&file).args(["--pmax", "6", "--dmax", "2"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("estimate: 2"), "{text}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn serialize_parse_round_trip(
        n in 0usize..9,
        picks in proptest::collection::vec((proptest::num::u8::ANY, proptest::bool::ANY), 0..24),
    ) {
        let mut edges = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        if n >= 2 {
            for (pick, neg) in picks {
                let u = pick as usize % n;
                let v = (pick as usize / n) % n;
                if u != v && seen.insert((u.min(v), u.max(v))) {
                    edges.push((u, v, if neg { Sign::Minus } else { Sign::Plus }));
                }
            }
        }
        let g = SignedGraph::new(n, edges).unwrap();
        let text = serialize_graph(&g);
        let parsed = parse_graph(&text).unwrap();
        prop_assert_eq!(&parsed, &g);
        // Idempotence.
        prop_assert_eq!(serialize_graph(&parsed), text);
    }
}
