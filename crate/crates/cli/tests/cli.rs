use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_polyclose"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn lines(o: &Output) -> Vec<String> {
    String::from_utf8(o.stdout.clone()).unwrap().lines().map(str::to_string).collect()
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

const UNION: &str = "1101\n0110\n1010\n";

fn write_temp(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("polyclose-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn decide_exit_codes() {
    let o = run(&["decide", "--clone", "E2 dual", "--vector", "1110"], UNION);
    assert_eq!((o.status.code(), lines(&o)), (Some(0), vec!["yes".to_string()]));
    let o = run(&["decide", "--clone", "D2", "--vector", "000"], "110\n011\n101\n");
    assert_eq!((o.status.code(), lines(&o)), (Some(1), vec!["no".to_string()]));
    let o = run(&["decide", "--clone", "L0", "--vector", "101"], "110\n011\n");
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["decide", "--clone", "E2", "--vector", "11"], UNION);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("length"));
    let o = run(&["decide", "--clone", "E2", "--vector", "1111"], "1101\n01x0\n");
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["decide", "--clone", "Q7", "--vector", "1111"], UNION);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumeration() {
    let o = run(&["enum", "--clone", "E2 dual"], UNION);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(sorted(lines(&o)), ["0110", "1010", "1101", "1110", "1111"]);
    let o = run(&["enum", "--clone", "E2 dual", "--generic", "--sorted"], UNION);
    assert_eq!(lines(&o), ["0110", "1010", "1101", "1110", "1111"]);
    let o = run(&["enum", "--clone", "L0", "--count-only"], "110\n011\n");
    assert_eq!(lines(&o), ["4"]);
    let o = run(&["enum", "--clone", "I2"], UNION);
    assert_eq!(lines(&o), ["1101", "0110", "1010"]);
    let o = run(&["enum", "--clone", "E2 +0"], "domain 3\n12\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerated_output_is_closed() {
    for clone in ["E2", "M2", "D2", "S12", "L2 +1", "R0", "S10^2 dual"] {
        let o = run(&["enum", "--clone", clone], "10110\n01101\n11000\n");
        let closure = String::from_utf8(o.stdout).unwrap();
        for v in closure.lines() {
            let d = run(&["decide", "--clone", clone, "--vector", v], &closure);
            assert_eq!(d.status.code(), Some(0), "{clone} {v}");
        }
    }
}

#[test]
fn explicit_operations() {
    let capped = "op capped 3 2\n00 0\n01 1\n02 2\n10 1\n11 2\n12 2\n20 2\n21 2\n22 2\n";
    let ops = write_temp("capped.tt", capped);
    let o = run(&["saturate", ops.to_str().unwrap()], "domain 3\n01\n10\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(lines(&o).len(), 8);
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    let o = run(&["enum", "--ops", ops.to_str().unwrap()], "domain 3\n01\n10\n");
    assert_eq!(lines(&o).len(), 8);
    let o = run(&["enum", "--ops", ops.to_str().unwrap(), "--generic"], "domain 3\n01\n10\n");
    assert_eq!(o.status.code(), Some(2));

    let empty = write_temp("empty.tt", "# nothing\n");
    let o = run(&["saturate", empty.to_str().unwrap()], UNION);
    assert_eq!(lines(&o), ["1101", "0110", "1010"]);

    let lattice = "op or 2 2\n00 0\n01 1\n10 1\n11 1\nop and 2 2\n00 0\n01 0\n10 0\n11 1\nop not 2 1\n0 1\n1 0\n";
    let ops = write_temp("lattice.tt", lattice);
    let o = run(&["saturate", ops.to_str().unwrap()], "101\n110\n");
    assert_eq!(lines(&o).len(), 8);

    let o = run(&["saturate", ops.to_str().unwrap(), "--budget", "4"], "101\n110\n");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(lines(&o).len(), 4);
}

#[test]
fn conversion_and_generation() {
    let o = run(&["convert"], "vars 3\n1 2\n");
    assert_eq!(lines(&o), ["domain 2", "110", "111"]);
    let o = run(&["convert"], "1 -2\n");
    assert_eq!(o.status.code(), Some(2));

    let a = run(&["gen", "random", "--n", "5", "--m", "3", "--seed", "7"], "");
    let b = run(&["gen", "random", "--n", "5", "--m", "3", "--seed", "7"], "");
    assert_eq!(a.stdout, b.stdout);
    let o = run(&["gen", "random", "--n", "6", "--m", "4", "--density", "1.0"], "");
    assert_eq!(lines(&o), ["domain 2", "111111"]);

    let h = write_temp("h.txt", "vertices 3\n1 2\n2 3\n");
    let o = run(&["gen", "hittingset", "--hypergraph", h.to_str().unwrap()], "");
    assert_eq!(lines(&o), ["domain 2", "001", "100"]);
    let instance = String::from_utf8(o.stdout).unwrap();
    // vertex 2 hits both edges, so 𝟏 stays out of the closure
    let d = run(&["decide", "--clone", "S10^2", "--vector", "111"], &instance);
    assert_eq!(d.status.code(), Some(1));
}

#[test]
fn bench_is_deterministic_in_work() {
    let args = ["bench", "--clone", "D2", "--n", "32", "--repetitions", "2"];
    let strip = |o: &Output| -> Vec<String> {
        lines(o)
            .iter()
            .map(|l| l.split(' ').filter(|f| !f.contains("_us=")).collect::<Vec<_>>().join(" "))
            .collect()
    };
    let a = run(&args, "");
    let b = run(&args, "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(strip(&a), strip(&b));
    assert!(lines(&a)[0].contains("ratio="));
}
