use std::process::{Command, Output};

fn lscrystal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lscrystal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn explore_is_byte_identical_across_runs() {
    for format in ["json", "dot"] {
        let args = [
            "explore", "--a1", "3", "--a2", "3", "--shape", "1,-1", "--depth", "4", "--format", format,
        ];
        let first = lscrystal(&args);
        assert!(first.status.success());
        for _ in 0..2 {
            assert_eq!(lscrystal(&args).stdout, first.stdout);
        }
    }
}

#[test]
fn explore_writes_out_file() {
    let dir = std::env::temp_dir().join(format!("lscrystal-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("g.json");
    let o = lscrystal(&[
        "explore",
        "--a1",
        "3",
        "--a2",
        "3",
        "--depth",
        "1",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&file).unwrap();
    let g: ls_crystal::BigGraph = ls_crystal::export::from_json(&text).unwrap();
    assert_eq!(g.len(), 3);
    assert_eq!(g.edges.len(), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn explore_from_explicit_seed() {
    let o = lscrystal(&[
        "explore",
        "--a1",
        "3",
        "--a2",
        "3",
        "--depth",
        "0",
        "--seed",
        "dirs=[(-5,13),(5,-2)];cuts=[0,1/5,1]",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("dirs=[(-5,13),(5,-2)];cuts=[0,1/5,1]"));
}

#[test]
fn character_lines_are_sorted() {
    let o = lscrystal(&["character", "--a1", "1", "--a2", "1", "--depth", "8"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(lines, ["(-1,0):1", "(0,1):1", "(1,-1):1"]);
}

#[test]
fn orbit_table() {
    let o = lscrystal(&[
        "orbit",
        "--a1",
        "3",
        "--a2",
        "3",
        "--weight",
        "1,-1",
        "--max-length",
        "2",
    ]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "e\t(1,-1)\nr1\t(-1,2)\nr2\t(-2,1)\nr1r2\t(2,-5)\nr2r1\t(5,-2)\n"
    );
}

#[test]
fn verify_passes_with_exit_zero() {
    let o = lscrystal(&[
        "verify",
        "--a1",
        "3",
        "--a2",
        "3",
        "--suite",
        "all",
        "--depth",
        "3",
        "--word-bound",
        "3",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).trim_end().ends_with("PASS"));
}

#[test]
fn bad_arguments_exit_two() {
    let cases: [&[&str]; 5] = [
        &["explore", "--a1", "2", "--a2", "2", "--depth", "1"],
        &["verify", "--a1", "1", "--a2", "4", "--suite", "order"],
        &[
            "explore",
            "--a1",
            "3",
            "--a2",
            "3",
            "--depth",
            "1",
            "--seed",
            "dirs=[(0,1)];cuts=[0,1]",
        ],
        &[
            "explore", "--a1", "3", "--a2", "3", "--depth", "1", "--shape", "x",
        ],
        &["verify", "--a1", "3", "--a2", "3", "--suite", "bogus"],
    ];
    for args in cases {
        assert_eq!(lscrystal(args).status.code(), Some(2), "{args:?}");
    }
}
