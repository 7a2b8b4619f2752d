use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_divtower"))
}

fn example(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("divtower-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn malformed_tower_is_a_config_error_with_position() {
    let p = tmp("broken.json");
    std::fs::write(
        &p,
        "{\n  \"levels\": [\n    {\"id\": \"L\", \"kind\": \"base\",}\n  ]\n}\n",
    )
    .unwrap();
    let o = run(&["check", "pull-push", "--tower", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn bad_equation_points_at_its_line() {
    let p = tmp("bad_eq.json");
    std::fs::write(
        &p,
        "{\n  \"levels\": [\n    {\"id\": \"L\", \"kind\": \"base\"},\n    {\"id\": \"E\", \"kind\": \"plane\", \"equation\": \"x^2 = t^3 +* 1\", \"parent\": \"L\"}\n  ]\n}\n",
    )
    .unwrap();
    let o = run(&["check", "pull-push", "--tower", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
}

#[test]
fn unknown_checker_is_rejected() {
    let e1 = example("e1.json");
    let o = run(&["check", "no-such-checker", "--tower", e1.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pull_push_report_and_determinism() {
    let e1 = example("e1.json");
    let (a, b) = (tmp("pp_a.json"), tmp("pp_b.json"));
    for out in [&a, &b] {
        let o = run(&[
            "check",
            "pull-push",
            "--tower",
            e1.to_str().unwrap(),
            "--json",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains("p_* p^* = [2]: 100/100"), "{}", stdout(&o));
    }
    let (ra, rb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ra, rb);
    let v: serde_json::Value = serde_json::from_slice(&ra).unwrap();
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["seed"], 0);
}

#[test]
fn seed_changes_the_sample() {
    let e1 = example("e1.json");
    let a = stdout(&run(&["check", "lemma-ic3", "--tower", e1.to_str().unwrap()]));
    let b = stdout(&run(&[
        "check",
        "lemma-ic3",
        "--tower",
        e1.to_str().unwrap(),
        "--seed",
        "7",
    ]));
    assert_ne!(a, b);
}

#[test]
fn trace_passes_on_rank_one() {
    let r1 = example("rank1.json");
    let o = run(&["check", "lemma-ic6", "--tower", r1.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn missing_instance_is_a_config_error() {
    let e1 = example("e1.json");
    let o = run(&["check", "lemma-ic6", "--tower", e1.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn ideal_commands() {
    let e1 = example("e1.json");
    let t = e1.to_str().unwrap();
    let o = run(&[
        "ideal",
        "two-gen",
        "--tower",
        t,
        "--level",
        "E1",
        "--divisor",
        "E1: {(0, 0):2, (1, 0):1}",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("\"verified\": true"));

    let o = run(&[
        "ideal", "radical", "--tower", t, "--level", "E1", "--f", "x", "--g", "t",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("(0, 0)"));

    let o = run(&[
        "ideal",
        "bool-check",
        "--tower",
        t,
        "--level",
        "E1",
        "--op",
        "difference",
        "--left",
        "E1: {(0, 0):1, (1, 0):1}",
        "--right",
        "E1: {(1, 0):1}",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("\"agree\": true"));
}

#[test]
fn interpret_field() {
    let o = run(&[
        "interpret",
        "field",
        "--curve",
        "x^2 = t^3 + 5*t^2 - 12*t",
        "--points",
        "(-6, 6); (-4, 8)",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["checker"], "field-reconstruct");
    let o = run(&[
        "interpret",
        "field",
        "--curve",
        "x^2 = t^3 + 5*t^2 - 12*t",
        "--points",
        "(-6, 6)",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
