use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_explicit-nl"));
    cmd.env_remove("EXPLICIT_NL_SEED").env_remove("EXPLICIT_NL_PRIME");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("explicit-nl-{}-{name}", std::process::id()))
}

#[test]
fn decompose() {
    let o = run(&["decompose", "5", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("ks = [3, 2]") && out.contains("upper = 7") && out.contains("lower = 2"), "{out}");
    assert!(stdout(&run(&["decompose", "29", "10"])).contains("upper = 31"));
    assert_eq!(run(&["decompose", "5", "zero"]).status.code(), Some(2));
}

#[test]
fn bound_exit_codes() {
    let o = run(&["bound", "quadric", "--variant", "minus-d-regular", "-d", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result: floor 5") && stdout(&o).contains("branch: quadric"));

    let o = run(&["bound", "quintic", "--variant", "adjoint", "-d", "12", "--h1-zero"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result: floor 7"));

    let o = run(&["bound", "quintic", "--variant", "adjoint", "-d", "12"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("[FAIL] h1 known zero or d >= 2*b - 2*a + 13 = 13"), "{}", stdout(&o));

    let o = run(&["bound", "no-such-entry", "--variant", "adjoint", "-d", "12"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no-such-entry"));
}

#[test]
fn bound_with_trace() {
    let o = run(&["bound", "quintic", "--variant", "adjoint", "-d", "12", "--h1-zero", "--trace", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("growth: 6^<10> = 6") && out.contains(": contradiction"), "{out}");
    let o = run(&["bound", "quintic", "--variant", "adjoint", "-d", "12", "--h1-zero", "--trace", "7"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn ample_exit_codes() {
    let o = run(&["ample", "quadric", "-d", "4", "-k", "100"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ample: 128 > 100"));
    assert_eq!(run(&["ample", "quadric", "-d", "4", "-k", "128"]).status.code(), Some(3));
    let o = run(&["ample", "quadric", "-d", "3", "-k", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("hypotheses_unmet"));
    // The bundle template has no H^3.
    let o = run(&["ample", "p2-bundle", "-d", "9", "-k", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_csv_is_reproducible() {
    let args = ["verify", "macaulay", "--trials", "40", "--seed", "7", "--format", "csv"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("suite,trial,parameters,observed,bound,pass\n"));
    assert_eq!(text.lines().count(), 41);
    assert!(!text.contains('\r'));

    let env = bin().args(["verify", "macaulay", "--trials", "40", "--format", "csv"]).env("EXPLICIT_NL_SEED", "7").output().unwrap();
    assert_eq!(env.stdout, a.stdout);
    let other = run(&["verify", "macaulay", "--trials", "40", "--seed", "8", "--format", "csv"]);
    assert_ne!(other.stdout, a.stdout);
}

#[test]
fn verify_suites_and_errors() {
    let o = run(&["verify", "green-scan", "--cmax", "300", "--dmax", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("green-scan"));
    assert_eq!(run(&["verify", "thresholds"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "macaulay", "--prime", "100"]).status.code(), Some(2));
    let env = bin().args(["verify", "koszul", "--trials", "8"]).env("EXPLICIT_NL_PRIME", "91").output().unwrap();
    assert_eq!(env.status.code(), Some(2));
    assert_eq!(run(&["verify", "koszul", "--trials", "8", "--budget", "5"]).status.code(), Some(2));
}

#[test]
fn catalog_round_trip_through_a_file() {
    let o = run(&["catalog"]);
    assert_eq!(o.status.code(), Some(0));
    let path = scratch("catalog.txt");
    let edited = stdout(&o).replace("beta = 2\na = 4\nb = 2", "beta = 3\na = 4\nb = 3");
    std::fs::write(&path, edited).unwrap();
    let o = run(&[
        "bound", "p2-bundle", "--variant", "adjoint", "-d", "40", "--h1-zero", "--catalog", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    // b = 3 on a linear P^2-bundle: d - 6 - b.
    assert!(stdout(&o).contains("result: floor 31"), "{}", stdout(&o));

    std::fs::write(&path, "name = broken\nalpha = 1\nbeta = 0\na = 1\nb = 1\n").unwrap();
    let o = run(&["ample", "broken", "-d", "9", "-k", "1", "--catalog", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("beta"), "{}", stderr(&o));
    std::fs::remove_file(&path).ok();
}
