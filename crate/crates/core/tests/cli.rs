use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use birkhoff::numerics::golden;
use birkhoff::systems::CurveSpec;

fn birkhoff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_birkhoff")).args(args).output().expect("binary runs")
}

fn report_value(out: &Output, key: &str) -> String {
    let text = String::from_utf8_lossy(&out.stdout);
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no `{key}` in\n{text}"))
        .to_string()
}

fn write_fish(path: &Path, n: usize) {
    let fish = CurveSpec::fish(golden::<f64>());
    let mut s = String::from("n,x,y\n");
    for (i, p) in fish.trajectory(n).points.iter().enumerate() {
        s += &format!("{i},{:e},{:e}\n", p.re, p.im);
    }
    fs::write(path, s).unwrap();
}

#[test]
fn ingested_file_gives_the_same_rotation_number() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("fish.csv");
    write_fish(&file, 2001);
    let from_file = birkhoff(&["rotnum", "--input", file.to_str().unwrap(), "--P", "7,4", "--N", "2000"]);
    let direct = birkhoff(&["rotnum", "--curve", "fish", "--P", "7,4", "--N", "2000"]);
    assert!(from_file.status.success() && direct.status.success());
    for key in ["rho", "rho_raw", "winding", "fluctuation"] {
        assert_eq!(report_value(&from_file, key), report_value(&direct, key), "{key}");
    }
}

#[test]
fn identical_configs_write_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("grid.csv");
    let img = dir.path().join("grid.pgm");
    let args = ["grid", "--res", "6x5", "--N", "500", "--out", csv.to_str().unwrap(), "--img", img.to_str().unwrap()];
    let run = |threads: &str| {
        let mut a = vec!["--threads", threads];
        a.extend_from_slice(&args);
        let o = birkhoff(&a);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        (o.stdout, fs::read(&csv).unwrap(), fs::read(&img).unwrap())
    };
    let first = run("1");
    assert_eq!(first, run("1"));
    assert_eq!(first, run("3"));
    let text = String::from_utf8(first.1).unwrap();
    assert!(text.starts_with("# config_sha256 "));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 1 + 30);
    assert!(first.2.starts_with(b"P5\n"));
}

#[test]
fn trajectory_round_trips_through_traj_out() {
    let dir = tempfile::tempdir().unwrap();
    let traj = dir.path().join("t.csv");
    let a = birkhoff(&[
        "--precision",
        "high",
        "rotnum",
        "--curve",
        "fish",
        "--P",
        "7,4",
        "--N",
        "3000",
        "--traj-out",
        traj.to_str().unwrap(),
    ]);
    let b =
        birkhoff(&["--precision", "high", "rotnum", "--input", traj.to_str().unwrap(), "--P", "7,4", "--N", "3000"]);
    assert!(a.status.success() && b.status.success());
    let (ra, rb) = (report_value(&a, "rho"), report_value(&b, "rho"));
    // 36 printed digits; the last few may differ after a decimal round trip
    assert_eq!(ra[..30], rb[..30]);
}

#[test]
fn usage_errors_exit_with_2() {
    assert_eq!(birkhoff(&["rotnum", "--P", "7,4"]).status.code(), Some(2));
    assert_eq!(birkhoff(&["rotnum", "--curve", "fish", "--bogus"]).status.code(), Some(2));
    assert_eq!(birkhoff(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(birkhoff(&["rotnum", "--curve", "fish", "--N", "2000", "--P", "seven"]).status.code(), Some(2));
    assert_eq!(birkhoff(&["--help"]).status.code(), Some(0));
}

#[test]
fn domain_errors_exit_with_3() {
    let bad_base = birkhoff(&["rotnum", "--curve", "flower", "--P", "0,0", "--N", "2000"]);
    assert_eq!(bad_base.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&bad_base.stderr).contains("error"));
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.csv");
    let infeasible = birkhoff(&["threebody", "--seed", "0.5,0", "--returns", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(infeasible.status.code(), Some(3));
    let missing = birkhoff(&["rotnum", "--input", dir.path().join("nope.csv").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(3));
}

#[test]
fn numerical_failures_exit_with_4() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("short.csv");
    write_fish(&file, 100);
    let o = birkhoff(&["rotnum", "--input", file.to_str().unwrap(), "--P", "7,4", "--N", "2000"]);
    assert_eq!(o.status.code(), Some(4), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn json_report_carries_the_header() {
    let o = birkhoff(&["--json", "rotnum", "--curve", "fish", "--P", "7,4", "--N", "2000"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["header"][0].as_str().unwrap().starts_with("config_sha256 "));
    assert_eq!(v["report"]["winding"], "1");
}

#[test]
fn conjugacy_model_is_reloadable() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("m.txt");
    let coeffs = dir.path().join("c.csv");
    let m = model.to_str().unwrap();
    let built = birkhoff(&[
        "conjugacy",
        "--standard-map",
        "1",
        "--seed",
        "3.141592653589793,0.787466",
        "--N",
        "20000",
        "--kmax",
        "30",
        "--model",
        m,
        "--coeffs",
        coeffs.to_str().unwrap(),
        "--predict",
        "5",
    ]);
    assert!(built.status.success(), "{}", String::from_utf8_lossy(&built.stderr));
    assert!(fs::read_to_string(&coeffs).unwrap().lines().any(|l| l.starts_with("k,")));
    assert!(fs::read_to_string(&model).unwrap().contains("kmax 30"));
}

#[test]
fn lyapunov_and_wba_report_numbers() {
    let l = birkhoff(&["lyapunov", "--seed", "0.1,0.1", "--N", "20000"]);
    assert!(l.status.success());
    let wba = birkhoff(&["wba", "--seed", "3,0", "--N", "20000"]);
    assert!(wba.status.success());
    assert!(String::from_utf8_lossy(&wba.stdout).contains("zeros"));
}
