//! Writing a trajectory to CSV and reading it back gives the same rotation
//! number as the in-memory curve.
//!
//! cargo run --release --example trajectory_files

use std::io::Cursor;

use birkhoff::io::{header_lines, read_trajectory_csv, write_trajectory_csv};
use birkhoff::numerics::{golden, make_weights};
use birkhoff::rotation::rotation_number;
use birkhoff::systems::CurveSpec;
use birkhoff::Trajectory;
use num_complex::Complex;

fn main() -> birkhoff::Result<()> {
    let n = 5_000;
    let traj = CurveSpec::fish(golden::<f64>()).trajectory(n + 1);
    let mut buf = Vec::new();
    write_trajectory_csv(&mut buf, &traj, &header_lines("{\"example\":\"trajectory_files\"}", Some(&traj.provenance)))?;
    for line in String::from_utf8_lossy(&buf).lines().take(6) {
        println!("{line}");
    }

    let back: Trajectory<f64> = read_trajectory_csv(Cursor::new(buf))?;
    let p = Complex::new(7.0, 4.0);
    let s = make_weights(n, 1)?;
    let a = rotation_number(&traj, p, 2, &s)?.rho;
    let b = rotation_number(&back, p, 2, &s)?.rho;
    println!("in memory {a:.17}\nfrom file {b:.17}");
    Ok(())
}
