//! The base point must see the curve wind around it exactly once. Inside the
//! petals of the flower curve it does; at the origin it winds six times and
//! the rotation number is refused.
//!
//! cargo run --release --example flower_winding

use birkhoff::numerics::{golden, make_weights};
use birkhoff::rotation::{rotation_number, winding_number};
use birkhoff::systems::CurveSpec;
use birkhoff::Error;
use num_complex::Complex;

fn main() -> birkhoff::Result<()> {
    let rho = golden::<f64>();
    let n = 20_000;
    let traj = CurveSpec::flower(rho).trajectory(n + 1);
    let s = make_weights(n, 1)?;
    for p in [Complex::new(0.5, 1.5), Complex::new(0.0, 0.0), Complex::new(3.0, 3.0)] {
        let w = winding_number(&traj, p, rho)?;
        match rotation_number(&traj, p, 2, &s) {
            Ok(r) => println!("P = {p}: W = {w}, rho = {:.15}", r.rho),
            Err(e @ Error::InvalidBasePoint { .. }) => println!("P = {p}: W = {w}, {e}"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
