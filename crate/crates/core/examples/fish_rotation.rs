//! Rotation number of the fish curve seen from a point outside it, in
//! double-double precision. The curve is sampled with the golden rotation,
//! so the answer is known.
//!
//! cargo run --release --example fish_rotation

use birkhoff::numerics::{golden, make_weights, DoubleDouble};
use birkhoff::rotation::{circle_distance, rotation_number};
use birkhoff::systems::CurveSpec;
use num_complex::Complex;

fn main() -> birkhoff::Result<()> {
    let g = golden::<DoubleDouble>();
    let fish = CurveSpec::fish(g);
    let p = Complex::new(DoubleDouble::from_f64(7.0), DoubleDouble::from_f64(4.0));
    for n in [2_000usize, 5_000, 20_000] {
        let traj = fish.trajectory(n + 1);
        let r = rotation_number(&traj, p, 2, &make_weights(n, 1)?)?;
        // the data cannot tell ρ from 1 − ρ
        let err = circle_distance(r.rho, g).min(circle_distance(r.rho, DoubleDouble::ONE - g));
        println!("N = {n:>6}  rho = {}  W = {}  error = {err:.1e}", r.rho.to_sci_string(34), r.winding);
    }
    Ok(())
}
