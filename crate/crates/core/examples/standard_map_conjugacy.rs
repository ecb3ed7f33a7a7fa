//! Change of coordinates for an invariant circle of the Standard Map with
//! r = 1. The circle surrounds the elliptic point (π, 0); its angle profile
//! g has only even Fourier modes because the map commutes with the point
//! reflection through that point.
//!
//! cargo run --release --example standard_map_conjugacy

use birkhoff::conjugacy::{analyticity_fit, build_model, conjugacy_samples, Parity};
use birkhoff::numerics::{make_weights, DoubleDouble, Real};
use birkhoff::rotation::rotation_number;
use birkhoff::systems::{StandardMap, StdMapState};
use num_complex::Complex;

type D = DoubleDouble;

fn main() -> birkhoff::Result<()> {
    let n = 100_000;
    let map = StandardMap::new(D::ONE);
    let center = Complex::new(D::pi(), D::ZERO);
    let traj = map.trajectory_about(StdMapState::new(D::pi(), D::from_f64(0.787466)), n + 1, center);
    let scheme = make_weights(n, 1)?;

    let r = rotation_number(&traj, center, 2, &scheme)?;
    println!("rho = {}  (W = {}, fluctuation {:.1e})", r.rho.to_sci_string(34), r.winding, r.fluctuation);

    let samples = conjugacy_samples(&traj.truncated(n), r.rho, center)?;
    let model = build_model(&samples, 120, &scheme)?;
    println!("noise floor {:.1e}", model.noise_floor);
    for k in (0..120).step_by(10) {
        println!(
            "  |a_{k:<3}| = {:.2e}   |a_{:<3}| = {:.2e}",
            model.a(k).norm_sqr().sqrt().to_f64(),
            k + 1,
            model.a(k + 1).norm_sqr().sqrt().to_f64()
        );
    }
    let fit = analyticity_fit(&model, Parity::Even)?;
    println!("even-k decay: beta = {:.4}, R^2 = {:.5}, analytic = {}", fit.beta, fit.r_squared, fit.real_analytic());

    let far = 1_000_000u64;
    let truth = map.orbit(StdMapState::new(D::pi(), D::from_f64(0.787466)), far as usize + 1)[far as usize];
    let pred = model.predict(far)?;
    let dx = birkhoff::systems::unwrap_near(truth.x - pred.re, D::ZERO);
    let dy = birkhoff::systems::unwrap_near(truth.y - pred.im, D::ZERO);
    println!("iterate {far}: prediction off by {:.1e}", (dx * dx + dy * dy).sqrt().to_f64());
    Ok(())
}
