//! Poincaré section q2 = 0 of the planar restricted three-body problem at
//! H = -2.63, then the rotation number and conjugacy of the section curve.
//!
//! cargo run --release --example three_body_section

use birkhoff::conjugacy::{analyticity_fit, build_model, conjugacy_samples, Parity};
use birkhoff::numerics::make_weights;
use birkhoff::rotation::rotation_number;
use birkhoff::systems::ThreeBody;
use birkhoff::{Provenance, Trajectory};
use num_complex::Complex;

fn main() -> birkhoff::Result<()> {
    let sys = ThreeBody::new(0.1);
    let h0 = -2.63;
    let s0 = sys.section_seed(0.1, 0.0, h0)?;
    let n = 4_000;
    let returns = sys.poincare_returns(&s0, n + 1, 1e-3, 1e-13, 1000.0)?;
    let drift = returns.iter().map(|p| (sys.hamiltonian(&p.state).unwrap() - h0).abs()).fold(0.0, f64::max);
    println!("{} returns, t = {:.2}, energy drift {drift:.1e}", returns.len(), returns[n].time);

    let traj =
        Trajectory::new(returns.iter().map(|p| Complex::new(p.q1, p.p1)).collect(), Provenance::new("three_body"));
    let c = traj.centroid();
    let s = make_weights(n, 1)?;
    let r = rotation_number(&traj, c, 2, &s)?;
    println!("rho = {:.15} about ({:.5}, {:.5}), fluctuation {:.1e}", r.rho, c.re, c.im, r.fluctuation);

    let model = build_model(&conjugacy_samples(&traj.truncated(n), r.rho, c)?, 60, &s)?;
    let fit = analyticity_fit(&model, Parity::Even)?;
    println!("decay beta = {:.4}, R^2 = {:.4}, noise floor {:.1e}", fit.beta, fit.r_squared, model.noise_floor);
    Ok(())
}
