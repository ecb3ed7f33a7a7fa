//! |WB_N(σ_j)| for σ_j(θ) = e^{i2πjθ} along the golden rotation: the error
//! kernel of every Fourier coefficient estimate.
//!
//! cargo run --release --example basis_averages

use birkhoff::conjugacy::basis_averages;
use birkhoff::numerics::{golden, make_weights, DoubleDouble};

fn main() -> birkhoff::Result<()> {
    let rho = golden::<DoubleDouble>();
    for n in [10_000usize, 50_000, 200_000] {
        let v = basis_averages(100, rho, &make_weights(n, 1)?)?;
        let (j, worst) = v
            .iter()
            .enumerate()
            .map(|(i, z)| (i + 1, z.norm_sqr().sqrt().to_f64()))
            .fold((0, 0.0), |a, b| if b.1 > a.1 { b } else { a });
        println!("N = {n:>7}: max over 0 < j <= 100 of |WB_N(sigma_j)| = {worst:.2e} at j = {j}");
    }
    Ok(())
}
