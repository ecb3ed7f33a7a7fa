//! Plain versus weighted Birkhoff averages of `sin(2πx)` along the golden
//! rotation. The exact average is zero, so the printed value is the error.
//!
//! cargo run --release --example weighted_average

use birkhoff::numerics::{golden, make_weights, uniform_average, weighted_birkhoff, DoubleDouble, Real};

fn main() -> birkhoff::Result<()> {
    let rho = golden::<DoubleDouble>();
    println!("{:>8} {:>12} {:>12} {:>12}", "N", "B_N", "WB_N p=1", "WB_N p=2");
    for n in [100usize, 1_000, 10_000, 100_000] {
        let f: Vec<DoubleDouble> =
            (0..n as u64).map(|i| (DoubleDouble::frac_mul(i, rho) * DoubleDouble::two_pi()).sin()).collect();
        let b = uniform_average(&f)?.abs().to_f64();
        let w1 = weighted_birkhoff(&f, &make_weights(n, 1)?)?.abs().to_f64();
        let w2 = weighted_birkhoff(&f, &make_weights(n, 2)?)?.abs().to_f64();
        println!("{n:>8} {b:>12.3e} {w1:>12.3e} {w2:>12.3e}");
    }
    Ok(())
}
