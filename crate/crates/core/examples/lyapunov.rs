//! Lyapunov exponents of a chaotic and a quasiperiodic Standard Map orbit,
//! with plain and weighted averaging of the tangent growth.
//!
//! cargo run --release --example lyapunov

use birkhoff::classify::lyapunov;
use birkhoff::numerics::make_weights;
use birkhoff::systems::{StandardMap, StdMapState};

fn main() -> birkhoff::Result<()> {
    let map = StandardMap::new(1.4);
    for (name, seed) in [("chaotic", StdMapState::new(0.1, 0.1)), ("quasiperiodic", StdMapState::new(3.0, 0.0))] {
        for n in [1_000usize, 10_000, 100_000] {
            let s = make_weights(n, 1)?;
            let plain = lyapunov(seed, &map, &s, false)?;
            let weighted = lyapunov(seed, &map, &s, true)?;
            println!("{name:>13} N = {n:>6}: plain {plain:+.6}  weighted {weighted:+.6}");
        }
    }
    Ok(())
}
