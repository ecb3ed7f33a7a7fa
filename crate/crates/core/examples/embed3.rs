//! Three weighted averages per orbit. Seeds on one invariant circle collapse
//! to a single point; seeds in the chaotic sea scatter.
//!
//! cargo run --release --example embed3

use birkhoff::classify::{embed3, Observable};
use birkhoff::numerics::make_weights;
use birkhoff::systems::{StandardMap, StdMapState};

fn spread(pts: &[[f64; 3]]) -> f64 {
    let mut m = 0.0f64;
    for a in pts {
        for b in pts {
            m = m.max(((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt());
        }
    }
    m
}

fn main() -> birkhoff::Result<()> {
    let map = StandardMap::new(1.4);
    let fs = [Observable::SinXY, Observable::CosX, Observable::SinY];
    let s = make_weights(20_000, 1)?;

    // successive iterates of a single orbit near the elliptic point
    let circle = map.orbit(StdMapState::new(3.0, 0.0), 5);
    let chaotic: Vec<StdMapState<f64>> = (0..5).map(|i| StdMapState::new(0.1 + 0.05 * i as f64, 0.1)).collect();

    let a = embed3(&circle, fs, &map, &s)?;
    let b = embed3(&chaotic, fs, &map, &s)?;
    println!("one orbit:     spread {:.1e}  point ({:.6}, {:.6}, {:.6})", spread(&a), a[0][0], a[0][1], a[0][2]);
    println!("chaotic seeds: spread {:.1e}", spread(&b));
    Ok(())
}
