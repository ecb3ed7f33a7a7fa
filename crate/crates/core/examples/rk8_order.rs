//! Empirical order of the eighth-order Runge-Kutta step on a three-body
//! orbit: halving h should cut the global error by about 2^8.
//!
//! cargo run --release --example rk8_order

use birkhoff::numerics::{DoubleDouble, Real};
use birkhoff::systems::{ThreeBody, ThreeBodyState};

type D = DoubleDouble;

fn integrate(sys: &ThreeBody<D>, s0: ThreeBodyState<D>, t: f64, steps: usize) -> ThreeBodyState<D> {
    let h = D::from_f64(t) / D::from_usize(steps);
    let mut s = s0;
    for _ in 0..steps {
        s = sys.rk8_step(&s, h).expect("no collision on this orbit");
    }
    s
}

fn main() -> birkhoff::Result<()> {
    let sys = ThreeBody::new(D::from_f64(0.1));
    let s0 = sys.section_seed(D::from_f64(0.1), D::ZERO, D::from_f64(-2.63))?;
    let t = 0.5;
    let reference = integrate(&sys, s0, t, 4096);
    let mut prev: Option<f64> = None;
    for steps in [32usize, 64, 128, 256] {
        let s = integrate(&sys, s0, t, steps);
        let err = [s.q1 - reference.q1, s.q2 - reference.q2, s.p1 - reference.p1, s.p2 - reference.p2]
            .iter()
            .map(|d| d.abs().to_f64())
            .fold(0.0, f64::max);
        match prev {
            Some(p) => println!("h = {:.2e}: error {err:.2e}, order {:.2}", t / steps as f64, (p / err).log2()),
            None => println!("h = {:.2e}: error {err:.2e}", t / steps as f64),
        }
        prev = Some(err);
    }
    Ok(())
}
