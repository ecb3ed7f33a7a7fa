use birkhoff::numerics::{DoubleDouble, Real};
use birkhoff::systems::{
    reduce_angle, section_tolerance, standard_map_jacobian, CurveSpec, StandardMap, StdMapState, ThreeBody,
    ThreeBodyState,
};
use birkhoff::Error;
use proptest::prelude::*;
use std::f64::consts::TAU;

type D = DoubleDouble;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn standard_map_preserves_area(x in 0.0..TAU, y in 0.0..TAU, r in 0.0f64..5.0) {
        let j = standard_map_jacobian(StdMapState::new(x, y), r);
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        prop_assert!((det - 1.0).abs() < 1e-12);
    }

    #[test]
    fn jacobian_matches_finite_differences(x in 0.1..6.0f64, y in 0.1..6.0f64, r in 0.0f64..3.0) {
        let m = StandardMap::new(D::from_f64(r));
        let s = StdMapState::new(D::from_f64(x), D::from_f64(y));
        let h = D::from_f64(1e-12);
        let j = m.jacobian(s);
        let base = m.step(s);
        let unwrap = |d: D| {
            let tp = D::two_pi();
            if d > D::pi() { d - tp } else if d < -D::pi() { d + tp } else { d }
        };
        for (col, ds) in [StdMapState { x: s.x + h, y: s.y }, StdMapState { x: s.x, y: s.y + h }].into_iter().enumerate() {
            let t = m.step(ds);
            let dx = (unwrap(t.x - base.x) / h).to_f64();
            let dy = (unwrap(t.y - base.y) / h).to_f64();
            prop_assert!((dx - j[0][col].to_f64()).abs() < 1e-8);
            prop_assert!((dy - j[1][col].to_f64()).abs() < 1e-8);
        }
    }

    #[test]
    fn reduction_lands_in_the_torus(v in -1e6f64..1e6) {
        let w = reduce_angle(v);
        prop_assert!((0.0..TAU).contains(&w));
        let k = ((v - w) / TAU).round();
        prop_assert!((v - w - k * TAU).abs() < 1e-9 * v.abs().max(1.0));
    }

    #[test]
    fn steps_stay_on_the_torus(x in 0.0..TAU, y in 0.0..TAU, r in -3.0f64..3.0) {
        let m = StandardMap::new(r);
        let mut s = StdMapState::new(x, y);
        for _ in 0..1000 {
            s = m.step(s);
            prop_assert!((0.0..TAU).contains(&s.x) && (0.0..TAU).contains(&s.y));
        }
    }

    #[test]
    fn curves_are_trigonometric_polynomials(x in 0.0f64..1.0) {
        let c = CurveSpec::fish(0.3f64);
        let a = c.point(x);
        let b = c.point(x + 1.0);
        prop_assert!((a - b).norm() < 1e-12);
    }
}

#[test]
fn long_orbits_stay_on_the_torus() {
    for r in [0.5, 1.4, 4.0] {
        let m = StandardMap::new(r);
        let mut s = StdMapState::new(0.1, 0.1);
        for _ in 0..1_000_000 {
            s = m.step(s);
            assert!((0.0..TAU).contains(&s.x) && (0.0..TAU).contains(&s.y));
        }
    }
}

#[test]
fn high_precision_orbit_tracks_fast_orbit_briefly() {
    let a = StandardMap::new(1.0f64).orbit(StdMapState::new(3.0, 0.5), 20);
    let b = StandardMap::new(D::ONE).orbit(StdMapState::new(D::from_f64(3.0), D::from_f64(0.5)), 20);
    for (p, q) in a.iter().zip(&b) {
        assert!((p.x - q.x.to_f64()).abs() < 1e-12);
    }
}

fn max_diff(a: &ThreeBodyState<D>, b: &ThreeBodyState<D>) -> f64 {
    [a.q1 - b.q1, a.q2 - b.q2, a.p1 - b.p1, a.p2 - b.p2].iter().map(|d| d.abs().to_f64()).fold(0.0, f64::max)
}

#[test]
fn rk8_local_error_has_order_eight() {
    let sys = ThreeBody::new(D::from_f64(0.1));
    let s0 = sys.section_seed(D::from_f64(0.1), D::ZERO, D::from_f64(-2.63)).unwrap();
    let hs = [1e-2, 5e-3, 2.5e-3];
    let errs: Vec<f64> = hs
        .iter()
        .map(|&h| {
            let h = D::from_f64(h);
            let one = sys.rk8_step(&s0, h).unwrap();
            let half = h.mul_f64(0.5);
            let two = sys.rk8_step(&sys.rk8_step(&s0, half).unwrap(), half).unwrap();
            max_diff(&one, &two)
        })
        .collect();
    for w in errs.windows(2) {
        let order = (w[0] / w[1]).log2() - 1.0;
        assert!(order > 7.5, "{errs:?}");
    }
}

#[test]
fn section_crossings_are_upward_and_on_the_plane() {
    let sys = ThreeBody::new(0.1);
    let h0 = -2.63;
    let s0 = sys.section_seed(0.1, 0.0, h0).unwrap();
    let tol = section_tolerance::<f64>();
    let pts = sys.poincare_returns(&s0, 50, 1e-3, tol, 100.0).unwrap();
    let mut prev = 0.0;
    for p in &pts {
        assert!(p.state.q2.abs() <= tol);
        assert!(p.state.p2 - p.state.q1 > 0.0);
        assert!(p.time > prev);
        prev = p.time;
    }
}

#[test]
fn energy_drifts_little_over_one_return() {
    let sys = ThreeBody::new(0.1);
    let h0 = -2.63;
    let s0 = sys.section_seed(0.1, 0.0, h0).unwrap();
    let pts = sys.poincare_returns(&s0, 20, 1e-3, section_tolerance::<f64>(), 100.0).unwrap();
    let mut prev = h0;
    for p in &pts {
        let h = sys.hamiltonian(&p.state).unwrap();
        assert!((h - prev).abs() <= 1e-10, "{}", (h - prev).abs());
        prev = h;
    }
}

#[test]
fn seeds_off_the_energy_surface_are_infeasible() {
    let sys = ThreeBody::new(0.1);
    assert!(matches!(sys.section_seed(0.5, 0.0, -2.63), Err(Error::InfeasibleSeed { .. })));
    assert!(matches!(sys.field(&ThreeBodyState::new(-0.1, 0.0, 0.0, 0.0)), Err(Error::Collision { .. })));
}
