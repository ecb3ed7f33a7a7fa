use birkhoff::numerics::{golden, make_weights, DoubleDouble};
use birkhoff::rotation::{
    angle_about, circle_distance, continue_lift, delay_embed, raw_increments, rotation_number, winding_number,
    LiftedAngleSeries,
};
use birkhoff::systems::CurveSpec;
use birkhoff::{Error, Trajectory};
use num_complex::Complex;
use proptest::prelude::*;

type D = DoubleDouble;

fn lift(traj: &Trajectory<f64>, p: Complex<f64>, k: usize) -> (Vec<f64>, LiftedAngleSeries<f64>) {
    let emb = delay_embed(traj, k).unwrap();
    let mut d = raw_increments(&angle_about(traj, p).unwrap());
    d.truncate(emb.len());
    let l = continue_lift(&d, &emb).unwrap();
    (d, l)
}

/// Angle swept by `γ − p` as `x` runs from `x0` to `x0 + rho`, in turns.
fn swept(curve: &CurveSpec<f64>, p: Complex<f64>, x0: f64, rho: f64) -> f64 {
    let steps = 400;
    let mut total = 0.0;
    let mut prev = (curve.point(x0) - p).arg();
    for i in 1..=steps {
        let a = (curve.point(x0 + rho * i as f64 / steps as f64) - p).arg();
        let mut d = (a - prev) / std::f64::consts::TAU;
        d -= (d + 0.5).floor();
        total += d;
        prev = a;
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lift_differs_from_increments_by_integers(n in 200usize..3000, k in 2usize..5) {
        let traj = CurveSpec::fish(golden::<f64>()).trajectory(n);
        let (d, l) = lift(&traj, Complex::new(7.0, 4.0), k);
        for ((&s, &di), &b) in l.delta_star.iter().zip(&d).zip(&l.branch) {
            prop_assert!((s - di - b as f64).abs() < 4.0 * f64::EPSILON);
        }
        prop_assert!(l.max_residual < 0.25);
    }

    #[test]
    fn any_rotation_is_recovered(rho in 0.05f64..0.45) {
        // irrational enough for a few hundred samples
        prop_assume!((1..60).all(|q| { let x = rho * q as f64; (x - x.round()).abs() > 1e-3 }));
        let traj = CurveSpec::fish(rho).trajectory(4001);
        let r = rotation_number(&traj, Complex::new(7.0, 4.0), 2, &make_weights(4000, 1).unwrap()).unwrap();
        prop_assert!(circle_distance(r.rho, rho).min(circle_distance(r.rho, 1.0 - rho)) < 1e-6);
    }
}

#[test]
fn lift_matches_the_true_angle_up_to_one_integer() {
    let rho = golden::<f64>();
    let fish = CurveSpec::fish(rho);
    let p = Complex::new(7.0, 4.0);
    let traj = fish.trajectory(3000);
    let (_, l) = lift(&traj, p, 2);
    let offsets: Vec<f64> =
        l.delta_star.iter().enumerate().map(|(n, &ds)| ds - swept(&fish, p, (n as f64 * rho).fract(), rho)).collect();
    let c = offsets[0].round();
    for o in &offsets {
        assert!((o - c).abs() < 1e-9, "offset {o} vs {c}");
    }
}

#[test]
fn delay_choice_does_not_change_rho() {
    let g = golden::<D>();
    let n = 20_000;
    let traj = CurveSpec::fish(g).trajectory(n + 4);
    let p = Complex::new(D::from_f64(7.0), D::from_f64(4.0));
    let s = make_weights(n, 1).unwrap();
    let rhos: Vec<D> = (2..=4).map(|k| rotation_number(&traj, p, k, &s).unwrap().rho).collect();
    for r in &rhos[1..] {
        assert!(circle_distance(*r, rhos[0]) < 1e-25);
    }
}

#[test]
fn base_points_with_unit_winding_agree() {
    let g = golden::<D>();
    let n = 20_000;
    let traj = CurveSpec::fish(g).trajectory(n + 1);
    let s = make_weights(n, 1).unwrap();
    let at = |x: f64, y: f64| rotation_number(&traj, Complex::new(D::from_f64(x), D::from_f64(y)), 2, &s).unwrap();
    let a = at(6.0, 2.0);
    let b = at(7.0, 4.0);
    assert!(circle_distance(a.rho, b.rho) < 1e-25);
    assert!(circle_distance(a.rho, g).min(circle_distance(a.rho, D::ONE - g)) < 1e-25);
}

#[test]
fn flower_petal_lift_swings_by_about_one_point_two() {
    let traj = CurveSpec::flower(golden::<f64>()).trajectory(20_001);
    let (_, l) = lift(&traj, Complex::new(0.5, 1.5), 2);
    let hi = l.delta_star.iter().cloned().fold(f64::MIN, f64::max);
    let lo = l.delta_star.iter().cloned().fold(f64::MAX, f64::min);
    assert!(((hi - lo) - 1.2).abs() <= 0.1, "amplitude {}", hi - lo);
}

#[test]
fn flower_centre_is_refused_with_its_winding() {
    let g = golden::<f64>();
    let traj = CurveSpec::flower(g).trajectory(20_001);
    let s = make_weights(20_000, 1).unwrap();
    assert_eq!(winding_number(&traj, Complex::new(0.0, 0.0), g).unwrap(), 6);
    match rotation_number(&traj, Complex::new(0.0, 0.0), 2, &s) {
        Err(Error::InvalidBasePoint { winding }) => assert_eq!(winding.map(i64::abs), Some(6)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn point_outside_is_refused() {
    let traj = CurveSpec::fish(golden::<f64>()).trajectory(2001);
    let s = make_weights(2000, 1).unwrap();
    assert!(matches!(rotation_number(&traj, Complex::new(-6.0, -4.0), 2, &s), Err(Error::InvalidBasePoint { .. })));
}

#[test]
fn short_trajectory_is_a_contract_error() {
    let traj = CurveSpec::fish(golden::<f64>()).trajectory(100);
    let s = make_weights(100, 1).unwrap();
    assert!(matches!(rotation_number(&traj, Complex::new(7.0, 4.0), 2, &s), Err(Error::Contract(_))));
}
