use birkhoff::classify::{classify_grid, diagonal_seeds, embed3, lyapunov, orbit_zeros, Observable, Region};
use birkhoff::numerics::{make_weights, DoubleDouble, WeightScheme};
use birkhoff::systems::{StandardMap, StdMapState};
use proptest::prelude::*;

const CHAOTIC: (f64, f64) = (0.1, 0.1);
const REGULAR: (f64, f64) = (3.0, 0.0);
const FS: [Observable; 3] = [Observable::SinXY, Observable::CosX, Observable::SinY];

fn zeros(seed: (f64, f64), n: usize) -> f64 {
    let m = StandardMap::new(1.4);
    orbit_zeros(&m, StdMapState::new(seed.0, seed.1), Observable::SinXY, &make_weights(n, 1).unwrap()).unwrap().zeros
}

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn zeros_never_exceed_the_cap(x in 0.0..std::f64::consts::TAU, y in 0.0..std::f64::consts::TAU, r in 0.0f64..3.0) {
        let m = StandardMap::new(r);
        let z = orbit_zeros(&m, StdMapState::new(x, y), Observable::SinXY, &make_weights(500, 1).unwrap()).unwrap();
        prop_assert!(z.zeros >= 0.0 && z.zeros <= 15.0);
        prop_assert_eq!(z.capped, z.zeros == 15.0);
    }
}

#[test]
fn high_precision_cap_is_32() {
    let m = StandardMap::new(DoubleDouble::from_f64(1.4));
    let seed = StdMapState::new(DoubleDouble::from_f64(REGULAR.0), DoubleDouble::from_f64(REGULAR.1));
    let z = orbit_zeros(&m, seed, Observable::SinXY, &make_weights(20_000, 1).unwrap()).unwrap();
    assert!(z.zeros > 18.0 && z.zeros <= 32.0, "{}", z.zeros);
}

#[test]
fn grid_is_identical_for_any_thread_count() {
    let s = make_weights::<f64>(1_000, 1).unwrap();
    let run = |t: usize| pool(t).install(|| classify_grid(Region::torus(), 12, 9, Observable::SinXY, 1.4, &s).unwrap());
    let a = run(1);
    for t in [2, 4, 8] {
        let b = run(t);
        assert!(a.values.iter().zip(&b.values).all(|(x, y)| x.to_bits() == y.to_bits()));
    }
    let again = run(1);
    assert_eq!(a.values, again.values);
}

#[test]
fn embedding_is_identical_for_any_thread_count() {
    let seeds = diagonal_seeds::<f64>(16);
    let m = StandardMap::new(1.4);
    let s = make_weights(2_000, 1).unwrap();
    let a = pool(1).install(|| embed3(&seeds, FS, &m, &s).unwrap());
    let b = pool(8).install(|| embed3(&seeds, FS, &m, &s).unwrap());
    assert_eq!(a, b);
}

#[test]
fn regular_and_chaotic_seeds_separate() {
    assert!(zeros(REGULAR, 20_000) >= 14.0);
    let z = zeros(CHAOTIC, 20_000);
    assert!((1.5..=5.0).contains(&z), "{z}");
}

#[test]
fn chaotic_zeros_grow_like_half_log_n() {
    let base = zeros(CHAOTIC, 1_000);
    for (n, steps) in [(10_000, 1.0), (100_000, 2.0)] {
        let d = zeros(CHAOTIC, n) - base;
        assert!((d - 0.5 * steps).abs() <= 0.5, "N = {n}: growth {d}");
    }
}

#[test]
fn mean_chaotic_growth_is_near_one_half_per_decade() {
    let seeds: Vec<(f64, f64)> = (0..24).map(|i| (0.05 + 0.01 * i as f64, 0.1)).collect();
    let mean = |n: usize| seeds.iter().map(|&s| zeros(s, n)).sum::<f64>() / seeds.len() as f64;
    let slope = (mean(100_000) - mean(1_000)) / 2.0;
    assert!((slope - 0.5).abs() <= 0.2, "{slope}");
}

#[test]
fn lyapunov_separates_orbits() {
    let m = StandardMap::new(1.4);
    let chaotic = StdMapState::new(CHAOTIC.0, CHAOTIC.1);
    let reference = lyapunov(chaotic, &m, &WeightScheme::uniform(1_000_000).unwrap(), false).unwrap();
    assert!(reference > 0.1);
    for n in [10_000, 100_000] {
        let l = lyapunov(chaotic, &m, &make_weights(n, 1).unwrap(), true).unwrap();
        assert!((l - reference).abs() < 0.1 * reference, "N = {n}: {l} vs {reference}");
    }
    let regular =
        lyapunov(StdMapState::new(REGULAR.0, REGULAR.1), &m, &make_weights(100_000, 1).unwrap(), true).unwrap();
    assert!(regular.abs() < 1e-3, "{regular}");
}

#[test]
fn triples_agree_along_circles_and_scatter_in_the_sea() {
    let m = StandardMap::new(1.4);
    let s = make_weights(20_000, 1).unwrap();
    let spread = |seed: (f64, f64)| {
        // points of one orbit are seeds with the same limit
        let orbit = m.orbit(StdMapState::new(seed.0, seed.1), 400);
        let picks: Vec<StdMapState<f64>> = orbit.iter().step_by(50).cloned().collect();
        let e = embed3(&picks, FS, &m, &s).unwrap();
        e.iter()
            .flat_map(|a| e.iter().map(move |b| (0..3).map(|i| (a[i] - b[i]).abs()).fold(0.0, f64::max)))
            .fold(0.0, f64::max)
    };
    let regular = spread(REGULAR);
    let chaotic = spread(CHAOTIC);
    assert!(regular < 1e-10, "{regular}");
    assert!(chaotic > 1e3 * regular && chaotic > 1e-4, "{chaotic}");
}

#[test]
fn observables_parse_by_name() {
    for f in FS {
        assert_eq!(f.as_str().parse::<Observable>().unwrap(), f);
    }
    assert!("tan".parse::<Observable>().is_err());
}
