//! Chaos versus quasiperiodicity on the Standard Map: `zeros_N`, grid
//! scans, three-observable embeddings and Lyapunov exponents.

mod grid;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::{Real, WeightScheme, WeightedAverager};
use crate::systems::{StandardMap, StdMapState};

pub use grid::{classify_grid, ClassificationGrid, Region};

/// Smooth observables on the torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Observable {
    /// `sin(x + y)`
    SinXY,
    /// `cos(x)`
    CosX,
    /// `sin(y)`
    SinY,
}

impl Observable {
    pub fn eval<R: Real>(self, s: StdMapState<R>) -> R {
        match self {
            Observable::SinXY => (s.x + s.y).sin(),
            Observable::CosX => s.x.cos(),
            Observable::SinY => s.y.sin(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Observable::SinXY => "sin_xy",
            Observable::CosX => "cos_x",
            Observable::SinY => "sin_y",
        }
    }
}

impl fmt::Display for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Observable {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sin_xy" => Ok(Observable::SinXY),
            "cos_x" => Ok(Observable::CosX),
            "sin_y" => Ok(Observable::SinY),
            other => Err(Error::Parse(format!("unknown observable `{other}` (expected sin_xy|cos_x|sin_y)"))),
        }
    }
}

/// `zeros_N = −log₁₀|Δ_N|`, capped at the significant digits of the
/// working precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZerosResult<R> {
    pub zeros: f64,
    pub delta: R,
    pub capped: bool,
}

impl<R: Real> ZerosResult<R> {
    fn from_delta(delta: R) -> Self {
        let cap = R::PRECISION.significant_digits() as f64;
        let d = delta.abs();
        if d == R::zero() {
            return Self { zeros: cap, delta, capped: true };
        }
        let z = -d.log10().to_f64();
        if z >= cap {
            Self { zeros: cap, delta, capped: true }
        } else {
            Self { zeros: z, delta, capped: false }
        }
    }
}

/// `Δ_N = WB_N(first N values) − WB_N(second N values)`.
pub fn zeros_n<R: Real>(values: &[R], scheme: &WeightScheme<R>) -> Result<ZerosResult<R>> {
    let n = scheme.len();
    if values.len() != 2 * n {
        return Err(Error::Contract(format!("zeros_N needs 2N = {} values, got {}", 2 * n, values.len())));
    }
    let a = crate::numerics::weighted_birkhoff(&values[..n], scheme)?;
    let b = crate::numerics::weighted_birkhoff(&values[n..], scheme)?;
    Ok(ZerosResult::from_delta(a - b))
}

/// `zeros_N` of `f` along the orbit of `seed`, streaming `2N` steps.
pub fn orbit_zeros<R: Real>(
    map: &StandardMap<R>,
    seed: StdMapState<R>,
    f: Observable,
    scheme: &WeightScheme<R>,
) -> Result<ZerosResult<R>> {
    let mut first = WeightedAverager::new(scheme);
    let mut second = WeightedAverager::new(scheme);
    let mut s = seed;
    for i in 0..2 * scheme.len() {
        let (next, v) = match f {
            // the step computes sin(x + y) anyway
            Observable::SinXY => map.step_with_sine(s),
            other => (map.step(s), other.eval(s)),
        };
        if i < scheme.len() {
            first.push(v);
        } else {
            second.push(v);
        }
        s = next;
    }
    Ok(ZerosResult::from_delta(first.finish()? - second.finish()?))
}

/// `count` seeds `(t_i, t_i)` with `t_i = 2π(i + 1/2)/count`.
pub fn diagonal_seeds<R: Real>(count: usize) -> Vec<StdMapState<R>> {
    (0..count)
        .map(|i| {
            let t = R::two_pi() * R::from_f64(i as f64 + 0.5) / R::from_usize(count);
            StdMapState::new(t, t)
        })
        .collect()
}

/// `(WB_N(f1), WB_N(f2), WB_N(f3))` over the orbit of every seed.
///
/// Seeds are independent; results come back in seed order whatever the
/// thread count.
pub fn embed3<R: Real>(
    seeds: &[StdMapState<R>],
    fs: [Observable; 3],
    map: &StandardMap<R>,
    scheme: &WeightScheme<R>,
) -> Result<Vec<[R; 3]>> {
    seeds
        .par_iter()
        .map(|&seed| {
            let mut acc = [WeightedAverager::new(scheme), WeightedAverager::new(scheme), WeightedAverager::new(scheme)];
            let mut s = seed;
            for _ in 0..scheme.len() {
                for (a, f) in acc.iter_mut().zip(fs) {
                    a.push(f.eval(s));
                }
                s = map.step(s);
            }
            let [a, b, c] = acc;
            Ok([a.finish()?, b.finish()?, c.finish()?])
        })
        .collect()
}

/// Largest Lyapunov exponent from the tangent map with per-step
/// renormalization, averaged with the scheme's weights or, when
/// `weighted` is false, uniformly over the same `N` steps.
pub fn lyapunov<R: Real>(
    seed: StdMapState<R>,
    map: &StandardMap<R>,
    scheme: &WeightScheme<R>,
    weighted: bool,
) -> Result<R> {
    let n = scheme.len();
    if n < 10 {
        return Err(Error::Contract(format!("Lyapunov exponent needs N >= 10, got {n}")));
    }
    let uniform;
    let scheme = if weighted {
        scheme
    } else {
        uniform = WeightScheme::uniform(n)?;
        &uniform
    };
    let mut avg = WeightedAverager::new(scheme);
    let mut s = seed;
    // along x; the invariant direction of the shear r = 0
    let mut v = [R::one(), R::zero()];
    for _ in 0..n {
        let j = map.jacobian(s);
        let w = [j[0][0] * v[0] + j[0][1] * v[1], j[1][0] * v[0] + j[1][1] * v[1]];
        let norm = (w[0] * w[0] + w[1] * w[1]).sqrt();
        avg.push(norm.ln());
        v = [w[0] / norm, w[1] / norm];
        s = map.step(s);
    }
    avg.finish()
}
