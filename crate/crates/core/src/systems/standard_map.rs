use num_complex::Complex;

use crate::numerics::Real;
use crate::trajectory::{Provenance, Trajectory};

/// Reduces an angle into `[0, 2π)`.
#[inline]
pub fn reduce_angle<R: Real>(v: R) -> R {
    let tp = R::two_pi();
    // one correction covers every value a single step can produce
    let w = if v >= tp {
        v - tp
    } else if v < R::zero() {
        v + tp
    } else {
        v
    };
    if w >= R::zero() && w < tp {
        w
    } else {
        let r = w - tp * (w / tp).floor();
        if r >= tp {
            r - tp
        } else if r < R::zero() {
            r + tp
        } else {
            r
        }
    }
}

/// State `(x, y)` on the torus `[0, 2π)²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StdMapState<R> {
    pub x: R,
    pub y: R,
}

impl<R: Real> StdMapState<R> {
    /// Builds a state, reducing both coordinates mod 2π.
    pub fn new(x: R, y: R) -> Self {
        Self { x: reduce_angle(x), y: reduce_angle(y) }
    }

    pub fn to_point(self) -> Complex<R> {
        Complex::new(self.x, self.y)
    }
}

/// The Standard Map `(x, y) ↦ (x + y, y + r sin(x + y)) mod 2π`.
#[derive(Debug, Clone, Copy)]
pub struct StandardMap<R> {
    pub r: R,
}

impl<R: Real> StandardMap<R> {
    pub fn new(r: R) -> Self {
        Self { r }
    }

    #[inline]
    pub fn step(&self, s: StdMapState<R>) -> StdMapState<R> {
        self.step_with_sine(s).0
    }

    /// One step, also returning `sin(x + y)` of the input state so that the
    /// default observable costs nothing extra.
    #[inline]
    pub fn step_with_sine(&self, s: StdMapState<R>) -> (StdMapState<R>, R) {
        let x = reduce_angle(s.x + s.y);
        let (sn, _) = x.sin_cos();
        let y = reduce_angle(s.y + self.r * sn);
        (StdMapState { x, y }, sn)
    }

    /// `[[1, 1], [r cos(x+y), 1 + r cos(x+y)]]`.
    pub fn jacobian(&self, s: StdMapState<R>) -> [[R; 2]; 2] {
        let c = self.r * (s.x + s.y).cos();
        [[R::one(), R::one()], [c, R::one() + c]]
    }

    /// The first `n` states starting at `seed`.
    pub fn orbit(&self, seed: StdMapState<R>, n: usize) -> Vec<StdMapState<R>> {
        let mut out = Vec::with_capacity(n);
        let mut s = seed;
        for _ in 0..n {
            out.push(s);
            s = self.step(s);
        }
        out
    }

    pub fn trajectory(&self, seed: StdMapState<R>, n: usize) -> Trajectory<R> {
        let points = self.orbit(seed, n).into_iter().map(StdMapState::to_point).collect();
        let prov = Provenance::new("standard_map")
            .with("r", self.r.to_sci(R::print_digits()))
            .with("x0", seed.x.to_sci(R::print_digits()))
            .with("y0", seed.y.to_sci(R::print_digits()))
            .with("N", n);
        Trajectory::new(points, prov)
    }
}

impl<R: Real> StandardMap<R> {
    /// Orbit with both coordinates shifted by multiples of `2π` into
    /// `[c - π, c + π)`, so that a curve encircling `center` is not cut by
    /// the edges of the torus.
    pub fn trajectory_about(&self, seed: StdMapState<R>, n: usize, center: Complex<R>) -> Trajectory<R> {
        let mut t = self.trajectory(seed, n);
        for p in &mut t.points {
            *p = Complex::new(unwrap_near(p.re, center.re), unwrap_near(p.im, center.im));
        }
        t.provenance = t.provenance.with("center", format!("{},{}", center.re.to_f64(), center.im.to_f64()));
        t
    }
}

/// The representative of `v` mod 2π in `[c - π, c + π)`.
pub fn unwrap_near<R: Real>(v: R, c: R) -> R {
    c + reduce_angle(v - c + R::pi()) - R::pi()
}

pub fn standard_map_step<R: Real>(s: StdMapState<R>, r: R) -> StdMapState<R> {
    StandardMap::new(r).step(s)
}

pub fn standard_map_jacobian<R: Real>(s: StdMapState<R>, r: R) -> [[R; 2]; 2] {
    StandardMap::new(r).jacobian(s)
}
