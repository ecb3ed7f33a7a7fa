use num_complex::Complex;

use crate::numerics::Real;

/// A point of the plane. Curves are naturally complex valued, and the
/// Standard Map state `(x, y)` is stored as `x + iy`.
pub type Point<R> = Complex<R>;

/// Where a trajectory came from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Provenance {
    pub system: String,
    pub params: Vec<(String, String)>,
}

impl Provenance {
    pub fn new(system: impl Into<String>) -> Self {
        Self { system: system.into(), params: Vec::new() }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.params.push((key.into(), value.to_string()));
        self
    }
}

/// Ordered planar points `x_0, x_1, ...`.
#[derive(Debug, Clone)]
pub struct Trajectory<R> {
    pub points: Vec<Point<R>>,
    pub provenance: Provenance,
}

impl<R: Real> Trajectory<R> {
    pub fn new(points: Vec<Point<R>>, provenance: Provenance) -> Self {
        Self { points, provenance }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Arithmetic mean of the points.
    pub fn centroid(&self) -> Point<R> {
        let mut re = crate::numerics::Accumulator::new();
        let mut im = crate::numerics::Accumulator::new();
        for p in &self.points {
            re.push(p.re);
            im.push(p.im);
        }
        let n = R::from_usize(self.points.len().max(1));
        Complex::new(re.total() / n, im.total() / n)
    }

    /// Copy with the first `n` points.
    pub fn truncated(&self, n: usize) -> Self {
        Self { points: self.points[..n.min(self.points.len())].to_vec(), provenance: self.provenance.clone() }
    }

    /// Converts to another precision. Going up pads with zeros, it does not
    /// recover lost digits.
    pub fn convert<S: Real>(&self) -> Trajectory<S> {
        let points = self.points.iter().map(|p| Complex::new(convert_real(p.re), convert_real(p.im))).collect();
        Trajectory { points, provenance: self.provenance.clone() }
    }
}

/// Converts between the two scalar types through the decimal-free path
/// `hi + lo`.
pub fn convert_real<R: Real, S: Real>(x: R) -> S {
    let hi = x.to_f64();
    let lo = (x - R::from_f64(hi)).to_f64();
    S::from_f64(hi) + S::from_f64(lo)
}
