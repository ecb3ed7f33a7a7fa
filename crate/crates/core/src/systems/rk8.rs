use crate::error::Result;
use crate::numerics::Real;

const STAGES: usize = 13;

// Fehlberg's 7(8) pair, propagated with the order-8 weights.
const C: [(i64, i64); STAGES] =
    [(0, 1), (2, 27), (1, 9), (1, 6), (5, 12), (1, 2), (5, 6), (1, 6), (2, 3), (1, 3), (1, 1), (0, 1), (1, 1)];

const A: [&[(i64, i64)]; STAGES] = [
    &[],
    &[(2, 27)],
    &[(1, 36), (1, 12)],
    &[(1, 24), (0, 1), (1, 8)],
    &[(5, 12), (0, 1), (-25, 16), (25, 16)],
    &[(1, 20), (0, 1), (0, 1), (1, 4), (1, 5)],
    &[(-25, 108), (0, 1), (0, 1), (125, 108), (-65, 27), (125, 54)],
    &[(31, 300), (0, 1), (0, 1), (0, 1), (61, 225), (-2, 9), (13, 900)],
    &[(2, 1), (0, 1), (0, 1), (-53, 6), (704, 45), (-107, 9), (67, 90), (3, 1)],
    &[(-91, 108), (0, 1), (0, 1), (23, 108), (-976, 135), (311, 54), (-19, 60), (17, 6), (-1, 12)],
    &[(2383, 4100), (0, 1), (0, 1), (-341, 164), (4496, 1025), (-301, 82), (2133, 4100), (45, 82), (45, 164), (18, 41)],
    &[(3, 205), (0, 1), (0, 1), (0, 1), (0, 1), (-6, 41), (-3, 205), (-3, 41), (3, 41), (6, 41), (0, 1)],
    &[
        (-1777, 4100),
        (0, 1),
        (0, 1),
        (-341, 164),
        (4496, 1025),
        (-289, 82),
        (2193, 4100),
        (51, 82),
        (33, 164),
        (12, 41),
        (0, 1),
        (1, 1),
    ],
];

const B: [(i64, i64); STAGES] = [
    (0, 1),
    (0, 1),
    (0, 1),
    (0, 1),
    (0, 1),
    (34, 105),
    (9, 35),
    (9, 35),
    (9, 280),
    (9, 280),
    (0, 1),
    (41, 840),
    (41, 840),
];

fn frac<R: Real>((n, d): (i64, i64)) -> R {
    R::from_i64(n) / R::from_i64(d)
}

/// Butcher tableau of the 13-stage Runge–Kutta–Fehlberg 7(8) method,
/// used as a fixed-step order-8 scheme. Coefficients are rational and are
/// evaluated in the working precision.
#[derive(Debug, Clone)]
pub struct Rk8<R> {
    c: [R; STAGES],
    a: Vec<Vec<(usize, R)>>,
    b: Vec<(usize, R)>,
}

impl<R: Real> Default for Rk8<R> {
    fn default() -> Self {
        Self::new()
    }
}

impl<R: Real> Rk8<R> {
    pub fn new() -> Self {
        let c = C.map(frac);
        let a = A
            .iter()
            .map(|row| row.iter().enumerate().filter(|(_, q)| q.0 != 0).map(|(j, &q)| (j, frac(q))).collect())
            .collect();
        let b = B.iter().enumerate().filter(|(_, q)| q.0 != 0).map(|(j, &q)| (j, frac(q))).collect();
        Self { c, a, b }
    }

    /// Stage nodes `c_i`.
    pub fn nodes(&self) -> &[R; STAGES] {
        &self.c
    }

    /// One step of size `h` for the autonomous system `s' = field(s)`.
    pub fn step<const D: usize, F>(&self, field: F, s: &[R; D], h: R) -> Result<[R; D]>
    where
        F: Fn(&[R; D]) -> Result<[R; D]>,
    {
        let mut k = [[R::zero(); D]; STAGES];
        for i in 0..STAGES {
            let mut y = *s;
            for &(j, aij) in &self.a[i] {
                let f = h * aij;
                for d in 0..D {
                    y[d] += f * k[j][d];
                }
            }
            k[i] = field(&y)?;
        }
        let mut out = *s;
        for &(j, bj) in &self.b {
            let f = h * bj;
            for d in 0..D {
                out[d] += f * k[j][d];
            }
        }
        Ok(out)
    }
}
