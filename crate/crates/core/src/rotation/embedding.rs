use kiddo::{ImmutableKdTree, SquaredEuclidean};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::Real;
use crate::trajectory::Trajectory;

/// Largest supported delay `K`; the neighbour index is compiled per
/// dimension `2K`.
pub const MAX_DELAY: usize = 8;

/// Delay coordinates `Γ_n = (γ_n, γ_{n+1}, ..., γ_{n+K-1}) ∈ R^{2K}`.
///
/// Coordinates are kept in `f64`: they only steer the neighbour search,
/// never the arithmetic of the lift itself.
#[derive(Debug, Clone)]
pub struct DelayEmbedding {
    k: usize,
    coords: Vec<f64>,
}

impl DelayEmbedding {
    pub fn delay(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        2 * self.k
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, n: usize) -> &[f64] {
        let d = self.dim();
        &self.coords[n * d..(n + 1) * d]
    }

    pub fn distance(&self, a: usize, b: usize) -> f64 {
        self.point(a).iter().zip(self.point(b)).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
    }

    /// For every point, its `k` nearest other points as `(distance, index)`
    /// sorted by distance then index.
    pub fn nearest_neighbours(&self, k: usize) -> Vec<Vec<(f64, usize)>> {
        match self.dim() {
            4 => knn::<4>(self, k),
            6 => knn::<6>(self, k),
            8 => knn::<8>(self, k),
            10 => knn::<10>(self, k),
            12 => knn::<12>(self, k),
            14 => knn::<14>(self, k),
            16 => knn::<16>(self, k),
            d => unreachable!("embedding dimension {d} is rejected at construction"),
        }
    }
}

fn knn<const D: usize>(emb: &DelayEmbedding, k: usize) -> Vec<Vec<(f64, usize)>> {
    let pts: Vec<[f64; D]> = (0..emb.len()).map(|n| emb.point(n).try_into().unwrap()).collect();
    let tree: ImmutableKdTree<f64, D> = ImmutableKdTree::new_from_slice(&pts);
    let qty = (k + 1).min(pts.len());
    pts.par_iter()
        .enumerate()
        .map(|(i, q)| {
            let mut v: Vec<(f64, usize)> = tree
                .nearest_n::<SquaredEuclidean>(q, qty)
                .into_iter()
                .map(|nn| (nn.distance.sqrt(), nn.item as usize))
                .filter(|&(_, j)| j != i)
                .collect();
            v.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
            v.truncate(k);
            v
        })
        .collect()
}

/// Builds the delay embedding with `K` consecutive points per vector.
pub fn delay_embed<R: Real>(traj: &Trajectory<R>, k: usize) -> Result<DelayEmbedding> {
    if !(2..=MAX_DELAY).contains(&k) {
        return Err(Error::Contract(format!("delay K = {k} must lie in 2..={MAX_DELAY}")));
    }
    let n = traj.len();
    if k >= n {
        return Err(Error::Contract(format!("delay K = {k} needs more than {n} trajectory points")));
    }
    let pts: Vec<(f64, f64)> = traj.points.iter().map(|p| (p.re.to_f64(), p.im.to_f64())).collect();
    let m = n - k + 1;
    let mut coords = Vec::with_capacity(m * 2 * k);
    for i in 0..m {
        for p in &pts[i..i + k] {
            coords.push(p.0);
            coords.push(p.1);
        }
    }
    Ok(DelayEmbedding { k, coords })
}
