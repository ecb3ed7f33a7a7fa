use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::numerics::Real;

use super::embedding::DelayEmbedding;

/// Largest residual `|Δ̄*_m − Δ̄*_n|` accepted along a continuation edge.
pub const RESIDUAL_CAP: f64 = 0.25;

const INITIAL_NEIGHBOURS: usize = 8;
const MAX_NEIGHBOURS: usize = 128;

/// Lifted increments `Δ̄*_n = Δ_n + k_n`.
#[derive(Debug, Clone)]
pub struct LiftedAngleSeries<R> {
    pub delta_star: Vec<R>,
    pub branch: Vec<i64>,
    pub max_residual: f64,
}

#[derive(Debug, Clone, Copy)]
struct Edge {
    dist: f64,
    to: usize,
    from: usize,
}

impl PartialEq for Edge {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}

impl Eq for Edge {}

impl PartialOrd for Edge {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Edge {
    fn cmp(&self, o: &Self) -> Ordering {
        self.dist.total_cmp(&o.dist).then(self.to.cmp(&o.to)).then(self.from.cmp(&o.from))
    }
}

/// Extends the lift from `Δ̄*_0 = Δ_0` to every embedded point by always
/// crossing the shortest edge between a defined and an undefined point.
///
/// Edges come from the symmetric `k`-nearest-neighbour graph of the
/// embedding; `k` is doubled until the graph is connected.
pub fn continue_lift<R: Real>(deltas: &[R], emb: &DelayEmbedding) -> Result<LiftedAngleSeries<R>> {
    let m = emb.len();
    if deltas.len() != m {
        return Err(Error::Contract(format!("{} increments for an embedding of {} points", deltas.len(), m)));
    }
    if m == 0 {
        return Err(Error::Contract("empty embedding".into()));
    }
    let mut k = INITIAL_NEIGHBOURS;
    loop {
        let graph = symmetric_graph(emb, k.min(m - 1));
        match grow(deltas, &graph)? {
            Some(series) => return Ok(series),
            None if k < MAX_NEIGHBOURS && k < m - 1 => k *= 2,
            None => {
                let reached = grow_count(&graph);
                return Err(Error::DisconnectedEmbedding { defined: reached, total: m });
            }
        }
    }
}

fn symmetric_graph(emb: &DelayEmbedding, k: usize) -> Vec<Vec<(f64, usize)>> {
    let mut g = emb.nearest_neighbours(k);
    let extra: Vec<(usize, f64, usize)> =
        g.iter().enumerate().flat_map(|(i, v)| v.iter().map(move |&(d, j)| (j, d, i))).collect();
    for (j, d, i) in extra {
        g[j].push((d, i));
    }
    for v in &mut g {
        v.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        v.dedup_by(|a, b| a.1 == b.1);
    }
    g
}

fn grow<R: Real>(deltas: &[R], graph: &[Vec<(f64, usize)>]) -> Result<Option<LiftedAngleSeries<R>>> {
    let m = deltas.len();
    let mut defined = vec![false; m];
    let mut star = vec![R::zero(); m];
    let mut branch = vec![0i64; m];
    let mut heap = BinaryHeap::new();
    let mut max_residual = 0.0f64;
    let mut count = 1;
    defined[0] = true;
    star[0] = deltas[0];
    for &(dist, to) in &graph[0] {
        heap.push(Reverse(Edge { dist, to, from: 0 }));
    }
    while let Some(Reverse(e)) = heap.pop() {
        if defined[e.to] {
            continue;
        }
        let kf = (star[e.from] - deltas[e.to]).round();
        let value = deltas[e.to] + kf;
        let residual = (value - star[e.from]).abs().to_f64();
        if residual >= RESIDUAL_CAP {
            return Err(Error::ContinuationGap { index: e.to, residual });
        }
        max_residual = max_residual.max(residual);
        defined[e.to] = true;
        star[e.to] = value;
        branch[e.to] = kf.to_f64() as i64;
        count += 1;
        for &(dist, to) in &graph[e.to] {
            if !defined[to] {
                heap.push(Reverse(Edge { dist, to, from: e.to }));
            }
        }
    }
    if count < m {
        return Ok(None);
    }
    Ok(Some(LiftedAngleSeries { delta_star: star, branch, max_residual }))
}

fn grow_count(graph: &[Vec<(f64, usize)>]) -> usize {
    let mut seen = vec![false; graph.len()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut n = 1;
    while let Some(i) = stack.pop() {
        for &(_, j) in &graph[i] {
            if !seen[j] {
                seen[j] = true;
                n += 1;
                stack.push(j);
            }
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::golden;
    use crate::rotation::embedding::delay_embed;
    use crate::systems::CurveSpec;

    #[test]
    fn constant_increments_need_no_branch_change() {
        let t = CurveSpec::<f64>::pure_circle(golden()).trajectory(200);
        let emb = delay_embed(&t, 2).unwrap();
        let d = vec![0.3; emb.len()];
        let l = continue_lift(&d, &emb).unwrap();
        assert!(l.branch.iter().all(|&k| k == 0));
        assert!(l.delta_star.iter().all(|&x| x == 0.3));
        assert_eq!(l.max_residual, 0.0);
    }

    #[test]
    fn wrapped_values_are_lifted_across_the_cut() {
        let t = CurveSpec::<f64>::pure_circle(golden()).trajectory(300);
        let emb = delay_embed(&t, 2).unwrap();
        // a smooth lift that crosses 1 gets wrapped back into [0, 1)
        let truth: Vec<f64> = (0..emb.len()).map(|n| 0.95 + 0.1 * (emb.point(n)[0])).collect();
        let wrapped: Vec<f64> = truth.iter().map(|x| x.rem_euclid(1.0)).collect();
        let l = continue_lift(&wrapped, &emb).unwrap();
        let off = l.delta_star[0] - truth[0];
        for (a, b) in l.delta_star.iter().zip(&truth) {
            assert!((a - b - off).abs() < 1e-12);
        }
        assert!(l.max_residual < 0.1);
    }

    #[test]
    fn discontinuous_data_is_rejected() {
        let t = CurveSpec::<f64>::pure_circle(golden()).trajectory(300);
        let emb = delay_embed(&t, 2).unwrap();
        let d: Vec<f64> = (0..emb.len()).map(|n| if emb.point(n)[1] > 0.0 { 0.0 } else { 0.5 }).collect();
        assert!(matches!(continue_lift(&d, &emb), Err(Error::ContinuationGap { .. })));
    }
}
