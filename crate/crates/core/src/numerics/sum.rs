use super::real::Real;

const BLOCK: usize = 32;

/// Streaming cascade (pairwise) summation.
///
/// Values are summed sequentially in blocks of 32; finished blocks are merged
/// like a binary counter. Rounding error grows with `log2(N)` instead of `N`,
/// and the result is identical whether values are pushed one by one or summed
/// from a slice with [`pairwise_sum`].
#[derive(Debug, Clone)]
pub struct Accumulator<R> {
    block: R,
    in_block: usize,
    stack: Vec<(u32, R)>,
}

impl<R: Real> Default for Accumulator<R> {
    fn default() -> Self {
        Self::new()
    }
}

impl<R: Real> Accumulator<R> {
    pub fn new() -> Self {
        Self { block: R::zero(), in_block: 0, stack: Vec::with_capacity(40) }
    }

    #[inline]
    pub fn push(&mut self, x: R) {
        self.block += x;
        self.in_block += 1;
        if self.in_block == BLOCK {
            self.flush_block();
        }
    }

    fn flush_block(&mut self) {
        let mut level = 0u32;
        let mut value = self.block;
        while let Some(&(l, v)) = self.stack.last() {
            if l != level {
                break;
            }
            self.stack.pop();
            value = v + value;
            level += 1;
        }
        self.stack.push((level, value));
        self.block = R::zero();
        self.in_block = 0;
    }

    pub fn total(&self) -> R {
        let mut acc = self.block;
        for &(_, v) in self.stack.iter().rev() {
            acc = v + acc;
        }
        acc
    }
}

pub fn pairwise_sum<R: Real>(values: &[R]) -> R {
    let mut acc = Accumulator::new();
    for &v in values {
        acc.push(v);
    }
    acc.total()
}
