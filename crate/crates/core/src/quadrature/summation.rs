//! Deterministic compensated summation.
//!
//! Terms are grouped into fixed chunks of [`CHUNK_LEN`] indices, each chunk is
//! accumulated with Neumaier's variant of Kahan summation, and the chunk
//! totals are combined pairwise in index order. The grouping never depends on
//! how many worker threads rayon happens to use.

use rayon::prelude::*;

pub const CHUNK_LEN: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, Default)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        n => pairwise_sum(&values[..n / 2]) + pairwise_sum(&values[n / 2..]),
    }
}

/// `sum_{i < count} term(i)`, bit-identical for any thread count.
pub fn chunked_sum<F>(count: u64, term: F) -> f64
where
    F: Fn(u64) -> f64 + Sync,
{
    let chunks = count.div_ceil(CHUNK_LEN);
    let partials: Vec<f64> = (0..chunks)
        .into_par_iter()
        .map(|j| {
            let start = j * CHUNK_LEN;
            let end = (start + CHUNK_LEN).min(count);
            let mut acc = NeumaierSum::default();
            for i in start..end {
                acc.add(term(i));
            }
            acc.value()
        })
        .collect();
    pairwise_sum(&partials)
}
