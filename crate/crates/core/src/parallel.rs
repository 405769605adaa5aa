//! Deterministic fan-out over index ranges.
//!
//! Work is always cut into the same fixed-size chunks regardless of the
//! worker count, and per-chunk results come back in chunk order. Callers
//! reduce those results sequentially, so the floating-point outcome does not
//! depend on how many threads ran.

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

/// Items per chunk for reductions over the prefix tree.
pub const CHUNK: usize = 1 << 12;

#[derive(Debug)]
pub struct Executor {
    pool: Option<ThreadPool>,
}

impl Executor {
    /// `threads <= 1` selects the sequential reference mode.
    pub fn new(threads: usize) -> Self {
        let pool = (threads > 1).then(|| {
            ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("failed to build worker pool")
        });
        Self { pool }
    }

    pub fn sequential() -> Self {
        Self { pool: None }
    }

    pub fn threads(&self) -> usize {
        self.pool.as_ref().map_or(1, ThreadPool::current_num_threads)
    }

    /// Applies `f` to every chunk `[start, end)` of `0..len`, returning results in order.
    pub fn map_chunks<T, F>(&self, len: usize, chunk: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize, usize) -> T + Sync + Send,
    {
        let chunk = chunk.max(1);
        let count = len.div_ceil(chunk);
        let bounds = |i: usize| (i * chunk, ((i + 1) * chunk).min(len));
        match &self.pool {
            None => (0..count)
                .map(|i| {
                    let (s, e) = bounds(i);
                    f(s, e)
                })
                .collect(),
            Some(pool) => pool.install(|| {
                (0..count)
                    .into_par_iter()
                    .map(|i| {
                        let (s, e) = bounds(i);
                        f(s, e)
                    })
                    .collect()
            }),
        }
    }

    /// Fills `out[2i]` and `out[2i + 1]` from `input[i]`.
    pub fn fill_pairs<A, B, F>(&self, input: &[A], out: &mut [B], f: F)
    where
        A: Sync,
        B: Send,
        F: Fn(&A, &mut [B]) + Sync + Send,
    {
        debug_assert_eq!(out.len(), 2 * input.len());
        match &self.pool {
            None => out
                .chunks_mut(2)
                .zip(input)
                .for_each(|(pair, item)| f(item, pair)),
            Some(pool) => pool.install(|| {
                out.par_chunks_mut(2)
                    .zip(input.par_iter())
                    .for_each(|(pair, item)| f(item, pair))
            }),
        }
    }
}

impl Default for Executor {
    fn default() -> Self {
        Self::sequential()
    }
}

/// Worker count reported by the OS, falling back to one.
pub fn available_threads() -> usize {
    std::thread::available_parallelism().map_or(1, usize::from)
}
