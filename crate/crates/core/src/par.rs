//! Data-parallel helpers. With the `parallel` feature the work is spread over
//! the rayon pool; without it the same shards run in order on one thread.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Splits `0..total` into `shards` contiguous ranges.
pub(crate) fn shard_ranges(total: u64, shards: usize) -> Vec<Range<u64>> {
    let shards = (shards.max(1) as u64).min(total.max(1));
    let base = total / shards;
    let extra = total % shards;
    let mut out = Vec::with_capacity(shards as usize);
    let mut start = 0;
    for i in 0..shards {
        let len = base + u64::from(i < extra);
        out.push(start..start + len);
        start += len;
    }
    out
}

/// Maps every shard and folds the results with `reduce`.
///
/// `reduce` must be associative and commutative for the result to be
/// independent of scheduling; callers use it for integer histograms.
pub(crate) fn map_reduce_shards<H, M, R>(total: u64, shards: usize, parallel: bool, map: M, reduce: R) -> H
where
    H: Send + Default,
    M: Fn(Range<u64>) -> H + Sync + Send,
    R: Fn(H, H) -> H + Sync + Send,
{
    let ranges = shard_ranges(total, shards);
    #[cfg(feature = "parallel")]
    {
        if parallel {
            return ranges.into_par_iter().map(&map).reduce(H::default, &reduce);
        }
    }
    let _ = parallel;
    ranges.into_iter().map(map).fold(H::default(), reduce)
}

/// Runs independent jobs, concurrently when allowed.
pub(crate) fn map_jobs<T, U, F>(items: Vec<T>, parallel: bool, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel {
            return items.into_par_iter().map(f).collect();
        }
    }
    let _ = parallel;
    items.into_iter().map(f).collect()
}

/// Default shard count: one per available worker.
pub(crate) fn default_shards() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads().max(1)
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}
