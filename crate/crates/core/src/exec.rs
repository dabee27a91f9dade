//! Execution strategy for the exhaustive searches.
//!
//! Searches are split over a range of outer parameters (usually the `m` of a
//! triple's generating pair). Each index is mapped independently and the
//! results are merged in index order, so the output never depends on the
//! strategy. Without the `parallel` feature, [`Exec::Parallel`] runs
//! sequentially.

use std::ops::RangeInclusive;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Map every index and concatenate the outputs in index order.
    pub fn flat_map<T, F>(self, range: RangeInclusive<u64>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> Vec<T> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                let chunks: Vec<Vec<T>> = range.into_par_iter().map(f).collect();
                chunks.into_iter().flatten().collect()
            }
            _ => range.flat_map(f).collect(),
        }
    }

    /// Map every index and fold the results with an associative `reduce`.
    pub fn map_reduce<R, F, I, G>(self, range: RangeInclusive<u64>, map: F, identity: I, reduce: G) -> R
    where
        R: Send,
        F: Fn(u64) -> R + Sync + Send,
        I: Fn() -> R + Sync + Send,
        G: Fn(R, R) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range.into_par_iter().map(map).reduce(identity, reduce),
            _ => range.map(map).fold(identity(), reduce),
        }
    }
}
