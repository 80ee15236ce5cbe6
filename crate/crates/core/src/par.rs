//! Data-parallel helpers. With the `parallel` feature off, [`Exec::Parallel`]
//! runs sequentially, so callers never need to branch on the feature.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How to run an embarrassingly parallel loop. Results are always returned
/// in input order, so output does not depend on the choice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    pub fn map_range<U, F>(self, range: std::ops::Range<u64>, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(u64) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range.into_par_iter().map(f).collect(),
            _ => range.map(f).collect(),
        }
    }

    /// Splits `range` into chunks, folds each with `fold` and returns the
    /// per-chunk results in order.
    pub fn fold_chunks<A, F>(self, range: std::ops::Range<u64>, chunk: u64, fold: F) -> Vec<A>
    where
        A: Send,
        F: Fn(std::ops::Range<u64>) -> A + Sync + Send,
    {
        let chunk = chunk.max(1);
        let starts = (range.end.saturating_sub(range.start)).div_ceil(chunk);
        self.map_range(0..starts, |c| {
            let lo = range.start + c * chunk;
            fold(lo..(lo + chunk).min(range.end))
        })
    }
}
