//! Batch execution strategy. `Parallel` uses rayon when the `parallel`
//! feature is on and degrades to a plain loop otherwise.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
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
    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Maps `f` over `0..n`, preserving order.
    pub fn map_range<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().map(f).collect(),
            _ => (0..n).map(f).collect(),
        }
    }

    /// Folds `0..n` in chunks of `chunk` with `fold`, then merges the chunk
    /// results left to right with `merge`.
    pub fn fold_chunks<A, F, M>(self, n: u64, chunk: u64, fold: F, merge: M) -> Option<A>
    where
        A: Send,
        F: Fn(std::ops::Range<u64>) -> A + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        let chunk = chunk.max(1);
        let pieces = n.div_ceil(chunk) as usize;
        let parts = self.map_range(pieces, |i| {
            let lo = i as u64 * chunk;
            fold(lo..(lo + chunk).min(n))
        });
        parts.into_iter().reduce(merge)
    }
}
