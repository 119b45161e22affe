//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] runs on the
//! rayon pool; without it every call degrades to the sequential path. Results
//! are always returned in input order so callers stay deterministic.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
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
    /// Maps `0..len` in order.
    pub fn map_range<R, F>(self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                (0..len).into_par_iter().map(f).collect()
            }
            _ => (0..len).map(f).collect(),
        }
    }

    pub fn map_slice<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    /// Smallest index in `0..len` for which `f` returns `Some`, with its value.
    pub fn find_first<R, F>(self, len: usize, f: F) -> Option<(usize, R)>
    where
        R: Send,
        F: Fn(usize) -> Option<R> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                (0..len).into_par_iter().filter_map(|i| f(i).map(|r| (i, r))).find_first(|_| true)
            }
            _ => (0..len).find_map(|i| f(i).map(|r| (i, r))),
        }
    }
}
