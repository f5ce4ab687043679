//! Data-parallel loops with a sequential fallback.
//!
//! With the `parallel` feature the `Parallel` strategy runs on the rayon
//! global pool; without it every strategy runs sequentially. Callers sort
//! their results, so output never depends on the strategy.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    Sequential,
    #[default]
    Parallel,
}

pub(crate) fn filter_map_range<T, F>(len: u64, strategy: Strategy, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            (0..len).into_par_iter().filter_map(f).collect()
        }
        _ => (0..len).filter_map(f).collect(),
    }
}

pub(crate) fn flat_map_slice<S, T, F>(items: &[S], strategy: Strategy, f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(usize, &S) -> Vec<T> + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            items
                .par_iter()
                .enumerate()
                .flat_map_iter(|(i, s)| f(i, s))
                .collect()
        }
        _ => items
            .iter()
            .enumerate()
            .flat_map(|(i, s)| f(i, s))
            .collect(),
    }
}
