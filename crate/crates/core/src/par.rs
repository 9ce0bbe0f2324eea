//! Index-range data parallelism with a sequential fallback.
//!
//! Every sweep in the crate is phrased as work over `0..len`. With the
//! `parallel` feature the ranges are split across the rayon pool; without it
//! (or with [`Exec::Sequential`]) they run in a plain loop. Results are
//! combined in index order either way, so output never depends on the
//! worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Uses the rayon pool when the `parallel` feature is on, otherwise
    /// behaves like `Sequential`.
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
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Folds every index of `0..len` into an accumulator, then merges the
/// accumulators of adjacent chunks left to right.
pub fn fold<T, Id, F, R>(exec: Exec, len: usize, identity: Id, fold_op: F, reduce_op: R) -> T
where
    T: Send,
    Id: Fn() -> T + Sync + Send,
    F: Fn(T, usize) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len)
            .into_par_iter()
            .fold(&identity, &fold_op)
            .reduce(&identity, &reduce_op);
    }
    let _ = (exec, &reduce_op);
    (0..len).fold(identity(), fold_op)
}

/// `f(i)` for every index, in index order.
pub fn map<T, F>(exec: Exec, len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..len).map(f).collect()
}

/// The `Some` result with the lowest index.
pub fn find_first<T, F>(exec: Exec, len: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len).into_par_iter().find_map_first(f);
    }
    let _ = exec;
    (0..len).find_map(f)
}

/// Caps the global worker pool. Must run before any parallel work; later
/// calls are ignored. A no-op without the `parallel` feature.
pub fn configure_threads(threads: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
}
