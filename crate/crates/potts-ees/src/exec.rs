//! Serial/parallel execution helpers.
//!
//! All data-parallel loops in the crate go through [`map_range`]. With the
//! `parallel` feature (default) it fans out over the rayon global pool;
//! without it, or when [`ExecMode::Serial`] is requested explicitly, it runs
//! a plain sequential loop. Both paths produce identical, ordered results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution strategy for builders and experiment batches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Serial,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for ExecMode {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        ExecMode::Parallel
    }
    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        ExecMode::Serial
    }
}

/// Maps `f` over `0..n`, preserving index order in the output.
pub fn map_range<T, F>(mode: ExecMode, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    match mode {
        ExecMode::Serial => (0..n).map(f).collect(),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => (0..n).into_par_iter().map(f).collect(),
    }
}

/// Configures the rayon global thread pool to use `threads` workers.
///
/// Must be called before any parallel work; later calls are ignored (the
/// global pool can only be built once). No-op without the `parallel` feature.
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_range_preserves_order() {
        let out = map_range(ExecMode::Serial, 5, |i| i * i);
        assert_eq!(out, vec![0, 1, 4, 9, 16]);
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_serial() {
        let a = map_range(ExecMode::Serial, 1000, |i| (i as f64).sqrt());
        let b = map_range(ExecMode::Parallel, 1000, |i| (i as f64).sqrt());
        assert_eq!(a, b);
    }
}
