//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] fans
//! work out over rayon's global pool. Without it, both variants run
//! sequentially and produce identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// `(0..n).map(f).collect()`, in index order regardless of execution mode.
pub fn map_indices<T, F>(n: usize, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..n).into_par_iter().map(f).collect(),
        _ => (0..n).map(f).collect(),
    }
}

/// Maps every item of a slice, preserving order.
pub fn map_slice<S, T, F>(items: &[S], exec: Execution, f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

/// Maximum of `f` over `0..n`, or `None` for an empty range.
pub fn max_over<T, F>(n: usize, exec: Execution, f: F) -> Option<T>
where
    T: Ord + Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..n).into_par_iter().map(f).max(),
        _ => (0..n).map(f).max(),
    }
}

/// Smallest index in `0..n` for which `f` yields `Some`, with its payload.
pub fn find_first<T, F>(n: usize, exec: Execution, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..n).into_par_iter().find_map_first(f),
        _ => (0..n).find_map(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        for exec in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(map_indices(5, exec, |i| i * i), vec![0, 1, 4, 9, 16]);
            assert_eq!(max_over(10, exec, |i| (i * 7) % 10), Some(9));
            assert_eq!(max_over::<usize, _>(0, exec, |i| i), None);
            assert_eq!(
                find_first(100, exec, |i| (i % 13 == 12).then_some(i)),
                Some(12)
            );
            assert_eq!(map_slice(&[1, 2, 3], exec, |x| x + 1), vec![2, 3, 4]);
        }
    }
}
