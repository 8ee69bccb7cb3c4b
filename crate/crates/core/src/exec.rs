//! Data-parallel helpers for the enumeration loops.
//!
//! With the `parallel` feature (default) [`Execution::Parallel`] runs on the
//! rayon global pool; without it every strategy runs sequentially. Results
//! keep input order either way, so callers stay deterministic.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How enumeration-heavy operations schedule their inner loops.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Masks in `0..count` accepted by `keep`, in increasing order.
pub(crate) fn filter_masks<F>(count: u64, exec: Execution, keep: F) -> Vec<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..count).into_par_iter().filter(|&m| keep(m)).collect();
    }
    let _ = exec;
    (0..count).filter(|&m| keep(m)).collect()
}

/// `f` applied to every item, in order.
pub(crate) fn map_vec<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// `f` applied to every mask in `0..count`, in order.
pub(crate) fn map_masks<R, F>(count: u64, exec: Execution, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..count).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..count).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let keep = |m: u64| m.count_ones() == 2;
        assert_eq!(
            filter_masks(256, Execution::Sequential, keep),
            filter_masks(256, Execution::Parallel, keep)
        );
        let items: Vec<u32> = (0..100).collect();
        assert_eq!(
            map_vec(&items, Execution::Sequential, |x| x * 3),
            map_vec(&items, Execution::Parallel, |x| x * 3)
        );
        assert_eq!(
            map_masks(64, Execution::Sequential, |m| m ^ 5),
            map_masks(64, Execution::Parallel, |m| m ^ 5)
        );
    }
}
