//! Execution policy for basis-column loops.
//!
//! With the `parallel` feature the work is spread over the rayon pool; without
//! it `Exec::Parallel` silently runs sequentially.

/// How independent basis columns are evaluated.
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

/// The first `i` in `0..n` (lowest index) for which `f` returns `Some`.
pub(crate) fn find_first<T, F>(exec: Exec, n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().find_map_first(f)
        }
        _ => (0..n).find_map(f),
    }
}

/// `f(0), ..., f(n-1)` in order.
pub(crate) fn map_range<T, F>(exec: Exec, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
        _ => (0..n).map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn find_first_is_lowest_index_in_both_modes() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            let hit = find_first(exec, 10_000, |i| (i % 997 == 996).then_some(i));
            assert_eq!(hit, Some(996));
        }
    }

    #[test]
    fn map_range_preserves_order() {
        let a = map_range(Exec::Parallel, 100, |i| i * i);
        let b = map_range(Exec::Sequential, 100, |i| i * i);
        assert_eq!(a, b);
    }
}
