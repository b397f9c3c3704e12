//! Execution strategy for the data-parallel loops (codeword enumeration,
//! parameter sweeps).
//!
//! With the `parallel` feature the work is spread over the rayon pool;
//! without it, [`Exec::Parallel`] silently runs sequentially. Results never
//! depend on the schedule: reductions are applied in index order.

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
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Maps `0..tasks` and folds the results with `reduce`, in index order.
    pub fn map_reduce<T, M, R>(self, tasks: usize, identity: T, map: M, reduce: R) -> T
    where
        T: Send + Sync + Clone,
        M: Fn(usize) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return (0..tasks)
                .into_par_iter()
                .map(&map)
                .reduce(|| identity.clone(), &reduce);
        }
        (0..tasks).map(map).fold(identity, reduce)
    }

    /// Order-preserving map over a slice.
    pub fn map_collect<I, T, F>(self, items: &[I], f: F) -> Vec<T>
    where
        I: Sync,
        T: Send,
        F: Fn(&I) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            let total = exec.map_reduce(1000, 0u64, |i| i as u64, |a, b| a + b);
            assert_eq!(total, 999 * 1000 / 2);
            let squares = exec.map_collect(&[1u32, 2, 3], |x| x * x);
            assert_eq!(squares, vec![1, 4, 9]);
        }
    }

    #[test]
    fn reduction_is_in_index_order() {
        let concat = Exec::Parallel.map_reduce(
            200,
            Vec::new(),
            |i| vec![i],
            |mut a, b| {
                a.extend(b);
                a
            },
        );
        assert_eq!(concat, (0..200).collect::<Vec<_>>());
    }
}
