//! Execution strategy for the data-parallel loops (fusion tables, modular
//! data grids, exhaustive checks).
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] fans
//! the work out over the rayon pool. Without it, every strategy runs
//! sequentially. Results are always collected in index order, so output is
//! identical regardless of strategy or thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[default]
    Parallel,
    Sequential,
}

impl Execution {
    /// Whether this strategy will actually use more than one thread.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// `(0..n).map(f).collect()`, possibly in parallel, preserving order.
    pub fn map_range<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }

    /// Order-preserving map over a slice.
    pub fn map_slice<'a, S, T, F>(self, items: &'a [S], f: F) -> Vec<T>
    where
        S: Sync,
        T: Send,
        F: Fn(&'a S) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// True iff `pred` holds for every index in `0..n`.
    pub fn all_range<F>(self, n: usize, pred: F) -> bool
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            return (0..n).into_par_iter().all(pred);
        }
        (0..n).all(pred)
    }
}

/// Size caps for the table-building operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest level-k basis for which full tables are built.
    pub max_basis: usize,
    /// Largest Weyl group summed over in the S-matrix.
    pub max_weyl: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_basis: 2_000, max_weyl: 1_152 }
    }
}

impl Limits {
    pub(crate) fn check_basis(&self, n: usize) -> crate::Result<()> {
        if n > self.max_basis {
            return Err(crate::Error::ResourceCap {
                what: "level-k basis",
                requested: n as u128,
                limit: self.max_basis as u128,
            });
        }
        Ok(())
    }
}
