//! Map-reduce over independent work items, on rayon when the `parallel`
//! feature is enabled and on the calling thread otherwise.

/// How a sweep distributes its work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    Sequential,
    /// Runs on the current rayon pool. Falls back to [`Strategy::Sequential`]
    /// when built without the `parallel` feature.
    #[default]
    Parallel,
}

impl Strategy {
    /// Whether this strategy actually fans out in the current build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Strategy::Parallel
    }
}

/// Maps every item and folds the results with an associative `reduce`.
/// `reduce` must not depend on the order in which partial results meet.
pub(crate) fn map_reduce<I, T, M, R>(
    strategy: Strategy,
    items: Vec<I>,
    identity: fn() -> T,
    map: M,
    reduce: R,
) -> T
where
    I: Send,
    T: Send,
    M: Fn(I) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy == Strategy::Parallel {
        use rayon::prelude::*;
        return items.into_par_iter().map(map).reduce(identity, reduce);
    }
    let _ = strategy;
    items.into_iter().map(map).fold(identity(), reduce)
}
