//! The data-parallel switch. Verification suites, trace pairings, and batch
//! element construction all funnel their independent work items through
//! [`map_collect`], which fans out across threads when the `parallel`
//! feature (on by default) is enabled and degrades to a plain sequential
//! map without it. Output order always matches input order, so results are
//! identical either way.

#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Send + Sync,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Send + Sync,
{
    items.into_iter().map(f).collect()
}
