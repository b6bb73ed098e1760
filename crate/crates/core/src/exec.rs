//! Executors for partitioned work.
//!
//! Searches and tables split their work into independent items and hand
//! them to an [`Executor`]. Results always come back in item order, so the
//! output of every computation is independent of how the items were run.

use alloc::vec::Vec;

pub trait Executor: Sync {
    /// Apply `f` to every item; the output preserves the input order.
    fn map<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send;
}

/// Runs everything on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn map<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        items.into_iter().map(f).collect()
    }
}
