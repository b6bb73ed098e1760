//! Thread-pool executor for the core crate's partitioned work.

use fibcf_core::exec::Executor;
use rayon::prelude::*;

pub struct Pool(rayon::ThreadPool);

impl Pool {
    pub fn new(threads: usize) -> anyhow::Result<Self> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()?;
        Ok(Self(pool))
    }
}

impl Executor for Pool {
    fn map<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        self.0.install(|| items.into_par_iter().map(f).collect())
    }
}
