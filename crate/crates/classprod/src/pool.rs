//! Thread-pool scheduler.

use classprod_core::Scheduler;
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

/// Runs tasks on a dedicated rayon pool. Results come back in task order,
/// so every computation gives the same answer as `Sequential`.
pub struct Pool {
    pool: ThreadPool,
}

impl Pool {
    /// A pool with `jobs` threads; 0 means one per available core.
    pub fn new(jobs: usize) -> Pool {
        let pool = ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
        Pool { pool }
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl Scheduler for Pool {
    fn run<T, F>(&self, count: usize, task: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        if self.threads() == 1 {
            return (0..count).map(task).collect();
        }
        self.pool.install(|| (0..count).into_par_iter().map(task).collect())
    }

    fn parallelism(&self) -> usize {
        self.threads()
    }
}
