//! Execution strategy for independent tasks.
//!
//! Every parallel computation in the crate is phrased as "run tasks
//! `0..count` and hand back their results in task order". Merging always
//! happens on the ordered result vector, so any scheduler produces the same
//! answer as [`Sequential`].

use alloc::vec::Vec;

pub trait Scheduler: Sync {
    /// Run `task(i)` for every `i` in `0..count`; results are in index order.
    fn run<T, F>(&self, count: usize, task: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send;

    /// Hint for how many chunks a single stream should be split into.
    fn parallelism(&self) -> usize {
        1
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl Scheduler for Sequential {
    fn run<T, F>(&self, count: usize, task: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        (0..count).map(task).collect()
    }
}
