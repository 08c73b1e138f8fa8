//! Execution strategy for the data-parallel loops (table cells, identity
//! sweeps, contingency-matrix enumeration) plus the shared memo table.
//!
//! With the `parallel` feature the work is spread over rayon's pool; without
//! it every strategy runs sequentially. Results are identical either way
//! because each cell is a pure function and reductions are exact sums.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::RwLock;

/// How to run an embarrassingly parallel loop.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// `Parallel` only when compiled with the `parallel` feature.
    pub fn effective(self) -> Execution {
        if cfg!(feature = "parallel") {
            self
        } else {
            Execution::Sequential
        }
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec.effective() {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// Maps and folds with an associative `combine`; `identity` must be neutral.
pub fn map_reduce<T, R, F, C, I>(exec: Execution, items: &[T], f: F, identity: I, combine: C) -> R
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
    C: Fn(R, R) -> R + Sync + Send,
    I: Fn() -> R + Sync + Send,
{
    match exec.effective() {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).reduce(identity, combine)
        }
        _ => items.iter().map(f).fold(identity(), combine),
    }
}

/// Runs `f` on a pool of `jobs` threads (or the global pool when `None`).
pub fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if let Some(j) = jobs {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build() {
            return pool.install(f);
        }
    }
    let _ = jobs;
    f()
}

/// Write-once associative cache shared between threads.
///
/// Two threads racing on the same key may both compute the value; the first
/// insert wins and both see the same stored result.
pub struct Memo<K, V> {
    map: RwLock<HashMap<K, V>>,
}

impl<K: Eq + Hash, V: Clone> Memo<K, V> {
    pub fn new() -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
        }
    }

    pub fn get(&self, k: &K) -> Option<V> {
        self.map.read().unwrap().get(k).cloned()
    }

    pub fn insert(&self, k: K, v: V) -> V {
        self.map.write().unwrap().entry(k).or_insert(v).clone()
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl<K: Eq + Hash, V: Clone> Default for Memo<K, V> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = map(Execution::Sequential, &xs, |x| x * x);
        let b = map(Execution::Parallel, &xs, |x| x * x);
        assert_eq!(a, b);
        let s1 = map_reduce(Execution::Sequential, &xs, |x| *x, || 0, |a, b| a + b);
        let s2 = map_reduce(Execution::Parallel, &xs, |x| *x, || 0, |a, b| a + b);
        assert_eq!(s1, s2);
        assert_eq!(with_jobs(Some(2), || s1), 499500);
    }

    #[test]
    fn memo_first_insert_wins() {
        let m: Memo<u32, u32> = Memo::new();
        assert_eq!(m.insert(1, 10), 10);
        assert_eq!(m.insert(1, 20), 10);
        assert_eq!(m.get(&1), Some(10));
        assert_eq!(m.get(&2), None);
    }
}
