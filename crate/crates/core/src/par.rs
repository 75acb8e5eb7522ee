//! Execution policy for the data-parallel loops in this crate.
//!
//! With the `parallel` feature (on by default) `Exec::Parallel` dispatches to
//! rayon. Without it every loop runs sequentially and `Exec::Parallel` is
//! accepted but behaves like `Exec::Sequential`. Results never depend on the
//! policy: every parallel reduction here is over exact, order-insensitive
//! values or is sorted before it is returned.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when this policy will actually fan out to worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Maps `f` over `items`, preserving input order in the output.
pub fn map<T, R, F>(exec: Exec, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).collect();
    }
    let _ = exec;
    items.into_iter().map(f).collect()
}

/// Folds contiguous chunks of `0..len` with `fold` and merges the partial
/// results with `merge`. `merge` must be associative and commutative.
pub fn fold_range<A, I, F, M>(exec: Exec, len: u64, init: I, fold: F, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, u64) -> A + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && len >= 1024 {
        use rayon::prelude::*;
        const CHUNK: u64 = 512;
        let chunks = len.div_ceil(CHUNK);
        return (0..chunks)
            .into_par_iter()
            .map(|c| {
                let lo = c * CHUNK;
                let hi = (lo + CHUNK).min(len);
                (lo..hi).fold(init(), &fold)
            })
            .reduce(&init, &merge);
    }
    let _ = (exec, &merge);
    (0..len).fold(init(), fold)
}

/// Runs two closures, potentially in parallel.
pub fn join<A, B, RA, RB>(exec: Exec, a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return rayon::join(a, b);
    }
    let _ = exec;
    (a(), b())
}
