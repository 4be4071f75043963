//! Order-preserving data-parallel building blocks, with a sequential twin
//! for every operation.
//!
//! The crate's heavy work — assembling discretized potentials, solving
//! batches of independent radial problems, sweeping flux values — is
//! embarrassingly parallel, so it is routed through these three helpers.
//! With the `parallel` feature (on by default) they dispatch to rayon; when
//! it is disabled the same names compile to plain sequential loops, so
//! downstream code never changes.  The `_seq` twins are *always* compiled,
//! giving benchmarks a fixed baseline to compare against within a single
//! build.
//!
//! Every helper preserves input order and performs the same floating-point
//! operations per element in both modes, so results are bit-identical with
//! the feature on or off.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over owned items, preserving order.
#[cfg(feature = "parallel")]
pub fn map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Send + Sync,
{
    items.into_par_iter().map(f).collect()
}

/// Map `f` over owned items, preserving order.
#[cfg(not(feature = "parallel"))]
pub fn map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Send + Sync,
{
    items.into_iter().map(f).collect()
}

/// Sequential twin of [`map_vec`]; identical semantics, never parallel.
pub fn map_vec_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Map `f` over the index range `0..n`, preserving order (the grid-assembly
/// primitive).
#[cfg(feature = "parallel")]
pub fn map_indices<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Send + Sync,
{
    (0..n).into_par_iter().map(f).collect()
}

/// Map `f` over the index range `0..n`, preserving order (the grid-assembly
/// primitive).
#[cfg(not(feature = "parallel"))]
pub fn map_indices<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Send + Sync,
{
    (0..n).map(f).collect()
}

/// Sequential twin of [`map_indices`].
pub fn map_indices_seq<U, F>(n: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..n).map(f).collect()
}

/// Run two closures, possibly in parallel, returning both results (used for
/// the coarse/fine grid pair of a Richardson refinement).
#[cfg(feature = "parallel")]
pub fn join<A, B, RA, RB>(a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    rayon::join(a, b)
}

/// Run two closures, possibly in parallel, returning both results (used for
/// the coarse/fine grid pair of a Richardson refinement).
#[cfg(not(feature = "parallel"))]
pub fn join<A, B, RA, RB>(a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    (a(), b())
}
