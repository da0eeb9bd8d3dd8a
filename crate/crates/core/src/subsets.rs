//! Bitmask helpers for exhaustive subset scans.
//!
//! Subsets of a graph with at most 64 vertices are `u64` masks. Scans over
//! all `2^|V|` masks are split into fixed index ranges, folded independently
//! and merged in range order, so results do not depend on the thread count.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default ceiling on the vertex count of exhaustive subset scans.
pub const DEFAULT_SUBSET_LIMIT: usize = 20;

const CHUNK_BITS: u32 = 12;

pub fn check_limit(vertex_count: usize, limit: usize) -> Result<()> {
    if vertex_count > limit || vertex_count > 63 {
        return Err(Error::ResourceLimit(format!(
            "subset enumeration over {vertex_count} vertices exceeds the limit of {}",
            limit.min(63)
        )));
    }
    Ok(())
}

/// Neighbour masks of `g`, failing with a resource limit past 64 vertices.
pub fn masks(g: &Graph) -> Result<Vec<u64>> {
    g.neighbor_masks().ok_or_else(|| {
        Error::ResourceLimit(format!(
            "{} vertices do not fit a 64-bit mask",
            g.vertex_count()
        ))
    })
}

/// Vertices of `s` with a neighbour outside `s`.
#[inline]
pub fn boundary_mask(nbrs: &[u64], s: u64) -> u64 {
    let mut out = 0;
    let mut rest = s;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if nbrs[v] & !s != 0 {
            out |= 1 << v;
        }
    }
    out
}

#[inline]
pub fn boundary_size(nbrs: &[u64], s: u64) -> u32 {
    boundary_mask(nbrs, s).count_ones()
}

pub fn mask_to_vec(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    out
}

/// Orders masks by their sorted vertex lists, lexicographically.
pub fn lex_cmp(a: u64, b: u64) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let d = diff.trailing_zeros();
    let above = !0u64 << d;
    // the lists agree below d; the one holding d is smaller unless the other ends there
    if a >> d & 1 == 1 {
        if b & above == 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    } else if a & above == 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Folds every mask in `0..total` and merges per-range results in order.
///
/// With `parallel` the ranges are folded on the rayon pool; the merge order
/// is the same either way.
pub fn fold_masks<T, F, M>(
    total: u64,
    parallel: bool,
    init: impl Fn() -> T + Sync,
    fold: F,
    merge: M,
) -> T
where
    T: Send,
    F: Fn(T, u64) -> T + Sync,
    M: Fn(T, T) -> T + Sync,
{
    let chunk = 1u64 << CHUNK_BITS;
    let ranges = total.div_ceil(chunk);
    let run = |i: u64| {
        let lo = i * chunk;
        let hi = (lo + chunk).min(total);
        (lo..hi).fold(init(), &fold)
    };
    if parallel && ranges > 1 {
        let parts: Vec<T> = (0..ranges).into_par_iter().map(run).collect();
        parts.into_iter().fold(init(), &merge)
    } else {
        (0..ranges).map(run).fold(init(), &merge)
    }
}
