use std::collections::HashSet;

use crate::error::{Error, Result};

/// Largest dimension accepted by [`count_full_support_subspaces`].
pub const SUBSPACE_MAX_DIM: usize = 6;

/// Subspaces of the `dim`-dimensional vector space over the two-element
/// field whose vectors, taken together, are nonzero in every coordinate.
///
/// Subspaces are grown from the zero subspace by adjoining one vector at a
/// time and closing under addition; each is stored as a bitmask over the
/// `2^dim` vectors so duplicates collapse.
pub fn count_full_support_subspaces(dim: usize) -> Result<u64> {
    if dim > SUBSPACE_MAX_DIM {
        return Err(Error::SizeLimit { what: "dim", value: dim, max: SUBSPACE_MAX_DIM });
    }
    let size = 1usize << dim;
    let span_with = |space: u64, v: usize| -> u64 {
        // space + (space xor v) is the span of space and v.
        let mut out = space;
        for u in 0..size {
            if space >> u & 1 == 1 {
                out |= 1 << (u ^ v);
            }
        }
        out
    };
    let mut seen: HashSet<u64> = HashSet::from([1]);
    let mut frontier = vec![1u64];
    while let Some(space) = frontier.pop() {
        for v in 1..size {
            if space >> v & 1 == 0 {
                let bigger = span_with(space, v);
                if seen.insert(bigger) {
                    frontier.push(bigger);
                }
            }
        }
    }
    let full = (1usize << dim) - 1;
    let count = seen
        .into_iter()
        .filter(|&space| (0..size).filter(|u| space >> u & 1 == 1).fold(0, |acc, u| acc | u) == full)
        .count();
    Ok(count as u64)
}
