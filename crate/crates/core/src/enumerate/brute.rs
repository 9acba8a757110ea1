use num_bigint::BigInt;

use super::CountTable;
use crate::error::{Error, Result};
use crate::matrix::{is_discrete_interval, row_stats, Density, Geometry, Regime};
use crate::word::BitVector;

/// Largest `n` accepted by [`brute_force_dense`].
pub const BRUTE_FORCE_MAX_N: usize = 12;

/// Every nonzero discrete-interval row of length `n`, found by testing all
/// `2^n` words.
pub fn interval_rows(n: usize, geometry: Geometry) -> Vec<BitVector> {
    (1u64..1 << n)
        .map(|m| BitVector::from_bits((0..n).map(|i| m >> i & 1 == 1)))
        .filter(|w| is_discrete_interval(w, geometry))
        .collect()
}

/// Dense discrete interval sets of length-`n` rows, counted by size `k`
/// (index `k` of the result), by enumerating every set of rows in which no
/// row starts right where another ends, i.e. no pair with `g(r1) = f(r2)`.
/// On the circle the all-ones row has no statistics and clashes with nothing.
pub fn brute_force_dense(n: usize, geometry: Geometry) -> Result<Vec<BigInt>> {
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::SizeLimit { what: "n", value: n, max: BRUTE_FORCE_MAX_N });
    }
    let rows = interval_rows(n, geometry);
    let stats: Vec<Option<(usize, usize)>> =
        rows.iter().map(|r| row_stats(r, geometry).ok().map(|s| (s.f, s.g))).collect();
    let m = rows.len();
    let clash: Vec<Vec<bool>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| match (stats[i], stats[j]) {
                    (Some((fi, gi)), Some((fj, gj))) => gi == fj || gj == fi,
                    _ => false,
                })
                .collect()
        })
        .collect();

    // Depth-first over include/exclude decisions, skipping rows that clash
    // with one already chosen.
    let mut counts = vec![0u64; m + 1];
    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    fn go(i: usize, m: usize, clash: &[Vec<bool>], chosen: &mut Vec<usize>, counts: &mut [u64]) {
        if i == m {
            counts[chosen.len()] += 1;
            return;
        }
        go(i + 1, m, clash, chosen, counts);
        if chosen.iter().all(|&j| !clash[i][j]) {
            chosen.push(i);
            go(i + 1, m, clash, chosen, counts);
            chosen.pop();
        }
    }
    go(0, m, &clash, &mut chosen, &mut counts);
    Ok(counts.into_iter().map(BigInt::from).collect())
}

/// [`brute_force_dense`] for every `n <= max_n`, truncated or padded with
/// zeros to `k <= max_k`.
pub fn brute_force_table(max_n: usize, max_k: usize, geometry: Geometry) -> Result<CountTable> {
    let c = (0..=max_n)
        .map(|n| {
            let mut row = brute_force_dense(n, geometry)?;
            row.resize(max_k + 1, BigInt::default());
            Ok(row)
        })
        .collect::<Result<_>>()?;
    Ok(CountTable::new(Regime::new(geometry, Density::Dense), c))
}
