//! Workload generators shared by the benchmarks.

use convex1d::{BitVector, Code, SensorMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The column code of `k` random interval rows over `n` sensors, each row
/// covering between 1 and `max_len` consecutive columns. Always CO.
pub fn random_interval_code(n: usize, k: usize, max_len: usize, seed: u64) -> Code {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..k)
        .map(|_| {
            let len = rng.gen_range(1..=max_len.min(n));
            let start = rng.gen_range(0..=n - len);
            BitVector::from_bits((0..n).map(|j| j >= start && j < start + len))
        })
        .collect();
    SensorMatrix::from_rows(n, rows).expect("rows have length n").column_set()
}

/// The interval code with four extra zero rows, plus four words that
/// are zero on the interval rows and have no CO ordering on the extra ones.
pub fn random_rejected_code(n: usize, k: usize, seed: u64) -> Code {
    let base = random_interval_code(n, k, 6, seed);
    let padded = base.iter().map(|w| BitVector::from_bits(w.iter().chain([false; 4])));
    let blocker = ["1100", "1010", "0101", "1111"]
        .iter()
        .map(|t| BitVector::from_bits((0..k).map(|_| false).chain(t.bytes().map(|b| b == b'1'))));
    Code::new(k + 4, padded.chain(blocker)).expect("lengths agree")
}
