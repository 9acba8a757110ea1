//! Counting discrete interval sets: sets of `k` distinct nonzero rows of
//! length `n` that together form a valid matrix in a regime.
//!
//! The sparse counts are binomial coefficients. The dense counts come from
//! bivariate generating functions in `x` (sensors) and `y` (rows), cross
//! checked by exhaustive search and, on the line, by counting subspaces.

mod brute;
mod poly;
mod subspace;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::matrix::{Density, Geometry, Regime};

pub use brute::{brute_force_dense, brute_force_table, interval_rows, BRUTE_FORCE_MAX_N};
pub use poly::BivariatePoly;
pub use subspace::{count_full_support_subspaces, SUBSPACE_MAX_DIM};

/// `c[n][k]` for `n <= max_n` and `k <= max_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    regime: Regime,
    c: Vec<Vec<BigInt>>,
}

impl CountTable {
    /// Panics unless `c` is a nonempty rectangle.
    pub fn new(regime: Regime, c: Vec<Vec<BigInt>>) -> Self {
        assert!(!c.is_empty() && c.iter().all(|row| row.len() == c[0].len() && !row.is_empty()));
        CountTable { regime, c }
    }

    fn from_poly(regime: Regime, p: &BivariatePoly) -> Self {
        CountTable::new(regime, (0..=p.x_cap()).map(|n| p.x_coeff(n).to_vec()).collect())
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn max_n(&self) -> usize {
        self.c.len() - 1
    }

    pub fn max_k(&self) -> usize {
        self.c[0].len() - 1
    }

    /// Zero outside the table.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.c.get(n).and_then(|row| row.get(k)).cloned().unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.c[n]
    }

    /// Sum over the tracked `k` for this `n`.
    pub fn total(&self, n: usize) -> BigInt {
        self.c[n].iter().sum()
    }
}

/// Tab separated, one line per `n`: `n`, the counts by `k`, then the total.
impl fmt::Display for CountTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n")?;
        for k in 0..=self.max_k() {
            write!(f, "\tk={k}")?;
        }
        writeln!(f, "\ttotal")?;
        for n in 0..=self.max_n() {
            write!(f, "{n}")?;
            for v in &self.c[n] {
                write!(f, "\t{v}")?;
            }
            writeln!(f, "\t{}", self.total(n))?;
        }
        Ok(())
    }
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Number of nonzero discrete-interval rows of length `n`.
pub fn interval_row_count(n: usize, geometry: Geometry) -> usize {
    match (geometry, n) {
        (Geometry::Line, _) => n * (n + 1) / 2,
        (Geometry::Circle, 0) => 0,
        (Geometry::Circle, 1) => 1,
        (Geometry::Circle, _) => n * n - n + 1,
    }
}

/// Sparse discrete interval sets: any `k` distinct interval rows will do.
pub fn count_sparse(n: usize, k: usize, geometry: Geometry) -> BigInt {
    binomial(interval_row_count(n, geometry), k)
}

/// Sparse counts for every `n <= max_n`, `k <= max_k`.
pub fn sparse_table(max_n: usize, max_k: usize, geometry: Geometry) -> CountTable {
    let c = (0..=max_n).map(|n| (0..=max_k).map(|k| count_sparse(n, k, geometry)).collect()).collect();
    CountTable::new(Regime::new(geometry, Density::Sparse), c)
}

/// `a_i = (1 + y)^i - 1`.
fn a(i: usize, x_cap: usize, y_cap: usize) -> BivariatePoly {
    let one = BivariatePoly::one(x_cap, y_cap);
    let one_plus_y = one.add(&BivariatePoly::monomial(x_cap, y_cap, 0, 1, BigInt::one()));
    one_plus_y.pow(i as u32).sub(&one)
}

/// Dense line counts from `sum_m x^m / ((1 - a_1 x) ... (1 - a_{m+1} x))`.
/// Only `m <= max_n` matters since the `m`-th term starts at `x^m`.
pub fn gf_dense_linear(max_n: usize, max_k: usize) -> CountTable {
    let mut sum = BivariatePoly::zero(max_n, max_k);
    let mut product = BivariatePoly::one(max_n, max_k);
    for m in 0..=max_n {
        product = product.mul(&BivariatePoly::inverse_power(&a(m + 1, max_n, max_k), 1));
        sum = sum.add(&product.shift_x(m));
    }
    CountTable::from_poly(Regime::HCO, &sum)
}

/// Dense circle counts from `1 + (1 + y) sum_{m >= 1} x^m / (1 - a_m x)^{m+1}`.
///
/// The factor `1 + y` accounts for the all-ones row, which can be added to
/// any set. Replacing it by 2 gives the right totals but wrong counts by `k`.
pub fn gf_dense_circular(max_n: usize, max_k: usize) -> CountTable {
    let one = BivariatePoly::one(max_n, max_k);
    let one_plus_y = one.add(&BivariatePoly::monomial(max_n, max_k, 0, 1, BigInt::one()));
    let mut sum = BivariatePoly::zero(max_n, max_k);
    for m in 1..=max_n {
        sum = sum.add(&BivariatePoly::inverse_power(&a(m, max_n, max_k), m + 1).shift_x(m));
    }
    CountTable::from_poly(Regime::HCCO, &one.add(&one_plus_y.mul(&sum)))
}

/// Counts for any regime: closed forms when sparse, generating functions
/// when dense.
pub fn count_table(regime: Regime, max_n: usize, max_k: usize) -> CountTable {
    match (regime.density, regime.geometry) {
        (Density::Sparse, g) => sparse_table(max_n, max_k, g),
        (Density::Dense, Geometry::Line) => gf_dense_linear(max_n, max_k),
        (Density::Dense, Geometry::Circle) => gf_dense_circular(max_n, max_k),
    }
}

/// The largest `k` with a nonzero count for some `n <= max_n`: every interval
/// row at once is an upper bound.
pub fn max_rows(max_n: usize, geometry: Geometry) -> usize {
    (0..=max_n).map(|n| interval_row_count(n, geometry)).max().unwrap_or(0)
}
