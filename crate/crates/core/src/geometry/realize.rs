//! Turning a CO / CCO matrix into intervals and sensors.

use std::ops::Bound;

use super::{rational, wrap_unit, Interval1D, IntervalArrangement, SensorSet};
use crate::error::{Error, Result};
use crate::matrix::{regime_check, row_stats, Density, Geometry, Regime, SensorMatrix};
use crate::word::BitVector;

/// Half-width of the padding around each block of sensors on the line.
pub const EPSILON_LINE: (i64, i64) = (1, 4);

/// Intervals and sensors reproducing `m`.
///
/// On the line sensor `j` sits at `j` (1-based) and a row covering sensors
/// `i..=j` becomes `(i - 1/4, j + 1/4)`. On the circle sensor `t` sits at
/// `(t - 1)/n` and arcs are padded by `1/(4n)`. Zero rows become empty
/// intervals and full rows the whole space.
///
/// In the dense line regime the far left and far right of the line are read
/// too. Bounded intervals would show the word of the full rows there, so
/// when that word is not a column, rows touching the first (last) sensor are
/// extended to rays and the outer regions repeat the first (last) column.
pub fn realize_matrix(m: &SensorMatrix, regime: Regime) -> Result<(IntervalArrangement, SensorSet)> {
    if !regime_check(m, regime) {
        return Err(Error::RegimeViolation(regime.name()));
    }
    let n = m.n() as i64;
    match regime.geometry {
        Geometry::Line => {
            let sensors = SensorSet::new((1..=n).map(|j| rational(j, 1)).collect())?;
            let eps = rational(EPSILON_LINE.0, EPSILON_LINE.1);
            let rays = regime.density == Density::Dense && needs_rays(m);
            let intervals = m
                .rows()
                .iter()
                .map(|row| {
                    let (Some(first), Some(last)) = (row.first_one(), row.last_one()) else {
                        return Interval1D::Empty;
                    };
                    if row.is_all_ones() {
                        return Interval1D::Whole;
                    }
                    let lo = if rays && first == 0 {
                        Bound::Unbounded
                    } else {
                        Bound::Excluded(rational(first as i64 + 1, 1) - &eps)
                    };
                    let hi = if rays && last + 1 == m.n() {
                        Bound::Unbounded
                    } else {
                        Bound::Excluded(rational(last as i64 + 1, 1) + &eps)
                    };
                    Interval1D::Proper { lo, hi }
                })
                .collect();
            Ok((IntervalArrangement::new(intervals, Geometry::Line)?, sensors))
        }
        Geometry::Circle => {
            let sensors = SensorSet::new((0..n).map(|t| rational(t, n)).collect())?;
            let intervals = m
                .rows()
                .iter()
                .map(|row| {
                    if row.is_zero() {
                        return Interval1D::Empty;
                    }
                    if row.is_all_ones() {
                        return Interval1D::Whole;
                    }
                    let stats = row_stats(row, Geometry::Circle).expect("checked rows are intervals");
                    let eps = rational(1, 4 * n);
                    // The block of ones starts right after the block of zeros ends.
                    let start = (stats.g % m.n()) as i64;
                    let end = stats.f as i64 - 1;
                    let lo = wrap_unit(&(rational(start, n) - &eps));
                    let hi = wrap_unit(&(rational(end, n) + &eps));
                    Interval1D::open(lo, hi)
                })
                .collect();
            Ok((IntervalArrangement::new(intervals, Geometry::Circle)?, sensors))
        }
    }
}

/// Whether the word of the full rows (what bounded intervals leave at the far
/// ends of the line) is missing from the columns.
fn needs_rays(m: &SensorMatrix) -> bool {
    if m.n() == 0 {
        return false;
    }
    let outside = BitVector::from_bits(m.rows().iter().map(BitVector::is_all_ones));
    !m.columns().contains(&outside)
}
