//! Sensor matrices and the four regime predicates (CO, HCO, CCO, HCCO).
//!
//! Rows are intervals (neurons) and columns are the codewords read at the
//! sensors, in spatial order. All reported indices are 1-based.

use std::fmt;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::word::BitVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Geometry {
    Line,
    Circle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Density {
    Sparse,
    Dense,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Regime {
    pub geometry: Geometry,
    pub density: Density,
}

impl Regime {
    pub const CO: Regime = Regime { geometry: Geometry::Line, density: Density::Sparse };
    pub const HCO: Regime = Regime { geometry: Geometry::Line, density: Density::Dense };
    pub const CCO: Regime = Regime { geometry: Geometry::Circle, density: Density::Sparse };
    pub const HCCO: Regime = Regime { geometry: Geometry::Circle, density: Density::Dense };

    pub fn new(geometry: Geometry, density: Density) -> Self {
        Regime { geometry, density }
    }

    pub fn name(self) -> &'static str {
        match (self.geometry, self.density) {
            (Geometry::Line, Density::Sparse) => "CO",
            (Geometry::Line, Density::Dense) => "HCO",
            (Geometry::Circle, Density::Sparse) => "CCO",
            (Geometry::Circle, Density::Dense) => "HCCO",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A k×n binary matrix stored by rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SensorMatrix {
    n: usize,
    rows: Vec<BitVector>,
}

impl SensorMatrix {
    pub fn from_rows(n: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch { expected: n, found: r.len() });
        }
        Ok(SensorMatrix { n, rows })
    }

    /// Assembles a matrix whose j-th column is `columns[j]`.
    pub fn from_columns(k: usize, columns: &[BitVector]) -> Result<Self> {
        let n = columns.len();
        let mut rows = vec![BitVector::zeros(n); k];
        for (j, c) in columns.iter().enumerate() {
            if c.len() != k {
                return Err(Error::LengthMismatch { expected: k, found: c.len() });
            }
            for i in c.iter_ones() {
                rows[i].set(j, true);
            }
        }
        Ok(SensorMatrix { n, rows })
    }

    /// Parses rows given as `0`/`1` strings. `n` is taken from the first row.
    pub fn parse<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let rows = rows.iter().map(|r| r.as_ref().parse()).collect::<Result<Vec<BitVector>>>()?;
        let n = rows.first().map_or(0, BitVector::len);
        SensorMatrix::from_rows(n, rows)
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn column(&self, j: usize) -> BitVector {
        BitVector::from_bits(self.rows.iter().map(|r| r.get(j)))
    }

    pub fn columns(&self) -> Vec<BitVector> {
        let k = self.k();
        let mut cols = vec![BitVector::zeros(k); self.n];
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.iter_ones() {
                cols[j].set(i, true);
            }
        }
        cols
    }

    pub fn column_set(&self) -> Code {
        Code::new(self.k(), self.columns()).expect("columns have length k")
    }
}

impl fmt::Display for SensorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SensorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SensorMatrix").field("n", &self.n).field("rows", &self.rows).finish()
    }
}

/// True iff the set positions of `row` are one contiguous block (or none).
fn ones_contiguous(row: &BitVector) -> bool {
    match (row.first_one(), row.last_one()) {
        (Some(a), Some(b)) => b - a + 1 == row.count_ones(),
        _ => true,
    }
}

fn zeros_contiguous(row: &BitVector) -> bool {
    match (row.first_zero(), row.last_zero()) {
        (Some(a), Some(b)) => b - a + 1 == row.count_zeros(),
        _ => true,
    }
}

/// True iff the ones of `row` form at most one contiguous block (cyclically on
/// the circle). The all-zero row has no block and counts as an interval.
pub fn is_discrete_interval(row: &BitVector, geometry: Geometry) -> bool {
    match geometry {
        Geometry::Line => ones_contiguous(row),
        Geometry::Circle => ones_contiguous(row) || zeros_contiguous(row),
    }
}

/// The pair `(f, g)` of a nonzero discrete interval.
///
/// On the line `f` is the last index holding a one and `g` is one less than
/// the first such index. On the circle `f` ends the block of ones and `g` ends
/// the block of zeros. Two rows conflict in the dense regime iff one's `g`
/// equals the other's `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RowStats {
    pub f: usize,
    pub g: usize,
}

pub fn row_stats(row: &BitVector, geometry: Geometry) -> Result<RowStats> {
    if !is_discrete_interval(row, geometry) {
        return Err(Error::NotAnInterval(row.to_string()));
    }
    let n = row.len();
    let degenerate = row.is_zero() || (geometry == Geometry::Circle && row.is_all_ones());
    if degenerate {
        return Err(Error::DegenerateRow(row.to_string()));
    }
    let (first, last) = (row.first_one().unwrap(), row.last_one().unwrap());
    match geometry {
        Geometry::Line => Ok(RowStats { f: last + 1, g: first }),
        Geometry::Circle if ones_contiguous(row) => {
            Ok(RowStats { f: last + 1, g: if first == 0 { n } else { first } })
        }
        Geometry::Circle => {
            let (fz, lz) = (row.first_zero().unwrap(), row.last_zero().unwrap());
            Ok(RowStats { f: fz, g: lz + 1 })
        }
    }
}

/// True iff `x` and `y` are incomparable in the positionwise order.
pub fn inharmonious(x: &BitVector, y: &BitVector) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { expected: x.len(), found: y.len() });
    }
    Ok(!x.comparable(y))
}

/// Why a matrix fails a regime check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// 1-based row index that is not a discrete interval.
    Row(usize),
    /// 1-based indices of an inharmonious adjacent column pair.
    Columns(usize, usize),
}

/// The first inharmonious adjacent pair in a column sequence, scanning left to
/// right; on the circle the pair (last, first) is checked after the others.
pub fn first_inharmonious_adjacent(columns: &[BitVector], geometry: Geometry) -> Option<(usize, usize)> {
    let n = columns.len();
    let linear = columns.windows(2).position(|w| !w[0].comparable(&w[1])).map(|j| (j + 1, j + 2));
    match geometry {
        Geometry::Circle if linear.is_none() && n > 2 && !columns[n - 1].comparable(&columns[0]) => {
            Some((n, 1))
        }
        _ => linear,
    }
}

pub fn regime_violation(m: &SensorMatrix, regime: Regime) -> Option<Violation> {
    if let Some(i) = m.rows().iter().position(|r| !is_discrete_interval(r, regime.geometry)) {
        return Some(Violation::Row(i + 1));
    }
    if regime.density == Density::Dense {
        if let Some((a, b)) = first_inharmonious_adjacent(&m.columns(), regime.geometry) {
            return Some(Violation::Columns(a, b));
        }
    }
    None
}

pub fn regime_check(m: &SensorMatrix, regime: Regime) -> bool {
    regime_violation(m, regime).is_none()
}

/// Regime check for a column sequence of word length `k`.
pub fn columns_pass(k: usize, columns: &[BitVector], regime: Regime) -> bool {
    SensorMatrix::from_columns(k, columns).is_ok_and(|m| regime_check(&m, regime))
}
