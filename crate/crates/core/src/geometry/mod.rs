//! Interval arrangements with exact rational endpoints.
//!
//! The circle is `[0, 1)` with unit circumference. An arc runs from `lo`
//! upward to `hi`, wrapping past 1 when `hi < lo`. Endpoints use
//! [`Bound`]: `Included` is closed, `Excluded` open, and `Unbounded` (line
//! only) makes a ray.

mod normalize;
mod realize;

use std::fmt;
use std::ops::Bound;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::code::Code;
use crate::error::{Error, Result};
use crate::matrix::{Geometry, SensorMatrix};
use crate::word::BitVector;

pub use normalize::{normalize_arbitrary, to_closed, to_open};
pub use realize::{realize_matrix, EPSILON_LINE};

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `p` reduced into `[0, 1)`.
pub fn wrap_unit(p: &BigRational) -> BigRational {
    p - p.floor()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Interval1D {
    Empty,
    Whole,
    Proper { lo: Bound<BigRational>, hi: Bound<BigRational> },
}

fn bound_value(b: &Bound<BigRational>) -> Option<&BigRational> {
    match b {
        Bound::Included(v) | Bound::Excluded(v) => Some(v),
        Bound::Unbounded => None,
    }
}

fn above(p: &BigRational, lo: &Bound<BigRational>) -> bool {
    match lo {
        Bound::Included(a) => p >= a,
        Bound::Excluded(a) => p > a,
        Bound::Unbounded => true,
    }
}

fn below(p: &BigRational, hi: &Bound<BigRational>) -> bool {
    match hi {
        Bound::Included(b) => p <= b,
        Bound::Excluded(b) => p < b,
        Bound::Unbounded => true,
    }
}

impl Interval1D {
    pub fn open(a: BigRational, b: BigRational) -> Self {
        Interval1D::Proper { lo: Bound::Excluded(a), hi: Bound::Excluded(b) }
    }

    pub fn closed(a: BigRational, b: BigRational) -> Self {
        Interval1D::Proper { lo: Bound::Included(a), hi: Bound::Included(b) }
    }

    /// `[a, b)`.
    pub fn half_open(a: BigRational, b: BigRational) -> Self {
        Interval1D::Proper { lo: Bound::Included(a), hi: Bound::Excluded(b) }
    }

    pub fn point(a: BigRational) -> Self {
        Interval1D::closed(a.clone(), a)
    }

    /// Finite endpoints, low first.
    pub fn endpoints(&self) -> impl Iterator<Item = &BigRational> {
        let (lo, hi) = match self {
            Interval1D::Proper { lo, hi } => (bound_value(lo), bound_value(hi)),
            _ => (None, None),
        };
        lo.into_iter().chain(hi)
    }

    pub fn is_open(&self) -> bool {
        match self {
            Interval1D::Proper { lo, hi } => !matches!(lo, Bound::Included(_)) && !matches!(hi, Bound::Included(_)),
            _ => true,
        }
    }

    pub fn is_closed(&self) -> bool {
        match self {
            Interval1D::Proper { lo, hi } => !matches!(lo, Bound::Excluded(_)) && !matches!(hi, Bound::Excluded(_)),
            _ => true,
        }
    }

    /// Membership of `p`; on the circle `p` must already lie in `[0, 1)`.
    pub fn contains(&self, p: &BigRational, geometry: Geometry) -> bool {
        match self {
            Interval1D::Empty => false,
            Interval1D::Whole => true,
            Interval1D::Proper { lo, hi } => {
                let wraps = geometry == Geometry::Circle
                    && matches!((bound_value(lo), bound_value(hi)), (Some(a), Some(b)) if b < a);
                if wraps {
                    above(p, lo) || below(p, hi)
                } else {
                    above(p, lo) && below(p, hi)
                }
            }
        }
    }

    fn validate(&self, geometry: Geometry) -> Result<()> {
        let Interval1D::Proper { lo, hi } = self else {
            return Ok(());
        };
        let bad = |why: &str| Err(Error::InvalidInterval(format!("{self}: {why}")));
        match geometry {
            Geometry::Line => {
                if let (Some(a), Some(b)) = (bound_value(lo), bound_value(hi)) {
                    let point = matches!((lo, hi), (Bound::Included(_), Bound::Included(_)));
                    if a > b || (a == b && !point) {
                        return bad("empty or reversed");
                    }
                }
            }
            Geometry::Circle => {
                let (Some(a), Some(b)) = (bound_value(lo), bound_value(hi)) else {
                    return bad("arcs need finite endpoints");
                };
                let unit = |v: &BigRational| !v.is_negative() && v < &BigRational::one();
                if !unit(a) || !unit(b) {
                    return bad("arc endpoints must lie in [0, 1)");
                }
                let point = matches!((lo, hi), (Bound::Included(_), Bound::Included(_)));
                if a == b && !point {
                    return bad("an arc with equal endpoints must be a closed point");
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Interval1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Interval1D::Empty => f.write_str("empty"),
            Interval1D::Whole => f.write_str("whole"),
            Interval1D::Proper { lo, hi } => {
                match lo {
                    Bound::Included(a) => write!(f, "[{a}, ")?,
                    Bound::Excluded(a) => write!(f, "({a}, ")?,
                    Bound::Unbounded => f.write_str("(-inf, ")?,
                }
                match hi {
                    Bound::Included(b) => write!(f, "{b}]"),
                    Bound::Excluded(b) => write!(f, "{b})"),
                    Bound::Unbounded => f.write_str("inf)"),
                }
            }
        }
    }
}

/// `k` intervals (neurons) in one geometry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalArrangement {
    intervals: Vec<Interval1D>,
    geometry: Geometry,
}

impl IntervalArrangement {
    pub fn new(intervals: Vec<Interval1D>, geometry: Geometry) -> Result<Self> {
        for iv in &intervals {
            iv.validate(geometry)?;
        }
        Ok(IntervalArrangement { intervals, geometry })
    }

    pub fn intervals(&self) -> &[Interval1D] {
        &self.intervals
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn k(&self) -> usize {
        self.intervals.len()
    }

    /// Sorted distinct finite endpoints.
    pub fn breakpoints(&self) -> Vec<BigRational> {
        let mut pts: Vec<BigRational> = self.intervals.iter().flat_map(|iv| iv.endpoints().cloned()).collect();
        pts.sort();
        pts.dedup();
        pts
    }
}

/// Strictly increasing sensor positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SensorSet {
    positions: Vec<BigRational>,
}

impl SensorSet {
    /// Sorts the positions; duplicates are rejected.
    pub fn new(mut positions: Vec<BigRational>) -> Result<Self> {
        positions.sort();
        if let Some(w) = positions.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidSensor(format!("{} appears twice", w[0])));
        }
        Ok(SensorSet { positions })
    }

    pub fn positions(&self) -> &[BigRational] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// The codeword at `p`: bit `i` is set iff `p` lies in interval `i`. On the
/// circle `p` is first reduced into `[0, 1)`.
pub fn evaluate_codeword(arr: &IntervalArrangement, p: &BigRational) -> BitVector {
    let p = match arr.geometry {
        Geometry::Line => p.clone(),
        Geometry::Circle => wrap_unit(p),
    };
    BitVector::from_bits(arr.intervals.iter().map(|iv| iv.contains(&p, arr.geometry)))
}

/// Readings at the sensors, as a matrix (columns in sensor order) and as a
/// code.
pub fn extract_code_sparse(arr: &IntervalArrangement, sensors: &SensorSet) -> Result<(Code, SensorMatrix)> {
    if sensors.is_empty() {
        return Err(Error::NoSensors);
    }
    if arr.geometry == Geometry::Circle {
        let unit = BigRational::one();
        if let Some(p) = sensors.positions.iter().find(|p| p.is_negative() || **p >= unit) {
            return Err(Error::InvalidSensor(format!("{p} is not in [0, 1)")));
        }
    }
    let columns: Vec<BitVector> = sensors.positions.iter().map(|p| evaluate_codeword(arr, p)).collect();
    let m = SensorMatrix::from_columns(arr.k(), &columns)?;
    Ok((m.column_set(), m))
}

/// One point in every elementary region of the arrangement, plus every
/// endpoint.
pub fn sample_points(arr: &IntervalArrangement) -> Vec<BigRational> {
    let e = arr.breakpoints();
    let two = rational(2, 1);
    let mut pts = Vec::with_capacity(2 * e.len() + 2);
    match (arr.geometry, e.len()) {
        (_, 0) => pts.push(BigRational::zero()),
        (Geometry::Line, _) => {
            pts.push(&e[0] - BigRational::one());
            pts.push(e.last().unwrap() + BigRational::one());
        }
        (Geometry::Circle, _) => {
            // The gap that wraps from the last endpoint round to the first.
            let gap_mid = (e.last().unwrap() + &e[0] + BigRational::one()) / &two;
            pts.push(wrap_unit(&gap_mid));
        }
    }
    for (i, x) in e.iter().enumerate() {
        pts.push(x.clone());
        if let Some(y) = e.get(i + 1) {
            pts.push((x + y) / &two);
        }
    }
    pts
}

/// Every codeword the arrangement produces anywhere in the space.
pub fn extract_code_dense(arr: &IntervalArrangement) -> Code {
    Code::new(arr.k(), sample_points(arr).iter().map(|p| evaluate_codeword(arr, p))).expect("words have length k")
}
