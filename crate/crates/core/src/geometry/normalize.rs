//! Endpoint-type normalizations that keep codes intact.

use std::ops::Bound;

use num_rational::BigRational;
use num_traits::One;

use super::{evaluate_codeword, rational, wrap_unit, Interval1D, IntervalArrangement, SensorSet};
use crate::error::{Error, Result};
use crate::matrix::Geometry;

/// Replaces every interval by a half-open `[s_p, s_q)` with sensor endpoints,
/// where `s_p..s_(q-1)` are the sensors it detects. The sparse code is
/// unchanged and the result's dense code equals it: every point now reads the
/// same word as the nearest sensor at or before it.
///
/// Intervals that detect no sensor are dropped (made empty); arcs that detect
/// every sensor become the whole circle. On the line an interval detecting
/// the last sensor becomes a ray to the right, and when the zero word is not
/// read by any sensor, intervals detecting the first sensor extend to the
/// left as well.
pub fn normalize_arbitrary(arr: &IntervalArrangement, sensors: &SensorSet) -> Result<IntervalArrangement> {
    if sensors.is_empty() {
        return Err(Error::NoSensors);
    }
    let s = sensors.positions();
    let m = s.len();
    let geometry = arr.geometry();
    let read: Vec<_> = s.iter().map(|p| evaluate_codeword(arr, p)).collect();
    let zero_read = read.iter().any(|w| w.is_zero());
    let intervals = (0..arr.k())
        .map(|i| {
            let hit: Vec<bool> = read.iter().map(|w| w.get(i)).collect();
            if !hit.contains(&true) {
                return Interval1D::Empty;
            }
            match geometry {
                Geometry::Line => {
                    let p = hit.iter().position(|&h| h).unwrap();
                    let q = hit.iter().rposition(|&h| h).unwrap();
                    let lo = if p == 0 && !zero_read { Bound::Unbounded } else { Bound::Included(s[p].clone()) };
                    let hi = if q + 1 == m { Bound::Unbounded } else { Bound::Excluded(s[q + 1].clone()) };
                    if lo == Bound::Unbounded && hi == Bound::Unbounded {
                        Interval1D::Whole
                    } else {
                        Interval1D::Proper { lo, hi }
                    }
                }
                Geometry::Circle => {
                    if hit.iter().all(|&h| h) {
                        return Interval1D::Whole;
                    }
                    // The detected block starts where a miss is followed by a hit.
                    let p = (0..m).find(|&j| hit[j] && !hit[(j + m - 1) % m]).unwrap();
                    let after = (p..p + m).map(|j| j % m).find(|&j| !hit[j]).unwrap();
                    Interval1D::half_open(s[p].clone(), s[after].clone())
                }
            }
        })
        .collect();
    IntervalArrangement::new(intervals, geometry)
}

/// A quarter of the smallest gap between distinct endpoints (cyclically on
/// the circle); 1/4 when there is at most one endpoint on the line.
fn shift(arr: &IntervalArrangement) -> BigRational {
    let e = arr.breakpoints();
    let mut gaps: Vec<BigRational> = e.windows(2).map(|w| &w[1] - &w[0]).collect();
    if arr.geometry() == Geometry::Circle {
        if let (Some(first), Some(last)) = (e.first(), e.last()) {
            gaps.push(first + BigRational::one() - last);
        }
    }
    let gap = gaps.into_iter().min().unwrap_or_else(BigRational::one);
    gap * rational(1, 4)
}

fn move_bound(b: &Bound<BigRational>, by: &BigRational, closed: bool, geometry: Geometry) -> Bound<BigRational> {
    let Some(v) = (match b {
        Bound::Included(v) | Bound::Excluded(v) => Some(v),
        Bound::Unbounded => None,
    }) else {
        return Bound::Unbounded;
    };
    let mut v = v + by;
    if geometry == Geometry::Circle {
        v = wrap_unit(&v);
    }
    if closed {
        Bound::Included(v)
    } else {
        Bound::Excluded(v)
    }
}

/// Arc length from `lo` up to `hi` on the unit circle.
fn arc_length(lo: &BigRational, hi: &BigRational) -> BigRational {
    if hi >= lo {
        hi - lo
    } else {
        hi + BigRational::one() - lo
    }
}

fn swap(arr: &IntervalArrangement, to_closed: bool) -> Result<IntervalArrangement> {
    let eps = shift(arr);
    let (required, inward) = if to_closed { ("open", -eps.clone()) } else { ("closed", eps.clone()) };
    let geometry = arr.geometry();
    let mut out = Vec::with_capacity(arr.k());
    for (index, iv) in arr.intervals().iter().enumerate() {
        let Interval1D::Proper { lo, hi } = iv else {
            out.push(iv.clone());
            continue;
        };
        let ok = if to_closed { iv.is_open() } else { iv.is_closed() };
        if !ok {
            return Err(Error::WrongEndpointType(required));
        }
        if to_closed {
            if let (Bound::Excluded(a), Bound::Excluded(b)) = (lo, hi) {
                let len = match geometry {
                    Geometry::Line => b - a,
                    Geometry::Circle => arc_length(a, b),
                };
                if len <= &eps + &eps {
                    return Err(Error::DegenerateInterval { index });
                }
            }
        }
        let new_lo = move_bound(lo, &-inward.clone(), to_closed, geometry);
        let new_hi = move_bound(hi, &inward, to_closed, geometry);
        out.push(Interval1D::Proper { lo: new_lo, hi: new_hi });
    }
    IntervalArrangement::new(out, geometry)
}

/// Shrinks every open interval `(a, b)` to `[a + e, b - e]`, with `e` a
/// quarter of the smallest gap between endpoints. The dense code is kept.
pub fn to_closed(arr: &IntervalArrangement) -> Result<IntervalArrangement> {
    swap(arr, true)
}

/// Grows every closed interval `[a, b]` to `(a - e, b + e)`; the inverse
/// direction of [`to_closed`], again keeping the dense code.
pub fn to_open(arr: &IntervalArrangement) -> Result<IntervalArrangement> {
    swap(arr, false)
}
