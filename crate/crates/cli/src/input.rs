//! Input files: codes (one codeword per line, optionally preceded by a
//! count) and interval arrangements.

use std::fmt;
use std::ops::Bound;
use std::str::FromStr;

use convex1d::{BitVector, Code, CodeMultiset, Geometry, Interval1D, IntervalArrangement, SensorSet};
use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Non-blank lines with `#` comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

/// A parsed code file. Every codeword has the same length and every count
/// is a positive integer; a bare codeword counts once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeFile {
    pub multiset: CodeMultiset,
}

impl CodeFile {
    pub fn code(&self) -> Code {
        self.multiset.support()
    }
}

impl FromStr for CodeFile {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut entries: Vec<(BitVector, usize)> = Vec::new();
        let mut k = None;
        for (no, line) in content_lines(text) {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let (count, word) = match tokens[..] {
                [word] => (1, word),
                [count, word] => {
                    let count: usize =
                        count.parse().map_err(|_| err(no, format!("count {count:?} is not a positive integer")))?;
                    if count == 0 {
                        return Err(err(no, "count must be at least 1"));
                    }
                    (count, word)
                }
                _ => return Err(err(no, "expected `codeword` or `count codeword`")),
            };
            let w: BitVector = word.parse().map_err(|e| err(no, format!("{e}")))?;
            match k {
                None => k = Some(w.len()),
                Some(k) if k != w.len() => {
                    return Err(err(no, format!("codeword {word} has length {}, expected {k}", w.len())));
                }
                _ => {}
            }
            entries.push((w, count));
        }
        let k = k.ok_or_else(|| err(0, "file contains no codewords"))?;
        let mut multiset = CodeMultiset::empty(k);
        for (w, count) in entries {
            multiset.add(w, count).expect("lengths and counts checked");
        }
        Ok(CodeFile { multiset })
    }
}

/// An arrangement file: one interval per line, written as `empty`, `whole`,
/// or with brackets such as `[1, 7/2)`, `(-inf, 3]` or `(3/4, 1/4)`, plus an
/// optional `sensors: p1 p2 ...` line.
#[derive(Debug, Clone)]
pub struct ArrangementFile {
    pub intervals: Vec<Interval1D>,
    pub sensors: Option<Vec<BigRational>>,
}

impl ArrangementFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut intervals = Vec::new();
        let mut sensors = None;
        for (no, line) in content_lines(text) {
            if let Some(rest) = line.strip_prefix("sensors:") {
                if sensors.is_some() {
                    return Err(err(no, "sensors given twice"));
                }
                let pts = rest
                    .split_whitespace()
                    .map(|t| parse_rational(t).ok_or_else(|| err(no, format!("bad sensor position {t:?}"))))
                    .collect::<Result<Vec<_>, _>>()?;
                sensors = Some(pts);
            } else {
                intervals.push(parse_interval(line).map_err(|m| err(no, m))?);
            }
        }
        Ok(ArrangementFile { intervals, sensors })
    }

    pub fn arrangement(&self, geometry: Geometry) -> Result<IntervalArrangement, ParseError> {
        IntervalArrangement::new(self.intervals.clone(), geometry).map_err(|e| err(0, e.to_string()))
    }

    pub fn sensor_set(&self) -> Result<Option<SensorSet>, ParseError> {
        self.sensors.clone().map(SensorSet::new).transpose().map_err(|e| err(0, e.to_string()))
    }
}

/// `p`, `p/q` or a finite decimal such as `0.25`.
pub fn parse_rational(t: &str) -> Option<BigRational> {
    if let Ok(r) = BigRational::from_str(t) {
        return Some(r);
    }
    let (int, frac) = t.split_once('.')?;
    if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    BigRational::from_str(&format!("{digits}/1{}", "0".repeat(frac.len()))).ok()
}

fn parse_interval(line: &str) -> Result<Interval1D, String> {
    match line {
        "empty" => return Ok(Interval1D::Empty),
        "whole" => return Ok(Interval1D::Whole),
        _ => {}
    }
    let bad = || format!("cannot read interval {line:?}");
    let lo_closed = match line.chars().next() {
        Some('[') => true,
        Some('(') => false,
        _ => return Err(bad()),
    };
    let hi_closed = match line.chars().last() {
        Some(']') => true,
        Some(')') => false,
        _ => return Err(bad()),
    };
    let (a, b) = line[1..line.len() - 1].split_once(',').ok_or_else(bad)?;
    let (a, b) = (a.trim(), b.trim());
    let lo = match a {
        "-inf" if !lo_closed => Bound::Unbounded,
        _ => {
            let v = parse_rational(a).ok_or_else(bad)?;
            if lo_closed {
                Bound::Included(v)
            } else {
                Bound::Excluded(v)
            }
        }
    };
    let hi = match b {
        "inf" | "+inf" if !hi_closed => Bound::Unbounded,
        _ => {
            let v = parse_rational(b).ok_or_else(bad)?;
            if hi_closed {
                Bound::Included(v)
            } else {
                Bound::Excluded(v)
            }
        }
    };
    Ok(Interval1D::Proper { lo, hi })
}
