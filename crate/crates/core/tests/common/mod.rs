//! Brute-force oracles shared by the integration tests. Everything here is
//! exponential and only meant for tiny instances.

#![allow(dead_code)]

use std::ops::Bound;

use convex1d::{
    columns_pass, rational, BitVector, Code, Density, Geometry, Interval1D, IntervalArrangement, Regime, SensorSet,
};
use num_rational::BigRational;
use rand::Rng;

/// All permutations of `items` (Heap's algorithm), passed to `visit` until it
/// returns `true`. Returns whether any call did.
pub fn any_permutation<T: Clone>(items: &[T], mut visit: impl FnMut(&[T]) -> bool) -> bool {
    let mut a = items.to_vec();
    let n = a.len();
    if visit(&a) {
        return true;
    }
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            if visit(&a) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// Whether some permutation of the code's words passes the regime check.
pub fn brute_orderable(code: &Code, regime: Regime) -> bool {
    let words: Vec<BitVector> = code.iter().cloned().collect();
    if words.is_empty() {
        return true;
    }
    match regime.geometry {
        Geometry::Line => any_permutation(&words, |p| columns_pass(code.k(), p, regime)),
        Geometry::Circle => {
            // Rotations are equivalent, so pin the first word.
            let (first, rest) = words.split_first().unwrap();
            any_permutation(rest, |p| {
                let mut cols = vec![first.clone()];
                cols.extend_from_slice(p);
                columns_pass(code.k(), &cols, regime)
            })
        }
    }
}

/// Every sequence of length `len` over `alphabet`, passed to `visit` until it
/// returns `true`.
pub fn any_sequence(alphabet: &[BitVector], len: usize, mut visit: impl FnMut(&[BitVector]) -> bool) -> bool {
    fn go(
        alphabet: &[BitVector],
        len: usize,
        cur: &mut Vec<BitVector>,
        visit: &mut dyn FnMut(&[BitVector]) -> bool,
    ) -> bool {
        if cur.len() == len {
            return visit(cur);
        }
        for w in alphabet {
            cur.push(w.clone());
            if go(alphabet, len, cur, visit) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(alphabet, len, &mut Vec::with_capacity(len), &mut visit)
}

/// Exhaustive search over column sequences drawn from `alphabet`, tracking
/// per-row state (not started / open / closed) so that only HCO prefixes are
/// extended. Returns the shortest length using every word of `alphabet` with
/// the multiplicity limits in `limit` (`None` = unlimited), up to `max_len`.
pub fn shortest_hco(k: usize, alphabet: &[BitVector], limit: &[Option<usize>], max_len: usize) -> Option<usize> {
    use std::collections::{HashSet, VecDeque};
    let masks: Vec<u32> = alphabet.iter().map(|w| w.iter_ones().fold(0, |m, i| m | 1 << i)).collect();
    let m = alphabet.len();
    // State: last word, rows started, rows closed, per-word use counts.
    type State = (usize, u32, u32, Vec<usize>);
    let mut seen: HashSet<State> = HashSet::new();
    let mut queue: VecDeque<(State, usize)> = VecDeque::new();
    let step = |last: Option<usize>, started: u32, closed: u32, w: usize| -> Option<(u32, u32)> {
        if let Some(l) = last {
            let (a, b) = (masks[l], masks[w]);
            if a & b != a && a & b != b {
                return None;
            }
        }
        let bits = masks[w];
        if bits & closed != 0 {
            return None;
        }
        let full = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
        let newly_closed = started & !bits & full;
        Some((started | bits, closed | newly_closed))
    };
    if m == 0 {
        return Some(0);
    }
    for w in 0..m {
        let mut uses = vec![0; m];
        uses[w] = 1;
        if limit[w] == Some(0) {
            continue;
        }
        let (s, c) = step(None, 0, 0, w).unwrap();
        let st = (w, s, c, uses);
        if seen.insert(st.clone()) {
            queue.push_back((st, 1));
        }
    }
    while let Some(((last, started, closed, uses), len)) = queue.pop_front() {
        let done = uses.iter().zip(limit).all(|(&u, l)| u >= 1 && l.is_none_or(|l| u == l));
        if done {
            return Some(len);
        }
        if len == max_len {
            continue;
        }
        for w in 0..m {
            if limit[w].is_some_and(|l| uses[w] >= l) {
                continue;
            }
            if let Some((s, c)) = step(Some(last), started, closed, w) {
                let mut u = uses.clone();
                // Unlimited words only need to be seen; cap their count at 1.
                u[w] = if limit[w].is_none() { 1 } else { u[w] + 1 };
                let st = (w, s, c, u);
                if seen.insert(st.clone()) {
                    queue.push_back((st, len + 1));
                }
            }
        }
    }
    None
}

/// Shortest HCO multiordering of `code` of length at most `max_len`, if any.
pub fn brute_min_dense(code: &Code, max_len: usize) -> Option<usize> {
    let words: Vec<BitVector> = code.iter().cloned().collect();
    shortest_hco(code.k(), &words, &vec![None; words.len()], max_len)
}

/// Whether some arrangement of exactly these multiplicities is HCO.
pub fn brute_multiset_dense(ms: &convex1d::CodeMultiset) -> bool {
    let words: Vec<BitVector> = ms.iter().map(|(w, _)| w.clone()).collect();
    let limit: Vec<Option<usize>> = ms.iter().map(|(_, m)| Some(m)).collect();
    shortest_hco(ms.k(), &words, &limit, ms.total()).is_some()
}

pub fn random_word(rng: &mut impl Rng, k: usize) -> BitVector {
    BitVector::from_bits((0..k).map(|_| rng.gen_bool(0.5)))
}

pub fn random_code(rng: &mut impl Rng, k: usize, max_words: usize) -> Code {
    let count = rng.gen_range(0..=max_words.min(1 << k));
    let mut code = Code::empty(k);
    while code.len() < count {
        code.insert(random_word(rng, k)).unwrap();
    }
    code
}

/// A random matrix that passes the sparse check for `geometry`, built from
/// random (cyclic) intervals; rows may be empty or full.
pub fn random_interval_rows(rng: &mut impl Rng, k: usize, n: usize, geometry: Geometry) -> Vec<BitVector> {
    (0..k)
        .map(|_| {
            let len = rng.gen_range(0..=n);
            let start = if n == 0 { 0 } else { rng.gen_range(0..n) };
            let mut row = BitVector::zeros(n);
            for t in 0..len {
                let j = match geometry {
                    Geometry::Line => {
                        let s = start.min(n - len);
                        s + t
                    }
                    Geometry::Circle => (start + t) % n,
                };
                row.set(j, true);
            }
            row
        })
        .collect()
}

pub const ALL_REGIMES: [Regime; 4] = [Regime::CO, Regime::HCO, Regime::CCO, Regime::HCCO];

pub fn sparse(geometry: Geometry) -> Regime {
    Regime::new(geometry, Density::Sparse)
}

/// All words of length `k`.
pub fn universe(k: usize) -> Vec<BitVector> {
    (0..1u32 << k).map(|m| BitVector::from_bits((0..k).rev().map(|i| m >> i & 1 == 1))).collect()
}

/// Every subset of `universe(k)` with at most `max` elements.
pub fn all_codes(k: usize, max: usize) -> Vec<Code> {
    let u = universe(k);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(u: &[BitVector], start: usize, max: usize, k: usize, cur: &mut Vec<BitVector>, out: &mut Vec<Code>) {
        out.push(Code::new(k, cur.iter().cloned()).unwrap());
        if cur.len() == max {
            return;
        }
        for i in start..u.len() {
            cur.push(u[i].clone());
            go(u, i + 1, max, k, cur, out);
            cur.pop();
        }
    }
    go(&u, 0, max, k, &mut cur, &mut out);
    out
}

/// Endpoints are multiples of 1/2 in [0, 8] on the line and of 1/8 in
/// [0, 1) on the circle.
pub const LINE_DEN: i64 = 2;
pub const CIRCLE_DEN: i64 = 8;

#[derive(Clone, Copy, PartialEq)]
pub enum Ends {
    Open,
    Closed,
    Mixed,
}

pub fn random_bound(rng: &mut impl Rng, v: BigRational, ends: Ends) -> Bound<BigRational> {
    let closed = match ends {
        Ends::Open => false,
        Ends::Closed => true,
        Ends::Mixed => rng.gen_bool(0.5),
    };
    if closed {
        Bound::Included(v)
    } else {
        Bound::Excluded(v)
    }
}

pub fn random_arrangement(rng: &mut impl Rng, k: usize, geometry: Geometry, ends: Ends) -> IntervalArrangement {
    let intervals = (0..k)
        .map(|_| match geometry {
            Geometry::Line => {
                let a = rng.gen_range(0..8 * LINE_DEN);
                let b = rng.gen_range(a + 1..=8 * LINE_DEN);
                Interval1D::Proper {
                    lo: random_bound(rng, rational(a, LINE_DEN), ends),
                    hi: random_bound(rng, rational(b, LINE_DEN), ends),
                }
            }
            Geometry::Circle => {
                let a = rng.gen_range(0..CIRCLE_DEN);
                let b = (a + rng.gen_range(1..CIRCLE_DEN)) % CIRCLE_DEN;
                Interval1D::Proper {
                    lo: random_bound(rng, rational(a, CIRCLE_DEN), ends),
                    hi: random_bound(rng, rational(b, CIRCLE_DEN), ends),
                }
            }
        })
        .collect();
    IntervalArrangement::new(intervals, geometry).unwrap()
}

pub fn random_sensors(rng: &mut impl Rng, geometry: Geometry) -> SensorSet {
    let count = rng.gen_range(1..=6);
    let mut pts = Vec::new();
    while pts.len() < count {
        let p = match geometry {
            Geometry::Line => rational(rng.gen_range(-4..=36), 4),
            Geometry::Circle => rational(rng.gen_range(0..4 * CIRCLE_DEN), 4 * CIRCLE_DEN),
        };
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    SensorSet::new(pts).unwrap()
}
