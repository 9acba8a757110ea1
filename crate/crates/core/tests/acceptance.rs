//! Acceptance gate: one PASS/FAIL line per criterion, exact tolerances,
//! wall-clock limits pinned below. Run with
//! `cargo test -p convex1d-core --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use convex1d::enumerate::{brute_force_table, interval_rows};
use convex1d::reconstruct::certificate::certify_cycle;
use convex1d::{
    bv, cco_order, co_order, columns_pass, count_full_support_subspaces, count_sparse, extract_code_dense,
    extract_code_sparse, gf_dense_circular, gf_dense_linear, normalize_arbitrary, rational,
    realize_matrix, reconstruct_dense, reconstruct_dense_linear, reconstruct_multiset_dense_linear, reconstruct_sparse,
    regime_check, rejection_certificate, to_closed, to_open, BitVector, Code, CodeMultiset, CertificateOutcome,
    DenseOutcome, Geometry, Interval1D, IntervalArrangement, Regime, SensorMatrix,
};
use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criteria that cannot hold as written, with the clause that fails. They
/// still run and print FAIL; only an unexpected failure fails the suite.
const KNOWN_RED: &[(&str, &str)] = &[
    ("AC1", "the minimal dense multiordering has 6 columns; the printed 7-column matrix is not HCO"),
    ("AC4", "the circular series and exhaustive search both give 1682 at n = 5, not 1684"),
];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

/// Accumulates clause results so a criterion reports every failing clause.
#[derive(Default)]
struct Clauses {
    failed: Vec<String>,
    notes: Vec<String>,
}

impl Clauses {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failed.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }

    fn finish(self) -> Outcome {
        let mut parts = Vec::new();
        if !self.failed.is_empty() {
            parts.push(format!("failed: {}", self.failed.join("; ")));
        }
        parts.extend(self.notes);
        Outcome::new(self.failed.is_empty(), parts.join("; "))
    }
}

fn code(words: &[&str]) -> Code {
    Code::parse(words).unwrap()
}

fn strings(cols: &[BitVector]) -> Vec<String> {
    cols.iter().map(ToString::to_string).collect()
}

fn sorted(cols: &[BitVector]) -> Vec<BitVector> {
    let mut v = cols.to_vec();
    v.sort();
    v
}

fn ac1() -> Outcome {
    let mut c = Clauses::default();
    let words = code(&["1100", "1000", "0100", "0000", "0001", "0110"]);
    for geometry in [Geometry::Line, Geometry::Circle] {
        let m = reconstruct_sparse(&words, geometry);
        let ok = m.as_ref().is_some_and(|m| {
            regime_check(m, Regime::new(geometry, convex1d::Density::Sparse)) && m.column_set() == words
        });
        c.check(ok, format!("sparse {geometry:?} reconstruction"));
    }
    let printed = SensorMatrix::parse(&["0011000", "0001110", "0000100", "1000000"]).unwrap();
    match reconstruct_dense_linear(&words) {
        None => c.check(false, "dense line reconstruction is feasible"),
        Some(mo) => {
            c.check(regime_check(&mo.to_matrix(), Regime::HCO), "output passes the HCO check");
            c.check(mo.support() == &words, "output uses exactly the code");
            c.check(mo.len() == 7, format!("7 columns (got {})", mo.len()));
            c.check(sorted(mo.columns()) == sorted(&printed.columns()), "column multiset equals the printed matrix");
            c.note(format!("dense columns {}", strings(mo.columns()).join(",")));
        }
    }
    c.note(format!("printed matrix HCO: {}", regime_check(&printed, Regime::HCO)));
    c.finish()
}

fn ac2() -> Outcome {
    let mut c = Clauses::default();
    let words = code(&["1100", "1010", "0101", "1111"]);
    let (a, b, cc, d) = (bv("1100"), bv("1010"), bv("0101"), bv("1111"));
    let printed = vec![(d, a.clone()), (a.clone(), b.clone()), (b, cc.clone()), (cc.clone(), a.clone()), (a, cc)];
    let cert = certify_cycle(&words, &printed);
    c.check(cert.as_ref().is_some_and(|cert| cert.verify(&words)), "printed 5-cycle validates");
    match rejection_certificate(&words) {
        CertificateOutcome::OddCycle(found) => {
            c.check(found.odd_cycle.len() % 2 == 1, "found cycle is odd");
            c.check(found.verify(&words), "found cycle verifies");
            c.note(format!("found cycle of length {}", found.odd_cycle.len()));
        }
        CertificateOutcome::Bipartition(_) => c.check(false, "graph is not bipartite"),
    }
    c.check(!co_order(&words).is_feasible(), "no CO ordering");
    c.finish()
}

fn ac3() -> Outcome {
    let mut c = Clauses::default();
    let words = code(&["100", "010", "001", "000"]);
    let list: Vec<BitVector> = words.iter().cloned().collect();
    c.check(!any_permutation(&list, |p| columns_pass(3, p, Regime::HCO)), "no HCO ordering among 4! orders");
    let expected = ["100", "000", "010", "000", "001"];
    match reconstruct_dense_linear(&words) {
        None => c.check(false, "dense reconstruction is feasible"),
        Some(mo) => {
            let got = strings(mo.columns());
            let mut reversed = got.clone();
            reversed.reverse();
            // Up to swapping neuron labels and reversing the line.
            let relabel = |cols: &[String], perm: &[usize; 3]| -> Vec<String> {
                cols.iter().map(|s| perm.iter().map(|&i| s.as_bytes()[i] as char).collect()).collect()
            };
            let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            let matches = perms.iter().any(|p| relabel(&got, p) == expected || relabel(&reversed, p) == expected);
            c.check(matches, format!("matches the printed 5-column matrix (got {})", got.join(",")));
            c.check(regime_check(&mo.to_matrix(), Regime::HCO), "output passes the HCO check");
        }
    }
    let forced = CodeMultiset::new(3, words.iter().map(|w| (w.clone(), 1))).unwrap();
    c.check(reconstruct_multiset_dense_linear(&forced).is_none(), "multiplicity-one multiset rejected");
    c.finish()
}

fn ac4() -> Outcome {
    let mut c = Clauses::default();
    let line = gf_dense_linear(5, 15);
    let circle = gf_dense_circular(5, 21);
    let totals = |t: &convex1d::CountTable| (0..=5).map(|n| t.total(n)).collect::<Vec<BigInt>>();
    let want_line: Vec<BigInt> = [1, 2, 6, 26, 158, 1330].map(BigInt::from).to_vec();
    let want_circle: Vec<BigInt> = [1, 2, 6, 26, 174, 1684].map(BigInt::from).to_vec();
    let (got_line, got_circle) = (totals(&line), totals(&circle));
    c.check(got_line == want_line, format!("linear totals {got_line:?}"));
    c.check(got_circle == want_circle, format!("circular totals {got_circle:?}"));
    for geometry in [Geometry::Line, Geometry::Circle] {
        for n in 0..=6 {
            let r = interval_rows(n, geometry).len();
            let mut pascal = vec![BigInt::one()];
            for _ in 0..r {
                let mut next = vec![BigInt::one(); pascal.len() + 1];
                for i in 1..pascal.len() {
                    next[i] = &pascal[i - 1] + &pascal[i];
                }
                pascal = next;
            }
            let ok = (0..=r + 1).all(|k| count_sparse(n, k, geometry) == pascal.get(k).cloned().unwrap_or_default());
            c.check(ok, format!("sparse {geometry:?} n={n}"));
        }
    }
    c.finish()
}

fn ac5a() -> Outcome {
    let mut c = Clauses::default();
    let mut checked = 0;
    for k in 1..=4 {
        for words in all_codes(k, 6) {
            checked += 1;
            let co = co_order(&words);
            let cco = cco_order(&words);
            let brute_co = brute_orderable(&words, Regime::CO);
            let brute_cco = brute_orderable(&words, Regime::CCO);
            let mut ok = co.is_feasible() == brute_co && cco.is_feasible() == brute_cco;
            if let Some(o) = co.ordering() {
                ok &= columns_pass(k, o, Regime::CO) && sorted(o) == words.iter().cloned().collect::<Vec<_>>();
            }
            if let Some(o) = cco.ordering() {
                ok &= columns_pass(k, o, Regime::CCO) && o.len() == words.len();
            }
            ok &= reconstruct_sparse(&words, Geometry::Line).is_some() == brute_co;
            ok &= reconstruct_sparse(&words, Geometry::Circle).is_some() == brute_cco;
            ok &= match rejection_certificate(&words) {
                CertificateOutcome::Bipartition(b) => brute_co && b.verify(&words),
                CertificateOutcome::OddCycle(cert) => !brute_co && cert.verify(&words),
            };
            let bound = (2 * words.len()).saturating_sub(1).max(1);
            let brute_dense = brute_min_dense(&words, bound);
            let dense = reconstruct_dense_linear(&words);
            ok &= dense.as_ref().map(|mo| mo.len()) == brute_dense;
            if let Some(mo) = &dense {
                ok &= columns_pass(k, mo.columns(), Regime::HCO) && mo.support() == &words;
            }
            if !ok {
                c.check(false, format!("{words:?}"));
                break;
            }
        }
    }
    c.note(format!("{checked} codes"));
    c.finish()
}

fn ac5b() -> Outcome {
    let mut c = Clauses::default();
    for (geometry, max_n) in [(Geometry::Line, 8), (Geometry::Circle, 7)] {
        let max_k = max_n * max_n + 1;
        let brute = brute_force_table(max_n, max_k, geometry).unwrap();
        let gf = match geometry {
            Geometry::Line => gf_dense_linear(max_n, max_k),
            Geometry::Circle => gf_dense_circular(max_n, max_k),
        };
        for n in 0..=max_n {
            c.check(gf.row(n) == brute.row(n), format!("{geometry:?} n={n}"));
        }
    }
    c.finish()
}

fn ac5c() -> Outcome {
    let mut c = Clauses::default();
    let gf = gf_dense_linear(5, 15);
    for n in 0..=5 {
        let subspaces = count_full_support_subspaces(n + 1).unwrap();
        c.check(BigInt::from(subspaces) == gf.total(n), format!("n={n}: {subspaces} vs {}", gf.total(n)));
    }
    c.check(count_full_support_subspaces(3).unwrap() == 6, "pinned 6 at n=2");
    c.finish()
}

fn ac6() -> Outcome {
    let mut c = Clauses::default();
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    for regime in ALL_REGIMES {
        let (mut passing, mut tries) = (0, 0);
        while passing < 1000 && tries < 100_000 {
            tries += 1;
            let (k, n) = (rng.gen_range(1..=5), rng.gen_range(1..=8));
            let m = SensorMatrix::from_rows(n, random_interval_rows(&mut rng, k, n, regime.geometry)).unwrap();
            if !regime_check(&m, regime) {
                continue;
            }
            passing += 1;
            let (arr, sensors) = realize_matrix(&m, regime).unwrap();
            let ok = match regime.density {
                convex1d::Density::Sparse => extract_code_sparse(&arr, &sensors).unwrap().1 == m,
                convex1d::Density::Dense => extract_code_dense(&arr) == m.column_set(),
            };
            if !ok {
                c.check(false, format!("{regime} round trip of\n{m}"));
                break;
            }
        }
        c.check(passing == 1000, format!("{regime}: only {passing} matrices generated"));
    }
    for i in 0..1000 {
        let geometry = if i % 2 == 0 { Geometry::Line } else { Geometry::Circle };
        let k = rng.gen_range(1..=5);
        let arr = random_arrangement(&mut rng, k, geometry, Ends::Mixed);
        let sensors = random_sensors(&mut rng, geometry);
        let (code, m) = extract_code_sparse(&arr, &sensors).unwrap();
        let norm = normalize_arbitrary(&arr, &sensors).unwrap();
        let ok = extract_code_sparse(&norm, &sensors).unwrap().1 == m && extract_code_dense(&norm) == code;
        c.check(ok, format!("normalize {:?}", arr.intervals()));

        let open = random_arrangement(&mut rng, k, geometry, Ends::Open);
        c.check(
            extract_code_dense(&to_closed(&open).unwrap()) == extract_code_dense(&open),
            format!("to_closed {:?}", open.intervals()),
        );
        let closed = random_arrangement(&mut rng, k, geometry, Ends::Closed);
        c.check(
            extract_code_dense(&to_open(&closed).unwrap()) == extract_code_dense(&closed),
            format!("to_open {:?}", closed.intervals()),
        );
        if !c.failed.is_empty() {
            break;
        }
    }
    c.finish()
}

fn ac7() -> Outcome {
    let mut c = Clauses::default();
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    let mut witness: Option<IntervalArrangement> = None;
    // Largest code size seen for each k.
    let mut best = [0usize; 11];
    for _ in 0..1000 {
        let k = rng.gen_range(0..=10);
        let intervals = (0..k)
            .map(|_| {
                let a = rng.gen_range(0..100);
                let b = rng.gen_range(a + 1..=100);
                Interval1D::open(rational(a, 1), rational(b, 1))
            })
            .collect();
        let arr = IntervalArrangement::new(intervals, Geometry::Line).unwrap();
        let size = extract_code_dense(&arr).len();
        best[k] = best[k].max(size);
        c.check(size <= 2 * k + 1, format!("{} words from {:?}", size, arr.intervals()));
        if size == 2 * k + 1 && witness.is_none() {
            witness = Some(arr);
        }
    }
    match &witness {
        Some(w) => c.note(format!("equality witness: k = {}, intervals {:?}", w.k(), w.intervals())),
        None => c.check(false, "equality achieved"),
    }
    c.note(format!("largest size by k: {best:?}"));
    c.finish()
}

fn ac8() -> Outcome {
    let mut c = Clauses::default();
    let hcco = [bv("1000"), bv("1110"), bv("0100"), bv("1101")];
    c.check(columns_pass(4, &hcco, Regime::HCCO), "printed HCCO ordering passes");
    let cco = [bv("1000"), bv("0100"), bv("1110"), bv("1101")];
    c.check(columns_pass(4, &cco, Regime::CCO), "alternative ordering is CCO");
    c.check(!columns_pass(4, &cco, Regime::HCCO), "alternative ordering is not HCCO");

    // Insert one column between the first two, over every word of length 4.
    let words = Code::from_words(hcco.iter().cloned()).unwrap();
    let mut keeps_cco = Vec::new();
    let mut repairs = Vec::new();
    for w in universe(4) {
        let mut cols = cco.to_vec();
        cols.insert(1, w.clone());
        if columns_pass(4, &cols, Regime::CCO) {
            keeps_cco.push(w.to_string());
            if columns_pass(4, &cols[..3], Regime::HCO) && words.contains(&w) {
                repairs.push(w.to_string());
            }
        }
    }
    // The neighbours themselves trivially keep CCO by duplication; every
    // other codeword must break it.
    let others: Vec<String> =
        words.iter().filter(|w| **w != cco[0] && **w != cco[1]).map(ToString::to_string).collect();
    c.check(others.iter().all(|w| !keeps_cco.contains(w)), "no other codeword keeps CCO");
    c.check(repairs.is_empty(), format!("no codeword repairs the first pair (found {repairs:?})"));
    c.note(format!("CCO-preserving insertions over all 16 words: {}", keeps_cco.join(",")));
    c.check(reconstruct_dense(&words, Geometry::Circle) == DenseOutcome::Unsupported, "circle dense is unsupported");
    c.finish()
}

/// A CO matrix with 10^4 sensors and short random intervals; its column set
/// must be recognized in under a second.
fn smoke() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let (n, k) = (10_000, 5_000);
    let rows: Vec<BitVector> = (0..k)
        .map(|_| {
            let len = rng.gen_range(1..=6);
            let start = rng.gen_range(0..=n - len);
            BitVector::from_bits((0..n).map(|j| j >= start && j < start + len))
        })
        .collect();
    let code = SensorMatrix::from_rows(n, rows).unwrap().column_set();
    debug_assert!(code.iter().all(|w| w.len() == k));
    let t = Instant::now();
    let result = co_order(&code);
    let elapsed = t.elapsed();
    Outcome::new(
        result.is_feasible() && elapsed < Duration::from_secs(1),
        format!("{} words of length {k} ordered in {:.3}s", code.len(), elapsed.as_secs_f64()),
    )
}

fn main() -> ExitCode {
    type Criterion = (&'static str, &'static str, fn() -> Outcome, Duration);
    let criteria: [Criterion; 11] = [
        ("AC1", "worked example reconstruction", ac1, Duration::from_secs(1)),
        ("AC2", "rejection certificate", ac2, Duration::from_secs(1)),
        ("AC3", "padding example", ac3, Duration::from_secs(1)),
        ("AC4", "enumeration golden values", ac4, Duration::from_secs(5)),
        ("AC5a", "ordering and reconstruction oracles", ac5a, Duration::from_secs(120)),
        ("AC5b", "generating functions vs exhaustive counts", ac5b, Duration::from_secs(120)),
        ("AC5c", "full-support subspaces", ac5c, Duration::from_secs(120)),
        ("AC6", "geometry round trips", ac6, Duration::from_secs(60)),
        ("AC7", "dense code size bound", ac7, Duration::from_secs(60)),
        ("AC8", "circular dense counterexample", ac8, Duration::from_secs(1)),
        ("SMOKE", "large CO recognition", smoke, Duration::from_secs(60)),
    ];
    let mut unexpected = 0;
    for (id, name, run, limit) in criteria {
        let t = Instant::now();
        let mut outcome = run();
        let elapsed = t.elapsed();
        if elapsed > limit {
            outcome.pass = false;
            outcome.detail = format!("over time limit {:?}; {}", limit, outcome.detail);
        }
        let known = KNOWN_RED.iter().find(|(k, _)| *k == id);
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        println!("{status} {id} {name} [{:.2}s] {}", elapsed.as_secs_f64(), outcome.detail);
        match (outcome.pass, known) {
            (false, Some((_, why))) => println!("     {id} is a known red criterion: {why}"),
            (false, None) => unexpected += 1,
            (true, Some(_)) => println!("     {id} was expected red but passed"),
            (true, None) => {}
        }
    }
    if unexpected > 0 {
        println!("{unexpected} criteria failed unexpectedly");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
