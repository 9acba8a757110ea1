//! Building sensor matrices from codes.
//!
//! Sparse reconstruction is an ordering problem. Dense (harmonious)
//! reconstruction on the line starts from a CO ordering and pads every
//! inharmonious adjacent pair `x | y` with `x ∧ y`, which must itself be a
//! codeword. Circular dense reconstruction is an open problem and reported as
//! [`DenseOutcome::Unsupported`].

pub mod certificate;
pub mod multiset;

use crate::code::{Code, CodeMultiset};
use crate::error::Result;
use crate::matrix::{columns_pass, Density, Geometry, Regime, SensorMatrix};
use crate::ordering::{co_order, order};
use crate::word::BitVector;

pub use certificate::{
    certify_cycle, rejection_certificate, Bipartition, CertificateOutcome, EdgeWitness, RejectionCertificate,
};
pub use multiset::{reconstruct_multiset_dense_linear, reconstruct_multiset_sparse};

/// A column sequence in which every word of `support` occurs at least once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiordering {
    columns: Vec<BitVector>,
    support: Code,
}

impl Multiordering {
    pub fn new(k: usize, columns: Vec<BitVector>) -> Result<Self> {
        let support = Code::new(k, columns.iter().cloned())?;
        Ok(Multiordering { columns, support })
    }

    pub fn columns(&self) -> &[BitVector] {
        &self.columns
    }

    pub fn support(&self) -> &Code {
        &self.support
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn multiplicities(&self) -> CodeMultiset {
        CodeMultiset::from_columns(self.support.k(), &self.columns).expect("columns share k")
    }

    pub fn to_matrix(&self) -> SensorMatrix {
        SensorMatrix::from_columns(self.support.k(), &self.columns).expect("columns share k")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DenseOutcome {
    Feasible(Multiordering),
    Infeasible,
    /// Circular dense reconstruction has no known algorithm.
    Unsupported,
}

/// A matrix whose columns are `words`, each once, in an order passing the
/// sparse check for `geometry`.
pub fn reconstruct_sparse(words: &Code, geometry: Geometry) -> Option<SensorMatrix> {
    let ordering = order(words, geometry).into_ordering()?;
    let m = SensorMatrix::from_columns(words.k(), &ordering).expect("ordering shares k");
    assert!(crate::matrix::regime_check(&m, Regime::new(geometry, Density::Sparse)));
    Some(m)
}

/// Pads each inharmonious adjacent pair `x | y` of `ordering` with `x ∧ y`.
/// Fails if some such meet is not in `words`.
pub fn harmonize(ordering: &[BitVector], words: &Code) -> Option<Vec<BitVector>> {
    let mut out = Vec::with_capacity(2 * ordering.len());
    for (i, x) in ordering.iter().enumerate() {
        if i > 0 {
            let prev = &ordering[i - 1];
            if !prev.comparable(x) {
                let meet = prev & x;
                if !words.contains(&meet) {
                    return None;
                }
                out.push(meet);
            }
        }
        out.push(x.clone());
    }
    Some(out)
}

/// Drops repeated copies whose removal leaves their new neighbours
/// comparable, scanning left to right until nothing changes. One copy of
/// every word survives, and CO is kept because deleting a column cannot split
/// an interval.
pub fn trim(columns: &mut Vec<BitVector>) {
    let mut count = std::collections::HashMap::<BitVector, usize>::new();
    for c in columns.iter() {
        *count.entry(c.clone()).or_default() += 1;
    }
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < columns.len() {
            let n = columns.len();
            let harmless = i == 0 || i + 1 == n || columns[i - 1].comparable(&columns[i + 1]);
            let c = count.get_mut(&columns[i]).unwrap();
            if *c > 1 && harmless {
                *c -= 1;
                columns.remove(i);
                changed = true;
            } else {
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
}

/// An HCO multiordering of `words`, or `None` if the code has no dense
/// realization on the line. Repeated columns are trimmed to the fewest the
/// construction needs.
pub fn reconstruct_dense_linear(words: &Code) -> Option<Multiordering> {
    let ordering = co_order(words).into_ordering()?;
    let mut columns = harmonize(&ordering, words)?;
    trim(&mut columns);
    let mo = Multiordering::new(words.k(), columns).expect("columns share k");
    assert!(columns_pass(words.k(), mo.columns(), Regime::HCO), "dense output failed its check");
    assert_eq!(mo.support(), words);
    assert!(mo.len() < 2 * words.len().max(1));
    Some(mo)
}

pub fn reconstruct_dense(words: &Code, geometry: Geometry) -> DenseOutcome {
    match geometry {
        Geometry::Circle => DenseOutcome::Unsupported,
        Geometry::Line => match reconstruct_dense_linear(words) {
            Some(mo) => DenseOutcome::Feasible(mo),
            None => DenseOutcome::Infeasible,
        },
    }
}
