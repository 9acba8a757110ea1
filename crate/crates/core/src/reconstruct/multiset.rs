//! Reconstruction with prescribed column multiplicities.

use crate::code::CodeMultiset;
use crate::matrix::{columns_pass, Density, Geometry, Regime, SensorMatrix};
use crate::ordering::order;
use crate::word::BitVector;

use super::{reconstruct_dense_linear, Multiordering};

fn expand(ordering: &[BitVector], ms: &CodeMultiset, have: impl Fn(&BitVector) -> usize) -> Vec<BitVector> {
    let mut out = Vec::with_capacity(ms.total());
    let mut placed = std::collections::HashSet::new();
    for w in ordering {
        out.push(w.clone());
        // Extra copies go right next to the first occurrence.
        if placed.insert(w.clone()) {
            for _ in have(w)..ms.multiplicity(w) {
                out.push(w.clone());
            }
        }
    }
    out
}

/// A matrix with exactly the requested column multiplicities whose rows are
/// discrete intervals for `geometry`.
pub fn reconstruct_multiset_sparse(ms: &CodeMultiset, geometry: Geometry) -> Option<SensorMatrix> {
    let ordering = order(&ms.support(), geometry).into_ordering()?;
    let columns = expand(&ordering, ms, |_| 1);
    assert!(columns_pass(ms.k(), &columns, Regime::new(geometry, Density::Sparse)));
    assert_eq!(&CodeMultiset::from_columns(ms.k(), &columns).unwrap(), ms);
    Some(SensorMatrix::from_columns(ms.k(), &columns).expect("columns share k"))
}

/// An HCO column sequence with exactly the requested multiplicities. The
/// trimmed dense multiordering of the support gives the least number of
/// copies each word needs; asking for fewer is infeasible.
pub fn reconstruct_multiset_dense_linear(ms: &CodeMultiset) -> Option<Multiordering> {
    let base = reconstruct_dense_linear(&ms.support())?;
    let need = base.multiplicities();
    if need.iter().any(|(w, m)| m > ms.multiplicity(w)) {
        return None;
    }
    let columns = expand(base.columns(), ms, |w| need.multiplicity(w));
    assert!(columns_pass(ms.k(), &columns, Regime::HCO));
    let mo = Multiordering::new(ms.k(), columns).expect("columns share k");
    assert_eq!(&mo.multiplicities(), ms);
    Some(mo)
}
