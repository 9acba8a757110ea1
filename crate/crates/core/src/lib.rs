//! Realizability, reconstruction and enumeration of one-dimensional convex
//! neural codes.
//!
//! A code is a set of binary words, one bit per neuron. It is realizable on
//! the line (or circle) when there are intervals (arcs) and sensor positions
//! whose readings produce exactly those words. The four regimes combine the
//! geometry with whether sensors see some (sparse) or all (dense) of the
//! words an arrangement can produce.
//!
//! ```
//! use convex1d::{co_order, Code};
//!
//! let code = Code::parse(&["1100", "1000", "0100", "0000", "0001", "0110"]).unwrap();
//! let ordering = co_order(&code).into_ordering().unwrap();
//! assert_eq!(ordering.len(), 6);
//! ```

pub mod code;
pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod matrix;
pub mod ordering;
pub mod reconstruct;
pub mod word;

pub use code::{Code, CodeMultiset};
pub use enumerate::{
    brute_force_dense, count_full_support_subspaces, count_sparse, count_table, gf_dense_circular, gf_dense_linear,
    BivariatePoly, CountTable,
};
pub use error::{Error, Result};
pub use geometry::{
    evaluate_codeword, extract_code_dense, extract_code_sparse, normalize_arbitrary, rational, realize_matrix,
    to_closed, to_open, Interval1D, IntervalArrangement, SensorSet,
};
pub use matrix::{
    columns_pass, first_inharmonious_adjacent, inharmonious, is_discrete_interval, regime_check,
    regime_violation, row_stats, Density, Geometry, Regime, RowStats, SensorMatrix, Violation,
};
pub use ordering::{cco_order, co_order, OrderingResult};
pub use word::{bv, BitVector};
pub use reconstruct::{
    reconstruct_dense, reconstruct_dense_linear, reconstruct_multiset_dense_linear, reconstruct_multiset_sparse,
    reconstruct_sparse, rejection_certificate, CertificateOutcome, DenseOutcome, Multiordering, RejectionCertificate,
};
