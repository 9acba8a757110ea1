//! Column orderings with the consecutive-ones (CO) and circular-ones (CCO)
//! properties.
//!
//! Every row of the code becomes the set of columns holding a 1 there, and a
//! PQ-tree is reduced against each set in turn. Circular instances are first
//! complemented on the rows that contain an anchor column, which turns them
//! into linear ones.

pub mod pq;

use std::fmt;

use crate::code::Code;
use crate::matrix::{columns_pass, Density, Geometry, Regime};
use crate::word::BitVector;
use pq::{PqTree, Shape};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderingResult {
    Feasible {
        ordering: Vec<BitVector>,
        /// Nested form of the final tree: `(..)` groups permute freely,
        /// `[..]` groups may only be reversed.
        tree_summary: String,
    },
    Infeasible,
}

impl OrderingResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, OrderingResult::Feasible { .. })
    }

    pub fn ordering(&self) -> Option<&[BitVector]> {
        match self {
            OrderingResult::Feasible { ordering, .. } => Some(ordering),
            OrderingResult::Infeasible => None,
        }
    }

    pub fn tree_summary(&self) -> Option<&str> {
        match self {
            OrderingResult::Feasible { tree_summary, .. } => Some(tree_summary),
            OrderingResult::Infeasible => None,
        }
    }

    pub fn into_ordering(self) -> Option<Vec<BitVector>> {
        match self {
            OrderingResult::Feasible { ordering, .. } => Some(ordering),
            OrderingResult::Infeasible => None,
        }
    }
}

impl fmt::Display for OrderingResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderingResult::Feasible { ordering, tree_summary } => {
                let cols: Vec<String> = ordering.iter().map(ToString::to_string).collect();
                write!(f, "{} via {}", cols.join(" "), tree_summary)
            }
            OrderingResult::Infeasible => f.write_str("infeasible"),
        }
    }
}

/// Ranks words by their sorted lists of active positions, so `0000` comes
/// first, then `1000`, `1100`, `0100`, `0110`, `0001`.
pub fn column_labels(words: &[BitVector]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..words.len()).collect();
    idx.sort_by(|&a, &b| words[a].iter_ones().cmp(words[b].iter_ones()));
    let mut label = vec![0; words.len()];
    for (rank, i) in idx.into_iter().enumerate() {
        label[i] = rank;
    }
    label
}

/// For each row, the indices of the words having a 1 there.
fn row_sets(k: usize, words: &[BitVector]) -> Vec<Vec<usize>> {
    let mut sets = vec![Vec::new(); k];
    for (j, w) in words.iter().enumerate() {
        for i in w.iter_ones() {
            sets[i].push(j);
        }
    }
    sets
}

fn render(shape: &Shape, words: &[BitVector], out: &mut String) {
    match shape {
        Shape::Leaf(i) => out.push_str(&words[*i].to_string()),
        Shape::P(kids) | Shape::Q(kids) => {
            let (open, close) = if matches!(shape, Shape::P(_)) { ('(', ')') } else { ('[', ']') };
            out.push(open);
            for (n, kid) in kids.iter().enumerate() {
                if n > 0 {
                    out.push(' ');
                }
                render(kid, words, out);
            }
            out.push(close);
        }
    }
}

/// Canonical consecutive arrangement of `words` under the row sets of `rows`
/// (which may differ from `words` itself, as in the circular reduction).
fn arrange(k: usize, words: &[BitVector], rows: &[BitVector]) -> OrderingResult {
    let mut tree = PqTree::new(words.len());
    for set in row_sets(k, rows) {
        if !tree.reduce(&set) {
            return OrderingResult::Infeasible;
        }
    }
    tree.canonicalize(&column_labels(words));
    let ordering = tree.frontier().into_iter().map(|i| words[i].clone()).collect();
    let mut tree_summary = String::new();
    match tree.shape() {
        Some(shape) => render(&shape, words, &mut tree_summary),
        None => tree_summary.push_str("()"),
    }
    OrderingResult::Feasible { ordering, tree_summary }
}

fn checked(code: &Code, result: OrderingResult, geometry: Geometry) -> OrderingResult {
    if let Some(ord) = result.ordering() {
        assert!(
            columns_pass(code.k(), ord, Regime::new(geometry, Density::Sparse)),
            "ordering failed its own {geometry:?} check"
        );
        assert_eq!(ord.len(), code.len());
    }
    result
}

/// A column order of `words` in which every row is a discrete interval on the
/// line, or `Infeasible`.
pub fn co_order(words: &Code) -> OrderingResult {
    let ws: Vec<BitVector> = words.iter().cloned().collect();
    checked(words, arrange(words.k(), &ws, &ws), Geometry::Line)
}

/// A cyclic column order of `words` in which every row is a discrete interval
/// on the circle, or `Infeasible`.
pub fn cco_order(words: &Code) -> OrderingResult {
    let ws: Vec<BitVector> = words.iter().cloned().collect();
    let Some(anchor) = ws.last().cloned() else {
        return checked(words, arrange(words.k(), &ws, &ws), Geometry::Circle);
    };
    let flipped: Vec<BitVector> = ws.iter().map(|w| w.xor(&anchor)).collect();
    checked(words, arrange(words.k(), &ws, &flipped), Geometry::Circle)
}

pub fn order(words: &Code, geometry: Geometry) -> OrderingResult {
    match geometry {
        Geometry::Line => co_order(words),
        Geometry::Circle => cco_order(words),
    }
}
