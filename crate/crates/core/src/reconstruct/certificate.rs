//! The incompatibility graph of a code and its 2-colouring.
//!
//! Vertices are ordered pairs `(a, b)` of distinct codewords, read as "a lies
//! left of b". Two kinds of edges join pairs that cannot hold together:
//! `(a, b)`–`(b, a)`, and `(a, b)`–`(b, c)` whenever some row has `a` and `c`
//! set but `b` clear. The graph is bipartite iff the code has a linear
//! consecutive-ones ordering, so an odd cycle proves there is none.

use std::collections::{BTreeMap, VecDeque};

use crate::code::Code;
use crate::word::BitVector;

pub type Pair = (BitVector, BitVector);

/// Why two consecutive vertices of a cycle are adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EdgeWitness {
    /// The pairs are `(a, b)` and `(b, a)`.
    Reversal,
    /// 1-based row where the outer columns have a 1 and the middle one a 0.
    Row(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RejectionCertificate {
    /// Closed walk `v0 v1 .. v(L-1)`; edge `i` joins `v_i` and `v_(i+1 mod L)`.
    pub odd_cycle: Vec<Pair>,
    pub witnesses: Vec<EdgeWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    /// Side of every vertex of the graph.
    pub side: BTreeMap<Pair, bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateOutcome {
    Bipartition(Bipartition),
    OddCycle(RejectionCertificate),
}

impl CertificateOutcome {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, CertificateOutcome::Bipartition(_))
    }
}

/// First row (1-based) with `a` and `c` set and `b` clear.
fn split_row(a: &BitVector, b: &BitVector, c: &BitVector) -> Option<usize> {
    (a & c).iter_ones().find(|&i| !b.get(i)).map(|i| i + 1)
}

/// The witness for an edge between `u` and `v`, if they are adjacent.
pub fn edge_witness(u: &Pair, v: &Pair) -> Option<EdgeWitness> {
    if u.0 == v.1 && u.1 == v.0 {
        return Some(EdgeWitness::Reversal);
    }
    let (left, right) = if u.1 == v.0 {
        (u, v)
    } else if v.1 == u.0 {
        (v, u)
    } else {
        return None;
    };
    let (a, b, c) = (&left.0, &left.1, &right.1);
    if a == c {
        return None;
    }
    split_row(a, b, c).map(EdgeWitness::Row)
}

fn is_vertex(code: &Code, v: &Pair) -> bool {
    v.0 != v.1 && code.contains(&v.0) && code.contains(&v.1)
}

impl RejectionCertificate {
    /// Checks the certificate against `code` using only the edge definition.
    pub fn verify(&self, code: &Code) -> bool {
        let len = self.odd_cycle.len();
        if len < 3 || len.is_multiple_of(2) || self.witnesses.len() != len {
            return false;
        }
        self.odd_cycle.iter().all(|v| is_vertex(code, v))
            && (0..len).all(|i| {
                let (u, v) = (&self.odd_cycle[i], &self.odd_cycle[(i + 1) % len]);
                match (&self.witnesses[i], edge_witness(u, v)) {
                    (EdgeWitness::Reversal, Some(EdgeWitness::Reversal)) => true,
                    (EdgeWitness::Row(r), Some(EdgeWitness::Row(_))) => {
                        let (left, right) = if u.1 == v.0 { (u, v) } else { (v, u) };
                        *r >= 1
                            && *r <= code.k()
                            && left.0.get(r - 1)
                            && right.1.get(r - 1)
                            && !left.1.get(r - 1)
                    }
                    _ => false,
                }
            })
    }
}

/// Builds a certificate from a proposed cycle, or `None` if some consecutive
/// pair is not an edge (or the cycle is even or too short).
pub fn certify_cycle(code: &Code, cycle: &[Pair]) -> Option<RejectionCertificate> {
    let len = cycle.len();
    if len < 3 || len.is_multiple_of(2) || !cycle.iter().all(|v| is_vertex(code, v)) {
        return None;
    }
    let witnesses = (0..len)
        .map(|i| edge_witness(&cycle[i], &cycle[(i + 1) % len]))
        .collect::<Option<Vec<_>>>()?;
    Some(RejectionCertificate { odd_cycle: cycle.to_vec(), witnesses })
}

impl Bipartition {
    pub fn verify(&self, code: &Code) -> bool {
        let g = Graph::new(code);
        g.vertices.len() == self.side.len()
            && g.vertices.iter().all(|v| self.side.contains_key(v))
            && g.adj.iter().enumerate().all(|(u, nbrs)| {
                nbrs.iter().all(|&v| self.side[&g.vertices[u]] != self.side[&g.vertices[v]])
            })
    }
}

struct Graph {
    vertices: Vec<Pair>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    fn new(code: &Code) -> Self {
        let words: Vec<&BitVector> = code.iter().collect();
        let m = words.len();
        let id = |a: usize, b: usize| a * m + b - usize::from(b > a) - a;
        let mut vertices = Vec::with_capacity(m * m.saturating_sub(1));
        for a in 0..m {
            for b in 0..m {
                if a != b {
                    debug_assert_eq!(id(a, b), vertices.len());
                    vertices.push((words[a].clone(), words[b].clone()));
                }
            }
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for a in 0..m {
            for b in 0..m {
                if a == b {
                    continue;
                }
                adj[id(a, b)].push(id(b, a));
                for c in 0..m {
                    if c != a && c != b && split_row(words[a], words[b], words[c]).is_some() {
                        adj[id(a, b)].push(id(b, c));
                        adj[id(b, c)].push(id(a, b));
                    }
                }
            }
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        Graph { vertices, adj }
    }
}

/// 2-colours the incompatibility graph of `code` by breadth-first search, or
/// returns an odd cycle through the first monochromatic edge found.
pub fn rejection_certificate(code: &Code) -> CertificateOutcome {
    let g = Graph::new(code);
    let n = g.vertices.len();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &v in &g.adj[u] {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => {
                        let cycle = odd_cycle(u, v, &parent, &depth);
                        let pairs: Vec<Pair> = cycle.into_iter().map(|i| g.vertices[i].clone()).collect();
                        let cert = certify_cycle(code, &pairs).expect("tree paths are graph edges");
                        return CertificateOutcome::OddCycle(cert);
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let side = g.vertices.into_iter().zip(color).map(|(v, c)| (v, c.unwrap())).collect();
    CertificateOutcome::Bipartition(Bipartition { side })
}

/// Joins the tree paths from `u` and `v` at their lowest common ancestor.
fn odd_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}
