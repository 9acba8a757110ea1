//! Codes (sets of codewords) and code multisets.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::word::BitVector;

/// A set of distinct codewords sharing one length `k`.
///
/// Iteration order is the [`Ord`] order of [`BitVector`], so two codes built
/// from the same words in different orders are indistinguishable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Code {
    k: usize,
    words: BTreeSet<BitVector>,
}

impl Code {
    pub fn empty(k: usize) -> Self {
        Code { k, words: BTreeSet::new() }
    }

    /// Builds a code of word length `k`. Duplicates collapse.
    pub fn new<I: IntoIterator<Item = BitVector>>(k: usize, words: I) -> Result<Self> {
        let mut code = Code::empty(k);
        for w in words {
            code.insert(w)?;
        }
        Ok(code)
    }

    /// Builds a code from nonempty input, taking `k` from the first word.
    pub fn from_words<I: IntoIterator<Item = BitVector>>(words: I) -> Result<Self> {
        let mut it = words.into_iter().peekable();
        let k = it.peek().map_or(0, BitVector::len);
        Code::new(k, it)
    }

    /// Parses `"0110"`-style literals.
    pub fn parse<S: AsRef<str>>(words: &[S]) -> Result<Self> {
        let parsed = words.iter().map(|s| s.as_ref().parse()).collect::<Result<Vec<BitVector>>>()?;
        Code::from_words(parsed)
    }

    pub fn insert(&mut self, w: BitVector) -> Result<bool> {
        if w.len() != self.k {
            return Err(Error::LengthMismatch { expected: self.k, found: w.len() });
        }
        Ok(self.words.insert(w))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &BitVector) -> bool {
        self.words.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &BitVector> + '_ {
        self.words.iter()
    }

    pub fn words(&self) -> &BTreeSet<BitVector> {
        &self.words
    }

    pub fn is_subset(&self, other: &Code) -> bool {
        self.words.is_subset(&other.words)
    }
}

impl<'a> IntoIterator for &'a Code {
    type Item = &'a BitVector;
    type IntoIter = std::collections::btree_set::Iter<'a, BitVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

/// Codewords with positive multiplicities, as read off a finite sensor set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeMultiset {
    k: usize,
    entries: BTreeMap<BitVector, usize>,
}

impl CodeMultiset {
    pub fn empty(k: usize) -> Self {
        CodeMultiset { k, entries: BTreeMap::new() }
    }

    /// Builds a multiset from `(word, multiplicity)` pairs; repeated words add up.
    pub fn new<I: IntoIterator<Item = (BitVector, usize)>>(k: usize, entries: I) -> Result<Self> {
        let mut ms = CodeMultiset::empty(k);
        for (w, m) in entries {
            ms.add(w, m)?;
        }
        Ok(ms)
    }

    /// Counts every occurrence in a column sequence.
    pub fn from_columns<'a, I: IntoIterator<Item = &'a BitVector>>(k: usize, columns: I) -> Result<Self> {
        CodeMultiset::new(k, columns.into_iter().map(|c| (c.clone(), 1)))
    }

    pub fn add(&mut self, w: BitVector, multiplicity: usize) -> Result<()> {
        if w.len() != self.k {
            return Err(Error::LengthMismatch { expected: self.k, found: w.len() });
        }
        if multiplicity == 0 {
            return Err(Error::ZeroMultiplicity(w.to_string()));
        }
        *self.entries.entry(w).or_insert(0) += multiplicity;
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn multiplicity(&self, w: &BitVector) -> usize {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BitVector, usize)> + '_ {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    pub fn support(&self) -> Code {
        Code { k: self.k, words: self.entries.keys().cloned().collect() }
    }
}
