//! Fixed-length binary words.
//!
//! A [`BitVector`] plays two roles: a codeword (one column of a sensor
//! matrix, one bit per neuron) and a discrete-interval row (one bit per
//! sensor). Bits are indexed from the left, so `"0110"` has bit 0 unset
//! and bits 1 and 2 set.

use std::cmp::Ordering;
use std::fmt;
use std::ops::BitAnd;
use std::str::FromStr;

use bitvec::prelude::*;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVector {
    bits: BitVec<u64, Lsb0>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector { bits: bitvec![u64, Lsb0; 0; len] }
    }

    pub fn ones(len: usize) -> Self {
        BitVector { bits: bitvec![u64, Lsb0; 1; len] }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        BitVector { bits: bits.into_iter().collect() }
    }

    /// Word of length `len` with ones exactly at the given positions.
    pub fn from_ones<I: IntoIterator<Item = usize>>(len: usize, ones: I) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.bits.set(i, value);
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter().by_vals()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    pub fn count_ones(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn count_zeros(&self) -> usize {
        self.bits.count_zeros()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.bits.first_one()
    }

    pub fn last_one(&self) -> Option<usize> {
        self.bits.last_one()
    }

    pub fn first_zero(&self) -> Option<usize> {
        self.bits.first_zero()
    }

    pub fn last_zero(&self) -> Option<usize> {
        self.bits.last_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.not_any()
    }

    pub fn is_all_ones(&self) -> bool {
        self.bits.all()
    }

    pub fn complement(&self) -> Self {
        BitVector { bits: !self.bits.clone() }
    }

    /// Positionwise XOR with `mask`. Panics on length mismatch.
    pub fn xor(&self, mask: &BitVector) -> Self {
        assert_eq!(self.len(), mask.len(), "xor of words with different lengths");
        let mut bits = self.bits.clone();
        bits ^= mask.bits.as_bitslice();
        BitVector { bits }
    }

    /// Positionwise `self <= other`, i.e. every 1 of `self` is a 1 of `other`.
    pub fn is_subset_of(&self, other: &BitVector) -> bool {
        self.len() == other.len() && self.iter_ones().all(|i| other.bits[i])
    }

    pub fn comparable(&self, other: &BitVector) -> bool {
        self.is_subset_of(other) || other.is_subset_of(self)
    }

    /// Checked positionwise AND.
    pub fn try_and(&self, other: &BitVector) -> Result<BitVector> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), found: other.len() });
        }
        Ok(self & other)
    }

    /// Sorted positions of ones; the "active neuron" list of a codeword.
    pub fn support(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }
}

impl BitAnd for &BitVector {
    type Output = BitVector;

    /// Panics on length mismatch; use [`BitVector::try_and`] for untrusted input.
    fn bitand(self, rhs: &BitVector) -> BitVector {
        assert_eq!(self.len(), rhs.len(), "and of words with different lengths");
        let mut bits = self.bits.clone();
        bits &= rhs.bits.as_bitslice();
        BitVector { bits }
    }
}

/// Lexicographic on the `0`/`1` string, so `"0011" < "0100" < "1"`-prefixed words.
impl Ord for BitVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for BitVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidBit(other)),
            })
            .collect::<Result<Vec<_>>>()
            .map(BitVector::from_bits)
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// Parse a word literal; panics on bad input. Intended for tests and examples.
pub fn bv(s: &str) -> BitVector {
    s.parse().unwrap_or_else(|e| panic!("bad word literal {s:?}: {e}"))
}
