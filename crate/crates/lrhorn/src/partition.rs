//! Partitions, strict partitions, and the rectangle/staircase ambient shapes.
//!
//! Partitions are stored normalized (weakly decreasing, no trailing zeros),
//! so equality is structural. The textual syntax used everywhere (CLI flags,
//! JSON) is comma-separated parts, e.g. `"8,6,5,4,3,1"`; the empty string or
//! `"0"` denotes the empty partition. Trailing zeros are accepted on input
//! and stripped on output.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A weakly decreasing sequence of nonnegative integers, normalized with no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from a part sequence, stripping trailing zeros.
    /// Rejects sequences that are not weakly decreasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let mut parts = parts.into();
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The i-th part (0-indexed); zero beyond the last nonzero part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|, the number of boxes of the diagram.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Diagram containment: other_i ≤ self_i for all i.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// True iff the diagram fits in the rectangle: at most `rect.rows()`
    /// nonzero parts and first part at most `rect.cols()`.
    pub fn fits_in(&self, rect: Rectangle) -> bool {
        self.len() <= rect.rows() as usize && self.part(0) <= rect.cols()
    }

    /// The conjugate partition λ^t, interchanging rows and columns of the
    /// diagram. An involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols {
            let count = self.parts.iter().filter(|&&p| p as usize >= j).count();
            parts.push(count as u32);
        }
        Partition { parts }
    }

    /// The complement of λ inside `rect`: the boxes of the rectangle not in
    /// λ when λ is drawn in the upper-right corner, read as a partition.
    /// An involution on partitions inside `rect`, with
    /// |λ| + |λ^c| = rows·cols.
    pub fn complement_in(&self, rect: Rectangle) -> Result<Partition, Error> {
        if !self.fits_in(rect) {
            return Err(Error::NotContained {
                partition: self.to_string(),
                shape: rect.to_string(),
            });
        }
        let n = rect.rows() as usize;
        let parts: Vec<u32> = (0..n).map(|i| rect.cols() - self.part(n - 1 - i)).collect();
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in trimmed.split(',') {
            let token = token.trim();
            let value: u32 = token.parse().map_err(|e| Error::ParsePartition {
                input: s.to_string(),
                reason: format!("bad part {token:?}: {e}"),
            })?;
            parts.push(value);
        }
        Partition::new(parts).map_err(|_| Error::ParsePartition {
            input: s.to_string(),
            reason: "parts must be weakly decreasing".to_string(),
        })
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// A strictly decreasing sequence of positive integers. Also a valid
/// [`Partition`]; the embedding is lossless.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrictPartition {
    inner: Partition,
}

impl StrictPartition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, Error> {
        Self::from_partition(Partition::new(parts)?)
    }

    pub fn from_partition(p: Partition) -> Result<Self, Error> {
        // Positivity is automatic after normalization; only strictness can fail.
        if !p.parts().windows(2).all(|w| w[0] > w[1]) {
            return Err(Error::NotStrict(p.parts().to_vec()));
        }
        Ok(StrictPartition { inner: p })
    }

    pub fn empty() -> Self {
        StrictPartition {
            inner: Partition::empty(),
        }
    }

    pub fn as_partition(&self) -> &Partition {
        &self.inner
    }

    pub fn parts(&self) -> &[u32] {
        self.inner.parts()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.inner.part(i)
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.inner.weight()
    }

    /// True iff λ ⊂ Λ_n, which for strict partitions means λ_1 ≤ n.
    pub fn fits_in(&self, stair: Staircase) -> bool {
        self.part(0) <= stair.side()
    }

    /// The complement of λ inside the staircase Λ_n: the strict partition
    /// whose part set is {1..n} minus the part set of λ. An involution, with
    /// |λ| + |λ^c| = n(n+1)/2.
    pub fn complement_in(&self, stair: Staircase) -> Result<StrictPartition, Error> {
        if !self.fits_in(stair) {
            return Err(Error::NotContained {
                partition: self.inner.to_string(),
                shape: stair.to_string(),
            });
        }
        let parts: Vec<u32> = (1..=stair.side())
            .rev()
            .filter(|v| !self.parts().contains(v))
            .collect();
        StrictPartition::new(parts)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        StrictPartition::from_partition(s.parse()?)
    }
}

impl From<StrictPartition> for Partition {
    fn from(s: StrictPartition) -> Partition {
        s.inner
    }
}

impl Serialize for StrictPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.inner.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StrictPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        StrictPartition::from_partition(Partition::deserialize(deserializer)?)
            .map_err(D::Error::custom)
    }
}

/// An n×m rectangle of boxes, n rows and m columns, both positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rectangle {
    rows: u32,
    cols: u32,
}

impl Rectangle {
    pub fn new(rows: u32, cols: u32) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyShape);
        }
        Ok(Rectangle { rows, cols })
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    pub fn area(&self) -> u64 {
        u64::from(self.rows) * u64::from(self.cols)
    }

    /// The full rectangle as a partition: n parts of size m.
    pub fn full(&self) -> Partition {
        Partition {
            parts: vec![self.cols; self.rows as usize],
        }
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// The staircase Λ_n with row lengths n, n−1, …, 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Staircase {
    side: u32,
}

impl Staircase {
    pub fn new(side: u32) -> Result<Self, Error> {
        if side == 0 {
            return Err(Error::EmptyShape);
        }
        Ok(Staircase { side })
    }

    pub fn side(&self) -> u32 {
        self.side
    }

    /// n(n+1)/2, the number of boxes of Λ_n.
    pub fn weight(&self) -> u64 {
        u64::from(self.side) * (u64::from(self.side) + 1) / 2
    }

    pub fn full(&self) -> StrictPartition {
        StrictPartition {
            inner: Partition {
                parts: (1..=self.side).rev().collect(),
            },
        }
    }
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "staircase-{}", self.side)
    }
}

/// binomial(n, k) with checked arithmetic; 0 when k > n.
pub fn binomial(n: u64, k: u64) -> Result<u64, Error> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul(n - i)
            .ok_or(Error::Overflow)?
            .checked_div(i + 1)
            .ok_or(Error::Overflow)?;
        // Division is exact here because acc runs over binomial prefixes.
    }
    Ok(acc)
}

/// Iterator over all partitions contained in a rectangle, in lexicographic
/// ascending order on zero-padded part sequences (empty first, full
/// rectangle last). Yields binomial(n+m, n) partitions.
pub fn enumerate_partitions(rect: Rectangle) -> RectPartitions {
    RectPartitions {
        cols: rect.cols(),
        current: Some(vec![0; rect.rows() as usize]),
    }
}

pub struct RectPartitions {
    cols: u32,
    current: Option<Vec<u32>>,
}

impl Iterator for RectPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let padded = self.current.take()?;
        let item = Partition::new(padded.clone()).expect("enumeration keeps parts decreasing");
        // Lexicographic successor: bump the last part that can grow, zero the tail.
        let mut next = padded;
        for i in (0..next.len()).rev() {
            let limit = if i == 0 { self.cols } else { next[i - 1].min(self.cols) };
            if next[i] < limit {
                next[i] += 1;
                for later in next[i + 1..].iter_mut() {
                    *later = 0;
                }
                self.current = Some(next);
                return Some(item);
            }
        }
        Some(item)
    }
}

/// Iterator over all strict partitions contained in the staircase Λ_n, in
/// lexicographic ascending order on part sequences. Strict partitions in
/// Λ_n are in bijection with subsets of {1..n}, so this yields 2^n items.
pub fn enumerate_strict(stair: Staircase) -> StrictPartitions {
    assert!(stair.side() < 63, "staircase side too large to enumerate");
    StrictPartitions {
        side: stair.side(),
        next_mask: Some(0),
    }
}

pub struct StrictPartitions {
    side: u32,
    next_mask: Option<u64>,
}

impl Iterator for StrictPartitions {
    type Item = StrictPartition;

    fn next(&mut self) -> Option<StrictPartition> {
        let mask = self.next_mask?;
        // Bit v-1 of the mask selects part v; high bits dominate, so mask
        // order is lexicographic order on the part sequences.
        let parts: Vec<u32> = (1..=self.side)
            .rev()
            .filter(|v| mask & (1u64 << (v - 1)) != 0)
            .collect();
        self.next_mask = if mask + 1 < (1u64 << self.side) {
            Some(mask + 1)
        } else {
            None
        };
        Some(StrictPartition::new(parts).expect("mask subsets are strictly decreasing"))
    }
}
