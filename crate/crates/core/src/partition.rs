//! Integer partitions and Ferrers-graph operations.
//!
//! A [`Partition`] is a non-increasing list of positive parts. The empty
//! partition is the unique partition of zero and is written `0` in text form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-increasing sequence of positive integers with its cached weight.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition", into = "RawPartition")]
pub struct Partition {
    parts: Vec<u32>,
    weight: u64,
}

#[derive(Serialize, Deserialize)]
struct RawPartition {
    parts: Vec<u32>,
}

impl TryFrom<RawPartition> for Partition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        Partition::new(raw.parts)
    }
}

impl From<Partition> for RawPartition {
    fn from(p: Partition) -> Self {
        RawPartition { parts: p.parts }
    }
}

pub(crate) fn checked_weight(values: impl IntoIterator<Item = u32>) -> Result<u64> {
    values
        .into_iter()
        .try_fold(0u64, |acc, v| acc.checked_add(u64::from(v)))
        .ok_or(Error::Overflow)
}

impl Partition {
    /// Validates and wraps `parts`. Parts must be positive and non-increasing;
    /// nothing is reordered.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for (index, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::ZeroPart { index });
            }
            if index > 0 && parts[index - 1] < p {
                return Err(Error::NotNonIncreasing {
                    index,
                    prev: parts[index - 1],
                    next: p,
                });
            }
        }
        let weight = checked_weight(parts.iter().copied())?;
        Ok(Partition { parts, weight })
    }

    /// Sorts `parts` into non-increasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.retain(|&p| p != 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// Part `i` with 1-based indexing; 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// True when every part is different from its neighbours.
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn contains_part(&self, value: u32) -> bool {
        self.parts.binary_search_by(|p| value.cmp(p)).is_ok()
    }

    /// Reads the Ferrers graph by columns.
    pub fn conjugate(&self) -> Partition {
        let cols = self.largest().unwrap_or(0) as usize;
        let mut out = Vec::with_capacity(cols);
        let mut rows = self.parts.len();
        for c in 1..=cols as u32 {
            while rows > 0 && self.parts[rows - 1] < c {
                rows -= 1;
            }
            out.push(rows as u32);
        }
        Partition {
            parts: out,
            weight: self.weight,
        }
    }

    /// Side of the largest square that fits in the Ferrers graph: the
    /// largest `i` with `parts[i] >= i`.
    pub fn durfee_side(&self) -> u32 {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .count() as u32
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses a `+`-joined list of parts. `0`, `ε` and the empty string all
/// denote the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "ε" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split('+')
            .map(|tok| {
                let tok = tok.trim();
                if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Parse(format!("bad part {tok:?} in {s:?}")));
                }
                tok.parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
