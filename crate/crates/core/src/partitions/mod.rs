//! Integer partitions and the statistics the coefficient formulas read.

mod iter;
mod stats;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use iter::{partitions_of, Partitions};
pub use stats::PartitionStats;

/// A weakly decreasing list of positive integers.
///
/// The empty partition is the unique partition of 0. Partitions are ordered
/// by size first and then reverse-lexicographically, so `(4) < (3,1) < (2,2)`.
/// This is the order [`partitions_of`] yields and the order every
/// [`SchurExpansion`](crate::SchurExpansion) iterates in.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Canonicalizes `parts`: trailing zeros are stripped, anything else out of
    /// order is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::MalformedPartition(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        if parts.contains(&0) {
            return Err(Error::MalformedPartition(
                "zero parts are only allowed as a trailing tail".into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// Like [`Partition::new`] but accepts signed input, rejecting negatives.
    pub fn from_raw(raw: &[i64]) -> Result<Self> {
        let parts = raw
            .iter()
            .map(|&p| {
                usize::try_from(p)
                    .map_err(|_| Error::MalformedPartition(format!("negative part {p}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    /// Builds a partition from parts already known to be canonical.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last() != Some(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 1-indexed, or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "parts are 1-indexed");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Smallest part, 0 for the empty partition.
    pub fn last_part(&self) -> usize {
        self.parts.last().copied().unwrap_or(0)
    }

    /// Column lengths of the Ferrers diagram.
    pub fn transpose(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let cols = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts: cols }
    }

    /// Diagram intersection with top-left corners aligned.
    pub fn intersect(&self, other: &Partition) -> Partition {
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Partition { parts }
    }

    /// Whether the diagram of `inner` fits inside this one.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Whether `self / inner` has no two boxes in one column. False when
    /// `inner` is not contained in `self`.
    pub fn is_horizontal_strip(&self, inner: &Partition) -> bool {
        self.contains(inner) && (1..self.len()).all(|i| self.part(i + 1) <= inner.part(i))
    }

    /// Whether `self / inner` has no two boxes in one row. False when
    /// `inner` is not contained in `self`.
    pub fn is_vertical_strip(&self, inner: &Partition) -> bool {
        self.contains(inner) && (1..=self.len()).all(|i| self.part(i) - inner.part(i) <= 1)
    }

    /// All partitions obtained by removing one box. One per distinct part,
    /// taken from the last row holding that value, in canonical order.
    pub fn covers_below(&self) -> Vec<Partition> {
        let l = self.len();
        (0..l)
            .rev()
            .filter(|&i| i + 1 == l || self.parts[i] > self.parts[i + 1])
            .map(|i| {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                Partition { parts }
            })
            .collect()
    }

    /// All partitions obtained by adding one box, in canonical order.
    pub fn covers_above(&self) -> Vec<Partition> {
        let l = self.len();
        (0..=l)
            .filter(|&i| i == 0 || self.parts[i - 1] > self.part(i + 1))
            .map(|i| {
                let mut parts = self.parts.clone();
                if i == l {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                Partition { parts }
            })
            .collect()
    }

    /// Number of distinct part values.
    pub fn distinct_parts(&self) -> usize {
        self.parts.windows(2).filter(|w| w[0] != w[1]).count() + usize::from(!self.is_empty())
    }

    /// The first four parts (the whole partition when it has at most four).
    pub fn head4(&self) -> Partition {
        Partition {
            parts: self.parts.iter().take(4).copied().collect(),
        }
    }

    /// Membership in `P`, judged on the first four parts: either every part
    /// is even, or there are exactly four parts and all are odd.
    pub fn in_p(&self) -> bool {
        let head = &self.parts[..self.len().min(4)];
        head.iter().all(|p| p % 2 == 0) || (head.len() == 4 && head.iter().all(|p| p % 2 == 1))
    }

    /// Membership in `Q`, judged on the first four parts: exactly two are odd.
    pub fn in_q(&self) -> bool {
        self.parts.iter().take(4).filter(|&&p| p % 2 == 1).count() == 2
    }

    pub fn hook_grid(&self) -> HookGrid {
        let t = self.transpose();
        let rows = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| row - j + t.parts[j] - i - 1).collect())
            .collect();
        HookGrid { rows }
    }

    /// Number of standard Young tableaux of this shape, by the hook-length
    /// formula.
    pub fn syt_count(&self) -> BigInt {
        let hooks: BigUint = self
            .hook_grid()
            .rows
            .iter()
            .flatten()
            .map(|&h| BigUint::from(h))
            .product();
        BigInt::from(factorial(self.size()) / hooks)
    }

    pub fn stats(&self) -> PartitionStats {
        PartitionStats::of(self)
    }
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Hook lengths laid out in the shape of the diagram, one row per part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HookGrid {
    pub rows: Vec<Vec<usize>>,
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `4,3,1`, optionally wrapped in parentheses. `0`, `()` and the empty
/// string all denote the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let raw = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::MalformedPartition(format!("cannot parse part {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_raw(&raw)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Shorthand for literal partitions in tests and examples. Panics on
/// malformed input.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p),+]).expect("malformed partition literal")
    };
}
