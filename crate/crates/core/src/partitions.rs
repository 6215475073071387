//! Integer partitions in canonical (weakly decreasing) form.
//!
//! Two orders live on [`Partition`]. The derived `Ord` is the plain
//! lexicographic order on the part sequence and is only used for sets and
//! maps. The order that matters for graph indexing is *decreasing*
//! lexicographic order, exposed through [`Partition::lex_compare`] and
//! [`decreasing_lex`]: `(n)` comes first and `(1^n)` comes last.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of a positive integer, stored as its row lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

/// Structural predicates of a partition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ShapeFlags {
    pub is_hook: bool,
    pub is_two_part: bool,
    pub is_rectangular: bool,
    pub is_staircase: bool,
    pub is_self_conjugate: bool,
}

impl Partition {
    /// Builds a partition from parts that are already in canonical form.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let canonical = !parts.is_empty() && parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if canonical {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Sorts and strips zeros; fails only if nothing positive remains.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    /// Caller guarantees canonical form.
    pub(crate) fn from_canonical(parts: Vec<u32>) -> Self {
        debug_assert!(!parts.is_empty() && parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    /// The one-row partition `(n)`.
    pub fn single_row(n: u32) -> Result<Self> {
        check_positive(n)?;
        Ok(Partition(vec![n]))
    }

    /// The one-column partition `(1^n)`.
    pub fn single_column(n: u32) -> Result<Self> {
        check_positive(n)?;
        Ok(Partition(vec![1; n as usize]))
    }

    /// The hook `(n-k, 1^k)` for `0 <= k <= n-1`.
    pub fn hook(n: u32, k: u32) -> Result<Self> {
        check_positive(n)?;
        if k >= n {
            return Err(Error::InvalidPartition(vec![n.wrapping_sub(k)]));
        }
        let mut parts = Vec::with_capacity(k as usize + 1);
        parts.push(n - k);
        parts.extend(std::iter::repeat_n(1, k as usize));
        Ok(Partition(parts))
    }

    /// The staircase `(t, t-1, ..., 1)`, a partition of `t(t+1)/2`.
    pub fn staircase(t: u32) -> Result<Self> {
        check_positive(t)?;
        Ok(Partition((1..=t).rev().collect()))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// The integer being partitioned.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest part, `λ₁`.
    pub fn first_part(&self) -> u32 {
        self.0[0]
    }

    /// Transpose of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let first = self.first_part();
        let mut out = Vec::with_capacity(first as usize);
        // parts are sorted, so the count of parts >= k is a prefix length
        let mut rows = self.0.len();
        for k in 1..=first {
            while rows > 0 && self.0[rows - 1] < k {
                rows -= 1;
            }
            out.push(rows as u32);
        }
        Partition(out)
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.first_part() as usize == self.len() && self.conjugate() == *self
    }

    /// Compares two partitions of the same integer in decreasing
    /// lexicographic order: `Less` means `self` precedes `other`.
    pub fn lex_compare(&self, other: &Partition) -> Result<Ordering> {
        let (left, right) = (self.size(), other.size());
        if left != right {
            return Err(Error::MismatchedSize { left, right });
        }
        Ok(decreasing_lex(self, other))
    }

    pub fn shape(&self) -> ShapeFlags {
        let p = &self.0;
        let is_hook = p[1..].iter().all(|&x| x == 1);
        let is_rectangular = p.iter().all(|&x| x == p[0]);
        let is_staircase = p.last() == Some(&1) && p.windows(2).all(|w| w[0] == w[1] + 1);
        ShapeFlags {
            is_hook,
            is_two_part: p.len() == 2,
            is_rectangular,
            is_staircase,
            is_self_conjugate: self.is_self_conjugate(),
        }
    }
}

/// Decreasing lexicographic order on part sequences. For partitions of the
/// same integer neither sequence can be a proper prefix of the other, so
/// this is a strict total order there.
pub fn decreasing_lex(a: &Partition, b: &Partition) -> Ordering {
    b.0.cmp(&a.0)
}

fn check_positive(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::NonPositive(0))
    } else {
        Ok(())
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    check_positive(n)?;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n as usize);
    fill(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    /// Dotted form, e.g. `4.2.1.1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason| Error::Parse { input: s.to_string(), reason };
        if s.is_empty() {
            return Err(err("empty input"));
        }
        let mut parts = Vec::new();
        for field in s.split('.') {
            if field.is_empty() || !field.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("parts must be decimal digits separated by '.'"));
            }
            if field.len() > 1 && field.starts_with('0') {
                return Err(err("leading zeros are not canonical"));
            }
            let part: u32 = field.parse().map_err(|_| err("part out of range"))?;
            parts.push(part);
        }
        Partition::new(parts).map_err(|_| err("parts must be positive and weakly decreasing"))
    }
}
