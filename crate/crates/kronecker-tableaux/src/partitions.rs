//! Partitions, compositions and the small amount of arithmetic on them that the
//! rest of the crate needs.
//!
//! Rows are 1-indexed throughout. Parts past the stored length read as zero,
//! which is what makes [`Partition::partial_sum`] and [`minmax`] total.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// ```
    /// use kronecker_tableaux::Partition;
    /// let p = Partition::new(vec![4, 2, 0]).unwrap();
    /// assert_eq!(p.parts(), &[4, 2]);
    /// assert!(Partition::new(vec![1, 2]).is_err());
    /// ```
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub(crate) fn from_vec_unchecked(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts, written ℓ(λ).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part, 1-indexed; zero past the end and for `i = 0`.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.0.get(i - 1).copied().unwrap_or(0)
        }
    }

    /// `[λ]_a = λ_1 + ... + λ_a`, with `[λ]_0 = 0`.
    ///
    /// ```
    /// use kronecker_tableaux::Partition;
    /// let p: Partition = "4,2".parse().unwrap();
    /// assert_eq!((p.partial_sum(0), p.partial_sum(1), p.partial_sum(5)), (0, 4, 6));
    /// ```
    pub fn partial_sum(&self, a: usize) -> usize {
        self.0.iter().take(a).sum()
    }

    /// True when `other ⊆ self` row by row.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    /// Adds a box at the end of `row`. Row 0 means "add nothing".
    pub fn add_box(&self, row: usize) -> Option<Partition> {
        if row == 0 {
            return Some(self.clone());
        }
        if row > self.len() + 1 || (row > 1 && self.part(row - 1) <= self.part(row)) {
            return None;
        }
        let mut v = self.0.clone();
        if row == v.len() + 1 {
            v.push(1);
        } else {
            v[row - 1] += 1;
        }
        Some(Partition(v))
    }

    /// Removes the last box of `row`. Row 0 means "remove nothing".
    pub fn remove_box(&self, row: usize) -> Option<Partition> {
        if row == 0 {
            return Some(self.clone());
        }
        if self.part(row) == 0 || self.part(row + 1) >= self.part(row) {
            return None;
        }
        let mut v = self.0.clone();
        v[row - 1] -= 1;
        if v[row - 1] == 0 {
            v.pop();
        }
        Some(Partition(v))
    }

    /// Rows that admit an added box, in increasing order.
    pub fn addable_rows(&self) -> Vec<usize> {
        (1..=self.len() + 1).filter(|&r| r == 1 || self.part(r - 1) > self.part(r)).collect()
    }

    /// Rows that admit a removed box, in increasing order.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&r| self.part(r) > self.part(r + 1)).collect()
    }

    /// Pointwise minimum.
    pub fn intersect(&self, other: &Partition) -> Partition {
        Partition::from_vec_unchecked(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// `λ_[n] = (n − |λ|, λ_1, λ_2, ...)`.
    ///
    /// ```
    /// use kronecker_tableaux::Partition;
    /// let p: Partition = "2,1".parse().unwrap();
    /// assert_eq!(p.pad(7).unwrap().parts(), &[4, 2, 1]);
    /// assert!(p.pad(4).is_err());
    /// ```
    pub fn pad(&self, n: usize) -> Result<Partition> {
        let size = self.size();
        if n < size || n - size < self.part(1) {
            return Err(Error::NotAPartition(format!("{self} padded to {n}")));
        }
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(n - size);
        v.extend_from_slice(&self.0);
        Ok(Partition::from_vec_unchecked(v))
    }

    /// Drops the first row; the inverse of [`Partition::pad`].
    pub fn strip_first(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let w = self.part(1);
        Partition((1..=w).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
    let t = s.trim();
    let t = match t.chars().next() {
        Some(open @ ('[' | '(')) => {
            let close = if open == '[' { ']' } else { ')' };
            t[1..].strip_suffix(close).ok_or_else(|| err("unbalanced bracket"))?
        }
        _ => t,
    };
    let t = t.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(|x| x.trim().parse::<usize>().map_err(|e| err(&e.to_string()))).collect()
}

/// Accepts `6,2`, `[6,2]`, `(6,2)`, `0` and `[]`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        Partition::new(parts).map_err(|e| Error::Parse { input: s.to_string(), reason: e.to_string() })
    }
}

/// An arbitrary finite sequence of non-negative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Self {
        Composition(parts.into())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.0.get(i - 1).copied().unwrap_or(0)
        }
    }

    pub fn partial_sum(&self, a: usize) -> usize {
        self.0.iter().take(a).sum()
    }

    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.0.clone())
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_parts(s).map(Composition)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `outer ⊖ inner`, with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::ShapeMismatch(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// No two boxes of the skew share a column.
    pub fn is_horizontal(&self) -> bool {
        (2..=self.outer.len()).all(|i| {
            let row_empty = self.outer.part(i) <= self.inner.part(i);
            row_empty || self.inner.part(i - 1) >= self.outer.part(i)
        })
    }
}

/// `λ ⊖ (λ ∩ ν)` is horizontal and so on; convenience wrapper.
pub fn is_horizontal(outer: &Partition, inner: &Partition) -> bool {
    SkewShape::new(outer.clone(), inner.clone()).map(|s| s.is_horizontal()).unwrap_or(false)
}

/// Size-graded dominance: smaller partitions dominate larger ones, and
/// partitions of equal size compare by partial sums.
pub fn dominates(lambda: &Partition, mu: &Partition) -> bool {
    match lambda.size().cmp(&mu.size()) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => {
            let l = lambda.len().max(mu.len());
            (1..=l).all(|a| lambda.partial_sum(a) >= mu.partial_sum(a))
        }
    }
}

/// `(|λ ⊖ (λ∩ν)|, |ν ⊖ (λ∩ν)|)`.
pub fn skew_diff_size(lambda: &Partition, nu: &Partition) -> (usize, usize) {
    let common = lambda.intersect(nu).size();
    (lambda.size() - common, nu.size() - common)
}

/// The smallest admissible degree for a path from λ to ν,
/// `max(|λ ⊖ (λ∩ν)|, |ν ⊖ (λ∩ν)|)`.
pub fn min_degree(lambda: &Partition, nu: &Partition) -> usize {
    let (a, b) = skew_diff_size(lambda, nu);
    a.max(b)
}

/// Whether `lo ≤ s ≤ |λ| + |ν|` for the lower bound [`min_degree`]; outside
/// this window the stable coefficient vanishes.
pub fn within_bounds(lambda: &Partition, nu: &Partition, s: usize) -> bool {
    min_degree(lambda, nu) <= s && s <= lambda.size() + nu.size()
}

/// `min over i ≥ 2 of min(λ_{i−1}, ν_{i−1}) − max(λ_i, ν_i)`; `None` when both
/// partitions have at most one row.
///
/// ```
/// use kronecker_tableaux::{minmax, Partition};
/// let l: Partition = "6,2".parse().unwrap();
/// let n: Partition = "7,4".parse().unwrap();
/// assert_eq!(minmax(&l, &n), Some(2));
/// ```
pub fn minmax(lambda: &Partition, nu: &Partition) -> Option<i64> {
    let len = lambda.len().max(nu.len());
    (2..=len)
        .map(|i| {
            let a = lambda.part(i - 1).min(nu.part(i - 1)) as i64;
            let b = lambda.part(i).max(nu.part(i)) as i64;
            a - b
        })
        .min()
}

/// The co-Pieri condition on `(λ, ν, s)`.
pub fn is_copieri(lambda: &Partition, nu: &Partition, s: usize) -> bool {
    if s == 1 {
        return true;
    }
    match minmax(lambda, nu) {
        None => true,
        Some(m) => (s as i64) <= min_degree(lambda, nu) as i64 + m,
    }
}

/// `λ ⊆ ν` and `|ν| = |λ| + s`.
pub fn is_maximal_depth(lambda: &Partition, nu: &Partition, s: usize) -> bool {
    nu.contains(lambda) && nu.size() == lambda.size() + s
}

/// All partitions of `k`, optionally with at most `max_len` rows, in reverse
/// lexicographic order.
///
/// ```
/// use kronecker_tableaux::partitions_of;
/// let ps: Vec<String> = partitions_of(4, None).iter().map(|p| p.to_string()).collect();
/// assert_eq!(ps, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
/// ```
pub fn partitions_of(k: usize, max_len: Option<usize>) -> Vec<Partition> {
    fn go(rem: usize, cap: usize, len_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if len_left == 0 {
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            cur.push(p);
            go(rem - p, p, len_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, max_len.unwrap_or(usize::MAX), &mut Vec::new(), &mut out);
    out
}

/// Partitions of every size `0..=k`.
pub fn partitions_up_to(k: usize) -> Vec<Partition> {
    (0..=k).flat_map(|m| partitions_of(m, None)).collect()
}
