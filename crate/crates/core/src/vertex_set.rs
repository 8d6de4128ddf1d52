//! Vertex subsets packed into a single machine word.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub};

use serde::{Deserialize, Serialize};

/// Largest order a [`VertexSet`] can address.
pub const MAX_ORDER: usize = 64;

/// A set of vertex ids `< 64`, stored as a bit field.
///
/// A `VertexSet` carries no graph; callers keep ids below the order of the
/// graph they are working with. Complement therefore takes the order
/// explicitly.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, ..., n-1}`.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & VertexSet::full(n).0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Least member, if any.
    #[inline]
    pub const fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Greatest member, if any.
    #[inline]
    pub const fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the ascending member lists.
    pub fn lex_cmp(self, other: Self) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// Size first, then lexicographic. This is the canonical output order for
    /// every enumeration in the crate.
    pub fn size_lex_cmp(self, other: Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.lex_cmp(other))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(ids: [usize; N]) -> Self {
        ids.into_iter().collect()
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.to_vec()
    }
}

impl TryFrom<Vec<usize>> for VertexSet {
    type Error = String;

    fn try_from(ids: Vec<usize>) -> Result<Self, Self::Error> {
        if let Some(&bad) = ids.iter().find(|&&v| v >= MAX_ORDER) {
            return Err(format!("vertex id {bad} does not fit in a vertex set"));
        }
        Ok(ids.into_iter().collect())
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// All `k`-subsets of `{0, ..., n-1}` in lexicographic order of their sorted
/// member lists.
pub fn combinations(n: usize, k: usize) -> Combinations {
    Combinations {
        n,
        idx: if k <= n { Some((0..k).collect()) } else { None },
    }
}

pub struct Combinations {
    n: usize,
    idx: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let idx = self.idx.as_mut()?;
        let out: VertexSet = idx.iter().copied().collect();
        let k = idx.len();
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                self.idx = None;
                break;
            }
            i -= 1;
            if idx[i] < self.n - k + i {
                idx[i] += 1;
                for t in i + 1..k {
                    idx[t] = idx[t - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
