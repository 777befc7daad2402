//! Index calculus for the splitting of iterated shifted tangent bundles.
//!
//! A [`MultiIndex`] is a strictly increasing list of positive integers drawn
//! from `{1, ..., ambient}`. Components of an iterated tangent family are
//! indexed by these. The operations here are the push/pull shifts and the two
//! swap moves used by the reconstruction algorithm in [`crate::tangent`]. Where
//! an operation would produce something that is not a strictly increasing
//! positive index it returns `None`; that absence stands for the zero component.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A strictly increasing multi-index `I ⊆ {1, ..., ambient}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    entries: Vec<usize>,
    ambient: usize,
}

impl MultiIndex {
    pub fn new(entries: Vec<usize>, ambient: usize) -> Result<Self, Error> {
        if entries.iter().any(|&e| e == 0 || e > ambient) {
            return Err(Error::InvalidArgument(format!(
                "multi-index {entries:?} leaves the range 1..={ambient}"
            )));
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(format!(
                "multi-index {entries:?} is not strictly increasing"
            )));
        }
        Ok(Self { entries, ambient })
    }

    /// The empty index in ambient `k`.
    pub fn empty(ambient: usize) -> Self {
        Self { entries: Vec::new(), ambient }
    }

    /// The full index `(1, ..., k)`.
    pub fn full(ambient: usize) -> Self {
        Self { entries: (1..=ambient).collect(), ambient }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.entries.len() == self.ambient
    }

    pub fn contains(&self, value: isize) -> bool {
        value >= 1 && self.entries.binary_search(&(value as usize)).is_ok()
    }

    /// Same entries viewed in a different ambient range.
    pub fn with_ambient(&self, ambient: usize) -> Result<Self, Error> {
        Self::new(self.entries.clone(), ambient)
    }

    /// Every entry strictly greater than `i` moves up by one; the ambient grows by one.
    pub fn push(&self, i: isize) -> MultiIndex {
        let entries = self
            .entries
            .iter()
            .map(|&e| if e as isize > i { e + 1 } else { e })
            .collect();
        MultiIndex { entries, ambient: self.ambient + 1 }
    }

    /// Every entry strictly greater than `i` moves down by one; the ambient
    /// shrinks by one. `None` when two entries collide or an entry would
    /// leave the positive range.
    pub fn pull(&self, i: isize) -> Option<MultiIndex> {
        let entries: Vec<usize> = self
            .entries
            .iter()
            .map(|&e| if e as isize > i { e - 1 } else { e })
            .collect();
        if entries.first() == Some(&0) || entries.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        Some(MultiIndex { entries, ambient: self.ambient.saturating_sub(1) })
    }

    /// Replace entry `i` by `i + 1`, defined when `i ∈ J` and `i + 1 ∉ J`.
    pub fn raise_swap(&self, i: isize) -> Option<MultiIndex> {
        if !self.contains(i) || self.contains(i + 1) || i as usize + 1 > self.ambient {
            return None;
        }
        let entries = self
            .entries
            .iter()
            .map(|&e| if e as isize == i { e + 1 } else { e })
            .collect();
        Some(MultiIndex { entries, ambient: self.ambient })
    }

    /// Replace entry `i + 1` by `i`, defined when `i + 1 ∈ J`, `i ∉ J` and `i ≥ 1`.
    pub fn lower_swap(&self, i: isize) -> Option<MultiIndex> {
        if i < 1 || !self.contains(i + 1) || self.contains(i) {
            return None;
        }
        let entries = self
            .entries
            .iter()
            .map(|&e| if e as isize == i + 1 { e - 1 } else { e })
            .collect();
        Some(MultiIndex { entries, ambient: self.ambient })
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entries.iter().join(","))
    }
}

impl Serialize for MultiIndex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

/// Deserializes the bare entry array; the ambient is taken as the largest
/// entry and must be fixed by the caller with [`MultiIndex::with_ambient`].
impl<'de> Deserialize<'de> for MultiIndex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let entries = Vec::<usize>::deserialize(d)?;
        let ambient = entries.last().copied().unwrap_or(0);
        MultiIndex::new(entries, ambient).map_err(serde::de::Error::custom)
    }
}

/// All `m`-element subsets of `{1, ..., k}` in lexicographic order.
pub fn subsets(k: usize, m: usize) -> Result<Vec<MultiIndex>, Error> {
    if m > k {
        return Err(Error::InvalidArgument(format!("subset size {m} exceeds ambient {k}")));
    }
    Ok((1..=k)
        .combinations(m)
        .map(|entries| MultiIndex { entries, ambient: k })
        .collect())
}

/// Signed-argument front end for [`subsets`], rejecting negative inputs.
pub fn subsets_checked(k: i64, m: i64) -> Result<Vec<MultiIndex>, Error> {
    if k < 0 || m < 0 {
        return Err(Error::InvalidArgument(format!("negative subset parameters k={k}, m={m}")));
    }
    subsets(k as usize, m as usize)
}

/// All subsets of `{1, ..., k}`, grouped by size and lexicographic within a size.
pub fn all_subsets(k: usize) -> Vec<MultiIndex> {
    (0..=k).flat_map(|m| subsets(k, m).expect("m <= k")).collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(e: &[usize], k: usize) -> MultiIndex {
        MultiIndex::new(e.to_vec(), k).unwrap()
    }

    #[test]
    fn push_examples() {
        let i = mi(&[2, 3, 5, 7], 7);
        assert_eq!(i.push(3).entries(), &[2, 3, 6, 8]);
        assert_eq!(i.push(4).entries(), &[2, 3, 6, 8]);
        assert_eq!(i.push(-1).entries(), &[3, 4, 6, 8]);
        assert_eq!(i.push(10).entries(), &[2, 3, 5, 7]);
        assert_eq!(i.push(3).ambient(), 8);
    }

    #[test]
    fn pull_examples() {
        let j = mi(&[2, 3, 6, 8], 8);
        assert_eq!(j.pull(2), None);
        assert_eq!(j.pull(3).unwrap().entries(), &[2, 3, 5, 7]);
        assert_eq!(j.pull(4).unwrap().entries(), &[2, 3, 5, 7]);
    }

    #[test]
    fn pull_out_of_positive_range_is_absent() {
        assert_eq!(mi(&[1, 3], 3).pull(0), None);
        assert_eq!(mi(&[2, 3], 3).pull(0).unwrap().entries(), &[1, 2]);
    }

    #[test]
    fn swap_examples() {
        assert_eq!(mi(&[2, 5], 5).raise_swap(2).unwrap().entries(), &[3, 5]);
        assert_eq!(mi(&[2, 3], 5).raise_swap(2), None);
        assert_eq!(mi(&[2, 5], 5).raise_swap(4), None);
        assert_eq!(mi(&[3, 5], 5).lower_swap(2).unwrap().entries(), &[2, 5]);
        assert_eq!(mi(&[1, 5], 5).lower_swap(0), None);
        assert_eq!(mi(&[2, 3], 5).lower_swap(2), None);
    }

    #[test]
    fn subset_examples() {
        let s = subsets(3, 2).unwrap();
        let e: Vec<_> = s.iter().map(|m| m.entries().to_vec()).collect();
        assert_eq!(e, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(4, 0).unwrap(), vec![MultiIndex::empty(4)]);
        assert_eq!(subsets(5, 2).unwrap().len(), 10);
        assert!(subsets(2, 3).is_err());
        assert!(subsets_checked(-1, 0).is_err());
        assert!(subsets_checked(3, -2).is_err());
    }

    #[test]
    fn construction_rejects_bad_entries() {
        assert!(MultiIndex::new(vec![2, 2], 3).is_err());
        assert!(MultiIndex::new(vec![0, 1], 3).is_err());
        assert!(MultiIndex::new(vec![1, 4], 3).is_err());
    }

    #[test]
    fn serializes_as_plain_array() {
        let s = serde_json::to_string(&mi(&[2, 3, 5, 7], 7)).unwrap();
        assert_eq!(s, "[2,3,5,7]");
        let back: MultiIndex = serde_json::from_str(&s).unwrap();
        assert_eq!(back.entries(), &[2, 3, 5, 7]);
    }
}
