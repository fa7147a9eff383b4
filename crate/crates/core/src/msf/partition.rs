use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A nonincreasing list of positive parts.
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(alloc::format!(
                "{parts:?} is not a nonincreasing list of positive parts"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `λ_i`, one-based, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        i.checked_sub(1)
            .and_then(|k| self.parts.get(k))
            .copied()
            .unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        let parts = (1..=first)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// All parts even.
    pub fn is_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// `I_n(λ) = {λ_n + 1, λ_{n-1} + 2, ..., λ_1 + n}`.
    pub fn index_set(&self, n: usize) -> Result<ColumnSelection> {
        if self.len() > n {
            return Err(Error::PartitionTooLong { len: self.len(), n });
        }
        Ok(ColumnSelection {
            indices: (1..=n).map(|k| self.part(n + 1 - k) as usize + k).collect(),
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Strictly increasing positive column indices.
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColumnSelection {
    indices: Vec<usize>,
}

impl ColumnSelection {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.first() == Some(&0) || indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::ShapeMismatch(alloc::format!(
                "{indices:?} is not a strictly increasing set of positive indices"
            )));
        }
        Ok(ColumnSelection { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn zero_based(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i - 1).collect()
    }
}

/// Partitions with at most `max_len` parts, each at most `max_part`, in
/// graded lexicographic order: by size, then lexicographically decreasing.
pub fn partitions_in_box(max_part: u32, max_len: usize) -> Vec<Partition> {
    fn go(max_part: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: cur.clone() });
        if left == 0 {
            return;
        }
        for p in 1..=max_part {
            cur.push(p);
            go(p, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_part, max_len, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.parts.cmp(&a.parts)));
    out
}

/// Even partitions `λ` with even conjugate, `ℓ(λ) <= 2n` and `λ_1 <= 2n - 2`.
///
/// An even first part larger than that is at least `2n` and selects column
/// `λ_1 + 2n > 4n - 1`, past the band of `H(2n)`, so the minor vanishes.
pub fn enumerate_even_even(n: usize) -> Vec<Partition> {
    let max_part = (2 * n).saturating_sub(2) as u32;
    partitions_in_box(max_part, 2 * n)
        .into_iter()
        .filter(|l| l.is_even() && l.conjugate().is_even())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 3, 1, 1]).conjugate(), p(&[4, 2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn index_sets() {
        assert_eq!(
            p(&[3, 3, 1, 1]).index_set(4).unwrap().indices(),
            &[2, 3, 6, 7]
        );
        assert_eq!(
            Partition::empty().index_set(3).unwrap().indices(),
            &[1, 2, 3]
        );
        assert_eq!(p(&[2, 2]).index_set(2).unwrap().indices(), &[3, 4]);
        assert!(p(&[1, 1, 1]).index_set(2).is_err());
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
    }

    #[test]
    fn even_even_small() {
        assert_eq!(enumerate_even_even(1), vec![Partition::empty()]);
        assert_eq!(
            enumerate_even_even(2),
            vec![Partition::empty(), p(&[2, 2]), p(&[2, 2, 2, 2])]
        );
        assert!(!enumerate_even_even(3).contains(&p(&[4, 2])));
    }

    #[test]
    fn box_count() {
        // C(a + b, a) partitions fit in an a x b box
        assert_eq!(partitions_in_box(3, 4).len(), 35);
    }
}
