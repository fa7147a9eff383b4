use alloc::vec::Vec;

/// A perfect matching of `{1, ..., 2n}` in canonical form: each pair is
/// increasing and pairs are sorted by their first element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectMatching {
    pairs: Vec<(usize, usize)>,
}

impl PerfectMatching {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Every perfect matching of `{1, ..., dim}`; `(dim - 1)!!` of them.
    /// Empty for odd `dim`; the single empty matching for `dim = 0`.
    pub fn all(dim: usize) -> Vec<PerfectMatching> {
        if dim % 2 == 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(dim / 2);
        let remaining: Vec<usize> = (1..=dim).collect();
        extend(&remaining, &mut current, &mut out);
        out
    }

    /// The permutation `(s1, s2, ..., s2n)` read off the pairs.
    pub fn flattened(&self) -> Vec<usize> {
        self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    /// Sign of the flattened permutation, by inversion count.
    pub fn sign(&self) -> i32 {
        let p = self.flattened();
        let mut inversions = 0usize;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

fn extend(remaining: &[usize], current: &mut Vec<(usize, usize)>, out: &mut Vec<PerfectMatching>) {
    let Some((&first, rest)) = remaining.split_first() else {
        out.push(PerfectMatching {
            pairs: current.clone(),
        });
        return;
    };
    for t in 0..rest.len() {
        current.push((first, rest[t]));
        let left: Vec<usize> = rest
            .iter()
            .enumerate()
            .filter(|&(s, _)| s != t)
            .map(|(_, &v)| v)
            .collect();
        extend(&left, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_are_double_factorials() {
        assert_eq!(PerfectMatching::all(0).len(), 1);
        assert_eq!(PerfectMatching::all(2).len(), 1);
        assert_eq!(PerfectMatching::all(4).len(), 3);
        assert_eq!(PerfectMatching::all(6).len(), 15);
        assert_eq!(PerfectMatching::all(8).len(), 105);
        assert!(PerfectMatching::all(3).is_empty());
    }

    #[test]
    fn canonical_and_signed() {
        let all = PerfectMatching::all(4);
        let signs: Vec<(Vec<(usize, usize)>, i32)> =
            all.iter().map(|m| (m.pairs().to_vec(), m.sign())).collect();
        assert_eq!(
            signs,
            [
                (alloc::vec![(1, 2), (3, 4)], 1),
                (alloc::vec![(1, 3), (2, 4)], -1),
                (alloc::vec![(1, 4), (2, 3)], 1)
            ]
        );
        for m in PerfectMatching::all(8) {
            let mut seen: Vec<usize> = m.flattened();
            seen.sort_unstable();
            assert_eq!(seen, (1..=8).collect::<Vec<_>>());
            assert!(m.pairs().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(m.pairs().iter().all(|&(a, b)| a < b));
        }
    }
}
