use serde::Serialize;

use super::Partition;

/// Every statistic of a partition that appears in the coefficient formulas.
///
/// Parity counts (`odd_parts` and friends) are taken over the first four
/// parts only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionStats {
    /// Number of distinct part values.
    pub distinct: usize,
    /// Number of distinct values whose last occurrence can lose 2 and leave
    /// a partition (after dropping a trailing zero).
    pub two_removable: usize,
    /// Number of distinct values occurring at least twice.
    pub repeated: usize,
    pub odd_parts: usize,
    pub even_parts: usize,
    pub distinct_odd_parts: usize,
    pub distinct_even_parts: usize,
    /// Difference string over {0,1,2}, length `len + 1`. Position `i >= 1`
    /// encodes `min(parts[i] - parts[i+1], 2)` (with a zero appended past
    /// the end); position 0 repeats position 1. Empty for the empty partition.
    pub sigma: Vec<u8>,
    /// Positions with digit 1 preceded by 0.
    pub a1: usize,
    /// Positions with digit 2 preceded by 0.
    pub a2: usize,
    /// Positions with digit 1 preceded by a nonzero digit.
    pub b1: usize,
    /// Positions with digit 2 preceded by a nonzero digit.
    pub b2: usize,
}

impl PartitionStats {
    pub fn of(p: &Partition) -> Self {
        let parts = p.parts();
        let l = parts.len();
        let next = |i: usize| parts.get(i + 1).copied().unwrap_or(0);

        // Indices of the last occurrence of each distinct value.
        let ends: Vec<usize> = (0..l).filter(|&i| parts[i] > next(i)).collect();
        let two_removable = ends
            .iter()
            .filter(|&&i| parts[i] >= 2 && parts[i] - 2 >= next(i))
            .count();
        let mut repeated = 0;
        let mut start = 0;
        for &end in &ends {
            if end > start {
                repeated += 1;
            }
            start = end + 1;
        }

        let head = &parts[..l.min(4)];
        let odd_parts = head.iter().filter(|&&x| x % 2 == 1).count();
        let even_parts = head.len() - odd_parts;
        let head_ends = (0..head.len()).filter(|&i| i + 1 == head.len() || head[i] != head[i + 1]);
        let distinct_odd_parts = head_ends.clone().filter(|&i| head[i] % 2 == 1).count();
        let distinct_even_parts = head_ends.count() - distinct_odd_parts;

        let mut sigma = Vec::with_capacity(l + 1);
        if l > 0 {
            let digits: Vec<u8> = (0..l).map(|i| (parts[i] - next(i)).min(2) as u8).collect();
            sigma.push(digits[0]);
            sigma.extend(digits);
        }
        let (mut a1, mut a2, mut b1, mut b2) = (0, 0, 0, 0);
        for w in sigma.windows(2) {
            match (w[0] == 0, w[1]) {
                (true, 1) => a1 += 1,
                (true, 2) => a2 += 1,
                (false, 1) => b1 += 1,
                (false, 2) => b2 += 1,
                _ => {}
            }
        }

        PartitionStats {
            distinct: ends.len(),
            two_removable,
            repeated,
            odd_parts,
            even_parts,
            distinct_odd_parts,
            distinct_even_parts,
            sigma,
            a1,
            a2,
            b1,
            b2,
        }
    }

    pub fn sigma_string(&self) -> String {
        self.sigma.iter().map(|d| char::from(b'0' + d)).collect()
    }
}

#[cfg(test)]
mod tests {
    use crate::part;

    #[test]
    fn distinct_repeated_and_two_removable() {
        let s = part![6, 5, 3, 3, 3, 2, 2].stats();
        assert_eq!((s.distinct, s.repeated, s.two_removable), (4, 2, 2));
        let s = part![7, 5, 2, 2].stats();
        assert_eq!((s.distinct, s.two_removable), (3, 3));
        assert_eq!(
            (s.distinct_odd_parts, s.distinct_even_parts, s.even_parts),
            (2, 1, 2)
        );
    }

    #[test]
    fn parity_counts_use_first_four_parts() {
        let s = part![4, 4, 3, 2, 1].stats();
        assert_eq!(s.even_parts, 3);
        assert_eq!(s.distinct_even_parts, 2);
        assert_eq!((s.odd_parts, s.distinct_odd_parts), (1, 1));
        let s = part![6, 4, 3, 2, 1].stats();
        assert_eq!((s.odd_parts, s.distinct_even_parts), (1, 3));
    }

    #[test]
    fn sigma_strings() {
        let s = part![8, 6, 2, 1].stats();
        assert_eq!(s.sigma_string(), "22211");
        assert_eq!((s.a2, s.b1), (0, 2));
        let s = part![7, 5, 5].stats();
        assert_eq!(s.sigma_string(), "2202");
        assert_eq!((s.a2, s.b1), (1, 0));
        let s = crate::Partition::empty().stats();
        assert_eq!(s.sigma_string(), "");
        assert_eq!((s.a1, s.a2, s.b1, s.b2, s.distinct), (0, 0, 0, 0, 0));
    }
}
