use super::Partition;

/// Partitions of `n`, optionally with at most `max_length` parts, in
/// reverse-lexicographic order: `(n)` first, `(1^n)` last.
///
/// Filter by any predicate with [`Iterator::filter`], e.g.
/// `partitions_of(8, Some(4)).filter(Partition::in_p)`.
pub fn partitions_of(n: usize, max_length: Option<usize>) -> Partitions {
    Partitions::new(n, max_length.unwrap_or(n))
}

/// Iterator behind [`partitions_of`].
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
    max_length: usize,
}

impl Partitions {
    pub fn new(n: usize, max_length: usize) -> Self {
        let next = match (n, max_length) {
            (0, _) => Some(Vec::new()),
            (_, 0) => None,
            _ => Some(vec![n]),
        };
        Partitions { next, max_length }
    }

    /// Steps `parts` to its reverse-lexicographic successor among
    /// partitions with at most `max_length` parts.
    fn advance(parts: &mut Vec<usize>, max_length: usize) -> bool {
        let mut tail: usize = 0;
        for i in (0..parts.len()).rev() {
            let v = parts[i];
            if v > 1 {
                let cap = v - 1;
                let spill = tail + 1;
                if spill.div_ceil(cap) < max_length - i {
                    parts.truncate(i);
                    parts.push(cap);
                    let mut left = spill;
                    while left > 0 {
                        let take = left.min(cap);
                        parts.push(take);
                        left -= take;
                    }
                    return true;
                }
            }
            tail += v;
        }
        false
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if Self::advance(&mut succ, self.max_length) {
            self.next = Some(succ);
        }
        Some(Partition::from_sorted(current))
    }
}
