use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partitions::Partition;

/// A homogeneous symmetric function written in the Schur basis.
///
/// Only nonzero coefficients are stored, and every key has size `degree`.
/// Iteration follows the canonical partition order.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    degree: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn zero(degree: usize) -> Self {
        SchurExpansion {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The single Schur function `s_shape`.
    pub fn schur(shape: Partition) -> Self {
        let mut e = Self::zero(shape.size());
        e.terms.insert(shape, BigInt::one());
        e
    }

    /// Sum of `s_p` over the given shapes, all of size `degree`.
    pub fn indicator<I: IntoIterator<Item = Partition>>(degree: usize, shapes: I) -> Self {
        let mut e = Self::zero(degree);
        for p in shapes {
            e.add_term(p, BigInt::one());
        }
        e
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, shape: &Partition) -> BigInt {
        self.terms.get(shape).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    /// Adds `coeff * s_shape`, dropping the entry if it cancels to zero.
    ///
    /// Panics if `shape` has the wrong size.
    pub fn add_term(&mut self, shape: Partition, coeff: BigInt) {
        assert_eq!(
            shape.size(),
            self.degree,
            "term {shape} does not have degree {}",
            self.degree
        );
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(shape);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SchurExpansion, factor: &BigInt) {
        if other.is_empty() || factor.is_zero() {
            return;
        }
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c * factor);
        }
    }

    pub fn add(&mut self, other: &SchurExpansion) {
        self.add_scaled(other, &BigInt::one());
    }

    pub fn sub(&mut self, other: &SchurExpansion) {
        self.add_scaled(other, &-BigInt::one());
    }

    /// `s_(1) * self` (ordinary product), by the Pieri rule.
    pub fn times_one_box(&self) -> SchurExpansion {
        let mut out = SchurExpansion::zero(self.degree + 1);
        for (p, c) in &self.terms {
            for q in p.covers_above() {
                out.add_term(q, c.clone());
            }
        }
        out
    }

    /// The skew `self / (1)`, the adjoint of [`times_one_box`](Self::times_one_box).
    ///
    /// Panics on degree 0.
    pub fn skew_one_box(&self) -> SchurExpansion {
        assert!(self.degree > 0, "cannot remove a box from degree 0");
        let mut out = SchurExpansion::zero(self.degree - 1);
        for (p, c) in &self.terms {
            for q in p.covers_below() {
                out.add_term(q, c.clone());
            }
        }
        out
    }

    /// Applies `f` to every shape; used for the `omega` involution via
    /// [`Partition::transpose`].
    pub fn map_shapes(&self, f: impl Fn(&Partition) -> Partition) -> SchurExpansion {
        let mut out = SchurExpansion::zero(self.degree);
        for (p, c) in &self.terms {
            out.add_term(f(p), c.clone());
        }
        out
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "s{p}")?;
            } else {
                write!(f, "{c}*s{p}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[deg {}] {}", self.degree, self)
    }
}

/// Hall inner product: the Schur basis is orthonormal. Expansions of
/// different degrees are orthogonal.
pub fn hall_inner(f: &SchurExpansion, g: &SchurExpansion) -> BigInt {
    if f.degree != g.degree {
        return BigInt::zero();
    }
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    small
        .terms
        .iter()
        .filter_map(|(p, c)| large.terms.get(p).map(|d| c * d))
        .sum()
}

/// `s_mu * s_(n)` (ordinary product): every shape obtained by adding a
/// horizontal strip of `n` boxes, each with coefficient 1.
pub fn pieri_row(mu: &Partition, n: usize) -> SchurExpansion {
    let mut out = SchurExpansion::zero(mu.size() + n);
    let mut current = Vec::with_capacity(mu.len() + 1);
    grow_strip(mu.parts(), 0, n, &mut current, &mut out);
    out
}

/// `s_mu * s_(1^n)`: every shape obtained by adding a vertical strip of `n`
/// boxes.
pub fn pieri_column(mu: &Partition, n: usize) -> SchurExpansion {
    pieri_row(&mu.transpose(), n).map_shapes(Partition::transpose)
}

fn grow_strip(
    mu: &[usize],
    row: usize,
    left: usize,
    current: &mut Vec<usize>,
    out: &mut SchurExpansion,
) {
    let base = mu.get(row).copied().unwrap_or(0);
    if left == 0 {
        let mut parts = current.clone();
        parts.extend_from_slice(&mu[row.min(mu.len())..]);
        out.add_term(Partition::from_sorted(parts), BigInt::one());
        return;
    }
    if row > mu.len() {
        return;
    }
    // A horizontal strip never puts row `row` past row `row - 1` of mu.
    let ceiling = if row == 0 { base + left } else { mu[row - 1] };
    for new in base..=ceiling.min(base + left) {
        if new == 0 {
            continue;
        }
        current.push(new);
        grow_strip(mu, row + 1, left - (new - base), current, out);
        current.pop();
    }
}

/// `s_{theta/(1)}` as the sum of `s_eta` over one-box removals of `theta`.
pub fn skew_by_one(theta: &Partition) -> SchurExpansion {
    assert!(!theta.is_empty(), "skew by one box needs a nonempty shape");
    SchurExpansion::indicator(theta.size() - 1, theta.covers_below())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partitions::partitions_of;

    fn exp(degree: usize, terms: &[(Partition, i64)]) -> SchurExpansion {
        let mut e = SchurExpansion::zero(degree);
        for (p, c) in terms {
            e.add_term(p.clone(), BigInt::from(*c));
        }
        e
    }

    #[test]
    fn pieri_row_examples() {
        for n in 2..7 {
            let mu = Partition::new(vec![n, n - 1]).unwrap();
            let expected = SchurExpansion::indicator(
                2 * n,
                [
                    Partition::new(vec![n + 1, n - 1]).unwrap(),
                    Partition::new(vec![n, n]).unwrap(),
                    Partition::new(vec![n, n - 1, 1]).unwrap(),
                ],
            );
            assert_eq!(pieri_row(&mu, 1), expected);
        }
        assert_eq!(
            pieri_row(&Partition::empty(), 5),
            SchurExpansion::schur(part![5])
        );
        assert_eq!(
            pieri_row(&part![2, 1], 2),
            SchurExpansion::indicator(
                5,
                [part![4, 1], part![3, 2], part![3, 1, 1], part![2, 2, 1]]
            )
        );
    }

    #[test]
    fn pieri_column_examples() {
        // e_2 * s_1 = s_(2,1) + s_(1,1,1)
        assert_eq!(
            pieri_column(&part![1], 2),
            SchurExpansion::indicator(3, [part![2, 1], part![1, 1, 1]])
        );
        assert_eq!(
            pieri_column(&Partition::empty(), 3),
            SchurExpansion::schur(part![1, 1, 1])
        );
    }

    #[test]
    fn pieri_matches_strip_predicates() {
        for m in 0..6 {
            for mu in partitions_of(m, None) {
                for n in 1..4 {
                    let row = pieri_row(&mu, n);
                    let col = pieri_column(&mu, n);
                    for nu in partitions_of(m + n, None) {
                        let h = BigInt::from(u8::from(nu.is_horizontal_strip(&mu)));
                        let v = BigInt::from(u8::from(nu.is_vertical_strip(&mu)));
                        assert_eq!(row.coefficient(&nu), h, "{nu}/{mu} horizontal");
                        assert_eq!(col.coefficient(&nu), v, "{nu}/{mu} vertical");
                    }
                }
            }
        }
    }

    #[test]
    fn skew_by_one_examples() {
        assert_eq!(
            skew_by_one(&part![2, 2]),
            SchurExpansion::schur(part![2, 1])
        );
        assert_eq!(
            skew_by_one(&part![3, 2, 1]),
            SchurExpansion::indicator(5, [part![2, 2, 1], part![3, 1, 1], part![3, 2]])
        );
        assert_eq!(
            skew_by_one(&part![1]),
            SchurExpansion::schur(Partition::empty())
        );
    }

    #[test]
    fn inner_products() {
        let a = exp(3, &[(part![2, 1], 3)]);
        let b = exp(3, &[(part![2, 1], 2)]);
        assert_eq!(hall_inner(&a, &b), BigInt::from(6));
        let c = exp(3, &[(part![3], 5)]);
        assert_eq!(hall_inner(&a, &c), BigInt::zero());
        assert_eq!(hall_inner(&a, &exp(4, &[(part![4], 1)])), BigInt::zero());
        // <s_theta/(1), sum over all eta of degree |theta|-1 with l <= 4> = d_theta
        for theta in partitions_of(9, Some(4)) {
            let all = SchurExpansion::indicator(8, partitions_of(8, Some(4)));
            assert_eq!(
                hall_inner(&all, &skew_by_one(&theta)),
                BigInt::from(theta.distinct_parts())
            );
        }
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut a = exp(2, &[(part![2], 1), (part![1, 1], 2)]);
        a.sub(&exp(2, &[(part![2], 1)]));
        assert_eq!(a.len(), 1);
        assert_eq!(a.coefficient(&part![2]), BigInt::zero());
        assert_eq!(a.to_string(), "2*s(1,1)");
    }

    #[test]
    fn one_box_adjointness() {
        let f = exp(4, &[(part![3, 1], 2), (part![2, 1, 1], -1)]);
        for g in partitions_of(5, None) {
            let g = SchurExpansion::schur(g);
            assert_eq!(
                hall_inner(&f.times_one_box(), &g),
                hall_inner(&f, &g.skew_one_box())
            );
        }
    }
}
