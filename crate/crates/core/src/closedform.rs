//! Closed-form Kronecker coefficients for near-rectangular products.
//!
//! Each [`FamilyKind`] fixes a pair of shapes depending on a parameter `n`.
//! The coefficient of `s_theta` is read off a short table of branches keyed
//! on the length and last parts of `theta` plus a few of its
//! [`PartitionStats`](crate::PartitionStats). The tables only look at the first six rows of
//! `theta`; anything longer has coefficient zero.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::characters::{support_bounds, SchurExpansion};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};

/// Longest `theta` any family can pair with.
pub const MAX_SUPPORT_LENGTH: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    /// `s(n,n) * s(n,n)`
    Square,
    /// `s(n+1,n-1) * s(n,n)`
    Shifted,
    /// `s(n,n-1) * s(n,n-1)`
    NearSquare,
    /// `s(n,n-1,1) * s(n,n)`
    OneBoxRow,
    /// `s(n-1,n-1,1) * s(n,n-1)`
    OneBoxRowOdd,
    /// `s(n-1,n-1,2) * s(n,n)`
    TwoBoxRow,
    /// `s(n-1,n-1,1,1) * s(n,n)`
    TwoBoxColumn,
    /// `s(n,n,1) * s(n,n,1)`
    OneBoxSquare,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 8] = [
        FamilyKind::Square,
        FamilyKind::Shifted,
        FamilyKind::NearSquare,
        FamilyKind::OneBoxRow,
        FamilyKind::OneBoxRowOdd,
        FamilyKind::TwoBoxRow,
        FamilyKind::TwoBoxColumn,
        FamilyKind::OneBoxSquare,
    ];

    pub fn slug(self) -> &'static str {
        match self {
            FamilyKind::Square => "square",
            FamilyKind::Shifted => "shifted",
            FamilyKind::NearSquare => "near-square",
            FamilyKind::OneBoxRow => "one-box-row",
            FamilyKind::OneBoxRowOdd => "one-box-row-odd",
            FamilyKind::TwoBoxRow => "two-box-row",
            FamilyKind::TwoBoxColumn => "two-box-column",
            FamilyKind::OneBoxSquare => "one-box-square",
        }
    }

    /// The product written with `n`, e.g. `s(n,n-1,1) * s(n,n)`.
    pub fn pattern(self) -> &'static str {
        match self {
            FamilyKind::Square => "s(n,n) * s(n,n)",
            FamilyKind::Shifted => "s(n+1,n-1) * s(n,n)",
            FamilyKind::NearSquare => "s(n,n-1) * s(n,n-1)",
            FamilyKind::OneBoxRow => "s(n,n-1,1) * s(n,n)",
            FamilyKind::OneBoxRowOdd => "s(n-1,n-1,1) * s(n,n-1)",
            FamilyKind::TwoBoxRow => "s(n-1,n-1,2) * s(n,n)",
            FamilyKind::TwoBoxColumn => "s(n-1,n-1,1,1) * s(n,n)",
            FamilyKind::OneBoxSquare => "s(n,n,1) * s(n,n,1)",
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            FamilyKind::TwoBoxRow => 3,
            _ => 2,
        }
    }

    pub fn degree(self, n: usize) -> usize {
        match self {
            FamilyKind::NearSquare | FamilyKind::OneBoxRowOdd => 2 * n - 1,
            FamilyKind::OneBoxSquare => 2 * n + 1,
            _ => 2 * n,
        }
    }

    /// The `n` whose product has the given degree, if any.
    fn n_for_degree(self, degree: usize) -> Option<usize> {
        match self {
            FamilyKind::NearSquare | FamilyKind::OneBoxRowOdd => {
                (degree % 2 == 1).then_some(degree.div_ceil(2))
            }
            FamilyKind::OneBoxSquare => (degree % 2 == 1).then_some(degree / 2),
            _ => degree.is_multiple_of(2).then_some(degree / 2),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.slug() == s)
            .ok_or_else(|| Error::ParameterOutOfRange(format!("unknown family {s:?}")))
    }
}

/// A family member: the kind plus a concrete `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ProductFamily {
    pub kind: FamilyKind,
    pub n: usize,
}

/// One row of a coefficient table.
#[derive(Debug, Clone)]
pub struct Branch {
    pub label: &'static str,
    pub applies: bool,
    pub value: i64,
}

impl ProductFamily {
    pub fn new(kind: FamilyKind, n: usize) -> Result<Self> {
        if n < kind.min_n() {
            return Err(Error::ParameterOutOfRange(format!(
                "{} needs n >= {}, got {n}",
                kind.pattern(),
                kind.min_n()
            )));
        }
        Ok(ProductFamily { kind, n })
    }

    /// Recognizes `s_mu * s_nu` as a family member, in either order.
    pub fn detect(mu: &Partition, nu: &Partition) -> Option<ProductFamily> {
        FamilyKind::ALL.into_iter().find_map(|kind| {
            let n = kind.n_for_degree(mu.size())?;
            let fam = ProductFamily::new(kind, n).ok()?;
            let (a, b) = fam.shapes();
            ((&a == mu && &b == nu) || (&a == nu && &b == mu)).then_some(fam)
        })
    }

    pub fn degree(&self) -> usize {
        self.kind.degree(self.n)
    }

    /// The two shapes of the product.
    pub fn shapes(&self) -> (Partition, Partition) {
        let n = self.n;
        let p = |v: Vec<usize>| Partition::new(v).expect("family shapes are partitions");
        match self.kind {
            FamilyKind::Square => (p(vec![n, n]), p(vec![n, n])),
            FamilyKind::Shifted => (p(vec![n + 1, n - 1]), p(vec![n, n])),
            FamilyKind::NearSquare => (p(vec![n, n - 1]), p(vec![n, n - 1])),
            FamilyKind::OneBoxRow => (p(vec![n, n - 1, 1]), p(vec![n, n])),
            FamilyKind::OneBoxRowOdd => (p(vec![n - 1, n - 1, 1]), p(vec![n, n - 1])),
            FamilyKind::TwoBoxRow => (p(vec![n - 1, n - 1, 2]), p(vec![n, n])),
            FamilyKind::TwoBoxColumn => (p(vec![n - 1, n - 1, 1, 1]), p(vec![n, n])),
            FamilyKind::OneBoxSquare => (p(vec![n, n, 1]), p(vec![n, n, 1])),
        }
    }

    /// Every row of the coefficient table for `theta`, in order. Exactly one
    /// row applies whenever `theta` is in the support, and the trailing
    /// `otherwise` row is implicit.
    pub fn branches(&self, theta: &Partition) -> Vec<Branch> {
        let st = theta.stats();
        let l = theta.len();
        let t = |i: usize| theta.part(i);
        let d = st.distinct as i64;
        let d2 = st.two_removable as i64;
        let op = st.distinct_odd_parts as i64;
        let ep = st.distinct_even_parts as i64;
        let ind = |b: bool| i64::from(b);
        let choose2 = d * (d - 1) / 2;
        let in_p = theta.in_p();
        let in_q = theta.in_q();
        let tail11 = l == 6 && t(5) == 1 && t(6) == 1;
        let five_one = l == 5 && t(5) == 1;
        let five_two = l == 5 && t(5) == 2;
        let b = |label, applies, value| Branch {
            label,
            applies,
            value,
        };

        match self.kind {
            FamilyKind::Square => vec![b("l<=4, in P", l <= 4 && in_p, 1)],
            FamilyKind::Shifted => vec![b("l<=4, in Q", l <= 4 && in_q, 1)],
            FamilyKind::NearSquare => vec![b("l<=4", l <= 4, 1)],
            FamilyKind::OneBoxRow | FamilyKind::OneBoxRowOdd => {
                vec![b("l=5, t5=1", five_one, 1), b("l<=4", l <= 4, d - 1)]
            }
            FamilyKind::TwoBoxRow => vec![
                b("l=6, t5=t6=1", tail11, ind(in_p)),
                b("l=5, t5=2", five_two, ind(in_q)),
                b(
                    "l=5, t5=1, E=1",
                    five_one && st.even_parts == 1,
                    op - ind(t(4) == 1),
                ),
                b("l=5, t5=1, O=1", five_one && st.odd_parts == 1, ep),
                b("l<=4, in P", l <= 4 && in_p, 1 - d + choose2),
                b(
                    "l<=4, in Q",
                    l <= 4 && in_q,
                    1 - d + d2 + op * ep + ind(st.even_parts == 2),
                ),
            ],
            FamilyKind::TwoBoxColumn => vec![
                b("l=6, t5=t6=1", tail11, ind(in_q)),
                b("l=5, t5=2, in P", five_two && in_p, 1),
                b("l=5, t5=1, E=1", five_one && st.even_parts == 1, op),
                b(
                    "l=5, t5=1, O=1",
                    five_one && st.odd_parts == 1,
                    ep - ind(t(4) == 1),
                ),
                b(
                    "l<=4, in P",
                    l <= 4 && in_p,
                    d2 - d + choose2 + st.repeated as i64,
                ),
                b(
                    "l<=4, in Q",
                    l <= 4 && in_q,
                    1 - d + ind(ep == 2) + ind(op == 2) + op * ep,
                ),
            ],
            FamilyKind::OneBoxSquare => {
                let a2 = st.a2 as i64;
                let b1 = st.b1 as i64;
                let odd = theta.parts().iter().filter(|&&x| x % 2 == 1).count();
                vec![
                    b("l=6, t5=t6=1", tail11, 1),
                    b("l=5, t4=t5=1", five_one && t(4) == 1, 2 * d - 3 + ind(in_p)),
                    b(
                        "l=5, t4>=2, t5=1",
                        five_one && t(4) >= 2,
                        2 * d - 4 + ind(in_p),
                    ),
                    b("l=5, t5=2", five_two, 1),
                    b("l=4", l == 4, (d - 1).pow(2) + 1 - b1 + a2),
                    b(
                        "l=3, one odd part",
                        l == 3 && odd == 1,
                        (d - 1).pow(2) + 1 - b1 + a2,
                    ),
                    b(
                        "l=3, all parts odd",
                        l == 3 && odd == 3,
                        (d - 1).pow(2) - b1 + a2,
                    ),
                    b("l=2", l == 2, 2 - b1 + a2),
                    b("l=1", l == 1, 1),
                ]
            }
        }
    }

    /// Label of the first applicable branch, `None` for the zero branch.
    pub fn matched_branch(&self, theta: &Partition) -> Option<&'static str> {
        self.branches(theta)
            .into_iter()
            .find(|b| b.applies)
            .map(|b| b.label)
    }

    /// The coefficient of `s_theta` in this product.
    pub fn coefficient(&self, theta: &Partition) -> Result<BigInt> {
        if theta.size() != self.degree() {
            return Err(Error::SizeMismatch(format!(
                "{theta} has size {}, the product has degree {}",
                theta.size(),
                self.degree()
            )));
        }
        let value = self
            .branches(theta)
            .into_iter()
            .find(|b| b.applies)
            .map_or(0, |b| b.value);
        Ok(BigInt::from(value))
    }

    /// The whole product in the Schur basis.
    pub fn expand(&self) -> SchurExpansion {
        let mut out = SchurExpansion::zero(self.degree());
        for theta in partitions_of(self.degree(), Some(MAX_SUPPORT_LENGTH)) {
            let c = self.coefficient(&theta).expect("degree matches");
            out.add_term(theta, c);
        }
        out
    }
}

impl fmt::Display for ProductFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.shapes();
        write!(f, "s{a} * s{b}")
    }
}

/// `(|mu ∩ nu|, |mu ∩ nu^t|)`, the exact maxima of the first row and of the
/// length over the support of `s_mu * s_nu`.
pub fn dvir_bounds(mu: &Partition, nu: &Partition) -> Result<(usize, usize)> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch(format!(
            "{mu} and {nu} have different sizes"
        )));
    }
    Ok(support_bounds(mu, nu))
}
