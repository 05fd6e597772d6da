//! Counts of standard Young tableaux with bounded height.
//!
//! `tau(k, n)` is the number of SYT of size `n` with at most `k` rows, and
//! `sigma(k, n)` weights each shape by its number of distinct parts. Brute
//! paths always sum [`Partition::syt_count`] over [`partitions_of`], so they
//! stay independent of the closed forms.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{factorial, partitions_of, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Brute,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SigmaMethod {
    Brute,
    /// `tau_k(n+1) - tau_{k-1}(n)`, both sides brute.
    TauDifference,
    /// Catalan/Motzkin form, `k = 4` only.
    Closed,
}

pub fn catalan(i: usize) -> BigInt {
    binomial(BigInt::from(2 * i), BigInt::from(i)) / (i + 1)
}

/// Motzkin numbers as `sum_i C(n, 2i) C_i`.
pub fn motzkin(n: usize) -> BigInt {
    (0..=n / 2)
        .map(|i| binomial(BigInt::from(n), BigInt::from(2 * i)) * catalan(i))
        .sum()
}

fn unavailable(what: &str) -> Error {
    Error::ClosedFormUnavailable(what.to_string())
}

/// Number of SYT of size `n` with at most `k` rows.
pub fn tau(k: usize, n: usize, method: Method) -> Result<BigInt> {
    match method {
        Method::Brute => Ok(partitions_of(n, Some(k)).map(|p| p.syt_count()).sum()),
        Method::Closed => match k {
            2 => Ok(binomial(BigInt::from(n), BigInt::from(n / 2))),
            3 => Ok(motzkin(n)),
            4 => Ok(catalan(n.div_ceil(2)) * catalan((n + 1).div_ceil(2))),
            5 => tau5_closed(n),
            _ => Err(unavailable(&format!("no closed form for tau with k = {k}"))),
        },
    }
}

fn tau5_closed(n: usize) -> Result<BigInt> {
    let mut sum = BigRational::zero();
    for i in 0..=n / 2 {
        let num = binomial(BigInt::from(n), BigInt::from(2 * i))
            * catalan(i)
            * BigInt::from(factorial(2 * i + 2));
        let den = BigInt::from(factorial(i + 2) * factorial(i + 3));
        sum += BigRational::new(num, den);
    }
    integral(sum * BigInt::from(6), "tau_5")
}

fn integral(x: BigRational, what: &str) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::InternalNonInteger(format!(
            "{what} evaluated to {x}"
        )))
    }
}

/// `sum d_lambda f_lambda` over shapes of size `n` with at most `k` rows.
pub fn sigma(k: usize, n: usize, method: SigmaMethod) -> Result<BigInt> {
    match method {
        SigmaMethod::Brute => Ok(partitions_of(n, Some(k))
            .map(|p| p.syt_count() * p.distinct_parts())
            .sum()),
        SigmaMethod::TauDifference => {
            if k == 0 {
                return Ok(BigInt::zero());
            }
            Ok(tau(k, n + 1, Method::Brute)? - tau(k - 1, n, Method::Brute)?)
        }
        SigmaMethod::Closed => {
            if k != 4 {
                return Err(unavailable(&format!(
                    "no closed form for sigma with k = {k}"
                )));
            }
            Ok(catalan(n / 2 + 1) * catalan(n.div_ceil(2) + 1) - motzkin(n))
        }
    }
}

/// Number of SYT of size `k` whose shape has exactly five rows and last
/// row of length 1.
pub fn height5_smallpart1_sum(k: usize, method: Method) -> Result<BigInt> {
    if k < 3 {
        return Err(Error::ParameterOutOfRange(format!("needs k >= 3, got {k}")));
    }
    match method {
        Method::Brute => Ok(rho(4, 1, k)),
        Method::Closed => {
            let lo = k.div_ceil(2);
            let hi = (k + 1).div_ceil(2);
            let lead = BigRational::new(BigInt::from(lo * (hi + 1)), BigInt::from(k + 1))
                * (catalan(lo) * catalan(hi));
            let rest = motzkin(k) - catalan(k / 2 + 1) * catalan(k.div_ceil(2) + 1);
            integral(lead + rest, "five-row sum")
        }
    }
}

/// `sum f_lambda` over shapes of size `n` with exactly `k + 1` rows and last
/// row of length `i`.
pub fn rho(k: usize, i: usize, n: usize) -> BigInt {
    partitions_of(n, Some(k + 1))
        .filter(|p| p.len() == k + 1 && p.last_part() == i)
        .map(|p| p.syt_count())
        .sum()
}

/// SYT counts of the near-rectangular shapes, from their closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearRectangleCounts {
    /// `f(n,n)`
    pub square: BigInt,
    /// `f(n,n-1)`
    pub near_square: BigInt,
    /// `f(n,n-1,1)`
    pub one_box_row: BigInt,
    /// `f(n-1,n-1,1)`
    pub one_box_row_odd: BigInt,
}

impl NearRectangleCounts {
    pub fn closed(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::ParameterOutOfRange(format!("needs n >= 2, got {n}")));
        }
        let c = catalan(n);
        let one_box_row = BigRational::new(
            BigInt::from((n - 1) * (n + 1)) * catalan(n + 1),
            BigInt::from(2 * n + 1),
        );
        let one_box_row_odd = BigRational::new(BigInt::from(n - 1) * &c, BigInt::from(2));
        Ok(NearRectangleCounts {
            square: c.clone(),
            near_square: c,
            one_box_row: integral(one_box_row, "f(n,n-1,1)")?,
            one_box_row_odd: integral(one_box_row_odd, "f(n-1,n-1,1)")?,
        })
    }

    /// The same counts by the hook-length formula.
    pub fn hook_length(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::ParameterOutOfRange(format!("needs n >= 2, got {n}")));
        }
        let f = |v: Vec<usize>| Partition::new(v).expect("valid shape").syt_count();
        Ok(NearRectangleCounts {
            square: f(vec![n, n]),
            near_square: f(vec![n, n - 1]),
            one_box_row: f(vec![n, n - 1, 1]),
            one_box_row_odd: f(vec![n - 1, n - 1, 1]),
        })
    }
}

/// Checks the two dimension identities
///
/// * `sum_{l<=4} (d-1) f + sum_{five rows, last 1} f = f(n,n-1,1) f(n,n)` over size `2n`,
/// * the same left side over size `2n-1` against `f(n-1,n-1,1) f(n,n-1)`,
///
/// with every term computed by brute force.
pub fn verify_character_identities(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::ParameterOutOfRange(format!("needs n >= 2, got {n}")));
    }
    let lhs = |m: usize| -> BigInt {
        let short: BigInt = partitions_of(m, Some(4))
            .map(|p| p.syt_count() * (p.distinct_parts() as i64 - 1))
            .sum();
        short + rho(4, 1, m)
    };
    let dims = NearRectangleCounts::hook_length(n)?;
    let even = lhs(2 * n) == &dims.one_box_row * &dims.square;
    let odd = lhs(2 * n - 1) == &dims.one_box_row_odd * &dims.near_square;
    Ok(even && odd)
}

/// Number of involutions of `n`, by `I(n) = I(n-1) + (n-1) I(n-2)`.
pub fn involutions(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for m in 2..=n {
        let next = &b + &a * (m - 1);
        a = std::mem::replace(&mut b, next);
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn catalan_and_motzkin() {
        assert_eq!(catalan(0), big(1));
        assert_eq!(catalan(3), big(5));
        assert_eq!(catalan(4), big(14));
        assert_eq!(motzkin(0), big(1));
        assert_eq!(motzkin(5), big(21));
        assert_eq!(motzkin(5), tau(3, 5, Method::Brute).unwrap());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(2, 4, Method::Brute).unwrap(), big(6));
        assert_eq!(tau(4, 5, Method::Closed).unwrap(), big(25));
        assert_eq!(tau(4, 5, Method::Brute).unwrap(), big(25));
        for k in 0..7 {
            assert_eq!(tau(k, 0, Method::Brute).unwrap(), big(1));
        }
        assert!(matches!(
            tau(6, 3, Method::Closed),
            Err(Error::ClosedFormUnavailable(_))
        ));
        assert!(tau(1, 3, Method::Closed).is_err());
    }

    #[test]
    fn tau_closed_matches_brute() {
        for k in 2..=5 {
            for n in 0..=14 {
                assert_eq!(
                    tau(k, n, Method::Closed).unwrap(),
                    tau(k, n, Method::Brute).unwrap(),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(4, 2, SigmaMethod::Brute).unwrap(), big(2));
        assert_eq!(sigma(4, 2, SigmaMethod::Closed).unwrap(), big(2));
        assert_eq!(sigma(4, 2, SigmaMethod::TauDifference).unwrap(), big(2));
        for k in 0..5 {
            assert_eq!(sigma(k, 0, SigmaMethod::Brute).unwrap(), big(0));
        }
        assert!(sigma(3, 2, SigmaMethod::Closed).is_err());
    }

    #[test]
    fn five_row_sums() {
        assert_eq!(height5_smallpart1_sum(3, Method::Brute).unwrap(), big(0));
        assert_eq!(height5_smallpart1_sum(5, Method::Brute).unwrap(), big(1));
        assert_eq!(height5_smallpart1_sum(5, Method::Closed).unwrap(), big(1));
        for k in 3..12 {
            assert_eq!(
                height5_smallpart1_sum(k, Method::Closed).unwrap(),
                height5_smallpart1_sum(k, Method::Brute).unwrap(),
                "k={k}"
            );
        }
        assert!(matches!(
            height5_smallpart1_sum(2, Method::Brute),
            Err(Error::ParameterOutOfRange(_))
        ));
    }

    #[test]
    fn rho_examples() {
        for n in 1..8 {
            assert_eq!(rho(0, n, n), big(1));
        }
        assert_eq!(rho(1, 2, 5), big(5));
        assert_eq!(rho(4, 1, 6), big(5));
    }

    #[test]
    fn near_rectangle_counts() {
        let c = NearRectangleCounts::closed(2).unwrap();
        assert_eq!(c.square, big(2));
        assert_eq!(c.one_box_row_odd, big(1));
        assert_eq!(NearRectangleCounts::closed(3).unwrap().one_box_row, big(16));
        for n in 2..15 {
            assert_eq!(
                NearRectangleCounts::closed(n).unwrap(),
                NearRectangleCounts::hook_length(n).unwrap()
            );
        }
        assert!(NearRectangleCounts::closed(1).is_err());
    }

    #[test]
    fn dimension_identities() {
        for n in [2, 3, 4, 10] {
            assert!(verify_character_identities(n).unwrap(), "n={n}");
        }
        assert!(verify_character_identities(1).is_err());
    }

    #[test]
    fn involution_recurrence() {
        let first: Vec<BigInt> = (0..8).map(involutions).collect();
        let expected: Vec<BigInt> = [1, 1, 2, 4, 10, 26, 76, 232].map(big).to_vec();
        assert_eq!(first, expected);
    }
}
