use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{z_of, CharacterCache, SchurExpansion};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};

/// Largest degree the oracle accepts unless configured otherwise.
pub const DEFAULT_MAX_DEGREE: usize = 22;

/// Environment variable overriding [`DEFAULT_MAX_DEGREE`] in [`Oracle::from_env`].
pub const MAX_DEGREE_ENV: &str = "NEARRECT_ORACLE_MAX_DEGREE";

/// Ground-truth Kronecker coefficients from the character inner product
///
/// ```text
/// g(mu, nu, theta) = sum over rho |- n of chi_mu(rho) chi_nu(rho) chi_theta(rho) / z_rho
/// ```
///
/// accumulated in exact rationals. Shares one [`CharacterCache`] across calls.
#[derive(Debug)]
pub struct Oracle {
    cache: CharacterCache,
    max_degree: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new()
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self::with_max_degree(DEFAULT_MAX_DEGREE)
    }

    pub fn with_max_degree(max_degree: usize) -> Self {
        Oracle {
            cache: CharacterCache::new(),
            max_degree,
        }
    }

    /// Reads the cap from `NEARRECT_ORACLE_MAX_DEGREE`, falling back to the
    /// default when unset. An unparsable value is an error.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_DEGREE_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(Self::with_max_degree)
                .map_err(|_| Error::ParameterOutOfRange(format!("{MAX_DEGREE_ENV}={v:?}"))),
            Err(_) => Ok(Self::new()),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn cache(&self) -> &CharacterCache {
        &self.cache
    }

    pub fn character(&self, shape: &Partition, cycle_type: &Partition) -> Result<BigInt> {
        self.check_degree(shape.size())?;
        self.cache.character(shape, cycle_type)
    }

    fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.max_degree {
            Err(Error::DegreeCapExceeded {
                degree,
                cap: self.max_degree,
            })
        } else {
            Ok(())
        }
    }

    fn same_size(&self, shapes: &[&Partition]) -> Result<usize> {
        let n = shapes[0].size();
        if let Some(bad) = shapes.iter().find(|p| p.size() != n) {
            return Err(Error::SizeMismatch(format!(
                "{} has size {n} but {bad} has size {}",
                shapes[0],
                bad.size()
            )));
        }
        self.check_degree(n)?;
        Ok(n)
    }

    /// Precomputes `chi_mu(rho) chi_nu(rho) / z_rho` for every class `rho`.
    fn weighted_product(&self, mu: &Partition, nu: &Partition) -> Vec<(Partition, BigRational)> {
        partitions_of(mu.size(), None)
            .map(|rho| {
                let num = self.cache.lookup(mu, rho.parts()) * self.cache.lookup(nu, rho.parts());
                let w = BigRational::new(num, z_of(&rho));
                (rho, w)
            })
            .collect()
    }

    fn pair_with(&self, weights: &[(Partition, BigRational)], theta: &Partition) -> Result<BigInt> {
        let mut acc = BigRational::zero();
        for (rho, w) in weights {
            if w.is_zero() {
                continue;
            }
            let chi = self.cache.lookup(theta, rho.parts());
            acc += w * BigRational::from_integer(chi);
        }
        if !acc.is_integer() || acc.is_negative() {
            return Err(Error::InternalNonInteger(acc.to_string()));
        }
        Ok(acc.to_integer())
    }

    /// The Kronecker coefficient of `s_theta` in `s_mu * s_nu`.
    pub fn kron_coefficient(
        &self,
        mu: &Partition,
        nu: &Partition,
        theta: &Partition,
    ) -> Result<BigInt> {
        self.same_size(&[mu, nu, theta])?;
        let weights = self.weighted_product(mu, nu);
        self.pair_with(&weights, theta)
    }

    /// Full expansion of `s_mu * s_nu`. Shapes outside the first-row and
    /// length bounds `|mu ∩ nu|` and `|mu ∩ nu^t|` are skipped without
    /// evaluation.
    pub fn kron_product(&self, mu: &Partition, nu: &Partition) -> Result<SchurExpansion> {
        let (max_first, max_len) = support_bounds(mu, nu);
        self.kron_product_filtered(mu, nu, Some(max_len), |theta| theta.part(1) <= max_first)
    }

    /// Like [`kron_product`](Self::kron_product) but evaluates every shape of
    /// the degree, so the support bounds can be checked rather than assumed.
    pub fn kron_product_unpruned(&self, mu: &Partition, nu: &Partition) -> Result<SchurExpansion> {
        self.kron_product_filtered(mu, nu, None, |_| true)
    }

    fn kron_product_filtered(
        &self,
        mu: &Partition,
        nu: &Partition,
        max_len: Option<usize>,
        keep: impl Fn(&Partition) -> bool,
    ) -> Result<SchurExpansion> {
        let n = self.same_size(&[mu, nu])?;
        let weights = self.weighted_product(mu, nu);
        let mut out = SchurExpansion::zero(n);
        for theta in partitions_of(n, max_len).filter(|t| keep(t)) {
            let g = self.pair_with(&weights, &theta)?;
            out.add_term(theta, g);
        }
        Ok(out)
    }

    /// Bilinear extension of the Kronecker product to Schur expansions.
    pub fn kron_expansions(
        &self,
        f: &SchurExpansion,
        g: &SchurExpansion,
    ) -> Result<SchurExpansion> {
        if f.degree() != g.degree() {
            return Err(Error::SizeMismatch(format!(
                "Kronecker product of degrees {} and {}",
                f.degree(),
                g.degree()
            )));
        }
        let mut out = SchurExpansion::zero(f.degree());
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                out.add_scaled(&self.kron_product(a, b)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Checks the one-box case of Littlewood's identity
    ///
    /// ```text
    /// (s_alpha s_(1)) * s_gamma = sum over eta ≺ gamma of (s_eta * s_alpha) s_(1)
    /// ```
    ///
    /// with both sides expanded by the oracle.
    pub fn verify_littlewood_one_box(&self, alpha: &Partition, gamma: &Partition) -> Result<bool> {
        if alpha.size() + 1 != gamma.size() {
            return Err(Error::SizeMismatch(format!(
                "|{alpha}| + 1 must equal |{gamma}|"
            )));
        }
        let lhs = self.kron_expansions(
            &SchurExpansion::schur(alpha.clone()).times_one_box(),
            &SchurExpansion::schur(gamma.clone()),
        )?;
        let mut rhs = SchurExpansion::zero(gamma.size());
        for eta in gamma.covers_below() {
            rhs.add(&self.kron_product(&eta, alpha)?.times_one_box());
        }
        Ok(lhs == rhs)
    }

    /// Right-hand side of the one-box reduction for `s_(n+k, n-k-1, 1) * s_(n,n)`:
    ///
    /// ```text
    /// sum_{j=0..k} (-1)^(k+j) <s_(n+j,n-j) * s_(n,n), s_(1) s_{theta/(1)}>
    ///     - <(s_(n+k+1,n-k-1) + s_(n+k,n-k)) * s_(n,n), s_theta>
    /// ```
    ///
    /// Kronecker products come from the oracle, `s_(1)` products and skews
    /// from the Pieri rule.
    pub fn one_box_reduction_rhs(&self, n: usize, k: usize, theta: &Partition) -> Result<BigInt> {
        self.check_reduction_args(n, k, theta)?;
        let probe = SchurExpansion::schur(theta.clone())
            .skew_one_box()
            .times_one_box();
        self.one_box_alternating(n, k, theta, |prod| super::hall_inner(prod, &probe))
    }

    /// The same right-hand side with the first pairing written as
    /// `<s_(1) (s_(n+j,n-j) * s_(n,n)), s_(1) s_theta>`. This variant is NOT
    /// an identity: it overshoots by `sum_j (-1)^(k+j) g(theta; (n+j,n-j), (n,n))`.
    /// Kept so the discrepancy stays checkable.
    pub fn one_box_reduction_literal(
        &self,
        n: usize,
        k: usize,
        theta: &Partition,
    ) -> Result<BigInt> {
        self.check_reduction_args(n, k, theta)?;
        let probe = SchurExpansion::schur(theta.clone()).times_one_box();
        self.one_box_alternating(n, k, theta, |prod| {
            super::hall_inner(&prod.times_one_box(), &probe)
        })
    }

    fn one_box_alternating(
        &self,
        n: usize,
        k: usize,
        theta: &Partition,
        pair: impl Fn(&SchurExpansion) -> BigInt,
    ) -> Result<BigInt> {
        let rect = two_row(n, n)?;
        let mut first = BigInt::zero();
        for j in 0..=k {
            let term = pair(&self.kron_product(&two_row(n + j, n - j)?, &rect)?);
            if (k + j).is_multiple_of(2) {
                first += term;
            } else {
                first -= term;
            }
        }
        let a = self.kron_coefficient(&two_row(n + k + 1, n - k - 1)?, &rect, theta)?;
        let b = self.kron_coefficient(&two_row(n + k, n - k)?, &rect, theta)?;
        Ok(first - a - b)
    }

    /// Left-hand side: the oracle coefficient of `s_theta` in
    /// `s_(n+k, n-k-1, 1) * s_(n,n)`.
    pub fn one_box_reduction_lhs(&self, n: usize, k: usize, theta: &Partition) -> Result<BigInt> {
        self.check_reduction_args(n, k, theta)?;
        let hook = Partition::new(vec![n + k, n - k - 1, 1])?;
        self.kron_coefficient(&hook, &two_row(n, n)?, theta)
    }

    /// Whether the one-box reduction ([`one_box_reduction_rhs`](Self::one_box_reduction_rhs))
    /// reproduces the oracle coefficient at `(n, k, theta)`.
    pub fn verify_one_box_reduction(&self, n: usize, k: usize, theta: &Partition) -> Result<bool> {
        Ok(self.one_box_reduction_lhs(n, k, theta)? == self.one_box_reduction_rhs(n, k, theta)?)
    }

    fn check_reduction_args(&self, n: usize, k: usize, theta: &Partition) -> Result<()> {
        if n < k + 2 {
            return Err(Error::ParameterOutOfRange(format!(
                "need n >= k + 2, got n={n}, k={k}"
            )));
        }
        if theta.size() != 2 * n {
            return Err(Error::SizeMismatch(format!(
                "{theta} must have size {}",
                2 * n
            )));
        }
        self.check_degree(2 * n + 1)
    }
}

fn two_row(a: usize, b: usize) -> Result<Partition> {
    Partition::new(vec![a, b])
}

/// `(|mu ∩ nu|, |mu ∩ nu^t|)`: the largest first row and the largest length
/// among shapes in the support of `s_mu * s_nu`.
pub fn support_bounds(mu: &Partition, nu: &Partition) -> (usize, usize) {
    (
        mu.intersect(nu).size(),
        mu.intersect(&nu.transpose()).size(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn delta_rules_and_small_values() {
        let o = Oracle::new();
        assert_eq!(
            o.kron_coefficient(&part![2, 2], &part![2, 2], &part![4])
                .unwrap(),
            int(1)
        );
        assert_eq!(
            o.kron_coefficient(&part![2, 2], &part![3, 1], &part![4])
                .unwrap(),
            int(0)
        );
        assert_eq!(
            o.kron_coefficient(&part![2, 2], &part![2, 2], &part![2, 2])
                .unwrap(),
            int(1)
        );
    }

    #[test]
    fn small_products() {
        let o = Oracle::new();
        assert_eq!(
            o.kron_product(&part![2, 2], &part![2, 2]).unwrap(),
            SchurExpansion::indicator(4, [part![4], part![2, 2], part![1, 1, 1, 1]])
        );
        assert_eq!(
            o.kron_product(&part![3, 1], &part![2, 2]).unwrap(),
            SchurExpansion::indicator(4, [part![3, 1], part![2, 1, 1]])
        );
        assert_eq!(
            o.kron_product(&part![1], &part![1]).unwrap(),
            SchurExpansion::schur(part![1])
        );
        assert_eq!(
            o.kron_product(&Partition::empty(), &Partition::empty())
                .unwrap(),
            SchurExpansion::schur(Partition::empty())
        );
    }

    #[test]
    fn errors() {
        let o = Oracle::with_max_degree(6);
        assert!(matches!(
            o.kron_coefficient(&part![3], &part![2, 2], &part![4]),
            Err(Error::SizeMismatch(_))
        ));
        assert!(matches!(
            o.kron_product(&part![7], &part![7]),
            Err(Error::DegreeCapExceeded { degree: 7, cap: 6 })
        ));
    }

    #[test]
    fn littlewood_examples() {
        let o = Oracle::new();
        assert!(o
            .verify_littlewood_one_box(&part![2, 1], &part![2, 2])
            .unwrap());
        assert!(o
            .verify_littlewood_one_box(&part![3], &part![3, 1])
            .unwrap());
        assert!(o.verify_littlewood_one_box(&part![1], &part![2]).unwrap());
        assert!(o
            .verify_littlewood_one_box(&Partition::empty(), &part![1])
            .unwrap());
        assert!(o.verify_littlewood_one_box(&part![2], &part![2]).is_err());
    }

    #[test]
    fn one_box_reduction_examples() {
        let o = Oracle::new();
        assert!(o.verify_one_box_reduction(3, 1, &part![3, 2, 1]).unwrap());
        assert!(o.verify_one_box_reduction(4, 1, &part![4, 4]).unwrap());
        assert!(o.verify_one_box_reduction(3, 1, &part![6]).unwrap());
        assert!(o.verify_one_box_reduction(2, 1, &part![2, 2]).is_err());
        assert!(o.verify_one_box_reduction(3, 1, &part![2, 2]).is_err());
    }

    #[test]
    fn literal_pairing_overshoots_by_rectangle_terms() {
        let o = Oracle::new();
        let rect = part![3, 3];
        let mut mismatches = 0;
        for theta in partitions_of(6, None) {
            let lhs = o.one_box_reduction_lhs(3, 1, &theta).unwrap();
            let literal = o.one_box_reduction_literal(3, 1, &theta).unwrap();
            let excess = o.kron_coefficient(&part![4, 2], &rect, &theta).unwrap()
                - o.kron_coefficient(&rect, &rect, &theta).unwrap();
            assert_eq!(literal - &lhs, excess, "{theta}");
            mismatches += usize::from(!excess.is_zero());
        }
        assert_eq!(mismatches, 9);
    }

    #[test]
    fn bounds() {
        for n in 2..9 {
            let mu = Partition::new(vec![n, n - 1, 1]).unwrap();
            let nu = Partition::new(vec![n, n]).unwrap();
            assert!(support_bounds(&mu, &nu).1 <= 5);
            assert_eq!(support_bounds(&nu, &nu).1, 4);
            assert_eq!(
                support_bounds(&Partition::row(n), &Partition::row(n)),
                (n, 1)
            );
        }
    }
}
