//! Named verification suites: each runs a batch of cross-checks and
//! reports one [`Check`] per batch.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::characters::Oracle;
use crate::closedform::{dvir_bounds, FamilyKind, ProductFamily};
use crate::enumeration::{
    height5_smallpart1_sum, rho, sigma, tau, verify_character_identities, Method,
    NearRectangleCounts, SigmaMethod,
};
use crate::error::{Error, Result};
use crate::partitions::partitions_of;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// The five closed-form families against the oracle.
    Formulas,
    /// The three two-row products against the oracle.
    Theorems,
    /// Tableau counts: closed forms against brute sums.
    Enumeration,
    /// One-box reduction, Littlewood's one-box identity, dimension identities.
    Identities,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 5] =
        ["formulas", "theorems", "enumeration", "identities", "all"];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Formulas => "formulas",
            Suite::Theorems => "theorems",
            Suite::Enumeration => "enumeration",
            Suite::Identities => "identities",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "formulas" => Suite::Formulas,
            "theorems" => Suite::Theorems,
            "enumeration" => Suite::Enumeration,
            "identities" => Suite::Identities,
            "all" => Suite::All,
            _ => return Err(Error::ParameterOutOfRange(format!("unknown suite {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Runs `suite` for parameters up to `n_max`.
///
/// Oracle-backed suites need every product degree (at most `2 n_max + 1`) to
/// fit under the oracle cap.
pub fn run(suite: Suite, n_max: usize, oracle: &Oracle) -> Result<Vec<Check>> {
    match suite {
        Suite::Formulas => {
            need_degree(oracle, 2 * n_max + 1)?;
            families(&FIVE_CASES, n_max, oracle)
        }
        Suite::Theorems => {
            need_degree(oracle, 2 * n_max)?;
            families(&TWO_ROW, n_max, oracle)
        }
        Suite::Enumeration => Ok(enumeration(n_max)),
        Suite::Identities => {
            need_degree(oracle, 2 * n_max + 1)?;
            identities(n_max, oracle)
        }
        Suite::All => {
            let mut out = Vec::new();
            for s in [
                Suite::Formulas,
                Suite::Theorems,
                Suite::Enumeration,
                Suite::Identities,
            ] {
                out.extend(run(s, n_max, oracle)?);
            }
            Ok(out)
        }
    }
}

const FIVE_CASES: [FamilyKind; 5] = [
    FamilyKind::OneBoxRow,
    FamilyKind::OneBoxRowOdd,
    FamilyKind::TwoBoxRow,
    FamilyKind::TwoBoxColumn,
    FamilyKind::OneBoxSquare,
];

const TWO_ROW: [FamilyKind; 3] = [
    FamilyKind::Square,
    FamilyKind::Shifted,
    FamilyKind::NearSquare,
];

fn need_degree(oracle: &Oracle, degree: usize) -> Result<()> {
    if degree > oracle.max_degree() {
        return Err(Error::DegreeCapExceeded {
            degree,
            cap: oracle.max_degree(),
        });
    }
    Ok(())
}

/// Compares one family member with the oracle on every `theta` of its
/// degree, and checks support bounds and the dimension count on the way.
pub fn check_family(family: ProductFamily, oracle: &Oracle) -> Result<Check> {
    let (mu, nu) = family.shapes();
    let brute = oracle.kron_product(&mu, &nu)?;
    let (max_row, max_len) = dvir_bounds(&mu, &nu)?;
    let mut mismatches = Vec::new();
    let mut out_of_bounds = 0;
    let mut dimension = BigInt::from(0);
    let mut total = 0;
    for theta in partitions_of(family.degree(), None) {
        total += 1;
        let closed = family.coefficient(&theta)?;
        let expected = brute.coefficient(&theta);
        if closed != expected {
            mismatches.push(format!("{theta}: closed {closed}, oracle {expected}"));
        }
        if closed != BigInt::from(0) {
            if theta.part(1) > max_row || theta.len() > max_len {
                out_of_bounds += 1;
            }
            dimension += closed * theta.syt_count();
        }
    }
    let dims_ok = dimension == mu.syt_count() * nu.syt_count();
    let passed = mismatches.is_empty() && out_of_bounds == 0 && dims_ok;
    let detail = if passed {
        format!("{total} shapes agree")
    } else {
        let mut parts = Vec::new();
        if !mismatches.is_empty() {
            let shown: Vec<_> = mismatches.iter().take(3).cloned().collect();
            parts.push(format!(
                "{} mismatches, e.g. {}",
                mismatches.len(),
                shown.join("; ")
            ));
        }
        if out_of_bounds > 0 {
            parts.push(format!("{out_of_bounds} terms outside support bounds"));
        }
        if !dims_ok {
            parts.push("dimension count off".to_string());
        }
        parts.join("; ")
    };
    Ok(Check::new(
        format!("{} n={}", family.kind, family.n),
        passed,
        detail,
    ))
}

fn families(kinds: &[FamilyKind], n_max: usize, oracle: &Oracle) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &kind in kinds {
        for n in kind.min_n()..=n_max {
            out.push(check_family(ProductFamily::new(kind, n)?, oracle)?);
        }
    }
    Ok(out)
}

fn agree(
    name: String,
    pairs: impl Iterator<Item = (usize, Result<BigInt>, Result<BigInt>)>,
) -> Check {
    let mut bad = Vec::new();
    let mut count = 0;
    for (n, a, b) in pairs {
        count += 1;
        match (a, b) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(a), Ok(b)) => bad.push(format!("n={n}: {a} vs {b}")),
            (Err(e), _) | (_, Err(e)) => bad.push(format!("n={n}: {e}")),
        }
    }
    if bad.is_empty() {
        Check::new(name, true, format!("{count} values agree"))
    } else {
        Check::new(name, false, bad.join("; "))
    }
}

fn enumeration(n_max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for k in 2..=5 {
        out.push(agree(
            format!("tau k={k} closed = brute, n<={n_max}"),
            (0..=n_max).map(|n| (n, tau(k, n, Method::Closed), tau(k, n, Method::Brute))),
        ));
    }
    for k in 1..=6 {
        out.push(agree(
            format!("sigma k={k} brute = tau difference, n<={n_max}"),
            (0..=n_max).map(|n| {
                (
                    n,
                    sigma(k, n, SigmaMethod::Brute),
                    sigma(k, n, SigmaMethod::TauDifference),
                )
            }),
        ));
    }
    out.push(agree(
        format!("sigma k=4 closed = brute, n<={n_max}"),
        (0..=n_max).map(|n| {
            (
                n,
                sigma(4, n, SigmaMethod::Closed),
                sigma(4, n, SigmaMethod::Brute),
            )
        }),
    ));
    let k_max = n_max.max(3);
    out.push(agree(
        format!("five-row sum closed = brute, 3<=k<={k_max}"),
        (3..=k_max).map(|k| {
            (
                k,
                height5_smallpart1_sum(k, Method::Closed),
                height5_smallpart1_sum(k, Method::Brute),
            )
        }),
    ));
    out.push(agree(
        format!("five-row sum = rho(4,1), 3<=k<={k_max}"),
        (3..=k_max).map(|k| {
            (
                k,
                height5_smallpart1_sum(k, Method::Brute),
                Ok(rho(4, 1, k)),
            )
        }),
    ));
    let mut bad = Vec::new();
    for n in 2..=n_max.max(2) {
        match (
            NearRectangleCounts::closed(n),
            NearRectangleCounts::hook_length(n),
        ) {
            (Ok(a), Ok(b)) if a == b => {}
            (a, b) => bad.push(format!("n={n}: {a:?} vs {b:?}")),
        }
    }
    out.push(Check::new(
        format!("near-rectangle SYT counts, 2<=n<={}", n_max.max(2)),
        bad.is_empty(),
        if bad.is_empty() {
            "closed forms match hook lengths".to_string()
        } else {
            bad.join("; ")
        },
    ));
    out
}

fn identities(n_max: usize, oracle: &Oracle) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 3..=n_max {
        for k in 1..=n - 2 {
            let mut bad = Vec::new();
            let mut total = 0;
            for theta in partitions_of(2 * n, None) {
                total += 1;
                if !oracle.verify_one_box_reduction(n, k, &theta)? {
                    bad.push(theta.to_string());
                }
            }
            let detail = if bad.is_empty() {
                format!("{total} shapes agree")
            } else {
                format!("fails at {}", bad.join(" "))
            };
            out.push(Check::new(
                format!("one-box reduction n={n} k={k}"),
                bad.is_empty(),
                detail,
            ));
        }
    }
    for m in 1..=n_max.min(6) {
        let mut bad = Vec::new();
        let mut total = 0;
        for alpha in partitions_of(m, None) {
            for gamma in partitions_of(m + 1, None) {
                total += 1;
                if !oracle.verify_littlewood_one_box(&alpha, &gamma)? {
                    bad.push(format!("{alpha}/{gamma}"));
                }
            }
        }
        let detail = if bad.is_empty() {
            format!("{total} pairs agree")
        } else {
            format!("fails at {}", bad.join(" "))
        };
        out.push(Check::new(
            format!("Littlewood one-box |alpha|={m}"),
            bad.is_empty(),
            detail,
        ));
    }
    for n in 2..=n_max.max(2) {
        let ok = verify_character_identities(n)?;
        out.push(Check::new(
            format!("dimension identities n={n}"),
            ok,
            if ok {
                "both sizes agree"
            } else {
                "sums differ"
            },
        ));
    }
    Ok(out)
}
