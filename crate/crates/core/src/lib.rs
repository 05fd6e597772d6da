//! Exact Kronecker coefficients for near-rectangular Schur function products.
//!
//! The crate is organised in four layers:
//!
//! * [`partitions`]: the [`Partition`] type, hook lengths, the statistics used by
//!   the coefficient formulas, and reverse-lexicographic enumeration.
//! * [`characters`]: symmetric group characters (Murnaghan–Nakayama), Schur
//!   expansions, Pieri rules and a brute-force Kronecker [`Oracle`].
//! * [`closedform`]: constant-time coefficient formulas for eight product
//!   families such as `s(n,n-1,1) * s(n,n)`.
//! * [`enumeration`]: bounded-height standard Young tableaux counts and their
//!   Catalan / Motzkin closed forms.
//!
//! [`sweep`] bundles the cross-checks between these layers into named suites.
//!
//! ```
//! use nearrect::{part, FamilyKind, Oracle, ProductFamily};
//!
//! let fam = ProductFamily::new(FamilyKind::OneBoxRow, 4).unwrap();
//! assert_eq!(fam.coefficient(&part![3, 2, 2, 1]).unwrap(), 2.into());
//!
//! let (mu, nu) = fam.shapes();
//! assert_eq!(fam.expand(), Oracle::new().kron_product(&mu, &nu).unwrap());
//! ```

pub mod characters;
pub mod closedform;
pub mod enumeration;
mod error;
pub mod partitions;
pub mod sweep;

pub use characters::{Oracle, SchurExpansion};
pub use closedform::{FamilyKind, ProductFamily};

pub use error::{Error, Result};
pub use partitions::{Partition, PartitionStats};
