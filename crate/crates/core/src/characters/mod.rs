//! Symmetric group characters, Schur expansions and the brute-force
//! Kronecker oracle.

mod expansion;
mod oracle;

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{factorial, Partition};

pub use expansion::{hall_inner, pieri_column, pieri_row, skew_by_one, SchurExpansion};
pub use oracle::{support_bounds, Oracle, DEFAULT_MAX_DEGREE, MAX_DEGREE_ENV};

/// Size of the centralizer of a permutation with cycle type `cycle_type`:
/// the product over part values `v` of `v^m * m!` with `m` the multiplicity.
pub fn z_of(cycle_type: &Partition) -> BigInt {
    let parts = cycle_type.parts();
    let mut z = BigInt::one();
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let m = parts[i..].iter().take_while(|&&p| p == v).count();
        z *= BigInt::from(v).pow(m as u32) * BigInt::from(factorial(m));
        i += m;
    }
    z
}

/// Memo table for character values keyed by `(shape, cycle type)`.
///
/// Readers never block each other. Two threads missing on the same key may
/// both compute it; they write identical values.
#[derive(Debug, Default)]
pub struct CharacterCache {
    table: RwLock<HashMap<(Partition, Partition), BigInt>>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `chi_shape(cycle_type)` by the Murnaghan–Nakayama rule.
    pub fn character(&self, shape: &Partition, cycle_type: &Partition) -> Result<BigInt> {
        if shape.size() != cycle_type.size() {
            return Err(Error::SizeMismatch(format!(
                "shape {shape} has size {} but cycle type {cycle_type} has size {}",
                shape.size(),
                cycle_type.size()
            )));
        }
        Ok(self.lookup(shape, cycle_type.parts()))
    }

    fn lookup(&self, shape: &Partition, cycle: &[usize]) -> BigInt {
        let Some((&first, rest)) = cycle.split_first() else {
            return BigInt::one();
        };
        if shape.len() <= 1 {
            return BigInt::one();
        }
        let key = (shape.clone(), Partition::from_sorted(cycle.to_vec()));
        if let Some(v) = self.table.read().unwrap().get(&key) {
            return v.clone();
        }
        // Strip the largest cycle first.
        let mut value = BigInt::zero();
        for (inner, negative) in remove_rim_hooks(shape, first) {
            let chi = self.lookup(&inner, rest);
            if negative {
                value -= chi;
            } else {
                value += chi;
            }
        }
        self.table.write().unwrap().insert(key, value.clone());
        value
    }
}

/// Every way to remove a rim hook of `length` cells from `shape`, with the
/// sign of the hook (`true` for an odd number of rows minus one).
///
/// Works on beta numbers `parts[i] + (l - 1 - i)`: removing a hook moves one
/// bead down by `length` into an empty slot, and the leg length is the number
/// of beads jumped over.
pub fn remove_rim_hooks(shape: &Partition, length: usize) -> Vec<(Partition, bool)> {
    let l = shape.len();
    let beta: Vec<usize> = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i)
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < length || beta.contains(&(b - length)) {
            continue;
        }
        let target = b - length;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (l - 1 - j))
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        out.push((Partition::from_sorted(parts), jumped % 2 == 1));
    }
    out
}
