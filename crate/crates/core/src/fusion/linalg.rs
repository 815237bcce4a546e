//! Row echelon forms over the rationals with sparse rows.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Sparse vector: coordinate index → nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Q>;

/// `v[k] += c`, dropping the entry if it cancels.
pub fn add_entry(v: &mut SparseVec, k: usize, c: Q) {
    match v.get_mut(&k) {
        Some(entry) => {
            *entry += c;
            if entry.is_zero() {
                v.remove(&k);
            }
        }
        None => {
            if !c.is_zero() {
                v.insert(k, c);
            }
        }
    }
}

/// `dst += coeff * src`, dropping cancelled entries.
pub fn axpy(dst: &mut SparseVec, coeff: &Q, src: &SparseVec) {
    for (k, v) in src {
        add_entry(dst, *k, coeff * v);
    }
}

/// A subspace kept in row echelon form. Each row is scaled so that its
/// leading (smallest-index) entry is 1, and no two rows share a leading index.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivots: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Subtracts multiples of rows from `v` until no entry of `v` sits at a
    /// pivot. Returns the multipliers, one per row.
    pub fn reduce(&self, v: &mut SparseVec) -> Vec<(usize, Q)> {
        let mut used = Vec::new();
        let mut cursor = 0usize;
        loop {
            let next = v
                .range(cursor..)
                .find(|(k, _)| self.pivots.contains_key(k))
                .map(|(k, c)| (*k, c.clone()));
            let Some((col, coeff)) = next else {
                break;
            };
            let row = self.pivots[&col];
            axpy(v, &-coeff.clone(), &self.rows[row]);
            used.push((row, coeff));
            cursor = col + 1;
        }
        used
    }

    /// Adds `v` to the spanning set. Returns the index of the new row when
    /// `v` was independent of the current rows.
    pub fn insert(&mut self, mut v: SparseVec) -> Option<usize> {
        self.reduce(&mut v);
        let (&lead, lead_coeff) = v.iter().next()?;
        if !lead_coeff.is_one() {
            let inv = lead_coeff.recip();
            for c in v.values_mut() {
                *c *= &inv;
            }
        }
        self.pivots.insert(lead, self.rows.len());
        self.rows.push(v);
        Some(self.rows.len() - 1)
    }

    /// Coordinates of `v` in the row basis, or `None` when `v` is outside
    /// the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<(usize, Q)>> {
        let mut rest = v.clone();
        let used = self.reduce(&mut rest);
        rest.is_empty().then_some(used)
    }
}
