//! Explicit matrix realizations of simple `sl_n`-modules.
//!
//! `V(λ)` is cut out of `⊗_k Λ^k(ℂ^n)^{⊗ m_k}` as the span of the tensor of
//! top vectors under the lowering operators. Each weight space is built from
//! the weight spaces one simple root above it, and its echelon rows become
//! the basis of the module.

use std::collections::{BTreeMap, HashMap};

use crate::character::weyl_dim;
use crate::error::{Error, Result};
use crate::typea::{Rank, Weight};

use super::linalg::{add_entry, q, Echelon, SparseVec, Q};

/// Default cap on `dim V(λ)` for [`build_irrep`].
pub const DEFAULT_DIM_CAP: u64 = 400;

/// A sparse matrix stored by columns: `cols[j]` is the image of basis vector `j`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    cols: Vec<Vec<(usize, Q)>>,
}

impl SparseMatrix {
    pub fn column(&self, j: usize) -> &[(usize, Q)] {
        &self.cols[j]
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, c) in v {
            for (i, m) in &self.cols[*j] {
                add_entry(&mut out, *i, c * m);
            }
        }
        out
    }
}

/// A simple module with its Chevalley generators as exact matrices.
#[derive(Debug, Clone)]
pub struct ExplicitModule {
    highest_weight: Weight,
    weights: Vec<Weight>,
    e: Vec<SparseMatrix>,
    f: Vec<SparseMatrix>,
}

impl ExplicitModule {
    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn rank(&self) -> Rank {
        self.highest_weight.rank()
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Weight of each basis vector; index 0 is the highest weight vector.
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// `e_k`, `1 ≤ k ≤ n - 1`.
    pub fn e(&self, k: usize) -> &SparseMatrix {
        &self.e[k - 1]
    }

    /// `f_k`, `1 ≤ k ≤ n - 1`.
    pub fn f(&self, k: usize) -> &SparseMatrix {
        &self.f[k - 1]
    }

    /// Eigenvalue of `h_k` on basis vector `b`.
    pub fn h_eigenvalue(&self, k: usize, b: usize) -> i64 {
        self.weights[b].coord(k)
    }

    /// `h_k` as a diagonal matrix.
    pub fn h(&self, k: usize) -> SparseMatrix {
        SparseMatrix {
            cols: (0..self.dim())
                .map(|b| {
                    let v = self.h_eigenvalue(k, b);
                    if v == 0 {
                        vec![]
                    } else {
                        vec![(b, q(v))]
                    }
                })
                .collect(),
        }
    }

    /// Weight-space dimensions.
    pub fn character(&self) -> BTreeMap<Weight, u64> {
        let mut ch = BTreeMap::new();
        for w in &self.weights {
            *ch.entry(w.clone()).or_insert(0) += 1;
        }
        ch
    }
}

/// `Λ^k(ℂ^n)` with the basis of `k`-subsets of `{1..n}` (as bitmasks).
struct Fundamental {
    k: usize,
    subsets: Vec<u32>,
    index: HashMap<u32, usize>,
}

impl Fundamental {
    fn new(n: usize, k: usize) -> Self {
        let subsets: Vec<u32> = (0u32..(1 << n))
            .filter(|s| s.count_ones() as usize == k)
            .collect();
        let index = subsets.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        Fundamental { k, subsets, index }
    }

    /// `f_i` sends `e_i` to `e_{i+1}` (bits `i-1`, `i`); no sign appears since
    /// the replaced vector keeps its position in the wedge.
    fn lower(&self, idx: usize, i: usize) -> Option<usize> {
        let s = self.subsets[idx];
        let (a, b) = (1 << (i - 1), 1 << i);
        (s & a != 0 && s & b == 0).then(|| self.index[&((s & !a) | b)])
    }

    fn raise(&self, idx: usize, i: usize) -> Option<usize> {
        let s = self.subsets[idx];
        let (a, b) = (1 << (i - 1), 1 << i);
        (s & b != 0 && s & a == 0).then(|| self.index[&((s & !b) | a)])
    }
}

/// Tensor product of fundamental modules, with basis indexed in mixed radix.
struct Ambient {
    factors: Vec<Fundamental>,
    strides: Vec<usize>,
}

impl Ambient {
    fn digits(&self, idx: usize) -> Vec<usize> {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(f, s)| (idx / s) % f.subsets.len())
            .collect()
    }

    fn act(&self, v: &SparseVec, node: usize, lower: bool) -> SparseVec {
        let mut out = SparseVec::new();
        for (&idx, c) in v {
            let digits = self.digits(idx);
            for (pos, factor) in self.factors.iter().enumerate() {
                let moved = if lower {
                    factor.lower(digits[pos], node)
                } else {
                    factor.raise(digits[pos], node)
                };
                if let Some(new_digit) = moved {
                    let target =
                        idx + new_digit * self.strides[pos] - digits[pos] * self.strides[pos];
                    add_entry(&mut out, target, c.clone());
                }
            }
        }
        out
    }
}

/// Realizes `V(λ)` explicitly. Errors when `dim V(λ)` exceeds `cap`.
pub fn build_irrep(lambda: &Weight, cap: u64) -> Result<ExplicitModule> {
    lambda.require_dominant()?;
    let dim = weyl_dim(lambda)?;
    if dim > cap {
        return Err(Error::DimensionCap { dim, cap });
    }
    let rank = lambda.rank();
    let n = rank.n();
    let r = rank.nodes();

    // factors in descending node order
    let mut factors = Vec::new();
    for k in (1..=r).rev() {
        for _ in 0..lambda.coord(k) {
            factors.push(Fundamental::new(n, k));
        }
    }
    let mut strides = vec![1usize; factors.len()];
    for pos in (0..factors.len().saturating_sub(1)).rev() {
        strides[pos] = strides[pos + 1] * factors[pos + 1].subsets.len();
    }
    let top_index: usize = factors
        .iter()
        .zip(&strides)
        .map(|(f, s)| f.index[&((1u32 << f.k) - 1)] * s)
        .sum();
    let ambient = Ambient { factors, strides };

    let alphas: Vec<Weight> = (1..=r)
        .map(|k| crate::typea::root_as_weight(rank, crate::typea::Root::simple(k)))
        .collect::<Result<_>>()?;

    // weight spaces in order of depth below λ
    let diagram = crate::character::weight_multiplicities(lambda)?;
    let mut order: Vec<Weight> = diagram.keys().cloned().collect();
    order.sort_by_key(|mu| {
        (lambda - mu)
            .root_coords()
            .map(|c| c.iter().sum::<i64>())
            .unwrap_or(i64::MAX)
    });

    let mut spaces: HashMap<Weight, Echelon> = HashMap::new();
    let mut top = Echelon::new();
    top.insert(SparseVec::from([(top_index, q(1))]));
    spaces.insert(lambda.clone(), top);

    for mu in order.iter().skip(1) {
        let mut space = Echelon::new();
        for (k, alpha) in alphas.iter().enumerate() {
            let above = mu + alpha;
            if let Some(src) = spaces.get(&above) {
                for row in src.rows() {
                    space.insert(ambient.act(row, k + 1, true));
                }
            }
        }
        if space.rank() as u64 != diagram[mu] {
            return Err(Error::Invariant(format!(
                "weight space {mu} of V({lambda}) has dimension {} instead of {}",
                space.rank(),
                diagram[mu]
            )));
        }
        spaces.insert(mu.clone(), space);
    }

    // global basis: weight spaces in depth order, rows within each
    let mut offset: HashMap<Weight, usize> = HashMap::new();
    let mut weights = Vec::with_capacity(dim as usize);
    for mu in &order {
        offset.insert(mu.clone(), weights.len());
        weights.extend(std::iter::repeat_n(mu.clone(), spaces[mu].rank()));
    }

    let matrix = |lower: bool, k: usize| -> Result<SparseMatrix> {
        let mut cols = Vec::with_capacity(weights.len());
        for mu in &order {
            let target = if lower {
                mu - &alphas[k - 1]
            } else {
                mu + &alphas[k - 1]
            };
            for row in spaces[mu].rows() {
                let image = ambient.act(row, k, lower);
                if image.is_empty() {
                    cols.push(vec![]);
                    continue;
                }
                let space = spaces.get(&target).ok_or_else(|| {
                    Error::Invariant(format!("image outside the weights of V({lambda})"))
                })?;
                let coords = space.coordinates(&image).ok_or_else(|| {
                    Error::Invariant(format!("V({lambda}) is not stable under a generator"))
                })?;
                let base = offset[&target];
                let mut col: Vec<(usize, Q)> =
                    coords.into_iter().map(|(i, c)| (base + i, c)).collect();
                col.sort_by_key(|(i, _)| *i);
                cols.push(col);
            }
        }
        Ok(SparseMatrix { cols })
    };

    let e = (1..=r).map(|k| matrix(false, k)).collect::<Result<_>>()?;
    let f = (1..=r).map(|k| matrix(true, k)).collect::<Result<_>>()?;
    Ok(ExplicitModule {
        highest_weight: lambda.clone(),
        weights,
        e,
        f,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::weight_multiplicities;
    use crate::fusion::linalg::axpy;
    use crate::testutil::{dominant_weights, w};

    fn commutator_holds(m: &ExplicitModule) -> bool {
        let r = m.rank().nodes();
        for b in 0..m.dim() {
            let v = SparseVec::from([(b, q(1))]);
            for k in 1..=r {
                for l in 1..=r {
                    let ef = m.e(k).apply(&m.f(l).apply(&v));
                    let fe = m.f(l).apply(&m.e(k).apply(&v));
                    let mut lhs = ef;
                    axpy(&mut lhs, &q(-1), &fe);
                    let expected = if k == l {
                        m.h(k).apply(&v)
                    } else {
                        SparseVec::new()
                    };
                    if lhs != expected {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn sl2_symmetric_square() {
        let m = build_irrep(&w(&[2]), DEFAULT_DIM_CAP).unwrap();
        assert_eq!(m.dim(), 3);
        let eig: Vec<i64> = (0..3).map(|b| m.h_eigenvalue(1, b)).collect();
        assert_eq!(eig, vec![2, 0, -2]);
    }

    #[test]
    fn sl3_examples() {
        assert_eq!(build_irrep(&w(&[1, 1]), DEFAULT_DIM_CAP).unwrap().dim(), 8);
        let m = build_irrep(&w(&[1, 0]), DEFAULT_DIM_CAP).unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(m.weights(), &[w(&[1, 0]), w(&[-1, 1]), w(&[0, -1])]);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            build_irrep(&w(&[2, 2]), 10).unwrap_err(),
            Error::DimensionCap { dim: 27, cap: 10 }
        );
    }

    #[test]
    fn relations_and_characters() {
        for n in 2..=4 {
            let max = if n == 4 { 1 } else { 2 };
            for lambda in dominant_weights(n, max) {
                let m = build_irrep(&lambda, DEFAULT_DIM_CAP).unwrap();
                assert_eq!(
                    m.character(),
                    weight_multiplicities(&lambda).unwrap(),
                    "{lambda}"
                );
                assert!(commutator_holds(&m), "{lambda}");
            }
        }
    }
}
