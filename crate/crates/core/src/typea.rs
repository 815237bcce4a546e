//! Weights and positive roots of `sl_n`.
//!
//! Weights are stored in the fundamental-weight basis: `coords[k-1]` is the
//! coefficient of `ω_k`. The ε-form of a weight is the length-`n` vector
//! `(ε_1, ..., ε_n)` with `ε_k = Σ_{i ≥ k} m_i`, so its last part is 0.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The rank parameter `n` of `sl_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Rank(usize);

impl Rank {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        Ok(Rank(n))
    }

    pub fn n(self) -> usize {
        self.0
    }

    /// Number of simple roots, `n - 1`.
    pub fn nodes(self) -> usize {
        self.0 - 1
    }

    pub fn num_positive_roots(self) -> usize {
        self.0 * (self.0 - 1) / 2
    }

    /// Positive roots in the order `α_{i,j} ≤ α_{k,l}` iff `i < k`, or
    /// `i = k` and `j ≤ l`.
    pub fn positive_roots(self) -> Vec<Root> {
        let r = self.nodes();
        (1..=r)
            .flat_map(|i| (i..=r).map(move |j| Root { i, j }))
            .collect()
    }

    /// Position of `root` in [`Rank::positive_roots`].
    pub fn root_index(self, root: Root) -> usize {
        let r = self.nodes();
        // rows 1..i-1 contribute r, r-1, ..., r-i+2 roots
        let before: usize = (1..root.i).map(|k| r - k + 1).sum();
        before + (root.j - root.i)
    }

    pub fn check_node(self, node: usize) -> Result<()> {
        if node == 0 || node > self.nodes() {
            return Err(Error::InvalidNode { node, n: self.0 });
        }
        Ok(())
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sl_{}", self.0)
    }
}

/// An integral weight `Σ m_i ω_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(rank: Rank, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != rank.nodes() {
            return Err(Error::RankMismatch {
                expected: rank.n(),
                found: coords.len() + 1,
            });
        }
        Ok(Weight { coords })
    }

    /// Builds a weight from coordinates alone; the rank is `coords.len() + 1`.
    pub fn from_coords(coords: Vec<i64>) -> Result<Self> {
        Rank::new(coords.len() + 1)?;
        Ok(Weight { coords })
    }

    pub fn zero(rank: Rank) -> Self {
        Weight {
            coords: vec![0; rank.nodes()],
        }
    }

    /// `ω_k`; `k = 0` and `k = n` give the zero weight.
    pub fn fundamental(rank: Rank, k: usize) -> Self {
        let mut w = Weight::zero(rank);
        if (1..=rank.nodes()).contains(&k) {
            w.coords[k - 1] = 1;
        }
        w
    }

    pub fn rho(rank: Rank) -> Self {
        Weight {
            coords: vec![1; rank.nodes()],
        }
    }

    pub fn rank(&self) -> Rank {
        Rank(self.coords.len() + 1)
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Coefficient of `ω_k` (1-based); 0 outside `1..n`.
    pub fn coord(&self, k: usize) -> i64 {
        if k == 0 || k > self.coords.len() {
            0
        } else {
            self.coords[k - 1]
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&m| m == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&m| m >= 0)
    }

    pub fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.clone()))
        }
    }

    pub fn require_rank(&self, rank: Rank) -> Result<()> {
        if self.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank.n(),
                found: self.rank().n(),
            });
        }
        Ok(())
    }

    /// ε-form normalized so that the last part is 0.
    pub fn to_eps(&self) -> Vec<i64> {
        let n = self.coords.len() + 1;
        let mut eps = vec![0; n];
        for k in (0..n - 1).rev() {
            eps[k] = eps[k + 1] + self.coords[k];
        }
        eps
    }

    /// Inverse of [`Weight::to_eps`]; any constant shift of `eps` gives the
    /// same weight.
    pub fn from_eps(eps: &[i64]) -> Result<Self> {
        Weight::from_coords(eps.windows(2).map(|w| w[0] - w[1]).collect())
    }

    pub fn scaled(&self, factor: i64) -> Self {
        Weight {
            coords: self.coords.iter().map(|&m| m * factor).collect(),
        }
    }

    /// `n` times the invariant form `(x, y)`; always an integer.
    pub fn form(&self, other: &Weight) -> i64 {
        let n = self.coords.len() as i64 + 1;
        let a = self.to_eps();
        let b = other.to_eps();
        let dot: i64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
        n * dot - a.iter().sum::<i64>() * b.iter().sum::<i64>()
    }

    /// `(self, 2ρ)` up to the positive factor `n`: `Σ k (n - k) m_k`.
    ///
    /// Strictly increases along every positive root, so sorting by it
    /// refines the dominance order.
    pub fn dominance_key(&self) -> i64 {
        let n = self.coords.len() as i64 + 1;
        self.coords
            .iter()
            .enumerate()
            .map(|(idx, &m)| {
                let k = idx as i64 + 1;
                k * (n - k) * m
            })
            .sum()
    }

    /// Coordinates in the simple-root basis, if `self` lies in the root lattice.
    pub fn root_coords(&self) -> Option<Vec<i64>> {
        let n = self.coords.len() as i64 + 1;
        let r = self.coords.len();
        let mut out = Vec::with_capacity(r);
        for k in 1..=r as i64 {
            let num: i64 = self
                .coords
                .iter()
                .enumerate()
                .map(|(idx, &m)| {
                    let i = idx as i64 + 1;
                    k.min(i) * (n - k.max(i)) * m
                })
                .sum();
            if num % n != 0 {
                return None;
            }
            out.push(num / n);
        }
        Some(out)
    }

    /// `self ≥ other` in the dominance order (`self - other` is a
    /// nonnegative combination of simple roots).
    pub fn dominates(&self, other: &Weight) -> bool {
        match (self - other).root_coords() {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        }
    }
}

/// All dominant weights of `rank` with every coordinate in `0..=max`, in
/// lexicographic order.
pub fn dominant_weights(rank: Rank, max: i64) -> Vec<Weight> {
    let mut out = vec![Weight::zero(rank)];
    for k in 0..rank.nodes() {
        out = out
            .into_iter()
            .flat_map(|base| {
                (0..=max).map(move |m| {
                    let mut w = base.clone();
                    w.coords[k] = m;
                    w
                })
            })
            .collect();
    }
    out.sort();
    out
}

/// Total order for presenting decompositions: descending dominance key,
/// then descending lexicographic coordinates.
pub fn presentation_order(a: &Weight, b: &Weight) -> std::cmp::Ordering {
    b.dominance_key()
        .cmp(&a.dominance_key())
        .then_with(|| b.coords.cmp(&a.coords))
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, &m) in self.coords.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let k = idx + 1;
            let sign = if m < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let abs = m.abs();
            if abs == 1 {
                write!(f, "{sign}w{k}")?;
            } else {
                write!(f, "{sign}{abs}w{k}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.coords.len(), rhs.coords.len(), "rank mismatch");
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.coords.len(), rhs.coords.len(), "rank mismatch");
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

/// The positive root `α_{i,j} = α_i + ... + α_j`, `1 ≤ i ≤ j ≤ n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(rank: Rank, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i > j || j > rank.nodes() {
            return Err(Error::InvalidRoot { i, j, n: rank.n() });
        }
        Ok(Root { i, j })
    }

    pub fn simple(k: usize) -> Self {
        Root { i: k, j: k }
    }

    pub fn is_simple(&self) -> bool {
        self.i == self.j
    }

    pub fn height(&self) -> usize {
        self.j - self.i + 1
    }

    pub fn is_valid_for(&self, rank: Rank) -> bool {
        self.i >= 1 && self.i <= self.j && self.j <= rank.nodes()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}{}", self.i, self.j)
    }
}

/// `λ(h_α) = Σ_{k=i}^{j} m_k`.
pub fn pairing(weight: &Weight, root: Root) -> Result<i64> {
    if !root.is_valid_for(weight.rank()) {
        return Err(Error::RankMismatch {
            expected: weight.rank().n(),
            found: root.j + 1,
        });
    }
    Ok(weight.coords[root.i - 1..root.j].iter().sum())
}

/// `α_{i,j}` in the ω-basis: `ω_i + ω_j - ω_{i-1} - ω_{j+1}` with
/// `ω_0 = ω_n = 0`.
pub fn root_as_weight(rank: Rank, root: Root) -> Result<Weight> {
    if !root.is_valid_for(rank) {
        return Err(Error::InvalidRoot {
            i: root.i,
            j: root.j,
            n: rank.n(),
        });
    }
    let mut w = Weight::zero(rank);
    let r = rank.nodes();
    let mut bump = |k: usize, by: i64| {
        if (1..=r).contains(&k) {
            w.coords[k - 1] += by;
        }
    };
    bump(root.i, 1);
    bump(root.j, 1);
    bump(root.i - 1, -1);
    bump(root.j + 1, -1);
    Ok(w)
}
