//! Dyck paths on positive roots and the lattice polytopes they cut out.
//!
//! A Dyck path is a sequence of positive roots where each step goes from
//! `α_{i,j}` to `α_{i+1,j}` or `α_{i,j+1}`. Every path `p` gives the
//! inequality `Σ_{α ∈ p} x_α ≤ a_{β(p)}`, where `β(p)` spans from the start
//! of the first step to the end of the last one.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::typea::{pairing, root_as_weight, Rank, Root, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Root>,
}

impl DyckPath {
    pub fn new(rank: Rank, steps: Vec<Root>) -> Result<Self> {
        let Some(first) = steps.first() else {
            return Err(Error::Precondition(
                "a Dyck path needs at least one step".into(),
            ));
        };
        if !first.is_valid_for(rank) {
            return Err(Error::InvalidRoot {
                i: first.i,
                j: first.j,
                n: rank.n(),
            });
        }
        for w in steps.windows(2) {
            let (a, b) = (w[0], w[1]);
            let ok = b.is_valid_for(rank)
                && ((b.i == a.i + 1 && b.j == a.j) || (b.i == a.i && b.j == a.j + 1));
            if !ok {
                return Err(Error::Precondition(format!(
                    "{b} cannot follow {a} in a Dyck path"
                )));
            }
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Root] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `β(p) = α_{i_1, j_s}`.
    pub fn base(&self) -> Root {
        let first = self.steps[0];
        let last = self.steps[self.steps.len() - 1];
        Root {
            i: first.i,
            j: last.j,
        }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(Root::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Every Dyck path for `rank`, grouped by first step in root order.
pub fn dyck_paths(rank: Rank) -> Vec<DyckPath> {
    fn extend(rank: Rank, path: &mut Vec<Root>, out: &mut Vec<DyckPath>) {
        out.push(DyckPath {
            steps: path.clone(),
        });
        let last = *path.last().expect("nonempty");
        let nexts = [
            Root {
                i: last.i,
                j: last.j + 1,
            },
            Root {
                i: last.i + 1,
                j: last.j,
            },
        ];
        for next in nexts {
            if next.is_valid_for(rank) {
                path.push(next);
                extend(rank, path, out);
                path.pop();
            }
        }
    }

    let mut out = Vec::new();
    for root in rank.positive_roots() {
        extend(rank, &mut vec![root], &mut out);
    }
    out
}

/// `Σ_{α ∈ support} x_α ≤ a_base`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Inequality {
    pub support: BTreeSet<Root>,
    pub base: Root,
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lhs: Vec<String> = self
            .support
            .iter()
            .map(|r| format!("x{}{}", r.i, r.j))
            .collect();
        write!(f, "{} <= a{}{}", lhs.join(" + "), self.base.i, self.base.j)
    }
}

/// One inequality per Dyck path. With `prune`, inequalities whose support is
/// contained in another one's with the same base are dropped; they are
/// implied since all coordinates are nonnegative.
pub fn inequalities(rank: Rank, prune: bool) -> Vec<Inequality> {
    let all: BTreeSet<Inequality> = dyck_paths(rank)
        .into_iter()
        .map(|p| Inequality {
            base: p.base(),
            support: p.steps().iter().copied().collect(),
        })
        .collect();
    if !prune {
        return all.into_iter().collect();
    }
    all.iter()
        .filter(|ineq| {
            !all.iter().any(|other| {
                other != *ineq && other.base == ineq.base && ineq.support.is_subset(&other.support)
            })
        })
        .cloned()
        .collect()
}

/// Right-hand sides `a_α`, one per positive root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundVector {
    rank: Rank,
    values: Vec<u64>,
}

impl BoundVector {
    /// `values` in canonical root order.
    pub fn new(rank: Rank, values: Vec<u64>) -> Result<Self> {
        if values.len() != rank.num_positive_roots() {
            return Err(Error::Precondition(format!(
                "expected {} bounds for {rank}, got {}",
                rank.num_positive_roots(),
                values.len()
            )));
        }
        Ok(BoundVector { rank, values })
    }

    pub fn zero(rank: Rank) -> Self {
        BoundVector {
            rank,
            values: vec![0; rank.num_positive_roots()],
        }
    }

    /// `a_α = λ(h_α)`.
    pub fn from_weight(lambda: &Weight) -> Result<Self> {
        lambda.require_dominant()?;
        let rank = lambda.rank();
        let values = rank
            .positive_roots()
            .into_iter()
            .map(|r| pairing(lambda, r).map(|v| v as u64))
            .collect::<Result<_>>()?;
        Ok(BoundVector { rank, values })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn get(&self, root: Root) -> u64 {
        self.values[self.rank.root_index(root)]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn le(&self, other: &BoundVector) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }
}

/// `a_α = min(λ1(h_α), λ2(h_α))`.
pub fn bounds_from_pair(lambda1: &Weight, lambda2: &Weight) -> Result<BoundVector> {
    lambda2.require_rank(lambda1.rank())?;
    lambda1.require_dominant()?;
    lambda2.require_dominant()?;
    let rank = lambda1.rank();
    let values = rank
        .positive_roots()
        .into_iter()
        .map(|r| Ok(pairing(lambda1, r)?.min(pairing(lambda2, r)?) as u64))
        .collect::<Result<_>>()?;
    Ok(BoundVector { rank, values })
}

/// An exponent vector `s = (s_α)`; zero entries are not stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    exps: BTreeMap<Root, u64>,
}

impl LatticePoint {
    pub fn zero() -> Self {
        LatticePoint::default()
    }

    /// `e_{i,j}`.
    pub fn unit(root: Root) -> Self {
        LatticePoint::from_entries([(root, 1)])
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (Root, u64)>) -> Self {
        let mut p = LatticePoint::zero();
        for (root, s) in entries {
            p.add_at(root, s);
        }
        p
    }

    fn from_dense(rank: Rank, dense: &[u64]) -> Self {
        LatticePoint::from_entries(rank.positive_roots().into_iter().zip(dense.iter().copied()))
    }

    pub fn dense(&self, rank: Rank) -> Vec<u64> {
        rank.positive_roots()
            .into_iter()
            .map(|r| self.get(r))
            .collect()
    }

    fn add_at(&mut self, root: Root, s: u64) {
        if s > 0 {
            *self.exps.entry(root).or_insert(0) += s;
        }
    }

    pub fn get(&self, root: Root) -> u64 {
        self.exps.get(&root).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (Root, u64)> + '_ {
        self.exps.iter().map(|(r, s)| (*r, *s))
    }

    pub fn is_zero(&self) -> bool {
        self.exps.is_empty()
    }

    /// `deg(s) = Σ s_α`.
    pub fn degree(&self) -> u64 {
        self.exps.values().sum()
    }

    /// `wt(s) = Σ s_α α`, in the ω-basis.
    pub fn weight(&self, rank: Rank) -> Result<Weight> {
        let mut w = Weight::zero(rank);
        for (&root, &s) in &self.exps {
            w = &w + &root_as_weight(rank, root)?.scaled(s as i64);
        }
        Ok(w)
    }

    /// Height of `wt(s)`: `Σ s_α · ht(α)`.
    pub fn height(&self) -> u64 {
        self.exps.iter().map(|(r, s)| s * r.height() as u64).sum()
    }

    pub fn satisfies(&self, ineq: &Inequality, bounds: &BoundVector) -> bool {
        ineq.support.iter().map(|r| self.get(*r)).sum::<u64>() <= bounds.get(ineq.base)
    }
}

impl std::ops::Add for &LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        let mut out = self.clone();
        for (root, s) in rhs.entries() {
            out.add_at(root, s);
        }
        out
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries()
            .map(|(r, s)| {
                if s == 1 {
                    format!("e{}{}", r.i, r.j)
                } else {
                    format!("{s}e{}{}", r.i, r.j)
                }
            })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl Serialize for LatticePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json {
            exps: Vec<[u64; 3]>,
        }
        Json {
            exps: self
                .entries()
                .map(|(r, s)| [r.i as u64, r.j as u64, s])
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LatticePoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Json {
            exps: Vec<[u64; 3]>,
        }
        let json = Json::deserialize(deserializer)?;
        let mut p = LatticePoint::zero();
        for [i, j, s] in json.exps {
            if i == 0 || i > j {
                return Err(serde::de::Error::custom(format!("invalid root ({i},{j})")));
            }
            p.add_at(
                Root {
                    i: i as usize,
                    j: j as usize,
                },
                s,
            );
        }
        Ok(p)
    }
}

/// Integer points of `P(a)` under the pruned inequality system.
pub fn lattice_points(bounds: &BoundVector) -> Vec<LatticePoint> {
    lattice_points_with(bounds, &inequalities(bounds.rank(), true))
}

/// Integer points satisfying `ineqs`, sorted by degree and then
/// lexicographically in root order.
///
/// Coordinates are assigned in root order; each coordinate is capped by the
/// remaining slack of every inequality containing it, so every leaf is a
/// feasible point.
pub fn lattice_points_with(bounds: &BoundVector, ineqs: &[Inequality]) -> Vec<LatticePoint> {
    let rank = bounds.rank();
    let dim = rank.num_positive_roots();
    let rhs: Vec<u64> = ineqs.iter().map(|q| bounds.get(q.base)).collect();
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); dim];
    for (q, ineq) in ineqs.iter().enumerate() {
        for root in &ineq.support {
            touching[rank.root_index(*root)].push(q);
        }
    }

    struct Search<'a> {
        rhs: &'a [u64],
        touching: &'a [Vec<usize>],
        slack_used: Vec<u64>,
        current: Vec<u64>,
        out: Vec<Vec<u64>>,
    }

    impl Search<'_> {
        fn go(&mut self, coord: usize) {
            if coord == self.current.len() {
                self.out.push(self.current.clone());
                return;
            }
            let cap = self.touching[coord]
                .iter()
                .map(|&q| self.rhs[q] - self.slack_used[q])
                .min()
                .unwrap_or(0);
            for v in 0..=cap {
                self.current[coord] = v;
                for &q in &self.touching[coord] {
                    self.slack_used[q] += v;
                }
                self.go(coord + 1);
                for &q in &self.touching[coord] {
                    self.slack_used[q] -= v;
                }
            }
            self.current[coord] = 0;
        }
    }

    let mut search = Search {
        rhs: &rhs,
        touching: &touching,
        slack_used: vec![0; ineqs.len()],
        current: vec![0; dim],
        out: Vec::new(),
    };
    search.go(0);

    let mut points: Vec<(u64, LatticePoint)> = search
        .out
        .iter()
        .map(|d| (d.iter().sum(), LatticePoint::from_dense(rank, d)))
        .collect();
    // DFS order is already lexicographic; a stable sort keeps it within degrees
    points.sort_by_key(|(deg, _)| *deg);
    points.into_iter().map(|(_, p)| p).collect()
}

/// `S(λ1, λ2)`.
pub fn pair_points(lambda1: &Weight, lambda2: &Weight) -> Result<Vec<LatticePoint>> {
    Ok(lattice_points(&bounds_from_pair(lambda1, lambda2)?))
}

/// Points of `S(λ1, λ2)` with `λ1 + λ2 - wt(s)` dominant, each paired with
/// that weight. This is a superset of the highest-weight points.
pub fn dominant_points(lambda1: &Weight, lambda2: &Weight) -> Result<Vec<(LatticePoint, Weight)>> {
    let rank = lambda1.rank();
    let top = lambda1 + lambda2;
    let mut out = Vec::new();
    for point in pair_points(lambda1, lambda2)? {
        let tau = &top - &point.weight(rank)?;
        if tau.is_dominant() {
            out.push((point, tau));
        }
    }
    Ok(out)
}

/// Number of dominant points per weight.
pub fn dominant_point_counts(lambda1: &Weight, lambda2: &Weight) -> Result<BTreeMap<Weight, u64>> {
    let mut counts = BTreeMap::new();
    for (_, tau) in dominant_points(lambda1, lambda2)? {
        *counts.entry(tau).or_insert(0) += 1;
    }
    Ok(counts)
}
