//! The poset `P(λ, 2)` of unordered dominant pairs summing to `λ`.
//!
//! A pair `A = (λ1, λ2)` is below `B = (μ1, μ2)` when its min-vector
//! `α ↦ min(λ1(h_α), λ2(h_α))` is entrywise at most that of `B`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cases::{proven_regime, Regime};
use crate::character::weyl_dim;
use crate::dyck::bounds_from_pair;
use crate::error::{Error, Result};
use crate::tensor::{
    lr_coefficients, schur_product_diff, DecompositionMap, SignedDecompositionMap,
};
use crate::typea::{Rank, Weight};

/// An unordered pair of dominant weights, stored with the ε-lexicographically
/// larger component first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct WeightPair {
    first: Weight,
    second: Weight,
}

#[derive(Deserialize)]
struct RawPair {
    first: Weight,
    second: Weight,
}

impl TryFrom<RawPair> for WeightPair {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        WeightPair::new(raw.first, raw.second)
    }
}

impl WeightPair {
    pub fn new(a: Weight, b: Weight) -> Result<Self> {
        b.require_rank(a.rank())?;
        a.require_dominant()?;
        b.require_dominant()?;
        if a.to_eps() >= b.to_eps() {
            Ok(WeightPair {
                first: a,
                second: b,
            })
        } else {
            Ok(WeightPair {
                first: b,
                second: a,
            })
        }
    }

    pub fn first(&self) -> &Weight {
        &self.first
    }

    pub fn second(&self) -> &Weight {
        &self.second
    }

    pub fn rank(&self) -> Rank {
        self.first.rank()
    }

    pub fn total(&self) -> Weight {
        &self.first + &self.second
    }

    /// `min(λ1(h_α), λ2(h_α))` over the positive roots in canonical order.
    pub fn min_vector(&self) -> Vec<u64> {
        bounds_from_pair(&self.first, &self.second)
            .expect("components share rank and are dominant")
            .values()
            .to_vec()
    }
}

impl fmt::Display for WeightPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// All orbits in `P(λ, 2)`, sorted with `(λ, 0)` first.
pub fn enumerate_pairs(lambda: &Weight) -> Result<Vec<WeightPair>> {
    lambda.require_dominant()?;
    let mut pairs: Vec<WeightPair> = box_below(lambda)
        .into_iter()
        .map(|first| {
            let second = lambda - &first;
            WeightPair::new(first, second)
        })
        .collect::<Result<_>>()?;
    pairs.sort_by(|a, b| b.first.to_eps().cmp(&a.first.to_eps()).then(b.cmp(a)));
    pairs.dedup();
    Ok(pairs)
}

/// Weights `μ` with `0 ≤ μ_i ≤ λ_i` coordinatewise.
fn box_below(lambda: &Weight) -> Vec<Weight> {
    let mut out = vec![Weight::zero(lambda.rank())];
    for (k, &m) in lambda.coords().iter().enumerate() {
        out = out
            .into_iter()
            .flat_map(|base| {
                (0..=m).map(move |v| {
                    let mut c = base.coords().to_vec();
                    c[k] = v;
                    Weight::from_coords(c).expect("rank preserved")
                })
            })
            .collect();
    }
    out
}

/// `a ⪯ b` in `P(λ, 2)`.
pub fn order_leq(a: &WeightPair, b: &WeightPair) -> Result<bool> {
    if a.total() != b.total() {
        return Err(Error::TotalsDiffer(a.total(), b.total()));
    }
    Ok(a.min_vector()
        .iter()
        .zip(b.min_vector())
        .all(|(x, y)| *x <= y))
}

/// The unique maximal orbit: odd coordinates are split alternately rounding
/// down and up, even coordinates are halved.
pub fn maximal_pair(lambda: &Weight) -> Result<WeightPair> {
    lambda.require_dominant()?;
    let mut sign = -1;
    let first: Vec<i64> = lambda
        .coords()
        .iter()
        .map(|&m| {
            if m % 2 == 0 {
                m / 2
            } else {
                let v = (m + sign) / 2;
                sign = -sign;
                v
            }
        })
        .collect();
    let first = Weight::new(lambda.rank(), first)?;
    let second = lambda - &first;
    WeightPair::new(first, second)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetEdge {
    pub lower: usize,
    pub upper: usize,
    pub schur_positive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub lower: WeightPair,
    pub upper: WeightPair,
    pub diff: SignedDecompositionMap,
}

/// Outcome of checking Schur positivity along the order of `P(λ, 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetReport {
    pub lambda: Weight,
    pub nodes: Vec<WeightPair>,
    /// Cover relations only; `schur_positive` refers to the cover's difference.
    pub edges: Vec<PosetEdge>,
    pub min_pair: WeightPair,
    pub max_pair: WeightPair,
    pub comparable_pairs: usize,
    pub schur_positive: bool,
    pub counterexamples: Vec<Counterexample>,
}

/// Strict comparability matrix `less[a][b] = a ≺ b`.
pub fn strict_order(nodes: &[WeightPair]) -> Result<Vec<Vec<bool>>> {
    let mins: Vec<Vec<u64>> = nodes.iter().map(WeightPair::min_vector).collect();
    let mut less = vec![vec![false; nodes.len()]; nodes.len()];
    for a in 0..nodes.len() {
        for b in 0..nodes.len() {
            if a != b && nodes[a].total() != nodes[b].total() {
                return Err(Error::TotalsDiffer(nodes[a].total(), nodes[b].total()));
            }
            less[a][b] =
                a != b && mins[a] != mins[b] && mins[a].iter().zip(&mins[b]).all(|(x, y)| x <= y);
        }
    }
    Ok(less)
}

/// For every comparable `A ≺ B`, checks that `s_B - s_A` (product of Schur
/// functions of the pair components) is Schur positive.
pub fn schur_monotonicity_check(lambda: &Weight) -> Result<PosetReport> {
    let nodes = enumerate_pairs(lambda)?;
    let less = strict_order(&nodes)?;
    let products: Vec<DecompositionMap> = nodes
        .iter()
        .map(|p| lr_coefficients(p.first(), p.second()))
        .collect::<Result<_>>()?;

    let mut edges = Vec::new();
    let mut counterexamples = Vec::new();
    let mut comparable_pairs = 0;
    for a in 0..nodes.len() {
        for b in 0..nodes.len() {
            if !less[a][b] {
                continue;
            }
            comparable_pairs += 1;
            let diff = products[b].difference(&products[a]);
            let positive = diff.is_nonnegative();
            if !positive {
                counterexamples.push(Counterexample {
                    lower: nodes[a].clone(),
                    upper: nodes[b].clone(),
                    diff,
                });
            }
            let is_cover = (0..nodes.len()).all(|c| !(less[a][c] && less[c][b]));
            if is_cover {
                edges.push(PosetEdge {
                    lower: a,
                    upper: b,
                    schur_positive: positive,
                });
            }
        }
    }

    Ok(PosetReport {
        lambda: lambda.clone(),
        min_pair: WeightPair::new(lambda.clone(), Weight::zero(lambda.rank()))?,
        max_pair: maximal_pair(lambda)?,
        schur_positive: counterexamples.is_empty(),
        nodes,
        edges,
        comparable_pairs,
        counterexamples,
    })
}

/// Predicted `sl_n`-character of the truncated local Weyl module at `λ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylPrediction {
    pub lambda: Weight,
    pub max_pair: WeightPair,
    pub character: DecompositionMap,
    pub predicted_dim: u64,
    /// Always true: the prediction assumes the tensor-product multiplicities
    /// describe the module at the maximal pair.
    pub conjectural: bool,
    /// Set when the maximal pair falls into a regime where that assumption
    /// is a theorem.
    pub proven_regime: Option<Regime>,
}

pub fn weyl_character_prediction(lambda: &Weight) -> Result<WeylPrediction> {
    let max_pair = maximal_pair(lambda)?;
    let character = lr_coefficients(max_pair.first(), max_pair.second())?;
    let predicted_dim = weyl_dim(max_pair.first())? * weyl_dim(max_pair.second())?;
    Ok(WeylPrediction {
        lambda: lambda.clone(),
        proven_regime: proven_regime(max_pair.first(), max_pair.second())?,
        max_pair,
        character,
        predicted_dim,
        conjectural: true,
    })
}

/// Direction of `schur_product_diff` along the order: the pair with the
/// larger min-vector is the minuend.
pub fn oriented_schur_diff(
    a: &WeightPair,
    b: &WeightPair,
) -> Result<Option<crate::tensor::SchurDifference>> {
    match (order_leq(a, b)?, order_leq(b, a)?) {
        (true, _) => schur_product_diff(b, a).map(Some),
        (_, true) => schur_product_diff(a, b).map(Some),
        _ => Ok(None),
    }
}
