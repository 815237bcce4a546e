//! Tensor-product decompositions: the Littlewood–Richardson side.
//!
//! [`lr_coefficients`] uses the Brauer–Klimyk formula. Independent checks
//! against character peeling live in the tests of [`crate::fusion`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::character::{weight_multiplicities, weyl_dim};
use crate::error::{Error, Result};
use crate::poset::WeightPair;
use crate::typea::{presentation_order, Rank, Weight};

/// Multiplicities of simple modules `V(τ)` in some module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "DecompositionJson", try_from = "DecompositionJson")]
pub struct DecompositionMap {
    rank: Rank,
    terms: BTreeMap<Weight, u64>,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct TermJson<T> {
    pub(crate) tau: Weight,
    pub(crate) mult: T,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    n: usize,
    terms: Vec<TermJson<u64>>,
}

impl From<DecompositionMap> for DecompositionJson {
    fn from(map: DecompositionMap) -> Self {
        DecompositionJson {
            n: map.rank.n(),
            terms: map
                .sorted()
                .into_iter()
                .map(|(tau, mult)| TermJson { tau, mult })
                .collect(),
        }
    }
}

impl TryFrom<DecompositionJson> for DecompositionMap {
    type Error = Error;

    fn try_from(json: DecompositionJson) -> Result<Self> {
        let mut map = DecompositionMap::new(Rank::new(json.n)?);
        for term in json.terms {
            term.tau.require_rank(map.rank)?;
            term.tau.require_dominant()?;
            map.add(term.tau, term.mult);
        }
        Ok(map)
    }
}

impl DecompositionMap {
    pub fn new(rank: Rank) -> Self {
        DecompositionMap {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// Map with a single term `V(τ)` of multiplicity 1.
    pub fn single(tau: Weight) -> Self {
        let mut map = DecompositionMap::new(tau.rank());
        map.add(tau, 1);
        map
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    /// Adds `mult` copies of `V(τ)`; zero is a no-op.
    pub fn add(&mut self, tau: Weight, mult: u64) {
        if mult > 0 {
            *self.terms.entry(tau).or_insert(0) += mult;
        }
    }

    pub fn get(&self, tau: &Weight) -> u64 {
        self.terms.get(tau).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.terms.iter()
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    /// Terms in presentation order (top term first).
    pub fn sorted(&self) -> Vec<(Weight, u64)> {
        let mut v: Vec<_> = self.terms.iter().map(|(w, m)| (w.clone(), *m)).collect();
        v.sort_by(|a, b| presentation_order(&a.0, &b.0));
        v
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|&m| m == 1)
    }

    /// `Σ_τ mult(τ) · dim V(τ)`.
    pub fn total_dim(&self) -> Result<u64> {
        self.terms
            .iter()
            .try_fold(0u64, |acc, (tau, m)| Ok(acc + m * weyl_dim(tau)?))
    }

    /// Entrywise `self - other`.
    pub fn difference(&self, other: &DecompositionMap) -> SignedDecompositionMap {
        let mut out = SignedDecompositionMap::new(self.rank);
        for (tau, &m) in &self.terms {
            out.add(tau.clone(), m as i64);
        }
        for (tau, &m) in &other.terms {
            out.add(tau.clone(), -(m as i64));
        }
        out
    }

    /// Weights where the two maps disagree, with both multiplicities.
    pub fn mismatches(&self, other: &DecompositionMap) -> Vec<(Weight, u64, u64)> {
        let mut keys: Vec<&Weight> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort_by(|a, b| presentation_order(a, b));
        keys.dedup();
        keys.into_iter()
            .filter_map(|tau| {
                let (a, c) = (self.get(tau), other.get(tau));
                (a != c).then(|| (tau.clone(), a, c))
            })
            .collect()
    }
}

impl FromIterator<(Weight, u64)> for DecompositionMap {
    /// Panics on an empty iterator, which carries no rank.
    fn from_iter<I: IntoIterator<Item = (Weight, u64)>>(iter: I) -> Self {
        let mut iter = iter.into_iter().peekable();
        let rank = iter.peek().expect("empty decomposition").0.rank();
        let mut map = DecompositionMap::new(rank);
        for (tau, m) in iter {
            map.add(tau, m);
        }
        map
    }
}

/// Signed coefficients, e.g. of a difference of Schur products. Zero
/// entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedDecompositionMap {
    rank: Rank,
    terms: BTreeMap<Weight, i64>,
}

impl SignedDecompositionMap {
    pub fn new(rank: Rank) -> Self {
        SignedDecompositionMap {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, tau: Weight, coeff: i64) {
        let entry = self.terms.entry(tau.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&tau);
        }
    }

    pub fn get(&self, tau: &Weight) -> i64 {
        self.terms.get(tau).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    pub fn negative_terms(&self) -> Vec<(Weight, i64)> {
        self.terms
            .iter()
            .filter(|(_, c)| **c < 0)
            .map(|(w, c)| (w.clone(), *c))
            .collect()
    }

    pub fn sorted(&self) -> Vec<(Weight, i64)> {
        let mut v: Vec<_> = self.terms.iter().map(|(w, c)| (w.clone(), *c)).collect();
        v.sort_by(|a, b| presentation_order(&a.0, &b.0));
        v
    }
}

/// Sorts `v` descending and returns the parity of the permutation used, or
/// `None` when two entries coincide.
fn sort_desc_with_sign(v: &mut [i64]) -> Option<i64> {
    let mut sign = 1;
    // insertion sort; lengths are at most a handful
    for i in 1..v.len() {
        let mut k = i;
        while k > 0 && v[k - 1] < v[k] {
            v.swap(k - 1, k);
            sign = -sign;
            k -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

fn check_pair(lambda: &Weight, mu: &Weight) -> Result<()> {
    mu.require_rank(lambda.rank())?;
    lambda.require_dominant()?;
    mu.require_dominant()
}

/// Decomposition of `V(λ) ⊗ V(μ)` by the Brauer–Klimyk formula.
///
/// For each weight `ν` of `V(μ)`, `λ + ν + ρ` is moved to the dominant
/// chamber by sorting its ε-coordinates; singular points drop out.
pub fn lr_coefficients(lambda: &Weight, mu: &Weight) -> Result<DecompositionMap> {
    check_pair(lambda, mu)?;
    let rank = lambda.rank();
    let rho = Weight::rho(rank);
    let rho_eps = rho.to_eps();
    let shifted = lambda + &rho;

    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, m) in weight_multiplicities(mu)? {
        let mut eps = (&shifted + &nu).to_eps();
        let Some(sign) = sort_desc_with_sign(&mut eps) else {
            continue;
        };
        for (e, r) in eps.iter_mut().zip(&rho_eps) {
            *e -= r;
        }
        *acc.entry(Weight::from_eps(&eps)?).or_insert(0) += sign * m as i64;
    }

    let mut map = DecompositionMap::new(rank);
    for (tau, c) in acc {
        if c < 0 {
            return Err(Error::Invariant(format!(
                "negative Brauer-Klimyk coefficient {c} at {tau}"
            )));
        }
        map.add(tau, c as u64);
    }
    Ok(map)
}

/// Result of comparing two Schur products `s_a s_b - s_c s_d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurDifference {
    pub diff: SignedDecompositionMap,
    pub nonnegative: bool,
}

/// `lr_coefficients(high) - lr_coefficients(low)`, entrywise.
pub fn schur_product_diff(high: &WeightPair, low: &WeightPair) -> Result<SchurDifference> {
    if high.total() != low.total() {
        return Err(Error::TotalsDiffer(high.total(), low.total()));
    }
    let a = lr_coefficients(high.first(), high.second())?;
    let b = lr_coefficients(low.first(), low.second())?;
    let diff = a.difference(&b);
    Ok(SchurDifference {
        nonnegative: diff.is_nonnegative(),
        diff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{dominant_weights, w};

    fn dmap(n: usize, terms: &[(&[i64], u64)]) -> DecompositionMap {
        let mut m = DecompositionMap::new(Rank::new(n).unwrap());
        for (c, k) in terms {
            m.add(w(c), *k);
        }
        m
    }

    #[test]
    fn clebsch_gordan() {
        let got = lr_coefficients(&w(&[2]), &w(&[1])).unwrap();
        assert_eq!(got, dmap(2, &[(&[3], 1), (&[1], 1)]));
    }

    #[test]
    fn trivial_factor() {
        let lambda = w(&[2, 0, 1]);
        let got = lr_coefficients(&lambda, &w(&[0, 0, 0])).unwrap();
        assert_eq!(got, DecompositionMap::single(lambda));
    }

    #[test]
    fn sl3_fundamentals() {
        let got = lr_coefficients(&w(&[1, 0]), &w(&[0, 1])).unwrap();
        assert_eq!(got, dmap(3, &[(&[1, 1], 1), (&[0, 0], 1)]));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            lr_coefficients(&w(&[1, -1]), &w(&[0, 1])),
            Err(Error::NotDominant(_))
        ));
        assert!(matches!(
            lr_coefficients(&w(&[1, 0]), &w(&[0, 1, 0])),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn symmetric_dimension_and_top_term() {
        for n in 2..=4 {
            let ws = dominant_weights(n, 2);
            for lambda in &ws {
                for mu in &ws {
                    let c = lr_coefficients(lambda, mu).unwrap();
                    assert_eq!(c, lr_coefficients(mu, lambda).unwrap());
                    assert_eq!(
                        c.total_dim().unwrap(),
                        weyl_dim(lambda).unwrap() * weyl_dim(mu).unwrap()
                    );
                    let top = lambda + mu;
                    assert_eq!(c.get(&top), 1);
                    assert!(c.weights().all(|tau| top.dominates(tau)));
                }
            }
        }
    }

    #[test]
    fn schur_difference_examples() {
        let high = WeightPair::new(w(&[1]), w(&[1])).unwrap();
        let low = WeightPair::new(w(&[2]), w(&[0])).unwrap();
        let d = schur_product_diff(&high, &low).unwrap();
        assert!(d.nonnegative);
        assert_eq!(d.diff.sorted(), vec![(w(&[0]), 1)]);

        let same = schur_product_diff(&high, &high).unwrap();
        assert!(same.diff.is_empty());

        let high = WeightPair::new(w(&[1, 0]), w(&[0, 1])).unwrap();
        let low = WeightPair::new(w(&[1, 1]), w(&[0, 0])).unwrap();
        let d = schur_product_diff(&high, &low).unwrap();
        assert!(d.nonnegative);
        assert_eq!(d.diff.sorted(), vec![(w(&[0, 0]), 1)]);
    }

    #[test]
    fn schur_difference_needs_equal_totals() {
        let a = WeightPair::new(w(&[1]), w(&[1])).unwrap();
        let b = WeightPair::new(w(&[1]), w(&[0])).unwrap();
        assert!(matches!(
            schur_product_diff(&a, &b),
            Err(Error::TotalsDiffer(..))
        ));
    }

    #[test]
    fn json_shape_and_round_trip() {
        let c = lr_coefficients(&w(&[1, 0]), &w(&[0, 1])).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(
            s,
            r#"{"n":3,"terms":[{"tau":[1,1],"mult":1},{"tau":[0,0],"mult":1}]}"#
        );
        let back: DecompositionMap = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<DecompositionMap>(
            r#"{"n":3,"terms":[{"tau":[1,-1],"mult":1}]}"#
        )
        .is_err());
    }
}
