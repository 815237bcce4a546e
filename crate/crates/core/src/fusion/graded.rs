//! Graded fusion products of two evaluation modules.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tensor::{DecompositionMap, TermJson};
use crate::typea::{Rank, Weight};

use super::irrep::ExplicitModule;
use super::linalg::{add_entry, q, Echelon, SparseVec, Q};
use super::peel::peel_character;

/// Multiplicities `a^τ(s)` of `V(τ)` in degree `s` of a fusion product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GradedJson", try_from = "GradedJson")]
pub struct GradedDecomposition {
    lambda1: Weight,
    lambda2: Weight,
    slices: BTreeMap<u64, DecompositionMap>,
}

#[derive(Serialize, Deserialize)]
struct SliceJson {
    degree: u64,
    terms: Vec<TermJson<u64>>,
}

#[derive(Serialize, Deserialize)]
struct GradedJson {
    n: usize,
    lambda1: Weight,
    lambda2: Weight,
    slices: Vec<SliceJson>,
}

impl From<GradedDecomposition> for GradedJson {
    fn from(g: GradedDecomposition) -> Self {
        GradedJson {
            n: g.rank().n(),
            slices: g
                .slices
                .iter()
                .map(|(&degree, map)| SliceJson {
                    degree,
                    terms: map
                        .sorted()
                        .into_iter()
                        .map(|(tau, mult)| TermJson { tau, mult })
                        .collect(),
                })
                .collect(),
            lambda1: g.lambda1,
            lambda2: g.lambda2,
        }
    }
}

impl TryFrom<GradedJson> for GradedDecomposition {
    type Error = Error;

    fn try_from(json: GradedJson) -> Result<Self> {
        let rank = Rank::new(json.n)?;
        json.lambda1.require_rank(rank)?;
        json.lambda2.require_rank(rank)?;
        let mut slices = BTreeMap::new();
        for slice in json.slices {
            let map: &mut DecompositionMap = slices
                .entry(slice.degree)
                .or_insert_with(|| DecompositionMap::new(rank));
            for term in slice.terms {
                term.tau.require_rank(rank)?;
                term.tau.require_dominant()?;
                map.add(term.tau, term.mult);
            }
        }
        Ok(GradedDecomposition {
            lambda1: json.lambda1,
            lambda2: json.lambda2,
            slices,
        })
    }
}

impl GradedDecomposition {
    pub fn rank(&self) -> Rank {
        self.lambda1.rank()
    }

    pub fn lambda1(&self) -> &Weight {
        &self.lambda1
    }

    pub fn lambda2(&self) -> &Weight {
        &self.lambda2
    }

    /// Nonempty slices by degree.
    pub fn slices(&self) -> &BTreeMap<u64, DecompositionMap> {
        &self.slices
    }

    pub fn get(&self, degree: u64, tau: &Weight) -> u64 {
        self.slices.get(&degree).map_or(0, |m| m.get(tau))
    }

    pub fn max_degree(&self) -> u64 {
        self.slices.keys().next_back().copied().unwrap_or(0)
    }

    /// Forgets the grading.
    pub fn ungraded(&self) -> DecompositionMap {
        let mut out = DecompositionMap::new(self.rank());
        for map in self.slices.values() {
            for (tau, m) in map.iter() {
                out.add(tau.clone(), *m);
            }
        }
        out
    }

    pub fn total_dim(&self) -> Result<u64> {
        self.ungraded().total_dim()
    }
}

#[derive(Clone, Copy)]
enum Generator {
    E,
    F,
    H,
}

const GENERATORS: [Generator; 3] = [Generator::E, Generator::F, Generator::H];

/// `M1 ⊗ M2` with basis index `a * dim M2 + b`.
struct Product<'a> {
    m1: &'a ExplicitModule,
    m2: &'a ExplicitModule,
}

impl Product<'_> {
    fn dim(&self) -> usize {
        self.m1.dim() * self.m2.dim()
    }

    fn weight(&self, idx: usize) -> Weight {
        let d2 = self.m2.dim();
        &self.m1.weights()[idx / d2] + &self.m2.weights()[idx % d2]
    }

    /// `x ↦ a·(x ⊗ 1) + b·(1 ⊗ x)` applied to `v`.
    fn act(&self, g: Generator, k: usize, v: &SparseVec, a: &Q, b: &Q) -> SparseVec {
        let d2 = self.m2.dim();
        let mut out = SparseVec::new();
        for (&idx, c) in v {
            let (i, j) = (idx / d2, idx % d2);
            match g {
                Generator::H => {
                    let eig = a * q(self.m1.h_eigenvalue(k, i)) + b * q(self.m2.h_eigenvalue(k, j));
                    add_entry(&mut out, idx, c * eig);
                }
                Generator::E | Generator::F => {
                    let (x1, x2) = match g {
                        Generator::E => (self.m1.e(k), self.m2.e(k)),
                        _ => (self.m1.f(k), self.m2.f(k)),
                    };
                    let ca = c * a;
                    for (i2, m) in x1.column(i) {
                        add_entry(&mut out, i2 * d2 + j, &ca * m);
                    }
                    let cb = c * b;
                    for (j2, m) in x2.column(j) {
                        add_entry(&mut out, i * d2 + j2, &cb * m);
                    }
                }
            }
        }
        out
    }
}

/// A growing subspace of `M1 ⊗ M2` spanned by weight vectors.
struct Flag<'a> {
    product: Product<'a>,
    spaces: HashMap<Weight, Echelon>,
    total: usize,
}

impl Flag<'_> {
    fn insert(&mut self, v: SparseVec) -> Option<(Weight, usize)> {
        let (&idx, _) = v.iter().next()?;
        let mu = self.product.weight(idx);
        let row = self.spaces.entry(mu.clone()).or_default().insert(v)?;
        self.total += 1;
        Some((mu, row))
    }

    fn row(&self, mu: &Weight, row: usize) -> SparseVec {
        self.spaces[mu].rows()[row].clone()
    }

    /// Closes under the degree-0 generators, starting from the rows in
    /// `fresh` and appending every row it adds.
    fn close(&mut self, fresh: &mut Vec<(Weight, usize)>, from: usize) {
        let one = q(1);
        let nodes = self.product.m1.rank().nodes();
        let mut next = from;
        while next < fresh.len() {
            let v = self.row(&fresh[next].0, fresh[next].1);
            for k in 1..=nodes {
                for g in [Generator::E, Generator::F] {
                    let image = self.product.act(g, k, &v, &one, &one);
                    fresh.extend(self.insert(image));
                }
            }
            next += 1;
        }
    }
}

/// Computes the graded decomposition of the fusion product of `M1` and `M2`
/// at evaluation points `c1 ≠ c2`.
pub fn fusion_graded(
    m1: &ExplicitModule,
    c1: &Q,
    m2: &ExplicitModule,
    c2: &Q,
) -> Result<GradedDecomposition> {
    let rank = m1.rank();
    m2.highest_weight().require_rank(rank)?;
    if c1 == c2 {
        return Err(Error::EqualEvaluationPoints);
    }
    let mut flag = Flag {
        product: Product { m1, m2 },
        spaces: HashMap::new(),
        total: 0,
    };
    let full = flag.product.dim();
    let nodes = rank.nodes();

    let mut slices = BTreeMap::new();
    let mut fresh: Vec<(Weight, usize)> = flag
        .insert(SparseVec::from([(0, q(1))]))
        .into_iter()
        .collect();
    flag.close(&mut fresh, 0);
    let mut degree = 0u64;
    loop {
        let mut ch: BTreeMap<Weight, i64> = BTreeMap::new();
        for (mu, _) in &fresh {
            *ch.entry(mu.clone()).or_insert(0) += 1;
        }
        slices.insert(degree, peel_character(rank, &ch)?);
        if flag.total == full {
            break;
        }

        // degree-1 generators only need to act on rows new at the last step
        let previous = std::mem::take(&mut fresh);
        for (mu, row) in &previous {
            let v = flag.row(mu, *row);
            for k in 1..=nodes {
                for g in GENERATORS {
                    let image = flag.product.act(g, k, &v, c1, c2);
                    fresh.extend(flag.insert(image));
                }
            }
        }
        flag.close(&mut fresh, 0);
        degree += 1;
        if fresh.is_empty() {
            return Err(Error::Invariant(format!(
                "filtration stalled at dimension {} of {full} in degree {degree}",
                flag.total
            )));
        }
    }
    Ok(GradedDecomposition {
        lambda1: m1.highest_weight().clone(),
        lambda2: m2.highest_weight().clone(),
        slices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::irrep::{build_irrep, DEFAULT_DIM_CAP};
    use crate::tensor::lr_coefficients;
    use crate::testutil::{dominant_weights, w};
    use crate::typea::pairing;

    fn fuse(a: &Weight, b: &Weight, c1: i64, c2: i64) -> GradedDecomposition {
        let m1 = build_irrep(a, DEFAULT_DIM_CAP).unwrap();
        let m2 = build_irrep(b, DEFAULT_DIM_CAP).unwrap();
        fusion_graded(&m1, &q(c1), &m2, &q(c2)).unwrap()
    }

    fn entries(g: &GradedDecomposition) -> Vec<(u64, Weight, u64)> {
        g.slices()
            .iter()
            .flat_map(|(s, m)| m.sorted().into_iter().map(move |(tau, k)| (*s, tau, k)))
            .collect()
    }

    #[test]
    fn sl2_example() {
        let g = fuse(&w(&[2]), &w(&[1]), 0, 1);
        assert_eq!(entries(&g), vec![(0, w(&[3]), 1), (1, w(&[1]), 1)]);
        assert_eq!(fuse(&w(&[2]), &w(&[1]), 1, 3), g);
    }

    #[test]
    fn trivial_second_factor() {
        let g = fuse(&w(&[1, 2]), &w(&[0, 0]), 0, 1);
        assert_eq!(entries(&g), vec![(0, w(&[1, 2]), 1)]);
    }

    #[test]
    fn equal_points_rejected() {
        let m = build_irrep(&w(&[1]), DEFAULT_DIM_CAP).unwrap();
        assert_eq!(
            fusion_graded(&m, &q(2), &m, &q(2)).unwrap_err(),
            Error::EqualEvaluationPoints
        );
    }

    #[test]
    fn sl2_degrees() {
        for m1 in 0..=4 {
            for m2 in 0..=m1 {
                let g = fuse(&w(&[m1]), &w(&[m2]), 0, 1);
                assert_eq!(g.max_degree(), m2 as u64);
                for l in 0..=m2 {
                    assert_eq!(g.get(l as u64, &w(&[m1 + m2 - 2 * l])), 1);
                }
            }
        }
    }

    #[test]
    fn sl3_collapse_independence_and_bounds() {
        let rank = Rank::new(3).unwrap();
        let weights = dominant_weights(3, 1);
        for a in &weights {
            for b in &weights {
                let g = fuse(a, b, 0, 1);
                assert_eq!(g.ungraded(), lr_coefficients(a, b).unwrap());
                assert_eq!(g.slices()[&0].sorted()[0], (a + b, 1));
                assert_eq!(fuse(a, b, 2, -1), g);
                let bound: i64 = rank
                    .positive_roots()
                    .into_iter()
                    .map(|r| pairing(a, r).unwrap().min(pairing(b, r).unwrap()))
                    .sum();
                assert!(g.max_degree() as i64 <= bound, "{a} {b}");
            }
        }
    }

    #[test]
    fn json_shape_and_round_trip() {
        let g = fuse(&w(&[2]), &w(&[1]), 0, 1);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(
            json,
            r#"{"n":2,"lambda1":[2],"lambda2":[1],"slices":[{"degree":0,"terms":[{"tau":[3],"mult":1}]},{"degree":1,"terms":[{"tau":[1],"mult":1}]}]}"#
        );
        let back: GradedDecomposition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
    }
}
