//! Closed-form multiplicities in the regimes where the polytope side is
//! known to match the tensor product: `sl_2`, rectangular pairs
//! `(m_i ω_i, m_j ω_j)`, the two Pieri rules, and `λ1 ≫ λ2`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::character::{weight_multiplicities, weyl_orbit};
use crate::dyck::{dominant_point_counts, LatticePoint};
use crate::error::{Error, Result};
use crate::tensor::{lr_coefficients, DecompositionMap};
use crate::typea::{dominant_weights, Rank, Root, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    Sl2,
    Rectangular,
    PieriRow,
    PieriColumn,
    Large,
}

impl Regime {
    pub const ALL: [Regime; 5] = [
        Regime::Sl2,
        Regime::Rectangular,
        Regime::PieriRow,
        Regime::PieriColumn,
        Regime::Large,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Regime::Sl2 => "sl2",
            Regime::Rectangular => "rectangular",
            Regime::PieriRow => "pieri-row",
            Regime::PieriColumn => "pieri-column",
            Regime::Large => "large",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Regime::ALL
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| Error::UnknownCase(s.to_string()))
    }
}

/// Clebsch–Gordan: `V(m1) ⊗ V(m2) = ⊕_{ℓ ≤ min} V(m1 + m2 - 2ℓ)`.
pub fn sl2_mults(m1: u64, m2: u64) -> DecompositionMap {
    let (m1, m2) = (m1 as i64, m2 as i64);
    (0..=m1.min(m2))
        .map(|l| {
            (
                Weight::from_coords(vec![m1 + m2 - 2 * l]).expect("rank 2"),
                1,
            )
        })
        .collect()
}

/// Orders the two rectangular factors so that `i ≤ j`.
fn rect_params(
    rank: Rank,
    i: usize,
    mi: i64,
    j: usize,
    mj: i64,
) -> Result<(usize, i64, usize, i64)> {
    rank.check_node(i)?;
    rank.check_node(j)?;
    if mi < 0 || mj < 0 {
        return Err(Error::Precondition("levels must be nonnegative".into()));
    }
    Ok(if i <= j {
        (i, mi, j, mj)
    } else {
        (j, mj, i, mi)
    })
}

fn rect_top(rank: Rank, i: usize, mi: i64, j: usize, mj: i64) -> Weight {
    &Weight::fundamental(rank, i).scaled(mi) + &Weight::fundamental(rank, j).scaled(mj)
}

/// Non-increasing sequences `bound ≥ a_0 ≥ ... ≥ a_p ≥ 0`.
fn non_increasing(len: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                let cap = prefix.last().copied().unwrap_or(bound);
                (0..=cap).map(move |a| {
                    let mut v = prefix.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

/// Diagonal candidates `Σ_q a_q e_{i-q, j+q}` with
/// `min(m_i, m_j) ≥ a_0 ≥ ... ≥ a_p ≥ 0`, `p = min(i-1, n-1-j)`, each paired
/// with `m_i ω_i + m_j ω_j - wt(point)`.
pub fn rect_hw_points(
    rank: Rank,
    i: usize,
    mi: i64,
    j: usize,
    mj: i64,
) -> Result<Vec<(LatticePoint, Weight)>> {
    let (i, mi, j, mj) = rect_params(rank, i, mi, j, mj)?;
    let p = (i - 1).min(rank.nodes() - j);
    let top = rect_top(rank, i, mi, j, mj);
    let mut out = Vec::new();
    for a in non_increasing(p + 1, mi.min(mj)) {
        let point = LatticePoint::from_entries(
            a.iter()
                .enumerate()
                .map(|(q, &aq)| (Root { i: i - q, j: j + q }, aq as u64)),
        );
        let tau = &top - &point.weight(rank)?;
        if !tau.is_dominant() {
            return Err(Error::Invariant(format!(
                "rectangular candidate {point} has non-dominant weight {tau}"
            )));
        }
        out.push((point, tau));
    }
    Ok(out)
}

/// `τ = m_i ω_i + m_j ω_j + Σ_q b_q (ω_{i-q} + ω_{j+q} - ω_i - ω_j)` over
/// `Σ b_q ≤ min(m_i, m_j)`, with `ω_0 = ω_n = 0`.
///
/// `q` runs up to `min(i, n - j)`; the `q = 0` term vanishes. Distinct
/// tuples give distinct `τ`, each with multiplicity 1.
pub fn rect_mults_formula(
    rank: Rank,
    i: usize,
    mi: i64,
    j: usize,
    mj: i64,
) -> Result<DecompositionMap> {
    let (i, mi, j, mj) = rect_params(rank, i, mi, j, mj)?;
    let top = rect_top(rank, i, mi, j, mj);
    let qmax = i.min(rank.n() - j);
    let steps: Vec<Weight> = (1..=qmax)
        .map(|q| {
            let up = &Weight::fundamental(rank, i - q) + &Weight::fundamental(rank, j + q);
            let down = &Weight::fundamental(rank, i) + &Weight::fundamental(rank, j);
            &up - &down
        })
        .collect();

    let budget = mi.min(mj);
    let mut taus = BTreeSet::new();
    let mut stack = vec![(0usize, budget, top)];
    while let Some((q, left, tau)) = stack.pop() {
        if q == steps.len() {
            taus.insert(tau);
            continue;
        }
        for b in 0..=left {
            stack.push((q + 1, left - b, &tau + &steps[q].scaled(b)));
        }
    }

    let mut map = DecompositionMap::new(rank);
    for tau in taus {
        if !tau.is_dominant() {
            return Err(Error::Invariant(format!(
                "rectangular formula produced {tau}"
            )));
        }
        map.add(tau, 1);
    }
    Ok(map)
}

/// `V(λ) ⊗ V(kω_1)`: tuples `(b_1..b_n)` summing to `k` with
/// `b_j ≤ m_{j-1}` for `j ≥ 2`; `b_i` is added to the `i`-th ε-coordinate.
pub fn pieri_row(lambda: &Weight, k: u64) -> Result<DecompositionMap> {
    lambda.require_dominant()?;
    let n = lambda.rank().n();
    let eps = lambda.to_eps();
    let mut map = DecompositionMap::new(lambda.rank());

    fn fill(pos: usize, left: u64, lambda: &Weight, b: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        let n = lambda.rank().n();
        if pos == n {
            if left == 0 {
                out.push(b.clone());
            }
            return;
        }
        let cap = if pos == 0 {
            left
        } else {
            left.min(lambda.coord(pos) as u64)
        };
        for v in 0..=cap {
            b.push(v);
            fill(pos + 1, left - v, lambda, b, out);
            b.pop();
        }
    }

    let mut tuples = Vec::new();
    fill(0, k, lambda, &mut Vec::with_capacity(n), &mut tuples);
    for b in tuples {
        let shifted: Vec<i64> = eps.iter().zip(&b).map(|(e, v)| e + *v as i64).collect();
        let tau = Weight::from_eps(&shifted)?;
        if !tau.is_dominant() {
            return Err(Error::Invariant(format!("row Pieri produced {tau}")));
        }
        map.add(tau, 1);
    }
    Ok(map)
}

/// `V(λ) ⊗ V(ω_j)`: strictly increasing `b_1 < ... < b_j` in `1..=n` such
/// that `b_{i-1} ≠ b_i - 1` forces `m_{b_i - 1} ≠ 0`, with `b_0 = 0`. Each
/// tuple adds 1 to the ε-coordinates `b_1, ..., b_j`.
pub fn pieri_column(lambda: &Weight, j: usize) -> Result<DecompositionMap> {
    lambda.require_dominant()?;
    let rank = lambda.rank();
    rank.check_node(j)?;
    let n = rank.n();
    let eps = lambda.to_eps();
    let mut map = DecompositionMap::new(rank);

    let mut tuple = vec![0usize; j];
    loop_combinations(n, j, &mut tuple, 0, 1, &mut |b| {
        let admissible = b.iter().enumerate().all(|(idx, &bi)| {
            let prev = if idx == 0 { 0 } else { b[idx - 1] };
            prev == bi - 1 || lambda.coord(bi - 1) != 0
        });
        if !admissible {
            return Ok(());
        }
        let mut shifted = eps.clone();
        for &bi in b {
            shifted[bi - 1] += 1;
        }
        let tau = Weight::from_eps(&shifted)?;
        if !tau.is_dominant() {
            return Err(Error::Invariant(format!("column Pieri produced {tau}")));
        }
        map.add(tau, 1);
        Ok(())
    })?;
    Ok(map)
}

fn loop_combinations(
    n: usize,
    k: usize,
    buf: &mut [usize],
    pos: usize,
    start: usize,
    visit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if pos == k {
        return visit(buf);
    }
    for v in start..=n {
        buf[pos] = v;
        loop_combinations(n, k, buf, pos + 1, v + 1, visit)?;
    }
    Ok(())
}

/// `λ1 ≫ λ2`: `λ1 + μ` is dominant for every `μ` in the Weyl orbit of `λ2`.
pub fn is_much_greater(lambda1: &Weight, lambda2: &Weight) -> Result<bool> {
    lambda2.require_rank(lambda1.rank())?;
    lambda1.require_dominant()?;
    Ok(weyl_orbit(lambda2)?
        .iter()
        .all(|mu| (lambda1 + mu).is_dominant()))
}

/// For `λ1 ≫ λ2`, `c^τ = dim V(λ2)_{τ - λ1}`.
pub fn large_case_mults(lambda1: &Weight, lambda2: &Weight) -> Result<DecompositionMap> {
    if !is_much_greater(lambda1, lambda2)? {
        return Err(Error::Precondition(format!(
            "{lambda1} is not much greater than {lambda2}"
        )));
    }
    let mut map = DecompositionMap::new(lambda1.rank());
    for (nu, m) in weight_multiplicities(lambda2)? {
        map.add(lambda1 + &nu, m);
    }
    Ok(map)
}

/// The first regime (in [`Regime::ALL`] order) covering the pair, if any.
pub fn proven_regime(lambda1: &Weight, lambda2: &Weight) -> Result<Option<Regime>> {
    lambda2.require_rank(lambda1.rank())?;
    lambda1.require_dominant()?;
    lambda2.require_dominant()?;
    let support = |w: &Weight| w.coords().iter().filter(|&&m| m != 0).count();
    let is_row = |w: &Weight| w.coords()[1..].iter().all(|&m| m == 0);
    let is_column = |w: &Weight| support(w) == 1 && w.coords().iter().all(|&m| m <= 1);

    if lambda1.rank().n() == 2 {
        return Ok(Some(Regime::Sl2));
    }
    if support(lambda1) <= 1 && support(lambda2) <= 1 {
        return Ok(Some(Regime::Rectangular));
    }
    if is_row(lambda1) || is_row(lambda2) {
        return Ok(Some(Regime::PieriRow));
    }
    if is_column(lambda1) || is_column(lambda2) {
        return Ok(Some(Regime::PieriColumn));
    }
    if is_much_greater(lambda1, lambda2)? || is_much_greater(lambda2, lambda1)? {
        return Ok(Some(Regime::Large));
    }
    Ok(None)
}

/// Closed-form multiplicities for a pair in the given regime.
pub fn regime_mults(
    regime: Regime,
    lambda1: &Weight,
    lambda2: &Weight,
) -> Result<DecompositionMap> {
    let rank = lambda1.rank();
    let single_node = |w: &Weight| -> (usize, i64) {
        w.coords()
            .iter()
            .enumerate()
            .find(|(_, &m)| m != 0)
            .map(|(k, &m)| (k + 1, m))
            .unwrap_or((1, 0))
    };
    match regime {
        Regime::Sl2 => {
            if rank.n() != 2 {
                return Err(Error::Precondition("sl2 needs n = 2".into()));
            }
            Ok(sl2_mults(lambda1.coord(1) as u64, lambda2.coord(1) as u64))
        }
        Regime::Rectangular => {
            let (i, mi) = single_node(lambda1);
            let (j, mj) = single_node(lambda2);
            rect_mults_formula(rank, i, mi, j, mj)
        }
        Regime::PieriRow => {
            let is_row = |w: &Weight| w.coords()[1..].iter().all(|&m| m == 0);
            if is_row(lambda2) {
                pieri_row(lambda1, lambda2.coord(1) as u64)
            } else if is_row(lambda1) {
                pieri_row(lambda2, lambda1.coord(1) as u64)
            } else {
                Err(Error::Precondition("no factor of the form kω1".into()))
            }
        }
        Regime::PieriColumn => {
            let column = |w: &Weight| {
                let (k, m) = single_node(w);
                (m == 1 && w.coords().iter().filter(|&&x| x != 0).count() == 1).then_some(k)
            };
            if let Some(j) = column(lambda2) {
                pieri_column(lambda1, j)
            } else if let Some(j) = column(lambda1) {
                pieri_column(lambda2, j)
            } else {
                Err(Error::Precondition("no factor of the form ω_j".into()))
            }
        }
        Regime::Large => {
            if is_much_greater(lambda1, lambda2)? {
                large_case_mults(lambda1, lambda2)
            } else {
                large_case_mults(lambda2, lambda1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseParams {
    pub n: usize,
    pub lambda1: Weight,
    pub lambda2: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub tau: Weight,
    pub a: u64,
    pub c: u64,
    /// Which a-side quantity disagreed with the oracle.
    pub source: String,
}

/// One a-side vs c-side comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: Regime,
    pub params: CaseParams,
    pub equal: bool,
    pub a: DecompositionMap,
    pub c: DecompositionMap,
    pub mismatches: Vec<Mismatch>,
}

impl CaseReport {
    fn build(
        case: Regime,
        lambda1: &Weight,
        lambda2: &Weight,
        a: DecompositionMap,
    ) -> Result<Self> {
        let c = lr_coefficients(lambda1, lambda2)?;
        let mut mismatches: Vec<Mismatch> = a
            .mismatches(&c)
            .into_iter()
            .map(|(tau, a, c)| Mismatch {
                tau,
                a,
                c,
                source: "formula".into(),
            })
            .collect();
        let top = lambda1 + lambda2;
        if a.get(&top) != 1 || a.weights().any(|tau| !top.dominates(tau)) {
            mismatches.push(Mismatch {
                tau: top.clone(),
                a: a.get(&top),
                c: c.get(&top),
                source: "top-term".into(),
            });
        }
        Ok(CaseReport {
            case,
            params: CaseParams {
                n: lambda1.rank().n(),
                lambda1: lambda1.clone(),
                lambda2: lambda2.clone(),
            },
            equal: mismatches.is_empty(),
            a,
            c,
            mismatches,
        })
    }

    fn add_count_check(&mut self, source: &str, counts: &BTreeMap<Weight, u64>, exact: bool) {
        let mut keys: BTreeSet<&Weight> = counts.keys().collect();
        keys.extend(self.c.weights());
        let mut found = Vec::new();
        for tau in keys {
            let got = counts.get(tau).copied().unwrap_or(0);
            let want = self.c.get(tau);
            if (exact && got != want) || got < want {
                found.push(Mismatch {
                    tau: tau.clone(),
                    a: got,
                    c: want,
                    source: source.into(),
                });
            }
        }
        self.mismatches.extend(found);
        self.equal = self.mismatches.is_empty();
    }
}

/// Compares the regime formula with the oracle for one pair.
pub fn check_pair(regime: Regime, lambda1: &Weight, lambda2: &Weight) -> Result<CaseReport> {
    let a = regime_mults(regime, lambda1, lambda2)?;
    let mut report = CaseReport::build(regime, lambda1, lambda2, a)?;
    match regime {
        Regime::Rectangular => {
            let rank = lambda1.rank();
            let node = |w: &Weight| {
                w.coords()
                    .iter()
                    .enumerate()
                    .find(|(_, &m)| m != 0)
                    .map(|(k, &m)| (k + 1, m))
                    .unwrap_or((1, 0))
            };
            let (i, mi) = node(lambda1);
            let (j, mj) = node(lambda2);
            let mut counts = BTreeMap::new();
            for (_, tau) in rect_hw_points(rank, i, mi, j, mj)? {
                *counts.entry(tau).or_insert(0) += 1;
            }
            report.add_count_check("hw-points", &counts, true);
        }
        Regime::Large => {
            let counts = dominant_point_counts(lambda1, lambda2)?;
            report.add_count_check("dominant-points", &counts, true);
        }
        _ => {}
    }
    Ok(report)
}

/// Parameter ranges for [`verify_case`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepBounds {
    /// Ranks to sweep; ignored for `sl2`.
    pub ns: Vec<usize>,
    /// Upper bound for weight coordinates (and for `m_1, m_2` in `sl2`).
    pub coord_max: i64,
    /// Upper bound for `k` in the row Pieri case.
    pub level_max: u64,
}

/// All parameter tuples of a regime within `bounds`.
pub fn case_pairs(regime: Regime, bounds: &SweepBounds) -> Result<Vec<(Weight, Weight)>> {
    let mut out = Vec::new();
    match regime {
        Regime::Sl2 => {
            for m1 in 0..=bounds.coord_max {
                for m2 in 0..=m1 {
                    out.push((
                        Weight::from_coords(vec![m1])?,
                        Weight::from_coords(vec![m2])?,
                    ));
                }
            }
        }
        Regime::Rectangular => {
            for &n in &bounds.ns {
                let rank = Rank::new(n)?;
                for i in 1..n {
                    for j in i..n {
                        for mi in 0..=bounds.coord_max {
                            for mj in 0..=bounds.coord_max {
                                out.push((
                                    Weight::fundamental(rank, i).scaled(mi),
                                    Weight::fundamental(rank, j).scaled(mj),
                                ));
                            }
                        }
                    }
                }
            }
        }
        Regime::PieriRow => {
            for &n in &bounds.ns {
                let rank = Rank::new(n)?;
                for lambda in dominant_weights(rank, bounds.coord_max) {
                    for k in 0..=bounds.level_max as i64 {
                        out.push((lambda.clone(), Weight::fundamental(rank, 1).scaled(k)));
                    }
                }
            }
        }
        Regime::PieriColumn => {
            for &n in &bounds.ns {
                let rank = Rank::new(n)?;
                for lambda in dominant_weights(rank, bounds.coord_max) {
                    for j in 1..n {
                        out.push((lambda.clone(), Weight::fundamental(rank, j)));
                    }
                }
            }
        }
        Regime::Large => {
            for &n in &bounds.ns {
                let rank = Rank::new(n)?;
                let ws = dominant_weights(rank, bounds.coord_max);
                for l1 in &ws {
                    for l2 in &ws {
                        if is_much_greater(l1, l2)? {
                            out.push((l1.clone(), l2.clone()));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Runs [`check_pair`] over every tuple of the sweep, in parallel, keeping
/// the enumeration order.
pub fn verify_case(tag: &str, bounds: &SweepBounds) -> Result<Vec<CaseReport>> {
    let regime: Regime = tag.parse()?;
    case_pairs(regime, bounds)?
        .par_iter()
        .map(|(l1, l2)| check_pair(regime, l1, l2))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::w;

    fn rank(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn terms(map: &DecompositionMap) -> Vec<(Weight, u64)> {
        map.sorted()
    }

    #[test]
    fn sl2_examples() {
        assert_eq!(terms(&sl2_mults(2, 1)), vec![(w(&[3]), 1), (w(&[1]), 1)]);
        assert_eq!(terms(&sl2_mults(5, 0)), vec![(w(&[5]), 1)]);
        assert_eq!(
            terms(&sl2_mults(2, 2)),
            vec![(w(&[4]), 1), (w(&[2]), 1), (w(&[0]), 1)]
        );
    }

    #[test]
    fn rect_points_examples() {
        let pts = rect_hw_points(rank(4), 2, 0, 3, 5).unwrap();
        assert_eq!(pts, vec![(LatticePoint::zero(), w(&[0, 0, 5]))]);

        let pts = rect_hw_points(rank(3), 1, 1, 2, 1).unwrap();
        let weights: Vec<_> = pts.iter().map(|(_, t)| t.clone()).collect();
        assert_eq!(weights, vec![w(&[1, 1]), w(&[0, 0])]);
        assert_eq!(pts[1].0, LatticePoint::unit(Root { i: 1, j: 2 }));

        let pts = rect_hw_points(rank(4), 2, 2, 2, 2).unwrap();
        let coeffs: BTreeSet<(u64, u64)> = pts
            .iter()
            .map(|(p, _)| (p.get(Root { i: 2, j: 2 }), p.get(Root { i: 1, j: 3 })))
            .collect();
        let expected: BTreeSet<(u64, u64)> =
            [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)].into();
        assert_eq!(coeffs, expected);
        let c = lr_coefficients(&w(&[0, 2, 0]), &w(&[0, 2, 0])).unwrap();
        let mut counts = BTreeMap::new();
        for (_, t) in pts {
            *counts.entry(t).or_insert(0u64) += 1;
        }
        assert_eq!(counts.into_iter().collect::<DecompositionMap>(), c);
    }

    #[test]
    fn rect_formula_examples() {
        let got = rect_mults_formula(rank(4), 1, 0, 3, 2).unwrap();
        assert_eq!(got, DecompositionMap::single(w(&[0, 0, 2])));

        let got = rect_mults_formula(rank(4), 2, 2, 2, 2).unwrap();
        let expected: DecompositionMap = [
            (w(&[0, 4, 0]), 1),
            (w(&[1, 2, 1]), 1),
            (w(&[0, 2, 0]), 1),
            (w(&[2, 0, 2]), 1),
            (w(&[1, 0, 1]), 1),
            (w(&[0, 0, 0]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);

        let got = rect_mults_formula(rank(3), 1, 1, 2, 1).unwrap();
        assert_eq!(terms(&got), vec![(w(&[1, 1]), 1), (w(&[0, 0]), 1)]);
    }

    #[test]
    fn rect_swaps_nodes_and_rejects_bad_ones() {
        assert_eq!(
            rect_mults_formula(rank(4), 3, 1, 1, 2).unwrap(),
            rect_mults_formula(rank(4), 1, 2, 3, 1).unwrap()
        );
        assert!(matches!(
            rect_mults_formula(rank(4), 0, 1, 2, 1),
            Err(Error::InvalidNode { .. })
        ));
        assert!(rect_hw_points(rank(3), 1, 1, 3, 1).is_err());
    }

    #[test]
    fn pieri_row_examples() {
        let lambda = w(&[1, 1]);
        assert_eq!(
            pieri_row(&lambda, 0).unwrap(),
            DecompositionMap::single(lambda.clone())
        );
        let got = pieri_row(&lambda, 1).unwrap();
        assert_eq!(
            terms(&got),
            vec![(w(&[2, 1]), 1), (w(&[0, 2]), 1), (w(&[1, 0]), 1)]
        );
        assert_eq!(got.total_dim().unwrap(), 24);
        for m1 in 0..6u64 {
            for m2 in 0..=m1 {
                assert_eq!(pieri_row(&w(&[m1 as i64]), m2).unwrap(), sl2_mults(m1, m2));
            }
        }
    }

    #[test]
    fn pieri_column_examples() {
        for j in 1..4 {
            assert_eq!(
                pieri_column(&w(&[0, 0, 0]), j).unwrap(),
                DecompositionMap::single(Weight::fundamental(rank(4), j))
            );
        }
        let got = pieri_column(&w(&[1, 1]), 2).unwrap();
        assert_eq!(
            terms(&got),
            vec![(w(&[1, 2]), 1), (w(&[2, 0]), 1), (w(&[0, 1]), 1)]
        );
        let got = pieri_column(&w(&[0, 1]), 2).unwrap();
        assert_eq!(got, lr_coefficients(&w(&[0, 1]), &w(&[0, 1])).unwrap());
        assert_eq!(terms(&got), vec![(w(&[0, 2]), 1), (w(&[1, 0]), 1)]);
        assert!(pieri_column(&w(&[1, 1]), 3).is_err());
    }

    #[test]
    fn row_and_column_agree_for_first_fundamental() {
        for n in 2..=4 {
            for lambda in dominant_weights(rank(n), 3) {
                assert_eq!(
                    pieri_row(&lambda, 1).unwrap(),
                    pieri_column(&lambda, 1).unwrap()
                );
            }
        }
    }

    #[test]
    fn much_greater_examples() {
        assert!(is_much_greater(&w(&[0, 1]), &w(&[0, 0])).unwrap());
        assert!(!is_much_greater(&w(&[1]), &w(&[2])).unwrap());
        assert!(is_much_greater(&w(&[1, 1]), &w(&[1, 0])).unwrap());
    }

    #[test]
    fn large_examples() {
        assert_eq!(
            large_case_mults(&w(&[2, 1]), &w(&[0, 0])).unwrap(),
            DecompositionMap::single(w(&[2, 1]))
        );
        assert_eq!(
            terms(&large_case_mults(&w(&[3]), &w(&[2])).unwrap()),
            vec![(w(&[5]), 1), (w(&[3]), 1), (w(&[1]), 1)]
        );
        assert_eq!(
            terms(&large_case_mults(&w(&[1, 1]), &w(&[1, 0])).unwrap()),
            vec![(w(&[2, 1]), 1), (w(&[0, 2]), 1), (w(&[1, 0]), 1)]
        );
        assert!(matches!(
            large_case_mults(&w(&[1]), &w(&[2])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn regime_detection() {
        assert_eq!(
            proven_regime(&w(&[3]), &w(&[1])).unwrap(),
            Some(Regime::Sl2)
        );
        assert_eq!(
            proven_regime(&w(&[0, 2]), &w(&[3, 0])).unwrap(),
            Some(Regime::Rectangular)
        );
        assert_eq!(
            proven_regime(&w(&[1, 2]), &w(&[3, 0])).unwrap(),
            Some(Regime::PieriRow)
        );
        assert_eq!(
            proven_regime(&w(&[1, 2, 1]), &w(&[0, 1, 0])).unwrap(),
            Some(Regime::PieriColumn)
        );
        assert_eq!(
            proven_regime(&w(&[3, 3]), &w(&[1, 1])).unwrap(),
            Some(Regime::Large)
        );
        assert_eq!(proven_regime(&w(&[1, 2]), &w(&[2, 1])).unwrap(), None);
    }

    #[test]
    fn unknown_tag_is_rejected() {
        let bounds = SweepBounds {
            ns: vec![3],
            coord_max: 1,
            level_max: 1,
        };
        assert!(matches!(
            verify_case("hive", &bounds),
            Err(Error::UnknownCase(_))
        ));
    }

    #[test]
    fn small_sweeps_agree_with_oracle() {
        let bounds = SweepBounds {
            ns: vec![3],
            coord_max: 2,
            level_max: 2,
        };
        for regime in Regime::ALL {
            let reports = verify_case(regime.tag(), &bounds).unwrap();
            assert!(!reports.is_empty());
            for r in reports {
                assert!(r.equal, "{regime}: {:?}", r.mismatches);
            }
        }
    }

    #[test]
    fn report_json_round_trip() {
        let r = check_pair(Regime::Large, &w(&[2, 2]), &w(&[1, 0])).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains(r#""case":"large""#));
        let back: CaseReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
