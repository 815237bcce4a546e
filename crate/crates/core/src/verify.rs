//! The acceptance sweep: every theorem checked exactly on its desk-scale
//! range, plus evidence suites for the conjectures.
//!
//! Each criterion has fixed default ranges. A [`Clip`] can shrink them for
//! quick runs; it never enlarges them.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cases::{sl2_mults, verify_case, CaseReport, SweepBounds};
use crate::character::weyl_dim;
use crate::dyck::{dominant_point_counts, lattice_points, pair_points, BoundVector, LatticePoint};
use crate::error::Result;
use crate::fusion::{build_irrep, fusion_graded, q, GradedDecomposition, DEFAULT_DIM_CAP};
use crate::poset::{
    enumerate_pairs, maximal_pair, order_leq, schur_monotonicity_check, weyl_character_prediction,
    WeightPair,
};
use crate::tensor::lr_coefficients;
use crate::typea::{dominant_weights, Rank, Weight};

/// Evaluation-point pairs used for the independence check. The first one is
/// the default.
pub const EVALUATION_POINTS: [(i64, i64); 3] = [(0, 1), (1, 3), (2, -1)];

/// Largest `dim V(λ1) · dim V(λ2)` handed to the fusion computation.
pub const FUSION_PRODUCT_CAP: u64 = 10_000;

const MAX_REPORTED_FAILURES: usize = 5;

/// Optional upper limits on the sweep ranges.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clip {
    pub n_max: Option<usize>,
    pub coord_max: Option<i64>,
}

impl Clip {
    fn ns(&self, ns: &[usize]) -> Vec<usize> {
        ns.iter()
            .copied()
            .filter(|&n| self.n_max.is_none_or(|m| n <= m))
            .collect()
    }

    fn coord(&self, max: i64) -> i64 {
        self.coord_max.map_or(max, |c| c.min(max))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    /// Number of parameter tuples checked.
    pub cases: usize,
    /// Total number of failing tuples; only the first few are listed.
    pub failed: usize,
    pub failures: Vec<String>,
    pub elapsed_secs: f64,
    pub budget_secs: Option<f64>,
}

impl CriterionOutcome {
    /// One line per criterion, as printed by the acceptance runner.
    pub fn summary(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let budget = self
            .budget_secs
            .map(|b| format!(" (budget {b:.0}s)"))
            .unwrap_or_default();
        let mut line = format!(
            "{status} [{:>2}] {}: {} cases, {} failed, {:.2}s{budget}",
            self.id, self.name, self.cases, self.failed, self.elapsed_secs
        );
        if let Some(first) = self.failures.first() {
            line.push_str(&format!("; first failure: {first}"));
        }
        line
    }
}

pub const CRITERIA: [(u8, &str); 10] = [
    (1, "sl2 Clebsch-Gordan"),
    (2, "rectangular weights"),
    (3, "Pieri rules"),
    (4, "large first factor"),
    (5, "basis count of S(a)"),
    (6, "fusion collapse and evaluation independence"),
    (7, "sandwich dominant points >= a = c"),
    (8, "poset of weight pairs"),
    (9, "Schur positivity along the poset"),
    (10, "Weyl prediction at the maximal pair"),
];

struct Tally {
    cases: usize,
    failures: Vec<String>,
}

/// Runs `check` over `items` in parallel. `check` returns a description of
/// the failure, if any; errors count as failures.
fn tally<T, F>(items: &[T], check: F) -> Tally
where
    T: Sync,
    F: Fn(&T) -> Result<Option<String>> + Sync,
{
    let failures = items
        .par_iter()
        .map(|item| match check(item) {
            Ok(outcome) => outcome,
            Err(e) => Some(format!("error: {e}")),
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Tally {
        cases: items.len(),
        failures,
    }
}

fn finish(id: u8, start: Instant, budget: Option<f64>, tally: Tally) -> CriterionOutcome {
    let elapsed_secs = start.elapsed().as_secs_f64();
    let failed = tally.failures.len();
    CriterionOutcome {
        id,
        name: CRITERIA[id as usize - 1].1.to_string(),
        passed: failed == 0 && budget.is_none_or(|b| elapsed_secs < b),
        cases: tally.cases,
        failed,
        failures: tally
            .failures
            .into_iter()
            .take(MAX_REPORTED_FAILURES)
            .collect(),
        elapsed_secs,
        budget_secs: budget,
    }
}

fn fusion(lambda1: &Weight, lambda2: &Weight, (c1, c2): (i64, i64)) -> Result<GradedDecomposition> {
    let m1 = build_irrep(lambda1, DEFAULT_DIM_CAP)?;
    let m2 = build_irrep(lambda2, DEFAULT_DIM_CAP)?;
    fusion_graded(&m1, &q(c1), &m2, &q(c2))
}

fn report_failures(reports: Result<Vec<CaseReport>>) -> Tally {
    match reports {
        Ok(reports) => Tally {
            cases: reports.len(),
            failures: reports
                .iter()
                .filter(|r| !r.equal)
                .map(|r| {
                    let m = &r.mismatches[0];
                    format!(
                        "{} ({}, {}): tau {} has {} from {} but c = {}",
                        r.case, r.params.lambda1, r.params.lambda2, m.tau, m.a, m.source, m.c
                    )
                })
                .collect(),
        },
        Err(e) => Tally {
            cases: 0,
            failures: vec![format!("error: {e}")],
        },
    }
}

fn merge(tallies: impl IntoIterator<Item = Tally>) -> Tally {
    let mut out = Tally {
        cases: 0,
        failures: vec![],
    };
    for t in tallies {
        out.cases += t.cases;
        out.failures.extend(t.failures);
    }
    out
}

fn criterion_sl2(clip: &Clip) -> CriterionOutcome {
    let start = Instant::now();
    let max = if clip.n_max.is_some_and(|n| n < 2) {
        -1
    } else {
        clip.coord(6)
    };
    let pairs: Vec<(i64, i64)> = (0..=max)
        .flat_map(|m1| (0..=m1).map(move |m2| (m1, m2)))
        .collect();
    let t = tally(&pairs, |&(m1, m2)| {
        let (l1, l2) = (
            Weight::from_coords(vec![m1])?,
            Weight::from_coords(vec![m2])?,
        );
        let formula = sl2_mults(m1 as u64, m2 as u64);
        let lr = lr_coefficients(&l1, &l2)?;
        let graded = fusion(&l1, &l2, EVALUATION_POINTS[0])?;
        Ok(
            (formula != lr || graded.ungraded() != lr || graded.max_degree() != m2 as u64)
                .then(|| format!("m1 = {m1}, m2 = {m2}")),
        )
    });
    finish(1, start, Some(10.0), t)
}

fn criterion_rectangular(clip: &Clip) -> CriterionOutcome {
    let start = Instant::now();
    let bounds = SweepBounds {
        ns: clip.ns(&[3, 4, 5]),
        coord_max: clip.coord(3),
        level_max: 0,
    };
    finish(
        2,
        start,
        Some(60.0),
        report_failures(verify_case("rectangular", &bounds)),
    )
}

fn criterion_pieri(clip: &Clip) -> CriterionOutcome {
    let start = Instant::now();
    let bounds = SweepBounds {
        ns: clip.ns(&[3, 4]),
        coord_max: clip.coord(3),
        level_max: clip.coord(4) as u64,
    };
    let t = merge([
        report_failures(verify_case("pieri-row", &bounds)),
        report_failures(verify_case("pieri-column", &bounds)),
    ]);
    finish(3, start, Some(60.0), t)
}

fn criterion_large(clip: &Clip) -> CriterionOutcome {
    let start = Instant::now();
    let bounds = SweepBounds {
        ns: clip.ns(&[3, 4]),
        coord_max: clip.coord(3),
        level_max: 0,
    };
    finish(
        4,
        start,
        Some(60.0),
        report_failures(verify_case("large", &bounds)),
    )
}

fn weights_for(ns: &[usize], coord_max: i64) -> Result<Vec<Weight>> {
    let mut out = Vec::new();
    for &n in ns {
        out.extend(dominant_weights(Rank::new(n)?, coord_max));
    }
    Ok(out)
}

fn criterion_basis_count(clip: &Clip) -> CriterionOutcome {
    let start = Instant::now();
    let t = match weights_for(&clip.ns(&[2, 3, 4]), clip.coord(2)) {
        Ok(weights) => tally(&weights, |lambda| {
            let count = lattice_points(&BoundVector::from_weight(lambda)?).len() as u64;
            let dim = weyl_dim(lambda)?;
            Ok((count != dim).then(|| format!("lambda = {lambda}: {count} points, dim {dim}")))
        }),
        Err(e) => error_tally(e),
    };
    finish(5, start, None, t)
}

fn error_tally(e: crate::Error) -> Tally {
    Tally {
        cases: 0,
        failures: vec![format!("error: {e}")],
    }
}

/// Unordered pairs for the fusion sweep: `sl_2` with `m ≤ 6`, `sl_3` with
/// coordinates at most 2, filtered by the product-dimension cap.
pub fn fusion_pairs(clip: &Clip) -> Result<Vec<(Weight, Weight)>> {
    let mut out = Vec::new();
    for (n, max) in [(2, 6), (3, 3)] {
        if clip.ns(&[n]).is_empty() {
            continue;
        }
        let ws = dominant_weights(Rank::new(n)?, clip.coord(max));
        for (a, l1) in ws.iter().enumerate() {
            for l2 in &ws[..=a] {
                if weyl_dim(l1)? * weyl_dim(l2)? <= FUSION_PRODUCT_CAP {
                    out.push((l1.clone(), l2.clone()));
                }
            }
        }
    }
    Ok(out)
}

/// Graded fusion products at the default evaluation points, for every pair
/// of [`fusion_pairs`]. Also checks independence and the ungraded collapse.
fn fusion_sweep(pairs: &[(Weight, Weight)]) -> Vec<Result<(GradedDecomposition, Option<String>)>> {
    pairs
        .par_iter()
        .map(|(l1, l2)| {
            let base = fusion(l1, l2, EVALUATION_POINTS[0])?;
            let lr = lr_coefficients(l1, l2)?;
            let mut problem =
                (base.ungraded() != lr).then(|| format!("({l1}, {l2}): collapse differs from c"));
            for &points in &EVALUATION_POINTS[1..] {
                if problem.is_none() && fusion(l1, l2, points)? != base {
                    problem = Some(format!(
                        "({l1}, {l2}): grading changes at points {points:?}"
                    ));
                }
            }
            Ok((base, problem))
        })
        .collect()
}

fn criterion_fusion(clip: &Clip) -> (CriterionOutcome, Option<Vec<GradedDecomposition>>) {
    let start = Instant::now();
    let pairs = match fusion_pairs(clip) {
        Ok(p) => p,
        Err(e) => return (finish(6, start, Some(300.0), error_tally(e)), None),
    };
    let mut failures = Vec::new();
    let mut graded = Vec::new();
    for outcome in fusion_sweep(&pairs) {
        match outcome {
            Ok((g, problem)) => {
                failures.extend(problem);
                graded.push(g);
            }
            Err(e) => failures.push(format!("error: {e}")),
        }
    }
    let complete = graded.len() == pairs.len();
    let t = Tally {
        cases: pairs.len(),
        failures,
    };
    (finish(6, start, Some(300.0), t), complete.then_some(graded))
}

fn criterion_sandwich(clip: &Clip, graded: Option<Vec<GradedDecomposition>>) -> CriterionOutcome {
    let start = Instant::now();
    let graded = match graded {
        Some(g) => Ok(g),
        None => fusion_pairs(clip).and_then(|pairs| {
            pairs
                .par_iter()
                .map(|(l1, l2)| fusion(l1, l2, EVALUATION_POINTS[0]))
                .collect::<Result<Vec<_>>>()
        }),
    };
    let t = match graded {
        Ok(graded) => tally(&graded, |g| {
            let (l1, l2) = (g.lambda1(), g.lambda2());
            let counts = dominant_point_counts(l1, l2)?;
            let a = g.ungraded();
            let c = lr_coefficients(l1, l2)?;
            let mut taus: BTreeSet<&Weight> = counts.keys().collect();
            taus.extend(c.weights());
            taus.extend(a.weights());
            let bad = taus
                .into_iter()
                .find(|tau| {
                    let points = counts.get(*tau).copied().unwrap_or(0);
                    a.get(tau) != c.get(tau) || points < a.get(tau)
                })
                .map(|tau| {
                    format!(
                        "({l1}, {l2}) at {tau}: points {}, a {}, c {}",
                        counts.get(tau).copied().unwrap_or(0),
                        a.get(tau),
                        c.get(tau)
                    )
                });
            Ok(bad)
        }),
        Err(e) => error_tally(e),
    };
    finish(7, start, Some(300.0), t)
}

fn poset_weights(clip: &Clip) -> Result<Vec<Weight>> {
    weights_for(&clip.ns(&[2, 3, 4]), clip.coord(3))
}

/// Partial-order axioms, the extremal elements, and nesting of point sets.
fn check_poset(lambda: &Weight) -> Result<Option<String>> {
    let nodes = enumerate_pairs(lambda)?;
    let len = nodes.len();
    let mut leq = vec![vec![false; len]; len];
    for a in 0..len {
        for b in 0..len {
            leq[a][b] = order_leq(&nodes[a], &nodes[b])?;
        }
    }
    for a in 0..len {
        if !leq[a][a] {
            return Ok(Some(format!("{lambda}: {} not reflexive", nodes[a])));
        }
        for b in 0..len {
            if a != b && leq[a][b] && leq[b][a] {
                return Ok(Some(format!(
                    "{lambda}: {} and {} violate antisymmetry",
                    nodes[a], nodes[b]
                )));
            }
            for c in 0..len {
                if leq[a][b] && leq[b][c] && !leq[a][c] {
                    return Ok(Some(format!(
                        "{lambda}: transitivity fails at {}",
                        nodes[b]
                    )));
                }
            }
        }
    }

    let bottom = WeightPair::new(lambda.clone(), Weight::zero(lambda.rank()))?;
    let minima: Vec<&WeightPair> = (0..len)
        .filter(|&a| (0..len).all(|b| leq[a][b]))
        .map(|a| &nodes[a])
        .collect();
    if minima != [&bottom] {
        return Ok(Some(format!("{lambda}: minimum is not unique (λ, 0)")));
    }
    let maxima: Vec<&WeightPair> = (0..len)
        .filter(|&b| (0..len).all(|a| leq[a][b]))
        .map(|b| &nodes[b])
        .collect();
    let claimed = maximal_pair(lambda)?;
    if maxima != [&claimed] {
        return Ok(Some(format!(
            "{lambda}: exhaustive maximum differs from {claimed}"
        )));
    }

    let points: Vec<BTreeSet<LatticePoint>> = nodes
        .iter()
        .map(|p| pair_points(p.first(), p.second()).map(|v| v.into_iter().collect()))
        .collect::<Result<_>>()?;
    for a in 0..len {
        for b in 0..len {
            if leq[a][b] && !points[a].is_subset(&points[b]) {
                return Ok(Some(format!(
                    "{lambda}: S{} not inside S{}",
                    nodes[a], nodes[b]
                )));
            }
        }
    }
    Ok(None)
}

fn criterion_poset(clip: &Clip) -> CriterionOutcome {
    let start = Instant::now();
    let t = match poset_weights(clip) {
        Ok(weights) => tally(&weights, check_poset),
        Err(e) => error_tally(e),
    };
    finish(8, start, None, t)
}

fn criterion_schur(clip: &Clip) -> CriterionOutcome {
    let start = Instant::now();
    let t = match poset_weights(clip) {
        Ok(weights) => tally(&weights, |lambda| {
            let report = schur_monotonicity_check(lambda)?;
            Ok(report.counterexamples.first().map(|c| {
                let negative = c.diff.negative_terms();
                format!(
                    "COUNTEREXAMPLE {lambda}: s{} - s{} has negative terms {negative:?}",
                    c.upper, c.lower
                )
            }))
        }),
        Err(e) => error_tally(e),
    };
    finish(9, start, None, t)
}

/// Weights whose maximal pair sits in a proven regime, within the fusion
/// cap: `sl_2` up to 6, `sl_3` up to 4, `sl_4` up to 2.
pub fn weyl_weights(clip: &Clip) -> Result<Vec<Weight>> {
    let mut out = Vec::new();
    for (n, max) in [(2, 6), (3, 4), (4, 2)] {
        if clip.ns(&[n]).is_empty() {
            continue;
        }
        for lambda in dominant_weights(Rank::new(n)?, clip.coord(max)) {
            let pair = maximal_pair(&lambda)?;
            if weyl_dim(pair.first())? * weyl_dim(pair.second())? > FUSION_PRODUCT_CAP {
                continue;
            }
            if weyl_character_prediction(&lambda)?.proven_regime.is_some() {
                out.push(lambda);
            }
        }
    }
    Ok(out)
}

fn criterion_weyl(clip: &Clip) -> CriterionOutcome {
    let start = Instant::now();
    let t = match weyl_weights(clip) {
        Ok(weights) => tally(&weights, |lambda| {
            let prediction = weyl_character_prediction(lambda)?;
            let pair = &prediction.max_pair;
            let graded = fusion(pair.first(), pair.second(), EVALUATION_POINTS[0])?;
            let collapse = graded.ungraded();
            Ok((collapse != prediction.character
                || collapse.total_dim()? != prediction.predicted_dim)
                .then(|| format!("{lambda}: prediction at {pair} differs from the fusion product")))
        }),
        Err(e) => error_tally(e),
    };
    finish(10, start, Some(300.0), t)
}

/// Runs one criterion by number.
pub fn run_criterion(id: u8, clip: &Clip) -> Option<CriterionOutcome> {
    Some(match id {
        1 => criterion_sl2(clip),
        2 => criterion_rectangular(clip),
        3 => criterion_pieri(clip),
        4 => criterion_large(clip),
        5 => criterion_basis_count(clip),
        6 => criterion_fusion(clip).0,
        7 => criterion_sandwich(clip, None),
        8 => criterion_poset(clip),
        9 => criterion_schur(clip),
        10 => criterion_weyl(clip),
        _ => return None,
    })
}

/// Runs all criteria in order, calling `progress` after each one. The fusion
/// products of criterion 6 are reused by criterion 7.
pub fn run_all(clip: &Clip, mut progress: impl FnMut(&CriterionOutcome)) -> Vec<CriterionOutcome> {
    let mut out = Vec::new();
    let mut push = |o: CriterionOutcome, out: &mut Vec<CriterionOutcome>| {
        progress(&o);
        out.push(o);
    };
    for id in 1..=5 {
        push(run_criterion(id, clip).expect("known criterion"), &mut out);
    }
    let (six, graded) = criterion_fusion(clip);
    push(six, &mut out);
    push(criterion_sandwich(clip, graded), &mut out);
    for id in 8..=10 {
        push(run_criterion(id, clip).expect("known criterion"), &mut out);
    }
    out
}
