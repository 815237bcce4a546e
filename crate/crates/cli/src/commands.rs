use std::io::Write;
use std::process::ExitCode;

use lrfusion::cases::{check_pair, Regime};
use lrfusion::character::weyl_dim;
use lrfusion::dyck::{
    dominant_points, dyck_paths, inequalities, lattice_points, pair_points, BoundVector,
    Inequality, LatticePoint,
};
use lrfusion::fusion::{build_irrep, fusion_graded, Q};
use lrfusion::poset::{schur_monotonicity_check, weyl_character_prediction};
use lrfusion::verify::{run_all, run_criterion, Clip, CriterionOutcome};
use lrfusion::{lr_coefficients, DecompositionMap, Error, Rank, Result, Root, Weight};
use serde::{Deserialize, Serialize};

use crate::table::Table;
use crate::{Format, PairArgs, WeightArgs};

/// Errors caused by the arguments exit with the usage status.
pub fn exit_code(e: &Error) -> ExitCode {
    match e {
        Error::NotACharacter(_) | Error::Overflow(_) | Error::Invariant(_) => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DyckReport {
    pub n: usize,
    pub pruned: bool,
    pub paths: Vec<Vec<Root>>,
    pub inequalities: Vec<Inequality>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointsReport {
    pub n: usize,
    pub count: usize,
    pub points: Vec<LatticePoint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub point: LatticePoint,
    pub tau: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidatesReport {
    pub n: usize,
    pub lambda1: Weight,
    pub lambda2: Weight,
    pub candidates: Vec<Candidate>,
}

/// Prints a line, ignoring a closed stdout (e.g. when piped into `head`).
fn say(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{text}") {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
        }
    }
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) -> Result<()> {
    match format {
        Format::Json => {
            let json =
                serde_json::to_string_pretty(value).map_err(|e| Error::Invariant(e.to_string()))?;
            say(&json);
        }
        Format::Text => say(&text(value)),
    }
    Ok(())
}

fn weight(n: usize, coords: &[i64]) -> Result<Weight> {
    Weight::new(Rank::new(n)?, coords.to_vec())
}

fn pair(args: &PairArgs) -> Result<(Weight, Weight)> {
    Ok((weight(args.n, &args.l)?, weight(args.n, &args.m)?))
}

fn decomposition_table(map: &DecompositionMap) -> String {
    let mut t = Table::new(&["tau", "mult", "dim"]);
    for (tau, mult) in map.sorted() {
        let dim = weyl_dim(&tau).map_or_else(|_| "?".into(), |d| d.to_string());
        t.row(vec![tau.to_string(), mult.to_string(), dim]);
    }
    t.render()
}

fn points_table(rank: Rank, points: &[LatticePoint]) -> String {
    let mut t = Table::new(&["deg", "wt", "point"]);
    for p in points {
        let wt = p
            .weight(rank)
            .map_or_else(|_| "?".into(), |w| w.to_string());
        t.row(vec![p.degree().to_string(), wt, p.to_string()]);
    }
    t.render()
}

pub fn lr(args: &PairArgs, format: Format) -> Result<ExitCode> {
    let (l, m) = pair(args)?;
    let map = lr_coefficients(&l, &m)?;
    emit(format, &map, |map| {
        let total = map
            .total_dim()
            .map_or_else(|_| "?".into(), |d| d.to_string());
        format!(
            "V({l}) x V({m}), dimension {total}\n{}",
            decomposition_table(map)
        )
    })?;
    Ok(ExitCode::SUCCESS)
}

pub fn dyck(n: usize, pruned: bool, format: Format) -> Result<ExitCode> {
    let rank = Rank::new(n)?;
    let paths = dyck_paths(rank);
    let report = DyckReport {
        n,
        pruned,
        paths: paths.iter().map(|p| p.steps().to_vec()).collect(),
        inequalities: inequalities(rank, pruned),
    };
    emit(format, &report, |r| {
        let mut out = vec![format!("{} Dyck paths", paths.len())];
        out.extend(paths.iter().map(|p| format!("  {p}")));
        out.push(format!("{} inequalities", r.inequalities.len()));
        out.extend(r.inequalities.iter().map(|i| format!("  {i}")));
        out.join("\n")
    })?;
    Ok(ExitCode::SUCCESS)
}

pub fn points(
    n: usize,
    l: Option<Vec<i64>>,
    m: Option<Vec<i64>>,
    bounds: Option<Vec<u64>>,
    format: Format,
) -> Result<ExitCode> {
    let rank = Rank::new(n)?;
    let points = match (l, m, bounds) {
        (Some(l), Some(m), _) => pair_points(&weight(n, &l)?, &weight(n, &m)?)?,
        (_, _, Some(b)) => lattice_points(&BoundVector::new(rank, b)?),
        _ => return Err(Error::Precondition("give --l and --m, or --bounds".into())),
    };
    let report = PointsReport {
        n,
        count: points.len(),
        points,
    };
    emit(format, &report, |r| {
        format!("{} points\n{}", r.count, points_table(rank, &r.points))
    })?;
    Ok(ExitCode::SUCCESS)
}

pub fn hw_candidates(args: &PairArgs, format: Format) -> Result<ExitCode> {
    let (l, m) = pair(args)?;
    let candidates: Vec<Candidate> = dominant_points(&l, &m)?
        .into_iter()
        .map(|(point, tau)| Candidate { point, tau })
        .collect();
    let report = CandidatesReport {
        n: args.n,
        lambda1: l,
        lambda2: m,
        candidates,
    };
    emit(format, &report, |r| {
        let mut t = Table::new(&["deg", "tau", "point"]);
        for c in &r.candidates {
            t.row(vec![
                c.point.degree().to_string(),
                c.tau.to_string(),
                c.point.to_string(),
            ]);
        }
        format!("{} candidates\n{}", r.candidates.len(), t.render())
    })?;
    Ok(ExitCode::SUCCESS)
}

pub fn case(regime: Regime, args: &PairArgs, format: Format) -> Result<ExitCode> {
    let (l, m) = pair(args)?;
    let report = check_pair(regime, &l, &m)?;
    emit(format, &report, |r| {
        let mut taus: Vec<Weight> = r.a.weights().chain(r.c.weights()).cloned().collect();
        taus.sort_by(lrfusion::typea::presentation_order);
        taus.dedup();
        let mut t = Table::new(&["tau", "a", "c"]);
        for tau in taus {
            t.row(vec![
                tau.to_string(),
                r.a.get(&tau).to_string(),
                r.c.get(&tau).to_string(),
            ]);
        }
        let mut out = vec![
            format!(
                "case {} for ({l}, {m}): {}",
                r.case,
                if r.equal { "a = c" } else { "MISMATCH" }
            ),
            t.render(),
        ];
        for mm in &r.mismatches {
            out.push(format!(
                "mismatch at {} ({}): {} vs c = {}",
                mm.tau, mm.source, mm.a, mm.c
            ));
        }
        out.join("\n")
    })?;
    Ok(if report.equal {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

pub fn fusion(args: &PairArgs, c1: &Q, c2: &Q, cap: u64, format: Format) -> Result<ExitCode> {
    let (l, m) = pair(args)?;
    let m1 = build_irrep(&l, cap)?;
    let m2 = build_irrep(&m, cap)?;
    let graded = fusion_graded(&m1, c1, &m2, c2)?;
    emit(format, &graded, |g| {
        let mut t = Table::new(&["degree", "tau", "mult"]);
        for (s, slice) in g.slices() {
            for (tau, mult) in slice.sorted() {
                t.row(vec![s.to_string(), tau.to_string(), mult.to_string()]);
            }
        }
        format!(
            "fusion of V({l}) at {c1} and V({m}) at {c2}, dimension {}\n{}",
            m1.dim() * m2.dim(),
            t.render()
        )
    })?;
    Ok(ExitCode::SUCCESS)
}

pub fn poset(args: &WeightArgs, format: Format) -> Result<ExitCode> {
    let lambda = weight(args.n, &args.l)?;
    let report = schur_monotonicity_check(&lambda)?;
    emit(format, &report, |r| {
        let mut nodes = Table::new(&["#", "pair", "min-vector"]);
        for (k, p) in r.nodes.iter().enumerate() {
            nodes.row(vec![
                k.to_string(),
                p.to_string(),
                format!("{:?}", p.min_vector()),
            ]);
        }
        let mut edges = Table::new(&["lower", "upper", "schur-positive"]);
        for e in &r.edges {
            edges.row(vec![
                e.lower.to_string(),
                e.upper.to_string(),
                e.schur_positive.to_string(),
            ]);
        }
        let mut out = vec![
            format!("{} pairs summing to {lambda}", r.nodes.len()),
            nodes.render(),
            format!("covers ({} comparable pairs in total)", r.comparable_pairs),
            edges.render(),
            format!("minimum {}, maximum {}", r.min_pair, r.max_pair),
            format!("schur positive: {}", r.schur_positive),
        ];
        for c in &r.counterexamples {
            out.push(format!(
                "counterexample: {} below {}: {:?}",
                c.lower,
                c.upper,
                c.diff.negative_terms()
            ));
        }
        out.join("\n")
    })?;
    Ok(if report.schur_positive {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

pub fn weyl(args: &WeightArgs, format: Format) -> Result<ExitCode> {
    let lambda = weight(args.n, &args.l)?;
    let prediction = weyl_character_prediction(&lambda)?;
    emit(format, &prediction, |p| {
        let status = match p.proven_regime {
            Some(regime) => format!("maximal pair in the proven regime {regime}"),
            None => "conjectural".to_string(),
        };
        format!(
            "maximal pair {} for {lambda}, predicted dimension {} ({status})\n{}",
            p.max_pair,
            p.predicted_dim,
            decomposition_table(&p.character)
        )
    })?;
    Ok(ExitCode::SUCCESS)
}

pub fn verify(
    n_max: Option<usize>,
    coord_max: Option<i64>,
    only: &[u8],
    format: Format,
) -> Result<ExitCode> {
    let clip = Clip { n_max, coord_max };
    let print = |o: &CriterionOutcome| {
        if format == Format::Text {
            say(&o.summary());
        }
    };
    let outcomes: Vec<CriterionOutcome> = if only.is_empty() {
        run_all(&clip, print)
    } else {
        let mut ids = only.to_vec();
        ids.sort_unstable();
        ids.dedup();
        ids.iter()
            .filter_map(|&id| run_criterion(id, &clip))
            .inspect(print)
            .collect()
    };
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    match format {
        Format::Json => emit(format, &outcomes, |_| String::new())?,
        Format::Text => say(&format!(
            "{} of {} criteria passed",
            outcomes.len() - failed,
            outcomes.len()
        )),
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
