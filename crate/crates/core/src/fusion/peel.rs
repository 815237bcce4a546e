//! Reading off `sl_n`-decompositions from characters.

use std::collections::BTreeMap;

use crate::character::weight_multiplicities;
use crate::error::{Error, Result};
use crate::tensor::DecompositionMap;
use crate::typea::{Rank, Weight};

/// Decomposes a formal character into simple characters by repeatedly
/// removing the character of `V(μ)` for a maximal weight `μ` of the support.
pub fn peel_character(rank: Rank, ch: &BTreeMap<Weight, i64>) -> Result<DecompositionMap> {
    let mut rest: BTreeMap<Weight, i64> = BTreeMap::new();
    for (mu, &m) in ch {
        mu.require_rank(rank)?;
        if m < 0 {
            return Err(Error::NotACharacter(format!(
                "weight {mu} has multiplicity {m}"
            )));
        }
        if m > 0 {
            rest.insert(mu.clone(), m);
        }
    }
    let mut out = DecompositionMap::new(rank);
    // a weight of maximal dominance key is maximal in the root order
    while let Some((top, count)) = rest
        .iter()
        .max_by(|a, b| {
            a.0.dominance_key()
                .cmp(&b.0.dominance_key())
                .then(a.0.cmp(b.0))
        })
        .map(|(w, m)| (w.clone(), *m))
    {
        if !top.is_dominant() {
            return Err(Error::NotACharacter(format!(
                "maximal weight {top} is not dominant"
            )));
        }
        for (mu, d) in weight_multiplicities(&top)? {
            let entry = rest.entry(mu.clone()).or_insert(0);
            *entry -= count * d as i64;
            if *entry < 0 {
                return Err(Error::NotACharacter(format!(
                    "removing {count} copies of V({top}) leaves weight {mu} negative"
                )));
            }
            if *entry == 0 {
                rest.remove(&mu);
            }
        }
        out.add(top, count as u64);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::lr_coefficients;
    use crate::testutil::{dominant_weights, w};

    fn diagram(lambda: &Weight) -> BTreeMap<Weight, i64> {
        weight_multiplicities(lambda)
            .unwrap()
            .into_iter()
            .map(|(mu, d)| (mu, d as i64))
            .collect()
    }

    fn product(a: &BTreeMap<Weight, i64>, b: &BTreeMap<Weight, i64>) -> BTreeMap<Weight, i64> {
        let mut out = BTreeMap::new();
        for (x, m) in a {
            for (y, k) in b {
                *out.entry(x + y).or_insert(0) += m * k;
            }
        }
        out
    }

    #[test]
    fn doubled_fundamental() {
        let ch: BTreeMap<_, _> = diagram(&w(&[1, 0]))
            .into_iter()
            .map(|(mu, d)| (mu, 2 * d))
            .collect();
        let out = peel_character(Rank::new(3).unwrap(), &ch).unwrap();
        assert_eq!(out.sorted(), vec![(w(&[1, 0]), 2)]);
    }

    #[test]
    fn product_of_sl3_fundamentals() {
        let ch = product(&diagram(&w(&[1, 0])), &diagram(&w(&[0, 1])));
        let out = peel_character(Rank::new(3).unwrap(), &ch).unwrap();
        assert_eq!(out.sorted(), vec![(w(&[1, 1]), 1), (w(&[0, 0]), 1)]);
    }

    #[test]
    fn malformed_inputs() {
        let rank = Rank::new(3).unwrap();
        // peeling V(ω1) drives the missing weight -ω2 negative
        let mut ch = diagram(&w(&[1, 0]));
        ch.insert(w(&[0, -1]), 0);
        assert!(matches!(
            peel_character(rank, &ch),
            Err(Error::NotACharacter(_))
        ));
        let ch = BTreeMap::from([(w(&[-1, 1]), 1)]);
        assert!(matches!(
            peel_character(rank, &ch),
            Err(Error::NotACharacter(_))
        ));
        let ch = BTreeMap::from([(w(&[0, 0]), -1)]);
        assert!(matches!(
            peel_character(rank, &ch),
            Err(Error::NotACharacter(_))
        ));
    }

    #[test]
    fn agrees_with_lr() {
        let rank = Rank::new(3).unwrap();
        let weights = dominant_weights(3, 2);
        for a in &weights {
            for b in &weights {
                let ch = product(&diagram(a), &diagram(b));
                assert_eq!(
                    peel_character(rank, &ch).unwrap(),
                    lr_coefficients(a, b).unwrap(),
                    "{a} {b}"
                );
            }
        }
    }
}
