//! Weyl orbits, dimensions and weight diagrams of simple `sl_n`-modules.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::typea::{pairing, root_as_weight, Weight};

/// Weight multiplicities of a module, keyed by weight.
pub type WeightDiagram = BTreeMap<Weight, u64>;

/// Rearranges `v` into the next permutation in lexicographic order.
/// Returns `false` (and leaves `v` sorted ascending) after the last one.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The orbit `W·λ`, `W ≅ S_n` permuting ε-coordinates.
pub fn weyl_orbit(lambda: &Weight) -> Result<BTreeSet<Weight>> {
    lambda.require_dominant()?;
    let mut eps = lambda.to_eps();
    eps.sort_unstable();
    let mut orbit = BTreeSet::new();
    loop {
        orbit.insert(Weight::from_eps(&eps)?);
        if !next_permutation(&mut eps) {
            break;
        }
    }
    Ok(orbit)
}

/// Weyl dimension formula, `Π_{α>0} ⟨λ+ρ, α⟩ / ⟨ρ, α⟩`.
pub fn weyl_dim(lambda: &Weight) -> Result<u64> {
    lambda.require_dominant()?;
    let rank = lambda.rank();
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for root in rank.positive_roots() {
        let shifted = pairing(lambda, root)? + root.height() as i64;
        num *= BigUint::from(shifted as u64);
        den *= BigUint::from(root.height() as u64);
    }
    (num / den).to_u64().ok_or(Error::Overflow("weyl_dim"))
}

/// The full set of weights of `V(λ)`: the saturated set generated by `λ`.
fn weight_support(lambda: &Weight) -> Result<Vec<Weight>> {
    let rank = lambda.rank();
    let roots: Vec<_> = rank
        .positive_roots()
        .into_iter()
        .map(|r| Ok((r, root_as_weight(rank, r)?)))
        .collect::<Result<_>>()?;
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut stack = vec![lambda.clone()];
    while let Some(mu) = stack.pop() {
        for (root, alpha) in &roots {
            let p = pairing(&mu, *root)?;
            let mut cur = mu.clone();
            for _ in 0..p {
                cur = &cur - alpha;
                if seen.insert(cur.clone()) {
                    stack.push(cur.clone());
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Weight diagram of `V(λ)` by Freudenthal's recursion.
///
/// All quantities use `n` times the invariant form, which keeps the
/// recursion integral; the final division is exact.
pub fn weight_multiplicities(lambda: &Weight) -> Result<WeightDiagram> {
    lambda.require_dominant()?;
    let rank = lambda.rank();
    let rho = Weight::rho(rank);
    let alphas: Vec<Weight> = rank
        .positive_roots()
        .into_iter()
        .map(|r| root_as_weight(rank, r))
        .collect::<Result<_>>()?;

    let mut support = weight_support(lambda)?;
    let depth = |mu: &Weight| -> i64 {
        (lambda - mu)
            .root_coords()
            .map(|c| c.iter().sum())
            .unwrap_or(i64::MAX)
    };
    support.sort_by_cached_key(|mu| depth(mu));

    let lr = lambda + &rho;
    let top_norm = lr.form(&lr) as i128;
    let mut mult: HashMap<Weight, i128> = HashMap::with_capacity(support.len());
    mult.insert(lambda.clone(), 1);

    for mu in support.iter().skip(1) {
        let mr = mu + &rho;
        let den = top_norm - mr.form(&mr) as i128;
        if den <= 0 {
            return Err(Error::Invariant(format!(
                "Freudenthal denominator {den} at {mu}"
            )));
        }
        let mut num: i128 = 0;
        for alpha in &alphas {
            let mut shifted = mu + alpha;
            while let Some(&m) = mult.get(&shifted) {
                let term = m
                    .checked_mul(shifted.form(alpha) as i128)
                    .ok_or(Error::Overflow("freudenthal"))?;
                num = num
                    .checked_add(term)
                    .ok_or(Error::Overflow("freudenthal"))?;
                shifted = &shifted + alpha;
            }
        }
        num *= 2;
        if num % den != 0 {
            return Err(Error::Invariant(format!(
                "Freudenthal quotient {num}/{den} not integral at {mu}"
            )));
        }
        mult.insert(mu.clone(), num / den);
    }

    mult.into_iter()
        .filter(|(_, m)| *m != 0)
        .map(|(w, m)| {
            let m = u64::try_from(m)
                .map_err(|_| Error::Invariant(format!("negative multiplicity at {w}")))?;
            Ok((w, m))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{dominant_weights, w};

    #[test]
    fn orbit_examples() {
        assert_eq!(weyl_orbit(&w(&[0, 0])).unwrap().len(), 1);
        let orbit = weyl_orbit(&w(&[1, 0])).unwrap();
        let expected: BTreeSet<_> = [w(&[1, 0]), w(&[-1, 1]), w(&[0, -1])].into();
        assert_eq!(orbit, expected);
        assert_eq!(weyl_orbit(&w(&[1, 1])).unwrap().len(), 6);
        assert!(weyl_orbit(&w(&[-1, 1])).is_err());
    }

    #[test]
    fn orbit_size_is_index_of_stabilizer() {
        fn factorial(k: usize) -> usize {
            (1..=k).product()
        }
        for n in 2..=5 {
            for lambda in dominant_weights(n, 2) {
                let eps = lambda.to_eps();
                let mut counts = BTreeMap::new();
                for e in &eps {
                    *counts.entry(*e).or_insert(0usize) += 1;
                }
                let stab: usize = counts.values().map(|&c| factorial(c)).product();
                let size = weyl_orbit(&lambda).unwrap().len();
                assert_eq!(size, factorial(n) / stab, "{lambda}");
                assert_eq!(factorial(n) % size, 0);
            }
        }
    }

    #[test]
    fn dim_examples() {
        for m in 0..8 {
            assert_eq!(weyl_dim(&w(&[m])).unwrap(), m as u64 + 1);
        }
        assert_eq!(weyl_dim(&w(&[1, 0])).unwrap(), 3);
        assert_eq!(weyl_dim(&w(&[1, 1])).unwrap(), 8);
        assert_eq!(weyl_dim(&w(&[0, 1, 0])).unwrap(), 6);
        assert_eq!(weyl_dim(&w(&[2, 2, 2])).unwrap(), 729);
        assert!(weyl_dim(&w(&[1, -1])).is_err());
    }

    #[test]
    fn sl2_strings() {
        for m in 0..7i64 {
            let diag = weight_multiplicities(&w(&[m])).unwrap();
            let expected: WeightDiagram = (0..=m).map(|k| (w(&[m - 2 * k]), 1)).collect();
            assert_eq!(diag, expected);
        }
    }

    #[test]
    fn adjoint_zero_weight_has_multiplicity_two() {
        let diag = weight_multiplicities(&w(&[1, 1])).unwrap();
        assert_eq!(diag[&w(&[0, 0])], 2);
        assert_eq!(diag.len(), 7);
    }

    #[test]
    fn multiplicities_sum_to_dimension_and_are_invariant() {
        for n in 2..=5 {
            let max = 3;
            for lambda in dominant_weights(n, max) {
                let diag = weight_multiplicities(&lambda).unwrap();
                assert_eq!(diag[&lambda], 1);
                let total: u64 = diag.values().sum();
                assert_eq!(total, weyl_dim(&lambda).unwrap(), "{lambda}");
                for (mu, m) in &diag {
                    let dom = Weight::from_eps(&{
                        let mut e = mu.to_eps();
                        e.sort_unstable_by(|a, b| b.cmp(a));
                        e
                    })
                    .unwrap();
                    assert_eq!(diag.get(&dom), Some(m), "{lambda}: {mu}");
                }
            }
        }
    }

    #[test]
    fn next_permutation_enumerates_multiset() {
        let mut v = vec![0, 0, 1];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 3);
        assert_eq!(v, vec![0, 0, 1]);
    }
}
