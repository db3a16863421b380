use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::root_data::RootDatum;
use crate::scalar::Coefficient;
use crate::weight::Weight;
use crate::weyl::{dominant_representative, orbit_unsorted};

use super::WeightFunction;

/// Multiplicities of the dominant weights of `∇(λ)` by Freudenthal's formula
///
/// `((λ+ρ,λ+ρ) − (μ+ρ,μ+ρ)) m(μ) = 2 Σ_{α>0} Σ_{k≥1} (μ+kα, α) m(μ+kα)`.
///
/// Both sides are evaluated with integer pairings between a weight and an
/// element of the root lattice, so no rationals are needed; the left factor
/// is `(λ+μ+2ρ, λ−μ)`.
pub fn dominant_multiplicities<C: Coefficient>(datum: &RootDatum, lambda: &Weight) -> Result<BTreeMap<Weight, C>> {
    datum.check_dominant(lambda)?;
    let roots = datum.positive_roots();

    // dominant μ ≤ λ, each with the root coordinates of λ − μ
    let mut depth: HashMap<Weight, Vec<i64>> = HashMap::new();
    depth.insert(lambda.clone(), vec![0; datum.rank()]);
    let mut frontier = vec![lambda.clone()];
    while let Some(mu) = frontier.pop() {
        let below = depth[&mu].clone();
        for root in roots {
            let next = &mu - &root.weight;
            if next.is_dominant() && !depth.contains_key(&next) {
                let coords = below.iter().zip(&root.coords).map(|(a, b)| a + b).collect();
                depth.insert(next.clone(), coords);
                frontier.push(next);
            }
        }
    }
    let mut order: Vec<(&Weight, &Vec<i64>)> = depth.iter().collect();
    order.sort_by_key(|(w, c)| (c.iter().sum::<i64>(), (*w).clone()));

    let two_rho_plus_lambda = lambda.add_scaled(&datum.rho(), 2);
    let mut mult: HashMap<Weight, C> = HashMap::new();
    let mut reps: HashMap<Weight, Weight> = HashMap::new();
    mult.insert(lambda.clone(), C::one());
    for (mu, below) in order.into_iter().skip(1) {
        let denom = datum.pair_with_root(&(&two_rho_plus_lambda + mu), below);
        let mut numer = C::zero();
        for root in roots {
            let mut up = mu.clone();
            loop {
                up = &up + &root.weight;
                let rep = reps.entry(up.clone()).or_insert_with(|| dominant_representative(datum, &up).0).clone();
                let m = match mult.get(&rep) {
                    Some(m) => m.clone(),
                    // α-strings are unbroken
                    None => break,
                };
                numer = numer + m * C::from_i64_exact(datum.pair_with_root(&up, &root.coords));
            }
        }
        numer = numer * C::from_i64_exact(2);
        let denom = C::from_i64_exact(denom);
        if denom.is_zero() || !(numer.clone() % denom.clone()).is_zero() {
            return Err(Error::Internal(format!("Freudenthal division failed at {mu} in χ({lambda})")));
        }
        let m = numer / denom;
        if !m.is_zero() {
            mult.insert(mu.clone(), m);
        }
    }
    Ok(mult.into_iter().collect())
}

/// Full character of `∇(λ)` in any coefficient ring.
pub fn freudenthal_character_in<C: Coefficient>(datum: &Arc<RootDatum>, lambda: &Weight) -> Result<WeightFunction<C>> {
    let dominant = dominant_multiplicities::<C>(datum, lambda)?;
    Ok(expand_orbits(datum, &dominant))
}

/// Full character of `∇(λ)` with big-integer multiplicities.
pub fn freudenthal_character(datum: &Arc<RootDatum>, lambda: &Weight) -> Result<WeightFunction<BigInt>> {
    freudenthal_character_in(datum, lambda)
}

pub(crate) fn expand_orbits<C: Coefficient>(
    datum: &Arc<RootDatum>,
    dominant: &BTreeMap<Weight, C>,
) -> WeightFunction<C> {
    let mut entries = HashMap::new();
    for (mu, m) in dominant {
        for w in orbit_unsorted(datum, mu) {
            entries.insert(w, m.clone());
        }
    }
    WeightFunction::rekey(datum.clone(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> Arc<RootDatum> {
        RootDatum::of_type("B2").unwrap()
    }

    #[test]
    fn spin_rep_of_b2() {
        let ch = freudenthal_character(&b2(), &Weight::from([0, 1])).unwrap();
        assert_eq!(ch.len(), 4);
        assert!(ch.iter().all(|(_, m)| *m == BigInt::from(1)));
        let o = crate::weyl::orbit(&b2(), &Weight::from([0, 1]));
        assert!(o.iter().all(|w| ch.get(w) == BigInt::from(1)));
    }

    #[test]
    fn trivial_rep() {
        for name in ["A1", "G2", "E6"] {
            let d = RootDatum::of_type(name).unwrap();
            let ch = freudenthal_character(&d, &d.zero()).unwrap();
            assert_eq!(ch.len(), 1);
            assert_eq!(ch.get(&d.zero()), BigInt::from(1));
        }
    }

    #[test]
    fn b2_rho() {
        let ch = freudenthal_character(&b2(), &Weight::from([1, 1])).unwrap();
        assert_eq!(ch.total(), BigInt::from(16));
        assert_eq!(ch.get(&Weight::from([0, 1])), BigInt::from(2));
        assert_eq!(ch.get(&Weight::from([0, 0])), BigInt::from(0));
        assert_eq!(ch.get(&Weight::from([1, 1])), BigInt::from(1));
    }

    #[test]
    fn vector_rep_b2() {
        let ch = freudenthal_character(&b2(), &Weight::from([1, 0])).unwrap();
        assert_eq!(ch.len(), 5);
        assert_eq!(ch.get(&Weight::from([0, 0])), BigInt::from(1));
    }

    #[test]
    fn rejects_non_dominant() {
        assert!(matches!(freudenthal_character(&b2(), &Weight::from([1, -1])), Err(Error::NotDominant(_))));
        assert!(matches!(freudenthal_character(&b2(), &Weight::from([1])), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn adjoint_e8_zero_weight() {
        let d = RootDatum::of_type("E8").unwrap();
        let dom = dominant_multiplicities::<i64>(&d, &Weight::from([0, 0, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(dom[&d.zero()], 8);
    }

    #[test]
    fn fixed_width_and_big_agree() {
        let d = RootDatum::of_type("C3").unwrap();
        let w = Weight::from([1, 2, 1]);
        let small = dominant_multiplicities::<i64>(&d, &w).unwrap();
        let big = dominant_multiplicities::<BigInt>(&d, &w).unwrap();
        assert_eq!(small.len(), big.len());
        for (k, v) in small {
            assert_eq!(BigInt::from(v), big[&k]);
        }
    }
}
