use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::root_data::RootDatum;
use crate::weight::Weight;
use crate::weyl::{weyl_group, WeylElement};

const MAX_GROUP_ORDER: usize = 100_000;

/// Multiplicities by Kostant's formula
/// `m_λ(μ) = Σ_{w∈W} ε(w) P(w(λ+ρ) − (μ+ρ))`, where `P` counts the ways of
/// writing a root-lattice vector as a nonnegative sum of positive roots.
///
/// Brute force over the whole Weyl group; meant as an oracle for small
/// ranks, not as a production algorithm.
pub struct KostantOracle {
    datum: Arc<RootDatum>,
    group: Vec<WeylElement>,
    roots: Vec<Vec<i64>>,
    memo: Mutex<HashMap<(usize, Vec<i64>), BigInt>>,
}

impl KostantOracle {
    pub fn new(datum: Arc<RootDatum>) -> Result<Self> {
        let group = weyl_group(&datum, MAX_GROUP_ORDER)?;
        let roots = datum.positive_roots().iter().map(|r| r.coords.clone()).collect();
        Ok(KostantOracle { datum, group, roots, memo: Mutex::new(HashMap::new()) })
    }

    /// Kostant's partition function of `gamma` given in simple-root
    /// coordinates.
    pub fn partition_count(&self, gamma: &[i64]) -> BigInt {
        if gamma.iter().any(|&c| c < 0) {
            return BigInt::zero();
        }
        self.count_with(self.roots.len(), gamma)
    }

    /// Ways to write `gamma` using only the first `k` positive roots.
    fn count_with(&self, k: usize, gamma: &[i64]) -> BigInt {
        if gamma.iter().all(|&c| c == 0) {
            return BigInt::one();
        }
        if k == 0 {
            return BigInt::zero();
        }
        let key = (k, gamma.to_vec());
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let root = &self.roots[k - 1];
        let mut total = BigInt::zero();
        let mut rest = gamma.to_vec();
        loop {
            total += self.count_with(k - 1, &rest);
            for (r, a) in rest.iter_mut().zip(root) {
                *r -= a;
            }
            if rest.iter().any(|&c| c < 0) {
                break;
            }
        }
        self.memo.lock().unwrap().insert(key, total.clone());
        total
    }

    pub fn multiplicity(&self, lambda: &Weight, mu: &Weight) -> Result<BigInt> {
        self.datum.check_dominant(lambda)?;
        if mu.rank() != self.datum.rank() {
            return Err(Error::RankMismatch { expected: self.datum.rank(), found: mu.rank() });
        }
        let rho = self.datum.rho();
        let top = lambda + &rho;
        let bottom = mu + &rho;
        let mut total = BigInt::zero();
        for w in &self.group {
            let diff = &w.apply(&self.datum, &top) - &bottom;
            if let Some(coords) = self.datum.root_coords(&diff) {
                let p = self.partition_count(&coords);
                if w.sign() > 0 {
                    total += p;
                } else {
                    total -= p;
                }
            }
        }
        if total < BigInt::zero() {
            return Err(Error::Internal(format!("negative Kostant multiplicity at {mu} in χ({lambda})")));
        }
        Ok(total)
    }
}

/// One-shot oracle query; see [`KostantOracle`].
pub fn kostant_multiplicity_oracle(datum: &Arc<RootDatum>, lambda: &Weight, mu: &Weight) -> Result<BigInt> {
    KostantOracle::new(datum.clone())?.multiplicity(lambda, mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b2_small_cases() {
        let d = RootDatum::of_type("B2").unwrap();
        let rho = Weight::from([1, 1]);
        assert_eq!(kostant_multiplicity_oracle(&d, &rho, &Weight::from([0, 1])).unwrap(), BigInt::from(2));
        assert_eq!(kostant_multiplicity_oracle(&d, &rho, &Weight::from([0, -1])).unwrap(), BigInt::from(2));
        assert_eq!(kostant_multiplicity_oracle(&d, &rho, &rho).unwrap(), BigInt::from(1));
        // (2,0) is not below (1,1)
        assert_eq!(kostant_multiplicity_oracle(&d, &rho, &Weight::from([2, 0])).unwrap(), BigInt::zero());
        assert_eq!(
            kostant_multiplicity_oracle(&d, &Weight::from([1, 0]), &Weight::from([0, 0])).unwrap(),
            BigInt::one()
        );
    }

    #[test]
    fn partition_function_a2() {
        // A2: P(a α1 + b α2) = min(a, b) + 1
        let d = RootDatum::of_type("A2").unwrap();
        let k = KostantOracle::new(d).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(k.partition_count(&[a, b]), BigInt::from(a.min(b) + 1));
            }
        }
        assert_eq!(k.partition_count(&[-1, 3]), BigInt::zero());
    }
}
