use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::root_data::RootDatum;
use crate::scalar::Scalar;
use crate::weight::Weight;

/// The W-invariant form normalized by `(α_i, α_j) = d_i a_ij`, stored as the
/// Gram matrix of the fundamental weights, `(ϖ_i, ϖ_j) = d_j (C^{-1})_{ji}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm<F> {
    gram: Vec<Vec<F>>,
}

impl<F: Scalar> BilinearForm<F> {
    pub fn new(datum: &RootDatum) -> Self {
        let n = datum.rank();
        let det = datum.cartan_det();
        let adj = datum.adjugate();
        let d = datum.cartan().symmetrizers();
        let gram = (0..n).map(|i| (0..n).map(|j| F::from_ratio(d[j] * adj[j][i], det)).collect()).collect();
        BilinearForm { gram }
    }

    pub fn gram(&self) -> &[Vec<F>] {
        &self.gram
    }

    pub fn pair(&self, a: &Weight, b: &Weight) -> F {
        let mut acc = F::zero();
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    acc = acc + F::from_i64(x * y).unwrap() * self.gram[i][j].clone();
                }
            }
        }
        acc
    }

    pub fn norm(&self, a: &Weight) -> F {
        self.pair(a, a)
    }
}

/// `∏_{α>0} (λ+ρ, α) / (ρ, α)` evaluated in the field `F`.
pub fn weyl_dimension_in<F: Scalar>(datum: &RootDatum, lambda: &Weight) -> Result<F> {
    datum.check_dominant(lambda)?;
    let shifted = lambda + &datum.rho();
    let rho = datum.rho();
    let mut acc = F::one();
    for root in datum.positive_roots() {
        let num = datum.pair_with_root(&shifted, &root.coords);
        let den = datum.pair_with_root(&rho, &root.coords);
        acc = acc * F::from_ratio(num, den);
    }
    Ok(acc)
}

/// Exact Weyl dimension of the irreducible module with highest weight `λ`.
pub fn weyl_dimension(datum: &RootDatum, lambda: &Weight) -> Result<BigInt> {
    let q: BigRational = weyl_dimension_in(datum, lambda)?;
    if !q.denom().is_one() || q.numer() <= &BigInt::zero() {
        return Err(Error::Internal(format!("Weyl dimension of {lambda} is {q}")));
    }
    Ok(q.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b2_dimensions() {
        let d = RootDatum::of_type("B2").unwrap();
        assert_eq!(weyl_dimension(&d, &Weight::from([0, 1])).unwrap(), BigInt::from(4));
        assert_eq!(weyl_dimension(&d, &Weight::from([1, 0])).unwrap(), BigInt::from(5));
        assert_eq!(weyl_dimension(&d, &Weight::from([1, 1])).unwrap(), BigInt::from(16));
        assert_eq!(weyl_dimension(&d, &Weight::from([0, 0])).unwrap(), BigInt::from(1));
        assert!(weyl_dimension(&d, &Weight::from([-1, 0])).is_err());
    }

    #[test]
    fn known_dimensions() {
        for (name, w, dim) in [
            ("G2", vec![1, 0], 7),
            ("G2", vec![0, 1], 14),
            ("F4", vec![0, 0, 0, 1], 26),
            ("F4", vec![1, 0, 0, 0], 52),
            ("E8", vec![0, 0, 0, 0, 0, 0, 0, 1], 248),
            ("E6", vec![1, 0, 0, 0, 0, 0], 27),
            ("A3", vec![1, 1, 1], 64),
        ] {
            let d = RootDatum::of_type(name).unwrap();
            assert_eq!(weyl_dimension(&d, &Weight::from(w)).unwrap(), BigInt::from(dim), "{name}");
        }
    }

    #[test]
    fn float_form_tracks_exact() {
        let d = RootDatum::of_type("C3").unwrap();
        let w = Weight::from([2, 1, 3]);
        let exact: BigRational = weyl_dimension_in(&d, &w).unwrap();
        let approx: f64 = weyl_dimension_in(&d, &w).unwrap();
        let e: f64 = exact.to_integer().to_string().parse().unwrap();
        assert!((approx - e).abs() < 1e-9 * e);
    }

    #[test]
    fn gram_matches_root_pairing() {
        for name in ["B3", "G2", "F4", "D4"] {
            let d = RootDatum::of_type(name).unwrap();
            let form = BilinearForm::<BigRational>::new(&d);
            let n = d.rank();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(form.gram()[i][j], form.gram()[j][i]);
                    // (α_i, α_j) = d_i a_ij
                    let v = form.pair(d.simple_root(i), d.simple_root(j));
                    assert_eq!(v, BigRational::from_integer(d.cartan().dot(i, j).into()));
                }
            }
            let x = Weight::from(vec![1; n]);
            for r in d.positive_roots() {
                let v = form.pair(&x, &r.weight);
                assert_eq!(v, BigRational::from_integer(d.pair_with_root(&x, &r.coords).into()));
            }
        }
    }
}
