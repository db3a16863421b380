use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::root_data::RootDatum;
use crate::scalar::Coefficient;
use crate::weight::Weight;

use super::freudenthal::{dominant_multiplicities, expand_orbits};
use super::{weyl_dimension_in, VirtualCharacter, WeightFunction};

/// Persistent backing for computed characters (e.g. an on-disk cache).
///
/// Loaded characters are checked by the table before use; a store may return
/// anything, including stale or corrupt data.
pub trait CharacterStore<C>: Send + Sync {
    fn load(&self, datum: &Arc<RootDatum>, highest: &Weight) -> Option<WeightFunction<C>>;
    fn save(&self, highest: &Weight, character: &WeightFunction<C>);
}

/// Memoized irreducible characters of one datum.
///
/// Safe to share between threads; concurrent computations of the same
/// character insert identical values and the first insertion wins.
pub struct CharacterTable<C> {
    datum: Arc<RootDatum>,
    dominant: RwLock<HashMap<Weight, Arc<BTreeMap<Weight, C>>>>,
    full: RwLock<HashMap<Weight, Arc<WeightFunction<C>>>>,
    store: Option<Arc<dyn CharacterStore<C>>>,
}

impl<C: Coefficient> CharacterTable<C> {
    pub fn new(datum: Arc<RootDatum>) -> Self {
        CharacterTable { datum, dominant: RwLock::default(), full: RwLock::default(), store: None }
    }

    pub fn with_store(mut self, store: Arc<dyn CharacterStore<C>>) -> Self {
        self.store = Some(store);
        self
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    /// Multiplicities of the dominant weights of `∇(λ)`.
    pub fn dominant(&self, lambda: &Weight) -> Result<Arc<BTreeMap<Weight, C>>> {
        if let Some(v) = self.dominant.read().unwrap().get(lambda) {
            return Ok(v.clone());
        }
        let full = self.full.read().unwrap().get(lambda).cloned();
        let value = match full {
            Some(full) => Arc::new(full.dominant_part()),
            // with a store, go through the full character so it is loaded or
            // saved once
            None if self.store.is_some() => Arc::new(self.character(lambda)?.dominant_part()),
            None => Arc::new(dominant_multiplicities::<C>(&self.datum, lambda)?),
        };
        Ok(self.dominant.write().unwrap().entry(lambda.clone()).or_insert(value).clone())
    }

    /// The full character `χ(λ)`.
    pub fn character(&self, lambda: &Weight) -> Result<Arc<WeightFunction<C>>> {
        if let Some(v) = self.full.read().unwrap().get(lambda) {
            return Ok(v.clone());
        }
        let value = match self.load(lambda) {
            Some(ch) => Arc::new(ch),
            None => {
                let dominant = match self.dominant.read().unwrap().get(lambda) {
                    Some(d) => d.clone(),
                    None => Arc::new(dominant_multiplicities::<C>(&self.datum, lambda)?),
                };
                let ch = expand_orbits(&self.datum, &dominant);
                if let Some(store) = &self.store {
                    store.save(lambda, &ch);
                }
                Arc::new(ch)
            }
        };
        Ok(self.full.write().unwrap().entry(lambda.clone()).or_insert(value).clone())
    }

    fn load(&self, lambda: &Weight) -> Option<WeightFunction<C>> {
        let store = self.store.as_ref()?;
        self.datum.check_dominant(lambda).ok()?;
        let ch = store.load(&self.datum, lambda)?;
        self.plausible(lambda, &ch).then_some(ch)
    }

    /// Cheap sanity checks on a stored character: right datum, highest
    /// weight with multiplicity one, nothing above it, W-invariant, and the
    /// Weyl dimension as total.
    fn plausible(&self, lambda: &Weight, ch: &WeightFunction<C>) -> bool {
        if ch.datum() != &self.datum || !ch.get(lambda).is_one() {
            return false;
        }
        let top = self.datum.scaled_height(lambda);
        if ch.iter().any(|(w, m)| !m.is_positive() || self.datum.scaled_height(w) > top) {
            return false;
        }
        let Ok(dim) = weyl_dimension_in::<BigRational>(&self.datum, lambda) else {
            return false;
        };
        match dim.to_integer().to_string().parse::<C>() {
            Ok(d) => ch.total() == d && ch.is_w_invariant(),
            Err(_) => false,
        }
    }

    /// `Σ b_ν χ(ν)` as a weight function.
    pub fn evaluate(&self, vc: &VirtualCharacter<C>) -> Result<WeightFunction<C>> {
        if vc.datum() != &self.datum {
            return Err(Error::DatumMismatch);
        }
        let mut out = WeightFunction::zero(self.datum.clone());
        for (nu, b) in vc.iter() {
            for (w, m) in self.character(nu)?.iter() {
                out.add_term(w.clone(), m.clone() * b.clone());
            }
        }
        Ok(out)
    }

    /// Writes a W-invariant function as an integer combination of Weyl
    /// characters by peeling off a highest remaining dominant weight.
    pub fn decompose(&self, xi: &WeightFunction<C>) -> Result<VirtualCharacter<C>> {
        if xi.datum() != &self.datum {
            return Err(Error::DatumMismatch);
        }
        xi.check_invariant()?;
        let mut rest: BTreeMap<(i64, Weight), C> =
            xi.dominant_part().into_iter().map(|(w, c)| ((self.datum.scaled_height(&w), w), c)).collect();
        let mut out = VirtualCharacter::zero(self.datum.clone());
        while let Some(((_, top), b)) = rest.pop_last() {
            for (mu, m) in self.dominant(&top)?.iter() {
                if mu == &top {
                    continue;
                }
                let key = (self.datum.scaled_height(mu), mu.clone());
                let v = rest.remove(&key).unwrap_or_else(C::zero) - m.clone() * b.clone();
                if !v.is_zero() {
                    rest.insert(key, v);
                }
            }
            out.add_term(top, b);
        }
        Ok(out)
    }

    /// `χ(λ) ⊗ χ(μ)` decomposed via Brauer–Klimyk over the weights of `χ(λ)`.
    pub fn tensor(&self, lambda: &Weight, mu: &Weight) -> Result<VirtualCharacter<C>> {
        self.datum.check_dominant(mu)?;
        let vc = super::brauer_klimyk_product(&*self.character(lambda)?, mu)?;
        if !vc.is_nonnegative() {
            return Err(Error::Internal(format!("negative tensor multiplicity in {lambda} ⊗ {mu}")));
        }
        Ok(vc)
    }
}
