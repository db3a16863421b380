use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::root_data::RootDatum;
use crate::scalar::Coefficient;
use crate::weight::Weight;

/// `Σ b_ν χ(ν)` over dominant `ν`, with no zero coefficients stored.
#[derive(Clone)]
pub struct VirtualCharacter<C> {
    datum: Arc<RootDatum>,
    coeffs: BTreeMap<Weight, C>,
}

impl<C: Coefficient> VirtualCharacter<C> {
    pub fn zero(datum: Arc<RootDatum>) -> Self {
        VirtualCharacter { datum, coeffs: BTreeMap::new() }
    }

    pub fn from_terms(datum: Arc<RootDatum>, terms: impl IntoIterator<Item = (Weight, C)>) -> Result<Self> {
        let mut vc = Self::zero(datum);
        for (w, c) in terms {
            vc.datum.check_dominant(&w)?;
            vc.add_term(w, c);
        }
        Ok(vc)
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    /// Panics in debug builds if `w` is not dominant.
    pub fn add_term(&mut self, w: Weight, c: C) {
        debug_assert!(w.is_dominant());
        if c.is_zero() {
            return;
        }
        let v = self.coeffs.remove(&w).unwrap_or_else(C::zero) + c;
        if !v.is_zero() {
            self.coeffs.insert(w, v);
        }
    }

    pub fn get(&self, w: &Weight) -> C {
        self.coeffs.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &C)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficients(&self) -> &BTreeMap<Weight, C> {
        &self.coeffs
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Terms sorted from the top down, as for weight functions.
    pub fn sorted_terms(&self) -> Vec<(&Weight, &C)> {
        let mut v: Vec<_> = self.coeffs.iter().collect();
        v.sort_by_cached_key(|(w, _)| (std::cmp::Reverse(self.datum.scaled_height(w)), (*w).clone()));
        v
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.datum != other.datum {
            return Err(Error::DatumMismatch);
        }
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }
}

impl<C: Coefficient> PartialEq for VirtualCharacter<C> {
    fn eq(&self, other: &Self) -> bool {
        self.datum == other.datum && self.coeffs == other.coeffs
    }
}

impl<C: Coefficient> Eq for VirtualCharacter<C> {}

impl<C: Coefficient> fmt::Debug for VirtualCharacter<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.coeffs.iter()).finish()
    }
}
