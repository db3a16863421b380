use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::root_data::RootDatum;
use crate::scalar::Coefficient;
use crate::weight::Weight;

/// A finitely supported function `X → C`, i.e. an element `Σ a_λ e^λ` of the
/// group ring. Zero values are never stored.
#[derive(Clone)]
pub struct WeightFunction<C> {
    datum: Arc<RootDatum>,
    entries: HashMap<Weight, C>,
}

impl<C: Coefficient> WeightFunction<C> {
    pub fn zero(datum: Arc<RootDatum>) -> Self {
        WeightFunction { datum, entries: HashMap::new() }
    }

    /// `c · e^w`
    pub fn monomial(datum: Arc<RootDatum>, w: Weight, c: C) -> Self {
        let mut f = Self::zero(datum);
        f.add_term(w, c);
        f
    }

    /// Sums repeated weights and drops zeros.
    pub fn from_entries(datum: Arc<RootDatum>, entries: impl IntoIterator<Item = (Weight, C)>) -> Result<Self> {
        let mut f = Self::zero(datum);
        for (w, c) in entries {
            if w.rank() != f.datum.rank() {
                return Err(Error::RankMismatch { expected: f.datum.rank(), found: w.rank() });
            }
            f.add_term(w, c);
        }
        Ok(f)
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn add_term(&mut self, w: Weight, c: C) {
        if c.is_zero() {
            return;
        }
        match self.entries.entry(w) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn get(&self, w: &Weight) -> C {
        self.entries.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &C)> {
        self.entries.iter()
    }

    /// Sum of all values; the dimension when `self` is a character.
    pub fn total(&self) -> C {
        self.entries.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// Entries sorted from the top down: decreasing height, then
    /// lexicographically increasing coordinates.
    pub fn sorted_entries(&self) -> Vec<(&Weight, &C)> {
        let mut v: Vec<_> = self.entries.iter().collect();
        v.sort_by_cached_key(|(w, _)| (Reverse(self.datum.scaled_height(w)), (*w).clone()));
        v
    }

    /// First weight (in sorted order) where `f(μ) ≠ f(s_i μ)` for some `i`.
    pub fn invariance_violation(&self) -> Option<Weight> {
        let mut bad: Vec<&Weight> = self
            .entries
            .iter()
            .filter(|(w, c)| {
                (0..self.datum.rank()).any(|i| {
                    let mut r = (*w).clone();
                    self.datum.reflect_in_place(i, &mut r);
                    self.entries.get(&r) != Some(*c)
                })
            })
            .map(|(w, _)| w)
            .collect();
        bad.sort();
        bad.first().map(|w| (*w).clone())
    }

    pub fn is_w_invariant(&self) -> bool {
        self.invariance_violation().is_none()
    }

    pub(crate) fn check_invariant(&self) -> Result<()> {
        match self.invariance_violation() {
            Some(w) => Err(Error::NotInvariant(w)),
            None => Ok(()),
        }
    }

    /// Restriction to dominant weights.
    pub fn dominant_part(&self) -> BTreeMap<Weight, C> {
        self.entries.iter().filter(|(w, _)| w.is_dominant()).map(|(w, c)| (w.clone(), c.clone())).collect()
    }

    pub fn scaled(&self, k: &C) -> Self {
        let mut out = Self::zero(self.datum.clone());
        for (w, c) in &self.entries {
            out.add_term(w.clone(), c.clone() * k.clone());
        }
        out
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.datum == other.datum {
            Ok(())
        } else {
            Err(Error::DatumMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.entries {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.entries {
            out.add_term(w.clone(), -c.clone());
        }
        Ok(out)
    }

    /// The ring product `(Σ a_λ e^λ)(Σ b_μ e^μ) = Σ a_λ b_μ e^{λ+μ}`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.datum.clone());
        for (w1, c1) in &self.entries {
            for (w2, c2) in &other.entries {
                out.add_term(w1 + w2, c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    /// `e^λ ↦ e^{λ + shift}`.
    pub fn shifted(&self, shift: &Weight) -> Self {
        WeightFunction {
            datum: self.datum.clone(),
            entries: self.entries.iter().map(|(w, c)| (w + shift, c.clone())).collect(),
        }
    }

    /// `e^λ ↦ e^{s_i λ}`.
    pub fn reflected(&self, i: usize) -> Self {
        WeightFunction {
            datum: self.datum.clone(),
            entries: self
                .entries
                .iter()
                .map(|(w, c)| {
                    let mut r = w.clone();
                    self.datum.reflect_in_place(i, &mut r);
                    (r, c.clone())
                })
                .collect(),
        }
    }

    /// Same entries over another datum (used to move between a datum and an
    /// equal one, or to re-key after a coordinate change).
    pub(crate) fn rekey(datum: Arc<RootDatum>, entries: HashMap<Weight, C>) -> Self {
        WeightFunction { datum, entries }
    }

    /// First weight (sorted) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<Weight> {
        let mut keys: Vec<&Weight> = self.entries.keys().chain(other.entries.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find(|w| self.entries.get(*w) != other.entries.get(*w)).cloned()
    }
}

impl<C: Coefficient> PartialEq for WeightFunction<C> {
    fn eq(&self, other: &Self) -> bool {
        self.datum == other.datum && self.entries == other.entries
    }
}

impl<C: Coefficient> Eq for WeightFunction<C> {}

impl<C: Coefficient> fmt::Debug for WeightFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.sorted_entries()).finish()
    }
}
