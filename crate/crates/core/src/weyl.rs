//! Weyl group action on weights: simple reflections, orbits, chamber walks
//! and the ρ-shifted action `w·λ = w(λ+ρ) − ρ`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::root_data::{ModifiedDatum, RootDatum};
use crate::weight::Weight;

/// `s_i(λ) = λ − ⟨α̌_i, λ⟩ α_i`.
pub fn reflect(datum: &RootDatum, i: usize, weight: &Weight) -> Result<Weight> {
    if i >= datum.rank() {
        return Err(Error::BadNode { index: i, rank: datum.rank() });
    }
    if weight.rank() != datum.rank() {
        return Err(Error::RankMismatch { expected: datum.rank(), found: weight.rank() });
    }
    let mut w = weight.clone();
    datum.reflect_in_place(i, &mut w);
    Ok(w)
}

/// Walks `λ` into the dominant chamber, always reflecting at the lowest-index
/// negative coordinate. Returns the dominant representative, the sign
/// `(−1)^steps` and the number of reflections used.
pub fn dominant_representative(datum: &RootDatum, weight: &Weight) -> (Weight, i8, usize) {
    let mut w = weight.clone();
    let mut steps = 0usize;
    while let Some(i) = w.iter().position(|&c| c < 0) {
        datum.reflect_in_place(i, &mut w);
        steps += 1;
    }
    (w, if steps.is_multiple_of(2) { 1 } else { -1 }, steps)
}

/// Outcome of moving a weight to the dominant chamber under the ρ-shifted
/// action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regularization {
    /// `λ + ρ` lies on a reflection wall; the Weyl character vanishes.
    Singular,
    /// `χ(λ) = sign · χ(dominant)`.
    Regular { dominant: Weight, sign: i8 },
}

pub fn shifted_regularize(datum: &RootDatum, weight: &Weight) -> Regularization {
    let shifted = weight.add_scaled(&datum.rho(), 1);
    let (rep, sign, _) = dominant_representative(datum, &shifted);
    if rep.contains(&0) {
        Regularization::Singular
    } else {
        let dominant = Weight::new(rep.iter().map(|c| c - 1));
        Regularization::Regular { dominant, sign }
    }
}

/// The full W-orbit of `λ`, sorted.
pub fn orbit(datum: &RootDatum, weight: &Weight) -> BTreeSet<Weight> {
    orbit_unsorted(datum, weight).into_iter().collect()
}

pub(crate) fn orbit_unsorted(datum: &RootDatum, weight: &Weight) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(weight.clone());
    queue.push_back(weight.clone());
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        for i in 0..datum.rank() {
            if w[i] == 0 {
                continue;
            }
            let mut r = w.clone();
            datum.reflect_in_place(i, &mut r);
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
        out.push(w);
    }
    out
}

/// `ρ = (1, ..., 1)`.
pub fn rho(datum: &RootDatum) -> Weight {
    datum.rho()
}

/// `ρ^L = Σ l_i ϖ_i` in base coordinates.
pub fn rho_l(md: &ModifiedDatum) -> Weight {
    Weight::new(md.l().iter().copied())
}

/// An element of W given by a reduced word in the simple reflections; the
/// rightmost letter acts first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn sign(&self) -> i8 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn apply(&self, datum: &RootDatum, weight: &Weight) -> Weight {
        let mut w = weight.clone();
        for &i in self.word.iter().rev() {
            datum.reflect_in_place(i, &mut w);
        }
        w
    }
}

/// Enumerates W through the regular orbit of ρ. Fails once more than `limit`
/// elements have been produced.
pub fn weyl_group(datum: &RootDatum, limit: usize) -> Result<Vec<WeylElement>> {
    let rho = datum.rho();
    let mut words: HashMap<Weight, Vec<usize>> = HashMap::new();
    words.insert(rho.clone(), Vec::new());
    let mut queue = VecDeque::from([rho]);
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        let word = words[&w].clone();
        for i in 0..datum.rank() {
            let mut r = w.clone();
            datum.reflect_in_place(i, &mut r);
            if !words.contains_key(&r) {
                let mut next = Vec::with_capacity(word.len() + 1);
                next.push(i);
                next.extend_from_slice(&word);
                words.insert(r.clone(), next);
                queue.push_back(r);
            }
        }
        out.push(WeylElement { word });
        if out.len() > limit {
            return Err(Error::Internal(format!("Weyl group larger than {limit}")));
        }
    }
    Ok(out)
}
