use std::sync::Arc;

use crate::error::Result;
use crate::root_data::RootDatum;
use crate::scalar::Coefficient;
use crate::weight::Weight;
use crate::weyl::{shifted_regularize, Regularization};

use super::{CharacterTable, VirtualCharacter, WeightFunction};

/// `ξ·χ(ν) = Σ_λ a_λ χ(λ+ν)` for W-invariant `ξ`, where each `χ(λ+ν)` is
/// brought to a dominant highest weight by the ρ-shifted action and singular
/// terms vanish.
pub fn brauer_klimyk_product<C: Coefficient>(xi: &WeightFunction<C>, nu: &Weight) -> Result<VirtualCharacter<C>> {
    let datum = xi.datum();
    datum.check_dominant(nu)?;
    xi.check_invariant()?;
    let mut out = VirtualCharacter::zero(datum.clone());
    for (lambda, a) in xi.iter() {
        if let Regularization::Regular { dominant, sign } = shifted_regularize(datum, &(lambda + nu)) {
            let c = if sign > 0 { a.clone() } else { -a.clone() };
            out.add_term(dominant, c);
        }
    }
    Ok(out)
}

/// See [`CharacterTable::decompose`]; uses a fresh table.
pub fn decompose_into_weyl<C: Coefficient>(xi: &WeightFunction<C>) -> Result<VirtualCharacter<C>> {
    CharacterTable::new(xi.datum().clone()).decompose(xi)
}

/// See [`CharacterTable::evaluate`]; uses a fresh table.
pub fn evaluate_virtual<C: Coefficient>(vc: &VirtualCharacter<C>) -> Result<WeightFunction<C>> {
    CharacterTable::new(vc.datum().clone()).evaluate(vc)
}

/// Tensor product multiplicities `c_{λ,μ}^ν`.
pub fn tensor_decompose<C: Coefficient>(
    datum: &Arc<RootDatum>,
    lambda: &Weight,
    mu: &Weight,
) -> Result<VirtualCharacter<C>> {
    CharacterTable::new(datum.clone()).tensor(lambda, mu)
}
