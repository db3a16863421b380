//! Weight multiplicities, Weyl-character decompositions and tensor products.
//!
//! Multiplicities come from Freudenthal's recursion; an independent
//! Kostant-partition-function oracle is provided for cross-checking.
//! Tensor products use the Brauer–Klimyk rule
//! `ξ·χ(ν) = Σ_λ a_λ χ(λ+ν)` with ρ-shifted regularization.

mod form;
mod freudenthal;
mod function;
mod kostant;
mod product;
mod table;
mod virtual_char;

pub use form::{weyl_dimension, weyl_dimension_in, BilinearForm};
pub use freudenthal::{dominant_multiplicities, freudenthal_character, freudenthal_character_in};
pub use function::WeightFunction;
pub use kostant::{kostant_multiplicity_oracle, KostantOracle};
pub use product::{brauer_klimyk_product, decompose_into_weyl, evaluate_virtual, tensor_decompose};
pub use table::{CharacterStore, CharacterTable};
pub use virtual_char::VirtualCharacter;
