//! Exact characters of finite-type root data and their Langlands-dual
//! branching multiplicities.
//!
//! Weights are integer vectors in fundamental-weight coordinates of the
//! simply connected realization, so `rho` is `(1, ..., 1)` and a weight is
//! dominant exactly when every coordinate is nonnegative.
//!
//! Everything that carries integer coefficients ([`WeightFunction`],
//! [`VirtualCharacter`], [`CharacterTable`], [`Langlands`]) is generic over a
//! [`Coefficient`] ring. Big integers are the default; the aliases below fix
//! that choice. Rational-valued quantities ([`BilinearForm`], the Weyl
//! dimension product) are generic over a [`Scalar`] field.

pub mod characters;
pub mod error;
pub mod json;
pub mod langlands;
pub mod root_data;
pub mod scalar;
pub mod weight;
pub mod weyl;

pub use characters::{
    brauer_klimyk_product, decompose_into_weyl, evaluate_virtual, freudenthal_character, kostant_multiplicity_oracle,
    tensor_decompose, weyl_dimension, BilinearForm, CharacterStore, CharacterTable, KostantOracle, VirtualCharacter,
    WeightFunction,
};
pub use error::{Error, Result};
pub use json::{BranchingJson, DatumJson, WeightFunctionJson};
pub use langlands::{
    langlands_branching_direct, langlands_branching_tensor, minuscule_branching_closed_form, pi_project,
    rho_shift_product_formula, steinberg_character_identity, verify_branching_theorem, BranchingMap, BranchingResult,
    LambdaCheck, Langlands, Routes, SteinbergCheck, VerificationReport, VerifyOptions,
};
pub use root_data::{
    cartan_matrix, modified_datum, validate_cartan, CartanDatum, CartanType, Family, Labeling, ModifiedDatum,
    PositiveRoot, RootDatum, RootScaling,
};
pub use scalar::{Coefficient, Scalar};
pub use weight::Weight;
pub use weyl::{dominant_representative, orbit, reflect, rho, rho_l, shifted_regularize, Regularization};

use num_bigint::BigInt;
use num_rational::BigRational;

/// A character with arbitrary-precision multiplicities.
pub type Character = WeightFunction<BigInt>;
/// Integer combination of Weyl characters with big-integer coefficients.
pub type VirtualChar = VirtualCharacter<BigInt>;
/// Memoized Freudenthal characters with big-integer multiplicities.
pub type BigCharacterTable = CharacterTable<BigInt>;
/// Langlands branching context over big integers.
pub type BigLanglands = Langlands<BigInt>;
/// Branching result over big integers.
pub type BigBranchingResult = BranchingResult<BigInt>;
/// The invariant form with exact rational values.
pub type ExactForm = BilinearForm<BigRational>;
/// The invariant form in double precision.
pub type FloatForm = BilinearForm<f64>;
