//! JSON forms of data, weight functions and branching results. Coefficients
//! are written as decimal strings so arbitrary precision survives.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::characters::{VirtualCharacter, WeightFunction};
use crate::error::{Error, Result};
use crate::langlands::BranchingResult;
use crate::root_data::{cartan_matrix, validate_cartan, CartanDatum, CartanType, Family, Labeling, RootDatum};
use crate::scalar::Coefficient;
use crate::weight::Weight;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumJson {
    /// Family letter for built-in types, `null` otherwise.
    #[serde(default)]
    pub family: Option<String>,
    /// Optional on input; taken from the matrix when absent.
    #[serde(default)]
    pub rank: Option<usize>,
    pub matrix: Vec<Vec<i64>>,
    pub symmetrizers: Vec<i64>,
    #[serde(default = "user_labeling")]
    pub labeling: Labeling,
}

fn user_labeling() -> Labeling {
    Labeling::User
}

impl DatumJson {
    pub fn from_datum(datum: &CartanDatum) -> Self {
        DatumJson {
            family: datum.cartan_type().map(|t| t.family.letter().to_string()),
            rank: Some(datum.rank()),
            matrix: datum.matrix().to_vec(),
            symmetrizers: datum.symmetrizers().to_vec(),
            labeling: datum.labeling(),
        }
    }

    /// Validates the matrix and symmetrizers. A family tag is kept only if the
    /// matrix really is that type's Bourbaki matrix (or its transpose, for
    /// `labeling: "transposed"`).
    pub fn to_datum(&self) -> Result<CartanDatum> {
        let rank = self.rank.unwrap_or(self.matrix.len());
        if self.matrix.len() != rank {
            return Err(Error::RankMismatch { expected: rank, found: self.matrix.len() });
        }
        let datum = validate_cartan(self.matrix.clone(), self.symmetrizers.clone())?;
        let family = match (&self.family, self.labeling) {
            (None, _) | (_, Labeling::User) => return Ok(datum),
            (Some(f), _) => {
                let mut chars = f.chars();
                match (chars.next().and_then(Family::from_letter), chars.next()) {
                    (Some(fam), None) => fam,
                    _ => return Err(Error::ParseType(f.clone())),
                }
            }
        };
        let reference = cartan_matrix(family, rank)?;
        let expected = match self.labeling {
            Labeling::Transposed => reference.transposed_matrix(),
            _ => reference.matrix().to_vec(),
        };
        if expected != self.matrix {
            return Err(Error::Parse(format!(
                "matrix is not the {:?} matrix of {}{}",
                self.labeling,
                family.letter(),
                rank
            )));
        }
        let t = CartanType::new(family, rank)?;
        Ok(datum.with_identity(Some(t), self.labeling))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub weight: Weight,
    pub mult: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightFunctionJson {
    pub datum: DatumJson,
    pub entries: Vec<EntryJson>,
}

fn parse_coeff<C: Coefficient>(s: &str) -> Result<C> {
    s.parse::<C>().map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))
}

fn entries<'a, C: Coefficient>(terms: impl IntoIterator<Item = (&'a Weight, &'a C)>) -> Vec<EntryJson> {
    terms.into_iter().map(|(w, c)| EntryJson { weight: w.clone(), mult: c.to_string() }).collect()
}

impl WeightFunctionJson {
    pub fn from_function<C: Coefficient>(f: &WeightFunction<C>) -> Self {
        WeightFunctionJson { datum: DatumJson::from_datum(f.datum().cartan()), entries: entries(f.sorted_entries()) }
    }

    pub fn from_virtual<C: Coefficient>(v: &VirtualCharacter<C>) -> Self {
        WeightFunctionJson { datum: DatumJson::from_datum(v.datum().cartan()), entries: entries(v.sorted_terms()) }
    }

    pub fn to_function<C: Coefficient>(&self) -> Result<WeightFunction<C>> {
        let datum = RootDatum::new(self.datum.to_datum()?);
        self.to_function_in(&datum)
    }

    /// Rebuilds against an existing datum; fails if the stored datum differs.
    pub fn to_function_in<C: Coefficient>(&self, datum: &Arc<RootDatum>) -> Result<WeightFunction<C>> {
        if self.datum.matrix != datum.cartan().matrix() {
            return Err(Error::DatumMismatch);
        }
        let terms = self
            .entries
            .iter()
            .map(|e| Ok((e.weight.clone(), parse_coeff::<C>(&e.mult)?)))
            .collect::<Result<Vec<_>>>()?;
        WeightFunction::from_entries(datum.clone(), terms)
    }

    pub fn to_virtual<C: Coefficient>(&self) -> Result<VirtualCharacter<C>> {
        let datum = RootDatum::new(self.datum.to_datum()?);
        let terms = self
            .entries
            .iter()
            .map(|e| Ok((e.weight.clone(), parse_coeff::<C>(&e.mult)?)))
            .collect::<Result<Vec<_>>>()?;
        VirtualCharacter::from_terms(datum, terms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuJson {
    pub mu: Weight,
    pub mult: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuJson {
    pub nu: Weight,
    pub mult: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingJson {
    pub lambda: Weight,
    pub ell: i64,
    /// Dual dominant weights in dual coordinates.
    pub m: Vec<MuJson>,
    /// Base dominant weights.
    pub n: Vec<NuJson>,
    pub routes_agree: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub routes: Vec<String>,
}

impl BranchingJson {
    pub fn from_result<C: Coefficient>(r: &BranchingResult<C>) -> Self {
        let routes =
            [("direct", r.direct.is_some()), ("tensor", r.via_tensor.is_some()), ("closed", r.closed_form.is_some())]
                .into_iter()
                .filter(|(_, on)| *on)
                .map(|(name, _)| name.to_string())
                .collect();
        BranchingJson {
            lambda: r.lambda.clone(),
            ell: r.ell,
            m: r.m().iter().map(|(mu, c)| MuJson { mu: mu.clone(), mult: c.to_string() }).collect(),
            n: r.complementary.iter().map(|(nu, c)| NuJson { nu: nu.clone(), mult: c.to_string() }).collect(),
            routes_agree: r.routes_agree(),
            routes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::freudenthal_character;
    use crate::root_data::modified_datum;
    use num_bigint::BigInt;

    #[test]
    fn datum_round_trip() {
        for name in ["B2", "G2", "F4", "E6"] {
            let d = RootDatum::of_type(name).unwrap();
            let j = DatumJson::from_datum(d.cartan());
            let text = serde_json::to_string(&j).unwrap();
            let back: DatumJson = serde_json::from_str(&text).unwrap();
            assert_eq!(&back.to_datum().unwrap(), d.cartan());
        }
        let g2 = modified_datum(&RootDatum::of_type("G2").unwrap(), 3).unwrap();
        let j = DatumJson::from_datum(g2.dual().cartan());
        assert_eq!(j.labeling, Labeling::Transposed);
        assert_eq!(&j.to_datum().unwrap(), g2.dual().cartan());
    }

    #[test]
    fn user_datum() {
        let text = r#"{"matrix":[[2,-1],[-2,2]],"symmetrizers":[2,1]}"#;
        let j: DatumJson = serde_json::from_str(text).unwrap();
        let d = j.to_datum().unwrap();
        assert_eq!(d.labeling(), Labeling::User);
        assert!(d.cartan_type().is_none());
        let bad = r#"{"family":"C","rank":2,"matrix":[[2,-1],[-2,2]],"symmetrizers":[2,1],"labeling":"bourbaki"}"#;
        let j: DatumJson = serde_json::from_str(bad).unwrap();
        assert!(j.to_datum().is_err());
    }

    #[test]
    fn function_round_trip() {
        let d = RootDatum::of_type("B2").unwrap();
        let ch = freudenthal_character(&d, &Weight::from([1, 1])).unwrap();
        let text = serde_json::to_string(&WeightFunctionJson::from_function(&ch)).unwrap();
        let back: WeightFunctionJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_function::<BigInt>().unwrap(), ch);
        assert_eq!(back.entries[0].weight, Weight::from([1, 1]));
    }

    #[test]
    fn bad_coefficient() {
        let text = r#"{"datum":{"family":"A","rank":1,"matrix":[[2]],"symmetrizers":[1],"labeling":"bourbaki"},"entries":[{"weight":[1],"mult":"x"}]}"#;
        let j: WeightFunctionJson = serde_json::from_str(text).unwrap();
        assert!(matches!(j.to_function::<BigInt>(), Err(Error::Parse(_))));
    }
}
