//! Langlands-duality branching: the projection `Π_ℓ` onto the sublattice
//! `X*`, the multiplicities `m_μ^λ` in
//! `Π_ℓ(χ(λ)) = Σ_μ m_μ^λ χ^L(μ)`, and the character identities relating them
//! to tensor products with `χ(ρ^L − ρ)`.
//!
//! Branching maps are keyed by dominant weights of the dual datum in dual
//! coordinates. Dual characters are computed by the dual datum's own
//! [`CharacterTable`], so the direct route (project, then decompose in the
//! dual) and the tensor route (decompose `χ(ρ^L−ρ)⊗χ(λ)` in the base) share
//! no character data.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::characters::{brauer_klimyk_product, weyl_dimension, CharacterTable, VirtualCharacter, WeightFunction};
use crate::error::{Error, Result};
use crate::root_data::ModifiedDatum;
use crate::scalar::Coefficient;
use crate::weight::Weight;
use crate::weyl;

/// Dual dominant weight (dual coordinates) ↦ multiplicity.
pub type BranchingMap<C> = BTreeMap<Weight, C>;

/// Branching of `Π_ℓ(χ(λ))` by whichever routes were requested.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchingResult<C: Coefficient> {
    /// Highest weight in base coordinates.
    pub lambda: Weight,
    pub ell: i64,
    pub direct: Option<BranchingMap<C>>,
    pub via_tensor: Option<BranchingMap<C>>,
    pub closed_form: Option<BranchingMap<C>>,
    /// `n_ν^λ`: the constituents of `χ(ρ^L−ρ)·(χ(λ) − Π_ℓ χ(λ))`.
    pub complementary: VirtualCharacter<C>,
    /// Whether the complement computed from the tensor product matches the
    /// one computed directly from `χ(λ) − Π_ℓ χ(λ)`; `None` when only one was
    /// computed.
    pub complement_agrees: Option<bool>,
}

impl<C: Coefficient> BranchingResult<C> {
    /// The multiplicities from the first available route.
    pub fn m(&self) -> &BranchingMap<C> {
        self.direct
            .as_ref()
            .or(self.via_tensor.as_ref())
            .or(self.closed_form.as_ref())
            .expect("branching result without any route")
    }

    /// All computed routes agree with each other.
    pub fn routes_agree(&self) -> bool {
        let routes: Vec<&BranchingMap<C>> =
            [&self.direct, &self.via_tensor, &self.closed_form].into_iter().flatten().collect();
        routes.windows(2).all(|w| w[0] == w[1]) && self.complement_agrees != Some(false)
    }
}

/// Which routes [`Langlands::branching`] computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Routes {
    pub direct: bool,
    pub tensor: bool,
    pub closed_form: bool,
}

impl Routes {
    pub const ALL: Routes = Routes { direct: true, tensor: true, closed_form: true };
    pub const GENERAL: Routes = Routes { direct: true, tensor: true, closed_form: false };
}

/// Result of comparing `χ(λ+ρ^L−ρ)` with `χ(ρ^L−ρ)·χ^L(λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinbergCheck {
    pub holds: bool,
    pub first_difference: Option<Weight>,
}

/// Branching computations for one ℓ-modified datum, with memoized characters
/// for the base and the dual.
pub struct Langlands<C> {
    md: ModifiedDatum,
    base: CharacterTable<C>,
    dual: CharacterTable<C>,
}

impl<C: Coefficient> Langlands<C> {
    pub fn new(md: ModifiedDatum) -> Self {
        let base = CharacterTable::new(md.base().clone());
        let dual = CharacterTable::new(md.dual().clone());
        Langlands { md, base, dual }
    }

    /// Uses caller-supplied tables (for instance backed by a disk store).
    pub fn with_tables(md: ModifiedDatum, base: CharacterTable<C>, dual: CharacterTable<C>) -> Result<Self> {
        if base.datum() != md.base() || dual.datum() != md.dual() {
            return Err(Error::DatumMismatch);
        }
        Ok(Langlands { md, base, dual })
    }

    pub fn modified(&self) -> &ModifiedDatum {
        &self.md
    }

    pub fn base_table(&self) -> &CharacterTable<C> {
        &self.base
    }

    pub fn dual_table(&self) -> &CharacterTable<C> {
        &self.dual
    }

    /// `λ` must be dominant and lie in `X*`.
    pub fn check_lambda(&self, lambda: &Weight) -> Result<()> {
        self.md.base().check_dominant(lambda)?;
        self.md.dual_coords(lambda).map(|_| ())
    }

    /// `Π_ℓ`: keep the weights in `X*`, re-expressed in dual coordinates.
    pub fn pi_project(&self, xi: &WeightFunction<C>) -> Result<WeightFunction<C>> {
        pi_project(&self.md, xi)
    }

    /// Re-expresses a dual weight function in base coordinates.
    pub fn embed_function(&self, xi: &WeightFunction<C>) -> Result<WeightFunction<C>> {
        if xi.datum() != self.md.dual() {
            return Err(Error::DatumMismatch);
        }
        WeightFunction::from_entries(self.md.base().clone(), xi.iter().map(|(w, c)| (self.md.embed(w), c.clone())))
    }

    /// `m_μ^λ` by projecting `χ(λ)` and decomposing in the dual datum.
    pub fn branching_direct(&self, lambda: &Weight) -> Result<BranchingMap<C>> {
        self.check_lambda(lambda)?;
        let projected = self.pi_project(&*self.base.character(lambda)?)?;
        let vc = self.dual.decompose(&projected)?;
        let top = self.md.dual_coords(lambda)?;
        if !vc.get(&top).is_one() {
            return Err(Error::TheoremViolation(format!(
                "coefficient of χ^L({top}) in Π(χ({lambda})) is {}, expected 1",
                vc.get(&top)
            )));
        }
        if let Some((mu, c)) = vc.iter().find(|(_, c)| c.is_negative()) {
            return Err(Error::TheoremViolation(format!(
                "negative branching multiplicity {c} at μ = {mu} for λ = {lambda}"
            )));
        }
        Ok(vc.coefficients().clone())
    }

    /// `m_μ^λ = c_{ρ^L−ρ,λ}^{μ+ρ^L−ρ}` read off the tensor product, together
    /// with the complementary constituents `n_ν^λ`.
    pub fn branching_tensor(&self, lambda: &Weight) -> Result<(BranchingMap<C>, VirtualCharacter<C>)> {
        self.check_lambda(lambda)?;
        let shift = self.md.rho_shift();
        let product = self.base.tensor(&shift, lambda)?;
        let mut m = BranchingMap::new();
        let mut n = VirtualCharacter::zero(self.md.base().clone());
        for (nu, c) in product.iter() {
            let mu = nu - &shift;
            if self.md.in_sublattice(&mu) {
                if !mu.is_dominant() {
                    return Err(Error::Internal(format!(
                        "constituent {nu} lies in the coset but {mu} is not dominant"
                    )));
                }
                m.insert(self.md.dual_coords(&mu)?, c.clone());
            } else {
                n.add_term(nu.clone(), c.clone());
            }
        }
        Ok((m, n))
    }

    /// `n_ν^λ` computed without the tensor product: Brauer–Klimyk applied to
    /// `(χ(λ) − Π_ℓ χ(λ)) · χ(ρ^L−ρ)`. Every constituent must avoid the coset
    /// `ρ^L−ρ + X*`.
    pub fn complement_direct(&self, lambda: &Weight) -> Result<VirtualCharacter<C>> {
        self.check_lambda(lambda)?;
        let ch = self.base.character(lambda)?;
        let outside = WeightFunction::from_entries(
            self.md.base().clone(),
            ch.iter().filter(|(w, _)| !self.md.in_sublattice(w)).map(|(w, c)| (w.clone(), c.clone())),
        )?;
        let shift = self.md.rho_shift();
        let n = brauer_klimyk_product(&outside, &shift)?;
        if let Some((nu, _)) = n.iter().find(|(nu, _)| self.md.in_sublattice(&(*nu - &shift))) {
            return Err(Error::TheoremViolation(format!("complement constituent {nu} lies in ρ^L−ρ + X*")));
        }
        Ok(n)
    }

    /// Orbit-sum formula, valid when `χ(ρ^L−ρ)` is multiplicity free with
    /// support a single W-orbit:
    /// `Π_ℓ χ(λ) = Σ_{o ∈ W(ρ^L−ρ), λ+o dominant} χ^L(λ + o − (ρ^L−ρ))`.
    pub fn closed_form(&self, lambda: &Weight) -> Result<BranchingMap<C>> {
        self.check_lambda(lambda)?;
        let shift = self.md.rho_shift();
        let ch = self.base.character(&shift)?;
        let orbit = weyl::orbit(self.md.base(), &shift);
        if ch.len() != orbit.len() || orbit.iter().any(|w| !ch.get(w).is_one()) {
            return Err(Error::ClosedFormUnavailable(format!(
                "χ(ρ^L−ρ) = χ({shift}) is not a single multiplicity-free orbit; use the direct or tensor route"
            )));
        }
        let mut m = BranchingMap::new();
        for o in &orbit {
            let top = lambda + o;
            if !top.is_dominant() {
                continue;
            }
            let mu = &top - &shift;
            if self.md.in_sublattice(&mu) {
                let key = self.md.dual_coords(&mu)?;
                let v = m.remove(&key).unwrap_or_else(C::zero) + C::one();
                m.insert(key, v);
            }
        }
        Ok(m)
    }

    /// Computes the requested routes. The complement comes from the tensor
    /// route when it runs, otherwise from [`complement_direct`](Self::complement_direct);
    /// when both the direct and tensor routes run, both complements are
    /// computed and compared.
    pub fn branching(&self, lambda: &Weight, routes: Routes) -> Result<BranchingResult<C>> {
        self.check_lambda(lambda)?;
        let direct = if routes.direct { Some(self.branching_direct(lambda)?) } else { None };
        let closed_form = if routes.closed_form { Some(self.closed_form(lambda)?) } else { None };
        let (via_tensor, complementary, complement_agrees) = if routes.tensor {
            let (m, n) = self.branching_tensor(lambda)?;
            let agrees = if routes.direct { Some(self.complement_direct(lambda)? == n) } else { None };
            (Some(m), n, agrees)
        } else {
            (None, self.complement_direct(lambda)?, None)
        };
        if !routes.direct && !routes.tensor && !routes.closed_form {
            return Err(Error::Parse("no branching route selected".into()));
        }
        Ok(BranchingResult {
            lambda: lambda.clone(),
            ell: self.md.ell(),
            direct,
            via_tensor,
            closed_form,
            complementary,
            complement_agrees,
        })
    }

    /// `χ(λ+ρ^L−ρ) = χ(ρ^L−ρ)·χ^L(λ)`, weight by weight.
    pub fn steinberg_identity(&self, lambda: &Weight) -> Result<SteinbergCheck> {
        self.check_lambda(lambda)?;
        let shift = self.md.rho_shift();
        let lhs = self.base.character(&(lambda + &shift))?;
        let dual_char = self.dual.character(&self.md.dual_coords(lambda)?)?;
        let rhs = self.base.character(&shift)?.product(&self.embed_function(&dual_char)?)?;
        let first_difference = lhs.first_difference(&rhs);
        Ok(SteinbergCheck { holds: first_difference.is_none(), first_difference })
    }

    /// `e^{ρ^L−ρ} ∏_{α>0} (1 + e^{−α} + ... + e^{−(l_α−1)α})`, which must equal
    /// `χ(ρ^L−ρ)`.
    pub fn rho_shift_product(&self) -> Result<WeightFunction<C>> {
        let base = self.md.base();
        let mut acc = WeightFunction::monomial(base.clone(), self.md.rho_shift(), C::one());
        for s in self.md.root_scaling_map()? {
            if s.scale == 1 {
                continue;
            }
            let factor =
                WeightFunction::from_entries(base.clone(), (0..s.scale).map(|k| (s.root.weight.scale(-k), C::one())))?;
            acc = acc.product(&factor)?;
        }
        let expected = self.base.character(&self.md.rho_shift())?;
        if let Some(w) = acc.first_difference(&expected) {
            return Err(Error::Internal(format!("product formula for χ(ρ^L−ρ) differs at {w}")));
        }
        Ok(acc)
    }

    /// Every dominant `λ ∈ X*` with all coordinates at most `bound`, sorted.
    pub fn sweep_weights(&self, bound: i64) -> Vec<Weight> {
        let mut out = vec![Weight::new(std::iter::empty())];
        for &l in self.md.l() {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..=bound).step_by(l as usize).map(move |c| {
                        let mut v = w.to_vec();
                        v.push(c);
                        Weight::from(v)
                    })
                })
                .collect();
        }
        out.sort();
        out
    }

    /// Checks every `λ` of [`sweep_weights`](Self::sweep_weights): route
    /// agreement, nonnegativity of `m` and `n`, the leading term, support
    /// below `λ`, coset separation, dimension bookkeeping and, when
    /// requested, the Steinberg identity and the closed form. Runs on `jobs`
    /// threads; the report is sorted by `λ`.
    pub fn verify(&self, options: &VerifyOptions) -> Result<VerificationReport> {
        let start = Instant::now();
        let lambdas = self.sweep_weights(options.bound);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs.max(1))
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?;
        let checks: Vec<LambdaCheck> =
            pool.install(|| lambdas.par_iter().map(|l| self.check_one(l, options)).collect());
        let max_dimension = checks.iter().map(|c| c.dimension.clone()).max().unwrap_or_default();
        Ok(VerificationReport {
            datum: self.md.base().name(),
            ell: self.md.ell(),
            bound: options.bound,
            checked: checks.len(),
            passed: checks.iter().filter(|c| c.failures.is_empty()).count(),
            max_dimension,
            checks,
            elapsed: start.elapsed(),
        })
    }

    fn check_one(&self, lambda: &Weight, options: &VerifyOptions) -> LambdaCheck {
        let mut failures = Vec::new();
        let routes = Routes { direct: true, tensor: true, closed_form: options.closed_form };
        let base = self.md.base();
        let shift = self.md.rho_shift();
        let dim = |w: &Weight| weyl_dimension(base, w).unwrap_or_default();
        let dimension = dim(&shift) * dim(lambda);
        let result = match self.branching(lambda, routes) {
            Ok(r) => Some(r),
            Err(e) => {
                failures.push(e.to_string());
                None
            }
        };
        if let Some(r) = &result {
            if r.direct != r.via_tensor {
                failures.push(format!("direct {:?} != tensor {:?}", r.direct, r.via_tensor));
            }
            if r.closed_form.is_some() && r.closed_form != r.direct {
                failures.push(format!("closed form {:?} != direct {:?}", r.closed_form, r.direct));
            }
            if r.complement_agrees == Some(false) {
                failures.push("complement from tensor product differs from complement of Π".into());
            }
            if !r.complementary.is_nonnegative() {
                failures.push(format!("negative complementary coefficient in {:?}", r.complementary));
            }
            let m = r.m();
            if m.values().any(|c| c.is_negative()) {
                failures.push(format!("negative branching multiplicity in {m:?}"));
            }
            let top = self.md.dual_coords(lambda).expect("sweep weights lie in X*");
            if m.get(&top).is_none_or(|c| !c.is_one()) {
                failures.push(format!("leading coefficient at {top} is not 1"));
            }
            for mu in m.keys() {
                if !base.is_below(&self.md.embed(mu), lambda) {
                    failures.push(format!("{mu} is not below λ"));
                }
            }
            for nu in r.complementary.coefficients().keys() {
                if self.md.in_sublattice(&(nu - &shift)) {
                    failures.push(format!("complement constituent {nu} lies in ρ^L−ρ + X*"));
                }
            }
            let mut rhs = BigInt::default();
            for (mu, c) in m {
                rhs += dim(&(&self.md.embed(mu) + &shift)) * to_big(c);
            }
            for (nu, c) in r.complementary.iter() {
                rhs += dim(nu) * to_big(c);
            }
            if rhs != dimension {
                failures.push(format!("dimension bookkeeping: {rhs} != {dimension}"));
            }
        }
        if options.steinberg {
            match self.steinberg_identity(lambda) {
                Ok(s) if s.holds => {}
                Ok(s) => failures.push(format!("Steinberg identity fails at weight {:?}", s.first_difference)),
                Err(e) => failures.push(e.to_string()),
            }
        }
        LambdaCheck { lambda: lambda.clone(), m: result.map(|r| stringify(r.m())), dimension, failures }
    }
}

fn to_big<C: Coefficient>(c: &C) -> BigInt {
    c.to_string().parse().expect("coefficient prints as an integer")
}

fn stringify<C: Coefficient>(m: &BranchingMap<C>) -> BTreeMap<Weight, String> {
    m.iter().map(|(k, v)| (k.clone(), v.to_string())).collect()
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub bound: i64,
    pub jobs: usize,
    pub steinberg: bool,
    pub closed_form: bool,
}

impl VerifyOptions {
    pub fn new(bound: i64) -> Self {
        VerifyOptions { bound, jobs: 1, steinberg: false, closed_form: false }
    }
}

/// Outcome for one highest weight of a sweep.
#[derive(Clone, Debug)]
pub struct LambdaCheck {
    pub lambda: Weight,
    /// Branching multiplicities as decimal strings, when they could be
    /// computed.
    pub m: Option<BTreeMap<Weight, String>>,
    /// `dim χ(ρ^L−ρ) · dim χ(λ)`.
    pub dimension: BigInt,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub datum: String,
    pub ell: i64,
    pub bound: i64,
    pub checked: usize,
    pub passed: usize,
    /// Largest tensor-product dimension touched.
    pub max_dimension: BigInt,
    pub checks: Vec<LambdaCheck>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.checked
    }

    pub fn failures(&self) -> impl Iterator<Item = &LambdaCheck> {
        self.checks.iter().filter(|c| !c.failures.is_empty())
    }
}

/// `Π_ℓ` on a base weight function, landing in the dual datum.
///
/// W-equivariant: `Π(s_i ξ) = s_i Π(ξ)` with `s_i` acting on each side in its
/// own coordinates.
pub fn pi_project<C: Coefficient>(md: &ModifiedDatum, xi: &WeightFunction<C>) -> Result<WeightFunction<C>> {
    if xi.datum() != md.base() {
        return Err(Error::DatumMismatch);
    }
    let entries: HashMap<Weight, C> = xi
        .iter()
        .filter(|(w, _)| md.in_sublattice(w))
        .map(|(w, c)| (md.dual_coords(w).expect("filtered to X*"), c.clone()))
        .collect();
    Ok(WeightFunction::rekey(md.dual().clone(), entries))
}

/// See [`Langlands::branching_direct`].
pub fn langlands_branching_direct(md: &ModifiedDatum, lambda: &Weight) -> Result<BranchingMap<BigInt>> {
    Langlands::new(md.clone()).branching_direct(lambda)
}

/// See [`Langlands::branching_tensor`].
pub fn langlands_branching_tensor(md: &ModifiedDatum, lambda: &Weight) -> Result<BranchingMap<BigInt>> {
    Ok(Langlands::new(md.clone()).branching_tensor(lambda)?.0)
}

/// See [`Langlands::closed_form`].
pub fn minuscule_branching_closed_form(md: &ModifiedDatum, lambda: &Weight) -> Result<BranchingMap<BigInt>> {
    Langlands::new(md.clone()).closed_form(lambda)
}

/// See [`Langlands::steinberg_identity`].
pub fn steinberg_character_identity(md: &ModifiedDatum, lambda: &Weight) -> Result<SteinbergCheck> {
    Langlands::<BigInt>::new(md.clone()).steinberg_identity(lambda)
}

/// See [`Langlands::rho_shift_product`].
pub fn rho_shift_product_formula(md: &ModifiedDatum) -> Result<WeightFunction<BigInt>> {
    Langlands::new(md.clone()).rho_shift_product()
}

/// Both general routes for every dominant `λ ∈ X*` with coordinates at most
/// `bound`.
pub fn verify_branching_theorem(md: &ModifiedDatum, bound: i64, jobs: usize) -> Result<VerificationReport> {
    Langlands::<BigInt>::new(md.clone()).verify(&VerifyOptions { jobs, ..VerifyOptions::new(bound) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::freudenthal_character;
    use crate::root_data::{modified_datum, RootDatum};

    fn md(name: &str, ell: i64) -> ModifiedDatum {
        modified_datum(&RootDatum::of_type(name).unwrap(), ell).unwrap()
    }

    fn map(entries: &[(&[i64], i64)]) -> BranchingMap<BigInt> {
        entries.iter().map(|(w, c)| (Weight::from(*w), BigInt::from(*c))).collect()
    }

    #[test]
    fn projection_b2() {
        let md = md("B2", 2);
        let base = md.base().clone();
        let vector = freudenthal_character(&base, &Weight::from([1, 0])).unwrap();
        assert_eq!(pi_project(&md, &vector).unwrap().len(), 5);
        let spin = freudenthal_character(&base, &Weight::from([0, 1])).unwrap();
        assert!(pi_project(&md, &spin).unwrap().is_empty());
    }

    #[test]
    fn projection_simply_laced_is_identity() {
        let md = md("A2", 1);
        let ch = freudenthal_character(md.base(), &Weight::from([2, 1])).unwrap();
        let p = pi_project(&md, &ch).unwrap();
        assert_eq!(p.sorted_entries().len(), ch.len());
        for (w, c) in ch.iter() {
            assert_eq!(&p.get(w), c);
        }
    }

    #[test]
    fn projection_equivariance() {
        let md = md("B2", 2);
        let base = md.base().clone();
        for a in -3..=3 {
            for b in -3..=3 {
                let xi = WeightFunction::monomial(base.clone(), Weight::from([a, b]), BigInt::from(1));
                for i in 0..2 {
                    let lhs = pi_project(&md, &xi.reflected(i)).unwrap();
                    let rhs = pi_project(&md, &xi).unwrap().reflected(i);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn b2_branching_vector() {
        let md = md("B2", 2);
        let expected = map(&[(&[1, 0], 1), (&[0, 0], 1)]);
        let lambda = Weight::from([1, 0]);
        assert_eq!(langlands_branching_direct(&md, &lambda).unwrap(), expected);
        assert_eq!(langlands_branching_tensor(&md, &lambda).unwrap(), expected);
        assert_eq!(minuscule_branching_closed_form(&md, &lambda).unwrap(), expected);
        let zero = Weight::from([0, 0]);
        assert_eq!(langlands_branching_direct(&md, &zero).unwrap(), map(&[(&[0, 0], 1)]));
        assert_eq!(minuscule_branching_closed_form(&md, &zero).unwrap(), map(&[(&[0, 0], 1)]));
    }

    #[test]
    fn b2_two_omega2_three_ways() {
        let md = md("B2", 2);
        let lambda = Weight::from([0, 2]);
        let lang = Langlands::<BigInt>::new(md.clone());
        let r = lang.branching(&lambda, Routes::ALL).unwrap();
        assert!(r.routes_agree());
        // 2ϖ2 in dual coordinates is ϖ2^L; Π χ(2ϖ2) = χ^L(ϖ2) + χ^L(ϖ1) + χ^L(0)
        assert_eq!(r.direct.unwrap(), map(&[(&[0, 1], 1), (&[1, 0], 1), (&[0, 0], 1)]));
    }

    #[test]
    fn rejects_bad_lambda() {
        let md = md("B2", 2);
        assert!(matches!(langlands_branching_direct(&md, &Weight::from([0, 1])), Err(Error::NotInSublattice { .. })));
        assert!(matches!(langlands_branching_tensor(&md, &Weight::from([-1, 0])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn simply_laced_branching_trivial() {
        let md = md("A2", 1);
        let lang = Langlands::<BigInt>::new(md);
        let r = lang.branching(&Weight::from([2, 1]), Routes::GENERAL).unwrap();
        assert_eq!(r.m(), &map(&[(&[2, 1], 1)]));
        assert!(r.complementary.is_empty());
    }

    #[test]
    fn steinberg_b2() {
        let md = md("B2", 2);
        assert!(steinberg_character_identity(&md, &Weight::from([1, 0])).unwrap().holds);
        assert!(steinberg_character_identity(&md, &Weight::from([0, 0])).unwrap().holds);
        let c3 = self::md("C3", 2);
        assert!(steinberg_character_identity(&c3, &Weight::from([2, 0, 0])).unwrap().holds);
    }

    #[test]
    fn product_formula_small() {
        let md = md("B2", 2);
        let p = rho_shift_product_formula(&md).unwrap();
        assert_eq!(p.len(), 4);
        let a3 = self::md("A3", 1);
        let p = rho_shift_product_formula(&a3).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.get(&a3.base().zero()), BigInt::from(1));
    }

    #[test]
    fn closed_form_unavailable_for_g2() {
        // ρ^L−ρ = 2ϖ1 in G2 at ℓ=3 is not minuscule
        let md = md("G2", 3);
        assert!(matches!(
            minuscule_branching_closed_form(&md, &Weight::from([0, 0])),
            Err(Error::ClosedFormUnavailable(_))
        ));
    }

    #[test]
    fn sweep_b2() {
        let lang = Langlands::<BigInt>::new(md("B2", 2));
        let ws = lang.sweep_weights(2);
        assert_eq!(ws.len(), 6);
        assert!(ws.iter().all(|w| w[1] % 2 == 0));
        let report = verify_branching_theorem(lang.modified(), 4, 2).unwrap();
        assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
        assert_eq!(report.checked, 15);
    }
}
