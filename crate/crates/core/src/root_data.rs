//! Cartan data, root data of finite type, and the ℓ-modified (Langlands dual)
//! root datum.
//!
//! Conventions: `a_ij = ⟨α̌_i, α_j⟩`, the simple root `α_j` is the `j`-th
//! column of the Cartan matrix in fundamental-weight coordinates, and the
//! symmetrizers satisfy `d_i a_ij = d_j a_ji`, with `d_i` half the squared
//! length of `α_i`. Built-in types use Bourbaki numbering (`B_n`: `α_n` short;
//! `C_n`: `α_n` long; `F_4`: `α_1, α_2` long; `G_2`: `α_1` short).

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::Weight;
use crate::weyl;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    /// Family of the transposed Cartan matrix.
    pub fn dual(self) -> Family {
        match self {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        }
    }
}

/// A finite type such as `B2` or `E8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidType { family: family.letter().to_string(), rank })
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let family = chars.next().and_then(Family::from_letter).ok_or_else(|| Error::ParseType(s.to_string()))?;
        let rank = chars.as_str().parse::<usize>().map_err(|_| Error::ParseType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

/// How the nodes of a datum are numbered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Labeling {
    /// Bourbaki numbering of a built-in type.
    Bourbaki,
    /// Transpose of a Bourbaki-numbered matrix that is not itself a Bourbaki
    /// matrix (the duals of `F4` and `G2`).
    Transposed,
    /// Supplied by the user.
    User,
}

/// A generalized Cartan matrix of finite type with an integral
/// symmetrization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    cartan_type: Option<CartanType>,
    labeling: Labeling,
    matrix: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    d: i64,
}

impl CartanDatum {
    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    /// Least common multiple of the symmetrizers.
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn cartan_type(&self) -> Option<CartanType> {
        self.cartan_type
    }

    pub fn labeling(&self) -> Labeling {
        self.labeling
    }

    /// The symmetric pairing `i·j = d_i a_ij`.
    pub fn dot(&self, i: usize, j: usize) -> i64 {
        self.symmetrizers[i] * self.matrix[i][j]
    }

    pub fn name(&self) -> String {
        match self.cartan_type {
            Some(t) if self.labeling == Labeling::Transposed => format!("{t}^t"),
            Some(t) => t.to_string(),
            None => format!("custom rank {}", self.rank()),
        }
    }

    pub fn transposed_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| self.matrix[j][i]).collect()).collect()
    }

    pub(crate) fn with_identity(mut self, cartan_type: Option<CartanType>, labeling: Labeling) -> Self {
        self.cartan_type = cartan_type;
        self.labeling = labeling;
        self
    }
}

/// The standard Cartan matrix of a finite type, with minimal symmetrizers.
pub fn cartan_matrix(family: Family, rank: usize) -> Result<CartanDatum> {
    let t = CartanType::new(family, rank)?;
    let n = rank;
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        m[i - 1][j - 1] = aij;
        m[j - 1][i - 1] = aji;
    };
    match family {
        Family::A => (1..n).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 1, n, -1, -2);
        }
        Family::C => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 1, n, -2, -1);
        }
        Family::D => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n, -1, -1);
        }
        Family::E => {
            link(1, 3, -1, -1);
            link(2, 4, -1, -1);
            (3..n).for_each(|i| link(i, i + 1, -1, -1));
        }
        Family::F => {
            link(1, 2, -1, -1);
            link(2, 3, -1, -2);
            link(3, 4, -1, -1);
        }
        Family::G => link(1, 2, -3, -1),
    }
    let sym = minimal_symmetrizer(&m)?;
    Ok(validate_cartan(m, sym)?.with_identity(Some(t), Labeling::Bourbaki))
}

/// Checks a user-supplied Cartan matrix and symmetrizing vector.
///
/// Any positive multiple of the minimal symmetrizer is accepted.
pub fn validate_cartan(matrix: Vec<Vec<i64>>, symmetrizers: Vec<i64>) -> Result<CartanDatum> {
    let n = matrix.len();
    if n == 0 || matrix.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare);
    }
    if symmetrizers.len() != n {
        return Err(Error::RankMismatch { expected: n, found: symmetrizers.len() });
    }
    if symmetrizers.iter().any(|&d| d <= 0) {
        return Err(Error::NonPositiveSymmetrizer);
    }
    for i in 0..n {
        if matrix[i][i] != 2 {
            return Err(Error::DiagonalNotTwo { i, value: matrix[i][i] });
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if matrix[i][j] > 0 {
                return Err(Error::PositiveOffDiagonal { i, j, value: matrix[i][j] });
            }
            if (matrix[i][j] == 0) != (matrix[j][i] == 0) {
                return Err(Error::ZeroPattern { i, j });
            }
            if symmetrizers[i] * matrix[i][j] != symmetrizers[j] * matrix[j][i] {
                return Err(Error::Symmetrization { i, j });
            }
        }
    }
    // positive definite iff every leading principal minor of (d_i a_ij) is positive
    let sym: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| symmetrizers[i] * matrix[i][j]).collect()).collect();
    for k in 1..=n {
        if determinant(&sym, k) <= 0 {
            return Err(Error::NotFiniteType { minor: k });
        }
    }
    let d = symmetrizers.iter().fold(1i64, |acc, &x| acc.lcm(&x));
    Ok(CartanDatum { cartan_type: None, labeling: Labeling::User, matrix, symmetrizers, d })
}

/// The minimal positive integral vector `(d_i)` with `d_i a_ij = d_j a_ji`,
/// normalized to have gcd 1 on each connected component.
pub fn minimal_symmetrizer(matrix: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = matrix.len();
    if n == 0 || matrix.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare);
    }
    let mut value: Vec<Option<Ratio<i64>>> = vec![None; n];
    let mut out = vec![0i64; n];
    for start in 0..n {
        if value[start].is_some() {
            continue;
        }
        value[start] = Some(Ratio::from_integer(1));
        let mut component = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = value[i].unwrap();
            for j in 0..n {
                if j == i || matrix[i][j] == 0 {
                    continue;
                }
                if matrix[j][i] == 0 {
                    return Err(Error::ZeroPattern { i, j });
                }
                // d_j = d_i a_ij / a_ji
                let dj = di * Ratio::new(matrix[i][j], matrix[j][i]);
                match value[j] {
                    Some(v) if v != dj => return Err(Error::NotSymmetrizable),
                    Some(_) => {}
                    None => {
                        value[j] = Some(dj);
                        component.push(j);
                        stack.push(j);
                    }
                }
            }
        }
        let den = component.iter().fold(1i64, |acc, &k| acc.lcm(value[k].unwrap().denom()));
        let ints: Vec<i64> = component.iter().map(|&k| (value[k].unwrap() * den).to_integer()).collect();
        let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        for (&k, &v) in component.iter().zip(&ints) {
            if v <= 0 {
                return Err(Error::NotSymmetrizable);
            }
            out[k] = v / g;
        }
    }
    Ok(out)
}

/// Determinant of the leading `k × k` block (fraction-free elimination).
fn determinant(m: &[Vec<i64>], k: usize) -> i128 {
    let mut a: Vec<Vec<i128>> = (0..k).map(|i| (0..k).map(|j| m[i][j] as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for p in 0..k {
        if a[p][p] == 0 {
            match (p + 1..k).find(|&r| a[r][p] != 0) {
                Some(r) => {
                    a.swap(p, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
            }
        }
        prev = a[p][p];
    }
    sign * a[k - 1][k - 1]
}

/// Exact inverse of a nonsingular integer matrix.
fn inverse(m: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i64>> = row.iter().map(|&x| Ratio::from_integer(x)).collect();
            r.extend((0..n).map(|j| Ratio::from_integer(i64::from(i == j))));
            r
        })
        .collect();
    for p in 0..n {
        let pivot = (p..n).find(|&r| a[r][p] != Ratio::from_integer(0)).expect("singular matrix");
        a.swap(p, pivot);
        let inv = Ratio::from_integer(1) / a[p][p];
        for x in a[p].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != p && a[r][p] != Ratio::from_integer(0) {
                let f = a[r][p];
                let prow = a[p].clone();
                for (x, y) in a[r].iter_mut().zip(prow) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// A positive root, as a weight and as coordinates over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PositiveRoot {
    pub weight: Weight,
    pub coords: Vec<i64>,
}

impl PositiveRoot {
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }
}

/// Simply connected root datum: `X = ℤ^n` in fundamental-weight coordinates.
#[derive(Debug)]
pub struct RootDatum {
    cartan: CartanDatum,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<PositiveRoot>,
    det: i64,
    adjugate: Vec<Vec<i64>>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.cartan.matrix == other.cartan.matrix
    }
}

impl Eq for RootDatum {}

impl RootDatum {
    pub fn new(cartan: CartanDatum) -> Arc<RootDatum> {
        let n = cartan.rank();
        let simple_roots = (0..n).map(|j| Weight::new((0..n).map(|i| cartan.entry(i, j)))).collect();
        let positive_roots = positive_roots(&cartan);
        let det = determinant(&cartan.matrix, n) as i64;
        let inv = inverse(&cartan.matrix);
        let adjugate = inv.iter().map(|r| r.iter().map(|x| (x * det).to_integer()).collect()).collect();
        Arc::new(RootDatum { cartan, simple_roots, positive_roots, det, adjugate })
    }

    /// Built-in type from a name like `"B2"`.
    pub fn of_type(name: &str) -> Result<Arc<RootDatum>> {
        let t: CartanType = name.parse()?;
        Ok(RootDatum::new(cartan_matrix(t.family, t.rank)?))
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn name(&self) -> String {
        self.cartan.name()
    }

    pub fn simple_root(&self, j: usize) -> &Weight {
        &self.simple_roots[j]
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    /// Ordered by height, then lexicographically by root coordinates.
    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    pub fn rho(&self) -> Weight {
        Weight::new(std::iter::repeat_n(1, self.rank()))
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank())
    }

    /// `det(C)`.
    pub fn cartan_det(&self) -> i64 {
        self.det
    }

    /// `det(C) · C^{-1}`, an integer matrix.
    pub fn adjugate(&self) -> &[Vec<i64>] {
        &self.adjugate
    }

    /// Coordinates of `w` over the simple roots, when `w` lies in the root
    /// lattice.
    pub fn root_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        let scaled = self.scaled_root_coords(w);
        if scaled.iter().all(|c| c % self.det == 0) {
            Some(scaled.into_iter().map(|c| c / self.det).collect())
        } else {
            None
        }
    }

    fn scaled_root_coords(&self, w: &Weight) -> Vec<i64> {
        self.adjugate.iter().map(|row| row.iter().zip(w.iter()).map(|(a, b)| a * b).sum()).collect()
    }

    /// `det(C)` times the height of `w`; strictly increasing along every
    /// positive root, and integral on the whole weight lattice.
    pub fn scaled_height(&self, w: &Weight) -> i64 {
        self.scaled_root_coords(w).iter().sum()
    }

    /// Whether `top − w` is a nonnegative combination of simple roots.
    pub fn is_below(&self, w: &Weight, top: &Weight) -> bool {
        self.root_coords(&(top - w)).is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// The invariant form `(x, β)` for a weight `x` and an element `β` of the
    /// root lattice given by its simple-root coordinates; uses
    /// `(ϖ_i, α_j) = d_i δ_ij`.
    #[inline]
    pub fn pair_with_root(&self, x: &[i64], root_coords: &[i64]) -> i64 {
        let d = &self.cartan.symmetrizers;
        root_coords.iter().zip(x).zip(d).map(|((c, xi), di)| c * di * xi).sum()
    }

    /// `s_i` applied in place: `λ ↦ λ − ⟨α̌_i, λ⟩ α_i`.
    #[inline]
    pub(crate) fn reflect_in_place(&self, i: usize, w: &mut Weight) {
        let c = w[i];
        if c != 0 {
            for (k, x) in w.coords_mut().iter_mut().enumerate() {
                *x -= c * self.cartan.matrix[k][i];
            }
        }
    }

    fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            Err(Error::RankMismatch { expected: self.rank(), found: w.rank() })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_weight(w)?;
        if w.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(w.clone()))
        }
    }
}

/// Positive roots of a finite-type datum via simple-root strings, ordered by
/// height and then lexicographically.
pub fn positive_roots(cartan: &CartanDatum) -> Vec<PositiveRoot> {
    let n = cartan.rank();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut all: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut ordered = Vec::new();
    while !layer.is_empty() {
        layer.sort();
        all.extend(layer.iter().cloned());
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // α_i-string through β is β − pα_i, ..., β + qα_i
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if probe[i] < 0 || !all.contains(&probe) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..n).map(|j| cartan.entry(i, j) * beta[j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        ordered.append(&mut layer);
        layer = next;
    }
    ordered
        .into_iter()
        .map(|coords| {
            let weight = Weight::new((0..n).map(|i| (0..n).map(|j| cartan.entry(i, j) * coords[j]).sum()));
            PositiveRoot { weight, coords }
        })
        .collect()
}

/// One row of the root-scaling bijection `α ↦ α* = l_α α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootScaling {
    pub root: PositiveRoot,
    /// `α*` in dual fundamental coordinates, with its dual simple-root
    /// expansion.
    pub dual_root: PositiveRoot,
    pub scale: i64,
}

/// The ℓ-modified root datum: sublattice `X* = {λ : l_i | λ_i}` with simple
/// roots `l_i α_i`, which for `d | ℓ` is attached to the transposed Cartan
/// matrix.
#[derive(Clone, Debug)]
pub struct ModifiedDatum {
    base: Arc<RootDatum>,
    ell: i64,
    l: Vec<i64>,
    dual: Arc<RootDatum>,
}

/// Builds the ℓ-modified datum. Requires `d | ℓ`.
pub fn modified_datum(base: &Arc<RootDatum>, ell: i64) -> Result<ModifiedDatum> {
    ModifiedDatum::new(base.clone(), ell)
}

impl ModifiedDatum {
    pub fn new(base: Arc<RootDatum>, ell: i64) -> Result<ModifiedDatum> {
        if ell <= 0 {
            return Err(Error::NonPositiveEll(ell));
        }
        let cartan = base.cartan();
        if ell % cartan.d() != 0 {
            return Err(Error::EllNotMultiple { ell, d: cartan.d() });
        }
        // smallest positive l_i with l_i d_i ∈ ℓℤ
        let l: Vec<i64> = cartan.symmetrizers().iter().map(|&di| ell / ell.gcd(&di)).collect();
        let n = cartan.rank();
        let mut dual_matrix = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let num = l[j] * cartan.entry(i, j);
                if num % l[i] != 0 {
                    return Err(Error::Internal(format!("modified Cartan entry ({i},{j}) is not integral")));
                }
                dual_matrix[i][j] = num / l[i];
            }
        }
        if dual_matrix != cartan.transposed_matrix() {
            return Err(Error::Internal("modified Cartan matrix is not the transpose".into()));
        }
        let sym = minimal_symmetrizer(&dual_matrix)?;
        let (dual_type, dual_labeling) = match (cartan.cartan_type(), cartan.labeling()) {
            (Some(t), Labeling::User) => (Some(t), Labeling::User),
            (None, lab) => (None, lab),
            (Some(t), lab) => match t.family {
                Family::A | Family::D | Family::E => (Some(t), lab),
                Family::B | Family::C => (Some(CartanType { family: t.family.dual(), rank: t.rank }), lab),
                Family::F | Family::G => {
                    (Some(t), if lab == Labeling::Bourbaki { Labeling::Transposed } else { Labeling::Bourbaki })
                }
            },
        };
        let dual_cartan = validate_cartan(dual_matrix, sym)?.with_identity(dual_type, dual_labeling);
        Ok(ModifiedDatum { base, ell, l, dual: RootDatum::new(dual_cartan) })
    }

    pub fn base(&self) -> &Arc<RootDatum> {
        &self.base
    }

    pub fn dual(&self) -> &Arc<RootDatum> {
        &self.dual
    }

    pub fn ell(&self) -> i64 {
        self.ell
    }

    /// The scaling factors `l_i`.
    pub fn l(&self) -> &[i64] {
        &self.l
    }

    /// `(i, λ_i, l_i)` for every coordinate not divisible by `l_i`.
    pub fn sublattice_violations(&self, w: &Weight) -> Vec<(usize, i64, i64)> {
        w.iter().zip(&self.l).enumerate().filter(|(_, (c, l))| *c % *l != 0).map(|(i, (c, l))| (i, *c, *l)).collect()
    }

    pub fn in_sublattice(&self, w: &Weight) -> bool {
        w.rank() == self.l.len() && w.iter().zip(&self.l).all(|(c, l)| c % l == 0)
    }

    /// Coordinates of `λ ∈ X*` with respect to the dual fundamental weights.
    pub fn dual_coords(&self, w: &Weight) -> Result<Weight> {
        if w.rank() != self.l.len() {
            return Err(Error::RankMismatch { expected: self.l.len(), found: w.rank() });
        }
        let violations = self.sublattice_violations(w);
        if !violations.is_empty() {
            return Err(Error::NotInSublattice { weight: w.clone(), violations });
        }
        Ok(Weight::new(w.iter().zip(&self.l).map(|(c, l)| c / l)))
    }

    /// Inverse of [`dual_coords`](Self::dual_coords).
    pub fn embed(&self, dual_weight: &Weight) -> Weight {
        Weight::new(dual_weight.iter().zip(&self.l).map(|(c, l)| c * l))
    }

    /// `ρ^L − ρ` in base coordinates.
    pub fn rho_shift(&self) -> Weight {
        Weight::new(self.l.iter().map(|l| l - 1))
    }

    /// Matches every positive root `α` with the dual positive root `l_α α`
    /// and checks that `l_α = l_i` for `α ∈ W·α_i`, that the matching is a
    /// bijection, and that the dual simple-root expansion is consistent.
    pub fn root_scaling_map(&self) -> Result<Vec<RootScaling>> {
        let base_roots = self.base.positive_roots();
        let dual_roots = self.dual.positive_roots();
        if base_roots.len() != dual_roots.len() {
            return Err(Error::Internal(format!(
                "{} positive roots but {} dual positive roots",
                base_roots.len(),
                dual_roots.len()
            )));
        }
        // l_α from the W-orbits of the simple roots
        let mut orbit_scale = std::collections::HashMap::new();
        for (i, a) in self.base.simple_roots().iter().enumerate() {
            for w in weyl::orbit(&self.base, a) {
                if let Some(&prev) = orbit_scale.get(&w) {
                    if prev != self.l[i] {
                        return Err(Error::Internal(format!("root {w} has two scales")));
                    }
                }
                orbit_scale.insert(w, self.l[i]);
            }
        }
        let embedded: Vec<Weight> = dual_roots.iter().map(|r| self.embed(&r.weight)).collect();
        let mut used = vec![false; dual_roots.len()];
        let mut out = Vec::with_capacity(base_roots.len());
        for root in base_roots {
            let scale = *orbit_scale
                .get(&root.weight)
                .ok_or_else(|| Error::Internal(format!("root {} not in any simple orbit", root.weight)))?;
            let target = root.weight.scale(scale);
            let k = embedded
                .iter()
                .position(|e| *e == target)
                .ok_or_else(|| Error::Internal(format!("no dual root equals {scale}·{}", root.weight)))?;
            if used[k] {
                return Err(Error::Internal(format!("dual root {} matched twice", dual_roots[k].weight)));
            }
            used[k] = true;
            let dual_root = dual_roots[k].clone();
            for (j, (&c, &cd)) in root.coords.iter().zip(&dual_root.coords).enumerate() {
                if c * scale != cd * self.l[j] {
                    return Err(Error::Internal(format!(
                        "dual expansion of {} disagrees at node {}",
                        root.weight,
                        j + 1
                    )));
                }
            }
            out.push(RootScaling { root: root.clone(), dual_root, scale });
        }
        Ok(out)
    }
}
