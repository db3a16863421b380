use crate::weight::Weight;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no finite type {family}{rank}")]
    InvalidType { family: String, rank: usize },
    #[error("cannot parse Cartan type {0:?}; expected e.g. B2, G2, E8")]
    ParseType(String),
    #[error("Cartan matrix must be square and nonempty")]
    NotSquare,
    #[error("expected {expected} entries, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("diagonal entry a[{i}][{i}] is {value}, expected 2")]
    DiagonalNotTwo { i: usize, value: i64 },
    #[error("off-diagonal entry a[{i}][{j}] = {value} is positive")]
    PositiveOffDiagonal { i: usize, j: usize, value: i64 },
    #[error("a[{i}][{j}] and a[{j}][{i}] must vanish together")]
    ZeroPattern { i: usize, j: usize },
    #[error("symmetrizers must be positive")]
    NonPositiveSymmetrizer,
    #[error("d[{i}]*a[{i}][{j}] != d[{j}]*a[{j}][{i}]")]
    Symmetrization { i: usize, j: usize },
    #[error("Cartan matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("Cartan matrix is not of finite type (leading minor {minor} is not positive)")]
    NotFiniteType { minor: usize },
    #[error("ell = {ell} is not a multiple of d = {d}; the dual datum is the transpose only when d divides ell")]
    EllNotMultiple { ell: i64, d: i64 },
    #[error("ell must be positive, got {0}")]
    NonPositiveEll(i64),
    #[error("weight {weight} is not in the sublattice X*: {}", fmt_violations(.violations))]
    NotInSublattice { weight: Weight, violations: Vec<(usize, i64, i64)> },
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("node index {index} out of range for rank {rank}")]
    BadNode { index: usize, rank: usize },
    #[error("weight function is not W-invariant at {0}")]
    NotInvariant(Weight),
    #[error("weight functions belong to different root data")]
    DatumMismatch,
    #[error("closed form unavailable: {0}")]
    ClosedFormUnavailable(String),
    #[error("branching theorem violated: {0}")]
    TheoremViolation(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

fn fmt_violations(v: &[(usize, i64, i64)]) -> String {
    v.iter()
        .map(|(i, c, l)| format!("coordinate {} is {c}, not divisible by l_{} = {l}", i + 1, i + 1))
        .collect::<Vec<_>>()
        .join("; ")
}

impl Error {
    /// Errors that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::TheoremViolation(_) | Error::Internal(_))
    }
}
