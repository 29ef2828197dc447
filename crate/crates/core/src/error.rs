use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order exceeds the configured cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("invalid permutation input: {0}")]
    InvalidPermutation(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not stable under the outer action")]
    NotStable,
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
    #[error("not a homomorphism: {0}")]
    InvalidHom(String),
    #[error("invalid outer action: {0}")]
    InvalidAction(String),
    #[error("invalid group extension: {0}")]
    InvalidExtension(String),
    #[error("cocycle law violated: {0}")]
    InvalidCocycle(String),
    #[error("search budget of {limit} nodes exhausted")]
    BudgetExceeded { limit: u64 },
    #[error("kernel has nontrivial centre")]
    NontrivialCentre,
    #[error("complement is not a section: {0}")]
    InvalidComplement(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("module has torsion")]
    Torsion,
    #[error("maps are not composable: {0}")]
    NonComposable(String),
    #[error("exactness check failed: {0}")]
    ExactnessViolated(String),
    #[error("polynomial is not irreducible over Q: {0}")]
    Reducible(String),
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("unsupported symmetric function: {0}")]
    UnsupportedTheta(String),
    #[error("zero is not allowed here")]
    ZeroArgument,
    #[error("{0} is not a prime")]
    NotPrime(String),
    #[error("search bound exhausted: {0}")]
    BoundExhausted(String),
    #[error("no cyclic cubic field can work: α is not totally positive (alpha = {alpha})")]
    NotTotallyPositive { alpha: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code used in JSON error documents.
    pub fn code(&self) -> &'static str {
        match self {
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::InvalidTable(_) => "invalid_table",
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::NotNormal => "not_normal",
            Error::NotStable => "not_stable",
            Error::InvalidSubgroup(_) => "invalid_subgroup",
            Error::InvalidHom(_) => "invalid_hom",
            Error::InvalidAction(_) => "invalid_action",
            Error::InvalidExtension(_) => "invalid_extension",
            Error::InvalidCocycle(_) => "invalid_cocycle",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::NontrivialCentre => "nontrivial_centre",
            Error::InvalidComplement(_) => "invalid_complement",
            Error::InvalidModule(_) => "invalid_module",
            Error::Torsion => "torsion",
            Error::NonComposable(_) => "non_composable",
            Error::ExactnessViolated(_) => "exactness_violated",
            Error::Reducible(_) => "reducible",
            Error::InvalidPolynomial(_) => "invalid_polynomial",
            Error::UnsupportedTheta(_) => "unsupported_theta",
            Error::ZeroArgument => "zero_argument",
            Error::NotPrime(_) => "not_prime",
            Error::BoundExhausted(_) => "bound_exhausted",
            Error::NotTotallyPositive { .. } => "not_totally_positive",
            Error::Unsupported(_) => "unsupported",
            Error::Parse(_) => "parse",
        }
    }

    /// True for errors caused by a search running out of budget or bounds.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::CapExceeded { .. } | Error::BoundExhausted(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
