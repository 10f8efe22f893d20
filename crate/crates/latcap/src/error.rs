use thiserror::Error;

/// Errors reported by lattice construction and the capacity operators.
///
/// Every variant carries a stable short code (see [`Error::code`]) so that
/// front ends can report machine-readable failure names.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotAPoset: antisymmetry fails, `{0}` and `{1}` lie on a cycle")]
    NotAPoset(String, String),
    #[error("NotALattice: {source_kind} of pair ({0}, {1}) is missing or not unique", source_kind = .2)]
    NotALattice(String, String, &'static str),
    #[error("EmptyLattice: a lattice needs at least one element")]
    EmptyLattice,
    #[error("DuplicateElement: `{0}` appears more than once")]
    DuplicateElement(String),
    #[error("UnknownElement: `{0}` is not an element of the lattice")]
    UnknownElement(String),
    #[error("CapExceeded: size {got} exceeds the configured cap {cap}")]
    CapExceeded { got: usize, cap: usize },
    #[error("NotComparable: `{0}` is not below `{1}`")]
    NotComparable(String, String),
    #[error("NotDominating: `{0}` in the interval has no upper bound in the cross-cut set")]
    NotDominating(String),
    #[error("InvalidCrosscutSet: `{0}` lies outside the half-open interval")]
    InvalidCrosscutSet(String),
    #[error("EmptyGenerator: an up-set needs a nonempty generating set")]
    EmptyGenerator,
    #[error("NotADownSet: the given subset is not closed downward")]
    NotADownSet,
    #[error("Unreducible: the evaluation point lies below a member of the set")]
    Unreducible,
    #[error("NotMonotone: the function decreases along a cover")]
    NotMonotone,
    #[error("NegativeValue: the function takes a negative value")]
    NegativeValue,
    #[error("NotACapacity: expected a monotone function with value 0 at bottom and 1 at top")]
    NotACapacity,
    #[error("NotCompletelyMonotone: the Möbius inverse takes a negative value at `{0}`")]
    NotCompletelyMonotone(String),
    #[error("NotCompletelyAlternating: a dual successive difference is positive")]
    NotCompletelyAlternating,
    #[error("NotACdf: expected a completely monotone capacity")]
    NotACdf,
    #[error("NotATree: {0}")]
    NotATree(&'static str),
    #[error("RootNotInTree: the requested root is not a vertex of the tree")]
    RootNotInTree,
    #[error("NotMonotonePath: a later element of the sequence lies below an earlier one")]
    NotMonotonePath,
    #[error("MarginalMismatch: the extension does not project to the given function")]
    MarginalMismatch,
    #[error("Infeasible: the constraint system has no solution")]
    Infeasible,
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(&'static str),
    #[error("BadRational: `{0}` is not a valid rational literal")]
    BadRational(String),
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotAPoset(..) => "NotAPoset",
            Error::NotALattice(..) => "NotALattice",
            Error::EmptyLattice => "EmptyLattice",
            Error::DuplicateElement(..) => "DuplicateElement",
            Error::UnknownElement(..) => "UnknownElement",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::NotComparable(..) => "NotComparable",
            Error::NotDominating(..) => "NotDominating",
            Error::InvalidCrosscutSet(..) => "InvalidCrosscutSet",
            Error::EmptyGenerator => "EmptyGenerator",
            Error::NotADownSet => "NotADownSet",
            Error::Unreducible => "Unreducible",
            Error::NotMonotone => "NotMonotone",
            Error::NegativeValue => "NegativeValue",
            Error::NotACapacity => "NotACapacity",
            Error::NotCompletelyMonotone(..) => "NotCompletelyMonotone",
            Error::NotCompletelyAlternating => "NotCompletelyAlternating",
            Error::NotACdf => "NotACdf",
            Error::NotATree(..) => "NotATree",
            Error::RootNotInTree => "RootNotInTree",
            Error::NotMonotonePath => "NotMonotonePath",
            Error::MarginalMismatch => "MarginalMismatch",
            Error::Infeasible => "Infeasible",
            Error::DimensionMismatch(..) => "DimensionMismatch",
            Error::BadRational(..) => "BadRational",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
