use thiserror::Error;

use crate::group::Elem;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // construction and input
    #[error("unsupported group kind `{0}`")]
    UnsupportedKind(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCapExceeded { order: u128, cap: usize },
    #[error("malformed Cayley table: {0}")]
    MalformedTable(String),
    #[error("operation is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: Elem, b: Elem, c: Elem },
    #[error("table has no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(Elem),
    #[error("element index {index} out of range for a group of order {order}")]
    InvalidElement { index: usize, order: usize },
    #[error("subgroup belongs to a different group")]
    ForeignSubgroup,
    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal: {conjugator}^-1 * {element} * {conjugator} = {image} escapes it")]
    NotNormal {
        conjugator: Elem,
        element: Elem,
        image: Elem,
    },
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("invalid facet list: {0}")]
    FacetFormat(String),

    // group-theoretic preconditions
    #[error("group is not solvable")]
    NotSolvable,
    #[error("group is not supersolvable")]
    NotSupersolvable,
    #[error("subgroup with {0} elements is not a p-group for the requested prime")]
    ContainmentImpossible(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the two subgroups are equal")]
    EqualSubgroups,
    #[error("the first subgroup is not contained in the second")]
    NotContained,
    #[error("the trivial group has an empty coset poset")]
    TrivialGroup,
    #[error("normal subgroup must be nontrivial")]
    TrivialN,
    #[error("normal subgroup must be proper")]
    ImproperN,

    // posets and complexes
    #[error("elements {0} and {1} are not comparable")]
    NotComparable(usize, usize),
    #[error("order complex requires an unbounded poset; take the proper part first")]
    BoundedPoset,
    #[error("requested dimension {requested} exceeds complex dimension {dim}")]
    DimensionTooLarge { requested: usize, dim: isize },
    #[error("complex is empty")]
    EmptyComplex,
    #[error("complex is not pure")]
    NotPure,
    #[error("complex has {faces} faces, above the cap of {cap}")]
    ComplexTooLarge { faces: usize, cap: usize },
    #[error("arithmetic overflow during exact elimination")]
    Overflow,

    // linear algebra
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("matrix shape or entries invalid: {0}")]
    BadMatrix(String),
    #[error("first subspace is not contained in the second")]
    NotNested,
    #[error("subspaces are equal")]
    EqualSpaces,

    // labeling and verification
    #[error("factor {factor} has order {order}, divisible by {prime}^2")]
    NonSquareFreeFactor {
        factor: usize,
        order: usize,
        prime: usize,
    },
    #[error("level convention is not injective: {0}")]
    InvalidLevels(String),
    #[error("pair ({0}, {1}) is not a cover relation")]
    NotACover(usize, usize),
    #[error("cover has non-prime index {0}")]
    NonPrimeIndex(usize),
    #[error("pivot sets do not differ by exactly one column across a cover")]
    PivotStep,
    #[error("cover ({0}, {1}) carries no label")]
    UnlabeledCover(usize, usize),
    #[error("labeling has not passed coEL verification")]
    ELNotVerified,
    #[error("facet order is not a permutation of the complex's facets")]
    NotAPermutation,
}

/// Coarse classes used for CLI exit codes and machine-readable report codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Refused,
    Verification,
    Input,
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::UnsupportedKind(_) => "unsupported_kind",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::OrderCapExceeded { .. } => "order_cap_exceeded",
            Error::MalformedTable(_) => "malformed_table",
            Error::NotAssociative { .. } => "not_associative",
            Error::NoIdentity => "no_identity",
            Error::NoInverse(_) => "no_inverse",
            Error::InvalidElement { .. } => "invalid_element",
            Error::ForeignSubgroup => "foreign_subgroup",
            Error::NotASubgroup(_) => "not_a_subgroup",
            Error::NotNormal { .. } => "not_normal",
            Error::Syntax { .. } => "syntax_error",
            Error::FacetFormat(_) => "facet_format",
            Error::NotSolvable => "not_solvable",
            Error::NotSupersolvable => "not_supersolvable",
            Error::ContainmentImpossible(_) => "containment_impossible",
            Error::NotPrime(_) => "not_prime",
            Error::EqualSubgroups => "equal_subgroups",
            Error::NotContained => "not_contained",
            Error::TrivialGroup => "trivial_group",
            Error::TrivialN => "trivial_n",
            Error::ImproperN => "improper_n",
            Error::NotComparable(..) => "not_comparable",
            Error::BoundedPoset => "bounded_poset",
            Error::DimensionTooLarge { .. } => "dimension_too_large",
            Error::EmptyComplex => "empty_complex",
            Error::NotPure => "not_pure",
            Error::ComplexTooLarge { .. } => "complex_too_large",
            Error::Overflow => "overflow",
            Error::NonPrimeModulus(_) => "non_prime_modulus",
            Error::BadMatrix(_) => "bad_matrix",
            Error::NotNested => "not_nested",
            Error::EqualSpaces => "equal_spaces",
            Error::NonSquareFreeFactor { .. } => "non_square_free_factor",
            Error::InvalidLevels(_) => "invalid_levels",
            Error::NotACover(..) => "not_a_cover",
            Error::NonPrimeIndex(_) => "non_prime_index",
            Error::PivotStep => "pivot_step",
            Error::UnlabeledCover(..) => "unlabeled_cover",
            Error::ELNotVerified => "el_not_verified",
            Error::NotAPermutation => "not_a_permutation",
        }
    }

    pub fn class(&self) -> ErrorClass {
        match self {
            Error::NotSolvable
            | Error::NotSupersolvable
            | Error::TrivialGroup
            | Error::NonSquareFreeFactor { .. }
            | Error::NotPure
            | Error::ComplexTooLarge { .. }
            | Error::ELNotVerified => ErrorClass::Refused,
            Error::NonPrimeIndex(_)
            | Error::PivotStep
            | Error::UnlabeledCover(..)
            | Error::Overflow => ErrorClass::Verification,
            _ => ErrorClass::Input,
        }
    }
}
