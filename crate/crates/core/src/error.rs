use thiserror::Error;

use crate::rootsys::Series;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for series {series}")]
    InvalidRank { series: Series, rank: usize },
    #[error("G2 factors are disabled; pass allow_g2 to construct them")]
    G2Disallowed,
    #[error("cannot parse type descriptor {0:?}")]
    BadDescriptor(String),
    #[error("{0:?} is not a root of this system")]
    NotARoot(Vec<i32>),
    #[error("simple index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("element is not in the Bruhat interval below w")]
    NotInInterval,
    #[error("rational smoothness criteria disagree: {0}")]
    CriteriaDisagree(String),
    #[error("string run of length {run} is shorter than the S-weight class of size {class}")]
    RunTooShort { class: usize, run: usize },
    #[error("roots on the string with negative image do not form a consecutive run")]
    NonConsecutiveRun,
    #[error("leading weight of the string run is not unique ({0} candidates)")]
    AmbiguousLeadingWeight(usize),
    #[error("class member is not on the string through the class")]
    ClassNotOnString,
    #[error("translate requests target different fixed points")]
    MismatchedBase,
    #[error("the two fixed points are not joined by a T-curve going up")]
    NotAnUpwardCurve,
    #[error("curve root is short; the V_C construction needs a long root")]
    CurveNotLong,
    #[error("smoothness of the upper curve endpoint has not been established")]
    NotSmoothUpperPoint,
    #[error("element is not a minimal coset representative for the parabolic subset")]
    NotMinimalRepresentative,
    #[error("x W_J is not below w W_J in the quotient order")]
    QuotientOrder,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("operation needs a single type A factor")]
    NotTypeA,
    #[error("group order {size} exceeds the budget {budget}")]
    BudgetExceeded { size: usize, budget: usize },
    #[error("elements belong to different root systems")]
    ForeignElement,
    #[error("tangent weights at this point are not pinned down by the available bounds")]
    TangentSpaceUndetermined,
}

impl Error {
    /// Variant name, used by the CLI on standard error.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidRank { .. } => "InvalidRank",
            Error::G2Disallowed => "G2Disallowed",
            Error::BadDescriptor(_) => "BadDescriptor",
            Error::NotARoot(_) => "NotARoot",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotInInterval => "NotInInterval",
            Error::CriteriaDisagree(_) => "CriteriaDisagree",
            Error::RunTooShort { .. } => "RunTooShort",
            Error::NonConsecutiveRun => "NonConsecutiveRun",
            Error::AmbiguousLeadingWeight(_) => "AmbiguousLeadingWeight",
            Error::ClassNotOnString => "ClassNotOnString",
            Error::MismatchedBase => "MismatchedBase",
            Error::NotAnUpwardCurve => "NotAnUpwardCurve",
            Error::CurveNotLong => "CurveNotLong",
            Error::NotSmoothUpperPoint => "NotSmoothUpperPoint",
            Error::NotMinimalRepresentative => "NotMinimalRepresentative",
            Error::QuotientOrder => "QuotientOrder",
            Error::InternalInconsistency(_) => "InternalInconsistency",
            Error::NotTypeA => "NotTypeA",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::ForeignElement => "ForeignElement",
            Error::TangentSpaceUndetermined => "TangentSpaceUndetermined",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
