use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Every failure the library can report.
///
/// Internal-consistency violations (a theorem's conclusion failing on a
/// concrete instance) are panics, not variants of this enum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NonPrimeCharacteristic(u64),
    DegreeZero,
    NotPrimePower(u64),
    ZeroElement,
    ZeroInput,
    NotCoprime { modulus: u64, base: u64 },
    FieldTooLarge,
    FieldMismatch,
    BothZero,
    NotInvertible,
    ZeroConstantTerm,
    NotDividingXNMinus1,
    BadS { s: u64, n: u64 },
    NotCoprimeNQ { n: u64, q: u64 },
    SInvalid { s: u64, n: u64 },
    NotSelfInvolutive,
    BadCongruence(String),
    SNotInvolutive { s: u64, n: u64 },
    OrderNotCoprime { order: u64, q: u64 },
    EvenCharacteristic(u64),
    InvalidGroupSpec(String),
    KindMismatch,
    NotIrreducibleFactor,
    PreconditionFactor(String),
    CaseUnavailable(String),
    GroupMismatch,
    InconsistentPrescription(String),
}

impl Error {
    /// Stable machine-readable identifier, used by the command line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonPrimeCharacteristic(_) => "NonPrimeCharacteristic",
            Error::DegreeZero => "DegreeZero",
            Error::NotPrimePower(_) => "NotPrimePower",
            Error::ZeroElement => "ZeroElement",
            Error::ZeroInput => "ZeroInput",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::FieldTooLarge => "FieldTooLarge",
            Error::FieldMismatch => "FieldMismatch",
            Error::BothZero => "BothZero",
            Error::NotInvertible => "NotInvertible",
            Error::ZeroConstantTerm => "ZeroConstantTerm",
            Error::NotDividingXNMinus1 => "NotDividingXNMinus1",
            Error::BadS { .. } => "BadS",
            Error::NotCoprimeNQ { .. } => "NotCoprimeNQ",
            Error::SInvalid { .. } => "SInvalid",
            Error::NotSelfInvolutive => "NotSelfInvolutive",
            Error::BadCongruence(_) => "BadCongruence",
            Error::SNotInvolutive { .. } => "SNotInvolutive",
            Error::OrderNotCoprime { .. } => "OrderNotCoprime",
            Error::EvenCharacteristic(_) => "EvenCharacteristic",
            Error::InvalidGroupSpec(_) => "InvalidGroupSpec",
            Error::KindMismatch => "KindMismatch",
            Error::NotIrreducibleFactor => "NotIrreducibleFactor",
            Error::PreconditionFactor(_) => "PreconditionFactor",
            Error::CaseUnavailable(_) => "CaseUnavailable",
            Error::GroupMismatch => "GroupMismatch",
            Error::InconsistentPrescription(_) => "InconsistentPrescription",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPrimeCharacteristic(p) => write!(f, "characteristic {p} is not prime"),
            Error::DegreeZero => f.write_str("extension degree must be at least 1"),
            Error::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            Error::ZeroElement => f.write_str("zero has no multiplicative order"),
            Error::ZeroInput => f.write_str("valuation of zero is undefined"),
            Error::NotCoprime { modulus, base } => {
                write!(f, "{base} is not a unit modulo {modulus}")
            }
            Error::FieldTooLarge => f.write_str("field too large for this operation"),
            Error::FieldMismatch => f.write_str("operands live in different fields"),
            Error::BothZero => f.write_str("gcd of two zero polynomials"),
            Error::NotInvertible => f.write_str("polynomial is not invertible modulo f"),
            Error::ZeroConstantTerm => f.write_str("polynomial has zero constant term"),
            Error::NotDividingXNMinus1 => f.write_str("polynomial does not divide x^N - 1"),
            Error::BadS { s, n } => write!(f, "s = {s} is not an involution modulo {n}"),
            Error::NotCoprimeNQ { n, q } => write!(f, "gcd({n}, {q}) != 1"),
            Error::SInvalid { s, n } => write!(f, "s = {s} does not satisfy s^2 = 1 mod {n}"),
            Error::NotSelfInvolutive => {
                f.write_str("factor is not s-self-involutive or divides x^d - 1")
            }
            Error::BadCongruence(msg) => write!(f, "congruence precondition failed: {msg}"),
            Error::SNotInvolutive { s, n } => {
                write!(f, "s = {s} does not satisfy s^2 = 1 mod {n}")
            }
            Error::OrderNotCoprime { order, q } => {
                write!(f, "group order {order} is not coprime to q = {q}")
            }
            Error::EvenCharacteristic(q) => write!(f, "q = {q} has characteristic 2"),
            Error::InvalidGroupSpec(s) => write!(f, "invalid group spec: {s}"),
            Error::KindMismatch => f.write_str("operation does not apply to this kind of group"),
            Error::NotIrreducibleFactor => {
                f.write_str("polynomial is not an irreducible factor of x^N - 1")
            }
            Error::PreconditionFactor(msg) => write!(f, "factor precondition failed: {msg}"),
            Error::CaseUnavailable(msg) => write!(f, "no closed formula for this case: {msg}"),
            Error::GroupMismatch => f.write_str("elements belong to different group algebras"),
            Error::InconsistentPrescription(msg) => {
                write!(f, "prescribed images are inconsistent: {msg}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
