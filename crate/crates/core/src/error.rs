use thiserror::Error;

/// Errors raised by the semigroup constructions and the classifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator set is empty")]
    EmptyGenerators,

    #[error("generators must be positive, got 0")]
    ZeroGenerator,

    #[error("generators {gens:?} have gcd {gcd} != 1, the complement would be infinite")]
    NonCoprimeGenerators { gens: Vec<u64>, gcd: u64 },

    #[error("0 cannot be a gap")]
    ZeroGap,

    #[error("not additively closed: {s} + {t} = {} is a gap", s + t)]
    NotClosed { s: u64, t: u64 },

    #[error("gcd({a}, {b}) = {gcd} != 1")]
    NotCoprime { a: u64, b: u64, gcd: u64 },

    #[error("second generator b = {b} must exceed a = {a}")]
    BNotLarger { a: u64, b: u64 },

    #[error("multiplicity a = {0} must be at least 2")]
    MultiplicityTooSmall(u64),

    #[error("cusp multiplicity mu = {mu} must satisfy 1 <= mu < a = {a} and gcd(a, mu) = 1")]
    NotCoprimeMu { a: u64, mu: u64 },

    #[error("invalid cusp type ({nu}; {mu}): need 2 <= nu < mu and gcd(nu, mu) = 1")]
    InvalidCusp { nu: u64, mu: u64 },

    #[error("(a-1)(b-mu) = {0} is odd")]
    NonIntegral(u64),

    #[error("the full semigroup has no gaps; a positive genus is required")]
    GenusZero,

    #[error(
        "semigroup has multiplicity {found_a} and second generator {found_b}, expected <{a}; {b}>"
    )]
    ParamsMismatch {
        a: u64,
        b: u64,
        found_a: u64,
        found_b: u64,
    },

    #[error("genus {genus} exceeds the genus {full_genus} of <{a}; {b}>")]
    GenusTooLarge {
        a: u64,
        b: u64,
        genus: u64,
        full_genus: u64,
    },

    #[error("brute-force enumeration of {promoted} promotions exceeds the limit of {limit}")]
    TooLarge { promoted: u64, limit: u64 },

    #[error("conductor {0} exceeds the supported table size")]
    ConductorTooLarge(u64),

    #[error("family constraint violated: {0}")]
    ConstraintViolated(String),

    #[error("arithmetic overflow")]
    Overflow,

    #[error("invalid canonical form: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
