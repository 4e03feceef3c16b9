use thiserror::Error;

/// Errors raised by the toolkit. Messages name the violated invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is even; an odd prime is required")]
    EvenPrime(u64),
    #[error("n1 and n2 must be distinct (both are {0})")]
    NotDistinct(u64),
    #[error("gcd(n1-1, n2-1) = {0}, expected 6")]
    OrderNotSix(u64),
    #[error("{g} is not a common primitive root of {n1} and {n2}")]
    NotCommonPrimitiveRoot { g: u64, n1: u64, n2: u64 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("extension degree {m} exceeds the cap of {cap}")]
    ExtensionTooLarge { m: u64, cap: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative order")]
    ZeroOrder,
    #[error("gcd({q}, {n}) = {gcd}, expected 1")]
    NotCoprime { q: u64, n: u64, gcd: u64 },
    #[error("{n} does not divide the multiplicative group order {order}")]
    NoNthRoot { n: u64, order: u128 },
    #[error("class index {0} out of range 0..6")]
    ClassIndex(usize),
    #[error("shift must be nonzero modulo n")]
    ZeroShift,
    #[error("sequence is not binary")]
    NotBinary,
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("no representation {0} found")]
    NoRepresentation(&'static str),
    #[error("no sign assignment of the representations reproduces the cyclotomic numbers")]
    NoSignAssignment,
    #[error("Λ(β) is neither 0 nor -1 although the quarter (n±1)/4 vanishes mod p")]
    LambdaOutsideTable,
    #[error("{q} mod {n} lies in D1, so d0/d1 do not have base-field coefficients")]
    NotInD0 { q: u64, n: u64 },
    #[error("coefficient of degree {0} does not lie in the base field")]
    NotInBaseField(usize),
    #[error("message length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("{needed} codewords exceed the exhaustive budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("generator does not divide x^{0}-1")]
    NotCyclicGenerator(usize),
    #[error("code has dimension 0")]
    ZeroDimension,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
