use thiserror::Error;

/// Errors raised by the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree m={0} outside 1..=16")]
    DegreeOutOfRange(u32),
    #[error("modulus 0x{modulus:x} does not have degree {m}")]
    ModulusDegree { m: u32, modulus: u32 },
    #[error("modulus 0x{modulus:x} has zero constant term (divisible by x)")]
    ModulusConstantTerm { modulus: u32 },
    #[error("modulus 0x{modulus:x} is reducible: divisible by 0x{divisor:x}")]
    ReducibleModulus { modulus: u32, divisor: u32 },
    #[error("element 0x{value:x} does not belong to GF(2^{m})")]
    NotAnElement { value: u32, m: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero coordinate at index {0}")]
    ZeroCoordinate(usize),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("generator matrix has rank {rank} but {rows} rows")]
    RankDeficient { rows: usize, rank: usize },
    #[error("enumeration of {needed} items exceeds budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("code has dimension 0; operation needs k >= 1")]
    ZeroCode,
    #[error("vector is not a nonzero codeword")]
    NotACodeword,
    #[error("index set refers to coordinate {index} but n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("length {0} exceeds the 64-coordinate limit of index sets")]
    TooLongForIndexSet(usize),
    #[error("no scaling vector makes the code LCD (all {candidates} candidates checked)")]
    NoLcdScaling { candidates: u128 },
    #[error("no LCD scaling found within {iterations} random draws")]
    SearchInconclusive { iterations: u64 },
    #[error("field order {q} is not r^2 = {r}^2 for the Hermitian curve")]
    HermitianFieldMismatch { q: u32, r: u32 },
    #[error("Hermitian parameter r={0} must be a power of two")]
    HermitianOddCharacteristic(u32),
    #[error("divisor degree m={m} must be below the number of places n={n}")]
    DegreeTooLarge { m: usize, n: usize },
    #[error("evaluation places contain a duplicate at index {0}")]
    DuplicatePlace(usize),
    #[error("the place at infinity cannot be an evaluation place")]
    PlaceAtInfinity,
    #[error("place {0} is not on the curve")]
    NotOnCurve(usize),
    #[error("need {needed} places but the curve offers {available}")]
    NotEnoughPlaces { needed: usize, available: usize },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("q={0} is not a power of two with exponent >= 2")]
    UnsupportedQ(u64),
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("integer overflow computing {0}")]
    Overflow(&'static str),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
