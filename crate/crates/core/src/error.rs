use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mean {0} lies outside [0, 1]")]
    MeanOutOfRange(f64),
    #[error("numerator {k} exceeds denominator {n}")]
    ClassOutOfRange { k: u64, n: u64 },
    #[error("domain size {0} is not a power of two")]
    NotPowerOfTwo(u64),
    #[error("value table has {got} entries, expected {expected}")]
    TableLength { expected: usize, got: usize },
    #[error("malformed value table: unexpected character {0:?}")]
    MalformedTable(char),
    #[error("the number of outcomes M must be at least 1")]
    ZeroOutcomes,
    #[error("M = {m} outcomes do not fit in {qubits} index qubits")]
    IndexRegisterTooSmall { m: u64, qubits: u32 },
    #[error("query operator requires a Boolean function")]
    MissingFunction,
    #[error("function acts on {got} qubits but the data register has {expected}")]
    RegisterMismatch { expected: u32, got: u32 },
    #[error("state has no ancilla qubit")]
    NoAncilla,
    #[error("amplitude vector has length {got}, expected {expected}")]
    StateLength { expected: usize, got: usize },
    #[error("outcome {j} is outside 0..{m}")]
    OutcomeOutOfRange { j: u64, m: u64 },
    #[error("sigma = {0} is an integer; the exact case has no rounding pair")]
    IntegralSigma(f64),
    #[error("probability level {0} is outside the admissible range")]
    ProbabilityOutOfRange(f64),
    #[error("median amplification needs an odd number of runs, got {0}")]
    EvenRuns(usize),
    #[error("accuracy {0} is outside (0, 1)")]
    EpsilonOutOfRange(f64),
    #[error("M = {0} must be divisible by 4")]
    NotDivisibleByFour(u64),
    #[error("M = {0} must be larger than 4 and not divisible by 4")]
    DivisibleByFour(u64),
    #[error("beta = {0} must exceed 1")]
    BetaTooSmall(f64),
    #[error("M = {0} is too small; at least 2 outcomes are required")]
    TooFewOutcomes(u64),
}
