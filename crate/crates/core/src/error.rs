use thiserror::Error;

use crate::scalar::ScalarDomain;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("unknown scalar domain `{0}`")]
    UnknownScalar(String),
    #[error("domain mismatch: expected {expected}, found {found}")]
    DomainMismatch {
        expected: ScalarDomain,
        found: ScalarDomain,
    },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("image is not contained in the kernel (generator {index})")]
    NotContained { index: usize },
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("basis element {0} is not a two-sided unit")]
    NotUnital(usize),
    #[error("Leibniz identity fails on basis triple ({0}, {1}, {2})")]
    LeibnizViolation(usize, usize, usize),
    #[error("bracket of basis elements {0} and {1} is not homogeneous for the given weights")]
    WeightViolation(usize, usize),
    #[error("algebra is not perfect")]
    NotPerfect,
    #[error("quotient module has torsion {0:?}; a structure-constant model needs a free module")]
    TorsionQuotient(Vec<String>),
    #[error("matrix size {0} is outside the supported range")]
    UnsupportedSize(usize),
    #[error("change of basis is not invertible over {0}")]
    Singular(ScalarDomain),
    #[error("unknown ring `{0}`")]
    UnknownRing(String),
    #[error("ring `{ring}` is not available over {scalar}")]
    IncompatibleScalar { ring: String, scalar: ScalarDomain },
    #[error("model check failed: {0}")]
    ModelCheck(String),
    #[error("task exceeds the tensor budget: {size} > {limit}")]
    Budget { size: usize, limit: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("ring file: {0}")]
    RingFile(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
