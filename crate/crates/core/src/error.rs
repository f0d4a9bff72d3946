use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("generator registry needs at least one label")]
    EmptyRegistry,
    #[error("duplicate generator label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown generator label `{0}`")]
    UnknownLabel(String),
    #[error("generator `{0}` cannot be paired with itself")]
    SelfPairing(String),
    #[error("generator `{0}` is already paired")]
    ConflictingPairing(String),
    #[error("registry holds {count} generators, more than the supported {max}")]
    TooManyGenerators { count: usize, max: usize },
    #[error("generator index {index} out of range for a registry of {len}")]
    GeneratorOutOfRange { index: usize, len: usize },
    #[error("elements belong to different generator registries")]
    RegistryMismatch,
    #[error("generators {0} and {1} are not a registered conjugate pair")]
    NotAPair(usize, usize),
    #[error("exponential of an element with nonzero constant term {0}")]
    NonzeroConstantTerm(f64),
    #[error("matrix of dimension {n} exceeds the expansion cap of {cap}")]
    DimensionOverCap { n: usize, cap: usize },
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("element references generator `{0}` outside the allowed set")]
    ForeignGenerator(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("step index {k} outside 1..={n}")]
    StepOutOfRange { k: usize, n: usize },
    #[error("symbolic contraction supports at most {cap} steps, got {n}")]
    StepsOverCap { n: usize, cap: usize },
    #[error("kernel carries an unexpected monomial `{0}`")]
    UnexpectedMonomial(String),
    #[error("determinant {determinant} and Berezin expansion {expansion} disagree")]
    RouteDisagreement { determinant: f64, expansion: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
