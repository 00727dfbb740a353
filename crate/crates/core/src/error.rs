use thiserror::Error;

/// Errors raised across the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("group validation failed: {0}")]
    InvalidGroup(String),
    #[error("closure exceeded the cap of {cap} elements")]
    ClosureTooLarge { cap: usize },
    #[error("order {order} exceeds the bound {bound}")]
    SizeBound { order: usize, bound: usize },
    #[error("random class-sum combination has a repeated eigenvalue after {attempts} attempts")]
    SeedDegenerate { attempts: usize },
    #[error("irrep extraction failed for irrep {irrep}: {reason}")]
    ExtractionFailed { irrep: usize, reason: String },
    #[error("not an action: {0}")]
    NotAnAction(String),
    #[error("subgroups do not form a matched pair: {0}")]
    NotMatched(String),
    #[error("matched pair relation violated: {0}")]
    InvalidPair(String),
    #[error("not a crossed homomorphism: {0}")]
    NotCrossedHom(String),
    #[error("deformation precondition failed: {0}")]
    DeformationPrecondition(String),
    #[error("axiom `{axiom}` violated (residual {residual:e}) at {witness}")]
    AxiomViolation {
        axiom: String,
        residual: f64,
        witness: String,
    },
    #[error("not a morphism of quantum groups: {0}")]
    NotAMorphism(String),
    #[error("value {value} is not within {tol:e} of an integer")]
    NonIntegral { value: f64, tol: f64 },
    #[error("Peter-Weyl check failed: sum of squared dimensions {found} != {expected}")]
    PeterWeylMismatch { found: usize, expected: usize },
    #[error("not a corepresentation: {0}")]
    NotACorepresentation(String),
    #[error("ring action not compatible: {0}")]
    ActionNotCompatible(String),
    #[error("fusion product of {left} and {right} leaves the truncation window (cutoff {cutoff})")]
    TruncationOverflow {
        left: String,
        right: String,
        cutoff: usize,
    },
    #[error("orbit of label {label} exceeds {bound} elements")]
    OrbitInfinite { label: String, bound: usize },
    #[error("invalid fusion ring: {0}")]
    InvalidRing(String),
    #[error("invalid length function: {0}")]
    InvalidLength(String),
    #[error("identity violated: {what} (residual {residual:e})")]
    IdentityViolated { what: String, residual: f64 },
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    ParseError {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("validation failed: {invariant}")]
    ValidationError { invariant: String },
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
