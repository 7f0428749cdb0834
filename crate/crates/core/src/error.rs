use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot embed an element of order {from} into order {to}")]
    IncompatibleOrders { from: u32, to: u32 },
    #[error("dihedral moduli differ: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("invalid irreducible label {label} for n = {n}")]
    InvalidLabel { n: u32, label: String },
    #[error("invalid Coxeter matrix: {0}")]
    InvalidCoxeterMatrix(String),
    #[error("invalid representation spec: {0}")]
    InvalidSpec(String),
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("not a representation of the dihedral group: {0}")]
    NotARepresentation(String),
    #[error("(AB)^{n} is not the identity")]
    OrderViolation { n: u32 },
    #[error("no n <= {max} with (AB)^n = I")]
    OrderExceeded { max: u32 },
    #[error("determinant does not factor over the catalog curves; residual {residual}")]
    NotFullyFactorable { residual: String },
    #[error("invalid curve set: {0}")]
    InvalidCurveSet(String),
    #[error("curve set is not the spectrum of any faithful representation: {0}")]
    NotFaithfullyRealizable(String),
    #[error("missing curve data for pair ({i}, {j})")]
    MissingPair { i: usize, j: usize },
    #[error("restriction to generators ({i}, {j}) is not faithful; kernel contains {witness}")]
    FaithfulnessViolation { i: usize, j: usize, witness: String },
    #[error("reconstructed bond m[{i}][{j}] = {reconstructed} disagrees with detected order {detected}")]
    BondMismatch {
        i: usize,
        j: usize,
        reconstructed: u32,
        detected: u32,
    },
    #[error("output failure: {0}")]
    SinkFailure(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code for the command-line front end: 1 for malformed or
    /// invalid input, 2 for a violated mathematical contract.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidLabel { .. }
            | Error::InvalidCoxeterMatrix(_)
            | Error::InvalidSpec(_)
            | Error::DimensionMismatch(_)
            | Error::InvalidCurveSet(_)
            | Error::MissingPair { .. }
            | Error::SinkFailure(_)
            | Error::Parse(_) => 1,
            _ => 2,
        }
    }
}
