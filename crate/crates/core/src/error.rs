//! Error type shared by every module of the crate.

use crate::frqi::QubitLabel;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("image side {0} must be a power of two and at least 2")]
    InvalidSide(usize),
    #[error("expected {expected} pixels, got {got}")]
    PixelCount { expected: usize, got: usize },
    #[error("pixel index {index} out of range for {len} pixels")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("shift {shift} out of range for {len} pixels")]
    ShiftOutOfRange { shift: usize, len: usize },
    #[error("invalid pattern: {0}")]
    Pattern(String),
    #[error("invalid PGM: {0}")]
    Pgm(String),
    #[error("images have different sides: {0} vs {1}")]
    SideMismatch(usize, usize),
    #[error("expected a {expected}x{expected} image, got {got}x{got}")]
    UnexpectedSide { expected: usize, got: usize },
    #[error("image is not binary: pixel {index} has value {value}")]
    NotBinary { index: usize, value: u8 },

    #[error("matrix dimensions do not conform: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is not symmetric: max deviation {0:.3e}")]
    NotSymmetric(f64),
    #[error("matrix contains a non-finite entry")]
    NotFinite,
    #[error("outer product of an empty vector")]
    EmptyVector,
    #[error("eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),

    #[error("state vector norm {0} is not 1")]
    NotNormalized(f64),
    #[error("duplicate qubit label {0:?} in register")]
    DuplicateLabel(QubitLabel),
    #[error("amplitude count {got} does not match a register of {qubits} qubits")]
    AmplitudeCount { qubits: usize, got: usize },
    #[error("qubit label {0:?} not present in register")]
    LabelNotInRegister(QubitLabel),
    #[error("subsystem selection is empty")]
    EmptySelection,
    #[error("subsystem selections overlap")]
    OverlappingParts,
    #[error("parts do not partition the register")]
    NotPartition,
    #[error("matrix is not a density matrix: eigenvalue {0:.3e} below -1e-9")]
    NotDensity(f64),
}

impl Error {
    /// True for failures of the numerics rather than of the input.
    pub fn is_numeric(&self) -> bool {
        matches!(self, Error::NoConvergence(_) | Error::NotDensity(_))
    }
}
