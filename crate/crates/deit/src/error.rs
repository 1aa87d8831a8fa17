use thiserror::Error;

/// Error type shared across the crate.
#[derive(Debug, Error)]
pub enum DeitError {
    #[error("no quantum defect tabulated for species `{species}`, l = {l}")]
    UnknownDefect { species: String, l: u32 },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("selection rule violated: {0}")]
    SelectionRule(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("zero separation vector in dipole-dipole coupling")]
    ZeroSeparation,

    #[error("closed sector (jpjm = 0): group velocity undefined, use the two-level absorption branch")]
    ClosedSector,

    #[error("configuration error: {0}")]
    Config(String),

    #[error("scenario parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("grid too coarse: {0}")]
    Resolution(String),

    #[error("measurement failed: {0}")]
    Measurement(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, DeitError>;
