use holopf_core::Error as CoreError;

/// Process exit statuses.
pub const EXIT_OK: u8 = 0;
/// A check failed or an identity was refuted.
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
/// The computation could not decide (singular system, too little data).
pub const EXIT_DIAGNOSTIC: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Json(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Core(e) => match e {
                CoreError::SingularCofactorSystem { .. }
                | CoreError::ZeroPfaffian { .. }
                | CoreError::Underdetermined { .. }
                | CoreError::InsufficientCoverage(_)
                | CoreError::Inconsistent(_) => EXIT_DIAGNOSTIC,
                _ => EXIT_USAGE,
            },
        }
    }
}
