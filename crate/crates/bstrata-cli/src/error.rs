use std::fmt;

/// Exit-code contract: 0 success, 1 verification or runtime failure,
/// 2 usage error (clap reports its own parse errors with code 2 as well).
#[derive(Debug)]
pub enum AppError {
    Usage(String),
    Check(String),
    Io(std::io::Error),
}

impl AppError {
    pub fn usage(msg: impl Into<String>) -> Self {
        AppError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            AppError::Usage(_) => 2,
            AppError::Check(_) | AppError::Io(_) => 1,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Usage(msg) => write!(f, "{msg}"),
            AppError::Check(msg) => write!(f, "{msg}"),
            AppError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for AppError {}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Io(e)
    }
}

impl From<bstrata_core::Error> for AppError {
    fn from(e: bstrata_core::Error) -> Self {
        AppError::Usage(e.to_string())
    }
}
