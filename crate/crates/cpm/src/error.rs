use cpm_core::Params;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] cpm_core::Error),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed input on line {line}: {detail}")]
    Parse { line: usize, detail: String },
    #[error("verification mismatch on {params}: {detail}")]
    Mismatch { params: Params, detail: String },
    #[error("thread pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    /// Process exit status: 2 for a theory-vs-computation disagreement, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
