use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("refused: {0}")]
    Resource(String),
    #[error(transparent)]
    Core(#[from] operad_forest::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}
