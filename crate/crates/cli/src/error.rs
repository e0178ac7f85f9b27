use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable or invalid configuration; `line` is 1-based when the fault has one.
    #[error("{}", config_message(.line, .message))]
    Config {
        line: Option<usize>,
        message: String,
    },
    /// A checked property did not hold.
    #[error("assertion failed: {0}")]
    Assertion(String),
    #[error("run aborted: {0}")]
    Runtime(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

fn config_message(line: &Option<usize>, message: &str) -> String {
    match line {
        Some(l) => format!("config line {l}: {message}"),
        None => format!("config: {message}"),
    }
}

impl CliError {
    pub fn config(message: impl Into<String>) -> Self {
        Self::Config {
            line: None,
            message: message.into(),
        }
    }

    pub fn at_line(line: usize, message: impl Into<String>) -> Self {
        Self::Config {
            line: Some(line),
            message: message.into(),
        }
    }

    pub fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        Self::Io {
            path: path.display().to_string(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Assertion(_) => 1,
            Self::Config { .. } => 2,
            Self::Runtime(_) | Self::Io { .. } => 3,
        }
    }
}

impl From<CliError> for ExitCode {
    fn from(e: CliError) -> Self {
        ExitCode::from(e.exit_code())
    }
}

impl From<morphlab::Error> for CliError {
    fn from(e: morphlab::Error) -> Self {
        Self::Runtime(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
