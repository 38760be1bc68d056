//! CLI error type carrying the process exit code: usage and configuration
//! problems exit 2, numerical non-convergence exits 3.

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numerical(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{}", msg),
            CliError::Numerical(msg) => write!(f, "{}", msg),
        }
    }
}

impl std::error::Error for CliError {}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }

    /// Prefix the message with the experiment that raised it.
    pub fn in_experiment(self, id: &str) -> Self {
        match self {
            CliError::Usage(m) => CliError::Usage(format!("{}: {}", id, m)),
            CliError::Numerical(m) => CliError::Numerical(format!("{}: {}", id, m)),
        }
    }
}

impl From<mixnorm::Error> for CliError {
    fn from(e: mixnorm::Error) -> Self {
        use mixnorm::Error::*;
        match e {
            NonConvergence { .. } | IllConditioned { .. } | BoundaryStall { .. }
            | BranchViolation(_) => CliError::Numerical(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}
