use std::fmt;

/// CLI failure classes, one per nonzero exit code.
#[derive(Debug)]
pub enum CliError {
    /// Flag combinations clap cannot express (exit 1).
    Usage(String),
    /// Malformed or unreadable input data (exit 2).
    Input(String),
    /// Numeric or domain failure while computing (exit 3).
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Input(msg) | CliError::Numeric(msg) => {
                write!(f, "{msg}")
            }
        }
    }
}

impl From<fibbin::Error> for CliError {
    fn from(e: fibbin::Error) -> Self {
        use fibbin::Error::*;
        match e {
            EmptyInput | DuplicateAbscissa(_) | NegativeWeight { .. } | OffsetViolation { .. } => {
                CliError::Input(e.to_string())
            }
            _ => CliError::Numeric(e.to_string()),
        }
    }
}
