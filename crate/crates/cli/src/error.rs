use thiserror::Error;

/// Failure classes, each with its own exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("budget exhausted: {0}")]
    Budget(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Budget(_) | CliError::Failed(_) => 1,
        }
    }
}

pub fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Validation(e.to_string())
}

impl From<tamecm_orbits::OrbitError> for CliError {
    fn from(e: tamecm_orbits::OrbitError) -> Self {
        match e {
            tamecm_orbits::OrbitError::BudgetExhausted(m) => CliError::Budget(m),
            other => invalid(other),
        }
    }
}

macro_rules! validation_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                invalid(e)
            }
        }
    )*};
}

validation_from!(
    tamecm_core::CoreError,
    tamecm_autgroup::AutError,
    tamecm_cmspace::CmError,
    tamecm_adelic::AdelicError,
    tamecm_graphgroups::GraphError,
    serde_json::Error,
    std::io::Error
);

pub type Result<T> = std::result::Result<T, CliError>;
