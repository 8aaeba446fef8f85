use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Malformed or out-of-range input data.
    #[error("input error: {0}")]
    Input(String),

    /// A caller violated an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A hard size cap or search budget was exceeded.
    #[error("resource limit exceeded: {what} (limit {limit}){}", bound_suffix(*.best_lower_bound))]
    Resource {
        what: String,
        limit: u64,
        best_lower_bound: Option<f64>,
    },
}

fn bound_suffix(bound: Option<f64>) -> String {
    match bound {
        Some(b) => format!("; best known lower bound {b}"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn cap(what: impl Into<String>, limit: u64) -> Self {
        Error::Resource {
            what: what.into(),
            limit,
            best_lower_bound: None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
