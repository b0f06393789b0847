use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown identity id `{id}`{}", suggestion_suffix(.suggestions))]
    UnknownId {
        id: String,
        suggestions: Vec<String>,
    },

    #[error("identity `{id}` has no side with index {index} (it has {count})")]
    NoSuchSide {
        id: String,
        index: usize,
        count: usize,
    },

    #[error(
        "norm {requested} exceeds the enumeration ceiling {ceiling} declared for `{id}`; \
         use a norm of at most {ceiling}"
    )]
    EnumCeiling {
        id: String,
        requested: usize,
        ceiling: usize,
    },

    #[error("weight `{weight}` cannot be used with set `{set}`")]
    IncompatibleWeight { weight: String, set: String },

    #[error("unsupported table `{0}`; available tables are 2, 3, 4 and 7")]
    UnknownTable(String),

    #[error("parse error: {0}")]
    Parse(String),
}

fn suggestion_suffix(suggestions: &[String]) -> String {
    if suggestions.is_empty() {
        String::new()
    } else {
        format!("; did you mean: {}?", suggestions.join(", "))
    }
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
