use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph is not simple: {0}")]
    NotSimple(String),

    #[error("graph has no vertices")]
    Empty,

    #[error("graph is disconnected; unreached from vertex 0: {unreached:?}")]
    Disconnected { unreached: Vec<usize> },

    #[error("base point {base} out of range for {vertex_count} vertices")]
    BasePoint { base: usize, vertex_count: usize },

    #[error("graph is not self-centered: ecc({v}) = {ecc_v} but ecc({w}) = {ecc_w}")]
    NotSelfCentered { v: usize, ecc_v: usize, w: usize, ecc_w: usize },

    #[error("sphere S_{index}({vertex}) is empty")]
    SphereEmpty { vertex: usize, index: usize },

    #[error("edge list parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid generator parameters: {0}")]
    Generator(String),

    #[error("invalid Cayley data: {0}")]
    Cayley(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("enumeration refused: {0}")]
    EnumerationBudget(String),

    /// Two methods that must agree did not. This indicates a defect in the
    /// implementation, never an acceptable outcome.
    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Stable snake_case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotSimple(_) => "not_simple",
            Error::Empty => "empty",
            Error::Disconnected { .. } => "disconnected",
            Error::BasePoint { .. } => "base_point",
            Error::NotSelfCentered { .. } => "not_self_centered",
            Error::SphereEmpty { .. } => "sphere_empty",
            Error::Parse { .. } => "parse",
            Error::Generator(_) => "generator",
            Error::Cayley(_) => "cayley",
            Error::Precondition(_) => "precondition",
            Error::Dimension(_) => "dimension",
            Error::EnumerationBudget(_) => "enumeration_budget",
            Error::CrossCheck(_) => "cross_check",
            Error::Io(_) => "io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
