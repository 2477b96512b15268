use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("arc label {label} occurs {count} times (expected 2)")]
    Label { label: u32, count: usize },

    #[error("index {index} out of range (len {len})")]
    Index { index: usize, len: usize },

    #[error("invalid value: {0}")]
    Value(String),

    #[error("diagram is split; checkerboard coloring is ambiguous")]
    SplitDiagram,

    #[error("{crossings} crossings exceeds the state-sum cap of {cap}")]
    CapExceeded { crossings: usize, cap: usize },

    #[error("arithmetic invariant violated: {0}")]
    Arithmetic(String),

    #[error("parameter outside the stated domain: {0}")]
    Domain(String),

    #[error("pretzel spec not in normal form: {0}")]
    NormalForm(String),

    #[error("unrecognised census name {0:?}")]
    NameFormat(String),

    #[error("row {row}: {msg}")]
    Row { row: usize, msg: String },

    #[error("{name}: given det {given} but diagram gives {computed}")]
    Validation { name: String, given: String, computed: String },

    #[error("entries without a determinant: {}", .0.join(", "))]
    MissingDet(Vec<String>),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
