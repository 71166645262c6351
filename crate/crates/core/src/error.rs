use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("leaf index {index} out of range for a tree with {leaves} leaves")]
    LeafIndex { index: usize, leaves: usize },

    #[error("leaves {index} and {} do not form a terminal caret", index + 1)]
    NotTerminalCaret { index: usize },

    #[error("target tree is not a refinement of the source tree")]
    NotARefinement,

    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),

    #[error("strand index {index} out of range for a braid on {strands} strands")]
    StrandIndex { index: usize, strands: usize },

    #[error("Artin generator s{index} does not exist on {strands} strands")]
    ArtinIndex { index: usize, strands: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("tree leaf counts ({top}, {bot}) do not match braid strand count {strands}")]
    ShapeMismatch {
        top: usize,
        strands: usize,
        bot: usize,
    },

    #[error("cannot draw a key of positive length from an empty public set")]
    EmptyPublicSet,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line: 1,
            column,
            message: message.into(),
        }
    }

    /// Moves a parse error onto `line`, shifting its column by `column_offset`.
    pub(crate) fn at_line(self, line: usize, column_offset: usize) -> Self {
        match self {
            Error::Parse {
                column, message, ..
            } => Error::Parse {
                line,
                column: column + column_offset,
                message,
            },
            other => other,
        }
    }
}
