//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty document")]
    EmptyDocument,

    #[error("no elements survive preprocessing")]
    NoSurvivingElements,

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("{path}: no vectors")]
    NoVectors { path: String },

    #[error("empty corpus")]
    EmptyCorpus,

    #[error("tf-idf weighting requires an idf table")]
    MissingIdf,

    #[error("empty element representation: all tokens out of vocabulary")]
    EmptyElement,

    #[error("out-of-vocabulary token {token:?}")]
    OovToken { token: String },

    #[error("element {element}: {source}")]
    Element {
        element: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("element {element} has a zero vector; cosine similarity is undefined")]
    ZeroRow { element: usize },

    #[error("rank kernel size must be odd, got {0}")]
    EvenKernel(usize),

    #[error("rank kernel size must be at least 3, got {0}")]
    KernelTooSmall(usize),

    #[error("k-means requires 1 <= k <= vocabulary size, got k={k} with {vocab} usable words")]
    BadClusterCount { k: usize, vocab: usize },

    #[error("invalid segmentation: {0}")]
    InvalidSegmentation(String),

    #[error("cannot split {n} elements into {k} segments")]
    BadSegmentCount { k: usize, n: usize },

    #[error("reference covers {reference} elements but hypothesis covers {hypothesis}")]
    LengthMismatch {
        reference: usize,
        hypothesis: usize,
    },

    #[error("probe distance {k} must be smaller than the element count {n}")]
    ProbeTooLarge { k: usize, n: usize },

    #[error("dataset generation: {0}")]
    Dataset(String),

    #[error("cross-validation needs at least 2 folds, got {0}")]
    TooFewFolds(usize),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<String>, line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            msg: msg.into(),
        }
    }
}
