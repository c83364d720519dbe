use std::path::PathBuf;

use itg_core::spectral::SpectralError;
use itg_core::verify::CorpusError;
use itg_core::{FamilyError, GraphError, IterateError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("graph6 line {line}, byte {offset}: {message}")]
    Graph6 {
        line: usize,
        offset: usize,
        message: String,
    },
    #[error("graph6 cannot encode {0} vertices")]
    Graph6TooLarge(usize),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Iterate(#[from] IterateError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
