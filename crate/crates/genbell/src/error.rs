use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("require r >= s >= 1, got r={r}, s={s}")]
    RankOrder { r: u32, s: u32 },

    #[error("clique sizes must be a non-empty list of positive integers")]
    BadFamily,

    #[error("not a proper colouring of the family: {0}")]
    ImproperColouring(String),

    #[error("invalid labelled Eulerian digraph: {0}")]
    InvalidDigraph(String),

    #[error("cycle lengths {got:?} do not match clique sizes {want:?}")]
    CycleLengthMismatch { want: Vec<u32>, got: Vec<u32> },

    #[error("cannot re-close path system: {0}")]
    BadPathSystem(String),

    #[error("computation routes disagree at (n={n}, k={k}): {lhs} vs {rhs}")]
    RouteDisagreement {
        n: u32,
        k: u32,
        lhs: String,
        rhs: String,
    },

    #[error("fixture directory {0}: {1}")]
    FixtureDir(PathBuf, std::io::Error),

    #[error("{file}:{line}: {msg}")]
    FixtureParse {
        file: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("duplicate fixture id {0}")]
    DuplicateFixture(String),

    #[error("fixture {0} not found in the loaded set")]
    MissingFixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
