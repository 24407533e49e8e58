//! Subshifts of finite type over a finite alphabet {0, .., q-1}.
//!
//! A `TransitionMatrix` is the adjacency matrix of the symbol graph: entry
//! (i, j) > 0 means symbol j may follow symbol i. Words are admissible when
//! every adjacent pair is allowed; periodic points of the shift of period p
//! are counted by trace(A^p), and topological entropy is the log of the
//! spectral radius.

mod charpoly;
mod entropy;
mod matrix;
mod words;

pub use charpoly::{char_poly, largest_real_root};
pub use entropy::{spectral_radius_charpoly, spectral_radius_power, topological_entropy};
pub use matrix::TransitionMatrix;
pub use words::{count_periodic_points, is_admissible, is_admissible_cycle, periodic_words,
                CycleWord, Word, MAX_ENUMERATION_PERIOD};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SymbolicError {
    #[error("matrix is not square: row {row} has {len} entries, expected {q}")]
    NotSquare { row: usize, len: usize, q: usize },
    #[error("matrix must have at least one state")]
    EmptyMatrix,
    #[error("symbol {symbol} out of range for alphabet of size {q}")]
    SymbolOutOfRange { symbol: usize, q: usize },
    #[error("word must be nonempty")]
    EmptyWord,
    #[error("period must be at least 1")]
    ZeroPeriod,
    #[error("period {p} exceeds the exhaustive-enumeration guard ({max}); refusing")]
    PeriodTooLarge { p: usize, max: usize },
    #[error("entropy is undefined for the all-zero matrix")]
    ZeroMatrix,
    #[error("entropy cross-check failed: power iteration {power}, char-poly bisection {charpoly}")]
    EntropyCrossCheck { power: f64, charpoly: f64 },
}
