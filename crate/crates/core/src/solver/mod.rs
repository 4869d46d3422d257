//! Exact optimal-play resolution of the coloring game.
//!
//! Two independent routes to the same answer: [`solve_game`] is the real
//! engine (boolean minimax with a transposition table keyed on a dihedral
//! color-symmetry canonical form), while [`naive_salome_wins`] is a plain
//! unmemoized recursion sharing no search code with it, kept as a
//! cross-checking oracle. [`win_table`] and [`chi_estimate`] drive grids of
//! solves for the ratio sweeps.

mod engine;
mod naive;
mod sweep;

use core::fmt;

pub use engine::{best_move, salome_wins, solve_game, solve_state, SolveConfig, SolveOutcome};
pub use naive::{naive_salome_wins, NAIVE_MAX_POINTS, NAIVE_MAX_VERTICES};
pub use sweep::{
    chi_estimate, win_table, CellOutcome, ChiEstimate, ChiRow, Clock, Ratio, WinCell, WinTable,
};

/// Errors from the solvers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolverError {
    /// An instance dimension exceeds the configured search bound; the
    /// offending dimension is named.
    BoundExceeded { dimension: &'static str, limit: usize, actual: usize },
    NoLegalMove,
    /// `best_move` was asked for a move in a finished game.
    GameFinished,
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverError::BoundExceeded { dimension, limit, actual } => {
                write!(f, "solver bound exceeded on {dimension}: limit {limit}, got {actual}")
            }
            SolverError::NoLegalMove => write!(f, "no legal move in this state"),
            SolverError::GameFinished => write!(f, "the game is already decided"),
        }
    }
}

impl core::error::Error for SolverError {}

/// A placeholder clock for contexts without a time source.
pub struct NullClock;

impl Clock for NullClock {
    fn now_nanos(&self) -> u64 {
        0
    }
}
