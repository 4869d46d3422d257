//! Exact algorithms for signed graphs and the circular coloring game played on them.
//!
//! A signed graph carries a `+1`/`-1` label on every edge. This crate provides
//! the data model ([`SignedGraph`], [`Walk`], [`Sign`]), the switching algebra
//! (balance and antibalance classification with constructive witnesses,
//! spanning-forest canonical forms, switching-equivalence tests and class
//! enumeration), the rules of the two-player circular coloring game on a
//! discrete color circle, and exact game solvers: a memoized engine with
//! dihedral color-symmetry reduction plus a deliberately independent naive
//! recursion used as a cross-checking oracle.
//!
//! The crate is `no_std` compatible (it requires `alloc`); everything here is
//! pure computation over immutable values. IO, file formats, and the command
//! line live in the companion `sgcg` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod game;
pub mod generate;
pub mod graph;
pub mod rng;
pub mod sign;
pub mod solver;
pub mod switching;

pub use game::{
    circular_distance, coloring_exists, coloring_exists_bounded, CircleParams, GameError,
    GameState, GameStatus, Player, Rules,
};
pub use generate::{generate, Family, SignPattern};
pub use graph::{Edge, GraphError, SignedGraph, Walk};
pub use rng::SplitMix64;
pub use sign::Sign;
pub use solver::{
    best_move, chi_estimate, naive_salome_wins, salome_wins, solve_game, solve_state, win_table, CellOutcome,
    ChiEstimate, ChiRow, Clock, NullClock, Ratio, SolveConfig, SolveOutcome, SolverError, WinCell,
    WinTable,
};
pub use switching::{
    canonicalize, classify, count_switching_classes, enumerate_classes_bruteforce,
    fundamental_cycles, is_antibalanced, is_balanced, signature_from_mask, spanning_forest, switch,
    switching_equivalent, BalanceVerdict, CanonicalForm, Classification, SignatureClasses,
    SwitchingError, SwitchingFunction, Witness,
};
