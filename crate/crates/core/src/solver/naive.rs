//! A deliberately plain reference solver.
//!
//! No memoization, no symmetry reduction, no code shared with the engine:
//! the game rules are re-derived from the edge list with its own arithmetic.
//! Exponential, so the bounds are tight. Exists purely to cross-check
//! [`crate::solver::solve_game`].

use alloc::vec::Vec;

use crate::game::{CircleParams, Player, Rules};
use crate::graph::SignedGraph;
use crate::solver::SolverError;

pub const NAIVE_MAX_VERTICES: usize = 6;
pub const NAIVE_MAX_POINTS: u16 = 8;

/// Whether Salome forces a win, resolved by exhaustive unmemoized recursion.
pub fn naive_salome_wins(
    g: &SignedGraph,
    params: CircleParams,
    first: Player,
    rules: Rules,
) -> Result<bool, SolverError> {
    if g.n() > NAIVE_MAX_VERTICES {
        return Err(SolverError::BoundExceeded {
            dimension: "vertices",
            limit: NAIVE_MAX_VERTICES,
            actual: g.n(),
        });
    }
    if params.p() > NAIVE_MAX_POINTS {
        return Err(SolverError::BoundExceeded {
            dimension: "circle points",
            limit: NAIVE_MAX_POINTS as usize,
            actual: params.p() as usize,
        });
    }
    let n = g.n();
    let mut sig = alloc::vec![alloc::vec![0i8; n]; n];
    for e in g.edges() {
        sig[e.u][e.v] = e.sign.value();
        sig[e.v][e.u] = e.sign.value();
    }
    let mut colors = alloc::vec![-1i32; n];
    Ok(recurse(
        &sig,
        params.p() as i32,
        params.d() as i32,
        &mut colors,
        first == Player::Salome,
        rules == Rules::DeadVertex,
    ))
}

fn fits(sig: &[Vec<i8>], p: i32, d: i32, colors: &[i32], v: usize, c: i32) -> bool {
    for w in 0..colors.len() {
        if sig[v][w] == 0 || colors[w] < 0 {
            continue;
        }
        let diff = (c - colors[w]).abs();
        let dist = diff.min(p - diff);
        if sig[v][w] > 0 && dist < d {
            return false;
        }
        if sig[v][w] < 0 && dist > d {
            return false;
        }
    }
    true
}

fn recurse(
    sig: &[Vec<i8>],
    p: i32,
    d: i32,
    colors: &mut Vec<i32>,
    salome_to_move: bool,
    dead_vertex_rule: bool,
) -> bool {
    if colors.iter().all(|&c| c >= 0) {
        return true;
    }
    if dead_vertex_rule {
        for v in 0..colors.len() {
            if colors[v] < 0 && (0..p).all(|c| !fits(sig, p, d, colors, v, c)) {
                return false;
            }
        }
    }
    let mut moved = false;
    for v in 0..colors.len() {
        if colors[v] >= 0 {
            continue;
        }
        for c in 0..p {
            if !fits(sig, p, d, colors, v, c) {
                continue;
            }
            moved = true;
            colors[v] = c;
            let salome = recurse(sig, p, d, colors, !salome_to_move, dead_vertex_rule);
            colors[v] = -1;
            if salome_to_move && salome {
                return true;
            }
            if !salome_to_move && !salome {
                return false;
            }
        }
    }
    if !moved {
        return false;
    }
    !salome_to_move
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family, SignPattern};

    #[test]
    fn bounds_are_tight() {
        let g = generate(&Family::Path { n: 7 }, &SignPattern::AllPositive).unwrap();
        assert!(naive_salome_wins(
            &g,
            CircleParams::new(2, 1).unwrap(),
            Player::Salome,
            Rules::MoverStuck
        )
        .is_err());
        let k2 = generate(&Family::Path { n: 2 }, &SignPattern::AllPositive).unwrap();
        assert!(naive_salome_wins(
            &k2,
            CircleParams::new(9, 1).unwrap(),
            Player::Salome,
            Rules::MoverStuck
        )
        .is_err());
    }

    #[test]
    fn empty_graph_is_an_immediate_win() {
        let empty = generate(&Family::Path { n: 0 }, &SignPattern::AllPositive).unwrap();
        assert!(naive_salome_wins(
            &empty,
            CircleParams::new(2, 1).unwrap(),
            Player::Andjiga,
            Rules::MoverStuck
        )
        .unwrap());
    }
}
