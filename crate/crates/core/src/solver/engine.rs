//! The memoized game engine.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::game::{CircleParams, GameState, GameStatus, Player, Rules};
use crate::graph::SignedGraph;
use crate::sign::Sign;
use crate::solver::SolverError;

/// Search configuration and safety bounds.
#[derive(Clone, Copy, Debug)]
pub struct SolveConfig {
    pub rules: Rules,
    /// Canonicalize transposition keys under all `2p` rotations/reflections of
    /// the color circle. Winners never depend on this; node counts do.
    pub symmetry: bool,
    pub max_vertices: usize,
    pub max_points: u16,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            rules: Rules::MoverStuck,
            symmetry: true,
            max_vertices: 10,
            max_points: 16,
        }
    }
}

/// Result of one full solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    /// Whether Salome forces a win from the empty coloring.
    pub salome_wins: bool,
    /// Search nodes visited, counting transposition hits and terminals.
    /// Deterministic for fixed inputs and configuration.
    pub nodes: u64,
}

fn check_bounds(g: &SignedGraph, params: CircleParams, cfg: &SolveConfig) -> Result<(), SolverError> {
    if g.n() > cfg.max_vertices {
        return Err(SolverError::BoundExceeded {
            dimension: "vertices",
            limit: cfg.max_vertices,
            actual: g.n(),
        });
    }
    let point_limit = cfg.max_points.min(254);
    if params.p() > point_limit {
        return Err(SolverError::BoundExceeded {
            dimension: "circle points",
            limit: point_limit as usize,
            actual: params.p() as usize,
        });
    }
    Ok(())
}

/// Solves the game from the empty coloring under optimal play.
pub fn solve_game(
    g: &SignedGraph,
    params: CircleParams,
    first: Player,
    cfg: &SolveConfig,
) -> Result<SolveOutcome, SolverError> {
    check_bounds(g, params, cfg)?;
    let mut engine = Engine::new(g, params, cfg);
    let mut coloring = alloc::vec![0u8; g.n()];
    let uncolored = g.n();
    let salome_wins = engine.solve(&mut coloring, uncolored, first);
    Ok(SolveOutcome { salome_wins, nodes: engine.nodes })
}

/// Solves the game from an arbitrary mid-game state: does Salome force a win
/// with the state's player to move?
pub fn solve_state(state: &GameState<'_>, cfg: &SolveConfig) -> Result<SolveOutcome, SolverError> {
    check_bounds(state.graph(), state.params(), cfg)?;
    let mut engine = Engine::new(state.graph(), state.params(), cfg);
    let mut coloring: Vec<u8> = state
        .coloring()
        .iter()
        .map(|c| c.map_or(0, |c| c as u8 + 1))
        .collect();
    let uncolored = coloring.iter().filter(|&&c| c == 0).count();
    let salome_wins = engine.solve(&mut coloring, uncolored, state.to_move());
    Ok(SolveOutcome { salome_wins, nodes: engine.nodes })
}

/// Whether Salome forces a win with `first` moving first, under the default
/// configuration.
pub fn salome_wins(
    g: &SignedGraph,
    params: CircleParams,
    first: Player,
) -> Result<bool, SolverError> {
    solve_game(g, params, first, &SolveConfig::default()).map(|o| o.salome_wins)
}

/// An optimal move for the player to move, ties broken by the deterministic
/// move order (vertex ascending, then color ascending). Always returns a move
/// while the game is ongoing, even when every reply loses.
pub fn best_move(state: &GameState<'_>, cfg: &SolveConfig) -> Result<(usize, u16), SolverError> {
    check_bounds(state.graph(), state.params(), cfg)?;
    if state.status_with(cfg.rules) != GameStatus::Ongoing {
        return Err(SolverError::GameFinished);
    }
    let mut engine = Engine::new(state.graph(), state.params(), cfg);
    let mut coloring: Vec<u8> = state
        .coloring()
        .iter()
        .map(|c| c.map_or(0, |c| c as u8 + 1))
        .collect();
    let uncolored = coloring.iter().filter(|&&c| c == 0).count();
    let mover = state.to_move();
    let moves = state.legal_moves();
    let mut fallback = None;
    for (v, c) in moves {
        if fallback.is_none() {
            fallback = Some((v, c));
        }
        coloring[v] = c as u8 + 1;
        let salome = engine.solve(&mut coloring, uncolored - 1, mover.opponent());
        coloring[v] = 0;
        let mover_wins = match mover {
            Player::Salome => salome,
            Player::Andjiga => !salome,
        };
        if mover_wins {
            return Ok((v, c));
        }
    }
    fallback.ok_or(SolverError::NoLegalMove)
}

struct Engine {
    adj: Vec<Vec<(usize, Sign)>>,
    p: u16,
    d: u16,
    rules: Rules,
    symmetry: bool,
    memo: BTreeMap<Vec<u8>, bool>,
    nodes: u64,
}

impl Engine {
    fn new(g: &SignedGraph, params: CircleParams, cfg: &SolveConfig) -> Engine {
        Engine {
            adj: g.adjacency(),
            p: params.p(),
            d: params.d(),
            rules: cfg.rules,
            symmetry: cfg.symmetry,
            memo: BTreeMap::new(),
            nodes: 0,
        }
    }

    fn legal(&self, coloring: &[u8], v: usize, c: u16) -> bool {
        for &(w, sign) in &self.adj[v] {
            let cw = coloring[w];
            if cw == 0 {
                continue;
            }
            let dist = crate::game::distance(c, cw as u16 - 1, self.p);
            if !crate::game::edge_satisfied(sign, dist, self.d) {
                return false;
            }
        }
        true
    }

    fn has_dead_vertex(&self, coloring: &[u8]) -> bool {
        (0..coloring.len()).any(|v| {
            coloring[v] == 0 && (0..self.p).all(|c| !self.legal(coloring, v, c))
        })
    }

    /// Canonical transposition key: the lexicographically least image of the
    /// coloring under the dihedral color symmetries, with the mover appended.
    fn key(&self, coloring: &[u8], mover: Player) -> Vec<u8> {
        let n = coloring.len();
        let mut best = alloc::vec![0u8; n + 1];
        best[..n].copy_from_slice(coloring);
        best[n] = mover as u8;
        if !self.symmetry {
            return best;
        }
        let p = self.p;
        let mut scratch = alloc::vec![0u8; n + 1];
        scratch[n] = mover as u8;
        for reflect in [false, true] {
            for t in 0..p {
                if !reflect && t == 0 {
                    continue; // identity already in `best`
                }
                for (i, &c) in coloring.iter().enumerate() {
                    scratch[i] = if c == 0 {
                        0
                    } else {
                        let c = c as u16 - 1;
                        let c = if reflect { (p - c) % p } else { c };
                        ((c + t) % p) as u8 + 1
                    };
                }
                if scratch < best {
                    core::mem::swap(&mut best, &mut scratch);
                    scratch[n] = mover as u8;
                }
            }
        }
        best
    }

    /// True iff Salome wins the finished game from here under optimal play.
    fn solve(&mut self, coloring: &mut Vec<u8>, uncolored: usize, mover: Player) -> bool {
        self.nodes += 1;
        if uncolored == 0 {
            return true;
        }
        if self.rules == Rules::DeadVertex && self.has_dead_vertex(coloring) {
            return false;
        }
        let key = self.key(coloring, mover);
        if let Some(&value) = self.memo.get(&key) {
            return value;
        }
        let mut any_move = false;
        let mut result = mover == Player::Andjiga; // none-better default per mover
        'search: for v in 0..coloring.len() {
            if coloring[v] != 0 {
                continue;
            }
            for c in 0..self.p {
                if !self.legal(coloring, v, c) {
                    continue;
                }
                any_move = true;
                coloring[v] = c as u8 + 1;
                let salome = self.solve(coloring, uncolored - 1, mover.opponent());
                coloring[v] = 0;
                match mover {
                    Player::Salome if salome => {
                        result = true;
                        break 'search;
                    }
                    Player::Andjiga if !salome => {
                        result = false;
                        break 'search;
                    }
                    _ => {}
                }
            }
        }
        if !any_move {
            result = false; // the mover is stuck: Andjiga wins
        }
        self.memo.insert(key, result);
        result
    }
}
