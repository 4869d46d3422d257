//! Rules of the circular coloring game on signed graphs.
//!
//! Two players alternately color uncolored vertices with points of a discrete
//! circle of `p` points. A positive edge requires its endpoints to sit at
//! circular distance at least `d`; a negative edge requires distance at most
//! `d` (distance exactly `d` satisfies both). Salome wins when every vertex is
//! colored; Andjiga wins when a legal move becomes impossible.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::SignedGraph;
use crate::sign::Sign;

/// The two players: Salome completes colorings, Andjiga obstructs them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Salome,
    Andjiga,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Salome => Player::Andjiga,
            Player::Andjiga => Player::Salome,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::Salome => write!(f, "salome"),
            Player::Andjiga => write!(f, "andjiga"),
        }
    }
}

/// When exactly Andjiga is declared the winner.
///
/// The two readings provably produce the same winner (constraints only
/// accumulate, so a stranded vertex stays stranded and blocks completion
/// either way); both are kept so the difference can be measured empirically.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Rules {
    /// The player to move has no legal (vertex, color) pair. Default.
    #[default]
    MoverStuck,
    /// Some uncolored vertex has no legal color, even if other moves exist.
    DeadVertex,
}

impl fmt::Display for Rules {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rules::MoverStuck => write!(f, "mover-stuck"),
            Rules::DeadVertex => write!(f, "dead-vertex"),
        }
    }
}

/// The discrete color circle: `p` points with separation parameter `d`,
/// playing the `(k, d)`-game for the rational ratio `k = p/d >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CircleParams {
    p: u16,
    d: u16,
}

impl CircleParams {
    pub fn new(p: u16, d: u16) -> Result<CircleParams, GameError> {
        if d == 0 || p < 2 * d {
            return Err(GameError::InvalidParams { p, d });
        }
        Ok(CircleParams { p, d })
    }

    /// Number of circle points.
    pub fn p(&self) -> u16 {
        self.p
    }

    /// Required separation.
    pub fn d(&self) -> u16 {
        self.d
    }

    /// The ratio `k = p/d` in lowest terms, for reporting.
    pub fn ratio(&self) -> (u16, u16) {
        let g = gcd(self.p as u64, self.d as u64) as u16;
        (self.p / g, self.d / g)
    }
}

impl fmt::Display for CircleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} d={}", self.p, self.d)
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Circular distance between two points of a `p`-point circle:
/// `min(|a-b|, p - |a-b|)`, a value in `0 ..= p/2`.
pub fn circular_distance(a: u16, b: u16, p: u16) -> Result<u16, GameError> {
    for point in [a, b] {
        if point >= p {
            return Err(GameError::PointOutOfRange { point, p });
        }
    }
    Ok(distance(a, b, p))
}

#[inline]
pub(crate) fn distance(a: u16, b: u16, p: u16) -> u16 {
    let diff = a.abs_diff(b);
    diff.min(p - diff)
}

#[inline]
pub(crate) fn edge_satisfied(sign: Sign, dist: u16, d: u16) -> bool {
    match sign {
        Sign::Plus => dist >= d,
        Sign::Minus => dist <= d,
    }
}

/// Errors from game-rule operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GameError {
    InvalidParams { p: u16, d: u16 },
    PointOutOfRange { point: u16, p: u16 },
    VertexOutOfRange { vertex: usize, n: usize },
    AlreadyColored { vertex: usize },
    ColoringLengthMismatch { expected: usize, got: usize },
    /// A move or coloring violates the constraint of one specific signed edge.
    EdgeConflict {
        vertex: usize,
        color: u16,
        neighbor: usize,
        neighbor_color: u16,
        sign: Sign,
        distance: u16,
        d: u16,
    },
    BoundExceeded { dimension: &'static str, limit: usize, actual: usize },
}

impl fmt::Display for GameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameError::InvalidParams { p, d } => {
                write!(f, "invalid circle: need d >= 1 and p >= 2d, got p={p} d={d}")
            }
            GameError::PointOutOfRange { point, p } => {
                write!(f, "color point {point} out of range for a {p}-point circle")
            }
            GameError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            GameError::AlreadyColored { vertex } => {
                write!(f, "vertex {vertex} is already colored")
            }
            GameError::ColoringLengthMismatch { expected, got } => {
                write!(f, "coloring has {got} entries for a graph on {expected} vertices")
            }
            GameError::EdgeConflict { vertex, color, neighbor, neighbor_color, sign, distance, d } => {
                let need = match sign {
                    Sign::Plus => "at least",
                    Sign::Minus => "at most",
                };
                write!(
                    f,
                    "edge {{{vertex}, {neighbor}}} ({sign}) violated: colors {color} and \
                     {neighbor_color} are at distance {distance}, need {need} {d}"
                )
            }
            GameError::BoundExceeded { dimension, limit, actual } => {
                write!(f, "{dimension} bound exceeded: limit {limit}, got {actual}")
            }
        }
    }
}

impl core::error::Error for GameError {}

/// Whose turn it is and who has won.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GameStatus {
    Ongoing,
    SalomeWin,
    AndjigaWin,
}

/// A partial coloring plus the player to move: one node of the game tree.
///
/// States reachable through the public interface always satisfy every edge
/// constraint between colored endpoints. Values are immutable; applying a move
/// returns a fresh state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameState<'g> {
    graph: &'g SignedGraph,
    params: CircleParams,
    coloring: Vec<Option<u16>>,
    to_move: Player,
}

impl<'g> GameState<'g> {
    /// The empty coloring with `first` to move.
    pub fn new(graph: &'g SignedGraph, params: CircleParams, first: Player) -> GameState<'g> {
        GameState { graph, params, coloring: alloc::vec![None; graph.n()], to_move: first }
    }

    /// Builds a mid-game state, validating every colored adjacent pair.
    pub fn from_coloring(
        graph: &'g SignedGraph,
        params: CircleParams,
        coloring: Vec<Option<u16>>,
        to_move: Player,
    ) -> Result<GameState<'g>, GameError> {
        if coloring.len() != graph.n() {
            return Err(GameError::ColoringLengthMismatch {
                expected: graph.n(),
                got: coloring.len(),
            });
        }
        for (v, c) in coloring.iter().enumerate() {
            if let Some(c) = *c {
                if c >= params.p() {
                    return Err(GameError::PointOutOfRange { point: c, p: params.p() });
                }
                for e in graph.edges().iter().filter(|e| e.u == v || e.v == v) {
                    let w = if e.u == v { e.v } else { e.u };
                    if w < v {
                        continue; // each pair checked once
                    }
                    if let Some(cw) = coloring[w] {
                        let dist = distance(c, cw, params.p());
                        if !edge_satisfied(e.sign, dist, params.d()) {
                            return Err(GameError::EdgeConflict {
                                vertex: v,
                                color: c,
                                neighbor: w,
                                neighbor_color: cw,
                                sign: e.sign,
                                distance: dist,
                                d: params.d(),
                            });
                        }
                    }
                }
            }
        }
        Ok(GameState { graph, params, coloring, to_move })
    }

    pub fn graph(&self) -> &'g SignedGraph {
        self.graph
    }

    pub fn params(&self) -> CircleParams {
        self.params
    }

    pub fn to_move(&self) -> Player {
        self.to_move
    }

    pub fn coloring(&self) -> &[Option<u16>] {
        &self.coloring
    }

    pub fn color_of(&self, v: usize) -> Option<u16> {
        self.coloring.get(v).copied().flatten()
    }

    pub fn colored_count(&self) -> usize {
        self.coloring.iter().filter(|c| c.is_some()).count()
    }

    pub fn is_complete(&self) -> bool {
        self.coloring.iter().all(|c| c.is_some())
    }

    /// Whether coloring vertex `v` with point `c` is legal now: `v` must be
    /// uncolored and every colored neighbor's edge constraint must hold.
    pub fn legal_color(&self, v: usize, c: u16) -> Result<bool, GameError> {
        if v >= self.graph.n() {
            return Err(GameError::VertexOutOfRange { vertex: v, n: self.graph.n() });
        }
        if c >= self.params.p() {
            return Err(GameError::PointOutOfRange { point: c, p: self.params.p() });
        }
        if self.coloring[v].is_some() {
            return Err(GameError::AlreadyColored { vertex: v });
        }
        Ok(self.first_conflict(v, c).is_none())
    }

    fn first_conflict(&self, v: usize, c: u16) -> Option<GameError> {
        for e in self.graph.edges() {
            let w = if e.u == v {
                e.v
            } else if e.v == v {
                e.u
            } else {
                continue;
            };
            if let Some(cw) = self.coloring[w] {
                let dist = distance(c, cw, self.params.p());
                if !edge_satisfied(e.sign, dist, self.params.d()) {
                    return Some(GameError::EdgeConflict {
                        vertex: v,
                        color: c,
                        neighbor: w,
                        neighbor_color: cw,
                        sign: e.sign,
                        distance: dist,
                        d: self.params.d(),
                    });
                }
            }
        }
        None
    }

    /// All legal moves, vertex ascending then color ascending.
    pub fn legal_moves(&self) -> Vec<(usize, u16)> {
        let mut moves = Vec::new();
        for v in 0..self.graph.n() {
            if self.coloring[v].is_some() {
                continue;
            }
            for c in 0..self.params.p() {
                if self.first_conflict(v, c).is_none() {
                    moves.push((v, c));
                }
            }
        }
        moves
    }

    /// Whether some uncolored vertex has no legal color at all.
    pub fn has_dead_vertex(&self) -> bool {
        (0..self.graph.n()).any(|v| {
            self.coloring[v].is_none()
                && (0..self.params.p()).all(|c| self.first_conflict(v, c).is_some())
        })
    }

    /// Plays a move, returning the successor state with the turn flipped.
    /// Illegal moves are rejected with the violated constraint identified.
    pub fn apply(&self, v: usize, c: u16) -> Result<GameState<'g>, GameError> {
        if v >= self.graph.n() {
            return Err(GameError::VertexOutOfRange { vertex: v, n: self.graph.n() });
        }
        if c >= self.params.p() {
            return Err(GameError::PointOutOfRange { point: c, p: self.params.p() });
        }
        if self.coloring[v].is_some() {
            return Err(GameError::AlreadyColored { vertex: v });
        }
        if let Some(conflict) = self.first_conflict(v, c) {
            return Err(conflict);
        }
        let mut next = self.clone();
        next.coloring[v] = Some(c);
        next.to_move = self.to_move.opponent();
        Ok(next)
    }

    /// Game status under the default mover-stuck rule.
    pub fn status(&self) -> GameStatus {
        self.status_with(Rules::MoverStuck)
    }

    /// Game status under an explicit losing-condition variant.
    pub fn status_with(&self, rules: Rules) -> GameStatus {
        if self.is_complete() {
            return GameStatus::SalomeWin;
        }
        let stuck = match rules {
            Rules::MoverStuck => self.legal_moves().is_empty(),
            Rules::DeadVertex => self.has_dead_vertex(),
        };
        if stuck {
            GameStatus::AndjigaWin
        } else {
            GameStatus::Ongoing
        }
    }
}

/// Default vertex cap for [`coloring_exists`].
pub const EXISTS_VERTEX_LIMIT: usize = 12;

/// Whether *some* complete assignment satisfies every edge constraint,
/// ignoring the game entirely. Exhaustive backtracking; a cheap feasibility
/// lower bound for game instances (if no coloring exists, Salome cannot win).
pub fn coloring_exists(g: &SignedGraph, params: CircleParams) -> Result<bool, GameError> {
    coloring_exists_bounded(g, params, EXISTS_VERTEX_LIMIT)
}

pub fn coloring_exists_bounded(
    g: &SignedGraph,
    params: CircleParams,
    max_vertices: usize,
) -> Result<bool, GameError> {
    if g.n() > max_vertices {
        return Err(GameError::BoundExceeded {
            dimension: "vertices",
            limit: max_vertices,
            actual: g.n(),
        });
    }
    let adj = g.adjacency();
    let mut colors: Vec<Option<u16>> = alloc::vec![None; g.n()];
    fn assign(
        v: usize,
        adj: &[Vec<(usize, Sign)>],
        params: CircleParams,
        colors: &mut Vec<Option<u16>>,
    ) -> bool {
        if v == colors.len() {
            return true;
        }
        'colors: for c in 0..params.p() {
            for &(w, s) in &adj[v] {
                if let Some(cw) = colors[w] {
                    if !edge_satisfied(s, distance(c, cw, params.p()), params.d()) {
                        continue 'colors;
                    }
                }
            }
            colors[v] = Some(c);
            if assign(v + 1, adj, params, colors) {
                return true;
            }
            colors[v] = None;
        }
        false
    }
    Ok(assign(0, &adj, params, &mut colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family, SignPattern};
    use crate::graph::SignedGraph;

    fn params(p: u16, d: u16) -> CircleParams {
        CircleParams::new(p, d).unwrap()
    }

    #[test]
    fn circle_params_validation() {
        assert!(CircleParams::new(2, 1).is_ok());
        assert!(CircleParams::new(3, 1).is_ok());
        assert!(CircleParams::new(3, 2).is_err());
        assert!(CircleParams::new(4, 0).is_err());
        assert_eq!(params(6, 2).ratio(), (3, 1));
        assert_eq!(params(10, 4).ratio(), (5, 2));
    }

    #[test]
    fn circular_distance_examples() {
        assert_eq!(circular_distance(0, 0, 6).unwrap(), 0);
        assert_eq!(circular_distance(0, 5, 6).unwrap(), 1);
        assert_eq!(circular_distance(1, 4, 6).unwrap(), 3);
        assert!(circular_distance(6, 0, 6).is_err());
    }

    #[test]
    fn legality_boundary_is_inclusive_for_both_signs() {
        let pos = SignedGraph::new(2, [(0, 1, Sign::Plus)]).unwrap();
        let state = GameState::new(&pos, params(6, 2), Player::Salome);
        let state = state.apply(0, 0).unwrap();
        assert!(state.legal_color(1, 2).unwrap()); // distance exactly d
        assert!(!state.legal_color(1, 1).unwrap()); // too close

        let neg = SignedGraph::new(2, [(0, 1, Sign::Minus)]).unwrap();
        let state = GameState::new(&neg, params(6, 2), Player::Salome);
        let state = state.apply(0, 0).unwrap();
        assert!(state.legal_color(1, 5).unwrap()); // distance 1 <= d
        assert!(state.legal_color(1, 2).unwrap()); // distance exactly d
        assert!(!state.legal_color(1, 3).unwrap()); // distance 3 > d
    }

    #[test]
    fn legal_moves_ordering_and_exclusion() {
        let k2 = SignedGraph::new(2, [(0, 1, Sign::Plus)]).unwrap();
        let fresh = GameState::new(&k2, params(2, 1), Player::Salome);
        assert_eq!(fresh.legal_moves(), alloc::vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        let after = fresh.apply(0, 0).unwrap();
        assert_eq!(after.legal_moves(), alloc::vec![(1, 1)]);

        // Path 0-1-2-3 all positive, coloring (0, -, 1, 0): the middle vertex 1
        // has neighbors holding both colors, so it is absent from the list.
        let p4 = generate(&Family::Path { n: 4 }, &SignPattern::AllPositive).unwrap();
        let state = GameState::from_coloring(
            &p4,
            params(2, 1),
            alloc::vec![Some(0), None, Some(1), Some(0)],
            Player::Salome,
        )
        .unwrap();
        assert!(state.legal_moves().is_empty());
        assert!(state.has_dead_vertex());
        assert_eq!(state.status(), GameStatus::AndjigaWin);
    }

    #[test]
    fn apply_flips_turn_and_rejects_illegal_moves() {
        let k2 = SignedGraph::new(2, [(0, 1, Sign::Plus)]).unwrap();
        let s0 = GameState::new(&k2, params(2, 1), Player::Salome);
        let s1 = s0.apply(0, 0).unwrap();
        assert_eq!(s1.to_move(), Player::Andjiga);
        assert_eq!(s1.color_of(0), Some(0));
        assert_eq!(s0.color_of(0), None); // input unchanged

        assert_eq!(s1.apply(0, 1).unwrap_err(), GameError::AlreadyColored { vertex: 0 });
        let err = s1.apply(1, 0).unwrap_err();
        assert_eq!(
            err,
            GameError::EdgeConflict {
                vertex: 1,
                color: 0,
                neighbor: 0,
                neighbor_color: 0,
                sign: Sign::Plus,
                distance: 0,
                d: 1,
            }
        );
    }

    #[test]
    fn status_cases() {
        let k2 = SignedGraph::new(2, [(0, 1, Sign::Plus)]).unwrap();
        let s = GameState::new(&k2, params(2, 1), Player::Salome);
        assert_eq!(s.status(), GameStatus::Ongoing);
        let s = s.apply(0, 0).unwrap().apply(1, 1).unwrap();
        assert_eq!(s.status(), GameStatus::SalomeWin);

        let empty = SignedGraph::new(0, []).unwrap();
        let s = GameState::new(&empty, params(2, 1), Player::Salome);
        assert_eq!(s.status(), GameStatus::SalomeWin);
    }

    #[test]
    fn from_coloring_rejects_violations() {
        let k2 = SignedGraph::new(2, [(0, 1, Sign::Plus)]).unwrap();
        let err = GameState::from_coloring(
            &k2,
            params(2, 1),
            alloc::vec![Some(0), Some(0)],
            Player::Salome,
        )
        .unwrap_err();
        assert!(matches!(err, GameError::EdgeConflict { .. }));
    }

    #[test]
    fn two_point_circle_is_proper_coloring_on_positive_edges() {
        // p=2, d=1: positive edges need distinct colors, negative edges are
        // unconstrained. Compare against the direct predicate.
        let g = SignedGraph::new(
            4,
            [(0, 1, Sign::Plus), (1, 2, Sign::Minus), (2, 3, Sign::Plus), (0, 3, Sign::Minus)],
        )
        .unwrap();
        let mut rng = crate::rng::SplitMix64::new(7);
        for _ in 0..200 {
            let coloring: Vec<Option<u16>> = (0..4)
                .map(|_| if rng.coin() { Some(rng.below(2) as u16) } else { None })
                .collect();
            let proper = g.edges().iter().all(|e| {
                if e.sign.is_negative() {
                    return true;
                }
                match (coloring[e.u], coloring[e.v]) {
                    (Some(a), Some(b)) => a != b,
                    _ => true,
                }
            });
            let accepted =
                GameState::from_coloring(&g, params(2, 1), coloring.clone(), Player::Salome)
                    .is_ok();
            assert_eq!(proper, accepted, "coloring {coloring:?}");
        }
    }

    #[test]
    fn coloring_exists_examples() {
        let k5_neg = generate(&Family::Complete { n: 5 }, &SignPattern::AllNegative).unwrap();
        assert!(coloring_exists(&k5_neg, params(2, 1)).unwrap());

        // Three mutually antipodal points on a 4-point circle are impossible;
        // double-checked here by a direct triple loop.
        let k3_pos = generate(&Family::Complete { n: 3 }, &SignPattern::AllPositive).unwrap();
        assert!(!coloring_exists(&k3_pos, params(4, 2)).unwrap());
        let mut any = false;
        for a in 0..4u16 {
            for b in 0..4u16 {
                for c in 0..4u16 {
                    any |= distance(a, b, 4) >= 2 && distance(a, c, 4) >= 2 && distance(b, c, 4) >= 2;
                }
            }
        }
        assert!(!any);

        let c4_pos = generate(&Family::Cycle { n: 4 }, &SignPattern::AllPositive).unwrap();
        assert!(coloring_exists(&c4_pos, params(2, 1)).unwrap());

        let big = generate(&Family::Path { n: 13 }, &SignPattern::AllPositive).unwrap();
        assert!(matches!(
            coloring_exists(&big, params(2, 1)).unwrap_err(),
            GameError::BoundExceeded { .. }
        ));
    }

    #[test]
    fn rotation_and_reflection_preserve_legality() {
        let g = SignedGraph::new(
            4,
            [(0, 1, Sign::Plus), (1, 2, Sign::Minus), (2, 3, Sign::Plus), (0, 2, Sign::Minus)],
        )
        .unwrap();
        let pr = params(6, 2);
        let state = GameState::from_coloring(
            &g,
            pr,
            alloc::vec![Some(0), Some(2), Some(1), None],
            Player::Salome,
        )
        .unwrap();
        for t in 0..6u16 {
            for reflect in [false, true] {
                let map = |c: u16| -> u16 {
                    let c = if reflect { (6 - c) % 6 } else { c };
                    (c + t) % 6
                };
                let mapped: Vec<Option<u16>> =
                    state.coloring().iter().map(|c| c.map(map)).collect();
                let mapped_state =
                    GameState::from_coloring(&g, pr, mapped, Player::Salome).unwrap();
                for c in 0..6u16 {
                    assert_eq!(
                        state.legal_color(3, c).unwrap(),
                        mapped_state.legal_color(3, map(c)).unwrap()
                    );
                }
            }
        }
    }
}
