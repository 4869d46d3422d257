//! Grid drivers: win tables over `(p, d)` ranges and ratio estimates.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use crate::game::{gcd, CircleParams, Player, Rules};
use crate::graph::SignedGraph;
use crate::solver::engine::{solve_game, SolveConfig};
use crate::solver::SolverError;

/// A monotonic time source, injected so the sweep drivers stay portable; the
/// companion crate supplies a real clock, tests can omit one.
pub trait Clock {
    fn now_nanos(&self) -> u64;
}

/// One solved grid cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellOutcome {
    pub salome_wins: bool,
    pub nodes: u64,
    /// Wall time, when a clock was supplied. Excluded from equality-sensitive
    /// output paths since it is not reproducible.
    pub wall_nanos: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WinCell {
    pub p: u16,
    pub d: u16,
    pub result: Result<CellOutcome, SolverError>,
}

/// A grid of solved cells for one graph and move order. Cells are independent;
/// a cell that exceeds the solver bounds carries its error without aborting
/// the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WinTable {
    /// Compact description of the instance.
    pub graph: String,
    pub first: Player,
    pub rules: Rules,
    pub symmetry: bool,
    pub cells: Vec<WinCell>,
}

impl WinTable {
    /// The winner of cell `(p, d)` if it was solved cleanly.
    pub fn winner(&self, p: u16, d: u16) -> Option<bool> {
        self.cells
            .iter()
            .find(|c| c.p == p && c.d == d)
            .and_then(|c| c.result.as_ref().ok().map(|o| o.salome_wins))
    }

    /// Winners only, for table comparisons: `(p, d, salome_wins)` triples.
    pub fn winners(&self) -> Vec<(u16, u16, bool)> {
        self.cells
            .iter()
            .filter_map(|c| c.result.as_ref().ok().map(|o| (c.p, c.d, o.salome_wins)))
            .collect()
    }
}

/// Solves every valid cell (`p >= 2d`) of the given ranges, d-major order.
pub fn win_table(
    g: &SignedGraph,
    p_range: RangeInclusive<u16>,
    d_range: RangeInclusive<u16>,
    first: Player,
    cfg: &SolveConfig,
    clock: Option<&dyn Clock>,
) -> WinTable {
    let mut cells = Vec::new();
    for d in d_range {
        for p in p_range.clone() {
            let Ok(params) = CircleParams::new(p, d) else { continue };
            let started = clock.map(|c| c.now_nanos());
            let result = solve_game(g, params, first, cfg).map(|o| CellOutcome {
                salome_wins: o.salome_wins,
                nodes: o.nodes,
                wall_nanos: started.map(|s| clock.unwrap().now_nanos().saturating_sub(s)),
            });
            cells.push(WinCell { p, d, result });
        }
    }
    WinTable {
        graph: g.compact_string(),
        first,
        rules: cfg.rules,
        symmetry: cfg.symmetry,
        cells,
    }
}

/// A nonnegative rational in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Ratio {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Ratio { num: num / g, den: den / g }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Ratio) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Ratio) -> core::cmp::Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// The winning set for one separation value `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiRow {
    pub d: u16,
    /// All `p` in `2d ..= p_max` where Salome wins `(p, d)`.
    pub winning: Vec<u16>,
    /// Whether the winning set is upward closed within the scanned range.
    /// Winning in `p` is not assumed monotone; a false here flags that the
    /// minimum of the row is not the full story.
    pub monotone: bool,
}

/// A truncated-grid estimate of the game's critical ratio: for each `d` up to
/// `d_max`, the winning set within `p <= p_max`, and the supremum over `d` of
/// the per-row minimum ratio `p/d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiEstimate {
    pub first: Player,
    pub d_max: u16,
    pub p_max: u16,
    pub rows: Vec<ChiRow>,
    /// `max_d min { p/d : Salome wins (p, d) }` over rows with nonempty
    /// winning sets; `None` when every row is empty.
    pub estimate: Option<Ratio>,
    /// Some row had an empty winning set within range, so the estimate is
    /// only a lower bound on the grid.
    pub truncated: bool,
    /// All rows monotone.
    pub monotone: bool,
}

/// Scans the full grid `d <= d_max`, `2d <= p <= p_max` without assuming
/// monotonicity in `p`, and reports per-row winning sets plus the sup-of-min
/// ratio estimate with explicit truncation flags.
pub fn chi_estimate(
    g: &SignedGraph,
    d_max: u16,
    p_max: u16,
    first: Player,
    cfg: &SolveConfig,
) -> Result<ChiEstimate, SolverError> {
    let mut rows = Vec::new();
    for d in 1..=d_max {
        let mut winning = Vec::new();
        for p in 2 * d..=p_max {
            let params = CircleParams::new(p, d).expect("p >= 2d by construction");
            if solve_game(g, params, first, cfg)?.salome_wins {
                winning.push(p);
            }
        }
        let monotone = match winning.first() {
            None => true,
            Some(&lo) => winning.len() as u16 == p_max - lo + 1,
        };
        rows.push(ChiRow { d, winning, monotone });
    }
    let estimate = rows
        .iter()
        .filter_map(|r| r.winning.first().map(|&p| Ratio::new(p as u64, r.d as u64)))
        .max();
    let truncated = rows.iter().any(|r| r.winning.is_empty());
    let monotone = rows.iter().all(|r| r.monotone);
    Ok(ChiEstimate { first, d_max, p_max, rows, estimate, truncated, monotone })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family, SignPattern};

    #[test]
    fn win_table_k2_is_all_salome() {
        let k2 = generate(&Family::Path { n: 2 }, &SignPattern::AllPositive).unwrap();
        let table = win_table(&k2, 2..=4, 1..=1, Player::Salome, &SolveConfig::default(), None);
        assert_eq!(table.cells.len(), 3);
        assert!(table.winners().iter().all(|&(_, _, w)| w));
        assert!(table.cells.iter().all(|c| c.result.as_ref().unwrap().wall_nanos.is_none()));
    }

    #[test]
    fn win_table_trivial_graphs() {
        let empty = generate(&Family::Path { n: 0 }, &SignPattern::AllPositive).unwrap();
        let table = win_table(&empty, 2..=6, 1..=3, Player::Salome, &SolveConfig::default(), None);
        assert!(table.winners().iter().all(|&(_, _, w)| w));
        // Invalid cells (p < 2d) are skipped entirely.
        assert!(table.cells.iter().all(|c| c.p >= 2 * c.d));

        let k1 = generate(&Family::Path { n: 1 }, &SignPattern::AllPositive).unwrap();
        let table = win_table(&k1, 2..=6, 1..=2, Player::Andjiga, &SolveConfig::default(), None);
        assert!(table.winners().iter().all(|&(_, _, w)| w));
    }

    #[test]
    fn per_cell_errors_do_not_abort_the_table() {
        let k2 = generate(&Family::Path { n: 2 }, &SignPattern::AllPositive).unwrap();
        let cfg = SolveConfig { max_points: 3, ..SolveConfig::default() };
        let table = win_table(&k2, 2..=5, 1..=1, Player::Salome, &cfg, None);
        assert_eq!(table.cells.len(), 4);
        assert!(table.cells[0].result.is_ok());
        assert!(table.cells[3].result.is_err());
    }

    #[test]
    fn ratio_ordering_and_reduction() {
        assert_eq!(Ratio::new(4, 2), Ratio::new(2, 1));
        assert!(Ratio::new(7, 3) > Ratio::new(2, 1));
        assert!(Ratio::new(5, 2) < Ratio::new(8, 3));
        assert_eq!(alloc::format!("{}", Ratio::new(8, 4)), "2");
        assert_eq!(alloc::format!("{}", Ratio::new(7, 3)), "7/3");
    }

    #[test]
    fn chi_of_a_single_positive_edge_is_two() {
        let k2 = generate(&Family::Path { n: 2 }, &SignPattern::AllPositive).unwrap();
        let est = chi_estimate(&k2, 3, 12, Player::Salome, &SolveConfig::default()).unwrap();
        assert_eq!(est.estimate, Some(Ratio::new(2, 1)));
        assert!(!est.truncated);
        assert!(est.monotone);
    }

    #[test]
    fn chi_of_all_negative_triangle_is_two() {
        let c3 = generate(&Family::Cycle { n: 3 }, &SignPattern::AllNegative).unwrap();
        let est = chi_estimate(&c3, 3, 12, Player::Salome, &SolveConfig::default()).unwrap();
        assert_eq!(est.estimate, Some(Ratio::new(2, 1)));
    }

    #[test]
    fn chi_of_positive_p4_exceeds_two() {
        let p4 = generate(&Family::Path { n: 4 }, &SignPattern::AllPositive).unwrap();
        let est = chi_estimate(&p4, 2, 8, Player::Salome, &SolveConfig::default()).unwrap();
        let estimate = est.estimate.unwrap();
        assert!(estimate > Ratio::new(2, 1), "estimate {estimate}");
        // The ratio-2 cell at d=1 is lost.
        assert!(!est.rows[0].winning.contains(&2));
    }
}
