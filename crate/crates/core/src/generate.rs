//! Deterministic generators for the standard instance families.

use alloc::vec::Vec;

use crate::graph::{GraphError, SignedGraph};
use crate::rng::SplitMix64;
use crate::sign::Sign;

/// An underlying-graph family together with its size parameters.
///
/// Edge generation order (the order a [`SignPattern::Pattern`] list is applied
/// in) is fixed per family:
/// * `Path`: consecutive, `(0,1), (1,2), ...`
/// * `Cycle`: consecutive, closing with `(n-1, 0)`
/// * `Complete`: lexicographic pairs `(0,1), (0,2), ..., (n-2, n-1)`
/// * `CompleteBipartite`: left vertices `0..left`, right `left..left+right`,
///   pairs in lexicographic order
/// * `RandomTree`: vertex `i` (for `i >= 1`) attaches to a seeded-random
///   earlier vertex; edges in attachment order
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { left: usize, right: usize },
    RandomTree { n: usize, seed: u64 },
}

impl Family {
    fn unsigned_edges(&self) -> Result<(usize, Vec<(usize, usize)>), GraphError> {
        match *self {
            Family::Path { n } => {
                let edges = (1..n).map(|i| (i - 1, i)).collect();
                Ok((n, edges))
            }
            Family::Cycle { n } => {
                if n < 3 {
                    return Err(GraphError::InvalidFamilySize { family: "cycle", size: n, min: 3 });
                }
                let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                edges.push((n - 1, 0));
                Ok((n, edges))
            }
            Family::Complete { n } => {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
                Ok((n, edges))
            }
            Family::CompleteBipartite { left, right } => {
                let mut edges = Vec::new();
                for u in 0..left {
                    for v in 0..right {
                        edges.push((u, left + v));
                    }
                }
                Ok((left + right, edges))
            }
            Family::RandomTree { n, seed } => {
                let mut rng = SplitMix64::new(seed);
                let edges = (1..n).map(|i| (rng.below(i as u64) as usize, i)).collect();
                Ok((n, edges))
            }
        }
    }
}

/// How the generated edges are signed, in the family's documented edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignPattern {
    AllPositive,
    AllNegative,
    Pattern(Vec<Sign>),
    Random { seed: u64 },
}

/// Builds an instance of `family` signed by `pattern`.
///
/// Deterministic for fixed seeds. The returned graph is normalized like any
/// other [`SignedGraph`], so the stored edge order may differ from the
/// generation order the pattern was applied in.
pub fn generate(family: &Family, pattern: &SignPattern) -> Result<SignedGraph, GraphError> {
    let (n, unsigned) = family.unsigned_edges()?;
    let signs: Vec<Sign> = match pattern {
        SignPattern::AllPositive => alloc::vec![Sign::Plus; unsigned.len()],
        SignPattern::AllNegative => alloc::vec![Sign::Minus; unsigned.len()],
        SignPattern::Pattern(list) => {
            if list.len() != unsigned.len() {
                return Err(GraphError::PatternLengthMismatch {
                    expected: unsigned.len(),
                    got: list.len(),
                });
            }
            list.clone()
        }
        SignPattern::Random { seed } => {
            let mut rng = SplitMix64::new(*seed);
            (0..unsigned.len()).map(|_| rng.sign()).collect()
        }
    };
    let edges = unsigned
        .into_iter()
        .zip(signs)
        .map(|((u, v), s)| (u, v, s));
    SignedGraph::new(n, edges)
}
