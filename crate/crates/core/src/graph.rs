//! The signed-graph data model: vertices, signed edges, walks, and the sign
//! algebra over them.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use crate::sign::Sign;

/// A single undirected signed edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

/// An undirected simple graph on vertices `0..n` with a sign on every edge.
///
/// Construction validates the simple-graph invariants (no self-loops, no
/// parallel edges, endpoints in range) and normalizes the edge list to
/// `(min, max)` pairs in sorted order, so two equal graphs are structurally
/// identical. Values are immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
}

/// Errors from graph construction and walk evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    NotAnEdge { u: usize, v: usize },
    EmptyWalk,
    PatternLengthMismatch { expected: usize, got: usize },
    InvalidFamilySize { family: &'static str, size: usize, min: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => {
                write!(f, "duplicate edge on the unordered pair {{{u}, {v}}}")
            }
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            GraphError::NotAnEdge { u, v } => write!(f, "{u} and {v} are not adjacent"),
            GraphError::EmptyWalk => write!(f, "a walk must visit at least one vertex"),
            GraphError::PatternLengthMismatch { expected, got } => {
                write!(f, "sign pattern has {got} entries but the family has {expected} edges")
            }
            GraphError::InvalidFamilySize { family, size, min } => {
                write!(f, "family `{family}` needs at least {min} vertices, got {size}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

impl SignedGraph {
    /// Builds a validated graph from an arbitrary edge list.
    ///
    /// Edges are normalized to `(min(u,v), max(u,v), sign)` and sorted; a pair
    /// appearing twice is rejected regardless of the signs involved.
    pub fn new<I>(n: usize, edges: I) -> Result<SignedGraph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut list: Vec<Edge> = Vec::new();
        for (u, v, sign) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            let (u, v) = if u < v { (u, v) } else { (v, u) };
            list.push(Edge { u, v, sign });
        }
        list.sort_unstable();
        for pair in list.windows(2) {
            if pair[0].u == pair[1].u && pair[0].v == pair[1].v {
                return Err(GraphError::DuplicateEdge { u: pair[0].u, v: pair[0].v });
            }
        }
        Ok(SignedGraph { n, edges: list })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The normalized, sorted edge list.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn positive_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign.is_positive()).count()
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign.is_negative()).count()
    }

    /// The sign of the edge `{u, v}`, or `None` if the pair is not adjacent.
    pub fn edge_sign(&self, u: usize, v: usize) -> Option<Sign> {
        if u == v {
            return None;
        }
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        self.edges
            .binary_search_by(|e| (e.u, e.v).cmp(&(u, v)))
            .ok()
            .map(|i| self.edges[i].sign)
    }

    /// Position of edge `{u, v}` in the normalized edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search_by(|e| (e.u, e.v).cmp(&(u, v))).ok()
    }

    /// Materializes adjacency lists; neighbors are listed in ascending order.
    pub fn adjacency(&self) -> Vec<Vec<(usize, Sign)>> {
        let mut adj = alloc::vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }

    /// Per-vertex connected-component ids, numbered by lowest contained vertex.
    pub fn component_ids(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut comp = alloc::vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = Vec::new();
        for root in 0..self.n {
            if comp[root] != usize::MAX {
                continue;
            }
            comp[root] = next;
            queue.push(root);
            while let Some(v) = queue.pop() {
                for &(w, _) in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Number of connected components (an empty graph has zero).
    pub fn component_count(&self) -> usize {
        self.component_ids().iter().map(|&c| c + 1).max().unwrap_or(0)
    }

    /// Cycle rank `|E| - |V| + components`: the dimension of the cycle space.
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + self.component_count() - self.n
    }

    /// The same graph with every edge sign negated.
    pub fn negated(&self) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { u: e.u, v: e.v, sign: -e.sign })
            .collect();
        SignedGraph { n: self.n, edges }
    }

    /// The underlying graph: same edges, all signs positive.
    pub fn all_positive(&self) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { u: e.u, v: e.v, sign: Sign::Plus })
            .collect();
        SignedGraph { n: self.n, edges }
    }

    /// Whether `other` has the same vertices and the same unordered edge set,
    /// ignoring signs.
    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.n == other.n
            && self.edges.len() == other.edges.len()
            && self
                .edges
                .iter()
                .zip(other.edges.iter())
                .all(|(a, b)| a.u == b.u && a.v == b.v)
    }

    /// The sign of a walk: the product of the signs of its edges.
    ///
    /// A length-0 walk (a single vertex) has sign `+1`. Fails if the walk uses
    /// a vertex pair that is not an edge of this graph.
    pub fn walk_sign(&self, walk: &Walk) -> Result<Sign, GraphError> {
        let vs = walk.vertices();
        if vs.is_empty() {
            return Err(GraphError::EmptyWalk);
        }
        for &v in vs {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let mut sign = Sign::Plus;
        for pair in vs.windows(2) {
            match self.edge_sign(pair[0], pair[1]) {
                Some(s) => sign *= s,
                None => return Err(GraphError::NotAnEdge { u: pair[0], v: pair[1] }),
            }
        }
        Ok(sign)
    }

    /// A compact single-line description, e.g. `4: 0-1+ 1-2- 2-3+`.
    pub fn compact_string(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "{}:", self.n);
        for e in &self.edges {
            let _ = write!(s, " {}-{}{}", e.u, e.v, e.sign);
        }
        s
    }
}

/// A walk: a vertex sequence in which each consecutive pair must be an edge.
///
/// Validity is relative to a graph and is checked by [`SignedGraph::walk_sign`]
/// and friends; the type itself only holds the sequence. A closed walk repeats
/// its first vertex at the end.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Walk {
    vertices: Vec<usize>,
}

impl Walk {
    pub fn new(vertices: Vec<usize>) -> Walk {
        Walk { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges traversed.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.len() >= 2 && self.vertices.first() == self.vertices.last()
    }

    pub fn reversed(&self) -> Walk {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Walk { vertices }
    }

    /// Concatenation; requires this walk to end where `other` starts.
    pub fn concat(&self, other: &Walk) -> Option<Walk> {
        if self.vertices.last() != other.vertices.first() {
            return None;
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        Some(Walk { vertices })
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, "-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> SignedGraph {
        SignedGraph::new(2, [(0, 1, Sign::Plus)]).unwrap()
    }

    #[test]
    fn builds_k2() {
        let g = k2();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edge_sign(1, 0), Some(Sign::Plus));
    }

    #[test]
    fn builds_signed_triangle() {
        let g = SignedGraph::new(3, [(0, 1, Sign::Plus), (1, 2, Sign::Plus), (0, 2, Sign::Minus)])
            .unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edge_sign(2, 0), Some(Sign::Minus));
        assert_eq!(g.cycle_rank(), 1);
    }

    #[test]
    fn rejects_duplicate_unordered_pair() {
        let err = SignedGraph::new(3, [(0, 1, Sign::Plus), (1, 0, Sign::Minus)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge { u: 0, v: 1 });
    }

    #[test]
    fn rejects_self_loop_and_out_of_range() {
        assert_eq!(
            SignedGraph::new(3, [(1, 1, Sign::Plus)]).unwrap_err(),
            GraphError::SelfLoop { vertex: 1 }
        );
        assert_eq!(
            SignedGraph::new(2, [(0, 2, Sign::Plus)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 2, n: 2 }
        );
    }

    #[test]
    fn edge_list_is_normalized() {
        let g = SignedGraph::new(3, [(2, 1, Sign::Minus), (1, 0, Sign::Plus)]).unwrap();
        let pairs: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(pairs, alloc::vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn walk_signs_multiply() {
        // Path with signs +, -, - : products are +1, and a single leading - gives -1.
        let g = SignedGraph::new(
            4,
            [(0, 1, Sign::Plus), (1, 2, Sign::Minus), (2, 3, Sign::Minus)],
        )
        .unwrap();
        assert_eq!(g.walk_sign(&Walk::new(alloc::vec![0, 1, 2, 3])).unwrap(), Sign::Plus);
        assert_eq!(g.walk_sign(&Walk::new(alloc::vec![1, 2, 3])).unwrap(), Sign::Plus);
        assert_eq!(g.walk_sign(&Walk::new(alloc::vec![2, 1, 0])).unwrap(), Sign::Minus * Sign::Plus * Sign::Plus);
        // All-plus walk.
        let h = SignedGraph::new(
            4,
            [(0, 1, Sign::Plus), (1, 2, Sign::Plus), (2, 3, Sign::Plus)],
        )
        .unwrap();
        assert_eq!(h.walk_sign(&Walk::new(alloc::vec![0, 1, 2, 3])).unwrap(), Sign::Plus);
    }

    #[test]
    fn length_zero_walk_is_positive() {
        let g = k2();
        assert_eq!(g.walk_sign(&Walk::new(alloc::vec![1])).unwrap(), Sign::Plus);
    }

    #[test]
    fn walk_rejects_non_edges() {
        let g = SignedGraph::new(3, [(0, 1, Sign::Plus)]).unwrap();
        assert_eq!(
            g.walk_sign(&Walk::new(alloc::vec![0, 2])).unwrap_err(),
            GraphError::NotAnEdge { u: 0, v: 2 }
        );
        assert_eq!(g.walk_sign(&Walk::new(alloc::vec![])).unwrap_err(), GraphError::EmptyWalk);
    }

    #[test]
    fn cycle_rank_examples() {
        // A tree has rank 0.
        let tree = SignedGraph::new(4, [(0, 1, Sign::Plus), (1, 2, Sign::Plus), (1, 3, Sign::Plus)])
            .unwrap();
        assert_eq!(tree.cycle_rank(), 0);
        // C4 has rank 1.
        let c4 = SignedGraph::new(
            4,
            [(0, 1, Sign::Plus), (1, 2, Sign::Plus), (2, 3, Sign::Plus), (0, 3, Sign::Plus)],
        )
        .unwrap();
        assert_eq!(c4.cycle_rank(), 1);
        // Two disjoint triangles: rank 2.
        let two = SignedGraph::new(
            6,
            [
                (0, 1, Sign::Plus),
                (1, 2, Sign::Plus),
                (0, 2, Sign::Plus),
                (3, 4, Sign::Plus),
                (4, 5, Sign::Plus),
                (3, 5, Sign::Plus),
            ],
        )
        .unwrap();
        assert_eq!(two.component_count(), 2);
        assert_eq!(two.cycle_rank(), 2);
    }

    #[test]
    fn compact_string_is_stable() {
        let g = SignedGraph::new(3, [(2, 0, Sign::Minus), (0, 1, Sign::Plus)]).unwrap();
        assert_eq!(g.compact_string(), "3: 0-1+ 0-2-");
    }
}
