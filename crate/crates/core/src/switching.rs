//! Switching algebra: vertex switchings, balance and antibalance tests with
//! constructive witnesses, spanning-forest canonical forms, fundamental cycle
//! bases, switching-equivalence testing, and class counting/enumeration.
//!
//! Two signatures on the same graph are switching equivalent exactly when they
//! induce the same cycle signs. The canonical form used throughout fixes a
//! deterministic spanning forest (BFS from the lowest-index vertex of each
//! component, neighbors scanned in ascending order), switches all forest edges
//! positive, and reads the class off the residual co-tree sign vector.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{GraphError, SignedGraph, Walk};
use crate::sign::Sign;

/// A vertex subset `U`; switching negates every edge with exactly one endpoint
/// in `U`. Applying the same switching twice restores the original signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingFunction {
    flags: Vec<bool>,
}

impl SwitchingFunction {
    /// The empty switching on `n` vertices (the identity).
    pub fn empty(n: usize) -> SwitchingFunction {
        SwitchingFunction { flags: alloc::vec![false; n] }
    }

    pub fn from_vertices<I>(n: usize, vertices: I) -> Result<SwitchingFunction, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut flags = alloc::vec![false; n];
        for v in vertices {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            flags[v] = true;
        }
        Ok(SwitchingFunction { flags })
    }

    /// Vertex count of the graphs this switching applies to.
    pub fn n(&self) -> usize {
        self.flags.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.flags.get(v).copied().unwrap_or(false)
    }

    /// The switched set as a sorted vertex list.
    pub fn vertices(&self) -> Vec<usize> {
        self.flags
            .iter()
            .enumerate()
            .filter_map(|(v, &f)| f.then_some(v))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.flags.iter().all(|&f| !f)
    }

    /// The value `zeta(v)`: `-1` for switched vertices, `+1` otherwise.
    pub fn value(&self, v: usize) -> Sign {
        if self.contains(v) {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

/// Outcome of a balance-style classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Balanced,
    Antibalanced,
    /// Balanced and antibalanced at once (always the case for forests).
    Both,
    /// The tested property does not hold.
    Unbalanced,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Balanced => write!(f, "balanced"),
            Classification::Antibalanced => write!(f, "antibalanced"),
            Classification::Both => write!(f, "both"),
            Classification::Unbalanced => write!(f, "unbalanced"),
        }
    }
}

/// Certificate attached to a [`BalanceVerdict`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A switching that carries the graph to the canonical signature of the
    /// tested class (all-positive for balance, all-negative for antibalance).
    Switching(SwitchingFunction),
    /// A closed walk whose sign violates the tested property.
    Cycle(Walk),
}

/// Result of a single balance or antibalance test, with a certificate either
/// way: a switching achieving the canonical form on success, or a concrete
/// violating cycle on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceVerdict {
    pub classification: Classification,
    pub witness: Witness,
}

impl BalanceVerdict {
    /// Whether the tested property holds.
    pub fn holds(&self) -> bool {
        self.classification != Classification::Unbalanced
    }

    pub fn switching(&self) -> Option<&SwitchingFunction> {
        match &self.witness {
            Witness::Switching(z) => Some(z),
            Witness::Cycle(_) => None,
        }
    }

    pub fn violating_cycle(&self) -> Option<&Walk> {
        match &self.witness {
            Witness::Cycle(c) => Some(c),
            Witness::Switching(_) => None,
        }
    }
}

/// The spanning-forest canonical form of a signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Spanning-forest edges, normalized and sorted.
    pub forest: Vec<(usize, usize)>,
    /// The switching carrying the input to `canonical`.
    pub switching: SwitchingFunction,
    /// The switched graph: every forest edge is positive.
    pub canonical: SignedGraph,
    /// Signs of the non-forest edges of `canonical`, in normalized edge order.
    /// These equal the signs of the fundamental cycles and have length
    /// `cycle_rank`; they identify the switching class.
    pub cotree_signs: Vec<Sign>,
}

impl CanonicalForm {
    /// The non-forest edges, in the order `cotree_signs` refers to.
    pub fn cotree_edges(&self) -> Vec<(usize, usize)> {
        let forest: alloc::collections::BTreeSet<(usize, usize)> =
            self.forest.iter().copied().collect();
        self.canonical
            .edges()
            .iter()
            .filter(|e| !forest.contains(&(e.u, e.v)))
            .map(|e| (e.u, e.v))
            .collect()
    }
}

/// Errors from switching-module operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SwitchingError {
    SizeMismatch { expected: usize, got: usize },
    UnderlyingMismatch,
    NotASubgraph { u: usize, v: usize },
    ForestHasCycle,
    ForestNotSpanning { expected: usize, got: usize },
    TooManyEdges { limit: usize, got: usize },
    ClassCountOverflow { cycle_rank: usize },
}

impl fmt::Display for SwitchingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SwitchingError::SizeMismatch { expected, got } => {
                write!(f, "switching is over {got} vertices, graph has {expected}")
            }
            SwitchingError::UnderlyingMismatch => {
                write!(f, "the two graphs do not share the same underlying graph")
            }
            SwitchingError::NotASubgraph { u, v } => {
                write!(f, "forest edge {{{u}, {v}}} is not an edge of the graph")
            }
            SwitchingError::ForestHasCycle => write!(f, "the given forest contains a cycle"),
            SwitchingError::ForestNotSpanning { expected, got } => {
                write!(f, "forest has {got} edges, a spanning forest needs {expected}")
            }
            SwitchingError::TooManyEdges { limit, got } => {
                write!(f, "graph has {got} edges, brute-force enumeration is capped at {limit}")
            }
            SwitchingError::ClassCountOverflow { cycle_rank } => {
                write!(f, "2^{cycle_rank} switching classes overflows the exact counter")
            }
        }
    }
}

impl core::error::Error for SwitchingError {}

/// Applies a switching: flips the sign of every edge with exactly one endpoint
/// in the switched set. The underlying graph is unchanged.
pub fn switch(g: &SignedGraph, zeta: &SwitchingFunction) -> Result<SignedGraph, SwitchingError> {
    if zeta.n() != g.n() {
        return Err(SwitchingError::SizeMismatch { expected: g.n(), got: zeta.n() });
    }
    let edges = g.edges().iter().map(|e| {
        let sign = if zeta.contains(e.u) != zeta.contains(e.v) { -e.sign } else { e.sign };
        (e.u, e.v, sign)
    });
    Ok(SignedGraph::new(g.n(), edges).expect("switching preserves graph validity"))
}

/// Deterministic BFS scan of a graph: per-component forests rooted at the
/// lowest-index vertex, neighbors visited in ascending order, plus the sign of
/// the tree path from each vertex to its root.
struct ForestScan {
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    /// Sign of the tree path root -> v (roots get `+`).
    path_sign: Vec<Sign>,
    tree_edges: Vec<(usize, usize)>,
}

fn scan_forest(g: &SignedGraph) -> ForestScan {
    let n = g.n();
    let adj = g.adjacency();
    let mut parent = alloc::vec![None; n];
    let mut depth = alloc::vec![0usize; n];
    let mut path_sign = alloc::vec![Sign::Plus; n];
    let mut seen = alloc::vec![false; n];
    let mut tree_edges = Vec::new();
    let mut queue = alloc::collections::VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &(w, s) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    depth[w] = depth[v] + 1;
                    path_sign[w] = path_sign[v] * s;
                    tree_edges.push(if v < w { (v, w) } else { (w, v) });
                    queue.push_back(w);
                }
            }
        }
    }
    tree_edges.sort_unstable();
    ForestScan { parent, depth, path_sign, tree_edges }
}

/// The deterministic spanning forest used by all canonical-form operations:
/// BFS from the lowest-index vertex of each component, neighbors in ascending
/// order. Returned as a sorted edge list.
pub fn spanning_forest(g: &SignedGraph) -> Vec<(usize, usize)> {
    scan_forest(g).tree_edges
}

/// The fundamental cycle closed by the non-tree edge `{u, v}`: the tree path
/// from `u` to `v` followed by the edge back to `u`.
fn fundamental_cycle(scan: &ForestScan, u: usize, v: usize) -> Walk {
    let mut up_from_u = alloc::vec![u];
    let mut up_from_v = alloc::vec![v];
    let (mut a, mut b) = (u, v);
    while scan.depth[a] > scan.depth[b] {
        a = scan.parent[a].unwrap();
        up_from_u.push(a);
    }
    while scan.depth[b] > scan.depth[a] {
        b = scan.parent[b].unwrap();
        up_from_v.push(b);
    }
    while a != b {
        a = scan.parent[a].unwrap();
        b = scan.parent[b].unwrap();
        up_from_u.push(a);
        up_from_v.push(b);
    }
    // up_from_u ends at the meeting vertex; descend back to v, then close.
    let mut vertices = up_from_u;
    vertices.extend(up_from_v.into_iter().rev().skip(1));
    vertices.push(u);
    Walk::new(vertices)
}

/// Harary balance test: is every cycle positive?
///
/// Runs in linear time: label each vertex with the sign of its tree path in
/// the deterministic spanning forest, then verify every non-tree edge closes a
/// positive fundamental cycle. On success the witness switching carries the
/// graph to the all-positive signature; on failure the witness is a concrete
/// negative cycle. Forests classify as `Both` (they also switch all-negative).
pub fn is_balanced(g: &SignedGraph) -> BalanceVerdict {
    let scan = scan_forest(g);
    let tree: alloc::collections::BTreeSet<(usize, usize)> =
        scan.tree_edges.iter().copied().collect();
    for e in g.edges() {
        if tree.contains(&(e.u, e.v)) {
            continue;
        }
        // Fundamental cycle sign: path(u) * path(v) * sign(uv).
        if (scan.path_sign[e.u] * scan.path_sign[e.v] * e.sign).is_negative() {
            return BalanceVerdict {
                classification: Classification::Unbalanced,
                witness: Witness::Cycle(fundamental_cycle(&scan, e.u, e.v)),
            };
        }
    }
    let switched = (0..g.n()).filter(|&v| scan.path_sign[v].is_negative());
    let zeta = SwitchingFunction::from_vertices(g.n(), switched).expect("vertices in range");
    let classification = if g.cycle_rank() == 0 {
        Classification::Both
    } else {
        Classification::Balanced
    };
    BalanceVerdict { classification, witness: Witness::Switching(zeta) }
}

/// Antibalance test: can the graph be switched to the all-negative signature?
///
/// Equivalent to [`is_balanced`] on the sign-negated graph, which is the
/// classical definition: every cycle `C` must satisfy
/// `sign(C) = (-1)^|C|`. On success the witness switching carries the graph to
/// the all-negative signature; on failure the witness is a cycle violating
/// that condition. Note this is *not* the same as "every cycle is negative":
/// even cycles of an antibalanced graph are positive.
pub fn is_antibalanced(g: &SignedGraph) -> BalanceVerdict {
    let verdict = is_balanced(&g.negated());
    let classification = match verdict.classification {
        Classification::Balanced => Classification::Antibalanced,
        other => other, // Both and Unbalanced carry over unchanged.
    };
    // The witness transfers directly: a switching making the negated graph
    // all-positive makes the original all-negative, and a cycle is a vertex
    // sequence valid in both graphs.
    BalanceVerdict { classification, witness: verdict.witness }
}

/// Joint classification: balanced, antibalanced, both, or unbalanced.
pub fn classify(g: &SignedGraph) -> Classification {
    match (is_balanced(g).holds(), is_antibalanced(g).holds()) {
        (true, true) => Classification::Both,
        (true, false) => Classification::Balanced,
        (false, true) => Classification::Antibalanced,
        (false, false) => Classification::Unbalanced,
    }
}

/// Switches the graph so every edge of the deterministic spanning forest is
/// positive and reads off the co-tree sign vector identifying the class.
pub fn canonicalize(g: &SignedGraph) -> CanonicalForm {
    let scan = scan_forest(g);
    let switched = (0..g.n()).filter(|&v| scan.path_sign[v].is_negative());
    let zeta = SwitchingFunction::from_vertices(g.n(), switched).expect("vertices in range");
    let canonical = switch(g, &zeta).expect("sizes match");
    let tree: alloc::collections::BTreeSet<(usize, usize)> =
        scan.tree_edges.iter().copied().collect();
    let cotree_signs = canonical
        .edges()
        .iter()
        .filter(|e| !tree.contains(&(e.u, e.v)))
        .map(|e| e.sign)
        .collect();
    CanonicalForm { forest: scan.tree_edges, switching: zeta, canonical, cotree_signs }
}

/// One fundamental cycle per co-tree edge of the given spanning forest, in
/// normalized co-tree edge order. Each cycle is the co-tree edge plus the
/// unique forest path between its endpoints, returned as a closed walk.
pub fn fundamental_cycles(
    g: &SignedGraph,
    forest: &[(usize, usize)],
) -> Result<Vec<Walk>, SwitchingError> {
    let n = g.n();
    // Validate: subgraph, acyclic, spanning.
    let mut uf: Vec<usize> = (0..n).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    let mut forest_set = alloc::collections::BTreeSet::new();
    for &(u, v) in forest {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        if g.edge_sign(u, v).is_none() {
            return Err(SwitchingError::NotASubgraph { u, v });
        }
        let (ru, rv) = (find(&mut uf, u), find(&mut uf, v));
        if ru == rv {
            return Err(SwitchingError::ForestHasCycle);
        }
        uf[ru] = rv;
        forest_set.insert((u, v));
    }
    let expected = n - g.component_count();
    if forest_set.len() != expected {
        return Err(SwitchingError::ForestNotSpanning { expected, got: forest_set.len() });
    }
    // A spanning forest of g with the right edge count: BFS it for paths.
    let forest_graph = SignedGraph::new(
        n,
        forest_set.iter().map(|&(u, v)| (u, v, g.edge_sign(u, v).unwrap())),
    )
    .expect("validated subgraph");
    let scan = scan_forest(&forest_graph);
    let cycles = g
        .edges()
        .iter()
        .filter(|e| !forest_set.contains(&(e.u, e.v)))
        .map(|e| fundamental_cycle(&scan, e.u, e.v))
        .collect();
    Ok(cycles)
}

/// Switching-equivalence test over a shared deterministic forest: two
/// signatures on the same underlying graph are equivalent exactly when their
/// canonical co-tree sign vectors agree. Linear time.
pub fn switching_equivalent(g1: &SignedGraph, g2: &SignedGraph) -> Result<bool, SwitchingError> {
    if !g1.same_underlying(g2) {
        return Err(SwitchingError::UnderlyingMismatch);
    }
    Ok(canonicalize(g1).cotree_signs == canonicalize(g2).cotree_signs)
}

/// The exact number of switching classes on the underlying graph:
/// `2^cycle_rank`. Overflow is an error, never a wrap.
pub fn count_switching_classes(g: &SignedGraph) -> Result<u128, SwitchingError> {
    let rank = g.cycle_rank();
    if rank >= 128 {
        return Err(SwitchingError::ClassCountOverflow { cycle_rank: rank });
    }
    Ok(1u128 << rank)
}

/// The partition of all `2^|E|` signatures on the underlying graph of `g`
/// into switching classes, found by brute-force orbit closure.
///
/// Signatures are encoded as bitmasks over the normalized edge list of `g`
/// (bit `i` set means edge `i` is negative); within a class the masks are
/// sorted, and classes are ordered by their smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureClasses {
    pub edge_count: usize,
    pub classes: Vec<Vec<u64>>,
}

impl SignatureClasses {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }
}

/// Default edge cap for [`enumerate_classes_bruteforce`].
pub const BRUTE_FORCE_EDGE_LIMIT: usize = 16;

/// Materializes the signature encoded by `mask` on the underlying graph of `g`
/// (bit `i` set means edge `i` of the normalized edge list is negative).
pub fn signature_from_mask(g: &SignedGraph, mask: u64) -> SignedGraph {
    let edges = g.edges().iter().enumerate().map(|(i, e)| {
        let sign = if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus };
        (e.u, e.v, sign)
    });
    SignedGraph::new(g.n(), edges).expect("same underlying graph")
}

/// Partitions all `2^|E|` signatures on the underlying graph of `g` (signs of
/// `g` itself are ignored) into switching-equivalence classes by closing each
/// signature's orbit under single-vertex switchings.
pub fn enumerate_classes_bruteforce(
    g: &SignedGraph,
    max_edges: usize,
) -> Result<SignatureClasses, SwitchingError> {
    let m = g.edge_count();
    if m > max_edges || m >= 64 {
        return Err(SwitchingError::TooManyEdges { limit: max_edges.min(63), got: m });
    }
    // Switching at a single vertex flips exactly its incident edges.
    let mut incident = alloc::vec![0u64; g.n()];
    for (i, e) in g.edges().iter().enumerate() {
        incident[e.u] |= 1 << i;
        incident[e.v] |= 1 << i;
    }
    let total: u64 = 1 << m;
    let mut seen = alloc::vec![false; total as usize];
    let mut classes = Vec::new();
    let mut stack = Vec::new();
    for start in 0..total {
        if seen[start as usize] {
            continue;
        }
        let mut orbit = Vec::new();
        seen[start as usize] = true;
        stack.push(start);
        while let Some(sig) = stack.pop() {
            orbit.push(sig);
            for &inc in &incident {
                let next = sig ^ inc;
                if !seen[next as usize] {
                    seen[next as usize] = true;
                    stack.push(next);
                }
            }
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    // Orbit starts are scanned in ascending order, so classes are already
    // ordered by smallest member.
    Ok(SignatureClasses { edge_count: m, classes })
}
