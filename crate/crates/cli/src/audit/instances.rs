//! Instance families for the audit suites and the acceptance sweeps:
//! exhaustive labeled enumeration for small vertex counts, and isomorph-free
//! enumeration (one representative per isomorphism class) for the sizes where
//! the labeled space is out of reach.

use sgcg_core::{Sign, SignedGraph};

/// An unsigned instance graph as a normalized edge list.
pub type EdgeList = Vec<(usize, usize)>;

/// Index of the pair `(u, v)` with `u < v` in the lexicographic pair order.
fn pair_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

fn mask_to_edges(n: usize, mask: u64) -> EdgeList {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if mask >> pair_index(u, v) & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    edges
}

#[cfg(test)]
fn edges_to_mask(edges: &[(usize, usize)]) -> u64 {
    let mut mask = 0u64;
    for &(u, v) in edges {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        mask |= 1 << pair_index(u, v);
    }
    mask
}

pub fn is_connected(n: usize, edges: &EdgeList) -> bool {
    if n <= 1 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

pub fn is_bipartite(n: usize, edges: &EdgeList) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut color = vec![-1i8; n];
    for root in 0..n {
        if color[root] >= 0 {
            continue;
        }
        color[root] = 0;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if color[w] < 0 {
                    color[w] = 1 - color[v];
                    stack.push(w);
                } else if color[w] == color[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// All labeled graphs on exactly `n` vertices, optionally connected only.
/// Feasible for `n <= 6` (32768 edge sets at n = 6).
pub fn labeled_graphs(n: usize, connected_only: bool) -> Vec<EdgeList> {
    let pairs = n * (n - 1) / 2;
    assert!(pairs < 22, "labeled enumeration is for small n");
    let mut out = Vec::new();
    for mask in 0..1u64 << pairs {
        let edges = mask_to_edges(n, mask);
        if !connected_only || is_connected(n, &edges) {
            out.push(edges);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Isomorph-free enumeration.
//
// Graphs are generated level by level: every graph on n vertices arises from
// some graph on n-1 vertices by attaching a new vertex with some neighborhood
// (for connected targets this works because every connected graph has a
// non-cut vertex). Duplicates are removed via a canonical edge mask: the
// minimum mask over all vertex relabelings compatible with an iterated
// degree-refinement coloring.
// ---------------------------------------------------------------------------

/// Stable vertex coloring by iterated (color, sorted neighbor colors)
/// signatures. Isomorphism-invariant, so canonical search may restrict to
/// color-preserving relabelings.
fn refine_colors(n: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    let mut color: Vec<usize> = adj.iter().map(|r| r.len()).collect();
    for _ in 0..n {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = adj[v].iter().map(|&w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .drain(..)
            .map(|s| sorted.binary_search(&s).unwrap())
            .collect();
        if next == color {
            break;
        }
        color = next;
    }
    color
}

/// The canonical edge mask: minimum over all color-class-respecting vertex
/// relabelings. Equal masks exactly characterize isomorphic graphs.
pub fn canonical_mask(n: usize, edges: &EdgeList) -> u64 {
    if n <= 1 {
        return 0;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let color = refine_colors(n, &adj);
    // Group vertices by color; classes get consecutive position blocks in
    // color order (the coloring is canonical, so this order is too).
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let class_count = color.iter().max().copied().unwrap_or(0) + 1;
    classes.resize(class_count, Vec::new());
    for v in 0..n {
        classes[color[v]].push(v);
    }
    let mut offsets = Vec::with_capacity(class_count);
    let mut at = 0;
    for class in &classes {
        offsets.push(at);
        at += class.len();
    }

    let mut position = vec![usize::MAX; n];
    let mut best = u64::MAX;
    search(&classes, &offsets, 0, &mut position, edges, &mut best);
    best
}

fn search(
    classes: &[Vec<usize>],
    offsets: &[usize],
    class_idx: usize,
    position: &mut Vec<usize>,
    edges: &EdgeList,
    best: &mut u64,
) {
    if class_idx == classes.len() {
        let mut mask = 0u64;
        for &(u, v) in edges {
            let (pu, pv) = (position[u], position[v]);
            let (pu, pv) = if pu < pv { (pu, pv) } else { (pv, pu) };
            mask |= 1 << pair_index(pu, pv);
        }
        if mask < *best {
            *best = mask;
        }
        return;
    }
    permute_class(classes, offsets, class_idx, 0, &mut vec![false; classes[class_idx].len()], position, edges, best);
}

#[allow(clippy::too_many_arguments)]
fn permute_class(
    classes: &[Vec<usize>],
    offsets: &[usize],
    class_idx: usize,
    slot: usize,
    used: &mut Vec<bool>,
    position: &mut Vec<usize>,
    edges: &EdgeList,
    best: &mut u64,
) {
    let class = &classes[class_idx];
    if slot == class.len() {
        search(classes, offsets, class_idx + 1, position, edges, best);
        return;
    }
    for i in 0..class.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        position[class[i]] = offsets[class_idx] + slot;
        permute_class(classes, offsets, class_idx, slot + 1, used, position, edges, best);
        position[class[i]] = usize::MAX;
        used[i] = false;
    }
}

/// One representative edge list per isomorphism class of graphs on exactly
/// `n` vertices (including disconnected graphs), in a deterministic order.
/// Results are built level by level and cached per call chain via the
/// returned vectors of [`graphs_up_to_iso_by_size`].
pub fn graphs_up_to_iso_by_size(max_n: usize) -> Vec<Vec<EdgeList>> {
    assert!(max_n <= 8, "isomorph-free enumeration is sized for n <= 8");
    let mut levels: Vec<Vec<EdgeList>> = vec![vec![Vec::new()]]; // n = 0
    for n in 1..=max_n {
        let mut seen = std::collections::BTreeSet::new();
        let mut level = Vec::new();
        for parent in &levels[n - 1] {
            for neighborhood in 0..1u64 << (n - 1) {
                let mut edges = parent.clone();
                for w in 0..n - 1 {
                    if neighborhood >> w & 1 == 1 {
                        edges.push((w, n - 1));
                    }
                }
                let canon = canonical_mask(n, &edges);
                if seen.insert(canon) {
                    level.push(mask_to_edges(n, canon));
                }
            }
        }
        levels.push(level);
    }
    levels
}

/// Connected representatives on exactly `n` vertices, up to isomorphism.
pub fn connected_graphs_up_to_iso(levels: &[Vec<EdgeList>], n: usize) -> Vec<EdgeList> {
    levels[n]
        .iter()
        .filter(|e| is_connected(n, e))
        .cloned()
        .collect()
}

/// Tree representatives on exactly `n` vertices, up to isomorphism.
pub fn trees_up_to_iso(levels: &[Vec<EdgeList>], n: usize) -> Vec<EdgeList> {
    levels[n]
        .iter()
        .filter(|e| e.len() + 1 == n.max(1) && is_connected(n, e))
        .cloned()
        .collect()
}

/// Builds the all-positive signed graph over an unsigned instance.
pub fn unsigned(n: usize, edges: &EdgeList) -> SignedGraph {
    SignedGraph::new(n, edges.iter().map(|&(u, v)| (u, v, Sign::Plus)))
        .expect("enumerated instances are valid graphs")
}

/// Orbit of a signature mask under all `2^n` switchings, for the brute-force
/// equivalence oracle: true iff `b` lies in the switching orbit of `a`.
pub fn orbit_equivalent(g: &SignedGraph, a: u64, b: u64) -> bool {
    let n = g.n();
    assert!(n < 32 && g.edge_count() < 64);
    for subset in 0..1u64 << n {
        let mut flipped = a;
        for (i, e) in g.edges().iter().enumerate() {
            let cut = (subset >> e.u ^ subset >> e.v) & 1;
            flipped ^= cut << i;
        }
        if flipped == b {
            return true;
        }
    }
    false
}
