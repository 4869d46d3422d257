//! Property tests for the sign algebra, switching operations, and game rules.

use proptest::prelude::*;

use sgcg_core::{
    canonicalize, count_switching_classes, enumerate_classes_bruteforce, fundamental_cycles,
    is_antibalanced, is_balanced, signature_from_mask, spanning_forest, switch,
    switching_equivalent, CircleParams, GameState, GameStatus, Player, Sign, SignedGraph,
    SwitchingFunction, Walk,
};

/// A random signed graph on up to `max_n` vertices.
fn signed_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let count = pairs.len();
        proptest::collection::vec(proptest::option::of(proptest::bool::ANY), count).prop_map(
            move |signs| {
                let edges = pairs.iter().zip(signs).filter_map(|(&(u, v), s)| {
                    s.map(|neg| (u, v, if neg { Sign::Minus } else { Sign::Plus }))
                });
                SignedGraph::new(n, edges).expect("valid by construction")
            },
        )
    })
}

/// A random walk in `g`, as a vertex sequence following edges.
fn random_walk(g: &SignedGraph, start_pick: usize, steps: &[usize]) -> Option<Walk> {
    if g.n() == 0 {
        return None;
    }
    let adj = g.adjacency();
    let mut at = start_pick % g.n();
    let mut vertices = vec![at];
    for &step in steps {
        if adj[at].is_empty() {
            break;
        }
        at = adj[at][step % adj[at].len()].0;
        vertices.push(at);
    }
    Some(Walk::new(vertices))
}

fn vertex_subset(n: usize, mask: u64) -> SwitchingFunction {
    SwitchingFunction::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1))
        .expect("in range")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn walk_and_reverse_have_equal_sign(
        g in signed_graph(7),
        start in 0usize..100,
        steps in proptest::collection::vec(0usize..8, 0..12),
    ) {
        if let Some(walk) = random_walk(&g, start, &steps) {
            let forward = g.walk_sign(&walk).unwrap();
            let backward = g.walk_sign(&walk.reversed()).unwrap();
            prop_assert_eq!(forward, backward);
            prop_assert_eq!(forward * backward, Sign::Plus);
        }
    }

    #[test]
    fn concatenation_multiplies_signs(
        g in signed_graph(7),
        start in 0usize..100,
        steps in proptest::collection::vec(0usize..8, 2..14),
    ) {
        if let Some(walk) = random_walk(&g, start, &steps) {
            let cut = walk.vertices().len() / 2;
            let w1 = Walk::new(walk.vertices()[..=cut].to_vec());
            let w2 = Walk::new(walk.vertices()[cut..].to_vec());
            let joined = w1.concat(&w2).unwrap();
            prop_assert_eq!(joined.vertices(), walk.vertices());
            prop_assert_eq!(
                g.walk_sign(&joined).unwrap(),
                g.walk_sign(&w1).unwrap() * g.walk_sign(&w2).unwrap()
            );
        }
    }

    #[test]
    fn cycle_rank_is_additive_over_disjoint_union(
        a in signed_graph(5),
        b in signed_graph(5),
    ) {
        let offset = a.n();
        let edges = a
            .edges()
            .iter()
            .map(|e| (e.u, e.v, e.sign))
            .chain(b.edges().iter().map(|e| (e.u + offset, e.v + offset, e.sign)));
        let union = SignedGraph::new(a.n() + b.n(), edges).unwrap();
        prop_assert_eq!(union.cycle_rank(), a.cycle_rank() + b.cycle_rank());
    }

    #[test]
    fn switching_preserves_fundamental_cycle_signs(
        g in signed_graph(7),
        mask in 0u64..128,
    ) {
        let zeta = vertex_subset(g.n(), mask);
        let switched = switch(&g, &zeta).unwrap();
        let forest = spanning_forest(&g);
        let cycles = fundamental_cycles(&g, &forest).unwrap();
        for cycle in &cycles {
            prop_assert_eq!(
                g.walk_sign(cycle).unwrap(),
                switched.walk_sign(cycle).unwrap()
            );
        }
    }

    #[test]
    fn switching_equivalence_is_an_equivalence_relation(
        g in signed_graph(6),
        mask_a in proptest::num::u64::ANY,
        mask_b in proptest::num::u64::ANY,
        mask_c in proptest::num::u64::ANY,
    ) {
        let m = g.edge_count();
        let cap = if m == 0 { 1 } else { 1u64 << m };
        let a = signature_from_mask(&g, mask_a % cap);
        let b = signature_from_mask(&g, mask_b % cap);
        let c = signature_from_mask(&g, mask_c % cap);
        // Reflexive.
        prop_assert!(switching_equivalent(&a, &a).unwrap());
        // Symmetric.
        prop_assert_eq!(
            switching_equivalent(&a, &b).unwrap(),
            switching_equivalent(&b, &a).unwrap()
        );
        // Transitive.
        if switching_equivalent(&a, &b).unwrap() && switching_equivalent(&b, &c).unwrap() {
            prop_assert!(switching_equivalent(&a, &c).unwrap());
        }
    }

    #[test]
    fn equivalence_test_agrees_with_switching_orbits(
        g in signed_graph(6),
        mask_a in proptest::num::u64::ANY,
        mask_b in proptest::num::u64::ANY,
    ) {
        let m = g.edge_count();
        let cap = if m == 0 { 1 } else { 1u64 << m };
        let a = signature_from_mask(&g, mask_a % cap);
        let b = signature_from_mask(&g, mask_b % cap);
        // Independent oracle: try all 2^n switchings of `a` directly.
        let mut reachable = false;
        for subset in 0..1u64 << g.n() {
            let zeta = vertex_subset(g.n(), subset);
            if switch(&a, &zeta).unwrap() == b {
                reachable = true;
                break;
            }
        }
        prop_assert_eq!(switching_equivalent(&a, &b).unwrap(), reachable);
    }

    #[test]
    fn balance_witnesses_certify(g in signed_graph(7)) {
        let verdict = is_balanced(&g);
        match verdict.switching() {
            Some(zeta) => {
                prop_assert_eq!(switch(&g, zeta).unwrap().negative_edge_count(), 0);
            }
            None => {
                let cycle = verdict.violating_cycle().unwrap();
                prop_assert!(cycle.is_closed());
                prop_assert_eq!(g.walk_sign(cycle).unwrap(), Sign::Minus);
            }
        }
        let anti = is_antibalanced(&g);
        match anti.switching() {
            Some(zeta) => {
                // Negating then switching by the witness is all-positive.
                prop_assert_eq!(
                    switch(&g.negated(), zeta).unwrap().negative_edge_count(),
                    0
                );
            }
            None => {
                let cycle = anti.violating_cycle().unwrap();
                let sign = g.walk_sign(cycle).unwrap();
                prop_assert_ne!(sign, Sign::from_parity(cycle.len()));
            }
        }
    }

    #[test]
    fn balance_iff_all_positive_cotree(g in signed_graph(7)) {
        let form = canonicalize(&g);
        prop_assert_eq!(form.cotree_signs.len(), g.cycle_rank());
        let all_positive = form.cotree_signs.iter().all(|s| s.is_positive());
        prop_assert_eq!(is_balanced(&g).holds(), all_positive);
    }

    #[test]
    fn class_counts_match_bruteforce(g in signed_graph(5)) {
        let classes = enumerate_classes_bruteforce(&g, 16).unwrap();
        prop_assert_eq!(
            classes.class_count() as u128,
            count_switching_classes(&g).unwrap()
        );
        let total: usize = classes.class_sizes().iter().sum();
        prop_assert_eq!(total as u128, 1u128 << g.edge_count());
    }

    #[test]
    fn rotating_a_legal_state_keeps_it_legal(
        g in signed_graph(6),
        picks in proptest::collection::vec((0usize..64, 0u16..64), 0..6),
        shift in 0u16..8,
        reflect in proptest::bool::ANY,
    ) {
        let params = CircleParams::new(8, 2).unwrap();
        // Random playout to a legal mid-game state.
        let mut state = GameState::new(&g, params, Player::Salome);
        for (vp, cp) in picks {
            let moves = state.legal_moves();
            if moves.is_empty() {
                break;
            }
            let (v, c) = moves[(vp + cp as usize) % moves.len()];
            state = state.apply(v, c).unwrap();
        }
        let p = params.p();
        let map = |c: u16| {
            let c = if reflect { (p - c) % p } else { c };
            (c + shift) % p
        };
        let mapped: Vec<Option<u16>> = state.coloring().iter().map(|c| c.map(map)).collect();
        let mapped_state =
            GameState::from_coloring(&g, params, mapped, state.to_move());
        prop_assert!(mapped_state.is_ok());
        // The move sets correspond under the same mapping.
        let mut ours: Vec<(usize, u16)> = state
            .legal_moves()
            .into_iter()
            .map(|(v, c)| (v, map(c)))
            .collect();
        ours.sort_unstable();
        let mut theirs = mapped_state.unwrap().legal_moves();
        theirs.sort_unstable();
        prop_assert_eq!(ours, theirs);
    }

    #[test]
    fn status_is_absorbing_along_play(
        g in signed_graph(5),
        picks in proptest::collection::vec((0usize..64, 0u16..64), 0..8),
    ) {
        let params = CircleParams::new(4, 1).unwrap();
        let mut state = GameState::new(&g, params, Player::Salome);
        for (vp, cp) in picks {
            match state.status() {
                GameStatus::SalomeWin => {
                    prop_assert!(state.is_complete());
                    break;
                }
                GameStatus::AndjigaWin => {
                    prop_assert!(state.legal_moves().is_empty());
                    break;
                }
                GameStatus::Ongoing => {}
            }
            let moves = state.legal_moves();
            prop_assert!(!moves.is_empty());
            let (v, c) = moves[(vp + cp as usize) % moves.len()];
            // Applying a legal move never produces an invalid state.
            let next = state.apply(v, c).unwrap();
            prop_assert!(GameState::from_coloring(
                &g,
                params,
                next.coloring().to_vec(),
                next.to_move()
            )
            .is_ok());
            state = next;
        }
    }
}
