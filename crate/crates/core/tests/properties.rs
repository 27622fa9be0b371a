mod common;

use adhoc_broadcast::edge_list::{parse_edge_list, serialize_edge_list};
use adhoc_broadcast::generate::gen_random_geometric;
use adhoc_broadcast::oracle::{min_forward_set, min_set_cover, DEFAULT_MAX_NODES};
use adhoc_broadcast::prob::{
    apply_forward, coverage_count, run_prob_broadcast, select_forward, ProbEvent, ProbState,
};
use adhoc_broadcast::pruning::{dp_universe, greedy_cover, tdp_universe, CoverProblem};
use adhoc_broadcast::sim::{evaluate, run_algorithm, Algorithm};
use adhoc_broadcast::{Graph, NodeId, NodeSet};
use common::{bfs_delivery, dominates, graph_from_mask, induces_connected, pair_count, set};
use proptest::prelude::*;

fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, bits)| {
        let pairs = pair_count(n);
        let mask = if pairs >= 64 {
            bits
        } else {
            bits & ((1u64 << pairs) - 1)
        };
        graph_from_mask(n, mask)
    })
}

fn connected_graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    graphs(max_n).prop_filter("connected", Graph::is_connected)
}

fn graph_and_source(max_n: usize, connected: bool) -> impl Strategy<Value = (Graph, NodeId)> {
    let g = if connected {
        connected_graphs(max_n).boxed()
    } else {
        graphs(max_n).boxed()
    };
    g.prop_flat_map(|g| {
        let n = g.node_count();
        (Just(g), (0..n).prop_map(NodeId))
    })
}

fn cover_problems() -> impl Strategy<Value = CoverProblem> {
    (
        prop::collection::btree_set(0usize..12, 0..10),
        prop::collection::vec(prop::collection::btree_set(0usize..12, 0..6), 0..10),
    )
        .prop_map(|(universe, subsets)| {
            CoverProblem::new(
                set(universe),
                subsets
                    .into_iter()
                    .enumerate()
                    .map(|(i, s)| (NodeId(100 + i), set(s))),
            )
        })
}

fn max_coverage_choice(g: &Graph, acting: NodeId, state: &ProbState) -> Option<NodeId> {
    let mut best: Option<(usize, NodeId)> = None;
    for i in g.neighbors(acting).iter() {
        if state.prob(i).is_infinite() {
            continue;
        }
        let n = coverage_count(g, i, acting, state.uncovered()).unwrap();
        if n > 0 && best.is_none_or(|(bn, _)| n > bn) {
            best = Some((n, i));
        }
    }
    best.map(|(_, i)| i)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn neighborhoods_nest_and_are_symmetric(g in graphs(9)) {
        for u in g.nodes() {
            let closed = g.closed_neighbors(u).unwrap();
            prop_assert!(closed.contains(u));
            prop_assert!(closed.is_subset(&g.two_hop_neighbors(u).unwrap()));
            for v in g.nodes() {
                if u != v {
                    prop_assert_eq!(closed.contains(v), g.closed_neighbors(v).unwrap().contains(u));
                }
            }
        }
    }

    #[test]
    fn edge_list_round_trip(g in graphs(10)) {
        let text = serialize_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_edge_list(&back), text);
    }

    #[test]
    fn geometric_generation_is_pure(n in 1usize..40, r in 0.01f64..1.6, seed in any::<u64>()) {
        let a = gen_random_geometric(n, r, seed).unwrap();
        prop_assert_eq!(&a, &gen_random_geometric(n, r, seed).unwrap());
        if r >= std::f64::consts::SQRT_2 {
            prop_assert_eq!(a.edge_count(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn greedy_cover_contract(p in cover_problems()) {
        let out = greedy_cover(&p);
        let coverable = p.candidates().iter().fold(NodeSet::new(), |acc, (_, s)| acc.union(s));
        prop_assert_eq!(&out.covered, &coverable);
        prop_assert_eq!(out.partial, !p.universe().is_subset(&coverable));
        prop_assert_eq!(&out, &greedy_cover(&p));

        // replay: every pick strictly grows coverage and is a largest
        // residual, with the smallest id among equals
        let mut z = NodeSet::new();
        for (step, chosen) in out.forwards.iter().enumerate() {
            let residual = |id: NodeId| {
                p.candidates().iter().find(|(c, _)| *c == id).unwrap().1.difference(&z).len()
            };
            let gain = residual(chosen);
            prop_assert!(gain > 0);
            prop_assert_eq!(gain, out.gains[step]);
            for (c, _) in p.candidates() {
                if out.forwards.nodes()[..step].contains(c) || *c == chosen {
                    continue;
                }
                let other = residual(*c);
                prop_assert!(other < gain || (other == gain && *c > chosen));
            }
            let s = &p.candidates().iter().find(|(c, _)| *c == chosen).unwrap().1;
            z.extend_from(s);
        }
    }

    #[test]
    fn greedy_cover_is_never_below_the_exact_optimum(p in cover_problems()) {
        let subsets: Vec<NodeSet> = p.candidates().iter().map(|(_, s)| s.clone()).collect();
        let exact = min_set_cover(p.universe(), &subsets, 20).unwrap();
        let greedy = greedy_cover(&p);
        prop_assert_eq!(exact.feasible, !greedy.partial);
        if exact.feasible {
            prop_assert!(greedy.forwards.len() >= exact.optimum_size);
            let union = exact.witness.iter().fold(NodeSet::new(), |acc, &i| acc.union(&subsets[i]));
            prop_assert!(p.universe().is_subset(&union));
        }
    }

    #[test]
    fn greedy_is_optimal_on_singletons(universe in prop::collection::btree_set(0usize..10, 0..8),
                                      extra in prop::collection::vec(0usize..10, 0..8)) {
        let mut singles: Vec<usize> = universe.iter().copied().chain(extra).collect();
        singles.sort();
        singles.dedup();
        let p = CoverProblem::new(
            set(universe.iter().copied()),
            singles.iter().enumerate().map(|(i, &x)| (NodeId(i), set([x]))),
        );
        let subsets: Vec<NodeSet> = p.candidates().iter().map(|(_, s)| s.clone()).collect();
        let exact = min_set_cover(p.universe(), &subsets, 20).unwrap();
        prop_assert_eq!(greedy_cover(&p).forwards.len(), exact.optimum_size);
    }

    #[test]
    fn tdp_universe_is_contained_in_dp_universe(g in graphs(9)) {
        for (u, v) in g.edges() {
            for (a, b) in [(u, v), (v, u)] {
                let tdp = tdp_universe(&g, Some(a), b).unwrap();
                prop_assert!(tdp.is_subset(&dp_universe(&g, Some(a), b).unwrap()));
            }
        }
    }

    #[test]
    fn prob_broadcast_invariants((g, s) in graph_and_source(9, false)) {
        let r = run_prob_broadcast(&g, s).unwrap();
        prop_assert_eq!(&r, &run_prob_broadcast(&g, s).unwrap());
        prop_assert_eq!(r.forward_sequence[0], s);

        let mut seen = NodeSet::new();
        for (i, &f) in r.forward_sequence.iter().enumerate() {
            prop_assert!(seen.insert(f), "duplicate forward {}", f);
            if i > 0 {
                prop_assert!(r.forward_sequence[..i].iter().any(|&e| g.has_edge(e, f)));
            }
        }
        let transmitters: NodeSet = r.forward_sequence.iter().copied().collect();
        prop_assert!(induces_connected(&g, &transmitters));
        prop_assert!(dominates(&g, &transmitters, &r.delivered));

        let reachable = g.reachable_from(s).unwrap();
        prop_assert_eq!(r.fully_covered, reachable.len() == g.node_count());
        prop_assert_eq!(&r.delivered, &reachable);

        // uncovered strictly shrinks; infinity is absorbing
        let mut last = r.initial_uncovered.len();
        let mut absorbed = NodeSet::new();
        for e in &r.events {
            match e {
                ProbEvent::Covered { covered, uncovered_after, .. } => {
                    prop_assert!(!covered.is_empty());
                    prop_assert!(uncovered_after.len() < last);
                    last = uncovered_after.len();
                }
                ProbEvent::Scored { scores, .. } => {
                    for sc in scores {
                        prop_assert!(!absorbed.contains(sc.node));
                        if sc.probability.is_infinite() {
                            absorbed.insert(sc.node);
                        } else {
                            prop_assert_eq!(sc.probability, 1.0 / sc.coverage as f64);
                        }
                    }
                }
                ProbEvent::Delegated { .. } => {}
            }
            if let ProbEvent::Covered { forward, .. } = e {
                absorbed.insert(*forward);
            }
        }
    }

    #[test]
    fn min_probability_equals_max_coverage((g, s) in graph_and_source(9, true)) {
        let mut state = ProbState::new(&g, s).unwrap();
        loop {
            let expected = max_coverage_choice(&g, s, &state);
            let got = select_forward(&g, s, &mut state);
            prop_assert_eq!(got, expected);
            match got {
                Some(f) => { apply_forward(&g, f, s, &mut state); }
                None => break,
            }
        }
    }

    #[test]
    fn traces_are_valid_and_deterministic((g, s) in graph_and_source(9, false)) {
        let reachable = g.reachable_from(s).unwrap();
        let flood = evaluate(&run_algorithm(&g, s, Algorithm::Flood).unwrap(), &g).unwrap();
        prop_assert_eq!(flood.transmission_count, reachable.len());
        for alg in Algorithm::ALL {
            let t = run_algorithm(&g, s, alg).unwrap();
            prop_assert!(t.check_invariants().is_ok(), "{}: {:?}", alg, t.check_invariants());
            prop_assert_eq!(t.serialize(), run_algorithm(&g, s, alg).unwrap().serialize());
            let m = evaluate(&t, &g).unwrap();
            prop_assert_eq!(m.coverage_ratio, 1.0, "{}", alg);
            prop_assert_eq!(m.transmission_count, m.forward_count + 1);
            prop_assert!(m.transmission_count <= flood.transmission_count);
            prop_assert_eq!(&bfs_delivery(&g, s, &t.transmitter_set()), &m.delivered);
        }
    }

    #[test]
    fn algorithms_never_beat_the_oracle((g, s) in graph_and_source(7, true)) {
        let best = min_forward_set(&g, s, DEFAULT_MAX_NODES).unwrap();
        let witness: NodeSet = best.witness.iter().map(|&i| NodeId(i)).collect();
        prop_assert_eq!(bfs_delivery(&g, s, &witness).len(), g.node_count());
        for alg in Algorithm::ALL {
            let m = evaluate(&run_algorithm(&g, s, alg).unwrap(), &g).unwrap();
            prop_assert!(m.forward_count >= best.optimum_size, "{}", alg);
        }
    }
}
