mod common;

use proptest::prelude::*;
use risr::engine::{
    adjacent_under, enumerate_d_regular_sets, fast_path, neighbors, oracle_reachable, solve, validate_sequence,
    Instance, Limits, MoveGraph, ReconfigSequence, Rule,
};
use risr::graph::is_triangle_free;
use risr::reductions::{
    blowup_lift, blowup_project, blowup_reduce, blowup_tj_to_ts, pendant_lift, pendant_project, pendant_reduce,
};
use risr::sketch::{exact_bandwidth, lift_ordering, ordering_width, verify_sketch, SketchMapping};
use risr::{are_isomorphic, recognize, Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        (0..1u64 << m).prop_map(move |mask| common::from_mask(n, mask))
    })
}

fn rule() -> impl Strategy<Value = Rule> {
    prop_oneof![Just(Rule::TJ), Just(Rule::TS)]
}

/// The size with the most d-regular sets, and those sets.
fn busiest_size(g: &Graph, d: usize) -> (usize, Vec<VertexSet>) {
    (1..=g.vertex_count())
        .map(|k| (k, enumerate_d_regular_sets(g, d, k).unwrap()))
        .max_by_key(|(k, s)| (s.len(), usize::MAX - k))
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn adjacent_sets_induce_isomorphic_subgraphs(g in graph(7), d in 0usize..3, rule in rule()) {
        let (_, sets) = busiest_size(&g, d);
        for u in &sets {
            let here = g.induced_subgraph(u).unwrap();
            let connected = g.is_connected_set(u).unwrap();
            for w in neighbors(&g, d, rule, u) {
                prop_assert!(are_isomorphic(&here, &g.induced_subgraph(&w).unwrap()).unwrap());
                if connected {
                    prop_assert!(g.is_connected_set(&w).unwrap());
                }
            }
        }
    }

    #[test]
    fn sliding_implies_jumping_and_a_triangle(g in graph(7), d in 0usize..3) {
        let (_, sets) = busiest_size(&g, d);
        for a in &sets {
            for b in &sets {
                let ts = adjacent_under(&g, d, Rule::TS, a, b).unwrap();
                if ts {
                    prop_assert!(adjacent_under(&g, d, Rule::TJ, a, b).unwrap());
                    if d >= 1 {
                        prop_assert!(!is_triangle_free(&g));
                    }
                }
            }
        }
    }

    #[test]
    fn solver_matches_the_move_graph(g in graph(6), d in 0usize..3, rule in rule(), pick in any::<(usize, usize)>()) {
        let (k, sets) = busiest_size(&g, d);
        prop_assume!(!sets.is_empty());
        let (s, t) = (&sets[pick.0 % sets.len()], &sets[pick.1 % sets.len()]);
        let inst = Instance::new(g.clone(), d, rule, s.clone(), t.clone(), false).unwrap();
        let dec = solve(&inst).unwrap();
        let mg = MoveGraph::build(&g, d, rule, k, &Limits::default()).unwrap();
        prop_assert_eq!(Some(dec.reachable), mg.reachable(s, t));
        if let Some(w) = &dec.witness {
            prop_assert!(validate_sequence(&inst, w).is_ok());
            prop_assert_eq!(Some(w.moves() + 1), mg.path(s, t).map(|p| p.len()));
        }
    }

    #[test]
    fn fast_paths_agree_with_the_oracle(g in graph(7), d in 0usize..3, rule in rule(), connected in any::<bool>(), pick in any::<(usize, usize)>()) {
        let (_, sets) = busiest_size(&g, d);
        let sets: Vec<_> = sets.into_iter().filter(|s| !connected || g.is_connected_set(s).unwrap()).collect();
        prop_assume!(!sets.is_empty());
        let (s, t) = (&sets[pick.0 % sets.len()], &sets[pick.1 % sets.len()]);
        let inst = Instance::new(g.clone(), d, rule, s.clone(), t.clone(), connected).unwrap();
        if let Some(dec) = fast_path(&inst) {
            prop_assert_eq!(dec.reachable, oracle_reachable(&inst).unwrap().reachable);
            if let Some(w) = &dec.witness {
                prop_assert!(validate_sequence(&inst, w).is_ok());
            }
        }
    }

    #[test]
    fn blowup_sequences_round_trip(g in graph(5), d in 1usize..3, pick in any::<(usize, usize)>()) {
        let by_size = common::independent_sets_by_size(&g);
        let k = (1..by_size.len()).max_by_key(|&k| by_size[k].len()).unwrap();
        let sets = &by_size[k];
        let (s, t) = (&sets[pick.0 % sets.len()], &sets[pick.1 % sets.len()]);
        let art = blowup_reduce(&g, s, t, d).unwrap();
        prop_assert_eq!(art.instance().source().len(), (d + 1) * k);
        let mg = MoveGraph::build(&g, 0, Rule::TS, k, &Limits::default()).unwrap();
        if let Some(path) = mg.path(s, t) {
            let hseq = ReconfigSequence::new(path);
            let lifted = blowup_lift(&art, &hseq).unwrap();
            prop_assert_eq!(lifted.moves(), (d + 1) * hseq.moves());
            prop_assert_eq!(blowup_project(&art, &lifted).unwrap(), hseq.clone().dedup());
        }
        let tj = art.instance_with_rule(Rule::TJ);
        let dec = solve(&tj).unwrap();
        prop_assert_eq!(dec.reachable, mg.reachable(s, t).unwrap());
        if let Some(w) = dec.witness {
            let ts = blowup_tj_to_ts(&art, &w).unwrap();
            prop_assert!(validate_sequence(art.instance(), &ts).is_ok());
        }
    }

    #[test]
    fn pendant_sequences_round_trip(g in graph(6), pick in any::<(usize, usize)>()) {
        prop_assume!(recognize(&g).is_bipartite());
        let by_size = common::independent_sets_by_size(&g);
        let k = (1..by_size.len()).max_by_key(|&k| by_size[k].len()).unwrap();
        let sets = &by_size[k];
        let (s, t) = (&sets[pick.0 % sets.len()], &sets[pick.1 % sets.len()]);
        let art = pendant_reduce(&g, s, t).unwrap();
        let mg = MoveGraph::build(&g, 0, Rule::TS, k, &Limits::default()).unwrap();
        let reduced = solve(art.instance()).unwrap();
        prop_assert_eq!(reduced.reachable, mg.reachable(s, t).unwrap());
        if let Some(path) = mg.path(s, t) {
            let hseq = ReconfigSequence::new(path);
            let lifted = pendant_lift(&art, &hseq).unwrap();
            prop_assert_eq!(lifted.moves(), 2 * hseq.moves());
            prop_assert_eq!(pendant_project(&art, &lifted).unwrap(), hseq);
        }
        if let Some(w) = reduced.witness {
            let back = pendant_project(&art, &w).unwrap();
            prop_assert!(validate_sequence(&art.source_instance(), &back).is_ok());
        }
    }

    #[test]
    fn lifted_orderings_respect_the_width_bound(small in graph(5), t in 1usize..4, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let s = random_sketch(&mut rng, &small, t);
        prop_assert!(verify_sketch(&s));
        let (b, pi) = exact_bandwidth(&s.small).unwrap();
        let lifted = lift_ordering(&s, &pi).unwrap();
        prop_assert!(ordering_width(&s.big, &lifted).unwrap() <= s.t * (b + 1));
    }
}

fn random_sketch(rng: &mut impl rand::Rng, small: &Graph, t: usize) -> SketchMapping {
    let mut map = Vec::new();
    for v in small.vertices() {
        for _ in 0..rng.gen_range(1..=t) {
            map.push(v);
        }
    }
    let n = map.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for w in u + 1..n {
            let allowed = map[u] == map[w] || small.has_edge(map[u], map[w]);
            if allowed && rng.gen_bool(0.6) {
                edges.push((u, w));
            }
        }
    }
    SketchMapping {
        big: Graph::new(n, &edges).unwrap(),
        small: small.clone(),
        map,
        t,
    }
}
