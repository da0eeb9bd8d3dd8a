mod common;

use common::{exact_reach, random_connected, random_graph, random_move};
use lionsweep_core::cheeger::cheeger_constant;
use lionsweep_core::dynamics::{initial_state, run, step, MotionModel, SimState};
use lionsweep_core::graph::{build_tri_lattice, Graph};
use lionsweep_core::isoperimetry::{fall_down, fall_down_in, FallDirection};
use lionsweep_core::search::{
    can_clear, fast_step, verify_lemma_bounds, SearchLimits, SearchVerdict, StartPolicy,
};
use lionsweep_core::strategies::{exact_length_walk, simultaneous_repositioning};
use lionsweep_core::trace_io::{format_trace, parse_trace};
use lionsweep_core::{Error, VertexSet};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MODELS: [MotionModel; 3] = [
    MotionModel::Free,
    MotionModel::Caffeinated,
    MotionModel::Polite,
];

fn random_state(rng: &mut ChaCha8Rng, g: &Graph, k: usize) -> SimState {
    let n = g.vertex_count();
    let lions: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
    let mut state = initial_state(g, &lions).unwrap();
    for v in 0..n {
        if rng.gen_bool(0.5) {
            state.cleared.insert(v);
        }
    }
    state
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn bitmask_step_matches_reference(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=14);
        let g = random_connected(&mut rng, n, 0.25);
        let k = rng.gen_range(0..=4);
        let state = random_state(&mut rng, &g, k);
        let model = MODELS[rng.gen_range(0..3)];
        let mv = random_move(&mut rng, &g, model, &state.lions);
        let next = step(&g, &state, &mv).unwrap();
        let nbrs = g.neighbor_masks().unwrap();
        let fast = fast_step(&nbrs, state.cleared.to_mask().unwrap(), &state.lions, &next.lions);
        prop_assert_eq!(Some(fast), next.cleared.to_mask());
    }

    #[test]
    fn update_is_monotone_in_cleared_set(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=12);
        let g = random_connected(&mut rng, n, 0.3);
        let k = rng.gen_range(0..=3);
        let small = random_state(&mut rng, &g, k);
        let mut big = small.clone();
        for v in 0..n {
            if rng.gen_bool(0.4) {
                big.cleared.insert(v);
            }
        }
        let mv = random_move(&mut rng, &g, MotionModel::Free, &small.lions);
        let a = step(&g, &small, &mv).unwrap();
        let b = step(&g, &big, &mv).unwrap();
        prop_assert!(a.cleared.is_subset(&b.cleared));
    }

    #[test]
    fn lemma_bounds_hold_on_random_traces(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=12);
        let g = random_connected(&mut rng, n, 0.3);
        let k = rng.gen_range(1..=3);
        let model = MODELS[rng.gen_range(0..3)];
        let lions: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
        let mut cur = lions.clone();
        let mut moves = Vec::new();
        for _ in 0..rng.gen_range(0..=30) {
            let mv = random_move(&mut rng, &g, model, &cur);
            cur = mv.apply_to(&cur);
            moves.push(mv);
        }
        let trace = run(&g, model, &lions, &moves, false).unwrap();
        prop_assert!(verify_lemma_bounds(&g, &trace, k).unwrap().violations.is_empty());
        prop_assert_eq!(parse_trace(&format_trace(&trace), n).unwrap(), trace);
    }

    #[test]
    fn fall_down_preserves_size(seed: u64, n in 2usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = VertexSet::from_vertices(n * n, (0..n * n).filter(|_| rng.gen_bool(0.4))).unwrap();
        for dir in [FallDirection::DownLeft, FallDirection::DownRight] {
            let t = fall_down_in(n, &s, dir).unwrap();
            prop_assert_eq!(t.len(), s.len());
        }
        // the down-left image is closed under moving down or left
        let t = fall_down(n, &s).unwrap();
        for v in t.iter() {
            let (r, c) = (v / n, v % n);
            prop_assert!(r == 0 || t.contains(v - n));
            prop_assert!(c == 0 || t.contains(v - 1));
        }
    }

    #[test]
    fn walk_planner_matches_reach_oracle(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=12);
        let g = random_connected(&mut rng, n, 0.15);
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let m = rng.gen_range(0..=16);
        let reachable = exact_reach(&g, u, m).contains(&v);
        match exact_length_walk(&g, u, v, m) {
            Ok(w) => {
                prop_assert!(reachable);
                prop_assert_eq!(w.len(), m);
                prop_assert!(w.is_valid(&g));
                prop_assert_eq!((w.start(), w.end()), (u, v));
            }
            Err(Error::InfeasibleTooShort { .. }) => {
                prop_assert!(!reachable);
                prop_assert!(m < g.distances_from(u)[v].unwrap());
            }
            Err(Error::InfeasibleParity { .. }) => prop_assert!(!reachable),
            Err(e) => prop_assert!(false, "unexpected {}", e),
        }
    }

    #[test]
    fn repositioning_is_caffeinated_valid(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (n, l) = (rng.gen_range(2..=4), rng.gen_range(2..=5));
        let g = build_tri_lattice(n, l).unwrap();
        let k = rng.gen_range(1..=4);
        let starts: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n * l)).collect();
        let targets: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n * l)).collect();
        let moves = simultaneous_repositioning(&g, &starts, &targets).unwrap();
        let trace = run(&g, MotionModel::Caffeinated, &starts, &moves, false).unwrap();
        prop_assert_eq!(&trace.last().lions, &targets);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cheeger_witness_reproduces_constant(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=9);
        let g = random_graph(&mut rng, n, 0.4);
        let res = cheeger_constant(&g).unwrap();
        let w = &res.witness;
        let den = w.len().min(n - w.len()) as i64;
        let num = g.boundary(w).unwrap().len() as i64;
        prop_assert_eq!(res.g, lionsweep_core::cheeger::Rational::new(num, den));
        prop_assert!(*res.g.numer() <= *res.g.denom());
        prop_assert_eq!(*res.g.numer() == 0, !g.is_connected());
    }

    #[test]
    fn search_witnesses_replay_and_pruning_agrees(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=7);
        let g = random_connected(&mut rng, n, 0.3);
        let model = MODELS[rng.gen_range(0..3)];
        let k = rng.gen_range(1..=3);
        let plain = can_clear(&g, k, model, &StartPolicy::Auto, &SearchLimits::default()).unwrap();
        let pruned = can_clear(&g, k, model, &StartPolicy::Auto, &SearchLimits { dominance_pruning: true, ..SearchLimits::default() }).unwrap();
        prop_assert_eq!(plain.verdict.label(), pruned.verdict.label());
        for out in [&plain, &pruned] {
            if let SearchVerdict::Cleared(t) = &out.verdict {
                prop_assert!(t.replays(&g, model).unwrap());
                prop_assert!(t.last().is_swept());
            }
        }
        // an extra lion never hurts
        if matches!(plain.verdict, SearchVerdict::Cleared(_)) {
            let more = can_clear(&g, k + 1, model, &StartPolicy::Auto, &SearchLimits::default()).unwrap();
            prop_assert!(matches!(more.verdict, SearchVerdict::Cleared(_)));
        }
    }
}
