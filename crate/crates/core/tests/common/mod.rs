#![allow(dead_code)]

use std::collections::BTreeSet;

use lionsweep_core::dynamics::{Action, MotionModel, MoveStep};
use lionsweep_core::graph::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Random connected graph: a random spanning tree plus extra edges.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra_edge_prob: f64) -> Graph {
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(extra_edge_prob) {
                edges.insert((u, v));
            }
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// A random graph that may be disconnected.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// A random move that is legal under `model`.
pub fn random_move<R: Rng>(
    rng: &mut R,
    g: &Graph,
    model: MotionModel,
    lions: &[usize],
) -> MoveStep {
    let k = lions.len();
    let hop = |rng: &mut R, v: usize| g.neighbors(v).choose(rng).copied();
    match model {
        MotionModel::Free => MoveStep(
            lions
                .iter()
                .map(|&v| match hop(rng, v) {
                    Some(w) if rng.gen_bool(0.7) => Action::MoveTo(w),
                    _ => Action::Stay,
                })
                .collect(),
        ),
        MotionModel::Caffeinated => MoveStep(
            lions
                .iter()
                .map(|&v| Action::MoveTo(hop(rng, v).expect("caffeinated lions need neighbours")))
                .collect(),
        ),
        MotionModel::Polite => {
            let mut mv = MoveStep::stay(k);
            if k > 0 && rng.gen_bool(0.8) {
                let i = rng.gen_range(0..k);
                if let Some(w) = hop(rng, lions[i]) {
                    mv.0[i] = Action::MoveTo(w);
                }
            }
            mv
        }
    }
}

/// Vertices reachable from `u` by walks of exactly `m` steps, by plain
/// level-by-level expansion.
pub fn exact_reach(g: &Graph, u: usize, m: usize) -> BTreeSet<usize> {
    let mut cur = BTreeSet::from([u]);
    for _ in 0..m {
        cur = cur
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied())
            .collect();
    }
    cur
}
