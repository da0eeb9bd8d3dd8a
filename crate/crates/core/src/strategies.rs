//! Move-sequence generators for sweeping the triangular lattice `R_{n,l}`.
//!
//! * [`row_sweep_moves`]: `n` lions gather on the leftmost column, then
//!   advance one at a time, bottom row first, one column per round.
//! * [`caffeinated_wall_moves`]: `floor(3n/2)` lions that must all move at
//!   every step. They assemble a wall of triangles, walk it to the left edge
//!   and then sweep right.
//! * [`exact_length_walk`] / [`simultaneous_repositioning`]: walks of a
//!   prescribed length, used to bring caffeinated lions into formation so
//!   that they all arrive at the same time.

use std::collections::VecDeque;

use crate::dynamics::{initial_state, step, Action, MoveStep, SimState};
use crate::error::{Error, Result};
use crate::graph::{build_tri_lattice, Graph};

/// A walk `(v_0, v_1, ..., v_m)` with consecutive vertices adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk(pub Vec<usize>);

impl Walk {
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self) -> usize {
        self.0[0]
    }

    pub fn end(&self) -> usize {
        *self.0.last().unwrap()
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        !self.0.is_empty() && self.0.windows(2).all(|w| g.is_adjacent(w[0], w[1]))
    }
}

/// Lion starting positions plus the moves of a generated strategy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepPlan {
    pub starts: Vec<usize>,
    pub moves: Vec<MoveStep>,
    /// Number of leading moves spent getting into formation; the sweep proper
    /// starts at this state index.
    pub formation_steps: usize,
}

/// Shortest walk lengths of each parity towards a fixed target vertex.
#[derive(Clone, Debug)]
pub struct ParityDistances {
    target: usize,
    dist: Vec<[Option<usize>; 2]>,
    target_has_edge: bool,
}

impl ParityDistances {
    pub fn new(g: &Graph, target: usize) -> ParityDistances {
        let mut dist = vec![[None; 2]; g.vertex_count()];
        dist[target][0] = Some(0);
        let mut queue = VecDeque::from([(target, 0usize)]);
        while let Some((v, p)) = queue.pop_front() {
            let d = dist[v][p].unwrap();
            for &u in g.neighbors(v) {
                let q = 1 - p;
                if dist[u][q].is_none() {
                    dist[u][q] = Some(d + 1);
                    queue.push_back((u, q));
                }
            }
        }
        ParityDistances {
            target,
            dist,
            target_has_edge: g.degree(target) > 0,
        }
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Length of a shortest path from `from` to the target.
    pub fn shortest(&self, from: usize) -> Option<usize> {
        match self.dist[from] {
            [Some(a), Some(b)] => Some(a.min(b)),
            [a, b] => a.or(b),
        }
    }

    /// Shortest walk from `from` to the target whose length has the parity of `m`.
    pub fn shortest_with_parity(&self, from: usize, m: usize) -> Option<usize> {
        self.dist[from][m % 2]
    }

    /// Whether a walk of length exactly `m` reaches the target from `from`.
    /// Any such walk can be lengthened by 2 by bouncing over an edge.
    pub fn feasible(&self, from: usize, m: usize) -> bool {
        match self.dist[from][m % 2] {
            Some(d) => d == m || (d < m && self.target_has_edge),
            None => false,
        }
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.vertex_count() {
        return Err(Error::InvalidParameter(format!(
            "vertex {v} outside 0..{}",
            g.vertex_count()
        )));
    }
    Ok(())
}

fn walk_with_table(g: &Graph, table: &ParityDistances, u: usize, m: usize) -> Result<Walk> {
    let Some(shortest) = table.shortest(u) else {
        return Err(Error::InvalidParameter(format!(
            "vertex {} is not reachable from {u}",
            table.target()
        )));
    };
    if m < shortest {
        return Err(Error::InfeasibleTooShort {
            requested: m,
            shortest,
        });
    }
    if !table.feasible(u, m) {
        return Err(Error::InfeasibleParity {
            requested: m,
            shortest_with_parity: table.shortest_with_parity(u, m),
        });
    }
    let mut walk = Vec::with_capacity(m + 1);
    walk.push(u);
    let mut cur = u;
    for remaining in (1..=m).rev() {
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&y| table.feasible(y, remaining - 1))
            .expect("a feasible walk continues through some neighbour");
        walk.push(cur);
    }
    debug_assert_eq!(cur, table.target());
    Ok(Walk(walk))
}

/// A walk from `u` to `v` with exactly `m` edges.
///
/// On a graph with an odd cycle every `m` from the shortest-path length `M`
/// up works once an odd-length detour is available; in a bipartite graph only
/// lengths `m >= M` with `m = M (mod 2)` exist.
pub fn exact_length_walk(g: &Graph, u: usize, v: usize, m: usize) -> Result<Walk> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    walk_with_table(g, &ParityDistances::new(g, v), u, m)
}

/// Moves every lion `i` from `starts[i]` to `targets[i]` so that all arrive
/// at the same step, with every lion moving at every step.
///
/// The common length is the smallest `m >= 1` at which every lion has an
/// exact-length walk; lions already in place bounce out and back.
pub fn simultaneous_repositioning(
    g: &Graph,
    starts: &[usize],
    targets: &[usize],
) -> Result<Vec<MoveStep>> {
    if starts.len() != targets.len() {
        return Err(Error::InvalidParameter(format!(
            "{} starts but {} targets",
            starts.len(),
            targets.len()
        )));
    }
    if starts.is_empty() {
        return Ok(Vec::new());
    }
    for &v in starts.iter().chain(targets) {
        check_vertex(g, v)?;
    }
    let tables: Vec<ParityDistances> = targets
        .iter()
        .map(|&t| ParityDistances::new(g, t))
        .collect();
    let mut lo = 1;
    for (table, &s) in tables.iter().zip(starts) {
        let d = table.shortest(s).ok_or_else(|| {
            Error::InvalidParameter(format!("target {} unreachable from {s}", table.target()))
        })?;
        lo = lo.max(d);
    }
    // parity classes settle within two more steps past every shortest odd/even walk
    let hi = lo + 2 * g.vertex_count() + 2;
    let m = (lo..=hi)
        .find(|&m| tables.iter().zip(starts).all(|(t, &s)| t.feasible(s, m)))
        .ok_or(Error::InfeasibleParity {
            requested: lo,
            shortest_with_parity: None,
        })?;
    let walks = tables
        .iter()
        .zip(starts)
        .map(|(t, &s)| walk_with_table(g, t, s, m))
        .collect::<Result<Vec<_>>>()?;
    Ok((1..=m)
        .map(|i| MoveStep(walks.iter().map(|w| Action::MoveTo(w.0[i])).collect()))
        .collect())
}

/// Moves along shortest paths, all lions at once, stopping each lion on arrival.
fn gather_moves(g: &Graph, starts: &[usize], targets: &[usize]) -> Result<Vec<MoveStep>> {
    let paths = starts
        .iter()
        .zip(targets)
        .map(|(&s, &t)| {
            g.shortest_path(s, t)
                .ok_or_else(|| Error::InvalidParameter(format!("{t} unreachable from {s}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let steps = paths.iter().map(|p| p.len() - 1).max().unwrap_or(0);
    Ok((1..=steps)
        .map(|i| {
            MoveStep(
                paths
                    .iter()
                    .map(|p| {
                        if i < p.len() {
                            Action::MoveTo(p[i])
                        } else {
                            Action::Stay
                        }
                    })
                    .collect(),
            )
        })
        .collect())
}

fn check_lion_count(expected: usize, starts: &[usize], g: &Graph) -> Result<()> {
    if starts.len() != expected {
        return Err(Error::InvalidParameter(format!(
            "this strategy needs exactly {expected} lions, got {}",
            starts.len()
        )));
    }
    for (i, &p) in starts.iter().enumerate() {
        if p >= g.vertex_count() {
            return Err(Error::InvalidLions {
                lion: i,
                vertex: p,
                vertex_count: g.vertex_count(),
            });
        }
    }
    Ok(())
}

fn advance(g: &Graph, state: &SimState, mv: &MoveStep) -> SimState {
    step(g, state, mv).expect("generated moves follow edges")
}

/// The leftmost-column vertices `(1, 1), ..., (n, 1)` of `R_{n,l}`.
pub fn leftmost_column(g: &Graph, n: usize) -> Vec<usize> {
    (1..=n)
        .map(|r| g.vertex_at(r, 1).expect("row inside grid"))
        .collect()
}

/// `n` lions clear `R_{n,l}`: gather on the leftmost column, wait for any
/// stray cleared vertices to settle, then advance one lion at a time from
/// the bottom row upwards, one column per round.
pub fn row_sweep_moves(n: usize, l: usize, starts: &[usize]) -> Result<SweepPlan> {
    let g = build_tri_lattice(n, l)?;
    check_lion_count(n, starts, &g)?;
    let column = leftmost_column(&g, n);

    // lions already on the column keep their row
    let mut row_of: Vec<Option<usize>> = vec![None; n];
    let mut taken = vec![false; n];
    for (i, &p) in starts.iter().enumerate() {
        if let Some(r) = column.iter().position(|&c| c == p) {
            if !taken[r] {
                taken[r] = true;
                row_of[i] = Some(r);
            }
        }
    }
    let mut free_rows = (0..n).filter(|&r| !taken[r]);
    let row_of: Vec<usize> = row_of
        .into_iter()
        .map(|r| r.unwrap_or_else(|| free_rows.next().unwrap()))
        .collect();
    let targets: Vec<usize> = row_of.iter().map(|&r| column[r]).collect();

    let mut moves = gather_moves(&g, starts, &targets)?;
    let mut state = initial_state(&g, starts)?;
    for mv in &moves {
        state = advance(&g, &state, mv);
    }
    let column_set = g.vertex_set(column.iter().copied())?;
    while !state.is_swept() && state.cleared != column_set {
        let mv = MoveStep::stay(n);
        state = advance(&g, &state, &mv);
        moves.push(mv);
    }
    let formation_steps = moves.len();
    if state.is_swept() {
        return Ok(SweepPlan {
            starts: starts.to_vec(),
            moves,
            formation_steps,
        });
    }

    let mut lion_in_row = vec![0; n];
    for (i, &r) in row_of.iter().enumerate() {
        lion_in_row[r] = i;
    }
    for c in 1..l {
        for (r, &lion) in lion_in_row.iter().enumerate() {
            let mut mv = MoveStep::stay(n);
            mv.0[lion] = Action::MoveTo(g.vertex_at(r + 1, c + 1).unwrap());
            moves.push(mv);
        }
    }
    Ok(SweepPlan {
        starts: starts.to_vec(),
        moves,
        formation_steps,
    })
}

/// The column sweep that `n` caffeinated lions would attempt: start on the
/// leftmost column, every lion steps right each turn, bouncing between the
/// two ends of the strip. Contamination leaks back along the diagonals.
pub fn naive_caffeinated_column_moves(n: usize, l: usize, steps: usize) -> Result<SweepPlan> {
    let g = build_tri_lattice(n, l)?;
    if l < 2 {
        return Err(Error::InvalidParameter(
            "the column sweep needs l >= 2".into(),
        ));
    }
    let starts = leftmost_column(&g, n);
    let mut col = 1usize;
    let mut dir: isize = 1;
    let mut moves = Vec::with_capacity(steps);
    for _ in 0..steps {
        if (dir > 0 && col == l) || (dir < 0 && col == 1) {
            dir = -dir;
        }
        col = (col as isize + dir) as usize;
        moves.push(MoveStep(
            (1..=n)
                .map(|r| Action::MoveTo(g.vertex_at(r, col).unwrap()))
                .collect(),
        ));
    }
    Ok(SweepPlan {
        starts,
        moves,
        formation_steps: 0,
    })
}

/// Number of caffeinated lions used by [`caffeinated_wall_moves`] on a strip of height `n`.
pub fn wall_lion_count(n: usize) -> usize {
    3 * n / 2
}

/// One triangle of the wall: a single lion in the upper row and, unless it is
/// the bottom row of an odd-height strip, two lions side by side below it.
#[derive(Clone, Copy, Debug)]
struct WallGroup {
    single_row: usize,
    double_row: Option<usize>,
}

fn wall_groups(n: usize) -> Vec<WallGroup> {
    (0..n.div_ceil(2))
        .map(|g| {
            let single_row = n - 2 * g;
            WallGroup {
                single_row,
                double_row: (single_row > 1).then(|| single_row - 1),
            }
        })
        .collect()
}

/// Wall formation with its left edge on column `c`: single-lion rows (odd
/// rows counted from the top) hold `(r, c)`, double-lion rows hold `(r, c)`
/// and `(r, c + 1)`. Lions are listed group by group, single first.
pub fn wall_formation(n: usize, l: usize, c: usize) -> Result<Vec<usize>> {
    if n < 2 || c < 1 || c + 1 > l {
        return Err(Error::InvalidParameter(format!(
            "wall at column {c} does not fit R_{{{n},{l}}}"
        )));
    }
    let g = build_tri_lattice(n, l)?;
    let mut out = Vec::with_capacity(wall_lion_count(n));
    for grp in wall_groups(n) {
        out.push(g.vertex_at(grp.single_row, c).unwrap());
        if let Some(d) = grp.double_row {
            out.push(g.vertex_at(d, c).unwrap());
            out.push(g.vertex_at(d, c + 1).unwrap());
        }
    }
    Ok(out)
}

/// Sweep of a path-shaped strip (`n = 1` or `l = 1`) by caffeinated lions:
/// lion 0 walks to one end and then to the other, everybody else bounces.
fn caffeinated_path_moves(g: &Graph, starts: &[usize]) -> Vec<MoveStep> {
    let len = g.vertex_count();
    if len == 1 {
        return Vec::new();
    }
    // vertex indices run along the path
    let mut route: Vec<usize> = (0..starts[0]).rev().collect();
    route.extend(1..len);
    let mut pos = starts.to_vec();
    let mut prev: Vec<Option<usize>> = vec![None; pos.len()];
    let mut moves = Vec::with_capacity(route.len());
    for &next in &route {
        let mut mv = Vec::with_capacity(pos.len());
        for (i, p) in pos.iter_mut().enumerate() {
            let to = if i == 0 {
                next
            } else {
                prev[i].unwrap_or(if *p + 1 < len { *p + 1 } else { *p - 1 })
            };
            prev[i] = Some(*p);
            *p = to;
            mv.push(Action::MoveTo(to));
        }
        moves.push(MoveStep(mv));
    }
    moves
}

/// `floor(3n/2)` caffeinated lions clear `R_{n,l}` from any start.
///
/// The lions walk (all arriving together) into the wall formation at column
/// `ceil(l/2)`, translate it to column 1, then sweep right. In the sweep the
/// wall leans: each triangle group sits one column right of the group above
/// it, so the lowest group starts first and every group waits one extra step.
/// Waiting groups rotate around their triangle, groups stopped by the right
/// edge swap their pair and shuffle the single lion back and forth.
pub fn caffeinated_wall_moves(n: usize, l: usize, starts: &[usize]) -> Result<SweepPlan> {
    let g = build_tri_lattice(n, l)?;
    let k = wall_lion_count(n);
    check_lion_count(k, starts, &g)?;
    if n == 1 || l == 1 {
        let moves = caffeinated_path_moves(&g, starts);
        return Ok(SweepPlan {
            starts: starts.to_vec(),
            moves,
            formation_steps: 0,
        });
    }

    let c0 = l.div_ceil(2);
    let formation = wall_formation(n, l, c0)?;
    let mut moves = simultaneous_repositioning(&g, starts, &formation)?;

    let groups = wall_groups(n);
    let at = |r: usize, c: usize| g.vertex_at(r, c).expect("wall stays on the grid");

    // lion ids by role, group by group: single, pair-left, pair-right
    let mut single: Vec<usize> = Vec::new();
    let mut pair: Vec<Option<(usize, usize)>> = Vec::new();
    let mut next_id = 0;
    for grp in &groups {
        single.push(next_id);
        next_id += 1;
        if grp.double_row.is_some() {
            pair.push(Some((next_id, next_id + 1)));
            next_id += 2;
        } else {
            pair.push(None);
        }
    }

    for c in (1..c0).rev() {
        let mut mv = vec![Action::Stay; k];
        for (gi, grp) in groups.iter().enumerate() {
            mv[single[gi]] = Action::MoveTo(at(grp.single_row, c));
            if let (Some(d), Some((a, b))) = (grp.double_row, pair[gi]) {
                mv[a] = Action::MoveTo(at(d, c));
                mv[b] = Action::MoveTo(at(d, c + 1));
            }
        }
        moves.push(MoveStep(mv));
    }
    let formation_steps = moves.len();

    let last = groups.len() - 1;
    let single_col = |gi: usize, tau: usize| l.min(1 + tau.saturating_sub(last - gi));
    let pair_col = |gi: usize, tau: usize| (l - 1).min(single_col(gi, tau));
    // single lions of finished groups shuffle between columns l and l-1
    let mut shuffle_col: Vec<usize> = vec![l; groups.len()];

    let sweep_len = last + l - 1;
    for tau in 0..sweep_len {
        let mut mv = vec![Action::Stay; k];
        for (gi, grp) in groups.iter().enumerate() {
            let s = single_col(gi, tau);
            let s_next = single_col(gi, tau + 1);
            let p = pair_col(gi, tau);
            let p_next = pair_col(gi, tau + 1);
            let sid = single[gi];
            match (grp.double_row, pair[gi]) {
                (Some(d), Some((a, b))) => {
                    if s_next > s && p_next > p {
                        mv[sid] = Action::MoveTo(at(grp.single_row, s_next));
                        mv[a] = Action::MoveTo(at(d, p_next));
                        mv[b] = Action::MoveTo(at(d, p_next + 1));
                    } else if s_next > s {
                        mv[sid] = Action::MoveTo(at(grp.single_row, s_next));
                        mv[a] = Action::MoveTo(at(d, p + 1));
                        mv[b] = Action::MoveTo(at(d, p));
                        pair[gi] = Some((b, a));
                    } else if s < l {
                        // not started: rotate single -> left -> right -> single
                        mv[sid] = Action::MoveTo(at(d, p));
                        mv[a] = Action::MoveTo(at(d, p + 1));
                        mv[b] = Action::MoveTo(at(grp.single_row, s));
                        single[gi] = b;
                        pair[gi] = Some((sid, a));
                    } else {
                        let to = if shuffle_col[gi] == l { l - 1 } else { l };
                        shuffle_col[gi] = to;
                        mv[sid] = Action::MoveTo(at(grp.single_row, to));
                        mv[a] = Action::MoveTo(at(d, p + 1));
                        mv[b] = Action::MoveTo(at(d, p));
                        pair[gi] = Some((b, a));
                    }
                }
                _ => {
                    if s_next > s {
                        mv[sid] = Action::MoveTo(at(grp.single_row, s_next));
                    } else {
                        let to = if shuffle_col[gi] == l { l - 1 } else { l };
                        shuffle_col[gi] = to;
                        mv[sid] = Action::MoveTo(at(grp.single_row, to));
                    }
                }
            }
        }
        moves.push(MoveStep(mv));
    }

    Ok(SweepPlan {
        starts: starts.to_vec(),
        moves,
        formation_steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{run, MotionModel};
    use crate::graph::build_square_grid;

    fn lattice_vertex(n: usize, l: usize, r: usize, c: usize) -> usize {
        build_tri_lattice(n, l).unwrap().vertex_at(r, c).unwrap()
    }

    #[test]
    fn row_sweep_on_a_path() {
        let plan = row_sweep_moves(1, 4, &[0]).unwrap();
        assert_eq!(plan.moves.len(), 3);
        assert!(plan.moves.iter().all(|m| m.movers() == 1));
        let g = build_tri_lattice(1, 4).unwrap();
        let tr = run(&g, MotionModel::Free, &plan.starts, &plan.moves, false).unwrap();
        assert_eq!(tr.is_swept(), Some(3));
    }

    #[test]
    fn row_sweep_from_formation_is_monotone_and_polite() {
        let g = build_tri_lattice(3, 3).unwrap();
        let starts = leftmost_column(&g, 3);
        let plan = row_sweep_moves(3, 3, &starts).unwrap();
        assert_eq!(plan.formation_steps, 0);
        assert_eq!(plan.moves.len(), 6);
        let tr = run(&g, MotionModel::Polite, &plan.starts, &plan.moves, false).unwrap();
        assert_eq!(tr.is_swept(), Some(6));
        assert!(tr.is_monotone());
    }

    #[test]
    fn row_sweep_from_arbitrary_starts() {
        let g = build_tri_lattice(2, 5).unwrap();
        let starts = [lattice_vertex(2, 5, 2, 5), lattice_vertex(2, 5, 2, 3)];
        let plan = row_sweep_moves(2, 5, &starts).unwrap();
        let tr = run(&g, MotionModel::Free, &plan.starts, &plan.moves, false).unwrap();
        assert!(tr.is_swept().is_some());
        assert!(tr.is_monotone_from(plan.formation_steps));
        assert!(row_sweep_moves(2, 5, &starts[..1]).is_err());
    }

    #[test]
    fn trivial_and_triangle_walks() {
        let g = build_tri_lattice(2, 3).unwrap();
        assert_eq!(exact_length_walk(&g, 4, 4, 0).unwrap(), Walk(vec![4]));
        let (u, v) = (lattice_vertex(2, 3, 1, 1), lattice_vertex(2, 3, 1, 2));
        let w = exact_length_walk(&g, u, v, 2).unwrap();
        assert_eq!(w.len(), 2);
        assert!(w.is_valid(&g));
        assert!(g.is_adjacent(w.0[1], u) && g.is_adjacent(w.0[1], v));
    }

    #[test]
    fn bipartite_parity_is_enforced() {
        let s3 = build_square_grid(3).unwrap();
        assert!(matches!(
            exact_length_walk(&s3, 0, 1, 2),
            Err(Error::InfeasibleParity { .. })
        ));
        assert!(matches!(
            exact_length_walk(&s3, 0, 8, 3),
            Err(Error::InfeasibleTooShort { shortest: 4, .. })
        ));
        assert_eq!(exact_length_walk(&s3, 0, 1, 5).unwrap().len(), 5);
        // closed walks of odd length do not exist either
        assert!(exact_length_walk(&s3, 0, 0, 1).is_err());
    }

    #[test]
    fn repositioning_in_place_bounces() {
        let g = build_tri_lattice(2, 2).unwrap();
        let moves = simultaneous_repositioning(&g, &[0, 3], &[0, 3]).unwrap();
        assert_eq!(moves.len(), 2);
        let tr = run(&g, MotionModel::Caffeinated, &[0, 3], &moves, false).unwrap();
        assert_eq!(tr.last().lions, vec![0, 3]);
    }

    #[test]
    fn repositioning_single_adjacent_move() {
        let g = build_tri_lattice(2, 3).unwrap();
        let moves = simultaneous_repositioning(&g, &[0], &[1]).unwrap();
        assert_eq!(moves, vec![MoveStep(vec![Action::MoveTo(1)])]);
    }

    #[test]
    fn repositioning_crossing_paths_arrive_together() {
        let g = build_tri_lattice(3, 3).unwrap();
        let (a, b) = (lattice_vertex(3, 3, 1, 1), lattice_vertex(3, 3, 3, 3));
        let moves = simultaneous_repositioning(&g, &[a, b], &[b, a]).unwrap();
        let tr = run(&g, MotionModel::Caffeinated, &[a, b], &moves, false).unwrap();
        assert_eq!(tr.last().lions, vec![b, a]);
        assert_eq!(moves.len(), 4);
    }

    #[test]
    fn repositioning_parity_mismatch_on_bipartite() {
        let s2 = build_square_grid(2).unwrap();
        // one lion must cover an edge, the other stays: parities clash forever
        assert!(matches!(
            simultaneous_repositioning(&s2, &[0, 3], &[1, 3]),
            Err(Error::InfeasibleParity { .. })
        ));
    }

    #[test]
    fn wall_lion_counts() {
        assert_eq!(wall_lion_count(2), 3);
        assert_eq!(wall_lion_count(3), 4);
        assert_eq!(wall_lion_count(4), 6);
        let g = build_tri_lattice(3, 4).unwrap();
        assert!(caffeinated_wall_moves(3, 4, &[0, 0, 0, 0]).is_ok());
        assert!(caffeinated_wall_moves(3, 4, &[0, 0, 0]).is_err());
        assert_eq!(wall_formation(3, 4, 2).unwrap().len(), 4);
        let _ = g;
    }

    fn check_wall(n: usize, l: usize, starts: &[usize]) {
        let g = build_tri_lattice(n, l).unwrap();
        let plan = caffeinated_wall_moves(n, l, starts).unwrap();
        let tr = run(
            &g,
            MotionModel::Caffeinated,
            &plan.starts,
            &plan.moves,
            false,
        )
        .unwrap_or_else(|e| panic!("n={n} l={l}: {e}"));
        assert!(tr.is_swept().is_some(), "n={n} l={l} not swept");
    }

    #[test]
    fn wall_sweeps_small_strips() {
        for n in 1..=6 {
            for l in 1..=8 {
                let k = wall_lion_count(n);
                check_wall(n, l, &vec![0; k]);
                let far = n * l - 1;
                let mixed: Vec<usize> = (0..k)
                    .map(|i| if i % 2 == 0 { far } else { i % (n * l) })
                    .collect();
                check_wall(n, l, &mixed);
            }
        }
    }

    #[test]
    fn naive_caffeinated_sweep_leaks() {
        let plan = naive_caffeinated_column_moves(2, 3, 24).unwrap();
        let g = build_tri_lattice(2, 3).unwrap();
        let tr = run(
            &g,
            MotionModel::Caffeinated,
            &plan.starts,
            &plan.moves,
            false,
        )
        .unwrap();
        assert_eq!(tr.is_swept(), None);
        assert!(!tr.recontaminations().is_empty());
    }
}
