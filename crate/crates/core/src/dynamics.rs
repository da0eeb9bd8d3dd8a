//! The clearing/recontamination rule and the three lion motion models.
//!
//! A step is synchronous. Lions first move (or stay), then every cleared
//! vertex that is not occupied afterwards is lost if it has a neighbour that
//! was contaminated *before* the step, unless some lion traversed that edge
//! during the step. Contamination therefore advances exactly one hop per
//! step, and a vertex a lion has just left can be lost in that same step.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MotionModel {
    /// Any subset of lions may move.
    Free,
    /// Every lion moves at every step.
    Caffeinated,
    /// At most one lion moves per step.
    Polite,
}

impl std::str::FromStr for MotionModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "free" => Ok(MotionModel::Free),
            "caffeinated" => Ok(MotionModel::Caffeinated),
            "polite" => Ok(MotionModel::Polite),
            other => Err(Error::InvalidParameter(format!(
                "unknown motion model `{other}`"
            ))),
        }
    }
}

impl fmt::Display for MotionModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MotionModel::Free => "free",
            MotionModel::Caffeinated => "caffeinated",
            MotionModel::Polite => "polite",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Action {
    Stay,
    MoveTo(usize),
}

impl Action {
    pub fn encode(self) -> i64 {
        match self {
            Action::Stay => -1,
            Action::MoveTo(v) => v as i64,
        }
    }

    pub fn decode(x: i64) -> Result<Action> {
        match x {
            -1 => Ok(Action::Stay),
            v if v >= 0 => Ok(Action::MoveTo(v as usize)),
            v => Err(Error::InvalidParameter(format!("bad move code {v}"))),
        }
    }
}

/// One synchronous move: an action per lion, indexed like the positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MoveStep(pub Vec<Action>);

impl MoveStep {
    pub fn stay(k: usize) -> MoveStep {
        MoveStep(vec![Action::Stay; k])
    }

    /// Builds the step that takes lions from `from` to `to`; equal entries
    /// become `Stay`.
    pub fn between(from: &[usize], to: &[usize]) -> MoveStep {
        MoveStep(
            from.iter()
                .zip(to)
                .map(|(&a, &b)| {
                    if a == b {
                        Action::Stay
                    } else {
                        Action::MoveTo(b)
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn movers(&self) -> usize {
        self.0
            .iter()
            .filter(|a| matches!(a, Action::MoveTo(_)))
            .count()
    }

    /// Positions after applying this step to `lions` (no adjacency check).
    pub fn apply_to(&self, lions: &[usize]) -> Vec<usize> {
        lions
            .iter()
            .zip(&self.0)
            .map(|(&p, a)| match *a {
                Action::Stay => p,
                Action::MoveTo(v) => v,
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// The move list has the wrong number of entries.
    WrongLength { expected: usize, got: usize },
    /// Target vertex is not adjacent to the lion's position (or is itself).
    NotAdjacent { from: usize, to: usize },
    /// Caffeinated lions may not stay.
    MustMove,
    /// More than one polite lion moved.
    Politeness { movers: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub lion: Option<usize>,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(i) = self.lion {
            write!(f, "lion {i}: ")?;
        }
        match self.kind {
            ViolationKind::WrongLength { expected, got } => {
                write!(f, "expected {expected} actions, got {got}")
            }
            ViolationKind::NotAdjacent { from, to } => write!(f, "{from} -> {to} is not an edge"),
            ViolationKind::MustMove => write!(f, "caffeinated lions must move"),
            ViolationKind::Politeness { movers } => {
                write!(f, "{movers} polite lions moved at once")
            }
        }
    }
}

/// Formats a violation list for error messages.
pub(crate) fn describe(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimState {
    pub time: usize,
    pub lions: Vec<usize>,
    pub cleared: VertexSet,
}

impl SimState {
    pub fn is_swept(&self) -> bool {
        self.cleared.is_full()
    }

    pub fn occupied(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.cleared.universe());
        for &p in &self.lions {
            s.insert(p);
        }
        s
    }
}

fn check_lions(g: &Graph, lions: &[usize]) -> Result<()> {
    for (i, &p) in lions.iter().enumerate() {
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

/// Time 0: exactly the occupied vertices are cleared.
pub fn initial_state(g: &Graph, lions: &[usize]) -> Result<SimState> {
    check_lions(g, lions)?;
    let cleared = VertexSet::from_vertices(g.vertex_count(), lions.iter().copied())?;
    Ok(SimState {
        time: 0,
        lions: lions.to_vec(),
        cleared,
    })
}

/// Checks `mv` against the graph and the motion model without touching the state.
pub fn validate_moves(
    g: &Graph,
    model: MotionModel,
    state: &SimState,
    mv: &MoveStep,
) -> std::result::Result<(), Vec<Violation>> {
    let k = state.lions.len();
    if mv.len() != k {
        return Err(vec![Violation {
            lion: None,
            kind: ViolationKind::WrongLength {
                expected: k,
                got: mv.len(),
            },
        }]);
    }
    let mut out = Vec::new();
    for (i, (&from, action)) in state.lions.iter().zip(&mv.0).enumerate() {
        match *action {
            Action::MoveTo(to) if !g.is_adjacent(from, to) => out.push(Violation {
                lion: Some(i),
                kind: ViolationKind::NotAdjacent { from, to },
            }),
            Action::Stay if model == MotionModel::Caffeinated => out.push(Violation {
                lion: Some(i),
                kind: ViolationKind::MustMove,
            }),
            _ => {}
        }
    }
    if model == MotionModel::Polite && mv.movers() > 1 {
        out.push(Violation {
            lion: None,
            kind: ViolationKind::Politeness {
                movers: mv.movers(),
            },
        });
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// Applies one synchronous move. Only adjacency is checked here; motion-model
/// legality is the caller's concern (see [`validate_moves`] and [`run`]).
pub fn step(g: &Graph, state: &SimState, mv: &MoveStep) -> Result<SimState> {
    if let Err(violations) = validate_moves(g, MotionModel::Free, state, mv) {
        return Err(Error::InvalidMove {
            step: state.time,
            violations,
        });
    }
    let lions = mv.apply_to(&state.lions);
    let blocked: Vec<(usize, usize)> = state
        .lions
        .iter()
        .zip(&lions)
        .filter(|(a, b)| a != b)
        .map(|(&a, &b)| (a.min(b), a.max(b)))
        .collect();
    let is_blocked = |u: usize, v: usize| blocked.contains(&(u.min(v), u.max(v)));

    let mut occupied = VertexSet::empty(g.vertex_count());
    for &p in &lions {
        occupied.insert(p);
    }
    let mut cleared = state.cleared.union(&occupied);
    for v in state.cleared.iter() {
        if occupied.contains(v) {
            continue;
        }
        let exposed = g
            .neighbors(v)
            .iter()
            .any(|&u| !state.cleared.contains(u) && !is_blocked(u, v));
        if exposed {
            cleared.remove(v);
        }
    }
    Ok(SimState {
        time: state.time + 1,
        lions,
        cleared,
    })
}

/// A sequence of states linked by moves; `states[i + 1] = step(states[i], moves[i])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub states: Vec<SimState>,
    pub moves: Vec<MoveStep>,
}

impl Trace {
    pub fn new(initial: SimState) -> Trace {
        Trace {
            states: vec![initial],
            moves: Vec::new(),
        }
    }

    pub fn initial(&self) -> &SimState {
        &self.states[0]
    }

    pub fn last(&self) -> &SimState {
        self.states.last().expect("trace has an initial state")
    }

    pub fn lion_count(&self) -> usize {
        self.initial().lions.len()
    }

    pub fn push(&mut self, mv: MoveStep, next: SimState) {
        self.moves.push(mv);
        self.states.push(next);
    }

    /// First time at which every vertex is cleared.
    pub fn is_swept(&self) -> Option<usize> {
        self.states.iter().find(|s| s.is_swept()).map(|s| s.time)
    }

    pub fn is_monotone(&self) -> bool {
        self.is_monotone_from(0)
    }

    /// Monotonicity of the suffix starting at state index `start`.
    pub fn is_monotone_from(&self, start: usize) -> bool {
        self.states[start.min(self.states.len() - 1)..]
            .windows(2)
            .all(|w| w[0].cleared.is_subset(&w[1].cleared))
    }

    /// `(time, vertex)` pairs where a vertex cleared at `time` is contaminated at `time + 1`.
    pub fn recontaminations(&self) -> Vec<(usize, usize)> {
        self.states
            .windows(2)
            .flat_map(|w| {
                w[0].cleared
                    .difference(&w[1].cleared)
                    .iter()
                    .map(|v| (w[0].time, v))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    /// Replays the moves from the initial state and checks each recorded state.
    pub fn replays(&self, g: &Graph, model: MotionModel) -> Result<bool> {
        let mut cur = self.initial().clone();
        for (i, mv) in self.moves.iter().enumerate() {
            if let Err(violations) = validate_moves(g, model, &cur, mv) {
                return Err(Error::InvalidMove {
                    step: i,
                    violations,
                });
            }
            cur = step(g, &cur, mv)?;
            if cur != self.states[i + 1] {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Folds [`step`] over `moves`, validating each against `model`. With
/// `stop_on_sweep` the trace ends at the first fully cleared state.
pub fn run(
    g: &Graph,
    model: MotionModel,
    lions: &[usize],
    moves: &[MoveStep],
    stop_on_sweep: bool,
) -> Result<Trace> {
    let mut trace = Trace::new(initial_state(g, lions)?);
    for (i, mv) in moves.iter().enumerate() {
        if stop_on_sweep && trace.last().is_swept() {
            break;
        }
        if let Err(violations) = validate_moves(g, model, trace.last(), mv) {
            return Err(Error::InvalidMove {
                step: i,
                violations,
            });
        }
        let next = step(g, trace.last(), mv)?;
        trace.push(mv.clone(), next);
    }
    Ok(trace)
}
