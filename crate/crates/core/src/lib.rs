//! Lions-and-contamination pursuit-evasion on graphs.
//!
//! Lions walk on a graph and clear every vertex they occupy, while
//! contamination floods back one hop per step through every edge no lion is
//! guarding. This crate simulates that game, generates and checks sweeping
//! strategies on triangular lattices, decides small instances exhaustively,
//! and computes the vertex-isoperimetric quantities that bound the number of
//! lions from below.

pub mod cheeger;
pub mod dynamics;
pub mod error;
pub mod graph;
pub mod io;
pub mod isoperimetry;
pub mod search;
pub mod strategies;
pub mod subsets;
pub mod trace_io;
pub mod vertex_set;

pub use dynamics::{Action, MotionModel, MoveStep, SimState, Trace};
pub use error::{Error, Result};
pub use graph::{Family, Graph, GridCoord};
pub use vertex_set::VertexSet;
