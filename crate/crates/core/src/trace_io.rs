//! Line-delimited trace and move files.
//!
//! A trace file holds one JSON record per time step:
//! `{"t":0,"lions":[0,3],"cleared":[0,3],"move":[]}`. The `move` field of the
//! record at time `t` is the move that produced it (empty at `t = 0`); each
//! entry is `-1` for a lion that stays or the vertex it moves to.
//!
//! A moves file holds one JSON array per line in the same encoding.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::dynamics::{Action, MoveStep, SimState, Trace};
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Debug, Serialize, Deserialize)]
struct Record {
    t: usize,
    lions: Vec<usize>,
    cleared: Vec<usize>,
    #[serde(rename = "move")]
    mv: Vec<i64>,
}

fn encode_step(mv: &MoveStep) -> Vec<i64> {
    mv.0.iter().map(|a| a.encode()).collect()
}

fn decode_step(codes: &[i64], line: usize) -> Result<MoveStep> {
    codes
        .iter()
        .map(|&c| Action::decode(c))
        .collect::<Result<Vec<_>>>()
        .map(MoveStep)
        .map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })
}

pub fn format_trace(trace: &Trace) -> String {
    let mut out = String::new();
    for (i, s) in trace.states.iter().enumerate() {
        let rec = Record {
            t: s.time,
            lions: s.lions.clone(),
            cleared: s.cleared.to_vec(),
            mv: if i == 0 {
                Vec::new()
            } else {
                encode_step(&trace.moves[i - 1])
            },
        };
        writeln!(out, "{}", serde_json::to_string(&rec).unwrap()).unwrap();
    }
    out
}

/// Parses a trace file; `vertex_count` sizes the cleared sets.
pub fn parse_trace(text: &str, vertex_count: usize) -> Result<Trace> {
    let mut states = Vec::new();
    let mut moves = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let rec: Record = serde_json::from_str(line).map_err(|e| Error::Parse {
            line: i + 1,
            message: e.to_string(),
        })?;
        let cleared =
            VertexSet::from_vertices(vertex_count, rec.cleared).map_err(|e| Error::Parse {
                line: i + 1,
                message: e.to_string(),
            })?;
        if !states.is_empty() {
            moves.push(decode_step(&rec.mv, i + 1)?);
        }
        states.push(SimState {
            time: rec.t,
            lions: rec.lions,
            cleared,
        });
    }
    if states.is_empty() {
        return Err(Error::Parse {
            line: 1,
            message: "empty trace".into(),
        });
    }
    Ok(Trace { states, moves })
}

pub fn format_moves(moves: &[MoveStep]) -> String {
    let mut out = String::new();
    for mv in moves {
        writeln!(out, "{}", serde_json::to_string(&encode_step(mv)).unwrap()).unwrap();
    }
    out
}

pub fn parse_moves(text: &str) -> Result<Vec<MoveStep>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let codes: Vec<i64> = serde_json::from_str(line).map_err(|e| Error::Parse {
            line: i + 1,
            message: e.to_string(),
        })?;
        out.push(decode_step(&codes, i + 1)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{run, MotionModel};
    use crate::graph::build_path;

    #[test]
    fn trace_roundtrip() {
        let p = build_path(3).unwrap();
        let moves = vec![
            MoveStep(vec![Action::MoveTo(1), Action::Stay]),
            MoveStep(vec![Action::MoveTo(2), Action::Stay]),
        ];
        let tr = run(&p, MotionModel::Free, &[0, 0], &moves, false).unwrap();
        let text = format_trace(&tr);
        assert!(text.starts_with(r#"{"t":0,"lions":[0,0],"cleared":[0],"move":[]}"#));
        assert_eq!(
            text.lines().nth(1).unwrap(),
            r#"{"t":1,"lions":[1,0],"cleared":[0,1],"move":[1,-1]}"#
        );
        assert_eq!(parse_trace(&text, 3).unwrap(), tr);
    }

    #[test]
    fn moves_roundtrip_and_errors() {
        let moves = vec![MoveStep(vec![Action::Stay, Action::MoveTo(7)])];
        let text = format_moves(&moves);
        assert_eq!(text, "[-1,7]\n");
        assert_eq!(parse_moves(&text).unwrap(), moves);
        assert!(matches!(
            parse_moves("[-1]\n[0,"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_moves("[-3]"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(parse_trace("", 3).is_err());
    }
}
