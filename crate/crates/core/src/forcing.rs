//! The zero forcing color change rule.
//!
//! A blue vertex with exactly one white neighbor forces that neighbor blue.
//! [`closure`] records a chronological list of forces using a fixed schedule
//! (the lowest-id eligible source fires first), so force lists and termini
//! are reproducible. The closure set itself does not depend on the schedule;
//! [`closure_with`] lets callers pick forces in any order to check that.

use serde::Serialize;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ForceStep {
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureResult {
    pub closure: VertexSet,
    pub forces: Vec<ForceStep>,
    /// Closure minus the vertices that performed a force.
    pub terminus: VertexSet,
}

/// The unique white neighbor of `v`, if it has exactly one.
#[inline]
fn sole_white_neighbor(g: &Graph, blue: VertexSet, v: usize) -> Option<usize> {
    let white = g.neighbors(v) - blue;
    if white.len() == 1 {
        white.min()
    } else {
        None
    }
}

/// Every force available from the blue set `blue`, by ascending source.
pub fn available_forces(g: &Graph, blue: VertexSet) -> Vec<ForceStep> {
    blue.iter()
        .filter_map(|source| {
            sole_white_neighbor(g, blue, source).map(|target| ForceStep { source, target })
        })
        .collect()
}

/// Closure of `s` with the deterministic lowest-source schedule.
pub fn closure(g: &Graph, s: VertexSet) -> ClosureResult {
    let mut blue = s;
    let mut forces = Vec::new();
    let mut sources = VertexSet::EMPTY;
    // Blue vertices that may still have a white neighbor. A vertex leaves
    // this set for good once its neighborhood is all blue.
    let mut active = blue;
    'outer: loop {
        for v in active {
            let white = g.neighbors(v) - blue;
            match white.len() {
                0 => active.remove(v),
                1 => {
                    let t = white.min().unwrap();
                    forces.push(ForceStep {
                        source: v,
                        target: t,
                    });
                    sources.insert(v);
                    blue.insert(t);
                    active.remove(v);
                    active.insert(t);
                    continue 'outer;
                }
                _ => {}
            }
        }
        break;
    }
    ClosureResult {
        closure: blue,
        forces,
        terminus: blue - sources,
    }
}

/// Closure set only. Fires every eligible force in each sweep, which gives the
/// same set as [`closure`] with less bookkeeping; this is the hot path for
/// exhaustive subset scans.
#[inline]
pub fn closure_set(g: &Graph, s: VertexSet) -> VertexSet {
    let mut blue = s;
    let mut active = s;
    loop {
        let mut grew = VertexSet::EMPTY;
        for v in active {
            let white = g.neighbors(v) - blue;
            match white.len() {
                0 => active.remove(v),
                1 => {
                    blue |= white;
                    grew |= white;
                    active.remove(v);
                }
                _ => {}
            }
        }
        if grew.is_empty() {
            return blue;
        }
        active |= grew;
    }
}

/// Closure under a caller-chosen schedule. `pick` receives the currently
/// available forces (never empty) and returns the index of the one to fire.
pub fn closure_with<F>(g: &Graph, s: VertexSet, mut pick: F) -> ClosureResult
where
    F: FnMut(&[ForceStep]) -> usize,
{
    let mut blue = s;
    let mut forces = Vec::new();
    let mut sources = VertexSet::EMPTY;
    loop {
        let avail = available_forces(g, blue);
        if avail.is_empty() {
            break;
        }
        let step = avail[pick(&avail)];
        blue.insert(step.target);
        sources.insert(step.source);
        forces.push(step);
    }
    ClosureResult {
        closure: blue,
        forces,
        terminus: blue - sources,
    }
}

#[inline]
pub fn is_zero_forcing_set(g: &Graph, s: VertexSet) -> bool {
    closure_set(g, s) == g.vertices()
}

/// Terminus of the deterministic force set of `s`.
pub fn reversal(g: &Graph, s: VertexSet) -> VertexSet {
    closure(g, s).terminus
}

/// Checks that `forces` is a valid chronological list for `s`: each source is
/// blue and the target is its only white neighbor at that moment. Returns the
/// resulting blue set.
pub fn replay_forces(g: &Graph, s: VertexSet, forces: &[ForceStep]) -> Option<VertexSet> {
    let mut blue = s;
    for f in forces {
        if !blue.contains(f.source) || sole_white_neighbor(g, blue, f.source) != Some(f.target) {
            return None;
        }
        blue.insert(f.target);
    }
    Some(blue)
}
