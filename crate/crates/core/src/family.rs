//! Membership in the family `F`: graphs obtained from a disconnected graph of
//! order at least 2 by repeatedly joining a new universal vertex. These are
//! exactly the graphs with `CC(G) = 0`.
//!
//! Membership is decided top-down by peeling full vertices. Two full vertices
//! have the same closed neighborhood, so the choice of which one to peel does
//! not affect the verdict; the lowest id is used for a deterministic trace.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeelStep {
    /// Original id of the removed full vertex.
    pub vertex: usize,
    /// Order of the graph left after the removal.
    pub remaining: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeelTerminal {
    /// Reached a disconnected graph of order ≥ 2: member.
    DisconnectedGe2,
    /// Reached a connected graph without full vertices: not a member.
    ConnectedNoFull,
    /// Peeled down to `K_1`: not a member.
    ReachedK1,
}

impl PeelTerminal {
    pub fn name(self) -> &'static str {
        match self {
            PeelTerminal::DisconnectedGe2 => "disconnected_ge2",
            PeelTerminal::ConnectedNoFull => "connected_no_full",
            PeelTerminal::ReachedK1 => "reached_k1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelTrace {
    pub steps: Vec<PeelStep>,
    pub terminal: PeelTerminal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyVerdict {
    pub member: bool,
    pub trace: PeelTrace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeelChoice {
    Lowest,
    Highest,
}

pub fn in_family_f(g: &Graph) -> Result<FamilyVerdict> {
    in_family_f_with(g, PeelChoice::Lowest)
}

pub fn in_family_f_with(g: &Graph, choice: PeelChoice) -> Result<FamilyVerdict> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph { op: "in_family_f" });
    }
    let mut alive = g.vertices();
    let mut steps = Vec::new();
    let terminal = loop {
        let order = alive.len();
        if order == 1 {
            break PeelTerminal::ReachedK1;
        }
        if !g.is_connected_within(&alive) {
            break PeelTerminal::DisconnectedGe2;
        }
        let full = full_within(g, &alive);
        let pick = match choice {
            PeelChoice::Lowest => full.first(),
            PeelChoice::Highest => full.last(),
        };
        let Some(v) = pick else {
            break PeelTerminal::ConnectedNoFull;
        };
        alive.remove(v);
        steps.push(PeelStep {
            vertex: v,
            remaining: order - 1,
        });
    };
    Ok(FamilyVerdict {
        member: terminal == PeelTerminal::DisconnectedGe2,
        trace: PeelTrace { steps, terminal },
    })
}

fn full_within(g: &Graph, alive: &VertexSet) -> VertexSet {
    let order = alive.len();
    let mut full = VertexSet::empty(g.n());
    for v in alive {
        if g.neighbors(v).intersection(alive).len() + 1 == order {
            full.insert(v);
        }
    }
    full
}

impl PeelTrace {
    /// Re-runs the trace against `g`, checking each peeled vertex was full at
    /// its step and the terminal state matches.
    pub fn replays(&self, g: &Graph) -> bool {
        let mut alive = g.vertices();
        for step in &self.steps {
            if !alive.contains(step.vertex) || !full_within(g, &alive).contains(step.vertex) {
                return false;
            }
            alive.remove(step.vertex);
            if alive.len() != step.remaining {
                return false;
            }
        }
        let connected = g.is_connected_within(&alive);
        match self.terminal {
            PeelTerminal::ReachedK1 => alive.len() == 1,
            PeelTerminal::DisconnectedGe2 => alive.len() >= 2 && !connected,
            PeelTerminal::ConnectedNoFull => connected && alive.len() >= 2 && full_within(g, &alive).is_empty(),
        }
    }
}
