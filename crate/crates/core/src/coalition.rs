//! Connected coalitions, connected coalition partitions and the exact `CC(G)`
//! oracle.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::domination::{is_connected_dominating_set, require_connected, DomaticPartition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mask::{bits, MaskGraph};
use crate::partition::{block_masks, SetPartitions};
use crate::vertex_set::VertexSet;
use crate::{DEFAULT_GUARD, MAX_SEARCH_ORDER};

/// A list of nonempty, pairwise disjoint vertex sets covering `0..universe`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    universe: usize,
    parts: Vec<VertexSet>,
}

/// Candidate connected coalition partition; validity is checked separately by
/// [`is_cc_partition`].
pub type CcPartition = Partition;

impl Partition {
    pub fn new(universe: usize, parts: Vec<VertexSet>) -> Result<Self> {
        let mut seen = VertexSet::empty(universe);
        for (i, p) in parts.iter().enumerate() {
            if p.universe() != universe {
                return Err(Error::NotAPartition {
                    reason: format!("part {i} is over {} vertices, expected {universe}", p.universe()),
                });
            }
            if p.is_empty() {
                return Err(Error::NotAPartition {
                    reason: format!("part {i} is empty"),
                });
            }
            if let Some(v) = p.intersection(&seen).first() {
                return Err(Error::NotAPartition {
                    reason: format!("vertex {v} appears in more than one part"),
                });
            }
            seen.union_with(p);
        }
        if let Some(v) = seen.complement().first() {
            return Err(Error::NotAPartition {
                reason: format!("vertex {v} is not covered"),
            });
        }
        Ok(Partition { universe, parts })
    }

    /// From vertex-id lists such as `[[0, 1], [2, 3], [4]]`.
    pub fn from_lists(universe: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let mut parts = Vec::with_capacity(lists.len());
        for list in lists {
            parts.push(VertexSet::from_vertices(universe, list.iter().copied()).map_err(|e| {
                Error::NotAPartition {
                    reason: format!("{e}"),
                }
            })?);
        }
        Self::new(universe, parts)
    }

    pub fn singletons(universe: usize) -> Self {
        Partition {
            universe,
            parts: (0..universe).map(|v| VertexSet::singleton(universe, v)).collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(VertexSet::to_vec).collect()
    }

    fn from_masks(universe: usize, masks: &[u64]) -> Self {
        Partition {
            universe,
            parts: masks.iter().map(|&m| VertexSet::from_mask(universe, m)).collect(),
        }
    }
}

/// Neither set is a CDS but their union is. Symmetric in its arguments.
pub fn forms_connected_coalition(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<bool> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(vertex) = a.intersection(b).first() {
        return Err(Error::Overlap { vertex });
    }
    Ok(!is_connected_dominating_set(g, a)
        && !is_connected_dominating_set(g, b)
        && is_connected_dominating_set(g, &a.union(b)))
}

/// Role of one part within a candidate partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartRole {
    /// `{v}` with `v` a full vertex.
    FullSingleton,
    /// Non-CDS part in coalition with the (lowest-indexed) non-CDS part `j`.
    Partnered(usize),
    /// Non-CDS part without a coalition partner.
    Unpartnered,
    /// A CDS with more than one vertex, which no valid partition may contain.
    IllegalCds,
}

impl PartRole {
    pub fn is_ok(self) -> bool {
        matches!(self, PartRole::FullSingleton | PartRole::Partnered(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCheck {
    pub valid: bool,
    pub roles: Vec<PartRole>,
}

pub fn is_cc_partition(g: &Graph, psi: &CcPartition) -> Result<PartitionCheck> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph { op: "is_cc_partition" });
    }
    if psi.universe() != g.n() {
        return Err(Error::NotAPartition {
            reason: format!("partition covers {} vertices, graph has {}", psi.universe(), g.n()),
        });
    }
    let parts = psi.parts();
    let cds: Vec<bool> = parts.iter().map(|p| is_connected_dominating_set(g, p)).collect();
    let full = g.full_vertices();
    let roles: Vec<PartRole> = parts
        .iter()
        .enumerate()
        .map(|(i, p)| {
            if cds[i] {
                if p.len() == 1 {
                    PartRole::FullSingleton
                } else {
                    PartRole::IllegalCds
                }
            } else {
                debug_assert!(p.is_disjoint(&full), "a part holding a full vertex is a CDS");
                (0..parts.len())
                    .find(|&j| j != i && !cds[j] && is_connected_dominating_set(g, &p.union(&parts[j])))
                    .map_or(PartRole::Unpartnered, PartRole::Partnered)
            }
        })
        .collect();
    Ok(PartitionCheck {
        valid: roles.iter().all(|r| r.is_ok()),
        roles,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CcOptions {
    /// Largest order searched (capped at [`MAX_SEARCH_ORDER`]).
    pub guard: usize,
    /// Answer 0 for disconnected graphs of order ≥ 2 without searching.
    pub shortcut_disconnected: bool,
}

impl Default for CcOptions {
    fn default() -> Self {
        CcOptions {
            guard: DEFAULT_GUARD,
            shortcut_disconnected: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CcResult {
    pub cc: usize,
    pub witness: Option<CcPartition>,
}

pub fn cc_number(g: &Graph) -> Result<CcResult> {
    cc_number_with(g, &CcOptions::default())
}

/// Exact `CC(G)` by scanning every set partition in restricted-growth order.
/// The witness is the first partition of maximum size in that order.
pub fn cc_number_with(g: &Graph, opts: &CcOptions) -> Result<CcResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph { op: "cc_number" });
    }
    if opts.shortcut_disconnected && n >= 2 && !g.is_connected() {
        return Ok(CcResult { cc: 0, witness: None });
    }
    let limit = opts.guard.min(MAX_SEARCH_ORDER);
    if n > limit {
        return Err(Error::GuardExceeded {
            op: "cc_number",
            n,
            limit,
        });
    }
    let mg = MaskGraph::new(g, "cc_number")?;
    let table = mg.cds_table();

    let mut best: Option<Vec<u64>> = None;
    let mut best_k = 0;
    let mut masks = Vec::with_capacity(n);
    let mut rgs = SetPartitions::new(n);
    while let Some(labels) = rgs.next() {
        let k = labels.iter().max().map_or(0, |m| m + 1);
        if k <= best_k {
            continue;
        }
        block_masks(labels, k, &mut masks);
        if masks_valid(&masks, |m| table[m as usize]) {
            best_k = k;
            best = Some(masks.clone());
            if k == n {
                break;
            }
        }
    }
    Ok(CcResult {
        cc: best_k,
        witness: best.map(|m| Partition::from_masks(n, &m)),
    })
}

fn masks_valid(parts: &[u64], is_cds: impl Fn(u64) -> bool) -> bool {
    let cds: Vec<bool> = parts.iter().map(|&p| is_cds(p)).collect();
    parts.iter().enumerate().all(|(i, &p)| {
        if cds[i] {
            p.count_ones() == 1
        } else {
            parts
                .iter()
                .enumerate()
                .any(|(j, &q)| j != i && !cds[j] && is_cds(p | q))
        }
    })
}

/// Builds a valid connected coalition partition with at least `2·|D|` parts
/// from a connected domatic partition `D`.
///
/// Every part but the last is shrunk to a minimal CDS (surplus moves to the
/// last part) and split in two; a 2-split of a minimal non-singleton CDS is
/// always a connected coalition. The last part is shrunk to a minimal core
/// that is split likewise, and its remainder either stands alone (when it
/// finds a partner) or is merged into one of the core halves. If the
/// remainder is itself a CDS, it becomes an extra domatic part and the
/// procedure restarts. Each split and the final partition are verified.
pub fn expand_domatic_to_cc_partition(g: &Graph, d: &DomaticPartition) -> Result<CcPartition> {
    const OP: &str = "expand_domatic_to_cc_partition";
    require_connected(g, OP)?;
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { op: OP, min: 2, n });
    }
    if let Some(vertex) = g.full_vertices().first() {
        return Err(Error::FullVertex { op: OP, vertex });
    }
    if d.as_partition().universe() != n {
        return Err(Error::NotAPartition {
            reason: format!("domatic partition covers {} vertices, graph has {n}", d.as_partition().universe()),
        });
    }
    if let Some(index) = d.parts().iter().position(|p| !is_connected_dominating_set(g, p)) {
        return Err(Error::NotConnectedDominating { index });
    }
    let mg = MaskGraph::new(g, OP)?;
    let cds = |m: u64| mg.is_cds(m);

    let mut parts: Vec<u64> = d.parts().iter().map(|p| p.to_mask().expect("n <= 64")).collect();
    let (core, rest) = loop {
        let k = parts.len();
        for i in 0..k - 1 {
            let minimal = shrink(&mg, parts[i]);
            parts[k - 1] |= parts[i] & !minimal;
            parts[i] = minimal;
        }
        let last = parts[k - 1];
        let core = shrink(&mg, last);
        let rest = last & !core;
        if rest != 0 && cds(rest) {
            parts[k - 1] = core;
            parts.push(rest);
            continue;
        }
        break (core, rest);
    };

    let k = parts.len();
    let mut out = Vec::with_capacity(2 * k + 1);
    for (i, &part) in parts[..k - 1].iter().enumerate() {
        let (a, b) = coalition_splits(part, &cds).next().ok_or_else(|| Error::ExpansionFailed {
            reason: format!("minimal CDS {:?} (part {i}) admits no coalition split", list(part)),
        })?;
        out.push(a);
        out.push(b);
    }

    let result = if rest == 0 {
        coalition_splits(core, &cds).next().map(|(a, b)| {
            out.push(a);
            out.push(b);
            out
        })
    } else {
        coalition_splits(core, &cds).find_map(|(a, b)| {
            let candidates = [
                [a, b, rest].as_slice().to_vec(),
                [a, b | rest].as_slice().to_vec(),
                [a | rest, b].as_slice().to_vec(),
            ];
            candidates.into_iter().find_map(|tail| {
                let mut full = out.clone();
                full.extend(tail);
                masks_valid(&full, &cds).then_some(full)
            })
        })
    };
    let Some(result) = result else {
        return Err(Error::ExpansionFailed {
            reason: format!(
                "no split of the last part's minimal core {:?} accommodates the remainder {:?}",
                list(core),
                list(rest)
            ),
        });
    };

    if !masks_valid(&result, &cds) || result.len() < 2 * d.len() {
        return Err(Error::ExpansionFailed {
            reason: format!("constructed partition of size {} is invalid or too small", result.len()),
        });
    }
    Ok(Partition::from_masks(n, &result))
}

fn list(m: u64) -> Vec<usize> {
    bits(m).collect()
}

/// Drops vertices in ascending order while the set stays a CDS, to a fixed point.
fn shrink(mg: &MaskGraph, mut s: u64) -> u64 {
    loop {
        let mut changed = false;
        for v in bits(s) {
            let smaller = s & !(1 << v);
            if mg.is_cds(smaller) {
                s = smaller;
                changed = true;
            }
        }
        if !changed {
            return s;
        }
    }
}

/// Two-way splits `(a, b)` of `s` into a connected coalition. `a` always holds
/// the lowest vertex; candidates come in ascending order of `a`.
fn coalition_splits<'a>(s: u64, cds: &'a impl Fn(u64) -> bool) -> impl Iterator<Item = (u64, u64)> + 'a {
    let low = s & s.wrapping_neg();
    let rest = s & !low;
    let mut sub = 0u64;
    let mut done = s == 0 || rest == 0;
    core::iter::from_fn(move || {
        while !done {
            let current = sub;
            if sub == rest {
                done = true;
            } else {
                sub = sub.wrapping_sub(rest) & rest;
            }
            if current == rest {
                continue;
            }
            let a = low | current;
            let b = s & !a;
            if !cds(a) && !cds(b) && cds(s) {
                return Some((a, b));
            }
        }
        None
    })
}

/// `CCG(G, ψ)`: one vertex per part, an edge for each coalition pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalitionGraph {
    pub partition: CcPartition,
    pub graph: Graph,
}

pub fn coalition_graph(g: &Graph, psi: &CcPartition) -> Result<CoalitionGraph> {
    let check = is_cc_partition(g, psi)?;
    if !check.valid {
        let (i, role) = check
            .roles
            .iter()
            .enumerate()
            .find(|(_, r)| !r.is_ok())
            .expect("invalid partition has a failing part");
        let reason: String = match role {
            PartRole::IllegalCds => format!("part {i} is a CDS with more than one vertex"),
            _ => format!("part {i} has no coalition partner"),
        };
        return Err(Error::InvalidCcPartition { reason });
    }
    let parts = psi.parts();
    let cds: Vec<bool> = parts.iter().map(|p| is_connected_dominating_set(g, p)).collect();
    let mut edges = Vec::new();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if !cds[i] && !cds[j] && is_connected_dominating_set(g, &parts[i].union(&parts[j])) {
                edges.push((i, j));
            }
        }
    }
    Ok(CoalitionGraph {
        partition: psi.clone(),
        graph: Graph::from_edges(parts.len(), edges)?,
    })
}
