//! Exhaustive enumeration of labeled graphs.
//!
//! A labeled graph on `n` vertices is identified by its adjacency code: bit
//! `k` is set iff the `k`-th vertex pair is an edge, with pairs ordered
//! column by column over the upper triangle: `(0,1), (0,2), (1,2), (0,3), ...`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order enumerated without an override.
pub const DEFAULT_MAX_ORDER: usize = 7;
/// Largest order enumerated with the override.
pub const EXTENDED_MAX_ORDER: usize = 8;

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Vertex pairs in code-bit order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// The graph whose adjacency code is `code`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let edges = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| code >> k & 1 == 1)
        .map(|(_, p)| p);
    Graph::from_edges(n, edges).expect("pairs are in range")
}

pub fn code_of(g: &Graph) -> u64 {
    assert!(pair_count(g.n()) <= 64, "code needs n <= 11");
    pairs(g.n())
        .into_iter()
        .enumerate()
        .filter(|(_, (i, j))| g.has_edge(*i, *j))
        .fold(0, |acc, (k, _)| acc | 1 << k)
}

pub fn check_order(n: usize, allow_extended: bool) -> Result<()> {
    if n == 0 {
        return Err(Error::TooFewVertices {
            op: "enumerate_labeled_graphs",
            min: 1,
            n,
        });
    }
    let limit = if allow_extended {
        EXTENDED_MAX_ORDER
    } else {
        DEFAULT_MAX_ORDER
    };
    if n > limit {
        return Err(Error::GuardExceeded {
            op: "enumerate_labeled_graphs",
            n,
            limit,
        });
    }
    Ok(())
}

/// Every labeled graph on `n` vertices in ascending code order, optionally
/// only the connected ones.
pub fn enumerate_labeled_graphs(n: usize, connected_only: bool, allow_extended: bool) -> Result<LabeledGraphs> {
    check_order(n, allow_extended)?;
    Ok(LabeledGraphs {
        n,
        next: 0,
        end: 1u64 << pair_count(n),
        connected_only,
    })
}

#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
    connected_only: bool,
}

impl LabeledGraphs {
    /// Total codes scanned, before any connectivity filter.
    pub fn code_space(&self) -> u64 {
        self.end
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let g = graph_from_code(self.n, self.next);
            self.next += 1;
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_labeled_graphs(3, false, false).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(3, true, false).unwrap().count(), 4);
        assert_eq!(enumerate_labeled_graphs(1, true, false).unwrap().count(), 1);
    }

    #[test]
    fn guard() {
        assert!(matches!(
            enumerate_labeled_graphs(8, false, false),
            Err(Error::GuardExceeded { n: 8, limit: 7, .. })
        ));
        assert!(enumerate_labeled_graphs(8, false, true).is_ok());
        assert!(enumerate_labeled_graphs(9, false, true).is_err());
        assert!(enumerate_labeled_graphs(0, false, false).is_err());
    }

    #[test]
    fn code_round_trip() {
        for code in 0..64 {
            assert_eq!(code_of(&graph_from_code(4, code)), code);
        }
        assert_eq!(pairs(4), [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]);
    }
}
