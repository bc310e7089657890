//! Labeled trees from Prüfer sequences.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Decodes a Prüfer sequence of length `n - 2` over `0..n` into its tree.
pub fn tree_from_prufer(n: usize, seq: &[usize]) -> Result<Graph> {
    if n < 2 {
        return if seq.is_empty() && n == 1 {
            Ok(Graph::empty(1))
        } else {
            Err(Error::TooFewVertices {
                op: "tree_from_prufer",
                min: 1,
                n,
            })
        };
    }
    if seq.len() != n - 2 {
        return Err(Error::InvalidParams {
            family: "prufer",
            constraint: alloc::format!("sequence length must be n - 2 = {}", n - 2),
        });
    }
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let mut rest = (0..n).filter(|&v| degree[v] == 1);
    let a = rest.next().expect("two vertices remain");
    let b = rest.next().expect("two vertices remain");
    edges.push((a, b));
    Graph::from_edges(n, edges)
}

/// All `n^(n-2)` labeled trees on `n ≥ 1` vertices, in lexicographic
/// Prüfer-sequence order.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    let len = n.saturating_sub(2);
    let total = if n <= 2 { usize::from(n > 0) } else { n.pow(len as u32) };
    (0..total).map(move |mut idx| {
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = idx % n;
            idx /= n;
        }
        tree_from_prufer(n, &seq).expect("valid sequence")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn small_decodes() {
        assert_eq!(tree_from_prufer(2, &[]).unwrap().edge_count(), 1);
        let star = tree_from_prufer(4, &[0, 0]).unwrap();
        assert_eq!(star.degree(0), 3);
        assert!(tree_from_prufer(4, &[4, 0]).is_err());
        assert!(tree_from_prufer(4, &[0]).is_err());
    }

    #[test]
    fn cayley_counts_and_distinctness() {
        for n in 1..=6 {
            let trees: Vec<Graph> = labeled_trees(n).collect();
            let expected = if n <= 2 { 1 } else { n.pow(n as u32 - 2) };
            assert_eq!(trees.len(), expected);
            assert!(trees.iter().all(Graph::is_tree));
            let distinct: BTreeSet<Vec<(usize, usize)>> = trees
                .iter()
                .map(|t| t.edges().iter().map(|e| e.endpoints()).collect())
                .collect();
            assert_eq!(distinct.len(), expected);
        }
    }
}
