//! Dominating and connected dominating sets, `γ_c(G)` and `d_c(G)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::coalition::Partition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mask::MaskGraph;
use crate::vertex_set::VertexSet;
use crate::MAX_SEARCH_ORDER;

/// `∪_{v∈S} N[v] = V(G)`.
pub fn is_dominating_set(g: &Graph, s: &VertexSet) -> bool {
    let mut covered = s.clone();
    for v in s {
        covered.union_with(g.neighbors(v));
    }
    covered.len() == g.n()
}

/// Dominating and inducing a connected subgraph. The empty set is never a CDS.
pub fn is_connected_dominating_set(g: &Graph, s: &VertexSet) -> bool {
    !s.is_empty() && is_dominating_set(g, s) && g.is_connected_within(s)
}

pub(crate) fn require_connected(g: &Graph, op: &'static str) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph { op });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected { op });
    }
    Ok(())
}

/// Minimum CDS size with the lexicographically first minimum witness
/// (comparing sorted member lists).
pub fn gamma_c(g: &Graph) -> Result<(usize, VertexSet)> {
    require_connected(g, "gamma_c")?;
    let mg = MaskGraph::new(g, "gamma_c")?;
    let n = g.n();
    for k in 1..=n {
        // lexicographic k-combinations of 0..n
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mask = idx.iter().fold(0u64, |m, &v| m | 1 << v);
            if mg.is_cds(mask) {
                return Ok((k, VertexSet::from_mask(n, mask)));
            }
            let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    unreachable!("V(G) is a CDS of a connected graph")
}

/// A partition of `V(G)` into connected dominating sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomaticPartition(Partition);

impl DomaticPartition {
    pub fn new(g: &Graph, partition: Partition) -> Result<Self> {
        if partition.universe() != g.n() {
            return Err(Error::NotAPartition {
                reason: alloc::format!(
                    "partition covers {} vertices, graph has {}",
                    partition.universe(),
                    g.n()
                ),
            });
        }
        if let Some(index) = partition
            .parts()
            .iter()
            .position(|p| !is_connected_dominating_set(g, p))
        {
            return Err(Error::NotConnectedDominating { index });
        }
        Ok(DomaticPartition(partition))
    }

    pub fn parts(&self) -> &[VertexSet] {
        self.0.parts()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn into_partition(self) -> Partition {
        self.0
    }
}

/// `d_c(G)`: the most parts in a partition of `V(G)` into CDSs.
///
/// Since every superset of a CDS is a CDS, this equals the largest packing of
/// disjoint minimal CDSs; leftover vertices join the last part. The search
/// branches on the lowest free vertex (use it in a minimal CDS, or leave it
/// out) and prunes with the `⌊free / γ_c⌋` bound.
pub fn connected_domatic_number(g: &Graph, guard: usize) -> Result<(usize, DomaticPartition)> {
    require_connected(g, "connected_domatic_number")?;
    let n = g.n();
    let limit = guard.min(MAX_SEARCH_ORDER);
    if n > limit {
        return Err(Error::GuardExceeded {
            op: "connected_domatic_number",
            n,
            limit,
        });
    }
    let mg = MaskGraph::new(g, "connected_domatic_number")?;
    let table = mg.cds_table();
    let mut by_lowest: Vec<Vec<u64>> = vec![Vec::new(); n];
    let mut gamma = n;
    for s in 1..(1u64 << n) {
        if mg.is_minimal_cds(&table, s) {
            by_lowest[s.trailing_zeros() as usize].push(s);
            gamma = gamma.min(s.count_ones() as usize);
        }
    }

    struct Packer<'a> {
        by_lowest: &'a [Vec<u64>],
        gamma: usize,
        chosen: Vec<u64>,
        best: Vec<u64>,
    }

    impl Packer<'_> {
        fn search(&mut self, free: u64) {
            if self.chosen.len() > self.best.len() {
                self.best = self.chosen.clone();
            }
            let bound = self.chosen.len() + free.count_ones() as usize / self.gamma;
            if free == 0 || bound <= self.best.len() {
                return;
            }
            let v = free.trailing_zeros() as usize;
            for i in 0..self.by_lowest[v].len() {
                let s = self.by_lowest[v][i];
                if s & !free == 0 {
                    self.chosen.push(s);
                    self.search(free & !s);
                    self.chosen.pop();
                }
            }
            self.search(free & !(1 << v));
        }
    }

    let mut packer = Packer {
        by_lowest: &by_lowest,
        gamma,
        chosen: Vec::new(),
        best: Vec::new(),
    };
    packer.search(mg.all);
    let mut parts = packer.best;
    let used = parts.iter().fold(0, |acc, &s| acc | s);
    *parts.last_mut().expect("V(G) contains a minimal CDS") |= mg.all & !used;

    let partition = Partition::new(n, parts.iter().map(|&s| VertexSet::from_mask(n, s)).collect())?;
    let k = partition.len();
    Ok((k, DomaticPartition::new(g, partition)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};
    use alloc::string::ToString;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn domination_examples() {
        let c6 = cycle(6);
        assert!(is_dominating_set(&c6, &set(6, &[0, 3])));
        assert!(!is_dominating_set(&c6, &set(6, &[0, 1])));
        assert!(is_dominating_set(&c6, &c6.vertices()));
        assert!(is_dominating_set(&Graph::empty(0), &VertexSet::empty(0)));
        assert!(!is_dominating_set(&c6, &VertexSet::empty(6)));
    }

    #[test]
    fn cds_examples() {
        let c6 = cycle(6);
        assert!(is_connected_dominating_set(&c6, &set(6, &[0, 1, 2, 3])));
        assert!(!is_connected_dominating_set(&c6, &set(6, &[0, 3])));
        assert!(is_connected_dominating_set(&path(3), &set(3, &[1])));
        assert!(!is_connected_dominating_set(&path(3), &set(3, &[0])));
        assert!(!is_connected_dominating_set(&c6, &VertexSet::empty(6)));
    }

    #[test]
    fn gamma_c_examples() {
        assert_eq!(gamma_c(&complete(5)).unwrap(), (1, set(5, &[0])));
        assert_eq!(gamma_c(&cycle(6)).unwrap(), (4, set(6, &[0, 1, 2, 3])));
        assert_eq!(gamma_c(&path(6)).unwrap(), (4, set(6, &[1, 2, 3, 4])));
        assert_eq!(
            gamma_c(&Graph::empty(2)).unwrap_err().to_string(),
            "gamma_c undefined for disconnected graphs"
        );
    }

    #[test]
    fn domatic_examples() {
        let (k, d) = connected_domatic_number(&cycle(4), 12).unwrap();
        assert_eq!(k, 2);
        assert_eq!(d.parts(), [set(4, &[0, 1]), set(4, &[2, 3])]);

        let (k, d) = connected_domatic_number(&cycle(6), 12).unwrap();
        assert_eq!(k, 1);
        assert_eq!(d.parts(), [cycle(6).vertices()]);

        let (k, d) = connected_domatic_number(&complete(4), 12).unwrap();
        assert_eq!(k, 4);
        assert!(d.parts().iter().all(|p| p.len() == 1));

        assert_eq!(connected_domatic_number(&Graph::empty(1), 12).unwrap().0, 1);
        assert!(connected_domatic_number(&Graph::empty(3), 12).is_err());
        assert!(connected_domatic_number(&cycle(13), 12).unwrap_err().is_guard());
    }

    #[test]
    fn domatic_partition_rejects_non_cds_parts() {
        let c4 = cycle(4);
        let p = Partition::new(4, vec![set(4, &[0, 2]), set(4, &[1, 3])]).unwrap();
        assert_eq!(
            DomaticPartition::new(&c4, p).unwrap_err(),
            Error::NotConnectedDominating { index: 0 }
        );
    }
}
