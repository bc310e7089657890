//! Immutable simple undirected graphs on vertices `0..n`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            core::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            core::cmp::Ordering::Equal => Err(Error::SelfLoop { v: a }),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn is_incident(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

/// Simple undirected graph. Adjacency is symmetric and loop-free by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().iter().map(Edge::endpoints).collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::empty(n); n],
        }
    }

    /// Builds a graph from vertex pairs. Duplicate pairs (in either orientation) collapse.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        g.debug_check();
        Ok(g)
    }

    fn debug_check(&self) {
        if cfg!(debug_assertions) {
            for (v, nb) in self.adj.iter().enumerate() {
                debug_assert!(!nb.contains(v), "self-loop at {v}");
                for u in nb {
                    debug_assert!(self.adj[u].contains(v), "asymmetric edge {v}-{u}");
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n()).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n()).map(|v| self.degree(v)).max()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// All edges in ascending `(u, v)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// One connected component. The order-0 graph counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.is_connected_within(&self.vertices())
    }

    /// Whether `G[s]` is connected. The empty set is not.
    pub fn is_connected_within(&self, s: &VertexSet) -> bool {
        let Some(start) = s.first() else {
            return false;
        };
        let mut reached = VertexSet::singleton(self.n(), start);
        let mut frontier = reached.clone();
        loop {
            let mut next = VertexSet::empty(self.n());
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            let next = next.intersection(s).difference(&reached);
            if next.is_empty() {
                break;
            }
            reached.union_with(&next);
            frontier = next;
        }
        reached.len() == s.len()
    }

    /// Connected components as vertex sets, ordered by their lowest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n());
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(self.n(), start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in &self.adj[v] {
                    if comp.insert(u) {
                        stack.push(u);
                    }
                }
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// `G[S]` with members relabeled `0..|S|` in ascending order, plus the
    /// original-id → new-id map.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        if s.universe() > self.n() {
            if let Some(bad) = s.iter().find(|&v| v >= self.n()) {
                return Err(Error::VertexOutOfRange {
                    vertex: bad,
                    n: self.n(),
                });
            }
        }
        let mut map = vec![None; self.n()];
        let members: Vec<usize> = s.iter().collect();
        for (new, &old) in members.iter().enumerate() {
            map[old] = Some(new);
        }
        let mut edges = Vec::new();
        for (new_u, &old_u) in members.iter().enumerate() {
            for old_v in self.adj[old_u].iter().filter(|&w| w > old_u) {
                if let Some(new_v) = map[old_v] {
                    edges.push((new_u, new_v));
                }
            }
        }
        Ok((Graph::from_edges(members.len(), edges)?, map))
    }

    /// Vertices of degree `n - 1`. The single vertex of `K_1` is full.
    pub fn full_vertices(&self) -> VertexSet {
        let n = self.n();
        VertexSet::from_vertices(n, (0..n).filter(|&v| self.degree(v) + 1 == n))
            .expect("ids are in range")
    }

    pub fn has_full_vertex(&self) -> bool {
        !self.full_vertices().is_empty()
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let edges = self
            .edges()
            .into_iter()
            .map(|e| e.endpoints())
            .chain(other.edges().into_iter().map(|e| (e.u + shift, e.v + shift)));
        Graph::from_edges(self.n() + other.n(), edges).expect("valid by construction")
    }

    /// `G + H`: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|e| e.endpoints())
            .chain(other.edges().into_iter().map(|e| (e.u + shift, e.v + shift)))
            .collect();
        for a in 0..self.n() {
            for b in 0..other.n() {
                edges.push((a, shift + b));
            }
        }
        Graph::from_edges(self.n() + other.n(), edges).expect("valid by construction")
    }

    /// `G ∘ H`: `G` keeps ids `0..n_G`; copy `i` of `H` occupies
    /// `n_G + i·n_H .. n_G + (i+1)·n_H` and is joined to vertex `i`.
    pub fn corona(&self, other: &Graph) -> Result<Graph> {
        let ng = self.n();
        if ng == 0 {
            return Err(Error::EmptyGraph { op: "corona" });
        }
        let nh = other.n();
        let mut edges: Vec<(usize, usize)> = self.edges().into_iter().map(|e| e.endpoints()).collect();
        let h_edges = other.edges();
        for i in 0..ng {
            let base = ng + i * nh;
            edges.extend(h_edges.iter().map(|e| (base + e.u, base + e.v)));
            edges.extend((0..nh).map(|w| (i, base + w)));
        }
        Graph::from_edges(ng + ng * nh, edges)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n()
    }

    /// Whether the graph has the shape `H ∘ K_1` for some graph `H`: every
    /// vertex is either a pendant or the support of exactly one pendant, and
    /// pendants pair off perfectly with supports.
    pub fn is_corona_with_k1(&self) -> bool {
        let n = self.n();
        if n == 0 || n % 2 == 1 {
            return false;
        }
        if n == 2 {
            return self.edge_count() == 1;
        }
        let mut supports = VertexSet::empty(n);
        let mut pendants = 0;
        for v in 0..n {
            if self.degree(v) == 1 {
                pendants += 1;
                let s = self.adj[v].first().expect("degree 1");
                if self.degree(s) == 1 || !supports.insert(s) {
                    return false;
                }
            }
        }
        pendants * 2 == n && supports.len() * 2 == n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn build_rejects_bad_pairs() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::EdgeOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop { v: 1 }));
    }

    #[test]
    fn build_deduplicates() {
        let g = Graph::from_edges(4, [(0, 1), (1, 0), (0, 1), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4, cycle(4));
        assert_eq!(Graph::from_edges(1, []).unwrap().n(), 1);
    }

    #[test]
    fn connectivity() {
        assert!(!Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(path(4).is_connected());
        assert_eq!(Graph::empty(3).components().len(), 3);
    }

    #[test]
    fn induced_subgraphs() {
        let c4 = cycle(4);
        let (p3, map) = c4
            .induced_subgraph(&VertexSet::from_vertices(4, [0, 1, 2]).unwrap())
            .unwrap();
        assert_eq!(p3, path(3));
        assert_eq!(map, [Some(0), Some(1), Some(2), None]);

        let (same, _) = c4.induced_subgraph(&c4.vertices()).unwrap();
        assert_eq!(same, c4);

        let c6 = cycle(6);
        let (three, map) = c6
            .induced_subgraph(&VertexSet::from_vertices(6, [0, 2, 4]).unwrap())
            .unwrap();
        assert_eq!(three, Graph::empty(3));
        assert_eq!(map[4], Some(2));

        let wide = VertexSet::from_vertices(8, [1, 7]).unwrap();
        assert_eq!(
            c6.induced_subgraph(&wide).unwrap_err(),
            Error::VertexOutOfRange { vertex: 7, n: 6 }
        );
    }

    #[test]
    fn full_vertex_queries() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.full_vertices().len(), 4);
        assert_eq!(path(3).full_vertices().to_vec(), [1]);
        assert!(cycle(5).full_vertices().is_empty());
        assert_eq!(Graph::empty(1).full_vertices().to_vec(), [0]);
    }

    #[test]
    fn join_and_corona() {
        let k1 = Graph::empty(1);
        let p3 = k1.join(&Graph::empty(2));
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.degrees(), [2, 1, 1]);
        assert!(p3.is_tree());

        let wheel = k1.join(&cycle(4));
        assert_eq!(wheel.edge_count(), 8);
        assert_eq!(wheel.degree(0), 4);

        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let p4 = k2.corona(&k1).unwrap();
        // 2-0-1-3
        assert_eq!(p4, Graph::from_edges(4, [(0, 1), (0, 2), (1, 3)]).unwrap());
        assert!(p4.is_corona_with_k1());

        let net = cycle(3).corona(&k1).unwrap();
        assert_eq!(net.edge_count(), 6);
        assert_eq!(net.degrees(), [3, 3, 3, 1, 1, 1]);

        assert_eq!(k1.corona(&k1).unwrap(), k2);
        assert_eq!(Graph::empty(0).corona(&k1), Err(Error::EmptyGraph { op: "corona" }));
    }

    #[test]
    fn corona_recognition() {
        assert!(Graph::from_edges(2, [(0, 1)]).unwrap().is_corona_with_k1());
        assert!(!path(3).is_corona_with_k1());
        assert!(!path(5).is_corona_with_k1());
        assert!(!path(6).is_corona_with_k1());
        assert!(cycle(4).corona(&Graph::empty(1)).unwrap().is_corona_with_k1());
        // star K_{1,3} has one support with three pendants
        assert!(!Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap().is_corona_with_k1());
    }
}
