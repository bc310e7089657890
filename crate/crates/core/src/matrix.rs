//! Edge-domination and incidence matrices, and the polynomial deciders for
//! `CC(G) = n` and `CC(G) = n - 1` on connected graphs without full vertices.
//!
//! An edge `pq` edge-dominates `x` when `x ∈ N[p] ∪ N[q]` (closed
//! neighborhoods, so both endpoints count as dominated by their own edge).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::domination::{is_connected_dominating_set, require_connected};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::vertex_set::VertexSet;

/// Row order for edge-indexed matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgeOrder {
    /// Ascending `(u, v)` with `u < v`.
    #[default]
    Lexicographic,
    /// Ascending larger endpoint, then descending smaller endpoint. On a
    /// cycle or path with consecutive numbering this walks the edges in
    /// order: `(0,1), (1,2), ..., (n-2,n-1), (0,n-1)`.
    HigherEndpoint,
}

pub fn ordered_edges(g: &Graph, order: EdgeOrder) -> Vec<Edge> {
    let mut edges = g.edges();
    if order == EdgeOrder::HigherEndpoint {
        edges.sort_by_key(|e| (e.v(), core::cmp::Reverse(e.u())));
    }
    edges
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeDominationMatrix {
    n: usize,
    edges: Vec<Edge>,
    entries: Vec<u8>,
}

impl EdgeDominationMatrix {
    pub fn rows(&self) -> usize {
        self.edges.len()
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn entry(&self, i: usize, x: usize) -> u8 {
        self.entries[i * self.n + x]
    }

    pub fn row_sum(&self, i: usize) -> usize {
        self.row(i).iter().map(|&b| b as usize).sum()
    }

    /// Text dump: a `m n` header, then one line of space-separated digits per row.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.rows(), self.cols());
        for i in 0..self.rows() {
            for (x, b) in self.row(i).iter().enumerate() {
                if x > 0 {
                    out.push(' ');
                }
                out.push(if *b == 1 { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }
}

pub fn edge_domination_matrix(g: &Graph) -> Result<EdgeDominationMatrix> {
    edge_domination_matrix_ordered(g, EdgeOrder::Lexicographic)
}

pub fn edge_domination_matrix_ordered(g: &Graph, order: EdgeOrder) -> Result<EdgeDominationMatrix> {
    let edges = ordered_edges(g, order);
    if edges.is_empty() {
        return Err(Error::Edgeless {
            op: "edge_domination_matrix",
        });
    }
    let n = g.n();
    let mut entries = vec![0u8; edges.len() * n];
    for (i, e) in edges.iter().enumerate() {
        let row = &mut entries[i * n..(i + 1) * n];
        for x in g.closed_neighborhood(e.u()).union(&g.closed_neighborhood(e.v())).iter() {
            row[x] = 1;
        }
    }
    Ok(EdgeDominationMatrix { n, edges, entries })
}

/// Vertex-by-edge incidence matrix, columns in lexicographic edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    n: usize,
    edges: Vec<Edge>,
    entries: Vec<u8>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn entry(&self, x: usize, e: usize) -> u8 {
        self.entries[x * self.edges.len() + e]
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.rows())
            .map(|x| (0..self.cols()).map(|e| self.entry(x, e) as usize).sum())
            .collect()
    }

    pub fn column_sums(&self) -> Vec<usize> {
        (0..self.cols())
            .map(|e| (0..self.rows()).map(|x| self.entry(x, e) as usize).sum())
            .collect()
    }
}

pub fn incidence_matrix(g: &Graph) -> Result<IncidenceMatrix> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::Edgeless { op: "incidence_matrix" });
    }
    let (n, m) = (g.n(), edges.len());
    let mut entries = vec![0u8; n * m];
    for (j, e) in edges.iter().enumerate() {
        entries[e.u() * m + j] = 1;
        entries[e.v() * m + j] = 1;
    }
    Ok(IncidenceMatrix { n, edges, entries })
}

/// Whether `x ∈ N[a] ∪ N[b] ∪ N[c]`, evaluated on demand.
pub fn three_vertex_dominates(g: &Graph, a: usize, b: usize, c: usize, x: usize) -> Result<bool> {
    let n = g.n();
    for v in [a, b, c, x] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if a == b || b == c || a == c {
        return Err(Error::NonDistinctTriple { a, b, c });
    }
    Ok([a, b, c].iter().any(|&t| t == x || g.has_edge(t, x)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// The characterization exactly as stated.
    Paper,
    /// Additionally requires `{u, v}` not to be a CDS and `CC(G) ≠ n`.
    Strict,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Paper => "paper",
            Variant::Strict => "strict",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refutation {
    /// No edge incident to `vertex` edge-dominates every vertex.
    UndominatedVertex { vertex: usize },
    /// The `CC(G) = n` test succeeds, so `CC(G) ≠ n - 1`.
    CcEqualsN,
    /// No pair `{u, v}` satisfies the conditions.
    NoQualifyingPair,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision<W> {
    Yes(W),
    No(Refutation),
}

impl<W> Decision<W> {
    pub fn answer(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Decision::Yes(w) => Some(w),
            Decision::No(_) => None,
        }
    }

    pub fn refutation(&self) -> Option<&Refutation> {
        match self {
            Decision::Yes(_) => None,
            Decision::No(r) => Some(r),
        }
    }
}

/// For each vertex, an incident edge dominating all of `V(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCover {
    pub edges: Vec<(usize, Edge)>,
}

fn edge_dominates_all(g: &Graph, e: &Edge) -> bool {
    g.closed_neighborhood(e.u()).union(&g.closed_neighborhood(e.v())).len() == g.n()
}

impl EdgeCover {
    pub fn replays(&self, g: &Graph) -> bool {
        self.edges.len() == g.n()
            && self.edges.iter().enumerate().all(|(i, (x, e))| {
                *x == i && e.is_incident(*x) && g.has_edge(e.u(), e.v()) && edge_dominates_all(g, e)
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Justification {
    /// An edge at `x` avoiding `u, v` whose row sums to `n`.
    DominatingEdge(Edge),
    /// `{x, u, v}` is a connected dominating set.
    DominatingTriple,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairWitness {
    pub u: usize,
    pub v: usize,
    /// One entry per `x ∉ {u, v}`, in ascending `x`.
    pub justifications: Vec<(usize, Justification)>,
    pub y: usize,
}

impl PairWitness {
    pub fn replays(&self, g: &Graph, variant: Variant) -> bool {
        let (u, v, n) = (self.u, self.v, g.n());
        if u == v || u >= n || v >= n || self.y == u || self.y == v || self.y >= n {
            return false;
        }
        let others: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
        if self.justifications.len() != others.len() {
            return false;
        }
        let per_x = self.justifications.iter().zip(&others).all(|((x, j), want)| {
            x == want
                && match j {
                    Justification::DominatingEdge(e) => {
                        e.is_incident(*x)
                            && !e.is_incident(u)
                            && !e.is_incident(v)
                            && g.has_edge(e.u(), e.v())
                            && edge_dominates_all(g, e)
                    }
                    Justification::DominatingTriple => triple_is_cds(g, *x, u, v),
                }
        });
        let strict_ok = variant == Variant::Paper
            || (!is_connected_dominating_set(g, &pair_set(n, u, v))
                && check_cc_equals_n(g).map_or(false, |d| !d.answer()));
        per_x && triple_is_cds(g, self.y, u, v) && strict_ok
    }
}

fn pair_set(n: usize, u: usize, v: usize) -> VertexSet {
    let mut s = VertexSet::singleton(n, u);
    s.insert(v);
    s
}

/// `G[x, u, v]` connected and `Σ_w H({x,u,v}, w) = n`.
fn triple_is_cds(g: &Graph, x: usize, u: usize, v: usize) -> bool {
    let links = [(x, u), (x, v), (u, v)]
        .iter()
        .filter(|(a, b)| g.has_edge(*a, *b))
        .count();
    links >= 2
        && (0..g.n()).all(|w| three_vertex_dominates(g, x, u, v, w).expect("distinct, in range"))
}

fn require_decidable(g: &Graph, op: &'static str, min: usize) -> Result<()> {
    require_connected(g, op)?;
    if let Some(vertex) = g.full_vertices().first() {
        return Err(Error::FullVertex { op, vertex });
    }
    if g.n() < min {
        return Err(Error::TooFewVertices { op, min, n: g.n() });
    }
    Ok(())
}

/// Decides `CC(G) = n`: every vertex needs an incident edge whose
/// edge-domination row sums to `n`. The witness records, per vertex, the first
/// such edge in lexicographic order.
pub fn check_cc_equals_n(g: &Graph) -> Result<Decision<EdgeCover>> {
    require_decidable(g, "check_cc_equals_n", 2)?;
    let n = g.n();
    let e_mat = edge_domination_matrix(g)?;
    let inc = incidence_matrix(g)?;
    let mut cover = Vec::with_capacity(n);
    for x in 0..n {
        let mut found = None;
        for ei in 0..inc.cols() {
            if inc.entry(x, ei) == 1 {
                let mut s = 0;
                for v in 0..n {
                    s += e_mat.entry(ei, v) as usize;
                }
                if s == n {
                    found = Some(e_mat.edges()[ei]);
                    break;
                }
            }
        }
        match found {
            Some(e) => cover.push((x, e)),
            None => return Ok(Decision::No(Refutation::UndominatedVertex { vertex: x })),
        }
    }
    Ok(Decision::Yes(EdgeCover { edges: cover }))
}

/// Decides `CC(G) = n - 1` through the pair characterization: a pair `{u, v}`
/// such that every other vertex `x` either has an incident dominating edge
/// avoiding `u` and `v`, or forms a connected dominating triple with them,
/// and some `y` forms such a triple. [`Variant::Strict`] also requires that
/// `{u, v}` is not a CDS and that `CC(G) = n` fails. Pairs are tried in
/// ascending `(u, v)`, `u < v`.
pub fn check_cc_equals_n_minus_1(g: &Graph, variant: Variant) -> Result<Decision<PairWitness>> {
    require_decidable(g, "check_cc_equals_n_minus_1", 3)?;
    if variant == Variant::Strict && check_cc_equals_n(g)?.answer() {
        return Ok(Decision::No(Refutation::CcEqualsN));
    }
    let n = g.n();
    let e_mat = edge_domination_matrix(g)?;
    let full_row: Vec<bool> = (0..e_mat.rows()).map(|i| e_mat.row_sum(i) == n).collect();
    let edges = e_mat.edges();

    for u in 0..n {
        for v in u + 1..n {
            if variant == Variant::Strict && is_connected_dominating_set(g, &pair_set(n, u, v)) {
                continue;
            }
            let mut justifications = Vec::with_capacity(n - 2);
            let mut y = None;
            let mut ok = true;
            for x in (0..n).filter(|&x| x != u && x != v) {
                let triple = triple_is_cds(g, x, u, v);
                if triple && y.is_none() {
                    y = Some(x);
                }
                let edge = edges.iter().zip(&full_row).find_map(|(e, &full)| {
                    (full && e.is_incident(x) && !e.is_incident(u) && !e.is_incident(v)).then_some(*e)
                });
                match (edge, triple) {
                    (Some(e), _) => justifications.push((x, Justification::DominatingEdge(e))),
                    (None, true) => justifications.push((x, Justification::DominatingTriple)),
                    (None, false) => {
                        ok = false;
                        break;
                    }
                }
            }
            if let (true, Some(y)) = (ok, y) {
                return Ok(Decision::Yes(PairWitness {
                    u,
                    v,
                    justifications,
                    y,
                }));
            }
        }
    }
    Ok(Decision::No(Refutation::NoQualifyingPair))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, path};

    fn house() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)]).unwrap()
    }

    #[test]
    fn edge_domination_rows() {
        let m = edge_domination_matrix(&cycle(6)).unwrap();
        assert_eq!(m.edges()[0].endpoints(), (0, 1));
        assert_eq!(m.row(0), [1, 1, 1, 0, 0, 1]);
        assert!((0..m.rows()).all(|i| m.row_sum(i) == 4));

        let k3 = edge_domination_matrix(&complete(3)).unwrap();
        assert!((0..3).all(|i| k3.row(i) == [1, 1, 1]));
        assert_eq!(
            edge_domination_matrix(&Graph::empty(3)),
            Err(Error::Edgeless {
                op: "edge_domination_matrix"
            })
        );
    }

    #[test]
    fn walk_order_on_cycles() {
        let m = edge_domination_matrix_ordered(&cycle(6), EdgeOrder::HigherEndpoint).unwrap();
        let order: Vec<_> = m.edges().iter().map(Edge::endpoints).collect();
        assert_eq!(order, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]);
    }

    #[test]
    fn incidence_sums() {
        let k2 = incidence_matrix(&complete(2)).unwrap();
        assert_eq!((k2.rows(), k2.cols()), (2, 1));
        assert_eq!(k2.row_sums(), [1, 1]);
        assert_eq!(incidence_matrix(&cycle(4)).unwrap().row_sums(), [2, 2, 2, 2]);
        let p3 = incidence_matrix(&path(3)).unwrap();
        assert_eq!(p3.row_sums(), [1, 2, 1]);
        assert!(p3.column_sums().iter().all(|&s| s == 2));
    }

    #[test]
    fn three_vertex_examples() {
        assert!(three_vertex_dominates(&cycle(5), 0, 1, 2, 4).unwrap());
        assert!(!three_vertex_dominates(&cycle(6), 0, 1, 2, 4).unwrap());
        assert!(three_vertex_dominates(&cycle(6), 3, 1, 5, 3).unwrap());
        assert!(three_vertex_dominates(&cycle(6), 0, 0, 2, 4).is_err());
    }

    #[test]
    fn check_n_examples() {
        let d = check_cc_equals_n(&cycle(4)).unwrap();
        assert!(d.answer());
        assert!(d.witness().unwrap().replays(&cycle(4)));
        assert_eq!(
            check_cc_equals_n(&cycle(6)).unwrap(),
            Decision::No(Refutation::UndominatedVertex { vertex: 0 })
        );
        assert!(check_cc_equals_n(&complete_bipartite(2, 3)).unwrap().answer());
        assert_eq!(
            check_cc_equals_n(&path(3)),
            Err(Error::FullVertex {
                op: "check_cc_equals_n",
                vertex: 1
            })
        );
        assert!(matches!(
            check_cc_equals_n(&Graph::empty(4)),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn check_n_minus_1_examples() {
        let house = house();
        for variant in [Variant::Paper, Variant::Strict] {
            let d = check_cc_equals_n_minus_1(&house, variant).unwrap();
            let w = d.witness().expect("house has CC = n - 1");
            // {0,1} pairs with 2 via a triple; 3 and 4 share the dominating edge (3,4)
            assert_eq!((w.u, w.v, w.y), (0, 1, 2));
            assert!(w.replays(&house, variant));
        }
        let e = |a, b| Justification::DominatingEdge(Edge::new(a, b).unwrap());
        let by_hand = PairWitness {
            u: 0,
            v: 3,
            justifications: vec![(1, e(1, 4)), (2, e(1, 2)), (4, e(1, 4))],
            y: 4,
        };
        assert!(by_hand.replays(&house, Variant::Paper));
        assert!(by_hand.replays(&house, Variant::Strict));
        let wrong = PairWitness { y: 1, ..by_hand.clone() };
        assert!(!wrong.replays(&house, Variant::Paper));

        assert_eq!(
            check_cc_equals_n_minus_1(&cycle(4), Variant::Strict).unwrap(),
            Decision::No(Refutation::CcEqualsN)
        );
        for variant in [Variant::Paper, Variant::Strict] {
            assert!(!check_cc_equals_n_minus_1(&path(6), variant).unwrap().answer());
        }
    }
}
