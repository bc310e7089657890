//! Cross-checks the library against a deliberately naive oracle: adjacency
//! matrices, BFS over `Vec<bool>`, and set partitions built by recursive
//! block assignment instead of restricted-growth iteration.

use coalition_core::enumerate::enumerate_labeled_graphs;
use coalition_core::generators::{complete, complete_bipartite, cycle, friendship, path};
use coalition_core::{cc_number, connected_domatic_number, gamma_c, Graph};

struct Naive {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Naive {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let adj = (0..n)
            .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
            .collect();
        Naive { n, adj }
    }

    fn is_cds(&self, s: &[usize]) -> bool {
        if s.is_empty() {
            return false;
        }
        let inside = |v: usize| s.contains(&v);
        let dominated = (0..self.n).all(|x| inside(x) || s.iter().any(|&y| self.adj[x][y]));
        let mut seen = vec![s[0]];
        let mut i = 0;
        while i < seen.len() {
            let v = seen[i];
            for &w in s {
                if self.adj[v][w] && !seen.contains(&w) {
                    seen.push(w);
                }
            }
            i += 1;
        }
        dominated && seen.len() == s.len()
    }

    fn valid(&self, parts: &[Vec<usize>]) -> bool {
        parts.iter().enumerate().all(|(i, p)| {
            if self.is_cds(p) {
                p.len() == 1
            } else {
                parts.iter().enumerate().any(|(j, q)| {
                    let union: Vec<usize> = p.iter().chain(q).copied().collect();
                    j != i && !self.is_cds(q) && self.is_cds(&union)
                })
            }
        })
    }

    fn all_partitions(&self) -> Vec<Vec<Vec<usize>>> {
        fn go(v: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
            if v == n {
                out.push(cur.clone());
                return;
            }
            for b in 0..cur.len() {
                cur[b].push(v);
                go(v + 1, n, cur, out);
                cur[b].pop();
            }
            cur.push(vec![v]);
            go(v + 1, n, cur, out);
            cur.pop();
        }
        let mut out = Vec::new();
        go(0, self.n, &mut Vec::new(), &mut out);
        out
    }

    fn cc(&self) -> usize {
        self.all_partitions()
            .iter()
            .filter(|p| self.valid(p))
            .map(Vec::len)
            .max()
            .unwrap_or(0)
    }

    fn subsets(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (1u32..1 << self.n).map(|m| (0..self.n).filter(|&v| m >> v & 1 == 1).collect())
    }

    fn gamma_c(&self) -> usize {
        self.subsets().filter(|s| self.is_cds(s)).map(|s| s.len()).min().unwrap()
    }

    fn d_c(&self) -> usize {
        self.all_partitions()
            .iter()
            .filter(|p| p.iter().all(|q| self.is_cds(q)))
            .map(Vec::len)
            .max()
            .unwrap_or(0)
    }
}

fn house() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)]).unwrap()
}

#[test]
fn frozen_values_match_naive_oracle() {
    // (graph, CC) frozen from the naive oracle below
    let cases: Vec<(&str, Graph, usize)> = vec![
        ("K1", Graph::empty(1), 1),
        ("K5", complete(5), 5),
        ("K23", complete_bipartite(2, 3), 5),
        ("P6", path(6), 2),
        ("P3", path(3), 0),
        ("C4", cycle(4), 4),
        ("C5", cycle(5), 3),
        ("C6", cycle(6), 3),
        ("house", house(), 4),
        ("F2", friendship(2), 0),
    ];
    for (name, g, frozen) in cases {
        let naive = Naive::new(&g).cc();
        assert_eq!(naive, frozen, "naive oracle disagrees with frozen value for {name}");
        assert_eq!(cc_number(&g).unwrap().cc, frozen, "{name}");
    }
}

#[test]
fn cc_matches_naive_on_all_labeled_graphs_up_to_five() {
    for n in 1..=5 {
        for g in enumerate_labeled_graphs(n, false, false).unwrap() {
            let naive = Naive::new(&g).cc();
            let got = cc_number(&g).unwrap();
            assert_eq!(got.cc, naive, "{g:?}");
            if let Some(w) = got.witness {
                assert_eq!(w.len(), got.cc);
                assert!(Naive::new(&g).valid(&w.to_lists()));
            }
        }
    }
}

#[test]
fn gamma_and_domatic_match_naive() {
    for n in 1..=5 {
        for g in enumerate_labeled_graphs(n, true, false).unwrap() {
            let naive = Naive::new(&g);
            assert_eq!(gamma_c(&g).unwrap().0, naive.gamma_c(), "{g:?}");
            assert_eq!(connected_domatic_number(&g, 12).unwrap().0, naive.d_c(), "{g:?}");
        }
    }
    // frozen: γ_c(C_6) = 4 and d_c(C_6) = 1, γ_c(P_6) = 4
    assert_eq!(Naive::new(&cycle(6)).gamma_c(), 4);
    assert_eq!(Naive::new(&cycle(6)).d_c(), 1);
    assert_eq!(Naive::new(&path(6)).gamma_c(), 4);
}

#[test]
fn connected_labeled_counts() {
    // brute-force counts of connected labeled graphs
    let count = |n: usize| {
        (0u64..1u64 << (n * (n - 1) / 2))
            .filter(|&code| coalition_core::enumerate::graph_from_code(n, code).is_connected())
            .count()
    };
    assert_eq!(count(3), 4);
    assert_eq!(count(4), 38);
    assert_eq!(enumerate_labeled_graphs(4, true, false).unwrap().count(), 38);
    assert_eq!(enumerate_labeled_graphs(5, true, false).unwrap().count(), count(5));
}
