use coalition_core::enumerate::{enumerate_labeled_graphs, graph_from_code, pair_count};
use coalition_core::family::{in_family_f_with, PeelChoice};
use coalition_core::generators::path;
use coalition_core::matrix::{edge_domination_matrix, incidence_matrix};
use coalition_core::{
    cc_number, connected_domatic_number, forms_connected_coalition, gamma_c, in_family_f,
    is_cc_partition, is_connected_dominating_set, is_dominating_set, Graph, VertexSet,
};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = pair_count(n);
        let mask = if pairs == 64 { u64::MAX } else { (1u64 << pairs) - 1 };
        any::<u64>().prop_map(move |bits| graph_from_code(n, bits & mask))
    })
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    // a random spanning path guarantees connectivity
    (graph(max_n), any::<u64>()).prop_map(|(g, seed)| {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            order.swap(i, (s % (i as u64 + 1)) as usize);
            s = s.rotate_left(7) ^ 0x9e37_79b9_7f4a_7c15;
        }
        let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| e.endpoints()).collect();
        edges.extend(order.windows(2).map(|w| (w[0], w[1])));
        Graph::from_edges(n, edges).unwrap()
    })
}

fn subset(n: usize, bits: u64) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|v| bits >> v & 1 == 1)).unwrap()
}

proptest! {
    #[test]
    fn domination_is_monotone(g in graph(9), a in any::<u64>(), b in any::<u64>()) {
        let n = g.n();
        let s = subset(n, a);
        let t = s.union(&subset(n, b));
        if is_dominating_set(&g, &s) {
            prop_assert!(is_dominating_set(&g, &t));
        }
        if is_connected_dominating_set(&g, &s) {
            prop_assert!(is_dominating_set(&g, &s));
        }
    }

    #[test]
    fn coalition_is_symmetric(g in connected_graph(8), a in any::<u64>(), b in any::<u64>()) {
        let n = g.n();
        let a = subset(n, a);
        let b = subset(n, b).difference(&a);
        prop_assume!(!a.is_empty() && !b.is_empty());
        prop_assert_eq!(
            forms_connected_coalition(&g, &a, &b).unwrap(),
            forms_connected_coalition(&g, &b, &a).unwrap()
        );
    }

    #[test]
    fn peel_order_does_not_matter(g in graph(8)) {
        let low = in_family_f_with(&g, PeelChoice::Lowest).unwrap();
        let high = in_family_f_with(&g, PeelChoice::Highest).unwrap();
        prop_assert_eq!(low.member, high.member);
        prop_assert!(low.trace.replays(&g));
        prop_assert!(high.trace.replays(&g));
    }

    #[test]
    fn gamma_witness_is_minimum(g in connected_graph(8)) {
        let (k, w) = gamma_c(&g).unwrap();
        prop_assert_eq!(w.len(), k);
        prop_assert!(is_connected_dominating_set(&g, &w));
        let n = g.n();
        for bits in 0u64..1 << n {
            if (bits.count_ones() as usize) == k - 1 && k > 1 {
                prop_assert!(!is_connected_dominating_set(&g, &subset(n, bits)));
            }
        }
    }

    #[test]
    fn domatic_witness_is_valid(g in connected_graph(8)) {
        let (k, d) = connected_domatic_number(&g, 12).unwrap();
        prop_assert!(k >= 1);
        prop_assert_eq!(d.len(), k);
        prop_assert!(d.parts().iter().all(|p| is_connected_dominating_set(&g, p)));
        prop_assert!(k * gamma_c(&g).unwrap().0 <= g.n());
    }

    #[test]
    fn cc_witness_replays(g in graph(7)) {
        let r = cc_number(&g).unwrap();
        prop_assert!(r.cc <= g.n());
        match r.witness {
            Some(w) => {
                prop_assert_eq!(w.len(), r.cc);
                prop_assert!(is_cc_partition(&g, &w).unwrap().valid);
                if r.cc == g.n() {
                    prop_assert!(w.parts().iter().all(|p| p.len() == 1));
                }
            }
            None => prop_assert_eq!(r.cc, 0),
        }
        prop_assert_eq!(r.cc == 0, in_family_f(&g).unwrap().member);
    }

    #[test]
    fn product_edge_counts(g in graph(6), h in graph(6)) {
        let j = g.join(&h);
        prop_assert_eq!(j.n(), g.n() + h.n());
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + g.n() * h.n());

        let c = g.corona(&Graph::empty(1)).unwrap();
        prop_assert_eq!(c.n(), 2 * g.n());
        prop_assert_eq!(c.edge_count(), g.edge_count() + g.n());
        prop_assert!((g.n()..c.n()).all(|v| c.degree(v) == 1));
    }

    #[test]
    fn matrix_rows_are_closed_neighborhood_unions(g in graph(9)) {
        prop_assume!(g.edge_count() > 0);
        let m = edge_domination_matrix(&g).unwrap();
        for (i, e) in m.edges().iter().enumerate() {
            let nb = g.closed_neighborhood(e.u()).union(&g.closed_neighborhood(e.v()));
            for x in 0..g.n() {
                prop_assert_eq!(m.entry(i, x) == 1, nb.contains(x));
            }
            prop_assert_eq!(m.row_sum(i), nb.len());
        }
        let inc = incidence_matrix(&g).unwrap();
        prop_assert!(inc.column_sums().iter().all(|&s| s == 2));
        prop_assert_eq!(inc.row_sums(), g.degrees());
    }
}

#[test]
fn labeled_enumeration_is_complete_and_distinct() {
    for n in 1..=5 {
        let codes: std::collections::BTreeSet<u64> = enumerate_labeled_graphs(n, false, false)
            .unwrap()
            .map(|g| coalition_core::enumerate::code_of(&g))
            .collect();
        assert_eq!(codes.len() as u64, 1u64 << pair_count(n));
    }
}

#[test]
fn paths_have_cc_two() {
    for n in [2, 4, 5, 6, 7, 8] {
        assert_eq!(cc_number(&path(n)).unwrap().cc, 2, "P_{n}");
    }
}
