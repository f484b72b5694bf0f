use gridbond::bondage::{self, BondageOptions, BondageValue};
use gridbond::domination;
use gridbond::format::{parse_graph, write_graph};
use gridbond::graph::{Edge, Graph, GridSpec, ProductKind};
use proptest::prelude::*;

fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let k = pairs.len();
        proptest::collection::vec(any::<bool>(), k).prop_map(move |keep| {
            let edges = pairs
                .iter()
                .zip(keep)
                .filter(|(_, k)| *k)
                .map(|(&(u, v), _)| Edge::new(u, v).unwrap());
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_kind() -> impl Strategy<Value = ProductKind> {
    prop_oneof![
        Just(ProductKind::Strong),
        Just(ProductKind::Direct),
        Just(ProductKind::Cartesian)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn text_format_round_trips(g in arb_graph(14)) {
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn dominating_set_exists_iff_budget_reaches_gamma(g in arb_graph(12)) {
        let gamma = domination::domination_number(&g);
        for k in 0..=g.order() {
            let found = domination::exists_dominating_set(&g, k);
            prop_assert_eq!(found.is_some(), k >= gamma);
            if let Some(s) = found {
                prop_assert!(s.len() <= k);
                prop_assert!(domination::is_dominating(&g, &s).unwrap());
            }
        }
    }

    #[test]
    fn gamma_sets_are_minimum_and_dominating(g in arb_graph(10)) {
        let fam = domination::enumerate_gamma_sets(&g, 10_000).unwrap();
        prop_assert!(!fam.sets.is_empty());
        for s in &fam.sets {
            prop_assert_eq!(s.len(), fam.gamma);
            prop_assert!(domination::is_dominating(&g, s).unwrap());
        }
    }

    #[test]
    fn bondage_witness_raises_gamma(g in arb_graph(9)) {
        prop_assume!(g.edge_count() > 0);
        let r = bondage::bondage_number(&g, &BondageOptions::default()).unwrap();
        let bound = bondage::default_k_max(&g).unwrap();
        match r.value {
            BondageValue::Exact(b) => {
                prop_assert!(b <= bound);
                let w = r.witness.unwrap();
                prop_assert_eq!(w.len(), b);
                prop_assert!(bondage::is_bondage_set(&g, &w).unwrap());
            }
            BondageValue::Above(k) => prop_assert_eq!(k, bound),
        }
    }

    #[test]
    fn product_is_symmetric_under_transpose(kind in arb_kind(), n in 2usize..6, m in 2usize..6) {
        let a = GridSpec::new(kind, n, m).unwrap();
        let b = a.transpose();
        let (ga, gb) = (a.graph(), b.graph());
        prop_assert_eq!(ga.edge_count(), gb.edge_count());
        prop_assert_eq!(domination::domination_number(&ga), domination::domination_number(&gb));
    }
}
