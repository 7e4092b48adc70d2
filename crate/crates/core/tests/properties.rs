use compedge_core::graph_ideals::{clique_ideal, closed_form_primes, comp_cover_ideal, comp_edge_ideal, edge_ideal};
use compedge_core::resolution::{betti_table, betti_table_general, is_componentwise_linear};
use compedge_core::structure::{classify, reg_jc_power_forecast, reg_power_forecast};
use compedge_core::{Field, Graph, IdealJson, Monomial, MonomialIdeal};
use proptest::prelude::*;

fn arb_graph(n_min: usize, n_max: usize) -> impl Strategy<Value = Graph> {
    (n_min..=n_max).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (0u64..(1u64 << pairs)).prop_map(move |mask| Graph::from_bitmask(n, mask).unwrap())
    })
}

fn arb_graph_with_perm(n_min: usize, n_max: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(n_min, n_max).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(a, b)| (perm[a - 1], perm[b - 1])).collect();
    Graph::from_edges(g.vertex_count(), &edges).unwrap()
}

fn arb_squarefree(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(1u64..(1u64 << n), 1..7)
        .prop_map(move |masks| MonomialIdeal::minimalize(n, masks.into_iter().map(|m| Monomial::from_mask(n, m)).collect()).unwrap())
}

fn sorted_supports(g: &Graph) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = closed_form_primes(g).iter().map(|p| p.vars().to_vec()).collect();
    v.sort();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn betti_table_and_verdicts_ignore_labels((g, perm) in arb_graph_with_perm(3, 6)) {
        prop_assume!(g.edge_count() > 0 && !g.has_isolated_vertex());
        let h = relabel(&g, &perm);
        let (a, b) = (comp_edge_ideal(&g), comp_edge_ideal(&h));
        prop_assert_eq!(betti_table(&a, Field::Prime(2)).unwrap(), betti_table(&b, Field::Prime(2)).unwrap());
        prop_assert_eq!(classify(&g, Field::Prime(2)).unwrap().verdicts, classify(&h, Field::Prime(2)).unwrap().verdicts);
    }

    #[test]
    fn closed_form_primes_beyond_the_sweep(g in arb_graph(7, 7)) {
        prop_assume!(g.edge_count() > 0 && !g.has_isolated_vertex());
        let mut oracle: Vec<Vec<usize>> = comp_edge_ideal(&g)
            .squarefree_minimal_primes()
            .unwrap()
            .iter()
            .map(|p| p.vars().to_vec())
            .collect();
        oracle.sort();
        prop_assert_eq!(sorted_supports(&g), oracle);
    }

    #[test]
    fn cover_ideal_beyond_the_sweep(g in arb_graph(7, 7)) {
        prop_assume!(g.edge_count() > 0 && !g.has_isolated_vertex());
        let closed = edge_ideal(&g.complement()).sum(&clique_ideal(&g, 3).unwrap()).unwrap();
        prop_assert_eq!(comp_edge_ideal(&g).alexander_dual().unwrap(), closed);
    }

    #[test]
    fn regularity_forecasts_at_seven_vertices(g in arb_graph(7, 7)) {
        prop_assume!(g.edge_count() > 0);
        let reg = betti_table(&comp_edge_ideal(&g), Field::Prime(2)).unwrap().regularity();
        prop_assert_eq!(reg, reg_power_forecast(&g, 1).unwrap().predicted_reg);
        if !g.has_isolated_vertex() && g.edge_count() >= 2 {
            let jc = comp_cover_ideal(&g).unwrap();
            prop_assert_eq!(betti_table(&jc, Field::Prime(2)).unwrap().regularity(), reg_jc_power_forecast(&g, 1, false).unwrap());
        }
    }

    #[test]
    fn chordality_at_seven_vertices(g in arb_graph(7, 7)) {
        prop_assume!(g.edge_count() > 0 && !g.has_isolated_vertex());
        let jc = comp_cover_ideal(&g).unwrap();
        prop_assert_eq!(is_componentwise_linear(&jc, Field::Prime(2)).unwrap(), g.is_chordal());
    }

    #[test]
    fn complementary_ideal_is_an_involution(i in arb_squarefree(6)) {
        prop_assert_eq!(i.complementary_ideal().unwrap().complementary_ideal().unwrap(), i);
    }

    #[test]
    fn alexander_dual_is_an_involution(i in arb_squarefree(6)) {
        prop_assert_eq!(i.alexander_dual().unwrap().alexander_dual().unwrap(), i);
    }

    #[test]
    fn polarization_preserves_betti_numbers(exps in prop::collection::vec(prop::collection::vec(0u16..4, 3), 1..5)) {
        let i = MonomialIdeal::minimalize(3, exps.into_iter().map(Monomial::new).collect()).unwrap();
        prop_assume!(!i.is_unit());
        prop_assert_eq!(betti_table(&i, Field::Rationals).unwrap(), betti_table_general(&i, Field::Rationals).unwrap());
    }

    #[test]
    fn ideal_json_round_trip(i in arb_squarefree(5)) {
        let text = serde_json::to_string(&i.to_json()).unwrap();
        let back: IdealJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(MonomialIdeal::from_json(&back).unwrap(), i);
    }
}
