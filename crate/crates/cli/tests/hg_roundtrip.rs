use hyperindep::hg::{parse_hg, write_hg};
use hyperindep_core::generate::gen_complete;
use hyperindep_core::Hypergraph;
use proptest::prelude::*;

fn hypergraph() -> impl Strategy<Value = Hypergraph> {
    (2usize..=4, 0usize..=5)
        .prop_flat_map(|(s, extra)| {
            let n = s + extra;
            let all = gen_complete(n, s).unwrap().edges().to_vec();
            let len = all.len();
            (Just((n, s)), proptest::sample::subsequence(all, 0..=len))
        })
        .prop_map(|((n, s), edges)| Hypergraph::new(n, s, edges).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn write_then_parse_is_identity(h in hypergraph()) {
        let text = write_hg(&h);
        prop_assert_eq!(parse_hg(&text).unwrap(), h.clone());
        prop_assert_eq!(write_hg(&parse_hg(&text).unwrap()), text);
    }

    #[test]
    fn shuffled_input_parses_to_the_same_instance(h in hypergraph(), rot in 0usize..8) {
        let mut text = format!("c shuffled\np hyp {} {} {}\n", h.order(), h.edge_count(), h.uniformity());
        let mut edges = h.edges().to_vec();
        edges.reverse();
        for mut e in edges {
            let r = rot % e.len();
            e.rotate_left(r);
            let ids: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
            text.push_str(&format!("e {}\n\n", ids.join(" ")));
        }
        prop_assert_eq!(parse_hg(&text).unwrap(), h);
    }
}
