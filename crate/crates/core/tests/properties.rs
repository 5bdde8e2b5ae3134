use hyperindep_core::bounds::{
    avg_degree_argument, bound_avg_degree, bound_avg_degree_simple, bound_max_degree,
    bound_report, BoundName,
};
use hyperindep_core::exact::{alpha_k_exact, alpha_k_sweep, chi_k_exact};
use hyperindep_core::extract::{
    best_extract, greedy_peel, partition_extract, thm37_extract, thm37_extract_detailed,
    thm37_target,
};
use hyperindep_core::generate::{binomial, gen_complete};
use hyperindep_core::partition::k_partition;
use hyperindep_core::rational::{from_int, is_integer, ratio};
use hyperindep_core::{Hypergraph, VertexSet};
use proptest::prelude::*;

const BUDGET: u64 = 50_000_000;

/// Random s-uniform hypergraph on at most `max_n` vertices: each s-subset of
/// the complete hypergraph is kept or dropped.
fn hypergraph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (2usize..=max_n)
        .prop_flat_map(|n| (Just(n), 2usize..=n.min(4)))
        .prop_flat_map(|(n, s)| {
            let total = binomial(n, s).unwrap() as usize;
            (Just(n), Just(s), proptest::collection::vec(any::<bool>(), total))
        })
        .prop_map(|(n, s, keep)| {
            let all = gen_complete(n, s).unwrap();
            let edges = all
                .edges()
                .iter()
                .zip(keep)
                .filter(|(_, k)| *k)
                .map(|(e, _)| e.clone());
            Hypergraph::new(n, s, edges).unwrap()
        })
}

fn subset_of(h: &Hypergraph, mask: u64) -> VertexSet {
    (0..h.order()).filter(|&v| mask >> v & 1 == 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn induced_degrees_never_exceed_host(h in hypergraph(9), mask in any::<u64>()) {
        let set = subset_of(&h, mask);
        let host = h.degrees();
        let inside = h.induced_degrees(&set).unwrap();
        for (v, d) in set.iter().zip(&inside) {
            prop_assert!(*d <= host[v]);
        }
        prop_assert!(h.induced_max_degree(&set).unwrap() <= h.max_degree());
    }

    #[test]
    fn removing_a_vertex_drops_its_edges(h in hypergraph(9), pick in any::<usize>()) {
        prop_assume!(h.order() >= 2);
        let v = pick % h.order();
        let removed = h.remove_vertex(v).unwrap();
        prop_assert_eq!(h.edge_count() - removed.edge_count(), h.degrees()[v]);
        let rest: VertexSet = (0..h.order()).filter(|&u| u != v).collect();
        prop_assert_eq!(h.induced(&rest).unwrap(), removed);
    }

    #[test]
    fn replication_scales_order_and_edges(h in hypergraph(7), c in 1usize..4) {
        let r = h.replicate(c).unwrap();
        prop_assert_eq!(r.order(), c * h.order());
        prop_assert_eq!(r.edge_count(), c * h.edge_count());
        prop_assert_eq!(r.degree_profile().avg_degree, h.degree_profile().avg_degree);
    }

    #[test]
    fn profile_sums(h in hypergraph(9)) {
        let p = h.degree_profile();
        let sum: usize = p.degrees.iter().sum();
        prop_assert_eq!(sum, h.uniformity() * h.edge_count());
        prop_assert_eq!(p.avg_degree * from_int(h.order()), from_int(sum));
    }

    #[test]
    fn avg_degree_bound_dominates_simple_form(h in hypergraph(9), k in 0usize..4) {
        let full = bound_avg_degree(&h, k).exact_value().cloned().unwrap();
        let simple = bound_avg_degree_simple(&h, k).exact_value().cloned().unwrap();
        prop_assert!(full >= simple);
        prop_assert_eq!(full == simple, is_integer(&avg_degree_argument(&h, k)));
    }

    #[test]
    fn simple_bound_beats_max_degree_bound_in_dense_regime(h in hypergraph(9), k in 1usize..4) {
        let delta = h.max_degree();
        prop_assume!(delta >= k * (k + 1));
        let simple = bound_avg_degree_simple(&h, k).exact_value().cloned().unwrap();
        let maxdeg = bound_max_degree(&h, k).exact_value().cloned().unwrap();
        prop_assert!(simple >= maxdeg);
    }

    #[test]
    fn greedy_peel_meets_edge_count_bound(h in hypergraph(10), k in 0usize..4) {
        let r = greedy_peel(&h, k, None).unwrap();
        let bound = from_int(h.order()) - ratio(h.edge_count(), k + 1);
        prop_assert!(from_int(r.size()) >= bound);
        prop_assert!(r.trace.len() <= h.edge_count() / (k + 1));
        prop_assert!(r.certified_max_degree <= k);
    }

    #[test]
    fn thm37_meets_target(h in hypergraph(10), k in 0usize..4) {
        let report = thm37_extract_detailed(&h, k).unwrap();
        prop_assert!(report.procedure_size >= thm37_target(&h, k));
        prop_assert!(h.is_k_independent(&report.result.set, k).unwrap().holds());
    }

    #[test]
    fn partition_contract(h in hypergraph(10), k in 1usize..4) {
        let run = k_partition(&h, k).unwrap();
        prop_assert_eq!(run.partition.len(), h.max_degree().div_ceil(k).max(1));
        prop_assert_eq!(run.fallback_events, 0);
        prop_assert!(run.moves.len() <= h.edge_count());
        prop_assert!(run.partition.is_cover_of(h.order()));
        prop_assert!(run.partition.max_class_degree() <= k);
        let r = partition_extract(&h, k).unwrap();
        prop_assert!(r.size() >= h.order().div_ceil(run.partition.len()));
    }

    #[test]
    fn best_extract_is_maximal_and_deterministic(h in hypergraph(9), k in 0usize..3) {
        let r = best_extract(&h, k).unwrap();
        prop_assert_eq!(&r, &best_extract(&h, k).unwrap());
        for v in (0..h.order()).filter(|&v| !r.set.contains(v)) {
            let mut bigger = r.set.clone().into_vec();
            bigger.push(v);
            prop_assert!(!h.is_k_independent(&VertexSet::new(bigger), k).unwrap().holds());
        }
    }

    #[test]
    fn oracle_agreement_and_soundness(h in hypergraph(9), k in 0usize..4) {
        let alpha = alpha_k_exact(&h, k, BUDGET).unwrap().value().unwrap();
        prop_assert_eq!(alpha, alpha_k_sweep(&h, k).unwrap().0);
        let report = bound_report(&h, k);
        for b in report.bounds.iter().filter(|b| b.name != BoundName::CaroTuzaKDiag) {
            if let Some(amount) = &b.amount {
                prop_assert!(amount.ceil() <= alpha.into(), "{} = {:?} > {}", b.name, amount, alpha);
            }
        }
        prop_assert!(best_extract(&h, k).unwrap().size() <= alpha);
        prop_assert!(thm37_extract(&h, k).unwrap().size() <= alpha);
    }

    #[test]
    fn oracle_monotone_in_k(h in hypergraph(9)) {
        let delta = h.max_degree();
        let mut prev = 0;
        for k in 0..=delta + 1 {
            let a = alpha_k_exact(&h, k, BUDGET).unwrap().value().unwrap();
            prop_assert!(a >= prev);
            if k >= delta {
                prop_assert_eq!(a, h.order());
            }
            prev = a;
        }
    }

    #[test]
    fn chi_respects_ceiling_and_pigeonhole(h in hypergraph(8), k in 1usize..4) {
        let chi = chi_k_exact(&h, k, BUDGET).unwrap().value().unwrap();
        prop_assert!(chi <= h.max_degree().div_ceil(k).max(1));
        let alpha = alpha_k_exact(&h, k, BUDGET).unwrap().value().unwrap();
        prop_assert!(alpha >= h.order().div_ceil(chi));
    }
}
