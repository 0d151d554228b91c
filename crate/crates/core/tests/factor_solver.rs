mod common;

use common::{graph, instance, outer_term, subsets};
use factorlab::{factor_defect_witness, has_fractional_factor, recompute_slack, verify_assignment, VertexFuncs};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn feasible_answers_verify((g, vf) in instance(1, 7, 3)) {
        match has_fractional_factor(&g, &vf).unwrap() {
            Some(h) => {
                prop_assert!(h.is_half_integral_unit());
                prop_assert!(verify_assignment(&g, &vf, &h).unwrap());
            }
            None => {
                let w = factor_defect_witness(&g, &vf).unwrap();
                prop_assert!(w.slack < 0);
                prop_assert_eq!(recompute_slack(&g, &vf, &w).unwrap(), w.slack);
            }
        }
    }

    #[test]
    fn agrees_with_the_deficiency_condition((g, vf) in instance(1, 6, 3)) {
        let n = g.order();
        let mut least = i64::MAX;
        for s in subsets(n) {
            let rest: Vec<usize> = (0..n).filter(|x| !s.contains(x)).collect();
            for pick in subsets(rest.len()) {
                let t: Vec<usize> = pick.iter().map(|&i| rest[i]).collect();
                least = least.min(outer_term(&g, &vf, &s, &t));
            }
        }
        prop_assert_eq!(has_fractional_factor(&g, &vf).unwrap().is_some(), least >= 0);
    }

    #[test]
    fn adding_edges_keeps_feasibility((g, vf) in instance(2, 7, 3), pick in any::<prop::sample::Index>()) {
        let missing: Vec<(usize, usize)> = g.nonadjacent_pairs().collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[pick.index(missing.len())];
        if has_fractional_factor(&g, &vf).unwrap().is_some() {
            prop_assert!(has_fractional_factor(&g.with_edge(u, v).unwrap(), &vf).unwrap().is_some());
        }
    }

    #[test]
    fn zero_lower_bound_is_always_feasible(g in graph(0, 8), f in 0u32..4) {
        let vf = VertexFuncs::constant(g.order(), 0, f).unwrap();
        prop_assert!(has_fractional_factor(&g, &vf).unwrap().is_some());
    }
}
