mod common;

use common::{inner_term, instance, outer_term, subsets};
use factorlab::deficiency::{evaluate, inner_max};
use factorlab::experiments::min_edges_after_deleting;
use factorlab::properties::is_critical_deleted;
use factorlab::{check_lemma1, recompute_slack, Error};
use itertools::Itertools;
use proptest::prelude::*;

/// Maximum over every `U ⊆ S` with `|U| = n'` and every `m`-subset of `E(G − U)`.
fn brute_inner(
    g: &factorlab::Graph,
    vf: &factorlab::VertexFuncs,
    s: &[usize],
    t: &[usize],
    nprime: usize,
    m: usize,
) -> Option<i64> {
    s.iter()
        .copied()
        .combinations(nprime)
        .flat_map(|u| {
            let left: Vec<(usize, usize)> =
                g.edges().iter().copied().filter(|(x, y)| !u.contains(x) && !u.contains(y)).collect();
            left.into_iter().combinations(m).map(|h| inner_term(g, vf, s, t, &u, &h)).collect::<Vec<_>>()
        })
        .max()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inner_max_matches_brute_force((g, vf) in instance(1, 6, 3), nprime in 0usize..=2, m in 0usize..=2, split in any::<u32>()) {
        let n = g.order();
        let s: Vec<usize> = (0..n).filter(|i| split >> (2 * i) & 3 == 1).collect();
        let t: Vec<usize> = (0..n).filter(|i| split >> (2 * i) & 3 == 2).collect();
        prop_assume!(s.len() >= nprime);
        match (inner_max(&g, &vf, &s, &t, nprime, m), brute_inner(&g, &vf, &s, &t, nprime, m)) {
            (Ok(found), Some(best)) => {
                prop_assert_eq!(found.value, best);
                prop_assert_eq!(inner_term(&g, &vf, &s, &t, &found.u, &found.h), best);
            }
            (Err(Error::InsufficientEdges { .. }), None) => {}
            (got, want) => prop_assert!(false, "{:?} vs {:?}", got, want),
        }
    }

    #[test]
    fn criterion_matches_definition((g, vf) in instance(1, 6, 3), nprime in 0usize..=2, m in 0usize..=2) {
        prop_assume!(nprime <= g.order());
        let criterion = check_lemma1(&g, &vf, nprime, m);
        if min_edges_after_deleting(&g, nprime) < m {
            let insufficient = matches!(criterion, Err(Error::InsufficientEdges { .. }));
            prop_assert!(insufficient);
            return Ok(());
        }
        let brute = is_critical_deleted(&g, &vf, nprime, m).unwrap();
        let criterion = criterion.unwrap();
        prop_assert_eq!(brute.holds, criterion.holds());
        if let Some(w) = criterion.witness() {
            prop_assert!(w.slack < 0);
            prop_assert_eq!(recompute_slack(&g, &vf, w).unwrap(), w.slack);
        }
    }

    #[test]
    fn witness_is_the_minimum((g, vf) in instance(1, 5, 2), nprime in 0usize..=1, m in 0usize..=1) {
        prop_assume!(nprime <= g.order());
        let Ok(verdict) = check_lemma1(&g, &vf, nprime, m) else { return Ok(()) };
        let n = g.order();
        let mut least = i64::MAX;
        for s in subsets(n).filter(|s| s.len() >= nprime) {
            let rest: Vec<usize> = (0..n).filter(|x| !s.contains(x)).collect();
            for pick in subsets(rest.len()) {
                let t: Vec<usize> = pick.iter().map(|&i| rest[i]).collect();
                if let Some(inner) = brute_inner(&g, &vf, &s, &t, nprime, m) {
                    least = least.min(outer_term(&g, &vf, &s, &t) - inner);
                }
            }
        }
        match verdict.witness() {
            Some(w) => prop_assert_eq!(w.slack, least),
            None => prop_assert!(least >= 0),
        }
    }

    #[test]
    fn slack_is_antitone((g, vf) in instance(2, 6, 3), split in any::<u32>()) {
        let n = g.order();
        let s: Vec<usize> = (0..n).filter(|i| split >> (2 * i) & 3 == 1).collect();
        let t: Vec<usize> = (0..n).filter(|i| split >> (2 * i) & 3 == 2).collect();
        // Monotonicity needs every U to stay admissible as m or n' grows.
        for nprime in 0..=s.len().min(2) {
            for m in 0..2 {
                let Ok(here) = evaluate(&g, &vf, &s, &t, nprime, m) else { continue };
                prop_assert_eq!(recompute_slack(&g, &vf, &here).unwrap(), here.slack);
                if min_edges_after_deleting(&g, nprime) > m {
                    prop_assert!(evaluate(&g, &vf, &s, &t, nprime, m + 1).unwrap().slack <= here.slack);
                }
                if nprime < s.len() && min_edges_after_deleting(&g, nprime + 1) >= m {
                    prop_assert!(evaluate(&g, &vf, &s, &t, nprime + 1, m).unwrap().slack <= here.slack);
                }
            }
        }
    }
}

#[test]
fn corrupted_witness_is_rejected() {
    let g = factorlab::Graph::complete(4).unwrap();
    let vf = factorlab::VertexFuncs::constant(4, 1, 1).unwrap();
    let mut w = evaluate(&g, &vf, &[0, 1], &[2], 1, 1).unwrap();
    w.t.push(0);
    assert!(recompute_slack(&g, &vf, &w).is_err());
}
