//! End-to-end checks of both deletion solvers against the subset-enumeration
//! oracle, plus structural soundness of the clique-guess reduction and the
//! branching traces.

mod common;

use common::{random_split_graph, small_split_corpus, SplitMix64};
use splitdel_core::analysis::{dominates, rule_minimum, stats_from_trace};
use splitdel_core::graph::split_partition;
use splitdel_core::oracle::{min_deletion, satisfies, TargetProperty};
use splitdel_core::sbvd::{solve_sbvd, solve_sbvd_detailed};
use splitdel_core::stvd::{solve_stvd, solve_stvd_traced};
use splitdel_core::{Graph, SplitPartition, VertexSet};

const KMAX: usize = 4;

fn check_solver<F>(g: &Graph, p: &SplitPartition, prop: TargetProperty, mut solve: F)
where
    F: FnMut(&Graph, &SplitPartition, usize) -> Option<Vec<usize>>,
{
    let oracle = min_deletion(g, prop, KMAX).unwrap();
    for k in 0..=KMAX {
        let got = solve(g, p, k);
        let want = oracle.as_ref().map_or(false, |(size, _)| *size <= k);
        assert_eq!(
            got.is_some(),
            want,
            "decision mismatch for {:?} at k={} on {:?}",
            prop,
            k,
            g
        );
        if let Some(s) = got {
            assert!(s.len() <= k, "witness too large at k={k}: {s:?}");
            assert!(s.windows(2).all(|w| w[0] < w[1]), "witness not sorted: {s:?}");
            let removed = VertexSet::from_iter(g.order(), s.iter().copied());
            assert!(s.iter().all(|&v| g.is_live(v)), "witness uses dead vertex");
            assert!(
                satisfies(&g.without(&removed), prop),
                "witness does not establish {:?}: {:?} on {:?}",
                prop,
                s,
                g
            );
        }
    }
}

#[test]
fn stvd_matches_oracle_on_exhaustive_corpus() {
    for (g, _) in small_split_corpus(3, 3) {
        let p = split_partition(&g).unwrap();
        check_solver(&g, &p, TargetProperty::ThresholdSplit, |g, p, k| {
            solve_stvd(g, p, k).unwrap()
        });
    }
}

#[test]
fn sbvd_matches_oracle_on_exhaustive_corpus() {
    for (g, _) in small_split_corpus(3, 3) {
        let p = split_partition(&g).unwrap();
        check_solver(&g, &p, TargetProperty::BlockSplit, |g, p, k| {
            solve_sbvd(g, p, k).unwrap()
        });
    }
}

#[test]
fn both_solvers_match_oracle_on_random_graphs() {
    let mut rng = SplitMix64::new(2024);
    for trial in 0..150u64 {
        let nc = 1 + (trial % 5) as usize;
        let ni = 1 + (trial / 5 % 5) as usize;
        let p_edge = [0.3, 0.5, 0.7][(trial / 25 % 3) as usize];
        let (g, _) = random_split_graph(nc, ni, p_edge, rng.next_u64());
        let p = split_partition(&g).unwrap();
        check_solver(&g, &p, TargetProperty::ThresholdSplit, |g, p, k| {
            solve_stvd(g, p, k).unwrap()
        });
        check_solver(&g, &p, TargetProperty::BlockSplit, |g, p, k| {
            solve_sbvd(g, p, k).unwrap()
        });
    }
}

#[test]
fn yes_answers_are_monotone_in_the_budget() {
    for (g, _) in small_split_corpus(3, 3) {
        let p = split_partition(&g).unwrap();
        let mut prev_stvd = false;
        let mut prev_sbvd = false;
        for k in 0..=KMAX {
            let stvd = solve_stvd(&g, &p, k).unwrap().is_some();
            let sbvd = solve_sbvd(&g, &p, k).unwrap().is_some();
            assert!(!prev_stvd || stvd, "stvd yes at k-1 but no at k={k}: {:?}", g);
            assert!(!prev_sbvd || sbvd, "sbvd yes at k-1 but no at k={k}: {:?}", g);
            prev_stvd = stvd;
            prev_sbvd = sbvd;
        }
    }
}

#[test]
fn clique_guess_structure_is_sound() {
    for (g, _) in small_split_corpus(3, 3) {
        let p = split_partition(&g).unwrap();
        for k in 0..=KMAX {
            let Some((s, guess)) = solve_sbvd_detailed(&g, &p, k).unwrap() else {
                continue;
            };
            let removed = VertexSet::from_iter(g.order(), s.iter().copied());
            // the pruned clique vertices are always deleted
            assert!(
                guess.pruned_clique.is_subset(&removed),
                "pruned clique escaped deletion on {:?}",
                g
            );
            let h = g.without(&removed);
            if let Some(center) = guess.v_star {
                assert!(h.is_live(center), "guessed center was deleted");
            }
            // after deletion every non-center independent vertex has at most
            // one neighbor, which is exactly what the hitting sets enforce
            for v in p.live_independent(&h).iter() {
                if Some(v) != guess.v_star {
                    assert!(
                        h.degree(v) <= 1,
                        "independent vertex {v} kept degree {} on {:?}",
                        h.degree(v),
                        g
                    );
                }
            }
        }
    }
}

#[test]
fn traces_respect_rule_minimums() {
    let mut branching_nodes = 0usize;
    for (g, _) in small_split_corpus(3, 3) {
        let p = split_partition(&g).unwrap();
        for k in 0..=2usize {
            let mut trace = Vec::new();
            solve_stvd_traced(&g, &p, k, &mut trace).unwrap();
            assert!(!trace.is_empty(), "every run visits at least one node");
            let text: String = trace.iter().map(|r| format!("{r}\n")).collect();
            let stats = stats_from_trace(&text).unwrap();
            assert_eq!(stats.node_count, trace.len());
            assert!(stats.leaf_count >= 1);
            for (rule, realized) in &stats.realized_vectors {
                let min = rule_minimum(*rule).expect("branching rules have minimums");
                assert!(
                    dominates(realized, min),
                    "{rule} realized {realized:?} vs minimum {min:?} on {:?}",
                    g
                );
                branching_nodes += 1;
            }
        }
    }
    assert!(branching_nodes >= 500, "corpus exercised only {branching_nodes} branchings");
}
