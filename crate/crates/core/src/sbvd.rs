//! Exact solver for block deletion on split graphs: delete at most k vertices
//! so the remaining split graph is a block graph.
//!
//! The live graph fails the block property exactly when two independent
//! vertices of degree >= 2 survive, or one survives without seeing the whole
//! clique side. The solver therefore guesses the at-most-one independent
//! vertex v* that keeps degree >= 2 in the solution (or that none does),
//! deletes the clique vertices v* misses, and reduces what is left to a
//! 3-hitting-set instance: every other independent vertex v with neighbors
//! a, b must lose one of {v, a, b}.

use crate::graph::is_block_split;
use crate::hitting_set::{solve_3hs, HittingSetInstance};
use crate::{Error, Graph, SplitPartition, Vertex, VertexSet};

/// One guess of the solver: which independent vertex (if any) is allowed to
/// keep degree >= 2, which clique vertices that forces out, and the budget
/// left for the hitting-set stage.
#[derive(Clone, Debug)]
pub struct SbvdGuess {
    pub v_star: Option<Vertex>,
    /// Clique vertices outside N(v*) that must be deleted; empty for the
    /// no-center guess.
    pub pruned_clique: VertexSet,
    /// Budget remaining after paying for `pruned_clique`.
    pub residual_budget: usize,
}

/// The 3-hitting-set instance for one guess: in the graph with
/// `guess.pruned_clique` removed, each independent vertex v other than v*
/// with live degree >= 2 contributes a set {v, a, b} per neighbor pair a, b.
pub fn build_hs_instance(g: &Graph, p: &SplitPartition, guess: &SbvdGuess) -> HittingSetInstance {
    let h = g.without(&guess.pruned_clique);
    let mut family = Vec::new();
    for v in p.live_independent(&h).iter() {
        if Some(v) == guess.v_star {
            continue;
        }
        let nb = h.neighbors(v).to_vec();
        if nb.len() < 2 {
            continue;
        }
        for (idx, &a) in nb.iter().enumerate() {
            for &b in &nb[idx + 1..] {
                let mut s = vec![v, a, b];
                s.sort_unstable();
                family.push(s);
            }
        }
    }
    // the universe is exactly the vertices the sets mention; anything else
    // can never help a hitting set
    let mut universe: Vec<usize> = family.iter().flatten().copied().collect();
    universe.sort_unstable();
    universe.dedup();
    HittingSetInstance::new(universe, family, guess.residual_budget)
}

/// Minimum-cardinality-within-budget is not required: any deletion set of
/// size <= k with block remainder is a valid answer, and the solver returns
/// the first one found (deterministic: the no-center guess first, then
/// centers in ascending vertex order).
pub fn solve_sbvd(g: &Graph, p: &SplitPartition, k: usize) -> Result<Option<Vec<Vertex>>, Error> {
    Ok(solve_sbvd_detailed(g, p, k)?.map(|(s, _)| s))
}

/// Like [`solve_sbvd`], also reporting which guess produced the answer.
pub fn solve_sbvd_detailed(
    g: &Graph,
    p: &SplitPartition,
    k: usize,
) -> Result<Option<(Vec<Vertex>, SbvdGuess)>, Error> {
    debug_assert!(p.validate(g), "invalid split partition");
    let mut guesses = vec![SbvdGuess {
        v_star: None,
        pruned_clique: VertexSet::new(g.order()),
        residual_budget: k,
    }];
    for v in p.live_independent(g).iter() {
        let pruned = p.live_clique(g).difference(&g.neighbors(v));
        if pruned.len() > k {
            continue;
        }
        guesses.push(SbvdGuess {
            v_star: Some(v),
            pruned_clique: pruned.clone(),
            residual_budget: k - pruned.len(),
        });
    }
    for guess in guesses {
        let inst = build_hs_instance(g, p, &guess);
        if let Some(x) = solve_3hs(&inst) {
            let mut s = guess.pruned_clique.to_vec();
            s.extend(x);
            s.sort_unstable();
            let removed = VertexSet::from_iter(g.order(), s.iter().copied());
            if s.len() > k || !is_block_split(&g.without(&removed), p) {
                return Err(Error::InternalInvariantViolation(format!(
                    "block deletion set {:?} failed verification",
                    s
                )));
            }
            return Ok(Some((s, guess)));
        }
    }
    Ok(None)
}
