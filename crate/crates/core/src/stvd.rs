//! Branch-and-reduce solver for threshold deletion on split graphs: delete at
//! most k vertices so the remaining graph has no induced P4.
//!
//! The solver repeatedly applies the first matching rule from a fixed ladder:
//! two answer rules (R1 no, R2 yes), one budget-free reduction (R3 removes
//! vertices on no P4), and seven branching rules B1..B7 keyed to the local
//! structure of the independent side. Every branching rule comes with a
//! guaranteed minimum branch vector; the realized vector is checked against
//! it at runtime, and every structural fact the rules rely on is asserted,
//! surfacing violations as [`Error::InternalInvariantViolation`] rather than
//! wrong answers.

use crate::analysis::{dominates, rule_minimum};
use crate::bitset::VertexSet;
use crate::graph::{find_induced_p4, min_degree_set, p4_free_vertices, twin_class};
use crate::{Error, Graph, SplitPartition, Vertex};

/// Rules in priority order: answers first, then the free reduction, then the
/// branching rules checked B1 through B7.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    R1,
    R2,
    R3,
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    B7,
}

impl RuleId {
    pub fn is_branching(self) -> bool {
        !matches!(self, RuleId::R1 | RuleId::R2 | RuleId::R3)
    }

    pub fn parse(s: &str) -> Option<RuleId> {
        Some(match s {
            "R1" => RuleId::R1,
            "R2" => RuleId::R2,
            "R3" => RuleId::R3,
            "B1" => RuleId::B1,
            "B2" => RuleId::B2,
            "B3" => RuleId::B3,
            "B4" => RuleId::B4,
            "B5" => RuleId::B5,
            "B6" => RuleId::B6,
            "B7" => RuleId::B7,
            _ => return None,
        })
    }
}

impl std::fmt::Display for RuleId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// One node of the search: current graph, its (deletion-stable) partition,
/// remaining budget, and the charged deletions so far. The budget is signed
/// so an overshooting branch shows up as a negative value answered by R1.
#[derive(Clone)]
pub struct SearchState {
    pub graph: Graph,
    pub partition: SplitPartition,
    pub budget: i64,
    pub deleted: Vec<Vertex>,
}

impl SearchState {
    pub fn new(graph: Graph, partition: SplitPartition, budget: i64) -> Self {
        debug_assert!(partition.validate(&graph), "invalid split partition");
        SearchState {
            graph,
            partition,
            budget,
            deleted: Vec::new(),
        }
    }
}

/// What the rule ladder decided at one node.
#[derive(Clone, Debug)]
pub enum RuleDecision {
    /// R1 (no) or R2 (yes): stop.
    Answer { rule: RuleId, yes: bool },
    /// R3: delete these vertices without charging the budget.
    Reduce { rule: RuleId, delete: VertexSet },
    /// B1..B7: recurse once per set, deleting it and paying its size.
    Branch { rule: RuleId, sets: Vec<VertexSet> },
}

impl RuleDecision {
    pub fn rule(&self) -> RuleId {
        match self {
            RuleDecision::Answer { rule, .. }
            | RuleDecision::Reduce { rule, .. }
            | RuleDecision::Branch { rule, .. } => *rule,
        }
    }

    /// Sizes recorded in the trace: branch-set sizes for a branching rule,
    /// the deleted-set size for R3, empty for answers.
    pub fn branch_sizes(&self) -> Vec<usize> {
        match self {
            RuleDecision::Answer { .. } => Vec::new(),
            RuleDecision::Reduce { delete, .. } => vec![delete.len()],
            RuleDecision::Branch { sets, .. } => sets.iter().map(|s| s.len()).collect(),
        }
    }
}

/// One line of the search trace, printed as
/// `node <depth> <rule> k=<k> sizes=<c1,...,ct>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRecord {
    pub depth: usize,
    pub rule: RuleId,
    pub budget: i64,
    pub sizes: Vec<usize>,
}

impl std::fmt::Display for TraceRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sizes: Vec<String> = self.sizes.iter().map(|c| c.to_string()).collect();
        write!(
            f,
            "node {} {} k={} sizes={}",
            self.depth,
            self.rule,
            self.budget,
            sizes.join(",")
        )
    }
}

/// How the minimum-degree twin structure relates two non-twin vertices u1, u2
/// of the minimum-degree set: their private neighbors a1, a2, the other
/// minimum-degree vertices outside both twin classes, and whether those all
/// extend the shared neighborhood (sunflower) rather than swapping in the
/// private pair.
#[derive(Clone, Debug)]
pub struct Case2Context {
    pub u1: Vertex,
    pub u2: Vertex,
    pub a1: Vertex,
    pub a2: Vertex,
    pub remainder: VertexSet,
    pub sunflower: bool,
}

fn internal(msg: impl Into<String>) -> Error {
    Error::InternalInvariantViolation(msg.into())
}

/// Private neighbors of a non-twin pair from the minimum-degree set. Both
/// difference sets must be singletons: the vertices have equal degree, and a
/// 2-vs-2 difference would have been taken by B3 first.
fn private_neighbors(g: &Graph, u1: Vertex, u2: Vertex) -> Result<(Vertex, Vertex), Error> {
    let n1 = g.neighbors(u1);
    let n2 = g.neighbors(u2);
    let d12 = n1.difference(&n2);
    let d21 = n2.difference(&n1);
    if d12.len() != 1 || d21.len() != 1 {
        return Err(internal(format!(
            "minimum-degree pair ({}, {}) differs by more than one vertex per side",
            u1, u2
        )));
    }
    Ok((d12.first().unwrap(), d21.first().unwrap()))
}

/// Classify a non-twin minimum-degree pair (u1, u2) with private neighbors
/// a1, a2 against the rest of the minimum-degree set: every remaining vertex
/// must either extend the shared neighborhood by one fresh vertex (keeping
/// neither a1 nor a2) or contain both a1, a2 and drop one shared vertex, and
/// all of them must fall on the same side. The pair is a sunflower when no
/// vertex swaps in the private pair.
pub fn classify_sunflower(
    g: &Graph,
    p: &SplitPartition,
    u1: Vertex,
    u2: Vertex,
) -> Result<Case2Context, Error> {
    let (a1, a2) = private_neighbors(g, u1, u2)?;
    let i0 = min_degree_set(g, p)?;
    if !i0.contains(u1) || !i0.contains(u2) {
        return Err(internal(
            "sunflower classification needs minimum-degree vertices",
        ));
    }
    let shared = g.neighbors(u1).intersection(&g.neighbors(u2));
    let priv_pair = VertexSet::from_iter(g.order(), [a1, a2]);
    let remainder = i0
        .difference(&twin_class(g, p, u1))
        .difference(&twin_class(g, p, u2));
    let mut extends = 0usize;
    let mut swaps = 0usize;
    for u in remainder.iter() {
        let nu = g.neighbors(u);
        let extends_shared = shared.is_subset(&nu)
            && !nu.contains(a1)
            && !nu.contains(a2)
            && nu.len() == shared.len() + 1;
        let swaps_in_pair = nu.contains(a1)
            && nu.contains(a2)
            && nu.difference(&priv_pair).is_subset(&shared)
            && shared.difference(&nu).len() == 1;
        match (extends_shared, swaps_in_pair) {
            (true, false) => extends += 1,
            (false, true) => swaps += 1,
            _ => {
                return Err(internal(format!(
                    "vertex {} matches neither sunflower case for pair ({}, {})",
                    u, u1, u2
                )))
            }
        }
    }
    if extends > 0 && swaps > 0 {
        return Err(internal(format!(
            "pair ({}, {}) has vertices on both sunflower sides",
            u1, u2
        )));
    }
    Ok(Case2Context {
        u1,
        u2,
        a1,
        a2,
        remainder,
        sunflower: swaps == 0,
    })
}

fn set_of<const N: usize>(capacity: usize, items: [Vertex; N]) -> VertexSet {
    VertexSet::from_iter(capacity, items)
}

/// Validate and package a branching decision: dedupe degenerate duplicate
/// sets, require every set to be a nonempty set of live vertices, and check
/// the realized vector dominates the rule's minimum.
fn branch(g: &Graph, rule: RuleId, sets: Vec<VertexSet>) -> Result<RuleDecision, Error> {
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.contains(&s) {
            kept.push(s);
        }
    }
    for s in &kept {
        if s.is_empty() || !s.is_subset(g.live_vertices()) {
            return Err(internal(format!(
                "rule {} produced a branch set that is not a nonempty live set",
                rule
            )));
        }
    }
    let minimum = rule_minimum(rule).expect("only branching rules reach here");
    let sizes: Vec<usize> = kept.iter().map(|s| s.len()).collect();
    if !dominates(&sizes, minimum) {
        return Err(internal(format!(
            "rule {} realized vector {:?} does not dominate its minimum {:?}",
            rule, sizes, minimum
        )));
    }
    Ok(RuleDecision::Branch { rule, sets: kept })
}

/// First applicable rule for the state, with every branching precondition
/// checked. Read-only: the caller applies the decision.
pub fn select_rule(state: &SearchState) -> Result<RuleDecision, Error> {
    let g = &state.graph;
    let p = &state.partition;
    let n = g.order();

    // R1: out of budget
    if state.budget < 0 {
        return Ok(RuleDecision::Answer {
            rule: RuleId::R1,
            yes: false,
        });
    }
    if state.budget == 0 && find_induced_p4(g, p).is_some() {
        return Ok(RuleDecision::Answer {
            rule: RuleId::R1,
            yes: false,
        });
    }
    // R2: nothing left
    if g.live_count() == 0 {
        return Ok(RuleDecision::Answer {
            rule: RuleId::R2,
            yes: true,
        });
    }
    // R3: vertices on no P4 are never worth deleting from the budget
    let free = p4_free_vertices(g, p);
    if !free.is_empty() {
        return Ok(RuleDecision::Reduce {
            rule: RuleId::R3,
            delete: free,
        });
    }

    let ind = p.live_independent(g);
    let ind_vec = ind.to_vec();

    // B1: two degree-1 vertices with different neighbors
    let deg1: Vec<Vertex> = ind_vec.iter().copied().filter(|&v| g.degree(v) == 1).collect();
    for (idx, &u) in deg1.iter().enumerate() {
        for &v in &deg1[idx + 1..] {
            if g.neighbors(u) != g.neighbors(v) {
                return branch(g, RuleId::B1, vec![g.neighbors(u), g.neighbors(v)]);
            }
        }
    }

    // B2: one degree-1 vertex u-a; some independent vertex misses a
    if let Some(&u) = deg1.first() {
        let nu = g.neighbors(u);
        let a = nu.first().unwrap();
        let v = ind_vec
            .iter()
            .copied()
            .find(|&x| !g.neighbors(x).contains(a))
            .ok_or_else(|| {
                internal("rule B2: every independent vertex sees the pendant's neighbor")
            })?;
        return branch(g, RuleId::B2, vec![set_of(n, [v]), nu, g.neighbors(v)]);
    }

    // B3: a pair with two private neighbors on each side
    for (idx, &u) in ind_vec.iter().enumerate() {
        let nu = g.neighbors(u);
        for &v in &ind_vec[idx + 1..] {
            let nv = g.neighbors(v);
            let du = nu.difference(&nv);
            if du.len() < 2 {
                continue;
            }
            let dv = nv.difference(&nu);
            if dv.len() < 2 {
                continue;
            }
            return branch(
                g,
                RuleId::B3,
                vec![set_of(n, [u]), set_of(n, [v]), du, dv],
            );
        }
    }

    let i0 = min_degree_set(g, p)
        .map_err(|_| internal("branching reached with an empty independent side"))?;
    let (reps, classes) = twin_classes(g, p, &i0);
    if reps.len() == 1 {
        one_twin_class(g, p, &ind)
    } else {
        several_twin_classes(g, p, &i0, &ind, &reps, &classes)
    }
}

/// Group the minimum-degree set into twin classes; representatives ascending.
fn twin_classes(
    g: &Graph,
    p: &SplitPartition,
    i0: &VertexSet,
) -> (Vec<Vertex>, Vec<VertexSet>) {
    let mut reps = Vec::new();
    let mut classes = Vec::new();
    let mut assigned = VertexSet::new(g.order());
    for u in i0.iter() {
        if assigned.contains(u) {
            continue;
        }
        let cls = twin_class(g, p, u);
        debug_assert!(cls.is_subset(i0), "twins of a minimum-degree vertex share its degree");
        assigned = assigned.union(&cls);
        reps.push(u);
        classes.push(cls);
    }
    (reps, classes)
}

/// B4/B5: the whole minimum-degree set is one twin class.
fn one_twin_class(g: &Graph, p: &SplitPartition, ind: &VertexSet) -> Result<RuleDecision, Error> {
    let n = g.order();
    let i0 = min_degree_set(g, p).expect("checked nonempty");
    let u = i0.first().unwrap();
    let nu = g.neighbors(u);
    let mut nu_iter = nu.iter();
    let (a1, a2) = match (nu_iter.next(), nu_iter.next()) {
        (Some(a1), Some(a2)) => (a1, a2),
        _ => return Err(internal("rule B4/B5: twin-class vertex has degree < 2")),
    };
    let v1 = lowest_missing(g, ind, a1)
        .ok_or_else(|| internal("rule B4/B5: a clique vertex sees the whole independent side"))?;
    let v2 = lowest_missing(g, ind, a2)
        .ok_or_else(|| internal("rule B4/B5: a clique vertex sees the whole independent side"))?;
    if v1 == v2 {
        return Err(internal("rule B4/B5: branch anchors coincide"));
    }
    let core = g
        .neighbors(v1)
        .intersection(&g.neighbors(v2))
        .difference(&nu);
    if core.len() < 2 {
        return Err(internal(
            "rule B4/B5: anchors share fewer than two neighbors outside N(u)",
        ));
    }
    let witness = ind
        .iter()
        .filter(|&w| w != v1 && w != v2)
        .find(|&w| {
            let nw = g.neighbors(w);
            !(nw.contains(a1) && nw.contains(a2))
        });
    match witness {
        None => branch(
            g,
            RuleId::B4,
            vec![set_of(n, [u]), core, set_of(n, [v1, v2])],
        ),
        Some(w) => {
            let nw = g.neighbors(w);
            // orient so that a1 is the anchor w misses
            let (a1, v1, a2, v2) = if nw.contains(a1) {
                (a2, v2, a1, v1)
            } else {
                (a1, v1, a2, v2)
            };
            if g.neighbors(w).contains(a1) {
                return Err(internal("rule B5: witness vertex sees both anchors"));
            }
            let fresh = nw.difference(&nu);
            if fresh.len() < 2 {
                return Err(internal(
                    "rule B5: witness vertex has fewer than two neighbors outside N(u)",
                ));
            }
            let mut x = fresh;
            x.insert(v1);
            let mut x_a2 = x.clone();
            x_a2.insert(a2);
            let mut x_v2 = x;
            x_v2.insert(v2);
            branch(
                g,
                RuleId::B5,
                vec![
                    set_of(n, [u]),
                    core,
                    set_of(n, [a1, a2]),
                    x_a2,
                    set_of(n, [v1, w, a2]),
                    set_of(n, [a1, v2]),
                    x_v2,
                    set_of(n, [v1, w, v2]),
                ],
            )
        }
    }
}

/// B6/B7: the minimum-degree set has at least two twin classes.
fn several_twin_classes(
    g: &Graph,
    p: &SplitPartition,
    i0: &VertexSet,
    ind: &VertexSet,
    reps: &[Vertex],
    classes: &[VertexSet],
) -> Result<RuleDecision, Error> {
    let n = g.order();
    let outside = ind.difference(i0);

    // B6: a pair whose private neighbors cover every vertex outside the
    // minimum-degree set (vacuously true when there is none)
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            let (a1, a2) = private_neighbors(g, reps[i], reps[j])?;
            let covered = outside.iter().all(|w| {
                let nw = g.neighbors(w);
                nw.contains(a1) && nw.contains(a2)
            });
            if covered {
                let (cls, anchor) = if classes[i].len() <= classes[j].len() {
                    (classes[i].clone(), a1)
                } else {
                    (classes[j].clone(), a2)
                };
                return branch(g, RuleId::B6, vec![cls, set_of(n, [anchor])]);
            }
        }
    }

    // B7: pick the pair and the two outside anchors
    let ctx = classify_sunflower(g, p, reps[0], reps[1])?;
    let (u1, u2, a, v) = if ctx.sunflower {
        let shared = g.neighbors(ctx.u1).intersection(&g.neighbors(ctx.u2));
        let a = shared
            .first()
            .ok_or_else(|| internal("rule B7: chosen pair shares no neighbor"))?;
        let v = lowest_missing(g, ind, a)
            .ok_or_else(|| internal("rule B7: a clique vertex sees the whole independent side"))?;
        if i0.contains(v) {
            return Err(internal(
                "rule B7: outside anchor fell inside the minimum-degree set",
            ));
        }
        (ctx.u1, ctx.u2, a, v)
    } else {
        let mut union_n = VertexSet::new(n);
        for x in i0.iter() {
            union_n = union_n.union(&g.neighbors(x));
        }
        let v = outside
            .iter()
            .find(|&w| !union_n.is_subset(&g.neighbors(w)))
            .ok_or_else(|| {
                internal("rule B7: every outside vertex dominates the minimum-degree neighborhoods")
            })?;
        let a = union_n.difference(&g.neighbors(v)).first().unwrap();
        let mut found = None;
        'pairs: for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                if g.neighbors(reps[i]).contains(a) && g.neighbors(reps[j]).contains(a) {
                    found = Some((reps[i], reps[j]));
                    break 'pairs;
                }
            }
        }
        let (u1, u2) =
            found.ok_or_else(|| internal("rule B7: no non-twin pair shares the chosen vertex"))?;
        (u1, u2, a, v)
    };

    let (mut u1, mut u2) = (u1, u2);
    let (mut a1, mut a2) = private_neighbors(g, u1, u2)?;
    let w = outside
        .iter()
        .find(|&w| {
            let nw = g.neighbors(w);
            !(nw.contains(a1) && nw.contains(a2))
        })
        .ok_or_else(|| internal("rule B7: every outside vertex sees both private neighbors"))?;
    if g.neighbors(w).contains(a1) {
        std::mem::swap(&mut u1, &mut u2);
        std::mem::swap(&mut a1, &mut a2);
    }
    let nw = g.neighbors(w);
    if nw.contains(a1) {
        return Err(internal("rule B7: witness vertex sees both private neighbors"));
    }
    if !nw.contains(a) {
        return Err(internal("rule B7: witness vertex misses the shared anchor"));
    }
    if v == w {
        return Err(internal("rule B7: outside anchors coincide"));
    }
    if a == a1 || a == a2 {
        return Err(internal("rule B7: shared anchor is a private neighbor"));
    }
    let core = g.neighbors(v).intersection(&nw).difference(&g.neighbors(u1));
    if core.len() < 2 {
        return Err(internal(
            "rule B7: outside anchors share fewer than two neighbors outside N(u1)",
        ));
    }
    branch(
        g,
        RuleId::B7,
        vec![
            set_of(n, [u1]),
            core,
            set_of(n, [a, a1]),
            set_of(n, [v, a1]),
            set_of(n, [a, w, a2]),
            set_of(n, [v, w, a2]),
            set_of(n, [a, w, u2]),
            set_of(n, [v, w, u2]),
        ],
    )
}

/// Lowest vertex of `set` whose neighborhood misses `a`.
fn lowest_missing(g: &Graph, set: &VertexSet, a: Vertex) -> Option<Vertex> {
    set.iter().find(|&v| !g.neighbors(v).contains(a))
}

/// Decide whether at most k deletions make the graph P4-free; on yes, return
/// the sorted deleted set (R3 removals are free and never part of it).
pub fn solve_stvd(g: &Graph, p: &SplitPartition, k: usize) -> Result<Option<Vec<Vertex>>, Error> {
    let mut trace = Vec::new();
    solve_stvd_traced(g, p, k, &mut trace)
}

/// [`solve_stvd`], also appending one [`TraceRecord`] per visited node.
pub fn solve_stvd_traced(
    g: &Graph,
    p: &SplitPartition,
    k: usize,
    trace: &mut Vec<TraceRecord>,
) -> Result<Option<Vec<Vertex>>, Error> {
    let state = SearchState::new(g.clone(), p.clone(), k as i64);
    recurse(state, 0, trace)
}

fn recurse(
    mut state: SearchState,
    mut depth: usize,
    trace: &mut Vec<TraceRecord>,
) -> Result<Option<Vec<Vertex>>, Error> {
    loop {
        let decision = select_rule(&state)?;
        trace.push(TraceRecord {
            depth,
            rule: decision.rule(),
            budget: state.budget,
            sizes: decision.branch_sizes(),
        });
        match decision {
            RuleDecision::Answer { yes, .. } => {
                return Ok(yes.then(|| {
                    let mut s = state.deleted.clone();
                    s.sort_unstable();
                    s
                }));
            }
            RuleDecision::Reduce { delete, .. } => {
                state.graph.delete_set(&delete);
                depth += 1;
            }
            RuleDecision::Branch { sets, .. } => {
                for s in &sets {
                    let mut child = state.clone();
                    child.graph.delete_set(s);
                    child.budget -= s.len() as i64;
                    child.deleted.extend(s.iter());
                    if let Some(witness) = recurse(child, depth + 1, trace)? {
                        return Ok(Some(witness));
                    }
                }
                return Ok(None);
            }
        }
    }
}
