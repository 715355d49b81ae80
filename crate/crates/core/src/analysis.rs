//! Branching-vector recurrences and recursion-tree statistics.
//!
//! A branching rule that spends budget c_1,...,c_t across its t branches has
//! the leaf recurrence T(k) = T(k-c_1) + ... + T(k-c_t), whose solution grows
//! like gamma^k where gamma is the largest real root of
//! P(x) = 1 - sum x^(-c_i). P is strictly increasing on (0, inf) toward 1,
//! so that root is unique and easy to bracket.

use crate::stvd::RuleId;
use crate::Error;

/// Per-branch budget decreases (c_1,...,c_t), t >= 2, all c_i >= 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingVector(Vec<usize>);

impl BranchingVector {
    pub fn new(entries: Vec<usize>) -> Result<Self, Error> {
        if entries.len() < 2 {
            return Err(Error::InvalidBranchingVector(format!(
                "need at least 2 entries, got {}",
                entries.len()
            )));
        }
        if entries.iter().any(|&c| c == 0) {
            return Err(Error::InvalidBranchingVector("entries must be >= 1".into()));
        }
        Ok(BranchingVector(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }
}

impl std::fmt::Display for BranchingVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Largest real root of P(x) = 1 - sum x^(-c_i), to |P(gamma)| <= 1e-9.
///
/// Bisection on (1, t+1]: P(1) = 1 - t < 0 and
/// P(t+1) >= 1 - t/(t+1) > 0, so the root is bracketed; monotonicity makes
/// the bracket shrink onto it.
pub fn branching_number(v: &BranchingVector) -> f64 {
    let p = |x: f64| 1.0 - v.0.iter().map(|&c| x.powi(-(c as i32))).sum::<f64>();
    let mut lo = 1.0;
    let mut hi = (v.0.len() + 1) as f64;
    let mut mid = hi;
    for _ in 0..200 {
        mid = 0.5 * (lo + hi);
        let val = p(mid);
        if val.abs() <= 1e-9 {
            return mid;
        }
        if val > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    debug_assert!(p(mid).abs() <= 1e-9, "bisection failed to converge");
    mid
}

/// Minimum branching vector guaranteed by each branching rule; None for the
/// answer/reduction rules, which do not branch.
pub fn rule_minimum(rule: RuleId) -> Option<&'static [usize]> {
    match rule {
        RuleId::B1 => Some(&[1, 1]),
        RuleId::B2 => Some(&[1, 1, 2]),
        RuleId::B3 => Some(&[1, 1, 2, 2]),
        RuleId::B4 => Some(&[1, 2, 2]),
        RuleId::B5 => Some(&[1, 2, 2, 4, 3, 2, 4, 3]),
        RuleId::B6 => Some(&[1, 1]),
        RuleId::B7 => Some(&[1, 2, 2, 2, 3, 3, 3, 3]),
        RuleId::R1 | RuleId::R2 | RuleId::R3 => None,
    }
}

/// Does a realized vector dominate a rule's minimum vector?
///
/// Compared as sorted multisets: every realized entry must be at least its
/// positional counterpart. Fewer entries than the minimum (possible only if
/// degenerate duplicate branches were deduped) still dominate when the
/// prefix does, since dropping branches only shrinks the tree.
pub fn dominates(realized: &[usize], minimum: &[usize]) -> bool {
    if realized.len() > minimum.len() {
        return false;
    }
    let mut r = realized.to_vec();
    let mut m = minimum.to_vec();
    r.sort_unstable();
    m.sort_unstable();
    r.iter().zip(m.iter()).all(|(ri, mi)| ri >= mi)
}

/// The seven branching rules with their minimum vectors and branching
/// numbers. The worst entry is B3 at 1 + sqrt(3) ~ 2.7320508 (asserted).
pub fn rule_vector_table() -> Vec<(RuleId, BranchingVector, f64)> {
    let table: Vec<(RuleId, BranchingVector, f64)> = [
        RuleId::B1,
        RuleId::B2,
        RuleId::B3,
        RuleId::B4,
        RuleId::B5,
        RuleId::B6,
        RuleId::B7,
    ]
    .into_iter()
    .map(|rule| {
        let v = BranchingVector::new(rule_minimum(rule).unwrap().to_vec()).unwrap();
        let gamma = branching_number(&v);
        (rule, v, gamma)
    })
    .collect();
    let (worst_rule, _, worst_gamma) = table
        .iter()
        .max_by(|a, b| a.2.total_cmp(&b.2))
        .map(|(r, v, g)| (*r, v, *g))
        .unwrap();
    assert_eq!(worst_rule, RuleId::B3, "worst rule should be B3");
    assert!(
        (worst_gamma - (1.0 + 3f64.sqrt())).abs() <= 1e-6,
        "worst branching number {} is not 1+sqrt(3)",
        worst_gamma
    );
    table
}

/// Aggregated view of a solver trace.
#[derive(Clone, Debug, Default)]
pub struct RecursionStats {
    pub node_count: usize,
    /// Nodes that answered (R1 or R2 lines); every other node has children.
    pub leaf_count: usize,
    pub max_depth: usize,
    /// (rule, firing count), ascending by rule, only rules that fired.
    pub rule_counts: Vec<(RuleId, usize)>,
    /// Realized branch-set sizes per branching-rule node.
    pub realized_vectors: Vec<(RuleId, Vec<usize>)>,
}

/// Parse trace lines of the form `node <depth> <rule> k=<k> sizes=<c1,...,ct>`
/// (sizes empty for answer nodes) and aggregate them.
pub fn stats_from_trace(trace: &str) -> Result<RecursionStats, Error> {
    let mut stats = RecursionStats::default();
    let mut counts = std::collections::BTreeMap::new();
    for (lineno, line) in trace.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = |reason: &str| Error::MalformedTrace {
            line: lineno + 1,
            reason: reason.to_string(),
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 5 || tokens[0] != "node" {
            return Err(bad("expected `node <depth> <rule> k=<k> sizes=<list>`"));
        }
        let depth: usize = tokens[1].parse().map_err(|_| bad("bad depth"))?;
        let rule = RuleId::parse(tokens[2]).ok_or_else(|| bad("unknown rule id"))?;
        let k_str = tokens[3]
            .strip_prefix("k=")
            .ok_or_else(|| bad("missing k= field"))?;
        let _k: i64 = k_str.parse().map_err(|_| bad("bad budget"))?;
        let sizes_str = tokens[4]
            .strip_prefix("sizes=")
            .ok_or_else(|| bad("missing sizes= field"))?;
        let sizes: Vec<usize> = if sizes_str.is_empty() {
            Vec::new()
        } else {
            sizes_str
                .split(',')
                .map(|s| s.parse().map_err(|_| bad("bad size entry")))
                .collect::<Result<_, _>>()?
        };

        stats.node_count += 1;
        stats.max_depth = stats.max_depth.max(depth);
        if matches!(rule, RuleId::R1 | RuleId::R2) {
            stats.leaf_count += 1;
        }
        *counts.entry(rule).or_insert(0) += 1;
        if rule.is_branching() {
            stats.realized_vectors.push((rule, sizes));
        }
    }
    stats.rule_counts = counts.into_iter().collect();
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(entries: &[usize]) -> BranchingVector {
        BranchingVector::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn known_roots() {
        assert!((branching_number(&bv(&[1, 1])) - 2.0).abs() < 1e-6);
        assert!((branching_number(&bv(&[1, 1, 2, 2])) - (1.0 + 3f64.sqrt())).abs() < 1e-6);
        assert!((branching_number(&bv(&[1, 2, 2])) - 2.0).abs() < 1e-6);
        assert!((branching_number(&bv(&[1, 1, 2])) - (1.0 + 2f64.sqrt())).abs() < 1e-6);
    }

    #[test]
    fn uniform_vector_closed_form() {
        for t in 2..=4usize {
            for c in 1..=4usize {
                let v = bv(&vec![c; t]);
                let expected = (t as f64).powf(1.0 / c as f64);
                assert!(
                    (branching_number(&v) - expected).abs() < 1e-6,
                    "t={} c={}",
                    t,
                    c
                );
            }
        }
    }

    #[test]
    fn monotonicity_spot_checks() {
        // appending a branch makes the tree bigger
        assert!(branching_number(&bv(&[1, 1, 2])) > branching_number(&bv(&[1, 1])));
        // spending more budget on a branch makes it smaller
        assert!(branching_number(&bv(&[1, 2])) > branching_number(&bv(&[1, 3])));
    }

    #[test]
    fn invalid_vectors_rejected() {
        assert!(BranchingVector::new(vec![1]).is_err());
        assert!(BranchingVector::new(vec![1, 0]).is_err());
    }

    #[test]
    fn table_is_complete_and_bounded() {
        let table = rule_vector_table();
        assert_eq!(table.len(), 7);
        let cap = 1.0 + 3f64.sqrt() + 1e-6;
        for (rule, v, gamma) in &table {
            assert!(rule.is_branching());
            assert_eq!(Some(v.entries()), rule_minimum(*rule));
            assert!(*gamma <= cap, "{:?} exceeds the B3 bound", rule);
        }
        let b1 = table.iter().find(|(r, _, _)| *r == RuleId::B1).unwrap();
        assert!((b1.2 - 2.0).abs() < 1e-6);
        let b3 = table.iter().find(|(r, _, _)| *r == RuleId::B3).unwrap();
        assert!((b3.2 - 2.732051).abs() < 1e-5);
        let b7 = table.iter().find(|(r, _, _)| *r == RuleId::B7).unwrap();
        assert!(b7.2 <= 2.732051);
    }

    #[test]
    fn domination_is_multiset_based() {
        assert!(dominates(&[1, 2, 2], &[1, 2, 2]));
        assert!(dominates(&[2, 1, 3], &[1, 2, 2]));
        assert!(!dominates(&[1, 1, 2], &[1, 2, 2]));
        assert!(dominates(&[1, 3], &[1, 2, 2]));
        assert!(!dominates(&[1, 2, 2, 2], &[1, 2, 2]));
    }

    #[test]
    fn stats_single_answer_node() {
        let s = stats_from_trace("node 0 R2 k=3 sizes=\n").unwrap();
        assert_eq!((s.node_count, s.leaf_count, s.max_depth), (1, 1, 0));
        assert_eq!(s.rule_counts, vec![(RuleId::R2, 1)]);
        assert!(s.realized_vectors.is_empty());
    }

    #[test]
    fn stats_branch_with_two_leaves() {
        let trace = "node 0 B1 k=1 sizes=1,1\nnode 1 R1 k=0 sizes=\nnode 1 R2 k=0 sizes=\n";
        let s = stats_from_trace(trace).unwrap();
        assert_eq!((s.node_count, s.leaf_count, s.max_depth), (3, 2, 1));
        assert_eq!(s.realized_vectors, vec![(RuleId::B1, vec![1, 1])]);
    }

    #[test]
    fn stats_rejects_garbage() {
        assert!(matches!(
            stats_from_trace("node 0 B9 k=1 sizes=1,1"),
            Err(Error::MalformedTrace { line: 1, .. })
        ));
        assert!(matches!(
            stats_from_trace("node 0 B1 k=1\n"),
            Err(Error::MalformedTrace { .. })
        ));
    }
}
