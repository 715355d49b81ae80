//! Exact solver for hitting set with sets of size at most three.
//!
//! Branch and reduce: normalize the family, force elements of unit sets, and
//! otherwise branch on the at most three elements of a smallest set, spending
//! one budget unit per chosen element. The recursion therefore has at most
//! 3^k leaves.

/// A hitting-set instance with sets of size 1..=3.
#[derive(Clone, Debug)]
pub struct HittingSetInstance {
    universe: Vec<usize>,
    family: Vec<Vec<usize>>,
    budget: usize,
}

impl HittingSetInstance {
    /// Build an instance. Sets are sorted internally; every set must be
    /// nonempty, have at most three elements, and draw from `universe`.
    pub fn new(universe: Vec<usize>, family: Vec<Vec<usize>>, budget: usize) -> Self {
        let mut universe = universe;
        universe.sort_unstable();
        universe.dedup();
        let family: Vec<Vec<usize>> = family
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                assert!(
                    (1..=3).contains(&s.len()),
                    "set size {} outside 1..=3",
                    s.len()
                );
                assert!(
                    s.iter().all(|e| universe.binary_search(e).is_ok()),
                    "set {:?} not contained in universe",
                    s
                );
                s
            })
            .collect();
        HittingSetInstance { universe, family, budget }
    }

    pub fn universe(&self) -> &[usize] {
        &self.universe
    }

    pub fn family(&self) -> &[Vec<usize>] {
        &self.family
    }

    pub fn budget(&self) -> usize {
        self.budget
    }
}

/// Deduplicate, drop sets that are supersets of another set, and put the
/// family in (size, lexicographic) order. The minimal hitting sets are
/// unchanged: a superset is hit whenever its contained set is.
pub fn normalize(inst: &HittingSetInstance) -> HittingSetInstance {
    let mut family = inst.family.clone();
    family.sort_unstable_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    family.dedup();
    let kept: Vec<Vec<usize>> = family
        .iter()
        .filter(|s| {
            !family
                .iter()
                .any(|t| t.len() < s.len() && t.iter().all(|e| s.contains(e)))
        })
        .cloned()
        .collect();
    HittingSetInstance {
        universe: inst.universe.clone(),
        family: kept,
        budget: inst.budget,
    }
}

/// Smallest hitting set within budget, or None. The returned set is sorted,
/// self-checked against the input family, and deterministic (first success
/// over the fixed branch order).
pub fn solve_3hs(inst: &HittingSetInstance) -> Option<Vec<usize>> {
    solve_3hs_counting(inst).0
}

/// Like [`solve_3hs`], also reporting the number of recursion leaves.
pub fn solve_3hs_counting(inst: &HittingSetInstance) -> (Option<Vec<usize>>, u64) {
    let norm = normalize(inst);
    let mut chosen = Vec::new();
    let mut leaves = 0u64;
    let result = search(&norm.family, norm.budget, &mut chosen, &mut leaves);
    if let Some(x) = &result {
        assert!(x.len() <= inst.budget, "hitting set exceeds budget");
        assert!(
            inst.family.iter().all(|s| s.iter().any(|e| x.binary_search(e).is_ok())),
            "returned set misses a family set"
        );
    }
    (result, leaves)
}

fn search(
    family: &[Vec<usize>],
    budget: usize,
    chosen: &mut Vec<usize>,
    leaves: &mut u64,
) -> Option<Vec<usize>> {
    if family.is_empty() {
        *leaves += 1;
        let mut x = chosen.clone();
        x.sort_unstable();
        return Some(x);
    }
    if budget == 0 {
        *leaves += 1;
        return None;
    }
    // family stays (size, lex) sorted under filtering, so the first set is
    // the smallest; a unit set forces its element, larger ones branch
    let pick = &family[0];
    for &x in pick {
        chosen.push(x);
        let remaining: Vec<Vec<usize>> = family
            .iter()
            .filter(|s| !s.contains(&x))
            .cloned()
            .collect();
        let found = search(&remaining, budget - 1, chosen, leaves);
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(universe: &[usize], family: &[&[usize]], k: usize) -> HittingSetInstance {
        HittingSetInstance::new(
            universe.to_vec(),
            family.iter().map(|s| s.to_vec()).collect(),
            k,
        )
    }

    #[test]
    fn normalize_dedups_and_sorts() {
        let n = normalize(&inst(&[1, 2, 3], &[&[2, 1], &[1, 2], &[3]], 2));
        assert_eq!(n.family(), &[vec![3], vec![1, 2]]);
        assert_eq!(n.budget(), 2);
    }

    #[test]
    fn normalize_drops_supersets() {
        let n = normalize(&inst(&[1, 2, 3], &[&[1], &[1, 2], &[2, 3]], 1));
        assert_eq!(n.family(), &[vec![1], vec![2, 3]]);
    }

    #[test]
    fn solve_small_yes() {
        let x = solve_3hs(&inst(&[1, 2, 3, 4, 5], &[&[1, 2, 3], &[1, 4], &[2, 5]], 2));
        assert_eq!(x, Some(vec![1, 2]));
    }

    #[test]
    fn solve_small_no() {
        assert_eq!(
            solve_3hs(&inst(&[1, 2, 3, 4, 5], &[&[1, 2, 3], &[1, 4], &[2, 5]], 1)),
            None
        );
    }

    #[test]
    fn unit_set_forcing() {
        assert_eq!(solve_3hs(&inst(&[7], &[&[7]], 1)), Some(vec![7]));
        assert_eq!(solve_3hs(&inst(&[7], &[&[7]], 0)), None);
    }

    #[test]
    fn empty_family_is_trivially_hit() {
        assert_eq!(solve_3hs(&inst(&[], &[], 0)), Some(vec![]));
    }

    #[test]
    fn leaf_count_within_branching_bound() {
        let i = inst(
            &[0, 1, 2, 3, 4, 5, 6, 7, 8],
            &[&[0, 1, 2], &[3, 4, 5], &[6, 7, 8], &[0, 3, 6], &[1, 4, 7]],
            3,
        );
        let (_, leaves) = solve_3hs_counting(&i);
        assert!(leaves <= 27, "{} leaves exceeds 3^3", leaves);
    }
}
