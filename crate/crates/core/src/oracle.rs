//! Brute-force ground truth for the solvers and recognizers.
//!
//! Every checker here is written from scratch against the raw definitions
//! (4-subset enumeration for forbidden subgraphs, a fresh degree-form test
//! for the block property) so that agreement with the fast paths is
//! meaningful evidence, not a tautology.

use crate::graph::{split_partition, Graph};
use crate::hitting_set::HittingSetInstance;
use crate::{Error, Vertex, VertexSet};

/// Bound on live vertices (or universe elements) for subset enumeration.
pub const BRUTE_FORCE_LIMIT: usize = 14;

/// Target graph class for [`min_deletion`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TargetProperty {
    /// Split graph that is a block graph: at most one independent-side
    /// vertex of degree >= 2, each adjacent to the whole clique side.
    BlockSplit,
    /// No induced P4 (checked by raw 4-subset enumeration).
    ThresholdSplit,
    /// No induced diamond (checked by raw 4-subset enumeration).
    DiamondFree,
}

/// Does the live graph satisfy `prop`? Independent of the graph-core
/// predicate implementations.
pub fn satisfies(g: &Graph, prop: TargetProperty) -> bool {
    match prop {
        TargetProperty::DiamondFree => !has_subgraph(g, is_diamond_quad),
        TargetProperty::ThresholdSplit => !has_subgraph(g, is_p4_quad),
        TargetProperty::BlockSplit => {
            let Ok(p) = split_partition(g) else {
                return false;
            };
            let clique = p.live_clique(g);
            let mut high_degree = 0usize;
            for v in p.live_independent(g).iter() {
                let nv = g.neighbors(v);
                if nv.len() < 2 {
                    continue;
                }
                high_degree += 1;
                if clique.iter().any(|a| !nv.contains(a)) {
                    return false;
                }
            }
            high_degree <= 1
        }
    }
}

fn is_diamond_quad(edges: u32, _degs: [u32; 4]) -> bool {
    edges == 5
}

fn is_p4_quad(edges: u32, mut degs: [u32; 4]) -> bool {
    degs.sort_unstable();
    edges == 3 && degs == [1, 1, 2, 2]
}

fn has_subgraph(g: &Graph, shape: fn(u32, [u32; 4]) -> bool) -> bool {
    let verts = g.live_vertices().to_vec();
    let n = verts.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let quad = [verts[i], verts[j], verts[k], verts[l]];
                    let mut edges = 0u32;
                    let mut degs = [0u32; 4];
                    for x in 0..4 {
                        for y in x + 1..4 {
                            if g.has_edge(quad[x], quad[y]) {
                                edges += 1;
                                degs[x] += 1;
                                degs[y] += 1;
                            }
                        }
                    }
                    if shape(edges, degs) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Smallest deletion set (within `kmax`) whose removal leaves a graph
/// satisfying `prop`. Subsets are enumerated by size, then lexicographically,
/// so the witness is canonical.
pub fn min_deletion(
    g: &Graph,
    prop: TargetProperty,
    kmax: usize,
) -> Result<Option<(usize, Vec<Vertex>)>, Error> {
    let verts = g.live_vertices().to_vec();
    if verts.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { n: verts.len(), limit: BRUTE_FORCE_LIMIT });
    }
    for size in 0..=kmax.min(verts.len()) {
        for subset in combinations(&verts, size) {
            let removed = VertexSet::from_iter(g.order(), subset.iter().copied());
            if satisfies(&g.without(&removed), prop) {
                return Ok(Some((size, subset)));
            }
        }
    }
    Ok(None)
}

/// Minimum hitting set within the instance budget by subset enumeration.
pub fn brute_force_3hs(inst: &HittingSetInstance) -> Result<Option<(usize, Vec<usize>)>, Error> {
    let universe = inst.universe().to_vec();
    if universe.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { n: universe.len(), limit: BRUTE_FORCE_LIMIT });
    }
    for size in 0..=inst.budget().min(universe.len()) {
        for subset in combinations(&universe, size) {
            if inst
                .family()
                .iter()
                .all(|s| s.iter().any(|e| subset.binary_search(e).is_ok()))
            {
                return Ok(Some((size, subset)));
            }
        }
    }
    Ok(None)
}

/// All size-`k` subsets of `items` in lexicographic order (by position).
fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance to the next combination
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if idx[pos] != pos + n - k {
                idx[pos] += 1;
                for j in pos + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return out;
            }
        }
        if k == 0 {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    }

    #[test]
    fn min_deletion_on_diamond() {
        let got = min_deletion(&diamond(), TargetProperty::BlockSplit, 2).unwrap();
        assert_eq!(got, Some((1, vec![0])));
        let dfree = min_deletion(&diamond(), TargetProperty::DiamondFree, 2).unwrap();
        assert_eq!(dfree, Some((1, vec![0])));
    }

    #[test]
    fn min_deletion_on_path() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let got = min_deletion(&path, TargetProperty::ThresholdSplit, 2).unwrap();
        assert_eq!(got, Some((1, vec![0])));
    }

    #[test]
    fn min_deletion_trivial_zero() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        for prop in [
            TargetProperty::BlockSplit,
            TargetProperty::ThresholdSplit,
            TargetProperty::DiamondFree,
        ] {
            assert_eq!(min_deletion(&k3, prop, 2).unwrap(), Some((0, vec![])));
        }
    }

    #[test]
    fn min_deletion_guard() {
        let big = Graph::new(15);
        assert!(matches!(
            min_deletion(&big, TargetProperty::DiamondFree, 1),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn brute_3hs_examples() {
        let one = HittingSetInstance::new(vec![1, 2, 3], vec![vec![1, 2, 3]], 1);
        assert_eq!(brute_force_3hs(&one).unwrap(), Some((1, vec![1])));

        let three_units =
            HittingSetInstance::new(vec![1, 2, 3], vec![vec![1], vec![2], vec![3]], 2);
        assert_eq!(brute_force_3hs(&three_units).unwrap(), None);

        let triangle = HittingSetInstance::new(
            vec![1, 2, 3],
            vec![vec![1, 2], vec![2, 3], vec![1, 3]],
            2,
        );
        assert_eq!(brute_force_3hs(&triangle).unwrap(), Some((2, vec![1, 2])));
    }

    #[test]
    fn combinations_order() {
        assert_eq!(
            combinations(&[0, 1, 2, 3], 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(&[5, 7], 0), vec![Vec::<usize>::new()]);
        assert!(combinations(&[1], 2).is_empty());
    }
}
