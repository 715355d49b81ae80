//! Graphs with logical vertex deletion, split partitions, and the structural
//! predicates the deletion solvers are built on.
//!
//! Vertices keep their original indices forever; deleting a vertex only marks
//! it dead. Every accessor (neighbors, degree, predicates) sees the live
//! subgraph, so a deleted vertex appears in no neighbor set.

use crate::bitset::VertexSet;
use crate::{Error, Vertex};

/// Undirected simple graph over vertices `0..n` with logical deletion.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    alive: VertexSet,
}

impl Graph {
    /// Graph with `n` vertices, no edges, all vertices live.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
            alive: VertexSet::full(n),
        }
    }

    /// Convenience constructor from an edge list.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Total vertex count, deleted vertices included.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        assert!(u != v, "self-loop at {}", u);
        assert!(u < self.n && v < self.n, "edge ({}, {}) out of range", u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn is_live(&self, v: Vertex) -> bool {
        self.alive.contains(v)
    }

    /// Logically delete `v`; all accessors stop seeing it.
    pub fn delete(&mut self, v: Vertex) {
        self.alive.remove(v);
    }

    pub fn delete_set(&mut self, s: &VertexSet) {
        self.alive = self.alive.difference(s);
    }

    pub fn delete_all<I: IntoIterator<Item = Vertex>>(&mut self, vs: I) {
        for v in vs {
            self.delete(v);
        }
    }

    pub fn live_vertices(&self) -> &VertexSet {
        &self.alive
    }

    pub fn live_count(&self) -> usize {
        self.alive.len()
    }

    /// True iff both endpoints are live and adjacent.
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.alive.contains(u) && self.alive.contains(v) && self.adj[u].contains(v)
    }

    /// Live neighborhood of `v` (empty if `v` itself is deleted).
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        if !self.alive.contains(v) {
            return VertexSet::new(self.n);
        }
        self.adj[v].intersection(&self.alive)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        if !self.alive.contains(v) {
            return 0;
        }
        self.adj[v].intersection_len(&self.alive)
    }

    pub fn live_edge_count(&self) -> usize {
        self.alive.iter().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Copy of the graph with the vertices of `s` deleted.
    pub fn without(&self, s: &VertexSet) -> Graph {
        let mut g = self.clone();
        g.delete_set(s);
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut edges = Vec::new();
        let live = self.alive.to_vec();
        for (idx, &u) in live.iter().enumerate() {
            for &v in &live[idx + 1..] {
                if self.adj[u].contains(v) {
                    edges.push((u, v));
                }
            }
        }
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("live", &live)
            .field("edges", &edges)
            .finish()
    }
}

/// Split partition of a graph: clique side C, independent side I.
///
/// The assignment is by original vertex id, so it stays valid under deletion;
/// use the `live_*` accessors to view the current graph's sides.
#[derive(Clone, Debug)]
pub struct SplitPartition {
    c: VertexSet,
    i: VertexSet,
}

impl SplitPartition {
    pub fn new(c: VertexSet, i: VertexSet) -> Self {
        assert!(c.is_disjoint(&i), "partition sides overlap");
        SplitPartition { c, i }
    }

    pub fn clique(&self) -> &VertexSet {
        &self.c
    }

    pub fn independent(&self) -> &VertexSet {
        &self.i
    }

    pub fn in_clique(&self, v: Vertex) -> bool {
        self.c.contains(v)
    }

    pub fn in_independent(&self, v: Vertex) -> bool {
        self.i.contains(v)
    }

    pub fn live_clique(&self, g: &Graph) -> VertexSet {
        self.c.intersection(g.live_vertices())
    }

    pub fn live_independent(&self, g: &Graph) -> VertexSet {
        self.i.intersection(g.live_vertices())
    }

    /// Check that the live sides cover the live vertices, C is a clique and
    /// I is independent.
    pub fn validate(&self, g: &Graph) -> bool {
        let c = self.live_clique(g);
        let i = self.live_independent(g);
        if c.union(&i) != g.live_vertices().clone() {
            return false;
        }
        let cv = c.to_vec();
        for (idx, &u) in cv.iter().enumerate() {
            for &v in &cv[idx + 1..] {
                if !g.has_edge(u, v) {
                    return false;
                }
            }
        }
        let iv = i.to_vec();
        for (idx, &u) in iv.iter().enumerate() {
            for &v in &iv[idx + 1..] {
                if g.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

/// Canonical split partition via the degree-sequence characterization.
///
/// Live vertices are sorted by (degree desc, index asc); with d_1 >= ... >= d_n
/// and m = max{i : d_i >= i-1}, the graph is split iff
/// sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, and then the first m vertices are
/// a clique and the rest independent. Returns `NotSplit` when the identity
/// fails. Deterministic: ties broken by vertex index.
pub fn split_partition(g: &Graph) -> Result<SplitPartition, Error> {
    let mut verts = g.live_vertices().to_vec();
    verts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degs: Vec<usize> = verts.iter().map(|&v| g.degree(v)).collect();
    let mut m = 0;
    for (idx, &d) in degs.iter().enumerate() {
        if d >= idx {
            m = idx + 1;
        }
    }
    let head: usize = degs[..m].iter().sum();
    let tail: usize = degs[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return Err(Error::NotSplit);
    }
    let c = VertexSet::from_iter(g.order(), verts[..m].iter().copied());
    let i = VertexSet::from_iter(g.order(), verts[m..].iter().copied());
    let p = SplitPartition::new(c, i);
    debug_assert!(p.validate(g), "degree identity held but partition invalid");
    Ok(p)
}

/// An induced path u - a - b - v with endpoints on the independent side and
/// midpoints on the clique side. In a split graph every induced 4-vertex path
/// has this shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct P4Witness {
    pub u: Vertex,
    pub a: Vertex,
    pub b: Vertex,
    pub v: Vertex,
}

/// Find an induced P4, or None if the live graph has none.
///
/// Scans (u, v, a, b) in lexicographic order: u, v over the independent side,
/// a over N(u)\N(v), b over N(v)\N(u); the first hit is returned, so the
/// witness is deterministic.
pub fn find_induced_p4(g: &Graph, p: &SplitPartition) -> Option<P4Witness> {
    let ind = p.live_independent(g);
    for u in ind.iter() {
        let nu = g.neighbors(u);
        for v in ind.iter() {
            if v == u {
                continue;
            }
            let nv = g.neighbors(v);
            let a_side = nu.difference(&nv);
            if a_side.is_empty() {
                continue;
            }
            let b_side = nv.difference(&nu);
            if b_side.is_empty() {
                continue;
            }
            let a = a_side.first().unwrap();
            let b = b_side.first().unwrap();
            return Some(P4Witness { u, a, b, v });
        }
    }
    None
}

/// Live vertices that lie on no induced P4.
///
/// A vertex of C adjacent to every live independent vertex can sit on no P4
/// and always lands in the result; so does every vertex of a P4-free graph.
pub fn p4_free_vertices(g: &Graph, p: &SplitPartition) -> VertexSet {
    let ind = p.live_independent(g);
    let iv = ind.to_vec();
    let mut on_p4 = VertexSet::new(g.order());
    for (idx, &u) in iv.iter().enumerate() {
        let nu = g.neighbors(u);
        for &v in &iv[idx + 1..] {
            let nv = g.neighbors(v);
            let a_side = nu.difference(&nv);
            if a_side.is_empty() {
                continue;
            }
            let b_side = nv.difference(&nu);
            if b_side.is_empty() {
                continue;
            }
            // every a in N(u)\N(v) and b in N(v)\N(u) yields the P4 u-a-b-v
            on_p4.insert(u);
            on_p4.insert(v);
            on_p4 = on_p4.union(&a_side).union(&b_side);
        }
    }
    g.live_vertices().difference(&on_p4)
}

/// Four vertices inducing exactly five edges (K4 minus one edge), ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiamondWitness(pub [Vertex; 4]);

/// Find an induced diamond by scanning 4-subsets of the live vertices in
/// lexicographic order. Works on any graph, split or not.
pub fn find_induced_diamond(g: &Graph) -> Option<DiamondWitness> {
    let verts = g.live_vertices().to_vec();
    let n = verts.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let quad = [verts[i], verts[j], verts[k], verts[l]];
                    let mut edges = 0;
                    for x in 0..4 {
                        for y in x + 1..4 {
                            if g.has_edge(quad[x], quad[y]) {
                                edges += 1;
                            }
                        }
                    }
                    if edges == 5 {
                        return Some(DiamondWitness(quad));
                    }
                }
            }
        }
    }
    None
}

/// Degree form of the block test for split graphs: true iff at most one live
/// independent vertex has degree >= 2 and every such vertex is adjacent to
/// the whole live clique side.
pub fn is_block_split(g: &Graph, p: &SplitPartition) -> bool {
    let c = p.live_clique(g);
    let mut high = 0;
    for v in p.live_independent(g).iter() {
        let nv = g.neighbors(v);
        if nv.len() >= 2 {
            high += 1;
            if high > 1 || !c.is_subset(&nv) {
                return false;
            }
        }
    }
    true
}

/// True iff the live graph has no induced P4.
pub fn is_threshold_split(g: &Graph, p: &SplitPartition) -> bool {
    find_induced_p4(g, p).is_none()
}

/// Live independent vertices of minimum degree.
pub fn min_degree_set(g: &Graph, p: &SplitPartition) -> Result<VertexSet, Error> {
    let ind = p.live_independent(g);
    let min = ind
        .iter()
        .map(|v| g.degree(v))
        .min()
        .ok_or(Error::EmptyIndependentSide)?;
    Ok(VertexSet::from_iter(
        g.order(),
        ind.iter().filter(|&v| g.degree(v) == min),
    ))
}

/// All live independent vertices with the same live neighborhood as `v`
/// (including `v` itself). `v` must be a live independent vertex.
pub fn twin_class(g: &Graph, p: &SplitPartition, v: Vertex) -> VertexSet {
    assert!(g.is_live(v) && p.in_independent(v), "twin_class needs a live independent vertex");
    let nv = g.neighbors(v);
    VertexSet::from_iter(
        g.order(),
        p.live_independent(g).iter().filter(|&u| g.neighbors(u) == nv),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])
    }

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    }

    /// Clique {0,1,2,3}, independent {4,5}, N(4)={0,1}, N(5)={2,3}.
    fn double_fan() -> (Graph, SplitPartition) {
        let g = Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4), (2, 5), (3, 5)],
        );
        let p = split_partition(&g).unwrap();
        (g, p)
    }

    #[test]
    fn split_partition_triangle() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        let p = split_partition(&g).unwrap();
        assert_eq!(p.clique().to_vec(), vec![0, 1, 2]);
        assert!(p.independent().is_empty());
    }

    #[test]
    fn split_partition_path() {
        let p = split_partition(&path4()).unwrap();
        assert_eq!(p.clique().to_vec(), vec![1, 2]);
        assert_eq!(p.independent().to_vec(), vec![0, 3]);
    }

    #[test]
    fn split_partition_rejects_c5() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        assert!(matches!(split_partition(&g), Err(Error::NotSplit)));
    }

    #[test]
    fn split_partition_respects_deletion() {
        let mut g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        g.delete(4);
        // C5 minus a vertex is a path, which is split
        let p = split_partition(&g).unwrap();
        assert!(p.validate(&g));
        assert_eq!(p.clique().to_vec(), vec![1, 2]);
    }

    #[test]
    fn p4_witness_on_path() {
        let g = path4();
        let p = split_partition(&g).unwrap();
        assert_eq!(
            find_induced_p4(&g, &p),
            Some(P4Witness { u: 0, a: 1, b: 2, v: 3 })
        );
        assert!(!is_threshold_split(&g, &p));
    }

    #[test]
    fn p4_absent_on_star() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let p = split_partition(&g).unwrap();
        assert_eq!(find_induced_p4(&g, &p), None);
        assert!(is_threshold_split(&g, &p));
        // threshold graph: no vertex lies on a P4
        assert_eq!(p4_free_vertices(&g, &p), g.live_vertices().clone());
    }

    #[test]
    fn p4_witness_on_double_fan() {
        let (g, p) = double_fan();
        assert_eq!(
            find_induced_p4(&g, &p),
            Some(P4Witness { u: 4, a: 0, b: 2, v: 5 })
        );
        assert!(p4_free_vertices(&g, &p).is_empty());
    }

    #[test]
    fn p4_free_vertices_on_path() {
        let g = path4();
        let p = split_partition(&g).unwrap();
        assert!(p4_free_vertices(&g, &p).is_empty());
    }

    #[test]
    fn diamond_witness() {
        assert_eq!(find_induced_diamond(&diamond()), Some(DiamondWitness([0, 1, 2, 3])));
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(find_induced_diamond(&k4), None);
        assert_eq!(find_induced_diamond(&path4()), None);
    }

    #[test]
    fn block_test_on_diamond_partitions() {
        let g = diamond();
        // manual partition C={0,1}, I={2,3}: both independent vertices have
        // degree 2, so the graph is not block
        let p = SplitPartition::new(
            VertexSet::from_iter(4, [0, 1]),
            VertexSet::from_iter(4, [2, 3]),
        );
        assert!(p.validate(&g));
        assert!(!is_block_split(&g, &p));
        // canonical partition gives the same verdict
        let pc = split_partition(&g).unwrap();
        assert!(!is_block_split(&g, &pc));
    }

    #[test]
    fn block_test_matches_diamond_scan() {
        // triangle with one pendant: block
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]);
        let p = split_partition(&g).unwrap();
        assert!(is_block_split(&g, &p));
        assert_eq!(find_induced_diamond(&g), None);

        // triangle plus a vertex adjacent to two of its corners: diamond
        let g2 = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]);
        let p2 = split_partition(&g2).unwrap();
        assert!(!is_block_split(&g2, &p2));
        assert!(find_induced_diamond(&g2).is_some());
    }

    #[test]
    fn min_degree_and_twins() {
        let (g, p) = double_fan();
        assert_eq!(min_degree_set(&g, &p).unwrap().to_vec(), vec![4, 5]);
        assert_eq!(twin_class(&g, &p, 4).to_vec(), vec![4]);

        let g2 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let p2 = SplitPartition::new(VertexSet::from_iter(4, [0]), VertexSet::from_iter(4, [1, 2, 3]));
        assert_eq!(twin_class(&g2, &p2, 2).to_vec(), vec![1, 2, 3]);

        let empty_i = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        let pe = split_partition(&empty_i).unwrap();
        assert!(matches!(min_degree_set(&empty_i, &pe), Err(Error::EmptyIndependentSide)));
    }

    #[test]
    fn deleted_vertices_vanish_from_accessors() {
        let mut g = diamond();
        g.delete(0);
        assert_eq!(g.degree(1), 2);
        assert!(!g.neighbors(1).contains(0));
        assert!(!g.has_edge(0, 1));
        assert_eq!(g.live_count(), 3);
        assert_eq!(g.neighbors(0).len(), 0);
    }
}
