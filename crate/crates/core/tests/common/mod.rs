//! Shared helpers for the integration tests: a small deterministic PRNG and
//! split-graph corpus builders.
#![allow(dead_code)]

use splitdel_core::{Graph, SplitPartition, VertexSet};

/// Standard splitmix64; good enough to drive reproducible corpora.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in [0, bound).
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        self.next_u64() % bound
    }

    pub fn chance(&mut self, p: f64) -> bool {
        (self.next_u64() as f64 / 18446744073709551616.0) < p
    }
}

/// Split graph from an adjacency pattern: vertices 0..nc are a clique,
/// nc..nc+ni independent, and bit i*nc+c of `bits` adds edge (c, nc+i).
pub fn pattern_graph(nc: usize, ni: usize, bits: u64) -> (Graph, SplitPartition) {
    assert!(nc * ni <= 60);
    let n = nc + ni;
    let mut g = Graph::new(n);
    for u in 0..nc {
        for v in u + 1..nc {
            g.add_edge(u, v);
        }
    }
    for i in 0..ni {
        for c in 0..nc {
            if bits >> (i * nc + c) & 1 == 1 {
                g.add_edge(c, nc + i);
            }
        }
    }
    let p = SplitPartition::new(
        VertexSet::from_iter(n, 0..nc),
        VertexSet::from_iter(n, nc..n),
    );
    (g, p)
}

/// Every split graph with clique side exactly nc and independent side
/// exactly ni, one per adjacency pattern.
pub fn split_graphs_with(nc: usize, ni: usize) -> Vec<(Graph, SplitPartition)> {
    (0..1u64 << (nc * ni))
        .map(|bits| pattern_graph(nc, ni, bits))
        .collect()
}

/// All patterns for every (|C|, |I|) with |C| <= cmax and |I| <= imax.
pub fn small_split_corpus(cmax: usize, imax: usize) -> Vec<(Graph, SplitPartition)> {
    let mut out = Vec::new();
    for nc in 0..=cmax {
        for ni in 0..=imax {
            out.extend(split_graphs_with(nc, ni));
        }
    }
    out
}

/// Seeded random split graph: each independent-clique edge present with
/// probability p.
pub fn random_split_graph(nc: usize, ni: usize, p: f64, seed: u64) -> (Graph, SplitPartition) {
    let n = nc + ni;
    let mut g = Graph::new(n);
    for u in 0..nc {
        for v in u + 1..nc {
            g.add_edge(u, v);
        }
    }
    let mut rng = SplitMix64::new(seed);
    for i in nc..n {
        for c in 0..nc {
            if rng.chance(p) {
                g.add_edge(c, i);
            }
        }
    }
    let part = SplitPartition::new(
        VertexSet::from_iter(n, 0..nc),
        VertexSet::from_iter(n, nc..n),
    );
    (g, part)
}

/// Seeded random graph (not necessarily split), each edge with probability p.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut rng = SplitMix64::new(seed);
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}
