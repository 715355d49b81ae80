//! Seeded random split-graph generator.
//!
//! Vertices 0..nc form the clique side, nc..nc+ni the independent side. All
//! clique edges are present; each independent-clique pair gets one PRNG draw
//! in row-major order (independent vertex ascending, clique vertex ascending)
//! and the edge is present iff draw / 2^64 < p. The PRNG is splitmix64, so
//! output is reproducible across runs and platforms.

use splitdel_core::{Graph, SplitPartition, VertexSet};

/// The standard splitmix64 generator.
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

    /// Uniform in [0, 1): the raw draw divided by 2^64.
    pub fn next_f64(&mut self) -> f64 {
        self.next_u64() as f64 / 18446744073709551616.0
    }
}

#[derive(Clone, Copy, Debug)]
pub struct GeneratorConfig {
    pub clique_size: usize,
    pub independent_size: usize,
    /// Probability of each independent-clique edge, in [0, 1].
    pub edge_probability: f64,
    pub seed: u64,
}

/// Generate the split graph for a config, together with the partition it was
/// built from.
pub fn gen_split(cfg: &GeneratorConfig) -> (Graph, SplitPartition) {
    assert!(
        (0.0..=1.0).contains(&cfg.edge_probability),
        "edge probability must be in [0, 1]"
    );
    let nc = cfg.clique_size;
    let n = nc + cfg.independent_size;
    let mut g = Graph::new(n);
    for u in 0..nc {
        for v in u + 1..nc {
            g.add_edge(u, v);
        }
    }
    let mut rng = SplitMix64::new(cfg.seed);
    for i in nc..n {
        for c in 0..nc {
            if rng.next_f64() < cfg.edge_probability {
                g.add_edge(c, i);
            }
        }
    }
    let p = SplitPartition::new(
        VertexSet::from_iter(n, 0..nc),
        VertexSet::from_iter(n, nc..n),
    );
    debug_assert!(p.validate(&g));
    (g, p)
}
