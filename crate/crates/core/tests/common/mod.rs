//! Small builders shared by the integration tests.
#![allow(dead_code)] // not every test file uses every helper

use drd_core::Graph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges).unwrap()
}

pub fn star(n: usize) -> Graph {
    Graph::from_edges(n, &(1..n).map(|i| (0, i)).collect::<Vec<_>>()).unwrap()
}

/// Random connected cactus on exactly `n` vertices, grown block by block.
pub fn random_cactus(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(1);
    let mut k = 1;
    while k < n {
        let attach = rng.random_range(0..k);
        let room = n - k;
        // Cycles need at least two fresh vertices.
        if room >= 2 && rng.random_range(0..10) < 4 {
            let len = 3 + rng.random_range(0..=(room - 2).min(3));
            g = g.grown(len - 1);
            g.add_edge(attach, k).unwrap();
            for i in 0..len - 2 {
                g.add_edge(k + i, k + i + 1).unwrap();
            }
            g.add_edge(k + len - 2, attach).unwrap();
            k += len - 1;
        } else {
            g = g.grown(1);
            g.add_edge(attach, k).unwrap();
            k += 1;
        }
    }
    g
}
