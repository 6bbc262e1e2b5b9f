//! Effective-resistance cross-validation: determinant ratios, the grounded
//! inverse, and a spanning-forest counting oracle must all agree exactly,
//! and the floating-point spectral route must agree to tight tolerance.

mod common;

use common::{cycle, path, random_cactus, star};
use drd_core::resistance::kirchhoff_spectral_estimate;
use drd_core::{
    cactus_check, effective_resistance, enumerate_cacti, resistance_matrix, spanning_tree_count,
    Graph, Rational,
};

struct DisjointSet(Vec<usize>);

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    /// Returns false when x and y were already connected.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        self.0[rx] = ry;
        rx != ry
    }
}

/// Counts size-k edge subsets that are forests, split by whether u and v end
/// up in the same component. k = n−1 counts spanning trees; k = n−2 counts
/// spanning 2-forests, and the separating ones give R(u, v)·τ.
fn count_forests(g: &Graph, k: usize, u: usize, v: usize) -> (u64, u64) {
    let edges = g.edges();
    let n = g.vertex_count();
    let mut joined = 0u64;
    let mut separated = 0u64;
    if k > edges.len() {
        return (0, 0);
    }
    let mut picks: Vec<usize> = (0..k).collect();
    loop {
        let mut ds = DisjointSet::new(n);
        let mut acyclic = true;
        for &i in &picks {
            let (a, b) = edges[i];
            if !ds.union(a, b) {
                acyclic = false;
                break;
            }
        }
        if acyclic {
            // A forest with k edges on n vertices has n−k components.
            if ds.find(u) == ds.find(v) {
                joined += 1;
            } else {
                separated += 1;
            }
        }
        let mut i = k;
        loop {
            if i == 0 {
                return (joined, separated);
            }
            i -= 1;
            if picks[i] != i + edges.len() - k {
                break;
            }
        }
        picks[i] += 1;
        for j in i + 1..k {
            picks[j] = picks[j - 1] + 1;
        }
    }
}

fn assert_routes_agree(g: &Graph) {
    let n = g.vertex_count();
    let tau = spanning_tree_count(g).unwrap();
    let (trees, _) = count_forests(g, n - 1, 0, 0);
    assert_eq!(tau, Rational::from_integer(trees as i64), "tree count");

    let rm = resistance_matrix(g).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            let det_route = effective_resistance(g, u, v).unwrap();
            assert_eq!(
                *rm.get(u, v),
                det_route,
                "grounded inverse vs det ratio at ({u},{v})"
            );
            let (_, separating) = count_forests(g, n - 2, u, v);
            let forest_route = Rational::from_integer(separating as i64)
                .checked_div(&tau)
                .unwrap();
            assert_eq!(det_route, forest_route, "2-forest oracle at ({u},{v})");
        }
    }
}

#[test]
fn all_three_routes_agree_on_small_named_graphs() {
    for g in [path(2), path(5), cycle(3), cycle(6), star(5)] {
        assert_routes_agree(&g);
    }
    // Two triangles sharing a vertex.
    let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
    assert_routes_agree(&bowtie);
}

#[test]
fn all_three_routes_agree_on_every_cactus_up_to_six_vertices() {
    for n in 2..=6 {
        for t in 0..=(n - 1) / 2 {
            for g in enumerate_cacti(n, t).unwrap().graphs() {
                assert_routes_agree(g);
            }
        }
    }
}

#[test]
fn routes_agree_on_seeded_random_cacti() {
    for seed in 0..50 {
        let n = 4 + (seed as usize * 7) % 5; // 4..=8
        let g = random_cactus(n, seed);
        assert_routes_agree(&g);
    }
}

fn assert_tree_count_is_cycle_product(g: &Graph) {
    let mut product = 1i64;
    for block in drd_core::block_decomposition(g).unwrap().blocks {
        if block.len() > 1 {
            product *= block.len() as i64;
        }
    }
    assert_eq!(
        spanning_tree_count(g).unwrap(),
        Rational::from_integer(product)
    );
}

#[test]
fn cactus_spanning_tree_count_is_the_product_of_cycle_lengths() {
    for n in 2..=8 {
        for t in 0..=(n - 1) / 2 {
            for g in enumerate_cacti(n, t).unwrap().graphs() {
                assert_tree_count_is_cycle_product(g);
            }
        }
    }
    for seed in 0..30 {
        let g = random_cactus(9, 1000 + seed);
        cactus_check(&g).unwrap();
        assert_tree_count_is_cycle_product(&g);
    }
}

#[test]
fn spectral_estimate_tracks_the_exact_kirchhoff_index() {
    let mut graphs = vec![path(12), cycle(11), star(10)];
    for seed in 0..10 {
        graphs.push(random_cactus(12, 2000 + seed));
    }
    for g in graphs {
        let exact = resistance_matrix(&g).unwrap().kirchhoff_index().to_f64();
        let estimate = kirchhoff_spectral_estimate(&g);
        assert!(
            (exact - estimate).abs() < 1e-6,
            "spectral {estimate} vs exact {exact}"
        );
    }
}

#[test]
#[allow(clippy::needless_range_loop)] // u/v/w triple loop reads best indexed
fn resistance_matrix_metric_properties_across_the_corpus() {
    for n in 2..=9 {
        for t in 0..=(n - 1) / 2 {
            for g in enumerate_cacti(n, t).unwrap().graphs() {
                let rm = resistance_matrix(g).unwrap();
                let hops = (0..n).map(|v| g.bfs_distances(v)).collect::<Vec<_>>();
                let mut tight_everywhere = true;
                for u in 0..n {
                    assert!(rm.get(u, u).is_zero());
                    for v in 0..n {
                        assert_eq!(rm.get(u, v), rm.get(v, u));
                        if u != v {
                            assert!(!rm.get(u, v).is_negative() && !rm.get(u, v).is_zero());
                            // Resistance never exceeds shortest-path length.
                            let d = Rational::from_integer(hops[u][v].unwrap() as i64);
                            assert!(*rm.get(u, v) <= d);
                            if *rm.get(u, v) != d {
                                tight_everywhere = false;
                            }
                        }
                        for w in 0..n {
                            let lhs = rm.get(u, w).clone();
                            let rhs = rm.get(u, v) + rm.get(v, w);
                            assert!(lhs <= rhs, "triangle inequality");
                        }
                    }
                }
                // Resistance coincides with hop distance everywhere exactly
                // on the cycle-free cacti.
                assert_eq!(tight_everywhere, t == 0);
            }
        }
    }
}
