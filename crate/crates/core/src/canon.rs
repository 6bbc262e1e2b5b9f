//! Canonical labeling for small graphs: color refinement plus
//! individualization when refinement alone leaves symmetric cells.
//!
//! Certificates are complete isomorphism invariants at this scale, so
//! isomorphism testing and corpus deduplication reduce to byte equality.

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Upper-triangle bits must fit in a u128: 16·15/2 = 120.
pub const MAX_CANON_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CanonError {
    #[error("canonical form supports at most {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
}

/// Vertex count plus the packed upper-triangle adjacency of the canonically
/// relabeled graph. Equal certificates iff isomorphic graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    /// Byte encoding: vertex count, then the adjacency bits little-endian.
    pub fn certificate(&self) -> Vec<u8> {
        let n = self.n as usize;
        let data_bytes = (n * n.saturating_sub(1) / 2).div_ceil(8);
        let mut out = Vec::with_capacity(1 + data_bytes);
        out.push(self.n);
        for byte in 0..data_bytes {
            out.push((self.bits >> (8 * byte)) as u8);
        }
        out
    }

    /// Rebuilds the canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let mut g = Graph::new(n);
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> bit & 1 == 1 {
                    g.add_edge(i, j)
                        .expect("certificate encodes a simple graph");
                }
                bit += 1;
            }
        }
        g
    }
}

/// Dense ranks of the keys in sorted order; equal keys share a rank.
fn rank_keys<K: Ord>(keys: &[K]) -> Vec<usize> {
    let mut ranks: BTreeMap<&K, usize> = keys.iter().map(|k| (k, 0)).collect();
    for (next, slot) in ranks.values_mut().enumerate() {
        *slot = next;
    }
    keys.iter().map(|k| ranks[k]).collect()
}

/// Seed coloring by (degree, sorted BFS distance profile); unreachable
/// vertices contribute the sentinel distance n.
fn initial_colors(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let keys: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut profile: Vec<usize> = g
                .bfs_distances(v)
                .into_iter()
                .map(|d| d.unwrap_or(n))
                .collect();
            profile.sort_unstable();
            (g.degree(v), profile)
        })
        .collect();
    rank_keys(&keys)
}

/// Equitable refinement: re-key by (own color, sorted neighbor colors) until
/// the partition stops changing. Keeping the old color as the leading key
/// component makes each round a refinement, so this terminates.
fn refine(g: &Graph, colors: &mut Vec<usize>) {
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..g.vertex_count())
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).map(|w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let next = rank_keys(&keys);
        if next == *colors {
            return;
        }
        *colors = next;
    }
}

/// Splits `v` out of its cell (ordered after the remainder), then re-refines.
fn individualize(g: &Graph, colors: &mut Vec<usize>, v: usize) {
    let keys: Vec<(usize, bool)> = colors
        .iter()
        .enumerate()
        .map(|(u, &c)| (c, u == v))
        .collect();
    *colors = rank_keys(&keys);
    refine(g, colors);
}

/// Adjacency of the relabeled graph, packed in upper-triangle order
/// (0,1),(0,2),(1,2),(0,3),... under position = colors[v].
fn encode(g: &Graph, colors: &[usize]) -> u128 {
    let n = g.vertex_count();
    let mut vertex_at = vec![0usize; n];
    for (v, &pos) in colors.iter().enumerate() {
        vertex_at[pos] = v;
    }
    let mut bits = 0u128;
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(vertex_at[i], vertex_at[j]) {
                bits |= 1u128 << bit;
            }
            bit += 1;
        }
    }
    bits
}

/// Vertices whose neighborhoods agree outside the pair are swapped by an
/// automorphism, so branching on both would explore identical subtrees.
fn twins(g: &Graph, u: usize, v: usize) -> bool {
    // Neighbor iterators are ascending, so positional comparison suffices.
    g.neighbors(u)
        .filter(|&w| w != v)
        .eq(g.neighbors(v).filter(|&w| w != u))
}

/// Branch on the first non-singleton cell, skipping twin candidates; at
/// discrete leaves keep the smallest encoding seen.
fn search(g: &Graph, colors: &[usize], best: &mut Option<u128>) {
    let n = g.vertex_count();
    let mut cell_size = vec![0usize; n];
    for &c in colors {
        cell_size[c] += 1;
    }
    match (0..n).find(|&c| cell_size[c] >= 2) {
        None => {
            let code = encode(g, colors);
            if best.is_none_or(|b| code < b) {
                *best = Some(code);
            }
        }
        Some(cell) => {
            let mut branched: Vec<usize> = Vec::new();
            for v in 0..n {
                if colors[v] != cell || branched.iter().any(|&u| twins(g, u, v)) {
                    continue;
                }
                branched.push(v);
                let mut child = colors.to_vec();
                individualize(g, &mut child, v);
                search(g, &child, best);
            }
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    let n = g.vertex_count();
    if n > MAX_CANON_VERTICES {
        return Err(CanonError::TooLarge {
            n,
            max: MAX_CANON_VERTICES,
        });
    }
    let mut colors = initial_colors(g);
    refine(g, &mut colors);
    let mut best = None;
    search(g, &colors, &mut best);
    Ok(CanonicalForm {
        n: n as u8,
        bits: best.unwrap_or(0),
    })
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool, CanonError> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        // Cheap rejection, and it keeps oversized-but-unequal pairs answerable.
        if a.vertex_count() <= MAX_CANON_VERTICES && b.vertex_count() <= MAX_CANON_VERTICES {
            return Ok(false);
        }
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
