//! Biconnected blocks, cut vertices, and cactus recognition.

use std::collections::BTreeSet;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("not a cactus: block on vertices {vertices:?} has {edges} edges")]
    NotCactus { vertices: Vec<usize>, edges: usize },
    #[error("infeasible cactus parameters n = {n}, t = {t} (need n >= 1 and 2t <= n - 1)")]
    InfeasibleParams { n: usize, t: usize },
}

/// Biconnected components as edge sets, plus the cut vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub cut_vertices: BTreeSet<usize>,
    /// Each block as its sorted edge list; blocks ordered by their sorted
    /// vertex sets so the decomposition is deterministic.
    pub blocks: Vec<Vec<(usize, usize)>>,
}

impl BlockDecomposition {
    pub fn block_vertices(&self, block: usize) -> Vec<usize> {
        let mut vs = BTreeSet::new();
        for &(u, v) in &self.blocks[block] {
            vs.insert(u);
            vs.insert(v);
        }
        vs.into_iter().collect()
    }
}

/// Parameters of the cactus classes `Cact(n; t)`: `n` vertices, `t` cycles,
/// hence `n - 1 + t` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CactusParams {
    pub n: usize,
    pub t: usize,
}

impl CactusParams {
    pub fn new(n: usize, t: usize) -> Result<Self, StructureError> {
        if n == 0 || 2 * t > n.saturating_sub(1) {
            return Err(StructureError::InfeasibleParams { n, t });
        }
        Ok(Self { n, t })
    }

    pub fn edge_count(&self) -> usize {
        self.n - 1 + self.t
    }
}

/// Hopcroft-Tarjan biconnected components over an explicit stack.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut cut_vertices = BTreeSet::new();

    // Iterative DFS: (vertex, parent, neighbor iterator state).
    struct Frame {
        v: usize,
        parent: Option<usize>,
        neighbors: Vec<usize>,
        next: usize,
        children: usize,
    }

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack = vec![Frame {
            v: root,
            parent: None,
            neighbors: g.neighbors(root).collect(),
            next: 0,
            children: 0,
        }];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;

        while let Some(frame) = stack.last_mut() {
            let v = frame.v;
            if frame.next < frame.neighbors.len() {
                let w = frame.neighbors[frame.next];
                frame.next += 1;
                if disc[w] == usize::MAX {
                    frame.children += 1;
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    let neighbors = g.neighbors(w).collect();
                    stack.push(Frame {
                        v: w,
                        parent: Some(v),
                        neighbors,
                        next: 0,
                        children: 0,
                    });
                } else if Some(w) != frame.parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                let finished = stack.pop().expect("frame exists");
                if let Some(p) = finished.parent {
                    let v = finished.v;
                    let parent_idx = stack.len() - 1;
                    let pframe = &mut stack[parent_idx];
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        // p closes a block; pop its edges.
                        let mut block = Vec::new();
                        while let Some(&(a, b)) = edge_stack.last() {
                            if disc[a] >= disc[v] || (a, b) == (p, v) {
                                block.push((a.min(b), a.max(b)));
                                edge_stack.pop();
                                if (a, b) == (p, v) {
                                    break;
                                }
                            } else {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                        let is_root = pframe.parent.is_none();
                        if !is_root || pframe.children > 1 {
                            cut_vertices.insert(p);
                        }
                    }
                }
            }
        }
    }

    blocks.sort_by_key(|b| b.first().copied());
    Ok(BlockDecomposition {
        cut_vertices,
        blocks,
    })
}

/// Verifies the cactus property (every block a single edge or a chordless
/// cycle) and returns the number of cycle blocks.
///
/// Within a biconnected block, "edge count equals vertex count" is exactly
/// the cycle condition, so no explicit chord test is needed.
pub fn cactus_check(g: &Graph) -> Result<usize, StructureError> {
    let decomposition = block_decomposition(g)?;
    let mut cycles = 0usize;
    for (idx, block) in decomposition.blocks.iter().enumerate() {
        if block.len() == 1 {
            continue;
        }
        let vertices = decomposition.block_vertices(idx);
        if block.len() == vertices.len() {
            cycles += 1;
        } else {
            return Err(StructureError::NotCactus {
                vertices,
                edges: block.len(),
            });
        }
    }
    debug_assert_eq!(g.edge_count(), g.vertex_count() - 1 + cycles);
    Ok(cycles)
}
