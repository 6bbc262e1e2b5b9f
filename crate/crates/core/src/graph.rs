//! Simple undirected labeled graphs on `0..n`.
//!
//! Graphs are immutable once built (construction goes through `add_edge`,
//! everything downstream takes `&Graph`). No self-loops, no multi-edges;
//! adjacency is stored symmetrically as sorted sets.

use std::collections::{BTreeSet, VecDeque};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EdgeListError {
    #[error("line {line}: cannot parse `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: negative vertex index")]
    NegativeIndex { line: usize },
    #[error("line {line}: self-loop")]
    SelfLoop { line: usize },
    #[error("line {line}: duplicate edge")]
    DuplicateEdge { line: usize },
    #[error("line {line}: vertex {vertex} exceeds declared count {n}")]
    IndexBeyondCount {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("empty edge list input")]
    Empty,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(&v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Hop distances from `src`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let n = self.vertex_count();
        let mut dist = vec![None; n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have distances");
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.vertex_count();
        assert_eq!(perm.len(), n);
        let mut g = Graph::new(n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])
                .expect("permutation preserves simplicity");
        }
        g
    }

    /// Induced subgraph on `keep` (sorted ascending); returns the subgraph
    /// and the map from new indices back to original vertices.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = {
            let mut k = keep.to_vec();
            k.sort_unstable();
            k.dedup();
            k
        };
        let index_of = |v: usize| keep.binary_search(&v).ok();
        let mut g = Graph::new(keep.len());
        for (new_u, &u) in keep.iter().enumerate() {
            for &v in &self.adj[u] {
                if v > u {
                    if let Some(new_v) = index_of(v) {
                        g.add_edge(new_u, new_v).expect("induced edges are simple");
                    }
                }
            }
        }
        (g, keep)
    }

    /// Extends the graph with `extra` fresh isolated vertices.
    pub fn grown(&self, extra: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj.extend(std::iter::repeat_with(BTreeSet::new).take(extra));
        Graph { adj }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.vertex_count(),
            self.edges()
        )
    }
}

/// Parses the `u v` one-edge-per-line text format. An optional first line
/// `n <count>` declares the vertex count; otherwise it is one past the
/// largest index seen.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
    let mut max_vertex = None::<usize>;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        let first = parts.next().expect("non-empty line has a token");
        if first == "n" && edges.is_empty() && declared.is_none() {
            let count = parts
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| EdgeListError::Malformed {
                    line,
                    text: trimmed.to_owned(),
                })?;
            if parts.next().is_some() {
                return Err(EdgeListError::Malformed {
                    line,
                    text: trimmed.to_owned(),
                });
            }
            declared = Some(count);
            continue;
        }
        let second = parts.next().ok_or_else(|| EdgeListError::Malformed {
            line,
            text: trimmed.to_owned(),
        })?;
        if parts.next().is_some() {
            return Err(EdgeListError::Malformed {
                line,
                text: trimmed.to_owned(),
            });
        }
        let parse_vertex = |tok: &str| -> Result<usize, EdgeListError> {
            let v: i64 = tok.parse().map_err(|_| EdgeListError::Malformed {
                line,
                text: trimmed.to_owned(),
            })?;
            if v < 0 {
                return Err(EdgeListError::NegativeIndex { line });
            }
            Ok(v as usize)
        };
        let u = parse_vertex(first)?;
        let v = parse_vertex(second)?;
        if u == v {
            return Err(EdgeListError::SelfLoop { line });
        }
        max_vertex = Some(max_vertex.map_or(u.max(v), |m| m.max(u.max(v))));
        edges.push((u, v, line));
    }

    let n = match (declared, max_vertex) {
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => return Err(EdgeListError::Empty),
    };

    let mut g = Graph::new(n);
    for (u, v, line) in edges {
        match g.add_edge(u, v) {
            Ok(()) => {}
            Err(GraphError::DuplicateEdge(..)) => {
                return Err(EdgeListError::DuplicateEdge { line })
            }
            Err(GraphError::VertexOutOfRange { vertex, n }) => {
                return Err(EdgeListError::IndexBeyondCount { line, vertex, n })
            }
            Err(GraphError::SelfLoop(..)) => unreachable!("checked above"),
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn adjacency_is_symmetric_and_simple() {
        let g = triangle();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(0, 2) && g.has_edge(2, 0));
        let mut g2 = g.clone();
        assert_eq!(g2.add_edge(0, 0), Err(GraphError::SelfLoop(0)));
        assert_eq!(g2.add_edge(1, 0), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(
            g2.add_edge(0, 9),
            Err(GraphError::VertexOutOfRange { vertex: 9, n: 3 })
        );
    }

    #[test]
    fn connectivity() {
        assert!(triangle().is_connected());
        assert!(Graph::new(1).is_connected());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
    }

    #[test]
    fn edge_list_round_trips_a_triangle() {
        let g = parse_edge_list("0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(g, triangle());
        let g = parse_edge_list("n 4\n0 1\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
    }

    #[test]
    fn edge_list_error_cases_are_distinct() {
        assert!(matches!(
            parse_edge_list("0 1\n0 1\n"),
            Err(EdgeListError::DuplicateEdge { line: 2 })
        ));
        assert!(matches!(
            parse_edge_list("0 0\n"),
            Err(EdgeListError::SelfLoop { line: 1 })
        ));
        assert!(matches!(
            parse_edge_list("0 -1\n"),
            Err(EdgeListError::NegativeIndex { line: 1 })
        ));
        assert!(matches!(
            parse_edge_list("n 2\n0 5\n"),
            Err(EdgeListError::IndexBeyondCount {
                line: 2,
                vertex: 5,
                n: 2
            })
        ));
        assert!(matches!(
            parse_edge_list("zzz\n"),
            Err(EdgeListError::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn induced_subgraph_keeps_internal_edges() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let (sub, map) = g.induced(&[0, 1, 2]);
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(sub.edges(), vec![(0, 1), (1, 2)]);
    }
}
