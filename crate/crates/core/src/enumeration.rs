//! Exhaustive generation of all non-isomorphic connected cacti with given
//! (n, t), validated against an independent edge-subset brute force.

use std::collections::{BTreeMap, BTreeSet};

use crate::blocks::{cactus_check, CactusParams};
use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;

/// Growth generation is exercised up to this size; beyond it the level maps
/// and per-graph canonicalization get slow without buying the harness
/// anything.
pub const MAX_ENUM_VERTICES: usize = 11;

/// Edge-subset brute force over K_n; C(21, m) subsets at n = 7 is the limit
/// of good taste.
pub const MAX_ORACLE_VERTICES: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("enumeration supports at most {max} vertices, got {n}")]
    OutOfRange { n: usize, max: usize },
    #[error("infeasible parameters n = {n}, t = {t}")]
    Infeasible { n: usize, t: usize },
}

/// All of Cact(n, t) up to isomorphism, sorted by certificate. Each member
/// carries its canonical representative labeling.
#[derive(Debug, Clone)]
pub struct CactusCorpus {
    pub params: CactusParams,
    pub members: Vec<(Graph, CanonicalForm)>,
}

impl CactusCorpus {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.members.iter().map(|(g, _)| g)
    }

    pub fn certificates(&self) -> BTreeSet<CanonicalForm> {
        self.members.iter().map(|&(_, c)| c).collect()
    }
}

fn check_params(n: usize, t: usize, max: usize) -> Result<CactusParams, EnumerationError> {
    if n == 0 || n > max {
        return Err(EnumerationError::OutOfRange { n, max });
    }
    CactusParams::new(n, t).map_err(|_| EnumerationError::Infeasible { n, t })
}

/// Grows cacti from a single vertex by attaching one block at a time (a
/// pendant edge or a whole cycle); every cactus arises this way by peeling
/// leaf blocks, so level-wise canonical dedup yields an exhaustive,
/// duplicate-free corpus.
pub fn enumerate_cacti(n: usize, t: usize) -> Result<CactusCorpus, EnumerationError> {
    let params = check_params(n, t, MAX_ENUM_VERTICES)?;

    // levels[k] = canonical certificate → one representative with k vertices.
    let mut levels: Vec<BTreeMap<CanonicalForm, Graph>> = vec![BTreeMap::new(); n + 1];
    let k1 = Graph::new(1);
    levels[1].insert(canonical_form(&k1).expect("small graph"), k1);

    // A partial shape with k vertices and c cycles is worth keeping iff the
    // remaining cycles still fit: c ≤ t and k + 2(t−c) ≤ n.
    let viable = |k: usize, c: usize| c <= t && k + 2 * (t - c) <= n;

    for k in 1..n {
        let parents: Vec<Graph> = levels[k].values().cloned().collect();
        for g in parents {
            let c = g.edge_count() + 1 - k;
            // Attach a pendant edge at each vertex.
            if viable(k + 1, c) {
                for v in 0..k {
                    let mut child = g.grown(1);
                    child.add_edge(v, k).unwrap();
                    let cert = canonical_form(&child).expect("within size bound");
                    levels[k + 1].entry(cert).or_insert(child);
                }
            }
            // Attach a whole cycle of length len at each vertex.
            for len in 3..=(n - k + 1) {
                let grown_to = k + len - 1;
                if !viable(grown_to, c + 1) {
                    continue;
                }
                for v in 0..k {
                    let mut child = g.grown(len - 1);
                    child.add_edge(v, k).unwrap();
                    for i in 0..len - 2 {
                        child.add_edge(k + i, k + i + 1).unwrap();
                    }
                    child.add_edge(k + len - 2, v).unwrap();
                    let cert = canonical_form(&child).expect("within size bound");
                    levels[grown_to].entry(cert).or_insert(child);
                }
            }
        }
    }

    let members: Vec<(Graph, CanonicalForm)> = levels[n]
        .keys()
        .filter(|cert| {
            let g = cert.to_graph();
            g.edge_count() == params.edge_count()
        })
        .map(|&cert| (cert.to_graph(), cert))
        .collect();
    Ok(CactusCorpus { params, members })
}

/// Independent oracle: enumerate every (n−1+t)-edge subset of K_n, keep the
/// connected cacti with exactly t cycles, and bucket by certificate.
pub fn brute_force_cacti_oracle(
    n: usize,
    t: usize,
) -> Result<BTreeSet<CanonicalForm>, EnumerationError> {
    let params = check_params(n, t, MAX_ORACLE_VERTICES)?;
    let all_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = params.edge_count();
    let mut found = BTreeSet::new();
    if m > all_pairs.len() {
        return Ok(found);
    }

    // Walk all index combinations of size m in lexicographic order.
    let mut picks: Vec<usize> = (0..m).collect();
    loop {
        let edges: Vec<(usize, usize)> = picks.iter().map(|&i| all_pairs[i]).collect();
        let g = Graph::from_edges(n, &edges).expect("distinct pairs from K_n");
        if g.is_connected() && cactus_check(&g) == Ok(t) {
            found.insert(canonical_form(&g).expect("within size bound"));
        }
        if m == 0 {
            break;
        }
        // Advance the combination.
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(found);
            }
            i -= 1;
            if picks[i] != i + all_pairs.len() - m {
                break;
            }
        }
        picks[i] += 1;
        for j in i + 1..m {
            picks[j] = picks[j - 1] + 1;
        }
    }
    Ok(found)
}
