//! Distance- and resistance-based invariants: W, D, Kf, Kf_v, D_v, D_R,
//! and the cut-vertex decomposition evaluator for D_R.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::rational::Rational;
use crate::resistance::{resistance_matrix, ResistanceError, ResistanceMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {vertex} is not a cut vertex")]
    NotCutVertex { vertex: usize },
    #[error("side partition is inconsistent: {detail}")]
    InconsistentPartition { detail: String },
}

impl From<ResistanceError> for InvariantError {
    fn from(e: ResistanceError) -> Self {
        match e {
            ResistanceError::Disconnected => InvariantError::Disconnected,
            ResistanceError::VertexOutOfRange { vertex, n } => {
                InvariantError::VertexOutOfRange { vertex, n }
            }
        }
    }
}

/// All shortest-path distances, or an error when some pair is unreachable.
fn distance_rows(g: &Graph) -> Result<Vec<Vec<usize>>, InvariantError> {
    (0..g.vertex_count())
        .map(|v| {
            g.bfs_distances(v)
                .into_iter()
                .map(|d| d.ok_or(InvariantError::Disconnected))
                .collect()
        })
        .collect()
}

/// W(G) = Σ_{u<v} d(u,v).
pub fn wiener(g: &Graph) -> Result<Rational, InvariantError> {
    let dist = distance_rows(g)?;
    let mut total: i64 = 0;
    for (u, row) in dist.iter().enumerate() {
        for &d in &row[u + 1..] {
            total += d as i64;
        }
    }
    Ok(Rational::from_integer(total))
}

/// D(G) = Σ_{u<v} (d(u)+d(v))·d(u,v).
pub fn degree_distance(g: &Graph) -> Result<Rational, InvariantError> {
    let dist = distance_rows(g)?;
    let mut total: i64 = 0;
    for (u, row) in dist.iter().enumerate() {
        for (v, &d) in row.iter().enumerate().skip(u + 1) {
            total += ((g.degree(u) + g.degree(v)) * d) as i64;
        }
    }
    Ok(Rational::from_integer(total))
}

pub fn kirchhoff_index(g: &Graph) -> Result<Rational, InvariantError> {
    Ok(resistance_matrix(g)?.kirchhoff_index())
}

/// Kf_v(G) = Σ_u R(u,v).
pub fn kf_v(g: &Graph, v: usize) -> Result<Rational, InvariantError> {
    let n = g.vertex_count();
    if v >= n {
        return Err(InvariantError::VertexOutOfRange { vertex: v, n });
    }
    Ok(resistance_matrix(g)?.row_sum(v))
}

/// D_v(G) = Σ_u d(u)·R(u,v).
pub fn d_v(g: &Graph, v: usize) -> Result<Rational, InvariantError> {
    let n = g.vertex_count();
    if v >= n {
        return Err(InvariantError::VertexOutOfRange { vertex: v, n });
    }
    let rm = resistance_matrix(g)?;
    Ok(degree_weighted_row_sum(g, &rm, v))
}

fn degree_weighted_row_sum(g: &Graph, rm: &ResistanceMatrix, v: usize) -> Rational {
    let mut total = Rational::zero();
    for u in 0..g.vertex_count() {
        total = total + Rational::from_integer(g.degree(u) as i64) * rm.get(u, v);
    }
    total
}

/// D_R(G) = Σ_{u<v} (d(u)+d(v))·R(u,v).
pub fn degree_resistance_distance(g: &Graph) -> Result<Rational, InvariantError> {
    let rm = resistance_matrix(g)?;
    Ok(degree_resistance_from_matrix(g, &rm))
}

fn degree_resistance_from_matrix(g: &Graph, rm: &ResistanceMatrix) -> Rational {
    let mut total = Rational::zero();
    for u in 0..g.vertex_count() {
        for v in u + 1..g.vertex_count() {
            total =
                total + Rational::from_integer((g.degree(u) + g.degree(v)) as i64) * rm.get(u, v);
        }
    }
    total
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerVertexReport {
    pub vertex: usize,
    pub kf_v: Rational,
    pub d_v: Rational,
}

/// Everything in one pass over a single exact resistance matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub wiener: Rational,
    pub degree_distance: Rational,
    pub kirchhoff: Rational,
    pub degree_resistance: Rational,
    pub per_vertex: Vec<PerVertexReport>,
}

pub fn invariant_report(g: &Graph) -> Result<InvariantReport, InvariantError> {
    let rm = resistance_matrix(g)?;
    let per_vertex = (0..g.vertex_count())
        .map(|v| PerVertexReport {
            vertex: v,
            kf_v: rm.row_sum(v),
            d_v: degree_weighted_row_sum(g, &rm, v),
        })
        .collect();
    Ok(InvariantReport {
        wiener: wiener(g)?,
        degree_distance: degree_distance(g)?,
        kirchhoff: rm.kirchhoff_index(),
        degree_resistance: degree_resistance_from_matrix(g, &rm),
        per_vertex,
    })
}

/// Evaluates the cut-vertex decomposition
/// D_R(G) = D_R(G₁) + D_R(G₂) + 2m₂·Kf_v(G₁) + 2m₁·Kf_v(G₂)
///          + (n₂−1)·D_v(G₁) + (n₁−1)·D_v(G₂)
/// where G₁ is induced on `side ∪ {v}` and G₂ on the rest plus v.
///
/// `side` may be empty (then G₂ = G and the identity is trivial); when both
/// sides are populated, v must actually separate them.
pub fn dr_via_cut_decomposition(
    g: &Graph,
    v: usize,
    side: &[usize],
) -> Result<Rational, InvariantError> {
    let n = g.vertex_count();
    if v >= n {
        return Err(InvariantError::VertexOutOfRange { vertex: v, n });
    }
    if !g.is_connected() {
        return Err(InvariantError::Disconnected);
    }
    let side_a: BTreeSet<usize> = side.iter().copied().collect();
    for &u in &side_a {
        if u >= n {
            return Err(InvariantError::VertexOutOfRange { vertex: u, n });
        }
        if u == v {
            return Err(InvariantError::InconsistentPartition {
                detail: format!("cut vertex {v} listed inside a side"),
            });
        }
    }
    let side_b: BTreeSet<usize> = (0..n).filter(|u| *u != v && !side_a.contains(u)).collect();

    if !side_a.is_empty() && !side_b.is_empty() {
        if !separates(g, v) {
            return Err(InvariantError::NotCutVertex { vertex: v });
        }
        for (a, b) in g.edges() {
            if a == v || b == v {
                continue;
            }
            if side_a.contains(&a) != side_a.contains(&b) {
                return Err(InvariantError::InconsistentPartition {
                    detail: format!("edge ({a}, {b}) crosses the split at {v}"),
                });
            }
        }
    }

    let half = |vertices: &BTreeSet<usize>| -> Result<(Rational, Rational, Rational, i64, i64), InvariantError> {
        let mut keep: Vec<usize> = vertices.iter().copied().collect();
        keep.push(v);
        keep.sort_unstable();
        let (sub, original) = g.induced(&keep);
        let v_local = original.binary_search(&v).expect("v kept by construction");
        let rm = resistance_matrix(&sub)?;
        Ok((
            degree_resistance_from_matrix(&sub, &rm),
            rm.row_sum(v_local),
            degree_weighted_row_sum(&sub, &rm, v_local),
            sub.vertex_count() as i64,
            sub.edge_count() as i64,
        ))
    };

    let (dr1, kf1, dv1, n1, m1) = half(&side_a)?;
    let (dr2, kf2, dv2, n2, m2) = half(&side_b)?;
    Ok(dr1
        + dr2
        + Rational::from_integer(2 * m2) * kf1
        + Rational::from_integer(2 * m1) * kf2
        + Rational::from_integer(n2 - 1) * dv1
        + Rational::from_integer(n1 - 1) * dv2)
}

/// True iff removing v disconnects the rest.
fn separates(g: &Graph, v: usize) -> bool {
    let n = g.vertex_count();
    let others: Vec<usize> = (0..n).filter(|&u| u != v).collect();
    if others.len() <= 1 {
        return false;
    }
    let (rest, _) = g.induced(&others);
    !rest.is_connected()
}
