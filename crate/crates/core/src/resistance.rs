//! Exact effective resistances via Laplacian determinants and one grounded
//! inverse, plus a floating-point spectral cross-check.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::Graph;
use crate::matrix::RationalMatrix;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResistanceError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// L = Degree − Adjacency, as exact rationals with integer entries.
pub fn laplacian(g: &Graph) -> RationalMatrix {
    let n = g.vertex_count();
    RationalMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Rational::from_integer(g.degree(i) as i64)
        } else if g.has_edge(i, j) {
            Rational::from_integer(-1)
        } else {
            Rational::zero()
        }
    })
}

/// Matrix-tree count: determinant of the Laplacian minor at vertex 0.
/// Zero means disconnected, reported as an error.
pub fn spanning_tree_count(g: &Graph) -> Result<Rational, ResistanceError> {
    let l = laplacian(g);
    let minor = l.minor(&[0], &[0]);
    let det = minor.determinant().expect("Laplacian minor is square");
    if det.is_zero() && g.vertex_count() > 0 {
        return Err(ResistanceError::Disconnected);
    }
    Ok(det)
}

/// R(u,v) as the determinant ratio det(L∖{u,v}) / det(L∖{v}).
pub fn effective_resistance(g: &Graph, u: usize, v: usize) -> Result<Rational, ResistanceError> {
    let n = g.vertex_count();
    for w in [u, v] {
        if w >= n {
            return Err(ResistanceError::VertexOutOfRange { vertex: w, n });
        }
    }
    if !g.is_connected() {
        return Err(ResistanceError::Disconnected);
    }
    if u == v {
        return Ok(Rational::zero());
    }
    let l = laplacian(g);
    let trees = l.minor(&[v], &[v]).determinant().expect("square minor");
    let forests = l
        .minor(&[u, v], &[u, v])
        .determinant()
        .expect("square minor");
    Ok(forests
        .checked_div(&trees)
        .expect("connected graph has a nonzero spanning-tree count"))
}

/// All-pairs exact resistances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResistanceMatrix {
    n: usize,
    // Row-major n×n; symmetric with zero diagonal.
    values: Vec<Rational>,
}

impl ResistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> &Rational {
        &self.values[u * self.n + v]
    }

    /// Σ_{u<v} R(u,v).
    pub fn kirchhoff_index(&self) -> Rational {
        let mut total = Rational::zero();
        for u in 0..self.n {
            for v in u + 1..self.n {
                total = total + self.get(u, v);
            }
        }
        total
    }

    /// Row sum Σ_u R(u,v).
    pub fn row_sum(&self, v: usize) -> Rational {
        (0..self.n).map(|u| self.get(u, v).clone()).sum()
    }
}

// The JSON form is a flat row-major array of "p/q" strings.
impl Serialize for ResistanceMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ResistanceMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let values = Vec::<Rational>::deserialize(deserializer)?;
        let n = (values.len() as f64).sqrt().round() as usize;
        if n * n != values.len() {
            return Err(D::Error::custom(format!(
                "resistance matrix needs a square number of entries, got {}",
                values.len()
            )));
        }
        Ok(ResistanceMatrix { n, values })
    }
}

/// Computes all pairs from one exact inversion of the grounded Laplacian
/// (ground = vertex 0), via R(u,v) = M[u,u] + M[v,v] − 2M[u,v] with M
/// extended by zeros at the ground row/column.
pub fn resistance_matrix(g: &Graph) -> Result<ResistanceMatrix, ResistanceError> {
    if !g.is_connected() {
        return Err(ResistanceError::Disconnected);
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(ResistanceMatrix {
            n,
            values: Vec::new(),
        });
    }
    let grounded = laplacian(g).minor(&[0], &[0]);
    let inverse = grounded
        .inverse()
        .expect("grounded Laplacian of a connected graph is invertible");
    // m(u,v) with 1-shifted indices and zero at the ground.
    let m = |u: usize, v: usize| -> Rational {
        if u == 0 || v == 0 {
            Rational::zero()
        } else {
            inverse[(u - 1, v - 1)].clone()
        }
    };
    let mut values = vec![Rational::zero(); n * n];
    for u in 0..n {
        for v in u + 1..n {
            let r = m(u, u) + m(v, v) - Rational::from_integer(2) * m(u, v);
            values[u * n + v] = r.clone();
            values[v * n + u] = r;
        }
    }
    Ok(ResistanceMatrix { n, values })
}

/// Floating-point Kf estimate n·Σ 1/μ_i over the n−1 largest Laplacian
/// eigenvalues. Approximate by design; the exact path is authoritative.
pub fn kirchhoff_spectral_estimate(g: &Graph) -> f64 {
    let n = g.vertex_count();
    assert!(n >= 2, "spectral estimate needs at least two vertices");
    assert!(
        g.is_connected(),
        "spectral estimate needs a connected graph"
    );
    let m = nalgebra::DMatrix::<f64>::from_fn(n, n, |i, j| {
        if i == j {
            g.degree(i) as f64
        } else if g.has_edge(i, j) {
            -1.0
        } else {
            0.0
        }
    });
    let mut eigen: Vec<f64> = nalgebra::SymmetricEigen::new(m)
        .eigenvalues
        .iter()
        .copied()
        .collect();
    eigen.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    // Drop the structurally-zero eigenvalue (the smallest).
    eigen.pop();
    (n as f64) * eigen.iter().map(|mu| 1.0 / mu).sum::<f64>()
}
