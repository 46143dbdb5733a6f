use serde::Serialize;

use crate::exactla::MatZ;

use super::srd::SrdParams;
use super::structure::IncidenceStructure;
use super::IncidenceError;

/// Simple undirected graph held as a symmetric 0-1 adjacency matrix with zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

/// Strongly regular graph parameters `(v, k, λ, μ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SrgParams {
    pub v: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
}

impl SrgParams {
    /// `k(k - λ - 1) = (v - k - 1) μ`
    pub fn is_feasible(&self) -> bool {
        self.k * (self.k - self.lambda - 1) == (self.v - self.k - 1) * self.mu
    }

    /// Parameters of the complementary graph.
    pub fn complement(&self) -> Self {
        let (v, k, l, m) = (self.v, self.k, self.lambda, self.mu);
        SrgParams {
            v,
            k: v - k - 1,
            lambda: v - 2 - 2 * k + m,
            mu: v - 2 * k + l,
        }
    }
}

impl Graph {
    pub fn from_adjacency(n: usize, adj: Vec<bool>) -> Result<Self, IncidenceError> {
        if adj.len() != n * n {
            return Err(IncidenceError::Shape {
                expected: n * n,
                found: adj.len(),
            });
        }
        for i in 0..n {
            if adj[i * n + i] {
                return Err(IncidenceError::NotSimple(format!("loop at vertex {}", i)));
            }
            for j in i + 1..n {
                if adj[i * n + j] != adj[j * n + i] {
                    return Err(IncidenceError::NotSimple(format!("asymmetric pair ({}, {})", i, j)));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Result<Self, IncidenceError> {
        let adj = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self::from_adjacency(n, adj)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    pub fn degree(&self, i: usize) -> usize {
        (0..self.n).filter(|&j| self.adjacent(i, j)).count()
    }

    pub fn common_neighbours(&self, i: usize, j: usize) -> usize {
        (0..self.n).filter(|&w| self.adjacent(i, w) && self.adjacent(j, w)).count()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n;
        Graph {
            n,
            adj: (0..n * n).map(|k| k / n != k % n && !self.adj[k]).collect(),
        }
    }

    pub fn adjacency_matrix(&self) -> MatZ {
        MatZ::from_fn(self.n, self.n, |i, j| i64::from(self.adjacent(i, j)))
    }
}

/// Point graph: distinct points adjacent iff they share exactly `a2` blocks.
pub fn point_graph(d: &IncidenceStructure, params: &SrdParams) -> Graph {
    Graph::from_fn(d.n1(), |x, y| x != y && d.common_blocks(x, y) == params.a2)
        .expect("point graph is simple by construction")
}

/// Block graph: distinct blocks adjacent iff they share exactly `a1` points.
pub fn block_graph(d: &IncidenceStructure, params: &SrdParams) -> Graph {
    Graph::from_fn(d.n2(), |y, z| y != z && d.common_points(y, z) == params.a1)
        .expect("block graph is simple by construction")
}

/// `(v, k, λ, μ)` when every vertex has the same degree, every edge the same
/// number of common neighbours and every non-edge likewise. Complete and
/// edgeless graphs are rejected since one of λ, μ is vacuous for them.
pub fn srg_params_of(g: &Graph) -> Result<SrgParams, IncidenceError> {
    let n = g.vertex_count();
    let not_srg = |msg: String| Err(IncidenceError::NotStronglyRegular(msg));
    if n < 2 {
        return not_srg("fewer than two vertices".into());
    }
    let k = g.degree(0);
    if let Some(v) = (0..n).find(|&v| g.degree(v) != k) {
        return not_srg(format!("vertex {} has degree {}, vertex 0 has {}", v, g.degree(v), k));
    }
    if k == 0 {
        return not_srg("edgeless graph".into());
    }
    if k == n - 1 {
        return not_srg("complete graph".into());
    }
    let mut lambda = None;
    let mut mu = None;
    for i in 0..n {
        for j in i + 1..n {
            let c = g.common_neighbours(i, j);
            let slot = if g.adjacent(i, j) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(e) if e != c => {
                    return not_srg(format!("pair ({}, {}) has {} common neighbours, expected {}", i, j, c, e));
                }
                Some(_) => {}
            }
        }
    }
    Ok(SrgParams {
        v: n as i64,
        k: k as i64,
        lambda: lambda.expect("a non-edgeless regular graph has an edge") as i64,
        mu: mu.expect("a non-complete graph has a non-edge") as i64,
    })
}
