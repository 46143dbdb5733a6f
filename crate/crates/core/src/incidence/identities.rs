use serde::Serialize;

use crate::exactla::MatZ;

use super::graph::{block_graph, point_graph};
use super::srd::SrdParams;
use super::structure::IncidenceStructure;

/// Outcome of the five basic matrix identities of a strongly regular design.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixIdentityReport {
    /// `N 1 = s2 1` and `Nᵀ 1 = s1 1`
    pub row_sums: bool,
    /// `N Nᵀ = s2 I + a2 A1 + b2 (J - I - A1)`
    pub point_gram: bool,
    /// `Nᵀ N = s1 I + a1 A2 + b1 (J - I - A2)`
    pub block_gram: bool,
    /// `A1 N = (N1 - P1) N + P1 J`
    pub point_local: bool,
    /// `N A2 = (N2 - P2) N + P2 J`
    pub block_local: bool,
}

impl MatrixIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.as_array().iter().all(|&b| b)
    }

    pub fn as_array(&self) -> [bool; 5] {
        [
            self.row_sums,
            self.point_gram,
            self.block_gram,
            self.point_local,
            self.block_local,
        ]
    }
}

/// Evaluate every identity with exact integer matrix arithmetic.
pub fn verify_matrix_identities(d: &IncidenceStructure, params: &SrdParams) -> MatrixIdentityReport {
    let (n1, n2) = (d.n1(), d.n2());
    let n = d.incidence_matrix();
    let nt = n.transpose();
    let a1 = point_graph(d, params).adjacency_matrix();
    let a2 = block_graph(d, params).adjacency_matrix();
    let (ip, ib) = (MatZ::identity(n1), MatZ::identity(n2));
    let (jp, jb, jpb) = (MatZ::all_ones(n1, n1), MatZ::all_ones(n2, n2), MatZ::all_ones(n1, n2));
    let c = |x: usize| x as i64;

    let row_sums = n.row_sums().iter().all(|&r| r == c(params.s2))
        && nt.row_sums().iter().all(|&r| r == c(params.s1));

    let point_gram = n.mul(&nt)
        == ip
            .scale(c(params.s2))
            .add(&a1.scale(c(params.a2)))
            .add(&jp.sub(&ip).sub(&a1).scale(c(params.b2)));

    let block_gram = nt.mul(&n)
        == ib
            .scale(c(params.s1))
            .add(&a2.scale(c(params.a1)))
            .add(&jb.sub(&ib).sub(&a2).scale(c(params.b1)));

    let point_local = a1.mul(&n)
        == n
            .scale(c(params.n1_local) - c(params.p1_local))
            .add(&jpb.scale(c(params.p1_local)));

    let block_local = n.mul(&a2)
        == n
            .scale(c(params.n2_local) - c(params.p2_local))
            .add(&jpb.scale(c(params.p2_local)));

    MatrixIdentityReport {
        row_sums,
        point_gram,
        block_gram,
        point_local,
        block_local,
    }
}
