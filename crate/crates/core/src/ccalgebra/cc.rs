use serde::Serialize;

use crate::exactla::MatZ;
use crate::incidence::{block_graph, point_graph, IncidenceStructure, SrdParams, SrgParams};

use super::CcError;

/// The ten relation matrices of the type `[3,2;3]` configuration on `P ⊔ B`,
/// points first.
///
/// Order: `I_P`, point graph, its complement, `I_B`, block graph, its
/// complement, flags `P×B`, non-flags `P×B`, flags `B×P`, non-flags `B×P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherentConfig {
    n1: usize,
    n2: usize,
    sigma: Vec<MatZ>,
}

impl CoherentConfig {
    pub fn n1(&self) -> usize {
        self.n1
    }
    pub fn n2(&self) -> usize {
        self.n2
    }

    /// `σ_i`, 1-based.
    pub fn sigma(&self, i: usize) -> &MatZ {
        &self.sigma[i - 1]
    }

    pub fn sigmas(&self) -> &[MatZ] {
        &self.sigma
    }

    /// Assemble from ten arbitrary matrices; used to feed deliberately broken
    /// inputs to [`structure_constants`].
    pub fn from_matrices(n1: usize, n2: usize, sigma: Vec<MatZ>) -> Self {
        assert_eq!(sigma.len(), 10);
        CoherentConfig { n1, n2, sigma }
    }

    /// Partition, diagonal split and transpose pairing.
    pub fn invariants_hold(&self) -> bool {
        let n = self.n1 + self.n2;
        let mut total = MatZ::zeros(n, n);
        for s in &self.sigma {
            if !s.is_zero_one() {
                return false;
            }
            total = total.add(s);
        }
        let transposes = (1..=6).all(|i| self.sigma(i).transpose() == *self.sigma(i))
            && self.sigma(7).transpose() == *self.sigma(9)
            && self.sigma(8).transpose() == *self.sigma(10);
        total == MatZ::all_ones(n, n) && self.sigma(1).add(self.sigma(4)) == MatZ::identity(n) && transposes
    }
}

pub fn build_cc(d: &IncidenceStructure, params: &SrdParams) -> CoherentConfig {
    let (n1, n2) = (d.n1(), d.n2());
    let a1 = point_graph(d, params).adjacency_matrix();
    let a2 = block_graph(d, params).adjacency_matrix();
    let n = d.incidence_matrix();
    let nt = n.transpose();
    let (ip, ib) = (MatZ::identity(n1), MatZ::identity(n2));
    let (zp, zb, zpb, zbp) = (MatZ::zeros(n1, n1), MatZ::zeros(n2, n2), MatZ::zeros(n1, n2), MatZ::zeros(n2, n1));
    let jp = MatZ::all_ones(n1, n1);
    let jb = MatZ::all_ones(n2, n2);
    let jpb = MatZ::all_ones(n1, n2);
    let jbp = MatZ::all_ones(n2, n1);

    let pp = |m: &MatZ| MatZ::block(m, &zpb, &zbp, &zb);
    let bb = |m: &MatZ| MatZ::block(&zp, &zpb, &zbp, m);
    let pb = |m: &MatZ| MatZ::block(&zp, m, &zbp, &zb);
    let bp = |m: &MatZ| MatZ::block(&zp, &zpb, m, &zb);

    let sigma = vec![
        pp(&ip),
        pp(&a1),
        pp(&jp.sub(&ip).sub(&a1)),
        bb(&ib),
        bb(&a2),
        bb(&jb.sub(&ib).sub(&a2)),
        pb(&n),
        pb(&jpb.sub(&n)),
        bp(&nt),
        bp(&jbp.sub(&nt)),
    ];
    CoherentConfig { n1, n2, sigma }
}

/// Integral structure constants `b_i b_j = Σ_k p[i][j][k] b_k` of an algebra
/// with a distinguished basis and unit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureConstants {
    dim: usize,
    labels: Vec<String>,
    unit: Vec<i64>,
    table: Vec<i64>,
}

impl StructureConstants {
    pub fn new(labels: Vec<String>, unit: Vec<i64>, table: Vec<i64>) -> Self {
        let dim = labels.len();
        assert_eq!(unit.len(), dim);
        assert_eq!(table.len(), dim * dim * dim);
        StructureConstants {
            dim,
            labels,
            unit,
            table,
        }
    }

    /// Table of the rank-3 scheme `{I, A, J - I - A}` of a strongly regular graph.
    pub fn rank3(srg: &SrgParams) -> Self {
        let SrgParams { v, k, lambda, mu } = *srg;
        let a1a1 = [k, lambda, mu];
        let a1a2 = [0, k - 1 - lambda, k - mu];
        let a2a2 = [v - 1 - k, v - 2 * k + lambda, v - 2 - 2 * k + mu];
        let rows: [[[i64; 3]; 3]; 3] = [
            [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            [[0, 1, 0], a1a1, a1a2],
            [[0, 0, 1], a1a2, a2a2],
        ];
        let table = rows.iter().flatten().flatten().copied().collect();
        Self::new(
            vec!["I".into(), "A1".into(), "A2".into()],
            vec![1, 0, 0],
            table,
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn unit(&self) -> &[i64] {
        &self.unit
    }

    /// `p[i][j][k]`, 1-based.
    pub fn get(&self, i: usize, j: usize, k: usize) -> i64 {
        self.table[((i - 1) * self.dim + (j - 1)) * self.dim + (k - 1)]
    }

    /// Coefficient vector of `b_i b_j`, 1-based.
    pub fn product(&self, i: usize, j: usize) -> &[i64] {
        let start = ((i - 1) * self.dim + (j - 1)) * self.dim;
        &self.table[start..start + self.dim]
    }

    pub fn to_dense(&self) -> Vec<Vec<Vec<i64>>> {
        (1..=self.dim)
            .map(|i| (1..=self.dim).map(|j| self.product(i, j).to_vec()).collect())
            .collect()
    }
}

/// Express every `σ_i σ_j` in the σ-basis by reading one entry per relation,
/// then confirm the combination entrywise.
pub fn structure_constants(cc: &CoherentConfig) -> Result<StructureConstants, CcError> {
    let sig = cc.sigmas();
    let reps: Vec<Option<(usize, usize)>> = sig.iter().map(first_one).collect();
    let d = sig.len();
    let mut table = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            let prod = sig[i].mul(&sig[j]);
            let coeffs: Vec<i64> = reps.iter().map(|r| r.map_or(0, |(u, v)| prod.get(u, v))).collect();
            let mut combo = MatZ::zeros(prod.rows(), prod.cols());
            for (k, &c) in coeffs.iter().enumerate() {
                if c != 0 {
                    combo = combo.add(&sig[k].scale(c));
                }
            }
            if combo != prod {
                let (u, v) = first_difference(&prod, &combo);
                return Err(CcError::NotCoherent {
                    i: i + 1,
                    j: j + 1,
                    row: u,
                    col: v,
                    expected: combo.get(u, v),
                    found: prod.get(u, v),
                });
            }
            table.extend(coeffs);
        }
    }
    let labels = (1..=d).map(|i| format!("s{}", i)).collect();
    let mut unit = vec![0; d];
    unit[0] = 1;
    unit[3] = 1;
    Ok(StructureConstants::new(labels, unit, table))
}

fn first_one(m: &MatZ) -> Option<(usize, usize)> {
    (0..m.rows())
        .flat_map(|u| (0..m.cols()).map(move |v| (u, v)))
        .find(|&(u, v)| m.get(u, v) == 1)
}

fn first_difference(a: &MatZ, b: &MatZ) -> (usize, usize) {
    (0..a.rows())
        .flat_map(|u| (0..a.cols()).map(move |v| (u, v)))
        .find(|&(u, v)| a.get(u, v) != b.get(u, v))
        .expect("matrices differ")
}
