use serde::Serialize;

use crate::exactla::Subspace;

use super::algebra::FpAlgebra;
use super::radical::radical_subspace;
use super::wedderburn::{semisimple_decomposition, Component};
use super::CcError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverChecks {
    pub orthogonal: bool,
    pub sums_to_one: bool,
    /// `Σ a[i][j]`.
    pub arrow_total: usize,
    /// `dim Rad - dim Rad²`.
    pub radical_top_dim: usize,
    /// `Σ_j c[i][j] = dim e_i A` for every `i`.
    pub cartan_rows_consistent: bool,
    /// `Σ c[i][j]`, which must equal the algebra dimension.
    pub cartan_total: usize,
}

impl QuiverChecks {
    pub fn hold(&self, dim: usize) -> bool {
        self.orthogonal
            && self.sums_to_one
            && self.arrow_total == self.radical_top_dim
            && self.cartan_rows_consistent
            && self.cartan_total == dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverReport {
    pub vertices: usize,
    /// Simple component behind each vertex.
    pub components: Vec<Component>,
    /// `a[i][j] = dim e_i (Rad / Rad²) e_j`.
    pub arrows: Vec<Vec<usize>>,
    /// `c[i][j] = dim e_i A e_j`.
    pub cartan: Vec<Vec<usize>>,
    /// `dim e_i Rad^k - dim e_i Rad^{k+1}` for `k = 0, 1, …` while nonzero.
    pub loewy_layers: Vec<Vec<usize>>,
    /// Lifted orthogonal idempotents in the algebra's coordinates.
    pub idempotents: Vec<Vec<u64>>,
    pub checks: QuiverChecks,
}

/// Quiver data with one vertex per block of `A / Rad`: the central primitive
/// idempotents of the quotient are lifted to pairwise orthogonal idempotents of
/// `A`, each inside the corner left over by the previous ones.
pub fn quiver(alg: &FpAlgebra) -> Result<QuiverReport, CcError> {
    let f = alg.modulus();
    let d = alg.dim();
    let rad = radical_subspace(alg);
    let quotient = alg.quotient(&rad)?;
    let ss = semisimple_decomposition(&quotient.algebra)?;
    let r = ss.components.len();

    let one = alg.unit().to_vec();
    let mut ids: Vec<Vec<u64>> = Vec::with_capacity(r);
    let mut rest = one.clone();
    for (idx, target) in ss.central_idempotents.iter().enumerate() {
        if idx + 1 == r {
            ids.push(rest.clone());
            break;
        }
        let x = quotient.lift(target);
        let x = alg.mul(&alg.mul(&rest, &x), &rest);
        let e = lift_idempotent(alg, &x)?;
        rest = alg.sub(&rest, &e);
        ids.push(e);
    }

    let rad2 = alg.product(&rad, &rad);
    let full = Subspace::full(f, d);
    let dim_of = |a: &[u64], b: &[u64], s: &Subspace| alg.corner_space(a, b, s).dim();

    let mut arrows = vec![vec![0usize; r]; r];
    let mut cartan = vec![vec![0usize; r]; r];
    for i in 0..r {
        for j in 0..r {
            arrows[i][j] = dim_of(&ids[i], &ids[j], &rad) - dim_of(&ids[i], &ids[j], &rad2);
            cartan[i][j] = dim_of(&ids[i], &ids[j], &full);
        }
    }

    let mut powers = vec![full.clone()];
    let mut cur = rad.clone();
    while !cur.is_zero() {
        powers.push(cur.clone());
        let next = alg.product(&cur, &rad);
        if next == cur {
            break;
        }
        cur = next;
    }
    powers.push(Subspace::zero(f, d));
    let loewy_layers = ids
        .iter()
        .map(|e| {
            let dims: Vec<usize> = powers.iter().map(|s| dim_of(e, &one, s)).collect();
            dims.windows(2).map(|w| w[0] - w[1]).filter(|&x| x > 0).collect()
        })
        .collect();

    let zero = alg.zero();
    let orthogonal = ids.iter().enumerate().all(|(i, a)| {
        ids.iter()
            .enumerate()
            .all(|(j, b)| alg.mul(a, b) == if i == j { a.clone() } else { zero.clone() })
    });
    let sum = ids.iter().fold(zero.clone(), |acc, e| alg.add(&acc, e));
    let cartan_rows_consistent =
        (0..r).all(|i| cartan[i].iter().sum::<usize>() == dim_of(&ids[i], &one, &full));
    let checks = QuiverChecks {
        orthogonal,
        sums_to_one: sum == one,
        arrow_total: arrows.iter().flatten().sum(),
        radical_top_dim: rad.dim() - rad2.dim(),
        cartan_rows_consistent,
        cartan_total: cartan.iter().flatten().sum(),
    };

    Ok(QuiverReport {
        vertices: r,
        components: ss.components,
        arrows,
        cartan,
        loewy_layers,
        idempotents: ids,
        checks,
    })
}

/// Iterate `x ↦ x^p` until it stops moving; for `x` idempotent modulo a
/// nilpotent ideal the limit is an idempotent with the same image.
pub fn lift_idempotent(alg: &FpAlgebra, x: &[u64]) -> Result<Vec<u64>, CcError> {
    let p = alg.modulus().get();
    let mut cur = x.to_vec();
    for _ in 0..=alg.dim() {
        let next = alg.pow(&cur, p);
        if next == cur && alg.mul(&cur, &cur) == cur {
            return Ok(cur);
        }
        cur = next;
    }
    Err(CcError::LiftingFailure)
}
