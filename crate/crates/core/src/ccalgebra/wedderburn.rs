use serde::Serialize;

use crate::exactla::{Field, MatF, Subspace};

use super::algebra::FpAlgebra;
use super::radical::radical_subspace;
use super::CcError;

/// One simple component `M_n(F_{p^f})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Component {
    pub n: usize,
    pub f: usize,
}

impl Component {
    pub fn dim(&self) -> usize {
        self.n * self.n * self.f
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WedderburnReport {
    pub components: Vec<Component>,
    /// `Σ n² f`.
    pub total_dim: usize,
    pub radical_dim: usize,
    /// Central primitive idempotents of `A / Rad`, in the quotient's
    /// coordinates, aligned with `components`.
    #[serde(skip)]
    pub central_idempotents: Vec<Vec<u64>>,
}

pub fn wedderburn(alg: &FpAlgebra) -> Result<WedderburnReport, CcError> {
    let rad = radical_subspace(alg);
    let quotient = alg.quotient(&rad)?;
    let mut report = semisimple_decomposition(&quotient.algebra)?;
    report.radical_dim = rad.dim();
    Ok(report)
}

/// Components of a semisimple algebra, sorted by `(n, f)` and then by the
/// coordinates of their central idempotents.
pub fn semisimple_decomposition(s: &FpAlgebra) -> Result<WedderburnReport, CcError> {
    let centre = center(s);
    let fixed = frobenius_fixed(s, &centre);
    let idempotents = split_idempotents(s, &fixed)?;
    let mut comps = Vec::with_capacity(idempotents.len());
    for (idx, e) in idempotents.into_iter().enumerate() {
        let f = s.corner_space(&e, s.unit(), &centre).dim();
        let de = s.corner_space(&e, s.unit(), &Subspace::full(s.modulus(), s.dim())).dim();
        let n = if f == 0 { 0 } else { integer_sqrt(de / f) };
        if f == 0 || de % f != 0 || n * n != de / f {
            return Err(CcError::NonSquareDimension {
                component: idx,
                dim: de,
                degree: f,
            });
        }
        comps.push((Component { n, f }, e));
    }
    comps.sort();
    let total_dim = comps.iter().map(|(c, _)| c.dim()).sum();
    Ok(WedderburnReport {
        components: comps.iter().map(|(c, _)| *c).collect(),
        total_dim,
        radical_dim: 0,
        central_idempotents: comps.into_iter().map(|(_, e)| e).collect(),
    })
}

fn integer_sqrt(m: usize) -> usize {
    let mut r = (m as f64).sqrt() as usize;
    while r * r > m {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= m {
        r += 1;
    }
    r
}

/// Solutions of `z b_j = b_j z` for every basis element.
pub fn center(s: &FpAlgebra) -> Subspace {
    let f = s.modulus();
    let d = s.dim();
    let mut rows = Vec::with_capacity(d * d);
    for j in 0..d {
        for k in 0..d {
            rows.push(
                (0..d)
                    .map(|i| f.sub(&s.basis_product(i, j)[k], &s.basis_product(j, i)[k]))
                    .collect::<Vec<u64>>(),
            );
        }
    }
    Subspace::nullspace(&MatF::from_rows(f, &rows))
}

/// `{z ∈ Z : z^p = z}`, a split subalgebra whose dimension counts the simple
/// components.
fn frobenius_fixed(s: &FpAlgebra, centre: &Subspace) -> Subspace {
    let f = s.modulus();
    let basis = centre.basis();
    if basis.is_empty() {
        return Subspace::zero(f, s.dim());
    }
    let cols: Vec<Vec<u64>> = basis.iter().map(|z| s.sub(&s.pow(z, f.get()), z)).collect();
    let m = MatF::from_fn(f, s.dim(), cols.len(), |r, c| cols[c][r]);
    let vecs = m.nullspace_vectors().into_iter().map(|c| {
        let mut v = s.zero();
        for (ci, z) in c.iter().zip(basis) {
            v = s.add(&v, &s.scale(*ci, z));
        }
        v
    });
    Subspace::span(f, s.dim(), vecs)
}

/// Primitive idempotents of the split algebra `fixed ≅ F_p^r`, found by
/// separating eigenvalues of its basis elements with Lagrange interpolation.
fn split_idempotents(s: &FpAlgebra, fixed: &Subspace) -> Result<Vec<Vec<u64>>, CcError> {
    let f = s.modulus();
    let mut ids = vec![s.unit().to_vec()];
    for w in fixed.basis() {
        let mut next = Vec::new();
        for e in &ids {
            let y = s.mul(e, w);
            let roots = s.element_minpoly(&y, e).roots();
            if roots.len() <= 1 {
                next.push(e.clone());
                continue;
            }
            for &lam in &roots {
                let mut acc = e.clone();
                for &mu in roots.iter().filter(|&&mu| mu != lam) {
                    let shifted = s.sub(&y, &s.scale(mu, e));
                    let inv = f.inv(&f.sub(&lam, &mu)).expect("distinct roots");
                    acc = s.scale(inv, &s.mul(&acc, &shifted));
                }
                next.push(acc);
            }
        }
        ids = next;
    }
    if ids.len() != fixed.dim() {
        return Err(CcError::SplittingIncomplete {
            found: ids.len(),
            expected: fixed.dim(),
        });
    }
    Ok(ids)
}
