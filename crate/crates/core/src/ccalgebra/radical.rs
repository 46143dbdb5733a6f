use serde::Serialize;

use crate::exactla::{MatF, Subspace};

use super::algebra::FpAlgebra;
use super::CcError;

/// Largest number of elements the enumeration oracle will visit.
pub const BRUTEFORCE_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalCertificate {
    /// Products with basis elements on either side stay inside.
    pub is_ideal: bool,
    /// The power chain reaches zero.
    pub nilpotent: bool,
    /// The quotient algebra has zero radical.
    pub quotient_semisimple: bool,
}

impl RadicalCertificate {
    pub fn holds(&self) -> bool {
        self.is_ideal && self.nilpotent && self.quotient_semisimple
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalReport {
    pub dim: usize,
    /// `dim Rad^k` for `k = 1, 2, …` while nonzero.
    pub power_dims: Vec<usize>,
    /// Least `L` with `Rad^L = 0`.
    pub loewy_length: usize,
    /// Echelon basis rows in the algebra's coordinates.
    pub basis: Vec<Vec<u64>>,
    pub certificate: RadicalCertificate,
    #[serde(skip)]
    pub subspace: Subspace,
}

/// Jacobson radical with power dimensions and a certificate.
pub fn radical(alg: &FpAlgebra) -> RadicalReport {
    let rad = radical_subspace(alg);
    let power_dims = alg.power_chain(&rad);
    let nilpotent = alg.is_nilpotent_subspace(&rad);
    let is_ideal = alg.is_ideal(&rad);
    let quotient_semisimple = is_ideal
        && alg
            .quotient(&rad)
            .map(|q| radical_subspace(&q.algebra).is_zero())
            .unwrap_or(false);
    RadicalReport {
        dim: rad.dim(),
        loewy_length: power_dims.len() + 1,
        power_dims,
        basis: rad.basis().to_vec(),
        certificate: RadicalCertificate {
            is_ideal,
            nilpotent,
            quotient_semisimple,
        },
        subspace: rad,
    }
}

/// Radical by the layered trace forms `g_i(x) = Tr(x̃^{p^i}) / p^i mod p` on the
/// left regular representation, `0 ≤ i ≤ ⌊log_p dim⌋`.
pub fn radical_subspace(alg: &FpAlgebra) -> Subspace {
    let f = alg.modulus();
    let p = f.get();
    let d = alg.dim();
    let mut layers = 0u32;
    while (p as u128).pow(layers + 1) <= d as u128 {
        layers += 1;
    }
    let mut ideal = Subspace::full(f, d);
    for i in 0..=layers {
        if ideal.is_zero() {
            break;
        }
        let basis = ideal.basis().to_vec();
        let rows: Vec<Vec<u64>> = (0..d)
            .map(|l| {
                let y = alg.basis_vector(l);
                basis.iter().map(|b| trace_form(alg, &alg.mul(b, &y), i)).collect()
            })
            .collect();
        let g = MatF::from_rows(f, &rows);
        let kernel = g.nullspace_vectors();
        let next = kernel.iter().map(|c| {
            let mut v = alg.zero();
            for (cj, bj) in c.iter().zip(&basis) {
                v = alg.add(&v, &alg.scale(*cj, bj));
            }
            v
        });
        ideal = Subspace::span(f, d, next);
    }
    ideal
}

/// `Tr(L̃^{p^i}) / p^i mod p` for an integer lift `L̃` of the left regular
/// matrix of `x`, computed modulo `p^{i+1}`.
fn trace_form(alg: &FpAlgebra, x: &[u64], i: u32) -> u64 {
    let p = alg.modulus().get() as u128;
    let q = p.pow(i + 1);
    let d = alg.dim();
    let lx = alg.left_regular(x);
    let mut m: Vec<u128> = lx.lifted().into_iter().map(u128::from).collect();
    for _ in 0..i {
        m = matpow_mod(&m, d, p as u64, q);
    }
    let tr = (0..d).map(|k| m[k * d + k]).sum::<u128>() % q;
    let scale = p.pow(i);
    debug_assert_eq!(tr % scale, 0, "trace form not divisible on the current layer");
    ((tr / scale) % p) as u64
}

fn matmul_mod(a: &[u128], b: &[u128], d: usize, q: u128) -> Vec<u128> {
    let mut out = vec![0u128; d * d];
    for r in 0..d {
        for k in 0..d {
            let ark = a[r * d + k];
            if ark == 0 {
                continue;
            }
            for c in 0..d {
                out[r * d + c] = (out[r * d + c] + ark * b[k * d + c]) % q;
            }
        }
    }
    out
}

fn matpow_mod(m: &[u128], d: usize, mut e: u64, q: u128) -> Vec<u128> {
    let mut acc: Vec<u128> = (0..d * d).map(|k| u128::from(k / d == k % d)).collect();
    let mut base = m.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = matmul_mod(&acc, &base, d, q);
        }
        e >>= 1;
        if e > 0 {
            base = matmul_mod(&base, &base, d, q);
        }
    }
    acc
}

/// Radical by enumeration: `x ∈ Rad` exactly when the left ideal `A x` is
/// nilpotent.
pub fn radical_bruteforce(alg: &FpAlgebra) -> Result<Subspace, CcError> {
    let f = alg.modulus();
    let p = f.get();
    let d = alg.dim();
    let total = (p as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if total > BRUTEFORCE_LIMIT as u128 {
        return Err(CcError::BruteForceTooLarge { p, dim: d });
    }
    let mut found = Subspace::zero(f, d);
    let mut x = vec![0u64; d];
    for _ in 0..total {
        if !found.contains(&x) && alg.pow(&x, d as u64).iter().all(|&c| c == 0) {
            let ideal = alg.left_ideal(&x);
            if alg.is_nilpotent_subspace(&ideal) {
                found = found.sum(&Subspace::span(f, d, [x.clone()]));
            }
        }
        for c in x.iter_mut() {
            *c += 1;
            if *c < p {
                break;
            }
            *c = 0;
        }
    }
    Ok(found)
}
