use crate::exactla::{Field, MatF, PolyF, PrimeModulus, Subspace};
use crate::incidence::{srg_params_of, Graph};

use super::cc::StructureConstants;
use super::CcError;

/// A finite-dimensional unital associative algebra over GF(p), given by its
/// multiplication table on a fixed basis.
#[derive(Clone, Debug, PartialEq)]
pub struct FpAlgebra {
    modulus: PrimeModulus,
    dim: usize,
    labels: Vec<String>,
    /// `table[i * dim + j]` is the coefficient vector of `b_i b_j`.
    table: Vec<Vec<u64>>,
    unit: Vec<u64>,
    representation: Option<Vec<MatF>>,
    /// Basis vectors in the coordinates of the algebra this one was cut out of.
    parent_basis: Option<Vec<Vec<u64>>>,
}

impl FpAlgebra {
    /// Checks associativity on all basis triples and the two-sided unit law.
    pub fn new(
        modulus: PrimeModulus,
        labels: Vec<String>,
        table: Vec<Vec<u64>>,
        unit: Vec<u64>,
    ) -> Result<Self, CcError> {
        let dim = labels.len();
        assert_eq!(table.len(), dim * dim);
        let alg = FpAlgebra {
            modulus,
            dim,
            labels,
            table,
            unit,
            representation: None,
            parent_basis: None,
        };
        alg.check_laws()?;
        Ok(alg)
    }

    fn check_laws(&self) -> Result<(), CcError> {
        let d = self.dim;
        for i in 0..d {
            let bi = self.basis_vector(i);
            if self.mul(&self.unit, &bi) != bi || self.mul(&bi, &self.unit) != bi {
                return Err(CcError::NoUnit);
            }
            for j in 0..d {
                let ij = &self.table[i * d + j];
                for k in 0..d {
                    let left = self.mul(ij, &self.basis_vector(k));
                    let right = self.mul(&bi, &self.table[j * d + k]);
                    if left != right {
                        return Err(CcError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// Attach matrices realizing the basis; they must multiply by the table.
    pub fn with_representation(mut self, mats: Vec<MatF>) -> Result<Self, CcError> {
        assert_eq!(mats.len(), self.dim);
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let prod = mats[i].mul(&mats[j]);
                if prod != self.combine(&mats, &self.table[i * d + j]) {
                    return Err(CcError::RepresentationMismatch { i, j });
                }
            }
        }
        self.representation = Some(mats);
        Ok(self)
    }

    fn combine(&self, mats: &[MatF], coeffs: &[u64]) -> MatF {
        let f = self.modulus;
        let mut acc = MatF::zeros(f, mats[0].rows(), mats[0].cols());
        for (m, c) in mats.iter().zip(coeffs) {
            if *c != 0 {
                acc = acc.add(&m.scale(c));
            }
        }
        acc
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn unit(&self) -> &[u64] {
        &self.unit
    }
    pub fn representation(&self) -> Option<&[MatF]> {
        self.representation.as_deref()
    }
    pub fn parent_basis(&self) -> Option<&[Vec<u64>]> {
        self.parent_basis.as_deref()
    }

    /// Coefficient vector of `b_i b_j`, 0-based.
    pub fn basis_product(&self, i: usize, j: usize) -> &[u64] {
        &self.table[i * self.dim + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.dim]
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter().zip(y).map(|(a, b)| self.modulus.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter().zip(y).map(|(a, b)| self.modulus.sub(a, b)).collect()
    }

    pub fn scale(&self, c: u64, x: &[u64]) -> Vec<u64> {
        x.iter().map(|a| self.modulus.mul(&c, a)).collect()
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let f = self.modulus;
        let d = self.dim;
        let mut out = vec![0u64; d];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = f.mul(&xi, &yj);
                for (o, t) in out.iter_mut().zip(&self.table[i * d + j]) {
                    if *t != 0 {
                        *o = f.add(o, &f.mul(&c, t));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &[u64], mut e: u64) -> Vec<u64> {
        let mut base = x.to_vec();
        let mut acc = self.unit.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| (0..d).all(|j| self.table[i * d + j] == self.table[j * d + i]))
    }

    /// Matrix of `y ↦ x y` acting on coordinate columns.
    pub fn left_regular(&self, x: &[u64]) -> MatF {
        let d = self.dim;
        let cols: Vec<Vec<u64>> = (0..d).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        MatF::from_fn(self.modulus, d, d, |r, c| cols[c][r])
    }

    /// Canonical span of all `b x`, the left ideal generated by `x`.
    pub fn left_ideal(&self, x: &[u64]) -> Subspace {
        Subspace::span(self.modulus, self.dim, (0..self.dim).map(|i| self.mul(&self.basis_vector(i), x)))
    }

    /// Subspace product `S T`.
    pub fn product(&self, s: &Subspace, t: &Subspace) -> Subspace {
        if s.is_zero() || t.is_zero() {
            return Subspace::zero(self.modulus, self.dim);
        }
        s.product(t, |a, b| self.mul(a, b))
    }

    /// `A S A ⊆ S`.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|v| {
            (0..self.dim).all(|i| {
                let b = self.basis_vector(i);
                s.contains(&self.mul(&b, v)) && s.contains(&self.mul(v, &b))
            })
        })
    }

    /// Dimensions of `S, S², S³, …` up to the first zero or repeat.
    pub fn power_chain(&self, s: &Subspace) -> Vec<usize> {
        let mut dims = Vec::new();
        let mut cur = s.clone();
        while !cur.is_zero() {
            dims.push(cur.dim());
            let next = self.product(&cur, s);
            if next.dim() == cur.dim() {
                break;
            }
            cur = next;
        }
        dims
    }

    /// Whether some power of `S` vanishes.
    pub fn is_nilpotent_subspace(&self, s: &Subspace) -> bool {
        let mut cur = s.clone();
        while !cur.is_zero() {
            let next = self.product(&cur, s);
            if next.dim() == cur.dim() {
                return false;
            }
            cur = next;
        }
        true
    }

    /// Monic minimal polynomial of `x` inside the unital algebra with unit `e`.
    pub fn element_minpoly(&self, x: &[u64], e: &[u64]) -> PolyF {
        let f = self.modulus;
        let mut powers = vec![e.to_vec()];
        loop {
            let next = self.mul(powers.last().expect("nonempty"), x);
            powers.push(next);
            let k = powers.len();
            let m = MatF::from_fn(f, self.dim, k, |r, c| powers[c][r]);
            if let Some(coeffs) = m.nullspace_vectors().into_iter().next() {
                return PolyF::new(f, coeffs).monic();
            }
        }
    }

    /// `A / I` on the basis of non-pivot coordinates of `I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<QuotientAlgebra, CcError> {
        let mut is_pivot = vec![false; self.dim];
        for &c in ideal.pivots() {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.dim).filter(|&c| !is_pivot[c]).collect();
        let project = |v: &[u64]| -> Vec<u64> {
            let r = ideal.reduce(v);
            free.iter().map(|&c| r[c]).collect()
        };
        let mut table = Vec::with_capacity(free.len() * free.len());
        for &a in &free {
            for &b in &free {
                table.push(project(self.basis_product(a, b)));
            }
        }
        let labels = free.iter().map(|&c| self.labels[c].clone()).collect();
        let unit = project(&self.unit);
        let algebra = FpAlgebra::new(self.modulus, labels, table, unit)?;
        Ok(QuotientAlgebra {
            algebra,
            ideal: ideal.clone(),
            free,
        })
    }

    /// The subalgebra carried by `space`, with its own unit `e`, on the echelon
    /// basis of `space`.
    pub fn subalgebra(&self, space: &Subspace, e: &[u64]) -> Result<FpAlgebra, CcError> {
        let basis = space.basis().to_vec();
        let coords = |v: &[u64]| space.coordinates(v).ok_or(CcError::NotClosed);
        let mut table = Vec::with_capacity(basis.len() * basis.len());
        for a in &basis {
            for b in &basis {
                table.push(coords(&self.mul(a, b))?);
            }
        }
        let labels = basis
            .iter()
            .enumerate()
            .map(|(i, v)| match unit_position(v) {
                Some(c) => self.labels[c].clone(),
                None => format!("c{}", i + 1),
            })
            .collect();
        let mut alg = FpAlgebra::new(self.modulus, labels, table, coords(e)?)?;
        alg.parent_basis = Some(basis);
        Ok(alg)
    }

    /// `e A e` for an idempotent `e`.
    pub fn corner(&self, e: &[u64]) -> Result<FpAlgebra, CcError> {
        let space = self.corner_space(e, e, &Subspace::full(self.modulus, self.dim));
        self.subalgebra(&space, e)
    }

    /// Canonical span of `e s f` over a basis of `S`.
    pub fn corner_space(&self, e: &[u64], f: &[u64], s: &Subspace) -> Subspace {
        Subspace::span(
            self.modulus,
            self.dim,
            s.basis().iter().map(|v| self.mul(&self.mul(e, v), f)),
        )
    }

    /// Image in the parent algebra's coordinates of a subspace of a
    /// subalgebra.
    pub fn to_parent(&self, s: &Subspace) -> Option<Subspace> {
        let pb = self.parent_basis.as_ref()?;
        let ambient = pb.first().map_or(0, Vec::len);
        let f = self.modulus;
        let vecs = s.basis().iter().map(|c| {
            let mut out = vec![0u64; ambient];
            for (ci, b) in c.iter().zip(pb) {
                for (o, bi) in out.iter_mut().zip(b) {
                    *o = f.add(o, &f.mul(ci, bi));
                }
            }
            out
        });
        Some(Subspace::span(f, ambient, vecs))
    }
}

fn unit_position(v: &[u64]) -> Option<usize> {
    let mut nz = v.iter().enumerate().filter(|(_, &x)| x != 0);
    match (nz.next(), nz.next()) {
        (Some((i, &1)), None) => Some(i),
        _ => None,
    }
}

/// `A / I` together with the maps between the two coordinate systems.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub algebra: FpAlgebra,
    pub ideal: Subspace,
    free: Vec<usize>,
}

impl QuotientAlgebra {
    pub fn project(&self, x: &[u64]) -> Vec<u64> {
        let r = self.ideal.reduce(x);
        self.free.iter().map(|&c| r[c]).collect()
    }

    /// The preimage supported on the complement coordinates.
    pub fn lift(&self, y: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.ideal.ambient()];
        for (&c, &v) in self.free.iter().zip(y) {
            out[c] = v;
        }
        out
    }
}

pub fn fp_algebra_from_sc(sc: &StructureConstants, p: PrimeModulus) -> Result<FpAlgebra, CcError> {
    let d = sc.dim();
    let table = (1..=d)
        .flat_map(|i| (1..=d).map(move |j| (i, j)))
        .map(|(i, j)| sc.product(i, j).iter().map(|&c| p.reduce(c)).collect())
        .collect();
    let unit = sc.unit().iter().map(|&c| p.reduce(c)).collect();
    FpAlgebra::new(p, sc.labels().to_vec(), table, unit)
}

/// `F_p{I, A, J - I - A}` of a strongly regular graph, realized by the three
/// adjacency matrices.
pub fn rank3_algebra(g: &Graph, p: PrimeModulus) -> Result<FpAlgebra, CcError> {
    let srg = srg_params_of(g)?;
    let alg = fp_algebra_from_sc(&StructureConstants::rank3(&srg), p)?;
    let a = g.adjacency_matrix();
    let n = g.vertex_count();
    let i = crate::exactla::MatZ::identity(n);
    let a2 = crate::exactla::MatZ::all_ones(n, n).sub(&i).sub(&a);
    alg.with_representation(vec![i.to_gf(p), a.to_gf(p), a2.to_gf(p)])
}
