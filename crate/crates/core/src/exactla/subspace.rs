use super::field::{Field, PrimeModulus};
use super::matrix::MatF;

/// A subspace of `GF(p)^n`, stored by its canonical reduced echelon basis.
///
/// Two spans of the same set of vectors produce identical bases, so `==`
/// is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    modulus: PrimeModulus,
    ambient: usize,
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(modulus: PrimeModulus, ambient: usize) -> Self {
        Subspace {
            modulus,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(modulus: PrimeModulus, ambient: usize) -> Self {
        let vecs: Vec<Vec<u64>> = (0..ambient)
            .map(|i| {
                let mut v = vec![0; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Self::span(modulus, ambient, vecs)
    }

    /// Canonical span of the given vectors (entries already reduced mod p).
    pub fn span<I>(modulus: PrimeModulus, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<u64>>,
    {
        let rows: Vec<Vec<u64>> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient, "vector length differs from ambient dimension"))
            .filter(|v| v.iter().any(|&x| x != 0))
            .collect();
        if rows.is_empty() || ambient == 0 {
            return Self::zero(modulus, ambient);
        }
        let rr = MatF::from_rows(modulus, &rows).rref();
        let basis = (0..rr.rank).map(|i| rr.matrix.row(i).to_vec()).collect();
        Subspace {
            modulus,
            ambient,
            basis,
            pivots: rr.pivots,
        }
    }

    /// Kernel `{x : M x = 0}` as a canonical subspace.
    pub fn nullspace(m: &MatF) -> Self {
        Self::span(m.modulus(), m.cols(), m.nullspace_vectors())
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the echelon basis; the result vanishes on every pivot
    /// column and is zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let f = self.modulus;
        let mut w = v.to_vec();
        for (b, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = w[pc];
            if c == 0 {
                continue;
            }
            for (wi, bi) in w.iter_mut().zip(b) {
                *wi = f.sub(wi, &f.mul(&c, bi));
            }
        }
        w
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, `None` if `v` is outside.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Self::span(
            self.modulus,
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    /// Annihilator `{y : <b, y> = 0 for every basis vector b}` (the orthogonal
    /// complement under the standard bilinear form).
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Self::full(self.modulus, self.ambient);
        }
        Self::nullspace(&MatF::from_rows(self.modulus, &self.basis))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Canonical span of `{s * t}` over the basis vectors of `self` and `other`,
    /// for any bilinear product `mul`.
    pub fn product<M>(&self, other: &Subspace, mul: M) -> Subspace
    where
        M: Fn(&[u64], &[u64]) -> Vec<u64>,
    {
        let prods: Vec<Vec<u64>> = self
            .basis
            .iter()
            .flat_map(|s| other.basis.iter().map(|t| mul(s, t)).collect::<Vec<_>>())
            .collect();
        let ambient = prods.first().map_or(self.ambient, Vec::len);
        Self::span(self.modulus, ambient, prods)
    }

    /// Basis as a matrix (`None` for the zero subspace).
    pub fn to_matrix(&self) -> Option<MatF> {
        (!self.is_zero()).then(|| MatF::from_rows(self.modulus, &self.basis))
    }
}
