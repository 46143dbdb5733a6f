use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::{Field, PrimeModulus, Rationals};
use super::poly::Poly;

/// Dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Matrix over GF(p).
pub type MatF = Matrix<PrimeModulus>;
/// Matrix over the rationals.
pub type MatQ = Matrix<Rationals>;

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F: Field> {
    /// Canonical reduced row-echelon form (same shape as the input).
    pub matrix: Matrix<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let z = field.zero();
        Matrix {
            data: vec![z; rows * cols],
            field,
            rows,
            cols,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn from_fn(field: F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Build from integer entries, reducing into the field.
    pub fn from_i64(field: F, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let fc = field.clone();
        Self::from_fn(field, rows, cols, |i, j| fc.from_i64(entries[i * cols + j]))
    }

    /// Build from rows of already-reduced elements.
    pub fn from_rows(field: F, rows: &[Vec<F::Elem>]) -> Self {
        assert!(!rows.is_empty(), "matrix dimensions must be positive");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.iter().flat_map(|r| r.iter().cloned()).collect();
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    #[inline]
    pub fn field(&self) -> &F {
        &self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field.clone(), self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.mul(a, c)).collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let f = &self.field;
        let mut out = Self::zeros(self.field.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    let prod = f.mul(a, other.get(k, j));
                    out.data[idx] = f.add(&out.data[idx], &prod);
                }
            }
        }
        out
    }

    /// `M v` for a column vector `v`.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect()
    }

    pub fn trace(&self) -> F::Elem {
        assert!(self.is_square());
        let f = &self.field;
        (0..self.rows).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref<F> {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || f.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{x : M x = 0}`, one vector per free column, in column order.
    pub fn nullspace_vectors(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let rr = self.rref();
        let mut out = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &c in &rr.pivots {
            is_pivot[c] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row, &pc) in rr.pivots.iter().enumerate() {
                v[pc] = f.neg(rr.matrix.get(row, free));
            }
            out.push(v);
        }
        out
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.field.clone(), self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Evaluate a polynomial at this (square) matrix by Horner's rule.
    pub fn eval_poly(&self, p: &Poly<F>) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = Self::zeros(self.field.clone(), n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let v = self.field.add(acc.get(i, i), c);
                acc.set(i, i, v);
            }
        }
        acc
    }

    /// Minimal polynomial, as the lcm of the local minimal polynomials of the
    /// standard basis vectors (each read off its Krylov sequence).
    pub fn minpoly(&self) -> Poly<F> {
        assert!(self.is_square(), "minimal polynomial needs a square matrix");
        let f = &self.field;
        let n = self.rows;
        let mut result = Poly::one(f.clone());
        for i in 0..n {
            let mut e = vec![f.zero(); n];
            e[i] = f.one();
            let local = self.local_minpoly(e);
            result = result.lcm(&local);
        }
        result
    }

    /// Monic generator of `{q : q(M) v = 0}`.
    fn local_minpoly(&self, v: Vec<F::Elem>) -> Poly<F> {
        let f = &self.field;
        let n = self.rows;
        // Echelon rows: (vector, its expression as a polynomial in M applied to v, pivot).
        let mut basis: Vec<(Vec<F::Elem>, Vec<F::Elem>, usize)> = Vec::new();
        let mut current = v;
        for degree in 0..=n {
            let mut w = current.clone();
            let mut expr = vec![f.zero(); degree + 1];
            expr[degree] = f.one();
            for (bv, bexpr, piv) in &basis {
                if f.is_zero(&w[*piv]) {
                    continue;
                }
                let c = w[*piv].clone();
                for (wi, bi) in w.iter_mut().zip(bv) {
                    *wi = f.sub(wi, &f.mul(&c, bi));
                }
                for (k, be) in bexpr.iter().enumerate() {
                    expr[k] = f.sub(&expr[k], &f.mul(&c, be));
                }
            }
            match w.iter().position(|x| !f.is_zero(x)) {
                None => return Poly::new(f.clone(), expr),
                Some(piv) => {
                    let inv = f.inv(&w[piv]).expect("nonzero pivot");
                    for x in w.iter_mut() {
                        *x = f.mul(x, &inv);
                    }
                    for x in expr.iter_mut() {
                        *x = f.mul(x, &inv);
                    }
                    basis.push((w, expr, piv));
                }
            }
            current = self.apply(&current);
        }
        unreachable!("Krylov sequence of length n+1 is always dependent")
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl MatF {
    pub fn modulus(&self) -> PrimeModulus {
        self.field
    }

    /// Lifted integer entries in `[0, p)`.
    pub fn lifted(&self) -> Vec<u64> {
        self.data.clone()
    }
}

impl MatQ {
    pub fn from_integers(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::from_i64(Rationals, rows, cols, entries)
    }

    /// Rank by fraction-free (Bareiss) elimination: each row is scaled to
    /// integers first, then all arithmetic stays in `BigInt` with exact divisions.
    pub fn rank_fraction_free(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let den = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&den / x.denom())).collect()
            })
            .collect();
        bareiss_rank(&mut m, self.cols)
    }
}

/// Fraction-free Gaussian elimination on an integer matrix, returning its rank.
/// Every division performed is exact (Sylvester's identity).
pub fn bareiss_rank(m: &mut [Vec<BigInt>], cols: usize) -> usize {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}
