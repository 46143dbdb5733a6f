use super::field::{Field, PrimeModulus, Rationals};
use super::matrix::{MatF, MatQ};

/// Dense integer matrix for exact combinatorial identities (0-1 relation
/// matrices, their products and linear combinations).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatZ {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl MatZ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatZ {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i64::from(i == j))
    }

    pub fn all_ones(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| 1)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        MatZ { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + o.get(i, j))
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - o.get(i, j))
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| c * self.get(i, j))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    out.data[i * o.cols + j] += a * o.get(k, j);
                }
            }
        }
        out
    }

    /// Entrywise (Hadamard) product.
    pub fn hadamard(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * o.get(i, j))
    }

    /// `[[a, b], [c, d]]` assembled from four blocks.
    pub fn block(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let (r1, c1) = (a.rows, a.cols);
        Self::from_fn(a.rows + c.rows, a.cols + b.cols, |i, j| match (i < r1, j < c1) {
            (true, true) => a.get(i, j),
            (true, false) => b.get(i, j - c1),
            (false, true) => c.get(i - r1, j),
            (false, false) => d.get(i - r1, j - c1),
        })
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].iter().sum())
            .collect()
    }

    pub fn is_zero_one(&self) -> bool {
        self.data.iter().all(|&x| x == 0 || x == 1)
    }

    pub fn to_gf(&self, p: PrimeModulus) -> MatF {
        MatF::from_i64(p, self.rows, self.cols, &self.data)
    }

    pub fn to_rational(&self) -> MatQ {
        MatQ::from_fn(Rationals, self.rows, self.cols, |i, j| Rationals.from_i64(self.get(i, j)))
    }
}
