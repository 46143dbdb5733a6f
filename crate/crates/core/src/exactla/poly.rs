use super::field::{Field, PrimeModulus};

/// Univariate polynomial, coefficients stored lowest degree first with no
/// trailing zeros (the zero polynomial has an empty coefficient list).
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

/// Polynomial over GF(p).
pub type PolyF = Poly<PrimeModulus>;

impl<F: Field> Poly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Self::new(field, vec![one])
    }

    /// `x - root`
    pub fn linear(field: F, root: &F::Elem) -> Self {
        let c = field.neg(root);
        let one = field.one();
        Self::new(field, vec![c, one])
    }

    pub fn from_roots(field: F, roots: &[F::Elem]) -> Self {
        roots
            .iter()
            .fold(Self::one(field.clone()), |acc, r| acc.mul(&Self::linear(field.clone(), r)))
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("leading coefficient is nonzero");
                let c = self.coeffs.iter().map(|a| self.field.mul(a, &inv)).collect();
                Self::new(self.field.clone(), c)
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = f.zero();
        let c = (0..n)
            .map(|i| f.add(self.coeffs.get(i).unwrap_or(&z), other.coeffs.get(i).unwrap_or(&z)))
            .collect();
        Self::new(f.clone(), c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = f.zero();
        let c = (0..n)
            .map(|i| f.sub(self.coeffs.get(i).unwrap_or(&z), other.coeffs.get(i).unwrap_or(&z)))
            .collect();
        Self::new(f.clone(), c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f.clone());
        }
        let mut c = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(&c[i + j], &f.mul(a, b));
            }
        }
        Self::new(f.clone(), c)
    }

    /// Euclidean division; panics on division by zero.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let f = &self.field;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv = f.inv(divisor.leading().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let c = f.mul(rem.last().unwrap(), &inv);
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] = f.sub(&rem[shift + k], &f.mul(&c, dc));
            }
            quot[shift] = c;
            while rem.last().is_some_and(|x| f.is_zero(x)) {
                rem.pop();
            }
        }
        (Self::new(f.clone(), quot), Self::new(f.clone(), rem))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field.clone());
        }
        let g = self.gcd(other);
        let (q, _) = self.mul(other).divrem(&g);
        q.monic()
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// `self^e mod modulus`.
    pub fn powmod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut acc = Self::one(self.field.clone()).divrem(modulus).1;
        let mut base = self.divrem(modulus).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).divrem(modulus).1;
            }
            base = base.mul(&base).divrem(modulus).1;
            e >>= 1;
        }
        acc
    }
}

/// Moduli below this bound find roots by scanning the whole field.
const ROOT_SCAN_LIMIT: u64 = 1 << 12;

impl PolyF {
    /// Distinct roots in GF(p), ascending.
    ///
    /// Small fields are scanned exhaustively. Larger fields first isolate the
    /// split part `gcd(f, x^p - x)` and then separate it with the deterministic
    /// family `gcd(g, (x + c)^((p-1)/2) - 1)`, `c = 0, 1, 2, ...`.
    pub fn roots(&self) -> Vec<u64> {
        let f = *self.field();
        if self.is_zero() {
            return Vec::new();
        }
        let p = f.get();
        if p <= ROOT_SCAN_LIMIT {
            return (0..p).filter(|x| self.eval(x) == 0).collect();
        }
        let x = Poly::new(f, vec![0, 1]);
        let xp = x.powmod(p, self);
        let split = self.gcd(&xp.sub(&x));
        let mut roots = Vec::new();
        split_linear(&split, &mut roots);
        roots.sort_unstable();
        roots
    }
}

fn split_linear(g: &PolyF, out: &mut Vec<u64>) {
    let f = *g.field();
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let m = g.monic();
            out.push(f.neg(&m.coeffs()[0]));
        }
        Some(d) => {
            if g.eval(&0) == 0 {
                out.push(0);
                let (q, _) = g.divrem(&Poly::new(f, vec![0, 1]));
                split_linear(&q, out);
                return;
            }
            let p = f.get();
            for c in 0..p {
                let shifted = Poly::new(f, vec![c, 1]);
                let h = shifted.powmod((p - 1) / 2, g).sub(&PolyF::one(f));
                let fac = g.gcd(&h);
                let fd = fac.degree().unwrap_or(0);
                if fd > 0 && fd < d {
                    let (q, _) = g.divrem(&fac);
                    split_linear(&fac, out);
                    split_linear(&q, out);
                    return;
                }
            }
            unreachable!("a squarefree product of distinct linear factors always splits");
        }
    }
}
