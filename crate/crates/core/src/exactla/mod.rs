//! Exact dense linear algebra over prime fields and the rationals.

mod field;
mod intmat;
mod matrix;
mod poly;
mod subspace;

use thiserror::Error;

pub use field::{is_prime, prime_divisors, Field, PrimeModulus, Rationals};
pub use intmat::MatZ;
pub use matrix::{bareiss_rank, MatF, MatQ, Matrix, Rref};
pub use poly::{Poly, PolyF};
pub use subspace::Subspace;

/// Polynomial over the rationals.
pub type PolyQ = Poly<Rationals>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported range")]
    ModulusTooLarge(u64),
}

/// Rank of `M` over GF(p).
pub fn rank(m: &MatF) -> usize {
    m.rank()
}

/// Rank of a rational matrix by fraction-free elimination.
pub fn rank_rational(m: &MatQ) -> usize {
    m.rank_fraction_free()
}

/// Kernel of `M` as a canonical subspace.
pub fn nullspace(m: &MatF) -> Subspace {
    Subspace::nullspace(m)
}

/// Canonical span of all products `s * t` of basis vectors.
pub fn subspace_product<M>(s: &Subspace, t: &Subspace, mul: M) -> Subspace
where
    M: Fn(&[u64], &[u64]) -> Vec<u64>,
{
    s.product(t, mul)
}
