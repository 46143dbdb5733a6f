//! The ten-relation coherent configuration of a strongly regular design and the
//! modular structure of its adjacency algebras: radical, Wedderburn
//! components, commutator quotient and quiver data.

mod algebra;
mod cc;
mod quiver;
mod radical;
mod wedderburn;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::exactla::{bareiss_rank, MatF, PrimeModulus};
use crate::incidence::IncidenceError;

pub use algebra::{fp_algebra_from_sc, rank3_algebra, FpAlgebra, QuotientAlgebra};
pub use cc::{build_cc, structure_constants, CoherentConfig, StructureConstants};
pub use quiver::{lift_idempotent, quiver, QuiverChecks, QuiverReport};
pub use radical::{radical, radical_bruteforce, radical_subspace, RadicalCertificate, RadicalReport, BRUTEFORCE_LIMIT};
pub use wedderburn::{center, semisimple_decomposition, wedderburn, Component, WedderburnReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CcError {
    #[error("not coherent: s{i} * s{j} leaves the span (entry ({row}, {col}) is {found}, the combination gives {expected})")]
    NotCoherent {
        i: usize,
        j: usize,
        row: usize,
        col: usize,
        expected: i64,
        found: i64,
    },
    #[error("multiplication table is not associative on basis triple ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("the given unit is not a two-sided identity")]
    NoUnit,
    #[error("matrix representation disagrees with the table on basis pair ({i}, {j})")]
    RepresentationMismatch { i: usize, j: usize },
    #[error("subspace is not closed under multiplication")]
    NotClosed,
    #[error("component {component} has dimension {dim} over a centre of degree {degree}, not n^2 f")]
    NonSquareDimension { component: usize, dim: usize, degree: usize },
    #[error("central idempotent splitting found {found} pieces, expected {expected}")]
    SplittingIncomplete { found: usize, expected: usize },
    #[error("idempotent lifting did not stabilize")]
    LiftingFailure,
    #[error("enumerating {p}^{dim} elements exceeds the brute-force limit")]
    BruteForceTooLarge { p: u64, dim: usize },
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
}

/// Arithmetic used for the commutator quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Arithmetic {
    Rational,
    Modular(PrimeModulus),
}

/// `d - rank span{b_i b_j - b_j b_i}`.
pub fn commutator_quotient_dim(sc: &StructureConstants, mode: Arithmetic) -> usize {
    let d = sc.dim();
    let rows: Vec<Vec<i64>> = (1..=d)
        .flat_map(|i| (i + 1..=d).map(move |j| (i, j)))
        .map(|(i, j)| {
            sc.product(i, j)
                .iter()
                .zip(sc.product(j, i))
                .map(|(a, b)| a - b)
                .collect()
        })
        .filter(|r: &Vec<i64>| r.iter().any(|&x| x != 0))
        .collect();
    if rows.is_empty() {
        return d;
    }
    let rank = match mode {
        Arithmetic::Rational => {
            let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            bareiss_rank(&mut m, d)
        }
        Arithmetic::Modular(p) => {
            let flat: Vec<i64> = rows.iter().flatten().copied().collect();
            MatF::from_i64(p, rows.len(), d, &flat).rank()
        }
    };
    d - rank
}

/// Which fiber of the configuration a corner lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Fiber {
    Point,
    Block,
}

/// `σ₁ A σ₁` (points) or `σ₄ A σ₄` (blocks) of an algebra on the σ-basis.
pub fn corner_algebra(alg: &FpAlgebra, fiber: Fiber) -> Result<FpAlgebra, CcError> {
    let idx = match fiber {
        Fiber::Point => 0,
        Fiber::Block => 3,
    };
    alg.corner(&alg.basis_vector(idx))
}

/// Coordinates of `σ₂ σ₇` reduced mod `p`.
pub fn special_element_u(sc: &StructureConstants, p: PrimeModulus) -> Vec<u64> {
    sc.product(2, 7).iter().map(|&c| p.reduce(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{MatZ, Subspace};
    use crate::incidence::{check_srd, gen_doily, gen_grid, point_graph};

    fn gf(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn doily_sc() -> StructureConstants {
        let d = gen_doily();
        let params = check_srd(&d).unwrap();
        structure_constants(&build_cc(&d, &params)).unwrap()
    }

    fn span(p: u64, d: usize, vs: &[&[u64]]) -> Subspace {
        Subspace::span(gf(p), d, vs.iter().map(|v| v.to_vec()))
    }

    #[test]
    fn doily_configuration_shape() {
        let d = gen_doily();
        let params = check_srd(&d).unwrap();
        let cc = build_cc(&d, &params);
        assert!(cc.invariants_hold());
        assert_eq!(cc.sigma(1).rows(), 30);
        assert_eq!(cc.sigma(1).add(cc.sigma(4)), MatZ::identity(30));
        assert!(cc.sigma(7).row_sums()[..15].iter().all(|&r| r == 3));
    }

    #[test]
    fn doily_structure_constants() {
        let sc = doily_sc();
        assert_eq!(&sc.product(7, 9)[..4], &[3, 1, 0, 0]);
        assert_eq!(sc.product(2, 7), &[0, 0, 0, 0, 0, 0, 2, 1, 0, 0]);
        assert_eq!(sc.get(1, 1, 1), 1);
        assert_eq!(sc.to_dense().len(), 10);
    }

    #[test]
    fn broken_design_is_not_coherent() {
        let d = gen_doily();
        let params = check_srd(&d).unwrap();
        let cc = build_cc(&d.with_flag_toggled(0, 0), &params);
        assert!(matches!(structure_constants(&cc), Err(CcError::NotCoherent { .. })));
    }

    #[test]
    fn rank3_table_matches_matrices() {
        let d = gen_doily();
        let params = check_srd(&d).unwrap();
        let g = point_graph(&d, &params);
        for p in [2, 3, 5, 7] {
            let alg = rank3_algebra(&g, gf(p)).unwrap();
            assert!(alg.is_commutative());
            assert_eq!(alg.basis_product(1, 1), &[6 % p, 1, 3 % p]);
        }
    }

    #[test]
    fn doily_point_scheme_radicals() {
        let d = gen_doily();
        let params = check_srd(&d).unwrap();
        let g = point_graph(&d, &params);
        let r2 = radical(&rank3_algebra(&g, gf(2)).unwrap());
        assert!(r2.certificate.holds());
        // B = 12 I - 6 A1 + 3 A2 = A2 mod 2
        assert_eq!(r2.subspace, span(2, 3, &[&[0, 0, 1]]));
        assert_eq!(r2.power_dims, vec![1]);
        let r3 = radical(&rank3_algebra(&g, gf(3)).unwrap());
        assert_eq!(r3.subspace, span(3, 3, &[&[1, 1, 1]]));
        let r7 = radical(&rank3_algebra(&g, gf(7)).unwrap());
        assert_eq!((r7.dim, r7.loewy_length), (0, 1));
    }

    #[test]
    fn doily_design_algebra_mod_2() {
        let alg = fp_algebra_from_sc(&doily_sc(), gf(2)).unwrap();
        let rep = radical(&alg);
        assert!(rep.certificate.holds());
        assert_eq!(rep.power_dims, vec![4, 2]);
        assert_eq!(rep.loewy_length, 3);
        assert_eq!(radical_bruteforce(&alg).unwrap(), rep.subspace);
        let w = wedderburn(&alg).unwrap();
        assert_eq!(w.total_dim, 6);
        assert!((1..=4).contains(&w.components.len()));
    }

    #[test]
    fn doily_split_prime_components() {
        let alg = fp_algebra_from_sc(&doily_sc(), gf(7)).unwrap();
        let w = wedderburn(&alg).unwrap();
        assert_eq!(
            w.components,
            vec![Component { n: 1, f: 1 }, Component { n: 1, f: 1 }, Component { n: 2, f: 1 }, Component { n: 2, f: 1 }]
        );
        let q = quiver(&alg).unwrap();
        assert!(q.checks.hold(10));
        assert!(q.arrows.iter().flatten().all(|&a| a == 0));
    }

    #[test]
    fn quiver_invariants_mod_2() {
        let alg = fp_algebra_from_sc(&doily_sc(), gf(2)).unwrap();
        let q = quiver(&alg).unwrap();
        assert!(q.checks.hold(10));
        assert_eq!(q.checks.arrow_total, 2);
    }

    #[test]
    fn corners_and_special_element() {
        let sc = doily_sc();
        let alg = fp_algebra_from_sc(&sc, gf(2)).unwrap();
        let rad = radical_subspace(&alg);
        for fiber in [Fiber::Point, Fiber::Block] {
            let corner = corner_algebra(&alg, fiber).unwrap();
            assert_eq!(corner.dim(), 3);
            let e = alg.basis_vector(if fiber == Fiber::Point { 0 } else { 3 });
            let e_rad_e = alg.corner_space(&e, &e, &rad);
            assert_eq!(corner.to_parent(&radical_subspace(&corner)).unwrap(), e_rad_e);
            assert_eq!(e_rad_e.dim(), 1);
        }
        let u = special_element_u(&sc, gf(2));
        assert!(u.iter().any(|&c| c != 0));
        assert!(alg.mul(&u, &u).iter().all(|&c| c == 0));
        assert!(rad.contains(&u));
        assert!(!span(2, 10, &[&alg.basis_vector(0), &alg.basis_vector(1), &alg.basis_vector(2)]).contains(&u));
    }

    #[test]
    fn commutator_quotients() {
        let sc = doily_sc();
        assert_eq!(commutator_quotient_dim(&sc, Arithmetic::Rational), 4);
        assert_eq!(commutator_quotient_dim(&sc, Arithmetic::Modular(gf(2))), 4);
        let g = gen_grid(3).unwrap();
        let p = check_srd(&g).unwrap();
        let srg = crate::incidence::srg_params_of(&point_graph(&g, &p)).unwrap();
        assert_eq!(commutator_quotient_dim(&StructureConstants::rank3(&srg), Arithmetic::Rational), 3);
    }

    #[test]
    fn bruteforce_guard() {
        let alg = fp_algebra_from_sc(&doily_sc(), gf(5)).unwrap();
        assert!(matches!(radical_bruteforce(&alg), Err(CcError::BruteForceTooLarge { .. })));
    }
}
