use proptest::prelude::*;

use srd_modular::ccalgebra::{
    build_cc, fp_algebra_from_sc, quiver, radical, radical_bruteforce, radical_subspace, rank3_algebra,
    structure_constants, wedderburn, FpAlgebra, StructureConstants,
};
use srd_modular::exactla::{MatZ, PrimeModulus, Subspace};
use srd_modular::incidence::{check_srd, gen_doily, gen_grid, point_graph, srg_params_of, IncidenceStructure};
use srd_modular::pgtheory::{pg_spectrum, symbolic_radical, PgParams};

fn gf(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

fn designs() -> Vec<IncidenceStructure> {
    let mut v = vec![gen_doily()];
    v.extend((2..=5).map(|n| gen_grid(n).unwrap()));
    v
}

fn design_algebra(d: &IncidenceStructure, p: u64) -> FpAlgebra {
    let cc = build_cc(d, &check_srd(d).unwrap());
    fp_algebra_from_sc(&structure_constants(&cc).unwrap(), gf(p)).unwrap()
}

#[test]
fn structure_constants_reproduce_products() {
    for d in designs() {
        let cc = build_cc(&d, &check_srd(&d).unwrap());
        assert!(cc.invariants_hold());
        let sc = structure_constants(&cc).unwrap();
        for i in 1..=10 {
            for j in 1..=10 {
                let n = d.n1() + d.n2();
                let combo = (1..=10).fold(MatZ::zeros(n, n), |acc, k| acc.add(&cc.sigma(k).scale(sc.get(i, j, k))));
                assert_eq!(cc.sigma(i).mul(cc.sigma(j)), combo);
            }
        }
    }
}

#[test]
fn rank3_table_matches_extracted_products() {
    for d in designs() {
        let g = point_graph(&d, &check_srd(&d).unwrap());
        let sc = StructureConstants::rank3(&srg_params_of(&g).unwrap());
        let n = g.vertex_count();
        let a = g.adjacency_matrix();
        let mats = [MatZ::identity(n), a.clone(), MatZ::all_ones(n, n).sub(&MatZ::identity(n)).sub(&a)];
        for i in 0..3 {
            for j in 0..3 {
                let combo = (0..3).fold(MatZ::zeros(n, n), |acc, k| acc.add(&mats[k].scale(sc.get(i + 1, j + 1, k + 1))));
                assert_eq!(mats[i].mul(&mats[j]), combo);
            }
        }
    }
}

#[test]
fn symbolic_radical_matches_computed() {
    for d in designs() {
        let params = check_srd(&d).unwrap();
        let pg = PgParams::from_srd(&params).unwrap();
        let sp = pg_spectrum(&pg).unwrap();
        let g = point_graph(&d, &params);
        for p in [2u64, 3, 5, 7] {
            let f = gf(p);
            let predicted = symbolic_radical(&pg, f).unwrap();
            let rad = radical_subspace(&rank3_algebra(&g, f).unwrap());
            assert_eq!(rad.dim(), predicted.dim, "{} points, p = {}", d.n1(), p);
            let gens = Subspace::span(
                f,
                3,
                predicted
                    .generators
                    .iter()
                    .map(|g| g.coordinates(&sp).iter().map(|&c| f.reduce(c)).collect()),
            );
            assert!(rad.contains_subspace(&gens));
            if gens.dim() == predicted.dim {
                assert_eq!(rad, gens);
            }
        }
    }
}

#[test]
fn radical_reports_are_certified() {
    for d in designs() {
        for p in [2u64, 3, 5] {
            let alg = design_algebra(&d, p);
            let rep = radical(&alg);
            assert!(rep.certificate.holds());
            assert!(rep.power_dims.windows(2).all(|w| w[0] > w[1]));
            let w = wedderburn(&alg).unwrap();
            assert_eq!(w.total_dim + rep.dim, 10);
            if p == 2 {
                assert!((1..=4).contains(&w.components.len()));
            }
            let q = quiver(&alg).unwrap();
            assert!(q.checks.hold(10), "{} points, p = {}", d.n1(), p);
        }
    }
}

#[test]
fn corner_radical_identity_on_both_fibers() {
    use srd_modular::ccalgebra::{corner_algebra, Fiber};
    for d in designs() {
        let alg = design_algebra(&d, 2);
        let rad = radical_subspace(&alg);
        for (fiber, idx) in [(Fiber::Point, 0), (Fiber::Block, 3)] {
            let e = alg.basis_vector(idx);
            let corner = corner_algebra(&alg, fiber).unwrap();
            let lifted = corner.to_parent(&radical_subspace(&corner)).unwrap();
            assert_eq!(lifted, alg.corner_space(&e, &e, &rad));
        }
    }
}

fn random_commutative_table() -> impl Strategy<Value = (u64, Vec<u64>)> {
    prop::sample::select(vec![2u64, 3, 5])
        .prop_flat_map(|p| (Just(p), prop::collection::vec(0..p, 4)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Quotients `F_p[x] / (m(x))` with random monic cubic `m`: both radical
    /// algorithms agree and the result is certified.
    #[test]
    fn truncated_polynomial_algebras((p, coeffs) in random_commutative_table()) {
        let f = gf(p);
        // basis 1, x, x^2 with x^3 = -(c0 + c1 x + c2 x^2)
        let c = [coeffs[0], coeffs[1], coeffs[2]];
        let reduce = |v: Vec<u64>| -> Vec<u64> {
            let mut v = v;
            while v.len() > 3 {
                let top = v.pop().unwrap();
                let k = v.len() - 3;
                for i in 0..3 {
                    v[k + i] = (v[k + i] + (p - c[i]) * top) % p;
                }
            }
            v
        };
        let mut table = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                let mut v = vec![0u64; i + j + 1];
                v[i + j] = 1;
                let mut r = reduce(v);
                r.resize(3, 0);
                table.push(r);
            }
        }
        let alg = FpAlgebra::new(f, vec!["1".into(), "x".into(), "x2".into()], table, vec![1, 0, 0]).unwrap();
        let rep = radical(&alg);
        prop_assert!(rep.certificate.holds());
        prop_assert_eq!(&rep.subspace, &radical_bruteforce(&alg).unwrap());
        let w = wedderburn(&alg).unwrap();
        prop_assert_eq!(w.total_dim + rep.dim, 3);
        prop_assert!(w.components.iter().all(|c| c.n == 1));
    }
}
