use num_rational::BigRational;
use proptest::prelude::*;

use srd_modular::exactla::{MatF, MatQ, PolyQ, PrimeModulus, Rationals, Subspace};
use srd_modular::incidence::{check_srd, gen_doily, point_graph};

fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7])
}

fn matrix_over(p: u64) -> impl Strategy<Value = MatF> {
    (1usize..7, 1usize..7).prop_flat_map(move |(r, c)| {
        prop::collection::vec(0..p, r * c).prop_map(move |data| {
            let f = PrimeModulus::new(p).unwrap();
            MatF::from_fn(f, r, c, |i, j| data[i * c + j])
        })
    })
}

fn any_matrix() -> impl Strategy<Value = MatF> {
    small_prime().prop_flat_map(matrix_over)
}

fn square_matrix() -> impl Strategy<Value = MatF> {
    (small_prime(), 1usize..6).prop_flat_map(|(p, n)| {
        prop::collection::vec(0..p, n * n).prop_map(move |data| {
            let f = PrimeModulus::new(p).unwrap();
            MatF::from_fn(f, n, n, |i, j| data[i * n + j])
        })
    })
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in any_matrix()) {
        let once = m.rref();
        let twice = once.matrix.rref();
        prop_assert_eq!(&once.matrix, &twice.matrix);
        prop_assert_eq!(once.rank, twice.rank);
        prop_assert_eq!(once.pivots, twice.pivots);
    }

    #[test]
    fn rank_nullity(m in any_matrix()) {
        let kernel = Subspace::nullspace(&m);
        prop_assert_eq!(m.rank() + kernel.dim(), m.cols());
        for v in kernel.basis() {
            prop_assert!(m.apply(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn transpose_preserves_rank(m in any_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn minpoly_annihilates(m in square_matrix()) {
        let mp = m.minpoly();
        prop_assert!(m.eval_poly(&mp).is_zero());
        prop_assert!(mp.degree().unwrap() <= m.rows());
    }

    #[test]
    fn spans_are_canonical(m in any_matrix(), seed in any::<u64>()) {
        let f = m.modulus();
        let rows = m.to_rows();
        let mut shuffled = rows.clone();
        let k = shuffled.len();
        shuffled.rotate_left((seed as usize) % k);
        // add a combination of existing rows, which cannot change the span
        let extra: Vec<u64> = (0..m.cols()).map(|j| rows.iter().fold(0, |acc, r| (acc + r[j]) % f.get())).collect();
        shuffled.push(extra);
        let a = Subspace::span(f, m.cols(), rows);
        let b = Subspace::span(f, m.cols(), shuffled);
        prop_assert_eq!(a.dim(), m.rank());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn rational_ranks_agree(entries in prop::collection::vec(-4i64..5, 12)) {
        let m = MatQ::from_integers(3, 4, &entries);
        prop_assert_eq!(m.rank(), m.rank_fraction_free());
    }
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

#[test]
fn doily_adjacency_minpoly_over_rationals() {
    let d = gen_doily();
    let a = point_graph(&d, &check_srd(&d).unwrap()).adjacency_matrix().to_rational();
    let expected = PolyQ::from_roots(Rationals, &[q(6), q(1), q(-3)]);
    assert_eq!(a.minpoly(), expected);
}

#[test]
fn doily_adjacency_rank_mod_two() {
    let d = gen_doily();
    let f = PrimeModulus::new(2).unwrap();
    let a = point_graph(&d, &check_srd(&d).unwrap()).adjacency_matrix().to_gf(f);
    assert_eq!(a.rank(), 14);
    assert_eq!(Subspace::nullspace(&a), Subspace::span(f, 15, [vec![1; 15]]));
}
