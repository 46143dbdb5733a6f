use proptest::prelude::*;

use srd_modular::exactla::{is_prime, PrimeModulus};
use srd_modular::pgtheory::{
    bad_primes, classify_prime, frame_as, frame_from_spectrum, generic_prank, pg_spectrum, symbolic_radical,
    PgParams, PrimeCase,
};

fn params() -> impl Strategy<Value = PgParams> {
    (1i64..=8, 1i64..=8)
        .prop_flat_map(|(s, t)| (Just(s), Just(t), 1..=s.min(t)))
        .prop_map(|(s, t, a)| PgParams::new(s, t, a).unwrap())
}

fn prime() -> impl Strategy<Value = u64> {
    (2u64..60).prop_filter("prime", |&p| is_prime(p))
}

proptest! {
    #[test]
    fn trace_identities(pg in params()) {
        if let Ok(sp) = pg_spectrum(&pg) {
            prop_assert_eq!(1 + sp.f + sp.g, sp.v);
            prop_assert_eq!(sp.k + sp.f * sp.r + sp.g * sp.sprime, 0);
            prop_assert!(sp.srg().is_feasible());
        }
    }

    #[test]
    fn frame_forms_agree(pg in params()) {
        if let Ok(sp) = pg_spectrum(&pg) {
            let spectral = frame_from_spectrum(sp.v, sp.k, sp.f, sp.g).unwrap();
            prop_assert!(spectral.is_integer());
            prop_assert_eq!(*spectral.numer(), frame_as(&pg).unwrap());
        }
    }

    #[test]
    fn semisimple_case_iff_prime_avoids_frame(pg in params(), p in prime()) {
        if pg_spectrum(&pg).is_ok() {
            let f = PrimeModulus::new(p).unwrap();
            let case = classify_prime(&pg, f).unwrap();
            let frame = frame_as(&pg).unwrap();
            prop_assert_eq!(case == PrimeCase::SS, frame % p as i128 != 0);
            prop_assert_eq!(bad_primes(&pg).unwrap().contains(&p), case != PrimeCase::SS);
            prop_assert_eq!(symbolic_radical(&pg, f).unwrap().dim, match case {
                PrimeCase::SS => 0,
                PrimeCase::V | PrimeCase::R => 1,
                PrimeCase::VR => 2,
            });
        }
    }

    #[test]
    fn generic_prank_is_bounded(pg in params(), p in prime()) {
        if let Ok(sp) = pg_spectrum(&pg) {
            let r = generic_prank(&pg, PrimeModulus::new(p).unwrap()).unwrap();
            if let Some(rank) = r.predicted_rank() {
                prop_assert!(rank >= 1 && rank <= sp.v);
            }
        }
    }
}
