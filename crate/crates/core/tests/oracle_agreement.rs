use num_bigint::BigInt;
use proptest::prelude::*;

use qmc_core::gfengine::{counts_via_gf, GfKind};
use qmc_core::oracle::{census, classify, conjugacy_class_count, Census, FqMatrix, OracleConfig, Predicate};
use qmc_core::qcount;
use qmc_core::{FieldSpec, PrimePower};

fn pp(q: u64) -> PrimePower {
    PrimePower::new(q).unwrap()
}

fn field(q: u64) -> FieldSpec {
    FieldSpec::of_order(pp(q)).unwrap()
}

fn check(c: &Census, pred: Predicate, expected: &BigInt, ctx: &str) {
    assert_eq!(&BigInt::from(c.count(pred)), expected, "{ctx}: {pred:?}");
}

fn gf(kind: GfKind, q: u64, n: usize) -> BigInt {
    counts_via_gf(kind, pp(q), n).unwrap()[n].clone()
}

#[test]
fn census_matches_formulas_and_generating_functions() {
    let cfg = OracleConfig {
        jobs: 4,
        ..OracleConfig::default()
    };
    for (q, max_n) in [(2u64, 4usize), (3, 2), (4, 2)] {
        let f = field(q);
        let p = f.characteristic();
        for n in 1..=max_n {
            let c = census(&f, n, &cfg).unwrap();
            let ctx = format!("q={q} n={n}");
            check(&c, Predicate::All, &qcount::all_count(pp(q), n), &ctx);
            check(&c, Predicate::Invertible, &qcount::gamma(pp(q), n), &ctx);
            check(&c, Predicate::Nilpotent, &qcount::nilpotent_count(pp(q), n), &ctx);
            check(&c, Predicate::Projection, &qcount::projection_count(pp(q), n), &ctx);
            check(&c, Predicate::Diagonalizable, &qcount::diagonalizable_count(pp(q), n), &ctx);
            check(&c, Predicate::LinearDerangement, &qcount::linear_derangement_recursive(pp(q), n), &ctx);
            check(&c, Predicate::ProjectiveDerangement, &gf(GfKind::ProjectiveDerangement, q, n), &ctx);
            check(&c, Predicate::Cyclic, &gf(GfKind::Cyclic, q, n), &ctx);
            check(&c, Predicate::Semisimple, &gf(GfKind::Semisimple, q, n), &ctx);
            check(&c, Predicate::Separable, &gf(GfKind::Separable, q, n), &ctx);
            for k in 0..=n {
                check(&c, Predicate::Rank(k), &qcount::rank_count(pp(q), n, n, k), &ctx);
            }
            for k in 2..=6u64 {
                if k % p != 0 {
                    check(&c, Predicate::PowerIdentity(k), &gf(GfKind::PowerIdentity(k), q, n), &ctx);
                } else if k == 2 {
                    let inv = qcount::involution_count_char2(pp(q), n).unwrap();
                    check(&c, Predicate::PowerIdentity(2), &inv, &ctx);
                }
            }
        }
    }
}

#[test]
fn involutions_biject_with_projections_over_f3() {
    let f3 = field(3);
    for n in 1..=2 {
        let c = census(&f3, n, &OracleConfig::default()).unwrap();
        assert_eq!(c.count(Predicate::PowerIdentity(2)), c.count(Predicate::Projection));
    }
}

#[test]
fn orbit_counts_match_class_generating_functions() {
    let cfg = OracleConfig::default();
    for (q, max_n) in [(2u64, 3usize), (3, 2)] {
        let f = field(q);
        let all = counts_via_gf(GfKind::ConjclassesAll, pp(q), max_n).unwrap();
        let gl = counts_via_gf(GfKind::ConjclassesGl, pp(q), max_n).unwrap();
        for n in 1..=max_n {
            assert_eq!(BigInt::from(conjugacy_class_count(&f, n, false, &cfg).unwrap()), all[n]);
            assert_eq!(BigInt::from(conjugacy_class_count(&f, n, true, &cfg).unwrap()), gl[n]);
        }
    }
}

fn arb_matrix() -> impl Strategy<Value = (u64, usize, Vec<u8>)> {
    (prop::sample::select(vec![2u64, 3, 4, 5]), 1usize..=4).prop_flat_map(|(q, n)| {
        (Just(q), Just(n), prop::collection::vec(0..q as u8, n * n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn predicates_are_consistent((q, n, entries) in arb_matrix()) {
        let f = field(q);
        let a = FqMatrix::new(&f, n, entries);
        let c = classify(&a);
        if c.projection { prop_assert!(c.diagonalizable); }
        if c.diagonalizable { prop_assert!(c.semisimple); }
        prop_assert_eq!(c.separable, c.cyclic && c.semisimple);
        prop_assert!(!(c.nilpotent && c.invertible));
        if c.linear_derangement { prop_assert!(c.invertible); }
        if c.projective_derangement { prop_assert!(c.invertible); }
        prop_assert_eq!(c.invertible, c.rank == n);
        // A^q = A iff the minimal polynomial divides z^q - z
        let mut zq_minus_z = vec![0u8; q as usize + 1];
        zq_minus_z[q as usize] = 1;
        zq_minus_z[1] = f.neg(1);
        let target = qmc_core::FqPoly::new(zq_minus_z);
        prop_assert_eq!(c.diagonalizable, target.rem(&a.min_poly(), &f).is_zero());
    }
}
