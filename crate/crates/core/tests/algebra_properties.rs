use dynheights_core::algebra::{
    disc_iterate, galois_order_bounds, group_closure, stability_certificate, sweep_pair_generated,
    verify_abelian_transitive_lemmas, Permutation, StabilityVerdict,
};
use dynheights_core::{BigInt, BigRational};
use proptest::prelude::*;

#[test]
fn lemmas_hold_for_pair_generated_subgroups_up_to_six_points() {
    for n in 1..=6 {
        let r = sweep_pair_generated(n, n == 6).unwrap();
        assert!(r.violations.is_empty(), "n={n}: {:?}", r.violations);
        assert!(r.abelian_transitive >= 1);
    }
}

#[test]
fn eight_point_counterexample_shape() {
    let gens = ["(1 5 3 7)(2 6 4 8)", "(1 2)(3 4)(5 6)(7 8)"]
        .map(|s| Permutation::parse_cycles(8, s).unwrap());
    let r = verify_abelian_transitive_lemmas(&group_closure(8, &gens).unwrap());
    assert!(r.abelian && r.transitive && r.in_alternating && !r.cyclic);
    assert_eq!(r.order, 8);
}

#[test]
fn bounds_are_ordered() {
    for d in 2..=5 {
        for n in 1..=6 {
            let (lo, hi) = galois_order_bounds(d, n).unwrap();
            assert!(lo <= hi);
        }
    }
}

#[test]
fn stability_families_across_residues() {
    let mut certified = 0;
    for a in -50i64..=50 {
        let alpha = BigInt::from(a);
        let r = a.rem_euclid(4);
        for (c, classes) in [(0, [2, 3]), (-2, [0, 1]), (-1, [1, 2])] {
            let v = stability_certificate(&BigInt::from(c), &alpha);
            assert_eq!(v.is_certified(), classes.contains(&r), "c={c} alpha={a}");
            certified += v.is_certified() as usize;
        }
        for p in [2i64, 3, 5, 7, 11, 13, 47] {
            let v = stability_certificate(&BigInt::from(p), &alpha);
            assert_eq!(v.is_certified(), a == 0, "c={p} alpha={a}");
        }
    }
    assert!(certified > 100);
    assert_eq!(
        stability_certificate(&BigInt::from(9), &BigInt::from(0)),
        StabilityVerdict::Unknown
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn basilica_family_discriminant(num in -1_000_000i64..1_000_000, den in 1i64..10_000) {
        let alpha = BigRational::new(num.into(), den.into());
        let one = BigRational::from_integer(1.into());
        let d = disc_iterate(&one, &BigRational::from_integer(0.into()), &(-(&one + &alpha)), 1).unwrap();
        prop_assert_eq!(d, BigRational::from_integer(4.into()) * (one + alpha));
    }
}
