mod common;

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{is_valid_sequence, Pascal};
use explicit_nl::bounds::{
    contradiction_trace, nl_codim_floor, BoundStatus, BundleSpec, H1Vanishing, ThreefoldInvariants, Variant,
};
use explicit_nl::catalog::{parse_catalog, Catalog, CatalogRecord};
use explicit_nl::graded::{
    check_macaulay_gotzmann, random_subspace, restrict_to_hyperplane, section_dim, RingContext, SplitSheaf,
    SubspaceFamily,
};
use explicit_nl::macaulay::{lower_macaulay, macaulay_rep, upper_macaulay};

fn pascal() -> &'static Pascal {
    static TABLE: std::sync::OnceLock<Pascal> = std::sync::OnceLock::new();
    TABLE.get_or_init(|| Pascal::new(1200))
}

fn invariants() -> impl Strategy<Value = ThreefoldInvariants> {
    (any::<bool>(), -3i64..=3, 1i64..=6).prop_map(|(bundle, a, b)| {
        let (alpha, a_adj) = if bundle { (4, 4) } else { (a.max(1), a) };
        ThreefoldInvariants {
            name: "generated".into(),
            alpha,
            beta: alpha + b - a_adj,
            a_adj,
            b_adj: b,
            subcanonical_e: None,
            h3: None,
            pic_is_z: false,
            is_linear_p2_bundle: bundle,
            is_quadric: false,
            is_p3: false,
        }
    })
}

fn variant() -> impl Strategy<Value = Variant> {
    prop_oneof![Just(Variant::MinusDRegular), Just(Variant::Adjoint)]
}

proptest! {
    #[test]
    fn decomposition_reconstructs_big_values(hi in any::<u64>(), lo in any::<u64>(), d in 1u32..40) {
        let c = (BigUint::from(hi) << 64u32) + BigUint::from(lo);
        let rep = macaulay_rep(c.clone(), d).unwrap();
        prop_assert_eq!(rep.value(), c.clone());
        prop_assert!(rep.ks().windows(2).all(|w| w[0] > w[1]));
        prop_assert!(rep.upper() >= c);
        prop_assert!(rep.lower() <= c);
    }

    #[test]
    fn bounds_match_pascal_oracle(c in 0u64..500_000, d in 2u32..12) {
        let ks = macaulay_rep(c, d).unwrap().ks_u64().unwrap();
        prop_assert!(is_valid_sequence(&ks, d));
        prop_assert_eq!(pascal().value(&ks, d), c);
        prop_assert_eq!(upper_macaulay(c, d).unwrap(), BigUint::from(pascal().upper(&ks, d)));
        prop_assert_eq!(lower_macaulay(c, d).unwrap(), BigUint::from(pascal().lower(&ks, d)));
    }

    #[test]
    fn upper_bound_is_monotone(c in 0u64..100_000, step in 0u64..1000, d in 1u32..10) {
        prop_assert!(upper_macaulay(c, d).unwrap() <= upper_macaulay(c + step, d).unwrap());
        prop_assert!(lower_macaulay(c, d).unwrap() <= lower_macaulay(c + step, d).unwrap());
    }

    #[test]
    fn degree_one_bounds(c in 0u64..1_000_000) {
        prop_assert_eq!(upper_macaulay(c, 1).unwrap(), BigUint::from(c * (c + 1) / 2));
        prop_assert_eq!(lower_macaulay(c, 1).unwrap(), BigUint::from(c.saturating_sub(1)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_subspaces_obey_growth_and_restriction(
        seed in any::<u64>(),
        n in 1usize..=3,
        twists in prop::collection::vec(0i64..=2, 1..=3),
        d in 1i64..=3,
    ) {
        let ctx = RingContext::new(n, 101).unwrap();
        let sheaf = SplitSheaf::new(twists).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let family = SubspaceFamily::sample(section_dim(&sheaf, d, &ctx), &mut rng);
        let v = random_subspace(ctx, sheaf, d, family, &mut rng);
        let growth = check_macaulay_gotzmann(&v).unwrap();
        prop_assert!(growth.holds, "{:?}", growth);
        let r = restrict_to_hyperplane(&v, seed).unwrap();
        prop_assert!(r.additivity_holds);
        prop_assert!(r.restriction_bound_holds);
        prop_assert_eq!(v.codim(), r.v_h.codim() + r.v_preimage.codim());
    }

    #[test]
    fn floors_are_confirmed_by_their_trace(inv in invariants(), variant in variant(), d in 1i64..200, h1 in any::<bool>()) {
        inv.validate().unwrap();
        let h1 = if h1 { H1Vanishing::KnownZero } else { H1Vanishing::Unknown };
        let spec = BundleSpec::new(variant, d, h1).unwrap();
        let result = nl_codim_floor(&inv, &spec);
        prop_assert_eq!(result.status == BoundStatus::Floor, result.failed_hypotheses().next().is_none());
        if let Some(f) = result.floor_value {
            for c in [0, f - 1] {
                if c >= 0 && c < f {
                    let trace = contradiction_trace(&inv, &spec, c as u64).unwrap();
                    prop_assert!(trace.contradiction, "{:?}", trace.steps);
                }
            }
        }
    }

    #[test]
    fn catalogs_round_trip(entries in prop::collection::vec((invariants(), "[a-z ]{0,20}"), 1..6)) {
        let records = entries
            .into_iter()
            .enumerate()
            .map(|(i, (mut inv, note))| {
                inv.name = format!("entry-{i}");
                CatalogRecord::new(inv, note.trim().to_string())
            })
            .collect();
        let catalog = Catalog::new(records).unwrap();
        let text = catalog.to_text();
        let reparsed = parse_catalog(&text).unwrap();
        prop_assert_eq!(&reparsed, &catalog);
        prop_assert_eq!(reparsed.to_text(), text);
    }
}
