use explicit_nl::bounds::{
    contradiction_trace, derive_subcanonical_invariants, nl_codim_floor, slack_inequality, threshold_value,
    BoundStatus, Branch, BundleSpec, H1Vanishing, ThreefoldInvariants, ThresholdKind, Variant,
};
use explicit_nl::catalog::default_catalog;

fn synthetic(bundle: bool, a: i64, b: i64) -> ThreefoldInvariants {
    let (alpha, a_adj) = if bundle { (4, 4) } else { (a.max(1), a) };
    ThreefoldInvariants {
        name: format!("a{a}-b{b}"),
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
}

#[test]
fn every_hypothetical_codimension_below_the_floor_is_contradicted() {
    for bundle in [false, true] {
        for a in -3..=3 {
            for b in 1..=6 {
                let inv = synthetic(bundle, a, b);
                inv.validate().unwrap();
                for variant in [Variant::MinusDRegular, Variant::Adjoint] {
                    for d in 1..=150 {
                        let spec = BundleSpec::new(variant, d, H1Vanishing::KnownZero).unwrap();
                        let Some(f) = nl_codim_floor(&inv, &spec).floor_value else { continue };
                        for c in 0..f.max(0) as u64 {
                            let t = contradiction_trace(&inv, &spec, c).unwrap();
                            assert!(t.contradiction, "{} {variant} d={d} c={c}: {:?}", inv.name, t.steps);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn branch_selection_is_total_and_labelled() {
    let catalog = default_catalog();
    for inv in catalog.entries() {
        for variant in [Variant::MinusDRegular, Variant::Adjoint] {
            for d in 1..=60 {
                let r = nl_codim_floor(inv, &BundleSpec::new(variant, d, H1Vanishing::Unknown).unwrap());
                assert!(!r.branch.label().is_empty());
                assert_ne!(r.status, BoundStatus::OutOfDomain);
                assert_eq!(r.floor_value.is_some(), r.status == BoundStatus::Floor);
                assert_eq!(r.status == BoundStatus::Floor, r.hypotheses.iter().all(|h| h.passed));
                if inv.is_quadric && variant == Variant::MinusDRegular {
                    assert_eq!(r.branch, Branch::Quadric);
                }
                if variant == Variant::Adjoint {
                    assert!(r.notes.iter().any(|n| n.contains("nef")));
                }
            }
        }
    }
}

#[test]
fn quadric_floor_starts_at_seven() {
    let quadric = default_catalog().get("quadric").unwrap().clone();
    for d in 1..=30 {
        let r = nl_codim_floor(&quadric, &BundleSpec::new(Variant::MinusDRegular, d, H1Vanishing::KnownZero).unwrap());
        if d >= 7 {
            assert_eq!(r.floor_value, Some(d - 5));
            assert!(r.notes.iter().any(|n| n.contains(&format!("{}", d - 2))));
        } else {
            assert_eq!(r.status, BoundStatus::NoBound);
        }
    }
}

#[test]
fn sextic_needs_the_beta_threshold() {
    // e = 1 gives beta = 2, so the regular variant needs d >= 14.
    let sextic = default_catalog().get("sextic").unwrap().clone();
    assert_eq!(derive_subcanonical_invariants(1), (sextic.alpha, sextic.beta, sextic.a_adj, sextic.b_adj));
    let at = |d| nl_codim_floor(&sextic, &BundleSpec::new(Variant::MinusDRegular, d, H1Vanishing::KnownZero).unwrap());
    assert_eq!(at(13).status, BoundStatus::NoBound);
    assert_eq!(at(14).floor_value, Some(14 - 5 + 1 - 4));
}

#[test]
fn adjoint_threshold_slack_example() {
    // b = 2 at the general threshold d = 12.
    let inv = synthetic(false, 1, 2);
    let d = threshold_value(ThresholdKind::AdjointGeneral, 2).unwrap();
    assert_eq!(d, 12);
    let spec = BundleSpec::new(Variant::Adjoint, d, H1Vanishing::KnownZero).unwrap();
    let slack = slack_inequality(&inv, &spec).unwrap();
    assert_eq!(slack.e, 2);
    assert!(slack.holds, "{slack:?}");
}
