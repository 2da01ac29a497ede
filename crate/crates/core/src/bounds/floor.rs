use std::fmt;

use super::{
    BoundError, BoundResult, BoundStatus, BundleSpec, H1Vanishing, Hypothesis,
    ThreefoldInvariants, Variant,
};

/// `(alpha, beta, a, b)` for `Pic(Y) = Z·H`, `K_Y = eH`.
///
/// `(e + t)H` is very ample iff `e + t >= 1`, and `mH` is nef iff `m >= 0`.
pub fn derive_subcanonical_invariants(e: i64) -> (i64, i64, i64, i64) {
    let a_adj = 1 - e;
    let alpha = a_adj.max(1);
    let beta = alpha + e;
    let b_adj = a_adj + e;
    (alpha, beta, a_adj, b_adj)
}

/// `floor((d + 3 - a) / b) - 4`.
pub fn n_of(d: i64, a: i64, b: i64) -> i64 {
    assert!(b >= 1, "n_of needs b >= 1");
    (d + 3 - a).div_euclid(b) - 4
}

/// Either the vanishing of `H^1(Ω^2_Y ⊗ L)` is known, or `d` is large enough
/// for it to follow from Griffiths vanishing.
pub fn vanishing_hypothesis_met(inv: &ThreefoldInvariants, spec: &BundleSpec) -> bool {
    spec.h1_vanishing == H1Vanishing::KnownZero || spec.d >= vanishing_degree(inv, spec.variant)
}

fn vanishing_degree(inv: &ThreefoldInvariants, variant: Variant) -> i64 {
    match variant {
        Variant::MinusDRegular => 3 * inv.beta - 3 * inv.alpha + 13,
        Variant::Adjoint => 2 * inv.b_adj - 2 * inv.a_adj + 13,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThresholdKind {
    /// `beta^2 (beta + 5) / 2`, for `(-d)`-regular bundles.
    Regular,
    /// `b (b^2 + 7b - 6) / 2`, adjoint bundles away from linear P^2-bundles.
    AdjointGeneral,
    /// `b (b - 1)(b + 8) / 2`, adjoint bundles on linear P^2-bundles.
    AdjointP2Bundle,
}

/// Minimal `d` for the `beta >= 2` / `b >= 2` branches.
pub fn threshold_value(kind: ThresholdKind, b: i64) -> Result<i64, BoundError> {
    if b < 2 {
        return Err(BoundError::ThresholdArgument(b));
    }
    // Each numerator is even: b^2(b+5) and b(b-1)(b+8) always, and
    // b(b^2+7b-6) ≡ b^2(b+1) (mod 2).
    Ok(match kind {
        ThresholdKind::Regular => b * b * (b + 5) / 2,
        ThresholdKind::AdjointGeneral => b * (b * b + 7 * b - 6) / 2,
        ThresholdKind::AdjointP2Bundle => b * (b - 1) * (b + 8) / 2,
    })
}

/// The case distinction selecting a codimension formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    RegularGeneralLarge,
    RegularGeneralUnit,
    RegularBundleLarge,
    RegularBundleUnit,
    AdjointGeneralLarge,
    AdjointGeneralUnit,
    AdjointBundleLarge,
    AdjointBundleUnit,
    /// The quadric threefold with a `(-d)`-regular bundle.
    Quadric,
    /// `P^3` is outside the scope of these bounds.
    ProjectiveSpace,
}

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::RegularGeneralLarge => "regular.general.beta>=2",
            Branch::RegularGeneralUnit => "regular.general.beta=1",
            Branch::RegularBundleLarge => "regular.p2-bundle.beta>=2",
            Branch::RegularBundleUnit => "regular.p2-bundle.beta=1",
            Branch::AdjointGeneralLarge => "adjoint.general.b>=2",
            Branch::AdjointGeneralUnit => "adjoint.general.b=1",
            Branch::AdjointBundleLarge => "adjoint.p2-bundle.b>=2",
            Branch::AdjointBundleUnit => "adjoint.p2-bundle.b=1",
            Branch::Quadric => "quadric",
            Branch::ProjectiveSpace => "excluded.P3",
        }
    }

    pub fn is_bundle(self) -> bool {
        matches!(
            self,
            Branch::RegularBundleLarge
                | Branch::RegularBundleUnit
                | Branch::AdjointBundleLarge
                | Branch::AdjointBundleUnit
        )
    }

    /// Codimension floor of the branch at degree `d` (no hypotheses checked).
    pub fn formula(self, inv: &ThreefoldInvariants, d: i64) -> Option<i64> {
        let (alpha, beta, b) = (inv.alpha, inv.beta, inv.b_adj);
        Some(match self {
            Branch::RegularGeneralLarge => d - 5 + alpha - 2 * beta,
            Branch::RegularGeneralUnit => d - 6 + alpha,
            Branch::RegularBundleLarge => d - 2 - 2 * beta,
            Branch::RegularBundleUnit => d - 3,
            Branch::AdjointGeneralLarge => d - 5 - b,
            Branch::AdjointGeneralUnit => d - 5,
            Branch::AdjointBundleLarge => d - 6 - b,
            Branch::AdjointBundleUnit => d - 6,
            Branch::Quadric => d - 5,
            Branch::ProjectiveSpace => return None,
        })
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Selects the branch for `(inv, spec)`, ignoring hypotheses.
pub(crate) fn select_branch(inv: &ThreefoldInvariants, variant: Variant) -> Branch {
    if inv.is_p3 {
        return Branch::ProjectiveSpace;
    }
    let bundle = inv.is_linear_p2_bundle;
    match variant {
        Variant::MinusDRegular if inv.is_quadric => Branch::Quadric,
        Variant::MinusDRegular => match (bundle, inv.beta >= 2) {
            (false, true) => Branch::RegularGeneralLarge,
            (false, false) => Branch::RegularGeneralUnit,
            (true, true) => Branch::RegularBundleLarge,
            (true, false) => Branch::RegularBundleUnit,
        },
        Variant::Adjoint => match (bundle, inv.b_adj >= 2) {
            (false, true) => Branch::AdjointGeneralLarge,
            (false, false) => Branch::AdjointGeneralUnit,
            (true, true) => Branch::AdjointBundleLarge,
            (true, false) => Branch::AdjointBundleUnit,
        },
    }
}

/// Lower bound on the codimension of any Noether-Lefschetz component of `|L|`.
pub fn nl_codim_floor(inv: &ThreefoldInvariants, spec: &BundleSpec) -> BoundResult {
    let branch = select_branch(inv, spec.variant);
    let d = spec.d;
    let mut notes = Vec::new();
    let mut hypotheses = vec![Hypothesis::new("Y is not P^3", !inv.is_p3)];

    if branch == Branch::ProjectiveSpace {
        return BoundResult {
            status: BoundStatus::OutOfDomain,
            floor_value: None,
            branch,
            hypotheses,
            n_value: 0,
            notes: vec!["P^3 is out of scope for these bounds".into()],
        };
    }

    if branch == Branch::Quadric {
        // H^1(Ω^2 ⊗ L) vanishes on the quadric for d >= 7 regardless of the flag.
        hypotheses.push(Hypothesis::new("quadric vanishing: d >= 7", d >= 7));
        notes.push(format!(
            "the beta = 1 regular formula d - 6 + alpha would give {}; only d - 5 is supported by the proof for the quadric",
            d - 2
        ));
    } else {
        let vanishing = match spec.variant {
            Variant::MinusDRegular => format!(
                "h1 known zero or d >= 3*beta - 3*alpha + 13 = {}",
                vanishing_degree(inv, spec.variant)
            ),
            Variant::Adjoint => format!(
                "h1 known zero or d >= 2*b - 2*a + 13 = {}",
                vanishing_degree(inv, spec.variant)
            ),
        };
        hypotheses.push(Hypothesis::new(vanishing, vanishing_hypothesis_met(inv, spec)));
        hypotheses.push(Hypothesis::new("d >= 4", d >= 4));
        let (kind, arg, symbol) = match branch {
            Branch::RegularGeneralLarge | Branch::RegularBundleLarge => {
                (Some(ThresholdKind::Regular), inv.beta, "beta^2(beta+5)/2")
            }
            Branch::AdjointGeneralLarge => (Some(ThresholdKind::AdjointGeneral), inv.b_adj, "b(b^2+7b-6)/2"),
            Branch::AdjointBundleLarge => (Some(ThresholdKind::AdjointP2Bundle), inv.b_adj, "b(b-1)(b+8)/2"),
            _ => (None, 0, ""),
        };
        if let Some(kind) = kind {
            let t = threshold_value(kind, arg).expect("large branches have argument >= 2");
            hypotheses.push(Hypothesis::new(format!("d >= {symbol} = {t}"), d >= t));
        }
        if spec.variant == Variant::Adjoint {
            notes.push("A is assumed nef (not checked)".into());
        }
    }

    let params = super::chain_parameters(inv, spec);
    let all_pass = hypotheses.iter().all(|h| h.passed);
    BoundResult {
        status: if all_pass { BoundStatus::Floor } else { BoundStatus::NoBound },
        floor_value: if all_pass { branch.formula(inv, d) } else { None },
        branch,
        hypotheses,
        n_value: params.n,
        notes,
    }
}

/// Codimension floor for a base-point-free system whose product with
/// `H^0(L(-3))` is not surjective.
pub fn ein_lazarsfeld_floor(inv: &ThreefoldInvariants, spec: &BundleSpec) -> Result<i64, BoundError> {
    if inv.is_p3 {
        return Err(BoundError::OutOfDomain("P^3 is out of scope for these bounds".into()));
    }
    if spec.d < 4 {
        return Err(BoundError::DegreeTooSmall { d: spec.d, min: 4 });
    }
    Ok(match spec.variant {
        Variant::MinusDRegular => spec.d - 5 + inv.alpha - inv.beta,
        Variant::Adjoint => spec.d - 5,
    })
}
