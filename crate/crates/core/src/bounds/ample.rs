use std::fmt;

use num_bigint::BigUint;

use super::{BoundError, H1Vanishing, Hypothesis, ThreefoldInvariants};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ampleness {
    Ample,
    NotAmple,
    HypothesesUnmet,
}

impl fmt::Display for Ampleness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ampleness::Ample => "ample",
            Ampleness::NotAmple => "not_ample",
            Ampleness::HypothesesUnmet => "hypotheses_unmet",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmplenessReport {
    pub verdict: Ampleness,
    /// `d^3 H^3`, the top self-intersection of `dH`.
    pub volume: BigUint,
    pub k: u64,
    pub hypotheses: Vec<Hypothesis>,
}

/// Ampleness of `dH - E_1 - ... - E_k` on the blow-up of `Y` at `k` very
/// general points, for a subcanonical `Y` with `Pic(Y) = Z·H`.
///
/// Under the hypotheses the class is ample exactly when `d^3 H^3 > k`.
pub fn blowup_ampleness(
    inv: &ThreefoldInvariants,
    d: i64,
    k: u64,
    h1: H1Vanishing,
) -> Result<AmplenessReport, BoundError> {
    if inv.is_p3 {
        return Err(BoundError::OutOfDomain("P^3 is out of scope for these bounds".into()));
    }
    if !inv.pic_is_z {
        return Err(BoundError::OutOfDomain(format!("{} does not have Picard group Z", inv.name)));
    }
    let e = inv.subcanonical_e.ok_or_else(|| BoundError::MissingField {
        name: inv.name.clone(),
        field: "e",
    })?;
    let h3 = inv.h3.ok_or_else(|| BoundError::MissingField {
        name: inv.name.clone(),
        field: "H3",
    })?;
    if d < 1 {
        return Err(BoundError::DegreeTooSmall { d, min: 1 });
    }
    let hypotheses = vec![
        Hypothesis::new(format!("d >= 7 + e = {}", 7 + e), d >= 7 + e),
        Hypothesis::new(
            format!("h1 known zero or d >= 3e + 13 = {}", 3 * e + 13),
            h1 == H1Vanishing::KnownZero || d >= 3 * e + 13,
        ),
    ];
    let volume = BigUint::from(d as u64).pow(3) * BigUint::from(h3);
    let verdict = if hypotheses.iter().any(|h| !h.passed) {
        Ampleness::HypothesesUnmet
    } else if volume > BigUint::from(k) {
        Ampleness::Ample
    } else {
        Ampleness::NotAmple
    };
    Ok(AmplenessReport {
        verdict,
        volume,
        k,
        hypotheses,
    })
}
