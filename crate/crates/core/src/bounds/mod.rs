//! Codimension floors for Noether-Lefschetz components on threefolds.

mod ample;
mod floor;
mod trace;

use std::fmt;

use thiserror::Error;

use crate::macaulay::MacaulayError;

pub use ample::{blowup_ampleness, Ampleness, AmplenessReport};
pub use floor::{
    derive_subcanonical_invariants, ein_lazarsfeld_floor, n_of, nl_codim_floor, threshold_value,
    vanishing_hypothesis_met, Branch, ThresholdKind,
};
pub use trace::{chain_parameters, contradiction_trace, slack_inequality, ChainParameters, ContradictionTrace, SlackInequality};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("invalid invariants for {name}: {reason}")]
    Invalid { name: String, reason: String },
    #[error("{0}")]
    OutOfDomain(String),
    #[error("d = {d} is below the required minimum {min}")]
    DegreeTooSmall { d: i64, min: i64 },
    #[error("threshold argument must be at least 2, got {0}")]
    ThresholdArgument(i64),
    #[error("record {name} is missing {field}")]
    MissingField { name: String, field: &'static str },
    #[error("no codimension floor is available for this configuration")]
    NoFloor,
    #[error("hypothetical codimension {c} is not below the floor {floor}")]
    NothingToContradict { c: u64, floor: i64 },
    #[error(transparent)]
    Macaulay(#[from] MacaulayError),
}

/// Numerical invariants of a polarized threefold `(Y, H)`.
///
/// `alpha`/`a_adj` are the minimal (positive, resp. arbitrary) twists making
/// `K_Y + tH` very ample; `beta`/`b_adj` the matching nef thresholds for
/// `(t - alpha)H - K_Y`, resp. `(t - a)H - K_Y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThreefoldInvariants {
    pub name: String,
    pub alpha: i64,
    pub beta: i64,
    pub a_adj: i64,
    pub b_adj: i64,
    /// `e` with `K_Y = eH`, when `Y` is subcanonical.
    pub subcanonical_e: Option<i64>,
    /// The degree `H^3`.
    pub h3: Option<u64>,
    pub pic_is_z: bool,
    pub is_linear_p2_bundle: bool,
    pub is_quadric: bool,
    pub is_p3: bool,
}

impl ThreefoldInvariants {
    /// Invariants of a subcanonical threefold with `Pic = Z·H` and `K_Y = eH`.
    pub fn subcanonical(name: impl Into<String>, e: i64, h3: Option<u64>) -> Self {
        let (alpha, beta, a_adj, b_adj) = derive_subcanonical_invariants(e);
        Self {
            name: name.into(),
            alpha,
            beta,
            a_adj,
            b_adj,
            subcanonical_e: Some(e),
            h3,
            pic_is_z: true,
            is_linear_p2_bundle: false,
            is_quadric: false,
            is_p3: false,
        }
    }

    pub fn validate(&self) -> Result<(), BoundError> {
        let fail = |reason: String| {
            Err(BoundError::Invalid {
                name: self.name.clone(),
                reason,
            })
        };
        if self.alpha < 1 {
            return fail(format!("alpha = {} must be >= 1", self.alpha));
        }
        if self.beta < 1 {
            return fail(format!("beta = {} must be >= 1", self.beta));
        }
        if self.b_adj < 1 {
            return fail(format!("b = {} must be >= 1", self.b_adj));
        }
        if self.alpha != self.a_adj.max(1) {
            return fail(format!(
                "alpha = {} must equal max(1, a) = {}",
                self.alpha,
                self.a_adj.max(1)
            ));
        }
        if self.beta - self.alpha != self.b_adj - self.a_adj {
            return fail(format!(
                "beta - alpha = {} must equal b - a = {}",
                self.beta - self.alpha,
                self.b_adj - self.a_adj
            ));
        }
        if self.is_quadric && self.is_linear_p2_bundle {
            return fail("a quadric is not a linear P^2-bundle".into());
        }
        if !self.is_p3 {
            if self.alpha > 4 || self.a_adj > 4 {
                return fail(format!(
                    "alpha = {}, a = {} must be <= 4 away from P^3",
                    self.alpha, self.a_adj
                ));
            }
            let special = self.is_linear_p2_bundle || self.is_quadric;
            if (self.alpha == 4 || self.a_adj == 4) && !special {
                return fail("alpha = 4 or a = 4 only for a linear P^2-bundle or the quadric".into());
            }
        }
        if let Some(e) = self.subcanonical_e {
            if e <= 0 && self.beta != 1 {
                return fail(format!("subcanonical with e = {e} <= 0 forces beta = 1"));
            }
        }
        if self.h3 == Some(0) {
            return fail("H^3 must be positive".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `L = M(d)` with `M` Castelnuovo-Mumford regular.
    MinusDRegular,
    /// `L = K_Y + dH + A` with `A` nef.
    Adjoint,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::MinusDRegular => "minus-d-regular",
            Variant::Adjoint => "adjoint",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum H1Vanishing {
    /// `H^1(Ω^2_Y ⊗ L) = 0` is known.
    KnownZero,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BundleSpec {
    pub variant: Variant,
    pub d: i64,
    pub h1_vanishing: H1Vanishing,
}

impl BundleSpec {
    pub fn new(variant: Variant, d: i64, h1_vanishing: H1Vanishing) -> Result<Self, BoundError> {
        if d < 1 {
            return Err(BoundError::DegreeTooSmall { d, min: 1 });
        }
        Ok(Self {
            variant,
            d,
            h1_vanishing,
        })
    }
}

/// A named check with its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: String,
    pub passed: bool,
}

impl Hypothesis {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Self {
            name: name.into(),
            passed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundStatus {
    Floor,
    NoBound,
    OutOfDomain,
}

impl fmt::Display for BoundStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundStatus::Floor => "floor",
            BoundStatus::NoBound => "no_bound",
            BoundStatus::OutOfDomain => "out_of_domain",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    pub status: BoundStatus,
    /// Present iff `status == Floor`.
    pub floor_value: Option<i64>,
    pub branch: Branch,
    pub hypotheses: Vec<Hypothesis>,
    /// The integer `n` feeding the Macaulay step of the proof chain.
    pub n_value: i64,
    /// Unchecked assumptions and caveats.
    pub notes: Vec<String>,
}

impl BoundResult {
    pub fn failed_hypotheses(&self) -> impl Iterator<Item = &Hypothesis> {
        self.hypotheses.iter().filter(|h| !h.passed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quadric() -> ThreefoldInvariants {
        ThreefoldInvariants {
            is_quadric: true,
            ..ThreefoldInvariants::subcanonical("quadric", -3, Some(2))
        }
    }

    #[test]
    fn subcanonical_invariants_validate() {
        for e in -3..=6 {
            let mut inv = ThreefoldInvariants::subcanonical(format!("e{e}"), e, None);
            inv.is_quadric = e == -3;
            inv.validate().unwrap();
        }
        quadric().validate().unwrap();
    }

    #[test]
    fn validation_failures_name_the_invariant() {
        let mut inv = quadric();
        inv.beta = 0;
        let err = inv.validate().unwrap_err().to_string();
        assert!(err.contains("beta"), "{err}");

        let mut inv = quadric();
        inv.is_quadric = false;
        assert!(inv.validate().unwrap_err().to_string().contains("alpha = 4"));

        let mut inv = quadric();
        inv.is_linear_p2_bundle = true;
        assert!(inv.validate().is_err());

        let mut inv = ThreefoldInvariants::subcanonical("x", 0, None);
        inv.beta = 2;
        inv.b_adj = 2;
        assert!(inv.validate().unwrap_err().to_string().contains("forces beta = 1"));

        let mut inv = ThreefoldInvariants::subcanonical("x", 0, None);
        inv.h3 = Some(0);
        assert!(inv.validate().is_err());
    }

    #[test]
    fn bundle_spec_rejects_nonpositive_degree() {
        assert!(BundleSpec::new(Variant::Adjoint, 0, H1Vanishing::Unknown).is_err());
        assert!(BundleSpec::new(Variant::Adjoint, 1, H1Vanishing::Unknown).is_ok());
    }
}
