//! The Macaulay step behind each codimension floor, replayed numerically.
//!
//! If a component had codimension `c < F`, restricting to a general surface
//! and growing the ideal from degree `n` to `n + 1` would produce a space of
//! codimension at most `c^<n>`, below the floor guaranteed at that degree.

use num_bigint::BigUint;

use super::floor::{n_of, nl_codim_floor, select_branch};
use super::{BoundError, BoundStatus, BundleSpec, ThreefoldInvariants, Variant};
use crate::macaulay::{slack_sum, upper_macaulay};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainParameters {
    pub a: i64,
    pub b: i64,
    /// `3`, or `4` on linear P^2-bundles where `K_Y(4)` takes the place of `K_Y(3)`.
    pub shift: i64,
    /// `floor((d + shift - a) / b) - 4`.
    pub n: i64,
    /// Codimension floor for non-surjective multiplication maps at degree `n`.
    pub prop_floor: i64,
}

/// Parameters of the contradiction argument for `(inv, spec)`.
pub fn chain_parameters(inv: &ThreefoldInvariants, spec: &BundleSpec) -> ChainParameters {
    let (a, b) = match spec.variant {
        Variant::MinusDRegular => (inv.alpha, inv.beta),
        Variant::Adjoint => (inv.a_adj, inv.b_adj),
    };
    let base = match spec.variant {
        Variant::MinusDRegular => spec.d - 5 + inv.alpha - inv.beta,
        Variant::Adjoint => spec.d - 5,
    };
    let bundle = inv.is_linear_p2_bundle;
    let shift = if bundle { 4 } else { 3 };
    ChainParameters {
        a,
        b,
        shift,
        n: n_of(spec.d + shift - 3, a, b),
        prop_floor: if bundle { base - 1 } else { base },
    }
}

/// `F - 1 < sum_{i=0}^{e} (n + 1 - i)` with `e = prop_floor - F`, which makes
/// `c^<n> <= c + e <= prop_floor - 1` for every `c < F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlackInequality {
    pub e: i64,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

pub fn slack_inequality(inv: &ThreefoldInvariants, spec: &BundleSpec) -> Result<SlackInequality, BoundError> {
    let floor = reported_floor(inv, spec)?;
    let p = chain_parameters(inv, spec);
    let e = p.prop_floor - floor;
    let lhs = floor - 1;
    if p.n < 1 || e < 0 || e > p.n + 1 {
        return Ok(SlackInequality {
            e,
            lhs,
            rhs: 0,
            holds: false,
        });
    }
    let rhs = (e + 1) * (p.n + 1) - e * (e + 1) / 2;
    debug_assert_eq!(BigUint::from(rhs as u64), slack_sum(p.n as u64, e as u64));
    Ok(SlackInequality {
        e,
        lhs,
        rhs,
        holds: lhs < rhs,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContradictionTrace {
    pub c_hyp: u64,
    pub floor: i64,
    pub params: ChainParameters,
    pub slack: SlackInequality,
    /// `c_hyp^<n>`.
    pub grown: BigUint,
    pub contradiction: bool,
    /// Human-readable steps, one per line of the argument.
    pub steps: Vec<String>,
}

fn reported_floor(inv: &ThreefoldInvariants, spec: &BundleSpec) -> Result<i64, BoundError> {
    let result = nl_codim_floor(inv, spec);
    match result.status {
        BoundStatus::Floor => Ok(result.floor_value.expect("floor status carries a value")),
        BoundStatus::OutOfDomain => Err(BoundError::OutOfDomain(format!("{} is out of scope", inv.name))),
        BoundStatus::NoBound => Err(BoundError::NoFloor),
    }
}

/// Replays the argument excluding a component of codimension `c_hyp`.
pub fn contradiction_trace(
    inv: &ThreefoldInvariants,
    spec: &BundleSpec,
    c_hyp: u64,
) -> Result<ContradictionTrace, BoundError> {
    let floor = reported_floor(inv, spec)?;
    if (c_hyp as i128) >= floor as i128 {
        return Err(BoundError::NothingToContradict { c: c_hyp, floor });
    }
    let params = chain_parameters(inv, spec);
    let slack = slack_inequality(inv, spec)?;
    let branch = select_branch(inv, spec.variant);
    let mut steps = vec![
        format!("branch {branch}: floor F = {floor}, suppose codim = {c_hyp} < F"),
        format!(
            "n = floor((d + {} - a) / b) - 4 = floor(({} + {} - {}) / {}) - 4 = {}",
            params.shift, spec.d, params.shift, params.a, params.b, params.n
        ),
    ];
    let grown = if c_hyp == 0 {
        BigUint::ZERO
    } else if params.n >= 1 {
        upper_macaulay(c_hyp, params.n as u32)?
    } else {
        steps.push(format!("n = {} < 1: the growth step is unavailable", params.n));
        return Ok(ContradictionTrace {
            c_hyp,
            floor,
            params,
            slack,
            grown: BigUint::from(c_hyp),
            contradiction: false,
            steps,
        });
    };
    steps.push(format!(
        "slack: F - 1 = {} < {} (e = {}): {}",
        slack.lhs, slack.rhs, slack.e, slack.holds
    ));
    steps.push(format!("growth: {c_hyp}^<{}> = {grown}", params.n));
    let target = params.prop_floor - 1;
    let contradiction = target >= 0 && grown <= BigUint::from(target as u64);
    steps.push(format!(
        "non-surjectivity forces codim >= {}, but growth gives <= {grown}: {}",
        params.prop_floor,
        if contradiction { "contradiction" } else { "no contradiction" }
    ));
    Ok(ContradictionTrace {
        c_hyp,
        floor,
        params,
        slack,
        grown,
        contradiction,
        steps,
    })
}
