//! Base-point-freeness certificates and middle exactness of the Koszul complex
//!
//! ```text
//! Λ^{p+1} V ⊗ S_{k-d}  ->  Λ^p V ⊗ S_k  ->  Λ^{p-1} V ⊗ S_{k+d}
//! ```
//!
//! for `V ⊂ S_d` and `p ∈ {0, 1}`.

use super::field::Matrix;
use super::monomial::{self, ProductTable};
use super::subspace::GradedSubspace;
use super::GradedError;

pub const DEFAULT_BUDGET: usize = 20_000;
pub const DEFAULT_T_MAX: u32 = 6;
/// Largest number of rational points scanned for a common zero.
pub const POINT_SCAN_LIMIT: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasePointVerdict {
    /// `V · S_t` is the whole of `S_{d+t}`.
    Free { t: u32 },
    /// A common zero with coordinates in `F_p`.
    NotFree { point: Vec<u32> },
    Inconclusive,
}

impl BasePointVerdict {
    pub fn is_free(&self) -> bool {
        matches!(self, BasePointVerdict::Free { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KoszulConfig {
    /// Cap on `rows * cols` for each differential.
    pub budget: usize,
    pub t_max: u32,
}

impl Default for KoszulConfig {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            t_max: DEFAULT_T_MAX,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulReport {
    pub exact: bool,
    /// `k >= p + d + codim V`.
    pub hypothesis_met: bool,
    /// Saturation degree at which base-point freeness was certified.
    pub certified_at: u32,
    pub incoming_rank: usize,
    pub outgoing_rank: usize,
    pub middle_dim: usize,
}

fn line_degree(v: &GradedSubspace) -> Result<i64, GradedError> {
    if !v.sheaf().is_line_bundle() {
        return Err(GradedError::NotLineBundle(v.sheaf().clone()));
    }
    Ok(v.degree() + v.sheaf().twists()[0])
}

/// Projective points of `P^N(F_p)`, normalised so the first non-zero coordinate is 1.
fn for_each_point(nvars: usize, p: u32, mut visit: impl FnMut(&[u32]) -> bool) {
    let mut point = vec![0u32; nvars];
    for lead in 0..nvars {
        point.iter_mut().for_each(|x| *x = 0);
        point[lead] = 1;
        let tail = nvars - lead - 1;
        let total = (p as u64).pow(tail as u32);
        for code in 0..total {
            let mut rest = code;
            for slot in point[lead + 1..].iter_mut() {
                *slot = (rest % u64::from(p)) as u32;
                rest /= u64::from(p);
            }
            if !visit(&point) {
                return;
            }
        }
    }
}

fn common_zero(v: &GradedSubspace, degree: i64) -> Option<Option<Vec<u32>>> {
    let ctx = v.context();
    let field = ctx.field();
    let p = field.modulus();
    let nvars = ctx.nvars();
    let points: u64 = (0..nvars as u32).map(|i| u64::from(p).pow(i)).sum();
    if points > POINT_SCAN_LIMIT as u64 {
        return None;
    }
    let monos = monomial::enumerate(nvars, degree);
    let mut values = vec![0u32; monos.len()];
    let mut found = None;
    for_each_point(nvars, p, |pt| {
        for (val, m) in values.iter_mut().zip(&monos) {
            *val = m
                .iter()
                .zip(pt)
                .fold(1u32, |acc, (&e, &x)| field.mul(acc, field.pow(x, u64::from(e))));
        }
        let vanishes = (0..v.dim()).all(|r| {
            v.basis()
                .row(r)
                .iter()
                .zip(&values)
                .fold(0u32, |acc, (&c, &x)| field.add(acc, field.mul(c, x)))
                == 0
        });
        if vanishes {
            found = Some(pt.to_vec());
        }
        !vanishes
    });
    Some(found)
}

/// Certifies base-point freeness by saturation (`V · S_t = S_{d+t}` for some
/// `t <= t_max`), or refutes it with an `F_p`-rational common zero.
pub fn is_basepoint_free(v: &GradedSubspace, t_max: u32) -> Result<BasePointVerdict, GradedError> {
    let degree = line_degree(v)?;
    let mut w = v.clone();
    for t in 1..=t_max {
        w = w.multiply(1);
        if w.is_full() {
            return Ok(BasePointVerdict::Free { t });
        }
    }
    Ok(match common_zero(v, degree) {
        Some(Some(point)) => BasePointVerdict::NotFree { point },
        _ => BasePointVerdict::Inconclusive,
    })
}

fn check_budget(rows: usize, cols: usize, budget: usize) -> Result<(), GradedError> {
    let needed = rows.saturating_mul(cols);
    if needed > budget {
        return Err(GradedError::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Writes `coef * v_row * x^g` into `out[offset..]`, where `v_row` lives in degree `d`.
fn add_product(
    out: &mut [u32],
    offset: usize,
    v_row: &[u32],
    g: usize,
    table: &ProductTable,
    negate: bool,
    field: super::PrimeField,
) {
    for (u, &c) in v_row.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let slot = &mut out[offset + table.product(u, g)];
        let c = if negate { field.neg(c) } else { c };
        *slot = field.add(*slot, c);
    }
}

/// Green's middle-exactness check for `p_index ∈ {0, 1}`.
pub fn koszul_middle_exact(
    v: &GradedSubspace,
    k: i64,
    p_index: u8,
    config: KoszulConfig,
) -> Result<KoszulReport, GradedError> {
    let d = line_degree(v)?;
    let certified_at = match is_basepoint_free(v, config.t_max)? {
        BasePointVerdict::Free { t } => t,
        _ => return Err(GradedError::NotCertifiedBasePointFree),
    };
    let ctx = v.context();
    let field = ctx.field();
    let nvars = ctx.nvars();
    let r = v.dim();
    let codim = v.codim() as i64;
    let hypothesis_met = k >= i64::from(p_index) + d + codim;
    let low = monomial::count(nvars, k - d);
    let mid = monomial::count(nvars, k);
    let high = monomial::count(nvars, k + d);

    let report = match p_index {
        0 => {
            // V ⊗ S_{k-d} -> S_k
            check_budget(r * low, mid, config.budget)?;
            let mut m = Matrix::zeros(r * low, mid);
            if low > 0 {
                let table = ProductTable::new(nvars, d, k - d);
                for i in 0..r {
                    for g in 0..low {
                        add_product(m.row_mut(i * low + g), 0, v.basis().row(i), g, &table, false, field);
                    }
                }
            }
            let rank = m.rank(field);
            KoszulReport {
                exact: rank == mid,
                hypothesis_met,
                certified_at,
                incoming_rank: rank,
                outgoing_rank: 0,
                middle_dim: mid,
            }
        }
        1 => {
            let pairs = r * r.saturating_sub(1) / 2;
            let middle = r * mid;
            check_budget(pairs * low, middle, config.budget)?;
            check_budget(middle, high, config.budget)?;

            // d_0: v_i ⊗ x^m -> v_i x^m
            let mut outgoing = Matrix::zeros(middle, high);
            if mid > 0 {
                let table = ProductTable::new(nvars, d, k);
                for i in 0..r {
                    for m in 0..mid {
                        add_product(outgoing.row_mut(i * mid + m), 0, v.basis().row(i), m, &table, false, field);
                    }
                }
            }

            // d_1: (v_i ∧ v_j) ⊗ x^g -> v_i ⊗ v_j x^g - v_j ⊗ v_i x^g
            let mut incoming = Matrix::zeros(pairs * low, middle);
            if low > 0 && mid > 0 {
                let table = ProductTable::new(nvars, d, k - d);
                let mut row = 0;
                for i in 0..r {
                    for j in i + 1..r {
                        for g in 0..low {
                            let out = incoming.row_mut(row);
                            add_product(out, i * mid, v.basis().row(j), g, &table, false, field);
                            add_product(out, j * mid, v.basis().row(i), g, &table, true, field);
                            row += 1;
                        }
                    }
                }
            }
            let outgoing_rank = outgoing.rank(field);
            let incoming_rank = incoming.rank(field);
            KoszulReport {
                exact: incoming_rank == middle - outgoing_rank,
                hypothesis_met,
                certified_at,
                incoming_rank,
                outgoing_rank,
                middle_dim: middle,
            }
        }
        other => return Err(GradedError::UnsupportedKoszulIndex(other)),
    };
    Ok(report)
}
