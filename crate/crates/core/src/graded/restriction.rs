//! Restriction of a subspace to a random hyperplane `H = {l = 0}` and the
//! colon space `V^H = { w : l · w ∈ V }`.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Matrix, PrimeField};
use super::monomial;
use super::subspace::GradedSubspace;
use super::{GradedError, Layout};
use crate::macaulay::lower_macaulay;

/// Maximum number of hyperplanes drawn before giving up.
pub const HYPERPLANE_DRAWS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    /// Coefficients of the linear form, last one non-zero.
    pub linear_form: Vec<u32>,
    /// Image of `V` in `H^0(M_H(d))` on `P^{N-1}`.
    pub v_h: GradedSubspace,
    /// `{ w in H^0(M(d-1)) : l · w ∈ V }`.
    pub v_preimage: GradedSubspace,
    /// `c_<d>` for `c = codim V`.
    pub bound: BigUint,
    pub additivity_holds: bool,
    pub restriction_bound_holds: bool,
    /// Hyperplanes drawn, including the returned one.
    pub draws: usize,
}

/// Coefficients of `(λ · x)^k` over the degree-`k` monomials of `m` variables.
fn linear_powers(field: PrimeField, lambda: &[u32], max: i64) -> Vec<Vec<u32>> {
    let m = lambda.len();
    let mut powers = vec![vec![1u32 % field.modulus()]];
    for k in 1..=max {
        let prev = &powers[(k - 1) as usize];
        let prev_monos = monomial::enumerate(m, k - 1);
        let mut next = vec![0u32; monomial::count(m, k)];
        let mut e = vec![0u32; m];
        for (idx, &coef) in prev.iter().enumerate() {
            if coef == 0 {
                continue;
            }
            for (i, &l) in lambda.iter().enumerate() {
                if l == 0 {
                    continue;
                }
                e.copy_from_slice(&prev_monos[idx]);
                e[i] += 1;
                let slot = &mut next[monomial::rank(&e)];
                *slot = field.add(*slot, field.mul(coef, l));
            }
        }
        powers.push(next);
    }
    powers
}

/// Matrix of `H^0(M(d)) -> H^0(M_H(d))` after substituting `x_N = λ · (x_0..x_{N-1})`.
fn restriction_matrix(v: &GradedSubspace, lambda: &[u32], target: &Layout) -> Matrix {
    let field = v.context().field();
    let nvars = v.context().nvars();
    let small = nvars - 1;
    let src = v.layout();
    let max_deg = src.blocks.iter().map(|b| b.0).max().unwrap_or(0).max(0);
    let powers = linear_powers(field, lambda, max_deg);
    let mut r = Matrix::zeros(src.total, target.total);
    for (j, &(deg, off, len)) in src.blocks.iter().enumerate() {
        if len == 0 {
            continue;
        }
        let toff = target.blocks[j].1;
        for (u, exps) in monomial::enumerate(nvars, deg).into_iter().enumerate() {
            let power = exps[small] as i64;
            let head = &exps[..small];
            let power_monos = monomial::enumerate(small, power);
            let mut e = vec![0u32; small];
            for (pi, &coef) in powers[power as usize].iter().enumerate() {
                if coef == 0 {
                    continue;
                }
                for (slot, (a, b)) in e.iter_mut().zip(head.iter().zip(&power_monos[pi])) {
                    *slot = a + b;
                }
                let col = toff + monomial::rank(&e);
                let cur = r.get(off + u, col);
                r.set(off + u, col, field.add(cur, coef));
            }
        }
    }
    r
}

/// Matrix of multiplication by `l` from `H^0(M(d-1))` to `H^0(M(d))`.
fn multiplication_matrix(v: &GradedSubspace, form: &[u32], lower: &Layout) -> Matrix {
    let nvars = v.context().nvars();
    let upper = v.layout();
    let mut m = Matrix::zeros(lower.total, upper.total);
    for (j, &(deg, off, len)) in lower.blocks.iter().enumerate() {
        if len == 0 {
            continue;
        }
        let uoff = upper.blocks[j].1;
        for (w, exps) in monomial::enumerate(nvars, deg).into_iter().enumerate() {
            let mut e = exps.clone();
            for (i, &l) in form.iter().enumerate() {
                if l == 0 {
                    continue;
                }
                e[i] += 1;
                m.set(off + w, uoff + monomial::rank(&e), l);
                e[i] -= 1;
            }
        }
    }
    m
}

fn draw_form(field: PrimeField, nvars: usize, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let p = field.modulus();
    let mut form: Vec<u32> = (0..nvars).map(|_| rng.random_range(0..p)).collect();
    form[nvars - 1] = rng.random_range(1..p);
    form
}

struct Draw {
    form: Vec<u32>,
    v_h: GradedSubspace,
    v_preimage: GradedSubspace,
}

fn restrict_along(v: &GradedSubspace, form: Vec<u32>) -> Result<Draw, GradedError> {
    let ctx = *v.context();
    let field = ctx.field();
    let hyper = ctx.hyperplane()?;
    let nvars = ctx.nvars();
    let inv_last = field.inv(form[nvars - 1]);
    let lambda: Vec<u32> = form[..nvars - 1]
        .iter()
        .map(|&l| field.neg(field.mul(l, inv_last)))
        .collect();

    let target = Layout::new(hyper.nvars(), v.sheaf(), v.degree());
    let r = restriction_matrix(v, &lambda, &target);
    let image = v.basis().mul(&r, field);
    let v_h = GradedSubspace::from_generators(hyper, v.sheaf().clone(), v.degree(), image)?;

    // w ∈ V^H  iff  (l·w) annihilates every functional vanishing on V.
    let lower = Layout::new(nvars, v.sheaf(), v.degree() - 1);
    let mult = multiplication_matrix(v, &form, &lower);
    let annihilator = v.basis().nullspace(field);
    let pairing = mult.mul(&annihilator.transpose(), field);
    let kernel = pairing.transpose().nullspace(field);
    let v_preimage = GradedSubspace::from_generators(ctx, v.sheaf().clone(), v.degree() - 1, kernel)?;
    Ok(Draw {
        form,
        v_h,
        v_preimage,
    })
}

/// Restricts `V` to a seeded random hyperplane.
///
/// The generic restriction has the smallest codimension among all
/// hyperplanes, so any drawn hyperplane meeting `c_<d>` certifies the bound
/// for the generic one. Up to [`HYPERPLANE_DRAWS`] hyperplanes are drawn until
/// one does; the last draw is returned otherwise.
pub fn restrict_to_hyperplane(v: &GradedSubspace, seed: u64) -> Result<Restriction, GradedError> {
    if !v.sheaf().is_cm_regular() {
        return Err(GradedError::NotRegular(v.sheaf().clone()));
    }
    if v.degree() < 1 {
        return Err(GradedError::DegreeTooSmall {
            d: v.degree(),
            min: 1,
        });
    }
    let ctx = *v.context();
    ctx.hyperplane()?;
    let c = v.codim();
    let bound = lower_macaulay(c as u64, v.degree() as u32).expect("degree is positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all_additive = true;
    let mut last = None;
    for draw in 1..=HYPERPLANE_DRAWS {
        let form = draw_form(ctx.field(), ctx.nvars(), &mut rng);
        let Draw {
            form,
            v_h,
            v_preimage,
        } = restrict_along(v, form)?;
        let additive = c == v_preimage.codim() + v_h.codim();
        all_additive &= additive;
        let within = BigUint::from(v_h.codim()) <= bound;
        let result = Restriction {
            linear_form: form,
            v_h,
            v_preimage,
            bound: bound.clone(),
            additivity_holds: all_additive,
            restriction_bound_holds: within,
            draws: draw,
        };
        if within && additive {
            return Ok(result);
        }
        last = Some(result);
    }
    last.ok_or(GradedError::GenericityExhausted(HYPERPLANE_DRAWS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{lex_segment_subspace, random_subspace, RingContext, SplitSheaf, SubspaceFamily};

    fn ctx(n: usize) -> RingContext {
        RingContext::new(n, 101).unwrap()
    }

    #[test]
    fn full_space_restricts_to_full_space() {
        for n in 1..=3 {
            let sheaf = SplitSheaf::new(vec![0, 1]).unwrap();
            let v = GradedSubspace::full(ctx(n), sheaf, 2);
            let r = restrict_to_hyperplane(&v, 5).unwrap();
            assert!(r.v_h.is_full());
            assert!(r.v_preimage.is_full());
            assert!(r.additivity_holds && r.restriction_bound_holds);
            assert_eq!(r.draws, 1);
        }
    }

    #[test]
    fn lex_example() {
        let v = lex_segment_subspace(5, 2, ctx(3)).unwrap();
        let r = restrict_to_hyperplane(&v, 1).unwrap();
        assert_eq!(r.bound, BigUint::from(2u32));
        assert!(r.v_h.codim() <= 2);
        assert!(r.additivity_holds);
    }

    #[test]
    fn degree_one_bound_is_c_minus_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for trial in 0..40 {
            let v = random_subspace(
                ctx(2),
                SplitSheaf::new(vec![0, 1]).unwrap(),
                1,
                SubspaceFamily::Dense {
                    generators: trial % 9,
                },
                &mut rng,
            );
            let r = restrict_to_hyperplane(&v, trial as u64).unwrap();
            if v.codim() >= 1 {
                assert!(r.v_h.codim() < v.codim());
            }
            assert!(r.additivity_holds && r.restriction_bound_holds);
        }
    }

    #[test]
    fn preimage_times_form_lies_in_v() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let sheaf = SplitSheaf::new(vec![0, 2]).unwrap();
        let v = random_subspace(
            ctx(2),
            sheaf.clone(),
            2,
            SubspaceFamily::Monomial { keep_per_mille: 600 },
            &mut rng,
        );
        let draw = restrict_along(&v, vec![3, 7, 1]).unwrap();
        let lower = Layout::new(3, &sheaf, 1);
        let mult = multiplication_matrix(&v, &draw.form, &lower);
        let images = draw.v_preimage.basis().mul(&mult, v.context().field());
        let mut stacked = v.basis().clone();
        for r in 0..images.rows() {
            stacked.push_row(images.row(r));
        }
        assert_eq!(stacked.rank(v.context().field()), v.dim());
    }

    #[test]
    fn restriction_to_a_point() {
        // P^1 restricted to P^0: every block becomes one-dimensional.
        let v = GradedSubspace::zero(ctx(1), SplitSheaf::structure(), 3);
        let r = restrict_to_hyperplane(&v, 0).unwrap();
        assert_eq!(r.v_h.columns(), 1);
        assert!(r.additivity_holds);
    }

    #[test]
    fn empty_blocks_have_no_columns() {
        let sheaf = SplitSheaf::line(0);
        let v = GradedSubspace::zero(ctx(2), sheaf, 1);
        let draw = restrict_along(&v, vec![1, 1, 1]).unwrap();
        assert_eq!(draw.v_preimage.columns(), 1);
        assert_eq!(draw.v_h.columns(), 2);
    }

    #[test]
    fn rejects_degenerate_inputs() {
        let v = GradedSubspace::zero(ctx(0), SplitSheaf::structure(), 2);
        assert_eq!(restrict_to_hyperplane(&v, 0), Err(GradedError::NoHyperplane));
        let v = GradedSubspace::zero(ctx(2), SplitSheaf::line(-1), 2);
        assert!(matches!(restrict_to_hyperplane(&v, 0), Err(GradedError::NotRegular(_))));
    }
}
