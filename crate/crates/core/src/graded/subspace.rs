use num_bigint::BigUint;
use rand::Rng;

use super::field::Matrix;
use super::monomial::{self, ProductTable};
use super::{GradedError, Layout, RingContext, SplitSheaf};
use crate::macaulay::upper_macaulay;

/// A subspace of `H^0(M(d))`, held as a reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSubspace {
    ctx: RingContext,
    sheaf: SplitSheaf,
    degree: i64,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl GradedSubspace {
    /// Row space of `generators`, whose columns must match `H^0(M(d))`.
    pub fn from_generators(
        ctx: RingContext,
        sheaf: SplitSheaf,
        degree: i64,
        mut generators: Matrix,
    ) -> Result<Self, GradedError> {
        let layout = Layout::new(ctx.nvars(), &sheaf, degree);
        if generators.cols() != layout.total {
            return Err(GradedError::AmbientMismatch);
        }
        let pivots = generators.rref(ctx.field());
        Ok(Self {
            ctx,
            sheaf,
            degree,
            basis: generators,
            pivots,
        })
    }

    pub fn full(ctx: RingContext, sheaf: SplitSheaf, degree: i64) -> Self {
        let n = Layout::new(ctx.nvars(), &sheaf, degree).total;
        Self {
            ctx,
            sheaf,
            degree,
            basis: Matrix::identity(n),
            pivots: (0..n).collect(),
        }
    }

    pub fn zero(ctx: RingContext, sheaf: SplitSheaf, degree: i64) -> Self {
        let n = Layout::new(ctx.nvars(), &sheaf, degree).total;
        Self {
            ctx,
            sheaf,
            degree,
            basis: Matrix::zeros(0, n),
            pivots: Vec::new(),
        }
    }

    pub fn context(&self) -> &RingContext {
        &self.ctx
    }

    pub fn sheaf(&self) -> &SplitSheaf {
        &self.sheaf
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// `dim H^0(M(d))`.
    pub fn columns(&self) -> usize {
        self.basis.cols()
    }

    pub fn codim(&self) -> usize {
        self.columns() - self.dim()
    }

    pub fn is_full(&self) -> bool {
        self.codim() == 0
    }

    pub(crate) fn layout(&self) -> Layout {
        Layout::new(self.ctx.nvars(), &self.sheaf, self.degree)
    }

    /// `V · H^0(O(t))`, computed summand by summand.
    pub fn multiply(&self, t: u32) -> GradedSubspace {
        let nvars = self.ctx.nvars();
        let step = i64::from(t);
        let src = self.layout();
        let dst = Layout::new(nvars, &self.sheaf, self.degree + step);
        let tables: Vec<Option<ProductTable>> = src
            .blocks
            .iter()
            .map(|&(deg, _, len)| (len > 0).then(|| ProductTable::new(nvars, deg, step)))
            .collect();
        let step_count = monomial::count(nvars, step);
        let mut gens = Matrix::zeros(self.dim() * step_count, dst.total);
        for r in 0..self.dim() {
            for (col, &coef) in self.basis.row(r).iter().enumerate() {
                if coef == 0 {
                    continue;
                }
                let (j, u) = src.locate(col);
                let table = tables[j].as_ref().expect("non-empty block has a table");
                let offset = dst.blocks[j].1;
                for m in 0..step_count {
                    gens.set(r * step_count + m, offset + table.product(u, m), coef);
                }
            }
        }
        // Products of distinct (u, m) never collide within a single generator row
        // for a fixed m, so plain assignment above is exact.
        Self::from_generators(self.ctx, self.sheaf.clone(), self.degree + step, gens)
            .expect("layout matches by construction")
    }
}

/// The span of the `dim - c` lex-greatest monomials of degree `d` on `P^N`:
/// the degree-`d` piece of a lex-segment ideal, of codimension exactly `c`.
pub fn lex_segment_subspace(
    c: usize,
    d: i64,
    ctx: RingContext,
) -> Result<GradedSubspace, GradedError> {
    if d < 1 {
        return Err(GradedError::DegreeTooSmall { d, min: 1 });
    }
    let dim = monomial::count(ctx.nvars(), d);
    if c > dim {
        return Err(GradedError::CodimensionTooLarge { c, dim });
    }
    let keep = dim - c;
    let mut basis = Matrix::zeros(keep, dim);
    for i in 0..keep {
        basis.set(i, i, 1);
    }
    Ok(GradedSubspace {
        ctx,
        sheaf: SplitSheaf::structure(),
        degree: d,
        basis,
        pivots: (0..keep).collect(),
    })
}

/// Families of random subspaces used by the sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceFamily {
    /// Span of `generators` uniformly random vectors.
    Dense { generators: usize },
    /// Span of a random set of monomials, each kept with probability `keep_per_mille / 1000`.
    Monomial { keep_per_mille: u32 },
    /// Span of `generators` vectors with at most `support` non-zero entries each.
    Sparse { generators: usize, support: usize },
}

impl SubspaceFamily {
    /// Draws a family with parameters scaled to an ambient space of `columns` dimensions.
    pub fn sample<R: Rng + ?Sized>(columns: usize, rng: &mut R) -> Self {
        let cap = columns.max(1);
        match rng.random_range(0..3u8) {
            0 => SubspaceFamily::Dense {
                generators: rng.random_range(0..=cap),
            },
            1 => SubspaceFamily::Monomial {
                keep_per_mille: rng.random_range(0..=1000),
            },
            _ => SubspaceFamily::Sparse {
                generators: rng.random_range(0..=cap),
                support: rng.random_range(1..=3),
            },
        }
    }

    pub fn label(&self) -> String {
        match *self {
            SubspaceFamily::Dense { generators } => format!("dense:{generators}"),
            SubspaceFamily::Monomial { keep_per_mille } => format!("monomial:{keep_per_mille}"),
            SubspaceFamily::Sparse {
                generators,
                support,
            } => format!("sparse:{generators}x{support}"),
        }
    }
}

pub fn random_subspace<R: Rng + ?Sized>(
    ctx: RingContext,
    sheaf: SplitSheaf,
    d: i64,
    family: SubspaceFamily,
    rng: &mut R,
) -> GradedSubspace {
    let n = Layout::new(ctx.nvars(), &sheaf, d).total;
    let p = ctx.field().modulus();
    let gens = match family {
        SubspaceFamily::Dense { generators } => {
            let mut m = Matrix::zeros(generators, n);
            for r in 0..generators {
                for c in 0..n {
                    m.set(r, c, rng.random_range(0..p));
                }
            }
            m
        }
        SubspaceFamily::Monomial { keep_per_mille } => {
            let mut m = Matrix::zeros(0, n);
            let mut row = vec![0u32; n];
            for c in 0..n {
                if rng.random_range(0..1000) < keep_per_mille {
                    row[c] = 1;
                    m.push_row(&row);
                    row[c] = 0;
                }
            }
            m
        }
        SubspaceFamily::Sparse {
            generators,
            support,
        } => {
            let mut m = Matrix::zeros(generators, n);
            if n > 0 {
                for r in 0..generators {
                    for _ in 0..support {
                        m.set(r, rng.random_range(0..n), rng.random_range(1..p));
                    }
                }
            }
            m
        }
    };
    GradedSubspace::from_generators(ctx, sheaf, d, gens).expect("layout matches by construction")
}

/// Outcome of comparing `codim V^{d+1}` against `c^<d>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayGotzmannCheck {
    pub c: usize,
    pub c_next: usize,
    pub bound: BigUint,
    pub holds: bool,
}

impl MacaulayGotzmannCheck {
    pub fn is_sharp(&self) -> bool {
        BigUint::from(self.c_next) == self.bound
    }
}

/// Multiplies `V` by the linear forms and compares the new codimension with `c^<d>`.
pub fn check_macaulay_gotzmann(v: &GradedSubspace) -> Result<MacaulayGotzmannCheck, GradedError> {
    if !v.sheaf().is_cm_regular() {
        return Err(GradedError::NotRegular(v.sheaf().clone()));
    }
    if v.degree() < 1 {
        return Err(GradedError::DegreeTooSmall {
            d: v.degree(),
            min: 1,
        });
    }
    let c = v.codim();
    let c_next = v.multiply(1).codim();
    let degree = u32::try_from(v.degree()).map_err(|_| GradedError::DegreeTooSmall {
        d: v.degree(),
        min: 1,
    })?;
    let bound = upper_macaulay(c as u64, degree).expect("degree is positive");
    Ok(MacaulayGotzmannCheck {
        c,
        c_next,
        holds: BigUint::from(c_next) <= bound,
        bound,
    })
}
