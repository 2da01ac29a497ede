//! Finite-field oracles for graded pieces of sections of split sheaves on `P^N`.
//!
//! A subspace `V ⊂ H^0(M(d))` with `M = ⊕ O(a_j)` is stored as a reduced
//! row-echelon basis over `F_p`. Columns are the monomials of degree `d + a_j`
//! in `N + 1` variables, block after block, each block in lex order.

pub mod field;
pub mod koszul;
pub mod monomial;
pub mod restriction;
pub mod subspace;

use thiserror::Error;

pub use field::{Matrix, PrimeField};
pub use koszul::{is_basepoint_free, koszul_middle_exact, BasePointVerdict, KoszulConfig, KoszulReport};
pub use restriction::{restrict_to_hyperplane, Restriction, HYPERPLANE_DRAWS};
pub use subspace::{
    check_macaulay_gotzmann, lex_segment_subspace, random_subspace, GradedSubspace,
    MacaulayGotzmannCheck, SubspaceFamily,
};

pub const DEFAULT_PRIME: u32 = 101;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("{0} is not a prime in 2..=2^31")]
    BadPrime(u32),
    #[error("a split sheaf needs at least one summand")]
    EmptySheaf,
    #[error("sheaf {0} is not Castelnuovo-Mumford regular (negative twist)")]
    NotRegular(SplitSheaf),
    #[error("codimension {c} exceeds the space dimension {dim}")]
    CodimensionTooLarge { c: usize, dim: usize },
    #[error("degree must be at least {min}, got {d}")]
    DegreeTooSmall { d: i64, min: i64 },
    #[error("hyperplane restriction needs N >= 1")]
    NoHyperplane,
    #[error("no hyperplane passed the genericity checks after {0} draws")]
    GenericityExhausted(usize),
    #[error("Koszul matrices need {needed} entries, budget is {budget}")]
    BudgetExceeded { needed: usize, budget: usize },
    #[error("the linear system is not certified base-point free")]
    NotCertifiedBasePointFree,
    #[error("operation needs a single line bundle, got {0}")]
    NotLineBundle(SplitSheaf),
    #[error("Koszul index {0} is not supported (only 0 and 1)")]
    UnsupportedKoszulIndex(u8),
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
}

/// `P^N` together with the coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingContext {
    n: usize,
    field: PrimeField,
}

impl RingContext {
    pub fn new(n: usize, prime: u32) -> Result<Self, GradedError> {
        Ok(Self {
            n,
            field: PrimeField::new(prime)?,
        })
    }

    /// The dimension `N` of the projective space.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// The context of a hyperplane `P^{N-1}`.
    pub fn hyperplane(&self) -> Result<Self, GradedError> {
        if self.n == 0 {
            return Err(GradedError::NoHyperplane);
        }
        Ok(Self {
            n: self.n - 1,
            field: self.field,
        })
    }
}

/// `O(a_1) ⊕ ... ⊕ O(a_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitSheaf {
    twists: Vec<i64>,
}

impl std::fmt::Display for SplitSheaf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .twists
            .iter()
            .map(|&a| if a == 0 { "O".to_string() } else { format!("O({a})") })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl SplitSheaf {
    pub fn new(twists: Vec<i64>) -> Result<Self, GradedError> {
        if twists.is_empty() {
            return Err(GradedError::EmptySheaf);
        }
        Ok(Self { twists })
    }

    pub fn structure() -> Self {
        Self { twists: vec![0] }
    }

    pub fn line(a: i64) -> Self {
        Self { twists: vec![a] }
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn is_line_bundle(&self) -> bool {
        self.twists.len() == 1
    }

    /// A sum of line bundles is 0-regular iff every twist is non-negative:
    /// `H^i(O(a - i)) = 0` for `0 < i < N` always, and the top group
    /// `H^N(O(a - N))` vanishes iff `a - N > -N - 1`.
    pub fn is_cm_regular(&self) -> bool {
        self.twists.iter().all(|&a| a >= 0)
    }
}

/// Column bookkeeping for `H^0(M(d))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Layout {
    /// `(degree of block, offset, length)` per summand.
    pub blocks: Vec<(i64, usize, usize)>,
    pub total: usize,
}

impl Layout {
    pub fn new(nvars: usize, sheaf: &SplitSheaf, d: i64) -> Self {
        let mut blocks = Vec::with_capacity(sheaf.twists.len());
        let mut offset = 0;
        for &a in &sheaf.twists {
            let deg = d + a;
            let len = monomial::count(nvars, deg);
            blocks.push((deg, offset, len));
            offset += len;
        }
        Self {
            blocks,
            total: offset,
        }
    }

    /// Block index and in-block rank of a column.
    pub fn locate(&self, col: usize) -> (usize, usize) {
        let j = self
            .blocks
            .iter()
            .rposition(|&(_, off, len)| len > 0 && off <= col)
            .expect("column outside layout");
        (j, col - self.blocks[j].1)
    }
}

/// `dim H^0(M(d)) = sum_j C(N + d + a_j, N)`.
pub fn section_dim(sheaf: &SplitSheaf, d: i64, ctx: &RingContext) -> usize {
    Layout::new(ctx.nvars(), sheaf, d).total
}
