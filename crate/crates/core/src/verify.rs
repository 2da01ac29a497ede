//! Seeded verification sweeps.
//!
//! Every trial draws from its own ChaCha8 stream keyed by `(seed, suite,
//! trial)`, so a suite's output depends only on its configuration. Trials run
//! in parallel and are reported in trial order.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::bounds::{
    slack_inequality, threshold_value, BoundError, BundleSpec, H1Vanishing, ThreefoldInvariants,
    ThresholdKind, Variant,
};
use crate::graded::{
    check_macaulay_gotzmann, is_basepoint_free, koszul_middle_exact, lex_segment_subspace,
    random_subspace, restrict_to_hyperplane, section_dim, GradedError, GradedSubspace,
    KoszulConfig, Matrix, RingContext, SplitSheaf, SubspaceFamily, DEFAULT_PRIME,
};
use crate::macaulay::{green_implication_scan, growth_slack_check, slack_sum, upper_macaulay};

pub const DEFAULT_SEED: u64 = 0xC0FFEE;
pub const DEFAULT_TRIALS: usize = 500;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Bound(#[from] BoundError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Macaulay,
    Lex,
    Restriction,
    Koszul,
    GreenScan,
    Growth,
    Thresholds,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Macaulay,
        Suite::Lex,
        Suite::Restriction,
        Suite::Koszul,
        Suite::GreenScan,
        Suite::Growth,
        Suite::Thresholds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Macaulay => "macaulay",
            Suite::Lex => "lex",
            Suite::Restriction => "restriction",
            Suite::Koszul => "koszul",
            Suite::GreenScan => "green-scan",
            Suite::Growth => "growth",
            Suite::Thresholds => "thresholds",
        }
    }

    fn stream(self) -> u64 {
        Suite::ALL.iter().position(|&s| s == self).expect("listed") as u64 + 1
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| VerifyError::Config(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub prime: u32,
    /// Random trials for the macaulay, restriction and koszul suites.
    pub trials: usize,
    /// Overrides the suite's default `c` range (green-scan 2000, lex 60).
    pub c_max: Option<u64>,
    /// Overrides the suite's default degree range (green-scan 10, growth 30, lex 5).
    pub d_max: Option<u32>,
    pub koszul: KoszulConfig,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            prime: DEFAULT_PRIME,
            trials: DEFAULT_TRIALS,
            c_max: None,
            d_max: None,
            koszul: KoszulConfig::default(),
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<(), VerifyError> {
        RingContext::new(1, self.prime)?;
        if self.trials == 0 {
            return Err(VerifyError::Config("trials must be positive".into()));
        }
        if self.koszul.budget == 0 || self.koszul.t_max == 0 {
            return Err(VerifyError::Config("budget and t-max must be positive".into()));
        }
        if self.d_max == Some(0) {
            return Err(VerifyError::Config("dmax must be positive".into()));
        }
        Ok(())
    }
}

/// One row of a report. Fields never contain commas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRecord {
    pub suite: Suite,
    pub trial: usize,
    pub parameters: String,
    pub observed: String,
    pub bound: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub records: Vec<TrialRecord>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.records.iter().filter(|r| r.pass).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &TrialRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }
}

fn trial_rng(seed: u64, suite: Suite, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((suite.stream() << 48) | trial as u64);
    rng
}

fn record(
    suite: Suite,
    trial: usize,
    parameters: String,
    observed: impl ToString,
    bound: impl ToString,
    pass: bool,
) -> TrialRecord {
    TrialRecord {
        suite,
        trial,
        parameters,
        observed: observed.to_string(),
        bound: bound.to_string(),
        pass,
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<SuiteReport, VerifyError> {
    config.validate()?;
    let records = match suite {
        Suite::Macaulay => macaulay_suite(config)?,
        Suite::Lex => lex_suite(config)?,
        Suite::Restriction => restriction_suite(config)?,
        Suite::Koszul => koszul_suite(config)?,
        Suite::GreenScan => green_suite(config),
        Suite::Growth => growth_suite(config)?,
        Suite::Thresholds => threshold_suite()?,
    };
    Ok(SuiteReport { suite, records })
}

pub fn run_all(config: &VerifyConfig) -> Result<Vec<SuiteReport>, VerifyError> {
    Suite::ALL.iter().map(|&s| run_suite(s, config)).collect()
}

/// A random subspace from the shared trial families: `P^2` or `P^3`,
/// `M ∈ {O, O+O(1), O+O(1)+O(2)}`, `1 <= d <= 4`.
pub fn sample_trial_subspace(rng: &mut ChaCha8Rng, prime: u32) -> Result<(GradedSubspace, String), VerifyError> {
    let n = rng.random_range(2..=3usize);
    let summands = rng.random_range(1..=3i64);
    let sheaf = SplitSheaf::new((0..summands).collect())?;
    let d = rng.random_range(1..=4i64);
    let ctx = RingContext::new(n, prime)?;
    let columns = section_dim(&sheaf, d, &ctx);
    let family = SubspaceFamily::sample(columns, rng);
    let v = random_subspace(ctx, sheaf.clone(), d, family, rng);
    let params = format!("P{n};M={sheaf};d={d};family={}", family.label());
    Ok((v, params))
}

fn macaulay_suite(config: &VerifyConfig) -> Result<Vec<TrialRecord>, VerifyError> {
    (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(config.seed, Suite::Macaulay, trial);
            let (v, params) = sample_trial_subspace(&mut rng, config.prime)?;
            let check = check_macaulay_gotzmann(&v)?;
            Ok(record(
                Suite::Macaulay,
                trial,
                format!("{params};c={}", check.c),
                check.c_next,
                &check.bound,
                check.holds,
            ))
        })
        .collect()
}

fn lex_suite(config: &VerifyConfig) -> Result<Vec<TrialRecord>, VerifyError> {
    let c_max = config.c_max.unwrap_or(60) as usize;
    let d_max = config.d_max.unwrap_or(5) as i64;
    let ctx = RingContext::new(3, config.prime)?;
    let cases: Vec<(i64, usize)> = (1..=d_max)
        .flat_map(|d| {
            let dim = section_dim(&SplitSheaf::structure(), d, &ctx);
            (0..=c_max.min(dim)).map(move |c| (d, c))
        })
        .collect();
    cases
        .into_par_iter()
        .enumerate()
        .map(|(trial, (d, c))| {
            let check = check_macaulay_gotzmann(&lex_segment_subspace(c, d, ctx)?)?;
            Ok(record(
                Suite::Lex,
                trial,
                format!("P3;d={d};c={c}"),
                check.c_next,
                &check.bound,
                check.is_sharp(),
            ))
        })
        .collect()
}

fn restriction_suite(config: &VerifyConfig) -> Result<Vec<TrialRecord>, VerifyError> {
    (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(config.seed, Suite::Restriction, trial);
            let (v, params) = sample_trial_subspace(&mut rng, config.prime)?;
            let r = restrict_to_hyperplane(&v, rng.random())?;
            let c = v.codim();
            // In degree 1 the bound is exactly c - 1.
            let degree_one_exact = v.degree() != 1 || c == 0 || r.bound == BigUint::from(c - 1);
            Ok(record(
                Suite::Restriction,
                trial,
                format!("{params};c={c};draws={}", r.draws),
                format!("VH={};VpreH={}", r.v_h.codim(), r.v_preimage.codim()),
                &r.bound,
                r.additivity_holds && r.restriction_bound_holds && degree_one_exact,
            ))
        })
        .collect()
}

/// Positions of `x0^2, x1^2, x2^2` among the lex-ordered quadrics on `P^2`.
const PURE_QUADRICS: [usize; 3] = [0, 3, 5];
const MIXED_QUADRICS: [usize; 3] = [1, 2, 4];

fn koszul_instance(
    rng: &mut ChaCha8Rng,
    ctx: RingContext,
    c: usize,
    dense: bool,
    t_max: u32,
) -> Result<(GradedSubspace, &'static str), VerifyError> {
    let sheaf = SplitSheaf::structure();
    if dense {
        for _ in 0..32 {
            let v = random_subspace(ctx, sheaf.clone(), 2, SubspaceFamily::Dense { generators: 6 - c }, rng);
            if v.codim() == c && is_basepoint_free(&v, t_max)?.is_free() {
                return Ok((v, "dense"));
            }
        }
    }
    let mut mixed = MIXED_QUADRICS.to_vec();
    for i in (1..mixed.len()).rev() {
        mixed.swap(i, rng.random_range(0..=i));
    }
    let mut keep: Vec<usize> = PURE_QUADRICS.iter().copied().chain(mixed[c..].iter().copied()).collect();
    keep.sort_unstable();
    let mut m = Matrix::zeros(keep.len(), 6);
    for (r, &col) in keep.iter().enumerate() {
        m.set(r, col, 1);
    }
    Ok((GradedSubspace::from_generators(ctx, sheaf, 2, m)?, "monomial"))
}

fn koszul_suite(config: &VerifyConfig) -> Result<Vec<TrialRecord>, VerifyError> {
    let ctx = RingContext::new(2, config.prime)?;
    (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(config.seed, Suite::Koszul, trial);
            let p_index = (trial % 2) as u8;
            let c = (trial / 2) % 4;
            let dense = (trial / 8) % 2 == 0;
            let (v, family) = koszul_instance(&mut rng, ctx, c, dense, config.koszul.t_max)?;
            let k = i64::from(p_index) + 2 + c as i64 + rng.random_range(0..=1i64);
            let report = koszul_middle_exact(&v, k, p_index, config.koszul)?;
            Ok(record(
                Suite::Koszul,
                trial,
                format!("P2;d=2;c={c};family={family};p={p_index};k={k};t={}", report.certified_at),
                format!(
                    "in={};out={};mid={}",
                    report.incoming_rank, report.outgoing_rank, report.middle_dim
                ),
                if p_index == 0 { "surjective" } else { "exact" },
                report.hypothesis_met && report.exact,
            ))
        })
        .collect()
}

fn green_suite(config: &VerifyConfig) -> Vec<TrialRecord> {
    let c_max = config.c_max.unwrap_or(2000);
    let d_max = config.d_max.unwrap_or(10);
    let found = green_implication_scan(c_max, d_max);
    (2..=d_max)
        .enumerate()
        .map(|(trial, d)| {
            let count = found.iter().filter(|x| x.d == d).count();
            record(
                Suite::GreenScan,
                trial,
                format!("cmax={c_max};d={d}"),
                count,
                0,
                count == 0,
            )
        })
        .collect()
}

fn growth_suite(config: &VerifyConfig) -> Result<Vec<TrialRecord>, VerifyError> {
    let n_max = config.d_max.unwrap_or(30);
    let cases: Vec<(u32, u64)> = (1..=n_max)
        .flat_map(|n| (0..=u64::from(n) + 1).map(move |e| (n, e)))
        .collect();
    cases
        .into_par_iter()
        .enumerate()
        .map(|(trial, (n, e))| {
            let limit = u64::try_from(slack_sum(u64::from(n), e)).expect("small slack sums");
            let mut worst = 0u64;
            let mut consistent = true;
            for c in 0..limit {
                let check = growth_slack_check(c, n, e).map_err(BoundError::from)?;
                consistent &= check.hypothesis_met && check.bound_holds;
                let grown = u64::try_from(upper_macaulay(c, n).map_err(BoundError::from)?).unwrap_or(u64::MAX);
                worst = worst.max(grown.saturating_sub(c));
            }
            Ok(record(
                Suite::Growth,
                trial,
                format!("n={n};e={e};c<{limit}"),
                format!("max_growth={worst}"),
                e,
                consistent && worst <= e,
            ))
        })
        .collect()
}

/// Synthetic invariants for the threshold grid.
fn grid_invariants(kind: ThresholdKind, b: i64, a_or_alpha: i64) -> ThreefoldInvariants {
    let (alpha, beta, a_adj, b_adj, bundle) = match kind {
        ThresholdKind::Regular => {
            let alpha = a_or_alpha;
            (alpha, b, alpha, b, alpha == 4)
        }
        ThresholdKind::AdjointGeneral => {
            let a = a_or_alpha;
            let alpha = a.max(1);
            (alpha, alpha + b - a, a, b, false)
        }
        ThresholdKind::AdjointP2Bundle => (4, b, 4, b, true),
    };
    ThreefoldInvariants {
        name: format!("grid-{a_or_alpha}-{b}"),
        alpha,
        beta,
        a_adj,
        b_adj,
        subcanonical_e: None,
        h3: None,
        pic_is_z: false,
        is_linear_p2_bundle: bundle,
        is_quadric: false,
        is_p3: false,
    }
}

/// `a` (or `alpha`) values exercised per threshold kind: every value taken by
/// a non-quadric entry of the default catalog, plus 4 for linear P^2-bundles.
fn grid_parameters(kind: ThresholdKind) -> &'static [i64] {
    match kind {
        ThresholdKind::Regular => &[1, 2, 3, 4],
        ThresholdKind::AdjointGeneral => &[3, 2, 1, 0],
        ThresholdKind::AdjointP2Bundle => &[4],
    }
}

/// Checks `F - 1 < sum_{i=0}^{b} (n + 1 - i)` on `[T, T + 40]` for `2 <= b <= 8`.
fn threshold_suite() -> Result<Vec<TrialRecord>, VerifyError> {
    let mut cases = Vec::new();
    for kind in [ThresholdKind::Regular, ThresholdKind::AdjointGeneral, ThresholdKind::AdjointP2Bundle] {
        for b in 2..=8 {
            for &a in grid_parameters(kind) {
                cases.push((kind, b, a));
            }
        }
    }
    cases
        .into_par_iter()
        .enumerate()
        .map(|(trial, (kind, b, a))| {
            let inv = grid_invariants(kind, b, a);
            let variant = match kind {
                ThresholdKind::Regular => Variant::MinusDRegular,
                _ => Variant::Adjoint,
            };
            let t = threshold_value(kind, b)?;
            let mut min_margin = i64::MAX;
            let mut all = true;
            for d in t..=t + 40 {
                let spec = BundleSpec::new(variant, d, H1Vanishing::KnownZero)?;
                let slack = slack_inequality(&inv, &spec)?;
                all &= slack.holds && slack.e == b;
                min_margin = min_margin.min(slack.rhs - slack.lhs);
            }
            let symbol = if kind == ThresholdKind::Regular { "alpha" } else { "a" };
            Ok(record(
                Suite::Thresholds,
                trial,
                format!("{kind:?};b={b};{symbol}={a};d={t}..={}", t + 40),
                format!("min_margin={min_margin}"),
                "margin>0",
                all && min_margin > 0,
            ))
        })
        .collect()
}

/// CSV with header `suite,trial,parameters,observed,bound,pass` and LF endings.
pub fn to_csv(reports: &[SuiteReport]) -> String {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    writer
        .write_record(["suite", "trial", "parameters", "observed", "bound", "pass"])
        .expect("in-memory write");
    for r in reports.iter().flat_map(|rep| &rep.records) {
        writer
            .write_record([
                r.suite.name(),
                &r.trial.to_string(),
                &r.parameters,
                &r.observed,
                &r.bound,
                if r.pass { "true" } else { "false" },
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("ascii fields")
}

/// Per-suite pass counts followed by up to ten failing rows per suite.
pub fn to_table(reports: &[SuiteReport]) -> String {
    let mut out = format!("{:<12} {:>8} {:>8}  status\n", "suite", "passed", "total");
    for rep in reports {
        let status = if rep.all_passed() { "pass" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{:<12} {:>8} {:>8}  {status}",
            rep.suite.name(),
            rep.passed(),
            rep.records.len()
        );
        for f in rep.failures().take(10) {
            let _ = writeln!(
                out,
                "  trial {}: {} observed {} bound {}",
                f.trial, f.parameters, f.observed, f.bound
            );
        }
    }
    out
}
