//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 success / floor / ample; 2 invalid input, out of scope or
//! unmet ampleness hypotheses; 3 no bound / not ample; 4 verification failures.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::bounds::{
    blowup_ampleness, contradiction_trace, nl_codim_floor, Ampleness, BoundStatus, BundleSpec,
    H1Vanishing, ThreefoldInvariants, Variant,
};
use crate::catalog::{default_catalog, load_catalog, Catalog};
use crate::graded::{KoszulConfig, DEFAULT_PRIME};
use crate::graded::koszul::{DEFAULT_BUDGET, DEFAULT_T_MAX};
use crate::macaulay::macaulay_rep;
use crate::verify::{run_all, run_suite, to_csv, to_table, Suite, VerifyConfig, DEFAULT_TRIALS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "explicit-nl", version, about = "Macaulay bounds, finite-field oracles and Noether-Lefschetz codimension floors")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Macaulay representation of C in degree D with both growth bounds.
    Decompose { c: String, d: u32 },
    /// Codimension floor for a catalog entry or inline invariants.
    Bound(BoundArgs),
    /// Run seeded verification sweeps.
    Verify(VerifyArgs),
    /// Ampleness of dH - E_1 - ... - E_k on a blow-up at k general points.
    Ample(AmpleArgs),
    /// Print the built-in catalog in the catalog file format.
    Catalog,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    MinusDRegular,
    Adjoint,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::MinusDRegular => Variant::MinusDRegular,
            VariantArg::Adjoint => Variant::Adjoint,
        }
    }
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Catalog entry; omit to pass invariants inline.
    pub name: Option<String>,
    #[arg(long, value_enum)]
    pub variant: VariantArg,
    #[arg(short = 'd')]
    pub d: i64,
    /// H^1(Ω^2_Y ⊗ L) = 0 is known.
    #[arg(long)]
    pub h1_zero: bool,
    /// Replay the contradiction argument for a hypothetical codimension C.
    #[arg(long, value_name = "C")]
    pub trace: Option<u64>,
    #[arg(long, value_name = "PATH")]
    pub catalog: Option<PathBuf>,
    #[command(flatten)]
    pub inline: InlineInvariants,
}

#[derive(Debug, Args)]
pub struct InlineInvariants {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<i64>,
    #[arg(long = "a", allow_negative_numbers = true)]
    pub a_adj: Option<i64>,
    #[arg(long = "b", allow_negative_numbers = true)]
    pub b_adj: Option<i64>,
    #[arg(long)]
    pub p2_bundle: bool,
    #[arg(long)]
    pub quadric: bool,
    #[arg(long)]
    pub p3: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// macaulay, lex, restriction, koszul, green-scan, growth, thresholds or all.
    pub suite: String,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    /// Decimal or 0x-prefixed hexadecimal.
    #[arg(long, env = "EXPLICIT_NL_SEED", value_parser = parse_seed, default_value = "0xC0FFEE")]
    pub seed: u64,
    #[arg(long, env = "EXPLICIT_NL_PRIME", default_value_t = DEFAULT_PRIME)]
    pub prime: u32,
    #[arg(long)]
    pub cmax: Option<u64>,
    #[arg(long)]
    pub dmax: Option<u32>,
    /// Maximum entries per Koszul matrix.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    #[arg(long, default_value_t = DEFAULT_T_MAX)]
    pub t_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct AmpleArgs {
    pub name: String,
    #[arg(short = 'd')]
    pub d: i64,
    #[arg(short = 'k')]
    pub k: u64,
    #[arg(long)]
    pub h1_zero: bool,
    #[arg(long, value_name = "PATH")]
    pub catalog: Option<PathBuf>,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed {s:?}: {e}"))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return if code == 0 { EXIT_OK } else { EXIT_INPUT };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_INPUT
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::Decompose { c, d } => decompose(&c, d, out),
        Command::Bound(args) => bound(args, out),
        Command::Verify(args) => verify(args, out),
        Command::Ample(args) => ample(args, out),
        Command::Catalog => {
            write_out(out, &default_catalog().to_text())?;
            Ok(EXIT_OK)
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), String> {
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())
}

fn decompose(c: &str, d: u32, out: &mut dyn Write) -> Result<i32, String> {
    let c: BigUint = c.parse().map_err(|_| format!("c must be a non-negative integer, got {c:?}"))?;
    let rep = macaulay_rep(c.clone(), d).map_err(|e| e.to_string())?;
    let ks: Vec<String> = rep.ks().iter().map(ToString::to_string).collect();
    let terms: Vec<String> = rep.terms().map(|(i, k)| format!("C({k},{i})")).collect();
    let expansion = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
    let text = format!(
        "c = {c}, d = {d}\nexpansion: {c} = {expansion}\nks = [{}]\nupper = {}\nlower = {}\n",
        ks.join(", "),
        rep.upper(),
        rep.lower()
    );
    write_out(out, &text)?;
    Ok(EXIT_OK)
}

fn open_catalog(path: Option<&PathBuf>) -> Result<Catalog, String> {
    match path {
        Some(p) => load_catalog(p).map_err(|e| e.to_string()),
        None => Ok(default_catalog()),
    }
}

fn inline_invariants(inline: &InlineInvariants) -> Result<ThreefoldInvariants, String> {
    let missing: Vec<&str> = [
        ("--alpha", inline.alpha),
        ("--beta", inline.beta),
        ("--a", inline.a_adj),
        ("--b", inline.b_adj),
    ]
    .iter()
    .filter(|(_, v)| v.is_none())
    .map(|(flag, _)| *flag)
    .collect();
    if !missing.is_empty() {
        return Err(format!("give a catalog entry name or inline invariants (missing {})", missing.join(", ")));
    }
    let inv = ThreefoldInvariants {
        name: "inline".into(),
        alpha: inline.alpha.unwrap_or_default(),
        beta: inline.beta.unwrap_or_default(),
        a_adj: inline.a_adj.unwrap_or_default(),
        b_adj: inline.b_adj.unwrap_or_default(),
        subcanonical_e: None,
        h3: None,
        pic_is_z: false,
        is_linear_p2_bundle: inline.p2_bundle,
        is_quadric: inline.quadric,
        is_p3: inline.p3,
    };
    inv.validate().map_err(|e| e.to_string())?;
    Ok(inv)
}

fn h1(flag: bool) -> H1Vanishing {
    if flag {
        H1Vanishing::KnownZero
    } else {
        H1Vanishing::Unknown
    }
}

fn bound(args: BoundArgs, out: &mut dyn Write) -> Result<i32, String> {
    let inv = match &args.name {
        Some(name) => open_catalog(args.catalog.as_ref())?
            .get(name)
            .map_err(|e| e.to_string())?
            .clone(),
        None => inline_invariants(&args.inline)?,
    };
    if inv.is_p3 {
        return Err("P^3 is out of scope: the codimension floors exclude Y = P^3".into());
    }
    let spec = BundleSpec::new(args.variant.into(), args.d, h1(args.h1_zero)).map_err(|e| e.to_string())?;
    let result = nl_codim_floor(&inv, &spec);
    let mut text = format!(
        "entry: {}\nvariant: {}, d = {}, h1: {}\nbranch: {}\nn: {}\nhypotheses:\n",
        inv.name,
        spec.variant,
        spec.d,
        if args.h1_zero { "known zero" } else { "unknown" },
        result.branch,
        result.n_value
    );
    for h in &result.hypotheses {
        text.push_str(&format!("  [{}] {}\n", if h.passed { "pass" } else { "FAIL" }, h.name));
    }
    for note in &result.notes {
        text.push_str(&format!("note: {note}\n"));
    }
    let code = match (result.status, result.floor_value) {
        (BoundStatus::Floor, Some(f)) => {
            text.push_str(&format!("result: floor {f}\n"));
            EXIT_OK
        }
        (BoundStatus::OutOfDomain, _) => return Err("entry is out of scope".into()),
        _ => {
            let failed: Vec<&str> = result.failed_hypotheses().map(|h| h.name.as_str()).collect();
            text.push_str(&format!("result: no_bound (failed: {})\n", failed.join("; ")));
            EXIT_NEGATIVE
        }
    };
    if let Some(c) = args.trace {
        if code == EXIT_OK {
            let trace = contradiction_trace(&inv, &spec, c).map_err(|e| e.to_string())?;
            text.push_str("trace:\n");
            for step in &trace.steps {
                text.push_str(&format!("  {step}\n"));
            }
        } else {
            text.push_str("trace: unavailable without a floor\n");
        }
    }
    write_out(out, &text)?;
    Ok(code)
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> Result<i32, String> {
    let config = VerifyConfig {
        seed: args.seed,
        prime: args.prime,
        trials: args.trials,
        c_max: args.cmax,
        d_max: args.dmax,
        koszul: KoszulConfig {
            budget: args.budget,
            t_max: args.t_max,
        },
    };
    let reports = if args.suite == "all" {
        run_all(&config)
    } else {
        let suite: Suite = args.suite.parse().map_err(|e: crate::verify::VerifyError| e.to_string())?;
        run_suite(suite, &config).map(|r| vec![r])
    }
    .map_err(|e| e.to_string())?;
    let text = match args.format {
        Format::Table => to_table(&reports),
        Format::Csv => to_csv(&reports),
    };
    write_out(out, &text)?;
    Ok(if reports.iter().all(|r| r.all_passed()) { EXIT_OK } else { EXIT_VIOLATION })
}

fn ample(args: AmpleArgs, out: &mut dyn Write) -> Result<i32, String> {
    let catalog = open_catalog(args.catalog.as_ref())?;
    let inv = catalog.get(&args.name).map_err(|e| e.to_string())?;
    let report = blowup_ampleness(inv, args.d, args.k, h1(args.h1_zero)).map_err(|e| e.to_string())?;
    let mut text = String::new();
    for h in &report.hypotheses {
        text.push_str(&format!("[{}] {}\n", if h.passed { "pass" } else { "FAIL" }, h.name));
    }
    let (line, code) = match report.verdict {
        Ampleness::Ample => (format!("ample: {} > {}", report.volume, report.k), EXIT_OK),
        Ampleness::NotAmple => (format!("not_ample: {} <= {}", report.volume, report.k), EXIT_NEGATIVE),
        Ampleness::HypothesesUnmet => ("hypotheses_unmet".to_string(), EXIT_INPUT),
    };
    text.push_str(&line);
    text.push('\n');
    write_out(out, &text)?;
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::DEFAULT_SEED;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("explicit-nl").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn decompose_examples() {
        let (code, out, _) = run_str(&["decompose", "5", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("ks = [3, 2]") && out.contains("upper = 7") && out.contains("lower = 2"), "{out}");
        let (_, out, _) = run_str(&["decompose", "0", "4"]);
        assert!(out.contains("ks = []") && out.contains("upper = 0"), "{out}");
        let (_, out, _) = run_str(&["decompose", "29", "10"]);
        assert!(out.contains("upper = 31"), "{out}");
        assert_eq!(run_str(&["decompose", "5", "0"]).0, 2);
        assert_eq!(run_str(&["decompose", "-5", "2"]).0, 2);
    }

    #[test]
    fn seeds_accept_hex() {
        assert_eq!(parse_seed("0xC0FFEE"), Ok(DEFAULT_SEED));
        assert_eq!(parse_seed("7"), Ok(7));
        assert!(parse_seed("seven").is_err());
    }

    #[test]
    fn inline_bound() {
        let (code, out, err) = run_str(&[
            "bound", "--variant", "adjoint", "-d", "12", "--h1-zero", "--alpha", "1", "--beta", "1", "--a", "1", "--b", "1",
        ]);
        assert_eq!(code, 0, "{err}");
        assert!(out.contains("result: floor 7"), "{out}");
        let (code, _, err) = run_str(&["bound", "--variant", "adjoint", "-d", "12", "--alpha", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("--beta"), "{err}");
        let (code, _, err) = run_str(&[
            "bound", "--variant", "adjoint", "-d", "12", "--alpha", "5", "--beta", "1", "--a", "5", "--b", "1", "--p3",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("out of scope"), "{err}");
    }

    #[test]
    fn help_exits_cleanly() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("decompose"));
    }
}
