//! Binomial arithmetic and Macaulay representations.
//!
//! Every integer `c >= 0` has, for each degree `d >= 1`, a unique expansion
//!
//! ```text
//! c = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_f, f),   k_d > k_{d-1} > ... > k_f >= f >= 1
//! ```
//!
//! from which the growth bounds `c^<d>` ([`upper_macaulay`]) and `c_<d>`
//! ([`lower_macaulay`]) are read off. All values are arbitrary precision; a
//! `u64` fast path is used internally whenever the input fits and falls back
//! to `BigUint` on any overflow.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacaulayError {
    #[error("Macaulay degree must be at least 1")]
    ZeroDegree,
    #[error("slack e = {e} outside the admissible range 0..={max} for n = {n}")]
    SlackOutOfRange { e: u64, n: u64, max: u64 },
    #[error("no Macaulay decomposition found for c = {c} in degree {d}")]
    NoDecomposition { c: BigUint, d: u32 },
}

/// `C(m, p)`, zero whenever `m < p` (including every negative `m`).
pub fn binom(m: i64, p: u64) -> BigUint {
    if m < 0 || (m as u64) < p {
        return BigUint::zero();
    }
    binom_big(&BigUint::from(m as u64), p)
}

/// `C(m, p)` for an arbitrary-precision top argument.
pub fn binom_big(m: &BigUint, p: u64) -> BigUint {
    if *m < BigUint::from(p) {
        return BigUint::zero();
    }
    // C(m, p) = C(m, m - p); only shrink p when m - p is representable.
    let p = match (m - BigUint::from(p)).to_u64() {
        Some(q) if q < p => q,
        _ => p,
    };
    let mut acc = BigUint::one();
    let base = m - BigUint::from(p);
    for i in 1..=p {
        acc *= &base + BigUint::from(i);
        acc /= BigUint::from(i);
    }
    acc
}

/// `C(m, p)` if it does not exceed `cap`, `None` otherwise.
fn binom_capped(m: u64, p: u64, cap: u64) -> Option<u64> {
    if m < p {
        return Some(0);
    }
    let p = p.min(m - p);
    let base = (m - p) as u128;
    let mut acc: u128 = 1;
    // C(base + i, i) is non-decreasing in i, so the first overshoot is final.
    for i in 1..=p as u128 {
        acc = acc * (base + i) / i;
        if acc > cap as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// The unique strictly decreasing binomial expansion of an integer in a given degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MacaulayRep {
    degree: u32,
    ks: Vec<BigUint>,
}

impl MacaulayRep {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `(k_d, k_{d-1}, ..., k_f)`; empty for `c = 0`.
    pub fn ks(&self) -> &[BigUint] {
        &self.ks
    }

    pub fn ks_u64(&self) -> Option<Vec<u64>> {
        self.ks.iter().map(ToPrimitive::to_u64).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.ks.is_empty()
    }

    /// The index `f` of the last term, or `None` for the empty representation.
    pub fn lowest_index(&self) -> Option<u32> {
        if self.ks.is_empty() {
            None
        } else {
            Some(self.degree + 1 - self.ks.len() as u32)
        }
    }

    /// `(i, k_i)` pairs from `i = d` downwards.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigUint)> + '_ {
        let d = u64::from(self.degree);
        self.ks.iter().enumerate().map(move |(j, k)| (d - j as u64, k))
    }

    /// Reconstructs the represented integer.
    pub fn value(&self) -> BigUint {
        self.terms().map(|(i, k)| binom_big(k, i)).sum()
    }

    /// `c^<d>`: the sum of `C(k_i + 1, i + 1)`.
    pub fn upper(&self) -> BigUint {
        self.terms()
            .map(|(i, k)| binom_big(&(k + 1u32), i + 1))
            .sum()
    }

    /// `c_<d>`: the sum of `C(k_i - 1, i)`.
    pub fn lower(&self) -> BigUint {
        self.terms()
            .map(|(i, k)| {
                if k.is_zero() {
                    BigUint::zero()
                } else {
                    binom_big(&(k - 1u32), i)
                }
            })
            .sum()
    }
}

/// Greedy descent: the largest `k_d` with `C(k_d, d) <= c`, then the remainder in degree `d - 1`.
pub fn macaulay_rep(c: impl Into<BigUint>, d: u32) -> Result<MacaulayRep, MacaulayError> {
    let c = c.into();
    if d == 0 {
        return Err(MacaulayError::ZeroDegree);
    }
    let ks = match c.to_u64() {
        Some(small) => greedy_small(small, d)
            .into_iter()
            .map(BigUint::from)
            .collect(),
        None => greedy_big(&c, d),
    };
    let rep = MacaulayRep { degree: d, ks };
    if rep.ks.len() > d as usize {
        return Err(MacaulayError::NoDecomposition { c, d });
    }
    Ok(rep)
}

/// `c^<d>`, with `0^<d> = 0`.
pub fn upper_macaulay(c: impl Into<BigUint>, d: u32) -> Result<BigUint, MacaulayError> {
    Ok(macaulay_rep(c, d)?.upper())
}

/// `c_<d>`, with `0_<d> = 0`.
pub fn lower_macaulay(c: impl Into<BigUint>, d: u32) -> Result<BigUint, MacaulayError> {
    Ok(macaulay_rep(c, d)?.lower())
}

fn greedy_small(mut c: u64, d: u32) -> Vec<u64> {
    let mut ks = Vec::with_capacity(d as usize);
    let mut i = u64::from(d);
    while c > 0 && i >= 1 {
        let k = if i == 1 {
            c
        } else {
            largest_k_small(c, i)
        };
        // binom_capped cannot fail here: C(k, i) <= c by construction.
        c -= binom_capped(k, i, c).unwrap_or(c);
        ks.push(k);
        i -= 1;
    }
    ks
}

/// Largest `k >= i` with `C(k, i) <= c`, for `c >= 1`.
fn largest_k_small(c: u64, i: u64) -> u64 {
    let fits = |k: u64| binom_capped(k, i, c).is_some();
    let mut lo = i;
    let mut step = 1u64;
    // Gallop until C(lo + step, i) > c, then bisect.
    while fits(lo.saturating_add(step)) {
        lo += step;
        step = step.saturating_mul(2);
    }
    let mut hi = lo.saturating_add(step);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

fn greedy_big(c: &BigUint, d: u32) -> Vec<BigUint> {
    let mut rem = c.clone();
    let mut ks = Vec::with_capacity(d as usize);
    let mut i = u64::from(d);
    while !rem.is_zero() && i >= 1 {
        let k = if i == 1 {
            rem.clone()
        } else {
            largest_k_big(&rem, i)
        };
        rem -= binom_big(&k, i);
        ks.push(k);
        i -= 1;
    }
    ks
}

fn largest_k_big(c: &BigUint, i: u64) -> BigUint {
    let fits = |k: &BigUint| binom_big(k, i) <= *c;
    let mut lo = BigUint::from(i);
    let mut step = BigUint::one();
    loop {
        let probe = &lo + &step;
        if !fits(&probe) {
            break;
        }
        lo = probe;
        step <<= 1u32;
    }
    let mut hi = &lo + &step;
    while &hi - &lo > BigUint::one() {
        let mid = &lo + ((&hi - &lo) >> 1u32);
        if fits(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// `sum_{i=0}^{e} (n + 1 - i)`.
pub fn slack_sum(n: u64, e: u64) -> BigUint {
    let n1 = BigUint::from(n) + 1u32;
    let e1 = BigUint::from(e) + 1u32;
    n1 * &e1 - ((BigUint::from(e) * &e1) >> 1u32)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrowthCheck {
    /// `c < sum_{i=0}^{e} (n + 1 - i)`.
    pub hypothesis_met: bool,
    /// `c^<n> <= c + e`.
    pub bound_holds: bool,
}

impl GrowthCheck {
    /// The implication "hypothesis ⇒ bound".
    pub fn consistent(&self) -> bool {
        !self.hypothesis_met || self.bound_holds
    }
}

/// Evaluates both sides of the growth lemma: a small codimension (relative to
/// `n`) can grow by at most the slack `e` under `c -> c^<n>`.
pub fn growth_slack_check(
    c: impl Into<BigUint>,
    n: u32,
    e: u64,
) -> Result<GrowthCheck, MacaulayError> {
    if n == 0 {
        return Err(MacaulayError::ZeroDegree);
    }
    let n64 = u64::from(n);
    if e > n64 + 1 {
        return Err(MacaulayError::SlackOutOfRange { e, n: n64, max: n64 + 1 });
    }
    let c = c.into();
    let hypothesis_met = c < slack_sum(n64, e);
    let bound_holds = upper_macaulay(c.clone(), n)? <= c + BigUint::from(e);
    Ok(GrowthCheck {
        hypothesis_met,
        bound_holds,
    })
}

/// A triple where Green's recursive inequality holds but `c' <= c_<d>` fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GreenCounterexample {
    pub c: u64,
    pub c_prime: u64,
    pub d: u32,
}

/// Table of `c_<d>` for `0 <= c <= c_max`, `1 <= d <= d_max`.
#[derive(Debug, Clone)]
pub struct LowerTable {
    c_max: u64,
    rows: Vec<Vec<u64>>,
}

impl LowerTable {
    pub fn new(c_max: u64, d_max: u32) -> Self {
        use rayon::prelude::*;
        let rows = (1..=d_max)
            .into_par_iter()
            .map(|d| {
                (0..=c_max)
                    .map(|c| {
                        // c_<d> <= c, so the conversion never fails.
                        greedy_small(c, d)
                            .iter()
                            .enumerate()
                            .map(|(j, &k)| {
                                let i = u64::from(d) - j as u64;
                                binom_capped(k.saturating_sub(1), i, u64::MAX).unwrap_or(u64::MAX)
                            })
                            .sum()
                    })
                    .collect()
            })
            .collect();
        Self { c_max, rows }
    }

    pub fn get(&self, c: u64, d: u32) -> u64 {
        debug_assert!(c <= self.c_max);
        self.rows[d as usize - 1][c as usize]
    }
}

/// Scans `0 <= c' <= c <= c_max`, `2 <= d <= d_max` for violations of
/// "`c' <= c'_<d> + (c - c')_<d-1>` implies `c' <= c_<d>`".
pub fn green_implication_scan(c_max: u64, d_max: u32) -> Vec<GreenCounterexample> {
    use rayon::prelude::*;
    if d_max < 2 {
        return Vec::new();
    }
    let table = LowerTable::new(c_max, d_max);
    (0..=c_max)
        .into_par_iter()
        .flat_map_iter(|c| {
            let table = &table;
            (2..=d_max).flat_map(move |d| {
                (0..=c).filter_map(move |cp| {
                    let premise = cp <= table.get(cp, d) + table.get(c - cp, d - 1);
                    let conclusion = cp <= table.get(c, d);
                    (premise && !conclusion).then_some(GreenCounterexample { c, c_prime: cp, d })
                })
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ks(c: u64, d: u32) -> Vec<u64> {
        macaulay_rep(c, d).unwrap().ks_u64().unwrap()
    }

    fn up(c: u64, d: u32) -> u64 {
        upper_macaulay(c, d).unwrap().to_u64().unwrap()
    }

    fn low(c: u64, d: u32) -> u64 {
        lower_macaulay(c, d).unwrap().to_u64().unwrap()
    }

    #[test]
    fn binom_values_and_convention() {
        assert_eq!(binom(3, 2), BigUint::from(3u32));
        assert_eq!(binom(1, 2), BigUint::zero());
        assert_eq!(binom(12, 10), BigUint::from(66u32));
        assert_eq!(binom(-4, 2), BigUint::zero());
        assert_eq!(binom(7, 0), BigUint::one());
        assert_eq!(binom(0, 0), BigUint::one());
    }

    #[test]
    fn binom_matches_pascal_rows() {
        let mut row = vec![BigUint::one()];
        for m in 1..=60i64 {
            let mut next = vec![BigUint::one(); m as usize + 1];
            for p in 1..m as usize {
                next[p] = &row[p - 1] + &row[p];
            }
            row = next;
            for (p, v) in row.iter().enumerate() {
                assert_eq!(binom(m, p as u64), *v, "C({m}, {p})");
            }
        }
    }

    #[test]
    fn capped_binomial_reports_overflow() {
        assert_eq!(binom_capped(10, 3, 120), Some(120));
        assert_eq!(binom_capped(10, 3, 119), None);
        assert_eq!(binom_capped(2, 5, 0), Some(0));
        assert_eq!(binom_capped(200, 100, u64::MAX), None);
    }

    #[test]
    fn representation_examples() {
        assert!(macaulay_rep(0u32, 5).unwrap().is_zero());
        assert_eq!(ks(5, 2), vec![3, 2]);
        assert_eq!(ks(29, 10), vec![11, 10, 8, 7, 6, 5, 4, 3, 2, 1]);
        assert_eq!(macaulay_rep(29u32, 10).unwrap().lowest_index(), Some(1));
        assert_eq!(macaulay_rep(5u32, 2).unwrap().lowest_index(), Some(1));
    }

    #[test]
    fn zero_degree_is_rejected() {
        assert_eq!(macaulay_rep(3u32, 0), Err(MacaulayError::ZeroDegree));
        assert!(upper_macaulay(3u32, 0).is_err());
    }

    #[test]
    fn growth_bound_examples() {
        assert_eq!(up(0, 3), 0);
        assert_eq!(up(5, 2), 7);
        assert_eq!(up(29, 10), 31);
        assert_eq!(low(0, 4), 0);
        assert_eq!(low(5, 2), 2);
        for c in 1..=1000 {
            assert_eq!(low(c, 1), c - 1);
        }
    }

    #[test]
    fn large_inputs_take_the_big_path() {
        let c: BigUint = BigUint::from(u64::MAX) * 1000u32 + 12345u32;
        for d in 1..=6 {
            let rep = macaulay_rep(c.clone(), d).unwrap();
            assert_eq!(rep.value(), c);
            let ks = rep.ks();
            assert!(ks.windows(2).all(|w| w[0] > w[1]));
        }
        assert_eq!(upper_macaulay(c.clone(), 1).unwrap(), binom_big(&(&c + 1u32), 2));
        assert_eq!(lower_macaulay(c.clone(), 1).unwrap(), &c - 1u32);
    }

    #[test]
    fn big_and_small_paths_agree() {
        for d in 1..=9 {
            for c in (0..5000u64).step_by(7) {
                let small: Vec<BigUint> = greedy_small(c, d).into_iter().map(BigUint::from).collect();
                assert_eq!(small, greedy_big(&BigUint::from(c), d), "c={c} d={d}");
            }
        }
    }

    #[test]
    fn slack_sum_closed_form() {
        for n in 1..20u64 {
            for e in 0..=n + 1 {
                let direct: u64 = (0..=e).map(|i| n + 1 - i).sum();
                assert_eq!(slack_sum(n, e), BigUint::from(direct));
            }
        }
    }

    #[test]
    fn growth_slack_examples() {
        let g = growth_slack_check(29u32, 10, 2).unwrap();
        assert!(g.hypothesis_met && g.bound_holds);
        let g = growth_slack_check(0u32, 5, 0).unwrap();
        assert!(g.hypothesis_met && g.bound_holds);
        let g = growth_slack_check(5u32, 10, 0).unwrap();
        assert!(g.hypothesis_met && g.bound_holds);
        assert_eq!(
            growth_slack_check(1u32, 3, 5),
            Err(MacaulayError::SlackOutOfRange { e: 5, n: 3, max: 4 })
        );
        // Hypothesis fails: 30 is not below 11 + 10 + 9.
        let g = growth_slack_check(30u32, 10, 2).unwrap();
        assert!(!g.hypothesis_met);
    }

    #[test]
    fn green_examples() {
        // c = 10, c' = 4, d = 3: premise 4 <= 1 + 3 and conclusion 4 <= 4 both hold.
        assert_eq!(low(4, 3), 1);
        assert_eq!(low(6, 2), 3);
        assert_eq!(low(10, 3), 4);
        let table = LowerTable::new(20, 4);
        assert_eq!(table.get(10, 3), 4);
        assert_eq!(table.get(7, 1), 6);
        assert!(green_implication_scan(500, 8).is_empty());
        assert!(green_implication_scan(10, 1).is_empty());
    }

    #[test]
    fn lower_table_matches_direct_evaluation() {
        let table = LowerTable::new(300, 7);
        for d in 1..=7 {
            for c in 0..=300 {
                assert_eq!(table.get(c, d), low(c, d));
            }
        }
    }
}
