//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

/// Pascal's triangle up to row `n_max`, saturating at `u64::MAX`.
pub struct Pascal {
    rows: Vec<Vec<u64>>,
}

impl Pascal {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut row = vec![1u64; n + 1];
            for k in 1..n {
                row[k] = rows[n - 1][k - 1].saturating_add(rows[n - 1][k]);
            }
            rows.push(row);
        }
        Self { rows }
    }

    /// `C(m, p)`, zero when `m < p`.
    pub fn get(&self, m: u64, p: u64) -> u64 {
        if p > m {
            return 0;
        }
        self.rows[m as usize][p as usize]
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    /// `sum C(k_i, i)` over `(k_d, ..., k_f)`.
    pub fn value(&self, ks: &[u64], d: u32) -> u64 {
        ks.iter()
            .enumerate()
            .map(|(j, &k)| self.get(k, u64::from(d) - j as u64))
            .fold(0u64, u64::saturating_add)
    }

    pub fn upper(&self, ks: &[u64], d: u32) -> u64 {
        ks.iter()
            .enumerate()
            .map(|(j, &k)| self.get(k + 1, u64::from(d) - j as u64 + 1))
            .fold(0u64, u64::saturating_add)
    }

    pub fn lower(&self, ks: &[u64], d: u32) -> u64 {
        ks.iter()
            .enumerate()
            .map(|(j, &k)| if k == 0 { 0 } else { self.get(k - 1, u64::from(d) - j as u64) })
            .fold(0u64, u64::saturating_add)
    }
}

/// `k_d > ... > k_f >= f >= 1`.
pub fn is_valid_sequence(ks: &[u64], d: u32) -> bool {
    ks.len() <= d as usize
        && ks.windows(2).all(|w| w[0] > w[1])
        && ks.iter().enumerate().all(|(j, &k)| k >= u64::from(d) - j as u64)
}

/// Every valid sequence in degree `d` whose value is at most `c_max`,
/// bucketed by value.
pub fn exhaustive_representations(c_max: u64, d: u32, pascal: &Pascal) -> Vec<Vec<Vec<u64>>> {
    let mut buckets = vec![Vec::new(); c_max as usize + 1];
    buckets[0].push(Vec::new());
    let mut stack = Vec::new();
    descend(d, u64::MAX, 0, c_max, pascal, &mut stack, &mut buckets);
    buckets
}

fn descend(
    i: u32,
    below: u64,
    sum: u64,
    c_max: u64,
    pascal: &Pascal,
    stack: &mut Vec<u64>,
    buckets: &mut [Vec<Vec<u64>>],
) {
    let mut k = u64::from(i);
    while k < below {
        let term = pascal.get(k, u64::from(i));
        if sum + term > c_max {
            break;
        }
        stack.push(k);
        buckets[(sum + term) as usize].push(stack.clone());
        if i > 1 {
            descend(i - 1, k, sum + term, c_max, pascal, stack, buckets);
        }
        stack.pop();
        k += 1;
        if k as usize >= pascal.rows() {
            break;
        }
    }
}

/// `C(m, p)` by the multiplicative formula; exact while the result fits in `u128`.
pub fn binomial(m: u64, p: u64) -> u128 {
    if p > m {
        return 0;
    }
    let p = p.min(m - p) as u128;
    let m = m as u128;
    (1..=p).fold(1u128, |acc, i| acc * (m - p + i) / i)
}
