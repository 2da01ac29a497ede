//! Monomials of a fixed degree in `x_0, ..., x_{n-1}`, ordered lexicographically
//! with `x_0 > x_1 > ... > x_{n-1}` (greatest first).

pub type Exponents = Vec<u32>;

fn small_binom(n: u64, k: u64) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=u128::from(k) {
        acc = acc * (u128::from(n - k) + i) / i;
    }
    usize::try_from(acc).expect("monomial count exceeds usize")
}

/// Number of monomials of `degree` in `nvars` variables; zero for negative degrees.
pub fn count(nvars: usize, degree: i64) -> usize {
    if degree < 0 {
        return 0;
    }
    if nvars == 0 {
        return usize::from(degree == 0);
    }
    small_binom(degree as u64 + nvars as u64 - 1, nvars as u64 - 1)
}

/// All monomials of `degree`, greatest first.
pub fn enumerate(nvars: usize, degree: i64) -> Vec<Exponents> {
    let mut out = Vec::with_capacity(count(nvars, degree));
    if degree < 0 || nvars == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0u32; nvars];
    fill(&mut cur, 0, degree as u32, &mut out);
    out
}

fn fill(cur: &mut Exponents, pos: usize, left: u32, out: &mut Vec<Exponents>) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(cur.clone());
        return;
    }
    for e in (0..=left).rev() {
        cur[pos] = e;
        fill(cur, pos + 1, left - e, out);
    }
}

/// Position of `exps` in [`enumerate`]`(exps.len(), deg)`.
pub fn rank(exps: &[u32]) -> usize {
    let n = exps.len();
    let mut left: i64 = exps.iter().map(|&e| i64::from(e)).sum();
    let mut idx = 0usize;
    for (j, &e) in exps.iter().enumerate().take(n.saturating_sub(1)) {
        // Monomials sharing the prefix but with a larger exponent at j.
        idx += count(n - j, left - i64::from(e) - 1);
        left -= i64::from(e);
    }
    idx
}

/// Precomputed index of products `u * m` for `u` of degree `base` and `m` of
/// degree `step`.
#[derive(Debug, Clone)]
pub struct ProductTable {
    step_count: usize,
    table: Vec<usize>,
}

impl ProductTable {
    pub fn new(nvars: usize, base: i64, step: i64) -> Self {
        let left = enumerate(nvars, base);
        let right = enumerate(nvars, step);
        let mut table = Vec::with_capacity(left.len() * right.len());
        let mut prod = vec![0u32; nvars];
        for u in &left {
            for m in &right {
                for (slot, (a, b)) in prod.iter_mut().zip(u.iter().zip(m)) {
                    *slot = a + b;
                }
                table.push(rank(&prod));
            }
        }
        Self {
            step_count: right.len(),
            table,
        }
    }

    pub fn step_count(&self) -> usize {
        self.step_count
    }

    #[inline]
    pub fn product(&self, u: usize, m: usize) -> usize {
        self.table[u * self.step_count + m]
    }
}
