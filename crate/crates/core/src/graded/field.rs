//! Dense linear algebra over a prime field `F_p`, `p < 2^31`.

use std::fmt;

use super::GradedError;

pub const MAX_PRIME: u32 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2u32;
    while q.saturating_mul(q) <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, GradedError> {
        if !is_prime(p) || p > MAX_PRIME {
            return Err(GradedError::BadPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((u64::from(a) + u64::from(b)) % u64::from(self.p)) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((u64::from(a) + u64::from(self.p) - u64::from(b)) % u64::from(self.p)) as u32
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((u64::from(a) * u64::from(b)) % u64::from(self.p)) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be non-zero.
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, u64::from(self.p) - 2)
    }

    pub fn from_i64(self, a: i64) -> u32 {
        a.rem_euclid(i64::from(self.p)) as u32
    }
}

/// Row-major dense matrix of residues.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<u32>>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in &rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend_from_slice(r);
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> usize {
        self.rows * self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: &[u32]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix, field: PrimeField) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let p = u64::from(field.modulus());
        let mut out = Matrix::zeros(self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for (k, &a) in self.row(r).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let a = u64::from(a);
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    *slot = (*slot + a * u64::from(b)) % p;
                }
            }
            for (dst, &a) in out.row_mut(r).iter_mut().zip(&acc) {
                *dst = a as u32;
            }
        }
        out
    }

    /// Reduces in place to reduced row-echelon form, drops zero rows and
    /// returns the pivot columns.
    pub fn rref(&mut self, field: PrimeField) -> Vec<usize> {
        let p = u64::from(field.modulus());
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut rank = 0usize;
        for col in 0..cols {
            if rank == self.rows {
                break;
            }
            let Some(pivot_row) = (rank..self.rows).find(|&r| self.data[r * cols + col] != 0) else {
                continue;
            };
            if pivot_row != rank {
                for c in 0..cols {
                    self.data.swap(pivot_row * cols + c, rank * cols + c);
                }
            }
            let inv = u64::from(field.inv(self.data[rank * cols + col]));
            for c in col..cols {
                let v = &mut self.data[rank * cols + c];
                *v = (u64::from(*v) * inv % p) as u32;
            }
            let (head, tail) = self.data.split_at_mut(rank * cols);
            let (pivot, rest) = tail.split_at_mut(cols);
            let eliminate = |row: &mut [u32]| {
                let factor = u64::from(row[col]);
                if factor == 0 {
                    return;
                }
                let neg = p - factor;
                for c in col..cols {
                    row[c] = ((u64::from(row[c]) + neg * u64::from(pivot[c])) % p) as u32;
                }
            };
            head.chunks_exact_mut(cols).for_each(eliminate);
            rest.chunks_exact_mut(cols).for_each(eliminate);
            pivots.push(col);
            rank += 1;
        }
        self.rows = rank;
        self.data.truncate(rank * cols);
        pivots
    }

    pub fn rank(&self, field: PrimeField) -> usize {
        self.clone().rref(field).len()
    }

    /// Basis (as rows) of `{ y : self * y = 0 }`.
    pub fn nullspace(&self, field: PrimeField) -> Matrix {
        let mut reduced = self.clone();
        let pivots = reduced.rref(field);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut kernel = Matrix::zeros(0, self.cols);
        let mut v = vec![0u32; self.cols];
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            v.iter_mut().for_each(|x| *x = 0);
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(reduced.get(r, free));
            }
            kernel.push_row(&v);
        }
        kernel
    }
}
