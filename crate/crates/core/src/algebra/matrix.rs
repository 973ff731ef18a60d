//! Dense matrices over GF(p) and their right kernels.

use alloc::vec;
use alloc::vec::Vec;

use super::fp::{inv_mod, mul_mod, neg_mod, sub_mod};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl FpMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        Self {
            p,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from rows of signed entries; all rows must have equal length.
    pub fn from_rows(p: u64, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(p, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.entries[i * cols + j] = super::fp::from_i64(v, p);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        if self.rows == 0 || self.cols == 0 {
            return;
        }
        self.entries[i * self.cols + j] = v % self.p;
    }

    /// Appends a row; its length must equal `cols`.
    pub fn push_row(&mut self, row: &[u64]) {
        assert_eq!(row.len(), self.cols);
        self.entries.extend(row.iter().map(|&v| v % self.p));
        self.rows += 1;
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let p = self.p;
        (0..self.rows)
            .map(|i| {
                self.entries[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| (acc + mul_mod(a, b, p)) % p)
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.entries.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = inv_mod(self.get(r, c), p);
            for j in c..cols {
                let v = mul_mod(self.get(r, j), inv, p);
                self.entries[r * cols + j] = v;
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = sub_mod(self.get(i, j), mul_mod(factor, self.get(r, j), p), p);
                    self.entries[i * cols + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel in reduced row echelon form.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = FpMatrix::zeros(p, 0, self.cols);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = neg_mod(m.get(row, free), p);
            }
            basis.push_row(&v);
        }
        basis.rref();
        basis.entries.chunks(self.cols.max(1)).take(basis.rows).map(<[u64]>::to_vec).collect()
    }
}

/// Free-function form of [`FpMatrix::kernel`].
pub fn kernel(m: &FpMatrix) -> Vec<Vec<u64>> {
    m.kernel()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_examples() {
        assert!(FpMatrix::identity(7, 2).kernel().is_empty());
        assert_eq!(FpMatrix::zeros(7, 1, 2).kernel().len(), 2);
        let m = FpMatrix::from_rows(7, &[vec![1, 1]]);
        assert_eq!(m.kernel(), vec![vec![1, 6]]);
    }

    #[test]
    fn kernel_annihilates() {
        let m = FpMatrix::from_rows(
            5,
            &[vec![1, 2, 3, 4, 0], vec![2, 4, 1, 3, 1], vec![3, 1, 4, 2, 1]],
        );
        let ker = m.kernel();
        assert_eq!(ker.len(), m.cols() - m.rank());
        for v in &ker {
            assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }
}
