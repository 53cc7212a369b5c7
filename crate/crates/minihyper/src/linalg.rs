//! Linear algebra over the prime field GF(p).
//!
//! Everything here works on small dense matrices with `u8` entries in
//! `[0, p)`. This is exact integer arithmetic; no floating point.

use crate::error::{Error, Result};

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[inline]
pub fn add_mod(a: u8, b: u8, p: u32) -> u8 {
    ((a as u32 + b as u32) % p) as u8
}

#[inline]
pub fn mul_mod(a: u8, b: u8, p: u32) -> u8 {
    ((a as u32 * b as u32) % p) as u8
}

#[inline]
pub fn neg_mod(a: u8, p: u32) -> u8 {
    ((p - a as u32) % p) as u8
}

/// Multiplicative inverse in GF(p). Panics on zero.
pub fn inv_mod(a: u8, p: u32) -> u8 {
    assert!(a != 0, "inverse of zero");
    // extended Euclid on (a, p)
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i64) as u8
}

/// Scale a vector so its first nonzero entry is 1. Returns `None` for zero vectors.
pub fn normalize(v: &[u8], p: u32) -> Option<Vec<u8>> {
    let first = v.iter().position(|&c| c != 0)?;
    let inv = inv_mod(v[first], p);
    Some(v.iter().map(|&c| mul_mod(c, inv, p)).collect())
}

#[inline]
pub fn dot_mod(a: &[u8], b: &[u8], p: u32) -> u8 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = 0u32;
    for (x, y) in a.iter().zip(b) {
        acc += *x as u32 * *y as u32;
    }
    (acc % p) as u8
}

/// Dense row-major matrix over GF(p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub p: u32,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u8>,
}

impl Mat {
    pub fn zero(p: u32, rows: usize, cols: usize) -> Self {
        Mat {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Mat::zero(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u32, rows: &[Vec<u8>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidArgument("matrix needs at least one row".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        if rows.iter().flatten().any(|&c| c as u32 >= p) {
            return Err(Error::InvalidArgument(format!("entry out of range for GF({p})")));
        }
        Ok(Mat {
            p,
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        debug_assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|r| dot_mod(self.row(r), v, self.p)).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let (va, vb) = (self.get(a, c), self.get(b, c));
            self.set(a, c, vb);
            self.set(b, c, va);
        }
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let p = m.p;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = inv_mod(m.get(row, col), p);
            for c in 0..m.cols {
                m.set(row, c, mul_mod(m.get(row, c), inv, p));
            }
            for r in 0..m.rows {
                if r != row && m.get(r, col) != 0 {
                    let f = m.get(r, col);
                    for c in 0..m.cols {
                        let v = add_mod(m.get(r, c), mul_mod(neg_mod(f, p), m.get(row, c), p), p);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> u8 {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let p = m.p;
        let mut det = 1u8;
        for col in 0..m.cols {
            let Some(pr) = (col..m.rows).find(|&r| m.get(r, col) != 0) else {
                return 0;
            };
            if pr != col {
                m.swap_rows(col, pr);
                det = neg_mod(det, p);
            }
            det = mul_mod(det, m.get(col, col), p);
            let inv = inv_mod(m.get(col, col), p);
            for r in col + 1..m.rows {
                if m.get(r, col) != 0 {
                    let f = mul_mod(m.get(r, col), inv, p);
                    for c in col..m.cols {
                        let v = add_mod(m.get(r, c), mul_mod(neg_mod(f, p), m.get(col, c), p), p);
                        m.set(r, c, v);
                    }
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.det() != 0
    }

    /// One solution of `A x = b`, if any.
    pub fn solve(&self, b: &[u8]) -> Option<Vec<u8>> {
        debug_assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zero(self.p, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b[r]);
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![0u8; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = red.get(r, self.cols);
        }
        Some(x)
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<u8>> {
        let (red, pivots) = self.rref();
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0u8; self.cols];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = neg_mod(red.get(r, fc), p);
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(3) && is_prime(13));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(121));
    }

    #[test]
    fn inverse_roundtrip() {
        for p in [2u32, 3, 5, 7, 13] {
            for a in 1..p as u8 {
                assert_eq!(mul_mod(a, inv_mod(a, p), p), 1);
            }
        }
    }

    #[test]
    fn normalize_first_nonzero_is_one() {
        assert_eq!(normalize(&[0, 2, 1], 3), Some(vec![0, 1, 2]));
        assert_eq!(normalize(&[0, 0, 0], 3), None);
    }

    #[test]
    fn rank_det_solve_kernel() {
        let m = Mat::from_rows(3, &[vec![1, 0, 1], vec![0, 1, 2], vec![1, 1, 0]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.det(), 0);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(m.mul_vec(&k[0]), vec![0, 0, 0]);

        let inv = Mat::from_rows(3, &[vec![1, 1, 0], vec![0, 1, 0], vec![2, 0, 1]]).unwrap();
        assert!(inv.is_invertible());
        let x = inv.solve(&[1, 2, 0]).unwrap();
        assert_eq!(inv.mul_vec(&x), vec![1, 2, 0]);
    }
}
