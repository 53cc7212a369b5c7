//! The correspondence between full-length linear codes over GF(q) and
//! arcs in PG(k-1,q), plus the Griesmer bound.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Geometry;
use crate::linalg::Mat;
use crate::multiset::Multiset;

const CODEWORD_CLASS_BUDGET: u64 = 2_000_000;

/// Parameters of an `[n, k, d]_q` code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: u64,
    pub k: u32,
    pub d: u64,
    pub q: u32,
}

impl CodeParams {
    pub fn meets_griesmer(&self) -> Result<bool> {
        Ok(self.n == griesmer_bound(self.q, self.k, self.d)?)
    }
}

/// A `k x n` generator matrix over GF(q): full rank, no zero column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    pub k: usize,
    pub n: usize,
    pub q: u32,
    mat: Mat,
}

impl GeneratorMatrix {
    pub fn new(q: u32, rows: &[Vec<u8>]) -> Result<GeneratorMatrix> {
        let mat = Mat::from_rows(q, rows)?;
        let (k, n) = (mat.rows, mat.cols);
        for c in 0..n {
            if (0..k).all(|r| mat.get(r, c) == 0) {
                return Err(Error::InvalidArgument(format!(
                    "column {c} is zero; the code is not of full length"
                )));
            }
        }
        if mat.rank() != k {
            return Err(Error::InvalidArgument(format!(
                "generator matrix has rank {} < {k}",
                mat.rank()
            )));
        }
        Ok(GeneratorMatrix { k, n, q, mat })
    }

    pub fn row(&self, r: usize) -> &[u8] {
        self.mat.row(r)
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.k).map(|r| self.mat.get(r, c)).collect()
    }

    /// The multiset of column points in PG(k-1,q); an `(n, n-d)`-arc.
    /// Needs `k >= 2` so the ambient space has hyperplanes.
    pub fn arc(&self) -> Result<Multiset> {
        if self.k < 2 {
            return Err(Error::InvalidArgument(
                "the column arc needs dimension k >= 2".into(),
            ));
        }
        let geom = Geometry::shared(self.k - 1, self.q)?;
        let mut m = Multiset::empty(Arc::clone(&geom));
        let mut mult = vec![0u32; geom.num_points()];
        for c in 0..self.n {
            let idx = geom.point_index(&self.column(c))?;
            mult[idx as usize] += 1;
        }
        for (i, v) in mult.into_iter().enumerate() {
            if v > 0 {
                m = m.add(&Multiset::indicator(Arc::clone(&geom), &[i as u32]).scale(v)?)?;
            }
        }
        Ok(m)
    }

    /// Minimum distance, computed two ways and cross-checked: exhaustive
    /// codeword enumeration over proportionality classes, and `n - w_max`
    /// of the column arc.
    pub fn min_distance(&self) -> Result<u64> {
        let classes = crate::geometry::v(self.k as u32, self.q)?;
        if classes > CODEWORD_CLASS_BUDGET {
            return Err(Error::SizeBudget {
                what: "codeword proportionality classes",
                needed: classes,
                budget: CODEWORD_CLASS_BUDGET,
            });
        }
        if self.k == 1 {
            // all codewords are proportional to the single row
            return Ok(self.mat.row(0).iter().filter(|&&c| c != 0).count() as u64);
        }
        // messages up to scalars are exactly the points of PG(k-1,q)
        let geom = Geometry::shared(self.k - 1, self.q)?;
        let mut best = u64::MAX;
        for msg in geom.points() {
            let mut weight = 0u64;
            for c in 0..self.n {
                let mut acc = 0u32;
                for (r, &coef) in msg.coords.iter().enumerate() {
                    acc += coef as u32 * self.mat.get(r, c) as u32;
                }
                if acc % self.q != 0 {
                    weight += 1;
                }
            }
            best = best.min(weight);
        }
        let arc = self.arc()?;
        let w_max = arc.arc_params()?.w;
        let via_arc = self.n as u64 - w_max;
        if best != via_arc {
            return Err(Error::InvariantViolation(format!(
                "min distance mismatch: codeword enumeration {best}, arc route {via_arc}"
            )));
        }
        Ok(best)
    }

    pub fn params(&self) -> Result<CodeParams> {
        Ok(CodeParams {
            n: self.n as u64,
            k: self.k as u32,
            d: self.min_distance()?,
            q: self.q,
        })
    }
}

/// The Griesmer bound `g_q(k, d)`: minimal length of a `[n, k, d]_q` code.
pub fn griesmer_bound(q: u32, k: u32, d: u64) -> Result<u64> {
    if k == 0 || d == 0 {
        return Err(Error::InvalidArgument("griesmer bound needs k >= 1 and d >= 1".into()));
    }
    let mut sum = 0u64;
    let mut qi = 1u64;
    for i in 0..k {
        sum = sum
            .checked_add(d.div_ceil(qi))
            .ok_or(Error::Overflow("griesmer sum"))?;
        if i + 1 < k {
            qi = qi.checked_mul(q as u64).ok_or(Error::Overflow("griesmer q^i"))?;
        }
    }
    Ok(sum)
}
