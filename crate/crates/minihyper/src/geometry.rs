//! The projective space PG(r,q) over a prime field: points, flats,
//! incidence, spans, projections and collineations.
//!
//! Points are normalized coordinate vectors (first nonzero coordinate 1),
//! indexed by their rank in the lexicographic ordering of all normalized
//! vectors. Hyperplanes are stored dually with the same normalization, so
//! point `i` and hyperplane `i` correspond under the standard duality.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::linalg::{self, Mat};

/// Number of points of PG(k-1,q): `(q^k - 1)/(q - 1)`, with `v(0) = 0`.
pub fn v(k: u32, q: u32) -> Result<u64> {
    if !linalg::is_prime(q) {
        return Err(Error::NonPrimeOrder(q));
    }
    let qk = (q as u64)
        .checked_pow(k)
        .ok_or(Error::Overflow("v: q^k"))?;
    Ok((qk - 1) / (q as u64 - 1))
}

/// Gaussian binomial `[m choose k]_q` by the product formula.
pub fn gaussian_binomial(m: u32, k: u32, q: u32) -> Result<u64> {
    if k > m {
        return Ok(0);
    }
    let q = q as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        let qp = q.checked_pow(m - i).ok_or(Error::Overflow("gaussian: q^m"))?;
        num = num
            .checked_mul(qp - 1)
            .ok_or(Error::Overflow("gaussian numerator"))?;
        den *= q.pow(i + 1) - 1;
    }
    u64::try_from(num / den).map_err(|_| Error::Overflow("gaussian binomial"))
}

/// A projective point: normalized homogeneous coordinates plus its index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub coords: Vec<u8>,
    pub index: u32,
}

/// A flat (projective subspace) of dimension `dim`.
///
/// `basis` is the lexicographically least independent subset of `points`;
/// `points` is sorted by point index. Hyperplanes additionally carry the
/// normalized coefficient vector of their defining linear form.
#[derive(Debug, Clone)]
pub struct Flat {
    pub dim: usize,
    pub basis: Vec<u32>,
    pub points: Vec<u32>,
    pub dual: Option<Vec<u8>>,
}

impl PartialEq for Flat {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.points == other.points
    }
}
impl Eq for Flat {}

impl Flat {
    #[inline]
    pub fn contains(&self, point: u32) -> bool {
        self.points.binary_search(&point).is_ok()
    }
}

/// Budget guarding geometry construction.
#[derive(Debug, Clone, Copy)]
pub struct GeometryBudget {
    pub max_points: u64,
    pub max_flats_per_dim: u64,
}

impl Default for GeometryBudget {
    fn default() -> Self {
        GeometryBudget {
            max_points: 5_000,
            max_flats_per_dim: 2_000_000,
        }
    }
}

/// Immutable incidence tables for PG(r,q), q prime.
pub struct Geometry {
    r: usize,
    q: u32,
    points: Vec<Point>,
    /// mixed-radix code of a normalized vector -> point index
    code_to_index: Vec<u32>,
    hyperplanes: Vec<Flat>,
    incidence: Vec<Bitset>,
    point_hyperplanes: Vec<Vec<u32>>,
    flats: Vec<OnceLock<Vec<Flat>>>,
    budget: GeometryBudget,
}

impl std::fmt::Debug for Geometry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Geometry")
            .field("r", &self.r)
            .field("q", &self.q)
            .field("points", &self.points.len())
            .finish()
    }
}

fn encode(coords: &[u8], q: u32) -> usize {
    coords.iter().fold(0usize, |acc, &c| acc * q as usize + c as usize)
}

impl Geometry {
    /// Build PG(r,q). Rejects non-prime `q` and geometries over budget.
    pub fn new(r: usize, q: u32) -> Result<Geometry> {
        Geometry::with_budget(r, q, GeometryBudget::default())
    }

    pub fn with_budget(r: usize, q: u32, budget: GeometryBudget) -> Result<Geometry> {
        if !linalg::is_prime(q) {
            return Err(Error::NonPrimeOrder(q));
        }
        if r < 1 {
            return Err(Error::InvalidArgument("projective dimension must be at least 1".into()));
        }
        let n_points = v(r as u32 + 1, q)?;
        if n_points > budget.max_points {
            return Err(Error::SizeBudget {
                what: "points of PG(r,q)",
                needed: n_points,
                budget: budget.max_points,
            });
        }
        let dim = r + 1;
        let total_codes = (q as usize).pow(dim as u32);

        // points in lexicographic order of normalized coordinate vectors
        let mut points = Vec::with_capacity(n_points as usize);
        let mut code_to_index = vec![u32::MAX; total_codes];
        for code in 1..total_codes {
            let mut coords = vec![0u8; dim];
            let mut c = code;
            for slot in (0..dim).rev() {
                coords[slot] = (c % q as usize) as u8;
                c /= q as usize;
            }
            let first = coords.iter().position(|&x| x != 0).unwrap();
            if coords[first] != 1 {
                continue;
            }
            let index = points.len() as u32;
            code_to_index[code] = index;
            points.push(Point { coords, index });
        }
        debug_assert_eq!(points.len() as u64, n_points);

        // hyperplanes in dual order: hyperplane i has coefficient vector points[i]
        let np = points.len();
        let mut hyperplanes = Vec::with_capacity(np);
        let mut incidence = Vec::with_capacity(np);
        let mut point_hyperplanes = vec![Vec::new(); np];
        for h in 0..np {
            let dual = points[h].coords.clone();
            let mut mask = Bitset::new(np);
            let mut on = Vec::new();
            for pt in &points {
                if linalg::dot_mod(&dual, &pt.coords, q) == 0 {
                    mask.set(pt.index as usize);
                    on.push(pt.index);
                    point_hyperplanes[pt.index as usize].push(h as u32);
                }
            }
            let basis = greedy_basis(&points, &on, q);
            hyperplanes.push(Flat {
                dim: r - 1,
                basis,
                points: on,
                dual: Some(dual),
            });
            incidence.push(mask);
        }

        let flats: Vec<OnceLock<Vec<Flat>>> = (0..=r).map(|_| OnceLock::new()).collect();
        // dim 0: one flat per point, in point order (for r = 1 the dual-ordered
        // hyperplane list takes precedence)
        if r >= 2 {
            let zero: Vec<Flat> = points
                .iter()
                .map(|p| Flat {
                    dim: 0,
                    basis: vec![p.index],
                    points: vec![p.index],
                    dual: None,
                })
                .collect();
            flats[0].set(zero).ok();
        }
        flats[r - 1].set(hyperplanes.clone()).ok();
        // dim r: the whole space
        let all: Vec<u32> = (0..np as u32).collect();
        let full = Flat {
            dim: r,
            basis: greedy_basis(&points, &all, q),
            points: all,
            dual: None,
        };
        flats[r].set(vec![full]).ok();

        let geom = Geometry {
            r,
            q,
            points,
            code_to_index,
            hyperplanes,
            incidence,
            point_hyperplanes,
            flats,
            budget,
        };
        // small geometries get all middle dimensions up front
        if geom.r <= 4 && geom.q == 3 {
            for d in 1..geom.r.saturating_sub(1) {
                geom.flats(d)?;
            }
        }
        Ok(geom)
    }

    /// Process-wide cache of geometries keyed by `(r, q)`.
    pub fn shared(r: usize, q: u32) -> Result<Arc<Geometry>> {
        static CACHE: OnceLock<Mutex<HashMap<(usize, u32), Arc<Geometry>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(g) = cache.lock().unwrap().get(&(r, q)) {
            return Ok(Arc::clone(g));
        }
        let built = Arc::new(Geometry::new(r, q)?);
        let mut guard = cache.lock().unwrap();
        Ok(Arc::clone(guard.entry((r, q)).or_insert(built)))
    }

    #[inline]
    pub fn r(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    #[inline]
    pub fn point(&self, i: u32) -> &Point {
        &self.points[i as usize]
    }

    #[inline]
    pub fn hyperplanes(&self) -> &[Flat] {
        &self.hyperplanes
    }

    #[inline]
    pub fn hyperplane(&self, i: u32) -> &Flat {
        &self.hyperplanes[i as usize]
    }

    /// Point-membership mask of hyperplane `i`.
    #[inline]
    pub fn incidence_mask(&self, i: u32) -> &Bitset {
        &self.incidence[i as usize]
    }

    /// Indices of the hyperplanes through point `p`.
    #[inline]
    pub fn hyperplanes_through_point(&self, p: u32) -> &[u32] {
        &self.point_hyperplanes[p as usize]
    }

    /// Index of the point with the given (not necessarily normalized) coordinates.
    pub fn point_index(&self, coords: &[u8]) -> Result<u32> {
        if coords.len() != self.r + 1 {
            return Err(Error::InvalidArgument(format!(
                "coordinate vector has length {}, expected {}",
                coords.len(),
                self.r + 1
            )));
        }
        let norm = linalg::normalize(coords, self.q)
            .ok_or_else(|| Error::InvalidArgument("zero vector is not a point".into()))?;
        let idx = self.code_to_index[encode(&norm, self.q)];
        debug_assert_ne!(idx, u32::MAX);
        Ok(idx)
    }

    /// All flats of the given dimension, enumerated on first use.
    pub fn flats(&self, dim: usize) -> Result<&[Flat]> {
        if dim > self.r {
            return Err(Error::InvalidArgument(format!(
                "no flats of dimension {dim} in PG({},{})",
                self.r, self.q
            )));
        }
        if let Some(ready) = self.flats[dim].get() {
            return Ok(ready);
        }
        let expected = gaussian_binomial(self.r as u32 + 1, dim as u32 + 1, self.q)?;
        if expected > self.budget.max_flats_per_dim {
            return Err(Error::SizeBudget {
                what: "flats of one dimension",
                needed: expected,
                budget: self.budget.max_flats_per_dim,
            });
        }
        let built = self.enumerate_flats(dim);
        debug_assert_eq!(built.len() as u64, expected);
        Ok(self.flats[dim].get_or_init(|| built))
    }

    /// Enumerate dim-flats via reduced-echelon bases: one matrix per subspace.
    fn enumerate_flats(&self, dim: usize) -> Vec<Flat> {
        let k = dim + 1; // vector-space dimension
        let m = self.r + 1;
        let q = self.q;
        let mut out = Vec::new();
        let mut pivots: Vec<usize> = (0..k).collect();
        loop {
            // free entries: row i, column j with j > pivots[i] and j not a pivot
            let mut free = Vec::new();
            for (i, &pi) in pivots.iter().enumerate() {
                for j in pi + 1..m {
                    if !pivots.contains(&j) {
                        free.push((i, j));
                    }
                }
            }
            let mut assign = vec![0u8; free.len()];
            loop {
                let mut rows = vec![vec![0u8; m]; k];
                for (i, &pi) in pivots.iter().enumerate() {
                    rows[i][pi] = 1;
                }
                for (&(i, j), &val) in free.iter().zip(&assign) {
                    rows[i][j] = val;
                }
                out.push(self.flat_from_basis_rows(&rows, dim));
                // next assignment
                let mut carry = true;
                for slot in (0..assign.len()).rev() {
                    if carry {
                        assign[slot] += 1;
                        if assign[slot] as u32 == q {
                            assign[slot] = 0;
                        } else {
                            carry = false;
                        }
                    }
                }
                if carry {
                    break;
                }
            }
            // next pivot combination in lexicographic order
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if pivots[i] < m - k + i {
                    pivots[i] += 1;
                    for j in i + 1..k {
                        pivots[j] = pivots[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    fn flat_from_basis_rows(&self, rows: &[Vec<u8>], dim: usize) -> Flat {
        let pts = self.points_of_span(rows);
        let basis = greedy_basis(&self.points, &pts, self.q);
        let dual = if dim == self.r - 1 {
            let m = Mat::from_rows(self.q, rows).unwrap();
            let kern = m.kernel_basis();
            debug_assert_eq!(kern.len(), 1);
            linalg::normalize(&kern[0], self.q)
        } else {
            None
        };
        Flat {
            dim,
            basis,
            points: pts,
            dual,
        }
    }

    /// Sorted indices of every point in the span of the given row vectors.
    fn points_of_span(&self, rows: &[Vec<u8>]) -> Vec<u32> {
        let q = self.q;
        let k = rows.len();
        let m = self.r + 1;
        let mut combo = vec![0u8; k];
        let mut pts = Vec::new();
        loop {
            // next combination (skip the all-zero one by incrementing first)
            let mut carry = true;
            for slot in (0..k).rev() {
                if carry {
                    combo[slot] += 1;
                    if combo[slot] as u32 == q {
                        combo[slot] = 0;
                    } else {
                        carry = false;
                    }
                }
            }
            if carry {
                break;
            }
            let mut vec = vec![0u8; m];
            for (c, row) in combo.iter().zip(rows) {
                if *c != 0 {
                    for (slot, &rv) in row.iter().enumerate() {
                        vec[slot] = linalg::add_mod(vec[slot], linalg::mul_mod(*c, rv, q), q);
                    }
                }
            }
            if let Some(norm) = linalg::normalize(&vec, q) {
                pts.push(self.code_to_index[encode(&norm, q)]);
            }
        }
        pts.sort_unstable();
        pts.dedup();
        pts
    }

    /// Is point `p` incident with flat `f`?
    pub fn incident(&self, f: &Flat, p: u32) -> bool {
        match &f.dual {
            Some(dual) => linalg::dot_mod(dual, &self.points[p as usize].coords, self.q) == 0,
            None => f.contains(p),
        }
    }

    /// Smallest flat containing the given points.
    pub fn span_points(&self, pts: &[u32]) -> Result<Flat> {
        if pts.is_empty() {
            return Err(Error::InvalidArgument("span of an empty set".into()));
        }
        let rows: Vec<Vec<u8>> = pts.iter().map(|&i| self.points[i as usize].coords.clone()).collect();
        let m = Mat::from_rows(self.q, &rows)?;
        let (red, pivots) = m.rref();
        let basis_rows: Vec<Vec<u8>> = (0..pivots.len()).map(|r| red.row(r).to_vec()).collect();
        Ok(self.flat_from_basis_rows(&basis_rows, pivots.len() - 1))
    }

    /// Smallest flat containing all the given flats.
    pub fn span_flats(&self, flats: &[&Flat]) -> Result<Flat> {
        let pts: Vec<u32> = flats.iter().flat_map(|f| f.basis.iter().copied()).collect();
        self.span_points(&pts)
    }

    /// Indices of the hyperplanes containing `f`, via the dual kernel.
    pub fn hyperplanes_through(&self, f: &Flat) -> Vec<u32> {
        let rows: Vec<Vec<u8>> = f.basis.iter().map(|&i| self.points[i as usize].coords.clone()).collect();
        let m = Mat::from_rows(self.q, &rows).unwrap();
        let kern = m.kernel_basis();
        let mut out = self.points_of_span(&kern);
        out.sort_unstable();
        out
    }

    /// Central projection from `delta` onto the complementary flat `pi`:
    /// the unique point of `pi` on the span of `delta` and `point`.
    pub fn project(&self, delta: &Flat, pi: &Flat, point: u32) -> Result<u32> {
        if delta.dim + pi.dim != self.r - 1 {
            return Err(Error::InvalidArgument(format!(
                "projection needs complementary dimensions, got {} + {} != {}",
                delta.dim,
                pi.dim,
                self.r - 1
            )));
        }
        if delta.contains(point) {
            return Err(Error::Domain("projection undefined on center".into()));
        }
        // columns: basis of delta, then basis of pi; invertible iff disjoint
        let m = self.r + 1;
        let mut mat = Mat::zero(self.q, m, m);
        let d1 = delta.basis.len();
        for (c, &b) in delta.basis.iter().chain(pi.basis.iter()).enumerate() {
            for (r, &val) in self.points[b as usize].coords.iter().enumerate() {
                mat.set(r, c, val);
            }
        }
        if !mat.is_invertible() {
            return Err(Error::InvalidArgument(
                "projection flats are not disjoint complements".into(),
            ));
        }
        let x = mat
            .solve(&self.points[point as usize].coords)
            .expect("invertible system");
        let mut img = vec![0u8; m];
        for (j, &b) in pi.basis.iter().enumerate() {
            let c = x[d1 + j];
            if c != 0 {
                for (slot, &val) in self.points[b as usize].coords.iter().enumerate() {
                    img[slot] = linalg::add_mod(img[slot], linalg::mul_mod(c, val, self.q), self.q);
                }
            }
        }
        let norm = linalg::normalize(&img, self.q)
            .expect("projection image cannot vanish off the center");
        Ok(self.code_to_index[encode(&norm, self.q)])
    }

    /// Image of point `p` under the collineation with matrix `m`.
    pub fn apply_collineation(&self, m: &Mat, p: u32) -> Result<u32> {
        if m.rows != self.r + 1 || m.cols != self.r + 1 {
            return Err(Error::InvalidArgument(format!(
                "collineation matrix must be {0}x{0}",
                self.r + 1
            )));
        }
        if m.p != self.q {
            return Err(Error::InvalidArgument("matrix field does not match geometry".into()));
        }
        if !m.is_invertible() {
            return Err(Error::InvalidArgument("singular matrix is not a collineation".into()));
        }
        let img = m.mul_vec(&self.points[p as usize].coords);
        self.point_index(&img)
    }
}

/// Lexicographically least basis of a point set: scan in index order,
/// keeping each point independent of those already kept.
fn greedy_basis(points: &[Point], pts: &[u32], q: u32) -> Vec<u32> {
    let mut basis: Vec<u32> = Vec::new();
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for &i in pts {
        let cand = &points[i as usize].coords;
        let mut trial = rows.clone();
        trial.push(cand.clone());
        let rank = Mat::from_rows(q, &trial).unwrap().rank();
        if rank == trial.len() {
            rows.push(cand.clone());
            basis.push(i);
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v_values() {
        assert_eq!(v(2, 3).unwrap(), 4);
        assert_eq!(v(5, 3).unwrap(), 121);
        assert_eq!(v(0, 5).unwrap(), 0);
        assert!(matches!(v(200, 3), Err(Error::Overflow(_))));
        assert!(matches!(v(2, 4), Err(Error::NonPrimeOrder(4))));
    }

    #[test]
    fn fano_like_counts() {
        let g = Geometry::new(2, 3).unwrap();
        assert_eq!(g.num_points(), 13);
        assert_eq!(g.hyperplanes().len(), 13);
        for h in g.hyperplanes() {
            assert_eq!(h.points.len(), 4);
        }
    }

    #[test]
    fn pg33_counts() {
        let g = Geometry::new(3, 3).unwrap();
        assert_eq!(g.num_points(), 40);
        assert_eq!(g.flats(1).unwrap().len(), 130);
        assert_eq!(g.flats(2).unwrap().len(), 40);
    }

    #[test]
    fn pg43_counts() {
        let g = Geometry::shared(4, 3).unwrap();
        assert_eq!(g.num_points(), 121);
        assert_eq!(g.hyperplanes().len(), 121);
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(matches!(Geometry::new(2, 9), Err(Error::NonPrimeOrder(9))));
        assert!(matches!(
            Geometry::with_budget(
                4,
                5,
                GeometryBudget {
                    max_points: 100,
                    max_flats_per_dim: 100
                }
            ),
            Err(Error::SizeBudget { .. })
        ));
    }

    #[test]
    fn incidence_matches_dual_form_everywhere() {
        let g = Geometry::new(3, 3).unwrap();
        for h in 0..g.num_points() as u32 {
            let flat = g.hyperplane(h);
            let dual = flat.dual.as_ref().unwrap();
            for p in 0..g.num_points() as u32 {
                let by_dot = linalg::dot_mod(dual, &g.point(p).coords, 3) == 0;
                assert_eq!(g.incidence_mask(h).get(p as usize), by_dot);
                assert_eq!(g.incident(flat, p), by_dot);
            }
            assert_eq!(g.incidence_mask(h).count_ones() as u64, v(3, 3).unwrap());
        }
    }

    #[test]
    fn incident_examples_pg43() {
        let g = Geometry::shared(4, 3).unwrap();
        let p0 = g.point_index(&[1, 0, 0, 0, 0]).unwrap();
        let p4 = g.point_index(&[0, 0, 0, 0, 1]).unwrap();
        let h = g
            .hyperplanes()
            .iter()
            .find(|h| h.dual.as_deref() == Some(&[0, 0, 0, 0, 1][..]))
            .unwrap();
        assert!(g.incident(h, p0));
        assert!(!g.incident(h, p4));
        let full = &g.flats(4).unwrap()[0];
        assert!(g.incident(full, p0) && g.incident(full, p4));
    }

    #[test]
    fn span_examples() {
        let g = Geometry::new(2, 3).unwrap();
        let a = g.point_index(&[1, 0, 0]).unwrap();
        let b = g.point_index(&[0, 1, 0]).unwrap();
        let single = g.span_points(&[a]).unwrap();
        assert_eq!(single.dim, 0);
        assert_eq!(single.points, vec![a]);

        let line = g.span_points(&[a, b]).unwrap();
        assert_eq!(line.dim, 1);
        assert_eq!(line.points.len(), 4);
        for &p in &line.points {
            assert_eq!(g.point(p).coords[2], 0);
        }

        let off = g.point_index(&[0, 0, 1]).unwrap();
        let plane = g.span_points(&[line.points[0], line.points[1], off]).unwrap();
        assert_eq!(plane.dim, 2);
        assert_eq!(plane.points.len(), 13);
    }

    #[test]
    fn projection_examples_pg23() {
        let g = Geometry::new(2, 3).unwrap();
        let delta = g.span_points(&[g.point_index(&[1, 0, 0]).unwrap()]).unwrap();
        let pi_pts: Vec<u32> = (0..13)
            .filter(|&i| g.point(i).coords[0] == 0)
            .collect();
        let pi = g.span_points(&pi_pts).unwrap();
        assert_eq!(pi.dim, 1);

        let q1 = g.point_index(&[1, 1, 2]).unwrap();
        assert_eq!(
            g.project(&delta, &pi, q1).unwrap(),
            g.point_index(&[0, 1, 2]).unwrap()
        );
        let q2 = g.point_index(&[0, 1, 1]).unwrap();
        assert_eq!(g.project(&delta, &pi, q2).unwrap(), q2);
        let center = delta.points[0];
        assert!(matches!(g.project(&delta, &pi, center), Err(Error::Domain(_))));
    }

    #[test]
    fn projection_pg33_matches_exhaustive_intersection() {
        let g = Geometry::new(3, 3).unwrap();
        let delta = g
            .span_points(&[g.point_index(&[1, 0, 0, 0]).unwrap(), g.point_index(&[0, 1, 0, 0]).unwrap()])
            .unwrap();
        let pi = g
            .span_points(&[g.point_index(&[0, 0, 1, 0]).unwrap(), g.point_index(&[0, 0, 0, 1]).unwrap()])
            .unwrap();
        for p in 0..g.num_points() as u32 {
            if delta.contains(p) {
                continue;
            }
            let img = g.project(&delta, &pi, p).unwrap();
            // oracle: intersect the span point list with pi directly
            let span = g.span_points(&[delta.basis[0], delta.basis[1], p]).unwrap();
            let inter: Vec<u32> = span
                .points
                .iter()
                .copied()
                .filter(|&s| pi.contains(s))
                .collect();
            assert_eq!(inter, vec![img]);
        }
    }

    #[test]
    fn collineation_examples() {
        let g = Geometry::new(2, 3).unwrap();
        let p = g.point_index(&[1, 0, 0]).unwrap();
        let id = Mat::identity(3, 3);
        assert_eq!(g.apply_collineation(&id, p).unwrap(), p);

        let swap = Mat::from_rows(3, &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(
            g.apply_collineation(&swap, p).unwrap(),
            g.point_index(&[0, 1, 0]).unwrap()
        );

        let scalar = Mat::from_rows(3, &[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]]).unwrap();
        for i in 0..13 {
            assert_eq!(g.apply_collineation(&scalar, i).unwrap(), i);
        }

        let singular = Mat::from_rows(3, &[vec![1, 0, 0], vec![1, 0, 0], vec![0, 0, 1]]).unwrap();
        assert!(g.apply_collineation(&singular, p).is_err());
    }

    #[test]
    fn hyperplanes_through_a_line() {
        let g = Geometry::new(4, 3).unwrap();
        let l = g
            .span_points(&[g.point_index(&[1, 0, 0, 0, 0]).unwrap(), g.point_index(&[0, 1, 0, 0, 0]).unwrap()])
            .unwrap();
        let hs = g.hyperplanes_through(&l);
        assert_eq!(hs.len() as u64, v(3, 3).unwrap());
        for &h in &hs {
            for &p in &l.points {
                assert!(g.incident(g.hyperplane(h), p));
            }
        }
    }

    #[test]
    fn duality_alignment() {
        let g = Geometry::new(3, 3).unwrap();
        for i in 0..g.num_points() as u32 {
            assert_eq!(g.hyperplane(i).dual.as_deref().unwrap(), &g.point(i).coords[..]);
        }
    }
}
