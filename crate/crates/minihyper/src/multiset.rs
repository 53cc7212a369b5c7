//! Multisets of points: spectra, arc/minihyper parameters, complements,
//! restrictions, induced projections and pointwise reduction/extension.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{v, Flat, Geometry};
use crate::linalg::{self, Mat};

/// Whether hyperplane multiplicities are bounded above (arc) or below (minihyper).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Arc,
    Minihyper,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Arc => write!(f, "arc"),
            Mode::Minihyper => write!(f, "minihyper"),
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "arc" => Ok(Mode::Arc),
            "minihyper" => Ok(Mode::Minihyper),
            other => Err(Error::Parse(format!("unknown mode `{other}`"))),
        }
    }
}

/// Parameters `(n, w)` of an arc: `w` is the maximal hyperplane multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcParams {
    pub n: u64,
    pub w: u64,
}

/// Parameters `(n, w)` of a minihyper: `w` is the minimal hyperplane multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinihyperParams {
    pub n: u64,
    pub w: u64,
}

/// Hyperplane and point multiplicity counts of a multiset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    /// number of hyperplanes of each multiplicity
    pub a: BTreeMap<u64, u64>,
    /// number of points of each multiplicity
    pub lambda: BTreeMap<u32, u64>,
    pub n: u64,
    pub w_min: u64,
    pub w_max: u64,
}

/// A multiplicity function on the points of a geometry.
#[derive(Debug, Clone)]
pub struct Multiset {
    geometry: Arc<Geometry>,
    mult: Vec<u32>,
}

impl PartialEq for Multiset {
    fn eq(&self, other: &Self) -> bool {
        self.geometry.r() == other.geometry.r()
            && self.geometry.q() == other.geometry.q()
            && self.mult == other.mult
    }
}
impl Eq for Multiset {}

impl Multiset {
    pub fn empty(geometry: Arc<Geometry>) -> Multiset {
        let n = geometry.num_points();
        Multiset {
            geometry,
            mult: vec![0; n],
        }
    }

    pub fn from_multiplicities(geometry: Arc<Geometry>, mult: Vec<u32>) -> Result<Multiset> {
        if mult.len() != geometry.num_points() {
            return Err(Error::InvalidArgument(format!(
                "multiplicity vector has length {}, geometry has {} points",
                mult.len(),
                geometry.num_points()
            )));
        }
        Ok(Multiset { geometry, mult })
    }

    /// Characteristic multiset of a point set.
    pub fn indicator(geometry: Arc<Geometry>, pts: &[u32]) -> Multiset {
        let mut m = Multiset::empty(geometry);
        for &p in pts {
            m.mult[p as usize] = 1;
        }
        m
    }

    /// Characteristic multiset of a flat.
    pub fn of_flat(geometry: Arc<Geometry>, f: &Flat) -> Multiset {
        Multiset::indicator(geometry, &f.points)
    }

    #[inline]
    pub fn geometry(&self) -> &Arc<Geometry> {
        &self.geometry
    }

    #[inline]
    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    #[inline]
    pub fn point_multiplicity(&self, p: u32) -> u32 {
        self.mult[p as usize]
    }

    pub fn cardinality(&self) -> u64 {
        self.mult.iter().map(|&m| m as u64).sum()
    }

    pub fn max_point_multiplicity(&self) -> u32 {
        self.mult.iter().copied().max().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.mult
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| (i as u32, m))
    }

    /// Multiplicity of a flat: sum of point multiplicities over its points.
    pub fn multiplicity(&self, f: &Flat) -> u64 {
        f.points.iter().map(|&p| self.mult[p as usize] as u64).sum()
    }

    /// Multiplicities of all hyperplanes, indexed like the hyperplane list.
    pub fn hyperplane_multiplicities(&self) -> Vec<u64> {
        let mut acc = vec![0u64; self.geometry.num_points()];
        for (p, m) in self.support() {
            for &h in self.geometry.hyperplanes_through_point(p) {
                acc[h as usize] += m as u64;
            }
        }
        acc
    }

    pub fn spectrum(&self) -> SpectrumReport {
        let hyper = self.hyperplane_multiplicities();
        let mut a = BTreeMap::new();
        for &m in &hyper {
            *a.entry(m).or_insert(0u64) += 1;
        }
        let mut lambda = BTreeMap::new();
        for &m in &self.mult {
            *lambda.entry(m).or_insert(0u64) += 1;
        }
        let w_min = *a.keys().next().unwrap();
        let w_max = *a.keys().next_back().unwrap();
        SpectrumReport {
            a,
            lambda,
            n: self.cardinality(),
            w_min,
            w_max,
        }
    }

    pub fn arc_params(&self) -> Result<ArcParams> {
        let s = self.nonempty_spectrum()?;
        Ok(ArcParams { n: s.n, w: s.w_max })
    }

    pub fn minihyper_params(&self) -> Result<MinihyperParams> {
        let s = self.nonempty_spectrum()?;
        Ok(MinihyperParams { n: s.n, w: s.w_min })
    }

    /// `(n, w)` in the requested mode.
    pub fn parameters(&self, mode: Mode) -> Result<(u64, u64)> {
        let s = self.nonempty_spectrum()?;
        Ok(match mode {
            Mode::Arc => (s.n, s.w_max),
            Mode::Minihyper => (s.n, s.w_min),
        })
    }

    fn nonempty_spectrum(&self) -> Result<SpectrumReport> {
        let s = self.spectrum();
        if s.n == 0 {
            return Err(Error::InvalidArgument("parameters of the empty multiset".into()));
        }
        Ok(s)
    }

    /// Maximal multiplicity of a `j`-dimensional flat.
    pub fn gamma(&self, j: usize) -> Result<u64> {
        let flats = self.geometry.flats(j)?;
        Ok(flats.iter().map(|f| self.multiplicity(f)).max().unwrap_or(0))
    }

    /// Pointwise complement `s - K`. Requires `s` at least the maximal point
    /// multiplicity; swaps arcs with minihypers.
    pub fn complement(&self, s: u32) -> Result<Multiset> {
        let max = self.max_point_multiplicity();
        if s < max {
            return Err(Error::InvalidArgument(format!(
                "complement level {s} below maximal point multiplicity {max}"
            )));
        }
        Ok(Multiset {
            geometry: Arc::clone(&self.geometry),
            mult: self.mult.iter().map(|&m| s - m).collect(),
        })
    }

    pub fn scale(&self, k: u32) -> Result<Multiset> {
        let mult = self
            .mult
            .iter()
            .map(|&m| m.checked_mul(k).ok_or(Error::Overflow("multiset scale")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Multiset {
            geometry: Arc::clone(&self.geometry),
            mult,
        })
    }

    pub fn add(&self, other: &Multiset) -> Result<Multiset> {
        self.check_same_space(other)?;
        let mult = self
            .mult
            .iter()
            .zip(&other.mult)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow("multiset add")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Multiset {
            geometry: Arc::clone(&self.geometry),
            mult,
        })
    }

    pub fn checked_sub(&self, other: &Multiset) -> Result<Multiset> {
        self.check_same_space(other)?;
        let mult = self
            .mult
            .iter()
            .zip(&other.mult)
            .map(|(&a, &b)| {
                a.checked_sub(b)
                    .ok_or_else(|| Error::InvalidArgument("multiset difference would be negative".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Multiset {
            geometry: Arc::clone(&self.geometry),
            mult,
        })
    }

    fn check_same_space(&self, other: &Multiset) -> Result<()> {
        if self.geometry.r() != other.geometry.r() || self.geometry.q() != other.geometry.q() {
            return Err(Error::InvalidArgument("multisets live in different geometries".into()));
        }
        Ok(())
    }

    /// Restriction to a flat, as a multiset in PG(dim f, q) under the chart
    /// sending the flat's canonical basis to the unit points.
    pub fn restrict(&self, f: &Flat) -> Result<Multiset> {
        if f.dim < 1 {
            return Err(Error::InvalidArgument("restriction needs a flat of dimension >= 1".into()));
        }
        let q = self.geometry.q();
        let sub = Geometry::shared(f.dim, q)?;
        let basis: Vec<&[u8]> = f
            .basis
            .iter()
            .map(|&b| &self.geometry.point(b).coords[..])
            .collect();
        let mut mult = vec![0u32; sub.num_points()];
        for sp in sub.points() {
            let mut vec = vec![0u8; self.geometry.r() + 1];
            for (c, bv) in sp.coords.iter().zip(&basis) {
                if *c != 0 {
                    for (slot, &val) in bv.iter().enumerate() {
                        vec[slot] = linalg::add_mod(vec[slot], linalg::mul_mod(*c, val, q), q);
                    }
                }
            }
            let ambient = self.geometry.point_index(&vec)?;
            mult[sp.index as usize] = self.mult[ambient as usize];
        }
        Multiset::from_multiplicities(sub, mult)
    }

    /// Induced multiset of the projection from `delta` onto `pi`, supported
    /// on the points of `pi` in the ambient geometry. Mass on the center is
    /// dropped, so the image has cardinality `n - K(delta)`.
    pub fn project(&self, delta: &Flat, pi: &Flat) -> Result<Multiset> {
        let mut out = Multiset::empty(Arc::clone(&self.geometry));
        for (p, m) in self.support() {
            if delta.contains(p) {
                continue;
            }
            let img = self.geometry.project(delta, pi, p)?;
            out.mult[img as usize] += m;
        }
        Ok(out)
    }

    /// Image of the multiset under a collineation matrix.
    pub fn apply_collineation(&self, m: &Mat) -> Result<Multiset> {
        let mut out = Multiset::empty(Arc::clone(&self.geometry));
        for (p, mass) in self.support() {
            let img = self.geometry.apply_collineation(m, p)?;
            out.mult[img as usize] += mass;
        }
        Ok(out)
    }

    /// Points whose multiplicity can be lowered by one while keeping every
    /// hyperplane multiplicity at least `w`. Empty means the minihyper admits
    /// no single-point reduction.
    pub fn one_reducible_points(&self, w: u64) -> Vec<u32> {
        let hyper = self.hyperplane_multiplicities();
        self.support()
            .filter(|&(p, _)| {
                self.geometry
                    .hyperplanes_through_point(p)
                    .iter()
                    .all(|&h| hyper[h as usize] >= w + 1)
            })
            .map(|(p, _)| p)
            .collect()
    }

    /// Search for a reduction multiset `D` with total mass `t`, `D <= F`
    /// pointwise, such that `F - D` is an `(n-t, w)`-minihyper. Refuses
    /// `t > 2`; use [`Multiset::t_reducible_with_limit`] to go further.
    pub fn t_reducible(&self, w: u64, t: u32) -> Result<Option<Multiset>> {
        if t > 2 {
            return Err(Error::Unsupported(format!(
                "t_reducible defaults to t <= 2, got t = {t}"
            )));
        }
        self.t_reducible_with_limit(w, t, 2)
    }

    pub fn t_reducible_with_limit(&self, w: u64, t: u32, limit: u32) -> Result<Option<Multiset>> {
        if t == 0 {
            return Err(Error::InvalidArgument("t must be positive".into()));
        }
        if t > limit {
            return Err(Error::Unsupported(format!("t = {t} exceeds configured limit {limit}")));
        }
        let mut hyper = self.hyperplane_multiplicities();
        let mut deltas = Vec::new();
        if self.reduce_search(0, t, w, &mut hyper, &mut deltas) {
            let mut d = Multiset::empty(Arc::clone(&self.geometry));
            for &(p, a) in &deltas {
                d.mult[p as usize] = a;
            }
            Ok(Some(d))
        } else {
            Ok(None)
        }
    }

    fn reduce_search(
        &self,
        start: u32,
        remaining: u32,
        w: u64,
        hyper: &mut [u64],
        deltas: &mut Vec<(u32, u32)>,
    ) -> bool {
        if remaining == 0 {
            return true;
        }
        for p in start..self.geometry.num_points() as u32 {
            let avail = self.mult[p as usize];
            if avail == 0 {
                continue;
            }
            let pencil = self.geometry.hyperplanes_through_point(p);
            for a in 1..=avail.min(remaining) {
                if pencil.iter().any(|&h| hyper[h as usize] < w + a as u64) {
                    break; // larger a only makes it worse
                }
                for &h in pencil {
                    hyper[h as usize] -= a as u64;
                }
                deltas.push((p, a));
                if self.reduce_search(p + 1, remaining - a, w, hyper, deltas) {
                    return true;
                }
                deltas.pop();
                for &h in pencil {
                    hyper[h as usize] += a as u64;
                }
            }
        }
        false
    }

    /// Search for an extension multiset `D` of total mass `t` such that
    /// `F + D` is an `(n+t, w)`-arc. Same default limit as reduction.
    pub fn t_extendable(&self, w: u64, t: u32) -> Result<Option<Multiset>> {
        if t == 0 {
            return Err(Error::InvalidArgument("t must be positive".into()));
        }
        if t > 2 {
            return Err(Error::Unsupported(format!(
                "t_extendable defaults to t <= 2, got t = {t}"
            )));
        }
        let mut hyper = self.hyperplane_multiplicities();
        let mut deltas = Vec::new();
        if self.extend_search(0, t, w, &mut hyper, &mut deltas) {
            let mut d = Multiset::empty(Arc::clone(&self.geometry));
            for &(p, a) in &deltas {
                d.mult[p as usize] = a;
            }
            Ok(Some(d))
        } else {
            Ok(None)
        }
    }

    fn extend_search(
        &self,
        start: u32,
        remaining: u32,
        w: u64,
        hyper: &mut [u64],
        deltas: &mut Vec<(u32, u32)>,
    ) -> bool {
        if remaining == 0 {
            return true;
        }
        for p in start..self.geometry.num_points() as u32 {
            let pencil = self.geometry.hyperplanes_through_point(p);
            for a in 1..=remaining {
                if pencil.iter().any(|&h| hyper[h as usize] + a as u64 > w) {
                    break;
                }
                for &h in pencil {
                    hyper[h as usize] += a as u64;
                }
                deltas.push((p, a));
                if self.extend_search(p + 1, remaining - a, w, hyper, deltas) {
                    return true;
                }
                deltas.pop();
                for &h in pencil {
                    hyper[h as usize] -= a as u64;
                }
            }
        }
        false
    }
}

impl SpectrumReport {
    /// The two counting identities every spectrum satisfies.
    pub fn check_identities(&self, geometry: &Geometry) -> Result<()> {
        let total: u64 = self.a.values().sum();
        let expect = v(geometry.r() as u32 + 1, geometry.q())?;
        if total != expect {
            return Err(Error::InvariantViolation(format!(
                "spectrum counts {total} hyperplanes, expected {expect}"
            )));
        }
        let weighted: u64 = self.a.iter().map(|(&i, &c)| i * c).sum();
        let expect = self.n * v(geometry.r() as u32, geometry.q())?;
        if weighted != expect {
            return Err(Error::InvariantViolation(format!(
                "spectrum mass {weighted}, expected {expect}"
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi_hyperplane(g: &Arc<Geometry>, h: u32) -> Multiset {
        let f = g.hyperplane(h).clone();
        Multiset::of_flat(Arc::clone(g), &f)
    }

    #[test]
    fn multiplicity_of_flats() {
        let g = Geometry::shared(3, 3).unwrap();
        let pi = g.hyperplane(0).clone();
        let k = chi_hyperplane(&g, 0);
        assert_eq!(k.multiplicity(&pi), 13);
        assert_eq!(k.multiplicity(g.hyperplane(1)), 4);
        assert_eq!(Multiset::empty(Arc::clone(&g)).multiplicity(&pi), 0);
    }

    #[test]
    fn spectrum_of_plane_in_pg33() {
        let g = Geometry::shared(3, 3).unwrap();
        let s = chi_hyperplane(&g, 0).spectrum();
        assert_eq!(s.a, BTreeMap::from([(13, 1), (4, 39)]));
        assert_eq!(s.lambda, BTreeMap::from([(1, 13), (0, 27)]));
        s.check_identities(&g).unwrap();
    }

    #[test]
    fn spectrum_line_plus_point_pg23() {
        let g = Geometry::shared(2, 3).unwrap();
        let line = g.hyperplane(0).clone();
        let off = (0..13u32).find(|&p| !line.contains(p)).unwrap();
        let mut k = Multiset::of_flat(Arc::clone(&g), &line);
        k = k.add(&Multiset::indicator(Arc::clone(&g), &[off])).unwrap();
        let s = k.spectrum();
        assert_eq!(s.a, BTreeMap::from([(4, 1), (2, 4), (1, 8)]));
    }

    #[test]
    fn spectrum_scales_linearly() {
        let g = Geometry::shared(3, 3).unwrap();
        let s = chi_hyperplane(&g, 0).scale(2).unwrap().spectrum();
        assert_eq!(s.a, BTreeMap::from([(26, 1), (8, 39)]));
    }

    #[test]
    fn parameters_examples() {
        let g = Geometry::shared(3, 3).unwrap();
        let k = chi_hyperplane(&g, 0);
        assert_eq!(k.minihyper_params().unwrap(), MinihyperParams { n: 13, w: 4 });

        let g2 = Geometry::shared(2, 3).unwrap();
        let single = Multiset::indicator(Arc::clone(&g2), &[0]);
        assert_eq!(single.arc_params().unwrap(), ArcParams { n: 1, w: 1 });
        assert!(Multiset::empty(g2).arc_params().is_err());
    }

    #[test]
    fn gamma_examples() {
        let g = Geometry::shared(3, 3).unwrap();
        let k = chi_hyperplane(&g, 0);
        assert_eq!(k.gamma(1).unwrap(), 4);
        assert_eq!(k.gamma(0).unwrap(), 1);
        assert_eq!(k.gamma(3).unwrap(), k.cardinality());
        assert_eq!(k.scale(2).unwrap().gamma(2).unwrap(), 26);
    }

    #[test]
    fn complement_is_involutive_and_transforms_parameters() {
        let g = Geometry::shared(3, 3).unwrap();
        let k = chi_hyperplane(&g, 0);
        let c = k.complement(2).unwrap();
        assert_eq!(c.complement(2).unwrap(), k);
        assert!(k.complement(0).is_err());

        // (13,4)-minihyper -> (2*40-13, 2*13-4)-arc at s = 2
        let arc = c.arc_params().unwrap();
        assert_eq!((arc.n, arc.w), (2 * 40 - 13, 2 * 13 - 4));
    }

    #[test]
    fn restriction_of_plane_to_line() {
        let g = Geometry::shared(3, 3).unwrap();
        let pi = g.hyperplane(0).clone();
        let k = chi_hyperplane(&g, 0);
        let line = g.span_points(&[pi.points[0], pi.points[1]]).unwrap();
        let r = k.restrict(&line).unwrap();
        assert_eq!(r.geometry().r(), 1);
        assert_eq!(r.multiplicities(), &[1, 1, 1, 1]);
    }

    #[test]
    fn restriction_cardinality_matches_flat_multiplicity() {
        let g = Geometry::shared(3, 3).unwrap();
        let k = chi_hyperplane(&g, 0).add(&chi_hyperplane(&g, 7)).unwrap();
        for h in [0u32, 3, 7] {
            let f = g.hyperplane(h).clone();
            let r = k.restrict(&f).unwrap();
            assert_eq!(r.cardinality(), k.multiplicity(&f));
        }
    }

    #[test]
    fn projection_contract() {
        let g = Geometry::shared(3, 3).unwrap();
        let delta = g.span_points(&[0]).unwrap();
        let pi_basis: Vec<u32> = (0..g.num_points() as u32)
            .filter(|&p| !delta.contains(p))
            .take(0)
            .collect();
        drop(pi_basis);
        // center = point 0, screen = a plane missing it
        let pi = g
            .hyperplanes()
            .iter()
            .find(|h| !h.contains(0))
            .unwrap()
            .clone();
        let k = chi_hyperplane(&g, 5).add(&chi_hyperplane(&g, 9)).unwrap();
        let t = k.multiplicity(&delta);
        let proj = k.project(&delta, &pi).unwrap();
        assert_eq!(proj.cardinality(), k.cardinality() - t);
        // K^phi(phi(S)) = K(S) - t for every line S through the center
        for line in g.flats(1).unwrap() {
            if !line.contains(0) {
                continue;
            }
            let img: Vec<u32> = line
                .points
                .iter()
                .filter(|&&p| p != 0)
                .map(|&p| g.project(&delta, &pi, p).unwrap())
                .collect();
            let mut img = img;
            img.sort_unstable();
            img.dedup();
            let mass: u64 = img.iter().map(|&p| proj.point_multiplicity(p) as u64).sum();
            assert_eq!(mass, k.multiplicity(line) - t);
        }
    }

    #[test]
    fn projection_trivial_cases() {
        let g = Geometry::shared(2, 3).unwrap();
        let delta = g.span_points(&[4]).unwrap();
        let pi = g.hyperplanes().iter().find(|h| !h.contains(4)).unwrap().clone();
        let center_only = Multiset::indicator(Arc::clone(&g), &[4]);
        assert_eq!(center_only.project(&delta, &pi).unwrap().cardinality(), 0);

        let q = (0..13).find(|&p| p != 4).unwrap();
        let single = Multiset::indicator(Arc::clone(&g), &[q]).scale(3).unwrap();
        let proj = single.project(&delta, &pi).unwrap();
        let img = g.project(&delta, &pi, q).unwrap();
        assert_eq!(proj.point_multiplicity(img), 3);
        assert_eq!(proj.cardinality(), 3);
    }

    #[test]
    fn one_reducible_line_plus_point() {
        let g = Geometry::shared(2, 3).unwrap();
        let line = g.hyperplane(0).clone();
        let off = (0..13u32).find(|&p| !line.contains(p)).unwrap();
        let k = Multiset::of_flat(Arc::clone(&g), &line)
            .add(&Multiset::indicator(Arc::clone(&g), &[off]))
            .unwrap();
        // brute-force oracle over all 13 lines and 13 candidate points
        let hyper = k.hyperplane_multiplicities();
        let mut expect = Vec::new();
        for p in 0..13u32 {
            if k.point_multiplicity(p) == 0 {
                continue;
            }
            let ok = (0..13u32)
                .filter(|&h| g.hyperplane(h).contains(p))
                .all(|h| hyper[h as usize] >= 2);
            if ok {
                expect.push(p);
            }
        }
        assert_eq!(expect, vec![off]);
        assert_eq!(k.one_reducible_points(1), vec![off]);

        let bare = Multiset::of_flat(Arc::clone(&g), &line);
        assert!(bare.one_reducible_points(1).is_empty());
    }

    #[test]
    fn t_reducible_matches_one_reducible_at_t1() {
        let g = Geometry::shared(2, 3).unwrap();
        let line = g.hyperplane(0).clone();
        let off = (0..13u32).find(|&p| !line.contains(p)).unwrap();
        let k = Multiset::of_flat(Arc::clone(&g), &line)
            .add(&Multiset::indicator(Arc::clone(&g), &[off]))
            .unwrap();
        let d = k.t_reducible(1, 1).unwrap().unwrap();
        assert_eq!(d.cardinality(), 1);
        assert_eq!(d.point_multiplicity(off), 1);
        let reduced = k.checked_sub(&d).unwrap();
        assert_eq!(
            reduced.minihyper_params().unwrap(),
            MinihyperParams { n: 4, w: 1 }
        );

        assert!(matches!(k.t_reducible(1, 3), Err(Error::Unsupported(_))));
        assert!(k.t_reducible_with_limit(1, 3, 3).unwrap().is_none());
    }
}
