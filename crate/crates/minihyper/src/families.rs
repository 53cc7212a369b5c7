//! Constructions of the named minihyper families used throughout: conics,
//! elliptic-quadric caps, flat sums, and the (70,22) witnesses in PG(4,3).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::{Flat, Geometry};
use crate::linalg::{self, Mat};
use crate::multiset::Multiset;

/// The conic `x0*x2 = x1^2` in PG(2,q): an oval of q+1 points, no 3 collinear.
pub fn conic(geometry: &Arc<Geometry>) -> Result<Vec<u32>> {
    if geometry.r() != 2 {
        return Err(Error::InvalidArgument("conic lives in a projective plane".into()));
    }
    let q = geometry.q();
    Ok(geometry
        .points()
        .iter()
        .filter(|p| {
            let (a, b, c) = (p.coords[0] as u32, p.coords[1] as u32, p.coords[2] as u32);
            (a * c) % q == (b * b) % q
        })
        .map(|p| p.index)
        .collect())
}

/// An elliptic quadric of PG(3,q), q odd: `x0*x1 + x2^2 - nu*x3^2 = 0` with
/// `nu` a non-residue. Its q^2+1 points form a cap (no 3 collinear).
pub fn elliptic_quadric(geometry: &Arc<Geometry>) -> Result<Vec<u32>> {
    if geometry.r() != 3 {
        return Err(Error::InvalidArgument("elliptic quadric lives in PG(3,q)".into()));
    }
    let q = geometry.q();
    if q == 2 {
        return Err(Error::InvalidArgument("elliptic quadric construction needs odd q".into()));
    }
    let nu = (2..q)
        .find(|&n| (1..q).all(|x| (x * x) % q != n))
        .expect("odd prime fields have non-residues");
    let neg_nu = q - nu;
    Ok(geometry
        .points()
        .iter()
        .filter(|p| {
            let (a, b, c, d) = (
                p.coords[0] as u32,
                p.coords[1] as u32,
                p.coords[2] as u32,
                p.coords[3] as u32,
            );
            (a * b + c * c + neg_nu * d * d) % q == 0
        })
        .map(|p| p.index)
        .collect())
}

/// True if no three of the given points are collinear.
pub fn is_cap(geometry: &Geometry, pts: &[u32]) -> bool {
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i + 1..] {
            let line = geometry.span_points(&[a, b]).expect("two points span a line");
            let hits = pts.iter().filter(|&&p| line.contains(p)).count();
            if hits > 2 {
                return false;
            }
        }
    }
    true
}

fn hyperplane_by_dual(geometry: &Arc<Geometry>, dual: &[u8]) -> Result<Flat> {
    let idx = geometry.point_index(dual)?;
    Ok(geometry.hyperplane(idx).clone())
}

fn line_through(geometry: &Arc<Geometry>, a: &[u8], b: &[u8]) -> Result<Flat> {
    let pa = geometry.point_index(a)?;
    let pb = geometry.point_index(b)?;
    geometry.span_points(&[pa, pb])
}

/// The (5,1)-minihyper of PG(2,3): a line plus one off-line point.
/// Returns the multiset together with the extra point.
pub fn line_plus_point() -> Result<(Multiset, u32)> {
    let g = Geometry::shared(2, 3)?;
    let line = hyperplane_by_dual(&g, &[0, 0, 1])?;
    let p = g.point_index(&[0, 0, 1])?;
    debug_assert!(!line.contains(p));
    let m = Multiset::of_flat(Arc::clone(&g), &line).add(&Multiset::indicator(Arc::clone(&g), &[p]))?;
    Ok((m, p))
}

/// The (17,5)-minihyper of PG(3,3): a plane plus a line not inside it
/// (the line meets the plane in a single point, so the plane has
/// multiplicity 14). Returns the multiset, the plane and the line.
pub fn plane_plus_line() -> Result<(Multiset, Flat, Flat)> {
    let g = Geometry::shared(3, 3)?;
    let pi = hyperplane_by_dual(&g, &[0, 0, 0, 1])?;
    let line = line_through(&g, &[0, 0, 0, 1], &[1, 0, 0, 0])?;
    let m = Multiset::of_flat(Arc::clone(&g), &pi).add(&Multiset::of_flat(Arc::clone(&g), &line))?;
    Ok((m, pi, line))
}

/// Which of the three (30,9) families of PG(3,3) to construct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family309 {
    /// sum of two planes and a line
    TwoPlanesPlusLine,
    /// union of two planes plus two skew lines through their common line
    TwoPlanesPlusSkewLines,
    /// complement of a 10-cap
    CapComplement,
}

impl Family309 {
    pub const ALL: [Family309; 3] = [
        Family309::TwoPlanesPlusLine,
        Family309::TwoPlanesPlusSkewLines,
        Family309::CapComplement,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Family309::TwoPlanesPlusLine => "two-planes-plus-line",
            Family309::TwoPlanesPlusSkewLines => "two-planes-plus-skew-lines",
            Family309::CapComplement => "cap-complement",
        }
    }
}

/// A (30,9)-minihyper of PG(3,3) of the requested family.
pub fn minihyper_30_9(family: Family309) -> Result<Multiset> {
    let g = Geometry::shared(3, 3)?;
    match family {
        Family309::TwoPlanesPlusLine => {
            let pi1 = hyperplane_by_dual(&g, &[0, 0, 0, 1])?;
            let pi2 = hyperplane_by_dual(&g, &[0, 0, 1, 0])?;
            // a line skew to the common line {x2 = x3 = 0}
            let line = line_through(&g, &[0, 0, 0, 1], &[0, 0, 1, 0])?;
            Multiset::of_flat(Arc::clone(&g), &pi1)
                .add(&Multiset::of_flat(Arc::clone(&g), &pi2))?
                .add(&Multiset::of_flat(Arc::clone(&g), &line))
        }
        Family309::TwoPlanesPlusSkewLines => {
            let pi1 = hyperplane_by_dual(&g, &[0, 0, 1, 0])?;
            let pi2 = hyperplane_by_dual(&g, &[0, 0, 0, 1])?;
            // the two other planes through the common line m = {x2 = x3 = 0}
            // each carry one of the lines; the lines meet m in distinct points
            let l1 = line_through(&g, &[1, 0, 0, 0], &[0, 1, 1, 2])?;
            let l2 = line_through(&g, &[0, 1, 0, 0], &[1, 0, 1, 1])?;
            debug_assert!(l1.points.iter().all(|p| !l2.contains(*p)));
            let union: Vec<u32> = (0..g.num_points() as u32)
                .filter(|&p| pi1.contains(p) || pi2.contains(p))
                .collect();
            Multiset::indicator(Arc::clone(&g), &union)
                .add(&Multiset::of_flat(Arc::clone(&g), &l1))?
                .add(&Multiset::of_flat(Arc::clone(&g), &l2))
        }
        Family309::CapComplement => {
            let cap = elliptic_quadric(&g)?;
            Multiset::indicator(Arc::clone(&g), &cap).complement(1)
        }
    }
}

/// The irreducible (22,6)-minihyper of PG(3,3): a plane plus the complement
/// of an oval inside a second plane.
pub fn plane_plus_oval_complement() -> Result<Multiset> {
    let g = Geometry::shared(3, 3)?;
    let pi1 = hyperplane_by_dual(&g, &[0, 0, 0, 1])?;
    let pi2 = hyperplane_by_dual(&g, &[0, 0, 1, 0])?;
    // conic in pi2 = {x2 = 0} using coordinates (x0, x1, x3)
    let oval_complement: Vec<u32> = pi2
        .points
        .iter()
        .copied()
        .filter(|&p| {
            let c = &g.point(p).coords;
            (c[0] as u32 * c[3] as u32) % 3 != (c[1] as u32 * c[1] as u32) % 3
        })
        .collect();
    debug_assert_eq!(oval_complement.len(), 9);
    Multiset::of_flat(Arc::clone(&g), &pi1).add(&Multiset::indicator(Arc::clone(&g), &oval_complement))
}

/// Embed a multiset of PG(3,3) into the solid `{x4 = 0}` of PG(4,3).
pub fn embed_in_solid(m: &Multiset) -> Result<Multiset> {
    if m.geometry().r() != 3 || m.geometry().q() != 3 {
        return Err(Error::InvalidArgument("embedding expects a PG(3,3) multiset".into()));
    }
    let g4 = Geometry::shared(4, 3)?;
    let mut out = Multiset::empty(Arc::clone(&g4));
    let mut mult = vec![0u32; g4.num_points()];
    for (p, mass) in m.support() {
        let mut coords = m.geometry().point(p).coords.clone();
        coords.push(0);
        mult[g4.point_index(&coords)? as usize] = mass;
    }
    out = out.add(&Multiset::from_multiplicities(g4, mult)?)?;
    Ok(out)
}

/// A (70,22)-minihyper in PG(4,3): the characteristic function of the solid
/// `{x4 = 0}` plus an embedded (30,9)-minihyper of the given family.
pub fn witness_70_22(family: Family309) -> Result<Multiset> {
    let g4 = Geometry::shared(4, 3)?;
    let solid = hyperplane_by_dual(&g4, &[0, 0, 0, 0, 1])?;
    let inner = embed_in_solid(&minihyper_30_9(family)?)?;
    Multiset::of_flat(Arc::clone(&g4), &solid).add(&inner)
}

/// A (66,21)-minihyper of PG(4,3): a solid plus two planes not inside it.
pub fn minihyper_66_21() -> Result<Multiset> {
    let g = Geometry::shared(4, 3)?;
    let solid = hyperplane_by_dual(&g, &[0, 0, 0, 0, 1])?;
    let pi1 = plane_by_equations(&g, &[[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]])?;
    let pi2 = plane_by_equations(&g, &[[0, 0, 1, 0, 0], [0, 0, 0, 1, 0]])?;
    Multiset::of_flat(Arc::clone(&g), &solid)
        .add(&Multiset::of_flat(Arc::clone(&g), &pi1))?
        .add(&Multiset::of_flat(Arc::clone(&g), &pi2))
}

/// A (70,22)-minihyper of PG(4,3) that is a (66,21)-minihyper plus a line.
/// Returns the multiset together with the added line.
pub fn witness_70_22_line_type() -> Result<(Multiset, Flat)> {
    let g = Geometry::shared(4, 3)?;
    let base = minihyper_66_21()?;
    let line = line_through(&g, &[0, 0, 0, 0, 1], &[1, 1, 1, 1, 1])?;
    Ok((base.add(&Multiset::of_flat(Arc::clone(&g), &line))?, line))
}

/// Points of the plane cut out by two independent linear equations in PG(4,3).
fn plane_by_equations(g: &Arc<Geometry>, eqs: &[[u8; 5]; 2]) -> Result<Flat> {
    let m = Mat::from_rows(g.q(), &[eqs[0].to_vec(), eqs[1].to_vec()])?;
    let pts: Vec<u32> = g
        .points()
        .iter()
        .filter(|p| {
            linalg::dot_mod(&eqs[0], &p.coords, g.q()) == 0 && linalg::dot_mod(&eqs[1], &p.coords, g.q()) == 0
        })
        .map(|p| p.index)
        .collect();
    debug_assert_eq!(m.rank(), 2);
    g.span_points(&pts)
}

/// The generator matrix of the cap code: columns are the points of a
/// 10-cap in PG(3,3), giving a [10,4,6]_3 code.
pub fn cap_code_generator() -> Result<crate::code::GeneratorMatrix> {
    let g = Geometry::shared(3, 3)?;
    let cap = elliptic_quadric(&g)?;
    let rows: Vec<Vec<u8>> = (0..4)
        .map(|r| cap.iter().map(|&p| g.point(p).coords[r]).collect())
        .collect();
    crate::code::GeneratorMatrix::new(3, &rows)
}
