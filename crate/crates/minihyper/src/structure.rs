//! Structural pattern matching of multisets against the named families:
//! flat-sum decompositions, cap and oval complements, and the two
//! (70,22) shapes in PG(4,3).

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::families::is_cap;
use crate::geometry::Flat;
use crate::multiset::{Mode, Multiset};
use crate::theorems::{main_reduction, Conclusion};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyLabel {
    /// (21,6) in PG(3,3): sum of a plane and two lines
    PlanePlusTwoLines,
    /// (21,6) in PG(3,3): one double point and two 12-planes
    OneDoublePoint,
    /// (21,6) in PG(3,3): projective with a single 12-plane
    ProjectiveOneTwelvePlane,
    /// (30,9) in PG(3,3): sum of two planes and a line
    TwoPlanesPlusLine,
    /// (30,9) in PG(3,3): union of two planes plus two skew lines through
    /// their common line; matches are flagged for human review
    TwoPlanesPlusSkewLines,
    /// (30,9) in PG(3,3): complement of a 10-cap
    CapComplement,
    /// (9,2) in PG(2,3): complement of an oval
    OvalComplement,
    /// all point multiplicities 0 or 1
    Projective,
    /// (70,22) in PG(4,3): solid plus a (30,9)-minihyper
    SolidPlus309,
    /// (70,22) in PG(4,3): line plus a (66,21)-minihyper
    LinePlus6621,
}

impl FamilyLabel {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilyLabel::PlanePlusTwoLines => "(21,6) plane+line+line",
            FamilyLabel::OneDoublePoint => "(21,6) one-double-point",
            FamilyLabel::ProjectiveOneTwelvePlane => "(21,6) projective",
            FamilyLabel::TwoPlanesPlusLine => "(30,9) plane+plane+line",
            FamilyLabel::TwoPlanesPlusSkewLines => "(30,9) plane-union+skew-lines (review)",
            FamilyLabel::CapComplement => "(30,9) 10-cap complement",
            FamilyLabel::OvalComplement => "(9,2) oval complement",
            FamilyLabel::Projective => "projective",
            FamilyLabel::SolidPlus309 => "(70,22) solid+(30,9)",
            FamilyLabel::LinePlus6621 => "(70,22) line+(66,21)",
        }
    }
}

impl std::fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// All family labels that apply to the multiset. Decompositions are found
/// by exhaustive search over flats.
pub fn structural_match(k: &Multiset) -> Result<Vec<FamilyLabel>> {
    let geometry = k.geometry();
    let mut labels = Vec::new();
    let n = k.cardinality();
    if n == 0 {
        return Ok(labels);
    }
    let (_, w) = k.parameters(Mode::Minihyper)?;
    let projective = k.max_point_multiplicity() <= 1;
    if projective {
        labels.push(FamilyLabel::Projective);
    }

    if geometry.r() == 2 && geometry.q() == 3 && (n, w) == (9, 2) && projective {
        let complement: Vec<u32> = k.complement(1)?.support().map(|(p, _)| p).collect();
        if complement.len() == 4 && is_cap(geometry, &complement) {
            labels.push(FamilyLabel::OvalComplement);
        }
    }

    if geometry.r() == 3 && geometry.q() == 3 {
        let spectrum = k.spectrum();
        let a12 = spectrum.a.get(&12).copied().unwrap_or(0);
        match (n, w) {
            (21, 6) => {
                if decomposes_as_plane_plus_two_lines(k)? {
                    labels.push(FamilyLabel::PlanePlusTwoLines);
                }
                let doubles = spectrum.lambda.get(&2).copied().unwrap_or(0);
                if k.max_point_multiplicity() == 2 && doubles == 1 && a12 == 2 {
                    labels.push(FamilyLabel::OneDoublePoint);
                }
                if projective && a12 == 1 {
                    labels.push(FamilyLabel::ProjectiveOneTwelvePlane);
                }
            }
            (30, 9) => {
                if decomposes_as_two_planes_plus_line(k)? {
                    labels.push(FamilyLabel::TwoPlanesPlusLine);
                }
                if decomposes_as_plane_union_plus_skew_lines(k)? {
                    labels.push(FamilyLabel::TwoPlanesPlusSkewLines);
                }
                if projective {
                    let complement: Vec<u32> = k.complement(1)?.support().map(|(p, _)| p).collect();
                    if complement.len() == 10 && is_cap(geometry, &complement) {
                        labels.push(FamilyLabel::CapComplement);
                    }
                }
            }
            _ => {}
        }
    }

    if geometry.r() == 4 && geometry.q() == 3 && (n, w) == (70, 22) {
        if has_solid_decomposition(k)? {
            labels.push(FamilyLabel::SolidPlus309);
        }
        let report = main_reduction(k)?;
        if report.applicable && report.violations.is_empty() {
            if let Some(Conclusion::LineReduction { residual_params, .. }) = report.conclusion {
                if residual_params == (66, 21) {
                    labels.push(FamilyLabel::LinePlus6621);
                }
            }
        }
    }
    Ok(labels)
}

/// Residual must be exactly the characteristic function of one line.
fn is_single_line(k: &Multiset) -> Result<Option<Flat>> {
    let support: Vec<u32> = k.support().map(|(p, _)| p).collect();
    if support.len() != 4 || k.support().any(|(_, m)| m != 1) {
        return Ok(None);
    }
    let span = k.geometry().span_points(&support)?;
    Ok((span.dim == 1).then_some(span))
}

fn decomposes_as_plane_plus_two_lines(k: &Multiset) -> Result<bool> {
    let geometry = k.geometry();
    for pi in geometry.hyperplanes() {
        let chi_pi = Multiset::of_flat(Arc::clone(geometry), pi);
        let Ok(rest) = k.checked_sub(&chi_pi) else {
            continue;
        };
        for l1 in geometry.flats(1)? {
            let chi_l1 = Multiset::of_flat(Arc::clone(geometry), l1);
            let Ok(rest2) = rest.checked_sub(&chi_l1) else {
                continue;
            };
            if is_single_line(&rest2)?.is_some() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn decomposes_as_two_planes_plus_line(k: &Multiset) -> Result<bool> {
    let geometry = k.geometry();
    let planes = geometry.hyperplanes();
    for (i, pi1) in planes.iter().enumerate() {
        let chi1 = Multiset::of_flat(Arc::clone(geometry), pi1);
        let Ok(rest1) = k.checked_sub(&chi1) else {
            continue;
        };
        for pi2 in &planes[i..] {
            let chi2 = Multiset::of_flat(Arc::clone(geometry), pi2);
            let Ok(rest2) = rest1.checked_sub(&chi2) else {
                continue;
            };
            if is_single_line(&rest2)?.is_some() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Union of two distinct planes (as a set) plus two disjoint lines, each
/// meeting the union only in points of the planes' common line.
fn decomposes_as_plane_union_plus_skew_lines(k: &Multiset) -> Result<bool> {
    let geometry = k.geometry();
    let planes = geometry.hyperplanes();
    for (i, pi1) in planes.iter().enumerate() {
        for pi2 in &planes[i + 1..] {
            let union: Vec<u32> = (0..geometry.num_points() as u32)
                .filter(|&p| pi1.contains(p) || pi2.contains(p))
                .collect();
            let chi_union = Multiset::indicator(Arc::clone(geometry), &union);
            let Ok(rest) = k.checked_sub(&chi_union) else {
                continue;
            };
            if rest.cardinality() != 8 {
                continue;
            }
            let common: Vec<u32> = pi1.points.iter().copied().filter(|&p| pi2.contains(p)).collect();
            for l1 in geometry.flats(1)? {
                let chi_l1 = Multiset::of_flat(Arc::clone(geometry), l1);
                let Ok(rest2) = rest.checked_sub(&chi_l1) else {
                    continue;
                };
                let Some(l2) = is_single_line(&rest2)? else {
                    continue;
                };
                let skew = l1.points.iter().all(|&p| !l2.contains(p));
                let meets_in_common = |l: &Flat| {
                    l.points
                        .iter()
                        .all(|&p| !(pi1.contains(p) || pi2.contains(p)) || common.contains(&p))
                };
                if skew && meets_in_common(l1) && meets_in_common(&l2) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

fn has_solid_decomposition(k: &Multiset) -> Result<bool> {
    let geometry = k.geometry();
    for solid in geometry.hyperplanes() {
        let chi = Multiset::of_flat(Arc::clone(geometry), solid);
        let Ok(rest) = k.checked_sub(&chi) else {
            continue;
        };
        if rest.cardinality() != 30 {
            continue;
        }
        let params = rest.minihyper_params()?;
        if (params.n, params.w) == (30, 9) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{self, Family309};
    use crate::geometry::Geometry;

    #[test]
    fn plane_plus_two_lines_is_labeled() {
        let g = Geometry::shared(3, 3).unwrap();
        let pi = g.hyperplane(0).clone();
        let l1 = g.span_points(&[0, 1]).unwrap();
        let l2 = g.span_points(&[2, 5]).unwrap();
        let k = Multiset::of_flat(Arc::clone(&g), &pi)
            .add(&Multiset::of_flat(Arc::clone(&g), &l1))
            .unwrap()
            .add(&Multiset::of_flat(Arc::clone(&g), &l2))
            .unwrap();
        let labels = structural_match(&k).unwrap();
        assert!(labels.contains(&FamilyLabel::PlanePlusTwoLines), "{labels:?}");
        assert!(!labels.contains(&FamilyLabel::OneDoublePoint));
        assert!(!labels.contains(&FamilyLabel::ProjectiveOneTwelvePlane));
    }

    #[test]
    fn family_309_labels() {
        let a = families::minihyper_30_9(Family309::TwoPlanesPlusLine).unwrap();
        assert!(structural_match(&a)
            .unwrap()
            .contains(&FamilyLabel::TwoPlanesPlusLine));

        let b = families::minihyper_30_9(Family309::TwoPlanesPlusSkewLines).unwrap();
        assert!(structural_match(&b)
            .unwrap()
            .contains(&FamilyLabel::TwoPlanesPlusSkewLines));

        let c = families::minihyper_30_9(Family309::CapComplement).unwrap();
        let labels = structural_match(&c).unwrap();
        assert!(labels.contains(&FamilyLabel::CapComplement), "{labels:?}");
        assert!(labels.contains(&FamilyLabel::Projective));
    }

    #[test]
    fn oval_complement_label() {
        let g = Geometry::shared(2, 3).unwrap();
        let oval = families::conic(&g).unwrap();
        let k = Multiset::indicator(Arc::clone(&g), &oval).complement(1).unwrap();
        assert!(structural_match(&k)
            .unwrap()
            .contains(&FamilyLabel::OvalComplement));
    }

    #[test]
    fn witness_labels_70_22() {
        let w = families::witness_70_22(Family309::TwoPlanesPlusLine).unwrap();
        let labels = structural_match(&w).unwrap();
        assert!(labels.contains(&FamilyLabel::SolidPlus309), "{labels:?}");

        let (b, _) = families::witness_70_22_line_type().unwrap();
        let labels = structural_match(&b).unwrap();
        assert!(labels.contains(&FamilyLabel::LinePlus6621), "{labels:?}");
    }
}
