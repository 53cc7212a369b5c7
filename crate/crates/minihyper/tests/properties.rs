//! Property tests for the core invariants: format round trips, complement
//! involution, spectrum identities and certificate invariance.

use std::sync::Arc;

use proptest::prelude::*;

use minihyper::canonical::CanonEngine;
use minihyper::format::{read_multiset, write_multiset};
use minihyper::geometry::{v, Geometry};
use minihyper::linalg::Mat;
use minihyper::multiset::Multiset;

fn pg23_multiset() -> impl Strategy<Value = Multiset> {
    proptest::collection::vec(0u32..5, 13).prop_map(|mult| {
        let g = Geometry::shared(2, 3).unwrap();
        Multiset::from_multiplicities(g, mult).unwrap()
    })
}

proptest! {
    #[test]
    fn multiset_text_round_trip(m in pg23_multiset()) {
        let text = write_multiset(&m);
        let back = read_multiset(&text).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(write_multiset(&back), text);
    }

    #[test]
    fn complement_is_an_involution(m in pg23_multiset(), extra in 0u32..3) {
        let s = m.max_point_multiplicity() + extra;
        if s > 0 {
            let twice = m.complement(s).unwrap().complement(s).unwrap();
            prop_assert_eq!(twice, m);
        }
    }

    #[test]
    fn spectrum_identities_hold(m in pg23_multiset()) {
        let g = m.geometry().clone();
        let spectrum = m.spectrum();
        let total: u64 = spectrum.a.values().sum();
        prop_assert_eq!(total, v(3, 3).unwrap());
        let weighted: u64 = spectrum.a.iter().map(|(&i, &c)| i * c).sum();
        prop_assert_eq!(weighted, spectrum.n * v(2, 3).unwrap());
        let points: u64 = spectrum.lambda.values().sum();
        prop_assert_eq!(points, g.num_points() as u64);
        let mass: u64 = spectrum.lambda.iter().map(|(&j, &c)| j as u64 * c).sum();
        prop_assert_eq!(mass, spectrum.n);
    }

    #[test]
    fn certificates_are_collineation_invariant(
        m in pg23_multiset(),
        entries in proptest::collection::vec(0u8..3, 9),
    ) {
        let mat = Mat::from_rows(3, &[
            entries[0..3].to_vec(),
            entries[3..6].to_vec(),
            entries[6..9].to_vec(),
        ]).unwrap();
        prop_assume!(mat.is_invertible());
        let moved = m.apply_collineation(&mat).unwrap();
        let engine = CanonEngine::shared(m.geometry());
        prop_assert_eq!(
            engine.canonicalize(m.multiplicities()),
            engine.canonicalize(moved.multiplicities())
        );
    }

    #[test]
    fn restriction_cardinality_is_flat_multiplicity(m in pg23_multiset(), line_idx in 0u32..13) {
        let g = Arc::clone(m.geometry());
        let line = g.hyperplane(line_idx).clone();
        let restricted = m.restrict(&line).unwrap();
        prop_assert_eq!(restricted.cardinality(), m.multiplicity(&line));
    }
}
