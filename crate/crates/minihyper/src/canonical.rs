//! Canonical forms of multisets under the collineation group PGL(r+1,q).
//!
//! The canonical representative of a multiset is the lexicographically
//! greatest relabeling of its multiplicity vector over the group. Two
//! multisets in the same geometry are projectively equivalent exactly when
//! their canonical vectors (certificates) agree.
//!
//! For small groups the engine materializes every collineation as a point
//! permutation. Otherwise it searches over collineations directly: a
//! collineation is pinned down by choosing image representatives for the
//! r+1 positions whose points are linearly independent of their
//! predecessors (plus one scalar per basis point past the first); every
//! other image is forced linearly. The same backtracking core answers the
//! three questions the classifier needs: "is some relabeling of this
//! partial assignment lexicographically greater", "what is the greatest
//! relabeling", and "how many collineations achieve a given relabeling".

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::Result;
use crate::geometry::Geometry;
use crate::linalg::{self, Mat};
use crate::multiset::Multiset;

/// Order of PGL(m, q): the matrix group order divided by the q-1 scalars.
pub fn pgl_order(m: u32, q: u32) -> u128 {
    let qm = (q as u128).pow(m);
    let mut order = 1u128;
    for i in 0..m {
        order *= qm - (q as u128).pow(i);
    }
    order / (q as u128 - 1)
}

const EXPLICIT_GROUP_LIMIT: u128 = 50_000;
const EXPLICIT_MATRIX_LIMIT: u128 = 2_000_000;

/// A multiset in canonical labeling, with its certificate and the order of
/// its stabilizer in PGL(r+1,q).
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub multiset: Multiset,
    pub automorphism_order: u64,
    pub certificate: Vec<u8>,
}

/// Encode a multiplicity vector as a byte certificate preserving
/// lexicographic order.
pub fn certificate_bytes(vals: &[u32]) -> Vec<u8> {
    vals.iter().flat_map(|v| v.to_be_bytes()).collect()
}

enum Step {
    /// point is independent of all earlier points; images branch here
    Independent { slot: usize },
    /// point is a fixed combination of the earlier basis slots
    Dependent { coeffs: Vec<(usize, u8)> },
}

/// Coordinate vectors live in stack buffers of this width; enough for the
/// geometries within the construction budget.
const MAX_DIM: usize = 8;

type Coords = [u8; MAX_DIM];

fn to_coords(v: &[u8]) -> Coords {
    let mut out = [0u8; MAX_DIM];
    out[..v.len()].copy_from_slice(v);
    out
}

/// Chosen image representatives plus an echelon basis of their span, kept
/// in lockstep so independence tests cost O(m^2) without allocation.
struct PartialMap {
    q: u32,
    m: usize,
    ys: Vec<Coords>,
    echelon: Vec<Coords>,
    pivots: Vec<usize>,
}

impl PartialMap {
    fn new(q: u32, m: usize) -> Self {
        assert!(m <= MAX_DIM);
        PartialMap {
            q,
            m,
            ys: Vec::new(),
            echelon: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn reduce(&self, v: &[u8]) -> Coords {
        let mut out = to_coords(v);
        for (row, &piv) in self.echelon.iter().zip(&self.pivots) {
            let c = out[piv];
            if c != 0 {
                let f = linalg::neg_mod(c, self.q);
                for slot in 0..self.m {
                    out[slot] = linalg::add_mod(out[slot], linalg::mul_mod(f, row[slot], self.q), self.q);
                }
            }
        }
        out
    }

    fn spans(&self, v: &[u8]) -> bool {
        self.reduce(v)[..self.m].iter().all(|&c| c == 0)
    }

    /// Push a representative known to be independent of the span so far.
    fn push(&mut self, rep: Coords) {
        let mut reduced = self.reduce(&rep[..self.m]);
        let piv = reduced[..self.m]
            .iter()
            .position(|&c| c != 0)
            .expect("representative must be independent");
        let inv = linalg::inv_mod(reduced[piv], self.q);
        for c in reduced[..self.m].iter_mut() {
            *c = linalg::mul_mod(*c, inv, self.q);
        }
        self.echelon.push(reduced);
        self.pivots.push(piv);
        self.ys.push(rep);
    }

    fn pop(&mut self) {
        self.ys.pop();
        self.echelon.pop();
        self.pivots.pop();
    }

    fn scaled(&self, coords: &[u8], mu: u8) -> Coords {
        let mut rep = [0u8; MAX_DIM];
        for (slot, &c) in coords.iter().enumerate() {
            rep[slot] = linalg::mul_mod(c, mu, self.q);
        }
        rep
    }
}

/// Search engine for one geometry.
pub struct CanonEngine {
    geometry: Arc<Geometry>,
    plan: Vec<Step>,
    /// all collineations as point permutations, when the group is small
    perms: Option<Vec<Vec<u32>>>,
}

impl CanonEngine {
    /// Engines are cached per (r, q); construction enumerates the group
    /// for small geometries.
    pub fn shared(geometry: &Arc<Geometry>) -> Arc<CanonEngine> {
        static CACHE: OnceLock<Mutex<HashMap<(usize, u32), Arc<CanonEngine>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let key = (geometry.r(), geometry.q());
        if let Some(e) = cache.lock().unwrap().get(&key) {
            return Arc::clone(e);
        }
        let engine = Arc::new(CanonEngine::new(geometry));
        let mut guard = cache.lock().unwrap();
        Arc::clone(guard.entry(key).or_insert(engine))
    }

    pub fn new(geometry: &Arc<Geometry>) -> CanonEngine {
        let m = geometry.r() + 1;
        let q = geometry.q();
        let mut plan = Vec::with_capacity(geometry.num_points());
        let mut basis: Vec<Vec<u8>> = Vec::new();
        for p in geometry.points() {
            match express(&basis, &p.coords, q) {
                Some(coeffs) => plan.push(Step::Dependent {
                    coeffs: coeffs
                        .into_iter()
                        .enumerate()
                        .filter(|&(_, c)| c != 0)
                        .collect(),
                }),
                None => {
                    plan.push(Step::Independent { slot: basis.len() });
                    basis.push(p.coords.clone());
                }
            }
        }
        debug_assert_eq!(basis.len(), m);

        let perms = if pgl_order(m as u32, q) <= EXPLICIT_GROUP_LIMIT
            && (q as u128).pow((m * m) as u32) <= EXPLICIT_MATRIX_LIMIT
        {
            Some(enumerate_permutations(geometry))
        } else {
            None
        };
        CanonEngine {
            geometry: Arc::clone(geometry),
            plan,
            perms,
        }
    }

    pub fn group_order(&self) -> u128 {
        pgl_order(self.geometry.r() as u32 + 1, self.geometry.q())
    }

    fn scalars(&self, slot: usize) -> Vec<u8> {
        if slot == 0 {
            vec![1]
        } else {
            (1..self.geometry.q() as u8).collect()
        }
    }

    /// Is there a collineation whose relabeling of `vals` is
    /// lexicographically greater than `vals`, judged on the first `k`
    /// positions and using only decided points (index < k)?
    ///
    /// A `true` answer proves that no completion of the prefix can be the
    /// canonical representative of its orbit. `fuel` bounds the search
    /// effort: when it runs out the answer is `false`, which is always
    /// safe for pruning (a missed prune costs time, never correctness).
    /// Pass `u64::MAX` for an exact answer.
    pub fn beats_prefix(&self, vals: &[u32], k: usize, fuel: u64) -> bool {
        if k == 0 {
            return false;
        }
        if let Some(perms) = &self.perms {
            for perm in perms {
                for (i, &vi) in vals.iter().enumerate().take(k) {
                    let img = perm[i] as usize;
                    if img >= k {
                        break;
                    }
                    match vals[img].cmp(&vi) {
                        std::cmp::Ordering::Greater => return true,
                        std::cmp::Ordering::Less => break,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
            return false;
        }
        let mut pm = PartialMap::new(self.geometry.q(), self.geometry.r() + 1);
        let mut fuel = i64::try_from(fuel).unwrap_or(i64::MAX);
        self.beats_rec(vals, k, 0, &mut pm, &mut fuel)
    }

    fn beats_rec(&self, vals: &[u32], k: usize, pos: usize, pm: &mut PartialMap, fuel: &mut i64) -> bool {
        if pos == k {
            return false; // prefix-equal relabeling, no improvement
        }
        *fuel -= 1;
        if *fuel <= 0 {
            return false;
        }
        match &self.plan[pos] {
            Step::Dependent { coeffs } => {
                let img = self.forced_image(coeffs, &pm.ys);
                if img as usize >= k {
                    return false;
                }
                match vals[img as usize].cmp(&vals[pos]) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => self.beats_rec(vals, k, pos + 1, pm, fuel),
                }
            }
            Step::Independent { slot } => {
                // any decided, independent point of larger value wins
                // outright: every partial choice of independent images
                // extends to a collineation
                for cand in 0..k as u32 {
                    if vals[cand as usize] > vals[pos] && !pm.spans(&self.geometry.point(cand).coords) {
                        return true;
                    }
                }
                for cand in 0..k as u32 {
                    if vals[cand as usize] != vals[pos] {
                        continue;
                    }
                    let coords = &self.geometry.point(cand).coords;
                    if pm.spans(coords) {
                        continue;
                    }
                    for mu in self.scalars(*slot) {
                        pm.push(pm.scaled(coords, mu));
                        let hit = self.beats_rec(vals, k, pos + 1, pm, fuel);
                        pm.pop();
                        if hit {
                            return true;
                        }
                        if *fuel <= 0 {
                            return false;
                        }
                    }
                }
                false
            }
        }
    }

    /// Lexicographically greatest relabeling of `vals` over the group.
    pub fn canonicalize(&self, vals: &[u32]) -> Vec<u32> {
        if let Some(perms) = &self.perms {
            let mut best = vals.to_vec();
            let mut relabeled = vec![0u32; vals.len()];
            for perm in perms {
                for (i, &img) in perm.iter().enumerate() {
                    relabeled[i] = vals[img as usize];
                }
                if relabeled > best {
                    best.copy_from_slice(&relabeled);
                }
            }
            return best;
        }
        let mut best = vals.to_vec();
        let mut pm = PartialMap::new(self.geometry.q(), self.geometry.r() + 1);
        let mut cur = Vec::with_capacity(vals.len());
        self.max_rec(vals, 0, &mut pm, &mut cur, true, &mut best);
        best
    }

    fn max_rec(
        &self,
        vals: &[u32],
        pos: usize,
        pm: &mut PartialMap,
        cur: &mut Vec<u32>,
        tie: bool,
        best: &mut Vec<u32>,
    ) {
        if pos == vals.len() {
            // the leaf compare is authoritative; `tie` pruning only ever
            // compares against a lower bound of the final maximum
            if cur.as_slice() > best.as_slice() {
                best.copy_from_slice(cur);
            }
            return;
        }
        let q = self.geometry.q();
        match &self.plan[pos] {
            Step::Dependent { coeffs } => {
                let img = self.forced_image(coeffs, &pm.ys);
                let val = vals[img as usize];
                if tie && val < best[pos] {
                    return;
                }
                cur.push(val);
                self.max_rec(vals, pos + 1, pm, cur, tie && val == best[pos], best);
                cur.pop();
            }
            Step::Independent { slot } => {
                let mut cands: Vec<u32> = (0..vals.len() as u32)
                    .filter(|&c| !pm.spans(&self.geometry.point(c).coords))
                    .collect();
                cands.sort_by(|&a, &b| vals[b as usize].cmp(&vals[a as usize]));
                for cand in cands {
                    let val = vals[cand as usize];
                    if tie && val < best[pos] {
                        break; // sorted descending
                    }
                    let coords = self.geometry.point(cand).coords.clone();
                    for mu in self.scalars(*slot) {
                        pm.push(pm.scaled(&coords, mu));
                        cur.push(val);
                        self.max_rec(vals, pos + 1, pm, cur, tie && val == best[pos], best);
                        cur.pop();
                        pm.pop();
                    }
                }
            }
        }
    }

    /// Number of collineations whose relabeling of `vals` equals `target`
    /// exactly. With `target = vals` this is the automorphism group order.
    pub fn count_maps(&self, vals: &[u32], target: &[u32]) -> u64 {
        // every collineation fixes a constant vector
        if vals.iter().all(|&v| v == vals[0]) {
            return if vals == target {
                u64::try_from(self.group_order()).unwrap_or(u64::MAX)
            } else {
                0
            };
        }
        if let Some(perms) = &self.perms {
            return perms
                .iter()
                .filter(|perm| perm.iter().enumerate().all(|(i, &img)| vals[img as usize] == target[i]))
                .count() as u64;
        }
        let mut pm = PartialMap::new(self.geometry.q(), self.geometry.r() + 1);
        self.count_rec(vals, target, 0, &mut pm)
    }

    fn count_rec(&self, vals: &[u32], target: &[u32], pos: usize, pm: &mut PartialMap) -> u64 {
        if pos == vals.len() {
            return 1;
        }
        let q = self.geometry.q();
        match &self.plan[pos] {
            Step::Dependent { coeffs } => {
                let img = self.forced_image(coeffs, &pm.ys);
                if vals[img as usize] == target[pos] {
                    self.count_rec(vals, target, pos + 1, pm)
                } else {
                    0
                }
            }
            Step::Independent { slot } => {
                let mut total = 0;
                for cand in 0..vals.len() as u32 {
                    if vals[cand as usize] != target[pos] {
                        continue;
                    }
                    let coords = self.geometry.point(cand).coords.clone();
                    if pm.spans(&coords) {
                        continue;
                    }
                    for mu in self.scalars(*slot) {
                        pm.push(pm.scaled(&coords, mu));
                        total += self.count_rec(vals, target, pos + 1, pm);
                        pm.pop();
                    }
                }
                total
            }
        }
    }

    fn forced_image(&self, coeffs: &[(usize, u8)], ys: &[Coords]) -> u32 {
        let q = self.geometry.q();
        let m = self.geometry.r() + 1;
        let mut img = [0u8; MAX_DIM];
        for &(slot, c) in coeffs {
            let y = &ys[slot];
            for i in 0..m {
                img[i] = linalg::add_mod(img[i], linalg::mul_mod(c, y[i], q), q);
            }
        }
        self.geometry
            .point_index(&img[..m])
            .expect("forced image of independent representatives is nonzero")
    }
}

fn express(basis: &[Vec<u8>], x: &[u8], q: u32) -> Option<Vec<u8>> {
    if basis.is_empty() {
        return None;
    }
    let m = x.len();
    let mut mat = Mat::zero(q, m, basis.len());
    for (c, b) in basis.iter().enumerate() {
        for (r, &val) in b.iter().enumerate() {
            mat.set(r, c, val);
        }
    }
    mat.solve(x)
}

fn enumerate_permutations(geometry: &Arc<Geometry>) -> Vec<Vec<u32>> {
    let m = geometry.r() + 1;
    let q = geometry.q();
    let total = (q as u64).pow((m * m) as u32);
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for code in 0..total {
        let mut mat = Mat::zero(q, m, m);
        let mut c = code;
        for r in 0..m {
            for col in 0..m {
                mat.set(r, col, (c % q as u64) as u8);
                c /= q as u64;
            }
        }
        if !mat.is_invertible() {
            continue;
        }
        let perm: Vec<u32> = geometry
            .points()
            .iter()
            .map(|p| geometry.point_index(&mat.mul_vec(&p.coords)).unwrap())
            .collect();
        seen.insert(perm);
    }
    let mut perms: Vec<Vec<u32>> = seen.into_iter().collect();
    perms.sort_unstable();
    perms
}

/// Canonical labeling, stabilizer order and certificate of a multiset.
pub fn canonical_form(k: &Multiset) -> Result<CanonicalForm> {
    let engine = CanonEngine::shared(k.geometry());
    let vals = k.multiplicities();
    let best = engine.canonicalize(vals);
    let automorphism_order = engine.count_maps(vals, &best);
    let certificate = certificate_bytes(&best);
    let multiset = Multiset::from_multiplicities(Arc::clone(k.geometry()), best)?;
    Ok(CanonicalForm {
        multiset,
        automorphism_order,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiset::Multiset;

    #[test]
    fn pgl_orders() {
        assert_eq!(pgl_order(3, 3), 5616);
        assert_eq!(pgl_order(4, 3), 12_130_560);
        assert_eq!(pgl_order(2, 3), 24);
    }

    #[test]
    fn explicit_group_is_complete_for_pg23() {
        let g = Geometry::shared(2, 3).unwrap();
        let engine = CanonEngine::shared(&g);
        assert_eq!(engine.perms.as_ref().unwrap().len() as u128, pgl_order(3, 3));
    }

    #[test]
    fn equivalent_lines_share_certificates() {
        let g = Geometry::shared(2, 3).unwrap();
        let a = canonical_form(&Multiset::of_flat(Arc::clone(&g), &g.hyperplane(0).clone())).unwrap();
        let b = canonical_form(&Multiset::of_flat(Arc::clone(&g), &g.hyperplane(7).clone())).unwrap();
        assert_eq!(a.certificate, b.certificate);

        let conic = crate::families::conic(&g).unwrap();
        let c = canonical_form(&Multiset::indicator(Arc::clone(&g), &conic)).unwrap();
        assert_ne!(a.certificate, c.certificate);
    }

    #[test]
    fn line_stabilizer_order_matches_orbit_count() {
        let g = Geometry::shared(2, 3).unwrap();
        let form = canonical_form(&Multiset::of_flat(Arc::clone(&g), &g.hyperplane(0).clone())).unwrap();
        // orbit-stabilizer oracle: the 13 lines form one orbit
        let engine = CanonEngine::shared(&g);
        let orbit: HashSet<Vec<u8>> = (0..13u32)
            .map(|h| {
                canonical_form(&Multiset::of_flat(Arc::clone(&g), &g.hyperplane(h).clone()))
                    .unwrap()
                    .certificate
            })
            .collect();
        assert_eq!(orbit.len(), 1);
        assert_eq!(form.automorphism_order as u128, engine.group_order() / 13);
    }

    #[test]
    fn backtrack_agrees_with_explicit_on_pg23() {
        let g = Geometry::shared(2, 3).unwrap();
        let explicit = CanonEngine::shared(&g);
        // a fresh engine with the permutation table stripped exercises the
        // backtracking path on the same inputs
        let mut backtrack = CanonEngine::new(&g);
        backtrack.perms = None;
        let samples: Vec<Vec<u32>> = vec![
            vec![0, 1, 0, 2, 1, 0, 0, 0, 3, 0, 1, 0, 0],
            vec![1; 13],
            vec![0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2],
            vec![2, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0],
        ];
        for vals in samples {
            assert_eq!(explicit.canonicalize(&vals), backtrack.canonicalize(&vals), "{vals:?}");
            let canon = explicit.canonicalize(&vals);
            assert_eq!(
                explicit.count_maps(&vals, &canon),
                backtrack.count_maps(&vals, &canon),
                "{vals:?}"
            );
            for k in [1, 4, 7, 13] {
                assert_eq!(
                    explicit.beats_prefix(&vals, k, u64::MAX),
                    backtrack.beats_prefix(&vals, k, u64::MAX),
                    "{vals:?} at {k}"
                );
            }
        }
    }

    #[test]
    fn canonical_vector_never_beaten() {
        let g = Geometry::shared(2, 3).unwrap();
        let engine = CanonEngine::shared(&g);
        let vals = vec![0, 1, 0, 2, 1, 0, 0, 0, 3, 0, 1, 0, 0];
        let canon = engine.canonicalize(&vals);
        assert!(!engine.beats_prefix(&canon, 13, u64::MAX));
        assert!(canon >= vals);
    }

    #[test]
    fn collineation_images_share_canonical_form() {
        let g = Geometry::shared(3, 3).unwrap();
        let m = Multiset::of_flat(Arc::clone(&g), &g.hyperplane(0).clone());
        let mat = Mat::from_rows(
            3,
            &[
                vec![0, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1],
                vec![1, 0, 2, 1],
            ],
        )
        .unwrap();
        let moved = m.apply_collineation(&mat).unwrap();
        assert_ne!(m, moved);
        let a = canonical_form(&m).unwrap();
        let b = canonical_form(&moved).unwrap();
        assert_eq!(a.certificate, b.certificate);
        assert_eq!(a.automorphism_order, b.automorphism_order);
    }
}
