//! Isomorph-free exhaustive classification of (n,w)-arcs and minihypers.
//!
//! The search assigns point multiplicities in index order, depth first,
//! trying high values first. Three prunes drive it: remaining-mass bounds
//! against deficient hyperplanes, the subspace-multiplicity lower bounds on
//! tracked flat dimensions, and rejection of any partial assignment whose
//! relabeling under some collineation is lexicographically greater (such a
//! prefix cannot complete to the canonical representative of its orbit).
//! Accepted leaves are therefore exactly the lexicographically greatest
//! members of their orbits: one representative per equivalence class.
//!
//! A node budget makes long runs interruptible: on exhaustion the unexplored
//! subtree roots are returned as a frontier that a later run can resume.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::canonical::{certificate_bytes, CanonEngine, CanonicalForm};
use crate::error::{Error, Result};
use crate::geometry::{v, Geometry};
use crate::multiset::{Mode, Multiset};
use crate::theorems::eq1_bound;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyParams {
    pub r: usize,
    pub q: u32,
    pub n: u64,
    pub w: u64,
    pub mode: Mode,
    pub cap: u32,
}

#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
    pub wall_ms: u128,
}

/// Complete (or explicitly incomplete) list of equivalence-class
/// representatives for one parameter set.
pub struct Catalog {
    pub params: ClassifyParams,
    pub complete: bool,
    pub representatives: Vec<CanonicalForm>,
    pub stats: SearchStats,
}

/// Unfinished work: pending subtree roots plus everything found so far.
/// Serializable so an interrupted classification can resume.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Frontier {
    pub params: ClassifyParams,
    pub prefixes: Vec<Vec<u32>>,
    pub representatives: Vec<Vec<u32>>,
    pub nodes: u64,
    pub prunes: u64,
}

pub struct ClassifyOptions {
    pub node_budget: u64,
    pub threads: usize,
    pub resume: Option<Frontier>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            node_budget: u64::MAX,
            threads: 1,
            resume: None,
        }
    }
}

pub struct ClassifyOutcome {
    pub catalog: Catalog,
    /// present exactly when the catalog is incomplete
    pub frontier: Option<Frontier>,
}

/// depth at which subtrees are handed off to worker threads
const TASK_DEPTH: usize = 6;

/// step budget for interior canonicity tests; the leaf test is exact, so
/// an exhausted interior test can only cost time, never a wrong catalog
const PREFIX_TEST_FUEL: u64 = 2_000;

/// All multiplicity bounds tracked for one flat dimension.
struct TrackPlan {
    bound: u64,
    flat_sizes: Vec<u32>,
    point_flats: Vec<Vec<u32>>,
}

impl TrackPlan {
    fn for_dim(geometry: &Geometry, dim: usize, bound: u64) -> Result<TrackPlan> {
        let flats = geometry.flats(dim)?;
        let mut point_flats = vec![Vec::new(); geometry.num_points()];
        let mut flat_sizes = Vec::with_capacity(flats.len());
        for (fi, f) in flats.iter().enumerate() {
            flat_sizes.push(f.points.len() as u32);
            for &p in &f.points {
                point_flats[p as usize].push(fi as u32);
            }
        }
        Ok(TrackPlan {
            bound,
            flat_sizes,
            point_flats,
        })
    }
}

struct Tracker<'a> {
    plan: &'a TrackPlan,
    decided: Vec<u64>,
    undecided: Vec<u32>,
}

impl<'a> Tracker<'a> {
    fn new(plan: &'a TrackPlan) -> Tracker<'a> {
        Tracker {
            plan,
            decided: vec![0; plan.flat_sizes.len()],
            undecided: plan.flat_sizes.clone(),
        }
    }

    fn assign(&mut self, point: usize, value: u32) {
        for &f in &self.plan.point_flats[point] {
            self.decided[f as usize] += value as u64;
            self.undecided[f as usize] -= 1;
        }
    }

    fn unassign(&mut self, point: usize, value: u32) {
        for &f in &self.plan.point_flats[point] {
            self.decided[f as usize] -= value as u64;
            self.undecided[f as usize] += 1;
        }
    }
}

struct Shared<'a> {
    geometry: &'a Geometry,
    engine: &'a CanonEngine,
    params: &'a ClassifyParams,
    hyper_plan: &'a TrackPlan,
    extra_plans: &'a [TrackPlan],
    /// point-multiplicity floor from the dimension-0 bound
    floor: u32,
    /// hyperplanes through one point
    vr: u64,
    nodes: &'a AtomicU64,
    prunes: &'a AtomicU64,
    budget: u64,
    exhausted: &'a AtomicBool,
}

struct SearchCtx<'a> {
    shared: &'a Shared<'a>,
    assignment: Vec<u32>,
    mass: u64,
    hyper: Tracker<'a>,
    extra: Vec<Tracker<'a>>,
    task_depth: usize,
    tasks: Vec<Vec<u32>>,
    reps: Vec<Vec<u32>>,
    frontier: Vec<Vec<u32>>,
}

impl<'a> SearchCtx<'a> {
    fn new(shared: &'a Shared<'a>, task_depth: usize) -> SearchCtx<'a> {
        SearchCtx {
            shared,
            assignment: vec![0; shared.geometry.num_points()],
            mass: 0,
            hyper: Tracker::new(shared.hyper_plan),
            extra: shared.extra_plans.iter().map(Tracker::new).collect(),
            task_depth,
            tasks: Vec::new(),
            reps: Vec::new(),
            frontier: Vec::new(),
        }
    }

    fn replay(&mut self, prefix: &[u32]) {
        for (k, &value) in prefix.iter().enumerate() {
            self.assignment[k] = value;
            self.mass += value as u64;
            self.hyper.assign(k, value);
            for t in &mut self.extra {
                t.assign(k, value);
            }
        }
    }

    fn cap_eff(&self, k: usize) -> u32 {
        if k == 0 {
            self.shared.params.cap
        } else {
            self.assignment[0]
        }
    }

    /// Bound checks for the prefix ending at position `k` (inclusive).
    fn feasible(&self, k: usize) -> bool {
        let p = self.shared.params;
        if self.mass > p.n {
            return false;
        }
        let rem = p.n - self.mass;
        let left = (self.shared.geometry.num_points() - k - 1) as u64;
        if left * self.cap_eff(k) as u64 * 1 < rem {
            return false;
        }
        match p.mode {
            Mode::Arc => {
                // decided hyperplane mass only grows
                self.hyper.decided.iter().all(|&d| d <= p.w)
            }
            Mode::Minihyper => {
                let cap = self.cap_eff(k) as u64;
                let mut total_deficit = 0u64;
                for (f, &d) in self.hyper.decided.iter().enumerate() {
                    let reach = d + (cap * self.hyper.undecided[f] as u64).min(rem);
                    if reach < p.w {
                        return false;
                    }
                    total_deficit += p.w.saturating_sub(d);
                }
                // each remaining unit feeds at most vr hyperplanes
                if total_deficit > rem * self.shared.vr {
                    return false;
                }
                for t in &self.extra {
                    for (f, &d) in t.decided.iter().enumerate() {
                        let reach = d + (cap * t.undecided[f] as u64).min(rem);
                        if reach < t.plan.bound {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    fn leaf(&mut self) {
        let p = self.shared.params;
        debug_assert_eq!(self.mass, p.n);
        let attained = match p.mode {
            Mode::Arc => self.hyper.decided.iter().max() == Some(&p.w),
            Mode::Minihyper => self.hyper.decided.iter().min() == Some(&p.w),
        };
        if attained {
            self.reps.push(self.assignment.clone());
        }
    }

    fn budget_spent(&self) -> bool {
        self.shared.exhausted.load(Ordering::Relaxed)
            || self.shared.nodes.load(Ordering::Relaxed) >= self.shared.budget
    }

    fn dfs(&mut self, k: usize) {
        let n_points = self.shared.geometry.num_points();
        if k == n_points {
            self.leaf();
            return;
        }
        let p = self.shared.params;
        let hi = (self.cap_eff(k) as u64).min(p.n - self.mass) as u32;
        let lo = self.shared.floor;
        if lo > hi {
            // the dimension-0 bound forces more mass than remains
            self.shared.prunes.fetch_add(1, Ordering::Relaxed);
            return;
        }
        for value in (lo..=hi).rev() {
            self.assignment[k] = value;
            self.mass += value as u64;
            self.hyper.assign(k, value);
            for t in &mut self.extra {
                t.assign(k, value);
            }

            let test_fuel = if k + 1 == n_points { u64::MAX } else { PREFIX_TEST_FUEL };
            if !self.feasible(k) {
                self.shared.prunes.fetch_add(1, Ordering::Relaxed);
            } else if self.shared.engine.beats_prefix(&self.assignment, k + 1, test_fuel) {
                self.shared.prunes.fetch_add(1, Ordering::Relaxed);
            } else if self.shared.exhausted.load(Ordering::Relaxed) {
                self.frontier.push(self.assignment[..=k].to_vec());
            } else if self.budget_spent() {
                self.shared.exhausted.store(true, Ordering::Relaxed);
                self.frontier.push(self.assignment[..=k].to_vec());
            } else {
                self.shared.nodes.fetch_add(1, Ordering::Relaxed);
                if k + 1 == self.task_depth && k + 1 < n_points {
                    self.tasks.push(self.assignment[..=k].to_vec());
                } else {
                    self.dfs(k + 1);
                }
            }

            self.hyper.unassign(k, value);
            for t in &mut self.extra {
                t.unassign(k, value);
            }
            self.mass -= value as u64;
            self.assignment[k] = 0;
        }
    }
}

/// Run the isomorph-free exhaustive search.
pub fn classify(params: &ClassifyParams, options: &ClassifyOptions) -> Result<ClassifyOutcome> {
    if params.cap == 0 {
        return Err(Error::InvalidArgument("multiplicity cap must be at least 1".into()));
    }
    if params.n == 0 {
        return Err(Error::InvalidArgument("cardinality must be positive".into()));
    }
    if let Some(f) = &options.resume {
        if f.params != *params {
            return Err(Error::InvalidArgument(
                "resume frontier belongs to different parameters".into(),
            ));
        }
    }
    let start = Instant::now();
    let geometry = Geometry::shared(params.r, params.q)?;
    let engine = CanonEngine::shared(&geometry);

    let hyper_plan = TrackPlan::for_dim(&geometry, params.r - 1, params.w)?;
    let mut extra_plans = Vec::new();
    let mut floor = 0u32;
    if params.mode == Mode::Minihyper && params.r >= 2 {
        let b0 = eq1_bound(params.n, params.w, params.r as u32, params.q, 0)?.max(0) as u64;
        floor = b0 as u32;
        for s in 1..params.r - 1 {
            let b = eq1_bound(params.n, params.w, params.r as u32, params.q, s as u32)?.max(0) as u64;
            if b > 0 {
                extra_plans.push(TrackPlan::for_dim(&geometry, s, b)?);
            }
        }
    }

    let nodes = AtomicU64::new(options.resume.as_ref().map_or(0, |f| f.nodes));
    let prunes = AtomicU64::new(options.resume.as_ref().map_or(0, |f| f.prunes));
    let exhausted = AtomicBool::new(false);
    let shared = Shared {
        geometry: &geometry,
        engine: &engine,
        params,
        hyper_plan: &hyper_plan,
        extra_plans: &extra_plans,
        floor,
        vr: v(params.r as u32, params.q)?,
        nodes: &nodes,
        prunes: &prunes,
        budget: options.node_budget,
        exhausted: &exhausted,
    };

    let mut rep_vectors: Vec<Vec<u32>> = Vec::new();
    let mut pending: Vec<Vec<u32>> = Vec::new();

    // phase one: from scratch down to the hand-off depth, or seeded from a
    // resume frontier
    let tasks: Vec<Vec<u32>> = match &options.resume {
        Some(f) => {
            rep_vectors.extend(f.representatives.iter().cloned());
            f.prefixes.clone()
        }
        None => {
            let depth = TASK_DEPTH.min(geometry.num_points());
            let mut ctx = SearchCtx::new(&shared, depth);
            ctx.dfs(0);
            rep_vectors.extend(ctx.reps);
            pending.extend(ctx.frontier);
            ctx.tasks
        }
    };

    // phase two: each task is an independent subtree
    let run_task = |prefix: &Vec<u32>| -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
        if shared.exhausted.load(Ordering::Relaxed) {
            return (Vec::new(), vec![prefix.clone()]);
        }
        let mut ctx = SearchCtx::new(&shared, geometry.num_points() + 1);
        ctx.replay(prefix);
        ctx.dfs(prefix.len());
        (ctx.reps, ctx.frontier)
    };

    let results: Vec<(Vec<Vec<u32>>, Vec<Vec<u32>>)> = if options.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        pool.install(|| {
            use rayon::prelude::*;
            tasks.par_iter().map(run_task).collect()
        })
    } else {
        tasks.iter().map(run_task).collect()
    };
    for (reps, frontier) in results {
        rep_vectors.extend(reps);
        pending.extend(frontier);
    }

    let complete = pending.is_empty();
    let stats = SearchStats {
        nodes: nodes.load(Ordering::Relaxed),
        prunes: prunes.load(Ordering::Relaxed),
        wall_ms: start.elapsed().as_millis(),
    };

    let mut representatives: Vec<CanonicalForm> = rep_vectors
        .iter()
        .map(|vals| {
            let automorphism_order = engine.count_maps(vals, vals);
            Ok(CanonicalForm {
                multiset: Multiset::from_multiplicities(Arc::clone(&geometry), vals.clone())?,
                automorphism_order,
                certificate: certificate_bytes(vals),
            })
        })
        .collect::<Result<_>>()?;
    representatives.sort_by(|a, b| a.certificate.cmp(&b.certificate));
    representatives.dedup_by(|a, b| a.certificate == b.certificate);

    let frontier = if complete {
        None
    } else {
        Some(Frontier {
            params: *params,
            prefixes: pending,
            representatives: rep_vectors,
            nodes: stats.nodes,
            prunes: stats.prunes,
        })
    };
    Ok(ClassifyOutcome {
        catalog: Catalog {
            params: *params,
            complete,
            representatives,
            stats,
        },
        frontier,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn run(r: usize, q: u32, n: u64, w: u64, mode: Mode, cap: u32) -> Catalog {
        let params = ClassifyParams { r, q, n, w, mode, cap };
        classify(&params, &ClassifyOptions::default()).unwrap().catalog
    }

    #[test]
    fn no_11_3_minihyper_in_the_plane() {
        let catalog = run(2, 3, 11, 3, Mode::Minihyper, 3);
        assert!(catalog.complete);
        assert!(catalog.representatives.is_empty());
    }

    #[test]
    fn planar_9_2_includes_the_oval_complement() {
        let catalog = run(2, 3, 9, 2, Mode::Minihyper, 1);
        assert!(catalog.complete);
        assert_eq!(catalog.representatives.len(), 1);
        let rep = &catalog.representatives[0].multiset;
        let complement = rep.complement(1).unwrap();
        let oval: Vec<u32> = complement.support().map(|(p, _)| p).collect();
        assert_eq!(oval.len(), 4);
        assert!(crate::families::is_cap(rep.geometry(), &oval));
    }

    #[test]
    fn representatives_reverify_and_are_inequivalent() {
        let catalog = run(2, 3, 9, 2, Mode::Minihyper, 2);
        assert!(catalog.complete);
        let mut certs = HashSet::new();
        for rep in &catalog.representatives {
            let params = rep.multiset.minihyper_params().unwrap();
            assert_eq!((params.n, params.w), (9, 2));
            assert!(rep.multiset.max_point_multiplicity() <= 2);
            assert!(certs.insert(rep.certificate.clone()));
        }
    }

    #[test]
    fn tiny_scale_counts_match_naive_orbit_counting() {
        let g = Geometry::shared(2, 3).unwrap();
        let engine = CanonEngine::shared(&g);
        for (n, cap, mode) in [(4u64, 2u32, Mode::Minihyper), (5, 1, Mode::Minihyper), (4, 2, Mode::Arc)] {
            // enumerate every multiset of cardinality n with bounded
            // multiplicities, bucket by (w, canonical form)
            let mut by_w: std::collections::HashMap<u64, HashSet<Vec<u32>>> = Default::default();
            let mut vals = vec![0u32; 13];
            enumerate(&mut vals, 0, n, cap, &mut |vals| {
                let m = Multiset::from_multiplicities(Arc::clone(&g), vals.to_vec()).unwrap();
                let (_, w) = m.parameters(mode).unwrap();
                by_w.entry(w).or_default().insert(engine.canonicalize(vals));
            });
            for (&w, orbits) in &by_w {
                let catalog = run(2, 3, n, w, mode, cap);
                assert!(catalog.complete);
                assert_eq!(
                    catalog.representatives.len(),
                    orbits.len(),
                    "(n, w, cap, mode) = ({n}, {w}, {cap}, {mode:?})"
                );
            }
        }
    }

    fn enumerate(vals: &mut Vec<u32>, idx: usize, left: u64, cap: u32, f: &mut impl FnMut(&[u32])) {
        if idx == vals.len() {
            if left == 0 {
                f(vals);
            }
            return;
        }
        for v in 0..=cap.min(left as u32) {
            vals[idx] = v;
            enumerate(vals, idx + 1, left - v as u64, cap, f);
        }
        vals[idx] = 0;
    }

    #[test]
    fn budget_exhaustion_resumes_to_the_same_catalog() {
        let params = ClassifyParams {
            r: 2,
            q: 3,
            n: 9,
            w: 2,
            mode: Mode::Minihyper,
            cap: 2,
        };
        let full = classify(&params, &ClassifyOptions::default()).unwrap();
        assert!(full.catalog.complete);

        let small = classify(
            &params,
            &ClassifyOptions {
                node_budget: 50,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(!small.catalog.complete);
        let mut frontier = small.frontier.unwrap();
        // possibly several resumptions until the budget suffices
        let mut final_catalog = None;
        for _ in 0..100 {
            let next = classify(
                &params,
                &ClassifyOptions {
                    node_budget: frontier.nodes + 200,
                    threads: 1,
                    resume: Some(frontier.clone()),
                },
            )
            .unwrap();
            if next.catalog.complete {
                final_catalog = Some(next.catalog);
                break;
            }
            frontier = next.frontier.unwrap();
        }
        let final_catalog = final_catalog.expect("resume chain should finish");
        let full_certs: Vec<_> = full.catalog.representatives.iter().map(|r| r.certificate.clone()).collect();
        let resumed_certs: Vec<_> = final_catalog.representatives.iter().map(|r| r.certificate.clone()).collect();
        assert_eq!(full_certs, resumed_certs);
    }

    #[test]
    fn thread_count_does_not_change_the_catalog() {
        let params = ClassifyParams {
            r: 2,
            q: 3,
            n: 9,
            w: 2,
            mode: Mode::Minihyper,
            cap: 2,
        };
        let serial = classify(&params, &ClassifyOptions::default()).unwrap().catalog;
        let parallel = classify(
            &params,
            &ClassifyOptions {
                threads: 4,
                ..Default::default()
            },
        )
        .unwrap()
        .catalog;
        assert_eq!(serial.complete, parallel.complete);
        let a: Vec<_> = serial.representatives.iter().map(|r| r.certificate.clone()).collect();
        let b: Vec<_> = parallel.representatives.iter().map(|r| r.certificate.clone()).collect();
        assert_eq!(a, b);
        assert_eq!(serial.stats.nodes, parallel.stats.nodes);
    }
}
