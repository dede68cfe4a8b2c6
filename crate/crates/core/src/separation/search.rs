//! Exhaustive scans over rotation systems.
//!
//! The rotation space of a graph is cut into chunks by pinning a prefix of
//! slot choices. The cut depends only on the graph, never on the number of
//! workers, and chunk results are folded in chunk order. A chunk that meets
//! its stopping condition also stops the fold, so a parallel run reports
//! exactly what a sequential run would, including the visited count.

use super::{check_two_sided, separating_genus, SeparatedGenus, TwoSidedCertificate};
use crate::embedding::{trace_faces_unchecked, trace_into, EnumerationOptions, RotationCursor};
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::RotationSystem;
use rayon::prelude::*;
use serde::Serialize;
use std::sync::atomic::{AtomicUsize, Ordering};

/// Default limit on rotations visited per graph.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

// Spaces smaller than this are scanned as one chunk.
const SPLIT_THRESHOLD: f64 = 20_000.0;
const TARGET_CHUNKS: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub budget: u64,
    /// Worker threads for chunk-level parallelism; 1 scans sequentially.
    pub jobs: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_BUDGET,
            jobs: 1,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(budget: u64) -> Self {
        SearchConfig {
            budget,
            ..Self::default()
        }
    }
}

/// A search result together with the number of rotations it visited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Searched<T> {
    pub value: T,
    pub visited: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenusProfile {
    pub gamma_minus: SeparatedGenus,
    pub gamma_plus: SeparatedGenus,
    pub gamma_min_cellular: u32,
    pub gamma_max_cellular: u32,
    /// `|E| - |V| - gamma_max_cellular`, at most `gamma_minus`.
    pub lower_bound: i64,
    /// `|E| - |V| - gamma_min_cellular`, at least `gamma_plus`.
    pub upper_bound: i64,
}

impl GenusProfile {
    /// Whether both inequalities between separated and cellular genera hold.
    pub fn bounds_hold(&self) -> bool {
        let lower = self
            .gamma_minus
            .finite()
            .map_or(true, |g| g as i64 >= self.lower_bound);
        let upper = self
            .gamma_plus
            .finite()
            .map_or(true, |g| g as i64 <= self.upper_bound);
        lower && upper && self.gamma_minus <= self.gamma_plus
    }
}

/// Union-find over walks where every union says "opposite sides".
pub(crate) struct ParityUnionFind {
    parent: Vec<u32>,
    parity: Vec<u8>,
}

impl ParityUnionFind {
    pub(crate) fn new(n: usize) -> Self {
        ParityUnionFind {
            parent: (0..n as u32).collect(),
            parity: vec![0; n],
        }
    }

    fn reset(&mut self, n: usize) {
        self.parent.clear();
        self.parent.extend(0..n as u32);
        self.parity.clear();
        self.parity.resize(n, 0);
    }

    /// Root of `x` and the parity of `x` relative to it.
    pub(crate) fn find(&mut self, x: u32) -> (u32, u8) {
        let mut root = x;
        let mut par = 0;
        while self.parent[root as usize] != root {
            par ^= self.parity[root as usize];
            root = self.parent[root as usize];
        }
        // compress, rewriting parities on the way
        let mut cur = x;
        let mut cur_par = par;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            let next_par = cur_par ^ self.parity[cur as usize];
            self.parent[cur as usize] = root;
            self.parity[cur as usize] = cur_par;
            cur = next;
            cur_par = next_par;
        }
        (root, par)
    }

    /// Records that `a` and `b` differ; `false` on contradiction.
    pub(crate) fn union_opposite(&mut self, a: u32, b: u32) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa != pb;
        }
        self.parent[ra as usize] = rb;
        self.parity[ra as usize] = pa ^ pb ^ 1;
        true
    }
}

// Per-chunk scratch for tracing and the two-sided test.
struct Scratch {
    face_of: Vec<u32>,
    uf: ParityUnionFind,
}

impl Scratch {
    fn new(darts: usize) -> Self {
        Scratch {
            face_of: vec![0; darts],
            uf: ParityUnionFind::new(0),
        }
    }

    #[inline]
    fn trace(&mut self, succ: &[u32]) -> u32 {
        trace_into(succ, &mut self.face_of)
    }

    /// Two-sidedness of the faces last traced.
    #[inline]
    fn two_sided(&mut self, faces: u32) -> bool {
        self.uf.reset(faces as usize);
        for pair in self.face_of.chunks_exact(2) {
            if pair[0] == pair[1] || !self.uf.union_opposite(pair[0], pair[1]) {
                return false;
            }
        }
        true
    }
}

/// What a scan accumulates. `leaf` returns `true` to stop the chunk; the fold
/// also stops after a chunk that stopped itself or once `done` holds.
trait Probe: Send + Sized {
    fn leaf(&mut self, cursor: &RotationCursor<'_>, scratch: &mut Scratch) -> bool;
    fn merge(&mut self, later: Self);
    fn done(&self) -> bool;
    /// Best genus so far, for budget reports.
    fn best(&self) -> Option<u32>;
}

struct ChunkRun<P> {
    probe: P,
    visited: u64,
    stopped: bool,
}

fn plan_chunks(g: &Multigraph, opts: EnumerationOptions) -> Result<Vec<Vec<u8>>> {
    let raw: f64 = (0..g.vertex_count())
        .map(|v| (1..g.degree(v).max(1)).map(|k| k as f64).product::<f64>())
        .product();
    let slots = RotationCursor::new(g, opts)?.slot_count();
    if raw < SPLIT_THRESHOLD || slots == 0 {
        return Ok(vec![Vec::new()]);
    }
    let mut depth = 1;
    loop {
        let prefixes = RotationCursor::prefixes(g, opts, depth)?;
        if prefixes.len() >= TARGET_CHUNKS || depth >= slots {
            return Ok(prefixes);
        }
        depth += 1;
    }
}

fn drive<P: Probe>(
    g: &Multigraph,
    opts: EnumerationOptions,
    cfg: &SearchConfig,
    make: impl Fn() -> P + Sync,
) -> Result<Searched<P>> {
    let prefixes = plan_chunks(g, opts)?;
    let stop_at = AtomicUsize::new(usize::MAX);
    let budget = cfg.budget;

    let run_chunk = |idx: usize, prefix: &Vec<u8>| -> Result<ChunkRun<P>> {
        let mut cursor = RotationCursor::new(g, opts)?;
        cursor.pin_prefix(prefix)?;
        let mut scratch = Scratch::new(g.dart_count());
        let mut probe = make();
        let mut visited = 0u64;
        let mut stopped = false;
        if stop_at.load(Ordering::Relaxed) < idx {
            return Ok(ChunkRun {
                probe,
                visited,
                stopped,
            });
        }
        while cursor.advance() {
            visited += 1;
            if visited > budget {
                break;
            }
            if visited % 4096 == 0 && stop_at.load(Ordering::Relaxed) < idx {
                break;
            }
            if probe.leaf(&cursor, &mut scratch) {
                stopped = true;
                stop_at.fetch_min(idx, Ordering::Relaxed);
                break;
            }
        }
        Ok(ChunkRun {
            probe,
            visited,
            stopped,
        })
    };

    let mut acc = make();
    let mut total = 0u64;
    let mut fold = |run: ChunkRun<P>, acc: &mut P| -> Result<bool> {
        total += run.visited;
        if total > budget {
            return Err(Error::Budget {
                budget,
                visited: total,
                best: acc.best(),
            });
        }
        acc.merge(run.probe);
        Ok(run.stopped || acc.done())
    };

    if cfg.jobs > 1 && prefixes.len() > 1 {
        let runs: Vec<Result<ChunkRun<P>>> = prefixes
            .par_iter()
            .enumerate()
            .map(|(i, p)| run_chunk(i, p))
            .collect();
        for run in runs {
            if fold(run?, &mut acc)? {
                break;
            }
        }
    } else {
        for (i, p) in prefixes.iter().enumerate() {
            if fold(run_chunk(i, p)?, &mut acc)? {
                break;
            }
        }
    }
    Ok(Searched {
        value: acc,
        visited: total,
    })
}

/// Runs `f` inside a pool of `cfg.jobs` threads when more than one is asked for.
fn with_pool<T: Send>(cfg: &SearchConfig, f: impl FnOnce() -> T + Send) -> T {
    if cfg.jobs > 1 && rayon::current_thread_index().is_none() {
        match rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    } else {
        f()
    }
}

fn face_bounds(g: &Multigraph) -> (u32, u32) {
    // two-sided needs two walks per component, and V - E + F is even
    let c = g.connected_components().len() as i64;
    let (v, e) = (g.vertex_count() as i64, g.edge_count() as i64);
    let lower = 2 * c + (e - v).rem_euclid(2);
    let upper = e - v + 2 * c;
    (lower as u32, upper.max(0) as u32)
}

fn genus_of_faces(g: &Multigraph, faces: u32) -> u32 {
    let twice = g.edge_count() as i64 - g.vertex_count() as i64 + faces as i64;
    (twice / 2 - 1).max(0) as u32
}

struct MinTwoSided {
    best: Option<u32>,
    floor: u32,
}

impl Probe for MinTwoSided {
    fn leaf(&mut self, cursor: &RotationCursor<'_>, s: &mut Scratch) -> bool {
        let f = s.trace(cursor.successors());
        if self.best.map_or(true, |b| f < b) && s.two_sided(f) {
            self.best = Some(f);
        }
        self.best == Some(self.floor)
    }
    fn merge(&mut self, later: Self) {
        self.best = match (self.best, later.best) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
    fn done(&self) -> bool {
        self.best == Some(self.floor)
    }
    fn best(&self) -> Option<u32> {
        self.best
    }
}

struct MaxTwoSided {
    best: Option<u32>,
    ceiling: u32,
}

impl Probe for MaxTwoSided {
    fn leaf(&mut self, cursor: &RotationCursor<'_>, s: &mut Scratch) -> bool {
        let f = s.trace(cursor.successors());
        if self.best.map_or(true, |b| f > b) && s.two_sided(f) {
            self.best = Some(f);
        }
        self.best == Some(self.ceiling)
    }
    fn merge(&mut self, later: Self) {
        self.best = self.best.max(later.best);
    }
    fn done(&self) -> bool {
        self.best == Some(self.ceiling)
    }
    fn best(&self) -> Option<u32> {
        self.best
    }
}

struct CellularRange {
    min: u32,
    max: u32,
    floor: u32,
    ceiling: u32,
}

impl Probe for CellularRange {
    fn leaf(&mut self, cursor: &RotationCursor<'_>, s: &mut Scratch) -> bool {
        let f = s.trace(cursor.successors());
        self.min = self.min.min(f);
        self.max = self.max.max(f);
        self.done()
    }
    fn merge(&mut self, later: Self) {
        self.min = self.min.min(later.min);
        self.max = self.max.max(later.max);
    }
    fn done(&self) -> bool {
        self.min == self.floor && self.max == self.ceiling
    }
    fn best(&self) -> Option<u32> {
        None
    }
}

struct FirstWithFaces {
    faces: u32,
    hit: Option<RotationSystem>,
}

impl Probe for FirstWithFaces {
    fn leaf(&mut self, cursor: &RotationCursor<'_>, s: &mut Scratch) -> bool {
        let f = s.trace(cursor.successors());
        if f == self.faces && s.two_sided(f) {
            self.hit = Some(cursor.rotation_system());
            return true;
        }
        false
    }
    fn merge(&mut self, later: Self) {
        if self.hit.is_none() {
            self.hit = later.hit;
        }
    }
    fn done(&self) -> bool {
        self.hit.is_some()
    }
    fn best(&self) -> Option<u32> {
        None
    }
}

fn has_separating_degrees(g: &Multigraph) -> bool {
    g.vertex_count() > 0 && g.has_positive_even_degrees()
}

/// Least separated genus with the default budget, sequentially.
pub fn least_separated_genus(g: &Multigraph, budget: u64) -> Result<SeparatedGenus> {
    least_separated_genus_with(g, &SearchConfig::with_budget(budget)).map(|s| s.value)
}

/// Least genus of a surface in which `g` is a minimal separating set.
///
/// Components are scanned separately and combined as
/// `sum + (components - 1)`.
pub fn least_separated_genus_with(
    g: &Multigraph,
    cfg: &SearchConfig,
) -> Result<Searched<SeparatedGenus>> {
    if !has_separating_degrees(g) {
        return Ok(Searched {
            value: SeparatedGenus::Infinite,
            visited: 0,
        });
    }
    let parts = g.components();
    if parts.len() == 1 {
        return with_pool(cfg, || connected_extreme(g, cfg, true));
    }
    let mut sum = 0;
    let mut visited = 0;
    for part in &parts {
        let r = least_separated_genus_with(part, cfg)?;
        visited += r.visited;
        match r.value {
            SeparatedGenus::Finite(k) => sum += k,
            SeparatedGenus::Infinite => {
                return Ok(Searched {
                    value: SeparatedGenus::Infinite,
                    visited,
                })
            }
        }
    }
    Ok(Searched {
        value: SeparatedGenus::Finite(sum + parts.len() as u32 - 1),
        visited,
    })
}

/// Least separated genus by scanning the rotations of the whole graph, with
/// no splitting into components.
pub fn least_separated_genus_direct(
    g: &Multigraph,
    cfg: &SearchConfig,
) -> Result<Searched<SeparatedGenus>> {
    if !has_separating_degrees(g) {
        return Ok(Searched {
            value: SeparatedGenus::Infinite,
            visited: 0,
        });
    }
    with_pool(cfg, || connected_extreme(g, cfg, true))
}

pub fn largest_irreducible_genus(g: &Multigraph, budget: u64) -> Result<SeparatedGenus> {
    largest_irreducible_genus_with(g, &SearchConfig::with_budget(budget)).map(|s| s.value)
}

/// Largest genus over two-sided rotations, i.e. over irreducible minimal
/// separating embeddings.
pub fn largest_irreducible_genus_with(
    g: &Multigraph,
    cfg: &SearchConfig,
) -> Result<Searched<SeparatedGenus>> {
    if !has_separating_degrees(g) {
        return Ok(Searched {
            value: SeparatedGenus::Infinite,
            visited: 0,
        });
    }
    with_pool(cfg, || connected_extreme(g, cfg, false))
}

// Extreme of the separating genus over two-sided rotations of `g` as a whole.
fn connected_extreme(
    g: &Multigraph,
    cfg: &SearchConfig,
    minimum: bool,
) -> Result<Searched<SeparatedGenus>> {
    let (floor, ceiling) = face_bounds(g);
    let (best, visited) = if minimum {
        let r = drive(g, EnumerationOptions::PRUNED, cfg, || MinTwoSided {
            best: None,
            floor,
        })?;
        (r.value.best, r.visited)
    } else {
        let r = drive(g, EnumerationOptions::PRUNED, cfg, || MaxTwoSided {
            best: None,
            ceiling,
        })?;
        (r.value.best, r.visited)
    };
    match best {
        Some(f) => Ok(Searched {
            value: SeparatedGenus::Finite(genus_of_faces(g, f)),
            visited,
        }),
        None => Err(Error::Consistency(format!(
            "no two-sided rotation found for an even-degree graph {g:?}"
        ))),
    }
}

pub fn cellular_genus_range(g: &Multigraph, budget: u64) -> Result<(u32, u32)> {
    cellular_genus_range_with(g, &SearchConfig::with_budget(budget)).map(|s| s.value)
}

/// Minimum and maximum cellular genus over every rotation system.
pub fn cellular_genus_range_with(
    g: &Multigraph,
    cfg: &SearchConfig,
) -> Result<Searched<(u32, u32)>> {
    if !g.is_connected() || g.vertex_count() == 0 {
        return Err(Error::Precondition(
            "cellular genus range needs a connected graph".into(),
        ));
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) == 0) {
        return Err(Error::Precondition(format!("vertex {v} is isolated")));
    }
    let (v, e) = (g.vertex_count() as i64, g.edge_count() as i64);
    let floor = 1 + (e - v + 1).rem_euclid(2) as u32;
    let ceiling = (2 - v + e) as u32;
    let r = with_pool(cfg, || {
        drive(g, EnumerationOptions::ALL, cfg, || CellularRange {
            min: u32::MAX,
            max: 0,
            floor,
            ceiling,
        })
    })?;
    let genus = |f: u32| ((2 - v + e - f as i64) / 2) as u32;
    Ok(Searched {
        value: (genus(r.value.max), genus(r.value.min)),
        visited: r.visited,
    })
}

pub fn genus_bounds(g: &Multigraph) -> Result<GenusProfile> {
    genus_bounds_with(g, &SearchConfig::default())
}

/// Separated and cellular genera side by side. The bounds are checked and a
/// violation is reported as a consistency error.
pub fn genus_bounds_with(g: &Multigraph, cfg: &SearchConfig) -> Result<GenusProfile> {
    if !has_separating_degrees(g) {
        return Err(Error::Precondition(
            "genus bounds need positive even degrees".into(),
        ));
    }
    let (gamma_min_cellular, gamma_max_cellular) = cellular_genus_range_with(g, cfg)?.value;
    let gamma_minus = least_separated_genus_with(g, cfg)?.value;
    let gamma_plus = largest_irreducible_genus_with(g, cfg)?.value;
    let base = g.edge_count() as i64 - g.vertex_count() as i64;
    let profile = GenusProfile {
        gamma_minus,
        gamma_plus,
        gamma_min_cellular,
        gamma_max_cellular,
        lower_bound: base - gamma_max_cellular as i64,
        upper_bound: base - gamma_min_cellular as i64,
    };
    if !profile.bounds_hold() {
        return Err(Error::Consistency(format!("genus bounds violated: {profile:?}")));
    }
    Ok(profile)
}

pub fn witness(
    g: &Multigraph,
    target_genus: u32,
) -> Result<Option<(RotationSystem, TwoSidedCertificate)>> {
    witness_with(g, target_genus, &SearchConfig::default()).map(|s| s.value)
}

/// First two-sided rotation, in enumeration order, whose separating genus is
/// exactly `target_genus`.
pub fn witness_with(
    g: &Multigraph,
    target_genus: u32,
    cfg: &SearchConfig,
) -> Result<Searched<Option<(RotationSystem, TwoSidedCertificate)>>> {
    let faces = 2 * (target_genus as i64 + 1) - g.edge_count() as i64 + g.vertex_count() as i64;
    if !has_separating_degrees(g) || faces < 2 {
        return Ok(Searched {
            value: None,
            visited: 0,
        });
    }
    let r = with_pool(cfg, || {
        drive(g, EnumerationOptions::PRUNED, cfg, || FirstWithFaces {
            faces: faces as u32,
            hit: None,
        })
    })?;
    let value = match r.value.hit {
        Some(rs) => {
            let traced = trace_faces_unchecked(g, &rs);
            let cert = check_two_sided(&traced, g).ok_or_else(|| {
                Error::Consistency("witness failed the certificate check".into())
            })?;
            if separating_genus(g, &cert)? != target_genus {
                return Err(Error::Consistency("witness has the wrong genus".into()));
            }
            Some((rs, cert))
        }
        None => None,
    };
    Ok(Searched {
        value,
        visited: r.visited,
    })
}
