//! Exact bondage numbers.
//!
//! Edge subsets are scanned by increasing size, each size in lexicographic
//! order of the canonical edge list. A subset is a bondage set exactly when
//! no dominating set of size γ(G) survives its removal. Every γ-set met along
//! the way goes into a bounded cache; a subset that leaves some cached set
//! dominating is skipped without a search.

use std::collections::VecDeque;
use std::fmt;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::RwLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{self, Words};
use crate::domination::{
    domination_number, exists_dominating_set_with, minimum_dominating_set_with, Interrupted,
    SearchOptions,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph, GridSpec, VertexSet};

pub const DEFAULT_CACHE_CAPACITY: usize = 4096;

/// `b(G) <= d(u) + d(v) - 1 - |N(u) ∩ N(v)|`, minimized over adjacent `u, v`.
pub fn lemma1_bound(g: &Graph) -> Result<usize> {
    g.edges()
        .iter()
        .map(|e| g.degree(e.u()) + g.degree(e.v()) - 1 - g.common_neighbors(e.u(), e.v()))
        .min()
        .ok_or(Error::NoEdges)
}

/// `b(G) <= d(u) + d(v) - 1`, minimized over distinct `u, v` at distance at most two.
pub fn lemma2_bound(g: &Graph) -> Result<usize> {
    let mut best: Option<usize> = None;
    for u in 0..g.order() {
        let du = g.degree(u);
        if du == 0 {
            continue;
        }
        let mut ball: Words = g.open_row(u).into();
        for w in g.neighbors(u) {
            bits::or_into(&mut ball, g.open_row(w));
        }
        bits::clear(&mut ball, u);
        for v in bits::ones(&ball).filter(|&v| v > u) {
            let b = du + g.degree(v) - 1;
            best = Some(best.map_or(b, |x: usize| x.min(b)));
        }
    }
    best.ok_or(Error::NoQualifyingPair)
}

/// Smallest of the two general upper bounds.
pub fn default_k_max(g: &Graph) -> Result<usize> {
    let l1 = lemma1_bound(g)?;
    Ok(match lemma2_bound(g) {
        Ok(l2) => l1.min(l2),
        Err(_) => l1,
    })
}

/// `true` iff removing `es` strictly raises the domination number.
pub fn is_bondage_set(g: &Graph, es: &EdgeSet) -> Result<bool> {
    let h = g.remove_edges(es)?;
    Ok(domination_number(&h) > domination_number(g))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BondageValue {
    Exact(usize),
    /// Every edge subset of size at most this many was ruled out.
    Above(usize),
}

impl BondageValue {
    pub fn exact(&self) -> Option<usize> {
        match self {
            BondageValue::Exact(b) => Some(*b),
            BondageValue::Above(_) => None,
        }
    }
}

impl fmt::Display for BondageValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BondageValue::Exact(b) => write!(f, "{b}"),
            BondageValue::Above(k) => write!(f, ">{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BondageResult {
    pub value: BondageValue,
    pub gamma: usize,
    pub witness: Option<EdgeSet>,
    pub evaluated_subsets: u64,
    pub cache_hits: u64,
}

#[derive(Debug, Clone)]
pub struct BondageOptions {
    /// Largest subset size to try; defaults to the smaller lemma bound.
    pub k_max: Option<usize>,
    pub workers: usize,
    /// Forces a single worker.
    pub deterministic: bool,
    pub cache_capacity: usize,
    pub use_cache: bool,
    /// Declares the graph to be this grid product, enabling the single-edge
    /// orbit reduction.
    pub grid: Option<GridSpec>,
    pub time_budget: Option<Duration>,
}

impl Default for BondageOptions {
    fn default() -> Self {
        BondageOptions {
            k_max: None,
            workers: 1,
            deterministic: true,
            cache_capacity: DEFAULT_CACHE_CAPACITY,
            use_cache: true,
            grid: None,
            time_budget: None,
        }
    }
}

impl BondageOptions {
    fn effective_workers(&self) -> usize {
        if self.deterministic {
            1
        } else {
            self.workers.max(1)
        }
    }
}

struct CachedSet {
    members: Words,
    /// `|N[x] ∩ S|` for every vertex `x`.
    cover: Vec<u16>,
}

/// Bounded FIFO of known γ-sets of the base graph.
struct GammaCache {
    capacity: usize,
    entries: VecDeque<CachedSet>,
}

impl GammaCache {
    fn new(capacity: usize) -> Self {
        GammaCache {
            capacity,
            entries: VecDeque::new(),
        }
    }

    fn insert(&mut self, g: &Graph, set: &VertexSet) {
        if self.capacity == 0 {
            return;
        }
        let members = set.to_bits(g.order());
        if self.entries.iter().any(|c| c.members == members) {
            return;
        }
        let cover = (0..g.order())
            .map(|x| bits::and_count(g.closed_row(x), &members) as u16)
            .collect();
        if self.entries.len() == self.capacity {
            self.entries.pop_front();
        }
        self.entries.push_back(CachedSet { members, cover });
    }

    /// Whether some cached set still dominates `G - removed`.
    fn survives(&self, removed: &[Edge]) -> bool {
        let mut lost: smallvec::SmallVec<[(usize, u16); 16]> = smallvec::SmallVec::new();
        self.entries.iter().rev().any(|c| {
            lost.clear();
            for e in removed {
                for (x, y) in [(e.u(), e.v()), (e.v(), e.u())] {
                    if bits::test(&c.members, y) {
                        match lost.iter_mut().find(|(v, _)| *v == x) {
                            Some((_, n)) => *n += 1,
                            None => lost.push((x, 1)),
                        }
                    }
                }
            }
            lost.iter().all(|&(x, n)| c.cover[x] > n)
        })
    }
}

/// One representative edge per orbit of the grid symmetries, or every edge
/// when the declared grid does not match the graph.
fn single_edge_representatives(g: &Graph, grid: &GridSpec) -> Vec<usize> {
    let all: Vec<usize> = (0..g.edge_count()).collect();
    if grid.order() != g.order() || grid.graph() != *g {
        return all;
    }
    let syms = grid.symmetries();
    all.into_iter()
        .filter(|&i| {
            let e = g.edges()[i];
            syms.iter().all(|s| {
                let img =
                    Edge::new(s[e.u()], s[e.v()]).expect("automorphism keeps endpoints distinct");
                img >= e
            })
        })
        .collect()
}

struct Scan<'a> {
    g: &'a Graph,
    gamma: usize,
    cache: RwLock<GammaCache>,
    use_cache: bool,
    deadline: Option<Instant>,
    evaluated: AtomicU64,
    hits: AtomicU64,
}

impl Scan<'_> {
    fn is_witness(&self, subset: &[Edge]) -> std::result::Result<bool, Interrupted> {
        self.evaluated.fetch_add(1, Ordering::Relaxed);
        if self.use_cache && self.cache.read().unwrap().survives(subset) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(false);
        }
        let es: EdgeSet = subset.iter().copied().collect();
        let h = self
            .g
            .remove_edges(&es)
            .expect("subset drawn from the edge list");
        let opts = SearchOptions {
            workers: 1,
            deadline: self.deadline,
        };
        match exists_dominating_set_with(&h, self.gamma, &opts)? {
            Some(set) => {
                if self.use_cache {
                    self.cache.write().unwrap().insert(self.g, &set);
                }
                Ok(false)
            }
            None => Ok(true),
        }
    }

    fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    /// Scans the size-`k` subsets whose smallest edge index is `first`, in
    /// lexicographic order. `give_up` is polled so a worker can stop once a
    /// lower partition has already produced a witness.
    fn scan_partition(
        &self,
        first: usize,
        k: usize,
        give_up: &dyn Fn() -> bool,
    ) -> std::result::Result<Option<Vec<usize>>, Interrupted> {
        let edges = self.g.edges();
        let total = edges.len();
        let mut idx: Vec<usize> = std::iter::once(first).chain(first + 1..first + k).collect();
        if idx[k - 1] >= total {
            return Ok(None);
        }
        let mut subset: Vec<Edge> = idx.iter().map(|&i| edges[i]).collect();
        let mut polled = 0u32;
        loop {
            polled = polled.wrapping_add(1);
            if polled % 256 == 1 {
                if give_up() {
                    return Ok(None);
                }
                if self.expired() {
                    return Err(Interrupted);
                }
            }
            if self.is_witness(&subset)? {
                return Ok(Some(idx));
            }
            // Advance positions 1..k, keeping position 0 fixed at `first`.
            let mut p = k - 1;
            loop {
                if p == 0 {
                    return Ok(None);
                }
                if idx[p] < total - (k - p) {
                    break;
                }
                p -= 1;
            }
            idx[p] += 1;
            for q in p + 1..k {
                idx[q] = idx[q - 1] + 1;
            }
            for q in p..k {
                subset[q] = edges[idx[q]];
            }
        }
    }
}

/// Exact bondage number by staged subset search.
///
/// With `deterministic` set the witness is the lexicographically least
/// bondage set of minimum size. With several workers the subsets are split
/// by first edge and the lowest partition holding a witness wins, so the
/// value and witness still match the single-worker run.
pub fn bondage_number(g: &Graph, opts: &BondageOptions) -> Result<BondageResult> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let k_max = match opts.k_max {
        Some(0) => {
            return Err(Error::InvalidParameter("k_max must be at least 1".into()));
        }
        Some(k) => k,
        None => default_k_max(g)?,
    };
    let deadline = opts.time_budget.map(|d| Instant::now() + d);
    let workers = opts.effective_workers();

    let search = SearchOptions {
        workers: 1,
        deadline,
    };
    let base = match minimum_dominating_set_with(g, &search) {
        Ok(s) => s,
        Err(Interrupted) => {
            return Ok(BondageResult {
                value: BondageValue::Above(0),
                gamma: 0,
                witness: None,
                evaluated_subsets: 0,
                cache_hits: 0,
            })
        }
    };
    let scan = Scan {
        g,
        gamma: base.len(),
        cache: RwLock::new(GammaCache::new(opts.cache_capacity)),
        use_cache: opts.use_cache,
        deadline,
        evaluated: AtomicU64::new(0),
        hits: AtomicU64::new(0),
    };
    if opts.use_cache {
        scan.cache.write().unwrap().insert(g, &base);
    }
    let pool = (workers > 1).then(|| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool")
    });

    let total = g.edge_count();
    let mut value = BondageValue::Above(k_max.min(total));
    let mut witness = None;
    for k in 1..=k_max.min(total) {
        let firsts: Vec<usize> = match (&opts.grid, k) {
            (Some(grid), 1) => single_edge_representatives(g, grid),
            _ => (0..=total - k).collect(),
        };
        let found = match &pool {
            None => scan_sequential(&scan, &firsts, k),
            Some(pool) => pool.install(|| scan_parallel(&scan, &firsts, k)),
        };
        match found {
            Ok(Some(idx)) => {
                value = BondageValue::Exact(k);
                witness = Some(idx.iter().map(|&i| g.edges()[i]).collect());
                break;
            }
            Ok(None) => {}
            Err(Interrupted) => {
                value = BondageValue::Above(k - 1);
                break;
            }
        }
    }
    Ok(BondageResult {
        value,
        gamma: scan.gamma,
        witness,
        evaluated_subsets: scan.evaluated.load(Ordering::Relaxed),
        cache_hits: scan.hits.load(Ordering::Relaxed),
    })
}

fn scan_sequential(
    scan: &Scan<'_>,
    firsts: &[usize],
    k: usize,
) -> std::result::Result<Option<Vec<usize>>, Interrupted> {
    for &first in firsts {
        if let Some(idx) = scan.scan_partition(first, k, &|| false)? {
            return Ok(Some(idx));
        }
    }
    Ok(None)
}

fn scan_parallel(
    scan: &Scan<'_>,
    firsts: &[usize],
    k: usize,
) -> std::result::Result<Option<Vec<usize>>, Interrupted> {
    let best = AtomicUsize::new(usize::MAX);
    let results: Vec<_> = firsts
        .par_iter()
        .enumerate()
        .map(|(pos, &first)| {
            if best.load(Ordering::Acquire) < pos {
                return Ok(None);
            }
            let give_up = || best.load(Ordering::Acquire) < pos;
            let r = scan.scan_partition(first, k, &give_up)?;
            if r.is_some() {
                best.fetch_min(pos, Ordering::AcqRel);
            }
            Ok(r)
        })
        .collect();
    // Partitions are in ascending order; the first hit is the least witness.
    // An interruption only matters if no earlier partition succeeded.
    for r in results {
        match r {
            Ok(Some(idx)) => return Ok(Some(idx)),
            Ok(None) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}
