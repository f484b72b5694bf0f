//! Exact minimum dominating sets.
//!
//! The search branches on the undominated vertex with the fewest remaining
//! candidate dominators and tries those candidates in ascending index order.
//! A candidate tried earlier at a node is excluded from its later siblings'
//! subtrees, so every dominating set is reached along exactly one path. That
//! makes the same routine usable both as a decision procedure and as an
//! enumerator of γ-sets.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::bits::{self, Words};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_CAP: usize = 100_000;

/// Returned when a search runs past its deadline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interrupted;

/// Knobs shared by the exact searches.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    /// Worker threads used to split the root branching; `0` and `1` both mean sequential.
    pub workers: usize,
    pub deadline: Option<Instant>,
}

/// γ-sets of a graph, in lexicographic order of their sorted members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSetFamily {
    pub gamma: usize,
    pub sets: Vec<VertexSet>,
    /// More γ-sets exist than the cap allowed to be listed.
    pub truncated: bool,
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> Result<bool> {
    s.check_range(g.order())?;
    let mut covered = bits::zeros(g.words());
    for &v in s.members() {
        bits::or_into(&mut covered, g.closed_row(v));
    }
    Ok(bits::count(&covered) == g.order())
}

const CHECK_EVERY: u64 = 1 << 12;

struct Search<'g> {
    g: &'g Graph,
    deadline: Option<Instant>,
    nodes: u64,
    interrupted: bool,
    /// Scratch for the coverage bound, reused across nodes.
    gains: Vec<usize>,
}

enum Visit<'a> {
    First,
    All {
        out: &'a mut Vec<Words>,
        limit: usize,
    },
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, deadline: Option<Instant>) -> Self {
        Search {
            g,
            deadline,
            nodes: 0,
            interrupted: false,
            gains: Vec::new(),
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes % CHECK_EVERY == 1 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.interrupted = true;
                }
            }
        }
        self.interrupted
    }

    /// Picks the branching vertex, or `None` when the node is provably dead.
    /// Returns the candidate dominators of the chosen vertex.
    fn branch_point(
        &mut self,
        undominated: &[u64],
        allowed: &[u64],
        budget: usize,
    ) -> Option<Words> {
        let g = self.g;
        let mut best: Option<(usize, Words)> = None;
        for x in bits::ones(undominated) {
            let mut cands: Words = g.closed_row(x).into();
            for (c, a) in cands.iter_mut().zip(allowed) {
                *c &= a;
            }
            let n = bits::count(&cands);
            if n == 0 {
                return None;
            }
            if best.as_ref().is_none_or(|(b, _)| n < *b) {
                let done = n == 1;
                best = Some((n, cands));
                if done {
                    break;
                }
            }
        }
        // Coverage bound: the `budget` best remaining candidates together
        // must be able to reach every undominated vertex.
        let need = bits::count(undominated);
        self.gains.clear();
        for c in bits::ones(allowed) {
            let gain = bits::and_count(g.closed_row(c), undominated);
            if gain > 0 {
                self.gains.push(gain);
            }
        }
        if self.gains.len() > budget {
            self.gains
                .select_nth_unstable_by(budget - 1, |a, b| b.cmp(a));
        }
        let reach: usize = self.gains.iter().take(budget).sum();
        if reach < need {
            return None;
        }
        best.map(|(_, c)| c)
    }

    /// Depth-first search for dominating sets with at most `budget` further
    /// picks. `chosen` holds the current partial solution.
    fn run(
        &mut self,
        undominated: &[u64],
        allowed: &mut Words,
        budget: usize,
        chosen: &mut Vec<usize>,
        visit: &mut Visit<'_>,
    ) -> bool {
        if bits::is_empty(undominated) {
            return match visit {
                Visit::First => true,
                Visit::All { out, limit } => {
                    let mut set = bits::zeros(self.g.words());
                    for &c in chosen.iter() {
                        bits::set(&mut set, c);
                    }
                    out.push(set);
                    out.len() >= *limit
                }
            };
        }
        if budget == 0 || self.tick() {
            return false;
        }
        let Some(cands) = self.branch_point(undominated, allowed, budget) else {
            return false;
        };
        let saved = allowed.clone();
        let mut stop = false;
        for c in bits::ones(&cands) {
            bits::clear(allowed, c);
            let mut next: Words = undominated.into();
            bits::andnot_into(&mut next, self.g.closed_row(c));
            chosen.push(c);
            let mut sub_allowed = allowed.clone();
            stop = self.run(&next, &mut sub_allowed, budget - 1, chosen, visit);
            if stop {
                break;
            }
            chosen.pop();
            if self.interrupted {
                break;
            }
        }
        *allowed = saved;
        stop
    }
}

/// Looks for a set of at most `budget` vertices from `region` dominating
/// `region`, where `region` is a union of components.
fn find_in_region(
    g: &Graph,
    region: &[u64],
    budget: usize,
    opts: &SearchOptions,
) -> std::result::Result<Option<Vec<usize>>, Interrupted> {
    if bits::is_empty(region) {
        return Ok(Some(Vec::new()));
    }
    if budget == 0 {
        return Ok(None);
    }
    if opts.workers > 1 {
        return find_split(g, region, budget, opts);
    }
    let mut search = Search::new(g, opts.deadline);
    let mut allowed: Words = region.into();
    let mut chosen = Vec::new();
    let found = search.run(region, &mut allowed, budget, &mut chosen, &mut Visit::First);
    if search.interrupted {
        return Err(Interrupted);
    }
    Ok(found.then_some(chosen))
}

/// Root-split variant: the root's candidate branches run on separate workers
/// and the lowest-index successful branch wins, which is exactly the branch
/// the sequential search would have returned.
fn find_split(
    g: &Graph,
    region: &[u64],
    budget: usize,
    opts: &SearchOptions,
) -> std::result::Result<Option<Vec<usize>>, Interrupted> {
    let mut root = Search::new(g, opts.deadline);
    let allowed: Words = region.into();
    let Some(cands) = root.branch_point(region, &allowed, budget) else {
        return Ok(None);
    };
    let cands: Vec<usize> = bits::ones(&cands).collect();
    let winner = AtomicUsize::new(usize::MAX);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .expect("thread pool");
    let results: Vec<_> = pool.install(|| {
        cands
            .par_iter()
            .enumerate()
            .map(|(i, &c)| {
                if winner.load(Ordering::Acquire) < i {
                    return Ok(None);
                }
                let mut sub_allowed = allowed.clone();
                for &earlier in &cands[..=i] {
                    bits::clear(&mut sub_allowed, earlier);
                }
                let mut next: Words = region.into();
                bits::andnot_into(&mut next, g.closed_row(c));
                let mut search = Search::new(g, opts.deadline);
                let mut chosen = vec![c];
                let found = search.run(
                    &next,
                    &mut sub_allowed,
                    budget - 1,
                    &mut chosen,
                    &mut Visit::First,
                );
                if search.interrupted {
                    return Err(Interrupted);
                }
                if found {
                    winner.fetch_min(i, Ordering::AcqRel);
                    Ok(Some(chosen))
                } else {
                    Ok(None)
                }
            })
            .collect()
    });
    for r in results {
        if let Some(chosen) = r? {
            return Ok(Some(chosen));
        }
    }
    Ok(None)
}

fn region_lower_bound(g: &Graph, region: &[u64]) -> usize {
    let size = bits::count(region);
    let delta = bits::ones(region).map(|v| g.degree(v)).max().unwrap_or(0);
    size.div_ceil(delta + 1)
}

/// Minimum dominating set of one component, searching upward from the
/// counting bound; gives up once `limit` would be exceeded.
fn min_in_region(
    g: &Graph,
    region: &[u64],
    limit: usize,
    opts: &SearchOptions,
) -> std::result::Result<Option<Vec<usize>>, Interrupted> {
    for k in region_lower_bound(g, region)..=limit {
        if let Some(set) = find_in_region(g, region, k, opts)? {
            return Ok(Some(set));
        }
    }
    Ok(None)
}

/// Decision form: some dominating set of size at most `k`, or `None`.
/// Deterministic for fixed inputs regardless of `opts.workers`.
pub fn exists_dominating_set_with(
    g: &Graph,
    k: usize,
    opts: &SearchOptions,
) -> std::result::Result<Option<VertexSet>, Interrupted> {
    let comps = g.component_masks();
    if comps.len() == 1 {
        return Ok(find_in_region(g, &comps[0], k, opts)?.map(VertexSet::from_iter));
    }
    let bounds: Vec<usize> = comps.iter().map(|c| region_lower_bound(g, c)).collect();
    let mut rest: usize = bounds.iter().sum();
    if rest > k {
        return Ok(None);
    }
    let mut picked = Vec::new();
    for (comp, lb) in comps.iter().zip(&bounds) {
        rest -= lb;
        let limit = k - picked.len() - rest;
        match min_in_region(g, comp, limit, opts)? {
            Some(set) => picked.extend(set),
            None => return Ok(None),
        }
    }
    Ok(Some(picked.into_iter().collect()))
}

pub fn exists_dominating_set(g: &Graph, k: usize) -> Option<VertexSet> {
    exists_dominating_set_with(g, k, &SearchOptions::default()).expect("no deadline set")
}

/// A minimum dominating set, assembled component by component.
pub fn minimum_dominating_set_with(
    g: &Graph,
    opts: &SearchOptions,
) -> std::result::Result<VertexSet, Interrupted> {
    let mut picked = Vec::new();
    for comp in g.component_masks() {
        let set = min_in_region(g, &comp, bits::count(&comp), opts)?
            .expect("a component always dominates itself");
        picked.extend(set);
    }
    Ok(picked.into_iter().collect())
}

pub fn minimum_dominating_set(g: &Graph) -> VertexSet {
    minimum_dominating_set_with(g, &SearchOptions::default()).expect("no deadline set")
}

pub fn domination_number(g: &Graph) -> usize {
    minimum_dominating_set(g).len()
}

/// Every dominating set of `region` with exactly `size` members, stopping
/// after `limit` have been collected. `size` must be the region's γ.
fn enumerate_region(g: &Graph, region: &[u64], size: usize, limit: usize) -> Vec<Words> {
    let mut out = Vec::new();
    let mut search = Search::new(g, None);
    let mut allowed: Words = region.into();
    let mut chosen = Vec::new();
    search.run(
        region,
        &mut allowed,
        size,
        &mut chosen,
        &mut Visit::All {
            out: &mut out,
            limit,
        },
    );
    out
}

/// All γ-sets of `g`, at most `cap` of them. On a disconnected graph the
/// family is the product of the per-component families and the cap applies
/// to that product.
pub fn enumerate_gamma_sets(g: &Graph, cap: usize) -> Result<GammaSetFamily> {
    if cap == 0 {
        return Err(Error::InvalidParameter(
            "enumeration cap must be positive".into(),
        ));
    }
    let mut gamma = 0;
    let mut families: Vec<Vec<Words>> = Vec::new();
    let mut truncated = false;
    for comp in g.component_masks() {
        let gc = min_in_region(g, &comp, bits::count(&comp), &SearchOptions::default())
            .expect("no deadline set")
            .expect("a component always dominates itself")
            .len();
        gamma += gc;
        let fam = enumerate_region(g, &comp, gc, cap + 1);
        if fam.len() > cap {
            truncated = true;
        }
        families.push(fam);
    }
    let mut combined: Vec<Words> = vec![bits::zeros(g.words())];
    for fam in &families {
        let mut next = Vec::new();
        'outer: for base in &combined {
            for part in fam {
                if next.len() > cap {
                    break 'outer;
                }
                let mut s = base.clone();
                bits::or_into(&mut s, part);
                next.push(s);
            }
        }
        combined = next;
    }
    if combined.len() > cap {
        truncated = true;
        combined.truncate(cap);
    }
    let mut sets: Vec<VertexSet> = combined.iter().map(|b| VertexSet::from_bits(b)).collect();
    sets.sort();
    Ok(GammaSetFamily {
        gamma,
        sets,
        truncated,
    })
}

fn closed_neighborhoods_disjoint(g: &Graph, s: &VertexSet) -> bool {
    let mut seen = bits::zeros(g.words());
    for &v in s.members() {
        if bits::intersects(&seen, g.closed_row(v)) {
            return false;
        }
        bits::or_into(&mut seen, g.closed_row(v));
    }
    true
}

/// Whether the γ-set `s` has pairwise disjoint closed neighborhoods.
pub fn satisfies_property_p(g: &Graph, s: &VertexSet) -> Result<bool> {
    if !is_dominating(g, s)? {
        return Err(Error::PreconditionViolation(format!(
            "{s} does not dominate the graph"
        )));
    }
    let gamma = domination_number(g);
    if s.len() != gamma {
        return Err(Error::PreconditionViolation(format!(
            "{s} has {} members but the domination number is {gamma}",
            s.len()
        )));
    }
    Ok(closed_neighborhoods_disjoint(g, s))
}

/// The γ-sets whose closed neighborhoods are pairwise disjoint.
pub fn property_p_gamma_sets(g: &Graph, cap: usize) -> Result<GammaSetFamily> {
    let mut fam = enumerate_gamma_sets(g, cap)?;
    fam.sets.retain(|s| closed_neighborhoods_disjoint(g, s));
    Ok(fam)
}

fn complete_family(g: &Graph, cap: usize) -> Result<GammaSetFamily> {
    let fam = enumerate_gamma_sets(g, cap)?;
    if fam.truncated {
        return Err(Error::EnumerationIncomplete { cap });
    }
    Ok(fam)
}

/// Union of all γ-sets.
pub fn vertices_in_some_gamma_set(g: &Graph, cap: usize) -> Result<VertexSet> {
    let fam = complete_family(g, cap)?;
    Ok(fam
        .sets
        .iter()
        .flat_map(|s| s.members().iter().copied())
        .collect())
}

/// Largest number of pairwise disjoint γ-sets.
pub fn max_disjoint_gamma_sets(g: &Graph, cap: usize) -> Result<usize> {
    let fam = complete_family(g, cap)?;
    let sets: Vec<Words> = fam.sets.iter().map(|s| s.to_bits(g.order())).collect();
    Ok(max_packing(&sets, fam.gamma, g.order()))
}

/// Exact maximum set packing over equal-size sets by branch and bound.
pub(crate) fn max_packing(sets: &[Words], set_size: usize, universe: usize) -> usize {
    struct Packer<'a> {
        sets: &'a [Words],
        size: usize,
        best: usize,
    }
    impl Packer<'_> {
        fn go(&mut self, cands: &[usize], used: usize, count: usize, universe: usize) {
            self.best = self.best.max(count);
            let free = universe - used;
            let room = free.checked_div(self.size).unwrap_or(cands.len());
            if count + room.min(cands.len()) <= self.best {
                return;
            }
            for (pos, &i) in cands.iter().enumerate() {
                if count + (cands.len() - pos).min(room) <= self.best {
                    return;
                }
                let rest: Vec<usize> = cands[pos + 1..]
                    .iter()
                    .copied()
                    .filter(|&j| !bits::intersects(&self.sets[i], &self.sets[j]))
                    .collect();
                self.go(&rest, used + self.size, count + 1, universe);
            }
        }
    }
    let all: Vec<usize> = (0..sets.len()).collect();
    let mut p = Packer {
        sets,
        size: set_size,
        best: 0,
    };
    p.go(&all, 0, 0, universe);
    p.best
}

/// The product of the canonical path γ-sets, as flat indices of the
/// row-major `P_n ⊠ P_m` grid.
pub fn canonical_gamma_set_strong(n: usize, m: usize) -> Result<VertexSet> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidParameter(format!(
            "path orders must be at least 2, got n={n}, m={m}"
        )));
    }
    let rows = crate::oracle::canonical_path_gamma_sets(n)?.swap_remove(0);
    let cols = crate::oracle::canonical_path_gamma_sets(m)?.swap_remove(0);
    Ok(rows
        .members()
        .iter()
        .flat_map(|&i| cols.members().iter().map(move |&j| i * m + j))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{direct_product, path_graph, strong_product, Edge, EdgeSet};

    fn p(n: usize) -> Graph {
        path_graph(n).unwrap()
    }

    fn vs(one_based: &[usize]) -> VertexSet {
        one_based.iter().map(|v| v - 1).collect()
    }

    /// Subset-enumeration oracle, independent of the branching search.
    fn brute_gamma(g: &Graph) -> usize {
        let n = g.order();
        assert!(n <= 20);
        let rows: Vec<u32> = (0..n)
            .map(|v| g.neighbors(v).fold(1u32 << v, |acc, u| acc | 1 << u))
            .collect();
        let full = (1u32 << n) - 1;
        (0u32..1 << n)
            .filter(|s| {
                let mut cov = 0;
                for (v, r) in rows.iter().enumerate() {
                    if s >> v & 1 == 1 {
                        cov |= r;
                    }
                }
                cov == full
            })
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn is_dominating_examples() {
        let g = p(5);
        assert!(is_dominating(&g, &(0..5).collect()).unwrap());
        assert!(is_dominating(&g, &vs(&[2, 5])).unwrap());
        assert!(is_dominating(&g, &[1, 3].into_iter().collect()).unwrap());
        assert!(!is_dominating(&g, &[0, 4].into_iter().collect()).unwrap());
        assert!(matches!(
            is_dominating(&g, &[7].into_iter().collect()),
            Err(Error::VertexOutOfRange { vertex: 7, .. })
        ));
    }

    #[test]
    fn decision_examples() {
        assert_eq!(
            exists_dominating_set(&p(3), 1),
            Some([1].into_iter().collect())
        );
        assert_eq!(exists_dominating_set(&p(4), 1), None);
        let g = strong_product(&p(4), &p(5)).unwrap();
        assert_eq!(exists_dominating_set(&g, 3), None);
        let s = exists_dominating_set(&g, 4).unwrap();
        assert!(is_dominating(&g, &s).unwrap());
        assert_eq!(exists_dominating_set(&p(1), 0), None);
    }

    #[test]
    fn parallel_split_matches_sequential() {
        for (n, m) in [(4, 5), (6, 6), (5, 7)] {
            let g = strong_product(&p(n), &p(m)).unwrap();
            let gamma = domination_number(&g);
            for k in [gamma - 1, gamma, gamma + 1] {
                let seq = exists_dominating_set(&g, k);
                let par = exists_dominating_set_with(
                    &g,
                    k,
                    &SearchOptions {
                        workers: 4,
                        deadline: None,
                    },
                )
                .unwrap();
                assert_eq!(seq, par, "{n}x{m} k={k}");
            }
        }
    }

    #[test]
    fn expired_deadline_interrupts() {
        let g = strong_product(&p(12), &p(12)).unwrap();
        let opts = SearchOptions {
            workers: 1,
            deadline: Some(Instant::now()),
        };
        assert_eq!(exists_dominating_set_with(&g, 15, &opts), Err(Interrupted));
    }

    #[test]
    fn path_domination_numbers() {
        for n in 1..=15 {
            assert_eq!(domination_number(&p(n)), n.div_ceil(3), "P{n}");
        }
    }

    #[test]
    fn direct_product_domination() {
        assert_eq!(
            domination_number(&direct_product(&p(6), &p(5)).unwrap()),
            10
        );
        assert_eq!(domination_number(&direct_product(&p(4), &p(4)).unwrap()), 4);
    }

    #[test]
    fn matches_brute_force_on_small_products() {
        for n in 2..=4 {
            for m in 2..=4 {
                for g in [
                    strong_product(&p(n), &p(m)).unwrap(),
                    direct_product(&p(n), &p(m)).unwrap(),
                    crate::graph::cartesian_product(&p(n), &p(m)).unwrap(),
                ] {
                    assert_eq!(domination_number(&g), brute_gamma(&g));
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let f = enumerate_gamma_sets(&p(6), 100).unwrap();
        assert_eq!(
            (f.gamma, f.sets.clone(), f.truncated),
            (2, vec![vs(&[2, 5])], false)
        );
        assert_eq!(
            enumerate_gamma_sets(&p(3), 100).unwrap().sets,
            vec![vs(&[2])]
        );
        // C(5,2) brute force: {1,4}, {2,4}, {2,5} (1-based).
        let f = enumerate_gamma_sets(&p(5), 100).unwrap();
        assert_eq!(f.sets, vec![vs(&[1, 4]), vs(&[2, 4]), vs(&[2, 5])]);
        let f = enumerate_gamma_sets(&p(5), 2).unwrap();
        assert!(f.truncated);
        assert_eq!(f.sets.len(), 2);
        assert!(enumerate_gamma_sets(&p(5), 0).is_err());
    }

    #[test]
    fn enumeration_over_components_is_a_product() {
        // Two disjoint P5 copies: 3 γ-sets each.
        let edges = (0..4).flat_map(|i| {
            [
                Edge::new(i, i + 1).unwrap(),
                Edge::new(i + 5, i + 6).unwrap(),
            ]
        });
        let g = Graph::from_edges(10, edges).unwrap();
        let f = enumerate_gamma_sets(&g, 100).unwrap();
        assert_eq!((f.gamma, f.sets.len()), (4, 9));
        assert!(f.sets.windows(2).all(|w| w[0] < w[1]));
        let f = enumerate_gamma_sets(&g, 8).unwrap();
        assert!(f.truncated);
        assert_eq!(f.sets.len(), 8);
    }

    #[test]
    fn property_p_examples() {
        assert!(satisfies_property_p(&p(4), &vs(&[1, 4])).unwrap());
        assert!(!satisfies_property_p(&p(5), &vs(&[2, 4])).unwrap());
        assert!(satisfies_property_p(&p(3), &vs(&[2])).unwrap());
        assert!(matches!(
            satisfies_property_p(&p(5), &vs(&[1, 2, 4])),
            Err(Error::PreconditionViolation(_))
        ));
        assert!(matches!(
            satisfies_property_p(&p(5), &vs(&[1, 5])),
            Err(Error::PreconditionViolation(_))
        ));

        assert_eq!(
            property_p_gamma_sets(&p(7), 100).unwrap().sets,
            vec![vs(&[1, 4, 7])]
        );
        assert_eq!(
            property_p_gamma_sets(&p(5), 100).unwrap().sets,
            vec![vs(&[1, 4]), vs(&[2, 5])]
        );
        assert_eq!(
            property_p_gamma_sets(&p(6), 100).unwrap().sets,
            vec![vs(&[2, 5])]
        );
    }

    #[test]
    fn union_of_gamma_sets() {
        assert_eq!(
            vertices_in_some_gamma_set(&p(4), 100).unwrap(),
            vs(&[1, 2, 3, 4])
        );
        assert_eq!(
            vertices_in_some_gamma_set(&p(5), 100).unwrap(),
            vs(&[1, 2, 4, 5])
        );
        assert_eq!(vertices_in_some_gamma_set(&p(3), 100).unwrap(), vs(&[2]));
        assert_eq!(
            vertices_in_some_gamma_set(&p(5), 1),
            Err(Error::EnumerationIncomplete { cap: 1 })
        );
    }

    #[test]
    fn disjoint_packings() {
        assert_eq!(max_disjoint_gamma_sets(&p(5), 100).unwrap(), 2);
        assert_eq!(max_disjoint_gamma_sets(&p(6), 100).unwrap(), 1);
        let g = strong_product(&p(5), &p(5)).unwrap();
        assert!(max_disjoint_gamma_sets(&g, DEFAULT_CAP).unwrap() >= 4);
    }

    #[test]
    fn canonical_strong_sets() {
        let s = canonical_gamma_set_strong(3, 3).unwrap();
        assert_eq!(s, [4].into_iter().collect());
        let s = canonical_gamma_set_strong(4, 5).unwrap();
        // {v1,v4} x {v2,v5}
        assert_eq!(s, [1, 4, 16, 19].into_iter().collect());
        let g = strong_product(&p(4), &p(5)).unwrap();
        assert!(is_dominating(&g, &s).unwrap());
        assert_eq!(canonical_gamma_set_strong(6, 6).unwrap().len(), 4);
        for n in 2..=10 {
            for m in 2..=10 {
                let g = strong_product(&p(n), &p(m)).unwrap();
                let s = canonical_gamma_set_strong(n, m).unwrap();
                assert_eq!(s.len(), n.div_ceil(3) * m.div_ceil(3));
                assert!(is_dominating(&g, &s).unwrap());
                assert!(closed_neighborhoods_disjoint(&g, &s), "{n}x{m}");
            }
        }
    }

    #[test]
    fn single_edge_removal_never_lowers_gamma() {
        for (n, m) in [(3, 4), (4, 4), (5, 5)] {
            let g = strong_product(&p(n), &p(m)).unwrap();
            let gamma = domination_number(&g);
            for e in g.edges() {
                let h = g
                    .remove_edges(&[*e].into_iter().collect::<EdgeSet>())
                    .unwrap();
                assert!(domination_number(&h) >= gamma);
            }
        }
    }
}
