//! Immutable simple undirected graphs over bitset adjacency rows, plus the
//! path and path-product constructors.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Words};
use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 4096;

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidParameter(format!(
                "self-loop at vertex {}",
                a + 1
            )));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u + 1, self.v + 1)
    }
}

/// A sorted, duplicate-free set of 0-based vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.0.iter().chain(&other.0).copied().collect()
    }

    pub(crate) fn to_bits(&self, order: usize) -> Words {
        let mut out = bits::zeros(bits::words_for(order));
        for &v in &self.0 {
            bits::set(&mut out, v);
        }
        out
    }

    pub(crate) fn from_bits(b: &[u64]) -> Self {
        VertexSet(bits::ones(b).collect())
    }

    pub(crate) fn check_range(&self, order: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= order => Err(Error::VertexOutOfRange { vertex: v, order }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

/// A sorted, duplicate-free set of edges.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn members(&self) -> &[Edge] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.0.binary_search(e).is_ok()
    }

    /// Builds a set from 0-based vertex pairs.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Result<Self> {
        pairs
            .into_iter()
            .map(|(a, b)| Edge::new(a, b))
            .collect::<Result<Vec<_>>>()
            .map(|v| v.into_iter().collect())
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        let mut v: Vec<Edge> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Strong,
    Direct,
    Cartesian,
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Strong => "strong",
            ProductKind::Direct => "direct",
            ProductKind::Cartesian => "cartesian",
        })
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strong" => Ok(ProductKind::Strong),
            "direct" => Ok(ProductKind::Direct),
            "cartesian" => Ok(ProductKind::Cartesian),
            other => Err(Error::InvalidParameter(format!(
                "unknown product kind `{other}`"
            ))),
        }
    }
}

/// A product of two paths `P_n` and `P_m`.
///
/// The path-pair vertex `(u_i, v_j)` with 1-based `i, j` is stored at flat
/// index `(i-1)*m + (j-1)`; this is the only place that conversion happens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GridSpec {
    pub kind: ProductKind,
    pub n: usize,
    pub m: usize,
}

impl GridSpec {
    pub fn new(kind: ProductKind, n: usize, m: usize) -> Result<Self> {
        if n < 2 || m < 2 {
            return Err(Error::InvalidParameter(format!(
                "path orders must be at least 2, got n={n}, m={m}"
            )));
        }
        if n.checked_mul(m).is_none_or(|o| o > MAX_ORDER) {
            return Err(Error::OrderTooLarge(n.saturating_mul(m)));
        }
        Ok(GridSpec { kind, n, m })
    }

    pub fn order(&self) -> usize {
        self.n * self.m
    }

    /// Flat index of the 1-based grid vertex `(i, j)`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!((1..=self.n).contains(&i) && (1..=self.m).contains(&j));
        (i - 1) * self.m + (j - 1)
    }

    /// 1-based grid coordinates of a flat index.
    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.m + 1, v % self.m + 1)
    }

    pub fn edge(&self, a: (usize, usize), b: (usize, usize)) -> Result<Edge> {
        Edge::new(self.index(a.0, a.1), self.index(b.0, b.1))
    }

    pub fn transpose(&self) -> GridSpec {
        GridSpec {
            kind: self.kind,
            n: self.m,
            m: self.n,
        }
    }

    pub fn graph(&self) -> Graph {
        let (p, q) = (path_graph(self.n).unwrap(), path_graph(self.m).unwrap());
        match self.kind {
            ProductKind::Strong => strong_product(&p, &q),
            ProductKind::Direct => direct_product(&p, &q),
            ProductKind::Cartesian => cartesian_product(&p, &q),
        }
        .expect("grid orders validated at construction")
    }

    /// The dihedral symmetries of the grid that preserve path adjacency in
    /// both factors, as vertex permutations. Square grids have eight, others four.
    pub fn symmetries(&self) -> Vec<Vec<usize>> {
        let (n, m) = (self.n, self.m);
        type CellMap = Box<dyn Fn(usize, usize) -> (usize, usize)>;
        let mut maps: Vec<CellMap> = vec![
            Box::new(|i, j| (i, j)),
            Box::new(move |i, j| (n + 1 - i, j)),
            Box::new(move |i, j| (i, m + 1 - j)),
            Box::new(move |i, j| (n + 1 - i, m + 1 - j)),
        ];
        if n == m {
            maps.push(Box::new(|i, j| (j, i)));
            maps.push(Box::new(move |i, j| (n + 1 - j, i)));
            maps.push(Box::new(move |i, j| (j, n + 1 - i)));
            maps.push(Box::new(move |i, j| (n + 1 - j, n + 1 - i)));
        }
        maps.iter()
            .map(|f| {
                (0..self.order())
                    .map(|v| {
                        let (i, j) = self.coords(v);
                        let (a, b) = f(i, j);
                        self.index(a, b)
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.kind {
            ProductKind::Strong => "⊠",
            ProductKind::Direct => "×",
            ProductKind::Cartesian => "□",
        };
        write!(f, "P{}{}P{}", self.n, op, self.m)
    }
}

/// Immutable simple undirected graph. Row `v` of `adj` is the open
/// neighborhood of `v`; `closed` additionally has bit `v` set.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    words: usize,
    adj: Vec<u64>,
    closed: Vec<u64>,
    edges: Vec<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges.len())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from 0-based edges. Duplicate edges collapse.
    pub fn from_edges<I: IntoIterator<Item = Edge>>(order: usize, edges: I) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidParameter(
                "graph order must be positive".into(),
            ));
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        let words = bits::words_for(order);
        let mut adj = vec![0u64; order * words];
        let mut list: Vec<Edge> = Vec::new();
        for e in edges {
            if e.v >= order {
                return Err(Error::VertexOutOfRange { vertex: e.v, order });
            }
            bits::set(&mut adj[e.u * words..(e.u + 1) * words], e.v);
            bits::set(&mut adj[e.v * words..(e.v + 1) * words], e.u);
            list.push(e);
        }
        list.sort_unstable();
        list.dedup();
        let mut closed = adj.clone();
        for v in 0..order {
            bits::set(&mut closed[v * words..(v + 1) * words], v);
        }
        Ok(Graph {
            order,
            words,
            adj,
            closed,
            edges: list,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub(crate) fn open_row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn closed_row(&self, v: usize) -> &[u64] {
        &self.closed[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.open_row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.open_row(v))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && bits::test(self.open_row(u), v)
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        bits::and_count(self.open_row(u), self.open_row(v))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    /// Returns a fresh graph without the given edges; `self` is untouched.
    pub fn remove_edges(&self, es: &EdgeSet) -> Result<Graph> {
        for e in es.members() {
            if !self.has_edge(e.u, e.v) {
                return Err(Error::InvalidEdge {
                    u: e.u + 1,
                    v: e.v + 1,
                });
            }
        }
        let mut g = self.clone();
        for e in es.members() {
            let w = g.words;
            bits::clear(&mut g.adj[e.u * w..(e.u + 1) * w], e.v);
            bits::clear(&mut g.adj[e.v * w..(e.v + 1) * w], e.u);
            bits::clear(&mut g.closed[e.u * w..(e.u + 1) * w], e.v);
            bits::clear(&mut g.closed[e.v * w..(e.v + 1) * w], e.u);
        }
        g.edges.retain(|e| !es.contains(e));
        Ok(g)
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.order];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for y in self.neighbors(x) {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        Ok(dist)
    }

    /// Shortest-path length, `None` when `u` and `v` lie in different components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(v)?;
        Ok(self.distances_from(u)?[v])
    }

    /// Components as bitsets, ordered by smallest member.
    pub(crate) fn component_masks(&self) -> Vec<Words> {
        let mut seen = bits::zeros(self.words);
        let mut out = Vec::new();
        for start in 0..self.order {
            if bits::test(&seen, start) {
                continue;
            }
            let mut comp = bits::zeros(self.words);
            bits::set(&mut comp, start);
            let mut frontier = comp.clone();
            while !bits::is_empty(&frontier) {
                let mut next = bits::zeros(self.words);
                for x in bits::ones(&frontier) {
                    bits::or_into(&mut next, self.open_row(x));
                }
                bits::andnot_into(&mut next, &comp);
                bits::or_into(&mut comp, &next);
                frontier = next;
            }
            bits::or_into(&mut seen, &comp);
            out.push(comp);
        }
        out
    }

    /// Maximal connected vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.component_masks()
            .iter()
            .map(|m| VertexSet::from_bits(m))
            .collect()
    }
}

/// The path `P_n` on vertices `0..n`.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "path order must be at least 1".into(),
        ));
    }
    Graph::from_edges(n, (1..n).map(|i| Edge { u: i - 1, v: i }))
}

fn product<F>(g: &Graph, h: &Graph, adjacent: F) -> Result<Graph>
where
    F: Fn(bool, bool, bool, bool) -> bool,
{
    let (a, b) = (g.order(), h.order());
    let order = a.checked_mul(b).ok_or(Error::OrderTooLarge(usize::MAX))?;
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge(order));
    }
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            let x = i * b + j;
            // Only look "forward" so each pair is visited once.
            for k in i..a {
                let (eq_g, adj_g) = (i == k, g.has_edge(i, k));
                if !eq_g && !adj_g {
                    continue;
                }
                for l in 0..b {
                    let y = k * b + l;
                    if y <= x {
                        continue;
                    }
                    if adjacent(eq_g, adj_g, j == l, h.has_edge(j, l)) {
                        edges.push(Edge { u: x, v: y });
                    }
                }
            }
        }
    }
    Graph::from_edges(order, edges)
}

/// `G ⊠ H`: coordinates each equal-or-adjacent, not both equal.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product(g, h, |eg, ag, eh, ah| {
        (eg && ah) || (ag && eh) || (ag && ah)
    })
}

/// `G × H`: both coordinates adjacent.
pub fn direct_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product(g, h, |_, ag, _, ah| ag && ah)
}

/// `G □ H`: one coordinate equal, the other adjacent.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product(g, h, |eg, ag, eh, ah| (eg && ah) || (ag && eh))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize) -> Graph {
        path_graph(n).unwrap()
    }

    fn degrees(g: &Graph) -> Vec<usize> {
        (0..g.order()).map(|v| g.degree(v)).collect()
    }

    fn assert_well_formed(g: &Graph) {
        for u in 0..g.order() {
            assert!(!g.has_edge(u, u));
            for v in g.neighbors(u) {
                assert!(v < g.order());
                assert!(g.has_edge(v, u));
            }
        }
        let listed: usize = (0..g.order()).map(|v| g.degree(v)).sum();
        assert_eq!(listed, 2 * g.edge_count());
    }

    #[test]
    fn path_constructor() {
        assert_eq!(p(1).edge_count(), 0);
        assert_eq!(p(2).edges(), &[Edge::new(0, 1).unwrap()]);
        assert_eq!(degrees(&p(5)), vec![1, 2, 2, 2, 1]);
        assert_eq!(p(5).edge_count(), 4);
        assert!(matches!(path_graph(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn strong_product_counts() {
        let k4 = strong_product(&p(2), &p(2)).unwrap();
        assert_eq!((k4.order(), k4.edge_count()), (4, 6));
        let g = strong_product(&p(3), &p(3)).unwrap();
        assert_eq!((g.order(), g.edge_count()), (9, 20));
        assert_eq!(g.degree(4), 8);
        let g = strong_product(&p(4), &p(5)).unwrap();
        assert_eq!((g.order(), g.edge_count()), (20, 55));
        assert_well_formed(&g);
    }

    #[test]
    fn direct_product_counts() {
        let g = direct_product(&p(2), &p(2)).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.connected_components().len(), 2);
        let g = direct_product(&p(4), &p(4)).unwrap();
        assert_eq!((g.order(), g.edge_count()), (16, 18));
        let g = direct_product(&p(6), &p(5)).unwrap();
        let comps = g.connected_components();
        assert_eq!(g.order(), 30);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 15));
        let (a, b) = (comps[0].members()[0], comps[1].members()[0]);
        assert_eq!(g.distance(a, b).unwrap(), None);
    }

    #[test]
    fn cartesian_product_counts() {
        let c4 = cartesian_product(&p(2), &p(2)).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(degrees(&c4), vec![2, 2, 2, 2]);
        assert_eq!(cartesian_product(&p(3), &p(3)).unwrap().edge_count(), 12);
        assert_eq!(cartesian_product(&p(2), &p(3)).unwrap().edge_count(), 7);
    }

    #[test]
    fn strong_is_disjoint_union_of_cartesian_and_direct() {
        for n in 2..6 {
            for m in 2..6 {
                let s = strong_product(&p(n), &p(m)).unwrap();
                let c = cartesian_product(&p(n), &p(m)).unwrap();
                let d = direct_product(&p(n), &p(m)).unwrap();
                let mut union: Vec<Edge> = c.edges().iter().chain(d.edges()).copied().collect();
                union.sort();
                let before = union.len();
                union.dedup();
                assert_eq!(before, union.len(), "overlap for {n}x{m}");
                assert_eq!(union, s.edges());
                assert_eq!(
                    s.edge_count(),
                    n * (m - 1) + m * (n - 1) + 2 * (n - 1) * (m - 1)
                );
                assert_eq!(d.edge_count(), 2 * (n - 1) * (m - 1));
                assert_eq!(c.edge_count(), n * (m - 1) + m * (n - 1));
            }
        }
    }

    #[test]
    fn grid_labeling_is_row_major() {
        let spec = GridSpec::new(ProductKind::Strong, 3, 5).unwrap();
        assert_eq!(spec.index(1, 1), 0);
        assert_eq!(spec.index(2, 1), 5);
        assert_eq!(spec.index(3, 5), 14);
        for v in 0..15 {
            let (i, j) = spec.coords(v);
            assert_eq!(spec.index(i, j), v);
        }
        let g = spec.graph();
        assert!(g.has_edge(spec.index(2, 1), spec.index(2, 2)));
        assert!(g.has_edge(spec.index(1, 1), spec.index(2, 2)));
        assert!(!g.has_edge(spec.index(1, 1), spec.index(3, 1)));
        assert!(GridSpec::new(ProductKind::Strong, 1, 5).is_err());
    }

    #[test]
    fn symmetries_are_automorphisms() {
        for (n, m) in [(3, 5), (4, 4), (2, 7)] {
            for kind in [ProductKind::Strong, ProductKind::Direct] {
                let spec = GridSpec::new(kind, n, m).unwrap();
                let g = spec.graph();
                let syms = spec.symmetries();
                assert_eq!(syms.len(), if n == m { 8 } else { 4 });
                for s in &syms {
                    for e in g.edges() {
                        assert!(g.has_edge(s[e.u()], s[e.v()]));
                    }
                }
            }
        }
    }

    #[test]
    fn remove_edges_behaviour() {
        let g = p(3);
        assert_eq!(g.remove_edges(&EdgeSet::new()).unwrap(), g);
        let h = g
            .remove_edges(&EdgeSet::from_pairs([(0, 1)]).unwrap())
            .unwrap();
        assert_eq!(h.degree(0), 0);
        assert!(h.has_edge(1, 2));
        assert_eq!(g.edge_count(), 2, "input must be unchanged");
        let err = g.remove_edges(&EdgeSet::from_pairs([(0, 2)]).unwrap());
        assert_eq!(err, Err(Error::InvalidEdge { u: 1, v: 3 }));

        let k4 = strong_product(&p(2), &p(2)).unwrap();
        let c4 = k4
            .remove_edges(&EdgeSet::from_pairs([(0, 3), (1, 2)]).unwrap())
            .unwrap();
        assert_eq!(degrees(&c4), vec![2, 2, 2, 2]);
        for (u, v) in [(0, 1), (1, 3), (3, 2), (2, 0)] {
            assert!(c4.has_edge(u, v));
        }
        assert_well_formed(&c4);
    }

    #[test]
    fn distances() {
        let g = p(5);
        assert_eq!(g.distance(2, 2).unwrap(), Some(0));
        assert_eq!(g.distance(0, 4).unwrap(), Some(4));
        assert!(matches!(
            g.distance(0, 5),
            Err(Error::VertexOutOfRange {
                vertex: 5,
                order: 5
            })
        ));
        assert_eq!(p(7).connected_components(), vec![(0..7).collect()]);
    }

    #[test]
    fn triangle_inequality_on_small_products() {
        for spec in [
            GridSpec::new(ProductKind::Strong, 5, 6).unwrap(),
            GridSpec::new(ProductKind::Direct, 6, 5).unwrap(),
            GridSpec::new(ProductKind::Cartesian, 4, 7).unwrap(),
        ] {
            let g = spec.graph();
            let d: Vec<_> = (0..g.order())
                .map(|v| g.distances_from(v).unwrap())
                .collect();
            for a in 0..g.order() {
                for b in 0..g.order() {
                    assert_eq!(d[a][b], d[b][a]);
                    for c in 0..g.order() {
                        if let (Some(ab), Some(bc), Some(ac)) = (d[a][b], d[b][c], d[a][c]) {
                            assert!(ac <= ab + bc);
                        }
                    }
                }
            }
        }
    }
}
