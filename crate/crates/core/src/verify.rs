//! Replays the closed-form claims against the exact solvers and records the
//! outcome of every check in serializable reports.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bondage::{self, BondageOptions, BondageValue};
use crate::domination::{self, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::graph::{
    path_graph, strong_product, Edge, EdgeSet, Graph, GridSpec, ProductKind, VertexSet,
};
use crate::oracle::{self, Prediction, ResidueClass};

pub const REPORT_VERSION: &str = "1";
pub const DEFAULT_CASE_BUDGET: Duration = Duration::from_secs(60);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Offending or supporting values.
    pub detail: String,
}

impl Check {
    fn new(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    fn skipped(name: &str, why: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Skipped,
            detail: why.into(),
        }
    }
}

/// Something computed that is reported, not asserted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub name: String,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Strong,
    Direct,
    Path,
    Gadget,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Strong => "strong",
            Family::Direct => "direct",
            Family::Path => "path",
            Family::Gadget => "gadget",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subject {
    pub family: Family,
    pub n: usize,
    pub m: Option<usize>,
}

/// A grid edge as two 1-based `[i, j]` cells.
pub type GridEdge = [[usize; 2]; 2];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentInfo {
    pub size: usize,
    pub gamma: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub subject: Subject,
    pub residue_class: Option<String>,
    pub degenerate: bool,
    pub gamma_computed: Option<usize>,
    pub gamma_oracle: Option<usize>,
    pub bondage_computed: Option<BondageValue>,
    pub bondage_predicted: Option<Prediction>,
    pub lemma1: Option<usize>,
    pub lemma2: Option<usize>,
    /// Bondage set found by the search.
    pub witness: Option<Vec<GridEdge>>,
    /// Bondage set from the explicit construction, when one exists.
    pub constructed_witness: Option<Vec<GridEdge>>,
    pub witness_checked: Option<bool>,
    pub disjoint_gamma_sets: Option<usize>,
    /// `ceil(t / 2)` for `t` pairwise disjoint γ-sets.
    pub disjoint_lower_bound: Option<usize>,
    pub components: Option<Vec<ComponentInfo>>,
    pub checks: Vec<Check>,
    pub findings: Vec<Finding>,
    /// Microseconds per phase.
    pub wall_time_us: BTreeMap<String, u64>,
}

impl CaseReport {
    fn new(subject: Subject) -> Self {
        CaseReport {
            subject,
            residue_class: None,
            degenerate: false,
            gamma_computed: None,
            gamma_oracle: None,
            bondage_computed: None,
            bondage_predicted: None,
            lemma1: None,
            lemma2: None,
            witness: None,
            constructed_witness: None,
            witness_checked: None,
            disjoint_gamma_sets: None,
            disjoint_lower_bound: None,
            components: None,
            checks: Vec::new(),
            findings: Vec::new(),
            wall_time_us: BTreeMap::new(),
        }
    }

    fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        *self.wall_time_us.entry(phase.to_string()).or_default() +=
            start.elapsed().as_micros() as u64;
        out
    }

    fn check(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check::new(name, ok, detail));
    }

    fn skip(&mut self, name: &str, why: impl Into<String>) {
        self.checks.push(Check::skipped(name, why));
    }

    fn finding(&mut self, name: &str, detail: impl Into<String>) {
        self.findings.push(Finding {
            name: name.into(),
            detail: detail.into(),
        });
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn failed(&self) -> bool {
        self.count(Status::Fail) > 0
    }

    pub fn check_named(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyOptions {
    pub workers: usize,
    pub deterministic: bool,
    pub cap: usize,
    /// Overrides the default `min(lemma1, lemma2)` subset-size limit.
    pub k_max: Option<usize>,
    /// Per-case wall-clock budget in milliseconds; `None` is unlimited.
    pub case_budget_ms: Option<u64>,
    /// Budget for a whole sweep in milliseconds.
    pub total_budget_ms: Option<u64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            workers: 1,
            deterministic: true,
            cap: DEFAULT_CAP,
            k_max: None,
            case_budget_ms: Some(DEFAULT_CASE_BUDGET.as_millis() as u64),
            total_budget_ms: None,
        }
    }
}

impl VerifyOptions {
    fn bondage_options(&self, grid: Option<GridSpec>) -> BondageOptions {
        BondageOptions {
            k_max: self.k_max,
            workers: self.workers,
            deterministic: self.deterministic,
            grid,
            time_budget: self.case_budget_ms.map(Duration::from_millis),
            ..Default::default()
        }
    }
}

pub fn grid_edge(spec: &GridSpec, e: &Edge) -> GridEdge {
    let (a, b) = (spec.coords(e.u()), spec.coords(e.v()));
    [[a.0, a.1], [b.0, b.1]]
}

fn grid_edges(spec: &GridSpec, es: &EdgeSet) -> Vec<GridEdge> {
    es.members().iter().map(|e| grid_edge(spec, e)).collect()
}

fn fmt_edges(edges: &[GridEdge]) -> String {
    edges
        .iter()
        .map(|[a, b]| format!("({},{})-({},{})", a[0], a[1], b[0], b[1]))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Bondage phase shared by strong and direct cases: computed value, lemma
/// bounds, disjoint-γ-set bound, and an independent recheck of the witness.
fn bondage_checks(
    report: &mut CaseReport,
    spec: &GridSpec,
    g: &Graph,
    opts: &VerifyOptions,
    range_high: usize,
) -> Result<Option<usize>> {
    let l1 = bondage::lemma1_bound(g)?;
    let l2 = bondage::lemma2_bound(g)?;
    report.lemma1 = Some(l1);
    report.lemma2 = Some(l2);

    let bopts = opts.bondage_options(Some(*spec));
    let result = report.time("bondage", || bondage::bondage_number(g, &bopts))?;
    report.bondage_computed = Some(result.value);
    let b = result.value.exact();

    match (&report.bondage_predicted, result.value) {
        (Some(p), BondageValue::Exact(b)) => report.check(
            "bondage-prediction",
            p.contains(b),
            format!("computed {b}, predicted {p}"),
        ),
        (Some(p), BondageValue::Above(k)) if p.high <= k => report.check(
            "bondage-prediction",
            false,
            format!("no bondage set of size <= {k}, predicted {p}"),
        ),
        (Some(_), BondageValue::Above(k)) => report.skip(
            "bondage-prediction",
            format!("search stopped after size {k}"),
        ),
        (None, _) => {}
    }
    match b {
        Some(b) => {
            report.check(
                "bondage-range",
                (1..=range_high).contains(&b),
                format!("b = {b}, expected within [1,{range_high}]"),
            );
            report.check("lemma1-bound", b <= l1, format!("b = {b}, bound {l1}"));
            report.check("lemma2-bound", b <= l2, format!("b = {b}, bound {l2}"));
        }
        None => {
            for name in ["bondage-range", "lemma1-bound", "lemma2-bound"] {
                report.skip(name, format!("bondage {}", result.value));
            }
        }
    }

    if let Some(w) = &result.witness {
        let ok = report.time("witness", || bondage::is_bondage_set(g, w))?;
        report.witness = Some(grid_edges(spec, w));
        report.check(
            "computed-witness",
            ok && Some(w.len()) == b,
            format!(
                "{} edges: {}",
                w.len(),
                fmt_edges(report.witness.as_ref().unwrap())
            ),
        );
    }

    let packing = report.time("enumeration", || {
        domination::max_disjoint_gamma_sets(g, opts.cap)
    });
    match packing {
        Ok(t) => {
            let lb = t.div_ceil(2);
            report.disjoint_gamma_sets = Some(t);
            report.disjoint_lower_bound = Some(lb);
            match b {
                Some(b) => report.check(
                    "disjoint-lower-bound",
                    b >= lb,
                    format!("b = {b}, {t} disjoint γ-sets give {lb}"),
                ),
                None => report.skip("disjoint-lower-bound", "bondage not exact"),
            }
        }
        Err(Error::EnumerationIncomplete { cap }) => {
            report.skip("disjoint-lower-bound", format!("more than {cap} γ-sets"))
        }
        Err(e) => return Err(e),
    }
    Ok(b)
}

fn gamma_phase(report: &mut CaseReport, g: &Graph, oracle_gamma: usize) -> usize {
    let gamma = report.time("gamma", || domination::domination_number(g));
    report.gamma_computed = Some(gamma);
    report.gamma_oracle = Some(oracle_gamma);
    report.check(
        "gamma-formula",
        gamma == oracle_gamma,
        format!("computed {gamma}, formula {oracle_gamma}"),
    );
    gamma
}

pub fn verify_strong_case(n: usize, m: usize, opts: &VerifyOptions) -> Result<CaseReport> {
    let spec = GridSpec::new(ProductKind::Strong, n, m)?;
    let g = spec.graph();
    let mut report = CaseReport::new(Subject {
        family: Family::Strong,
        n,
        m: Some(m),
    });
    let class = ResidueClass::of(n, m);
    report.residue_class = Some(class.to_string());
    report.degenerate = oracle::is_degenerate(&spec);
    gamma_phase(&mut report, &g, oracle::gamma_strong(n, m)?);
    let prediction = oracle::predict_bondage_strong(n, m)?;
    report.bondage_predicted = Some(prediction.clone());

    let b = bondage_checks(&mut report, &spec, &g, opts, 5)?;

    match oracle::witness_bondage_set_strong(n, m)? {
        Some(w) => {
            let ok = report.time("witness", || bondage::is_bondage_set(&g, &w))?;
            report.witness_checked = Some(ok);
            report.constructed_witness = Some(grid_edges(&spec, &w));
            let optimal = prediction.value() == Some(w.len());
            report.check(
                "constructed-witness",
                ok && optimal,
                format!(
                    "{} edges {}: raises γ = {ok}",
                    w.len(),
                    fmt_edges(report.constructed_witness.as_ref().unwrap())
                ),
            );
        }
        None => report.skip("constructed-witness", "no construction for this class"),
    }

    if (class.rn, class.rm) == (1, 1) {
        match b {
            Some(b) => report.finding(
                "open-class-value",
                format!(
                    "b = {b}; conjectured {}",
                    prediction.conjecture.map_or("-".into(), |c| c.to_string())
                ),
            ),
            None => report.finding(
                "open-class-value",
                format!("b {} (search incomplete)", report.bondage_computed.unwrap()),
            ),
        }
    }
    Ok(report)
}

pub fn verify_direct_case(n: usize, m: usize, opts: &VerifyOptions) -> Result<CaseReport> {
    let spec = GridSpec::new(ProductKind::Direct, n, m)?;
    let g = spec.graph();
    let mut report = CaseReport::new(Subject {
        family: Family::Direct,
        n,
        m: Some(m),
    });
    let components: Vec<ComponentInfo> = report.time("gamma", || {
        g.connected_components()
            .iter()
            .map(|c| ComponentInfo {
                size: c.len(),
                gamma: domination::domination_number(&induced(&g, c)),
            })
            .collect()
    });
    let gamma = report.time("gamma", || domination::domination_number(&g));
    report.gamma_computed = Some(gamma);
    let summed: usize = components.iter().map(|c| c.gamma).sum();
    report.check(
        "gamma-componentwise",
        summed == gamma,
        format!("components sum to {summed}, whole graph {gamma}"),
    );
    report.components = Some(components);
    report.bondage_predicted = Some(oracle::predict_bondage_direct(n, m)?);

    bondage_checks(&mut report, &spec, &g, opts, 2)?;

    if n == 4 && m == 4 {
        let pendant: Vec<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|e| g.degree(e.u()) == 1 || g.degree(e.v()) == 1)
            .collect();
        let raised: Vec<usize> = report.time("witness", || {
            pendant
                .iter()
                .map(|e| {
                    let h = g.remove_edges(&[*e].into_iter().collect()).unwrap();
                    domination::domination_number(&h)
                })
                .collect()
        });
        report.check(
            "pendant-edge-removal",
            !pendant.is_empty() && raised.iter().all(|&x| x == gamma + 1),
            format!(
                "{} pendant edges, γ after removal {raised:?}",
                pendant.len()
            ),
        );
    }
    Ok(report)
}

/// Induced subgraph on `part`, relabelled in ascending order.
fn induced(g: &Graph, part: &VertexSet) -> Graph {
    let pos = |v: usize| part.members().binary_search(&v).ok();
    let edges = g.edges().iter().filter_map(|e| {
        let (a, b) = (pos(e.u())?, pos(e.v())?);
        Some(Edge::new(a, b).unwrap())
    });
    Graph::from_edges(part.len().max(1), edges).unwrap()
}

/// Whether `s` meets every pair `(v_i, v_{i+1})` with `i ≡ 1 (mod 3)`.
fn hits_consecutive_pairs(s: &VertexSet, n: usize) -> bool {
    (1..n)
        .step_by(3)
        .all(|i| s.contains(i - 1) || s.contains(i))
}

pub fn verify_path_observations(n: usize, cap: usize) -> Result<CaseReport> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "path order must be at least 2, got {n}"
        )));
    }
    let g = path_graph(n)?;
    let mut report = CaseReport::new(Subject {
        family: Family::Path,
        n,
        m: None,
    });
    report.residue_class = Some((n % 3).to_string());
    gamma_phase(&mut report, &g, oracle::gamma_path(n));
    let canonical = oracle::canonical_path_gamma_sets(n)?;
    let family = report.time("enumeration", || domination::enumerate_gamma_sets(&g, cap))?;
    if family.truncated {
        for name in ["gamma-sets", "property-p-sets", "gamma-set-union"] {
            report.skip(name, format!("more than {cap} γ-sets"));
        }
        return Ok(report);
    }
    let property_p: Vec<VertexSet> = domination::property_p_gamma_sets(&g, cap)?.sets;
    let union: VertexSet = family
        .sets
        .iter()
        .flat_map(|s| s.members().iter().copied())
        .collect();
    let mut canonical_sorted = canonical.clone();
    canonical_sorted.sort();
    let show = |sets: &[VertexSet]| {
        sets.iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };

    match n % 3 {
        0 => {
            report.check(
                "unique-gamma-set",
                family.sets == canonical,
                format!("γ-sets {}", show(&family.sets)),
            );
            report.check(
                "property-p-sets",
                property_p == canonical,
                format!("property-𝒫 γ-sets {}", show(&property_p)),
            );
        }
        1 => {
            report.check(
                "property-p-sets",
                property_p == canonical,
                format!("property-𝒫 γ-sets {}", show(&property_p)),
            );
            report.check(
                "gamma-set-union",
                union.len() == n,
                format!("union of γ-sets {union}"),
            );
        }
        _ => {
            report.check(
                "property-p-sets",
                property_p == canonical_sorted,
                format!("property-𝒫 γ-sets {}", show(&property_p)),
            );
            let expected: VertexSet = (1..=n).filter(|j| j % 3 != 0).map(|j| j - 1).collect();
            report.check(
                "gamma-set-union",
                union == expected,
                format!("union of γ-sets {union}, expected {expected}"),
            );
            let missing: Vec<usize> = expected
                .members()
                .iter()
                .copied()
                .filter(|&v| {
                    !family
                        .sets
                        .iter()
                        .any(|s| s.contains(v) && hits_consecutive_pairs(s, n))
                })
                .map(|v| v + 1)
                .collect();
            report.check(
                "consecutive-pairs-existential",
                missing.is_empty(),
                format!("vertices without a pair-hitting γ-set: {missing:?}"),
            );
            let universal = family.sets.iter().all(|s| hits_consecutive_pairs(s, n));
            report.finding(
                "consecutive-pairs-universal",
                format!("every γ-set hits each pair: {universal}"),
            );
        }
    }
    Ok(report)
}

/// The graph glued from `P_n ⊠ P_2` (the last two columns of the grid) and
/// `P_2 ⊠ P_m` (the last two rows) along their shared 2×2 corner block.
#[derive(Debug, Clone)]
pub struct Gadget {
    pub graph: Graph,
    /// 1-based grid cell of each vertex, row-major.
    pub cells: Vec<(usize, usize)>,
    /// The two diagonals of the shared block.
    pub diagonals: EdgeSet,
}

pub fn build_gadget_h(n: usize, m: usize) -> Result<Gadget> {
    if n < 2 || m < 2 || n % 3 != 2 || m % 3 != 2 {
        return Err(Error::InvalidParameter(format!(
            "gadget needs n, m ≡ 2 (mod 3), got n={n}, m={m}"
        )));
    }
    let in_columns = |i: usize, j: usize| (1..=n).contains(&i) && j + 1 >= m && j <= m;
    let in_rows = |i: usize, j: usize| i + 1 >= n && i <= n && (1..=m).contains(&j);
    let cells: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (1..=m).map(move |j| (i, j)))
        .filter(|&(i, j)| in_columns(i, j) || in_rows(i, j))
        .collect();
    let index = |c: (usize, usize)| cells.binary_search(&c).unwrap();
    let mut edges = Vec::new();
    for (a, &(i, j)) in cells.iter().enumerate() {
        for &(k, l) in &cells[a + 1..] {
            let adjacent = i.abs_diff(k) <= 1 && j.abs_diff(l) <= 1;
            let same_strip =
                (in_columns(i, j) && in_columns(k, l)) || (in_rows(i, j) && in_rows(k, l));
            if adjacent && same_strip {
                edges.push(Edge::new(index((i, j)), index((k, l)))?);
            }
        }
    }
    let graph = Graph::from_edges(cells.len(), edges)?;
    let diagonals = [
        Edge::new(index((n - 1, m - 1)), index((n, m)))?,
        Edge::new(index((n, m - 1)), index((n - 1, m)))?,
    ]
    .into_iter()
    .collect();
    Ok(Gadget {
        graph,
        cells,
        diagonals,
    })
}

pub fn verify_gadget_identity(n: usize, m: usize) -> Result<CaseReport> {
    if n < 5 || m < 5 {
        return Err(Error::InvalidParameter(format!(
            "gadget identity needs n, m >= 5, got n={n}, m={m}"
        )));
    }
    let gadget = build_gadget_h(n, m)?;
    let (t, r) = (n / 3, m / 3);
    let mut report = CaseReport::new(Subject {
        family: Family::Gadget,
        n,
        m: Some(m),
    });
    report.residue_class = Some("(2,2)".into());
    let (whole, inner, h, h_cut) = report.time("gamma", || {
        let p = |k| path_graph(k).unwrap();
        let whole = domination::domination_number(&strong_product(&p(n), &p(m)).unwrap());
        let inner = domination::domination_number(&strong_product(&p(n - 2), &p(m - 2)).unwrap());
        let h = domination::domination_number(&gadget.graph);
        let cut = gadget.graph.remove_edges(&gadget.diagonals).unwrap();
        (whole, inner, h, domination::domination_number(&cut))
    });
    report.gamma_computed = Some(whole);
    report.gamma_oracle = Some(oracle::gamma_strong(n, m)?);
    report.check(
        "decomposition",
        whole == inner + h,
        format!(
            "γ(P{n}⊠P{m}) = {whole}, γ(P{}⊠P{}) + γ(H) = {inner} + {h}",
            n - 2,
            m - 2
        ),
    );
    report.check(
        "gamma-h",
        h == t + r + 1,
        format!("γ(H) = {h}, t+r+1 = {}", t + r + 1),
    );
    report.check(
        "gamma-h-cut",
        h_cut == t + r + 2,
        format!("γ(H-{{e,f}}) = {h_cut}, t+r+2 = {}", t + r + 2),
    );
    Ok(report)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub cases: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    /// Failures inside degenerate-parameter cases; also counted in `fail`.
    pub degenerate_fail: usize,
}

impl Summary {
    pub fn tally(cases: &[CaseReport]) -> Self {
        let mut s = Summary {
            cases: cases.len(),
            ..Default::default()
        };
        for c in cases {
            s.pass += c.count(Status::Pass);
            s.fail += c.count(Status::Fail);
            s.skipped += c.count(Status::Skipped);
            if c.degenerate {
                s.degenerate_fail += c.count(Status::Fail);
            }
        }
        s
    }

    pub fn blocking_failures(&self) -> usize {
        self.fail - self.degenerate_fail
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Environment {
    pub solver_version: String,
    pub workers: usize,
    pub case_budget_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub version: String,
    pub kind: Family,
    pub options: VerifyOptions,
    pub environment: Environment,
    pub cases: Vec<CaseReport>,
    pub summary: Summary,
    /// Cases that timed out or errored before producing a report.
    pub resource_limited: bool,
}

impl SweepReport {
    pub fn new(kind: Family, options: &VerifyOptions, cases: Vec<CaseReport>) -> Self {
        let resource_limited = cases.iter().any(|c| {
            matches!(c.bondage_computed, Some(BondageValue::Above(_)))
                || c.checks
                    .iter()
                    .any(|k| k.status == Status::Skipped && k.detail.contains("budget"))
        });
        SweepReport {
            version: REPORT_VERSION.into(),
            kind,
            options: options.clone(),
            environment: Environment {
                solver_version: env!("CARGO_PKG_VERSION").into(),
                workers: if options.deterministic {
                    1
                } else {
                    options.workers
                },
                case_budget_ms: options.case_budget_ms,
            },
            summary: Summary::tally(&cases),
            cases,
            resource_limited,
        }
    }
}

fn budget_expired_case(subject: Subject) -> CaseReport {
    let mut r = CaseReport::new(subject);
    r.skip("sweep-budget", "sweep budget exhausted before this case");
    r
}

/// Runs `family`'s verifier over every `(n, m)` in the rectangle, in
/// ascending order. Path sweeps ignore `ms`; gadget sweeps keep only the
/// pairs the gadget is defined for.
pub fn sweep(
    family: Family,
    ns: std::ops::RangeInclusive<usize>,
    ms: std::ops::RangeInclusive<usize>,
    opts: &VerifyOptions,
) -> Result<SweepReport> {
    if ns.is_empty() || ms.is_empty() {
        return Err(Error::InvalidParameter("empty parameter range".into()));
    }
    let deadline = opts
        .total_budget_ms
        .map(|ms| Instant::now() + Duration::from_millis(ms));
    let mut cases = Vec::new();
    for n in ns.clone() {
        let column: Vec<usize> = match family {
            Family::Path => vec![0],
            _ => ms.clone().collect(),
        };
        for m in column {
            if family == Family::Gadget && (n < 5 || m < 5 || n % 3 != 2 || m % 3 != 2) {
                continue;
            }
            let subject = Subject {
                family,
                n,
                m: (family != Family::Path).then_some(m),
            };
            if deadline.is_some_and(|d| Instant::now() >= d) {
                cases.push(budget_expired_case(subject));
                continue;
            }
            let case = match family {
                Family::Strong => verify_strong_case(n, m, opts)?,
                Family::Direct => verify_direct_case(n, m, opts)?,
                Family::Path => verify_path_observations(n, opts.cap)?,
                Family::Gadget => verify_gadget_identity(n, m)?,
            };
            cases.push(case);
        }
    }
    Ok(SweepReport::new(family, opts, cases))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> VerifyOptions {
        VerifyOptions::default()
    }

    #[test]
    fn strong_three_by_four() {
        let r = verify_strong_case(3, 4, &opts()).unwrap();
        assert_eq!(r.bondage_computed, Some(BondageValue::Exact(2)));
        assert!(!r.failed(), "{:#?}", r.checks);
        assert_eq!(
            r.check_named("constructed-witness").unwrap().status,
            Status::Pass
        );
    }

    #[test]
    fn strong_five_by_five() {
        let r = verify_strong_case(5, 5, &opts()).unwrap();
        assert_eq!(r.bondage_computed, Some(BondageValue::Exact(2)));
        assert!(r.disjoint_gamma_sets.unwrap() >= 4);
        assert!(r.disjoint_lower_bound.unwrap() >= 2);
        assert!(!r.failed(), "{:#?}", r.checks);
    }

    #[test]
    fn strong_four_by_four_reports_open_class() {
        let r = verify_strong_case(4, 4, &opts()).unwrap();
        assert_eq!(r.gamma_computed, Some(4));
        let b = r.bondage_computed.unwrap().exact().unwrap();
        assert!((2..=5).contains(&b));
        assert!(r.findings.iter().any(|f| f.name == "open-class-value"));
        assert!(!r.failed(), "{:#?}", r.checks);
    }

    #[test]
    fn direct_cases() {
        let r = verify_direct_case(4, 4, &opts()).unwrap();
        assert_eq!(r.bondage_computed, Some(BondageValue::Exact(1)));
        assert_eq!(
            r.check_named("pendant-edge-removal").unwrap().status,
            Status::Pass
        );
        assert!(!r.failed(), "{:#?}", r.checks);

        let r = verify_direct_case(6, 5, &opts()).unwrap();
        assert_eq!(r.gamma_computed, Some(10));
        assert_eq!(r.bondage_computed, Some(BondageValue::Exact(2)));
        let comps = r.components.as_ref().unwrap();
        assert_eq!(
            comps.iter().map(|c| c.gamma).collect::<Vec<_>>(),
            vec![5, 5]
        );
        assert!(!r.failed(), "{:#?}", r.checks);

        let r = verify_direct_case(3, 8, &opts()).unwrap();
        assert_eq!(r.bondage_computed, Some(BondageValue::Exact(1)));
    }

    #[test]
    fn path_observation_cases() {
        let r = verify_path_observations(9, DEFAULT_CAP).unwrap();
        assert_eq!(
            r.check_named("unique-gamma-set").unwrap().status,
            Status::Pass
        );
        let r = verify_path_observations(10, DEFAULT_CAP).unwrap();
        assert_eq!(
            r.check_named("property-p-sets").unwrap().status,
            Status::Pass
        );
        let r = verify_path_observations(8, DEFAULT_CAP).unwrap();
        assert!(!r.failed(), "{:#?}", r.checks);
        assert!(r
            .check_named("gamma-set-union")
            .unwrap()
            .detail
            .contains("{1,2,4,5,7,8}"));
        let r = verify_path_observations(8, 1).unwrap();
        assert_eq!(r.count(Status::Skipped), 3);
        assert!(verify_path_observations(1, 10).is_err());
    }

    #[test]
    fn gadget_graphs() {
        let h = build_gadget_h(5, 5).unwrap();
        assert_eq!(h.graph.order(), 16);
        assert_eq!(domination::domination_number(&h.graph), 3);
        let k4 = build_gadget_h(2, 2).unwrap();
        assert_eq!((k4.graph.order(), k4.graph.edge_count()), (4, 6));
        assert_eq!(domination::domination_number(&k4.graph), 1);
        let h = build_gadget_h(8, 5).unwrap();
        assert_eq!(h.graph.order(), 2 * 8 + 2 * 5 - 4);
        assert_eq!(domination::domination_number(&h.graph), 4);
        let cut = h.graph.remove_edges(&h.diagonals).unwrap();
        assert_eq!(domination::domination_number(&cut), 5);
        assert!(build_gadget_h(4, 5).is_err());
    }

    #[test]
    fn gadget_identities() {
        for (n, m) in [(5, 5), (5, 8), (8, 5), (8, 8)] {
            let r = verify_gadget_identity(n, m).unwrap();
            assert!(!r.failed(), "{n}x{m}: {:#?}", r.checks);
        }
        assert!(verify_gadget_identity(2, 5).is_err());
    }

    #[test]
    fn sweep_summary_is_consistent() {
        let rep = sweep(Family::Strong, 2..=4, 2..=4, &opts()).unwrap();
        assert_eq!(rep.cases.len(), 9);
        let s = Summary::tally(&rep.cases);
        assert_eq!(s, rep.summary);
        assert!(rep.cases.iter().all(|c| !c.checks.is_empty()));
        #[allow(clippy::reversed_empty_ranges)]
        let empty = 3..=2;
        assert!(sweep(Family::Strong, empty, 2..=4, &opts()).is_err());
    }

    #[test]
    fn expired_sweep_budget_skips_cases() {
        let o = VerifyOptions {
            total_budget_ms: Some(0),
            ..opts()
        };
        let rep = sweep(Family::Direct, 2..=3, 2..=3, &o).unwrap();
        assert_eq!(rep.summary.skipped, 4);
        assert!(rep.resource_limited);
    }
}
