//! Closed-form values and per-residue-class claims for products of paths,
//! used as expected values by the verifier.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, GridSpec, ProductKind, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PredictionKind {
    Exact,
    Interval,
}

/// A claimed value of a graph parameter: exact, or an interval with an
/// optional conjectured value inside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub kind: PredictionKind,
    pub low: usize,
    pub high: usize,
    pub conjecture: Option<usize>,
    /// Stable tag naming the closed form, e.g. `form:strong-b1`.
    pub source: String,
}

impl Prediction {
    pub fn exact(value: usize, source: &str) -> Self {
        Prediction {
            kind: PredictionKind::Exact,
            low: value,
            high: value,
            conjecture: None,
            source: source.to_string(),
        }
    }

    pub fn interval(low: usize, high: usize, conjecture: Option<usize>, source: &str) -> Self {
        debug_assert!(low <= high);
        debug_assert!(conjecture.is_none_or(|c| (low..=high).contains(&c)));
        Prediction {
            kind: PredictionKind::Interval,
            low,
            high,
            conjecture,
            source: source.to_string(),
        }
    }

    pub fn value(&self) -> Option<usize> {
        (self.kind == PredictionKind::Exact).then_some(self.low)
    }

    pub fn is_exact(&self) -> bool {
        self.kind == PredictionKind::Exact
    }

    pub fn contains(&self, x: usize) -> bool {
        (self.low..=self.high).contains(&x)
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.conjecture) {
            (PredictionKind::Exact, _) => write!(f, "{}", self.low),
            (PredictionKind::Interval, None) => write!(f, "[{},{}]", self.low, self.high),
            (PredictionKind::Interval, Some(c)) => {
                write!(f, "[{},{}] (conjectured {c})", self.low, self.high)
            }
        }
    }
}

/// `(n mod 3, m mod 3)` as an unordered pair, stored with `rn <= rm`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueClass {
    pub rn: usize,
    pub rm: usize,
}

impl ResidueClass {
    pub fn of(n: usize, m: usize) -> Self {
        let (a, b) = (n % 3, m % 3);
        ResidueClass {
            rn: a.min(b),
            rm: a.max(b),
        }
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.rn, self.rm)
    }
}

fn check_orders(n: usize, m: usize) -> Result<()> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidParameter(format!(
            "path orders must be at least 2, got n={n}, m={m}"
        )));
    }
    Ok(())
}

pub fn gamma_path(n: usize) -> usize {
    n.div_ceil(3)
}

pub fn gamma_strong(n: usize, m: usize) -> Result<usize> {
    check_orders(n, m)?;
    Ok(gamma_path(n) * gamma_path(m))
}

pub fn predict_bondage_strong(n: usize, m: usize) -> Result<Prediction> {
    check_orders(n, m)?;
    let c = ResidueClass::of(n, m);
    Ok(match (c.rn, c.rm) {
        (0, 0) | (0, 2) => Prediction::exact(1, "form:strong-b1"),
        (0, 1) => Prediction::exact(2, "form:strong-b2"),
        (1, 2) => Prediction::exact(3, "form:strong-b3"),
        (2, 2) => Prediction::exact(2, "form:strong-b2-disjoint"),
        (1, 1) => Prediction::interval(2, 5, Some(5), "form:strong-interval"),
        _ => unreachable!("residues are below 3"),
    })
}

pub fn predict_bondage_direct(n: usize, m: usize) -> Result<Prediction> {
    check_orders(n, m)?;
    Ok(if n <= 4 || m <= 4 {
        Prediction::exact(1, "form:direct-b1")
    } else {
        Prediction::interval(1, 2, None, "form:direct-le2")
    })
}

pub fn predict_bondage(spec: &GridSpec) -> Result<Option<Prediction>> {
    match spec.kind {
        ProductKind::Strong => predict_bondage_strong(spec.n, spec.m).map(Some),
        ProductKind::Direct => predict_bondage_direct(spec.n, spec.m).map(Some),
        ProductKind::Cartesian => Ok(None),
    }
}

/// The classical γ-sets of `P_n` (0-based indices): one set for residues
/// 0 and 1, two for residue 2.
pub fn canonical_path_gamma_sets(n: usize) -> Result<Vec<VertexSet>> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "path order must be at least 1".into(),
        ));
    }
    // 1-based start offsets; each set steps by three and may pin v_n.
    let step = |start: usize| -> VertexSet { (start..=n).step_by(3).map(|v| v - 1).collect() };
    let with_last = |start: usize| -> VertexSet {
        (start..=n)
            .step_by(3)
            .chain(std::iter::once(n))
            .map(|v| v - 1)
            .collect()
    };
    Ok(match n % 3 {
        0 => vec![step(2)],
        1 => vec![with_last(1)],
        _ => vec![with_last(2), step(1)],
    })
}

/// An explicit bondage set for `P_n ⊠ P_m` following the constructive
/// arguments per residue class, or `None` for class (1,1).
///
/// The grid is oriented so the first factor carries the smaller residue;
/// edges are mapped back to the caller's orientation.
pub fn witness_bondage_set_strong(n: usize, m: usize) -> Result<Option<EdgeSet>> {
    check_orders(n, m)?;
    let flip = n % 3 > m % 3;
    let (a, b) = if flip { (m, n) } else { (n, m) };
    let actual = GridSpec::new(ProductKind::Strong, n, m)?;
    let pairs: Vec<((usize, usize), (usize, usize))> = match (a % 3, b % 3) {
        (0, 2) => vec![((2, 1), (2, 2))],
        (0, 0) => vec![((2, 2), (1, 1))],
        (0, 1) => vec![((2, 1), (1, 1)), ((2, 2), (1, 1))],
        (1, 2) => vec![((1, 1), (1, 2)), ((1, 1), (2, 1)), ((1, 1), (2, 2))],
        (2, 2) => vec![((a - 1, b - 1), (a, b)), ((a, b - 1), (a - 1, b))],
        _ => return Ok(None),
    };
    let orient = |(i, j): (usize, usize)| if flip { (j, i) } else { (i, j) };
    pairs
        .into_iter()
        .map(|(x, y)| actual.edge(orient(x), orient(y)))
        .collect::<Result<Vec<_>>>()
        .map(|edges| Some(edges.into_iter().collect()))
}

/// Classes whose constructive argument needs `t, r >= 1`, i.e. a factor of
/// order 2 (residue 2 with nothing in front of it).
pub fn is_degenerate(spec: &GridSpec) -> bool {
    spec.kind == ProductKind::Strong && (spec.n == 2 || spec.m == 2)
}
