//! Executable identity checks.
//!
//! Every check is registered under a stable string id together with its
//! parameter domain and a default grid. Evaluating a check produces both
//! sides of the identity as exact [`Value`]s; a check passes exactly when
//! the two normalized values are structurally equal.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::LinalgError;
use crate::modular_lab::ModularError;
use crate::orthopoly::OrthoError;
use crate::qseries::QError;
use crate::value::Value;

pub mod closed_forms;
pub mod coherence;
pub mod families;
pub mod limits;

mod classical;
mod modular;
mod orthogonal;
mod qanalogues;
mod support;

pub use families::{build_matrix, family, AnyMatrix, MatrixFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown check id {0:?}")]
    UnknownId(String),
    #[error("unknown matrix family {0:?}")]
    UnknownFamily(String),
    #[error("{id} needs parameter {name:?}")]
    MissingParam { id: String, name: String },
    #[error("{params} is outside the domain of {id}: {reason}")]
    OutOfDomain { id: String, params: String, reason: String },
    #[error("{0} is not a summation identity")]
    WrongKind(String),
    #[error("malformed grid: {0}")]
    BadGrid(String),
}

/// Failure while evaluating one side of a check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct EvalError(pub String);

macro_rules! eval_error_from {
    ($($t:ty),*) => {
        $(impl From<$t> for EvalError {
            fn from(e: $t) -> Self {
                EvalError(e.to_string())
            }
        })*
    };
}

eval_error_from!(QError, LinalgError, OrthoError, ModularError, SuiteError, limits::LimitError, closed_forms::ClosedFormError);

/// Named integer parameters of one grid point.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Params(BTreeMap<String, i64>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn with(mut self, name: &str, value: i64) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn set(&mut self, name: &str, value: i64) {
        self.0.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Result<i64, EvalError> {
        self.0
            .get(name)
            .copied()
            .ok_or_else(|| EvalError(format!("missing parameter {name:?}")))
    }

    /// A parameter used as a matrix size or loop bound.
    pub fn size(&self, name: &str) -> Result<usize, EvalError> {
        let v = self.get(name)?;
        usize::try_from(v).map_err(|_| EvalError(format!("parameter {name} = {v} must be nonnegative")))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.contains_key(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> + '_ {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

impl<const N: usize> From<[(&str, i64); N]> for Params {
    fn from(pairs: [(&str, i64); N]) -> Self {
        Params(pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// A determinant compared with a closed form or another determinant.
    Determinant,
    /// A finite sum compared with its evaluation.
    Sum,
    /// Null vectors, inverses, recurrences and other matrix relations.
    Structural,
}

/// One integer parameter axis: the full registered range and the shorter
/// range used by the fast suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub lo: i64,
    pub hi: i64,
    pub fast_hi: i64,
}

pub(crate) const fn param(name: &'static str, lo: i64, hi: i64, fast_hi: i64) -> ParamSpec {
    ParamSpec { name, lo, hi, fast_hi }
}

/// A `'static` parameter table: `params![("n", lo, hi, fast_hi), ...]`.
macro_rules! params {
    ($(($name:literal, $lo:expr, $hi:expr, $fast:expr)),* $(,)?) => {{
        const P: &[$crate::identity_suite::ParamSpec] = &[$($crate::identity_suite::param($name, $lo, $hi, $fast)),*];
        P
    }};
}
pub(crate) use params;

pub type EvalFn = fn(&Params) -> Result<(Value, Value), EvalError>;
pub type DomainFn = fn(&Params) -> bool;

pub struct IdentityCheck {
    pub id: &'static str,
    /// Plain-language statement of what is compared.
    pub statement: &'static str,
    pub kind: CheckKind,
    pub params: &'static [ParamSpec],
    pub domain: DomainFn,
    pub eval: EvalFn,
}

impl fmt::Debug for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCheck")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .field("params", &self.params)
            .finish()
    }
}

fn everywhere(_: &Params) -> bool {
    true
}

pub(crate) fn check(
    id: &'static str,
    kind: CheckKind,
    statement: &'static str,
    params: &'static [ParamSpec],
    eval: EvalFn,
) -> IdentityCheck {
    IdentityCheck {
        id,
        statement,
        kind,
        params,
        domain: everywhere,
        eval,
    }
}

impl IdentityCheck {
    pub(crate) fn within(mut self, domain: DomainFn) -> Self {
        self.domain = domain;
        self
    }

    pub fn in_domain(&self, p: &Params) -> bool {
        (self.domain)(p)
    }

    fn missing_param(&self, p: &Params) -> Option<&'static str> {
        self.params.iter().map(|s| s.name).find(|name| !p.contains(name))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub params: Params,
    pub status: Status,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// All registered checks in a fixed order.
pub fn registry() -> &'static [IdentityCheck] {
    static REGISTRY: OnceLock<Vec<IdentityCheck>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut out = Vec::new();
        classical::register(&mut out);
        orthogonal::register(&mut out);
        qanalogues::register(&mut out);
        modular::register(&mut out);
        out
    })
}

pub fn lookup(id: &str) -> Result<&'static IdentityCheck, SuiteError> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| SuiteError::UnknownId(id.to_string()))
}

fn evaluate(check: &IdentityCheck, params: &Params) -> CheckResult {
    let start = Instant::now();
    let outcome = (check.eval)(params);
    let elapsed = start.elapsed();
    let (status, lhs, rhs, error) = match outcome {
        Ok((l, r)) => {
            let (l, r) = (l.normalize(), r.normalize());
            let status = if l == r { Status::Pass } else { Status::Fail };
            (status, Some(l), Some(r), None)
        }
        Err(e) => (Status::Fail, None, None, Some(e.0)),
    };
    CheckResult {
        id: check.id.to_string(),
        params: params.clone(),
        status,
        lhs,
        rhs,
        error,
        elapsed,
    }
}

fn validate(check: &IdentityCheck, params: &Params) -> Result<(), SuiteError> {
    if let Some(name) = check.missing_param(params) {
        return Err(SuiteError::MissingParam {
            id: check.id.to_string(),
            name: name.to_string(),
        });
    }
    if !check.in_domain(params) {
        return Err(SuiteError::OutOfDomain {
            id: check.id.to_string(),
            params: params.to_string(),
            reason: "domain predicate rejects this point".to_string(),
        });
    }
    Ok(())
}

/// Evaluates one check at one parameter point.
pub fn run_check(id: &str, params: &Params) -> Result<CheckResult, SuiteError> {
    let check = lookup(id)?;
    validate(check, params)?;
    Ok(evaluate(check, params))
}

/// Like [`run_check`], restricted to the finite-sum identities.
pub fn run_sum_check(id: &str, params: &Params) -> Result<CheckResult, SuiteError> {
    let check = lookup(id)?;
    if check.kind != CheckKind::Sum {
        return Err(SuiteError::WrongKind(id.to_string()));
    }
    validate(check, params)?;
    Ok(evaluate(check, params))
}

/// Cartesian product of named integer axes, enumerated with the last axis
/// varying fastest.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Grid {
    axes: Vec<(String, Vec<i64>)>,
}

impl Grid {
    pub fn new() -> Self {
        Grid::default()
    }

    /// Adds (or replaces) an axis with explicit values.
    pub fn axis(mut self, name: &str, values: Vec<i64>) -> Self {
        if let Some(slot) = self.axes.iter_mut().find(|(n, _)| n == name) {
            slot.1 = values;
        } else {
            self.axes.push((name.to_string(), values));
        }
        self
    }

    /// Adds the inclusive range `lo..=hi`; empty when `hi < lo`.
    pub fn range(self, name: &str, lo: i64, hi: i64) -> Self {
        self.axis(name, (lo..=hi).collect())
    }

    pub fn axes(&self) -> &[(String, Vec<i64>)] {
        &self.axes
    }

    pub fn len(&self) -> usize {
        if self.axes.is_empty() {
            return 0;
        }
        self.axes.iter().map(|(_, v)| v.len()).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> Vec<Params> {
        if self.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Params::new()];
        for (name, values) in &self.axes {
            out = out
                .into_iter()
                .flat_map(|p| values.iter().map(move |&v| p.clone().with(name, v)))
                .collect();
        }
        out
    }
}

/// The registered grid of a check; `fast` selects the shortened ranges.
pub fn default_grid(check: &IdentityCheck, fast: bool) -> Grid {
    check.params.iter().fold(Grid::new(), |g, s| {
        g.range(s.name, s.lo, if fast { s.fast_hi } else { s.hi })
    })
}

/// Command-line style adjustments applied on top of a default grid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridOverrides {
    /// Upper end of the `n` axis (also `N` where a check uses that name).
    pub n_max: Option<i64>,
    pub k_max: Option<i64>,
    pub m_max: Option<i64>,
    /// Pins `r` to one value.
    pub r: Option<i64>,
    /// Pins `x` to one value.
    pub x: Option<i64>,
    /// Offsets the `seed` axis.
    pub seed: Option<i64>,
    /// Explicit inclusive ranges by parameter name.
    pub ranges: BTreeMap<String, (i64, i64)>,
}

impl GridOverrides {
    pub fn is_empty(&self) -> bool {
        *self == GridOverrides::default()
    }

    pub fn apply(&self, check: &IdentityCheck, fast: bool) -> Result<Grid, SuiteError> {
        for name in self.ranges.keys() {
            if !check.params.iter().any(|s| s.name == name) {
                return Err(SuiteError::BadGrid(format!("{} has no parameter {name:?}", check.id)));
            }
        }
        let mut grid = Grid::new();
        for s in check.params {
            let (mut lo, mut hi) = (s.lo, if fast { s.fast_hi } else { s.hi });
            match s.name {
                "n" | "N" => hi = self.n_max.unwrap_or(hi),
                "k" => hi = self.k_max.unwrap_or(hi),
                "m" => hi = self.m_max.unwrap_or(hi),
                "r" => {
                    if let Some(r) = self.r {
                        (lo, hi) = (r, r);
                    }
                }
                "x" => {
                    if let Some(x) = self.x {
                        (lo, hi) = (x, x);
                    }
                }
                "seed" => {
                    if let Some(off) = self.seed {
                        (lo, hi) = (lo + off, hi + off);
                    }
                }
                _ => {}
            }
            if let Some(&(a, b)) = self.ranges.get(s.name) {
                (lo, hi) = (a, b);
            }
            grid = grid.range(s.name, lo, hi);
        }
        Ok(grid)
    }
}

/// Runs a check over every in-domain point of `grid`, in parallel, and
/// returns the results in grid order. With `fail_fast` the list ends at the
/// first failing point.
pub fn verify_range(id: &str, grid: &Grid, fail_fast: bool) -> Result<Vec<CheckResult>, SuiteError> {
    let check = lookup(id)?;
    let points: Vec<Params> = grid.points();
    if let Some(p) = points.first() {
        if let Some(name) = check.missing_param(p) {
            return Err(SuiteError::MissingParam {
                id: id.to_string(),
                name: name.to_string(),
            });
        }
    }
    let points: Vec<Params> = points.into_iter().filter(|p| check.in_domain(p)).collect();
    let first_failure = AtomicUsize::new(usize::MAX);
    let results: Vec<Option<CheckResult>> = points
        .par_iter()
        .enumerate()
        .map(|(idx, p)| {
            if fail_fast && idx > first_failure.load(Ordering::Relaxed) {
                return None;
            }
            let r = evaluate(check, p);
            if fail_fast && !r.passed() {
                first_failure.fetch_min(idx, Ordering::Relaxed);
            }
            Some(r)
        })
        .collect();
    let cut = first_failure.load(Ordering::Relaxed);
    Ok(results
        .into_iter()
        .enumerate()
        .take_while(|(idx, _)| !fail_fast || *idx <= cut)
        .filter_map(|(_, r)| r)
        .collect())
}

/// Runs every registered check over its default (or overridden) grid.
pub fn run_suite(fast: bool, overrides: &GridOverrides, fail_fast: bool) -> Result<Vec<CheckResult>, SuiteError> {
    let mut out = Vec::new();
    for check in registry() {
        let grid = overrides.apply(check, fast)?;
        let results = verify_range(check.id, &grid, fail_fast)?;
        let failed = results.iter().any(|r| !r.passed());
        out.extend(results);
        if fail_fast && failed {
            break;
        }
    }
    Ok(out)
}

/// Markdown index of every check id and matrix family.
pub fn index_markdown() -> String {
    let mut s = String::from("# Check index\n\n");
    s.push_str("Generated from the registry by `catdet::identity_suite::index_markdown`.\n\n");
    s.push_str("## Checks\n\n| id | kind | parameters (full / fast) | statement |\n|---|---|---|---|\n");
    for c in registry() {
        let params: Vec<String> = c
            .params
            .iter()
            .map(|p| format!("{} ∈ {}..{} / ..{}", p.name, p.lo, p.hi, p.fast_hi))
            .collect();
        let kind = match c.kind {
            CheckKind::Determinant => "determinant",
            CheckKind::Sum => "sum",
            CheckKind::Structural => "structural",
        };
        s.push_str(&format!("| {} | {} | {} | {} |\n", c.id, kind, params.join(", "), c.statement));
    }
    s.push_str("\n## Matrix families\n\n| id | parameters | entries |\n|---|---|---|\n");
    for f in families::families() {
        s.push_str(&format!("| {} | {} | {} |\n", f.id, f.params.join(", "), f.description));
    }
    s.push_str("\n## Coherence pairs\n\n| q family | classical family | fixed parameters |\n|---|---|---|\n");
    for pair in coherence::pairs() {
        s.push_str(&format!("| {} | {} | {} |\n", pair.q_family, pair.classical_family, pair.note));
    }
    s
}

#[cfg(test)]
mod tests;
