//! Exact evaluation of `<M>` for an arbitrary power matrix.
//!
//! Every request is first reduced to its [`CanonicalKey`], which drops zero
//! rows and columns and orients the block so that it has no more columns
//! than rows. One column is handled by the closed form, two columns by the
//! selected two-column formula, and anything wider by the column recursion.
//! Results are memoized per `(method, key)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use crate::closed_form::{one_vector_orthogonal, two_vector_closed, two_vector_ullah};
use crate::error::{Error, Result};
use crate::matrix::{CanonicalKey, PowerMatrix};
use crate::ratfunc::RationalFunction;
use crate::recursion::recursion_reduce;
use crate::scalar::ExactField;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Method {
    /// Closed forms up to two columns, recursion above.
    #[default]
    Auto,
    /// Recursion all the way down to one column.
    RecursionOnly,
    /// Recursion down to two columns, then the single-sum closed form.
    TwoVectorClosed,
    /// Recursion down to two columns, then the double-sum formula.
    Ullah,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(Method::Auto),
            "recursion" | "recursion-only" => Ok(Method::RecursionOnly),
            "two-vector" | "two-vector-closed" => Ok(Method::TwoVectorClosed),
            "ullah" => Ok(Method::Ullah),
            other => Err(format!("unknown method '{other}'")),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Auto => "auto",
            Method::RecursionOnly => "recursion",
            Method::TwoVectorClosed => "two-vector",
            Method::Ullah => "ullah",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegratorConfig {
    pub method: Method,
    /// Largest accepted total degree.
    pub degree_guard: usize,
    /// Largest accepted column count after compaction and orientation.
    pub column_guard: usize,
    /// Return zero immediately for odd row or column sums. Turning this off
    /// makes the formulas produce the zeros themselves.
    pub parity_shortcut: bool,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        IntegratorConfig {
            method: Method::Auto,
            degree_guard: 64,
            column_guard: 8,
            parity_shortcut: true,
        }
    }
}

impl IntegratorConfig {
    pub fn with_method(method: Method) -> Self {
        IntegratorConfig {
            method,
            ..Self::default()
        }
    }
}

/// Thread-safe memo table keyed by method and canonical key.
pub struct MemoCache<T> {
    enabled: bool,
    map: RwLock<HashMap<(Method, CanonicalKey), RationalFunction<T>>>,
}

impl<T: Clone> MemoCache<T> {
    pub fn new() -> Self {
        MemoCache {
            enabled: true,
            map: RwLock::new(HashMap::new()),
        }
    }

    /// A cache that never stores anything.
    pub fn disabled() -> Self {
        MemoCache {
            enabled: false,
            map: RwLock::new(HashMap::new()),
        }
    }

    pub fn is_enabled(&self) -> bool {
        self.enabled
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.map.write().unwrap().clear();
    }

    fn get(&self, method: Method, key: &CanonicalKey) -> Option<RationalFunction<T>> {
        if !self.enabled {
            return None;
        }
        self.map
            .read()
            .unwrap()
            .get(&(method, key.clone()))
            .cloned()
    }

    fn insert(&self, method: Method, key: CanonicalKey, value: &RationalFunction<T>) {
        if self.enabled {
            self.map
                .write()
                .unwrap()
                .entry((method, key))
                .or_insert_with(|| value.clone());
        }
    }

    /// Snapshot of all cached entries.
    pub fn entries(&self) -> Vec<(Method, CanonicalKey, RationalFunction<T>)> {
        self.map
            .read()
            .unwrap()
            .iter()
            .map(|((m, k), v)| (*m, k.clone(), v.clone()))
            .collect()
    }
}

impl<T: Clone> Default for MemoCache<T> {
    fn default() -> Self {
        Self::new()
    }
}

/// Compute `<M>` exactly as a rational function of `N`.
///
/// The value is the true group integral for every `N >= M.validity_bound()`.
pub fn integrate<T: ExactField>(
    m: &PowerMatrix,
    cfg: &IntegratorConfig,
    cache: &MemoCache<T>,
) -> Result<RationalFunction<T>> {
    let degree = m.total_degree() as usize;
    if degree > cfg.degree_guard {
        return Err(Error::GuardExceeded {
            what: "total degree",
            value: degree,
            limit: cfg.degree_guard,
        });
    }
    let key = m.canonical_key();
    if key.column_count() > cfg.column_guard {
        return Err(Error::GuardExceeded {
            what: "column count",
            value: key.column_count(),
            limit: cfg.column_guard,
        });
    }
    integrate_key(&key, cfg, cache)
}

fn integrate_key<T: ExactField>(
    key: &CanonicalKey,
    cfg: &IntegratorConfig,
    cache: &MemoCache<T>,
) -> Result<RationalFunction<T>> {
    let m = key.to_matrix();
    if m.is_zero() {
        return Ok(RationalFunction::one());
    }
    if cfg.parity_shortcut && m.is_vanishing_by_parity() {
        return Ok(RationalFunction::zero());
    }
    if let Some(v) = cache.get(cfg.method, key) {
        return Ok(v);
    }
    let value = match (m.column_count(), cfg.method) {
        (1, _) => one_vector_orthogonal(&m.column_vector(0)),
        (2, Method::Auto | Method::TwoVectorClosed) => {
            let (a, b) = light_last(&m);
            two_vector_closed(&m.column_vector(a), &m.column_vector(b))?
        }
        (2, Method::Ullah) => two_vector_ullah(&m.column_vector(0), &m.column_vector(1))?,
        _ => reduce(&m, cfg, cache)?,
    };
    cache.insert(cfg.method, key.clone(), &value);
    Ok(value)
}

/// Column order that puts the column with the smallest sum last (the last
/// column drives the size of the expansion).
fn light_last(m: &PowerMatrix) -> (usize, usize) {
    let sums = m.column_sums();
    let light = (0..sums.len()).rev().min_by_key(|&j| sums[j]).unwrap();
    let other = if light == 0 { 1 } else { 0 };
    (other, light)
}

fn reduce<T: ExactField>(
    m: &PowerMatrix,
    cfg: &IntegratorConfig,
    cache: &MemoCache<T>,
) -> Result<RationalFunction<T>> {
    let sums = m.column_sums();
    let light = (0..sums.len()).rev().min_by_key(|&j| sums[j]).unwrap();
    let mut perm: Vec<usize> = (0..m.column_count()).filter(|&j| j != light).collect();
    perm.push(light);
    let reduction = recursion_reduce::<T>(&m.permute_columns(&perm)?)?;
    if reduction.terms.is_empty() {
        return Ok(RationalFunction::zero());
    }

    // merge terms whose matrices are equivalent before integrating them
    let mut order: Vec<CanonicalKey> = Vec::new();
    let mut weights: HashMap<CanonicalKey, T> = HashMap::new();
    for term in reduction.terms {
        let k = term.matrix.canonical_key();
        match weights.get_mut(&k) {
            Some(w) => *w = w.clone() + term.weight,
            None => {
                order.push(k.clone());
                weights.insert(k, term.weight);
            }
        }
    }

    let mut sum = RationalFunction::zero();
    for k in &order {
        let w = &weights[k];
        if w.is_zero() {
            continue;
        }
        let child = integrate_key(k, cfg, cache)?;
        sum = &sum + &child.scale(w);
    }
    Ok(&sum * &reduction.prefactor)
}

/// Configuration plus cache, for repeated queries.
pub struct Integrator<T> {
    config: IntegratorConfig,
    cache: MemoCache<T>,
}

impl<T: ExactField> Integrator<T> {
    pub fn new(config: IntegratorConfig) -> Self {
        Integrator {
            config,
            cache: MemoCache::new(),
        }
    }

    pub fn without_cache(config: IntegratorConfig) -> Self {
        Integrator {
            config,
            cache: MemoCache::disabled(),
        }
    }

    pub fn config(&self) -> &IntegratorConfig {
        &self.config
    }

    pub fn cache(&self) -> &MemoCache<T> {
        &self.cache
    }

    pub fn integrate(&self, m: &PowerMatrix) -> Result<RationalFunction<T>> {
        integrate(m, &self.config, &self.cache)
    }
}

impl<T: ExactField> Default for Integrator<T> {
    fn default() -> Self {
        Self::new(IntegratorConfig::default())
    }
}
