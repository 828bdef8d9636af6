use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::farey::{FareyEdge, Tessellation};

/// A positive real on each Farey edge of generation at most `depth`; edges
/// outside the table read as `default` (1 unless set otherwise).
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaMap {
    depth: u32,
    default: f64,
    values: BTreeMap<FareyEdge, f64>,
}

impl LambdaMap {
    pub fn new(depth: u32, default: f64) -> Result<Self> {
        check_positive("default", default)?;
        Ok(LambdaMap { depth, default, values: BTreeMap::new() })
    }

    /// All lambda lengths 1: the lambda lengths of the Ford circles.
    pub fn ford(depth: u32) -> Self {
        LambdaMap { depth, default: 1.0, values: BTreeMap::new() }
    }

    /// Fills every edge of generation at most `depth`.
    pub fn from_fn(depth: u32, mut f: impl FnMut(&FareyEdge) -> f64) -> Result<Self> {
        let mut l = Self::ford(depth);
        for (e, _) in Tessellation::shared(depth).edges() {
            let v = f(e);
            check_positive(&e.key(), v)?;
            l.values.insert(e.clone(), v);
        }
        Ok(l)
    }

    pub fn insert(&mut self, e: FareyEdge, value: f64) -> Result<()> {
        check_positive(&e.key(), value)?;
        let g = e.generation();
        if g > self.depth {
            return Err(Error::InvalidParameter(format!(
                "edge {e} has generation {g}, beyond depth {}",
                self.depth
            )));
        }
        self.values.insert(e, value);
        Ok(())
    }

    /// The same map represented to `depth`: deeper entries are dropped,
    /// newly covered edges read as the default.
    pub fn at_depth(&self, depth: u32) -> LambdaMap {
        let mut out = LambdaMap { depth, default: self.default, values: BTreeMap::new() };
        out.values = self.values.iter().filter(|(e, _)| e.generation() <= depth).map(|(e, v)| (e.clone(), *v)).collect();
        out
    }

    pub fn get(&self, e: &FareyEdge) -> f64 {
        self.values.get(e).copied().unwrap_or(self.default)
    }

    /// Whether `e` has an explicit value.
    pub fn covers(&self, e: &FareyEdge) -> bool {
        self.values.contains_key(e)
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn default_value(&self) -> f64 {
        self.default
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Entries in canonical key order.
    pub fn iter(&self) -> impl Iterator<Item = (&FareyEdge, f64)> {
        self.values.iter().map(|(e, v)| (e, *v))
    }
}

fn check_positive(what: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("lambda length for {what} must be positive and finite, got {v}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LambdaWitness {
    pub key: String,
    pub lambda: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PinchedReport {
    pub pinched: bool,
    pub k: f64,
    pub min: Option<LambdaWitness>,
    pub max: Option<LambdaWitness>,
    /// Entries outside `[1/K, K]`.
    pub violations: Vec<LambdaWitness>,
    /// Whether the default value lies in `[1/K, K]`.
    pub default_in_range: bool,
    /// True when the table is empty, so only the default was checked.
    pub vacuous: bool,
}

/// Checks `1/K ≤ λ(f) ≤ K` on every entry of the table and on the default.
pub fn pinched_check(lambda: &LambdaMap, k: f64) -> PinchedReport {
    let ok = |v: f64| 1.0 / k <= v && v <= k;
    let witness = |(e, v): (&FareyEdge, f64)| LambdaWitness { key: e.key(), lambda: v };
    let min = lambda.iter().min_by(|a, b| a.1.total_cmp(&b.1)).map(witness);
    let max = lambda.iter().max_by(|a, b| a.1.total_cmp(&b.1)).map(witness);
    let violations: Vec<LambdaWitness> = lambda.iter().filter(|(_, v)| !ok(*v)).map(witness).collect();
    let default_in_range = ok(lambda.default_value());
    PinchedReport {
        pinched: violations.is_empty() && default_in_range,
        k,
        min,
        max,
        violations,
        default_in_range,
        vacuous: lambda.is_empty(),
    }
}
