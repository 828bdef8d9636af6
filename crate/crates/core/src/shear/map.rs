use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::farey::{fan, fan_range_within_depth, ExtendedRational, FareyEdge, Tessellation};

/// A real number on each Farey edge of generation at most `depth`; edges
/// outside the table read as `default`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShearMap {
    depth: u32,
    default: f64,
    values: BTreeMap<FareyEdge, f64>,
}

impl ShearMap {
    pub fn new(depth: u32, default: f64) -> Self {
        ShearMap { depth, default, values: BTreeMap::new() }
    }

    pub fn zero(depth: u32) -> Self {
        Self::new(depth, 0.0)
    }

    /// Fills every edge of generation at most `depth`.
    pub fn from_fn(depth: u32, mut f: impl FnMut(&FareyEdge) -> f64) -> Self {
        let mut s = Self::zero(depth);
        for (e, _) in Tessellation::shared(depth).edges() {
            s.values.insert(e.clone(), f(e));
        }
        s
    }

    /// Constant `c` on the fan at `tip` (within depth), zero elsewhere.
    pub fn fan_constant(tip: &ExtendedRational, c: f64, depth: u32) -> Self {
        let mut s = Self::zero(depth);
        if let Some((lo, hi)) = fan_range_within_depth(tip, depth) {
            for e in fan(tip, lo, hi) {
                s.values.insert(e, c);
            }
        }
        s
    }

    pub fn insert(&mut self, e: FareyEdge, value: f64) -> Result<()> {
        if !value.is_finite() {
            return Err(Error::InvalidParameter(format!("shear on {e} is not finite")));
        }
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

    /// Insert for an edge already known to be within depth.
    pub(crate) fn insert_within_depth(&mut self, e: FareyEdge, value: f64) {
        self.values.insert(e, value);
    }

    pub fn get(&self, e: &FareyEdge) -> f64 {
        self.values.get(e).copied().unwrap_or(self.default)
    }

    /// Whether `e` lies within the represented depth.
    pub fn covers(&self, e: &FareyEdge) -> bool {
        e.generation() <= self.depth
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

    /// Explicit entries in canonical key order.
    pub fn iter(&self) -> impl Iterator<Item = (&FareyEdge, f64)> {
        self.values.iter().map(|(e, v)| (e, *v))
    }

    /// The same map represented to `depth`: deeper entries are dropped,
    /// newly covered edges read as the default.
    pub fn at_depth(&self, depth: u32) -> ShearMap {
        let mut out = ShearMap::new(depth, self.default);
        out.values = self.values.iter().filter(|(e, _)| e.generation() <= depth).map(|(e, v)| (e.clone(), *v)).collect();
        out
    }

    /// Largest entrywise difference over the union of both supports.
    pub fn max_abs_diff(&self, other: &ShearMap) -> f64 {
        let mut m = (self.default - other.default).abs();
        for (e, v) in self.iter() {
            m = m.max((v - other.get(e)).abs());
        }
        for (e, v) in other.iter() {
            m = m.max((v - self.get(e)).abs());
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_depth() {
        let mut s = ShearMap::zero(2);
        let e: FareyEdge = "0/1|1/0".parse().unwrap();
        s.insert(e.clone(), 0.5).unwrap();
        assert_eq!(s.get(&e), 0.5);
        assert_eq!(s.get(&"1/1|1/0".parse().unwrap()), 0.0);
        assert!(s.insert("5/1|1/0".parse().unwrap(), 1.0).is_err());
        assert!(s.insert(e, f64::NAN).is_err());
        assert_eq!(ShearMap::from_fn(2, |_| 1.0).len(), 21);
    }

    #[test]
    fn fan_constant_support() {
        let s = ShearMap::fan_constant(&ExtendedRational::Infinity, 0.5, 3);
        // (n, ∞) has generation n - 1 for n ≥ 1 and -n for n ≤ 0.
        assert_eq!(s.len(), 8);
        assert_eq!(s.get(&"-3/1|1/0".parse().unwrap()), 0.5);
        assert_eq!(s.get(&"4/1|1/0".parse().unwrap()), 0.5);
        assert_eq!(s.get(&"0/1|1/1".parse().unwrap()), 0.0);
    }
}
