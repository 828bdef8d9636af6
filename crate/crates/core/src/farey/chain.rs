use std::collections::HashSet;

use super::edge::FareyEdge;
use super::fan::fan_index;
use super::rational::ExtendedRational;
use crate::error::{Error, Result};

/// A sequence of distinct Farey edges in which consecutive edges share an
/// endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    edges: Vec<FareyEdge>,
    /// `fan_changes[i]` is set when `edges[i]`, `edges[i + 1]`, `edges[i + 2]`
    /// have no common endpoint.
    fan_changes: Vec<bool>,
}

impl Chain {
    pub fn edges(&self) -> &[FareyEdge] {
        &self.edges
    }

    pub fn fan_change_flags(&self) -> &[bool] {
        &self.fan_changes
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Endpoint shared by `edges[i]` and `edges[i + 1]`.
    pub fn pivot(&self, i: usize) -> &ExtendedRational {
        self.edges[i]
            .shared_endpoint(&self.edges[i + 1])
            .expect("validated chain")
    }

    /// Whether `edges[i] < edges[i + 1]` in the fan at their shared endpoint.
    pub fn ascends(&self, i: usize) -> Result<bool> {
        let p = self.pivot(i);
        Ok(fan_index(p, &self.edges[i])? < fan_index(p, &self.edges[i + 1])?)
    }

    /// Whether each consecutive pair bounds a common complementary triangle
    /// (consecutive edges are neighbors in their fan) and the strip of these
    /// triangles never doubles back, i.e. no three consecutive edges are the
    /// sides of one triangle.
    pub fn is_simple(&self) -> Result<bool> {
        for i in 0..self.edges.len().saturating_sub(1) {
            let p = self.pivot(i);
            if (fan_index(p, &self.edges[i])? - fan_index(p, &self.edges[i + 1])?).abs() != 1 {
                return Ok(false);
            }
        }
        let backtracks = self.edges.windows(3).any(|w| {
            let mut vs: Vec<&ExtendedRational> = w.iter().flat_map(|e| e.endpoints()).collect();
            vs.sort_by(|a, b| a.canonical_cmp(b));
            vs.dedup();
            vs.len() == 3
        });
        Ok(!backtracks)
    }

    /// The prefix with the first `n` edges.
    pub fn prefix(&self, n: usize) -> Chain {
        let n = n.min(self.edges.len());
        Chain {
            edges: self.edges[..n].to_vec(),
            fan_changes: self.fan_changes[..n.saturating_sub(2)].to_vec(),
        }
    }

    pub fn reversed(&self) -> Chain {
        let mut edges = self.edges.clone();
        edges.reverse();
        validate_chain(edges).expect("reversal of a chain is a chain")
    }
}

pub fn validate_chain(edges: Vec<FareyEdge>) -> Result<Chain> {
    if edges.is_empty() {
        return Err(Error::InvalidChain { position: 0, reason: "empty chain".into() });
    }
    let mut seen = HashSet::new();
    for (i, e) in edges.iter().enumerate() {
        if !seen.insert(e) {
            return Err(Error::InvalidChain { position: i, reason: format!("repeated edge {e}") });
        }
    }
    for (i, w) in edges.windows(2).enumerate() {
        if w[0].shared_endpoint(&w[1]).is_none() {
            return Err(Error::InvalidChain {
                position: i + 1,
                reason: format!("{} and {} share no endpoint", w[0], w[1]),
            });
        }
    }
    let fan_changes = edges
        .windows(3)
        .map(|w| !w[0].endpoints().into_iter().any(|v| w[1].contains(v) && w[2].contains(v)))
        .collect();
    Ok(Chain { edges, fan_changes })
}

/// Parses a comma-separated list of edge keys.
pub fn parse_chain(spec: &str) -> Result<Chain> {
    let edges = spec
        .split(',')
        .map(|k| k.trim().parse::<FareyEdge>())
        .collect::<Result<Vec<_>>>()?;
    validate_chain(edges)
}

/// `n` consecutive edges of the fan at `tip` starting at index `start`,
/// walking up (`step = 1`) or down (`step = -1`).
pub fn fan_chain(tip: &ExtendedRational, start: i64, step: i64, n: usize) -> Chain {
    let edges = (0..n as i64)
        .map(|j| super::fan::fan_edge(tip, start + step * j))
        .collect();
    validate_chain(edges).expect("distinct fan edges form a chain")
}

/// A chain grown from `start` by fan moves. Each move `(pivot_high, step)`
/// rotates the last edge about one of its endpoints (the canonical second
/// endpoint when `pivot_high`, else the first) by `step` places in that fan.
pub fn fan_walk(start: &FareyEdge, moves: &[(bool, i64)]) -> Result<Chain> {
    let mut edges = vec![start.clone()];
    for &(high, step) in moves {
        let last = edges.last().expect("nonempty");
        let p = if high { last.b() } else { last.a() }.clone();
        let n = fan_index(&p, last)?;
        edges.push(super::fan::fan_edge(&p, n + step));
    }
    validate_chain(edges)
}

/// Zig-zag chain from `start`: alternately rotates about the two endpoints
/// by one step, turning away from the previous triangle, so that every
/// triple is a fan change.
pub fn zigzag_chain(start: &FareyEdge, n: usize) -> Result<Chain> {
    let mut edges = vec![start.clone()];
    let mut prev_pivot: Option<ExtendedRational> = None;
    let mut step = 1;
    while edges.len() < n {
        let last = edges.last().expect("nonempty");
        let p = match &prev_pivot {
            Some(q) => last.other(q).expect("pivot is an endpoint").clone(),
            None => last.b().clone(),
        };
        let next = super::fan::fan_edge(&p, fan_index(&p, last)? + step);
        step = -step;
        prev_pivot = Some(p);
        edges.push(next);
    }
    validate_chain(edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(x: &str, y: &str) -> FareyEdge {
        FareyEdge::from_strs(x, y).unwrap()
    }

    #[test]
    fn flags() {
        let c = validate_chain(vec![e("0", "1/0"), e("1", "1/0"), e("2", "1/0")]).unwrap();
        assert_eq!(c.fan_change_flags(), [false]);
        let c = validate_chain(vec![e("0", "1/0"), e("0", "1"), e("1/2", "1")]).unwrap();
        assert_eq!(c.fan_change_flags(), [true]);
    }

    #[test]
    fn rejects_bad_chains() {
        assert!(validate_chain(vec![e("0", "1/0"), e("1", "2")]).is_err());
        assert!(validate_chain(vec![e("0", "1/0"), e("1", "1/0"), e("0", "1/0")]).is_err());
        assert!(validate_chain(vec![]).is_err());
        // Non-adjacent fan edges still form a chain.
        let c = validate_chain(vec![e("0", "1/0"), e("2", "1/0")]).unwrap();
        assert!(!c.is_simple().unwrap());
        // Around one triangle and back out.
        let c = validate_chain(vec![e("0", "1/2"), e("1/3", "1/2"), e("0", "1/3")]).unwrap();
        assert!(!c.is_simple().unwrap());
    }

    #[test]
    fn parse_and_order() {
        let c = parse_chain("0/1|1/0, 1/1|1/0,2/1|1/0").unwrap();
        assert!(c.ascends(0).unwrap() && c.ascends(1).unwrap());
        assert!(c.is_simple().unwrap());
        let r = c.reversed();
        assert!(!r.ascends(0).unwrap());
    }

    #[test]
    fn walks() {
        let c = fan_walk(&e("0", "1/0"), &[(true, 1), (true, 1), (false, -1)]).unwrap();
        let keys: Vec<String> = c.edges().iter().map(|e| e.key()).collect();
        assert_eq!(keys, ["0/1|1/0", "1/1|1/0", "2/1|1/0", "2/1|3/1"].map(String::from));
        assert!(fan_walk(&e("0", "1/0"), &[(true, 1), (true, -1)]).is_err());
        let z = zigzag_chain(&e("0", "1/0"), 7).unwrap();
        assert_eq!(z.len(), 7);
        assert!(z.fan_change_flags().iter().all(|&f| f));
        assert!(z.is_simple().unwrap());
    }
}
