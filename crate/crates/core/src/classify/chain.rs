use serde::Serialize;

use super::leaf::leaf_lengths;
use crate::error::{Error, Result};
use crate::farey::Chain;
use crate::shear::{CharacteristicMap, ShearMap, VertexMap};

/// Sign factors `(s_1^n, ..., s_n^n)`: `+1` when `e_i < e_{i+1}` in their
/// common fan, flipped once for every fan change among the triples
/// `(e_j, e_{j+1}, e_{j+2})`, `i ≤ j ≤ n - 1`.
pub fn chain_signs(chain: &Chain, n: usize) -> Result<Vec<i8>> {
    if n == 0 || n + 1 > chain.len() {
        return Err(Error::OutOfRange(format!(
            "sign row {n} needs 1 ≤ n ≤ {}",
            chain.len().saturating_sub(1)
        )));
    }
    let flags = chain.fan_change_flags();
    let mut row = vec![0i8; n];
    // Walk i downward so the parity accumulates.
    let mut parity = false;
    for i in (1..=n).rev() {
        if i < n {
            parity ^= flags[i - 1];
        }
        let base = if chain.ascends(i - 1)? { 1 } else { -1 };
        row[i - 1] = if parity { -base } else { base };
    }
    Ok(row)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ConvergingEvidence,
    DivergingEvidence,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::ConvergingEvidence => "converging-evidence",
            Verdict::DivergingEvidence => "diverging-evidence",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Thresholds of the convergence heuristic.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct VerdictConfig {
    /// Terms below this are treated as numerically zero.
    pub term_floor: f64,
    /// Largest acceptable estimated tail once the floor is reached.
    pub tail_tolerance: f64,
    /// Largest consecutive-term ratio over the last half-window still read
    /// as geometric decay.
    pub ratio_ceiling: f64,
    /// Terms of the last half-window staying above this fraction of its
    /// first term are read as bounded below.
    pub plateau_fraction: f64,
}

impl Default for VerdictConfig {
    fn default() -> Self {
        VerdictConfig { term_floor: 1e-12, tail_tolerance: 1e-9, ratio_ceiling: 0.9, plateau_fraction: 0.5 }
    }
}

/// Verdict on a finite run of positive terms.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesVerdict {
    pub verdict: Verdict,
    /// Geometric mean ratio of consecutive terms over the last half-window.
    pub trend: f64,
    /// Largest consecutive ratio over the last half-window.
    pub max_ratio: f64,
    /// Geometric estimate of the remaining tail, infinite without decay.
    pub tail_bound: f64,
}

pub fn judge_series(terms: &[f64], cfg: &VerdictConfig) -> SeriesVerdict {
    let tail = &terms[terms.len() / 2..];
    let (first, last) = match (tail.first(), tail.last()) {
        (Some(&a), Some(&b)) => (a, b),
        _ => {
            return SeriesVerdict { verdict: Verdict::Inconclusive, trend: f64::NAN, max_ratio: f64::NAN, tail_bound: f64::INFINITY }
        }
    };
    let max_ratio = tail.windows(2).map(|w| w[1] / w[0]).fold(f64::NEG_INFINITY, f64::max);
    let max_ratio = if tail.len() < 2 { 1.0 } else { max_ratio };
    let trend = if tail.len() < 2 { 1.0 } else { (last / first).powf(1.0 / (tail.len() - 1) as f64) };
    let tail_bound = if max_ratio < 1.0 { last * max_ratio / (1.0 - max_ratio) } else { f64::INFINITY };
    let verdict = if (last < cfg.term_floor && tail_bound < cfg.tail_tolerance) || max_ratio <= cfg.ratio_ceiling {
        Verdict::ConvergingEvidence
    } else if tail.iter().all(|&t| t >= cfg.plateau_fraction * first) {
        Verdict::DivergingEvidence
    } else {
        Verdict::Inconclusive
    };
    SeriesVerdict { verdict, trend, max_ratio, tail_bound }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainSeriesReport {
    pub chain: Vec<String>,
    /// Row `n - 1` holds `(s_1^n, ..., s_n^n)` as signs.
    pub signs: Vec<Vec<i8>>,
    /// `s_1^n + ... + s_n^n`.
    pub exponents: Vec<f64>,
    pub terms: Vec<f64>,
    pub partial_sums: Vec<f64>,
    /// Whether consecutive edges are fan neighbors; the terms are leaf
    /// lengths only on such chains.
    pub simple: bool,
    #[serde(flatten)]
    pub verdict: SeriesVerdict,
}

/// The first `n_terms` terms `e^{s_1^n + ... + s_n^n}` of the chain series.
pub fn chain_series(s: &ShearMap, chain: &Chain, n_terms: usize) -> Result<ChainSeriesReport> {
    chain_series_with(s, chain, n_terms, &VerdictConfig::default())
}

pub fn chain_series_with(s: &ShearMap, chain: &Chain, n_terms: usize, cfg: &VerdictConfig) -> Result<ChainSeriesReport> {
    let values: Vec<f64> = chain.edges().iter().map(|e| s.get(e)).collect();
    let mut signs = Vec::with_capacity(n_terms);
    let mut exponents = Vec::with_capacity(n_terms);
    for n in 1..=n_terms {
        let row = chain_signs(chain, n)?;
        exponents.push(row.iter().zip(&values).map(|(&g, v)| f64::from(g) * v).sum());
        signs.push(row);
    }
    let terms: Vec<f64> = exponents.iter().map(|x: &f64| x.exp()).collect();
    let partial_sums = terms
        .iter()
        .scan(0.0, |acc, t| {
            *acc += t;
            Some(*acc)
        })
        .collect();
    Ok(ChainSeriesReport {
        chain: chain.edges().iter().map(|e| e.key()).collect(),
        signs,
        exponents,
        verdict: judge_series(&terms, cfg),
        terms,
        partial_sums,
        simple: chain.is_simple()?,
    })
}

/// Leaf-arc lengths of the chain in the image of the characteristic map of
/// `s`, anchored so that the first arc is `e^{s_1^1}`.
pub fn developed_leaf_lengths(s: &ShearMap, chain: &Chain, n_terms: usize) -> Result<Vec<f64>> {
    let h = CharacteristicMap::new(s)?;
    let first = (f64::from(chain_signs(chain, 1)?[0]) * s.get(&chain.edges()[0])).exp();
    leaf_lengths(&|x| h.eval(x), chain, n_terms, first)
}
