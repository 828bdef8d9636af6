use serde::Serialize;

use super::decoration::horocyclic_length;
use super::map::LambdaMap;
use crate::classify::{judge_series, FanScan, FanWindowReport, SeriesVerdict, VerdictConfig, WindowSpec};
use crate::error::{Error, Result};
use crate::farey::{fan, fan_index, Chain, ExtendedRational, FareyEdge};

/// Arc length of the decorating horocycle at `p` between the fan edges `e1`
/// and `e2`: the sum of its arcs in the triangles of the wedge.
pub fn wedge_alpha(lambda: &LambdaMap, p: &ExtendedRational, e1: &FareyEdge, e2: &FareyEdge) -> Result<f64> {
    let (i, j) = (fan_index(p, e1)?, fan_index(p, e2)?);
    let (lo, hi) = (i.min(j), i.max(j));
    if lo == hi {
        return Err(Error::Degenerate(format!("empty wedge at {p}")));
    }
    alphas(lambda, p, lo, hi).map(|a| a.iter().sum())
}

/// `α_j` for the triangles between fan edges `j` and `j + 1`, `lo ≤ j < hi`.
fn alphas(lambda: &LambdaMap, p: &ExtendedRational, lo: i64, hi: i64) -> Result<Vec<f64>> {
    let edges = fan(p, lo, hi);
    edges
        .windows(2)
        .map(|w| {
            let third = FareyEdge::new(w[0].other(p).expect("fan").clone(), w[1].other(p).expect("fan").clone())?;
            horocyclic_length(lambda.get(&w[0]), lambda.get(&w[1]), lambda.get(&third))
        })
        .collect()
}

fn e_ratio_of(alpha: &[f64], center: usize, k: usize) -> f64 {
    // alpha[j] belongs to the wedge (e_j, e_{j+1}); center indexes e_m.
    let num: f64 = alpha[center..=center + k].iter().sum();
    let den: f64 = alpha[center - k - 1..center].iter().sum();
    num / den
}

/// Ratio of the horocyclic arc sums on either side of `e_m` in the fan at
/// `p`, `k + 1` triangles each.
pub fn thm_e_ratio(lambda: &LambdaMap, p: &ExtendedRational, m: i64, k: i64) -> Result<f64> {
    if k < 0 {
        return Err(Error::InvalidParameter(format!("window half-width k = {k} is negative")));
    }
    let a = alphas(lambda, p, m - k - 1, m + k + 1)?;
    Ok(e_ratio_of(&a, (k + 1) as usize, k as usize))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThmEReport {
    pub fans: Vec<FanWindowReport>,
    /// Window sup of `max(r, 1/r)` over all fans.
    pub k_hat: f64,
}

/// Window scan of [`thm_e_ratio`] over the fans at `tips`.
pub fn thm_e_bound(lambda: &LambdaMap, tips: &[ExtendedRational], spec: WindowSpec) -> Result<ThmEReport> {
    let mut fans = Vec::new();
    for tip in tips {
        let scan = match FanScan::new(tip, lambda.depth(), spec, 1) {
            Ok(s) => s,
            Err(Error::EmptyWindow) if spec == WindowSpec::WithinDepth => continue,
            Err(e) => return Err(e),
        };
        let (first, last) = scan.span();
        let a = alphas(lambda, tip, first, last)?;
        match scan.report(tip, |m, k| e_ratio_of(&a, (m - first) as usize, k as usize)) {
            Ok(r) => fans.push(r),
            Err(Error::EmptyWindow) if spec == WindowSpec::WithinDepth => {}
            Err(e) => return Err(e),
        }
    }
    if fans.is_empty() {
        return Err(Error::EmptyWindow);
    }
    let k_hat = fans.iter().map(|f| f.m_hat).fold(1.0, f64::max);
    Ok(ThmEReport { fans, k_hat })
}

/// How the first leaf arc is fixed.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum LeafAnchor {
    /// `l_1 = λ_1^{-1/2} α_1`: the leaf starts on the decorating horocycle of
    /// the pivot before `e_1`.
    Lambda,
    /// `l_1` given.
    FirstTerm(f64),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThmDReport {
    pub chain: Vec<String>,
    /// `δ_n = -½ ln λ(e_n)`.
    pub deltas: Vec<f64>,
    /// Signed distance of the leaf outside the decorating horocycle in wedge `n`.
    pub d: Vec<f64>,
    pub alphas: Vec<f64>,
    /// `e^{d_n} α_n`.
    pub terms: Vec<f64>,
    pub partial_sums: Vec<f64>,
    pub simple: bool,
    /// Whether some lambda length used was the map's default.
    pub defaulted: bool,
    #[serde(flatten)]
    pub verdict: SeriesVerdict,
}

/// Leaf arcs `e^{d_n} α_n` along a chain, where `d_n` is kept across
/// wedges with the same pivot and becomes `δ_{n+1} - d_n` across a change
/// of pivot. On zig-zag chains with the `Lambda` anchor, `e^{d_n}` is the
/// alternating product `λ_n^{-1/2} λ_{n-1}^{1/2} ⋯`.
pub fn thm_d_series(lambda: &LambdaMap, chain: &Chain, n_terms: usize, anchor: LeafAnchor) -> Result<ThmDReport> {
    thm_d_series_with(lambda, chain, n_terms, anchor, &VerdictConfig::default())
}

pub fn thm_d_series_with(
    lambda: &LambdaMap,
    chain: &Chain,
    n_terms: usize,
    anchor: LeafAnchor,
    cfg: &VerdictConfig,
) -> Result<ThmDReport> {
    if n_terms == 0 || chain.len() < n_terms + 1 {
        return Err(Error::OutOfRange(format!(
            "{n_terms} terms need a chain of {} edges, got {}",
            n_terms + 1,
            chain.len()
        )));
    }
    let edges = chain.edges();
    let flags = chain.fan_change_flags();
    let deltas: Vec<f64> = edges[..n_terms].iter().map(|e| -0.5 * lambda.get(e).ln()).collect();
    let alphas = (0..n_terms)
        .map(|i| wedge_alpha(lambda, chain.pivot(i), &edges[i], &edges[i + 1]))
        .collect::<Result<Vec<f64>>>()?;
    let mut d = Vec::with_capacity(n_terms);
    d.push(match anchor {
        LeafAnchor::Lambda => deltas[0],
        LeafAnchor::FirstTerm(t) if t > 0.0 => (t / alphas[0]).ln(),
        LeafAnchor::FirstTerm(t) => return Err(Error::InvalidParameter(format!("first term {t} must be positive"))),
    });
    for n in 1..n_terms {
        let prev = d[n - 1];
        d.push(if flags[n - 1] { deltas[n] - prev } else { prev });
    }
    let terms: Vec<f64> = d.iter().zip(&alphas).map(|(x, a)| x.exp() * a).collect();
    let partial_sums = terms
        .iter()
        .scan(0.0, |acc, t| {
            *acc += t;
            Some(*acc)
        })
        .collect();
    let defaulted = edges[..=n_terms].iter().any(|e| !lambda.covers(e));
    Ok(ThmDReport {
        chain: edges.iter().map(|e| e.key()).collect(),
        deltas,
        d,
        alphas,
        verdict: judge_series(&terms, cfg),
        terms,
        partial_sums,
        simple: chain.is_simple()?,
        defaulted,
    })
}
