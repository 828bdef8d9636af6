use serde::Serialize;

use crate::error::{Error, Result};
use crate::farey::{fan, fan_range_within_depth, ExtendedRational};
use crate::shear::ShearMap;

/// Fan ratio from the shears `s[m-k..=m+k]` of consecutive fan edges,
/// centered at `center`.
pub fn fan_ratio_of(values: &[f64], center: usize, k: usize) -> f64 {
    let sm = values[center];
    let (mut num, mut den) = (0.0, 0.0);
    let (mut up, mut down) = (sm / 2.0, -sm / 2.0);
    for j in 0..=k {
        if j > 0 {
            up += values[center + j];
            down -= values[center - j];
        }
        num += up.exp();
        den += down.exp();
    }
    num / den
}

/// The ratio `s(p; m, k)` of the fan at `p`, with `s_n` the shear of the
/// fan edge of index `n`.
pub fn fan_ratio(s: &ShearMap, p: &ExtendedRational, m: i64, k: i64) -> Result<f64> {
    if k < 0 {
        return Err(Error::InvalidParameter(format!("window half-width k = {k} is negative")));
    }
    let values: Vec<f64> = fan(p, m - k, m + k).iter().map(|e| s.get(e)).collect();
    Ok(fan_ratio_of(&values, k as usize, k as usize))
}

/// A rectangle of fan windows: centers `m_lo..=m_hi`, half-widths `0..=k_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FanWindow {
    pub m_lo: i64,
    pub m_hi: i64,
    pub k_max: u32,
}

impl FanWindow {
    pub fn new(m_lo: i64, m_hi: i64, k_max: u32) -> Result<Self> {
        if m_lo > m_hi {
            return Err(Error::EmptyWindow);
        }
        Ok(FanWindow { m_lo, m_hi, k_max })
    }
}

/// Which windows of a fan to scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WindowSpec {
    /// Every `(m, k)` whose edges `e_{m-k}..e_{m+k}` all lie within depth.
    WithinDepth,
    /// The given rectangle; pairs reaching beyond depth read the default
    /// shear and set the `truncated` flag.
    Fixed(FanWindow),
    /// The given rectangle, dropping pairs that reach beyond depth (the
    /// report's `clamped` flag is set when any pair was dropped).
    Clamped(FanWindow),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FanRatio {
    pub m: i64,
    pub k: u32,
    pub ratio: f64,
}

/// All fan ratios of one fan over a window, with their extremes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FanWindowReport {
    pub tip: String,
    pub ratios: Vec<FanRatio>,
    /// Largest ratio in the window.
    pub sup: f64,
    /// Smallest ratio in the window.
    pub inf: f64,
    /// Window estimate of the distortion: the largest `max(r, 1/r)`.
    pub m_hat: f64,
    pub truncated: bool,
    pub clamped: bool,
}

/// Resolved scan of one fan: the `(m, k)` pairs of a window spec, each
/// needing the fan edges `m - k - reach ..= m + k + reach`.
pub(crate) struct FanScan {
    pub lo: i64,
    pub hi: i64,
    pub k_max: i64,
    pub reach: i64,
    spec: WindowSpec,
    depth_range: Option<(i64, i64)>,
}

impl FanScan {
    pub fn new(tip: &ExtendedRational, depth: u32, spec: WindowSpec, reach: i64) -> Result<Self> {
        let depth_range = fan_range_within_depth(tip, depth);
        let (lo, hi, k_max) = match spec {
            WindowSpec::WithinDepth => match depth_range {
                Some((lo, hi)) => (lo, hi, ((hi - lo) / 2).max(0)),
                None => return Err(Error::EmptyWindow),
            },
            WindowSpec::Fixed(w) | WindowSpec::Clamped(w) => (w.m_lo, w.m_hi, i64::from(w.k_max)),
        };
        Ok(FanScan { lo, hi, k_max, reach, spec, depth_range })
    }

    /// First and last fan index any pair can touch.
    pub fn span(&self) -> (i64, i64) {
        (self.lo - self.k_max - self.reach, self.hi + self.k_max + self.reach)
    }

    /// Evaluates `ratio(m, k)` over the window and summarizes.
    pub fn report(&self, tip: &ExtendedRational, ratio: impl Fn(i64, i64) -> f64) -> Result<FanWindowReport> {
        let inside = |n: i64| self.depth_range.is_some_and(|(a, b)| a <= n && n <= b);
        let mut ratios = Vec::new();
        let (mut truncated, mut clamped) = (false, false);
        for m in self.lo..=self.hi {
            for k in 0..=self.k_max {
                let reaches_out = !inside(m - k - self.reach) || !inside(m + k + self.reach);
                match self.spec {
                    WindowSpec::WithinDepth if reaches_out => continue,
                    WindowSpec::Clamped(_) if reaches_out => {
                        clamped = true;
                        continue;
                    }
                    _ => truncated |= reaches_out,
                }
                ratios.push(FanRatio { m, k: k as u32, ratio: ratio(m, k) });
            }
        }
        if ratios.is_empty() {
            return Err(Error::EmptyWindow);
        }
        let sup = ratios.iter().map(|r| r.ratio).fold(f64::NEG_INFINITY, f64::max);
        let inf = ratios.iter().map(|r| r.ratio).fold(f64::INFINITY, f64::min);
        Ok(FanWindowReport { tip: tip.to_string(), ratios, sup, inf, m_hat: sup.max(1.0 / inf), truncated, clamped })
    }
}

/// Scans the fan at `tip` over a window.
pub fn fan_window_report(s: &ShearMap, tip: &ExtendedRational, spec: WindowSpec) -> Result<FanWindowReport> {
    let scan = FanScan::new(tip, s.depth(), spec, 0)?;
    let (first, last) = scan.span();
    let values: Vec<f64> = fan(tip, first, last).iter().map(|e| s.get(e)).collect();
    scan.report(tip, |m, k| fan_ratio_of(&values, (m - first) as usize, k as usize))
}

/// Window estimates over several fans and their maximum.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QsReport {
    pub fans: Vec<FanWindowReport>,
    pub m_hat: f64,
}

/// Finite-window estimate of the quasisymmetry constant: the largest
/// `max(r, 1/r)` over all fan ratios of the given fans and windows.
pub fn qs_bound(s: &ShearMap, tips: &[ExtendedRational], spec: WindowSpec) -> Result<QsReport> {
    let mut fans = Vec::new();
    for tip in tips {
        match fan_window_report(s, tip, spec) {
            Ok(r) => fans.push(r),
            // A fan with no window inside the depth contributes nothing.
            Err(Error::EmptyWindow) if spec == WindowSpec::WithinDepth => {}
            Err(e) => return Err(e),
        }
    }
    if fans.is_empty() {
        return Err(Error::EmptyWindow);
    }
    let m_hat = fans.iter().map(|f| f.m_hat).fold(1.0, f64::max);
    Ok(QsReport { fans, m_hat })
}

/// Finite-window proximity of two shear maps: the largest `max(r, 1/r)` with
/// `r` the quotient of their fan ratios on a common window.
pub fn teich_proximity(s1: &ShearMap, s2: &ShearMap, tips: &[ExtendedRational], spec: WindowSpec) -> Result<f64> {
    let depth = s1.depth().min(s2.depth());
    let mut best: Option<f64> = None;
    for tip in tips {
        // Scan on the shallower depth so both maps cover the same pairs.
        let a = fan_window_report(&s1.at_depth(depth), tip, spec);
        let b = fan_window_report(&s2.at_depth(depth), tip, spec);
        let (a, b) = match (a, b) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(Error::EmptyWindow), _) | (_, Err(Error::EmptyWindow)) if spec == WindowSpec::WithinDepth => continue,
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        for (x, y) in a.ratios.iter().zip(&b.ratios) {
            let r = x.ratio / y.ratio;
            let v = r.max(1.0 / r);
            best = Some(best.map_or(v, |b: f64| b.max(v)));
        }
    }
    best.ok_or(Error::EmptyWindow)
}


/// Largest deviation `|s(p; m, k) - 1|` among windows whose triple
/// `(e_{m-k}, e_m, e_{m+k})` has generation at least `bucket`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetryBucket {
    pub bucket: u32,
    pub max_deviation: f64,
    pub windows: usize,
}

/// Scans every fan at the given tips over all windows within depth and
/// reports the maximal deviation of the fan ratios from 1 per generation
/// bucket.
pub fn symmetric_diagnostic(s: &ShearMap, tips: &[ExtendedRational], buckets: &[u32]) -> Vec<SymmetryBucket> {
    let mut out: Vec<SymmetryBucket> =
        buckets.iter().map(|&b| SymmetryBucket { bucket: b, max_deviation: 0.0, windows: 0 }).collect();
    for tip in tips {
        let Some((lo, hi)) = fan_range_within_depth(tip, s.depth()) else { continue };
        let edges = fan(tip, lo, hi);
        let values: Vec<f64> = edges.iter().map(|e| s.get(e)).collect();
        let gens: Vec<u32> = edges.iter().map(|e| e.generation()).collect();
        let n = edges.len();
        for c in 0..n {
            for k in 0..=c.min(n - 1 - c) {
                let g = gens[c - k].min(gens[c]).min(gens[c + k]);
                let dev = (fan_ratio_of(&values, c, k) - 1.0).abs();
                for b in out.iter_mut().filter(|b| g >= b.bucket) {
                    b.windows += 1;
                    b.max_deviation = b.max_deviation.max(dev);
                }
            }
        }
    }
    out
}
