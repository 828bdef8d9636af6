//! Finite-window diagnostics on shear maps: fan ratios and their suprema,
//! the symmetric decay profile, the proximity of two shear maps, and the
//! signed chain series with its leaf-length interpretation.
//!
//! Every supremum is taken over an explicit window and every verdict is
//! evidence from finitely many terms.

mod chain;
mod fan;
mod leaf;

pub use chain::{
    chain_series, chain_series_with, chain_signs, developed_leaf_lengths, judge_series, ChainSeriesReport,
    SeriesVerdict, Verdict, VerdictConfig,
};
pub use fan::{
    fan_ratio, fan_ratio_of, fan_window_report, qs_bound, symmetric_diagnostic, teich_proximity, FanRatio,
    FanWindow, FanWindowReport, QsReport, SymmetryBucket, WindowSpec,
};
pub use leaf::leaf_lengths;
pub(crate) use fan::FanScan;
