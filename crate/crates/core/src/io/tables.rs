use super::number::{format_ext, format_f64};
use crate::classify::{ChainSeriesReport, FanWindowReport, SymmetryBucket};
use crate::error::Result;
use crate::farey::{ExtendedRational, Tessellation};
use crate::geometry::ExtReal;
use crate::lambda::{DecoratedRealization, LambdaMap, ThmDReport};
use crate::shear::ShearMap;

fn table<I, R>(header: &[&str], rows: I) -> Result<String>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("CSV is UTF-8"))
}

/// Edges, then triangles, each in (generation, key) order. Triangles are
/// keyed by their vertices and listed with their dual-tree distance.
pub fn tessellation_csv(tess: &Tessellation) -> Result<String> {
    let edges = tess.edges().iter().map(|(e, g)| vec!["edge".into(), e.key(), g.to_string()]);
    let mut tris: Vec<(u32, String)> = tess
        .triangles()
        .iter()
        .filter(|r| r.distance <= tess.depth())
        .map(|r| {
            let mut v = r.triangle.vertices().to_vec();
            v.sort_by(|a, b| a.canonical_cmp(b));
            (r.distance, v.iter().map(ToString::to_string).collect::<Vec<_>>().join("|"))
        })
        .collect();
    tris.sort();
    let tris = tris.into_iter().map(|(d, k)| vec!["triangle".into(), k, d.to_string()]);
    table(&["kind", "key", "generation"], edges.chain(tris))
}

pub fn shear_csv(s: &ShearMap) -> Result<String> {
    table(&["key", "generation", "s"], s.iter().map(|(e, v)| vec![e.key(), e.generation().to_string(), format_f64(v)]))
}

pub fn lambda_csv(l: &LambdaMap) -> Result<String> {
    table(
        &["key", "generation", "lambda"],
        l.iter().map(|(e, v)| vec![e.key(), e.generation().to_string(), format_f64(v)]),
    )
}

pub fn char_map_csv(rows: &[(ExtendedRational, ExtReal)]) -> Result<String> {
    table(&["vertex", "image"], rows.iter().map(|(v, x)| vec![v.to_string(), format_ext(*x)]))
}

pub fn realization_csv(r: &DecoratedRealization) -> Result<String> {
    table(
        &["vertex", "position", "size"],
        r.table().into_iter().map(|(v, x, d)| vec![v.to_string(), format_ext(x), format_f64(d)]),
    )
}

pub fn fan_reports_csv(fans: &[FanWindowReport]) -> Result<String> {
    table(
        &["tip", "m", "k", "ratio"],
        fans.iter().flat_map(|f| {
            f.ratios.iter().map(|r| vec![f.tip.clone(), r.m.to_string(), r.k.to_string(), format_f64(r.ratio)])
        }),
    )
}

pub fn symmetry_csv(buckets: &[SymmetryBucket]) -> Result<String> {
    table(
        &["bucket", "max_deviation", "windows"],
        buckets.iter().map(|b| vec![b.bucket.to_string(), format_f64(b.max_deviation), b.windows.to_string()]),
    )
}

pub fn chain_series_csv(r: &ChainSeriesReport) -> Result<String> {
    table(
        &["n", "edge", "exponent", "term", "partial_sum"],
        (0..r.terms.len()).map(|i| {
            vec![
                (i + 1).to_string(),
                r.chain[i].clone(),
                format_f64(r.exponents[i]),
                format_f64(r.terms[i]),
                format_f64(r.partial_sums[i]),
            ]
        }),
    )
}

pub fn thm_d_csv(r: &ThmDReport) -> Result<String> {
    table(
        &["n", "edge", "delta", "d", "alpha", "term", "partial_sum"],
        (0..r.terms.len()).map(|i| {
            vec![
                (i + 1).to_string(),
                r.chain[i].clone(),
                format_f64(r.deltas[i]),
                format_f64(r.d[i]),
                format_f64(r.alphas[i]),
                format_f64(r.terms[i]),
                format_f64(r.partial_sums[i]),
            ]
        }),
    )
}
