use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use farey_shear::classify::{
    chain_series, qs_bound, symmetric_diagnostic, teich_proximity, FanWindow, FanWindowReport, WindowSpec,
};
use farey_shear::farey::{fan_chain, parse_chain, Chain, ExtendedRational, Tessellation};
use farey_shear::io;
use farey_shear::lambda::{develop, pinched_check, shear_from_lambda, thm_d_series, thm_e_bound, LambdaMap, LeafAnchor};
use farey_shear::render::{render_svg, RenderSpec};
use farey_shear::shear::{shear_from_homeo, BuiltinHomeo, CharacteristicMap, ShearMap, VertexMap};

use crate::args::{ChainArgs, Command, Format, LambdaCommand, Output, Window};

pub fn run(cmd: Command) -> Result<()> {
    match cmd {
        Command::Tessellate { depth, output } => {
            if output.format == Some(Format::Json) {
                bail!("tessellate writes csv only");
            }
            emit(&output, &io::tessellation_csv(&Tessellation::shared(depth))?)
        }
        Command::ShearFromMap { family, params, depth, output } => {
            let params = split(&params)
                .map(|p| p.parse::<f64>().with_context(|| format!("bad parameter `{p}`")))
                .collect::<Result<Vec<_>>>()?;
            let h = BuiltinHomeo::new(&family, &params)?;
            let s = shear_from_homeo(&h, depth)?;
            emit(&output, &shear_out(&s, &output)?)
        }
        Command::CharMap { shear, vertices, depth, output } => {
            let s = load_shear(&shear, depth)?;
            let h = CharacteristicMap::new(&s)?;
            let rows = match vertices {
                Some(list) => split(&list)
                    .map(|v| {
                        let v: ExtendedRational = v.parse()?;
                        let x = h.eval(&v)?;
                        Ok((v, x))
                    })
                    .collect::<Result<Vec<_>>>()?,
                None => h.table().into_iter().map(|(v, _, x)| (v, x)).collect(),
            };
            match format(&output, Format::Csv) {
                Format::Csv => emit(&output, &io::char_map_csv(&rows)?),
                Format::Json => {
                    let map: Vec<_> = rows.iter().map(|(v, x)| (v.to_string(), x.finite())).collect();
                    emit(&output, &io::to_json(&map)?)
                }
            }
        }
        Command::QsCheck { shear, depth, window, output } => {
            let s = load_shear(&shear, depth)?;
            let (tips, spec) = window_spec(&window)?;
            let report = qs_bound(&s, &tips, spec)?;
            warn_clamped(&report.fans);
            let body = match format(&output, Format::Csv) {
                Format::Csv => io::fan_reports_csv(&report.fans)?,
                Format::Json => io::to_json(&report)?,
            };
            emit(&output, &body)?;
            summary(
                &output,
                &format!("M_hat = {} ({}, depth {})", io::format_f64(report.m_hat), describe(&spec, &report.fans), s.depth()),
            );
            Ok(())
        }
        Command::SymCheck { shear, depth, window, buckets, output } => {
            let s = load_shear(&shear, depth)?;
            let (tips, _) = window_spec(&window)?;
            let buckets = split(&buckets)
                .map(|b| b.parse::<u32>().with_context(|| format!("bad bucket `{b}`")))
                .collect::<Result<Vec<_>>>()?;
            let report = symmetric_diagnostic(&s, &tips, &buckets);
            let body = match format(&output, Format::Csv) {
                Format::Csv => io::symmetry_csv(&report)?,
                Format::Json => io::to_json(&report)?,
            };
            emit(&output, &body)?;
            summary(&output, &format!("all windows within depth {}, tips {}", s.depth(), window.tips));
            Ok(())
        }
        Command::HomeoCheck { shear, depth, chain, output } => {
            let s = load_shear(&shear, depth)?;
            let (c, n) = chain_of(&chain)?;
            let report = chain_series(&s, &c, n)?;
            let body = match format(&output, Format::Csv) {
                Format::Csv => io::chain_series_csv(&report)?,
                Format::Json => io::to_json(&report)?,
            };
            emit(&output, &body)?;
            summary(&output, &format!("{} after {n} terms (depth {}, simple chain: {})", report.verdict.verdict, s.depth(), report.simple));
            Ok(())
        }
        Command::Lambda { command } => run_lambda(command),
        Command::Distance { a, b, depth, window, output } => {
            let (s1, s2) = (load_shear(&a, depth)?, load_shear(&b, depth)?);
            let (tips, spec) = window_spec(&window)?;
            let d = teich_proximity(&s1, &s2, &tips, spec)?;
            let depth = s1.depth().min(s2.depth());
            let body = match format(&output, Format::Csv) {
                Format::Csv => format!("proximity,depth\n{},{depth}\n", io::format_f64(d)),
                Format::Json => io::to_json(&serde_json::json!({ "proximity": d, "depth": depth }))?,
            };
            emit(&output, &body)
        }
        Command::Render { input, lambda, depth, model, stroke_width, size, highlight, out } => {
            let text = read(&input)?;
            let with = |file_depth: u32| depth.unwrap_or(file_depth);
            let mut spec = RenderSpec::new(0);
            spec.model = model.parse()?;
            spec.stroke_width = stroke_width;
            spec.size = size;
            spec.highlight = highlight.as_deref().map(|h| split(h).map(str::to_string).collect()).unwrap_or_default();
            let svg = if lambda {
                let l = io::read_lambda(&text).with_context(|| input.display().to_string())?;
                spec.depth = with(l.depth());
                render_svg(&develop(&l.at_depth(spec.depth), spec.depth)?, &spec)?
            } else {
                let s = io::read_shear(&text).with_context(|| input.display().to_string())?;
                spec.depth = with(s.depth());
                render_svg(&CharacteristicMap::new(&s.at_depth(spec.depth))?, &spec)?
            };
            emit(&Output { format: None, out }, &svg)
        }
    }
}

fn run_lambda(cmd: LambdaCommand) -> Result<()> {
    match cmd {
        LambdaCommand::ToShear { lambda, depth, output } => {
            let l = load_lambda(&lambda, depth)?;
            let s = shear_from_lambda(&l, l.depth())?;
            emit(&output, &shear_out(&s, &output)?)
        }
        LambdaCommand::CheckE { lambda, depth, window, pinched, output } => {
            let l = load_lambda(&lambda, depth)?;
            let (tips, spec) = window_spec(&window)?;
            let report = thm_e_bound(&l, &tips, spec)?;
            warn_clamped(&report.fans);
            let body = match format(&output, Format::Csv) {
                Format::Csv => io::fan_reports_csv(&report.fans)?,
                Format::Json => io::to_json(&report)?,
            };
            emit(&output, &body)?;
            summary(
                &output,
                &format!("K_hat = {} ({}, depth {})", io::format_f64(report.k_hat), describe(&spec, &report.fans), l.depth()),
            );
            if let Some(k) = pinched {
                let p = pinched_check(&l, k);
                summary(&output, &format!("pinched with K = {k}: {} ({} violations)", p.pinched, p.violations.len()));
            }
            Ok(())
        }
        LambdaCommand::SeriesD { lambda, depth, chain, first_term, output } => {
            let l = load_lambda(&lambda, depth)?;
            let (c, n) = chain_of(&chain)?;
            let anchor = first_term.map_or(LeafAnchor::Lambda, LeafAnchor::FirstTerm);
            let report = thm_d_series(&l, &c, n, anchor)?;
            let body = match format(&output, Format::Csv) {
                Format::Csv => io::thm_d_csv(&report)?,
                Format::Json => io::to_json(&report)?,
            };
            emit(&output, &body)?;
            summary(&output, &format!("{} after {n} terms (depth {})", report.verdict.verdict, l.depth()));
            Ok(())
        }
        LambdaCommand::Develop { lambda, depth, output } => {
            let l = load_lambda(&lambda, depth)?;
            let r = develop(&l, l.depth())?;
            if !r.defaulted().is_empty() {
                eprintln!("warning: {} edges used the default lambda length", r.defaulted().len());
            }
            if output.format == Some(Format::Json) {
                bail!("develop writes csv only");
            }
            emit(&output, &io::realization_csv(&r)?)
        }
    }
}

fn split(list: &str) -> impl Iterator<Item = &str> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty())
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_shear(path: &Path, depth: Option<u32>) -> Result<ShearMap> {
    let s = io::read_shear(&read(path)?).with_context(|| path.display().to_string())?;
    Ok(match depth {
        Some(d) => s.at_depth(d),
        None => s,
    })
}

fn load_lambda(path: &Path, depth: Option<u32>) -> Result<LambdaMap> {
    let l = io::read_lambda(&read(path)?).with_context(|| path.display().to_string())?;
    Ok(match depth {
        Some(d) => l.at_depth(d),
        None => l,
    })
}

fn format(output: &Output, default: Format) -> Format {
    output.format.unwrap_or(default)
}

fn shear_out(s: &ShearMap, output: &Output) -> Result<String> {
    Ok(match format(output, Format::Json) {
        Format::Json => io::write_shear(s)?,
        Format::Csv => io::shear_csv(s)?,
    })
}

fn emit(output: &Output, body: &str) -> Result<()> {
    match &output.out {
        Some(path) => fs::write(path, body).with_context(|| format!("cannot write {}", path.display())),
        None => {
            std::io::stdout().write_all(body.as_bytes())?;
            Ok(())
        }
    }
}

/// One-line result: on standard output when the table went to a file, else
/// on standard error.
fn summary(output: &Output, line: &str) {
    if output.out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

fn window_spec(w: &Window) -> Result<(Vec<ExtendedRational>, WindowSpec)> {
    let tips = split(&w.tips).map(|t| t.parse::<ExtendedRational>()).collect::<farey_shear::Result<Vec<_>>>()?;
    if tips.is_empty() {
        bail!("no fan tips given");
    }
    let spec = match (&w.window_m, w.window_k) {
        (Some(m), Some(k)) => {
            let (lo, hi) = m.split_once(':').with_context(|| format!("--window-m expects LO:HI, got `{m}`"))?;
            let lo = lo.trim().parse().with_context(|| format!("bad window start `{lo}`"))?;
            let hi = hi.trim().parse().with_context(|| format!("bad window end `{hi}`"))?;
            WindowSpec::Clamped(FanWindow::new(lo, hi, k)?)
        }
        _ => WindowSpec::WithinDepth,
    };
    Ok((tips, spec))
}

fn describe(spec: &WindowSpec, fans: &[FanWindowReport]) -> String {
    let pairs: usize = fans.iter().map(|f| f.ratios.len()).sum();
    match spec {
        WindowSpec::WithinDepth => format!("all windows within depth, {pairs} ratios"),
        WindowSpec::Fixed(w) | WindowSpec::Clamped(w) => {
            let clamped = if fans.iter().any(|f| f.clamped) { ", clamped to depth" } else { "" };
            format!("m in {}..={}, k <= {}{clamped}, {pairs} ratios", w.m_lo, w.m_hi, w.k_max)
        }
    }
}

fn warn_clamped(fans: &[FanWindowReport]) {
    for f in fans.iter().filter(|f| f.clamped) {
        eprintln!("warning: window at tip {} exceeds the depth; clamped to {} ratios", f.tip, f.ratios.len());
    }
}

fn chain_of(args: &ChainArgs) -> Result<(Chain, usize)> {
    let chain = match (&args.chain, &args.fan) {
        (Some(keys), None) => parse_chain(keys)?,
        (None, Some(tip)) => {
            let n = args.terms.map_or(41, |t| t + 1);
            fan_chain(&tip.parse()?, args.start, args.step, n)
        }
        _ => bail!("give --chain or --fan"),
    };
    let n = args.terms.unwrap_or(chain.len().saturating_sub(1));
    if n == 0 {
        bail!("the chain needs at least two edges");
    }
    Ok((chain, n))
}
