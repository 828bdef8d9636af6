//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use farey_shear::classify::{
    chain_series, developed_leaf_lengths, fan_ratio, qs_bound, teich_proximity, FanWindow, Verdict, WindowSpec,
};
use farey_shear::farey::{fan_chain, fan_walk, Chain, ExtendedRational, FareyEdge, IntegerMoebius, Tessellation};
use farey_shear::geometry::{wedge_horocyclic_length, ExtReal, Geodesic, Horocycle, MoebiusMap};
use farey_shear::lambda::{
    develop, horocyclic_length_formula, lambda_from_decoration, shear_from_lambda, thm_e_bound, LambdaMap,
};
use farey_shear::shear::{shear_from_homeo, BuiltinHomeo, CharacteristicMap, PostComposed, ShearMap};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn inf() -> ExtendedRational {
    ExtendedRational::Infinity
}

fn random_moebius(rng: &mut ChaCha8Rng) -> MoebiusMap {
    loop {
        let v: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-2.0..2.0));
        if v[0] * v[3] - v[1] * v[2] > 0.5 {
            return MoebiusMap::new(v[0], v[1], v[2], v[3]).unwrap();
        }
    }
}

fn random_builtin(rng: &mut ChaCha8Rng) -> BuiltinHomeo {
    match rng.gen_range(0..4) {
        0 => BuiltinHomeo::Moebius(random_moebius(rng)),
        1 => BuiltinHomeo::PiecewiseLinear(rng.gen_range(0.25..4.0)),
        2 => BuiltinHomeo::Power(rng.gen_range(0.5..2.0)),
        _ => BuiltinHomeo::FanEarthquake(rng.gen_range(-0.5..0.5)),
    }
}

/// A random simple chain of `len` edges within `depth`.
fn random_chain(rng: &mut ChaCha8Rng, depth: u32, len: usize) -> Chain {
    let tess = Tessellation::shared(depth);
    let starts: Vec<&FareyEdge> = tess.edges_up_to(3).collect();
    'retry: loop {
        let start = starts[rng.gen_range(0..starts.len())].clone();
        let mut moves = Vec::new();
        for _ in 1..len {
            moves.push((rng.gen_bool(0.5), if rng.gen_bool(0.5) { 1 } else { -1 }));
            match fan_walk(&start, &moves) {
                Ok(c) if c.edges().last().unwrap().generation() <= depth => {}
                _ => continue 'retry,
            }
        }
        let c = fan_walk(&start, &moves).unwrap();
        if c.is_simple().unwrap() {
            return c;
        }
    }
}

/// Continued-fraction recovery of the simplest rational within `tol`.
fn rationalize(x: f64, tol: f64) -> ExtendedRational {
    let (mut h0, mut h1, mut k0, mut k1) = (0i128, 1i128, 1i128, 0i128);
    let mut y = x;
    loop {
        let a = y.floor();
        let (h2, k2) = (a as i128 * h1 + h0, a as i128 * k1 + k0);
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (x - h1 as f64 / k1 as f64).abs() <= tol || k1 > 1 << 40 {
            return ExtendedRational::new(h1, k1).unwrap();
        }
        y = 1.0 / (y - a);
    }
}

fn round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let start = Instant::now();
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let s = ShearMap::from_fn(10, |_| rng.gen_range(-1.0..=1.0));
        let h = CharacteristicMap::new(&s).unwrap();
        worst = worst.max(shear_from_homeo(&h, 10).unwrap().max_abs_diff(&s));
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(worst < 1e-9 && secs < 60.0, format!("50 maps at depth 10, max error {worst:.2e}, {secs:.1} s"))
}

fn moebius_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let h = random_builtin(&mut rng);
        let a = random_moebius(&mut rng);
        let s1 = shear_from_homeo(&h, 10).unwrap();
        let s2 = shear_from_homeo(&PostComposed { outer: a, inner: h }, 10).unwrap();
        worst = worst.max(s1.max_abs_diff(&s2));
    }
    outcome(worst < 1e-9, format!("20 pairs at depth 10, max difference {worst:.2e}"))
}

/// Whether `(a, b; c, d) = -1`, in exact arithmetic. Each point occurs in
/// one factor above and one below, so a point at infinity drops out.
fn harmonic(pts: [&ExtendedRational; 4]) -> bool {
    let [a, b, c, d] = pts;
    let diff = |x: &ExtendedRational, y: &ExtendedRational| match (x.as_rational(), y.as_rational()) {
        (Some(x), Some(y)) => Some(x - y),
        _ => None,
    };
    let num = [diff(c, a), diff(d, b)];
    let den = [diff(c, b), diff(d, a)];
    let prod = |fs: [Option<BigRational>; 2]| fs.into_iter().flatten().reduce(|a, b| a * b);
    match (prod(num), prod(den)) {
        (Some(n), Some(d)) => n == -d,
        _ => false,
    }
}

fn farey_zero_law() -> Outcome {
    let depth = 12;
    let tess = Tessellation::shared(depth);
    let expected = 3 * ((1usize << (depth + 1)) - 1);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    // Exact: integer Möbius maps send every Farey quadrilateral to a
    // harmonic one.
    let t = IntegerMoebius::translation(1);
    let s = IntegerMoebius::new(BigInt::from(0), BigInt::from(-1), BigInt::from(1), BigInt::from(0)).unwrap();
    let mut exact_ok = true;
    for _ in 0..3 {
        let mut g = IntegerMoebius::identity();
        for _ in 0..8 {
            g = g.compose(if rng.gen_bool(0.5) { &t } else { &s });
        }
        for (e, _) in tess.edges() {
            let (m, n) = e.flanking_vertices();
            let img = [e.a(), e.b(), &m, &n].map(|v| g.apply(v));
            exact_ok &= harmonic([&img[0], &img[1], &img[2], &img[3]]);
        }
    }
    let mut worst = 0.0f64;
    let mut covered = true;
    for _ in 0..5 {
        let m = BuiltinHomeo::Moebius(random_moebius(&mut rng));
        let sm = shear_from_homeo(&m, depth).unwrap();
        covered &= sm.len() == expected;
        worst = worst.max(sm.iter().map(|(_, v)| v.abs()).fold(0.0, f64::max));
    }
    outcome(
        exact_ok && covered && worst < 1e-12,
        format!("depth 12 ({expected} edges): exact harmonic images {exact_ok}, max |s| over 5 real maps {worst:.2e}"),
    )
}

fn fan_ratio_closed_form() -> Outcome {
    let mut worst = 0.0f64;
    for c in [0.5, -0.5, 1.0, -1.0] {
        let s = ShearMap::fan_constant(&inf(), c, 80);
        for k in 0..=30 {
            for m in -3..=3 {
                let r = fan_ratio(&s, &inf(), m, k).unwrap();
                let want = ((k + 1) as f64 * c).exp();
                worst = worst.max((r - want).abs() / want);
            }
        }
    }
    outcome(worst < 1e-12, format!("c in {{±0.5, ±1}}, k <= 30, max relative error {worst:.2e}"))
}

fn series_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let depth = rng.gen_range(6..=8);
        let len = rng.gen_range(3..=10);
        let c = random_chain(&mut rng, depth, len);
        let s = ShearMap::from_fn(depth, |_| rng.gen_range(-1.0..=1.0));
        let n = c.len() - 1;
        let terms = chain_series(&s, &c, n).unwrap().terms;
        let geo = developed_leaf_lengths(&s, &c, n).unwrap();
        for (t, g) in terms.iter().zip(&geo) {
            worst = worst.max((t - g).abs() / g);
        }
    }
    let c = fan_chain(&inf(), 1, 1, 8);
    let mut s = ShearMap::zero(8);
    for (n, e) in c.edges().iter().enumerate() {
        s.insert(e.clone(), -((n + 1) as f64)).unwrap();
    }
    let sum6 = chain_series(&s, &c, 6).unwrap().partial_sums[5];
    outcome(
        worst < 1e-8 && (sum6 - 0.420191).abs() < 1e-6,
        format!("20 random chains, max relative error {worst:.2e}; sum of e^(-n(n+1)/2) to N = 6 is {sum6:.7}"),
    )
}

fn non_homeomorphism() -> Outcome {
    // The shear map of the fan earthquake is constant on the fan at ∞; check
    // that at depth 8, then use the constant map deep enough for 40 terms.
    let c = 0.5;
    let s8 = shear_from_homeo(&BuiltinHomeo::FanEarthquake(c), 8).unwrap();
    let agree = s8.max_abs_diff(&ShearMap::fan_constant(&inf(), c, 8));
    let down = fan_chain(&inf(), 0, -1, 41);
    let quake = chain_series(&ShearMap::fan_constant(&inf(), c, 41), &down, 40).unwrap().verdict.verdict;
    let s0 = shear_from_homeo(&BuiltinHomeo::FanEarthquake(0.0), 8).unwrap();
    let flat = chain_series(&ShearMap::fan_constant(&inf(), 0.0, 41), &down, 40).unwrap().verdict.verdict;
    outcome(
        agree < 1e-9 && s0.max_abs_diff(&ShearMap::zero(8)) < 1e-9
            && quake == Verdict::ConvergingEvidence
            && flat == Verdict::DivergingEvidence,
        format!("fan_earthquake(0.5): {quake}; fan_earthquake(0): {flat}; shear vs fan constant {agree:.1e}"),
    )
}

fn horocyclic_formula() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut worst, mut worst_geometric) = (0.0f64, 0.0f64);
    for _ in 0..100 {
        let mut x: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-5.0..5.0));
        x.sort_by(f64::total_cmp);
        let h: [Horocycle; 3] =
            std::array::from_fn(|i| Horocycle::new(ExtReal::Finite(x[i]), rng.gen_range(-2.0f64..1.0).exp()).unwrap());
        let lam = |i: usize, j: usize| lambda_from_decoration(&h[i], &h[j]).unwrap();
        let p = |i: usize| ExtReal::Finite(x[i]);
        // The arc at vertex 2 between the sides to 0 and 1.
        let alpha = wedge_horocyclic_length(&h[2], Geodesic(p(2), p(0)), Geodesic(p(2), p(1))).unwrap();
        let (l1, l2, l3) = (lam(2, 0), lam(2, 1), lam(0, 1));
        let formula = horocyclic_length_formula(l1, l2, l3).unwrap();
        worst = worst.max((alpha - formula).abs() / alpha);
        let geometric = (l1 * l2 / l3).powf(0.25);
        worst_geometric = worst_geometric.max((alpha - geometric).abs() / alpha);
    }
    outcome(
        worst < 1e-9,
        format!(
            "100 triangles: 2λ3/(λ1λ2) max relative error {worst:.2e}; (λ1λ2/λ3)^(1/4) max relative error {worst_geometric:.2e}"
        ),
    )
}

fn ford_decoration() -> Outcome {
    let depth = 10;
    let tess = Tessellation::shared(depth);
    let r = develop(&LambdaMap::ford(depth), depth).unwrap();
    let mut exact = true;
    for (v, _) in tess.vertices() {
        exact &= match r.position(v).unwrap() {
            ExtReal::Infinity => v.is_infinite(),
            ExtReal::Finite(x) => &rationalize(x, 1e-12) == v,
        };
    }
    let lam = tess.edges().iter().map(|(e, _)| (r.measured_lambda(e).unwrap() - 1.0).abs()).fold(0.0, f64::max);
    let tips: Vec<ExtendedRational> = tess.vertices_up_to(3).cloned().collect();
    let e = thm_e_bound(&LambdaMap::ford(depth), &tips, WindowSpec::WithinDepth).unwrap();
    let ratios = e.fans.iter().flat_map(|f| &f.ratios).map(|r| (r.ratio - 1.0).abs()).fold(0.0, f64::max);
    outcome(
        exact && lam < 1e-12 && ratios == 0.0,
        format!("depth 10: positions are the Farey vertices {exact}, max |λ - 1| {lam:.1e}, max |ratio - 1| {ratios:.1e}"),
    )
}

fn lambda_shear_bridge() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let depth = 8;
    let tips: Vec<ExtendedRational> = ["1/0", "0/1", "1/1", "1/2"].iter().map(|t| t.parse().unwrap()).collect();
    let window = WindowSpec::Clamped(FanWindow::new(-5, 5, 5).unwrap());
    let (mut worst, mut count) = (0.0f64, 0);
    for _ in 0..10 {
        let r = 2f64.ln();
        let l = LambdaMap::from_fn(depth, |_| rng.gen_range(-r..=r).exp()).unwrap();
        let s = shear_from_lambda(&l, depth).unwrap();
        for f in thm_e_bound(&l, &tips, window).unwrap().fans {
            let tip: ExtendedRational = f.tip.parse().unwrap();
            for x in &f.ratios {
                let y = fan_ratio(&s, &tip, x.m, x.k as i64).unwrap();
                worst = worst.max((x.ratio - y).abs() / y);
                count += 1;
            }
        }
    }
    outcome(worst < 1e-8, format!("10 maps with K = 2, {count} windows, max relative difference {worst:.2e}"))
}

fn pl_quasisymmetry() -> Outcome {
    let depth = 10;
    let s = shear_from_homeo(&BuiltinHomeo::PiecewiseLinear(2.0), depth).unwrap();
    let tips: Vec<ExtendedRational> = Tessellation::shared(depth).vertices_up_to(depth).cloned().collect();
    let q = qs_bound(&s, &tips, WindowSpec::WithinDepth).unwrap();
    let d = teich_proximity(&s, &ShearMap::zero(depth), &tips, WindowSpec::WithinDepth).unwrap();
    outcome(
        q.m_hat <= 2.0 + 1e-9 && d == q.m_hat,
        format!("{} fans at depth 10: M_hat = {:.17}, proximity to identity = {d:.17}", q.fans.len(), q.m_hat),
    )
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_farey-shear");
    let path = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let run = |args: &[&str]| {
        let out = Command::new(bin).args(args).output().unwrap();
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    };
    let pl = path("pl.json");
    run(&["shear-from-map", "--family", "piecewise_linear", "--params", "2", "--depth", "6", "--out", &pl]);
    let lam = path("lambda.json");
    std::fs::write(&lam, r#"{"default": 1.0, "depth": 4, "edges": [{"key": "0/1|1/0", "lambda": 2.0}, {"key": "1/2|1/1", "lambda": 0.75}]}"#)
        .unwrap();
    let commands: Vec<Vec<String>> = vec![
        vec!["tessellate", "--depth", "5"],
        vec!["shear-from-map", "--family", "power", "--params", "1.5", "--depth", "5"],
        vec!["char-map", &pl],
        vec!["qs-check", &pl, "--window-m=-4:4", "--window-k", "3"],
        vec!["qs-check", &pl, "--format", "json"],
        vec!["sym-check", &pl],
        vec!["homeo-check", &pl, "--fan", "1/0", "--terms", "5"],
        vec!["distance", &pl, &pl],
        vec!["lambda", "to-shear", &lam],
        vec!["lambda", "check-e", &lam],
        vec!["lambda", "series-d", &lam, "--chain", "0/1|1/0,0/1|1/1,1/2|1/1,1/2|2/3"],
        vec!["lambda", "develop", &lam],
        vec!["render", &pl, "--depth", "4"],
        vec!["render", &lam, "--lambda", "--model", "half-plane-clip"],
    ]
    .into_iter()
    .map(|c| c.into_iter().map(String::from).collect())
    .collect();
    let mut differing = Vec::new();
    for (i, cmd) in commands.iter().enumerate() {
        let outs: Vec<Vec<u8>> = (0..2)
            .map(|r| {
                let file = path(&format!("out{i}_{r}"));
                let mut args: Vec<&str> = cmd.iter().map(String::as_str).collect();
                args.extend(["--out", &file]);
                run(&args);
                std::fs::read(&file).unwrap()
            })
            .collect();
        if outs[0] != outs[1] || outs[0].is_empty() {
            differing.push(cmd.join(" "));
        }
    }
    outcome(differing.is_empty(), format!("{} commands run twice, differing: {differing:?}", commands.len()))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("round-trip identity", round_trip),
        ("Möbius invariance", moebius_invariance),
        ("Farey zero law", farey_zero_law),
        ("closed-form fan ratio", fan_ratio_closed_form),
        ("series oracle", series_oracle),
        ("non-homeomorphism detection", non_homeomorphism),
        ("horocyclic formula", horocyclic_formula),
        ("Ford decoration", ford_decoration),
        ("lambda/shear fan-ratio bridge", lambda_shear_bridge),
        ("PL quasisymmetry", pl_quasisymmetry),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        println!("[{}] {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
