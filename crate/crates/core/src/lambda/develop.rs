use std::collections::HashMap;

use num_traits::ToPrimitive;
use super::dd::Dd;

use super::map::LambdaMap;
use crate::error::{Error, Result};
use crate::farey::{ExtendedRational, FareyEdge, Tessellation};
use crate::geometry::{orientation, ExtReal, Horocycle, Orientation};
use crate::shear::{shear_from_homeo, ShearMap, VertexMap};

/// A boundary point carried in double-double precision; `None` is infinity.
type Point = Option<Dd>;

fn dd(x: f64) -> Dd {
    Dd::new(x)
}

fn round(x: Dd) -> f64 {
    x.to_f64()
}

fn to_ext(p: Point) -> ExtReal {
    p.map_or(ExtReal::Infinity, |x| ExtReal::Finite(round(x)))
}

/// Vertex positions and horocycles realizing a lambda map.
///
/// Positions and sizes are kept in double-double precision: neighboring
/// vertices at depth 10 are ~1e-4 apart, so positions rounded to `f64`
/// already perturb the measured lambda lengths by ~1e-12.
#[derive(Clone, Debug)]
pub struct DecoratedRealization {
    depth: u32,
    positions: HashMap<ExtendedRational, (Point, Dd)>,
    defaulted: Vec<FareyEdge>,
}

impl DecoratedRealization {
    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn position(&self, v: &ExtendedRational) -> Option<ExtReal> {
        self.positions.get(v).map(|(p, _)| to_ext(*p))
    }

    /// The decorating horocycle at `v`, rounded to `f64`.
    pub fn horocycle(&self, v: &ExtendedRational) -> Option<Horocycle> {
        self.positions.get(v).map(|(p, size)| Horocycle { center: to_ext(*p), size: round(*size) })
    }

    /// Edges that were developed with the default lambda length because the
    /// map has no entry for them.
    pub fn defaulted(&self) -> &[FareyEdge] {
        &self.defaulted
    }

    /// `e^{-2δ}` of the two realized horocycles at the ends of `e`, evaluated
    /// as `(D_a D_b)^2 / (x_a - x_b)^4`, or `(D / H)^2` against the
    /// horocycle of height `H` at infinity.
    pub fn measured_lambda(&self, e: &FareyEdge) -> Result<f64> {
        let get = |v: &ExtendedRational| {
            self.positions.get(v).ok_or_else(|| Error::BeyondDepth { vertex: v.to_string(), depth: self.depth })
        };
        let ((pa, da), (pb, db)) = (get(e.a())?, get(e.b())?);
        let value = match (pa, pb) {
            (Some(xa), Some(xb)) => {
                let gap = *xa - *xb;
                let r = *da * *db / (gap * gap);
                r * r
            }
            (Some(_), None) => (*da / *db).sqr(),
            (None, Some(_)) => (*db / *da).sqr(),
            (None, None) => return Err(Error::Degenerate("horocycles have the same center".into())),
        };
        Ok(round(value))
    }

    /// Rows `(vertex, position, horocycle size)` in canonical vertex order.
    pub fn table(&self) -> Vec<(ExtendedRational, ExtReal, f64)> {
        let mut rows: Vec<_> =
            self.positions.iter().map(|(v, (p, d))| (v.clone(), to_ext(*p), round(*d))).collect();
        rows.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        rows
    }

    /// The same positions with every horocycle's size multiplied by
    /// `factor(v)` (a change of decoration).
    pub fn rescaled(&self, mut factor: impl FnMut(&ExtendedRational) -> f64) -> Self {
        let mut out = self.clone();
        let mut keys: Vec<ExtendedRational> = out.positions.keys().cloned().collect();
        keys.sort_by(|a, b| a.canonical_cmp(b));
        for v in keys {
            let f = factor(&v);
            out.positions.get_mut(&v).expect("key").1 *= dd(f);
        }
        out
    }

    /// The lambda lengths of this decoration on the edges of generation at
    /// most `depth`.
    pub fn lambdas(&self) -> Result<LambdaMap> {
        let mut l = LambdaMap::ford(self.depth);
        for (e, _) in Tessellation::shared(self.depth).edges() {
            l.insert(e.clone(), self.measured_lambda(e)?)?;
        }
        Ok(l)
    }
}

impl VertexMap for DecoratedRealization {
    fn eval(&self, x: &ExtendedRational) -> Result<ExtReal> {
        self.position(x).ok_or_else(|| Error::BeyondDepth { vertex: x.to_string(), depth: self.depth })
    }
}

/// The chart `z ↦ k (z - u) / (z - w)` sending `u ↦ 0`, `w ↦ ∞` and
/// `old ↦ -1`, with the limiting forms when one of the points is infinite.
struct Chart {
    u: Point,
    w: Point,
    k: Dd,
}

impl Chart {
    fn new(old: Point, u: Point, w: Point) -> Self {
        let k = match (old, u, w) {
            (None, _, _) => dd(-1.0),
            (Some(o), Some(u), Some(w)) => -(o - w) / (o - u),
            (Some(o), Some(u), None) => -(o - u).recip(),
            (Some(o), None, Some(w)) => -(o - w),
            _ => unreachable!("distinct vertices"),
        };
        Chart { u, w, k }
    }

    /// Size of the image of the horocycle at `u` (a diameter at 0).
    fn size_at_u(&self, size: Dd) -> Dd {
        match (self.u, self.w) {
            (Some(u), Some(w)) => size * (self.k / (u - w)).abs(),
            (Some(_), None) => size * self.k.abs(),
            (None, _) => self.k.abs() / size,
        }
    }

    /// Size of the image of the horocycle at `w` (a height at ∞).
    fn size_at_w(&self, size: Dd) -> Dd {
        match (self.u, self.w) {
            (Some(u), Some(w)) => (self.k * (w - u)).abs() / size,
            (Some(_), None) => size * self.k.abs(),
            (None, Some(_)) => self.k.abs() / size,
            _ => unreachable!("distinct vertices"),
        }
    }

    /// Preimage of the chart point `x > 0` and the preimage diameter of a
    /// horocycle of diameter `d` there.
    fn pull_back(&self, x: Dd, d: Dd) -> (Dd, Dd) {
        let k = self.k;
        match (self.u, self.w) {
            (Some(u), Some(w)) => {
                let z = (x * w - k * u) / (x - k);
                let deriv = k * (u - w) / ((z - w) * (z - w));
                (z, d / deriv.abs())
            }
            (Some(u), None) => (u + x / k, d / k.abs()),
            (None, Some(w)) => {
                let z = w + k / x;
                (z, d * (z - w) * (z - w) / k.abs())
            }
            _ => unreachable!("distinct vertices"),
        }
    }
}

/// Develops `lambda` over the tessellation of depth `depth`: the base
/// triangle sits at `(0, 1, ∞)` with horocycles realizing its three lambda
/// lengths, and each further triangle is placed across its entry edge.
pub fn develop(lambda: &LambdaMap, depth: u32) -> Result<DecoratedRealization> {
    let tess = Tessellation::shared(depth);
    let mut defaulted = Vec::new();
    let mut lam = |e: FareyEdge| {
        let v = lambda.get(&e);
        if !lambda.covers(&e) {
            defaulted.push(e);
        }
        dd(v)
    };
    let zero = ExtendedRational::zero();
    let one = ExtendedRational::one();
    let inf = ExtendedRational::Infinity;
    let l01 = lam(FareyEdge::new(zero.clone(), one.clone())?);
    let l0i = lam(FareyEdge::new(zero.clone(), inf.clone())?);
    let l1i = lam(FareyEdge::new(one.clone(), inf.clone())?);
    let h = (l01 / (l0i * l1i)).sqrt().sqrt();
    let mut positions: HashMap<ExtendedRational, (Point, Dd)> = HashMap::new();
    positions.insert(zero, (Some(dd(0.0)), h * l0i.sqrt()));
    positions.insert(one, (Some(dd(1.0)), h * l1i.sqrt()));
    positions.insert(inf, (None, h));

    let records = tess.triangles();
    for rec in &records[1..] {
        let entry = rec.entry.as_ref().expect("non-base triangles have an entry edge");
        let parent = &records[rec.parent.expect("non-base triangles have a parent")].triangle;
        let old = parent.opposite(entry).expect("side");
        let v = rec.triangle.opposite(entry).expect("side");
        let (mut u, mut w) = (entry.a(), entry.b());
        if orientation(old.to_ext_real(), u.to_ext_real(), w.to_ext_real()) != Orientation::Positive {
            std::mem::swap(&mut u, &mut w);
        }
        let ((pu, su), (pw, sw)) = (positions[u], positions[w]);
        let chart = Chart::new(positions[old].0, pu, pw);
        let d = chart.size_at_u(su);
        let hw = chart.size_at_w(sw);
        let dv = hw * lam(FareyEdge::new(v.clone(), w.clone())?).sqrt();
        let x = (d * dv).sqrt() / lam(FareyEdge::new(u.clone(), v.clone())?).sqrt().sqrt();
        let (z, size) = chart.pull_back(x, dv);
        let near = |p: Point| p.is_some_and(|p| round((p - z).abs()) <= 1e-12 * round(p.abs()).max(1.0));
        let size_ok = round(size) > 0.0 && round(size).is_finite();
        if !round(z).is_finite() || !size_ok || near(pu) || near(pw) {
            return Err(Error::Degenerate(format!(
                "placement of {v} collapses onto a neighbor (triangle address {})",
                rec.triangle.address()
            )));
        }
        positions.insert(v.clone(), (Some(z), size));
    }
    defaulted.sort();
    defaulted.dedup();
    Ok(DecoratedRealization { depth, positions, defaulted })
}

/// The realization of the Ford circles over the tessellation of `depth`.
pub fn ford_decoration(depth: u32) -> DecoratedRealization {
    let tess = Tessellation::shared(depth);
    let mut positions = HashMap::new();
    for (v, _) in tess.vertices() {
        let q = Dd::new(v.denom().to_f64().unwrap_or(f64::INFINITY));
        let entry = match v.as_rational() {
            None => (None, dd(1.0)),
            Some(r) => {
                let p = Dd::new(r.numer().to_f64().unwrap_or(f64::NAN));
                (Some(p / q), (q * q).recip())
            }
        };
        positions.insert(v.clone(), entry);
    }
    DecoratedRealization { depth, positions, defaulted: Vec::new() }
}

/// The shear map of the characteristic map of `lambda`.
pub fn shear_from_lambda(lambda: &LambdaMap, depth: u32) -> Result<ShearMap> {
    shear_from_homeo(&develop(lambda, depth)?, depth)
}

/// Shear of `e` from the four lambda lengths of its quadrilateral:
/// `¼ ln(λ(d,w) λ(b,u) / (λ(u,d) λ(w,b)))`, with `b` the mediant vertex, `d`
/// the other, and `(u, w, b)` positively oriented.
pub fn shear_closed_form(lambda: &LambdaMap, e: &FareyEdge) -> Result<f64> {
    let (b, d) = e.flanking_vertices();
    let (mut u, mut w) = (e.a().clone(), e.b().clone());
    if orientation(u.to_ext_real(), w.to_ext_real(), b.to_ext_real()) != Orientation::Positive {
        std::mem::swap(&mut u, &mut w);
    }
    let l = |x: &ExtendedRational, y: &ExtendedRational| -> Result<f64> {
        Ok(lambda.get(&FareyEdge::new(x.clone(), y.clone())?))
    };
    Ok(0.25 * ((l(&d, &w)? * l(&b, &u)?) / (l(&u, &d)? * l(&w, &b)?)).ln())
}
