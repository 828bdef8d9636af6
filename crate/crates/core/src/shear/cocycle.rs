use std::collections::HashMap;
use std::sync::Arc;

use super::homeo::VertexMap;
use super::map::ShearMap;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::farey::{
    birth_triangle, ExtendedRational, FareyEdge, IntegerMoebius, Tessellation, Triangle,
    TriangleAddress,
};
use crate::geometry::{ExtReal, MoebiusMap};

/// Value of the cocycle on one triangle. `truncated` is set when the dual
/// path crosses an edge beyond the depth of the shear map, whose default
/// value was used.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cocycle {
    pub map: MoebiusMap,
    pub truncated: bool,
}

/// The translation factor for crossing `entry` out of `parent`, with the
/// axis oriented so that `parent` lies on its left.
#[cfg(test)]
fn crossing(s: &ShearMap, parent: &Triangle, entry: &FareyEdge) -> Result<MoebiusMap> {
    let (from, to) = axis(parent, entry);
    crate::geometry::hyperbolic_translation(from.to_ext_real(), to.to_ext_real(), s.get(entry))
}

fn axis<'a>(parent: &'a Triangle, entry: &FareyEdge) -> (&'a ExtendedRational, &'a ExtendedRational) {
    let v = parent.opposite(entry).expect("entry is a side of parent");
    let [x, _, y] = parent.rotation_centered_at(v);
    (y, x)
}

/// The element of PSL(2, Z) with `γ(0) = from` and `γ(∞) = to`.
fn frame(from: &ExtendedRational, to: &ExtendedRational) -> IntegerMoebius {
    let (p, q) = (from.numer(), from.denom());
    let (r, t) = (to.numer(), to.denom());
    IntegerMoebius::new(r.clone(), p.clone(), t.clone(), q.clone())
        .or_else(|| IntegerMoebius::new(-r, p, -t, q))
        .expect("Farey neighbors span a unimodular frame")
}

/// Running product along a dual path.
///
/// With `γ_i` the integer frame of the i-th crossed edge, the cocycle is
/// `γ_1 D_1 U_1 D_2 ... U_{n-1} D_n γ_n^{-1}` where `D_i` is diagonal and
/// `U_i = γ_i^{-1} γ_{i+1}` is one of `(1 1; 0 1)`, `(1 0; 1 1)`. The middle
/// product has nonnegative entries, so it is computed without cancellation.
#[derive(Clone, Debug)]
struct PathProduct {
    first: IntegerMoebius,
    last: IntegerMoebius,
    middle: [f64; 4],
}

impl PathProduct {
    fn start(from: &ExtendedRational, to: &ExtendedRational, t: f64) -> Self {
        let g = frame(from, to);
        PathProduct { first: g.clone(), last: g, middle: diag(t) }
    }

    fn step(&self, from: &ExtendedRational, to: &ExtendedRational, t: f64) -> Self {
        let g = frame(from, to);
        let u = self.last.inverse().compose(&g);
        let f = |x: &BigInt| x.to_f64().expect("small entries");
        let u = [f(&u.a), f(&u.b), f(&u.c), f(&u.d)];
        PathProduct {
            first: self.first.clone(),
            last: g,
            middle: mul(&mul(&self.middle, &u), &diag(t)),
        }
    }

    /// Image of a vertex of the last triangle on the path.
    fn apply(&self, x: &ExtendedRational) -> ExtReal {
        let [a, b, c, d] = self.middle;
        let w = match self.last.inverse().apply(x) {
            ExtendedRational::Infinity => a / c,
            y if y.is_integer() && y.numer().is_zero() => b / d,
            y => {
                let y = y.to_ext_real().finite().expect("finite");
                (a * y + b) / (c * y + d)
            }
        };
        self.first.to_real().apply(ExtReal::Finite(w))
    }

    fn map(&self) -> MoebiusMap {
        let [a, b, c, d] = self.middle;
        let m = MoebiusMap::from_entries_unchecked(a, b, c, d).normalized();
        self.first.to_real().compose(&m).compose(&self.last.inverse().to_real())
    }
}

fn diag(t: f64) -> [f64; 4] {
    [(t / 2.0).exp(), 0.0, 0.0, (-t / 2.0).exp()]
}

fn mul(x: &[f64; 4], y: &[f64; 4]) -> [f64; 4] {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ]
}

fn path_product(s: &ShearMap, t: &Triangle) -> (Option<PathProduct>, bool) {
    let mut steps = Vec::new();
    let mut cur = t.clone();
    while let Some((e, p)) = cur.parent() {
        steps.push((e, p.clone()));
        cur = p;
    }
    let mut prod: Option<PathProduct> = None;
    let mut truncated = false;
    for (e, p) in steps.iter().rev() {
        truncated |= !s.covers(e);
        let (from, to) = axis(p, e);
        let v = s.get(e);
        prod = Some(match &prod {
            None => PathProduct::start(from, to, v),
            Some(pp) => pp.step(from, to, v),
        });
    }
    (prod, truncated)
}

/// The piecewise Möbius cocycle on triangle `t`: the product of the
/// translations along the crossed edges, nearest to the base outermost.
pub fn cocycle_at(s: &ShearMap, t: &Triangle) -> Result<Cocycle> {
    let (prod, truncated) = path_product(s, t);
    let map = prod.map(|p| p.map()).unwrap_or_else(MoebiusMap::identity);
    Ok(Cocycle { map, truncated })
}

pub fn cocycle(s: &ShearMap, t: &TriangleAddress) -> Result<Cocycle> {
    cocycle_at(s, &t.triangle())
}

/// The characteristic map at one vertex, computed on its birth triangle.
/// Vertices that would need shears beyond the depth of `s` are rejected.
pub fn char_map_eval(s: &ShearMap, x: &ExtendedRational) -> Result<ExtReal> {
    let (prod, truncated) = path_product(s, &birth_triangle(x));
    if truncated {
        return Err(Error::BeyondDepth { vertex: x.to_string(), depth: s.depth() });
    }
    Ok(prod.map_or_else(|| x.to_ext_real(), |p| p.apply(x)))
}

/// The characteristic map of a shear map, tabulated on every vertex of
/// generation at most `depth + 1` by one pass over the dual tree.
#[derive(Clone, Debug)]
pub struct CharacteristicMap {
    shear: ShearMap,
    tess: Arc<Tessellation>,
    triangle_maps: Vec<MoebiusMap>,
    values: HashMap<ExtendedRational, ExtReal>,
}

impl CharacteristicMap {
    pub fn new(s: &ShearMap) -> Result<Self> {
        let tess = Tessellation::shared(s.depth());
        let n = tess.triangles().len();
        let mut products: Vec<Option<PathProduct>> = Vec::with_capacity(n);
        let mut triangle_maps = Vec::with_capacity(n);
        let mut values = HashMap::new();
        for v in Triangle::base().vertices() {
            values.insert(v.clone(), v.to_ext_real());
        }
        for rec in tess.triangles() {
            let prod = match (rec.parent, &rec.entry) {
                (Some(pi), Some(e)) => {
                    let (from, to) = axis(&tess.triangles()[pi].triangle, e);
                    let v = s.get(e);
                    let prod = match &products[pi] {
                        None => PathProduct::start(from, to, v),
                        Some(pp) => pp.step(from, to, v),
                    };
                    let newest = rec.triangle.opposite(e).expect("entry is a side");
                    values.insert(newest.clone(), prod.apply(newest));
                    Some(prod)
                }
                _ => None,
            };
            triangle_maps.push(prod.as_ref().map_or_else(MoebiusMap::identity, |p| p.map()));
            products.push(prod);
        }
        Ok(CharacteristicMap { shear: s.clone(), tess, triangle_maps, values })
    }

    pub fn shear(&self) -> &ShearMap {
        &self.shear
    }

    pub fn tessellation(&self) -> &Tessellation {
        &self.tess
    }

    /// Cocycle values, aligned with `tessellation().triangles()`.
    pub fn triangle_maps(&self) -> &[MoebiusMap] {
        &self.triangle_maps
    }

    /// All tabulated vertex values in (generation, canonical) order.
    pub fn table(&self) -> Vec<(ExtendedRational, u32, ExtReal)> {
        self.tess
            .vertices()
            .iter()
            .map(|(v, g)| (v.clone(), *g, self.values[v]))
            .collect()
    }
}

impl VertexMap for CharacteristicMap {
    fn eval(&self, x: &ExtendedRational) -> Result<ExtReal> {
        self.values.get(x).copied().ok_or_else(|| Error::BeyondDepth {
            vertex: x.to_string(),
            depth: self.shear.depth(),
        })
    }
}
