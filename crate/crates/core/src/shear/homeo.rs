use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::map::ShearMap;
use crate::error::{Error, Result};
use crate::farey::{ExtendedRational, Tessellation};
use num_traits::{Signed, ToPrimitive};

use crate::geometry::{ExtReal, MoebiusMap};

/// A map from Farey vertices to the extended real line.
pub trait VertexMap {
    fn eval(&self, x: &ExtendedRational) -> Result<ExtReal>;

    /// `|h(x) - h(y)|`, or `None` when one image is infinite. Overridden by
    /// maps that can form the difference without subtracting rounded images.
    fn image_gap(&self, x: &ExtendedRational, y: &ExtendedRational) -> Result<Option<f64>> {
        naive_gap(self, x, y)
    }

    /// Whether the map fixes `0`, `1` and `∞`.
    fn fixes_base(&self) -> bool {
        [ExtendedRational::zero(), ExtendedRational::one(), ExtendedRational::Infinity]
            .iter()
            .all(|v| self.eval(v).is_ok_and(|y| y.approx_eq(v.to_ext_real(), 1e-12)))
    }
}

impl<F> VertexMap for F
where
    F: Fn(&ExtendedRational) -> ExtReal,
{
    fn eval(&self, x: &ExtendedRational) -> Result<ExtReal> {
        Ok(self(x))
    }
}

fn naive_gap<H: VertexMap + ?Sized>(h: &H, x: &ExtendedRational, y: &ExtendedRational) -> Result<Option<f64>> {
    Ok(match (h.eval(x)?, h.eval(y)?) {
        (ExtReal::Finite(a), ExtReal::Finite(b)) => Some((a - b).abs()),
        _ => None,
    })
}

/// A vertex map followed by a Möbius map.
#[derive(Clone, Debug)]
pub struct PostComposed<H> {
    pub outer: MoebiusMap,
    pub inner: H,
}

impl<H: VertexMap> VertexMap for PostComposed<H> {
    fn eval(&self, x: &ExtendedRational) -> Result<ExtReal> {
        Ok(self.outer.apply(self.inner.eval(x)?))
    }

    fn image_gap(&self, x: &ExtendedRational, y: &ExtendedRational) -> Result<Option<f64>> {
        let (hx, hy) = (self.inner.eval(x)?, self.inner.eval(y)?);
        let gap = match (hx, hy) {
            (ExtReal::Finite(_), ExtReal::Finite(_)) => self.inner.image_gap(x, y)?,
            _ => None,
        };
        Ok(moebius_gap(&self.outer, hx, hy, gap))
    }
}

/// `|m(x) - m(y)| = det |x - y| / |(cx + d)(cy + d)|` given `gap = |x - y|`
/// (`None` when `x` or `y` is infinite).
fn moebius_gap(m: &MoebiusMap, x: ExtReal, y: ExtReal, gap: Option<f64>) -> Option<f64> {
    let den = |x: f64| (m.c * x + m.d).abs();
    let v = match (x, y, gap) {
        (ExtReal::Finite(x), ExtReal::Finite(y), Some(g)) => m.det() * g / (den(x) * den(y)),
        (ExtReal::Infinity, ExtReal::Finite(y), _) | (ExtReal::Finite(y), ExtReal::Infinity, _) => {
            m.det() / (m.c.abs() * den(y))
        }
        (ExtReal::Infinity, ExtReal::Infinity, _) if m.c != 0.0 => 0.0,
        _ => return None,
    };
    v.is_finite().then_some(v)
}

/// `|x - y|` of two finite rationals, rounded once.
fn exact_gap(x: &ExtendedRational, y: &ExtendedRational) -> Option<f64> {
    match (x.as_rational(), y.as_rational()) {
        (Some(a), Some(b)) => (a - b).abs().to_f64(),
        _ => None,
    }
}

/// The built-in families of circle homeomorphisms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BuiltinHomeo {
    Moebius(MoebiusMap),
    /// `x` on `[0, ∞]`, `kx` on the negative axis.
    PiecewiseLinear(f64),
    /// `sign(x) |x|^α`.
    Power(f64),
    /// Characteristic map of the shear map that is `c` on every edge of the
    /// fan at infinity and zero elsewhere.
    FanEarthquake(f64),
}

impl BuiltinHomeo {
    /// Builds a family member from its name and parameter list.
    pub fn new(family: &str, params: &[f64]) -> Result<Self> {
        let arity = |n: usize| {
            if params.len() == n {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "{family} takes {n} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        match family {
            "moebius" => {
                arity(4)?;
                let m = MoebiusMap::new(params[0], params[1], params[2], params[3])
                    .map_err(|_| Error::NonMonotone("moebius needs ad - bc > 0".into()))?;
                Ok(BuiltinHomeo::Moebius(m))
            }
            "piecewise_linear" => {
                arity(1)?;
                if !(params[0] > 0.0) {
                    return Err(Error::NonMonotone("piecewise_linear needs k > 0".into()));
                }
                Ok(BuiltinHomeo::PiecewiseLinear(params[0]))
            }
            "power" => {
                arity(1)?;
                if !(params[0] > 0.0) {
                    return Err(Error::NonMonotone("power needs alpha > 0".into()));
                }
                Ok(BuiltinHomeo::Power(params[0]))
            }
            "fan_earthquake" => {
                arity(1)?;
                if !params[0].is_finite() {
                    return Err(Error::InvalidParameter("fan_earthquake needs finite c".into()));
                }
                Ok(BuiltinHomeo::FanEarthquake(params[0]))
            }
            _ => Err(Error::InvalidParameter(format!("unknown family `{family}`"))),
        }
    }

    fn eval_real(&self, x: ExtReal) -> ExtReal {
        use ExtReal::*;
        match (*self, x) {
            (BuiltinHomeo::Moebius(m), _) => m.apply(x),
            (_, Infinity) => Infinity,
            (BuiltinHomeo::PiecewiseLinear(k), Finite(x)) => Finite(if x < 0.0 { k * x } else { x }),
            (BuiltinHomeo::Power(a), Finite(x)) => Finite(x.signum() * x.abs().powf(a)),
            (BuiltinHomeo::FanEarthquake(c), Finite(x)) => Finite(fan_earthquake(c, x)),
        }
    }
}

/// Piecewise affine with `h(0) = 0` and slope `e^{cn}` on `[n, n + 1]`.
fn fan_earthquake(c: f64, x: f64) -> f64 {
    let n = x.floor();
    // h(n) = sum_{j=0}^{n-1} e^{cj} for n ≥ 0, minus the mirrored sum below 0.
    let partial = |n: f64| -> f64 {
        if c == 0.0 {
            return n;
        }
        let r = c.exp();
        (r.powf(n) - 1.0) / (r - 1.0)
    };
    partial(n) + (x - n) * (c * n).exp()
}

impl VertexMap for BuiltinHomeo {
    fn eval(&self, x: &ExtendedRational) -> Result<ExtReal> {
        Ok(self.eval_real(x.to_ext_real()))
    }

    fn image_gap(&self, x: &ExtendedRational, y: &ExtendedRational) -> Result<Option<f64>> {
        match *self {
            BuiltinHomeo::Moebius(m) => Ok(moebius_gap(&m, x.to_ext_real(), y.to_ext_real(), exact_gap(x, y))),
            BuiltinHomeo::PiecewiseLinear(k) => {
                let zero = ExtendedRational::zero();
                let neg = |v: &ExtendedRational| v.to_ext_real().finite().is_some_and(|v| v < 0.0);
                let to_zero = |v: &ExtendedRational| exact_gap(v, &zero).expect("finite");
                Ok(exact_gap(x, y).map(|g| match (neg(x), neg(y)) {
                    (true, true) => k * g,
                    (false, false) => g,
                    (true, false) => k * to_zero(x) + to_zero(y),
                    (false, true) => to_zero(x) + k * to_zero(y),
                }))
            }
            _ => naive_gap(self, x, y),
        }
    }
}

impl fmt::Display for BuiltinHomeo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuiltinHomeo::Moebius(m) => write!(f, "moebius({},{},{},{})", m.a, m.b, m.c, m.d),
            BuiltinHomeo::PiecewiseLinear(k) => write!(f, "piecewise_linear({k})"),
            BuiltinHomeo::Power(a) => write!(f, "power({a})"),
            BuiltinHomeo::FanEarthquake(c) => write!(f, "fan_earthquake({c})"),
        }
    }
}

impl FromStr for BuiltinHomeo {
    type Err = Error;

    /// Parses `family(p1,p2,...)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidParameter(format!("cannot parse map `{s}`"));
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let params = args
            .split(',')
            .filter(|a| !a.trim().is_empty())
            .map(|a| a.trim().parse::<f64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        BuiltinHomeo::new(name.trim(), &params)
    }
}

/// Evaluates `h` on every vertex of the tessellation and checks that the
/// values are distinct and in cyclic order.
fn checked_images(
    h: &dyn VertexMap,
    tess: &Tessellation,
) -> Result<HashMap<ExtendedRational, ExtReal>> {
    let mut verts: Vec<&ExtendedRational> = tess.vertices().iter().map(|(v, _)| v).collect();
    verts.sort_by(|a, b| a.canonical_cmp(b));
    let mut images = Vec::with_capacity(verts.len());
    for v in &verts {
        images.push(h.eval(v)?);
    }
    let key = |y: ExtReal| y.finite().unwrap_or(f64::INFINITY);
    let n = images.len();
    let mut descents = 0;
    for i in 0..n {
        let (y0, y1) = (images[i], images[(i + 1) % n]);
        if y0.approx_eq(y1, 1e-12) {
            return Err(Error::Degenerate(format!(
                "images of {} and {} coincide within 1e-12",
                verts[i],
                verts[(i + 1) % n]
            )));
        }
        if key(y1) < key(y0) {
            descents += 1;
        }
    }
    if n > 2 && descents != 1 {
        return Err(Error::NonMonotone(format!(
            "vertex images wind {descents} times around the circle"
        )));
    }
    Ok(verts.into_iter().cloned().zip(images).collect())
}

/// Whether `(x, y, z)` is in increasing cyclic order on the extended line.
fn positively_oriented(x: &ExtendedRational, y: &ExtendedRational, z: &ExtendedRational) -> bool {
    let lt = |a: &ExtendedRational, b: &ExtendedRational| a.canonical_cmp(b).is_lt();
    [lt(x, y), lt(y, z), lt(z, x)].iter().filter(|&&b| b).count() == 2
}

/// The shear map of `h`: on each edge of generation at most `depth`, the
/// shear of the images of its two flanking triangles.
///
/// With the shared side `(u, w)` ordered so that `(u, w, b)` is positive and
/// `d` across it, the shear is `ln |h(w)-h(b)| |h(d)-h(u)| / |h(b)-h(u)| |h(d)-h(w)|`,
/// factors with an infinite image omitted. The gaps come from
/// [`VertexMap::image_gap`].
pub fn shear_from_homeo(h: &dyn VertexMap, depth: u32) -> Result<ShearMap> {
    let tess = Tessellation::shared(depth);
    checked_images(h, &tess)?;
    let mut s = ShearMap::zero(depth);
    for (e, _) in tess.edges() {
        let (b, d) = e.flanking_vertices();
        let (u, w) = if positively_oriented(e.a(), e.b(), &b) { (e.a(), e.b()) } else { (e.b(), e.a()) };
        let gap = |x: &ExtendedRational, y: &ExtendedRational| -> Result<f64> {
            match h.image_gap(x, y)? {
                Some(g) if g > 0.0 => Ok(g),
                Some(_) => Err(Error::Degenerate(format!("images of {x} and {y} coincide"))),
                None => Ok(1.0),
            }
        };
        let ratio = gap(w, &b)? * gap(&d, u)? / (gap(&b, u)? * gap(&d, w)?);
        if !(ratio > 0.0 && ratio.is_finite()) {
            return Err(Error::Degenerate(format!("shear on {e} is not finite")));
        }
        s.insert_within_depth(e.clone(), ratio.ln());
    }
    Ok(s)
}
